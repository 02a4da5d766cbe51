#include "twopar/certify.hpp"
#include "twopar/configuration.hpp"
#include "twopar/curves.hpp"
#include "twopar/dynamics.hpp"
#include "twopar/errors.hpp"
#include "twopar/group.hpp"
#include "twopar/regions.hpp"
#include "twopar/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace twopar;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNoCertificate = 3;
constexpr int kExitConstruction = 4;

struct CommonOpts {
    std::string format = "text"; // text | json (csv/svg where applicable)
    std::string precision = "exact"; // exact-preferred | float-only
    std::string out;
    int max_depth = kCertifyDefaultDepth;
    int samples = kDefaultSamples;
    double tol = 1e-12;      // numeric target-matching tolerance
    double eps_par = kEpsParabolic; // floating parabolicity tolerance
    std::vector<std::string> targets; // label=value external targets
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw UsageError("cannot open output file " + out_path);
        f << text;
    }
}

ComplexValue parse_lambda_arg(const std::string& text, const CommonOpts& opt) {
    ParsedComplex p = parse_complex(text);
    if (p.had_decimal)
        std::cerr << "note: decimal/polar input '" << text << "' uses floating-point mode\n";
    if (opt.precision == "float" && p.value.is_exact())
        return ComplexValue::floating(p.value.cd());
    return p.value;
}

std::vector<ExternalTarget> parse_targets(const std::vector<std::string>& specs) {
    std::vector<ExternalTarget> out;
    for (const auto& s : specs) {
        auto eq = s.find('=');
        if (eq == std::string::npos)
            out.push_back({s, parse_complex(s).value});
        else
            out.push_back({s.substr(0, eq), parse_complex(s.substr(eq + 1)).value});
    }
    return out;
}

std::string region_text(const RegionReport& r) {
    std::ostringstream os;
    os << "lambda              " << r.lambda.str() << "\n";
    os << "jorgensen_interior  " << (r.jorgensen_interior ? "yes" : "no") << "\n";
    os << "classical_ts        " << to_string(r.classical_ts) << "\n";
    os << "nsdc                " << to_string(r.nsdc) << "\n";
    os << "ncf_member          " << (r.ncf_member ? to_string(*r.ncf_member) : "-") << "\n";
    os << "diamond_member      " << (r.diamond_member ? "yes" : "no") << "\n";
    os << "lox_par_generators  " << (r.lox_par_generators ? "yes" : "no") << "\n";
    os << "nth_classical       ";
    if (r.nth_classical) os << *r.nth_classical;
    else os << "- (" << to_string(r.nth_reason) << ")";
    os << "\n";
    os << "special_point       "
       << (r.special_boundary_point ? to_string(*r.special_boundary_point) : "-") << "\n";
    os << "annulus_index       ";
    if (r.annulus_index) os << *r.annulus_index;
    else os << "-";
    os << "\n";
    os << "discreteness        " << to_string(r.discreteness) << "\n";
    for (const auto& n : r.notes) os << "note: " << n << "\n";
    return os.str();
}

int cmd_classify(const std::string& lambda_text, const CommonOpts& opt) {
    ComplexValue lambda = parse_lambda_arg(lambda_text, opt);
    RegionReport r = classify(lambda);
    auto cert = certify(lambda, opt.max_depth, parse_targets(opt.targets), opt.tol);
    if (opt.format == "json") {
        auto j = to_json(r);
        j["certificate_hint"] = static_cast<bool>(cert);
        emit(j.dump(2), opt.out);
    } else {
        std::string text = region_text(r);
        text += std::string("certificate_hint   ") + (cert ? "yes" : "no") + "\n";
        emit(text, opt.out);
    }
    return kExitOk;
}

int cmd_certify(const std::string& lambda_text, const CommonOpts& opt) {
    ComplexValue lambda = parse_lambda_arg(lambda_text, opt);
    auto cert = certify(lambda, opt.max_depth, parse_targets(opt.targets), opt.tol);
    if (!cert) {
        emit(opt.format == "json" ? "{\"certificate\": null}" : "none", opt.out);
        return kExitNoCertificate;
    }
    if (opt.format == "json") {
        emit(to_json(*cert).dump(2), opt.out);
    } else {
        std::ostringstream os;
        os << "kind        " << to_string(cert->kind) << "\n";
        os << "depth       " << cert->depth << "\n";
        os << "target      " << to_string(cert->target_tag) << " = " << cert->target_value.str()
           << "\n";
        if (cert->catalog_entry) os << "catalog     " << cert->catalog_entry->id << "\n";
        os << "exactness   " << (cert->exact ? "exact" : "numeric") << "\n";
        os << "verified    " << (cert->verified ? "yes" : "no") << "\n";
        for (const auto& w : cert->witness_words) os << "witness     " << w << "\n";
        emit(os.str(), opt.out);
    }
    return kExitOk;
}

int cmd_orbit(const std::string& lambda_text, int steps, const std::string& program_text,
              const CommonOpts& opt) {
    ComplexValue z = parse_lambda_arg(lambda_text, opt);
    std::vector<ComplexValue> orbit{z};
    if (!program_text.empty()) {
        IterationProgram p = parse_program(program_text);
        // apply the program step by step, rightmost first
        for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it) {
            if (std::holds_alternative<StepV>(*it))
                z = vertical(z);
            else
                z = lateral(z, std::get<StepL>(*it).n);
            orbit.push_back(z);
        }
    }
    for (int i = 0; i < steps; ++i) {
        z = f_map(z);
        orbit.push_back(z);
    }
    if (opt.format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            nlohmann::ordered_json row;
            row["step"] = i;
            row["value"] = to_json(orbit[i]);
            if (!orbit[i].is_zero()) row["region"] = to_json(classify(orbit[i]));
            arr.push_back(row);
        }
        emit(arr.dump(2), opt.out);
    } else {
        std::ostringstream os;
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            os << i << "  " << orbit[i].str();
            if (!orbit[i].is_zero()) {
                RegionReport r = classify(orbit[i]);
                os << "  |z|=" << orbit[i].abs() << "  classical=" << to_string(r.classical_ts)
                   << (r.jorgensen_interior ? "  jorgensen" : "");
            }
            os << "\n";
        }
        emit(os.str(), opt.out);
    }
    return kExitOk;
}

int cmd_curves(const std::vector<std::string>& layer_names, int preimage_depth,
               const CommonOpts& opt) {
    if (layer_names.empty()) throw UsageError("no layers requested");
    std::vector<std::pair<std::string, CurveSet>> layers;
    CurveSet named = named_boundaries(opt.samples);
    auto pick = [&named](std::initializer_list<const char*> prefixes) {
        CurveSet out;
        for (const auto& c : named.curves)
            for (const char* p : prefixes)
                if (c.name.rfind(p, 0) == 0) out.curves.push_back(c);
        return out;
    };
    for (const auto& name : layer_names) {
        if (name == "jorgensen") layers.push_back({name, pick({"jorgensen"})});
        else if (name == "schottky") layers.push_back({name, pick({"schottky_parabola"})});
        else if (name == "nsdc") layers.push_back({name, pick({"nsdc_parabola"})});
        else if (name == "ncf") layers.push_back({name, pick({"ncf_"})});
        else if (name == "tess_circles") layers.push_back({name, pick({"C_{t_"})});
        else if (name == "d2_square") layers.push_back({name, pick({"d2_square"})});
        else if (name == "preimages") {
            for (int n = 0; n <= preimage_depth; ++n) {
                CurveSet cs;
                for (auto& c : boundary_nth(n, opt.samples)) cs.curves.push_back(std::move(c));
                layers.push_back({"preimages_" + std::to_string(n), std::move(cs)});
            }
        } else {
            throw UsageError("unknown layer '" + name + "'");
        }
    }
    if (opt.format == "svg") {
        emit(curves_to_svg(layers), opt.out);
    } else {
        CurveSet all;
        for (auto& [n, cs] : layers)
            for (auto& c : cs.curves) all.curves.push_back(std::move(c));
        if (opt.format == "csv")
            emit(curves_to_csv(all), opt.out);
        else
            emit(to_json(all).dump(2), opt.out);
    }
    return kExitOk;
}

int cmd_config(const std::string& case_key, const std::string& lambda_text,
               const std::string& q_text, const CommonOpts& opt) {
    auto kase = config_case_from_key(case_key);
    if (!kase) throw UsageError("unknown case '" + case_key + "'");
    ComplexValue input;
    if (*kase == ConfigCase::ncf_interior) {
        if (q_text.empty()) throw UsageError("ncf_interior requires --q");
        input = parse_lambda_arg(q_text, opt);
    } else {
        if (lambda_text.empty()) throw UsageError("this case requires --lambda");
        input = parse_lambda_arg(lambda_text, opt);
    }
    SchottkyConfiguration cfg = build_configuration(*kase, input);
    VerifyReport rep = verify_configuration(cfg);
    if (opt.format == "svg") {
        emit(configuration_to_svg(cfg), opt.out);
    } else {
        emit(to_json(cfg, rep).dump(2), opt.out);
    }
    return kExitOk;
}

int cmd_catalog(const std::string& family_key, const EnumRanges& ranges,
                const std::string& lookup_text, const CommonOpts& opt) {
    if (!lookup_text.empty()) {
        auto hit = catalog_lookup(parse_complex(lookup_text).value);
        if (!hit) {
            emit(opt.format == "json" ? "{\"match\": null}" : "no match", opt.out);
            return kExitNoCertificate;
        }
        nlohmann::ordered_json j;
        j["match"] = to_json(hit->primary);
        nlohmann::ordered_json also = nlohmann::ordered_json::array();
        for (const auto& e : hit->also) also.push_back(to_json(e));
        j["also_matches"] = also;
        emit(opt.format == "json" ? j.dump(2) : hit->primary.id, opt.out);
        return kExitOk;
    }
    auto fam = family_from_key(family_key);
    if (!fam) throw UsageError("unknown family '" + family_key + "'");
    auto entries = catalog_enumerate(*fam, ranges);
    if (opt.format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& e : entries) arr.push_back(to_json(e));
        emit(arr.dump(2), opt.out);
    } else {
        std::ostringstream os;
        for (const auto& e : entries) os << e.id << "  " << e.value.str() << "\n";
        os << entries.size() << " entries\n";
        emit(os.str(), opt.out);
    }
    return kExitOk;
}

int cmd_word(const std::string& lambda_text, const std::string& word, const CommonOpts& opt) {
    ComplexValue lambda = parse_lambda_arg(lambda_text, opt);
    MarkedGroup g = make_group(lambda);
    MoebiusMatrix m = evaluate_word(g, word);
    ElementClass cls = classify_element(m, opt.eps_par);
    if (opt.format == "json") {
        nlohmann::ordered_json j;
        j["schema_version"] = kSchemaVersion;
        j["lambda"] = to_json(lambda);
        j["word"] = word;
        j["matrix"] = {to_json(m.a), to_json(m.b), to_json(m.c), to_json(m.d)};
        j["trace"] = to_json(trace(m));
        j["class"] = to_string(cls);
        if (cls != ElementClass::identity) {
            nlohmann::ordered_json fps = nlohmann::ordered_json::array();
            for (const auto& p : fixed_points(m))
                fps.push_back(p.at_infinity ? nlohmann::ordered_json("infinity")
                                            : to_json(p.value));
            j["fixed_points"] = fps;
        }
        emit(j.dump(2), opt.out);
    } else {
        std::ostringstream os;
        os << "word    " << word << "\n";
        os << "matrix  [[" << m.a.str() << ", " << m.b.str() << "], [" << m.c.str() << ", "
           << m.d.str() << "]]\n";
        os << "trace   " << trace(m).str() << "\n";
        os << "class   " << to_string(cls) << "\n";
        if (cls != ElementClass::identity) {
            for (const auto& p : fixed_points(m))
                os << "fixes   " << (p.at_infinity ? std::string("infinity") : p.value.str())
                   << "\n";
        }
        emit(os.str(), opt.out);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-parabolic Moebius group toolkit"};
    app.set_config("--config");
    app.fallthrough();
    app.require_subcommand(1);

    CommonOpts opt;
    std::string lambda_text, q_text, program_text, case_key, family_key, lookup_text;
    int steps = 0, preimage_depth = 2;
    std::vector<std::string> layer_names;
    EnumRanges ranges;

    auto add_common = [&opt](CLI::App* cmd, std::vector<std::string> formats) {
        cmd->add_option("--format", opt.format)
            ->check(CLI::IsMember(formats))
            ->capture_default_str();
        cmd->add_option("--out", opt.out, "output file (stdout when omitted)");
        cmd->add_option("--precision", opt.precision,
                        "exact: keep rational input exact; float: demote to doubles")
            ->check(CLI::IsMember(std::vector<std::string>{"exact", "float"}))
            ->capture_default_str();
    };

    CLI::App* c_classify = app.add_subcommand("classify", "classify lambda against every region");
    c_classify->add_option("lambda", lambda_text)->required();
    c_classify->add_option("--depth", opt.max_depth, "scan depth for the certificate hint");
    c_classify->add_option("--target", opt.targets, "external target value label=lambda");
    add_common(c_classify, {"text", "json"});

    CLI::App* c_certify = app.add_subcommand("certify", "search for a dust/non-free certificate");
    c_certify->add_option("lambda", lambda_text)->required();
    c_certify->add_option("--depth", opt.max_depth)->capture_default_str();
    c_certify->add_option("--tol", opt.tol, "numeric target-matching tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    c_certify->add_option("--target", opt.targets, "external target value label=lambda");
    add_common(c_certify, {"text", "json"});

    CLI::App* c_orbit = app.add_subcommand("orbit", "iterate lambda under f and operator programs");
    c_orbit->add_option("lambda", lambda_text)->required();
    c_orbit->add_option("--steps", steps)->capture_default_str();
    c_orbit->add_option("--program", program_text, "operator program, e.g. \"V L2 V\"");
    add_common(c_orbit, {"text", "json"});

    CLI::App* c_curves = app.add_subcommand("curves", "emit boundary and preimage curves");
    c_curves->add_option("--layers", layer_names,
                         "jorgensen, schottky, nsdc, ncf, tess_circles, d2_square, preimages")
        ->required()
        ->delimiter(',');
    c_curves->add_option("--preimage-depth", preimage_depth)->capture_default_str();
    c_curves->add_option("--samples", opt.samples)
        ->check(CLI::Range(2, 1000000))
        ->capture_default_str();
    add_common(c_curves, {"json", "csv", "svg"});

    CLI::App* c_config = app.add_subcommand("config", "build and verify a Schottky configuration");
    c_config->add_option("--case", case_key,
                         "classical_interior | classical_boundary | ncf_boundary | ncf_interior")
        ->required();
    c_config->add_option("--lambda", lambda_text);
    c_config->add_option("--q", q_text, "free point q (ncf_interior; lambda = q/2)");
    add_common(c_config, {"json", "svg"});

    CLI::App* c_word = app.add_subcommand(
        "word", "evaluate a word over S,s,T,t (s = S^-1, t = T^-1) in the marked group");
    std::string word_text;
    c_word->add_option("lambda", lambda_text)->required();
    c_word->add_option("word", word_text, "e.g. TSt or sTStSTst")->required();
    c_word->add_option("--eps-par", opt.eps_par, "floating parabolicity tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_common(c_word, {"text", "json"});

    CLI::App* c_catalog = app.add_subcommand("catalog", "enumerate or look up non-free values");
    c_catalog->add_option("--family", family_key, "1..8 or name (B, pell, sin, ...)");
    c_catalog->add_option("--lookup", lookup_text, "value to look up across all families");
    c_catalog->add_option("--p-max", ranges.p_max)->capture_default_str();
    c_catalog->add_option("--q-max", ranges.q_max)->capture_default_str();
    c_catalog->add_option("--m-max", ranges.m_max)->capture_default_str();
    c_catalog->add_option("--pell-q-max", ranges.pell_q_max)->capture_default_str();
    c_catalog->add_option("--N", ranges.big_n, "square-free N list")->delimiter(',');
    add_common(c_catalog, {"text", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(c_classify)) return cmd_classify(lambda_text, opt);
        if (app.got_subcommand(c_certify)) return cmd_certify(lambda_text, opt);
        if (app.got_subcommand(c_orbit)) return cmd_orbit(lambda_text, steps, program_text, opt);
        if (app.got_subcommand(c_curves)) return cmd_curves(layer_names, preimage_depth, opt);
        if (app.got_subcommand(c_config)) return cmd_config(case_key, lambda_text, q_text, opt);
        if (app.got_subcommand(c_word)) return cmd_word(lambda_text, word_text, opt);
        if (app.got_subcommand(c_catalog)) return cmd_catalog(family_key, ranges, lookup_text, opt);
    } catch (const WrongRegion& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConstruction;
    } catch (const ConstructionFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConstruction;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
