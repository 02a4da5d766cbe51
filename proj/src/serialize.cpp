#include "twopar/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace twopar {

using nlohmann::ordered_json;

namespace {

std::string fmt(double v) {
    if (v == 0.0) v = 0.0; // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace

ordered_json to_json(const ComplexValue& v) {
    ordered_json j;
    if (v.is_exact()) {
        const GaussianRational& g = v.rat();
        j["mode"] = "exact";
        j["re_num"] = g.re.get_num().get_str();
        j["re_den"] = g.re.get_den().get_str();
        j["im_num"] = g.im.get_num().get_str();
        j["im_den"] = g.im.get_den().get_str();
    } else {
        j["mode"] = "floating";
        j["re"] = v.re();
        j["im"] = v.im();
    }
    j["text"] = v.str();
    return j;
}

ordered_json to_json(const RegionReport& r) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["lambda"] = to_json(r.lambda);
    j["jorgensen_interior"] = r.jorgensen_interior;
    j["classical_ts"] = to_string(r.classical_ts);
    j["nsdc"] = to_string(r.nsdc);
    j["ncf_member"] = r.ncf_member ? ordered_json(to_string(*r.ncf_member)) : ordered_json(nullptr);
    j["diamond_member"] = r.diamond_member;
    j["lox_par_generators"] = r.lox_par_generators;
    j["nth_classical"] = r.nth_classical ? ordered_json(*r.nth_classical) : ordered_json(nullptr);
    j["nth_classical_reason"] = to_string(r.nth_reason);
    j["special_boundary_point"] =
        r.special_boundary_point ? ordered_json(to_string(*r.special_boundary_point))
                                 : ordered_json(nullptr);
    j["annulus_index"] = r.annulus_index ? ordered_json(*r.annulus_index) : ordered_json(nullptr);
    j["discreteness"] = to_string(r.discreteness);
    j["notes"] = r.notes;
    return j;
}

ordered_json to_json(const CatalogEntry& e) {
    ordered_json j;
    j["family"] = static_cast<int>(e.family);
    j["family_name"] = family_name(e.family);
    j["id"] = e.id;
    ordered_json params;
    for (const auto& [k, v] : e.params) params[k] = v;
    j["params"] = params;
    j["value"] = to_json(e.value);
    j["exact_value"] = e.exact_value;
    return j;
}

ordered_json to_json(const Certificate& c) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["lambda"] = to_json(c.lambda);
    j["kind"] = to_string(c.kind);
    j["depth"] = c.depth;
    j["target"] = to_string(c.target_tag);
    j["target_value"] = to_json(c.target_value);
    if (c.catalog_entry) j["catalog_entry"] = to_json(*c.catalog_entry);
    if (!c.external_label.empty()) j["external_label"] = c.external_label;
    j["exactness"] = c.exact ? ordered_json("exact")
                             : ordered_json({{"numeric", c.tolerance}});
    j["witness_words"] = c.witness_words;
    j["verified"] = c.verified;
    return j;
}

ordered_json to_json(const PlaneCurve& c, bool include_samples) {
    ordered_json j;
    j["name"] = c.name;
    j["kind"] = to_string(c.kind);
    j["coefficients"] = c.coeffs;
    if (include_samples) {
        ordered_json s = ordered_json::array();
        for (const auto& p : c.samples) s.push_back({p[0], p[1]});
        j["samples"] = s;
    }
    return j;
}

ordered_json to_json(const CurveSet& cs, bool include_samples) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    ordered_json arr = ordered_json::array();
    for (const auto& c : cs.curves) arr.push_back(to_json(c, include_samples));
    j["curves"] = arr;
    return j;
}

ordered_json to_json(const TraceIdentityReport& r) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["lambda"] = to_json(r.lambda);
    j["tr_comm_minus2"] = to_json(r.tr_comm_minus2);
    j["tr_ST"] = to_json(r.tr_ST);
    j["tr_STinv"] = to_json(r.tr_STinv);
    j["all_pass"] = r.all_pass;
    return j;
}

ordered_json to_json(const SchottkyConfiguration& cfg, const VerifyReport& rep) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["case"] = to_string(cfg.kase);
    j["lambda"] = to_json(cfg.lambda);
    j["C1"] = {{"center", {cfg.C1.center.real(), cfg.C1.center.imag()}}, {"radius", cfg.C1.radius}};
    j["C2"] = {{"center", {cfg.C2.center.real(), cfg.C2.center.imag()}}, {"radius", cfg.C2.radius}};
    auto poly_json = [](const PolyCurve& p) {
        ordered_json pj;
        pj["is_line"] = p.is_line;
        if (p.is_line) {
            pj["point"] = {p.line_point.real(), p.line_point.imag()};
            pj["dir"] = {p.line_dir.real(), p.line_dir.imag()};
        } else {
            ordered_json cs = ordered_json::array();
            for (auto c : p.corners) cs.push_back({c.real(), c.imag()});
            pj["corners"] = cs;
            pj["dir_in"] = {p.dir_in.real(), p.dir_in.imag()};
            pj["dir_out"] = {p.dir_out.real(), p.dir_out.imag()};
        }
        return pj;
    };
    j["L1"] = poly_json(cfg.L1);
    j["L2"] = poly_json(cfg.L2);
    j["pairings"] = {{"S", "C1->C2"}, {"T", "L1->L2"}};
    ordered_json tans = ordered_json::array();
    const char* names[4] = {"C1", "C2", "L1", "L2"};
    for (const auto& t : rep.tangencies) {
        ordered_json tj;
        tj["curves"] = {names[t.a], names[t.b]};
        if (t.at_infinity)
            tj["point"] = "infinity";
        else
            tj["point"] = {t.point.real(), t.point.imag()};
        tans.push_back(tj);
    }
    j["tangencies"] = tans;
    j["recipe_extrapolated"] = cfg.recipe_extrapolated;
    j["verification"] = {{"pairing_ok", rep.pairing_ok},
                         {"pairing_residual", rep.pairing_residual},
                         {"disjoint_ok", rep.disjoint_ok},
                         {"tangency_count", rep.tangency_count},
                         {"pairing_trivial", rep.pairing_trivial},
                         {"issues", rep.issues}};
    return j;
}

std::string curves_to_csv(const CurveSet& cs) {
    std::ostringstream os;
    os << "curve_id,kind,x,y\n";
    int id = 0;
    for (const auto& c : cs.curves) {
        for (const auto& p : c.samples)
            os << id << "," << to_string(c.kind) << "," << fmt(p[0]) << "," << fmt(p[1]) << "\n";
        ++id;
    }
    return os.str();
}

namespace {

const std::map<std::string, std::string>& layer_colors() {
    static const std::map<std::string, std::string> colors = {
        {"jorgensen", "#c0392b"},   {"schottky", "#2c3e50"}, {"nsdc", "#27ae60"},
        {"ncf", "#8e44ad"},         {"tess_circles", "#7f8c8d"}, {"d2_square", "#d35400"},
        {"preimages", "#2980b9"},   {"configuration", "#2c3e50"}};
    return colors;
}

std::string color_for(const std::string& layer) {
    auto& colors = layer_colors();
    auto it = colors.find(layer);
    if (it != colors.end()) return it->second;
    for (const auto& [k, v] : colors)
        if (layer.rfind(k, 0) == 0) return v;
    return "#000000";
}

} // namespace

std::string curves_to_svg(const std::vector<std::pair<std::string, CurveSet>>& layers, double view,
                          int pixels) {
    std::ostringstream os;
    double scale = pixels / (2.0 * view);
    auto px = [&](double x) { return fmt((x + view) * scale); };
    auto py = [&](double y) { return fmt((view - y) * scale); };
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << pixels << "\" height=\"" << pixels
       << "\" viewBox=\"0 0 " << pixels << " " << pixels << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    os << "<g id=\"axes\" stroke=\"#cccccc\" stroke-width=\"1\">";
    os << "<line x1=\"0\" y1=\"" << py(0) << "\" x2=\"" << pixels << "\" y2=\"" << py(0) << "\"/>";
    os << "<line x1=\"" << px(0) << "\" y1=\"0\" x2=\"" << px(0) << "\" y2=\"" << pixels << "\"/>";
    os << "</g>\n";
    for (const auto& [name, cs] : layers) {
        os << "<g id=\"" << name << "\" fill=\"none\" stroke=\"" << color_for(name)
           << "\" stroke-width=\"1.5\">\n";
        for (const auto& c : cs.curves) {
            if (c.samples.empty()) continue;
            os << "<polyline data-name=\"" << c.name << "\" points=\"";
            bool first = true;
            for (const auto& p : c.samples) {
                if (std::abs(p[0]) > view * 4 || std::abs(p[1]) > view * 4) continue;
                if (!first) os << " ";
                os << px(p[0]) << "," << py(p[1]);
                first = false;
            }
            os << "\"/>\n";
        }
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string configuration_to_svg(const SchottkyConfiguration& cfg, double view, int pixels) {
    CurveSet cs = configuration_curves(cfg, view, 256);
    return curves_to_svg({{"configuration", cs}}, view, pixels);
}

} // namespace twopar
