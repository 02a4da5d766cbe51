#include "twopar/dynamics.hpp"

#include "twopar/errors.hpp"

#include <cmath>
#include <sstream>

namespace twopar {

ComplexValue f_map(const ComplexValue& lambda) {
    return ComplexValue::exact(-2) * lambda * lambda;
}

ComplexValue f_iter(const ComplexValue& lambda, int n) {
    if (n < 0) throw BadIndex("iteration count must be >= 0");
    ComplexValue z = lambda;
    for (int k = 0; k < n; ++k) z = f_map(z);
    return z;
}

std::array<ComplexValue, 2> f_preimages(const ComplexValue& w) {
    ComplexValue r = -(w / ComplexValue::exact(2));
    if (r.is_exact()) {
        if (auto s = gaussian_sqrt(r.rat())) {
            ComplexValue root = ComplexValue::exact(*s);
            return {root, -root};
        }
    }
    std::complex<double> root = std::sqrt(r.cd());
    return {ComplexValue::floating(root), ComplexValue::floating(-root)};
}

double t_radius(int n) {
    if (n < -1) throw BadIndex("t_n defined for n >= -1");
    return std::exp2(std::ldexp(1.0, -n) - 1.0);
}

bool in_classical_region(const ComplexValue& z) {
    if (z.is_exact()) {
        const GaussianRational& g = z.rat();
        mpq_class ay = g.im >= 0 ? g.im : mpq_class(-g.im);
        // |y| >= 1 - x^2/4  <=>  4|y| + x^2 >= 4
        return 4 * ay + g.re * g.re >= 4;
    }
    double x = z.re(), y = std::abs(z.im());
    return y >= 1.0 - x * x / 4.0;
}

const char* to_string(IndexReason r) {
    switch (r) {
        case IndexReason::found: return "found";
        case IndexReason::inside_jorgensen: return "inside_jorgensen";
        case IndexReason::on_jorgensen_circle: return "on_jorgensen_circle";
        case IndexReason::not_found_within_depth: return "not_found_within_depth";
    }
    return "?";
}

SchottkyIndex schottky_index(const ComplexValue& lambda) {
    if (lambda.is_zero()) throw ZeroLambda();

    // |lambda| vs 1/2, exact when possible
    int cmp; // -1 inside, 0 on circle, +1 outside
    if (lambda.is_exact()) {
        mpq_class n2 = lambda.rat().norm();
        cmp = n2 < mpq_class(1, 4) ? -1 : (n2 == mpq_class(1, 4) ? 0 : 1);
    } else {
        double n2 = std::norm(lambda.cd());
        cmp = n2 < 0.25 ? -1 : (n2 == 0.25 ? 0 : 1);
    }
    if (cmp < 0) return {std::nullopt, IndexReason::inside_jorgensen};

    int n_max = 64;
    if (cmp > 0) {
        // escape bound from |f^n| = (2|lambda|)^(2^n)/2
        double m = 2.0 * lambda.abs();
        double need = std::log(4.0) / std::log(m);
        n_max = std::max(8, static_cast<int>(std::ceil(std::log2(need))) + 2);
    }

    // Exact squaring doubles the representation size each step; past this
    // many bits the remaining iterates continue in floating point.
    constexpr std::size_t kExactBitCap = 8192;
    auto bits_of = [](const ComplexValue& v) {
        const GaussianRational& g = v.rat();
        return mpz_sizeinbase(g.re.get_num().get_mpz_t(), 2) +
               mpz_sizeinbase(g.re.get_den().get_mpz_t(), 2) +
               mpz_sizeinbase(g.im.get_num().get_mpz_t(), 2) +
               mpz_sizeinbase(g.im.get_den().get_mpz_t(), 2);
    };

    ComplexValue z = lambda;
    for (int n = 0; n <= n_max; ++n) {
        if (in_classical_region(z)) return {n, IndexReason::found};
        if (z.is_exact() && bits_of(z) > kExactBitCap)
            z = ComplexValue::floating(z.cd());
        z = f_map(z);
    }
    if (cmp == 0) return {std::nullopt, IndexReason::on_jorgensen_circle};
    return {std::nullopt, IndexReason::not_found_within_depth};
}

std::optional<int> annulus_of(const ComplexValue& value) {
    double m = value.abs();
    if (!(m > 0.5) || m > 2.0) return std::nullopt;
    for (int n = -1; n <= 128; ++n) {
        if (t_radius(n) <= m) return n;
    }
    return std::nullopt;
}

ComplexValue vertical(const ComplexValue& lambda) { return f_map(lambda); }

ComplexValue lateral(const ComplexValue& lambda, long n) {
    if (n == 0) throw ZeroMultiplier();
    return ComplexValue::exact(n) * lambda;
}

IterationProgram parse_program(const std::string& text) {
    IterationProgram p;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "V" || tok == "v") {
            p.steps.push_back(StepV{});
        } else if (tok.size() > 1 && (tok[0] == 'L' || tok[0] == 'l')) {
            try {
                std::size_t used = 0;
                long n = std::stol(tok.substr(1), &used);
                if (used != tok.size() - 1) throw std::invalid_argument(tok);
                if (n == 0) throw MalformedProgram("L0 is not a lateral move");
                p.steps.push_back(StepL{n});
            } catch (const std::logic_error&) {
                throw MalformedProgram("bad program token '" + tok + "'");
            }
        } else {
            throw MalformedProgram("bad program token '" + tok + "'");
        }
    }
    return p;
}

std::string program_to_string(const IterationProgram& p) {
    std::string out;
    for (const auto& s : p.steps) {
        if (!out.empty()) out += ' ';
        if (std::holds_alternative<StepV>(s))
            out += 'V';
        else
            out += "L" + std::to_string(std::get<StepL>(s).n);
    }
    return out;
}

ComplexValue run_program(const ComplexValue& lambda, const IterationProgram& p) {
    ComplexValue z = lambda;
    for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it) {
        if (std::holds_alternative<StepV>(*it))
            z = vertical(z);
        else
            z = lateral(z, std::get<StepL>(*it).n);
    }
    return z;
}

NormalForm normalize_program(const IterationProgram& p) {
    NormalForm nf; // identity map
    for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it) {
        if (std::holds_alternative<StepV>(*it)) {
            // V after a*z^(2^k): -2 a^2 z^(2^(k+1))
            nf.coeff = ComplexValue::exact(-2) * nf.coeff * nf.coeff;
            nf.k += 1;
        } else {
            long n = std::get<StepL>(*it).n;
            if (n == 0) throw MalformedProgram("L0 is not a lateral move");
            nf.coeff = ComplexValue::exact(n) * nf.coeff;
        }
    }
    return nf;
}

bool programs_equal(const IterationProgram& p, const IterationProgram& q) {
    NormalForm a = normalize_program(p);
    NormalForm b = normalize_program(q);
    return a.k == b.k && a.coeff == b.coeff;
}

ComplexValue eval_normal_form(const NormalForm& nf, const ComplexValue& lambda) {
    ComplexValue pw = lambda;
    for (int i = 0; i < nf.k; ++i) pw = pw * pw;
    return nf.coeff * pw;
}

} // namespace twopar
