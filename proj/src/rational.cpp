#include "twopar/rational.hpp"

namespace twopar {

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return mpq_class(0);
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    mpq_class r(rn, rd);
    r.canonicalize();
    return r;
}

std::optional<GaussianRational> gaussian_sqrt(const GaussianRational& z) {
    const mpq_class& p = z.re;
    const mpq_class& q = z.im;
    if (q == 0) {
        if (p >= 0) {
            auto u = rational_sqrt(p);
            if (!u) return std::nullopt;
            return GaussianRational{*u, 0};
        }
        auto v = rational_sqrt(-p);
        if (!v) return std::nullopt;
        return GaussianRational{0, *v}; // principal: im >= 0
    }
    // u^2 = (p + |z|)/2, v = q/(2u); requires |z| and u rational.
    auto s = rational_sqrt(p * p + q * q);
    if (!s) return std::nullopt;
    auto u = rational_sqrt((p + *s) / 2);
    if (!u || *u == 0) return std::nullopt;
    mpq_class v = q / (2 * (*u));
    return GaussianRational{*u, v}; // u > 0: principal branch
}

std::string to_string(const mpq_class& q) {
    return q.get_str();
}

std::string to_string(const GaussianRational& z) {
    if (z.im == 0) return to_string(z.re);
    std::string s;
    if (z.re != 0) s = to_string(z.re);
    if (z.im > 0 && !s.empty()) s += "+";
    if (z.im == -1)
        s += "-";
    else if (z.im != 1)
        s += to_string(z.im);
    s += "i";
    return s;
}

} // namespace twopar
