#include "twopar/catalog.hpp"

#include "twopar/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace twopar {

const char* family_name(Family f) {
    switch (f) {
        case Family::squares_ratio: return "squares_ratio";
        case Family::four_sin_sq: return "four_sin_sq";
        case Family::pell: return "pell";
        case Family::sqrt_convergents: return "sqrt_convergents";
        case Family::b_set: return "B";
        case Family::scaled: return "scaled";
        case Family::half_square: return "half_square";
        case Family::sum_over_products: return "sum_over_products";
    }
    return "?";
}

std::optional<Family> family_from_key(const std::string& key) {
    std::string k;
    for (char c : key) k += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (k == "1" || k == "squares_ratio" || k == "squares") return Family::squares_ratio;
    if (k == "2" || k == "four_sin_sq" || k == "sin") return Family::four_sin_sq;
    if (k == "3" || k == "pell") return Family::pell;
    if (k == "4" || k == "sqrt_convergents" || k == "convergents") return Family::sqrt_convergents;
    if (k == "5" || k == "b") return Family::b_set;
    if (k == "6" || k == "scaled") return Family::scaled;
    if (k == "7" || k == "half_square" || k == "halfsq") return Family::half_square;
    if (k == "8" || k == "sum_over_products" || k == "sum") return Family::sum_over_products;
    return std::nullopt;
}

bool is_square_free(long n) {
    if (n <= 0) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0) return false;
    return true;
}

namespace {

std::string make_id(Family f, const std::map<std::string, long>& params, const std::string& extra = "") {
    std::ostringstream os;
    os << "f" << static_cast<int>(f);
    for (const auto& [k, v] : params) os << ":" << k << "=" << v;
    if (!extra.empty()) os << ":" << extra;
    return os.str();
}

CatalogEntry make_entry(Family f, std::map<std::string, long> params, ComplexValue value,
                        bool exact, const std::string& extra = "") {
    CatalogEntry e;
    e.family = f;
    e.params = std::move(params);
    e.value = std::move(value);
    e.exact_value = exact;
    e.id = make_id(f, e.params, extra);
    return e;
}

// The 18 members of the listed special set; five are irrational or complex.
struct BMember {
    ComplexValue value;
    bool exact;
    const char* tag;
};

std::vector<BMember> b_members() {
    const double s3 = std::sqrt(3.0), s13 = std::sqrt(13.0), s5 = std::sqrt(5.0),
                 is2 = 1.0 / std::sqrt(2.0);
    std::vector<BMember> v;
    auto q = [](long n, long d) { return ComplexValue::exact(mpq_class(n, d), mpq_class(0)); };
    v.push_back({q(1, 2), true, "1/2"});
    v.push_back({q(1, 1), true, "1"});
    v.push_back({q(3, 2), true, "3/2"});
    v.push_back({ComplexValue::floating(0.25, s3 / 4.0), false, "exp(i*pi/3)/2"});
    v.push_back({ComplexValue::floating((1.0 + s13) / 4.0, 0.0), false, "(1+sqrt13)/4"});
    v.push_back({ComplexValue::floating((5.0 + s5) / 4.0, 0.0), false, "(5+sqrt5)/4"});
    v.push_back({ComplexValue::floating(0.0, is2), false, "i/sqrt2"});
    v.push_back({ComplexValue::floating(is2, 0.0), false, "1/sqrt2"});
    v.push_back({q(9, 50), true, "9/50"});
    v.push_back({q(8, 25), true, "8/25"});
    v.push_back({q(25, 72), true, "25/72"});
    v.push_back({q(8, 81), true, "8/81"});
    v.push_back({q(25, 162), true, "25/162"});
    v.push_back({q(25, 98), true, "25/98"});
    v.push_back({q(9, 8), true, "9/8"});
    v.push_back({q(8, 9), true, "8/9"});
    v.push_back({q(25, 32), true, "25/32"});
    v.push_back({q(25, 18), true, "25/18"});
    return v;
}

// factor lambda = p^2/(2 q^2) from an exact positive rational, when possible
std::optional<std::pair<mpz_class, mpz_class>> half_square_decompose(const mpq_class& v) {
    if (v <= 0) return std::nullopt;
    const mpz_class& a = v.get_num();
    const mpz_class& b = v.get_den();
    mpz_class p, q;
    if (b % 2 == 0) { // p odd: a = p^2, b = 2 q^2
        mpz_class half = b / 2;
        if (!mpz_perfect_square_p(a.get_mpz_t()) || !mpz_perfect_square_p(half.get_mpz_t()))
            return std::nullopt;
        mpz_sqrt(p.get_mpz_t(), a.get_mpz_t());
        mpz_sqrt(q.get_mpz_t(), half.get_mpz_t());
    } else { // p even: a = 2 r^2, b = q^2
        if (a % 2 != 0) return std::nullopt;
        mpz_class half = a / 2;
        if (!mpz_perfect_square_p(half.get_mpz_t()) || !mpz_perfect_square_p(b.get_mpz_t()))
            return std::nullopt;
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), half.get_mpz_t());
        p = 2 * r;
        mpz_sqrt(q.get_mpz_t(), b.get_mpz_t());
    }
    return std::make_pair(p, q);
}

} // namespace

std::vector<std::pair<mpz_class, mpz_class>> pell_solutions(long N, const mpz_class& q_max) {
    if (N <= 0 || !is_square_free(N)) throw EmptyRange("Pell N must be positive square-free");
    // fundamental solution from the continued fraction of sqrt(N)
    mpz_class a0 = static_cast<long>(std::floor(std::sqrt(static_cast<double>(N))));
    mpz_class m = 0, d = 1, a = a0;
    mpz_class h_prev = 1, h = a0, k_prev = 0, k = 1;
    mpz_class q1 = 0, p1 = 0;
    for (int it = 0; it < 10000; ++it) {
        if (h * h - N * k * k == 1) {
            q1 = h;
            p1 = k;
            break;
        }
        m = d * a - m;
        d = (N - m * m) / d;
        a = (a0 + m) / d;
        mpz_class h2 = a * h + h_prev;
        mpz_class k2 = a * k + k_prev;
        h_prev = h;
        k_prev = k;
        h = h2;
        k = k2;
    }
    std::vector<std::pair<mpz_class, mpz_class>> out; // (p, q)
    if (q1 == 0) return out;
    mpz_class q = q1, p = p1;
    while (q <= q_max) {
        out.emplace_back(p, q);
        mpz_class q2 = q1 * q + N * p1 * p;
        mpz_class p2 = q1 * p + p1 * q;
        q = q2;
        p = p2;
    }
    return out;
}

std::vector<std::pair<mpz_class, mpz_class>> convergents_inv_sqrt(long N, const mpz_class& q_max) {
    if (N <= 0) throw EmptyRange("N must be positive");
    // 1/sqrt(N) = [0; a0, a1, ...] where sqrt(N) = [a0; a1, ...]
    mpz_class a0 = static_cast<long>(std::floor(std::sqrt(static_cast<double>(N))));
    if (a0 * a0 == N) throw EmptyRange("N must not be a perfect square");
    mpz_class m = 0, d = 1, a = a0;
    mpz_class h_prev = 1, h = 0, k_prev = 0, k = 1; // after the leading 0 term
    std::vector<std::pair<mpz_class, mpz_class>> out;
    for (int it = 0; it < 100000; ++it) {
        mpz_class h2 = a * h + h_prev;
        mpz_class k2 = a * k + k_prev;
        h_prev = h;
        k_prev = k;
        h = h2;
        k = k2;
        if (k > q_max) break;
        out.emplace_back(h, k); // p_n / q_n
        m = d * a - m;
        d = (N - m * m) / d;
        a = (a0 + m) / d;
    }
    return out;
}

std::vector<CatalogEntry> catalog_enumerate(Family f, const EnumRanges& r) {
    std::vector<CatalogEntry> out;
    switch (f) {
        case Family::squares_ratio: {
            if (r.p_max < 1) throw EmptyRange("p range empty");
            for (long p = 1; p <= r.p_max; ++p) {
                mpq_class v(p * p, 2 * (p * p + 1) * (p * p + 1));
                v.canonicalize();
                out.push_back(make_entry(f, {{"form", 1}, {"p", p}},
                                         ComplexValue::exact(v, mpq_class(0)), true));
            }
            for (long p = 2; p <= r.p_max; ++p) {
                mpq_class v(1, 2 * p * p);
                v.canonicalize();
                out.push_back(make_entry(f, {{"form", 2}, {"p", p}},
                                         ComplexValue::exact(v, mpq_class(0)), true));
            }
            break;
        }
        case Family::four_sin_sq: {
            if (r.q_max < 2) throw EmptyRange("q range empty");
            for (long q = 2; q <= r.q_max; ++q) {
                for (long p = 1; 2 * p <= q; ++p) {
                    if (std::gcd(p, q) != 1) continue;
                    bool exact = (q == 2 || q == 3 || q == 4 || q == 6);
                    ComplexValue v;
                    if (exact) {
                        long num = (q == 2) ? 4 : (q == 3) ? 3 : (q == 4) ? 2 : 1;
                        v = ComplexValue::exact(num);
                    } else {
                        double s = std::sin(M_PI * static_cast<double>(p) / static_cast<double>(q));
                        v = ComplexValue::floating(4.0 * s * s, 0.0);
                    }
                    out.push_back(make_entry(f, {{"p", p}, {"q", q}}, v, exact));
                }
            }
            break;
        }
        case Family::pell: {
            if (r.big_n.empty()) throw EmptyRange("no Pell N values");
            for (long N : r.big_n) {
                for (const auto& [p, q] : pell_solutions(N, r.pell_q_max)) {
                    mpq_class v(p * p, 2 * q * q);
                    v.canonicalize();
                    out.push_back(make_entry(f, {{"N", N}, {"p", p.get_si()}, {"q", q.get_si()}},
                                             ComplexValue::exact(v, mpq_class(0)), true));
                }
            }
            break;
        }
        case Family::sqrt_convergents: {
            if (r.big_n.empty()) throw EmptyRange("no N values");
            for (long N : r.big_n) {
                for (const auto& [p, q] : convergents_inv_sqrt(N, r.q_max)) {
                    if (p == 0) continue;
                    mpq_class v(p * p, 2 * q * q);
                    v.canonicalize();
                    out.push_back(make_entry(f, {{"N", N}, {"p", p.get_si()}, {"q", q.get_si()}},
                                             ComplexValue::exact(v, mpq_class(0)), true));
                }
            }
            break;
        }
        case Family::b_set: {
            long idx = 0;
            for (const auto& m : b_members()) {
                out.push_back(make_entry(f, {{"index", idx}}, m.value, m.exact, m.tag));
                ++idx;
            }
            break;
        }
        case Family::scaled: {
            // one level deep over the base families
            for (Family base : {Family::squares_ratio, Family::four_sin_sq, Family::pell,
                                Family::sqrt_convergents, Family::b_set, Family::half_square,
                                Family::sum_over_products}) {
                for (const auto& e : catalog_enumerate(base, r)) {
                    for (long n = 2; n <= r.scale_n_max; ++n) {
                        ComplexValue v = e.value / ComplexValue::exact(n * n);
                        out.push_back(make_entry(f, {{"n", n}}, v, e.exact_value, e.id));
                    }
                }
            }
            break;
        }
        case Family::half_square: {
            if (r.m_max < 1) throw EmptyRange("n range empty");
            for (long k = 1; k <= std::min(r.k_max, 8L); ++k) {
                for (long n = 1; n <= r.m_max; ++n) {
                    if (std::gcd(k, n) != 1) continue;
                    if (k >= 4 * n) continue; // freeness bound on k/n
                    mpq_class v(k * k, 2 * n * n);
                    v.canonicalize();
                    out.push_back(make_entry(f, {{"k", k}, {"n", n}},
                                             ComplexValue::exact(v, mpq_class(0)), true));
                }
            }
            break;
        }
        case Family::sum_over_products: {
            if (r.m_max < 1) throw EmptyRange("m range empty");
            for (long m = 1; m <= r.m_max; ++m) {
                for (long n = -r.m_max; n <= r.m_max; ++n) {
                    if (n == 0 || m + n == 0) continue;
                    if (std::abs(n) > m || (std::abs(n) == m && n < 0)) continue; // canonical reps
                    mpq_class v((m + n) * (m + n), 2 * m * m * n * n);
                    v.canonicalize();
                    out.push_back(make_entry(f, {{"m", m}, {"n", n}},
                                             ComplexValue::exact(v, mpq_class(0)), true));
                }
            }
            break;
        }
    }
    return out;
}

namespace {

std::optional<CatalogEntry> lookup_family(Family f, const ComplexValue& value,
                                          const LookupOptions& opt, bool allow_scaled);

std::optional<CatalogEntry> lookup_squares_ratio(const ComplexValue& value, const LookupOptions& opt) {
    if (value.is_exact()) {
        if (!value.rat().is_real()) return std::nullopt;
        const mpq_class v = value.rat().re;
        if (v <= 0) return std::nullopt;
        const mpz_class& a = v.get_num();
        const mpz_class& b = v.get_den();
        // 1/(2p^2), p >= 2
        if (a == 1 && b % 2 == 0) {
            mpz_class half = b / 2;
            if (mpz_perfect_square_p(half.get_mpz_t())) {
                mpz_class p;
                mpz_sqrt(p.get_mpz_t(), half.get_mpz_t());
                if (p >= 2)
                    return make_entry(Family::squares_ratio, {{"form", 2}, {"p", p.get_si()}},
                                      value, true);
            }
        }
        // p^2/(2(p^2+1)^2): 2a t^2 + (4a - b) t + 2a = 0 with t = p^2
        mpz_class A = 2 * a, B = 4 * a - b, C = 2 * a;
        mpz_class disc = B * B - 4 * A * C;
        if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t())) {
            mpz_class sd;
            mpz_sqrt(sd.get_mpz_t(), disc.get_mpz_t());
            for (int sign : {+1, -1}) {
                mpz_class num = -B + sign * sd;
                if (num > 0 && num % (2 * A) == 0) {
                    mpz_class t = num / (2 * A);
                    if (mpz_perfect_square_p(t.get_mpz_t())) {
                        mpz_class p;
                        mpz_sqrt(p.get_mpz_t(), t.get_mpz_t());
                        if (p >= 1) {
                            mpq_class check(p * p, 2 * (p * p + 1) * (p * p + 1));
                            check.canonicalize();
                            if (check == v)
                                return make_entry(Family::squares_ratio,
                                                  {{"form", 1}, {"p", p.get_si()}}, value, true);
                        }
                    }
                }
            }
        }
        return std::nullopt;
    }
    if (std::abs(value.im()) > opt.tol) return std::nullopt;
    double v = value.re();
    if (v <= 0) return std::nullopt;
    for (long p = 1; p <= 100000; ++p) {
        double f1 = static_cast<double>(p * p) / (2.0 * (p * p + 1.0) * (p * p + 1.0));
        if (std::abs(f1 - v) <= opt.tol)
            return make_entry(Family::squares_ratio, {{"form", 1}, {"p", p}}, value, false);
        double f2 = 1.0 / (2.0 * p * p);
        if (p >= 2 && std::abs(f2 - v) <= opt.tol)
            return make_entry(Family::squares_ratio, {{"form", 2}, {"p", p}}, value, false);
        if (f1 < v - opt.tol && f2 < v - opt.tol) break;
    }
    return std::nullopt;
}

std::optional<CatalogEntry> lookup_four_sin_sq(const ComplexValue& value, const LookupOptions& opt) {
    if (value.is_exact()) {
        if (!value.rat().is_real()) return std::nullopt;
        const mpq_class& v = value.rat().re;
        if (v == 1) return make_entry(Family::four_sin_sq, {{"p", 1}, {"q", 6}}, value, true);
        if (v == 2) return make_entry(Family::four_sin_sq, {{"p", 1}, {"q", 4}}, value, true);
        if (v == 3) return make_entry(Family::four_sin_sq, {{"p", 1}, {"q", 3}}, value, true);
        if (v == 4) return make_entry(Family::four_sin_sq, {{"p", 1}, {"q", 2}}, value, true);
        return std::nullopt;
    }
    if (std::abs(value.im()) > opt.tol) return std::nullopt;
    double v = value.re();
    if (v <= 0 || v > 4.0 + opt.tol) return std::nullopt;
    for (long q = 2; q <= opt.sin_q_max; ++q) {
        for (long p = 1; 2 * p <= q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            double s = std::sin(M_PI * static_cast<double>(p) / static_cast<double>(q));
            if (std::abs(4.0 * s * s - v) <= opt.tol)
                return make_entry(Family::four_sin_sq, {{"p", p}, {"q", q}}, value, false);
        }
    }
    return std::nullopt;
}

std::optional<CatalogEntry> lookup_pell(const ComplexValue& value, const LookupOptions& opt) {
    if (!value.is_exact()) {
        if (std::abs(value.im()) > opt.tol) return std::nullopt;
        for (long N = 2; N <= opt.conv_n_max; ++N) {
            if (!is_square_free(N)) continue;
            for (const auto& [p, q] : pell_solutions(N, mpz_class(100000))) {
                mpq_class v(p * p, 2 * q * q);
                v.canonicalize();
                if (std::abs(v.get_d() - value.re()) <= opt.tol)
                    return make_entry(Family::pell, {{"N", N}, {"p", p.get_si()}, {"q", q.get_si()}},
                                      value, false);
            }
        }
        return std::nullopt;
    }
    if (!value.rat().is_real()) return std::nullopt;
    auto pq = half_square_decompose(value.rat().re);
    if (!pq) return std::nullopt;
    auto [p, q] = *pq;
    if (p < 1 || q < 2) return std::nullopt;
    mpz_class num = q * q - 1;
    if (num % (p * p) != 0) return std::nullopt;
    mpz_class N = num / (p * p);
    if (!N.fits_slong_p() || !is_square_free(N.get_si())) return std::nullopt;
    return make_entry(Family::pell, {{"N", N.get_si()}, {"p", p.get_si()}, {"q", q.get_si()}},
                      value, true);
}

std::optional<CatalogEntry> lookup_convergents(const ComplexValue& value, const LookupOptions& opt) {
    auto try_pq = [&](const mpz_class& p, const mpz_class& q) -> std::optional<CatalogEntry> {
        for (long N = 2; N <= opt.conv_n_max; ++N) {
            long r = static_cast<long>(std::sqrt(static_cast<double>(N)));
            if (r * r == N) continue;
            for (const auto& [cp, cq] : convergents_inv_sqrt(N, q)) {
                if (cp == p && cq == q) {
                    mpq_class v(p * p, 2 * q * q);
                    v.canonicalize();
                    return make_entry(Family::sqrt_convergents,
                                      {{"N", N}, {"p", p.get_si()}, {"q", q.get_si()}},
                                      ComplexValue::exact(v, mpq_class(0)), true);
                }
            }
        }
        return std::nullopt;
    };
    if (value.is_exact()) {
        if (!value.rat().is_real()) return std::nullopt;
        auto pq = half_square_decompose(value.rat().re);
        if (!pq) return std::nullopt;
        auto e = try_pq(pq->first, pq->second);
        if (e) e->value = value;
        return e;
    }
    return std::nullopt; // floating inputs handled by the exact families above
}

std::optional<CatalogEntry> lookup_b(const ComplexValue& value, const LookupOptions& opt) {
    long idx = 0;
    for (const auto& m : b_members()) {
        bool hit;
        if (value.is_exact() && m.exact)
            hit = value.rat() == m.value.rat();
        else
            hit = std::abs(value.cd() - m.value.cd()) <= opt.tol;
        if (hit) return make_entry(Family::b_set, {{"index", idx}}, m.value, m.exact, m.tag);
        ++idx;
    }
    return std::nullopt;
}

std::optional<CatalogEntry> lookup_half_square(const ComplexValue& value, const LookupOptions& opt) {
    if (value.is_exact()) {
        if (!value.rat().is_real()) return std::nullopt;
        mpq_class two_v = 2 * value.rat().re;
        auto s = rational_sqrt(two_v);
        if (!s || *s == 0) return std::nullopt;
        mpz_class k = s->get_num(), n = s->get_den();
        if (k > 8 || k >= 4 * n) return std::nullopt;
        return make_entry(Family::half_square, {{"k", k.get_si()}, {"n", n.get_si()}}, value, true);
    }
    if (std::abs(value.im()) > opt.tol) return std::nullopt;
    double v = value.re();
    if (v <= 0) return std::nullopt;
    for (long k = 1; k <= 8; ++k) {
        double dn = k / std::sqrt(2.0 * v);
        long n = std::lround(dn);
        if (n < 1 || std::gcd(k, n) != 1 || k >= 4 * n) continue;
        double cand = 0.5 * (static_cast<double>(k) / n) * (static_cast<double>(k) / n);
        if (std::abs(cand - v) <= opt.tol)
            return make_entry(Family::half_square, {{"k", k}, {"n", n}}, value, false);
    }
    return std::nullopt;
}

std::optional<CatalogEntry> lookup_sum_over_products(const ComplexValue& value,
                                                     const LookupOptions& opt) {
    auto validate = [&](long m, long n) -> bool {
        if (m == 0 || n == 0 || m + n == 0) return false;
        if (value.is_exact()) {
            mpq_class v((m + n) * (m + n), 2 * m * m * n * n);
            v.canonicalize();
            return value.rat().is_real() && v == value.rat().re;
        }
        double v = static_cast<double>((m + n)) * (m + n) / (2.0 * m * m * n * n);
        return std::abs(value.im()) <= opt.tol && std::abs(v - value.re()) <= opt.tol;
    };
    if (value.is_exact()) {
        if (!value.rat().is_real() || value.rat().re <= 0) return std::nullopt;
        auto u = rational_sqrt(2 * value.rat().re); // |1/m + 1/n|
        if (!u || *u == 0) return std::nullopt;
        mpz_class a = u->get_num(), b = u->get_den();
        for (long m = 1; m <= opt.sum_m_max; ++m) {
            for (int sm : {+1, -1}) {
                long mm = sm * m;
                // 1/n = a/b - 1/mm  ->  n = b*mm / (a*mm - b)
                mpz_class den = a * mm - b;
                if (den == 0) continue;
                mpz_class num = b * mm;
                if (num % den != 0) continue;
                mpz_class n = num / den;
                if (!n.fits_slong_p()) continue;
                if (validate(mm, n.get_si()))
                    return make_entry(Family::sum_over_products, {{"m", mm}, {"n", n.get_si()}},
                                      value, true);
            }
        }
        return std::nullopt;
    }
    if (std::abs(value.im()) > opt.tol || value.re() <= 0) return std::nullopt;
    double u = std::sqrt(2.0 * value.re());
    for (long m = 1; m <= opt.sum_m_max; ++m) {
        for (int sm : {+1, -1}) {
            double inv_n = u - 1.0 / (sm * m);
            if (inv_n == 0) continue;
            long n = std::lround(1.0 / inv_n);
            if (n != 0 && validate(sm * m, n))
                return make_entry(Family::sum_over_products, {{"m", sm * m}, {"n", n}}, value, false);
        }
    }
    return std::nullopt;
}

std::optional<CatalogEntry> lookup_scaled(const ComplexValue& value, const LookupOptions& opt) {
    for (long n = 2; n <= opt.scale_n_max; ++n) {
        ComplexValue scaled = value * ComplexValue::exact(n * n);
        for (Family base : {Family::squares_ratio, Family::four_sin_sq, Family::pell,
                            Family::sqrt_convergents, Family::b_set, Family::half_square,
                            Family::sum_over_products}) {
            if (auto e = lookup_family(base, scaled, opt, false)) {
                CatalogEntry out = make_entry(Family::scaled, {{"n", n}}, value, e->exact_value, e->id);
                return out;
            }
        }
    }
    return std::nullopt;
}

std::optional<CatalogEntry> lookup_family(Family f, const ComplexValue& value,
                                          const LookupOptions& opt, bool allow_scaled) {
    switch (f) {
        case Family::squares_ratio: return lookup_squares_ratio(value, opt);
        case Family::four_sin_sq: return lookup_four_sin_sq(value, opt);
        case Family::pell: return lookup_pell(value, opt);
        case Family::sqrt_convergents: return lookup_convergents(value, opt);
        case Family::b_set: return lookup_b(value, opt);
        case Family::scaled: return allow_scaled ? lookup_scaled(value, opt) : std::nullopt;
        case Family::half_square: return lookup_half_square(value, opt);
        case Family::sum_over_products: return lookup_sum_over_products(value, opt);
    }
    return std::nullopt;
}

} // namespace

std::optional<LookupResult> catalog_lookup(const ComplexValue& value, const LookupOptions& opt) {
    LookupResult res;
    bool found = false;
    for (Family f : {Family::squares_ratio, Family::four_sin_sq, Family::pell,
                     Family::sqrt_convergents, Family::b_set, Family::scaled, Family::half_square,
                     Family::sum_over_products}) {
        if (auto e = lookup_family(f, value, opt, true)) {
            if (!found) {
                res.primary = *e;
                found = true;
            } else {
                res.also.push_back(*e);
            }
        }
    }
    if (!found) return std::nullopt;
    return res;
}

} // namespace twopar
