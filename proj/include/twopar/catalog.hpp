#pragma once

#include "twopar/complex_value.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace twopar {

// The eight catalogued non-free value families.  Family 7 carries the bound
// |k/n| < 4 inherited from the freeness threshold of the source parameter.
enum class Family {
    squares_ratio = 1,   // p^2/(2(p^2+1)^2) and 1/(2 p^2)
    four_sin_sq = 2,     // 4 sin^2(p pi / q), gcd(p, q) = 1
    pell = 3,            // p^2/(2 q^2), 1 = q^2 - N p^2, N square-free
    sqrt_convergents = 4,// p_n^2/(2 q_n^2), p_n/q_n convergents of 1/sqrt(N)
    b_set = 5,           // the 18 listed special values
    scaled = 6,          // lambda_0 / n^2 with lambda_0 in another family
    half_square = 7,     // (1/2)(k/n)^2, k = 1..8, |k/n| < 4
    sum_over_products = 8 // (m+n)^2 / (2 m^2 n^2)
};

const char* family_name(Family f);
std::optional<Family> family_from_key(const std::string& key);

struct CatalogEntry {
    Family family;
    std::map<std::string, long> params;
    ComplexValue value;
    bool exact_value = true;
    std::string id;
};

struct EnumRanges {
    long p_max = 12;
    long q_max = 12;
    long k_max = 8;
    long m_max = 12;
    std::vector<long> big_n = {2, 3, 5, 6, 7}; // N values for Pell / convergents
    long pell_q_max = 10000;                   // denominator bound for Pell solutions
    long scale_n_max = 6;                      // family-6 divisor bound in enumeration
};

struct LookupOptions {
    double tol = 1e-12;
    long sin_q_max = 60;     // numeric search bound for family 2
    long conv_n_max = 50;    // N bound when testing convergents membership
    long scale_n_max = 16;   // family-6 divisor bound in lookup
    long sum_m_max = 64;     // family-8 solver bound
};

struct LookupResult {
    CatalogEntry primary;            // first matching family in catalog order
    std::vector<CatalogEntry> also;  // further families containing the value
};

std::vector<CatalogEntry> catalog_enumerate(Family f, const EnumRanges& r = {});

std::optional<LookupResult> catalog_lookup(const ComplexValue& value, const LookupOptions& opt = {});

// Pell solutions 1 = q^2 - N p^2 with q <= q_max, ordered by q.
std::vector<std::pair<mpz_class, mpz_class>> pell_solutions(long N, const mpz_class& q_max);

// Convergents p_n/q_n of 1/sqrt(N) with q_n <= q_max (skipping the initial 0/1).
std::vector<std::pair<mpz_class, mpz_class>> convergents_inv_sqrt(long N, const mpz_class& q_max);

bool is_square_free(long n);

} // namespace twopar
