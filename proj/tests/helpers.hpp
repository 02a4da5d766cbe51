#pragma once

#include "twopar/complex_value.hpp"
#include "twopar/group.hpp"

#include <random>

namespace twopar::testing {

inline mpq_class rand_rational(std::mt19937& rng, long num_range = 20, long den_range = 12) {
    std::uniform_int_distribution<long> num(-num_range, num_range);
    std::uniform_int_distribution<long> den(1, den_range);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline ComplexValue rand_gaussian_nonzero(std::mt19937& rng, long num_range = 20,
                                          long den_range = 12) {
    for (;;) {
        ComplexValue v = ComplexValue::exact(rand_rational(rng, num_range, den_range),
                                             rand_rational(rng, num_range, den_range));
        if (!v.is_zero()) return v;
    }
}

// random short word over S,s,T,t
inline std::string rand_word(std::mt19937& rng, int max_len = 8) {
    static const char alphabet[] = {'S', 's', 'T', 't'};
    std::uniform_int_distribution<int> len(1, max_len);
    std::uniform_int_distribution<int> pick(0, 3);
    std::string w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) w += alphabet[pick(rng)];
    return w;
}

} // namespace twopar::testing
