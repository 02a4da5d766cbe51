#pragma once

#include "twopar/complex_value.hpp"
#include "twopar/dynamics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twopar {

enum class ClassicalTs { interior, boundary, outside };
enum class NsdcRegion { exterior_region, boundary, inside };
enum class Discreteness { discrete, non_discrete, indeterminate };

// The eight symmetric copies of the non-classical-family regions.
enum class NcfTag { A1, A2, negA1, negA2, conjA1, conjA2, negConjA1, negConjA2 };

enum class SpecialPoint { plus_two, minus_two, plus_i, minus_i };

const char* to_string(ClassicalTs v);
const char* to_string(NsdcRegion v);
const char* to_string(Discreteness v);
const char* to_string(NcfTag v);
const char* to_string(SpecialPoint v);

struct RegionReport {
    ComplexValue lambda;
    bool jorgensen_interior = false;
    ClassicalTs classical_ts = ClassicalTs::outside;
    NsdcRegion nsdc = NsdcRegion::inside;
    std::optional<NcfTag> ncf_member;
    bool diamond_member = false;       // |x| + |y| <= 1
    bool lox_par_generators = false;   // |x| + |y| >= 2
    std::optional<int> nth_classical;
    IndexReason nth_reason = IndexReason::not_found_within_depth;
    std::optional<SpecialPoint> special_boundary_point;
    std::optional<int> annulus_index;
    Discreteness discreteness = Discreteness::indeterminate;
    std::vector<std::string> notes;
};

// Boundary comparisons are exact in exact mode and use this tolerance for
// floating inputs (computed boundary points land within rounding of the locus).
inline constexpr double kEpsBoundary = 1e-12;

ClassicalTs in_classical_ts(const ComplexValue& lambda);
NsdcRegion in_nsdc(const ComplexValue& lambda);
std::optional<NcfTag> in_ncf(const ComplexValue& lambda);

RegionReport classify(const ComplexValue& lambda);

} // namespace twopar
