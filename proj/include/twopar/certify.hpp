#pragma once

#include "twopar/catalog.hpp"
#include "twopar/complex_value.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twopar {

enum class CertificateKind { dust_or_nonfree, nonfree, dust_and_nonfree };
enum class TargetTag { plus_i, minus_i, plus_two, minus_two, catalog, external };

const char* to_string(CertificateKind k);
const char* to_string(TargetTag t);

// User-registered target values (cusp-style parameters supplied externally).
struct ExternalTarget {
    std::string label;
    ComplexValue value;
};

struct Certificate {
    ComplexValue lambda;
    CertificateKind kind;
    int depth = 0;
    TargetTag target_tag;
    ComplexValue target_value;
    std::optional<CatalogEntry> catalog_entry;
    std::string external_label;
    bool exact = true;        // exact hit of the target
    double tolerance = 0.0;   // matching tolerance when not exact
    std::vector<std::string> witness_words;
    bool verified = false;    // matrix-level checks passed
};

inline constexpr int kCertifyDefaultDepth = 8;

// Scan f^n(lambda) for n = 0..max_depth against the special targets +/-i,
// +/-2 (n >= 1), registered external targets, and the non-free catalog.
// Returns the smallest-depth certificate, with matrix witnesses verified.
std::optional<Certificate> certify(const ComplexValue& lambda,
                                   int max_depth = kCertifyDefaultDepth,
                                   const std::vector<ExternalTarget>& external = {},
                                   double tol = 1e-12);

} // namespace twopar
