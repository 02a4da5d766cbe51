#pragma once

#include "twopar/complex_value.hpp"

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace twopar {

// The parameter map f(lambda) = -2 lambda^2.
ComplexValue f_map(const ComplexValue& lambda);
ComplexValue f_iter(const ComplexValue& lambda, int n);

// The two preimages +/- sqrt(-w/2); exact when -w/2 is a perfect Gaussian
// rational square, floating otherwise.  The principal root comes first.
std::array<ComplexValue, 2> f_preimages(const ComplexValue& w);

// t_n = 2^(2^-n - 1); t_{-1} = 2, t_0 = 1, and |f(t_n)| = t_{n-1}.
double t_radius(int n);

// Closed classical T-Schottky region test: |y| >= 1 - x^2/4.
bool in_classical_region(const ComplexValue& z);

enum class IndexReason { found, inside_jorgensen, on_jorgensen_circle, not_found_within_depth };
const char* to_string(IndexReason r);

struct SchottkyIndex {
    std::optional<int> index;
    IndexReason reason = IndexReason::not_found_within_depth;
};

// Smallest n >= 0 with f^n(lambda) in the closed classical region; absent
// inside (or exactly on) the Jorgensen circle.
SchottkyIndex schottky_index(const ComplexValue& lambda);

// The annulus t_n <= |value| < t_{n-1}, defined for 1/2 < |value| <= 2.
std::optional<int> annulus_of(const ComplexValue& value);

ComplexValue vertical(const ComplexValue& lambda);               // -2 lambda^2
ComplexValue lateral(const ComplexValue& lambda, long n);        // n lambda

// Programs over the operators V and L(n), applied right to left.
struct StepV {};
struct StepL { long n = 1; };
using ProgramStep = std::variant<StepV, StepL>;

struct IterationProgram {
    std::vector<ProgramStep> steps; // leftmost first, rightmost applies first
};

// Normal form lambda -> a * lambda^(2^k).
struct NormalForm {
    int k = 0;
    ComplexValue coeff = ComplexValue::exact(1);
};

// Compact notation "V L2 V V L-3" (whitespace separated).
IterationProgram parse_program(const std::string& text);
std::string program_to_string(const IterationProgram& p);

ComplexValue run_program(const ComplexValue& lambda, const IterationProgram& p);
NormalForm normalize_program(const IterationProgram& p);
bool programs_equal(const IterationProgram& p, const IterationProgram& q);

// Evaluate a normal form at lambda.
ComplexValue eval_normal_form(const NormalForm& nf, const ComplexValue& lambda);

} // namespace twopar
