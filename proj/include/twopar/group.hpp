#pragma once

#include "twopar/moebius.hpp"

#include <string>
#include <vector>

namespace twopar {

inline constexpr int kTowerDepthCap = 16;

// The marked two-parabolic group <S, T_lambda>,
// S = [[1,0],[1,1]], T = [[1,2*lambda],[0,1]], lambda != 0.
struct MarkedGroup {
    ComplexValue lambda;
    MoebiusMatrix S;
    MoebiusMatrix T;
};

struct TraceIdentityReport {
    ComplexValue lambda;
    ComplexValue tr_comm_minus2; // Tr [S,T] - 2, closed form 4 lambda^2
    ComplexValue tr_ST;          // closed form 2 + 2 lambda
    ComplexValue tr_STinv;       // closed form 2 - 2 lambda
    bool all_pass = false;
};

struct WhiteheadReport {
    ComplexValue lambda;
    MoebiusMatrix P1;        // T S T^-1 (or T^-1 S T when the mirror tower applies)
    MoebiusMatrix P2;        // P1 S P1^-1
    MoebiusMatrix SinvP2;    // S^-1 P2
    MoebiusMatrix comm_s_p1; // S P1 S^-1 P1^-1
    bool commutes = false;   // T * S^-1 P2 == S^-1 P2 * T
    // Negating lambda turns T into its inverse, so the commuting pair at the
    // points with negative real part uses the tower built on T^-1.
    bool used_inverse_tower = false;
    std::string pair_word;   // the word of the element commuting with T
    std::vector<SpherePoint> fixed_points; // of T, S, comm_s_p1, SinvP2
    // The same analysis with the roles of S and T interchanged.
    std::string swap_word;     // word commuting with S at the special points
    bool swap_commutes = false;
};

// The commuting-partner words of T and of S for each tower orientation.
inline constexpr const char* kPairWordDirect = "sTStSTst";
inline constexpr const char* kPairWordMirror = "stSTStsT";
inline constexpr const char* kSwapWordDirect = "tSTsTSts";
inline constexpr const char* kSwapWordMirror = "tsTSTstS";

MarkedGroup make_group(const ComplexValue& lambda);

TraceIdentityReport trace_identities(const MarkedGroup& g, double eps = 1e-12);

// P_0 = T, P_i = P_{i-1} S P_{i-1}^-1.  Word length 2^{i+1} - 1.
MoebiusMatrix parabolic_tower(const MarkedGroup& g, int i, int depth_cap = kTowerDepthCap);

// Expanded tower word without evaluating matrices.
std::string tower_word(int i, int depth_cap = kTowerDepthCap);

// Substitute T -> TSt through the subgroup embedding, n times.
std::string lift_word(const std::string& word, int times = 1);

// A = [[1,0],[-1/(2 lambda),1]]: conjugates (S, T S T^-1) to (S, T_{-2 lambda^2}).
MoebiusMatrix conjugator(const ComplexValue& lambda);

// Left-to-right product over the alphabet S,s,T,t.
MoebiusMatrix evaluate_word(const MarkedGroup& g, const std::string& word);

WhiteheadReport whitehead_analysis(const MarkedGroup& g, double eps = 1e-12);

} // namespace twopar
