#pragma once

#include "snf.hpp"

#include <map>
#include <optional>

namespace mk3 {

// Divisor classes on the projective F3 surface over Qbar:
//   D_i   generic fiber of pi_i;  A_i, B_i irreducible singular fibers (same class as D_i)
//   L/Lbar_{ij}^{ed}  lines in the four-line fibers over x_i = e sqrt(alpha) (bar: sqrt(alphabar))
//   C_i^{ed}  (1,1)-halves of the fibers over x_i = e sqrt(-1/4), with yz = d sqrt((4k+1)/32) st
struct DivisorLabel {
    enum class Kind { D, A, B, L, Lbar, C };
    Kind kind = Kind::D;
    int i = 1, j = 2;  // 1-based coordinate indices (j unused for D/A/B/C)
    int e = 1, d = 1;  // signs

    std::string str() const;
    auto tie() const { return std::make_tuple((int)kind, i, j, e, d); }
    bool operator<(const DivisorLabel& o) const { return tie() < o.tie(); }
    bool operator==(const DivisorLabel& o) const { return tie() == o.tie(); }
};

DivisorLabel parse_label(const std::string& s);
std::vector<DivisorLabel> divisor_catalogue();

// Intersection number of the two curves, from the coordinate-constraint calculus.
int geometric_pairing(const DivisorLabel& a, const DivisorLabel& b);

struct PicardLattice {
    std::vector<DivisorLabel> basis;            // the paper's 18-class basis S
    IntMat gram;                                // geometric pairings of the basis
    std::map<DivisorLabel, IntVec> relations;   // expansion of every catalogue label over S
};

struct unknown_label : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Builds basis, Gram and the full relation table; aborts if det != -48.
const PicardLattice& build_lattice();

IntVec expand(const PicardLattice& L, const DivisorLabel& label);

// The three projective-model involution matrices on <D1,D2,D3> preserve the rank-3
// intersection form and square to the identity.
bool involution_isometry_check();

struct QuotientDescription {
    int rank = 0;
    std::vector<Int> torsion;  // nontrivial elementary divisors of the inclusion
};
// Quotient of Z^18 by the span of the fiber classes D1, D2, D3.
QuotientDescription quotient_by_fibers(const PicardLattice& L);

struct GroupAction {
    IntMat sigma, tau, rho;  // 18x18, columns are images of basis vectors
};
const GroupAction& galois_action();

bool action_is_isometry(const GroupAction& A, const IntMat& gram);
bool action_satisfies_presentation(const GroupAction& A);

struct CohomologyResult {
    std::vector<Int> invariant_factors;  // > 1, divisibility chain
    int free_rank = 0;
};

// H^1 of a cyclic group <g> of the given order acting on Z^dim: ker(Norm)/(1-g).
CohomologyResult h1_cyclic(const IntMat& g, int order);

// H^1 of D4 x Z/2 via explicit cocycles on the generators (sigma, tau, rho).
CohomologyResult h1_group(const GroupAction& A);

// induced action on Pic Ubar = Z^18 / <D1,D2,D3> (coordinates 3..17)
GroupAction quotient_action(const GroupAction& A);
IntMat quotient_matrix(const IntMat& g);

// restriction of g to the saturated submodule spanned by the given columns
IntMat restrict_to_submodule(const IntMat& g, const std::vector<IntVec>& subbasis);
std::vector<IntVec> fixed_sublattice(const IntMat& g);

struct HalfSumCandidate {
    std::vector<int> bits;  // a_i in {0,1}
    Rat self_intersection;
    std::string verdict;  // "excluded: odd self-intersection" | "excluded per Nikulin (paper prose)" | ...
};
std::vector<HalfSumCandidate> sublattice_index_check(const PicardLattice& L);

// ---- verification against the paper's transcribed displays -----------------------
struct LatticeReport {
    bool gram_matches_display = false;
    Int det = 0, alt_det = 0;
    std::array<int, 3> inertia{};
    bool even = false;
    bool relations_match_display = false;
    bool c_plus_relations_hold = false;    // C_i^{++} = D_i - C_i^{+-}
    bool c_minus_collapse_holds = false;   // the display's C_1^{--} = C_1^{+-} (expected false)
    bool sigma_block_matches_display = false;
    bool rho_kernel_matches_claim = false; // Ker(1+rho) = <C1^{+-}-C1^{--}, C2^{+-}-C2^{--}>
    bool action_isometry = false;
    bool action_presentation = false;
    CohomologyResult h1_picW, h1_picU;
    CohomologyResult h1_rho_W, h1_sigma_Wrho, h1_rho_U, h1_sigma_Urho;
    QuotientDescription fiber_quotient;
    std::vector<HalfSumCandidate> half_sums;
    std::vector<std::string> discrepancies;
};

LatticeReport lattice_verify();

// alternative 18-class set (elliptic-fibration basis with zero section l23^{++})
std::vector<DivisorLabel> alternative_basis();

}  // namespace mk3
