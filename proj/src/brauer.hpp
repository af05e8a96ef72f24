#pragma once

#include "hilbert.hpp"
#include "localpoints.hpp"

#include <map>
#include <set>

namespace mk3 {

// First-slot shapes of the quaternion classes in play.
enum class SlotForm {
    coord_sq_plus,   // 4 x_i^2 + 1
    coord_sq_minus,  // 4 x_i^2 - 1
    pair_sq_minus,   // 4 x_i^2 x_j^2 - 1
    b_form,          // 16 x_i^2 x_j^2 - 4 x_i^2 - 4 x_j^2 - 1
};

struct Representation {
    SlotForm form;
    int i = 0, j = 1;  // coordinate indices
    std::string str() const;
};

struct QuaternionClass {
    FamilyId family;
    std::string label;
    std::vector<Representation> reps;  // all define the same Brauer class on the surface
    Int constant;                      // second slot
    IdentityId equivalence_id;         // certifies rep equality / divides-implies-square

    // first slot of rep r at a p-adic point
    PadicApprox slot_value(const Representation& r, const std::array<PadicApprox, 3>& P) const;
};

// The classes of the paper's obstruction theorems for the given parameters.
std::vector<QuaternionClass> obstruction_classes(ProfileId prof, const Int& k);
QuaternionClass b_membership_class(const Int& k);  // the (16x^2y^2-..., (4k-5)^2-32) class
// For the sum-rule properties: the third coordinate class (z-version).
QuaternionClass third_coordinate_class(ProfileId prof, const Int& k);

// invariant of class c at a p-adic point (first determinable representation).
HalfInvariant local_invariant(const QuaternionClass& c, const Surface& s,
                              const std::array<PadicApprox, 3>& P, const Place& v);

// ---- residue scans --------------------------------------------------------------

using InvariantVector = std::vector<int>;  // entries 0/1 (halves), one per class

struct ScanWitness {
    std::array<int, 3> shifts{0, 0, 0};  // coordinate i is X_i / p^shift_i
    std::array<u64, 3> residues{};
    int modexp = 0;
};

struct PlaceScan {
    std::string place;
    std::set<InvariantVector> vectors;
    bool stable = true;   // every residue branch certified and determined within the cap
    bool overapprox = false;  // true when the set is an upper bound only (real place fallback)
    std::map<InvariantVector, ScanWitness> examples;
    // rational scans: every (valuation pattern, vector) pair attained
    std::vector<std::pair<std::array<int, 3>, InvariantVector>> pattern_vectors;
    long long nodes = 0;
    int cap = 0;
    std::string note;
};

// Attained invariant vectors over Newton-certified residue classes mod p^depth.
PlaceScan scan_invariant_vectors(const Surface& s, const std::vector<QuaternionClass>& classes,
                                 long long p, int depth);

// Same over Q_p-points with coordinate valuations >= -max_neg at prime p.
PlaceScan scan_invariant_vectors_rational(const Surface& s, const std::vector<QuaternionClass>& classes,
                                          long long p, int depth, int max_neg);

// Real-place invariant set per class (analytic sign rules; conservative when unknown).
PlaceScan real_invariant_scan(const Surface& s, const std::vector<QuaternionClass>& classes);

// Single-class convenience (the paper's per-class tables).
struct InvariantSet {
    std::set<int> values;
    bool stable;
};
InvariantSet invariant_set(const QuaternionClass& c, const Surface& s, long long p, int depth);

// ---- obstruction verdicts ---------------------------------------------------------

enum class Verdict { obstructed, not_obstructed_with_witness, inconclusive };
std::string verdict_name(Verdict v);

struct TailCertificate {
    bool certified = false;
    std::vector<std::string> notes;
};

struct ObstructionReport {
    Surface surface{FamilyId::F1, 0};
    std::optional<ProfileId> profile;
    std::optional<Int> ell;
    std::vector<QuaternionClass> classes;
    std::vector<PlaceScan> places;  // real + scanned primes, ordered
    TailCertificate tail;
    LocalSolvabilityReport solvability;
    Verdict verdict = Verdict::inconclusive;
    std::optional<std::map<std::string, InvariantVector>> zero_sum_selection;
    std::string note;
};

ObstructionReport obstruction_verdict(const Surface& s, const std::vector<QuaternionClass>& classes,
                                      long long B, int depth,
                                      std::optional<ProfileId> prof = std::nullopt,
                                      std::optional<Int> ell = std::nullopt);

// ---- strong approximation, rational Brauer-Manin set ------------------------------

struct SaFailureReport {
    Surface surface{FamilyId::F1, 0};
    QuaternionClass cls;
    bool failure_exhibited = false;
    std::optional<FoundPoint> integral_point;
    ScanWitness witness_zero, witness_half;  // 2-adic witnesses with invariants 0 and 1/2
    std::string note;
};

SaFailureReport strong_approximation_failure(const Surface& s, const QuaternionClass& c,
                                             std::optional<AffinePoint> known_point = std::nullopt,
                                             long long search_box = 64);

struct RationalBmReport {
    Surface surface{FamilyId::F1, 0};
    long long designated_prime = 2;
    std::vector<QuaternionClass> classes;
    bool witness_found = false;
    ScanWitness qp_witness;           // the negative-valuation component
    InvariantVector qp_vector;
    std::map<std::string, InvariantVector> selection;  // place -> chosen vector (sums to 0)
    std::vector<std::pair<std::array<int, 3>, InvariantVector>> patterns_found;
    std::string note;
};

RationalBmReport rational_bm_witness(const Surface& s, const std::vector<QuaternionClass>& classes,
                                     ProfileId prof, long long B = 200, int depth = 5);

}  // namespace mk3
