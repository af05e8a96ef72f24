#pragma once

#include "surfaces.hpp"

#include <optional>

namespace mk3 {

enum class ProfileId {
    assumption1,  // F1 local solvability congruences
    assumption2,  // F2
    assumption3,  // F3
    thm44,        // F1, k = -(1+16 l^2)
    thm45,        // F2, k = 18 l^2
    thm46,        // F3, k = -(1+27 l^2)/4
    prop51,       // F3, k = l(l+1), l = 5 mod 8
    prop52,       // F3, k = l(l+1), l = 3 mod 8
};

ProfileId parse_profile(const std::string& s);
std::string profile_name(ProfileId id);
ProfileId default_obstruction_profile(FamilyId f);
ProfileId assumption_profile_for(FamilyId f);

struct CongruenceCondition {
    long long modulus;
    std::vector<long long> allowed;  // reduced residues
};

struct PrimeDivisorCondition {
    std::string quantity;                 // "ell" | "k" | "2ell+1"
    std::vector<long long> excluded;      // primes handled by explicit congruences
    long long modulus;
    std::vector<long long> allowed;
};

struct AssumptionProfile {
    ProfileId id;
    FamilyId family;
    bool ell_derived;                      // conditions read on ell, k computed from it
    std::vector<CongruenceCondition> congruences;
    std::vector<PrimeDivisorCondition> divisor_conditions;
};

const AssumptionProfile& profile_data(ProfileId id);

// k from ell for ell-derived profiles; throws if the formula is not integral.
Int profile_k(ProfileId id, const Int& ell);

struct CheckResult {
    bool pass = false;
    std::string first_violation;  // empty when pass
};

// value is ell for ell-derived profiles, k otherwise.
CheckResult assumption_check(ProfileId id, const Int& value, int factor_digit_bound = 24);

// ---- real place --------------------------------------------------------------
struct RealWitness {
    bool exact = false;
    AffinePoint point;    // valid when exact
    std::string pattern;  // variable pattern of the one-dimensional reduction
    Rat lo, hi;           // bisection bracket (width <= 2^-20) when not exact
};

RealWitness real_witness(const Surface& s);

// ---- finite places -----------------------------------------------------------

// Lexicographically first Newton-certified residue triple mod p^depth, or nullopt.
// The scan order makes the witness G-canonical (lex-minimal in its orbit).
std::optional<ResidueWitness> local_witness(const Surface& s, long long p, int depth);

struct PrimeEntry {
    long long p = 0;
    bool found = false;
    ResidueWitness witness;
    int searched_depth = 0;
};

struct LocalSolvabilityReport {
    Surface surface{FamilyId::F1, 0};
    long long prime_bound = 0;
    RealWitness real;
    bool real_ok = false;
    std::vector<PrimeEntry> primes;
    std::vector<long long> failures;  // primes <= B with no witness at max searched depth
    bool solvable_up_to_bound = false;
    std::optional<ProfileId> profile;
    bool profile_pass = false;
    std::string tail_note;  // coverage statement for p > B
};

// Witnesses for every p <= B plus the real place; primes beyond B are covered by
// the assumption profile certificate when one is supplied and passes.
LocalSolvabilityReport everywhere_locally_solvable(const Surface& s, long long B,
                                                   std::optional<ProfileId> prof = std::nullopt,
                                                   int depth_cap = 6);

// depth at which a scan of (p^d)^3 residue triples stays within budget
int max_scan_depth(long long p, int requested_cap);

}  // namespace mk3
