#pragma once

#include "brauer.hpp"

namespace mk3 {

struct CensusRow {
    FamilyId family;
    Int ell;
    Int k;
    bool assumption_pass = false;
    bool solvable = false;
    bool obstructed = false;
    bool inconclusive = false;
};

struct LadderPoint {
    long long M;
    long long count;
    double count_over_M;       // count / M
    double count_logM_sqrtM;   // count * log(M) / sqrt(M)
};

struct CensusSummary {
    ProfileId profile;
    bool prime_ell = false;
    long long M = 0;
    long long count = 0;
    double predicted_congruence_density = 0;  // product of allowed/modulus over congruences
    std::vector<LadderPoint> ladder;          // M/8, M/4, M/2, M
};

// Exact sieve count of admissible parameters with |k| <= M.
// k-profiles count k in [-M, M]; ell-derived profiles count ell >= 0 with |k(ell)| <= M.
CensusSummary admissible_count(ProfileId prof, long long M, bool prime_ell);

struct HasseCensus {
    FamilyId family;
    ProfileId profile;
    long long M = 0, B = 0;
    int depth = 0;
    std::vector<CensusRow> rows;
    long long solvable_count = 0, obstructed_count = 0, inconclusive_count = 0;
    bool row_budget_hit = false;
};

// Runs solvability + obstruction for every admissible ell with |k| <= M
// (prime-ell mode optional), up to the row budget.
HasseCensus hasse_failure_census(FamilyId fam, long long M, long long B, int depth,
                                 bool prime_ell = false, long long row_budget = 500);

// header: family,ell,k,solvable,obstructed,inconclusive
void write_census_csv(const HasseCensus& c, const std::string& path);

}  // namespace mk3
