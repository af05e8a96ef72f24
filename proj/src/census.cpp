#include "census.hpp"

#include <cmath>
#include <fstream>

namespace mk3 {

namespace {

long long ell_bound(ProfileId prof, long long M) {
    // largest ell >= 0 with |k(ell)| <= M (ignoring integrality of the formula)
    auto ok = [&](long long l) -> bool {
        Int L(l);
        switch (prof) {
            case ProfileId::thm44: return 1 + 16 * L * L <= M;
            case ProfileId::thm45: return 18 * L * L <= M;
            case ProfileId::thm46: return 1 + 27 * L * L <= 4 * Int(M);
            case ProfileId::prop51:
            case ProfileId::prop52: return L * (L + 1) <= M;
            default: throw std::invalid_argument("ell_bound: k-profile has no ell");
        }
    };
    long long lo = 0, hi = 1;
    while (ok(hi)) hi *= 2;
    while (lo < hi) {
        long long mid = (lo + hi + 1) / 2;
        if (ok(mid)) lo = mid;
        else hi = mid - 1;
    }
    return lo;
}

bool admissible_ell(ProfileId prof, long long l, bool prime_ell) {
    if (prime_ell && !is_prime(Int(l))) return false;
    try {
        profile_k(prof, Int(l));
    } catch (const std::invalid_argument&) {
        return false;
    }
    return assumption_check(prof, Int(l)).pass;
}

long long count_upto(ProfileId prof, long long M, bool prime_ell) {
    const AssumptionProfile& pd = profile_data(prof);
    long long count = 0;
    if (pd.ell_derived) {
        long long bound = ell_bound(prof, M);
        for (long long l = 0; l <= bound; ++l)
            if (admissible_ell(prof, l, prime_ell)) ++count;
        return count;
    }
    for (long long k = -M; k <= M; ++k)
        if (assumption_check(prof, Int(k)).pass) ++count;
    return count;
}

}  // namespace

CensusSummary admissible_count(ProfileId prof, long long M, bool prime_ell) {
    if (M < 10) throw std::invalid_argument("admissible_count: M >= 10 required");
    CensusSummary s;
    s.profile = prof;
    s.prime_ell = prime_ell;
    s.M = M;
    s.predicted_congruence_density = 1.0;
    for (auto& c : profile_data(prof).congruences)
        s.predicted_congruence_density *= (double)c.allowed.size() / (double)c.modulus;
    for (long long m : {M / 8, M / 4, M / 2, M}) {
        if (m < 10) continue;
        long long cnt = count_upto(prof, m, prime_ell);
        LadderPoint lp;
        lp.M = m;
        lp.count = cnt;
        lp.count_over_M = (double)cnt / (double)(2 * m + 1);
        lp.count_logM_sqrtM = (double)cnt * std::log((double)m) / std::sqrt((double)m);
        s.ladder.push_back(lp);
    }
    s.count = s.ladder.empty() ? 0 : s.ladder.back().count;
    return s;
}

HasseCensus hasse_failure_census(FamilyId fam, long long M, long long B, int depth, bool prime_ell,
                                 long long row_budget) {
    HasseCensus out;
    out.family = fam;
    out.profile = default_obstruction_profile(fam);
    out.M = M;
    out.B = B;
    out.depth = depth;
    long long bound = ell_bound(out.profile, M);
    for (long long l = 0; l <= bound; ++l) {
        if (!admissible_ell(out.profile, l, prime_ell)) continue;
        if ((long long)out.rows.size() >= row_budget) {
            out.row_budget_hit = true;
            break;
        }
        CensusRow row;
        row.family = fam;
        row.ell = l;
        row.k = profile_k(out.profile, Int(l));
        row.assumption_pass = true;
        Surface s{fam, row.k};
        auto classes = obstruction_classes(out.profile, row.k);
        auto rep = obstruction_verdict(s, classes, B, depth, out.profile, Int(l));
        row.solvable = rep.solvability.solvable_up_to_bound;
        row.obstructed = rep.verdict == Verdict::obstructed;
        row.inconclusive = rep.verdict == Verdict::inconclusive;
        if (row.solvable && row.obstructed) ++out.obstructed_count;
        if (row.solvable) ++out.solvable_count;
        if (row.inconclusive) ++out.inconclusive_count;
        out.rows.push_back(row);
    }
    std::sort(out.rows.begin(), out.rows.end(), [](const CensusRow& a, const CensusRow& b) {
        Int ka = a.k < 0 ? -a.k : a.k, kb = b.k < 0 ? -b.k : b.k;
        return ka < kb;
    });
    return out;
}

void write_census_csv(const HasseCensus& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "family,ell,k,solvable,obstructed,inconclusive\n";
    for (auto& r : c.rows)
        out << family_name(r.family) << "," << r.ell.str() << "," << r.k.str() << ","
            << (r.solvable ? 1 : 0) << "," << (r.obstructed ? 1 : 0) << "," << (r.inconclusive ? 1 : 0)
            << "\n";
}

}  // namespace mk3
