#pragma once

#include "gf.hpp"
#include "surfaces.hpp"

namespace mk3 {

struct CountTable {
    long long p = 5;
    std::vector<std::pair<int, long long>> counts;  // (n, #W(F_{p^n}))
};

struct singular_reduction : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact number of F_{p^n}-points of the projective (2,2,2) surface in (P^1)^3
// (F3 family by default). fiber_axis permutes which coordinate indexes the outer
// fiber loop; counts are independent of it.
long long count_points(long long k_residue, long long p, int n, FamilyId fam = FamilyId::F3,
                       int fiber_axis = 0, long long ceiling = 125);

CountTable count_table(long long k_residue, long long p, int max_n, FamilyId fam = FamilyId::F3);

// (count/p^n - p^n - p^{-n} - t_n) with t_n = 18 for even n, 4 for odd n.
std::vector<Rat> quotient_traces(const CountTable& counts);

struct CharPoly {
    std::vector<Rat> quotient;  // degree-4 monic, coefficients of t^4, t^3, ..., t^0
    int exp_t_minus_1 = 11;
    int exp_t_plus_1 = 7;
};

struct sign_undetermined : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct trace_inconsistent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Newton identities on the first two traces; the nonzero middle coefficient forces
// functional-equation sign +1, which completes the palindrome. A third trace, when
// present, is consistency-checked.
CharPoly newton_charpoly(const std::vector<Rat>& traces);

// ---- polynomial utilities over Q (ascending coefficients) ----
using RatPoly = std::vector<Rat>;
RatPoly poly_mul(const RatPoly& a, const RatPoly& b);
std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& a, const RatPoly& b);
RatPoly poly_gcd(RatPoly a, RatPoly b);
RatPoly cyclotomic(int m);

// Total multiplicity of roots of unity of an exact rational polynomial, by repeated
// exact division by the cyclotomics Phi_m with phi(m) <= deg.
int count_unity_eigenvalues(const RatPoly& f);

// full characteristic polynomial (t-1)^11 (t+1)^7 * quotient, ascending coefficients
RatPoly full_charpoly(const CharPoly& cp);

struct FrobeniusReport {
    CountTable table;
    std::vector<Rat> traces;
    CharPoly charpoly;
    int unity_roots_full = 0;   // expected 18
    int unity_roots_quotient = 0;  // expected 0
    bool lefschetz_ok = false;  // N_n == 1 + p^{2n} + p^n (t_n + tau_n) for all n
};

FrobeniusReport frobenius_verify(long long p, long long kmod, int max_n);

}  // namespace mk3
