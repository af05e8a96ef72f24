#include <doctest.h>

#include "frobenius.hpp"

using namespace mk3;

TEST_CASE("point counts over F_5, F_25, F_125") {
    CHECK(count_points(3, 5, 1) == 42);
    CHECK(count_points(3, 5, 2) == 1032);
    CHECK(count_points(3, 5, 3) == 16122);
}

TEST_CASE("counts are invariant under the fiber-axis relabeling") {
    for (int axis : {0, 1, 2}) {
        CHECK(count_points(3, 5, 1, FamilyId::F3, axis) == 42);
        CHECK(count_points(3, 5, 2, FamilyId::F3, axis) == 1032);
    }
}

TEST_CASE("subfield points inject") {
    CHECK(count_points(3, 5, 2) >= count_points(3, 5, 1));
    CHECK(count_points(3, 5, 3) >= count_points(3, 5, 1));
}

TEST_CASE("singular reduction raises with the offending point") {
    // k == 0 mod 5 kills the smoothness indicator: ([0:1],[0:1],[0:1]) is singular
    CHECK_THROWS_AS(count_points(0, 5, 1), singular_reduction);
}

TEST_CASE("ceiling enforcement") {
    CHECK_THROWS_AS(count_points(3, 5, 4), std::invalid_argument);
}

TEST_CASE("quotient traces from the paper counts") {
    CountTable t;
    t.p = 5;
    t.counts = {{1, 42}, {2, 1032}, {3, 16122}};
    auto tr = quotient_traces(t);
    REQUIRE(tr.size() == 3);
    CHECK(tr[0] == Rat(-4, 5));
    // plugging the paper count into the displayed formula gives -44/25
    CHECK(tr[1] == Rat(Int(1032), Int(25)) - Rat(25) - Rat(Int(1), Int(25)) - Rat(18));
    CHECK(tr[1] == Rat(-44, 25));
    CHECK(tr[2] == Rat(-4, 125));
    // all-zero hypothetical counts: traces are -p^n - p^{-n} - t_n exactly
    CountTable z;
    z.p = 5;
    z.counts = {{1, 0}, {2, 0}};
    auto tz = quotient_traces(z);
    CHECK(tz[0] == Rat(-5) - Rat(Int(1), Int(5)) - Rat(4));
    CHECK(tz[1] == Rat(-25) - Rat(Int(1), Int(25)) - Rat(18));
}

TEST_CASE("newton reconstruction of the characteristic polynomial") {
    std::vector<Rat> traces = {Rat(-4, 5), Rat(-44, 25), Rat(-4, 125)};
    auto cp = newton_charpoly(traces);
    CHECK(cp.quotient == std::vector<Rat>{Rat(1), Rat(4, 5), Rat(6, 5), Rat(4, 5), Rat(1)});
    // palindromic with constant +1
    CHECK(cp.quotient[0] == cp.quotient[4]);
    CHECK(cp.quotient[1] == cp.quotient[3]);
    // degenerate traces: middle coefficient zero
    CHECK_THROWS_AS(newton_charpoly({Rat(0), Rat(0)}), sign_undetermined);
    // inconsistent third trace rejected
    CHECK_THROWS_AS(newton_charpoly({Rat(-4, 5), Rat(-44, 25), Rat(1)}), trace_inconsistent);
}

TEST_CASE("trace round trip") {
    std::vector<Rat> traces = {Rat(-4, 5), Rat(-44, 25)};
    auto cp = newton_charpoly(traces);
    // p1 = e1, p2 = e1 p1 - 2 e2
    Rat e1 = -cp.quotient[1], e2 = cp.quotient[2];
    CHECK(e1 == traces[0]);
    CHECK(e1 * traces[0] - Rat(2) * e2 == traces[1]);
}

TEST_CASE("roots of unity counting") {
    std::vector<Rat> traces = {Rat(-4, 5), Rat(-44, 25), Rat(-4, 125)};
    auto cp = newton_charpoly(traces);
    RatPoly quot = {cp.quotient[4], cp.quotient[3], cp.quotient[2], cp.quotient[1], cp.quotient[0]};
    CHECK(count_unity_eigenvalues(quot) == 0);
    CHECK(count_unity_eigenvalues(full_charpoly(cp)) == 18);
    // (t-1)^4: ascending (t-1)^4 = 1 -4t +6t^2 -4t^3 + t^4
    RatPoly tm14 = {Rat(1), Rat(-4), Rat(6), Rat(-4), Rat(1)};
    CHECK(count_unity_eigenvalues(tm14) == 4);
    RatPoly phi12 = cyclotomic(12);
    CHECK(count_unity_eigenvalues(phi12) == 4);
}

TEST_CASE("full verification bundle with Lefschetz sanity") {
    auto rep = frobenius_verify(5, 3, 3);
    CHECK(rep.lefschetz_ok);
    CHECK(rep.unity_roots_full == 18);
    CHECK(rep.unity_roots_quotient == 0);
}

TEST_CASE("polynomial helpers") {
    RatPoly a = {Rat(-1), Rat(1)};        // t - 1
    RatPoly b = {Rat(1), Rat(1)};         // t + 1
    RatPoly prod = poly_mul(a, b);        // t^2 - 1
    CHECK(prod == RatPoly{Rat(-1), Rat(0), Rat(1)});
    auto [q, r] = poly_divmod(prod, a);
    CHECK(q == b);
    CHECK(r == RatPoly{Rat(0)});
    CHECK(poly_gcd(prod, a) == RatPoly{Rat(-1), Rat(1)});
}
