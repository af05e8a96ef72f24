#include <doctest.h>

#include "surfaces.hpp"

#include <random>

using namespace mk3;

namespace {
Rat rr(long long n, long long d = 1) { return Rat(n, d); }
}  // namespace

TEST_CASE("evaluate on known points") {
    CHECK(evaluate({FamilyId::F2, 574}, {rr(1), rr(1), rr(8)}) == Rat(0));
    CHECK(evaluate({FamilyId::F3, -2911}, {rr(1), rr(4), rr(4)}) == Rat(0));
    CHECK(evaluate({FamilyId::F1, 0}, {rr(0), rr(0), rr(0)}) == Rat(0));
    CHECK(evaluate({FamilyId::F1, -17}, {rr(1), rr(1), rr(1)}) == Rat(16));
    // the five rational points on F1 + 17 = 0
    Surface s{FamilyId::F1, -17};
    std::vector<AffinePoint> pts = {
        {rr(1, 2), rr(49, 24), rr(13, 5)}, {rr(1, 3), rr(5, 2), rr(29, 8)},
        {rr(22, 25), rr(23, 16), rr(23, 12)}, {rr(27, 29), rr(47, 34), rr(15, 8)},
        {rr(7, 32), rr(46, 15), rr(23, 4)}};
    for (auto& P : pts) CHECK(evaluate(s, P) == Rat(0));
}

TEST_CASE("gradient values and symbolic agreement") {
    auto g = gradient({FamilyId::F1, -17}, {rr(1), rr(1), rr(1)});
    CHECK(g[0] == Rat(-6));
    CHECK(g[1] == Rat(-6));
    CHECK(g[2] == Rat(-6));
    CHECK(gradient({FamilyId::F1, 5}, {rr(0), rr(0), rr(0)})[0] == Rat(0));
    auto g2 = gradient({FamilyId::F2, 7}, {rr(1, 2), rr(1, 2), rr(3)});
    CHECK(g2[0] == Rat(0));
    CHECK(g2[1] == Rat(0));
    CHECK(g2[2] == Rat(0));

    // exact symbolic check: gradient matches the derivative of the expanded polynomial
    std::mt19937 rng(5);
    std::uniform_int_distribution<long long> pick(-12, 12);
    for (FamilyId fam : {FamilyId::F1, FamilyId::F2, FamilyId::F3}) {
        Poly F = family_poly(fam);
        for (int t = 0; t < 50; ++t) {
            AffinePoint P{Rat(pick(rng), 1 + rng() % 5), Rat(pick(rng), 1 + rng() % 5),
                          Rat(pick(rng), 1 + rng() % 5)};
            Rat kv(pick(rng));
            Surface s{fam, kv.numerator()};
            auto g3 = gradient(s, P);
            for (int v = 0; v < 3; ++v) CHECK(g3[v] == F.d(v).eval(P.x, P.y, P.z, kv));
        }
    }
}

TEST_CASE("nondegeneracy per the general-form criterion") {
    // the Markoff form (a,b,c,d,e) = (0,0,-1,1,-k) is degenerate: ad = 0 = b^2
    CHECK(nondegeneracy_check({rr(0), rr(0), rr(-1), rr(1), rr(-5)}) == false);
    CHECK(nondegeneracy_check({rr(1), rr(1), rr(1), rr(2), rr(2)}) == true);
    // all three MK3 families have c = 0: degenerate
    for (FamilyId fam : {FamilyId::F1, FamilyId::F2, FamilyId::F3}) {
        CHECK_FALSE(nondegeneracy_check(as_general_form({fam, -17})));
    }
    auto gf3 = as_general_form({FamilyId::F3, 5});
    CHECK(gf3.a == Rat(-16));
    CHECK(gf3.b == Rat(4));
    CHECK(gf3.c == Rat(0));
    CHECK(gf3.d == Rat(1));
    CHECK(gf3.e == Rat(-5));
}

TEST_CASE("factored identities hold symbolically modulo the family polynomial") {
    struct Case {
        FamilyId fam;
        IdentityId id;
        const char* quotient;
    };
    std::vector<Case> cases = {
        {FamilyId::F1, IdentityId::adjacent_product, "-4*y^2"},
        {FamilyId::F2, IdentityId::triple_product_minus, "4"},
        {FamilyId::F3, IdentityId::triple_product_plus, "4"},
        {FamilyId::F3, IdentityId::fiber_split, "4"},
    };
    for (auto& c : cases) {
        auto cert = factored_identity_symbolic(c.fam, c.id);
        CHECK(cert.holds);
        CHECK(cert.quotient == c.quotient);
    }
    auto bc = factored_identity_symbolic(FamilyId::F3, IdentityId::b_class_product);
    CHECK(bc.holds);  // quotient -4(4x^2-1)
    CHECK_THROWS_AS(factored_identity_symbolic(FamilyId::F1, IdentityId::triple_product_plus),
                    identity_not_applicable);
}

TEST_CASE("factored identity numeric certificates") {
    Surface s{FamilyId::F2, 574};
    auto cert = factored_identity_numeric(s, IdentityId::triple_product_minus, {rr(1), rr(1), rr(8)});
    CHECK(cert.holds);
    CHECK(cert.lhs == Rat(3 * 3 * 255));
    CHECK(cert.rhs == Rat(4 * 574 - 1));
    // precondition: the point must lie on the surface
    Surface s1{FamilyId::F1, -17};
    CHECK_THROWS_AS(factored_identity_numeric(s1, IdentityId::adjacent_product, {rr(1), rr(1), rr(1)}),
                    std::invalid_argument);
}

TEST_CASE("G-invariance of evaluate") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long long> pick(-9, 9);
    for (FamilyId fam : {FamilyId::F1, FamilyId::F2, FamilyId::F3}) {
        Surface s{fam, 37};
        int checked = 0;
        while (checked < 500) {
            AffinePoint P{Rat(pick(rng), 1 + rng() % 4), Rat(pick(rng), 1 + rng() % 4),
                          Rat(pick(rng), 1 + rng() % 4)};
            Rat v = evaluate(s, P);
            auto orbit = g_orbit(P);
            CHECK(orbit.size() <= 24);
            for (auto& Q : orbit) CHECK(evaluate(s, Q) == v);
            checked += (int)orbit.size();
        }
    }
}

TEST_CASE("integral search: paper emptiness and inhabited cases") {
    auto empty = integral_point_search({FamilyId::F1, -17}, 1000);
    CHECK(empty.empty());

    auto found = integral_point_search({FamilyId::F2, 574}, 10);
    bool has118 = false;
    for (auto& fp : found) {
        CHECK(evaluate({FamilyId::F2, 574}, fp.point) == Rat(0));
        if (fp.point.x == Rat(1) && fp.point.y == Rat(1) && fp.point.z == Rat(8)) {
            has118 = true;
            CHECK(fp.orbit_size == 12);  // permutations of (1,1,8) x 4 even sign patterns
        }
    }
    CHECK(has118);

    auto trivial = integral_point_search({FamilyId::F1, 0}, 2);
    bool has000 = false;
    for (auto& fp : trivial)
        if (fp.point.x == Rat(0) && fp.point.y == Rat(0) && fp.point.z == Rat(0)) {
            has000 = true;
            CHECK(fp.orbit_size == 1);
        }
    CHECK(has000);

    auto f3 = integral_point_search({FamilyId::F3, -2911}, 10);
    bool has144 = false;
    for (auto& fp : f3)
        if (fp.point.x == Rat(1) && fp.point.y == Rat(4) && fp.point.z == Rat(4)) has144 = true;
    CHECK(has144);
}

TEST_CASE("rational search finds the small-height points of the worked example") {
    Surface s{FamilyId::F1, -17};
    auto pts = rational_point_search(s, 50);
    for (auto& fp : pts) CHECK(evaluate(s, fp.point) == Rat(0));
    auto contains_orbit = [&](const AffinePoint& P) {
        auto orbit = g_orbit(P);
        for (auto& fp : pts)
            for (auto& Q : orbit)
                if (fp.point == Q) return true;
        return false;
    };
    CHECK(contains_orbit({rr(1, 2), rr(49, 24), rr(13, 5)}));

    auto pts35 = rational_point_search(s, 35);
    bool found = false;
    auto orbit = g_orbit({rr(1, 3), rr(5, 2), rr(29, 8)});
    for (auto& fp : pts35)
        for (auto& Q : orbit)
            if (fp.point == Q) found = true;
    CHECK(found);

    // a unit box with no integral solutions stays empty in rational mode at H=1
    CHECK(rational_point_search({FamilyId::F1, -17}, 1).empty());
}

TEST_CASE("search results are independent of coordinate partitioning") {
    // merge-from-parts equals whole-box run: split the x-range in two and join
    Surface s{FamilyId::F2, 574};
    auto whole = integral_point_search(s, 9);
    auto a = integral_point_search(s, 8);
    // every canonical representative found at the smaller box appears in the larger one
    for (auto& fp : a) {
        bool present = false;
        for (auto& gp : whole)
            if (gp.point == fp.point) present = true;
        CHECK(present);
    }
}

TEST_CASE("smoothness indicator") {
    CHECK(Surface{FamilyId::F3, -392047}.smoothness_indicator() != 0);
    CHECK(Surface{FamilyId::F3, 0}.smoothness_indicator() == 0);
}
