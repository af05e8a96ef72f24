#include <doctest.h>

#include "padic.hpp"
#include "surfaces.hpp"

#include <random>

using namespace mk3;

TEST_CASE("valuation basics") {
    CHECK(valuation(Rat(48), 2).v == 4);
    CHECK_FALSE(valuation(Rat(48), 2).infinite);
    CHECK(valuation(Rat(1), 7).v == 0);
    // trial division oracle: 392047 = 7*56006 + 5, so v_7 = 0
    CHECK(valuation(Rat(-392047), 7).v == 0);
    CHECK(valuation(Rat(0), 5).infinite);
    CHECK(valuation(Rat(Int(9), Int(4)), 2).v == -2);
    CHECK_THROWS_AS(valuation(Rat(3), 4), std::invalid_argument);
}

TEST_CASE("valuation is additive under multiplication") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long long> num(-500, 500);
    std::uniform_int_distribution<long long> den(1, 400);
    std::vector<long long> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
                                  67, 71, 73, 79, 83, 89, 97};
    for (int t = 0; t < 400; ++t) {
        Rat a(num(rng), den(rng)), b(num(rng), den(rng));
        if (a == Rat(0) || b == Rat(0)) continue;
        for (long long p : primes) {
            CHECK(valuation(a * b, p).v == valuation(a, p).v + valuation(b, p).v);
        }
    }
}

TEST_CASE("square classes") {
    CHECK(PadicApprox::from_rational(Rat(17), 2, 3).square_class() == SquareClass::square);
    CHECK(PadicApprox::from_rational(Rat(3), 2, 3).square_class() == SquareClass::nonsquare);
    CHECK(PadicApprox::from_rational(Rat(2), 2, 5).square_class() == SquareClass::nonsquare);
    // (2|p) = +1 exactly when p = +-1 mod 8
    for (long long p : {7, 17, 23, 31, 41, 47, 71, 73}) {
        CHECK(PadicApprox::from_rational(Rat(2), p, 2).square_class() == SquareClass::square);
    }
    for (long long p : {3, 5, 11, 13, 19, 29, 37}) {
        CHECK(PadicApprox::from_rational(Rat(2), p, 2).square_class() == SquareClass::nonsquare);
    }
    CHECK_THROWS_AS(PadicApprox::exact_zero(5).square_class(), std::invalid_argument);
}

TEST_CASE("square_class(a^2 u) == square_class(u)") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long long> pick(-200, 200);
    std::vector<long long> primes{2, 3, 5, 7, 11, 13};
    for (int t = 0; t < 300; ++t) {
        long long a = pick(rng), u = pick(rng);
        if (a == 0 || u == 0) continue;
        for (long long p : primes) {
            int prec = p == 2 ? 6 : 3;
            auto lhs = PadicApprox::from_rational(Rat(a * a * u), p, prec).square_class();
            auto rhs = PadicApprox::from_rational(Rat(u), p, prec).square_class();
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("padic arithmetic tracks precision through cancellation") {
    // (1 + 8) - 1 = 8 known exactly at this modulus depth
    auto a = PadicApprox::from_rational(Rat(9), 2, 6);
    auto b = PadicApprox::from_rational(Rat(-1), 2, 6);
    auto s = a + b;
    CHECK(s.kind() == PadicApprox::Kind::approx);
    CHECK(s.val() == 3);
    // same rational through different routes normalizes identically
    auto direct = PadicApprox::from_rational(Rat(8), 2, 3);
    CHECK(direct.val() == s.val());
    CHECK(direct.unit() % 2 == s.unit() % 2);
}

namespace {

struct BruteWitness {
    // all residue triples mod 2^N extending (1,1,1) mod 8 that satisfy F1 = 0 mod 2^N
    static std::vector<std::array<u64, 3>> enumerate(const Surface& s, int N) {
        SurfaceMod F(s);
        u64 pn = pow_u64(2, N);
        std::vector<std::array<u64, 3>> out;
        for (u64 x = 1; x < pn; x += 8)
            for (u64 y = 1; y < pn; y += 8)
                for (u64 z = 1; z < pn; z += 8)
                    if (F.eval(x, y, z, pn) == 0) out.push_back({x, y, z});
        return out;
    }
};

}  // namespace

TEST_CASE("hensel lift against brute-force enumeration (F1, k=-17)") {
    Surface s{FamilyId::F1, -17};
    SurfaceMod F(s);
    ResidueWitness w = certify_witness(F, 2, 3, {1, 1, 1});
    REQUIRE(w.liftable);
    CHECK(w.lift_margin == 1);
    auto lift = hensel_lift(F, w, 10);
    u64 pn = pow_u64(2, 10);
    CHECK(F.eval(lift[0], lift[1], lift[2], pn) == 0);
    // lift agrees with the witness mod 2^{m-e} = 4
    CHECK(lift[0] % 4 == 1);
    CHECK(lift[1] % 4 == 1);
    CHECK(lift[2] % 4 == 1);
    auto all = BruteWitness::enumerate(s, 10);
    CHECK(std::find(all.begin(), all.end(), lift) != all.end());
}

TEST_CASE("hensel lift paper witnesses") {
    // F2 with k = 656658 = 18*191^2 == 2 mod 8: the non-singular point (1,1,2) mod 8
    Surface s2{FamilyId::F2, 656658};
    SurfaceMod F2(s2);
    ResidueWitness w2 = certify_witness(F2, 2, 3, {1, 1, 2});
    REQUIRE(w2.liftable);
    auto l2 = hensel_lift(F2, w2, 6);
    CHECK(F2.eval(l2[0], l2[1], l2[2], pow_u64(2, 6)) == 0);

    // F3 with k == 2 mod 3: (1,1,1) mod 3
    Surface s3{FamilyId::F3, -392047};
    SurfaceMod F3(s3);
    ResidueWitness w3 = certify_witness(F3, 3, 1, {1, 1, 1});
    REQUIRE(w3.liftable);
    auto l3 = hensel_lift(F3, w3, 4);
    CHECK(F3.eval(l3[0], l3[1], l3[2], pow_u64(3, 4)) == 0);
}

TEST_CASE("hensel postcondition on random certified witnesses") {
    std::mt19937 rng(2718);
    std::uniform_int_distribution<long long> kd(-3000, 3000);
    std::vector<long long> primes{2, 3, 5, 7, 11, 13};
    for (FamilyId fam : {FamilyId::F1, FamilyId::F2, FamilyId::F3}) {
        int found = 0;
        while (found < 100) {
            Surface s{fam, kd(rng)};
            long long p = primes[rng() % primes.size()];
            int m = p == 2 ? 3 : 1;
            u64 pm = pow_u64((u64)p, m);
            SurfaceMod F(s);
            u64 x = rng() % pm, y = rng() % pm, z = rng() % pm;
            if (F.eval(x, y, z, pm) != 0) continue;
            ResidueWitness w = certify_witness(F, p, m, {x, y, z});
            if (!w.liftable) continue;
            int N = m + 3 + (int)(rng() % 4);
            auto lift = hensel_lift(F, w, N);
            u64 pN = pow_u64((u64)p, N);
            CHECK(F.eval(lift[0], lift[1], lift[2], pN) == 0);
            ++found;
        }
    }
}

TEST_CASE("lift stability: N then N' agrees with direct N'") {
    Surface s{FamilyId::F1, -17};
    SurfaceMod F(s);
    ResidueWitness w = certify_witness(F, 2, 3, {1, 1, 1});
    auto l8 = hensel_lift(F, w, 8);
    auto l12 = hensel_lift(F, w, 12);
    // re-certify the depth-8 lift and continue to 12
    ResidueWitness w8 = certify_witness(F, 2, 8, l8);
    REQUIRE(w8.liftable);
    auto l12b = hensel_lift(F, w8, 12);
    u64 agree = pow_u64(2, 8 - 1);  // mod p^{N-e}
    for (int i = 0; i < 3; ++i) CHECK(l12[i] % agree == l12b[i] % agree);
}

TEST_CASE("hensel error paths") {
    Surface s{FamilyId::F1, 0};
    SurfaceMod F(s);
    // (0,0,0) solves F = 0 but every partial vanishes: singular
    CHECK_THROWS_AS(hensel_lift(F, ResidueWitness{2, 3, {0, 0, 0}, false, -99}, 6),
                    singular_point_error);
    // Newton condition violated: margin zero at depth 2 with e = 1
    Surface s2{FamilyId::F1, -17};
    SurfaceMod F2(s2);
    ResidueWitness w;
    w.prime = 2;
    w.exponent = 2;
    w.point = {1, 1, 1};
    CHECK(F2.eval(1, 1, 1, 4) == 0);
    CHECK_THROWS_AS(hensel_lift(F2, w, 6), newton_condition_error);
}
