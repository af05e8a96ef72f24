#include <doctest.h>

#include "census.hpp"

#include <cstdio>
#include <fstream>

using namespace mk3;

TEST_CASE("assumption-I density approaches the congruence product") {
    auto s = admissible_count(ProfileId::assumption1, 10000, false);
    double predicted = (1.0 / 8) * (2.0 / 3) * (4.0 / 5) * (6.0 / 7);
    CHECK(s.predicted_congruence_density == doctest::Approx(predicted));
    double ratio = s.ladder.back().count_over_M;
    CHECK(ratio == doctest::Approx(predicted).epsilon(0.10));
    // monotone in M
    for (size_t i = 1; i < s.ladder.size(); ++i) CHECK(s.ladder[i].count >= s.ladder[i - 1].count);
}

TEST_CASE("first admissible parameters per theorem profile") {
    // smallest prime ell for thm45 is 191 (so nothing fits below k = 656658)
    auto f2 = admissible_count(ProfileId::thm45, 1000, true);
    CHECK(f2.count == 0);
    auto f2big = admissible_count(ProfileId::thm45, 700000, true);
    CHECK(f2big.count == 1);

    // thm44: strict primality excludes ell = 1; relaxed counts it
    auto strict = admissible_count(ProfileId::thm44, 17, true);
    CHECK(strict.count == 0);
    auto relaxed = admissible_count(ProfileId::thm44, 17, false);
    CHECK(relaxed.count == 1);

    // empty residue set at desk scale: no admissible ell below the first example
    auto none = admissible_count(ProfileId::thm45, 10, false);
    CHECK(none.count == 0);

    // thm46: the first admissible ell (prime or not) is 241
    auto f3 = admissible_count(ProfileId::thm46, 392047, true);
    CHECK(f3.count == 1);
    auto f3below = admissible_count(ProfileId::thm46, 392046, true);
    CHECK(f3below.count == 0);
}

TEST_CASE("hasse failure census includes the worked examples") {
    auto c = hasse_failure_census(FamilyId::F1, 20, 50, 5, false);
    REQUIRE(c.rows.size() >= 1);
    bool has17 = false;
    for (auto& r : c.rows) {
        CHECK(r.k == profile_k(ProfileId::thm44, r.ell));
        if (r.k == Int(-17)) {
            has17 = true;
            CHECK(r.solvable);
            CHECK(r.obstructed);
            CHECK_FALSE(r.inconclusive);
        }
    }
    CHECK(has17);
    CHECK(c.obstructed_count >= 1);
}

TEST_CASE("csv artifact") {
    auto c = hasse_failure_census(FamilyId::F1, 20, 50, 5, false);
    std::string path = "census_test_out.csv";
    write_census_csv(c, path);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "family,ell,k,solvable,obstructed,inconclusive");
    std::string row;
    REQUIRE(std::getline(in, row));
    CHECK(row.find("f1,1,-17,1,1,0") == 0);
    in.close();
    std::remove(path.c_str());
}

TEST_CASE("ladder diagnostics are present and bounded") {
    auto s = admissible_count(ProfileId::thm44, 100000, true);
    REQUIRE_FALSE(s.ladder.empty());
    for (auto& lp : s.ladder) {
        CHECK(lp.count_logM_sqrtM >= 0.0);
        CHECK(lp.count_logM_sqrtM <= 2.0);
    }
}

TEST_CASE("M guard") {
    CHECK_THROWS_AS(admissible_count(ProfileId::assumption1, 5, false), std::invalid_argument);
}
