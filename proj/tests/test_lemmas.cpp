#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "sqfree/lemmas.hpp"
#include "sqfree/modarith.hpp"

using namespace sqfree;

namespace {

std::string value_of(const LemmaReport& rep, const std::string& key) {
    for (const auto& [k, v] : rep.values)
        if (k == key) return v;
    return "<missing " + key + ">";
}

}  // namespace

TEST_CASE("sawtooth b1") {
    CHECK(b1(Rational(0)) == Rational(-1, 2));
    CHECK(b1(Rational(3, 4)) == Rational(1, 4));
    CHECK(b1(Rational(-4, 9)) == Rational(1, 18));
    CHECK(b1(Rational(5, 2)) == Rational(0));
    CHECK(b1(Rational(7)) == Rational(-1, 2));
}

TEST_CASE("roots_mod_square_any matches the CRT path on squarefree d") {
    for (u64 d = 1; d <= 40; ++d) {
        bool squarefree = true;
        for (u64 p = 2; p * p <= d; ++p)
            if (d % (p * p) == 0) squarefree = false;
        if (!squarefree) continue;
        for (u32 shift = 1; shift <= 3; ++shift)
            REQUIRE(roots_mod_square_any(shift, d) == roots_mod_square(shift, d).roots);
    }
    CHECK(roots_mod_square_any(3, 4).empty());  // x^2 == 13 (mod 16) unsolvable
    CHECK(roots_mod_square_any(1, 2).empty());
    CHECK(roots_mod_square_any(3, 2) == std::vector<u64>{1, 3});
    CHECK_THROWS_AS(roots_mod_square_any(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(roots_mod_square_any(1, kMaxBruteforceRootD + 1), std::overflow_error);
}

TEST_CASE("b_sum exact values") {
    BSumResult trivial = b_sum(1, 1, 7);
    CHECK(trivial.value == Rational(0));
    CHECK(trivial.root_terms == 1);

    BSumResult empty = b_sum(1, 2, 10);
    CHECK(empty.value == Rational(0));
    CHECK(empty.root_terms == 0);

    BSumResult block = b_sum(2, 3, 10);
    CHECK(block.value == Rational(-2, 9));
    CHECK(block.root_terms == 2);

    for (u32 shift = 1; shift <= 3; ++shift) {
        BSumResult r = b_sum(shift, 8, 200);
        CHECK(abs(r.value) <= Rational(r.root_terms));
    }

    CHECK_THROWS_AS(b_sum(1, 0, 5), std::invalid_argument);
    CHECK_THROWS_AS(b_sum(1, 5, 0), std::invalid_argument);
}

TEST_CASE("floor identity on chosen blocks") {
    LemmaReport a = floor_identity_check(2, 3, 10);
    REQUIRE(a.pass.has_value());
    CHECK(*a.pass);
    CHECK(value_of(a, "direct_count") == "2");
    CHECK(value_of(a, "floor_sum") == "2");
    CHECK(value_of(a, "b_sum") == "-2/9");

    LemmaReport b = floor_identity_check(1, 2, 10);
    CHECK(*b.pass);
    CHECK(value_of(b, "direct_count") == "0");

    LemmaReport c = floor_identity_check(3, 1, 1);
    CHECK(*c.pass);
    CHECK(value_of(c, "direct_count") == "1");

    for (u32 shift = 1; shift <= 3; ++shift)
        for (u64 d_low = 1; d_low <= 16; ++d_low)
            for (u64 x : {u64{10}, u64{100}})
                REQUIRE(*floor_identity_check(shift, d_low, x).pass);
}

TEST_CASE("two_omega identity") {
    LemmaReport small = two_omega_check(4);
    CHECK(*small.pass);
    CHECK(value_of(small, "sum_two_omega") == "7");

    CHECK(*two_omega_check(30).pass);
    CHECK(*two_omega_check(1000).pass);
    CHECK_THROWS_AS(two_omega_check(0), std::invalid_argument);
}

TEST_CASE("pell solution counts") {
    CHECK(pell_count(1, 2, 50) == 3);    // n = 1, 7, 41
    CHECK(pell_count(1, 3, 50) == 0);    // n^2 == -1 (mod 3) is impossible
    CHECK(pell_count(2, 1, 10) == 0);    // n^2 - d^2 = -2 has no solutions
    CHECK(pell_count(3, 1, 10) == 1);    // 1 - 4 = -3
    CHECK(pell_count(2, 3, 50) == 3);    // n = 1, 5, 19
    CHECK_THROWS_AS(pell_count(1, 0, 10), std::invalid_argument);
    CHECK_THROWS_AS(pell_count(1, 2, 0), std::invalid_argument);
}

TEST_CASE("four consecutive shifts always hit a multiple of 4") {
    LemmaReport rep = four_term_check(10'000);
    REQUIRE(rep.pass.has_value());
    CHECK(*rep.pass);
    CHECK(value_of(rep, "failures") == "0");
    CHECK(value_of(rep, "hit_at_shift_3") == "5000");
    CHECK(value_of(rep, "hit_at_shift_4") == "5000");
    CHECK_THROWS_AS(four_term_check(0), std::invalid_argument);
}

TEST_CASE("four-shift local factor vanishes") {
    LemmaReport rep = four_shift_factor_check();
    CHECK(*rep.pass);
    CHECK(value_of(rep, "roots_shift_1") == "0");
    CHECK(value_of(rep, "roots_shift_2") == "0");
    CHECK(value_of(rep, "roots_shift_3") == "2");
    CHECK(value_of(rep, "roots_shift_4") == "2");
    CHECK(value_of(rep, "sum") == "4");
    CHECK(value_of(rep, "local_factor") == "0");
}

TEST_CASE("lemma names") {
    CHECK(lemma_name(LemmaId::floor_identity) == "floor_identity");
    CHECK(lemma_name(LemmaId::two_omega) == "two_omega");
    CHECK(lemma_name(LemmaId::b_sum) == "b_sum");
    CHECK(lemma_name(LemmaId::pell_count) == "pell_count");
    CHECK(lemma_name(LemmaId::four_term) == "four_term");
    CHECK(lemma_name(LemmaId::four_shift_factor) == "four_shift_factor");
}
