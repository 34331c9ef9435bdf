#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <stdexcept>
#include <vector>

#include "sqfree/primes.hpp"
#include "sqfree/sieve.hpp"
#include "support/naive.hpp"

using namespace sqfree;

namespace {

bool is_prime_naive(u64 n) {
    if (n < 2) return false;
    for (u64 f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("primes_up_to") {
    CHECK(primes_up_to(1).primes.empty());
    CHECK(primes_up_to(2).primes == std::vector<u64>{2});
    CHECK(primes_up_to(10).primes == std::vector<u64>{2, 3, 5, 7});
    CHECK(primes_up_to(10'000).size() == 1229);

    PrimeTable table = primes_up_to(1000);
    std::vector<u64> expected;
    for (u64 n = 2; n <= 1000; ++n)
        if (is_prime_naive(n)) expected.push_back(n);
    CHECK(table.primes == expected);

    CHECK_THROWS_AS(primes_up_to(0), std::invalid_argument);
    CHECK_THROWS_AS(primes_up_to(kMaxPrimeLimit + 1), std::overflow_error);
}

TEST_CASE("smallest factor table") {
    SmallestFactorTable table(1000);
    CHECK(table.limit() == 1000);
    CHECK(table.factor(1).empty());
    CHECK(table.factor(12) == std::vector<std::pair<u32, u32>>{{2, 2}, {3, 1}});
    CHECK(table.factor(97) == std::vector<std::pair<u32, u32>>{{97, 1}});
    CHECK(table.omega(1) == 0);
    CHECK(table.omega(12) == 2);
    CHECK(table.omega(30) == 3);
    CHECK(table.is_squarefree(1));
    CHECK(table.is_squarefree(30));
    CHECK_FALSE(table.is_squarefree(12));
    CHECK_FALSE(table.is_squarefree(49));

    std::vector<u32> divs = table.divisors(12);
    CHECK(std::set<u32>(divs.begin(), divs.end()) == std::set<u32>{1, 2, 3, 4, 6, 12});
    CHECK(table.divisors(1) == std::vector<u32>{1});
}

TEST_CASE("squarefree_mask small windows") {
    // 1^2+1 .. 10^2+1: only 7^2+1 = 50 = 2 * 5^2 fails
    SquarefreeMask mask = squarefree_mask(1, 1, 10);
    for (u64 i = 0; i < 10; ++i) CHECK(mask.test(i) == (i != 6));
    CHECK(mask.count() == 9);

    // shift 3: n=1 gives 4, n=3 gives 12; n=2 gives 7, n=4 gives 19
    SquarefreeMask m3 = squarefree_mask(3, 1, 4);
    CHECK_FALSE(m3.test(0));
    CHECK(m3.test(1));
    CHECK_FALSE(m3.test(2));
    CHECK(m3.test(3));

    SquarefreeMask empty = squarefree_mask(2, 1, 0);
    CHECK(empty.bits.empty());
    CHECK(empty.count() == 0);
}

TEST_CASE("squarefree_mask matches naive in shifted windows") {
    for (u32 shift = 1; shift <= 3; ++shift) {
        for (u64 start : {u64{1}, u64{17}, u64{1000}, u64{99'990}}) {
            SquarefreeMask mask = squarefree_mask(shift, start, 70);
            for (u64 i = 0; i < 70; ++i) {
                u64 n = start + i;
                REQUIRE(mask.test(i) == naive::squarefree(n * n + shift));
            }
        }
    }
}

TEST_CASE("single and pair counts at small X") {
    CHECK(count_singles(10, 1) == 9);
    CHECK(count_singles(10, 2) == 8);
    CHECK(count_singles(10, 3) == 5);
    CHECK(count_singles(1, 3) == 0);  // 1^2+3 = 4
    CHECK(count_singles(1, 1) == 1);

    CHECK(count_pairs(10, 1, 2) == 7);
    CHECK(count_pairs(10, 1, 3) == 5);
    CHECK(count_pairs(10, 2, 3) == 4);
    CHECK(count_pairs(1, 2, 3) == 0);

    CountReport rep = count_triple(10);
    CHECK(rep.triple == 4);
    CHECK(count_triple(2).triple == 1);  // only n=2
}

TEST_CASE("count_triple matches naive oracle at X = 1000") {
    naive::Counts expected = naive::count_up_to(1000);
    CountReport rep = count_triple(1000);
    for (int i = 0; i < 3; ++i) {
        CHECK(rep.singles[i] == expected.singles[i]);
        CHECK(rep.pairs[i] == expected.pairs[i]);
    }
    CHECK(rep.triple == expected.triple);
    CHECK(rep.singles[0] == 895);
    CHECK(rep.singles[1] == 749);
    CHECK(rep.singles[2] == 464);
    CHECK(rep.triple == 313);
}

TEST_CASE("segment length does not change any count") {
    CountReport base = count_triple(5000);
    for (u64 seg : {u64{64}, u64{4096}}) {
        SieveOptions opts;
        opts.segment_length = seg;
        CountReport rep = count_triple(5000, opts);
        for (int i = 0; i < 3; ++i) {
            CHECK(rep.singles[i] == base.singles[i]);
            CHECK(rep.pairs[i] == base.pairs[i]);
        }
        CHECK(rep.triple == base.triple);
    }
    CHECK(base.triple == 1579);
}

TEST_CASE("thread count does not change any count") {
    SieveOptions one;
    one.threads = 1;
    one.segment_length = 1 << 12;
    SieveOptions four;
    four.threads = 4;
    four.segment_length = 1 << 12;
    CountReport a = count_triple(100'000, one);
    CountReport b = count_triple(100'000, four);
    for (int i = 0; i < 3; ++i) {
        CHECK(a.singles[i] == b.singles[i]);
        CHECK(a.pairs[i] == b.pairs[i]);
    }
    CHECK(a.triple == b.triple);
    CHECK(count_singles(100'000, 2, four) == a.singles[1]);
    CHECK(count_pairs(100'000, 1, 3, four) == a.pairs[1]);
}

TEST_CASE("shift 3 kills every odd n") {
    // odd n have n^2 == 1 (mod 4), so 4 | n^2+3: only even n can survive
    SquarefreeMask mask = squarefree_mask(3, 1, 1000);
    for (u64 i = 0; i < 1000; ++i) {
        u64 n = 1 + i;
        if (n % 2 == 1) REQUIRE_FALSE(mask.test(i));
    }
    CHECK(count_singles(1000, 3) == 464);
}

TEST_CASE("sieve range validation") {
    CHECK_THROWS_AS(count_triple(0), std::invalid_argument);
    CHECK_THROWS_AS(count_singles(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(count_pairs(10, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(count_pairs(10, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(squarefree_mask(1, 0, 5), std::invalid_argument);
    CHECK_THROWS_AS(squarefree_mask(4, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(squarefree_mask(1, kMaxSieveX, 2), std::overflow_error);
    CHECK_THROWS_AS(count_triple(kMaxSieveX + 1), std::overflow_error);
}
