#include "regain/bitstring.hpp"
#include "regain/dyadic.hpp"
#include "regain/finset.hpp"
#include "regain/pairing.hpp"
#include "regain/rate.hpp"
#include "regain/stream.hpp"

#include <doctest.h>

#include <random>

using namespace regain;

TEST_CASE("pairing formula values") {
    CHECK(pair(0, 0) == 0);
    CHECK(pair(1, 0) == 1);
    CHECK(pair(0, 1) == 2);
    CHECK(unpair(0) == std::pair<std::uint64_t, std::uint64_t>{0, 0});
    CHECK(unpair(2) == std::pair<std::uint64_t, std::uint64_t>{0, 1});
    // Exhaustive inversion of pair over m+n <= 4 pins unpair(5) = (0,2).
    for (std::uint64_t m = 0; m <= 4; ++m)
        for (std::uint64_t n = 0; m + n <= 4; ++n)
            if (pair(m, n) == 5)
                CHECK(std::pair{m, n} == std::pair<std::uint64_t, std::uint64_t>{0, 2});
    CHECK(unpair(5) == std::pair<std::uint64_t, std::uint64_t>{0, 2});
    CHECK(pair(1, 1) == 4);
}

TEST_CASE("pair and unpair invert each other on an initial segment") {
    for (std::uint64_t k = 0; k < 100000; ++k) {
        auto [m, n] = unpair(k);
        CHECK(pair(m, n) == k);
    }
}

TEST_CASE("log_len convention") {
    CHECK(log_len(0) == 1);
    CHECK(log_len(1) == 1);
    CHECK(log_len(2) == 2);
    CHECK(log_len(7) == 3);
    CHECK(log_len(8) == 4);
}

TEST_CASE("dyadic arithmetic is exact and canonical") {
    Dyadic half = Dyadic::pow2_neg(1);
    Dyadic quarter = Dyadic::pow2_neg(2);
    CHECK(half + quarter == Dyadic::scaled(BigInt(3), 2));
    CHECK((half - quarter) == quarter);
    CHECK(half.mantissa() == 1);
    CHECK(half.exponent() == 1);

    // 2/2^1 normalizes to 1/2^0.
    Dyadic two_over_two = Dyadic::scaled(BigInt(2), 1);
    CHECK(two_over_two == Dyadic::one());
    CHECK(two_over_two.exponent() == 0);

    CHECK(Dyadic::parse("3/2^2").str() == "3/2^2");
    CHECK_THROWS(Dyadic::parse("2/2^1"));  // not canonical
    CHECK_THROWS(Dyadic::parse("nonsense"));

    CHECK(Dyadic(5).floor() == 5);
    CHECK(Dyadic::scaled(BigInt(5), 1).floor() == 2);
    CHECK(Dyadic::scaled(BigInt(5), 1).ceil() == 3);
    CHECK(Dyadic::scaled(BigInt(-5), 1).floor() == -3);
    CHECK(Dyadic::scaled(BigInt(-5), 1).ceil() == -2);

    CHECK(Dyadic::scaled(BigInt(3), 2).mul_pow2(2) == Dyadic(3));
    CHECK(Dyadic(3).mul_pow2(-2) == Dyadic::scaled(BigInt(3), 2));
    CHECK(Dyadic::scaled(BigInt(3), 2).mul_uint(4) == Dyadic(3));
    CHECK(Dyadic::scaled(BigInt(3), 1) * Dyadic::scaled(BigInt(5), 2) ==
          Dyadic::scaled(BigInt(15), 3));
}

TEST_CASE("dyadic round trips under addition and subtraction") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> m(-1000000, 1000000);
    std::uniform_int_distribution<std::uint64_t> e(0, 64);
    for (int i = 0; i < 2000; ++i) {
        Dyadic a = Dyadic::scaled(BigInt(m(rng)), e(rng));
        Dyadic b = Dyadic::scaled(BigInt(m(rng)), e(rng));
        CHECK((a + b) - b == a);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("set_to_real on small sets") {
    CHECK(set_to_real(FinSet()) == Dyadic::zero());
    CHECK(set_to_real(FinSet({0})) == Dyadic::pow2_neg(1));
    CHECK(set_to_real(FinSet({0, 1})) == Dyadic::scaled(BigInt(3), 2));
}

TEST_CASE("set_to_real separates subsets of a common range") {
    // Distinct A, B within {0..n-1} differ by at least 2^{-n}.
    const std::uint64_t n = 10;
    std::vector<FinSet> all;
    for (std::uint64_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::uint64_t> v;
        for (std::uint64_t i = 0; i < n; ++i)
            if (mask & (1u << i)) v.push_back(i);
        all.push_back(FinSet(std::move(v)));
    }
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int trial = 0; trial < 20000; ++trial) {
        const FinSet& a = all[pick(rng)];
        const FinSet& b = all[pick(rng)];
        if (a == b) continue;
        Dyadic diff = set_to_real(a) - set_to_real(b);
        if (diff.is_negative()) diff = -diff;
        CHECK(diff >= Dyadic::pow2_neg(n));
    }
}

TEST_CASE("finset operations") {
    FinSet a({0, 2, 5});
    FinSet b({2, 3});
    CHECK(a.str() == "{0,2,5}");
    CHECK(FinSet::parse("{0,2,5}") == a);
    CHECK(a.unite(b) == FinSet({0, 2, 3, 5}));
    CHECK(a.intersect(b) == FinSet({2}));
    CHECK(a.difference(b) == FinSet({0, 5}));
    CHECK(a.below(3) == FinSet({0, 2}));
    CHECK(a.principal(1) == 2);
    CHECK(FinSet({2}).subset_of(a));
    CHECK(!a.subset_of(b));
}

TEST_CASE("real_prefix uses the representation with infinitely many ones") {
    CHECK(real_prefix(Dyadic::pow2_neg(1), 3).str() == "011");
    CHECK(real_prefix(Dyadic::scaled(BigInt(3), 2), 2).str() == "10");
    CHECK(real_prefix(Dyadic::one(), 4).str() == "1111");
    CHECK_THROWS(real_prefix(Dyadic::zero(), 3));
    CHECK_THROWS(real_prefix(Dyadic(2), 3));
    // Consistency: shorter prefixes are prefixes of longer ones.
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::uint64_t> m(1, (1u << 16) - 1);
    for (int i = 0; i < 500; ++i) {
        Dyadic x = Dyadic::scaled(BigInt(m(rng)), 16);
        BitString p8 = real_prefix(x, 8);
        BitString p12 = real_prefix(x, 12);
        CHECK(p8.is_prefix_of(p12));
    }
}

TEST_CASE("real_prefix ties the 2^{-A} encoding to characteristic strings") {
    // For A strictly inside {0..n-1}: the first n bits of 2^{-A} + 2^{-n}
    // are the characteristic string of A.
    const std::uint64_t n = 8;
    for (std::uint64_t mask = 0; mask + 1 < (1u << n); ++mask) {
        std::vector<std::uint64_t> v;
        for (std::uint64_t i = 0; i < n; ++i)
            if (mask & (1u << i)) v.push_back(i);
        FinSet a(std::move(v));
        BitString got = real_prefix(set_to_real(a) + Dyadic::pow2_neg(n), n);
        for (std::uint64_t i = 0; i < n; ++i) CHECK(got.bit(i) == a.contains(i));
    }
}

TEST_CASE("bitstring basics") {
    BitString s = BitString::parse("0110");
    CHECK(s.length() == 4);
    CHECK(s.str() == "0110");
    CHECK(BitString::parse("-").empty());
    CHECK(BitString::parse("01").is_prefix_of(s));
    CHECK(!BitString::parse("11").is_prefix_of(s));
    CHECK(s.successor().str() == "0111");
    CHECK(BitString::parse("0111").successor().str() == "1000");
    CHECK_THROWS(BitString::parse("111").successor());
    CHECK(s.fraction_value() == Dyadic::scaled(BigInt(6), 4));
}

TEST_CASE("rate function flags are spot-checkable on demand") {
    CHECK_NOTHROW(RateFunction::identity().check_monotone_upto(500));
    CHECK_NOTHROW(RateFunction::affine(0, 7).check_monotone_upto(500));
    RateFunction liar([](std::uint64_t n) { return n == 40 ? 0u : n; }, Monotone::increasing,
                      true, "liar");
    CHECK_THROWS_AS(liar.check_monotone_upto(500), invariant_error);
    CHECK_NOTHROW(liar.check_monotone_upto(39));
    RateFunction table = RateFunction::table({1, 1, 2, 5}, Monotone::nondecreasing);
    CHECK_NOTHROW(table.check_monotone_upto(10));
    CHECK(table(9) == 5);
}

TEST_CASE("stream clones are independent replays") {
    auto f = table_enum({4, 0, 2, 9});
    auto c1 = f->clone();
    CHECK(c1->next() == 4);
    CHECK(c1->next() == 0);
    auto c2 = f->clone();  // fresh from stage 0, unaffected by c1
    CHECK(c2->next() == 4);
    CHECK(c1->next() == 2);
    CHECK(c2->next() == 0);
    CHECK(c1->stage() == 3);
    CHECK(c2->stage() == 2);
}

TEST_CASE("dyadic text form round-trips") {
    std::mt19937_64 rng(97);
    for (int i = 0; i < 500; ++i) {
        std::int64_t m = static_cast<std::int64_t>(rng() % 2000001) - 1000000;
        Dyadic d = Dyadic::scaled(BigInt(m), rng() % 70);
        CHECK(Dyadic::parse(d.str()) == d);
    }
}

TEST_CASE("real_prefix brackets its argument from below") {
    std::mt19937_64 rng(113);
    for (int i = 0; i < 1500; ++i) {
        std::uint64_t n = 1 + rng() % 24;
        BigInt m = BigInt(1 + rng() % ((std::uint64_t{1} << 30) - 1));
        Dyadic x = Dyadic::scaled(m, 30);  // in (0, 1]
        BitString u = real_prefix(x, n);
        Dyadic base = u.fraction_value();
        CHECK(base < x);
        CHECK(x <= base + Dyadic::pow2_neg(n));
    }
}
