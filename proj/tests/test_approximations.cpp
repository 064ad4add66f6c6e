#include "regain/approx.hpp"
#include "regain/oracles.hpp"
#include "regain/pairing.hpp"
#include "regain/strong_array.hpp"

#include <doctest.h>

#include <random>

using namespace regain;

namespace {

ApproxSeqPtr constant_seq(const Dyadic& q) {
    return std::make_unique<GeneratorSeq>([q](std::uint64_t) { return q; },
                                          Monotone::nondecreasing);
}

// 1 - 2^{-(n+shift)}
ApproxSeqPtr approach_one(std::uint64_t shift) {
    return std::make_unique<GeneratorSeq>(
        [shift](std::uint64_t n) { return Dyadic::one() - Dyadic::pow2_neg(n + shift); },
        Monotone::increasing);
}

}  // namespace

TEST_CASE("witness detection against an exact limit") {
    Dyadic q = Dyadic::scaled(BigInt(5), 3);
    auto rep = witnesses(*constant_seq(q), q, 20);
    CHECK(rep.mode == WitnessMode::exact_limit);
    CHECK(rep.witnesses.size() == 20);  // difference zero at every n

    // Boundary strictness: limit - a_n = 2^{-n} exactly is not a witness.
    auto boundary = witnesses(*approach_one(0), Dyadic::one(), 20);
    CHECK(boundary.witnesses.empty());

    auto inside = witnesses(*approach_one(1), Dyadic::one(), 20);
    CHECK(inside.witnesses.size() == 20);

    CHECK_THROWS_AS(witnesses(*approach_one(0), Dyadic::pow2_neg(2), 8), invariant_error);
}

TEST_CASE("witnesses agree with the reversed-comparison oracle") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<std::uint64_t> step(0, 2);
    for (int trial = 0; trial < 40; ++trial) {
        // Random nondecreasing dyadic walk below 1.
        std::vector<Dyadic> vals;
        Dyadic cur = Dyadic::zero();
        for (std::uint64_t n = 0; n < 48; ++n) {
            if (std::uint64_t s = step(rng); s > 0) cur += Dyadic::pow2_neg(n + s + 1);
            vals.push_back(cur);
        }
        Dyadic limit = Dyadic::one();
        auto rep = witnesses(TableSeq(vals, Monotone::nondecreasing), limit, 48);
        CHECK(rep.witnesses == oracle::exact_witnesses(vals, limit));
    }
}

TEST_CASE("witness report round-trips through its text form") {
    WitnessReport rep;
    rep.horizon = 64;
    rep.mode = WitnessMode::exact_limit;
    rep.witnesses = {1, 5, 9};
    auto back = WitnessReport::parse(rep.str());
    CHECK(back.horizon == rep.horizon);
    CHECK(back.mode == rep.mode);
    CHECK(back.witnesses == rep.witnesses);
}

TEST_CASE("monotonicity violations are hard errors") {
    std::vector<Dyadic> bad{Dyadic(1), Dyadic::zero()};
    TableSeq seq(bad, Monotone::nondecreasing);
    auto s = seq.clone();
    s->next();
    CHECK_THROWS_AS(s->next(), invariant_error);

    // Increasing declaration rejects a plateau.
    std::vector<Dyadic> flat{Dyadic(1), Dyadic(1)};
    auto f = TableSeq(flat, Monotone::increasing).clone();
    f->next();
    CHECK_THROWS_AS(f->next(), invariant_error);
}

TEST_CASE("transform_1_to_3 on a constant sequence") {
    Dyadic q = Dyadic::scaled(BigInt(3), 2);
    auto out = transform_1_to_3(constant_seq(q), RateFunction::identity());
    auto s = out->clone();
    // g(n) = 1 + n + n, so a_n = q - 2^{-(2n+1)}.
    for (std::uint64_t n = 0; n < 16; ++n)
        CHECK(s->next() == q - Dyadic::pow2_neg(2 * n + 1));
}

TEST_CASE("transform_1_to_3 keeps catch-up witnesses at the new rate") {
    // b_n = 1 - 2^{-n}: a_m = b_{g(m+1)} - 2^{-g(m)} with g(m) = 2m+1.
    auto out = transform_1_to_3(approach_one(0), RateFunction::identity());
    auto s = out->clone();
    for (std::uint64_t m = 0; m < 8; ++m) {
        Dyadic expect = (Dyadic::one() - Dyadic::pow2_neg(2 * m + 3)) - Dyadic::pow2_neg(2 * m + 1);
        CHECK(s->next() == expect);
        CHECK(expect < Dyadic::one());
    }
    auto rep = witnesses_with_rate(*out, RateFunction::identity(), Dyadic::one(), 64);
    CHECK(!rep.witnesses.empty());
    CHECK(rep.witnesses.size() >= 60);  // the whole range catches up here
}

TEST_CASE("transform_1_to_3 requires an unbounded rate") {
    CHECK_THROWS_AS(transform_1_to_3(constant_seq(Dyadic(1)), RateFunction::affine(0, 5)),
                    invariant_error);
}

TEST_CASE("transform_4_to_1 with the identity rate is the identity") {
    auto src = approach_one(1);
    auto out = transform_4_to_1(src->clone(), RateFunction::identity());
    auto a = src->clone();
    auto b = out->clone();
    for (int i = 0; i < 32; ++i) CHECK(a->next() == b->next());
}

TEST_CASE("transform_4_to_1 samples right plateau ends") {
    RateFunction half([](std::uint64_t m) { return m / 2; }, Monotone::nondecreasing, true,
                      "half");
    auto src = approach_one(1);
    auto out = transform_4_to_1(src->clone(), half);
    SeqCache cache(src->clone());
    auto s = out->clone();
    // Plateau ends of floor(m/2) sit at odd m, so a_n = b_{2n+1}.
    for (std::uint64_t n = 0; n < 16; ++n) CHECK(s->next() == cache.at(2 * n + 1));
    // Brute-force max-scan for the plateau ends themselves.
    for (std::uint64_t n = 0; n < 16; ++n) {
        std::uint64_t plateau_value = n;
        std::uint64_t end = 0;
        for (std::uint64_t m = 0; m < 200; ++m)
            if (m / 2 == plateau_value) end = m;
        CHECK(end == 2 * n + 1);
    }
}

TEST_CASE("transform_4_to_1 detects an eventually constant rate") {
    RateFunction capped([](std::uint64_t m) { return std::min<std::uint64_t>(m, 3); },
                        Monotone::nondecreasing, true, "capped");
    auto out = transform_4_to_1(approach_one(1), capped, 1u << 10);
    auto s = out->clone();
    s->next();
    s->next();
    s->next();
    CHECK_THROWS_AS(s->next(), horizon_exhausted);
}

TEST_CASE("index_compress") {
    auto same = index_compress(approach_one(0), RateFunction::identity());
    auto s = same->clone();
    auto src = approach_one(0);
    for (int i = 0; i < 10; ++i) CHECK(s->next() == src->next());

    auto doubled = index_compress(approach_one(0), RateFunction::affine(2, 0));
    auto d = doubled->clone();
    for (std::uint64_t n = 0; n < 10; ++n)
        CHECK(d->next() == Dyadic::one() - Dyadic::pow2_neg(2 * n));

    RateFunction dec([](std::uint64_t n) { return n == 3 ? 1u : n; }, Monotone::increasing,
                     true, "liar");
    auto bad = index_compress(approach_one(0), dec);
    auto bs = bad->clone();
    bs->next();
    bs->next();
    bs->next();
    CHECK_THROWS_AS(bs->next(), invariant_error);
}

TEST_CASE("index_extract finds the minimal dominating indices") {
    // a = b increasing: the first admissible m is always the next index.
    auto r = index_extract(approach_one(0), approach_one(0), 20);
    for (std::uint64_t n = 0; n < 20; ++n) CHECK(r(n) == n);

    // Nondecreasing case, hand-checked: plateaus of length 2 still give id
    // because the search begins at r(n-1)+1 and the value there suffices.
    std::vector<Dyadic> vals;
    for (std::uint64_t n = 0; n < 40; ++n)
        vals.push_back(Dyadic::one() - Dyadic::pow2_neg(n / 2));
    auto mk = [&] { return std::make_unique<TableSeq>(vals, Monotone::nondecreasing); };
    auto r2 = index_extract(mk(), mk(), 30);
    for (std::uint64_t n = 0; n < 30; ++n) CHECK(r2(n) == n);

    // b_n = a_{2n}: never above 2n, strictly increasing; brute-forced.
    auto b2 = index_compress(approach_one(0), RateFunction::affine(2, 0));
    auto r3 = index_extract(approach_one(0), std::move(b2), 24);
    SeqCache a_cache(approach_one(0));
    SeqCache b_cache(index_compress(approach_one(0), RateFunction::affine(2, 0)));
    std::uint64_t prev = 0;
    for (std::uint64_t n = 0; n < 24; ++n) {
        std::uint64_t got = r3(n);
        CHECK(got <= 2 * n);
        std::uint64_t lo = n == 0 ? 0 : prev + 1;
        std::uint64_t expect = lo;
        while (a_cache.at(expect) < b_cache.at(n)) ++expect;
        CHECK(got == expect);
        prev = got;
    }

    // b beyond a's supremum: the search cannot terminate.
    CHECK_THROWS_AS(index_extract(approach_one(0), constant_seq(Dyadic(2)), 4, 1u << 12),
                    horizon_exhausted);
}

TEST_CASE("index_extract then index_compress dominates the target pointwise") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<std::uint64_t> gap(2, 4);
    std::vector<Dyadic> a_vals, b_vals;
    Dyadic acc = Dyadic::zero();
    for (std::uint64_t n = 0; n < 120; ++n) {
        acc += Dyadic::pow2_neg(n / 2 + gap(rng));
        a_vals.push_back(acc);
    }
    for (std::uint64_t n = 0; n < 40; ++n)
        b_vals.push_back(a_vals[std::min<std::uint64_t>(119, n * 2)]);
    auto mka = [&] { return std::make_unique<TableSeq>(a_vals, Monotone::increasing); };
    auto mkb = [&] { return std::make_unique<TableSeq>(b_vals, Monotone::nondecreasing); };
    auto r = index_extract(mka(), mkb(), 40);
    auto compressed = index_compress(mka(), r);
    auto cs = compressed->clone();
    auto bs = mkb();
    for (std::uint64_t n = 0; n < 40; ++n) {
        Dyadic got = cs->next();
        Dyadic want = bs->next();
        CHECK(got >= want);
    }
}

TEST_CASE("coenumerate_misses emits only the filler on a constant sequence") {
    auto misses = coenumerate_misses(constant_seq(Dyadic(1)), 7);
    auto codes = collect(*misses, 200);
    for (std::uint64_t c : codes) CHECK(c == 8);
}

TEST_CASE("coenumerate_misses never emits a regaining index") {
    // a_n = 1 - 2^{-2n}: every n >= 1 is a witness, 0 is not (e = 0).
    auto a = std::make_unique<GeneratorSeq>(
        [](std::uint64_t n) { return Dyadic::one() - Dyadic::pow2_neg(2 * n); },
        Monotone::nondecreasing);
    auto misses = coenumerate_misses(std::move(a), 0);
    auto codes = collect(*misses, 10000);
    FinSet limit = oracle::enum_prefix(codes, codes.size());
    CHECK(limit == FinSet({0}));  // only the filler value: complement = {0}
}

TEST_CASE("coenumerate_misses stages with m <= n emit the filler") {
    auto misses = coenumerate_misses(approach_one(0), 3);
    auto codes = collect(*misses, 300);
    for (std::uint64_t k = 0; k < 300; ++k) {
        auto [m, n] = unpair(k);
        if (m <= n) CHECK(codes[k] == 4);
    }
}

TEST_CASE("enumerate_witnesses_with_modulus on the constant pair") {
    auto mk = [] { return constant_seq(Dyadic::scaled(BigInt(1), 1)); };
    auto wit = enumerate_witnesses_with_modulus(mk(), mk(), 0);
    auto codes = collect(*wit, 400);
    for (std::uint64_t k = 0; k < 400; ++k) {
        auto [m, n] = unpair(k);
        CHECK(codes[k] == (m > n ? n + 1 : 1));
    }
}

TEST_CASE("enumerate_witnesses_with_modulus respects boundary strictness") {
    // limit - a_n = 2^{-n} exactly: never enumerated.
    auto a = approach_one(0);
    auto b = approach_one(1);  // modulus-true for limit 1
    auto wit = enumerate_witnesses_with_modulus(std::move(a), std::move(b), 5);
    auto codes = collect(*wit, 2000);
    for (std::uint64_t c : codes) CHECK(c == 6);
}

TEST_CASE("enumerate_witnesses_with_modulus matches exact-limit witnesses") {
    // Witness gaps 2^{-(n+2)} at n not divisible by 3, plateaus elsewhere.
    std::vector<Dyadic> vals;
    Dyadic limit = Dyadic::one();
    Dyadic cur = Dyadic::zero();
    for (std::uint64_t n = 0; n < 64; ++n) {
        if (n % 3 != 0) cur = limit - Dyadic::pow2_neg(n + 2);
        vals.push_back(cur);
    }
    auto mka = [&] { return std::make_unique<TableSeq>(vals, Monotone::nondecreasing); };
    auto d_pick = oracle::exact_witnesses(vals, limit);
    REQUIRE(!d_pick.empty());
    auto wit = enumerate_witnesses_with_modulus(mka(), approach_one(1), d_pick[0]);
    auto codes = collect(*wit, 10000);
    FinSet got = oracle::enum_prefix(codes, codes.size());

    // Everything enumerated is a witness, and all small witnesses appear.
    FinSet expect(oracle::exact_witnesses(vals, limit));
    CHECK(got.subset_of(expect));
    for (std::uint64_t n : expect.elements())
        if (n <= 60) CHECK(got.contains(n));
}

TEST_CASE("speedup_via_bound") {
    // All n witnesses, r = id: output is the input.
    auto out = speedup_via_bound(approach_one(1), RateFunction::identity());
    CHECK(!first_modulus_violation(*out, Dyadic::one(), 40).has_value());

    // Witness set = evens via a_{2k} jumps; r(n) = 2n makes it modulus-true.
    std::vector<Dyadic> vals;
    Dyadic cur = Dyadic::zero();
    for (std::uint64_t n = 0; n < 128; ++n) {
        if (n % 2 == 0) cur = Dyadic::one() - Dyadic::pow2_neg(n + 1);
        vals.push_back(cur);
    }
    auto mk = [&] { return std::make_unique<TableSeq>(vals, Monotone::nondecreasing); };
    auto sped = speedup_via_bound(mk(), RateFunction::affine(2, 0));
    CHECK(!first_modulus_violation(*sped, Dyadic::one(), 60).has_value());

    // r below the principal function: the postcondition check reports it.
    std::vector<Dyadic> odd_vals;
    cur = Dyadic::zero();
    for (std::uint64_t n = 0; n < 128; ++n) {
        if (n % 2 == 1) cur = Dyadic::one() - Dyadic::pow2_neg(n + 1);
        odd_vals.push_back(cur);
    }
    auto mully = std::make_unique<TableSeq>(odd_vals, Monotone::nondecreasing);
    auto slow = speedup_via_bound(std::move(mully), RateFunction::affine(2, 0));
    CHECK(first_modulus_violation(*slow, Dyadic::one(), 60).has_value());
}

TEST_CASE("solovay transfer") {
    // Identity translation, c = 0: the running max of a nondecreasing b is b.
    SolovayMap ident = [](const Dyadic& q) { return std::optional<Dyadic>(q); };
    auto a = solovay_transfer(ident, approach_one(1));
    auto as = a->clone();
    auto bs = approach_one(1);
    for (int i = 0; i < 20; ++i) CHECK(as->next() == bs->next());

    // f(q) = q/2 with alpha = beta/2, c = 0: witnesses transfer one-for-one.
    SolovayMap halve = [](const Dyadic& q) { return std::optional<Dyadic>(q.mul_pow2(-1)); };
    auto chk = solovay_check(halve, 0, *approach_one(1), Dyadic::scaled(BigInt(1), 1),
                             Dyadic::one(), 64);
    CHECK(chk.premise_witnesses.size() == 64);
    CHECK(chk.transferred.size() == 64);
    CHECK(chk.all_transferred);

    // Partial translation: undefined on an emitted value.
    SolovayMap partial = [](const Dyadic& q) {
        return q < Dyadic::scaled(BigInt(7), 3) ? std::optional<Dyadic>(q) : std::nullopt;
    };
    auto broken = solovay_transfer(partial, approach_one(1));
    auto t = broken->clone();
    t->next();
    t->next();
    CHECK_THROWS_AS((t->next(), t->next(), t->next()), invariant_error);
}

TEST_CASE("bracket strings") {
    auto [u0, v0] = bracket_strings(Dyadic::zero(), 3);
    CHECK(u0.str() == "000");
    CHECK(v0.str() == "001");

    auto [u1, v1] = bracket_strings(Dyadic::pow2_neg(1), 1);
    CHECK(u1.str() == "1");
    CHECK(v1.str() == "1");  // saturation at the all-ones string

    auto [u2, v2] = bracket_strings(Dyadic::scaled(BigInt(5), 4), 2);
    CHECK(u2.str() == "01");
    CHECK(v2.str() == "10");

    CHECK_THROWS(bracket_strings(Dyadic(1), 2));
    CHECK_THROWS(bracket_strings(-Dyadic::pow2_neg(1), 2));
}

TEST_CASE("bracket inequality holds exactly on random dyadics") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 2000; ++trial) {
        std::uint64_t n = 1 + rng() % 32;
        BigInt m = BigInt(rng() % (std::uint64_t{1} << 40));
        Dyadic a = Dyadic::scaled(m, 40);
        if (!(a < Dyadic::one())) continue;
        auto [u, v] = bracket_strings(a, n);
        Dyadic base = u.fraction_value();
        CHECK(base <= a);
        CHECK(a < base + Dyadic::pow2_neg(n));
        if (!u.all_ones()) CHECK(v.fraction_value() == base + Dyadic::pow2_neg(n));
    }
}

TEST_CASE("array_to_seq") {
    // Empty sets forever: constant zero.
    StrongArray empty([](std::uint64_t) { return FinSet(); });
    auto s0 = array_to_seq(empty);
    auto c0 = s0->clone();
    for (int i = 0; i < 5; ++i) CHECK(c0->next() == Dyadic::zero());

    // {0} from n = 1 on: 0, 1/2, 1/2, ...
    StrongArray single([](std::uint64_t n) { return n >= 1 ? FinSet({0}) : FinSet(); });
    auto s1 = array_to_seq(single);
    auto c1 = s1->clone();
    CHECK(c1->next() == Dyadic::zero());
    CHECK(c1->next() == Dyadic::pow2_neg(1));
    CHECK(c1->next() == Dyadic::pow2_neg(1));

    // Full prefixes: 1 - 2^{-n}.
    StrongArray full([](std::uint64_t n) { return FinSet::range(n); });
    auto s2 = array_to_seq(full);
    auto c2 = s2->clone();
    for (std::uint64_t n = 0; n < 12; ++n)
        CHECK(c2->next() == Dyadic::one() - Dyadic::pow2_neg(n));

    // A_n not inside {0..n-1} is an invariant violation.
    StrongArray bad([](std::uint64_t n) { return FinSet({n}); });
    auto sb = array_to_seq(bad);
    auto cb = sb->clone();
    CHECK_THROWS_AS(cb->next(), invariant_error);

    StrongArray shrink([](std::uint64_t n) { return n == 1 ? FinSet({0}) : FinSet(); });
    CHECK_THROWS_AS(shrink.validate_upto(4), invariant_error);
    CHECK_NOTHROW(full.validate_upto(16));
}

TEST_CASE("catchup_indices with a stable approximation") {
    // A = evens; B_k already equals the prefix: s must be the identity.
    std::vector<std::uint64_t> evens;
    for (std::uint64_t i = 0; i < 64; i += 2) evens.push_back(i);
    FinSet a_ref(evens);
    StrongArray b([a_ref](std::uint64_t n) { return a_ref.below(n); });
    auto res = catchup_indices(b, RateFunction::identity(), a_ref, 48);
    CHECK(!res.r_witnesses.empty());
    for (std::uint64_t n = 0; n < 48; ++n) CHECK(res.s[n] == n);
    CHECK(res.all_equal);
    CHECK(res.case_i_reports.empty());
}

TEST_CASE("catchup_indices with a delayed approximation") {
    // B_k knows the prefix only up to k/2: the min-search must find the
    // first k whose prefix value has caught up, matching a brute force.
    std::vector<std::uint64_t> evens;
    for (std::uint64_t i = 0; i < 128; i += 2) evens.push_back(i);
    FinSet a_ref(evens);
    StrongArray b([a_ref](std::uint64_t n) { return a_ref.below(n / 2); });
    auto res = catchup_indices(b, RateFunction::identity(), a_ref, 40);

    // Brute-force oracle for the threshold and the searches.
    std::uint64_t last_equal = 0;
    bool any = false;
    for (std::uint64_t n = 0; n < 40; ++n) {
        if (a_ref.below(n) == b.at(n).below(n)) {
            last_equal = n;
            any = true;
        }
    }
    std::uint64_t expect_n0 = any ? last_equal + 1 : 0;
    CHECK(res.threshold_n == expect_n0);
    std::uint64_t prev = 0;
    for (std::uint64_t n = expect_n0; n < 40; ++n) {
        std::uint64_t k = n == 0 ? 0 : prev + 1;
        Dyadic target = set_to_real(b.at(n).below(n)) + Dyadic::pow2_neg(n);
        while (set_to_real(b.at(k).below(n)) < target) ++k;
        CHECK(res.s[n] == k);
        prev = res.s[n];
    }
    // Every checked witness must land on prefix equality.
    CHECK(res.all_equal);
}

TEST_CASE("catchup_indices runs on a cofinite reference set") {
    FinSet a_ref(FinSet::range(64));
    StrongArray b([a_ref](std::uint64_t n) { return a_ref.below(n); });
    auto res = catchup_indices(b, RateFunction::identity(), a_ref, 32);
    CHECK(res.s.size() == 32);
}

TEST_CASE("coenumerate_misses recovers an alternating complement") {
    // Witnesses exactly at even n: the gap after index 2k is 3*2^{-(2k+2)},
    // inside [2^{-(2k+1)}, 2^{-2k}), so 2k catches up and 2k+1 does not.
    Dyadic limit = Dyadic::one();
    std::vector<Dyadic> vals;
    for (std::uint64_t n = 0; n < 160; ++n) {
        std::uint64_t k = n / 2;
        vals.push_back(limit - Dyadic::scaled(BigInt(3), 2 * k + 2));
    }
    TableSeq seq(vals, Monotone::nondecreasing);
    auto rep = witnesses(seq, limit, 80);
    for (std::uint64_t n = 0; n < 80; ++n) CHECK(rep.has(n) == (n % 2 == 0));

    auto misses = coenumerate_misses(seq.clone(), 1);  // 1 is a non-witness
    auto codes = collect(*misses, 10000);
    FinSet emitted = oracle::enum_prefix(codes, codes.size());
    for (std::uint64_t n = 0; n <= 60; ++n) CHECK(emitted.contains(n) == (n % 2 == 1));
}

TEST_CASE("transforms stabilize at the source's final value on tables") {
    std::vector<Dyadic> vals{Dyadic::zero(), Dyadic::pow2_neg(3), Dyadic::pow2_neg(1),
                             Dyadic::scaled(BigInt(5), 3)};
    auto mk = [&] { return std::make_unique<TableSeq>(vals, Monotone::nondecreasing); };

    auto compressed = index_compress(mk(), RateFunction::affine(2, 0));
    auto cs = compressed->clone();
    Dyadic last;
    for (int i = 0; i < 10; ++i) last = cs->next();
    CHECK(last == vals.back());

    auto sped = speedup_via_bound(mk(), RateFunction::affine(3, 1));
    auto ss = sped->clone();
    for (int i = 0; i < 10; ++i) last = ss->next();
    CHECK(last == vals.back());
}
