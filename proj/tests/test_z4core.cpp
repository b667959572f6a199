#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/errors.hpp"
#include "core/z4code.hpp"
#include "test_util.hpp"

using namespace z4sd;
using oracle::Vec;
using testutil::vec_of;
using testutil::word4;

TEST_CASE("weights of small words") {
    WeightTriple w = word4(Vec{0, 1, 2, 3}).weights();
    CHECK(w.hamming == 3);
    CHECK(w.lee == 4);
    CHECK(w.euclidean == 6);

    WeightTriple z = Z4Word(24).weights();
    CHECK(z.hamming == 0);
    CHECK(z.lee == 0);
    CHECK(z.euclidean == 0);

    WeightTriple t = word4(Vec{2, 2, 2, 2}).weights();
    CHECK(t.hamming == 4);
    CHECK(t.lee == 8);
    CHECK(t.euclidean == 16);
}

TEST_CASE("addition is coordinatewise mod 4") {
    CHECK(word4(Vec{1, 2, 3}).plus(word4(Vec{3, 2, 1})) == Z4Word(3));
    CHECK(word4(Vec{1, 1}).plus(word4(Vec{1, 1})) == word4(Vec{2, 2}));
    CHECK(word4(Vec{3, 3}).plus(word4(Vec{2, 1})) == word4(Vec{1, 0}));
    CHECK_THROWS_AS(word4(Vec{1}).plus(word4(Vec{1, 2})), ArgumentError);
}

TEST_CASE("inner products") {
    CHECK(word4(Vec{1, 1, 1, 1}).inner_product(word4(Vec{1, 1, 1, 1})) == 0);
    CHECK(word4(Vec{1, 2}).inner_product(word4(Vec{2, 1})) == 0);
    CHECK(word4(Vec{1, 0}).inner_product(word4(Vec{1, 0})) == 1);
    CHECK_THROWS_AS(word4(Vec{1}).inner_product(word4(Vec{1, 2})), ArgumentError);
}

TEST_CASE("gray map") {
    BinaryWord img = word4(Vec{0, 1, 2, 3}).gray_image();
    CHECK(img.to_string() == "00011110");
    CHECK(Z4Word(5).gray_image() == BinaryWord(10));

    SplitMix64 rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        Vec v = testutil::random_z4_vec(rng, 1 + uint32_t(rng.below(20)));
        Z4Word w = word4(v);
        CHECK(w.gray_image().weight() == w.weights().lee);
        CHECK(vec_of(w.gray_image()) == oracle::gray(v));
    }
}

TEST_CASE("weight chain holds on random words") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        WeightTriple w = word4(testutil::random_z4_vec(rng, 16)).weights();
        CHECK(w.hamming <= w.lee);
        CHECK(w.lee <= w.euclidean);
        CHECK(w.euclidean <= 4 * w.hamming);
    }
}

TEST_CASE("dual of edge cases") {
    // full space
    std::vector<Z4Word> rows;
    for (uint32_t i = 0; i < 3; ++i) {
        Z4Word w(3);
        w.set_digit(i, 1);
        rows.push_back(w);
    }
    Z4Code full = Z4Code::from_rows(3, rows);
    Z4Code zero = full.dual();
    CHECK(zero.k1() == 0);
    CHECK(zero.k2() == 0);
    CHECK(zero.dual().same_row_space(full));

    // the order-2 code at length 1 is its own dual
    Z4Code two = Z4Code::from_rows(1, {word4(Vec{2})});
    CHECK(two.dual().same_row_space(two));
}

TEST_CASE("catalog code is self-dual and equals its dual") {
    Z4Code c = Z4Code::read_file(testutil::catalog_path("d24_1.z4c"));
    CHECK(c.is_self_dual());
    CHECK(c.dual().same_row_space(c));
    CHECK(c.size_log2() == 24);

    Z4Code e1 = Z4Code::from_rows(4, {word4(Vec{1, 0, 0, 0})});
    CHECK_FALSE(e1.is_self_dual());
}

TEST_CASE("dual size identity on random codes") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        uint32_t n = 2 + uint32_t(rng.below(7));
        Z4Code c = testutil::random_z4_code(rng, n, 1 + uint32_t(rng.below(4)));
        Z4Code d = c.dual();
        CHECK(c.size_log2() + d.size_log2() == 2 * n);
        CHECK(d.dual().same_row_space(c));
    }
}

TEST_CASE("residue and torsion") {
    Z4Code c = Z4Code::read_file(testutil::catalog_path("d24_1.z4c"));
    BinaryCode res = c.residue();
    CHECK(res.dim() == 12);
    CHECK(parity_class(res) == ParityClass::DoublyEven);
    CHECK(res.is_self_dual());
    BinaryCode tor = c.torsion();
    CHECK(tor.dim() == 12);
    CHECK(tor.same_row_space(res.dual()));

    Z4Code zero = Z4Code::from_rows(4, {});
    CHECK(zero.residue().dim() == 0);
    CHECK(zero.torsion().dim() == 0);
}

TEST_CASE("figure codes have full torsion") {
    Z4Code c = Z4Code::read_file(testutil::catalog_path("c24_01.z4c"));
    CHECK(c.is_self_dual());
    CHECK(c.k1() == 12);
    CHECK(c.k2() == 0);
    CHECK(c.torsion().dim() == 12);
}

TEST_CASE("z4c round trip is digit exact") {
    Z4Code c = Z4Code::read_file(testutil::catalog_path("d24_1.z4c"));
    Z4Code reparsed = Z4Code::parse(c.format());
    CHECK(reparsed.format() == c.format());
    for (size_t i = 0; i < c.rows().size(); ++i)
        CHECK(reparsed.rows()[i] == c.rows()[i]);

    CHECK_THROWS_AS(Z4Code::parse("Z4CODE n=4 k1=2 k2=0\n0123\n"), ParseError);
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(Z4Code::parse("not a header\n"), ParseError);
    CHECK_THROWS_AS(Z4Code::parse("Z4CODE n=4 k1=1 k2=0\n012\n"), ParseError);
    CHECK_THROWS_AS(Z4Code::parse("Z4CODE n=3 k1=1 k2=0\n019\n"), ParseError);
    // claimed order-2 row with a unit
    CHECK_THROWS_AS(Z4Code::parse("Z4CODE n=2 k1=0 k2=1\n12\n"), ArgumentError);
    // dependent rows
    CHECK_THROWS_AS(Z4Code::parse("Z4CODE n=2 k1=2 k2=0\n11\n33\n"), ArgumentError);
}

TEST_CASE("standard form classifies mixed codes") {
    // rows (2,1) span an order-4 module: unit pivot found under permutation
    Z4Code c = Z4Code::from_rows(2, {word4(Vec{2, 1})});
    CHECK(c.k1() == 1);
    CHECK(c.k2() == 0);
    CHECK(c.contains(word4(Vec{0, 2})));
    CHECK_FALSE(c.contains(word4(Vec{2, 0})));

    Z4Code m = Z4Code::from_rows(3, {word4(Vec{1, 1, 2}), word4(Vec{0, 2, 2})});
    CHECK(m.k1() == 1);
    CHECK(m.k2() == 1);
    CHECK(m.size_log2() == 3);
}

TEST_CASE("bit-plane ops match the naive oracle on small codes") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        uint32_t n = 2 + uint32_t(rng.below(7)); // <= 8
        std::vector<Vec> gens;
        std::vector<Z4Word> rows;
        uint32_t cnt = 1 + uint32_t(rng.below(3));
        for (uint32_t i = 0; i < cnt; ++i) {
            gens.push_back(testutil::random_z4_vec(rng, n));
            rows.push_back(word4(gens.back()));
        }
        Z4Code c = Z4Code::from_rows(n, rows);

        auto span = oracle::span_z4(gens, n);
        CHECK((uint64_t(1) << c.size_log2()) == span.size());
        for (const Vec& w : span) CHECK(c.contains(word4(w)));

        auto dual_naive = oracle::dual_z4(gens, n);
        Z4Code dual = c.dual();
        CHECK((uint64_t(1) << dual.size_log2()) == dual_naive.size());
        for (const auto& r : dual.rows()) CHECK(dual_naive.count(vec_of(r)) == 1);

        auto res_naive = oracle::residue_set(span);
        BinaryCode res = c.residue();
        CHECK((uint64_t(1) << res.dim()) == res_naive.size());
        for (const auto& r : res.rows()) CHECK(res_naive.count(vec_of(r)) == 1);
    }
}

TEST_CASE("type criterion demands self-duality") {
    Z4Code notsd = Z4Code::from_rows(2, {word4(Vec{1, 0})});
    CHECK_THROWS_AS(generator_type_criterion(notsd), PreconditionError);
}

TEST_CASE("permutation and sign change preserve self-duality") {
    Z4Code c = Z4Code::read_file(testutil::catalog_path("d24_1.z4c"));
    std::vector<uint32_t> perm(24);
    for (uint32_t i = 0; i < 24; ++i) perm[i] = (i + 7) % 24;
    Z4Code p = c.permuted(perm);
    CHECK(p.is_self_dual());
    BinaryWord mask(24);
    mask.set_bit(3, true);
    mask.set_bit(17, true);
    Z4Code s = c.sign_flipped(mask);
    CHECK(s.is_self_dual());
    CHECK_FALSE(s.same_row_space(c)); // sign change moves the row space here
}
