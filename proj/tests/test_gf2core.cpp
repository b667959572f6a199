#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/bounds.hpp"
#include "core/errors.hpp"
#include "core/gf2code.hpp"
#include "core/z4code.hpp"
#include "test_util.hpp"

using namespace z4sd;
using oracle::Vec;

namespace {

BinaryCode code_of(uint32_t n, const std::vector<std::string>& rows) {
    std::vector<BinaryWord> ws;
    for (const auto& r : rows) ws.push_back(BinaryWord::from_string(r));
    return BinaryCode::from_rows(n, std::move(ws));
}

BinaryCode repetition(uint32_t n) {
    return code_of(n, {std::string(n, '1')});
}

BinaryCode golay() {
    static BinaryCode g =
        Z4Code::read_file(testutil::catalog_path("d24_1.z4c")).residue();
    return g;
}

} // namespace

TEST_CASE("dual of basic codes") {
    BinaryCode rep = repetition(6);
    BinaryCode even = rep.dual();
    CHECK(even.dim() == 5);
    for (const auto& r : even.rows()) CHECK(r.weight() % 2 == 0);
    CHECK(even.dual().same_row_space(rep));

    BinaryCode zero = BinaryCode::from_rows(4, {});
    CHECK(zero.dual().dim() == 4);

    CHECK(golay().dual().same_row_space(golay()));
}

TEST_CASE("minimum weight, both methods") {
    CHECK(min_weight(golay(), MinWeightMethod::Exhaustive) == 8);
    CHECK(min_weight(golay(), MinWeightMethod::BrouwerZimmermann) == 8);
    CHECK(min_weight(repetition(9)) == 9);
    CHECK_THROWS_AS(min_weight(BinaryCode::from_rows(4, {})), PreconditionError);

    Z4Code d48 = Z4Code::read_file(testutil::catalog_path("d48.z4c"));
    CHECK(min_weight(d48.residue(), MinWeightMethod::BrouwerZimmermann) == 12);
}

TEST_CASE("methods agree on random codes") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        uint32_t n = 8 + uint32_t(rng.below(25));
        uint32_t k = 1 + uint32_t(rng.below(std::min(n, 14u)));
        std::vector<BinaryWord> rows;
        for (uint32_t i = 0; i < k; ++i) {
            BinaryWord w(n);
            for (uint32_t j = 0; j < n; ++j)
                if (rng.coin()) w.set_bit(j, true);
            rows.push_back(w);
        }
        BinaryCode c = BinaryCode::from_rows(n, rows);
        if (c.dim() == 0) continue;
        CHECK(min_weight(c, MinWeightMethod::Exhaustive) ==
              min_weight(c, MinWeightMethod::BrouwerZimmermann));
    }
}

TEST_CASE("parity classes") {
    CHECK(parity_class(golay()) == ParityClass::DoublyEven);
    CHECK(parity_class(code_of(4, {"1100", "0110", "0011"})) == ParityClass::SinglyEven);
    CHECK(parity_class(code_of(4, {"1000", "0100", "0010", "0001"})) == ParityClass::Neither);
    // all generators 0 mod 4 but a non-orthogonal pair: has a 2 mod 4 word
    CHECK(parity_class(code_of(6, {"111100", "011110"})) == ParityClass::SinglyEven);
}

TEST_CASE("doubly even subcode") {
    BinaryCode c2 = code_of(2, {"11"});
    BinaryCode c0 = doubly_even_subcode(c2);
    CHECK(c0.dim() == 0);

    BinaryCode c4 = code_of(4, {"1100", "0011"});
    BinaryCode c40 = doubly_even_subcode(c4);
    CHECK(c40.dim() == 1);
    CHECK(c40.contains(BinaryWord::from_string("1111")));

    CHECK_THROWS_AS(doubly_even_subcode(golay()), PreconditionError);
}

TEST_CASE("shadow of tiny codes") {
    Shadow s2 = shadow(code_of(2, {"11"}));
    CHECK(s2.size == 2);
    CHECK(s2.min_weight == 1);

    Shadow s4 = shadow(code_of(4, {"1100", "0011"}));
    CHECK(s4.size == 4);
    CHECK(s4.min_weight == 2);
    // the shadow is exactly the four odd-overlap vectors
    for (const char* v : {"1010", "1001", "0110", "0101"}) {
        BinaryWord w = BinaryWord::from_string(v);
        bool in_c0d = s4.c0_dual.contains(w);
        bool in_c = code_of(4, {"1100", "0011"}).contains(w);
        CHECK(in_c0d);
        CHECK_FALSE(in_c);
    }
    CHECK_THROWS_AS(shadow(golay()), PreconditionError);
}

TEST_CASE("covering radius") {
    CHECK(covering_radius(golay(), CoveringRadiusMethod::Exact) == 4);
    CHECK(covering_radius(golay(), CoveringRadiusMethod::DelsarteBound) == 4);

    BinaryCode full = code_of(3, {"100", "010", "001"});
    CHECK(covering_radius(full, CoveringRadiusMethod::Exact) == 0);
    CHECK(covering_radius(repetition(8), CoveringRadiusMethod::Exact) == 4);
}

TEST_CASE("covering radius matches brute force and respects the dual bound") {
    SplitMix64 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        uint32_t n = 4 + uint32_t(rng.below(7)); // <= 10
        uint32_t k = 1 + uint32_t(rng.below(4));
        std::vector<BinaryWord> rows;
        std::vector<Vec> gens;
        for (uint32_t i = 0; i < k; ++i) {
            BinaryWord w(n);
            Vec g(n);
            for (uint32_t j = 0; j < n; ++j)
                if (rng.coin()) {
                    w.set_bit(j, true);
                    g[j] = 1;
                }
            rows.push_back(w);
            gens.push_back(g);
        }
        BinaryCode c = BinaryCode::from_rows(n, rows);
        auto span = oracle::span_gf2(gens, n);
        uint32_t exact = covering_radius(c, CoveringRadiusMethod::Exact);
        CHECK(exact == oracle::covering_radius_gf2(span, n));
        CHECK(exact <= covering_radius(c, CoveringRadiusMethod::DelsarteBound));
    }
}

TEST_CASE("weight distribution") {
    auto dist = weight_distribution(golay());
    std::vector<std::pair<uint32_t, uint64_t>> expect = {
        {0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
    CHECK(dist == expect);

    CHECK(weight_distribution(BinaryCode::from_rows(3, {})) ==
          std::vector<std::pair<uint32_t, uint64_t>>{{0, 1}});
    CHECK(weight_distribution(code_of(2, {"11"})) ==
          std::vector<std::pair<uint32_t, uint64_t>>{{0, 1}, {2, 1}});
}

TEST_CASE("self-dual completion") {
    BinaryCode zero8 = BinaryCode::from_rows(8, {});
    BinaryCode de = complete_to_self_dual(zero8, CompletionTarget::DoublyEven);
    CHECK(de.is_self_dual());
    CHECK(parity_class(de) == ParityClass::DoublyEven);
    CHECK(min_weight(de) == 4); // forced for a doubly even self-dual [8,4] code

    BinaryCode se = complete_to_self_dual(zero8, CompletionTarget::SinglyEven);
    CHECK(se.is_self_dual());
    CHECK(parity_class(se) == ParityClass::SinglyEven);

    CHECK(complete_to_self_dual(golay(), CompletionTarget::Any).same_row_space(golay()));

    CHECK_THROWS_AS(complete_to_self_dual(BinaryCode::from_rows(6, {}),
                                          CompletionTarget::DoublyEven),
                    PreconditionError);
    CHECK_THROWS_AS(complete_to_self_dual(golay(), CompletionTarget::DoublyEven),
                    PreconditionError);
    CHECK_THROWS_AS(
        complete_to_self_dual(code_of(4, {"1000"}), CompletionTarget::Any),
        PreconditionError);
}

TEST_CASE("completion postconditions on random seeds") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        uint32_t n = (trial % 2) ? 16 : 8;
        BinaryCode seed = testutil::random_self_orthogonal(rng, n, n / 2 - 1,
                                                           /*doubly_even=*/trial % 2 == 0);
        CompletionTarget target = CompletionTarget::Any;
        if (trial % 2 == 0 && !seed.is_self_dual())
            target = (trial % 4 == 0) ? CompletionTarget::DoublyEven
                                      : CompletionTarget::SinglyEven;
        if (target != CompletionTarget::Any && parity_class(seed) != ParityClass::DoublyEven)
            target = CompletionTarget::Any;
        if (target != CompletionTarget::Any && seed.is_self_dual()) target = CompletionTarget::Any;
        BinaryCode done = complete_to_self_dual(seed, target);
        CHECK(done.is_self_dual());
        CHECK(done.contains_code(seed));
        if (target == CompletionTarget::DoublyEven)
            CHECK(parity_class(done) == ParityClass::DoublyEven);
        if (target == CompletionTarget::SinglyEven)
            CHECK(parity_class(done) == ParityClass::SinglyEven);
    }
}

TEST_CASE("extremality predicates") {
    CHECK(is_extremal(golay()));
    CHECK_FALSE(is_extremal(code_of(2, {"11"})));
    Z4Code c32 = Z4Code::read_file(testutil::catalog_path("c32.z4c"));
    CHECK(is_extremal(c32.residue()));
    CHECK_THROWS_AS(is_extremal(repetition(4)), PreconditionError);

    CHECK(is_s_extremal(code_of(2, {"11"})));
    CHECK_THROWS_AS(is_s_extremal(golay()), PreconditionError);
}

TEST_CASE("shadow bound holds for completed singly even codes") {
    SplitMix64 rng(37);
    for (int trial = 0; trial < 15; ++trial) {
        BinaryCode seed = testutil::random_self_orthogonal(rng, 16, 6, true);
        if (seed.is_self_dual() || parity_class(seed) != ParityClass::DoublyEven) continue;
        BinaryCode c = complete_to_self_dual(seed, CompletionTarget::SinglyEven);
        Shadow s = shadow(c);
        CHECK(s.size == (uint64_t(1) << c.dim()));
        uint32_t d = min_weight(c);
        CHECK(int64_t(s.min_weight) <= int64_t(c.length()) / 2 + 4 - 2 * int64_t(d));
    }
}

TEST_CASE("g2c round trip and errors") {
    BinaryCode g = golay();
    BinaryCode re = BinaryCode::parse(g.format());
    CHECK(re.format() == g.format());
    CHECK_THROWS_AS(BinaryCode::parse("junk"), ParseError);
    CHECK_THROWS_AS(BinaryCode::parse("G2CODE n=4 k=2\n1100\n"), ParseError);
    CHECK_THROWS_AS(BinaryCode::parse("G2CODE n=4 k=2\n1100\n1100\n"), ArgumentError);
    CHECK_THROWS_AS(BinaryCode::read_file("/nonexistent/x.g2c"), IoError);
}
