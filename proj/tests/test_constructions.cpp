#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/constructions.hpp"
#include "core/enumerate.hpp"
#include "core/errors.hpp"
#include "test_util.hpp"

using namespace z4sd;
using oracle::Vec;
using testutil::word4;

TEST_CASE("circulant and negacirculant matrices") {
    auto rows = circulant_matrix(Vec{0, 1, 2}, CirculantKind::Circulant);
    CHECK(rows[0] == word4(Vec{0, 1, 2}));
    CHECK(rows[1] == word4(Vec{2, 0, 1}));
    CHECK(rows[2] == word4(Vec{1, 2, 0}));

    auto neg = circulant_matrix(Vec{0, 1, 2}, CirculantKind::Negacirculant);
    CHECK(neg[0] == word4(Vec{0, 1, 2}));
    CHECK(neg[1] == word4(Vec{2, 0, 1})); // wrapped 2 becomes -2 = 2
    CHECK(neg[2] == word4(Vec{3, 2, 0}));

    CHECK(circulant_matrix(Vec{1}, CirculantKind::Negacirculant)[0] == word4(Vec{1}));
}

TEST_CASE("bordered double circulant codes from the tables") {
    Z4Code d24 = bordered_double_circulant(Vec{1, 3, 1, 0, 3, 3, 0, 3, 2, 2, 2},
                                           BorderSpec{0, 1, 1});
    CHECK(d24.length() == 24);
    CHECK(d24.k1() == 12);
    CHECK(d24.is_self_dual());
    CHECK(d24.same_row_space(Z4Code::read_file(testutil::catalog_path("d24_1.z4c"))));
    WeightProfile p = enumerate_weights(d24);
    CHECK(p.d_lee == 10);
    CHECK(type_of(d24) == Z4Type::I);

    Z4Code d56 = bordered_double_circulant(
        Vec{0, 2, 2, 0, 0, 0, 2, 0, 2, 0, 2, 2, 1, 1, 2, 2, 3, 2, 1, 0, 1, 1, 1, 1, 0, 1, 1},
        BorderSpec{2, 1, 1});
    CHECK(d56.length() == 56);
    CHECK(d56.is_self_dual());
    CHECK(generator_type_criterion(d56) == Z4Type::II);

    Z4Code junk = bordered_double_circulant(Vec{0, 0, 0}, BorderSpec{0, 0, 0});
    CHECK_FALSE(junk.is_self_dual());
}

TEST_CASE("four negacirculant codes from the tables") {
    Z4Code c32 = four_negacirculant(Vec{2, 2, 3, 1, 2, 0, 1, 2}, Vec{0, 3, 1, 1, 3, 0, 2, 2});
    CHECK(c32.length() == 32);
    CHECK(c32.k1() == 16);
    CHECK(c32.is_self_dual());
    CHECK(generator_type_criterion(c32) == Z4Type::II);
    CHECK(c32.same_row_space(Z4Code::read_file(testutil::catalog_path("c32.z4c"))));

    Z4Code c56 = four_negacirculant(Vec{1, 1, 1, 3, 0, 2, 1, 3, 1, 1, 2, 2, 1, 2},
                                    Vec{3, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 0, 0});
    CHECK(c56.is_self_dual());
    CHECK(generator_type_criterion(c56) == Z4Type::II);

    CHECK_FALSE(four_negacirculant(Vec{0, 0}, Vec{0, 0}).is_self_dual());
    CHECK_THROWS_AS(four_negacirculant(Vec{1, 2}, Vec{1}), ArgumentError);
}

TEST_CASE("the right block of a four negacirculant generator has the stated symmetry") {
    Vec a{2, 2, 3, 1, 2, 0, 1, 2}, b{0, 3, 1, 1, 3, 0, 2, 2};
    Z4Code c = four_negacirculant(a, b);
    const uint32_t m = 8;
    for (uint32_t i = 0; i < m; ++i)
        for (uint32_t j = 0; j < m; ++j) {
            uint8_t a_ji = c.rows()[j].digit(2 * m + i);
            uint8_t b_ji = c.rows()[j].digit(3 * m + i);
            CHECK(c.rows()[m + i].digit(3 * m + j) == a_ji);           // A^T block
            CHECK(c.rows()[m + i].digit(2 * m + j) == (4 - b_ji) % 4); // -B^T block
        }
}

TEST_CASE("standard form codes") {
    Z4Code c1 = Z4Code::read_file(testutil::catalog_path("c24_01.z4c"));
    std::vector<Z4Word> m_rows;
    for (uint32_t i = 0; i < 12; ++i) {
        Z4Word r(12);
        for (uint32_t j = 0; j < 12; ++j) r.set_digit(j, c1.rows()[i].digit(12 + j));
        m_rows.push_back(r);
    }
    Z4Code rebuilt = standard_form_code(m_rows);
    CHECK(rebuilt.format() == c1.format());
    CHECK(rebuilt.is_self_dual());
    WeightProfile p = enumerate_weights(rebuilt);
    CHECK(p.d_lee == 10);

    std::vector<Z4Word> zero12(12, Z4Word(12));
    CHECK_FALSE(standard_form_code(zero12).is_self_dual());
    CHECK_THROWS_AS(standard_form_code({Z4Word(3), Z4Word(3)}), ArgumentError);
}

TEST_CASE("lift system over the length-24 residue") {
    BinaryCode g24 = BinaryCode::read_file(testutil::data_path("g24.g2c"));
    CHECK(g24.is_self_dual());
    CHECK(parity_class(g24) == ParityClass::DoublyEven);
    LiftSystem sys(g24);
    CHECK(sys.free_dim() == 12 * 13 / 2);

    SplitMix64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        Z4Code cand = sys.lift_from_seed(rng.next());
        CHECK(cand.is_self_dual());
        CHECK(cand.residue().same_row_space(g24));
        CHECK(cand.k1() == 12);
        CHECK(cand.k2() == 0);
    }
}

TEST_CASE("lift search finds codes at the Lee plateau") {
    BinaryCode g24 = BinaryCode::read_file(testutil::data_path("g24.g2c"));
    LiftSearchResult r = lift_search(g24, 3200, 485001, 10);
    CHECK(r.trials == 3200);
    CHECK(r.not_self_dual == 0);
    CHECK(r.residue_mismatch == 0);
    REQUIRE(r.codes.size() >= 1);
    for (size_t i = 0; i < r.codes.size(); ++i) {
        WeightProfile p = enumerate_weights(r.codes[i]);
        CHECK(p.d_lee >= 10);
        CHECK(r.codes[i].residue().same_row_space(g24));
    }

    CHECK(lift_search(g24, 0, 1, 10).codes.empty());
    CHECK_THROWS_AS(lift_search(BinaryCode::from_rows(8, {}), 10, 1, 4), PreconditionError);
}

TEST_CASE("lift search is reproducible") {
    BinaryCode g24 = BinaryCode::read_file(testutil::data_path("g24.g2c"));
    LiftSearchResult a = lift_search(g24, 3200, 485001, 10);
    LiftSearchResult b = lift_search(g24, 3200, 485001, 10, 4);
    REQUIRE(a.codes.size() == b.codes.size());
    CHECK(a.trial_of == b.trial_of);
    for (size_t i = 0; i < a.codes.size(); ++i)
        CHECK(a.codes[i].format() == b.codes[i].format());
}

TEST_CASE("lifting the length-8 extended parity code yields high Lee minima") {
    BinaryCode e8 = complete_to_self_dual(BinaryCode::from_rows(8, {}),
                                          CompletionTarget::DoublyEven);
    LiftSearchResult r = lift_search(e8, 64, 7, 6);
    REQUIRE(r.codes.size() >= 1);
    for (const auto& c : r.codes) {
        WeightProfile p = enumerate_weights(c);
        CHECK(p.d_lee >= 6);
        // the length-8 Lee plateau is Type II territory
        CHECK(type_of(c) == Z4Type::II);
    }
}
