#ifndef Z4SD_CORE_Z4CODE_HPP
#define Z4SD_CORE_Z4CODE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "gf2code.hpp"
#include "z4word.hpp"

namespace z4sd {

// Row reduction of a Z4 generator set. Unit pivots (coordinates where some
// row is 1 or 3) are taken before order-2 pivots; pivot columns are chosen
// left to right in the original coordinate order, so the rows stay in the
// original coordinates and no permutation needs undoing. After the permuted
// standard form [I A B / 0 2I 2C], unit_cols index the I block and two_cols
// the 2I block.
struct Z4StandardForm {
    uint32_t n = 0;
    uint32_t k1 = 0; // order-4 rows
    uint32_t k2 = 0; // order-2 rows (all coordinates in {0,2})
    std::vector<Z4Word> rows;
    std::vector<uint32_t> unit_cols;
    std::vector<uint32_t> two_cols;
};

Z4StandardForm z4_standard_form(uint32_t n, const std::vector<Z4Word>& rows);

// Z4-linear code given by k1 order-4 and k2 order-2 generator rows
// (|C| = 4^k1 * 2^k2). Rows given to from_generator_rows are kept verbatim
// for serialization; a reduced basis computed at construction backs
// membership, duality and residue/torsion. Immutable and safe to share.
class Z4Code {
public:
    // Reduce arbitrary rows; the stored generators are the reduced basis.
    static Z4Code from_rows(uint32_t n, std::vector<Z4Word> rows);

    // Keep the rows exactly as given: first k1 rows must contain a unit,
    // the rest must be all-even, and together they must generate a module
    // of size 4^k1 * 2^k2.
    static Z4Code from_generator_rows(uint32_t n, uint32_t k1, uint32_t k2,
                                      std::vector<Z4Word> rows);

    static Z4Code parse(std::string_view z4c_text);
    static Z4Code read_file(const std::string& path);
    std::string format() const;
    void write_file(const std::string& path) const;

    uint32_t length() const { return n_; }
    uint32_t k1() const { return k1_; }
    uint32_t k2() const { return k2_; }
    // log2 of the number of codewords
    uint32_t size_log2() const { return 2 * k1_ + k2_; }
    const std::vector<Z4Word>& rows() const { return rows_; }
    const Z4StandardForm& standard_form() const { return sf_; }

    bool is_self_dual() const { return self_dual_; }

    Z4Code dual() const;

    // Binary code of codewords reduced mod 2. Doubly even whenever the
    // input is self-dual (checked).
    BinaryCode residue() const;

    // Binary code {v : 2v in C}; equals the dual of the residue for
    // self-dual inputs (checked).
    BinaryCode torsion() const;

    bool contains(const Z4Word& w) const;
    bool same_row_space(const Z4Code& rhs) const;

    Z4Code permuted(std::span<const uint32_t> perm) const;
    Z4Code sign_flipped(const BinaryWord& mask) const;

private:
    Z4Code() = default;
    void finish_init();

    uint32_t n_ = 0, k1_ = 0, k2_ = 0;
    std::vector<Z4Word> rows_;
    Z4StandardForm sf_;
    bool self_dual_ = false;
};

// Sufficient generator test for Type II: every generator row and every
// pairwise row sum has Euclidean weight divisible by 8. For self-dual codes
// this decides the type; full-enumeration confirmation for n <= 32 lives in
// the search layer.
Z4Type generator_type_criterion(const Z4Code& c);

} // namespace z4sd

#endif
