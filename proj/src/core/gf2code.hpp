#ifndef Z4SD_CORE_GF2CODE_HPP
#define Z4SD_CORE_GF2CODE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "binword.hpp"

namespace z4sd {

// Binary linear code given by generator rows. The rows passed in are kept
// verbatim for serialization; a reduced row echelon basis is computed once at
// construction and backs membership, duality and equality. Immutable.
class BinaryCode {
public:
    // Placeholder of length 0; every factory returns a valid code.
    BinaryCode() = default;

    // Reduces the rows, drops dependent ones; the stored generators are the
    // echelon basis.
    static BinaryCode from_rows(uint32_t n, std::vector<BinaryWord> rows);

    // Keeps the rows exactly as given; they must be independent.
    static BinaryCode from_generator_rows(uint32_t n, std::vector<BinaryWord> rows);

    static BinaryCode parse(std::string_view g2c_text);
    static BinaryCode read_file(const std::string& path);
    std::string format() const;
    void write_file(const std::string& path) const;

    uint32_t length() const { return n_; }
    uint32_t dim() const { return static_cast<uint32_t>(rows_.size()); }
    const std::vector<BinaryWord>& rows() const { return rows_; }
    const std::vector<BinaryWord>& rref_rows() const { return rref_; }
    const std::vector<uint32_t>& pivot_cols() const { return pivots_; }

    bool contains(const BinaryWord& w) const;
    bool contains_code(const BinaryCode& sub) const;
    bool same_row_space(const BinaryCode& rhs) const;

    BinaryCode dual() const;

    bool is_self_orthogonal() const;
    bool is_self_dual() const { return 2 * dim() == n_ && is_self_orthogonal(); }

    // Codeword for a message given as the low dim() bits of msg.
    BinaryWord codeword(uint64_t msg) const;

private:
    uint32_t n_ = 0;
    std::vector<BinaryWord> rows_;   // as constructed
    std::vector<BinaryWord> rref_;   // canonical reduced echelon basis
    std::vector<uint32_t> pivots_;   // pivot column of rref_[i]
};

enum class ParityClass { DoublyEven, SinglyEven, Neither };

// DoublyEven: every codeword weight divisible by 4 (generators have weight
// 0 mod 4 and are pairwise orthogonal). SinglyEven: all weights even with
// some codeword of weight 2 mod 4. Neither: an odd-weight codeword exists.
ParityClass parity_class(const BinaryCode& c);

enum class MinWeightMethod { Auto, Exhaustive, BrouwerZimmermann };

// Minimum nonzero codeword weight. Exhaustive enumerates 2^k messages in
// Gray order (k <= 28); BrouwerZimmermann enumerates low-weight messages
// over a chain of information sets and stops once its lower bound meets the
// best weight seen.
uint32_t min_weight(const BinaryCode& c, MinWeightMethod method = MinWeightMethod::Auto);

// Full weight distribution as (weight, count) pairs, zero word included.
// Guarded to k <= 28.
std::vector<std::pair<uint32_t, uint64_t>> weight_distribution(const BinaryCode& c);

// Subcode of codewords with weight divisible by 4 inside a singly even
// self-dual code; has codimension 1.
BinaryCode doubly_even_subcode(const BinaryCode& c);

// Shadow of a singly even self-dual code C: the complement of C inside the
// dual of its doubly even subcode C0. Cosets: dual(C0) = C0 + (C\C0) +
// (C0+shadow_rep) + (C0+shadow_rep+even_rep), the last two forming the shadow.
struct Shadow {
    BinaryCode c0;
    BinaryCode c0_dual;
    BinaryWord even_rep;    // codeword of C with weight 2 mod 4
    BinaryWord shadow_rep;  // vector of dual(C0) outside C
    uint64_t size = 0;
    uint32_t min_weight = 0;
};
Shadow shadow(const BinaryCode& c);

enum class CoveringRadiusMethod { Exact, DelsarteBound };

// Exact: largest coset leader weight, by increasing-weight syndrome sweep
// (n-k <= 28). DelsarteBound: number of nonzero weights in the dual.
uint32_t covering_radius(const BinaryCode& c, CoveringRadiusMethod method);

enum class CompletionTarget { Any, DoublyEven, SinglyEven };

// Extends a self-orthogonal code to a self-dual code of the requested
// parity by repeatedly adjoining the first suitable vector of the current
// dual in message-index order. The required containers exist whenever the
// preconditions hold, so exhaustion is an internal error.
BinaryCode complete_to_self_dual(const BinaryCode& c, CompletionTarget target);

// d(C) meets the self-dual minimum weight bound with equality.
bool is_extremal(const BinaryCode& c);

// Shadow minimum weight meets its upper bound with equality (singly even
// self-dual input required).
bool is_s_extremal(const BinaryCode& c);

} // namespace z4sd

#endif
