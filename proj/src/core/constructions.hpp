#ifndef Z4SD_CORE_CONSTRUCTIONS_HPP
#define Z4SD_CORE_CONSTRUCTIONS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "gf2code.hpp"
#include "z4code.hpp"

namespace z4sd {

enum class CirculantKind { Circulant, Negacirculant };

// Square matrix whose row i is the first row rotated right i times, wrapped
// entries multiplied by +1 (circulant) or -1 (negacirculant).
std::vector<Z4Word> circulant_matrix(std::span<const uint8_t> first_row, CirculantKind kind);

struct BorderSpec {
    uint8_t alpha = 0, beta = 0, gamma = 0;
};

// Generator (I_n | right) of length 2n with right block top row
// (alpha, beta, ..., beta), left column gamma below alpha, and the
// (n-1)x(n-1) circulant of first_row in the lower right. Self-duality is
// not assumed; the caller verifies.
Z4Code bordered_double_circulant(std::span<const uint8_t> first_row, BorderSpec border);

// Generator (I_2n | [A B / -B^T A^T]) of length 4n with A and B the
// negacirculants of the given first rows.
Z4Code four_negacirculant(std::span<const uint8_t> row_a, std::span<const uint8_t> row_b);

// Code with generator (I_k | M) for a square digit matrix M.
Z4Code standard_form_code(const std::vector<Z4Word>& m_rows);

// Z4 codes with a prescribed residue: candidates are (I_k | A + 2B) stacked
// with twice a basis of residue_dual/residue, where (I_k | A) generates the
// residue after column permutation and the binary perturbation B solves the
// self-duality conditions row pair by row pair. The solution space is an
// affine subspace of dimension k(k+1)/2 when the residue is self-dual.
class LiftSystem {
public:
    // residue must be doubly even (hence self-orthogonal)
    explicit LiftSystem(const BinaryCode& residue);

    uint32_t free_dim() const { return static_cast<uint32_t>(nullspace_.size()); }
    const BinaryCode& residue() const { return c1_; }

    // Candidate from explicit free coordinates (free_dim bits).
    Z4Code lift(std::span<const uint8_t> free_bits) const;

    // Candidate from one seeded draw of the free coordinates.
    Z4Code lift_from_seed(uint64_t stream_seed) const;

private:
    friend class LightWordOracle;
    BinaryCode c1_;
    uint32_t n_ = 0, k_ = 0, m_ = 0;
    std::vector<uint32_t> piv_, nonpiv_;
    std::vector<BinaryWord> a_rows_;        // A, k rows of m bits
    BinaryWord particular_;                 // flattened k*m solution
    std::vector<BinaryWord> nullspace_;     // flattened k*m basis vectors
    std::vector<BinaryWord> torsion_extra_; // basis of residue_dual modulo residue
};

// Exact test data for "some minimum-weight residue word lifts with no
// coordinate equal to 2". For a self-dual doubly even residue with minimum
// weight d1 that condition is equivalent to d_L(lift) = d1, and it is affine
// in the free coordinates, so candidates can be scored and improved without
// enumerating codewords. Lengths up to 32.
class LightWordOracle {
public:
    explicit LightWordOracle(const LiftSystem& sys);

    uint32_t light_words() const { return static_cast<uint32_t>(r0_.size()); }

    // residuals per light word for a free-coordinate assignment
    std::vector<uint32_t> state(std::span<const uint8_t> free_bits) const;
    // number of light words admitting a 2-free lift (zero residual)
    uint32_t violations(std::span<const uint32_t> state) const;
    // greedy descent on the violation count; mutates bits and state,
    // returns the final violation count
    uint32_t descend(std::vector<uint8_t>& bits, std::vector<uint32_t>& state,
                     uint32_t max_steps) const;

private:
    uint32_t free_ = 0;
    std::vector<uint32_t> r0_;  // residual of the base lift per light word
    std::vector<uint32_t> rho_; // [word * free_ + f] residual deltas
};

struct LiftSearchResult {
    std::vector<Z4Code> codes;      // survivors ordered by trial index
    std::vector<uint64_t> trial_of; // originating trial per survivor
    uint64_t trials = 0;
    uint64_t not_self_dual = 0;     // diagnostic: parametrization failures
    uint64_t residue_mismatch = 0;  // diagnostic: should stay zero
    uint64_t below_target = 0;
};

// Seeded search over the lift space keeping candidates with exact minimum
// Lee weight >= target. Most trials are plain draws of the free
// coordinates; every 32nd trial additionally runs the light-word descent
// from its draw, which is what actually reaches the d(C1)+2 plateau. Every
// candidate is verified self-dual and checked to have the requested residue
// by direct computation. Deterministic for a fixed seed, independent of the
// thread count.
LiftSearchResult lift_search(const BinaryCode& residue, uint64_t trials, uint64_t seed,
                             uint32_t target_d_lee, uint32_t threads = 1);

} // namespace z4sd

#endif
