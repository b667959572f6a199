#ifndef Z4SD_CORE_ENUMERATE_HPP
#define Z4SD_CORE_ENUMERATE_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "z4code.hpp"

namespace z4sd {

// Minimum weights with the number of codewords attaining each. Values are
// kUnknown when no nonzero codeword was seen. exact is false for results of
// a bounded (partial) search.
struct WeightProfile {
    static constexpr uint32_t kUnknown = std::numeric_limits<uint32_t>::max();
    uint32_t d_hamming = kUnknown;
    uint32_t d_lee = kUnknown;
    uint32_t d_euclidean = kUnknown;
    uint64_t count_hamming = 0;
    uint64_t count_lee = 0;
    uint64_t count_euclidean = 0;
    bool exact = false;
};

constexpr uint32_t kNoTarget = std::numeric_limits<uint32_t>::max();

// One full pass over the codeword set in mixed-radix reflected Gray order:
// one generator-row addition per codeword. Optional collectors share the
// same pass. The guard is |C| <= 2^32.
struct SurveyOptions {
    uint32_t census_lee_target = kNoTarget; // collect weight splits at this Lee weight
    uint32_t support_hamming_t = kNoTarget; // collect support masks at this Hamming weight (n <= 64)
    uint32_t abort_below_lee = 0;           // stop once a word with 0 < lee < this appears
    uint32_t threads = 1;
};

struct SurveyResult {
    WeightProfile profile;
    bool aborted = false;
    bool all_euclidean_mult8 = true;
    // (n1+n3, n2) splits with multiplicities among codewords at the census target
    std::vector<std::pair<std::pair<uint32_t, uint32_t>, uint64_t>> census;
    std::vector<uint64_t> support_masks;
    uint64_t visited = 0;      // states visited, zero word included
    uint64_t lo_checksum = 0;  // xor of the visited low planes (first limb)
};

SurveyResult survey(const Z4Code& c, const SurveyOptions& opt);

// Exact minimum Hamming/Lee/Euclidean weights by full enumeration.
// Checks the residue sandwich d(C^(1)) <= d_L <= 2 d(C^(1) dual) and the
// mod-8 Euclidean pattern of the generator type criterion on self-dual
// inputs.
WeightProfile enumerate_weights(const Z4Code& c, uint32_t threads = 1);

// Type decided from the generators, confirmed by full enumeration when
// |C| <= 2^32.
Z4Type type_of(const Z4Code& c, uint32_t threads = 1);

// All (n1+n3, n2) splits among codewords of the given Lee weight.
std::vector<std::pair<std::pair<uint32_t, uint32_t>, uint64_t>>
lee_split_census(const Z4Code& c, uint32_t lee_target, uint32_t threads = 1);

// Support-count fingerprint: over the A_t codewords of Hamming weight t,
// the set of "how many of them are nonzero on all of k chosen columns",
// ranging over every k-column choice. Invariant under coordinate
// permutation and sign change.
struct SInvariant {
    uint32_t t = 0;
    uint32_t k = 0;
    uint32_t max = 0;
    uint32_t min = 0;
    uint64_t cardinality = 0;
    std::vector<uint32_t> values; // sorted distinct counts
};

SInvariant s_invariant(const Z4Code& c, uint32_t t, uint32_t k, uint32_t threads = 1);
SInvariant s_invariant_from_masks(std::span<const uint64_t> masks, uint32_t n, uint32_t t,
                                  uint32_t k);

// Partition of the codes by the tuple of support-count value sets for
// k = 1..k_max: out[i] is the group index of codes[i] (groups numbered by
// first appearance); group_count receives the number of groups. Codes in
// different groups are inequivalent.
std::vector<uint32_t> distinguish(std::span<const Z4Code* const> codes, uint32_t t,
                                  uint32_t k_max, uint32_t* group_count,
                                  uint32_t threads = 1);

// Bounded search: visits every codeword whose message has support at most
// the largest level fitting the budget, then seeded random messages for the
// remainder. Minima are upper bounds (exact = false); witnesses attain them.
struct BoundedSearchResult {
    WeightProfile profile;
    Z4Word hamming_witness;
    Z4Word lee_witness;
    Z4Word euclidean_witness;
    uint64_t visited = 0;
    uint32_t support_level = 0; // deepest fully swept message support level
};

BoundedSearchResult bounded_search(const Z4Code& c, uint64_t budget, uint64_t seed);

} // namespace z4sd

#endif
