#ifndef Z4SD_CORE_BOUNDS_HPP
#define Z4SD_CORE_BOUNDS_HPP

#include <cstdint>

namespace z4sd {

enum class Z4Type { I, II };

// Upper bound on the minimum Lee weight of a self-dual Z4 code of even
// length n = 24k + l: 8k + g(l) with g tabulated over the twelve residues.
uint32_t lee_upper_bound(uint32_t n);

// Upper bound on the minimum Euclidean weight of a self-dual Z4 code.
// Type II requires n = 0 mod 8. Type I: 8*floor(n/24)+8, except +12 when
// n = 23 mod 24.
uint32_t euclidean_upper_bound(uint32_t n, Z4Type type);

// Upper bound on the minimum weight of a binary self-dual code of even
// length n: 4*floor(n/24)+4, or +6 when n = 22 mod 24.
uint32_t binary_sd_upper_bound(uint32_t n);

} // namespace z4sd

#endif
