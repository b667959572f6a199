#ifndef Z4SD_CORE_CHECKS_HPP
#define Z4SD_CORE_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "gf2code.hpp"
#include "z4code.hpp"

namespace z4sd {

// Instance-level certificate outcome: hypothesis violations throw, the
// conclusion is evaluated computationally and reported.
struct BoundReport {
    std::string code_id;
    std::string quantity;   // what was checked
    std::string source_tag; // bound family: rains_lee, type2_euclid, binary_sd, s_extremal, ...
    uint32_t claimed = 0;
    uint32_t bound = 0;
    bool satisfied = false;
    std::vector<std::string> facts;

    std::string text() const;
};

// Residue-extremality certificate for self-dual codes of length 24k
// (minimum Lee weight 8k+2 or 8k+4) and 24k+8 (8k+6 or 8k+8): verifies that
// the residue is a doubly even self-dual code meeting the binary bound.
// d_lee is the exact minimum Lee weight when d_lee_exact, otherwise an
// externally established value recorded as an assumption.
BoundReport check_residue_extremal(const Z4Code& c, const std::string& id, uint32_t d_lee,
                                   bool d_lee_exact, uint32_t threads = 1);

// Certificate for binary self-dual containers of the residue at lengths
// 24k+a, a in {2,4,6,10,14,16,18,20,22}: depending on (a, d_lee - 8k) the
// container must be s-extremal of the dictated minimum weight, or extremal
// in the doubly even branch of a = 16. The minimum Lee weight of c is
// established by full enumeration.
BoundReport check_self_dual_container(const Z4Code& c, const BinaryCode& container,
                                      const std::string& id, uint32_t threads = 1);

} // namespace z4sd

#endif
