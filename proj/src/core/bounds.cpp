#include "bounds.hpp"

#include "errors.hpp"

namespace z4sd {

uint32_t lee_upper_bound(uint32_t n) {
    if (n < 2 || n % 2 != 0)
        throw PreconditionError("lee_upper_bound: length must be even and >= 2");
    static constexpr uint32_t g[12] = {4, 2, 4, 4, 8, 4, 4, 6, 8, 8, 8, 8};
    return 8 * (n / 24) + g[(n % 24) / 2];
}

uint32_t euclidean_upper_bound(uint32_t n, Z4Type type) {
    if (n == 0) throw PreconditionError("euclidean_upper_bound: length must be positive");
    if (type == Z4Type::II) {
        if (n % 8 != 0)
            throw PreconditionError(
                "euclidean_upper_bound: a Type II code exists only for lengths divisible by 8");
        return 8 * (n / 24) + 8;
    }
    return 8 * (n / 24) + (n % 24 == 23 ? 12 : 8);
}

uint32_t binary_sd_upper_bound(uint32_t n) {
    if (n < 2 || n % 2 != 0)
        throw PreconditionError("binary_sd_upper_bound: length must be even and >= 2");
    return 4 * (n / 24) + (n % 24 == 22 ? 6 : 4);
}

} // namespace z4sd
