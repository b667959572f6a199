#ifndef Z4SD_TESTS_TEST_UTIL_HPP
#define Z4SD_TESTS_TEST_UTIL_HPP

#include <string>
#include <vector>

#include "core/gf2code.hpp"
#include "core/rng.hpp"
#include "core/z4code.hpp"
#include "oracle.hpp"

#ifndef Z4SD_DATA_DIR
#define Z4SD_DATA_DIR "data"
#endif

namespace testutil {

inline std::string data_path(const std::string& rel) {
    return std::string(Z4SD_DATA_DIR) + "/" + rel;
}

inline std::string catalog_path(const std::string& file) {
    return data_path("catalog/" + file);
}

inline z4sd::Z4Word word4(const oracle::Vec& v) {
    return z4sd::Z4Word::from_digits(v);
}

inline oracle::Vec vec_of(const z4sd::Z4Word& w) {
    oracle::Vec v(w.length());
    for (uint32_t i = 0; i < w.length(); ++i) v[i] = w.digit(i);
    return v;
}

inline oracle::Vec vec_of(const z4sd::BinaryWord& w) {
    oracle::Vec v(w.length());
    for (uint32_t i = 0; i < w.length(); ++i) v[i] = w.bit(i);
    return v;
}

inline oracle::Vec random_z4_vec(z4sd::SplitMix64& rng, uint32_t n) {
    oracle::Vec v(n);
    for (auto& d : v) d = static_cast<uint8_t>(rng.below(4));
    return v;
}

// random Z4 code from a handful of random rows
inline z4sd::Z4Code random_z4_code(z4sd::SplitMix64& rng, uint32_t n, uint32_t rows) {
    std::vector<z4sd::Z4Word> gens;
    for (uint32_t i = 0; i < rows; ++i) gens.push_back(word4(random_z4_vec(rng, n)));
    return z4sd::Z4Code::from_rows(n, std::move(gens));
}

// random self-orthogonal binary code grown by rejection sampling; doubly
// even when requested (needs n divisible by 8 for room to grow)
inline z4sd::BinaryCode random_self_orthogonal(z4sd::SplitMix64& rng, uint32_t n,
                                               uint32_t target_dim, bool doubly_even) {
    using namespace z4sd;
    std::vector<BinaryWord> rows;
    BinaryCode cur = BinaryCode::from_rows(n, rows);
    uint32_t stale = 0;
    while (cur.dim() < target_dim && stale < 2000) {
        BinaryWord v(n);
        for (uint32_t i = 0; i < n; ++i)
            if (rng.coin()) v.set_bit(i, true);
        uint32_t w = v.weight();
        bool ok = (doubly_even ? w % 4 == 0 : w % 2 == 0) && !v.is_zero();
        for (const auto& r : cur.rows())
            if (!ok || r.dot(v)) ok = false;
        if (ok && !cur.contains(v)) {
            auto next = cur.rows();
            next.push_back(v);
            cur = BinaryCode::from_rows(n, next);
            stale = 0;
        } else {
            ++stale;
        }
    }
    return cur;
}

} // namespace testutil

#endif
