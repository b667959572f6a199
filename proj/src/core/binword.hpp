#ifndef Z4SD_CORE_BINWORD_HPP
#define Z4SD_CORE_BINWORD_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace z4sd {

constexpr uint32_t limbs_for(uint32_t nbits) { return (nbits + 63) / 64; }

// Bit vector over GF(2), fixed length, packed into 64-bit limbs (bit i of the
// word is bit i%64 of limb i/64). Treated as immutable once built and shared.
class BinaryWord {
public:
    BinaryWord() = default;

    explicit BinaryWord(uint32_t length)
        : len_(length), limbs_(limbs_for(length), 0) {}

    static BinaryWord from_string(std::string_view bits) {
        BinaryWord w(static_cast<uint32_t>(bits.size()));
        for (uint32_t i = 0; i < w.len_; ++i) {
            char c = bits[i];
            if (c != '0' && c != '1')
                throw ParseError("binary word: invalid character '" + std::string(1, c) + "'");
            if (c == '1') w.set_bit(i, true);
        }
        return w;
    }

    static BinaryWord from_mask(uint32_t length, uint64_t mask) {
        if (length > 64) throw ArgumentError("from_mask: length > 64");
        BinaryWord w(length);
        if (length) w.limbs_[0] = mask & tail_mask(length);
        return w;
    }

    uint32_t length() const { return len_; }

    bool bit(uint32_t i) const { return (limbs_[i >> 6] >> (i & 63)) & 1u; }

    void set_bit(uint32_t i, bool v) {
        uint64_t m = uint64_t(1) << (i & 63);
        if (v) limbs_[i >> 6] |= m; else limbs_[i >> 6] &= ~m;
    }

    uint32_t weight() const {
        uint32_t w = 0;
        for (uint64_t l : limbs_) w += static_cast<uint32_t>(std::popcount(l));
        return w;
    }

    bool is_zero() const {
        for (uint64_t l : limbs_) if (l) return false;
        return true;
    }

    BinaryWord& operator^=(const BinaryWord& rhs) {
        check_len(rhs);
        for (size_t i = 0; i < limbs_.size(); ++i) limbs_[i] ^= rhs.limbs_[i];
        return *this;
    }

    BinaryWord operator^(const BinaryWord& rhs) const {
        BinaryWord r = *this;
        r ^= rhs;
        return r;
    }

    // Standard inner product over GF(2).
    bool dot(const BinaryWord& rhs) const {
        check_len(rhs);
        uint64_t acc = 0;
        for (size_t i = 0; i < limbs_.size(); ++i)
            acc ^= std::popcount(limbs_[i] & rhs.limbs_[i]) & 1;
        return acc & 1;
    }

    bool operator==(const BinaryWord& rhs) const {
        return len_ == rhs.len_ && limbs_ == rhs.limbs_;
    }
    bool operator!=(const BinaryWord& rhs) const { return !(*this == rhs); }

    // Lexicographic by bit string; used only for deterministic ordering.
    bool operator<(const BinaryWord& rhs) const {
        check_len(rhs);
        for (uint32_t i = 0; i < len_; ++i) {
            bool a = bit(i), b = rhs.bit(i);
            if (a != b) return b;
        }
        return false;
    }

    std::string to_string() const {
        std::string s(len_, '0');
        for (uint32_t i = 0; i < len_; ++i) if (bit(i)) s[i] = '1';
        return s;
    }

    std::span<const uint64_t> limbs() const { return limbs_; }

    // First limb; the whole word when length <= 64.
    uint64_t mask64() const { return limbs_.empty() ? 0 : limbs_[0]; }

    static uint64_t tail_mask(uint32_t nbits) {
        uint32_t r = nbits & 63;
        return r ? ((uint64_t(1) << r) - 1) : ~uint64_t(0);
    }

private:
    void check_len(const BinaryWord& rhs) const {
        if (len_ != rhs.len_) throw ArgumentError("binary word length mismatch");
    }

    uint32_t len_ = 0;
    std::vector<uint64_t> limbs_;
};

} // namespace z4sd

#endif
