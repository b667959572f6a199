#ifndef Z4SD_CORE_Z4WORD_HPP
#define Z4SD_CORE_Z4WORD_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "binword.hpp"
#include "errors.hpp"

namespace z4sd {

// Component split of a word over Z4: hamming = n1+n2+n3, lee = n1+2*n2+n3,
// euclidean = n1+4*n2+n3, where n_i counts coordinates equal to i.
struct WeightTriple {
    uint32_t hamming = 0;
    uint32_t lee = 0;
    uint32_t euclidean = 0;
    uint32_t odd = 0;  // n1+n3
    uint32_t twos = 0; // n2
};

// Vector over Z4 stored as two bit planes: coordinate i has value
// 2*hi[i] + lo[i]. All three weights reduce to popcounts on the planes.
class Z4Word {
public:
    Z4Word() = default;

    explicit Z4Word(uint32_t length)
        : len_(length), lo_(limbs_for(length), 0), hi_(limbs_for(length), 0) {}

    static Z4Word from_digits(std::span<const uint8_t> digits) {
        Z4Word w(static_cast<uint32_t>(digits.size()));
        for (uint32_t i = 0; i < w.len_; ++i) {
            if (digits[i] > 3) throw ArgumentError("z4 digit out of range");
            w.set_digit(i, digits[i]);
        }
        return w;
    }

    static Z4Word from_string(std::string_view digits) {
        Z4Word w(static_cast<uint32_t>(digits.size()));
        for (uint32_t i = 0; i < w.len_; ++i) {
            char c = digits[i];
            if (c < '0' || c > '3')
                throw ParseError("z4 word: invalid digit '" + std::string(1, c) + "'");
            w.set_digit(i, static_cast<uint8_t>(c - '0'));
        }
        return w;
    }

    uint32_t length() const { return len_; }

    uint8_t digit(uint32_t i) const {
        uint32_t l = i >> 6, b = i & 63;
        return static_cast<uint8_t>((((hi_[l] >> b) & 1) << 1) | ((lo_[l] >> b) & 1));
    }

    void set_digit(uint32_t i, uint8_t d) {
        uint32_t l = i >> 6;
        uint64_t m = uint64_t(1) << (i & 63);
        if (d & 1) lo_[l] |= m; else lo_[l] &= ~m;
        if (d & 2) hi_[l] |= m; else hi_[l] &= ~m;
    }

    WeightTriple weights() const {
        uint32_t odd = 0, twos = 0;
        for (size_t i = 0; i < lo_.size(); ++i) {
            odd += static_cast<uint32_t>(std::popcount(lo_[i]));
            twos += static_cast<uint32_t>(std::popcount(hi_[i] & ~lo_[i]));
        }
        return WeightTriple{odd + twos, odd + 2 * twos, odd + 4 * twos, odd, twos};
    }

    // Coordinatewise sum mod 4 via the bit-plane half adder.
    Z4Word plus(const Z4Word& rhs) const {
        check_len(rhs);
        Z4Word r(len_);
        for (size_t i = 0; i < lo_.size(); ++i) {
            r.lo_[i] = lo_[i] ^ rhs.lo_[i];
            r.hi_[i] = hi_[i] ^ rhs.hi_[i] ^ (lo_[i] & rhs.lo_[i]);
        }
        return r;
    }

    // Coordinatewise negation: 1<->3, 0 and 2 fixed.
    Z4Word negated() const {
        Z4Word r = *this;
        for (size_t i = 0; i < lo_.size(); ++i) r.hi_[i] ^= lo_[i];
        return r;
    }

    // Coordinatewise doubling: lo plane moves to hi plane.
    Z4Word doubled() const {
        Z4Word r(len_);
        r.hi_ = lo_;
        return r;
    }

    Z4Word scaled(uint8_t c) const {
        switch (c & 3) {
            case 0: return Z4Word(len_);
            case 1: return *this;
            case 2: return doubled();
            default: return negated();
        }
    }

    // Standard inner product, reduced mod 4 after wide accumulation.
    uint8_t inner_product(const Z4Word& rhs) const {
        check_len(rhs);
        uint64_t units = 0, twos = 0;
        for (size_t i = 0; i < lo_.size(); ++i) {
            units += std::popcount(lo_[i] & rhs.lo_[i]);
            twos += std::popcount(hi_[i] & rhs.lo_[i]);
            twos += std::popcount(lo_[i] & rhs.hi_[i]);
        }
        return static_cast<uint8_t>((units + 2 * twos) & 3);
    }

    // Coordinate substitution 0->00, 1->01, 2->11, 3->10; doubles the length.
    // Binary weight of the image equals the Lee weight.
    BinaryWord gray_image() const {
        BinaryWord w(2 * len_);
        for (uint32_t i = 0; i < len_; ++i) {
            uint8_t d = digit(i);
            w.set_bit(2 * i, d == 2 || d == 3);
            w.set_bit(2 * i + 1, d == 1 || d == 2);
        }
        return w;
    }

    // Reduction mod 2.
    BinaryWord lo_plane() const {
        BinaryWord w(len_);
        for (uint32_t i = 0; i < len_; ++i)
            if (lo_[i >> 6] >> (i & 63) & 1) w.set_bit(i, true);
        return w;
    }

    bool is_zero() const {
        for (size_t i = 0; i < lo_.size(); ++i) if (lo_[i] | hi_[i]) return false;
        return true;
    }

    bool all_even() const {
        for (uint64_t l : lo_) if (l) return false;
        return true;
    }

    bool operator==(const Z4Word& rhs) const {
        return len_ == rhs.len_ && lo_ == rhs.lo_ && hi_ == rhs.hi_;
    }
    bool operator!=(const Z4Word& rhs) const { return !(*this == rhs); }

    std::string to_string() const {
        std::string s(len_, '0');
        for (uint32_t i = 0; i < len_; ++i) s[i] = static_cast<char>('0' + digit(i));
        return s;
    }

    // result coordinate i = this coordinate perm[i].
    Z4Word permuted(std::span<const uint32_t> perm) const {
        if (perm.size() != len_) throw ArgumentError("permutation size mismatch");
        Z4Word r(len_);
        for (uint32_t i = 0; i < len_; ++i) r.set_digit(i, digit(perm[i]));
        return r;
    }

    // Negate the coordinates selected by mask.
    Z4Word sign_flipped(const BinaryWord& mask) const {
        if (mask.length() != len_) throw ArgumentError("sign mask length mismatch");
        Z4Word r = *this;
        auto ml = mask.limbs();
        for (size_t i = 0; i < lo_.size(); ++i) r.hi_[i] ^= lo_[i] & ml[i];
        return r;
    }

    std::span<const uint64_t> lo_limbs() const { return lo_; }
    std::span<const uint64_t> hi_limbs() const { return hi_; }

    // Support (nonzero positions) of a word of length <= 64 as one machine word.
    uint64_t support_mask64() const { return (lo_.empty() ? 0 : lo_[0] | hi_[0]); }

private:
    void check_len(const Z4Word& rhs) const {
        if (len_ != rhs.len_) throw ArgumentError("z4 word length mismatch");
    }

    uint32_t len_ = 0;
    std::vector<uint64_t> lo_, hi_;
};

} // namespace z4sd

#endif
