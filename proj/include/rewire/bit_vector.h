#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace rewire {

/// Fixed-length vector over GF(2), packed into 64-bit words.
///
/// Bits beyond size() in the last word are always zero, so word-wise
/// comparisons and popcounts never see garbage.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t num_bits);
    BitVector(std::initializer_list<int> bits);

    /// Parses a string of '0'/'1' characters, index 0 first.
    static BitVector from_string(std::string_view bits);

    size_t size() const {
        return num_bits_;
    }
    bool get(size_t index) const {
        return (words_[index >> 6] >> (index & 63)) & 1;
    }
    bool operator[](size_t index) const {
        return get(index);
    }
    void set(size_t index, bool value);
    void flip(size_t index) {
        words_[index >> 6] ^= uint64_t{1} << (index & 63);
    }

    BitVector &operator^=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);
    friend BitVector operator^(BitVector a, const BitVector &b) {
        a ^= b;
        return a;
    }
    friend BitVector operator&(BitVector a, const BitVector &b) {
        a &= b;
        return a;
    }

    size_t popcount() const;
    /// Number of positions set in both vectors.
    size_t overlap(const BitVector &other) const;
    /// Parity of the overlap (the GF(2) dot product).
    bool dot(const BitVector &other) const {
        return overlap(other) & 1;
    }
    bool any() const;
    bool none() const {
        return !any();
    }

    /// Bits [begin, begin + length).
    BitVector slice(size_t begin, size_t length) const;
    /// This vector followed by `tail`.
    BitVector concat(const BitVector &tail) const;

    bool operator==(const BitVector &other) const = default;
    bool operator<(const BitVector &other) const;

    std::string str() const;
    size_t hash() const;

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace rewire
