#include "rewire/bit_vector.h"

#include <bit>

#include "rewire/errors.h"

namespace rewire {

BitVector::BitVector(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {
}

BitVector::BitVector(std::initializer_list<int> bits) : BitVector(bits.size()) {
    size_t k = 0;
    for (int b : bits) {
        set(k++, b != 0);
    }
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector result(bits.size());
    for (size_t k = 0; k < bits.size(); k++) {
        if (bits[k] == '1') {
            result.set(k, true);
        } else if (bits[k] != '0') {
            throw ParseError("bit string has character '" + std::string(1, bits[k]) + "' at position " +
                             std::to_string(k));
        }
    }
    return result;
}

void BitVector::set(size_t index, bool value) {
    uint64_t mask = uint64_t{1} << (index & 63);
    if (value) {
        words_[index >> 6] |= mask;
    } else {
        words_[index >> 6] &= ~mask;
    }
}

BitVector &BitVector::operator^=(const BitVector &other) {
    if (other.num_bits_ != num_bits_) {
        throw DimensionError("xor of bit vectors with lengths " + std::to_string(num_bits_) + " and " +
                             std::to_string(other.num_bits_));
    }
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    if (other.num_bits_ != num_bits_) {
        throw DimensionError("and of bit vectors with lengths " + std::to_string(num_bits_) + " and " +
                             std::to_string(other.num_bits_));
    }
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] &= other.words_[w];
    }
    return *this;
}

size_t BitVector::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

size_t BitVector::overlap(const BitVector &other) const {
    if (other.num_bits_ != num_bits_) {
        throw DimensionError("overlap of bit vectors with lengths " + std::to_string(num_bits_) + " and " +
                             std::to_string(other.num_bits_));
    }
    size_t total = 0;
    for (size_t w = 0; w < words_.size(); w++) {
        total += std::popcount(words_[w] & other.words_[w]);
    }
    return total;
}

bool BitVector::any() const {
    for (uint64_t w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

BitVector BitVector::slice(size_t begin, size_t length) const {
    if (begin + length > num_bits_) {
        throw DimensionError("slice out of range");
    }
    BitVector result(length);
    for (size_t k = 0; k < length; k++) {
        result.set(k, get(begin + k));
    }
    return result;
}

BitVector BitVector::concat(const BitVector &tail) const {
    BitVector result(num_bits_ + tail.num_bits_);
    for (size_t k = 0; k < num_bits_; k++) {
        result.set(k, get(k));
    }
    for (size_t k = 0; k < tail.num_bits_; k++) {
        result.set(num_bits_ + k, tail.get(k));
    }
    return result;
}

bool BitVector::operator<(const BitVector &other) const {
    if (num_bits_ != other.num_bits_) {
        return num_bits_ < other.num_bits_;
    }
    for (size_t k = 0; k < num_bits_; k++) {
        if (get(k) != other.get(k)) {
            return other.get(k);
        }
    }
    return false;
}

std::string BitVector::str() const {
    std::string out;
    out.reserve(num_bits_);
    for (size_t k = 0; k < num_bits_; k++) {
        out.push_back(get(k) ? '1' : '0');
    }
    return out;
}

size_t BitVector::hash() const {
    uint64_t h = 1469598103934665603ULL ^ num_bits_;
    for (uint64_t w : words_) {
        h = (h ^ w) * 1099511628211ULL;
    }
    return static_cast<size_t>(h);
}

}  // namespace rewire
