// Copyright 2026 The qwqrng Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qwqrng {

/// Packed bit sequence. Bit i lives in word i/64 at bit position i%64, so the
/// words double as a GF(2) polynomial with bit i the coefficient of z^i.
/// Bits past size() in the last word are always zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : words_((size + 63) / 64, 0), size_(size) {}

    static BitVector from_bits(std::span<const std::uint8_t> bits);
    /// Low `size` bits of the given words.
    static BitVector from_words(std::vector<std::uint64_t> words, std::size_t size);

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool get(std::size_t i) const { return ((words_[i >> 6] >> (i & 63)) & 1U) != 0; }
    void set(std::size_t i, bool value) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        words_[i >> 6] = value ? (words_[i >> 6] | mask) : (words_[i >> 6] & ~mask);
    }
    void push_back(bool value);

    /// Append the low `width` bits of `value`, most significant first.
    void append_msb_first(std::uint64_t value, unsigned width);

    std::span<const std::uint64_t> words() const { return words_; }

    std::size_t count_ones() const;
    std::vector<std::uint8_t> to_bits() const;

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

/// Lowercase hex, four bits per digit with the earliest bit as the digit's
/// most significant bit. A trailing partial nibble is zero-padded.
std::string to_hex(const BitVector& bits);

/// Inverse of to_hex for a known bit length.
BitVector from_hex(const std::string& hex, std::size_t size);

}  // namespace qwqrng
