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

#include "qwqrng/bits.hpp"

#include <bit>

#include "qwqrng/errors.hpp"

namespace qwqrng {

BitVector BitVector::from_bits(std::span<const std::uint8_t> bits) {
    BitVector out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        require(bits[i] <= 1, "bit vector: entries must be 0 or 1");
        out.set(i, bits[i] != 0);
    }
    return out;
}

BitVector BitVector::from_words(std::vector<std::uint64_t> words, std::size_t size) {
    require(words.size() * 64 >= size, "bit vector: not enough words for the requested size");
    BitVector out;
    words.resize((size + 63) / 64);
    if (size % 64 != 0) {
        words.back() &= (std::uint64_t{1} << (size % 64)) - 1;
    }
    out.words_ = std::move(words);
    out.size_ = size;
    return out;
}

void BitVector::push_back(bool value) {
    if (size_ % 64 == 0) {
        words_.push_back(0);
    }
    ++size_;
    set(size_ - 1, value);
}

void BitVector::append_msb_first(std::uint64_t value, unsigned width) {
    for (unsigned b = width; b-- > 0;) {
        push_back(((value >> b) & 1U) != 0);
    }
}

std::size_t BitVector::count_ones() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

std::vector<std::uint8_t> BitVector::to_bits() const {
    std::vector<std::uint8_t> out(size_);
    for (std::size_t i = 0; i < size_; ++i) {
        out[i] = get(i) ? 1 : 0;
    }
    return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    require(other.size_ == size_, "bit vector: xor of different lengths");
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

std::string to_hex(const BitVector& bits) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve((bits.size() + 3) / 4);
    for (std::size_t i = 0; i < bits.size(); i += 4) {
        unsigned nibble = 0;
        for (std::size_t k = 0; k < 4; ++k) {
            nibble <<= 1;
            if (i + k < bits.size() && bits.get(i + k)) {
                nibble |= 1U;
            }
        }
        out.push_back(kDigits[nibble]);
    }
    return out;
}

BitVector from_hex(const std::string& hex, std::size_t size) {
    require(hex.size() == (size + 3) / 4, "hex: digit count does not match bit length");
    BitVector out(size);
    for (std::size_t d = 0; d < hex.size(); ++d) {
        const char c = hex[d];
        unsigned v = 0;
        if (c >= '0' && c <= '9') {
            v = static_cast<unsigned>(c - '0');
        } else if (c >= 'a' && c <= 'f') {
            v = static_cast<unsigned>(c - 'a' + 10);
        } else {
            throw InvalidArgument("hex: invalid digit");
        }
        for (std::size_t k = 0; k < 4; ++k) {
            const std::size_t i = 4 * d + k;
            const bool bit = ((v >> (3 - k)) & 1U) != 0;
            if (i < size) {
                out.set(i, bit);
            } else {
                require(!bit, "hex: nonzero padding bits");
            }
        }
    }
    return out;
}

}  // namespace qwqrng
