// Copyright 2026 The tcldpc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tcldpc/errors.hpp"

namespace tcldpc {

// Fixed-length bit vector over GF(2), packed 64 bits per word.
//
// Bit i lives in words()[i / 64] at position i % 64.  Index 0 is the first
// transmitted bit and, when the vector is read as a polynomial, the
// coefficient of x^0.  Unused high bits of the last word are kept zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : words_((size + 63) / 64), size_(size) {}

  // Parses "0101..."; character j becomes bit j.
  static BitVector from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1')
        v.set(i, true);
      else if (bits[i] != '0')
        throw ParseError("bit string may contain only 0 and 1");
    }
    return v;
  }

  // Parses the hex form written by to_hex(): the vector read as the integer
  // sum(bit_i * 2^i), most significant nibble first.
  static BitVector from_hex(std::string_view hex, std::size_t size) {
    if (hex.size() != (size + 3) / 4)
      throw ParseError("hex codeword has wrong length for n=" + std::to_string(size));
    BitVector v(size);
    for (std::size_t j = 0; j < hex.size(); ++j) {
      const char c = hex[hex.size() - 1 - j];
      std::uint64_t nib;
      if (c >= '0' && c <= '9')
        nib = static_cast<std::uint64_t>(c - '0');
      else if (c >= 'a' && c <= 'f')
        nib = static_cast<std::uint64_t>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F')
        nib = static_cast<std::uint64_t>(c - 'A' + 10);
      else
        throw ParseError("invalid hex digit in codeword");
      v.words_[(4 * j) / 64] |= nib << ((4 * j) % 64);
    }
    if (size % 64 != 0 && (v.words_.back() >> (size % 64)) != 0)
      throw ParseError("hex codeword has bits beyond n=" + std::to_string(size));
    return v;
  }

  static BitVector from_words(std::vector<std::uint64_t> words, std::size_t size) {
    assert(words.size() == (size + 63) / 64);
    BitVector v;
    v.words_ = std::move(words);
    v.size_ = size;
    v.trim();
    return v;
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool get(std::size_t i) const {
    assert(i < size_);
    return (words_[i / 64] >> (i % 64)) & 1u;
  }

  void set(std::size_t i, bool value) {
    assert(i < size_);
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value)
      words_[i / 64] |= mask;
    else
      words_[i / 64] &= ~mask;
  }

  void flip(std::size_t i) {
    assert(i < size_);
    words_[i / 64] ^= std::uint64_t{1} << (i % 64);
  }

  std::size_t weight() const {
    std::size_t w = 0;
    for (std::uint64_t word : words_) w += static_cast<std::size_t>(std::popcount(word));
    return w;
  }

  bool any() const {
    for (std::uint64_t word : words_)
      if (word) return true;
    return false;
  }

  BitVector& operator^=(const BitVector& other) {
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
  }

  friend BitVector operator^(BitVector a, const BitVector& b) {
    a ^= b;
    return a;
  }

  bool operator==(const BitVector& other) const = default;

  // Order by bit content with index 0 most significant, so the word that
  // differs earliest in transmission order decides.
  bool lex_less(const BitVector& other) const {
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const std::uint64_t d = words_[i] ^ other.words_[i];
      if (d) return (other.words_[i] >> std::countr_zero(d)) & 1u;
    }
    return false;
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::uint64_t word(std::size_t i) const { return words_[i]; }
  std::uint64_t* word_data() { return words_.data(); }

  BitVector slice(std::size_t begin, std::size_t length) const {
    assert(begin + length <= size_);
    BitVector out(length);
    for (std::size_t i = 0; i < length; ++i) out.set(i, get(begin + i));
    return out;
  }

  static BitVector concat(const BitVector& a, const BitVector& b) {
    BitVector out(a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.set(i, a.get(i));
    for (std::size_t i = 0; i < b.size(); ++i) out.set(a.size() + i, b.get(i));
    return out;
  }

  std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  std::string to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    const std::size_t n_digits = (size_ + 3) / 4;
    std::string s(n_digits, '0');
    for (std::size_t j = 0; j < n_digits; ++j) {
      const std::uint64_t nib = (words_[(4 * j) / 64] >> ((4 * j) % 64)) & 0xf;
      s[n_digits - 1 - j] = digits[nib];
    }
    return s;
  }

 private:
  void trim() {
    if (size_ % 64 != 0 && !words_.empty()) words_.back() &= (~std::uint64_t{0}) >> (64 - size_ % 64);
  }

  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint64_t w : v.words()) {
      h ^= w;
      h *= 0x100000001b3ull;
    }
    h ^= v.size();
    h *= 0x100000001b3ull;
    return static_cast<std::size_t>(h);
  }
};

}  // namespace tcldpc
