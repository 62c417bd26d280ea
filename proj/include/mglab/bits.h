// Copyright 2026 The mglab Authors
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
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace mglab {

/// Largest bit-string length representable by BitString.
constexpr std::size_t kMaxBits = 62;

/// Parity (sum mod 2) of the set bits of a word.
constexpr bool parity_of(std::uint64_t word) {
    return (std::popcount(word) & 1) != 0;
}

/// A fixed-length bit string. Position 0 is the leftmost character of the text
/// form and the most significant bit of value(), matching the wire-0-is-MSB
/// convention used for state vectors and distribution tables.
class BitString {
   public:
    BitString() = default;
    /// Throws InvalidArgument if size exceeds kMaxBits or value has bits beyond size.
    BitString(std::size_t size, std::uint64_t value);

    /// Parses a 0/1 string. Throws ParseError on other characters.
    static BitString from_string(std::string_view text);
    static BitString zeros(std::size_t size);
    static BitString ones(std::size_t size);

    std::size_t size() const {
        return size_;
    }
    std::uint64_t value() const {
        return value_;
    }
    bool operator[](std::size_t position) const {
        return ((value_ >> (size_ - 1 - position)) & 1) != 0;
    }
    std::size_t weight() const {
        return static_cast<std::size_t>(std::popcount(value_));
    }
    bool parity() const {
        return parity_of(value_);
    }

    /// Appends one bit on the right (it becomes the new least significant bit).
    BitString append(bool bit) const;
    /// Removes the rightmost bit.
    BitString drop_last() const;

    std::string str() const;

    auto operator<=>(const BitString &) const = default;

   private:
    std::size_t size_ = 0;
    std::uint64_t value_ = 0;
};

}  // namespace mglab
