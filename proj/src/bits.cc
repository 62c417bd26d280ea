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

#include "mglab/bits.h"

#include "mglab/error.h"

namespace mglab {

BitString::BitString(std::size_t size, std::uint64_t value) : size_(size), value_(value) {
    if (size > kMaxBits) {
        throw Error(ErrorKind::InvalidArgument, "bit string longer than " + std::to_string(kMaxBits));
    }
    if (size < 64 && (value >> size) != 0) {
        throw Error(ErrorKind::InvalidArgument, "value has bits beyond length " + std::to_string(size));
    }
}

BitString BitString::from_string(std::string_view text) {
    if (text.size() > kMaxBits) {
        throw Error(ErrorKind::ParseError, "bit string longer than " + std::to_string(kMaxBits));
    }
    std::uint64_t value = 0;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw Error(ErrorKind::ParseError, "expected only '0' and '1' in bit string '" + std::string(text) + "'");
        }
        value = (value << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return BitString(text.size(), value);
}

BitString BitString::zeros(std::size_t size) {
    return BitString(size, 0);
}

BitString BitString::ones(std::size_t size) {
    return BitString(size, size == 0 ? 0 : (~std::uint64_t{0} >> (64 - size)));
}

BitString BitString::append(bool bit) const {
    return BitString(size_ + 1, (value_ << 1) | static_cast<std::uint64_t>(bit));
}

BitString BitString::drop_last() const {
    if (size_ == 0) {
        throw Error(ErrorKind::LengthMismatch, "cannot drop a bit from an empty string");
    }
    return BitString(size_ - 1, value_ >> 1);
}

std::string BitString::str() const {
    std::string out(size_, '0');
    for (std::size_t i = 0; i < size_; i++) {
        if ((*this)[i]) {
            out[i] = '1';
        }
    }
    return out;
}

}  // namespace mglab
