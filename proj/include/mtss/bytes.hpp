//
// Project mtss - Copyright 2026 the mtss authors.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mtss/error.hpp"

namespace mtss {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

inline Bytes to_bytes(std::string_view s) { return Bytes(s.begin(), s.end()); }

inline void put_u32_be(Bytes& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

inline void put_u64_be(Bytes& out, std::uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8)
    out.push_back(static_cast<std::uint8_t>(v >> shift));
}

/// Sequential big-endian reader over a byte view; parse errors throw.
class ByteReader {
public:
  explicit ByteReader(ByteView data) : data_(data) {}

  std::size_t remaining() const { return data_.size() - pos_; }
  bool done() const { return pos_ == data_.size(); }

  std::uint8_t u8() { return take(1)[0]; }

  std::uint32_t u32() {
    ByteView b = take(4);
    return (std::uint32_t{b[0]} << 24) | (std::uint32_t{b[1]} << 16) |
           (std::uint32_t{b[2]} << 8) | std::uint32_t{b[3]};
  }

  std::uint64_t u64() {
    std::uint64_t v = 0;
    for (std::uint8_t byte : take(8)) v = (v << 8) | byte;
    return v;
  }

  Bytes bytes(std::size_t len) {
    ByteView b = take(len);
    return Bytes(b.begin(), b.end());
  }

private:
  ByteView take(std::size_t len) {
    if (remaining() < len) raise(Errc::parse_error, "truncated input");
    ByteView b = data_.subspan(pos_, len);
    pos_ += len;
    return b;
  }

  ByteView data_;
  std::size_t pos_ = 0;
};

std::string to_hex(ByteView data);
Bytes from_hex(std::string_view hex);

}  // namespace mtss
