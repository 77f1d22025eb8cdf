//
// Project mtss - Copyright 2026 the mtss authors.
// SPDX-License-Identifier: Apache-2.0
//
#include "mtss/message.hpp"

#include <string>

namespace mtss {

BlockMessage BlockMessage::from_entries(std::vector<std::optional<Bytes>> entries) {
  if (entries.empty()) raise(Errc::unsupported_parameter, "a message needs at least one block");
  BlockMessage m;
  m.entries_ = std::move(entries);
  return m;
}

BlockMessage::BlockMessage(std::vector<Bytes> blocks) {
  if (blocks.empty()) raise(Errc::unsupported_parameter, "a message needs at least one block");
  entries_.reserve(blocks.size());
  for (auto& b : blocks) entries_.emplace_back(std::move(b));
}

BlockMessage BlockMessage::split_fixed(ByteView data, std::size_t block_bytes) {
  if (block_bytes == 0) raise(Errc::unsupported_parameter, "block size must be positive");
  std::vector<Bytes> blocks;
  if (data.empty()) {
    blocks.emplace_back();
  } else {
    for (std::size_t off = 0; off < data.size(); off += block_bytes) {
      const std::size_t len = std::min(block_bytes, data.size() - off);
      blocks.emplace_back(data.begin() + off, data.begin() + off + len);
    }
  }
  return BlockMessage(std::move(blocks));
}

BlockMessage BlockMessage::split_after_delim(ByteView data, std::uint8_t delim) {
  std::vector<Bytes> blocks;
  Bytes current;
  for (std::uint8_t b : data) {
    current.push_back(b);
    if (b == delim) {
      blocks.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty() || blocks.empty()) blocks.push_back(std::move(current));
  return BlockMessage(std::move(blocks));
}

bool BlockMessage::any_redacted() const {
  for (const auto& e : entries_)
    if (!e.has_value()) return true;
  return false;
}

const Bytes& BlockMessage::block(std::size_t i) const {
  const auto& e = entries_.at(i);
  if (!e.has_value()) raise(Errc::unsupported_parameter, "block " + std::to_string(i) + " is redacted");
  return *e;
}

Bytes BlockMessage::join() const {
  Bytes out;
  for (const auto& e : entries_) {
    if (!e.has_value()) raise(Errc::unsupported_parameter, "cannot join a redacted message");
    out.insert(out.end(), e->begin(), e->end());
  }
  return out;
}

std::vector<std::uint32_t> diff(const BlockMessage& a, const BlockMessage& b) {
  if (a.size() != b.size()) raise(Errc::block_count_mismatch, "diff needs equal block counts");
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.entries()[i] != b.entries()[i]) out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

}  // namespace mtss
