//
// Project mtss - Copyright 2026 the mtss authors.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mtss/bytes.hpp"
#include "mtss/error.hpp"

namespace mtss {

/// A message split into ordered blocks. A block is either present (bytes,
/// possibly empty) or redacted; redaction erases the content entirely and
/// is used by scheme 3 only.
class BlockMessage {
public:
  BlockMessage() = default;
  explicit BlockMessage(std::vector<Bytes> blocks);
  static BlockMessage from_entries(std::vector<std::optional<Bytes>> entries);

  /// Split into fixed-size blocks; the last block may be shorter. Empty
  /// input becomes a single empty block so n >= 1 always holds.
  static BlockMessage split_fixed(ByteView data, std::size_t block_bytes);
  /// Split after each delimiter byte; the delimiter stays with its block.
  static BlockMessage split_after_delim(ByteView data, std::uint8_t delim);

  std::size_t size() const { return entries_.size(); }
  bool redacted(std::size_t i) const { return !entries_.at(i).has_value(); }
  bool any_redacted() const;
  const Bytes& block(std::size_t i) const;
  void set_block(std::size_t i, Bytes b) { entries_.at(i) = std::move(b); }
  void redact_block(std::size_t i) { entries_.at(i).reset(); }

  /// The original byte stream (concatenation of all blocks); every split
  /// mode round-trips through join. Requires no redacted blocks.
  Bytes join() const;

  const std::vector<std::optional<Bytes>>& entries() const { return entries_; }

  friend bool operator==(const BlockMessage&, const BlockMessage&) = default;

private:
  std::vector<std::optional<Bytes>> entries_;
};

/// Indices where two equal-length block messages differ. A redacted entry
/// equals another redacted entry and differs from any present block.
std::vector<std::uint32_t> diff(const BlockMessage& a, const BlockMessage& b);

}  // namespace mtss
