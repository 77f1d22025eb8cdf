//
// Project mtss - Copyright 2026 the mtss authors.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mtss/scheme1.hpp"

namespace mtss {

inline constexpr std::size_t kLinkingStringBits = 128;

/// Redactable signature: one CDSS signature per test group plus one for the
/// whole message, linked by a random string and a position tag. Entries can
/// be erased individually without leaving residual bytes.
struct Scheme3Signature {
  std::string hash_id;
  std::string cdss_id;
  std::uint32_t d = 0;
  std::uint32_t t = 0;
  std::uint32_t n = 0;
  std::uint32_t s_bits = 0;  // block size bound in bits; 0 = unbounded
  CffTag cff;
  Bytes r;  // 16-byte linking string, never redacted
  /// t+1 entries; entries[0..t-1] cover the test groups, entries[t] covers
  /// the whole message. nullopt = redacted.
  std::vector<std::optional<Bytes>> entries;

  friend bool operator==(const Scheme3Signature&, const Scheme3Signature&) = default;
};

/// digest || r || id(index1, count), fixed widths, no separators. index1 and
/// count are 1-based and big-endian 32-bit; the tag pins each entry to its
/// position so entries cannot be reordered or moved across signatures.
Bytes scheme3_entry_message(const Digest& payload, ByteView r, std::uint32_t index1,
                            std::uint32_t count);

Scheme3Signature mtss3_sign(const BlockMessage& m, ByteView sk, const CryptoSuite& suite,
                            const CffMatrix& matrix, const SignOptions& opts = {});

/// Accepts via the whole-message entry when it is intact, otherwise decodes
/// the per-row verdicts; redacted entries count as unavailable tests. A
/// rejection carries no index set.
VerifyOutcome mtss3_verify(const BlockMessage& m, const Scheme3Signature& sig, ByteView pk,
                           const CryptoSuite& suite, const CffMatrix& matrix);

/// Erase the given blocks plus the whole-message entry and every row entry
/// whose group touches an erased block. An empty set returns the inputs
/// unchanged. Redacting more than d blocks per call is refused.
std::pair<BlockMessage, Scheme3Signature> mtss3_redact(const BlockMessage& m,
                                                       const Scheme3Signature& sig,
                                                       std::span<const std::uint32_t> to_redact,
                                                       const CffMatrix& matrix);

}  // namespace mtss
