//
// Project mtss - Copyright 2026 the mtss authors.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <optional>

#include "mtss/message.hpp"
#include "mtss/scheme1.hpp"
#include "mtss/scheme3.hpp"

namespace mtss {

// Detached signature container, all integers big-endian:
//   magic "MTSS" | version 0x01 | scheme (1 or 3)
//   hash id, cdss id        (u32 length + ASCII each)
//   d, t, n, s              (u32 each; s = 0 means unbounded)
//   cff tag: kind byte; identity -> u32 columns,
//            polynomial -> u32 q, u32 k,
//            literal -> digest of the matrix's text form
//   scheme 1 body: t+1 raw digests, then u32 length + CDSS signature
//   scheme 3 body: 16-byte r, presence bitmap over t+1 entries (MSB-first
//                  per byte), then u32 length + bytes per surviving entry
//
// A scheme-1 file with s > 0 is correctable; scheme 2 is not a distinct
// format.
inline constexpr std::uint8_t kSigVersion = 0x01;

Bytes serialize_signature(const Scheme1Signature& sig);
Bytes serialize_signature(const Scheme3Signature& sig);

struct ParsedSignature {
  std::uint8_t scheme = 0;
  std::optional<Scheme1Signature> scheme1;
  std::optional<Scheme3Signature> scheme3;
};
ParsedSignature parse_signature(ByteView data);

// Redacted message container:
//   magic "MTSR" | version 0x01 | u32 n | presence bitmap over n blocks |
//   u32 length + bytes per surviving block
Bytes serialize_redacted_message(const BlockMessage& m);
BlockMessage parse_redacted_message(ByteView data);
bool looks_like_redacted_message(ByteView data);

/// Payload bytes of a signature: digests plus CDSS signature (scheme 1) or
/// surviving entries plus r (scheme 3). Everything else in the file is
/// framing, reported by signature_overhead_bytes; payload + overhead equals
/// the serialized size.
std::uint64_t signature_payload_bytes(const Scheme1Signature& sig);
std::uint64_t signature_payload_bytes(const Scheme3Signature& sig);
std::uint64_t signature_overhead_bytes(const Scheme1Signature& sig);
std::uint64_t signature_overhead_bytes(const Scheme3Signature& sig);

}  // namespace mtss
