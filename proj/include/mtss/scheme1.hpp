//
// Project mtss - Copyright 2026 the mtss authors.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mtss/cff.hpp"
#include "mtss/crypto.hpp"
#include "mtss/message.hpp"

namespace mtss {

struct VerifyOutcome {
  enum class Status : std::uint8_t { accept, reject };
  Status status = Status::reject;
  /// Modified block indices (0-based). Absent when rejection happened at
  /// the CDSS step, or on scheme-3 rejections.
  std::optional<std::vector<std::uint32_t>> modified;
  /// Set by verify-and-correct when every suspect block was recovered.
  std::optional<BlockMessage> corrected;

  bool accepted() const { return status == Status::accept; }
};

/// Identifies the CFF matrix inside a signature so verification can rebuild
/// it (identity, polynomial) or pin a caller-supplied one (literal, by
/// digest of its canonical text form).
struct CffTag {
  CffProvenance::Kind kind = CffProvenance::Kind::identity;
  std::uint32_t rows = 0;
  std::uint64_t cols = 0;
  std::uint32_t q = 0;  // polynomial
  std::uint32_t k = 0;  // polynomial
  Digest literal_digest;

  friend bool operator==(const CffTag&, const CffTag&) = default;
};

CffTag make_cff_tag(const CffMatrix& m, const HashFn& h);
/// Rebuild from the tag; literal matrices cannot be rebuilt and must be
/// supplied by the caller (checked with check_tag_matches).
CffMatrix matrix_from_tag(const CffTag& tag);
void check_tag_matches(const CffTag& tag, const CffMatrix& m, const HashFn& h);

struct Scheme1Signature {
  std::string hash_id;
  std::string cdss_id;
  std::uint32_t d = 0;       // claimed tolerance
  std::uint32_t t = 0;       // test count
  std::uint32_t n = 0;       // signed block count (before column padding)
  std::uint32_t s_bits = 0;  // block size bound in bits; 0 = unbounded
  CffTag cff;
  std::vector<Digest> tests;  // T[1..t]
  Digest whole;               // digest of the unsplit message bytes
  Bytes cdss_sig;

  friend bool operator==(const Scheme1Signature&, const Scheme1Signature&) = default;
};

struct SignOptions {
  /// Tolerance recorded in the signature; 0 means the matrix strength.
  /// Must not exceed the matrix strength.
  std::uint32_t claimed_d = 0;
  /// Block size bound recorded in the signature (enables correction).
  /// When nonzero, every block must fit in this many bits.
  std::uint32_t s_bits = 0;
};

/// Blocks are hashed individually, concatenated per matrix row and hashed
/// again; one CDSS signature covers the digest tuple. Matrix columns beyond
/// n are bound to a fixed one-byte pad block on both the signing and the
/// verifying side.
Scheme1Signature mtss1_sign(const BlockMessage& m, ByteView sk, const CryptoSuite& suite,
                            const CffMatrix& matrix, const SignOptions& opts = {});

VerifyOutcome mtss1_verify(const BlockMessage& m, const Scheme1Signature& sig, ByteView pk,
                           const CryptoSuite& suite, const CffMatrix& matrix);

/// Verify plus the per-block digests it computed, so correction can reuse
/// them. block_digests covers all matrix columns (message + padding) and is
/// absent when verification ended before hashing blocks.
struct Scheme1VerifyDetail {
  VerifyOutcome outcome;
  std::optional<std::vector<Digest>> block_digests;
};
Scheme1VerifyDetail mtss1_verify_detailed(const BlockMessage& m, const Scheme1Signature& sig,
                                          ByteView pk, const CryptoSuite& suite,
                                          const CffMatrix& matrix);

/// T[1..t] then the whole-message digest, raw fixed-length digests with no
/// framing; this is the byte string the CDSS signature covers.
Bytes serialize_test_tuple(const Scheme1Signature& sig);

/// The fixed pad block bound to surplus matrix columns.
inline const Bytes& pad_block() {
  static const Bytes pad{0x00};
  return pad;
}

}  // namespace mtss
