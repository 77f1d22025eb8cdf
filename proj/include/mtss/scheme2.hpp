//
// Project mtss - Copyright 2026 the mtss authors.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <vector>

#include "mtss/scheme1.hpp"

namespace mtss {

struct CorrectionConfig {
  /// Block size bound s in bits; the candidate space is every bit string
  /// of length 0..s, 2^(s+1)-1 strings including the empty one.
  std::uint32_t max_bits = 8;
  /// Whether check_injective_upto(h, max_bits) ran and passed.
  bool hash_precheck = false;
  /// Stop a block's search at the first match instead of scanning the full
  /// candidate space for a second preimage. Honored only together with
  /// hash_precheck, which is what rules the second preimage out.
  bool fast_exit = false;
};

/// Digests of every candidate bit string in search order (by length, then
/// value). Building one table per (hash, s) and reusing it across messages
/// keeps the per-verification hash count at one row digest per candidate.
class CandidateTable {
public:
  static constexpr std::uint32_t kMaxBits = 20;  // 2^21-1 digests, ~64 MiB

  CandidateTable(const HashFn& h, std::uint32_t max_bits);

  std::uint32_t max_bits() const { return max_bits_; }
  std::uint64_t size() const { return digests_.size(); }
  const Digest& digest(std::uint64_t index) const { return digests_[index]; }

  /// (bit length, value) of the candidate at an enumeration index.
  static std::pair<std::uint32_t, std::uint64_t> candidate_at(std::uint64_t index);
  static std::uint64_t candidate_count(std::uint32_t max_bits);

private:
  std::uint32_t max_bits_;
  std::vector<Digest> digests_;
};

/// Locate suspects with the scheme-1 verifier, then recover each one by
/// searching the candidate space against the digest of its isolating row.
/// A second matching candidate (or none at all) withholds the corrected
/// message while the locate result stands. When table is null a table is
/// built on the fly for max_bits <= CandidateTable::kMaxBits, otherwise
/// candidates are hashed while streaming.
VerifyOutcome mtss2_verify_correct(const BlockMessage& m, const Scheme1Signature& sig, ByteView pk,
                                   const CryptoSuite& suite, const CffMatrix& matrix,
                                   const CorrectionConfig& cfg,
                                   const CandidateTable* table = nullptr);

enum class BlockCorrectionStatus : std::uint8_t {
  corrected,
  collision,      // two candidates matched; the original cannot be determined
  uncorrectable,  // no candidate matched within the size bound
};

struct BlockCorrection {
  std::uint32_t index = 0;
  BlockCorrectionStatus status = BlockCorrectionStatus::uncorrectable;
  Bytes value;  // recovered bytes when status == corrected
};

/// Diagnostic variant: keeps searching past failed blocks and reports
/// per-block results, enabling partial recovery. The embedded outcome
/// keeps the all-or-nothing contract of mtss2_verify_correct.
struct CorrectionReport {
  VerifyOutcome outcome;
  std::vector<BlockCorrection> blocks;
};
CorrectionReport mtss2_correction_report(const BlockMessage& m, const Scheme1Signature& sig,
                                         ByteView pk, const CryptoSuite& suite,
                                         const CffMatrix& matrix, const CorrectionConfig& cfg,
                                         const CandidateTable* table = nullptr);

/// Worst-case hash invocations of a verify-and-correct call in the
/// precomputed-table regime: n + t to locate, plus per-suspect row digests
/// d * (2^(s+1) - 1) and the cached block digests (at most n) when the
/// correction loop runs at all.
std::uint64_t hash_budget(std::uint64_t n, std::uint64_t t, std::uint64_t d, std::uint32_t s);

}  // namespace mtss
