//
// Project mtss - Copyright 2026 the mtss authors.
// SPDX-License-Identifier: Apache-2.0
//
#include "mtss/scheme2.hpp"

#include <algorithm>
#include <cstring>
#include <string>

namespace mtss {

CandidateTable::CandidateTable(const HashFn& h, std::uint32_t max_bits) : max_bits_(max_bits) {
  if (max_bits > kMaxBits)
    raise(Errc::budget_exceeded, "candidate table limited to s <= " + std::to_string(kMaxBits));
  const std::uint64_t count = candidate_count(max_bits);
  digests_.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    auto [bits, value] = candidate_at(i);
    digests_.push_back(hash_bit_string(h, value, bits));
  }
}

std::pair<std::uint32_t, std::uint64_t> CandidateTable::candidate_at(std::uint64_t index) {
  const std::uint64_t x = index + 1;
  const std::uint32_t bits = 63 - static_cast<std::uint32_t>(__builtin_clzll(x));
  return {bits, x - (std::uint64_t{1} << bits)};
}

std::uint64_t CandidateTable::candidate_count(std::uint32_t max_bits) {
  return (std::uint64_t{1} << (max_bits + 1)) - 1;
}

std::uint64_t hash_budget(std::uint64_t n, std::uint64_t t, std::uint64_t d, std::uint32_t s) {
  if (s > 62) raise(Errc::unsupported_parameter, "size bound too large");
  const std::uint64_t base = n + t;
  if (d == 0) return base;
  return base + d * CandidateTable::candidate_count(s) + n;
}

namespace {

Bytes candidate_bytes(std::uint64_t value, std::uint32_t bits) {
  Bytes out((bits + 7) / 8);
  for (std::size_t i = out.size(); i-- > 0;) {
    out[out.size() - 1 - i] = static_cast<std::uint8_t>(value >> (8 * i));
  }
  return out;
}

// Search one suspect block: scan candidates against the isolating row's
// signed digest. Returns the matched candidate when exactly one matched.
struct SearchResult {
  std::uint64_t matches = 0;
  std::uint64_t first_index = 0;
};

SearchResult search_block(const Scheme1Signature& sig, const CryptoSuite& suite,
                          const CffMatrix& matrix, const std::vector<Digest>& hj,
                          std::span<const std::uint32_t> suspects, std::uint32_t k,
                          const CorrectionConfig& cfg, const CandidateTable* table) {
  const HashFn& h = *suite.hash;
  const std::uint32_t row = cff_isolating_row(matrix, suspects, k);
  const Digest& want = sig.tests[row];

  // fixed concatenation frame with a slot where h_k goes
  const std::size_t dlen = h.digest_bytes();
  Bytes frame;
  std::size_t slot_offset = 0;
  matrix.for_each_row_col(row, [&](std::uint64_t col) {
    if (col == k) slot_offset = frame.size();
    const Digest& d = hj[col];
    frame.insert(frame.end(), d.begin(), d.end());
  });

  const std::uint64_t count = CandidateTable::candidate_count(cfg.max_bits);
  SearchResult res;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    if (table != nullptr) {
      const Digest& dc = table->digest(idx);
      std::memcpy(frame.data() + slot_offset, dc.data(), dlen);
    } else {
      auto [bits, value] = CandidateTable::candidate_at(idx);
      const Digest dc = hash_bit_string(h, value, bits);
      std::memcpy(frame.data() + slot_offset, dc.data(), dlen);
    }
    if (h.digest(frame) == want) {
      if (res.matches == 0) res.first_index = idx;
      ++res.matches;
      if (res.matches == 1 && cfg.fast_exit && cfg.hash_precheck) break;
      if (res.matches > 1) break;
    }
  }
  return res;
}

CorrectionReport run_correction(const BlockMessage& m, const Scheme1Signature& sig, ByteView pk,
                                const CryptoSuite& suite, const CffMatrix& matrix,
                                const CorrectionConfig& cfg, const CandidateTable* table,
                                bool stop_on_failure) {
  if (cfg.max_bits < 1) raise(Errc::unsupported_parameter, "size bound must be >= 1");
  if (cfg.max_bits > 24)
    raise(Errc::budget_exceeded,
          "size bound " + std::to_string(cfg.max_bits) +
              " bits is beyond the exhaustive search limit of 24");
  if (sig.s_bits != 0 && cfg.max_bits < sig.s_bits)
    raise(Errc::unsupported_parameter, "size bound smaller than the signed block bound");

  CorrectionReport report;
  auto detail = mtss1_verify_detailed(m, sig, pk, suite, matrix);
  report.outcome = std::move(detail.outcome);
  if (!report.outcome.accepted()) return report;

  const auto& suspects = *report.outcome.modified;
  if (suspects.empty()) {
    report.outcome.corrected = m;
    return report;
  }

  std::optional<CandidateTable> local_table;
  if (table == nullptr && cfg.max_bits <= CandidateTable::kMaxBits) {
    local_table.emplace(*suite.hash, cfg.max_bits);
    table = &*local_table;
  } else if (table != nullptr && table->max_bits() != cfg.max_bits) {
    raise(Errc::unsupported_parameter, "candidate table built for a different size bound");
  }

  const std::vector<Digest>& hj = *detail.block_digests;
  BlockMessage corrected = m;
  bool all_corrected = true;
  for (std::uint32_t k : suspects) {
    const SearchResult res = search_block(sig, suite, matrix, hj, suspects, k, cfg, table);
    BlockCorrection entry;
    entry.index = k;
    if (res.matches == 1) {
      auto [bits, value] = CandidateTable::candidate_at(res.first_index);
      if (bits % 8 == 0) {
        entry.status = BlockCorrectionStatus::corrected;
        entry.value = candidate_bytes(value, bits);
        corrected.set_block(k, entry.value);
      } else {
        // a match that cannot be a byte block is a spurious preimage
        entry.status = BlockCorrectionStatus::collision;
      }
    } else if (res.matches > 1) {
      entry.status = BlockCorrectionStatus::collision;
    } else {
      entry.status = BlockCorrectionStatus::uncorrectable;
    }
    const bool failed = entry.status != BlockCorrectionStatus::corrected;
    report.blocks.push_back(std::move(entry));
    if (failed) {
      all_corrected = false;
      if (stop_on_failure) return report;
    }
  }
  if (all_corrected) report.outcome.corrected = std::move(corrected);
  return report;
}

}  // namespace

VerifyOutcome mtss2_verify_correct(const BlockMessage& m, const Scheme1Signature& sig, ByteView pk,
                                   const CryptoSuite& suite, const CffMatrix& matrix,
                                   const CorrectionConfig& cfg, const CandidateTable* table) {
  return run_correction(m, sig, pk, suite, matrix, cfg, table, /*stop_on_failure=*/true).outcome;
}

CorrectionReport mtss2_correction_report(const BlockMessage& m, const Scheme1Signature& sig,
                                         ByteView pk, const CryptoSuite& suite,
                                         const CffMatrix& matrix, const CorrectionConfig& cfg,
                                         const CandidateTable* table) {
  return run_correction(m, sig, pk, suite, matrix, cfg, table, /*stop_on_failure=*/false);
}

}  // namespace mtss
