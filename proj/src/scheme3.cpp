//
// Project mtss - Copyright 2026 the mtss authors.
// SPDX-License-Identifier: Apache-2.0
//
#include "mtss/scheme3.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "scheme_detail.hpp"

namespace mtss {

Bytes scheme3_entry_message(const Digest& payload, ByteView r, std::uint32_t index1,
                            std::uint32_t count) {
  Bytes out;
  out.reserve(payload.size() + r.size() + 8);
  out.insert(out.end(), payload.begin(), payload.end());
  out.insert(out.end(), r.begin(), r.end());
  put_u32_be(out, index1);
  put_u32_be(out, count);
  return out;
}

Scheme3Signature mtss3_sign(const BlockMessage& m, ByteView sk, const CryptoSuite& suite,
                            const CffMatrix& matrix, const SignOptions& opts) {
  if (m.any_redacted()) raise(Errc::unsupported_parameter, "cannot sign a redacted message");
  if (m.size() > matrix.cols())
    raise(Errc::too_many_blocks, std::to_string(m.size()) + " blocks exceed the matrix columns");
  if (!matrix.dense()) raise(Errc::budget_exceeded, "matrix too large to sign against");
  if (opts.claimed_d > matrix.d())
    raise(Errc::unsupported_parameter, "claimed tolerance exceeds the matrix strength");

  if (opts.s_bits > 0) {
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m.block(j).size() * 8 > opts.s_bits)
        raise(Errc::unsupported_parameter,
              "block " + std::to_string(j + 1) + " exceeds the declared size bound");
  }

  const HashFn& h = *suite.hash;
  Scheme3Signature sig;
  sig.hash_id = h.id();
  sig.cdss_id = suite.cdss->id();
  sig.d = opts.claimed_d == 0 ? matrix.d() : opts.claimed_d;
  sig.t = matrix.rows();
  sig.n = static_cast<std::uint32_t>(m.size());
  sig.s_bits = opts.s_bits;
  sig.cff = make_cff_tag(matrix, h);
  sig.r = random_string(*suite.rng, kLinkingStringBits);

  const std::uint32_t count = sig.t + 1;
  const auto hj = detail::column_digests(m, matrix, h);
  sig.entries.reserve(count);
  for (std::uint32_t i = 0; i < sig.t; ++i) {
    const Digest payload = detail::row_digest(matrix, i, hj, h);
    sig.entries.emplace_back(suite.cdss->sign(scheme3_entry_message(payload, sig.r, i + 1, count), sk));
  }
  const Digest whole = h.digest(m.join());
  sig.entries.emplace_back(suite.cdss->sign(scheme3_entry_message(whole, sig.r, count, count), sk));
  return sig;
}

namespace {

void check_shape(const Scheme3Signature& sig, const CryptoSuite& suite, const CffMatrix& matrix) {
  if (sig.hash_id != suite.hash->id() || sig.cdss_id != suite.cdss->id())
    raise(Errc::unsupported_parameter, "suite does not match the signature's algorithm ids");
  if (sig.entries.size() != std::size_t{sig.t} + 1 || sig.t != matrix.rows())
    raise(Errc::malformed_signature, "entry count does not match the matrix");
  if (sig.r.size() != kLinkingStringBits / 8)
    raise(Errc::malformed_signature, "linking string has the wrong length");
  check_tag_matches(sig.cff, matrix, *suite.hash);
}

}  // namespace

VerifyOutcome mtss3_verify(const BlockMessage& m, const Scheme3Signature& sig, ByteView pk,
                           const CryptoSuite& suite, const CffMatrix& matrix) {
  check_shape(sig, suite, matrix);
  if (m.size() != sig.n) raise(Errc::block_count_mismatch, "block count differs from the signature");

  const HashFn& h = *suite.hash;
  const std::uint32_t count = sig.t + 1;

  // whole-message fast path; any nonempty redaction erases entry t+1, so
  // redacted messages can only be accepted through the per-row tests
  if (!m.any_redacted() && sig.entries[sig.t].has_value()) {
    const Bytes expect = scheme3_entry_message(h.digest(m.join()), sig.r, count, count);
    if (suite.cdss->verify(expect, *sig.entries[sig.t], pk)) {
      VerifyOutcome out;
      out.status = VerifyOutcome::Status::accept;
      out.modified.emplace();
      return out;
    }
  }

  // digests of present blocks; rows touching a redacted block cannot be
  // rebuilt and count as failing
  std::vector<std::optional<Digest>> hj(matrix.cols());
  for (std::size_t j = 0; j < m.size(); ++j)
    if (!m.redacted(j)) hj[j] = hash_block(h, m.block(j));
  if (m.size() < matrix.cols()) {
    const Digest pad = hash_block(h, pad_block());
    for (std::uint64_t j = m.size(); j < matrix.cols(); ++j) hj[j] = pad;
  }

  OutcomeVector outcomes(sig.t, TestOutcome::fail);
  for (std::uint32_t i = 0; i < sig.t; ++i) {
    if (!sig.entries[i].has_value()) {
      outcomes[i] = TestOutcome::unavailable;
      continue;
    }
    Bytes concat;
    bool complete = true;
    matrix.for_each_row_col(i, [&](std::uint64_t col) {
      if (!hj[col].has_value()) {
        complete = false;
        return;
      }
      concat.insert(concat.end(), hj[col]->begin(), hj[col]->end());
    });
    if (!complete) continue;
    const Bytes expect = scheme3_entry_message(h.digest(concat), sig.r, i + 1, count);
    if (suite.cdss->verify(expect, *sig.entries[i], pk)) outcomes[i] = TestOutcome::pass;
  }

  auto modified = cff_decode(matrix, outcomes);
  std::erase_if(modified, [&](std::uint32_t c) { return c >= sig.n; });

  VerifyOutcome out;
  if (modified.size() <= sig.d) {
    out.status = VerifyOutcome::Status::accept;
    out.modified = std::move(modified);
  } else {
    out.status = VerifyOutcome::Status::reject;  // rejections carry no index set here
  }
  return out;
}

std::pair<BlockMessage, Scheme3Signature> mtss3_redact(const BlockMessage& m,
                                                       const Scheme3Signature& sig,
                                                       std::span<const std::uint32_t> to_redact,
                                                       const CffMatrix& matrix) {
  if (sig.entries.size() != std::size_t{sig.t} + 1 || sig.t != matrix.rows())
    raise(Errc::malformed_signature, "entry count does not match the matrix");
  if (m.size() != sig.n) raise(Errc::block_count_mismatch, "block count differs from the signature");

  if (to_redact.empty()) return {m, sig};
  const std::set<std::uint32_t> targets(to_redact.begin(), to_redact.end());
  if (targets.size() > sig.d)
    raise(Errc::too_many_redactions,
          std::to_string(targets.size()) + " blocks exceed the tolerance " + std::to_string(sig.d));
  for (std::uint32_t j : targets) {
    if (j >= m.size()) raise(Errc::unsupported_parameter, "block index out of range");
    if (m.redacted(j)) raise(Errc::already_redacted, "block " + std::to_string(j + 1));
  }

  BlockMessage rm = m;
  Scheme3Signature rs = sig;
  rs.entries[rs.t].reset();
  for (std::uint32_t j : targets) {
    rm.redact_block(j);
    for (std::uint32_t row : matrix.column_rows(j)) rs.entries[row].reset();
  }
  return {std::move(rm), std::move(rs)};
}

}  // namespace mtss
