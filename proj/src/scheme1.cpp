//
// Project mtss - Copyright 2026 the mtss authors.
// SPDX-License-Identifier: Apache-2.0
//
#include "mtss/scheme1.hpp"

#include <algorithm>
#include <string>

#include "scheme_detail.hpp"

namespace mtss {

CffTag make_cff_tag(const CffMatrix& m, const HashFn& h) {
  CffTag tag;
  tag.kind = m.provenance().kind;
  tag.rows = m.rows();
  tag.cols = m.cols();
  switch (tag.kind) {
    case CffProvenance::Kind::identity:
      break;
    case CffProvenance::Kind::polynomial:
      tag.q = m.provenance().q;
      tag.k = m.provenance().k;
      break;
    case CffProvenance::Kind::literal: {
      const std::string text = format_matrix_literal(m);
      tag.literal_digest = h.digest(ByteView(reinterpret_cast<const std::uint8_t*>(text.data()),
                                             text.size()));
      break;
    }
  }
  return tag;
}

namespace {

// Factor a prime power; q must equal p^e for a single prime p.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q) {
  for (std::uint32_t p = 2; std::uint64_t{p} * p <= q; ++p) {
    if (q % p != 0) continue;
    std::uint32_t e = 0;
    std::uint32_t rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (rest != 1) raise(Errc::unsupported_parameter, std::to_string(q) + " is not a prime power");
    return {p, e};
  }
  return {q, 1};  // q itself prime (or 1, rejected by Field::make)
}

}  // namespace

CffMatrix matrix_from_tag(const CffTag& tag) {
  switch (tag.kind) {
    case CffProvenance::Kind::identity:
      return CffMatrix::identity(tag.cols);
    case CffProvenance::Kind::polynomial: {
      auto [p, e] = prime_power(tag.q);
      return CffMatrix::polynomial(Field::make(p, e), tag.k);
    }
    case CffProvenance::Kind::literal:
      raise(Errc::unsupported_parameter,
            "literal matrices cannot be rebuilt from a signature; supply the matrix file");
  }
  raise(Errc::unsupported_parameter, "bad matrix tag");
}

void check_tag_matches(const CffTag& tag, const CffMatrix& m, const HashFn& h) {
  const CffTag actual = make_cff_tag(m, h);
  if (actual.kind != tag.kind || actual.rows != tag.rows)
    raise(Errc::malformed_signature, "matrix does not match the signature's construction tag");
  if (tag.kind == CffProvenance::Kind::polynomial && (actual.q != tag.q || actual.k != tag.k))
    raise(Errc::malformed_signature, "matrix parameters do not match the signature");
  if (tag.kind == CffProvenance::Kind::literal && actual.literal_digest != tag.literal_digest)
    raise(Errc::malformed_signature, "matrix digest does not match the signature");
  if (tag.cols != 0 && actual.cols != tag.cols)
    raise(Errc::malformed_signature, "matrix column count does not match the signature");
}

namespace detail {

std::vector<Digest> column_digests(const BlockMessage& m, const CffMatrix& matrix,
                                   const HashFn& h) {
  std::vector<Digest> out;
  out.reserve(matrix.cols());
  for (std::size_t j = 0; j < m.size(); ++j) out.push_back(hash_block(h, m.block(j)));
  if (m.size() < matrix.cols()) {
    const Digest pad = hash_block(h, pad_block());
    out.resize(matrix.cols(), pad);
  }
  return out;
}

Digest row_digest(const CffMatrix& matrix, std::uint32_t row, const std::vector<Digest>& hj,
                  const HashFn& h) {
  Bytes concat;
  matrix.for_each_row_col(row, [&](std::uint64_t col) {
    const Digest& d = hj[col];
    concat.insert(concat.end(), d.begin(), d.end());
  });
  return h.digest(concat);
}

}  // namespace detail

Bytes serialize_test_tuple(const Scheme1Signature& sig) {
  Bytes out;
  out.reserve((sig.tests.size() + 1) * sig.whole.size());
  for (const Digest& d : sig.tests) out.insert(out.end(), d.begin(), d.end());
  out.insert(out.end(), sig.whole.begin(), sig.whole.end());
  return out;
}

Scheme1Signature mtss1_sign(const BlockMessage& m, ByteView sk, const CryptoSuite& suite,
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
  Scheme1Signature sig;
  sig.hash_id = h.id();
  sig.cdss_id = suite.cdss->id();
  sig.d = opts.claimed_d == 0 ? matrix.d() : opts.claimed_d;
  sig.t = matrix.rows();
  sig.n = static_cast<std::uint32_t>(m.size());
  sig.s_bits = opts.s_bits;
  sig.cff = make_cff_tag(matrix, h);

  const auto hj = detail::column_digests(m, matrix, h);
  sig.tests.reserve(sig.t);
  for (std::uint32_t i = 0; i < sig.t; ++i) sig.tests.push_back(detail::row_digest(matrix, i, hj, h));
  sig.whole = h.digest(m.join());
  sig.cdss_sig = suite.cdss->sign(serialize_test_tuple(sig), sk);
  return sig;
}

Scheme1VerifyDetail mtss1_verify_detailed(const BlockMessage& m, const Scheme1Signature& sig,
                                          ByteView pk, const CryptoSuite& suite,
                                          const CffMatrix& matrix) {
  const HashFn& h = *suite.hash;
  if (sig.hash_id != h.id() || sig.cdss_id != suite.cdss->id())
    raise(Errc::unsupported_parameter, "suite does not match the signature's algorithm ids");
  if (sig.tests.size() != sig.t || sig.t != matrix.rows())
    raise(Errc::malformed_signature, "test tuple length does not match the matrix");
  if (sig.whole.size() != h.digest_bytes())
    raise(Errc::malformed_signature, "whole-message digest has the wrong length");
  for (const Digest& d : sig.tests)
    if (d.size() != h.digest_bytes())
      raise(Errc::malformed_signature, "test digest has the wrong length");
  check_tag_matches(sig.cff, matrix, h);
  if (m.size() != sig.n) raise(Errc::block_count_mismatch, "block count differs from the signature");
  if (m.any_redacted())
    raise(Errc::unsupported_parameter, "redacted messages are not verifiable under this scheme");

  Scheme1VerifyDetail out;

  // step 1: the CDSS signature must cover the carried digest tuple
  if (!suite.cdss->verify(serialize_test_tuple(sig), sig.cdss_sig, pk)) {
    out.outcome.status = VerifyOutcome::Status::reject;
    return out;
  }
  // step 2: unmodified fast path
  if (h.digest(m.join()) == sig.whole) {
    out.outcome.status = VerifyOutcome::Status::accept;
    out.outcome.modified.emplace();
    return out;
  }
  // steps 3-4: recompute row digests and decode the failure pattern
  auto hj = detail::column_digests(m, matrix, h);
  OutcomeVector outcomes(sig.t, TestOutcome::fail);
  for (std::uint32_t i = 0; i < sig.t; ++i)
    if (detail::row_digest(matrix, i, hj, h) == sig.tests[i]) outcomes[i] = TestOutcome::pass;
  auto modified = cff_decode(matrix, outcomes);
  // padding columns can reach the decoded set only past the tolerance;
  // they are not message blocks, so drop them from the report
  std::erase_if(modified, [&](std::uint32_t c) { return c >= sig.n; });

  out.outcome.status = modified.size() <= sig.d ? VerifyOutcome::Status::accept
                                                : VerifyOutcome::Status::reject;
  out.outcome.modified = std::move(modified);
  out.block_digests = std::move(hj);
  return out;
}

VerifyOutcome mtss1_verify(const BlockMessage& m, const Scheme1Signature& sig, ByteView pk,
                           const CryptoSuite& suite, const CffMatrix& matrix) {
  return mtss1_verify_detailed(m, sig, pk, suite, matrix).outcome;
}

}  // namespace mtss
