//
// Project mtss - Copyright 2026 the mtss authors.
// SPDX-License-Identifier: Apache-2.0
//
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "mtss/scheme3.hpp"
#include "mtss/sigfile.hpp"

using namespace mtss;

namespace {

CffMatrix load_golden_9x12() {
  std::ifstream in(std::string(MTSS_TEST_DATA_DIR) + "/cff_9x12_golden.txt", std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_matrix_literal(ss.str());
}

BlockMessage random_message(std::mt19937_64& rng, std::size_t n) {
  std::vector<Bytes> blocks(n);
  for (auto& b : blocks) {
    b.resize(1 + rng() % 16);
    for (auto& byte : b) byte = static_cast<std::uint8_t>(rng());
  }
  return BlockMessage(std::move(blocks));
}

std::vector<std::uint32_t> sorted_modified(const VerifyOutcome& out) {
  REQUIRE(out.modified.has_value());
  auto v = *out.modified;
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("round trip accepts and carries t+1 entries") {
  std::mt19937_64 rng(1);
  const CryptoSuite suite = default_suite();
  const KeyPair kp = suite.cdss->keygen(128);
  const CffMatrix golden = load_golden_9x12();
  const BlockMessage m = random_message(rng, 12);
  const Scheme3Signature sig = mtss3_sign(m, kp.sk, suite, golden);
  CHECK(sig.entries.size() == 10);  // 9 rows + whole message
  CHECK(sig.r.size() == 16);
  const VerifyOutcome out = mtss3_verify(m, sig, kp.pk, suite, golden);
  CHECK(out.accepted());
  CHECK(out.modified->empty());
}

TEST_CASE("two signings differ in the linking string but both verify") {
  std::mt19937_64 rng(2);
  const CryptoSuite suite = default_suite();
  const KeyPair kp = suite.cdss->keygen(128);
  const CffMatrix matrix = CffMatrix::polynomial(Field::make(3, 1), 1);
  const BlockMessage m = random_message(rng, 9);
  const Scheme3Signature a = mtss3_sign(m, kp.sk, suite, matrix);
  const Scheme3Signature b = mtss3_sign(m, kp.sk, suite, matrix);
  CHECK(a.r != b.r);
  CHECK(mtss3_verify(m, a, kp.pk, suite, matrix).accepted());
  CHECK(mtss3_verify(m, b, kp.pk, suite, matrix).accepted());
}

TEST_CASE("verification under a foreign key rejects") {
  std::mt19937_64 rng(3);
  const CryptoSuite suite = default_suite();
  const KeyPair kp = suite.cdss->keygen(128);
  const KeyPair other = suite.cdss->keygen(128);
  const CffMatrix matrix = CffMatrix::polynomial(Field::make(3, 1), 1);
  const BlockMessage m = random_message(rng, 9);
  const Scheme3Signature sig = mtss3_sign(m, kp.sk, suite, matrix);
  const VerifyOutcome out = mtss3_verify(m, sig, other.pk, suite, matrix);
  CHECK_FALSE(out.accepted());
  CHECK_FALSE(out.modified.has_value());  // scheme-3 rejections carry no index set
}

TEST_CASE("redaction patterns erase the documented entries") {
  std::mt19937_64 rng(4);
  const CryptoSuite suite = default_suite();
  const KeyPair kp = suite.cdss->keygen(128);
  const CffMatrix golden = load_golden_9x12();
  const BlockMessage m = random_message(rng, 12);
  const Scheme3Signature sig = mtss3_sign(m, kp.sk, suite, golden);

  // redacting block 3 erases rows 7, 8, 9 plus the whole-message entry
  const std::vector<std::uint32_t> r3{2};
  const auto [rm, rs] = mtss3_redact(m, sig, r3, golden);
  CHECK(rm.redacted(2));
  for (std::size_t i = 0; i < 12; ++i)
    if (i != 2) CHECK_FALSE(rm.redacted(i));
  for (std::uint32_t row : {6u, 7u, 8u, 9u}) CHECK_FALSE(rs.entries[row].has_value());
  for (std::uint32_t row : {0u, 1u, 2u, 3u, 4u, 5u}) CHECK(rs.entries[row].has_value());

  const VerifyOutcome out = mtss3_verify(rm, rs, kp.pk, suite, golden);
  CHECK(out.accepted());
  CHECK(sorted_modified(out) == r3);
}

TEST_CASE("empty redaction returns the inputs unchanged") {
  std::mt19937_64 rng(5);
  const CryptoSuite suite = default_suite();
  const KeyPair kp = suite.cdss->keygen(128);
  const CffMatrix matrix = CffMatrix::polynomial(Field::make(3, 1), 1);
  const BlockMessage m = random_message(rng, 9);
  const Scheme3Signature sig = mtss3_sign(m, kp.sk, suite, matrix);
  const auto [rm, rs] = mtss3_redact(m, sig, {}, matrix);
  CHECK(serialize_signature(rs) == serialize_signature(sig));
  CHECK(serialize_redacted_message(rm) == serialize_redacted_message(m));
}

TEST_CASE("verify accepts exactly the redacted set for any small redaction") {
  std::mt19937_64 rng(6);
  const CryptoSuite suite = default_suite();
  const KeyPair kp = suite.cdss->keygen(128);
  const CffMatrix golden = load_golden_9x12();
  const BlockMessage m = random_message(rng, 12);
  const Scheme3Signature sig = mtss3_sign(m, kp.sk, suite, golden);
  for (std::uint32_t a = 0; a < 12; ++a) {
    for (std::uint32_t b = a; b < 12; ++b) {
      std::vector<std::uint32_t> r{a};
      if (b != a) r.push_back(b);
      const auto [rm, rs] = mtss3_redact(m, sig, r, golden);
      const VerifyOutcome out = mtss3_verify(rm, rs, kp.pk, suite, golden);
      CHECK(out.accepted());
      CHECK(sorted_modified(out) == r);
    }
  }
}

TEST_CASE("redaction transparency holds across matrix families") {
  std::mt19937_64 rng(14);
  const CryptoSuite suite = default_suite();
  const KeyPair kp = suite.cdss->keygen(128);
  std::vector<CffMatrix> matrices;
  matrices.push_back(CffMatrix::identity(10));
  matrices.push_back(CffMatrix::polynomial(Field::make(3, 1), 1));
  matrices.push_back(CffMatrix::polynomial(Field::make(5, 1), 2));
  for (const CffMatrix& matrix : matrices) {
    const std::uint32_t d = std::min<std::uint32_t>(matrix.d(), 2);
    const std::size_t n = std::min<std::size_t>(matrix.cols(), 40);
    const BlockMessage m = random_message(rng, n);
    SignOptions opts;
    opts.claimed_d = d;
    const Scheme3Signature sig = mtss3_sign(m, kp.sk, suite, matrix, opts);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<std::uint32_t> r;
      const std::size_t count = 1 + rng() % d;
      while (r.size() < count) {
        const auto c = static_cast<std::uint32_t>(rng() % n);
        if (std::find(r.begin(), r.end(), c) == r.end()) r.push_back(c);
      }
      std::sort(r.begin(), r.end());
      const auto [rm, rs] = mtss3_redact(m, sig, r, matrix);
      const VerifyOutcome out = mtss3_verify(rm, rs, kp.pk, suite, matrix);
      CHECK(out.accepted());
      CHECK(sorted_modified(out) == r);
    }
  }
}

TEST_CASE("three redactions exceed the tolerance and reject") {
  std::mt19937_64 rng(7);
  const CryptoSuite suite = default_suite();
  const KeyPair kp = suite.cdss->keygen(128);
  const CffMatrix golden = load_golden_9x12();
  const BlockMessage m = random_message(rng, 12);
  const Scheme3Signature sig = mtss3_sign(m, kp.sk, suite, golden);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::uint32_t> first, second;
    while (first.size() < 2) {
      const auto c = static_cast<std::uint32_t>(rng() % 12);
      if (std::find(first.begin(), first.end(), c) == first.end()) first.push_back(c);
    }
    std::uint32_t third = 0;
    do {
      third = static_cast<std::uint32_t>(rng() % 12);
    } while (std::find(first.begin(), first.end(), third) != first.end());
    second.push_back(third);

    const auto [rm1, rs1] = mtss3_redact(m, sig, first, golden);
    const auto [rm2, rs2] = mtss3_redact(rm1, rs1, second, golden);  // composes to three blocks
    const VerifyOutcome out = mtss3_verify(rm2, rs2, kp.pk, suite, golden);
    CHECK_FALSE(out.accepted());
    CHECK_FALSE(out.modified.has_value());
  }
}

TEST_CASE("redaction guards") {
  std::mt19937_64 rng(8);
  const CryptoSuite suite = default_suite();
  const KeyPair kp = suite.cdss->keygen(128);
  const CffMatrix golden = load_golden_9x12();
  const BlockMessage m = random_message(rng, 12);
  const Scheme3Signature sig = mtss3_sign(m, kp.sk, suite, golden);

  const std::vector<std::uint32_t> too_many{0, 1, 2};
  CHECK_THROWS_WITH_AS(mtss3_redact(m, sig, too_many, golden), doctest::Contains("TooManyRedactions"),
                       Error);

  const std::vector<std::uint32_t> one{5};
  const auto [rm, rs] = mtss3_redact(m, sig, one, golden);
  CHECK_THROWS_WITH_AS(mtss3_redact(rm, rs, one, golden), doctest::Contains("AlreadyRedacted"), Error);

  const std::vector<std::uint32_t> oob{12};
  CHECK_THROWS_AS(mtss3_redact(m, sig, oob, golden), Error);
}

TEST_CASE("redacted pairs are byte-identical when the kept blocks agree") {
  std::mt19937_64 rng(9);
  const CffMatrix golden = load_golden_9x12();
  for (int trial = 0; trial < 20; ++trial) {
    const Bytes seed = to_bytes("privacy-seed-" + std::to_string(trial));
    CryptoSuite suite1 = seeded_test_suite(seed);
    CryptoSuite suite2 = seeded_test_suite(seed);
    const KeyPair kp = suite1.cdss->keygen_seeded(128, to_bytes("signer"));

    const BlockMessage m1 = random_message(rng, 12);
    std::vector<std::uint32_t> r;
    const std::size_t count = 1 + rng() % 2;
    while (r.size() < count) {
      const auto c = static_cast<std::uint32_t>(rng() % 12);
      if (std::find(r.begin(), r.end(), c) == r.end()) r.push_back(c);
    }
    BlockMessage m2 = m1;
    for (std::uint32_t i : r) {
      Bytes replacement{static_cast<std::uint8_t>(rng()), static_cast<std::uint8_t>(rng())};
      m2.set_block(i, std::move(replacement));  // differs only inside the redacted set
    }

    const Scheme3Signature s1 = mtss3_sign(m1, kp.sk, suite1, golden);
    const Scheme3Signature s2 = mtss3_sign(m2, kp.sk, suite2, golden);
    CHECK(s1.r == s2.r);  // same seeded randomness

    const auto [rm1, rs1] = mtss3_redact(m1, s1, r, golden);
    const auto [rm2, rs2] = mtss3_redact(m2, s2, r, golden);
    CHECK(serialize_signature(rs1) == serialize_signature(rs2));
    CHECK(serialize_redacted_message(rm1) == serialize_redacted_message(rm2));

    const VerifyOutcome out = mtss3_verify(rm1, rs1, kp.pk, suite1, golden);
    CHECK(out.accepted());
  }
}

TEST_CASE("flipping the linking string breaks every entry") {
  std::mt19937_64 rng(10);
  const CryptoSuite suite = default_suite();
  const KeyPair kp = suite.cdss->keygen(128);
  const CffMatrix matrix = CffMatrix::polynomial(Field::make(3, 1), 1);
  const BlockMessage m = random_message(rng, 9);
  Scheme3Signature sig = mtss3_sign(m, kp.sk, suite, matrix);
  sig.r[rng() % sig.r.size()] ^= static_cast<std::uint8_t>(1u << (rng() % 8));
  CHECK_FALSE(mtss3_verify(m, sig, kp.pk, suite, matrix).accepted());
}

TEST_CASE("entries moved to another position fail their test") {
  std::mt19937_64 rng(11);
  const CryptoSuite suite = default_suite();
  const KeyPair kp = suite.cdss->keygen(128);
  // one test per block: only the position tag distinguishes equal blocks
  const CffMatrix matrix = CffMatrix::identity(6);
  std::vector<Bytes> blocks(6, Bytes{0x42});
  const BlockMessage m{std::move(blocks)};
  SignOptions opts;
  opts.claimed_d = 2;
  const Scheme3Signature sig = mtss3_sign(m, kp.sk, suite, matrix, opts);

  Scheme3Signature swapped = sig;
  std::swap(swapped.entries[0], swapped.entries[3]);
  swapped.entries[6].reset();  // drop the whole-message entry like a redaction would
  const VerifyOutcome out = mtss3_verify(m, swapped, kp.pk, suite, matrix);
  // identical blocks, identical rows: without the position tag this forgery
  // would verify clean; the tag makes both moved entries fail
  CHECK(out.accepted());
  CHECK(sorted_modified(out) == std::vector<std::uint32_t>{0, 3});
}

TEST_CASE("entries from a different signing never verify") {
  std::mt19937_64 rng(12);
  const CryptoSuite suite = default_suite();
  const KeyPair kp = suite.cdss->keygen(128);
  const CffMatrix matrix = CffMatrix::polynomial(Field::make(3, 1), 1);
  const BlockMessage m = random_message(rng, 9);
  const Scheme3Signature sig1 = mtss3_sign(m, kp.sk, suite, matrix);
  const Scheme3Signature sig2 = mtss3_sign(m, kp.sk, suite, matrix);  // same message, fresh r

  // graft every row entry from the second signing onto the first signature's r
  Scheme3Signature hybrid = sig1;
  for (std::uint32_t i = 0; i < hybrid.t; ++i) hybrid.entries[i] = sig2.entries[i];
  hybrid.entries[hybrid.t].reset();
  const VerifyOutcome out = mtss3_verify(m, hybrid, kp.pk, suite, matrix);
  CHECK_FALSE(out.accepted());
}

TEST_CASE("shape errors") {
  std::mt19937_64 rng(13);
  const CryptoSuite suite = default_suite();
  const KeyPair kp = suite.cdss->keygen(128);
  const CffMatrix matrix = CffMatrix::polynomial(Field::make(3, 1), 1);
  const BlockMessage m = random_message(rng, 9);
  Scheme3Signature sig = mtss3_sign(m, kp.sk, suite, matrix);

  CHECK_THROWS_WITH_AS(mtss3_verify(random_message(rng, 5), sig, kp.pk, suite, matrix),
                       doctest::Contains("BlockCountMismatch"), Error);

  Scheme3Signature bad = sig;
  bad.entries.pop_back();
  CHECK_THROWS_WITH_AS(mtss3_verify(m, bad, kp.pk, suite, matrix),
                       doctest::Contains("MalformedSignature"), Error);

  bad = sig;
  bad.r.pop_back();
  CHECK_THROWS_AS(mtss3_verify(m, bad, kp.pk, suite, matrix), Error);
}
