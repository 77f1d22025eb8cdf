//
// Project mtss - Copyright 2026 the mtss authors.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "mtss/bytes.hpp"
#include "mtss/error.hpp"

namespace mtss {

using Digest = Bytes;

/// Hash function used by the schemes. Deterministic, fixed digest length.
class HashFn {
public:
  virtual ~HashFn() = default;
  virtual std::string id() const = 0;
  virtual std::size_t digest_bits() const = 0;
  virtual Digest digest(ByteView data) const = 0;

  std::size_t digest_bytes() const { return digest_bits() / 8; }
};

struct KeyPair {
  Bytes sk;
  Bytes pk;
};

/// Classical signature scheme: keygen / sign / verify with a boolean verdict.
/// Providers are stateless after construction and safe for concurrent use.
class CdssProvider {
public:
  virtual ~CdssProvider() = default;
  virtual std::string id() const = 0;
  virtual KeyPair keygen(std::uint32_t security_bits) const = 0;
  /// Deterministic keypair derived from a seed; same contract as keygen.
  virtual KeyPair keygen_seeded(std::uint32_t security_bits, ByteView seed) const = 0;
  virtual Bytes sign(ByteView message, ByteView sk) const = 0;
  virtual bool verify(ByteView message, ByteView sig, ByteView pk) const = 0;
  virtual std::size_t signature_bytes() const = 0;
};

class Rng {
public:
  virtual ~Rng() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;
};

std::shared_ptr<Rng> system_rng();
/// Deterministic stream for tests; same seed, same outputs.
std::shared_ptr<Rng> seeded_rng(ByteView seed);

/// bits must be a multiple of 8.
Bytes random_string(Rng& rng, std::size_t bits);

std::shared_ptr<const HashFn> sha256();
std::shared_ptr<const CdssProvider> ed25519();
/// Deterministic test double: the "signature" is a keyed pseudorandom tag
/// (HMAC-SHA-256) and sk == pk. Not a real signature scheme; signing twice
/// yields identical bytes, which the redaction privacy tests rely on.
std::shared_ptr<const CdssProvider> test_cdss();

std::shared_ptr<const HashFn> hash_by_id(const std::string& id);
std::shared_ptr<const CdssProvider> cdss_by_id(const std::string& id);

/// Canonical hash input for a bit string: a 64-bit big-endian bit length,
/// then the bits packed big-endian into the shortest byte string. Strings
/// that differ only in length ("0" vs "00") encode differently, and a
/// whole-byte block encodes to its own bytes after the tag.
Bytes encode_bit_string(std::uint64_t value, std::uint32_t bits);
Bytes encode_block(ByteView block);

Digest hash_bit_string(const HashFn& h, std::uint64_t value, std::uint32_t bits);
/// Block digest: hash of the length-tagged block encoding.
Digest hash_block(const HashFn& h, ByteView block);

/// True iff h composed with the bit-string encoding is injective over all
/// 2^(s+1) - 1 bit strings of length 0..s. Guard: s <= 24.
bool check_injective_upto(const HashFn& h, std::uint32_t s);

/// Birthday bound 1 - exp(-2^(2s - l + 1)) for the probability of a
/// collision among all inputs of up to s bits under an l-bit hash.
double collision_probability(std::uint32_t s, std::uint32_t l);

/// Hash and signature providers used together, plus the randomness source.
struct CryptoSuite {
  std::shared_ptr<const HashFn> hash;
  std::shared_ptr<const CdssProvider> cdss;
  std::shared_ptr<Rng> rng;
};

CryptoSuite default_suite();
/// Fully deterministic suite (test CDSS + seeded RNG) for reproducibility.
CryptoSuite seeded_test_suite(ByteView seed);

}  // namespace mtss
