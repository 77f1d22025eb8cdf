//
// Project mtss - Copyright 2026 the mtss authors.
// SPDX-License-Identifier: Apache-2.0
//
#include "mtss/crypto.hpp"

#include <sodium.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <utility>
#include <vector>

namespace mtss {

namespace {

void sodium_ready() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    if (sodium_init() < 0) raise(Errc::io_error, "libsodium initialization failed");
  });
}

class Sha256 final : public HashFn {
public:
  std::string id() const override { return "sha256"; }
  std::size_t digest_bits() const override { return 256; }

  Digest digest(ByteView data) const override {
    sodium_ready();
    Digest out(crypto_hash_sha256_BYTES);
    crypto_hash_sha256(out.data(), data.data(), data.size());
    return out;
  }
};

Bytes seed_to_key32(ByteView seed) {
  sodium_ready();
  Bytes key(32);
  crypto_hash_sha256(key.data(), seed.data(), seed.size());
  return key;
}

class Ed25519 final : public CdssProvider {
public:
  std::string id() const override { return "ed25519"; }
  std::size_t signature_bytes() const override { return crypto_sign_BYTES; }

  KeyPair keygen(std::uint32_t security_bits) const override {
    require_bits(security_bits);
    sodium_ready();
    KeyPair kp;
    kp.pk.resize(crypto_sign_PUBLICKEYBYTES);
    kp.sk.resize(crypto_sign_SECRETKEYBYTES);
    crypto_sign_keypair(kp.pk.data(), kp.sk.data());
    return kp;
  }

  KeyPair keygen_seeded(std::uint32_t security_bits, ByteView seed) const override {
    require_bits(security_bits);
    sodium_ready();
    Bytes seed32 = seed_to_key32(seed);
    KeyPair kp;
    kp.pk.resize(crypto_sign_PUBLICKEYBYTES);
    kp.sk.resize(crypto_sign_SECRETKEYBYTES);
    crypto_sign_seed_keypair(kp.pk.data(), kp.sk.data(), seed32.data());
    return kp;
  }

  Bytes sign(ByteView message, ByteView sk) const override {
    sodium_ready();
    if (sk.size() != crypto_sign_SECRETKEYBYTES) raise(Errc::malformed_key, "ed25519 secret key size");
    Bytes sig(crypto_sign_BYTES);
    crypto_sign_detached(sig.data(), nullptr, message.data(), message.size(), sk.data());
    return sig;
  }

  bool verify(ByteView message, ByteView sig, ByteView pk) const override {
    sodium_ready();
    if (pk.size() != crypto_sign_PUBLICKEYBYTES) raise(Errc::malformed_key, "ed25519 public key size");
    if (sig.size() != crypto_sign_BYTES) return false;
    return crypto_sign_verify_detached(sig.data(), message.data(), message.size(), pk.data()) == 0;
  }

private:
  static void require_bits(std::uint32_t bits) {
    if (bits != 128) raise(Errc::unsupported_parameter, "ed25519 supports security level 128");
  }
};

class TestCdss final : public CdssProvider {
public:
  std::string id() const override { return "hmac-test"; }
  std::size_t signature_bytes() const override { return crypto_auth_hmacsha256_BYTES; }

  KeyPair keygen(std::uint32_t security_bits) const override {
    require_bits(security_bits);
    sodium_ready();
    Bytes key(crypto_auth_hmacsha256_KEYBYTES);
    randombytes_buf(key.data(), key.size());
    return {key, key};
  }

  KeyPair keygen_seeded(std::uint32_t security_bits, ByteView seed) const override {
    require_bits(security_bits);
    Bytes key = seed_to_key32(seed);
    return {key, key};
  }

  Bytes sign(ByteView message, ByteView key) const override {
    sodium_ready();
    if (key.size() != crypto_auth_hmacsha256_KEYBYTES) raise(Errc::malformed_key, "test key size");
    Bytes tag(crypto_auth_hmacsha256_BYTES);
    crypto_auth_hmacsha256(tag.data(), message.data(), message.size(), key.data());
    return tag;
  }

  bool verify(ByteView message, ByteView sig, ByteView key) const override {
    sodium_ready();
    if (key.size() != crypto_auth_hmacsha256_KEYBYTES) raise(Errc::malformed_key, "test key size");
    if (sig.size() != crypto_auth_hmacsha256_BYTES) return false;
    return crypto_auth_hmacsha256_verify(sig.data(), message.data(), message.size(), key.data()) == 0;
  }

private:
  static void require_bits(std::uint32_t bits) {
    if (bits != 128 && bits != 256)
      raise(Errc::unsupported_parameter, "test provider supports security level 128 or 256");
  }
};

class SystemRng final : public Rng {
public:
  void fill(std::span<std::uint8_t> out) override {
    sodium_ready();
    randombytes_buf(out.data(), out.size());
  }
};

// ChaCha20 keystream keyed by the seed; block counter advances per fill.
class SeededRng final : public Rng {
public:
  explicit SeededRng(ByteView seed) : key_(seed_to_key32(seed)) {}

  void fill(std::span<std::uint8_t> out) override {
    sodium_ready();
    std::uint8_t nonce[crypto_stream_chacha20_NONCEBYTES] = {};
    for (int i = 0; i < 8; ++i) nonce[i] = static_cast<std::uint8_t>(counter_ >> (56 - 8 * i));
    ++counter_;
    std::fill(out.begin(), out.end(), 0);
    crypto_stream_chacha20_xor(out.data(), out.data(), out.size(), nonce, key_.data());
  }

private:
  Bytes key_;
  std::uint64_t counter_ = 0;
};

}  // namespace

std::shared_ptr<Rng> system_rng() { return std::make_shared<SystemRng>(); }

std::shared_ptr<Rng> seeded_rng(ByteView seed) { return std::make_shared<SeededRng>(seed); }

Bytes random_string(Rng& rng, std::size_t bits) {
  if (bits % 8 != 0) raise(Errc::unsupported_parameter, "bit count must be a multiple of 8");
  Bytes out(bits / 8);
  rng.fill(out);
  return out;
}

std::shared_ptr<const HashFn> sha256() {
  static const auto instance = std::make_shared<const Sha256>();
  return instance;
}

std::shared_ptr<const CdssProvider> ed25519() {
  static const auto instance = std::make_shared<const Ed25519>();
  return instance;
}

std::shared_ptr<const CdssProvider> test_cdss() {
  static const auto instance = std::make_shared<const TestCdss>();
  return instance;
}

std::shared_ptr<const HashFn> hash_by_id(const std::string& id) {
  if (id == "sha256") return sha256();
  raise(Errc::unsupported_parameter, "unknown hash id: " + id);
}

std::shared_ptr<const CdssProvider> cdss_by_id(const std::string& id) {
  if (id == "ed25519") return ed25519();
  if (id == "hmac-test") return test_cdss();
  raise(Errc::unsupported_parameter, "unknown signature provider id: " + id);
}

Bytes encode_bit_string(std::uint64_t value, std::uint32_t bits) {
  if (bits > 63) raise(Errc::unsupported_parameter, "bit string too long for inline encoding");
  if (bits < 64 && bits > 0 && (value >> bits) != 0)
    raise(Errc::unsupported_parameter, "value wider than the declared bit length");
  if (bits == 0 && value != 0) raise(Errc::unsupported_parameter, "nonzero value in empty string");
  Bytes out;
  const std::uint32_t nbytes = (bits + 7) / 8;
  out.reserve(8 + nbytes);
  put_u64_be(out, bits);
  for (std::uint32_t i = nbytes; i-- > 0;) out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
  return out;
}

Bytes encode_block(ByteView block) {
  Bytes out;
  out.reserve(8 + block.size());
  put_u64_be(out, std::uint64_t{block.size()} * 8);
  out.insert(out.end(), block.begin(), block.end());
  return out;
}

Digest hash_bit_string(const HashFn& h, std::uint64_t value, std::uint32_t bits) {
  return h.digest(encode_bit_string(value, bits));
}

Digest hash_block(const HashFn& h, ByteView block) { return h.digest(encode_block(block)); }

bool check_injective_upto(const HashFn& h, std::uint32_t s) {
  if (s > 24) raise(Errc::budget_exceeded, "injectivity check limited to s <= 24");
  const std::uint64_t count = (std::uint64_t{1} << (s + 1)) - 1;

  // (bits, value) for input index i: bits = bitlength(i + 1) - 1, value = i + 1 - 2^bits
  const auto input_of = [](std::uint64_t index) {
    const std::uint64_t x = index + 1;
    const std::uint32_t bits = 63 - static_cast<std::uint32_t>(__builtin_clzll(x));
    return std::pair<std::uint32_t, std::uint64_t>{bits, x - (std::uint64_t{1} << bits)};
  };

  // 64-bit digest prefixes first; only candidate buckets get the full compare.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> keyed(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    auto [bits, value] = input_of(i);
    Digest d = hash_bit_string(h, value, bits);
    std::uint64_t prefix = 0;
    for (std::size_t b = 0; b < 8 && b < d.size(); ++b) prefix = (prefix << 8) | d[b];
    keyed[i] = {prefix, i};
  }
  std::sort(keyed.begin(), keyed.end());

  for (std::uint64_t i = 0; i + 1 < count;) {
    std::uint64_t j = i + 1;
    while (j < count && keyed[j].first == keyed[i].first) ++j;
    if (j - i > 1) {
      std::vector<Digest> full;
      full.reserve(j - i);
      for (std::uint64_t k = i; k < j; ++k) {
        auto [bits, value] = input_of(keyed[k].second);
        full.push_back(hash_bit_string(h, value, bits));
      }
      for (std::size_t a = 0; a < full.size(); ++a)
        for (std::size_t b = a + 1; b < full.size(); ++b)
          if (full[a] == full[b]) return false;
    }
    i = j;
  }
  return true;
}

double collision_probability(std::uint32_t s, std::uint32_t l) {
  const double exponent = 2.0 * static_cast<double>(s) - static_cast<double>(l) + 1.0;
  return -std::expm1(-std::exp2(exponent));
}

CryptoSuite default_suite() { return {sha256(), ed25519(), system_rng()}; }

CryptoSuite seeded_test_suite(ByteView seed) { return {sha256(), test_cdss(), seeded_rng(seed)}; }

}  // namespace mtss
