//
// Project mtss - Copyright 2026 the mtss authors.
// SPDX-License-Identifier: Apache-2.0
//
#include "mtss/sigfile.hpp"

#include <string>

namespace mtss {

namespace {

constexpr std::uint8_t kSigMagic[4] = {'M', 'T', 'S', 'S'};
constexpr std::uint8_t kRedactedMagic[4] = {'M', 'T', 'S', 'R'};
constexpr std::size_t kMaxIdLength = 64;

void put_string(Bytes& out, const std::string& s) {
  put_u32_be(out, static_cast<std::uint32_t>(s.size()));
  out.insert(out.end(), s.begin(), s.end());
}

std::string get_string(ByteReader& in) {
  const std::uint32_t len = in.u32();
  if (len > kMaxIdLength) raise(Errc::parse_error, "identifier too long");
  const Bytes raw = in.bytes(len);
  return std::string(raw.begin(), raw.end());
}

void put_blob(Bytes& out, ByteView b) {
  put_u32_be(out, static_cast<std::uint32_t>(b.size()));
  out.insert(out.end(), b.begin(), b.end());
}

template <typename Sig>
void put_common_header(Bytes& out, std::uint8_t scheme, const Sig& sig, std::uint32_t s_bits) {
  out.insert(out.end(), kSigMagic, kSigMagic + 4);
  out.push_back(kSigVersion);
  out.push_back(scheme);
  put_string(out, sig.hash_id);
  put_string(out, sig.cdss_id);
  put_u32_be(out, sig.d);
  put_u32_be(out, sig.t);
  put_u32_be(out, sig.n);
  put_u32_be(out, s_bits);
  out.push_back(static_cast<std::uint8_t>(sig.cff.kind));
  switch (sig.cff.kind) {
    case CffProvenance::Kind::identity:
      put_u32_be(out, static_cast<std::uint32_t>(sig.cff.cols));
      break;
    case CffProvenance::Kind::polynomial:
      put_u32_be(out, sig.cff.q);
      put_u32_be(out, sig.cff.k);
      break;
    case CffProvenance::Kind::literal:
      out.insert(out.end(), sig.cff.literal_digest.begin(), sig.cff.literal_digest.end());
      break;
  }
}

std::uint64_t header_bytes(const std::string& hash_id, const std::string& cdss_id,
                           const CffTag& tag) {
  std::uint64_t size = 4 + 1 + 1;                   // magic, version, scheme
  size += 4 + hash_id.size() + 4 + cdss_id.size();  // ids
  size += 4 * 4;                                    // d, t, n, s
  size += 1;                                        // tag kind
  switch (tag.kind) {
    case CffProvenance::Kind::identity: size += 4; break;
    case CffProvenance::Kind::polynomial: size += 8; break;
    case CffProvenance::Kind::literal: size += tag.literal_digest.size(); break;
  }
  return size;
}

CffTag read_tag(ByteReader& in, std::uint32_t t, std::size_t digest_bytes) {
  CffTag tag;
  const std::uint8_t kind = in.u8();
  if (kind > 2) raise(Errc::parse_error, "unknown matrix construction tag");
  tag.kind = static_cast<CffProvenance::Kind>(kind);
  tag.rows = t;
  switch (tag.kind) {
    case CffProvenance::Kind::identity:
      tag.cols = in.u32();
      break;
    case CffProvenance::Kind::polynomial: {
      tag.q = in.u32();
      tag.k = in.u32();
      std::uint64_t cols = 1;
      for (std::uint32_t i = 0; i <= tag.k && cols < (std::uint64_t{1} << 62); ++i) cols *= tag.q;
      tag.cols = cols;
      break;
    }
    case CffProvenance::Kind::literal:
      tag.literal_digest = in.bytes(digest_bytes);
      tag.cols = 0;  // unknown until the matrix file is supplied
      break;
  }
  return tag;
}

}  // namespace

Bytes serialize_signature(const Scheme1Signature& sig) {
  Bytes out;
  put_common_header(out, 1, sig, sig.s_bits);
  for (const Digest& d : sig.tests) out.insert(out.end(), d.begin(), d.end());
  out.insert(out.end(), sig.whole.begin(), sig.whole.end());
  put_blob(out, sig.cdss_sig);
  return out;
}

Bytes serialize_signature(const Scheme3Signature& sig) {
  Bytes out;
  put_common_header(out, 3, sig, sig.s_bits);
  out.insert(out.end(), sig.r.begin(), sig.r.end());
  const std::size_t count = sig.entries.size();
  Bytes bitmap((count + 7) / 8, 0);
  for (std::size_t i = 0; i < count; ++i)
    if (sig.entries[i].has_value()) bitmap[i / 8] |= std::uint8_t(0x80 >> (i % 8));
  out.insert(out.end(), bitmap.begin(), bitmap.end());
  for (const auto& e : sig.entries)
    if (e.has_value()) put_blob(out, *e);
  return out;
}

ParsedSignature parse_signature(ByteView data) {
  ByteReader in(data);
  const Bytes magic = in.bytes(4);
  if (!std::equal(magic.begin(), magic.end(), kSigMagic))
    raise(Errc::parse_error, "not a signature file");
  if (in.u8() != kSigVersion) raise(Errc::malformed_signature, "unsupported format version");
  const std::uint8_t scheme = in.u8();
  if (scheme != 1 && scheme != 3) raise(Errc::malformed_signature, "unsupported scheme id");

  const std::string hash_id = get_string(in);
  const std::string cdss_id = get_string(in);
  const auto hash = hash_by_id(hash_id);  // UnsupportedParameter on unknown ids
  const std::uint32_t d = in.u32();
  const std::uint32_t t = in.u32();
  const std::uint32_t n = in.u32();
  const std::uint32_t s_bits = in.u32();
  if (t == 0 || t > (std::uint32_t{1} << 20)) raise(Errc::parse_error, "test count out of range");
  const CffTag tag = read_tag(in, t, hash->digest_bytes());

  ParsedSignature out;
  out.scheme = scheme;
  if (scheme == 1) {
    Scheme1Signature sig;
    sig.hash_id = hash_id;
    sig.cdss_id = cdss_id;
    sig.d = d;
    sig.t = t;
    sig.n = n;
    sig.s_bits = s_bits;
    sig.cff = tag;
    if (in.remaining() < (std::uint64_t{t} + 1) * hash->digest_bytes() + 4)
      raise(Errc::parse_error, "truncated digest tuple");
    sig.tests.reserve(t);
    for (std::uint32_t i = 0; i < t; ++i) sig.tests.push_back(in.bytes(hash->digest_bytes()));
    sig.whole = in.bytes(hash->digest_bytes());
    const std::uint32_t siglen = in.u32();
    if (siglen > (std::uint32_t{1} << 20)) raise(Errc::parse_error, "signature length out of range");
    sig.cdss_sig = in.bytes(siglen);
    if (!in.done()) raise(Errc::parse_error, "trailing bytes after signature");
    out.scheme1 = std::move(sig);
  } else {
    Scheme3Signature sig;
    sig.hash_id = hash_id;
    sig.cdss_id = cdss_id;
    sig.d = d;
    sig.t = t;
    sig.n = n;
    sig.s_bits = s_bits;
    sig.cff = tag;
    sig.r = in.bytes(kLinkingStringBits / 8);
    const std::size_t count = std::size_t{t} + 1;
    const Bytes bitmap = in.bytes((count + 7) / 8);
    sig.entries.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
      if (!(bitmap[i / 8] & (0x80 >> (i % 8)))) continue;
      const std::uint32_t len = in.u32();
      if (len > (std::uint32_t{1} << 20)) raise(Errc::parse_error, "entry length out of range");
      sig.entries[i] = in.bytes(len);
    }
    if (!in.done()) raise(Errc::parse_error, "trailing bytes after signature");
    out.scheme3 = std::move(sig);
  }
  return out;
}

Bytes serialize_redacted_message(const BlockMessage& m) {
  Bytes out;
  out.insert(out.end(), kRedactedMagic, kRedactedMagic + 4);
  out.push_back(kSigVersion);
  put_u32_be(out, static_cast<std::uint32_t>(m.size()));
  Bytes bitmap((m.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!m.redacted(i)) bitmap[i / 8] |= std::uint8_t(0x80 >> (i % 8));
  out.insert(out.end(), bitmap.begin(), bitmap.end());
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!m.redacted(i)) put_blob(out, m.block(i));
  return out;
}

BlockMessage parse_redacted_message(ByteView data) {
  ByteReader in(data);
  const Bytes magic = in.bytes(4);
  if (!std::equal(magic.begin(), magic.end(), kRedactedMagic))
    raise(Errc::parse_error, "not a redacted message container");
  if (in.u8() != kSigVersion) raise(Errc::parse_error, "unsupported container version");
  const std::uint32_t n = in.u32();
  if (n == 0 || n > (std::uint32_t{1} << 20)) raise(Errc::parse_error, "block count out of range");
  const Bytes bitmap = in.bytes((std::size_t{n} + 7) / 8);
  std::vector<std::optional<Bytes>> entries(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!(bitmap[i / 8] & (0x80 >> (i % 8)))) continue;
    const std::uint32_t len = in.u32();
    if (len > (std::uint32_t{1} << 30)) raise(Errc::parse_error, "block length out of range");
    entries[i] = in.bytes(len);
  }
  if (!in.done()) raise(Errc::parse_error, "trailing bytes after message");
  return BlockMessage::from_entries(std::move(entries));
}

bool looks_like_redacted_message(ByteView data) {
  return data.size() >= 4 && std::equal(data.begin(), data.begin() + 4, kRedactedMagic);
}

std::uint64_t signature_payload_bytes(const Scheme1Signature& sig) {
  std::uint64_t size = 0;
  for (const Digest& d : sig.tests) size += d.size();
  size += sig.whole.size();
  size += sig.cdss_sig.size();
  return size;
}

std::uint64_t signature_payload_bytes(const Scheme3Signature& sig) {
  std::uint64_t size = sig.r.size();
  for (const auto& e : sig.entries)
    if (e.has_value()) size += e->size();
  return size;
}

std::uint64_t signature_overhead_bytes(const Scheme1Signature& sig) {
  return header_bytes(sig.hash_id, sig.cdss_id, sig.cff) + 4;  // CDSS length prefix
}

std::uint64_t signature_overhead_bytes(const Scheme3Signature& sig) {
  std::uint64_t surviving = 0;
  for (const auto& e : sig.entries)
    if (e.has_value()) ++surviving;
  return header_bytes(sig.hash_id, sig.cdss_id, sig.cff) + (sig.entries.size() + 7) / 8 +
         4 * surviving;
}

}  // namespace mtss
