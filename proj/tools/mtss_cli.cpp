//
// Project mtss - Copyright 2026 the mtss authors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: sign, verify (optionally correct), redact, plan,
// and CFF matrix utilities over the detached signature format.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "mtss/cff.hpp"
#include "mtss/crypto.hpp"
#include "mtss/message.hpp"
#include "mtss/params.hpp"
#include "mtss/scheme1.hpp"
#include "mtss/scheme2.hpp"
#include "mtss/scheme3.hpp"
#include "mtss/sigfile.hpp"

namespace {

using namespace mtss;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitReject = 2;
constexpr int kExitCorrectionFailed = 3;

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) raise(Errc::io_error, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string& s = ss.str();
  return Bytes(s.begin(), s.end());
}

void write_file(const std::string& path, ByteView data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out.good()) raise(Errc::io_error, "cannot write " + path);
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out.good()) raise(Errc::io_error, "short write to " + path);
}

struct BlockSpec {
  enum class Mode { fixed, delim } mode = Mode::fixed;
  std::size_t fixed_bytes = 8;
  std::uint8_t delim = '\n';
};

BlockSpec parse_block_spec(const std::string& text) {
  BlockSpec spec;
  if (text.rfind("fixed:", 0) == 0) {
    spec.mode = BlockSpec::Mode::fixed;
    const unsigned long v = std::stoul(text.substr(6));
    if (v == 0 || v > (1u << 20)) raise(Errc::unsupported_parameter, "block size out of range");
    spec.fixed_bytes = v;
  } else if (text.rfind("delim:", 0) == 0) {
    spec.mode = BlockSpec::Mode::delim;
    const unsigned long v = std::stoul(text.substr(6));
    if (v > 255) raise(Errc::unsupported_parameter, "delimiter must be a byte value");
    spec.delim = static_cast<std::uint8_t>(v);
  } else {
    raise(Errc::unsupported_parameter, "block spec must be fixed:<bytes> or delim:<byte>");
  }
  return spec;
}

BlockMessage split_message(ByteView data, const BlockSpec& spec) {
  return spec.mode == BlockSpec::Mode::fixed ? BlockMessage::split_fixed(data, spec.fixed_bytes)
                                             : BlockMessage::split_after_delim(data, spec.delim);
}

CryptoSuite make_suite(const std::string& hash_id, const std::string& cdss_id,
                       const std::string& seed_hex) {
  CryptoSuite suite;
  suite.hash = hash_by_id(hash_id);
  suite.cdss = cdss_by_id(cdss_id);
  suite.rng = seed_hex.empty() ? system_rng() : seeded_rng(from_hex(seed_hex));
  return suite;
}

// --cff identity | poly:q,k | file:PATH
CffMatrix matrix_from_option(const std::string& text, std::uint64_t n) {
  if (text == "identity") return CffMatrix::identity(n);
  if (text.rfind("poly:", 0) == 0) {
    const std::string rest = text.substr(5);
    const auto comma = rest.find(',');
    if (comma == std::string::npos)
      raise(Errc::unsupported_parameter, "polynomial spec must be poly:q,k");
    CffTag tag;
    tag.kind = CffProvenance::Kind::polynomial;
    tag.q = static_cast<std::uint32_t>(std::stoul(rest.substr(0, comma)));
    tag.k = static_cast<std::uint32_t>(std::stoul(rest.substr(comma + 1)));
    return matrix_from_tag(tag);
  }
  if (text.rfind("file:", 0) == 0) {
    const Bytes raw = read_file(text.substr(5));
    return parse_matrix_literal(std::string(raw.begin(), raw.end()));
  }
  raise(Errc::unsupported_parameter, "matrix spec must be identity, poly:q,k or file:PATH");
}

CffMatrix plan_matrix(std::uint64_t n, std::uint32_t d, std::uint32_t scheme,
                      const CryptoSuite& suite) {
  PlanRequest req;
  req.blocks = n;
  req.d = d;
  req.scheme = scheme;
  req.hash_bits = static_cast<std::uint32_t>(suite.hash->digest_bits());
  req.cdss_bits = static_cast<std::uint32_t>(8 * suite.cdss->signature_bytes());
  const Plan p = plan(req);
  std::cout << render_plan(req, p);
  if (p.construction == CffProvenance::Kind::identity) return CffMatrix::identity(p.columns);
  CffTag tag;
  tag.kind = CffProvenance::Kind::polynomial;
  tag.q = p.q;
  tag.k = p.k;
  return matrix_from_tag(tag);
}

std::string render_indices(const std::vector<std::uint32_t>& zero_based) {
  std::string out = "[";
  for (std::size_t i = 0; i < zero_based.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(zero_based[i] + 1);  // 1-based in all user-facing output
  }
  return out + "]";
}

struct VerifyArgs {
  std::string message_path;
  std::string sig_path;
  std::string pub_path;
  std::string block_spec;
  std::string cff_file;
  bool correct = false;
  std::uint32_t max_bits = 0;
  std::string out_path;
};

// The verifier-side view of the message plus the matrix named by a parsed
// signature header.
struct VerifyContext {
  BlockMessage message;
  CffMatrix matrix;
  CryptoSuite suite;
};

VerifyContext build_context(ByteView message_raw, std::uint8_t scheme, const std::string& hash_id,
                            const std::string& cdss_id, std::uint32_t s_bits, const CffTag& tag,
                            const std::string& block_spec, const std::string& cff_file) {
  VerifyContext ctx{BlockMessage(std::vector<Bytes>{Bytes{}}), CffMatrix::identity(1),
                    CryptoSuite{}};
  ctx.suite = CryptoSuite{hash_by_id(hash_id), cdss_by_id(cdss_id), system_rng()};

  if (looks_like_redacted_message(message_raw)) {
    if (scheme != 3) raise(Errc::unsupported_parameter, "redacted containers are scheme-3 only");
    ctx.message = parse_redacted_message(message_raw);
  } else if (!block_spec.empty()) {
    ctx.message = split_message(message_raw, parse_block_spec(block_spec));
  } else if (s_bits > 0 && s_bits % 8 == 0) {
    ctx.message = BlockMessage::split_fixed(message_raw, s_bits / 8);
  } else {
    raise(Errc::unsupported_parameter,
          "the signature does not fix a block size; pass --block to re-split the message");
  }

  if (tag.kind == CffProvenance::Kind::literal) {
    if (cff_file.empty())
      raise(Errc::unsupported_parameter, "signature pins a literal matrix; pass --cff-file");
    const Bytes raw = read_file(cff_file);
    ctx.matrix = parse_matrix_literal(std::string(raw.begin(), raw.end()));
  } else {
    ctx.matrix = matrix_from_tag(tag);
  }
  return ctx;
}

int cmd_keygen(const std::string& cdss_id, const std::string& seed_hex, const std::string& prefix) {
  const auto provider = cdss_by_id(cdss_id);
  const KeyPair kp = seed_hex.empty() ? provider->keygen(128)
                                      : provider->keygen_seeded(128, from_hex(seed_hex));
  write_file(prefix + ".sk", kp.sk);
  write_file(prefix + ".pk", kp.pk);
  std::cout << "wrote " << prefix << ".sk and " << prefix << ".pk (" << cdss_id << ")\n";
  return kExitOk;
}

int cmd_sign(const std::string& message_path, const std::string& key_path, std::uint32_t scheme,
             std::uint32_t d, const std::string& block_spec_text, const std::string& cff_text,
             const std::string& hash_id, const std::string& cdss_id, const std::string& seed_hex,
             const std::string& out_path) {
  const Bytes raw = read_file(message_path);
  const Bytes sk = read_file(key_path);
  const BlockSpec spec = parse_block_spec(block_spec_text);
  const BlockMessage m = split_message(raw, spec);
  const CryptoSuite suite = make_suite(hash_id, cdss_id, seed_hex);

  const CffMatrix matrix = cff_text.empty() ? plan_matrix(m.size(), d, scheme, suite)
                                            : matrix_from_option(cff_text, m.size());
  if (matrix.d() < d) raise(Errc::unsupported_parameter, "requested d exceeds the matrix strength");

  SignOptions opts;
  opts.claimed_d = d;
  opts.s_bits =
      spec.mode == BlockSpec::Mode::fixed ? static_cast<std::uint32_t>(8 * spec.fixed_bytes) : 0;

  Bytes encoded;
  if (scheme == 1) {
    encoded = serialize_signature(mtss1_sign(m, sk, suite, matrix, opts));
  } else if (scheme == 3) {
    encoded = serialize_signature(mtss3_sign(m, sk, suite, matrix, opts));
  } else {
    raise(Errc::unsupported_parameter, "scheme must be 1 or 3");
  }
  write_file(out_path, encoded);
  const char* shape = matrix.provenance().kind == CffProvenance::Kind::identity ? "identity"
                      : matrix.provenance().kind == CffProvenance::Kind::polynomial
                          ? "polynomial"
                          : "literal";
  std::cout << "signed " << m.size() << " blocks (scheme " << scheme << ", d=" << d
            << ", t=" << matrix.rows() << ", " << shape << " matrix), wrote " << out_path << " ("
            << encoded.size() << " bytes)\n";
  return kExitOk;
}

int report_outcome(const VerifyOutcome& out, std::uint8_t scheme) {
  if (!out.accepted()) {
    std::cout << "status: INVALID\n";
    if (out.modified.has_value() && scheme == 1)
      std::cout << "MODIFIED blocks (at least): " << render_indices(*out.modified) << "\n";
    return kExitReject;
  }
  if (out.modified->empty()) {
    std::cout << "status: VALID, 0 modified\n";
  } else {
    std::cout << "status: VALID, " << out.modified->size() << " modified\n"
              << "MODIFIED blocks: " << render_indices(*out.modified) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const VerifyArgs& args) {
  const Bytes raw = read_file(args.message_path);
  const Bytes sig_bytes = read_file(args.sig_path);
  const Bytes pk = read_file(args.pub_path);
  const ParsedSignature parsed = parse_signature(sig_bytes);

  if (parsed.scheme == 3) {
    if (args.correct)
      raise(Errc::unsupported_parameter, "correction applies to scheme-1 signatures only");
    const Scheme3Signature& sig = *parsed.scheme3;
    const VerifyContext ctx = build_context(raw, 3, sig.hash_id, sig.cdss_id, sig.s_bits, sig.cff,
                                            args.block_spec, args.cff_file);
    std::cout << "scheme 3 signature: d=" << sig.d << ", t=" << sig.t << ", n=" << sig.n << "\n";
    return report_outcome(mtss3_verify(ctx.message, sig, pk, ctx.suite, ctx.matrix), 3);
  }

  const Scheme1Signature& sig = *parsed.scheme1;
  const VerifyContext ctx = build_context(raw, 1, sig.hash_id, sig.cdss_id, sig.s_bits, sig.cff,
                                          args.block_spec, args.cff_file);
  std::cout << "scheme 1 signature: d=" << sig.d << ", t=" << sig.t << ", n=" << sig.n
            << ", s=" << sig.s_bits << "\n";

  if (!args.correct)
    return report_outcome(mtss1_verify(ctx.message, sig, pk, ctx.suite, ctx.matrix), 1);

  if (sig.s_bits == 0 && args.max_bits == 0)
    raise(Errc::unsupported_parameter,
          "signature has no block size bound; pass --max-bits to enable correction");
  CorrectionConfig cfg;
  cfg.max_bits = args.max_bits != 0 ? args.max_bits : sig.s_bits;
  const CorrectionReport report =
      mtss2_correction_report(ctx.message, sig, pk, ctx.suite, ctx.matrix, cfg);
  const VerifyOutcome& out = report.outcome;
  const int base = report_outcome(out, 1);
  if (base != kExitOk) return base;
  if (!out.modified->empty() && !out.corrected.has_value()) {
    bool collision = false;
    for (const BlockCorrection& b : report.blocks) {
      if (b.status == BlockCorrectionStatus::corrected) continue;
      collision = collision || b.status == BlockCorrectionStatus::collision;
      std::cout << "block " << b.index + 1 << ": "
                << (b.status == BlockCorrectionStatus::collision
                        ? "second preimage found, value ambiguous"
                        : "no candidate within " + std::to_string(cfg.max_bits) + " bits matched")
                << "\n";
    }
    std::cout << (collision ? "CORRECTION FAILED (collision)\n" : "CORRECTION FAILED\n");
    return kExitCorrectionFailed;
  }
  if (out.corrected.has_value() && !out.modified->empty()) {
    const std::string dest =
        args.out_path.empty() ? args.message_path + ".corrected" : args.out_path;
    write_file(dest, out.corrected->join());
    std::cout << "CORRECTED: wrote " << dest << "\n";
  }
  return kExitOk;
}

int cmd_redact(const std::string& message_path, const std::string& sig_path,
               const std::string& blocks_csv, const std::string& block_spec,
               const std::string& cff_file, const std::string& out_prefix) {
  const Bytes raw = read_file(message_path);
  const Bytes sig_bytes = read_file(sig_path);
  const ParsedSignature parsed = parse_signature(sig_bytes);
  if (parsed.scheme != 3)
    raise(Errc::unsupported_parameter, "redaction applies to scheme-3 signatures only");
  const Scheme3Signature& sig = *parsed.scheme3;

  std::vector<std::uint32_t> targets;
  std::stringstream ss(blocks_csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const unsigned long v = std::stoul(item);
    if (v == 0) raise(Errc::unsupported_parameter, "block indices are 1-based");
    targets.push_back(static_cast<std::uint32_t>(v - 1));
  }
  if (targets.empty()) raise(Errc::unsupported_parameter, "no blocks given");

  const VerifyContext ctx =
      build_context(raw, 3, sig.hash_id, sig.cdss_id, sig.s_bits, sig.cff, block_spec, cff_file);
  const auto [rm, rs] = mtss3_redact(ctx.message, sig, targets, ctx.matrix);
  write_file(out_prefix + ".msg", serialize_redacted_message(rm));
  write_file(out_prefix + ".sig", serialize_signature(rs));
  std::cout << "redacted blocks " << render_indices(targets) << ", wrote " << out_prefix
            << ".msg and " << out_prefix << ".sig\n";
  return kExitOk;
}

int cmd_plan(std::uint64_t n, std::uint64_t size_bits, std::uint32_t block_bits, std::uint32_t d,
             std::uint32_t scheme, std::uint32_t hash_bits, std::uint32_t cdss_bits,
             std::uint32_t r_bits, bool machine) {
  PlanRequest req;
  req.blocks = n;
  req.size_bits = size_bits;
  req.block_bits = block_bits;
  req.d = d;
  req.scheme = scheme;
  req.hash_bits = hash_bits;
  req.cdss_bits = cdss_bits;
  req.r_bits = r_bits;
  const Plan p = plan(req);
  std::cout << (machine ? render_plan_machine(req, p) : render_plan(req, p));
  return kExitOk;
}

int cmd_cff(const std::string& make_spec, const std::string& check_path, std::uint32_t d,
            std::uint64_t identity_n, std::uint64_t budget, std::uint64_t samples,
            const std::string& out_path) {
  if (!make_spec.empty()) {
    const CffMatrix m = matrix_from_option(make_spec, identity_n);
    const std::string text = format_matrix_literal(m);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      write_file(out_path,
                 ByteView(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
      std::cout << "wrote " << m.rows() << "x" << m.cols() << " matrix (d=" << m.d() << ") to "
                << out_path << "\n";
    }
    return kExitOk;
  }

  const Bytes raw = read_file(check_path);
  const CffMatrix m = parse_matrix_literal(std::string(raw.begin(), raw.end()));
  const std::uint32_t claim = d == 0 ? m.d() : d;
  ValidateOptions opts;
  opts.exhaustive_budget = budget;
  opts.random_samples = samples;
  const bool ok = cff_validate_at(m, claim, opts);
  std::cout << m.rows() << "x" << m.cols() << " matrix, claimed d=" << claim << ": "
            << (ok ? "VALID" : "INVALID") << "\n";
  return ok ? kExitOk : kExitReject;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modification-tolerant signatures: locate, correct and redact signed blocks"};
  app.require_subcommand(1);

  std::string kg_cdss = "ed25519", kg_seed, kg_prefix;
  auto* keygen = app.add_subcommand("keygen", "generate a key pair");
  keygen->add_option("--cdss", kg_cdss, "signature provider: ed25519 or hmac-test");
  keygen->add_option("--seed", kg_seed, "hex seed for a deterministic key pair");
  keygen->add_option("--out", kg_prefix, "output prefix (PREFIX.sk, PREFIX.pk)")->required();

  std::string sg_message, sg_key, sg_block = "fixed:8", sg_cff, sg_hash = "sha256",
              sg_cdss = "ed25519", sg_seed, sg_out;
  std::uint32_t sg_scheme = 1, sg_d = 2;
  auto* sign = app.add_subcommand("sign", "sign a message file");
  sign->add_option("message", sg_message, "message file")->required();
  sign->add_option("--key", sg_key, "secret key file")->required();
  sign->add_option("--scheme", sg_scheme, "1 (locate/correct) or 3 (redactable)");
  sign->add_option("--d", sg_d, "modification tolerance");
  sign->add_option("--block", sg_block, "block split: fixed:<bytes> or delim:<byte>");
  sign->add_option("--cff", sg_cff, "matrix: identity, poly:q,k or file:PATH (default: planned)");
  sign->add_option("--hash", sg_hash, "hash id");
  sign->add_option("--cdss", sg_cdss, "signature provider id");
  sign->add_option("--seed", sg_seed, "hex seed for deterministic signing randomness");
  sign->add_option("--out", sg_out, "signature file to write")->required();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "verify a message against a signature");
  verify->add_option("message", va.message_path, "message file (raw or redacted container)")
      ->required();
  verify->add_option("--sig", va.sig_path, "signature file")->required();
  verify->add_option("--pub", va.pub_path, "public key file")->required();
  verify->add_option("--block", va.block_spec, "block split override (needed for delim mode)");
  verify->add_option("--cff-file", va.cff_file, "matrix literal file for literal-tagged signatures");
  verify->add_flag("--correct", va.correct, "recover modified blocks (scheme 1, bounded blocks)");
  verify->add_option("--max-bits", va.max_bits, "candidate search bound in bits");
  verify->add_option("--out", va.out_path, "where to write the corrected message");

  std::string rd_message, rd_sig, rd_blocks, rd_block_spec, rd_cff_file, rd_prefix;
  auto* redact = app.add_subcommand("redact", "erase blocks from a scheme-3 signed message");
  redact->add_option("message", rd_message, "message file (raw or redacted container)")->required();
  redact->add_option("--sig", rd_sig, "signature file")->required();
  redact->add_option("--blocks", rd_blocks, "1-based block indices, comma separated")->required();
  redact->add_option("--block", rd_block_spec, "block split override");
  redact->add_option("--cff-file", rd_cff_file, "matrix literal file");
  redact->add_option("--out", rd_prefix, "output prefix (PREFIX.msg, PREFIX.sig)")->required();

  std::uint64_t pl_n = 0, pl_size_bits = 0;
  std::uint32_t pl_block_bits = 0, pl_d = 1, pl_scheme = 1, pl_hash_bits = 256,
                pl_cdss_bits = 2048, pl_r_bits = 128;
  bool pl_machine = false;
  auto* planc = app.add_subcommand("plan", "pick a construction and compute signature sizes");
  planc->add_option("--n", pl_n, "block count");
  planc->add_option("--size-bits", pl_size_bits, "total message size in bits");
  planc->add_option("--block-bits", pl_block_bits, "block size bound in bits");
  planc->add_option("--d", pl_d, "modification tolerance")->required();
  planc->add_option("--scheme", pl_scheme, "1 or 3");
  planc->add_option("--hash-bits", pl_hash_bits, "digest length in bits");
  planc->add_option("--cdss-bits", pl_cdss_bits, "CDSS signature length in bits");
  planc->add_option("--r-bits", pl_r_bits, "linking string length in bits");
  planc->add_flag("--machine", pl_machine, "key=value output");

  std::string cf_make, cf_check, cf_out;
  std::uint32_t cf_d = 0;
  std::uint64_t cf_n = 1, cf_budget = 10'000'000, cf_samples = 1'000'000;
  auto* cff = app.add_subcommand("cff", "emit or validate matrix literal files");
  cff->add_option("--make", cf_make, "construction to emit: identity or poly:q,k");
  cff->add_option("--n", cf_n, "column count for identity matrices");
  cff->add_option("--check", cf_check, "matrix literal file to validate");
  cff->add_option("--d", cf_d, "strength to validate at (default: the file's claim)");
  cff->add_option("--budget", cf_budget, "exhaustive subset budget");
  cff->add_option("--samples", cf_samples, "random samples when over budget");
  cff->add_option("--out", cf_out, "output file for --make");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*keygen) return cmd_keygen(kg_cdss, kg_seed, kg_prefix);
    if (*sign)
      return cmd_sign(sg_message, sg_key, sg_scheme, sg_d, sg_block, sg_cff, sg_hash, sg_cdss,
                      sg_seed, sg_out);
    if (*verify) return cmd_verify(va);
    if (*redact)
      return cmd_redact(rd_message, rd_sig, rd_blocks, rd_block_spec, rd_cff_file, rd_prefix);
    if (*planc)
      return cmd_plan(pl_n, pl_size_bits, pl_block_bits, pl_d, pl_scheme, pl_hash_bits,
                      pl_cdss_bits, pl_r_bits, pl_machine);
    if (*cff) {
      if (cf_make.empty() == cf_check.empty())
        raise(Errc::unsupported_parameter, "pass exactly one of --make or --check");
      return cmd_cff(cf_make, cf_check, cf_d, cf_n, cf_budget, cf_samples, cf_out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::too_many_redactions ? kExitReject : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
