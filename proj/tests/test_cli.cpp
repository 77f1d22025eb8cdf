//
// Project mtss - Copyright 2026 the mtss authors.
// SPDX-License-Identifier: Apache-2.0
//
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "mtss/bytes.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(MTSS_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("mtss-cli-test-" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_bytes(const std::string& path, const mtss::Bytes& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  REQUIRE(out.good());
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
}

mtss::Bytes read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  mtss::Bytes out((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return out;
}

mtss::Bytes random_bytes(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  mtss::Bytes out(n);
  for (auto& b : out) b = static_cast<std::uint8_t>(rng());
  return out;
}

const std::string kGolden912 = std::string(MTSS_TEST_DATA_DIR) + "/cff_9x12_golden.txt";

}  // namespace

TEST_CASE("sign and verify an untouched file") {
  TempDir dir;
  write_bytes(dir.file("msg"), random_bytes(96, 1));
  CHECK(run("keygen --out " + dir.file("k")).exit_code == 0);

  const RunResult signed_ = run("sign " + dir.file("msg") + " --key " + dir.file("k.sk") +
                                " --d 2 --block fixed:8 --cff file:" + kGolden912 + " --out " +
                                dir.file("sig"));
  CHECK(signed_.exit_code == 0);
  CHECK(signed_.output.find("12 blocks") != std::string::npos);  // 96 bytes / 8

  const RunResult v = run("verify " + dir.file("msg") + " --sig " + dir.file("sig") + " --pub " +
                          dir.file("k.pk") + " --cff-file " + kGolden912);
  CHECK(v.exit_code == 0);
  CHECK(v.output.find("VALID, 0 modified") != std::string::npos);
}

TEST_CASE("delimiter split counts lines as blocks") {
  TempDir dir;
  std::string text;
  for (int i = 0; i < 9; ++i) text += "line " + std::to_string(i) + "\n";
  write_bytes(dir.file("msg"), mtss::to_bytes(text));
  run("keygen --out " + dir.file("k"));
  const RunResult s = run("sign " + dir.file("msg") + " --key " + dir.file("k.sk") +
                          " --d 2 --block delim:10 --out " + dir.file("sig"));
  CHECK(s.exit_code == 0);
  CHECK(s.output.find("signed 9 blocks") != std::string::npos);
  const RunResult v = run("verify " + dir.file("msg") + " --sig " + dir.file("sig") + " --pub " +
                          dir.file("k.pk") + " --block delim:10");
  CHECK(v.exit_code == 0);
}

TEST_CASE("verify reports edited blocks with 1-based indices") {
  TempDir dir;
  mtss::Bytes msg = random_bytes(96, 2);
  write_bytes(dir.file("msg"), msg);
  run("keygen --out " + dir.file("k"));
  run("sign " + dir.file("msg") + " --key " + dir.file("k.sk") + " --d 2 --block fixed:8 --cff file:" +
      kGolden912 + " --out " + dir.file("sig"));

  msg[2 * 8] ^= 0xff;   // block 3
  msg[11 * 8] ^= 0xff;  // block 12
  write_bytes(dir.file("msg"), msg);
  const RunResult v = run("verify " + dir.file("msg") + " --sig " + dir.file("sig") + " --pub " +
                          dir.file("k.pk") + " --cff-file " + kGolden912);
  CHECK(v.exit_code == 0);
  CHECK(v.output.find("MODIFIED blocks: [3, 12]") != std::string::npos);
}

TEST_CASE("truncated signature files exit 1 with a parse error") {
  TempDir dir;
  write_bytes(dir.file("msg"), random_bytes(32, 3));
  run("keygen --out " + dir.file("k"));
  run("sign " + dir.file("msg") + " --key " + dir.file("k.sk") + " --d 2 --block fixed:8 --out " +
      dir.file("sig"));
  const mtss::Bytes full = read_bytes(dir.file("sig"));
  write_bytes(dir.file("sig"), mtss::Bytes(full.begin(), full.begin() + full.size() / 2));
  const RunResult v = run("verify " + dir.file("msg") + " --sig " + dir.file("sig") + " --pub " +
                          dir.file("k.pk"));
  CHECK(v.exit_code == 1);
  CHECK(v.output.find("ParseError") != std::string::npos);
}

TEST_CASE("correction restores the original file byte for byte") {
  TempDir dir;
  const mtss::Bytes original = random_bytes(24, 4);
  write_bytes(dir.file("msg"), original);
  run("keygen --out " + dir.file("k"));
  run("sign " + dir.file("msg") + " --key " + dir.file("k.sk") + " --d 2 --block fixed:1 --out " +
      dir.file("sig"));

  mtss::Bytes damaged = original;
  damaged[5] ^= 0x55;
  damaged[17] ^= 0xaa;
  write_bytes(dir.file("msg"), damaged);
  const RunResult v = run("verify " + dir.file("msg") + " --sig " + dir.file("sig") + " --pub " +
                          dir.file("k.pk") + " --correct --out " + dir.file("restored"));
  CHECK(v.exit_code == 0);
  CHECK(v.output.find("CORRECTED") != std::string::npos);
  CHECK(read_bytes(dir.file("restored")) == original);
}

TEST_CASE("redaction round trip and over-tolerance refusal") {
  TempDir dir;
  write_bytes(dir.file("msg"), random_bytes(60, 5));
  run("keygen --cdss hmac-test --seed 00ff --out " + dir.file("k"));
  run("sign " + dir.file("msg") + " --key " + dir.file("k.sk") +
      " --scheme 3 --cdss hmac-test --d 2 --block fixed:5 --out " + dir.file("sig"));

  const RunResult too_many = run("redact " + dir.file("msg") + " --sig " + dir.file("sig") +
                                 " --blocks 1,2,3 --out " + dir.file("bad"));
  CHECK(too_many.exit_code == 2);
  CHECK_FALSE(fs::exists(dir.file("bad.msg")));  // refused before writing

  const RunResult red = run("redact " + dir.file("msg") + " --sig " + dir.file("sig") +
                            " --blocks 4 --out " + dir.file("red"));
  CHECK(red.exit_code == 0);
  const RunResult v = run("verify " + dir.file("red.msg") + " --sig " + dir.file("red.sig") +
                          " --pub " + dir.file("k.pk"));
  CHECK(v.exit_code == 0);
  CHECK(v.output.find("MODIFIED blocks: [4]") != std::string::npos);
}

TEST_CASE("redacted twins are byte-identical under a seeded suite") {
  TempDir dir;
  mtss::Bytes m1 = random_bytes(60, 6);
  mtss::Bytes m2 = m1;
  for (int i = 0; i < 5; ++i) m2[3 * 5 + i] ^= 0x77;  // block 4 differs
  write_bytes(dir.file("m1"), m1);
  write_bytes(dir.file("m2"), m2);
  run("keygen --cdss hmac-test --seed 1122 --out " + dir.file("k"));
  const std::string common = " --key " + dir.file("k.sk") +
                             " --scheme 3 --cdss hmac-test --seed beef --d 2 --block fixed:5 --out ";
  run("sign " + dir.file("m1") + common + dir.file("s1"));
  run("sign " + dir.file("m2") + common + dir.file("s2"));
  run("redact " + dir.file("m1") + " --sig " + dir.file("s1") + " --blocks 4 --out " + dir.file("r1"));
  run("redact " + dir.file("m2") + " --sig " + dir.file("s2") + " --blocks 4 --out " + dir.file("r2"));
  CHECK(read_bytes(dir.file("r1.msg")) == read_bytes(dir.file("r2.msg")));
  CHECK(read_bytes(dir.file("r1.sig")) == read_bytes(dir.file("r2.sig")));
}

TEST_CASE("scheme 3 over delimiter-split blocks round trips") {
  TempDir dir;
  std::string text;
  for (int i = 0; i < 7; ++i) text += "record " + std::to_string(i) + "\n";
  write_bytes(dir.file("msg"), mtss::to_bytes(text));
  run("keygen --out " + dir.file("k"));
  const RunResult s = run("sign " + dir.file("msg") + " --key " + dir.file("k.sk") +
                          " --scheme 3 --d 2 --block delim:10 --out " + dir.file("sig"));
  CHECK(s.exit_code == 0);
  CHECK(s.output.find("signed 7 blocks") != std::string::npos);
  const RunResult v = run("verify " + dir.file("msg") + " --sig " + dir.file("sig") + " --pub " +
                          dir.file("k.pk") + " --block delim:10");
  CHECK(v.exit_code == 0);
  CHECK(v.output.find("VALID, 0 modified") != std::string::npos);

  const RunResult red = run("redact " + dir.file("msg") + " --sig " + dir.file("sig") +
                            " --blocks 2,5 --block delim:10 --out " + dir.file("red"));
  CHECK(red.exit_code == 0);
  const RunResult rv = run("verify " + dir.file("red.msg") + " --sig " + dir.file("red.sig") +
                           " --pub " + dir.file("k.pk"));
  CHECK(rv.exit_code == 0);
  CHECK(rv.output.find("MODIFIED blocks: [2, 5]") != std::string::npos);
}

TEST_CASE("plan reproduces the worked examples") {
  const RunResult p1 = run("plan --size-bits 8589934592 --block-bits 8 --d 4 --cdss-bits 2048 --machine");
  CHECK(p1.exit_code == 0);
  CHECK(p1.output.find("signature_bits=162304") != std::string::npos);
  CHECK(p1.output.find("t=625") != std::string::npos);
  const RunResult p3 = run(
      "plan --size-bits 8589934592 --block-bits 8 --d 4 --cdss-bits 2048 --scheme 3 --machine");
  CHECK(p3.output.find("signature_bits=1282176") != std::string::npos);
}

TEST_CASE("cff make and check round trip") {
  TempDir dir;
  const RunResult made = run("cff --make poly:5,2 --out " + dir.file("m.txt"));
  CHECK(made.exit_code == 0);
  const RunResult ok = run("cff --check " + dir.file("m.txt"));
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("VALID") != std::string::npos);
  const RunResult bad = run("cff --check " + kGolden912 + " --d 3");
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("INVALID") != std::string::npos);
}

TEST_CASE("golden signature bytes stay stable across releases") {
  TempDir dir;
  // fully deterministic: seeded key, seeded signing randomness, fixed message
  mtss::Bytes msg(40);
  for (std::size_t i = 0; i < msg.size(); ++i) msg[i] = static_cast<std::uint8_t>(i * 7 + 1);
  write_bytes(dir.file("msg"), msg);
  run("keygen --cdss hmac-test --seed c0ffee --out " + dir.file("k"));
  run("sign " + dir.file("msg") + " --key " + dir.file("k.sk") +
      " --cdss hmac-test --seed feed --d 2 --block fixed:5 --cff identity --out " + dir.file("s1"));
  run("sign " + dir.file("msg") + " --key " + dir.file("k.sk") +
      " --scheme 3 --cdss hmac-test --seed feed --d 2 --block fixed:5 --cff identity --out " +
      dir.file("s3"));

  const std::string golden_dir = std::string(MTSS_TEST_DATA_DIR);
  const mtss::Bytes got1 = read_bytes(dir.file("s1"));
  const mtss::Bytes got3 = read_bytes(dir.file("s3"));
  CHECK(got1 == read_bytes(golden_dir + "/golden_scheme1.sig"));
  CHECK(got3 == read_bytes(golden_dir + "/golden_scheme3.sig"));
}
