//
// Project mtss - Copyright 2026 the mtss authors.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <string>

#include "mtss/cff.hpp"

namespace mtss {

struct PlanRequest {
  std::uint64_t size_bits = 0;   // total message size N; 0 = not given
  std::uint32_t block_bits = 0;  // block size bound s; 0 = not given
  std::uint64_t blocks = 0;      // block count n; derived from N and s when 0
  std::uint32_t d = 1;
  std::uint32_t scheme = 1;
  std::uint32_t hash_bits = 256;
  std::uint32_t cdss_bits = 512;
  std::uint32_t r_bits = 128;
};

struct Plan {
  CffProvenance::Kind construction = CffProvenance::Kind::identity;
  std::uint32_t q = 0;  // polynomial parameters
  std::uint32_t k = 0;
  std::uint64_t tests = 0;    // t
  std::uint64_t columns = 0;  // construction column count (>= blocks)
  std::uint32_t achieved_d = 0;
  std::uint64_t blocks = 0;
  std::uint64_t signature_bits = 0;
};

/// Pick the construction with the fewest tests among the identity family
/// (t = n) and the polynomial family (t = q^2 over prime powers q <= 2^16
/// with floor((q-1)/k) >= d and q^(k+1) >= n); ties go to fewer columns,
/// i.e. less padding.
Plan plan(const PlanRequest& req);

/// Signature size of schemes 1/2: hash_bits * (t + 1) + cdss_bits.
std::uint64_t size_scheme12(std::uint64_t hash_bits, std::uint64_t t, std::uint64_t cdss_bits);
/// Signature size of scheme 3: cdss_bits * (t + 1) + r_bits.
std::uint64_t size_scheme3(std::uint64_t cdss_bits, std::uint64_t t, std::uint64_t r_bits);

std::string render_plan(const PlanRequest& req, const Plan& p);
std::string render_plan_machine(const PlanRequest& req, const Plan& p);

}  // namespace mtss
