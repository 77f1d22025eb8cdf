//
// Project mtss - Copyright 2026 the mtss authors.
// SPDX-License-Identifier: Apache-2.0
//
#include "mtss/params.hpp"

#include <limits>
#include <sstream>

namespace mtss {

namespace {

constexpr std::uint64_t kMaxFieldOrder = 1u << 16;
constexpr std::uint64_t kIdentityMaxTests = std::uint64_t{1} << 20;

// p^e = q for exactly one prime p, or nothing.
bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    while (q % p == 0) q /= p;
    return q == 1;
  }
  return true;  // prime
}

// Smallest k with q^(k+1) >= n, clamping the power at uint64 range.
std::uint32_t smallest_degree_bound(std::uint64_t q, std::uint64_t n) {
  std::uint64_t power = q;  // q^(k+1) starting at k = 0
  std::uint32_t k = 0;
  while (power < n) {
    ++k;
    if (power > std::numeric_limits<std::uint64_t>::max() / q) return k;  // power already >= 2^64 > n
    power *= q;
  }
  return k == 0 ? 1 : k;  // construction needs k >= 1
}

std::uint64_t checked_pow(std::uint64_t q, std::uint32_t exp) {
  std::uint64_t out = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / q)
      return std::numeric_limits<std::uint64_t>::max();
    out *= q;
  }
  return out;
}

}  // namespace

std::uint64_t size_scheme12(std::uint64_t hash_bits, std::uint64_t t, std::uint64_t cdss_bits) {
  return hash_bits * (t + 1) + cdss_bits;
}

std::uint64_t size_scheme3(std::uint64_t cdss_bits, std::uint64_t t, std::uint64_t r_bits) {
  return cdss_bits * (t + 1) + r_bits;
}

Plan plan(const PlanRequest& req) {
  if (req.d < 1) raise(Errc::unsupported_parameter, "tolerance d must be >= 1");
  std::uint64_t n = req.blocks;
  if (n == 0) {
    if (req.size_bits == 0 || req.block_bits == 0)
      raise(Errc::unsupported_parameter, "give either a block count or a size plus block bound");
    n = (req.size_bits + req.block_bits - 1) / req.block_bits;
  }
  if (n == 0) raise(Errc::unsupported_parameter, "block count must be >= 1");

  Plan best;
  bool found = false;

  if (n >= std::uint64_t{req.d} + 1 && n <= kIdentityMaxTests) {
    best.construction = CffProvenance::Kind::identity;
    best.tests = n;
    best.columns = n;
    best.achieved_d = static_cast<std::uint32_t>(n - 1);
    found = true;
  }

  for (std::uint64_t q = 2; q <= kMaxFieldOrder; ++q) {
    if (found && q * q >= best.tests) break;  // t = q^2 only grows from here
    if (!is_prime_power(q)) continue;
    const std::uint32_t k = smallest_degree_bound(q, n);
    const std::uint64_t achieved = (q - 1) / k;
    if (achieved < req.d) continue;
    const std::uint64_t cols = checked_pow(q, k + 1);
    if (cols < n) continue;
    // candidates arrive in increasing t; a strict tie on t cannot happen,
    // and the identity fallback already holds any t = n tie
    best.construction = CffProvenance::Kind::polynomial;
    best.q = static_cast<std::uint32_t>(q);
    best.k = k;
    best.tests = q * q;
    best.columns = cols;
    best.achieved_d = static_cast<std::uint32_t>(achieved);
    found = true;
    break;
  }

  if (!found) raise(Errc::no_construction, "no supported construction reaches these parameters");

  best.blocks = n;
  best.signature_bits = req.scheme == 3
                            ? size_scheme3(req.cdss_bits, best.tests, req.r_bits)
                            : size_scheme12(req.hash_bits, best.tests, req.cdss_bits);
  return best;
}

std::string render_plan(const PlanRequest& req, const Plan& p) {
  std::ostringstream out;
  if (p.construction == CffProvenance::Kind::polynomial)
    out << "construction: polynomial over GF(" << p.q << "), degree <= " << p.k << "\n";
  else
    out << "construction: identity (one test per block)\n";
  out << "blocks (n):      " << p.blocks << "\n"
      << "columns:         " << p.columns << "\n"
      << "tests (t):       " << p.tests << "\n"
      << "achieved d:      " << p.achieved_d << " (requested " << req.d << ")\n"
      << "scheme:          " << req.scheme << "\n"
      << "signature size:  " << p.signature_bits << " bits (" << p.signature_bits / 8
      << " bytes)\n"
      << "note: only the identity and polynomial families are searched; the\n"
         "Porat-Rothschild Theta(d^2 log n) and the d*sqrt(n) constructions\n"
         "are not implemented.\n";
  return out.str();
}

std::string render_plan_machine(const PlanRequest& req, const Plan& p) {
  std::ostringstream out;
  out << "construction="
      << (p.construction == CffProvenance::Kind::polynomial ? "polynomial" : "identity") << "\n";
  if (p.construction == CffProvenance::Kind::polynomial) out << "q=" << p.q << "\nk=" << p.k << "\n";
  out << "n=" << p.blocks << "\ncolumns=" << p.columns << "\nt=" << p.tests
      << "\nachieved_d=" << p.achieved_d << "\nrequested_d=" << req.d << "\nscheme=" << req.scheme
      << "\nsignature_bits=" << p.signature_bits << "\n";
  return out.str();
}

}  // namespace mtss
