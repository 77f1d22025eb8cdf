//
// Project mtss - Copyright 2026 the mtss authors.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mtss/error.hpp"

namespace mtss {

/// Element of a finite field, identified by its canonical code in [0, q).
/// The code packs the polynomial-basis coefficient vector (c0, c1, ...)
/// as c0 + c1*p + c2*p^2 + ...
struct FieldElem {
  std::uint32_t code = 0;

  friend bool operator==(FieldElem, FieldElem) = default;
};

/// Arithmetic in GF(p^e) for prime p and p^e <= 2^16.
///
/// The reduction polynomial is the lexicographically smallest monic
/// irreducible of degree e over GF(p) (low coefficients enumerated as a
/// base-p counter), so identical (p, e) always yield the same field and
/// matrices built on it are reproducible. Prime fields (e = 1) use plain
/// modular arithmetic with reduction polynomial x. Fields with q <= 256
/// carry full operation tables; larger fields compute on demand.
///
/// Immutable after construction; all operations are const and
/// safe for concurrent use.
class Field {
public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  static Field make(std::uint32_t p, std::uint32_t e);

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }

  /// reduction()[i] is the coefficient of x^i; degree e, monic.
  const std::vector<std::uint32_t>& reduction() const { return reduction_; }

  FieldElem zero() const { return {0}; }
  FieldElem one() const { return {1}; }
  FieldElem elem(std::uint32_t code) const;
  FieldElem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElem a) const;

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem inv(FieldElem a) const;  // DivisionByZero on a = 0

  /// Horner evaluation of sum_i coeffs[i] * x^i.
  FieldElem poly_eval(std::span<const FieldElem> coeffs, FieldElem x) const;

private:
  Field() = default;

  FieldElem mul_direct(FieldElem a, FieldElem b) const;
  FieldElem pow(FieldElem a, std::uint64_t n) const;
  void build_tables();
  void check(FieldElem a) const;

  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> reduction_;

  // q x q operation tables, present when q <= kTableLimit
  static constexpr std::uint32_t kTableLimit = 256;
  std::vector<std::uint16_t> add_tab_;
  std::vector<std::uint16_t> mul_tab_;
  std::vector<std::uint16_t> inv_tab_;
};

}  // namespace mtss
