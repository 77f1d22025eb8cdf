//
// Project mtss - Copyright 2026 the mtss authors.
// SPDX-License-Identifier: Apache-2.0
//
#include "mtss/ff.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace mtss {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

using Poly = std::vector<std::uint32_t>;  // coefficient i of x^i, mod p

// Strip leading zero coefficients.
void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  trim(out);
  return out;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // extended Euclid on integers
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t qq = r / new_r;
    std::swap(t -= qq * new_t, new_t);
    std::swap(r -= qq * new_r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

// Remainder of a modulo monic-normalizable divisor b.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size() && !a.empty()) {
    const std::uint32_t factor = std::uint32_t(std::uint64_t{a.back()} * lead_inv % p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::uint64_t sub = std::uint64_t{factor} * b[i] % p;
      a[shift + i] = std::uint32_t((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

// Decode a base-p counter value into coefficients c0..c_{len-1}.
Poly decode_counter(std::uint64_t value, std::uint32_t p, std::uint32_t len) {
  Poly out(len, 0);
  for (std::uint32_t i = 0; i < len; ++i) {
    out[i] = static_cast<std::uint32_t>(value % p);
    value /= p;
  }
  return out;
}

bool divisible(const Poly& f, const Poly& g, std::uint32_t p) {
  return poly_mod(f, g, p).empty();
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t gdeg = 1; gdeg <= deg / 2; ++gdeg) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < gdeg; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly g = decode_counter(low, p, gdeg + 1);
      g[gdeg] = 1;  // monic
      if (divisible(f, g, p)) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(std::uint32_t p, std::uint32_t e) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < e; ++i) count *= p;
  for (std::uint64_t low = 0; low < count; ++low) {
    Poly f = decode_counter(low, p, e + 1);
    f[e] = 1;
    if (is_irreducible(f, p)) return f;
  }
  raise(Errc::not_found, "no irreducible polynomial found");  // unreachable for valid p, e
}

}  // namespace

Field Field::make(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) raise(Errc::not_prime, "p = " + std::to_string(p) + " is not prime");
  if (e < 1) raise(Errc::unsupported_parameter, "extension degree must be >= 1");

  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) raise(Errc::field_too_large, "p^e exceeds 2^16");
  }

  Field f;
  f.p_ = p;
  f.e_ = e;
  f.q_ = static_cast<std::uint32_t>(q);
  f.reduction_ = (e == 1) ? Poly{0, 1} : smallest_irreducible(p, e);
  if (f.q_ <= kTableLimit) f.build_tables();
  return f;
}

void Field::check(FieldElem a) const {
  if (a.code >= q_) raise(Errc::unsupported_parameter, "element code out of range");
}

FieldElem Field::elem(std::uint32_t code) const {
  FieldElem a{code};
  check(a);
  return a;
}

FieldElem Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > e_) raise(Errc::unsupported_parameter, "too many coefficients");
  std::uint32_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) raise(Errc::unsupported_parameter, "coefficient out of range");
    code = code * p_ + coeffs[i];
  }
  return {code};
}

std::vector<std::uint32_t> Field::coeffs(FieldElem a) const {
  check(a);
  std::vector<std::uint32_t> out(e_, 0);
  std::uint32_t v = a.code;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out[i] = v % p_;
    v /= p_;
  }
  return out;
}

FieldElem Field::add(FieldElem a, FieldElem b) const {
  check(a);
  check(b);
  if (!add_tab_.empty()) return {add_tab_[std::size_t{a.code} * q_ + b.code]};
  if (e_ == 1) return {(a.code + b.code) % p_};
  std::uint32_t code = 0;
  std::uint32_t va = a.code, vb = b.code, scale = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    code += (va % p_ + vb % p_) % p_ * scale;
    va /= p_;
    vb /= p_;
    scale *= p_;
  }
  return {code};
}

FieldElem Field::neg(FieldElem a) const {
  check(a);
  if (e_ == 1) return {a.code == 0 ? 0 : p_ - a.code};
  std::uint32_t code = 0;
  std::uint32_t va = a.code, scale = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    std::uint32_t c = va % p_;
    code += (c == 0 ? 0 : p_ - c) * scale;
    va /= p_;
    scale *= p_;
  }
  return {code};
}

FieldElem Field::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem Field::mul_direct(FieldElem a, FieldElem b) const {
  if (e_ == 1) return {std::uint32_t(std::uint64_t{a.code} * b.code % p_)};
  Poly pa = coeffs(a);
  Poly pb = coeffs(b);
  trim(pa);
  trim(pb);
  Poly prod = poly_mod(poly_mul(pa, pb, p_), reduction_, p_);
  prod.resize(e_, 0);
  return from_coeffs(prod);
}

FieldElem Field::mul(FieldElem a, FieldElem b) const {
  check(a);
  check(b);
  if (!mul_tab_.empty()) return {mul_tab_[std::size_t{a.code} * q_ + b.code]};
  return mul_direct(a, b);
}

FieldElem Field::pow(FieldElem a, std::uint64_t n) const {
  FieldElem acc = one();
  FieldElem base = a;
  while (n > 0) {
    if (n & 1) acc = mul_direct(acc, base);
    base = mul_direct(base, base);
    n >>= 1;
  }
  return acc;
}

FieldElem Field::inv(FieldElem a) const {
  check(a);
  if (a.code == 0) raise(Errc::division_by_zero, "inverse of zero");
  if (!inv_tab_.empty()) return {inv_tab_[a.code]};
  if (e_ == 1) return {inv_mod(a.code, p_)};
  return pow(a, q_ - 2);
}

FieldElem Field::poly_eval(std::span<const FieldElem> coeffs, FieldElem x) const {
  check(x);
  FieldElem acc = zero();
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = add(mul(acc, x), coeffs[i]);
  return acc;
}

void Field::build_tables() {
  // members stay empty while computing so add()/mul() take the direct paths
  std::vector<std::uint16_t> add_tab(std::size_t{q_} * q_);
  std::vector<std::uint16_t> mul_tab(std::size_t{q_} * q_);
  std::vector<std::uint16_t> inv_tab(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    for (std::uint32_t b = 0; b < q_; ++b) {
      add_tab[std::size_t{a} * q_ + b] = static_cast<std::uint16_t>(add({a}, {b}).code);
      mul_tab[std::size_t{a} * q_ + b] = static_cast<std::uint16_t>(mul_direct({a}, {b}).code);
    }
  }
  for (std::uint32_t a = 1; a < q_; ++a)
    inv_tab[a] = static_cast<std::uint16_t>((e_ == 1) ? inv_mod(a, p_) : pow({a}, q_ - 2).code);
  add_tab_ = std::move(add_tab);
  mul_tab_ = std::move(mul_tab);
  inv_tab_ = std::move(inv_tab);
}

}  // namespace mtss
