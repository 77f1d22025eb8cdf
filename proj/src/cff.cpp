//
// Project mtss - Copyright 2026 the mtss authors.
// SPDX-License-Identifier: Apache-2.0
//
#include "mtss/cff.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace mtss {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// C(n, r) clamped to avoid overflow.
std::uint64_t binomial_clamped(std::uint64_t n, std::uint32_t r, std::uint64_t clamp) {
  if (r > n) return 0;
  unsigned __int128 acc = 1;
  for (std::uint32_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > clamp) return clamp + 1;
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace

CffMatrix CffMatrix::identity(std::uint64_t n) {
  if (n < 1) raise(Errc::unsupported_parameter, "identity matrix needs n >= 1");
  if (n > kMaxDenseColumns) raise(Errc::too_many_blocks, "identity matrix too large");
  CffMatrix m;
  m.t_ = static_cast<std::uint32_t>(n);
  m.n_ = n;
  m.d_ = static_cast<std::uint32_t>(n - 1);
  m.prov_.kind = CffProvenance::Kind::identity;
  return m;
}

CffMatrix CffMatrix::polynomial(const Field& field, std::uint32_t k) {
  if (k < 1) raise(Errc::unsupported_parameter, "polynomial construction needs k >= 1");
  if (k >= 64) raise(Errc::budget_exceeded, "degree bound k too large");
  const std::uint64_t q = field.q();
  if (q * q >= std::uint64_t{1} << 32) raise(Errc::budget_exceeded, "row count q^2 too large");

  std::uint64_t n = 1;
  for (std::uint32_t i = 0; i < k + 1; ++i) {
    if (n > (std::uint64_t{1} << 62) / q) raise(Errc::budget_exceeded, "column count q^(k+1) too large");
    n *= q;
  }

  CffMatrix m;
  m.t_ = static_cast<std::uint32_t>(q * q);
  m.n_ = n;
  m.d_ = static_cast<std::uint32_t>((q - 1) / k);
  m.prov_ = {CffProvenance::Kind::polynomial, static_cast<std::uint32_t>(q), k};
  m.field_.push_back(field);

  if (n <= kMaxDenseColumns && m.t_ * n <= kMaxDenseBits) {
    const std::size_t words = static_cast<std::size_t>((n + 63) / 64);
    m.row_bits_.assign(m.t_, std::vector<std::uint64_t>(words, 0));
    std::vector<FieldElem> coeffs(k + 1);
    for (std::uint64_t col = 0; col < n; ++col) {
      std::uint64_t v = col;
      for (std::uint32_t i = 0; i <= k; ++i) {
        coeffs[i] = field.elem(static_cast<std::uint32_t>(v % q));
        v /= q;
      }
      for (std::uint32_t xi = 0; xi < q; ++xi) {
        const FieldElem y = field.poly_eval(coeffs, field.elem(xi));
        const std::uint32_t row = xi * static_cast<std::uint32_t>(q) + y.code;
        m.row_bits_[row][col / 64] |= std::uint64_t{1} << (col % 64);
      }
    }
  }
  return m;
}

CffMatrix CffMatrix::literal(std::uint32_t d, std::vector<std::vector<bool>> bits) {
  if (bits.empty() || bits[0].empty()) raise(Errc::unsupported_parameter, "empty matrix");
  const std::size_t t = bits.size();
  const std::size_t n = bits[0].size();
  for (const auto& row : bits)
    if (row.size() != n) raise(Errc::unsupported_parameter, "ragged matrix rows");

  CffMatrix m;
  m.t_ = static_cast<std::uint32_t>(t);
  m.n_ = n;
  m.d_ = d;
  m.prov_.kind = CffProvenance::Kind::literal;
  const std::size_t words = (n + 63) / 64;
  m.row_bits_.assign(t, std::vector<std::uint64_t>(words, 0));
  for (std::size_t r = 0; r < t; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (bits[r][c]) m.row_bits_[r][c / 64] |= std::uint64_t{1} << (c % 64);

  for (std::size_t c = 0; c < n; ++c) {
    bool nonzero = false;
    for (std::size_t r = 0; r < t && !nonzero; ++r) nonzero = bits[r][c];
    if (!nonzero) raise(Errc::unsupported_parameter, "column " + std::to_string(c + 1) + " is all zero");
  }
  return m;
}

std::vector<FieldElem> CffMatrix::column_poly(std::uint64_t col) const {
  const Field& f = field_.front();
  std::vector<FieldElem> coeffs(prov_.k + 1);
  std::uint64_t v = col;
  for (std::uint32_t i = 0; i <= prov_.k; ++i) {
    coeffs[i] = f.elem(static_cast<std::uint32_t>(v % f.q()));
    v /= f.q();
  }
  return coeffs;
}

bool CffMatrix::entry(std::uint32_t row, std::uint64_t col) const {
  if (row >= t_ || col >= n_) raise(Errc::unsupported_parameter, "matrix index out of range");
  switch (prov_.kind) {
    case CffProvenance::Kind::identity:
      return row == col;
    case CffProvenance::Kind::polynomial:
      if (!row_bits_.empty()) break;
      {
        const Field& f = field_.front();
        const FieldElem x = f.elem(row / f.q());
        const FieldElem y = f.elem(row % f.q());
        const auto coeffs = column_poly(col);
        return f.poly_eval(coeffs, x) == y;
      }
    case CffProvenance::Kind::literal:
      break;
  }
  return (row_bits_[row][col / 64] >> (col % 64)) & 1;
}

std::vector<std::uint32_t> CffMatrix::column_rows(std::uint64_t col) const {
  if (col >= n_) raise(Errc::unsupported_parameter, "column index out of range");
  std::vector<std::uint32_t> out;
  if (prov_.kind == CffProvenance::Kind::identity) {
    out.push_back(static_cast<std::uint32_t>(col));
    return out;
  }
  if (prov_.kind == CffProvenance::Kind::polynomial && row_bits_.empty()) {
    const Field& f = field_.front();
    const auto coeffs = column_poly(col);
    out.reserve(f.q());
    for (std::uint32_t xi = 0; xi < f.q(); ++xi) {
      const FieldElem y = f.poly_eval(coeffs, f.elem(xi));
      out.push_back(xi * f.q() + y.code);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  for (std::uint32_t r = 0; r < t_; ++r)
    if ((row_bits_[r][col / 64] >> (col % 64)) & 1) out.push_back(r);
  return out;
}

void CffMatrix::for_each_row_col(std::uint32_t row,
                                 const std::function<void(std::uint64_t)>& fn) const {
  if (row >= t_) raise(Errc::unsupported_parameter, "row index out of range");
  if (prov_.kind == CffProvenance::Kind::identity) {
    fn(row);
    return;
  }
  if (row_bits_.empty()) raise(Errc::budget_exceeded, "matrix too large for row enumeration");
  const auto& words = row_bits_[row];
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t bits = words[w];
    while (bits != 0) {
      const unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
      fn(std::uint64_t{w} * 64 + b);
      bits &= bits - 1;
    }
  }
}

std::vector<std::uint64_t> CffMatrix::row_cols(std::uint32_t row) const {
  std::vector<std::uint64_t> out;
  for_each_row_col(row, [&](std::uint64_t c) { out.push_back(c); });
  return out;
}

bool CffMatrix::columns_have_permutation(std::span<const std::uint64_t> cols) const {
  // Fast path for the polynomial construction: a column is the value table
  // x -> f(x), and a row of column c is isolated iff some x has
  // f_c(x) != f_c'(x) for every other column c'.
  if (prov_.kind == CffProvenance::Kind::polynomial) {
    const Field& f = field_.front();
    const std::uint32_t q = f.q();
    std::vector<std::vector<std::uint32_t>> ytab(cols.size());
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
      const auto coeffs = column_poly(cols[ci]);
      ytab[ci].resize(q);
      for (std::uint32_t xi = 0; xi < q; ++xi)
        ytab[ci][xi] = f.poly_eval(coeffs, f.elem(xi)).code;
    }
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
      bool isolated = false;
      for (std::uint32_t xi = 0; xi < q && !isolated; ++xi) {
        bool clean = true;
        for (std::size_t cj = 0; cj < cols.size() && clean; ++cj)
          if (cj != ci && ytab[cj][xi] == ytab[ci][xi]) clean = false;
        isolated = clean;
      }
      if (!isolated) return false;
    }
    return true;
  }

  for (std::size_t ci = 0; ci < cols.size(); ++ci) {
    bool isolated = false;
    for (std::uint32_t row : column_rows(cols[ci])) {
      bool clean = true;
      for (std::size_t cj = 0; cj < cols.size() && clean; ++cj)
        if (cj != ci && entry(row, cols[cj])) clean = false;
      if (clean) {
        isolated = true;
        break;
      }
    }
    if (!isolated) return false;
  }
  return true;
}

namespace {

bool validate_exhaustive(const CffMatrix& m, std::uint32_t r) {
  std::vector<std::uint64_t> cols(r);
  for (std::uint32_t i = 0; i < r; ++i) cols[i] = i;
  while (true) {
    if (!m.columns_have_permutation(cols)) return false;
    // advance the combination odometer
    std::int64_t i = r - 1;
    while (i >= 0 && cols[i] == m.cols() - r + i) --i;
    if (i < 0) return true;
    ++cols[i];
    for (std::size_t j = i + 1; j < r; ++j) cols[j] = cols[j - 1] + 1;
  }
}

bool validate_randomized(const CffMatrix& m, std::uint32_t r, std::uint64_t samples,
                         std::uint64_t seed) {
  std::uint64_t state = seed;
  std::vector<std::uint64_t> cols(r);
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (std::uint32_t i = 0; i < r; ++i) {
      bool fresh = false;
      while (!fresh) {
        cols[i] = splitmix64(state) % m.cols();
        fresh = true;
        for (std::uint32_t j = 0; j < i; ++j)
          if (cols[j] == cols[i]) fresh = false;
      }
    }
    if (!m.columns_have_permutation(cols)) return false;
  }
  return true;
}

}  // namespace

bool cff_validate_at(const CffMatrix& m, std::uint32_t d, const ValidateOptions& opts) {
  const std::uint32_t r = static_cast<std::uint32_t>(std::min<std::uint64_t>(d + 1, m.cols()));
  const std::uint64_t subsets = binomial_clamped(m.cols(), r, opts.exhaustive_budget);
  const bool within = subsets <= opts.exhaustive_budget;
  switch (opts.mode) {
    case ValidateOptions::Mode::exhaustive:
      if (!within) raise(Errc::budget_exceeded, "subset count exceeds the exhaustive budget");
      return validate_exhaustive(m, r);
    case ValidateOptions::Mode::randomized:
      return validate_randomized(m, r, opts.random_samples, opts.seed);
    case ValidateOptions::Mode::automatic:
      if (within) return validate_exhaustive(m, r);
      return validate_randomized(m, r, opts.random_samples, opts.seed);
  }
  raise(Errc::unsupported_parameter, "bad validate mode");
}

bool cff_validate(const CffMatrix& m, const ValidateOptions& opts) {
  return cff_validate_at(m, m.d(), opts);
}

bool cff_validate_cover_at(const CffMatrix& m, std::uint32_t d, std::uint64_t budget) {
  const std::uint64_t n = m.cols();
  const std::uint32_t r = static_cast<std::uint32_t>(std::min<std::uint64_t>(d, n - 1));
  const std::uint64_t work = n * binomial_clamped(n - 1, r, budget);
  if (work > budget) raise(Errc::budget_exceeded, "cover check exceeds budget");

  for (std::uint64_t j = 0; j < n; ++j) {
    const auto support = m.column_rows(j);
    // iterate r-subsets of {0..n-1} \ {j} via an index odometer over n-1 slots
    std::vector<std::uint64_t> pick(r);
    const auto slot_col = [&](std::uint64_t idx) { return idx < j ? idx : idx + 1; };
    for (std::uint32_t i = 0; i < r; ++i) pick[i] = i;
    if (r == 0) continue;
    while (true) {
      bool witnessed = false;
      for (std::uint32_t row : support) {
        bool all_zero = true;
        for (std::uint32_t i = 0; i < r && all_zero; ++i)
          if (m.entry(row, slot_col(pick[i]))) all_zero = false;
        if (all_zero) {
          witnessed = true;
          break;
        }
      }
      if (!witnessed) return false;  // column j covered by the union of the picked d columns
      std::int64_t i = r - 1;
      while (i >= 0 && pick[i] == n - 1 - r + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (std::size_t x = i + 1; x < r; ++x) pick[x] = pick[x - 1] + 1;
    }
  }
  return true;
}

std::vector<std::uint32_t> cff_decode(const CffMatrix& m, const OutcomeVector& outcomes) {
  if (outcomes.size() != m.rows())
    raise(Errc::unsupported_parameter, "outcome vector length does not match rows");
  if (!m.dense()) raise(Errc::budget_exceeded, "matrix too large to decode");

  const std::uint64_t n = m.cols();
  std::vector<std::uint64_t> verified((n + 63) / 64, 0);
  for (std::uint32_t row = 0; row < m.rows(); ++row) {
    if (outcomes[row] != TestOutcome::pass) continue;
    m.for_each_row_col(row, [&](std::uint64_t c) { verified[c / 64] |= std::uint64_t{1} << (c % 64); });
  }
  std::vector<std::uint32_t> modified;
  for (std::uint64_t c = 0; c < n; ++c)
    if (!((verified[c / 64] >> (c % 64)) & 1)) modified.push_back(static_cast<std::uint32_t>(c));
  return modified;
}

std::uint32_t cff_isolating_row(const CffMatrix& m, std::span<const std::uint32_t> suspects,
                                std::uint32_t k) {
  if (suspects.size() > m.d())
    raise(Errc::unsupported_parameter, "suspect set larger than the matrix strength");
  if (std::find(suspects.begin(), suspects.end(), k) == suspects.end())
    raise(Errc::unsupported_parameter, "k must be one of the suspects");

  for (std::uint32_t row : m.column_rows(k)) {
    bool clean = true;
    for (std::uint32_t j : suspects)
      if (j != k && m.entry(row, j)) {
        clean = false;
        break;
      }
    if (clean) return row;
  }
  raise(Errc::not_found, "no isolating row; matrix is not a valid d-CFF");
}

CffMatrix parse_matrix_literal(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::uint64_t t = 0, n = 0;
  std::uint32_t d = 0;
  if (!(in >> t >> n >> d)) raise(Errc::parse_error, "bad matrix header");
  if (t == 0 || n == 0 || t > (std::uint64_t{1} << 20) || n > CffMatrix::kMaxDenseColumns)
    raise(Errc::parse_error, "matrix dimensions out of range");
  std::vector<std::vector<bool>> bits(t, std::vector<bool>(n, false));
  std::string line;
  std::getline(in, line);  // rest of the header line
  for (std::uint64_t r = 0; r < t; ++r) {
    if (!std::getline(in, line)) raise(Errc::parse_error, "missing matrix row");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.size() != n) raise(Errc::parse_error, "row " + std::to_string(r + 1) + " has wrong length");
    for (std::uint64_t c = 0; c < n; ++c) {
      if (line[c] != '0' && line[c] != '1') raise(Errc::parse_error, "matrix entries must be 0 or 1");
      bits[r][c] = line[c] == '1';
    }
  }
  return CffMatrix::literal(d, std::move(bits));
}

std::string format_matrix_literal(const CffMatrix& m) {
  if (!m.dense()) raise(Errc::budget_exceeded, "matrix too large to export");
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + " " +
                    std::to_string(m.d()) + "\n";
  for (std::uint32_t r = 0; r < m.rows(); ++r) {
    std::string line(m.cols(), '0');
    m.for_each_row_col(r, [&](std::uint64_t c) { line[c] = '1'; });
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace mtss
