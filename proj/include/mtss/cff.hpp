//
// Project mtss - Copyright 2026 the mtss authors.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mtss/error.hpp"
#include "mtss/ff.hpp"

namespace mtss {

/// Result of one group test. Rows marked unavailable (a redacted signature
/// entry) contribute nothing to decoding, exactly like failing rows.
enum class TestOutcome : std::uint8_t { pass, fail, unavailable };
using OutcomeVector = std::vector<TestOutcome>;

struct CffProvenance {
  enum class Kind : std::uint8_t { identity, polynomial, literal };
  Kind kind = Kind::identity;
  std::uint32_t q = 0;  // polynomial construction parameters
  std::uint32_t k = 0;
};

/// t x n binary incidence matrix with claimed cover-free strength d: any
/// d+1 columns contain a permutation submatrix of dimension d+1, i.e. no
/// column is covered by the union of any d others.
///
/// Columns index message blocks, rows index the test groups. Identity
/// matrices and small polynomial matrices are held densely; polynomial
/// matrices too large to materialize answer per-column queries by
/// evaluating the defining polynomials on demand (row enumeration and
/// decoding are refused for those).
///
/// Immutable after construction; all member queries are const.
class CffMatrix {
public:
  // dense storage cutoffs for the polynomial construction
  static constexpr std::uint64_t kMaxDenseColumns = std::uint64_t{1} << 20;
  static constexpr std::uint64_t kMaxDenseBits = std::uint64_t{1} << 28;

  /// n x n identity; strength d = n - 1 (one test per block).
  static CffMatrix identity(std::uint64_t n);

  /// Rows indexed by pairs (x, y) of field elements (x major, y minor);
  /// columns by all q^(k+1) polynomials of degree <= k, coefficient
  /// vectors enumerated with the constant term fastest. Entry((x,y), f) =
  /// 1 iff f(x) = y. Strength d = floor((q-1)/k), t = q^2, n = q^(k+1).
  static CffMatrix polynomial(const Field& field, std::uint32_t k);

  /// Explicit bit matrix with a caller-claimed strength.
  static CffMatrix literal(std::uint32_t d, std::vector<std::vector<bool>> bits);

  std::uint32_t rows() const { return t_; }
  std::uint64_t cols() const { return n_; }
  std::uint32_t d() const { return d_; }
  const CffProvenance& provenance() const { return prov_; }

  /// Dense matrices support row enumeration (and thus decode/sign).
  bool dense() const { return prov_.kind != CffProvenance::Kind::polynomial || !row_bits_.empty(); }

  bool entry(std::uint32_t row, std::uint64_t col) const;
  /// Rows with a 1 in the given column, ascending.
  std::vector<std::uint32_t> column_rows(std::uint64_t col) const;
  /// Columns with a 1 in the given row, ascending; requires dense().
  std::vector<std::uint64_t> row_cols(std::uint32_t row) const;
  void for_each_row_col(std::uint32_t row, const std::function<void(std::uint64_t)>& fn) const;

  /// True iff the given distinct columns contain a permutation submatrix of
  /// their own dimension (every column has a row isolating it from the rest).
  bool columns_have_permutation(std::span<const std::uint64_t> cols) const;

private:
  CffMatrix() = default;

  std::vector<FieldElem> column_poly(std::uint64_t col) const;

  std::uint32_t t_ = 0;
  std::uint64_t n_ = 0;
  std::uint32_t d_ = 0;
  CffProvenance prov_;

  // dense storage: per-row bit words (absent for identity and lazy polynomial)
  std::vector<std::vector<std::uint64_t>> row_bits_;
  std::vector<Field> field_;  // polynomial construction only (0 or 1 entries)
};

struct ValidateOptions {
  enum class Mode { automatic, exhaustive, randomized };
  Mode mode = Mode::automatic;
  /// Max number of (d+1)-subsets checked exhaustively; automatic mode
  /// falls back to randomized sampling above this, exhaustive mode errors.
  std::uint64_t exhaustive_budget = 10'000'000;
  std::uint64_t random_samples = 1'000'000;
  std::uint64_t seed = 0x2545f4914f6cdd1dull;
};

/// Checks the permutation-submatrix property at the matrix's claimed d.
/// Randomized runs sample column subsets and can only certify the absence
/// of violations among the sampled subsets, not the property itself.
bool cff_validate(const CffMatrix& m, const ValidateOptions& opts = {});
bool cff_validate_at(const CffMatrix& m, std::uint32_t d, const ValidateOptions& opts = {});

/// Second route through the definition: no column is covered by the union
/// of any d others. Exhaustive only; agrees with cff_validate_at.
bool cff_validate_cover_at(const CffMatrix& m, std::uint32_t d, std::uint64_t budget = 10'000'000);

/// V = union of the supports of passing rows; returns {0..n-1} \ V sorted.
std::vector<std::uint32_t> cff_decode(const CffMatrix& m, const OutcomeVector& outcomes);

/// Smallest row containing column k and none of the other columns in
/// suspects. Exists whenever |suspects| <= d for a valid d-CFF; NotFound
/// signals a corrupted matrix.
std::uint32_t cff_isolating_row(const CffMatrix& m, std::span<const std::uint32_t> suspects,
                                std::uint32_t k);

/// Text form: first line "t n d", then t lines of n characters '0'/'1'.
CffMatrix parse_matrix_literal(std::string_view text);
std::string format_matrix_literal(const CffMatrix& m);

}  // namespace mtss
