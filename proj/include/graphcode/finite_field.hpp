// Copyright 2026 The graphcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// @file finite_field.hpp
/// GF(q) arithmetic for q = p^m <= 2^16 and the small dense linear algebra
/// used by every encoder and decoder in the library.
///
/// Elements are carried as integer codes in [q]. Prime fields use residue
/// representatives. Extension fields use polynomial-basis packing: the
/// coefficient of x^k is the k-th base-p digit of the code (for p = 2 this is
/// bit k). Multiplication in extension fields goes through exp/log tables
/// built from a primitive reduction polynomial; by default the least
/// primitive monic polynomial of degree m by packed value.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphcode/error.hpp"

namespace graphcode {

/// A field element code in [q] under its owning field's enumeration.
struct FieldElement {
  std::uint16_t value = 0;

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(q) with q = p^m, 2 <= q <= 65536. Immutable after construction.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 65536;

  /// Builds GF(q) with the default reduction polynomial.
  static FieldPtr make(std::uint32_t q);
  /// Builds GF(q) with an explicit monic reduction polynomial given in packed
  /// form (base-p digits, leading coefficient included). It must be primitive.
  static FieldPtr make(std::uint32_t q, std::uint32_t reduction_polynomial);
  /// Parses "gf(q)" or "gf(q):<poly>" where <poly> is 0b-binary or decimal.
  static FieldPtr parse(std::string_view text);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return m_; }
  std::uint32_t order() const noexcept { return q_; }
  /// Packed reduction polynomial; 0 for prime fields.
  std::uint32_t reduction_polynomial() const noexcept { return poly_; }

  /// "gf(q)" for prime fields, "gf(q):0b..." for binary extensions, and
  /// "gf(q):<decimal packed>" for odd-characteristic extensions.
  std::string to_string() const;

  FieldElement zero() const noexcept { return FieldElement{0}; }
  FieldElement one() const noexcept { return FieldElement{1}; }
  /// Canonical enumeration enum(i); throws kOutOfRange if i >= q.
  FieldElement element(std::uint64_t code) const;
  /// Image of an integer under Z -> GF(p) -> GF(q).
  FieldElement from_integer(std::int64_t value) const;
  bool contains(FieldElement a) const noexcept { return a.value < q_; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  /// Throws kInversionOfZero on zero.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  /// Generator of the multiplicative group.
  FieldElement primitive_element() const noexcept { return FieldElement{exp_[1]}; }
  /// Multiplicative order of a nonzero element, computed by repeated
  /// multiplication. Intended for tests and small fields.
  std::uint32_t multiplicative_order(FieldElement a) const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.poly_ == b.poly_;
  }

 private:
  Field(std::uint32_t p, std::uint32_t m, std::uint32_t poly);

  void check(FieldElement a) const;
  std::uint32_t add_raw(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t neg_raw(std::uint32_t a) const noexcept;

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::uint32_t poly_;
  std::vector<std::uint16_t> exp_;  // length 2(q-1)
  std::vector<std::uint32_t> log_;  // length q, log_[0] unused
};

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept;

/// Least monic primitive polynomial of degree m over GF(p), packed.
std::uint32_t default_reduction_polynomial(std::uint32_t p, std::uint32_t m);

bool is_prime(std::uint64_t v) noexcept;
/// Returns (p, m) if v = p^m with p prime, m >= 1; (0, 0) otherwise.
std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint64_t v) noexcept;
bool is_prime_power(std::uint64_t v) noexcept;
/// Smallest prime power >= v (v <= 65536).
std::uint32_t smallest_prime_power_at_least(std::uint64_t v);

/// Dense row-major matrix over a field.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols);
  FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols,
              std::vector<FieldElement> entries);
  static FieldMatrix identity(FieldPtr field, std::size_t size);
  /// Builds from nested integer codes; all rows must have equal length.
  static FieldMatrix from_codes(FieldPtr field,
                                const std::vector<std::vector<std::uint32_t>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldPtr& field() const noexcept { return field_; }

  FieldElement operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  FieldElement& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  FieldElement at(std::size_t r, std::size_t c) const;

  std::span<const FieldElement> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<FieldElement> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  const std::vector<FieldElement>& entries() const noexcept { return entries_; }

  FieldMatrix select_columns(std::span<const std::size_t> columns) const;
  FieldMatrix select_rows(std::span<const std::size_t> rows) const;
  FieldMatrix transpose() const;
  /// Stacks `other` under this matrix.
  FieldMatrix stacked(const FieldMatrix& other) const;

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b);

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> entries_;
};

/// Rank by Gaussian elimination with first-nonzero pivoting. GF(2) inputs
/// take a packed 64-bit-word path.
std::size_t rank(const FieldMatrix& m);

/// Generic (unpacked) elimination path, exposed so the packed GF(2) path can
/// be cross-checked.
std::size_t rank_generic(const FieldMatrix& m);

/// Unique solution of A x = b. Throws kInconsistentSystem if no solution
/// exists, otherwise kUnderdeterminedSystem if rank(A) < cols.
std::vector<FieldElement> solve(const FieldMatrix& a, std::span<const FieldElement> b);

std::vector<FieldElement> multiply(const FieldMatrix& a, std::span<const FieldElement> x);
FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b);

/// Basis of { x : A x = 0 } as the rows of the returned matrix.
FieldMatrix null_space(const FieldMatrix& a);

/// r x |points| matrix with entry (t, l) = points[l]^t. Throws
/// kDuplicatePoint on repeated or zero points.
FieldMatrix vandermonde_parity(const FieldPtr& field, std::span<const FieldElement> points,
                               std::size_t r);

/// Rows of 64-bit words for GF(2) bulk exclusive-or.
class PackedBitRows {
 public:
  PackedBitRows(std::size_t rows, std::size_t cols);
  explicit PackedBitRows(const FieldMatrix& m);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool get(std::size_t r, std::size_t c) const noexcept {
    return (words_[r * stride_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v) noexcept;
  /// row[dst] ^= row[src]
  void xor_row(std::size_t dst, std::size_t src) noexcept;
  void swap_rows(std::size_t a, std::size_t b) noexcept;
  std::size_t rank() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t stride_;
  std::vector<std::uint64_t> words_;
};

}  // namespace graphcode
