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

#include "graphcode/finite_field.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <string>
#include <utility>

namespace graphcode {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kInversionOfZero: return "InversionOfZero";
    case ErrorCode::kUnderdeterminedSystem: return "UnderdeterminedSystem";
    case ErrorCode::kInconsistentSystem: return "InconsistentSystem";
    case ErrorCode::kDuplicatePoint: return "DuplicatePoint";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kErasedAccess: return "ErasedAccess";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kNotSystematic: return "NotSystematic";
    case ErrorCode::kNonPrimeN: return "NonPrimeN";
    case ErrorCode::kOutsideAlgorithmDomain: return "OutsideAlgorithmDomain";
    case ErrorCode::kFieldTooSmall: return "FieldTooSmall";
    case ErrorCode::kNoSuchCode: return "NoSuchCode";
    case ErrorCode::kSingularSystem: return "SingularSystem";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kCorruptedInput: return "CorruptedInput";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t v) noexcept {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint64_t v) noexcept {
  if (v < 2) return {0, 0};
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {static_cast<std::uint32_t>(v), 1};
  std::uint32_t m = 0;
  while (v % p == 0) {
    v /= p;
    ++m;
  }
  if (v != 1) return {0, 0};
  return {static_cast<std::uint32_t>(p), m};
}

bool is_prime_power(std::uint64_t v) noexcept { return prime_power_decompose(v).first != 0; }

std::uint32_t smallest_prime_power_at_least(std::uint64_t v) {
  for (std::uint64_t q = std::max<std::uint64_t>(v, 2); q <= Field::kMaxOrder; ++q) {
    if (is_prime_power(q)) return static_cast<std::uint32_t>(q);
  }
  throw GraphCodeError(ErrorCode::kFieldTooSmall,
                       "no supported prime power >= " + std::to_string(v));
}

namespace {

// Packed polynomials: base-p digits, least significant first.
std::vector<std::uint32_t> unpack(std::uint64_t packed, std::uint32_t p, std::uint32_t len) {
  std::vector<std::uint32_t> d(len, 0);
  for (std::uint32_t k = 0; k < len; ++k) {
    d[k] = static_cast<std::uint32_t>(packed % p);
    packed /= p;
  }
  return d;
}

std::uint64_t pack(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint64_t v = 0;
  for (std::size_t k = d.size(); k-- > 0;) v = v * p + d[k];
  return v;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Powers of x modulo a monic polynomial of degree m. Returns the exp table of
// length q-1 if x has order q-1 (the polynomial is primitive), else empty.
std::vector<std::uint16_t> powers_of_x(std::uint32_t p, std::uint32_t m, std::uint64_t poly) {
  const std::uint64_t q = ipow(p, m);
  const std::vector<std::uint32_t> low = unpack(poly, p, m);  // drops x^m
  std::vector<std::uint16_t> table;
  table.reserve(q - 1);
  std::vector<std::uint32_t> cur(m, 0);
  cur[0] = 1;
  for (std::uint64_t k = 0; k < q - 1; ++k) {
    const std::uint64_t code = pack(cur, p);
    if (k > 0 && code == 1) return {};
    table.push_back(static_cast<std::uint16_t>(code));
    const std::uint32_t carry = cur[m - 1];
    for (std::uint32_t d = m - 1; d > 0; --d) cur[d] = cur[d - 1];
    cur[0] = 0;
    if (carry != 0) {
      for (std::uint32_t d = 0; d < m; ++d) {
        cur[d] = static_cast<std::uint32_t>((cur[d] + (p - low[d]) * carry) % p);
      }
    }
  }
  if (pack(cur, p) != 1) return {};
  return table;
}

std::uint32_t primitive_root_mod(std::uint32_t p) {
  if (p == 2) return 1;
  std::vector<std::uint32_t> factors;
  std::uint32_t rest = p - 1;
  for (std::uint32_t d = 2; d * d <= rest; ++d) {
    if (rest % d == 0) {
      factors.push_back(d);
      while (rest % d == 0) rest /= d;
    }
  }
  if (rest > 1) factors.push_back(rest);
  auto powmod = [p](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (std::uint32_t f : factors) {
      if (powmod(g, (p - 1) / f) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 0;  // unreachable for prime p
}

}  // namespace

std::uint32_t default_reduction_polynomial(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p) || m == 0) {
    throw GraphCodeError(ErrorCode::kInvalidArgument, "characteristic must be prime");
  }
  if (m == 1) return 0;
  const std::uint64_t lead = ipow(p, m);
  if (lead > Field::kMaxOrder) {
    throw GraphCodeError(ErrorCode::kTooLarge, "field order exceeds 65536");
  }
  for (std::uint64_t low = 1; low < lead; ++low) {
    if (low % p == 0) continue;  // x divides it
    if (!powers_of_x(p, m, lead + low).empty()) return static_cast<std::uint32_t>(lead + low);
  }
  throw GraphCodeError(ErrorCode::kInvalidArgument, "no primitive polynomial found");
}

Field::Field(std::uint32_t p, std::uint32_t m, std::uint32_t poly)
    : p_(p), m_(m), q_(static_cast<std::uint32_t>(ipow(p, m))), poly_(poly) {
  std::vector<std::uint16_t> cycle;
  if (m == 1) {
    const std::uint32_t g = primitive_root_mod(p);
    cycle.reserve(q_ - 1);
    std::uint64_t v = 1;
    for (std::uint32_t k = 0; k + 1 < q_; ++k) {
      cycle.push_back(static_cast<std::uint16_t>(v));
      v = v * g % p;
    }
  } else {
    cycle = powers_of_x(p, m, poly);
    if (cycle.empty()) {
      throw GraphCodeError(ErrorCode::kInvalidArgument,
                           "reduction polynomial " + std::to_string(poly) +
                               " is not primitive of degree " + std::to_string(m));
    }
  }
  exp_.resize(2 * (q_ - 1));
  log_.assign(q_, 0);
  for (std::uint32_t k = 0; k + 1 < q_; ++k) {
    exp_[k] = cycle[k];
    exp_[k + q_ - 1] = cycle[k];
    log_[cycle[k]] = k;
  }
}

FieldPtr Field::make(std::uint32_t q) {
  const auto [p, m] = prime_power_decompose(q);
  if (p == 0 || q > kMaxOrder) {
    throw GraphCodeError(ErrorCode::kInvalidArgument,
                         "field order must be a prime power <= 65536, got " + std::to_string(q));
  }
  return FieldPtr(new Field(p, m, default_reduction_polynomial(p, m)));
}

FieldPtr Field::make(std::uint32_t q, std::uint32_t reduction_polynomial) {
  const auto [p, m] = prime_power_decompose(q);
  if (p == 0 || q > kMaxOrder) {
    throw GraphCodeError(ErrorCode::kInvalidArgument,
                         "field order must be a prime power <= 65536, got " + std::to_string(q));
  }
  if (m == 1) {
    if (reduction_polynomial != 0) {
      throw GraphCodeError(ErrorCode::kInvalidArgument, "prime fields take no polynomial");
    }
    return FieldPtr(new Field(p, 1, 0));
  }
  const std::uint64_t lead = ipow(p, m);
  if (reduction_polynomial < lead || reduction_polynomial >= 2 * lead) {
    throw GraphCodeError(ErrorCode::kInvalidArgument,
                         "reduction polynomial must be monic of degree " + std::to_string(m));
  }
  return FieldPtr(new Field(p, m, reduction_polynomial));
}

FieldPtr Field::parse(std::string_view text) {
  auto fail = [&]() -> GraphCodeError {
    return GraphCodeError(ErrorCode::kParseError, "bad field string '" + std::string(text) + "'");
  };
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  if (s.size() < 5 || s.substr(0, 3) != "gf(") throw fail();
  const std::size_t close = s.find(')');
  if (close == std::string_view::npos) throw fail();
  std::uint64_t q = 0;
  const std::string_view qs = s.substr(3, close - 3);
  auto [qp, qec] = std::from_chars(qs.data(), qs.data() + qs.size(), q);
  if (qec != std::errc() || qp != qs.data() + qs.size()) throw fail();
  if (q > kMaxOrder) throw fail();
  std::string_view rest = s.substr(close + 1);
  if (rest.empty()) return make(static_cast<std::uint32_t>(q));
  if (rest.front() != ':') throw fail();
  rest.remove_prefix(1);
  std::uint64_t poly = 0;
  int base = 10;
  if (rest.size() > 2 && rest[0] == '0' && (rest[1] == 'b' || rest[1] == 'B')) {
    base = 2;
    rest.remove_prefix(2);
  }
  auto [pp, pec] = std::from_chars(rest.data(), rest.data() + rest.size(), poly, base);
  if (pec != std::errc() || pp != rest.data() + rest.size() || poly > 0xffffffffULL) throw fail();
  return make(static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(poly));
}

std::string Field::to_string() const {
  std::string s = "gf(" + std::to_string(q_) + ")";
  if (m_ == 1) return s;
  if (p_ == 2) {
    std::string bits;
    for (std::uint32_t v = poly_; v; v >>= 1) bits.insert(bits.begin(), (v & 1) ? '1' : '0');
    return s + ":0b" + bits;
  }
  return s + ":" + std::to_string(poly_);
}

void Field::check(FieldElement a) const {
  if (a.value >= q_) {
    throw GraphCodeError(ErrorCode::kFieldMismatch, "element code " + std::to_string(a.value) +
                                                        " does not belong to " + to_string());
  }
}

FieldElement Field::element(std::uint64_t code) const {
  if (code >= q_) {
    throw GraphCodeError(ErrorCode::kOutOfRange,
                         "element code " + std::to_string(code) + " outside " + to_string());
  }
  return FieldElement{static_cast<std::uint16_t>(code)};
}

FieldElement Field::from_integer(std::int64_t value) const {
  const std::int64_t p = p_;
  return FieldElement{static_cast<std::uint16_t>(((value % p) + p) % p)};
}

std::uint32_t Field::add_raw(std::uint32_t a, std::uint32_t b) const noexcept {
  if (p_ == 2) return a ^ b;
  if (m_ == 1) {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t r = 0;
  std::uint32_t scale = 1;
  for (std::uint32_t k = 0; k < m_; ++k) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

std::uint32_t Field::neg_raw(std::uint32_t a) const noexcept {
  if (p_ == 2) return a;
  if (m_ == 1) return a == 0 ? 0 : p_ - a;
  std::uint32_t r = 0;
  std::uint32_t scale = 1;
  for (std::uint32_t k = 0; k < m_; ++k) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return FieldElement{static_cast<std::uint16_t>(add_raw(a.value, b.value))};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return FieldElement{static_cast<std::uint16_t>(add_raw(a.value, neg_raw(b.value)))};
}

FieldElement Field::neg(FieldElement a) const {
  check(a);
  return FieldElement{static_cast<std::uint16_t>(neg_raw(a.value))};
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  if (a.value == 0 || b.value == 0) return zero();
  if (m_ == 1) {
    return FieldElement{static_cast<std::uint16_t>(
        static_cast<std::uint64_t>(a.value) * b.value % p_)};
  }
  return FieldElement{exp_[log_[a.value] + log_[b.value]]};
}

FieldElement Field::inv(FieldElement a) const {
  check(a);
  if (a.value == 0) throw GraphCodeError(ErrorCode::kInversionOfZero, "inverse of zero");
  const std::uint32_t l = log_[a.value];
  return FieldElement{exp_[l == 0 ? 0 : q_ - 1 - l]};
}

FieldElement Field::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  check(a);
  if (e == 0) return one();
  if (a.value == 0) return zero();
  const std::uint64_t l = (static_cast<std::uint64_t>(log_[a.value]) * (e % (q_ - 1))) % (q_ - 1);
  return FieldElement{exp_[l]};
}

std::uint32_t Field::multiplicative_order(FieldElement a) const {
  check(a);
  if (a.value == 0) throw GraphCodeError(ErrorCode::kInvalidArgument, "zero has no order");
  std::uint32_t k = 1;
  for (FieldElement x = a; x != one(); x = mul(x, a)) ++k;
  return k;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ---------------------------------------------------------------------------
// FieldMatrix

FieldMatrix::FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols) {}

FieldMatrix::FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols,
                         std::vector<FieldElement> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw GraphCodeError(ErrorCode::kShapeMismatch, "entry count does not match rows x cols");
  }
  for (FieldElement e : entries_) {
    if (!field_->contains(e)) {
      throw GraphCodeError(ErrorCode::kFieldMismatch, "matrix entry outside the field");
    }
  }
}

FieldMatrix FieldMatrix::identity(FieldPtr field, std::size_t size) {
  FieldMatrix m(std::move(field), size, size);
  for (std::size_t k = 0; k < size; ++k) m(k, k) = m.field()->one();
  return m;
}

FieldMatrix FieldMatrix::from_codes(FieldPtr field,
                                    const std::vector<std::vector<std::uint32_t>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  std::vector<FieldElement> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw GraphCodeError(ErrorCode::kShapeMismatch, "ragged rows");
    for (std::uint32_t v : row) entries.push_back(field->element(v));
  }
  return FieldMatrix(std::move(field), r, c, std::move(entries));
}

FieldElement FieldMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw GraphCodeError(ErrorCode::kOutOfRange, "matrix index out of range");
  }
  return (*this)(r, c);
}

FieldMatrix FieldMatrix::select_columns(std::span<const std::size_t> columns) const {
  FieldMatrix out(field_, rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < columns.size(); ++k) {
      if (columns[k] >= cols_) throw GraphCodeError(ErrorCode::kOutOfRange, "column index");
      out(r, k) = (*this)(r, columns[k]);
    }
  }
  return out;
}

FieldMatrix FieldMatrix::select_rows(std::span<const std::size_t> rows) const {
  FieldMatrix out(field_, rows.size(), cols_);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k] >= rows_) throw GraphCodeError(ErrorCode::kOutOfRange, "row index");
    std::copy_n(entries_.begin() + static_cast<std::ptrdiff_t>(rows[k] * cols_), cols_,
                out.entries_.begin() + static_cast<std::ptrdiff_t>(k * cols_));
  }
  return out;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

FieldMatrix FieldMatrix::stacked(const FieldMatrix& other) const {
  if (rows_ == 0) return other;
  if (other.cols_ != cols_) throw GraphCodeError(ErrorCode::kShapeMismatch, "stack widths differ");
  if (!same_field(field_, other.field_)) {
    throw GraphCodeError(ErrorCode::kFieldMismatch, "stack fields differ");
  }
  FieldMatrix out = *this;
  out.rows_ += other.rows_;
  out.entries_.insert(out.entries_.end(), other.entries_.begin(), other.entries_.end());
  return out;
}

bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && same_field(a.field_, b.field_) &&
         a.entries_ == b.entries_;
}

namespace {

// In-place reduced row echelon form. Only the first `pivot_cols` columns are
// eligible for pivots. Returns the pivot column of each nonzero row.
std::vector<std::size_t> reduce(FieldMatrix& m, std::size_t pivot_cols) {
  const Field& f = *m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).value == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      auto a = m.row(piv);
      auto b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const FieldElement scale = f.inv(m(r, c));
    for (std::size_t k = c; k < m.cols(); ++k) m(r, k) = f.mul(m(r, k), scale);
    for (std::size_t other = 0; other < m.rows(); ++other) {
      if (other == r || m(other, c).value == 0) continue;
      const FieldElement factor = m(other, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (m(r, k).value != 0) m(other, k) = f.sub(m(other, k), f.mul(factor, m(r, k)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank_generic(const FieldMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  FieldMatrix work = m;
  return reduce(work, work.cols()).size();
}

std::size_t rank(const FieldMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.field()->order() == 2) return PackedBitRows(m).rank();
  return rank_generic(m);
}

std::vector<FieldElement> solve(const FieldMatrix& a, std::span<const FieldElement> b) {
  if (b.size() != a.rows()) {
    throw GraphCodeError(ErrorCode::kShapeMismatch, "right-hand side length != rows");
  }
  const Field& f = *a.field();
  FieldMatrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    if (!f.contains(b[r])) throw GraphCodeError(ErrorCode::kFieldMismatch, "rhs outside field");
    aug(r, a.cols()) = b[r];
  }
  const std::vector<std::size_t> pivots = reduce(aug, a.cols());
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
    if (aug(r, a.cols()).value != 0) {
      throw GraphCodeError(ErrorCode::kInconsistentSystem, "system has no solution");
    }
  }
  if (pivots.size() < a.cols()) {
    throw GraphCodeError(ErrorCode::kUnderdeterminedSystem,
                         "rank " + std::to_string(pivots.size()) + " < " +
                             std::to_string(a.cols()) + " unknowns");
  }
  std::vector<FieldElement> x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

std::vector<FieldElement> multiply(const FieldMatrix& a, std::span<const FieldElement> x) {
  if (x.size() != a.cols()) throw GraphCodeError(ErrorCode::kShapeMismatch, "vector length");
  const Field& f = *a.field();
  std::vector<FieldElement> y(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    FieldElement acc = f.zero();
    const auto row = a.row(r);
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (row[c].value != 0 && x[c].value != 0) acc = f.add(acc, f.mul(row[c], x[c]));
    }
    y[r] = acc;
  }
  return y;
}

FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.rows()) throw GraphCodeError(ErrorCode::kShapeMismatch, "inner dimensions");
  if (!same_field(a.field(), b.field())) throw GraphCodeError(ErrorCode::kFieldMismatch, "fields");
  const Field& f = *a.field();
  FieldMatrix out(a.field(), a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const FieldElement s = a(r, k);
      if (s.value == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (b(k, c).value != 0) out(r, c) = f.add(out(r, c), f.mul(s, b(k, c)));
      }
    }
  }
  return out;
}

FieldMatrix null_space(const FieldMatrix& a) {
  const Field& f = *a.field();
  FieldMatrix work = a;
  const std::vector<std::size_t> pivots = reduce(work, work.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  FieldMatrix basis(a.field(), free_cols.size(), a.cols());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(k, free_cols[k]) = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      basis(k, pivots[r]) = f.neg(work(r, free_cols[k]));
    }
  }
  return basis;
}

FieldMatrix vandermonde_parity(const FieldPtr& field, std::span<const FieldElement> points,
                               std::size_t r) {
  if (r == 0) throw GraphCodeError(ErrorCode::kInvalidArgument, "r must be >= 1");
  std::vector<FieldElement> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.front().value == 0) {
    throw GraphCodeError(ErrorCode::kDuplicatePoint, "evaluation point is zero");
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw GraphCodeError(ErrorCode::kDuplicatePoint, "evaluation points repeat");
  }
  FieldMatrix m(field, r, points.size());
  for (std::size_t l = 0; l < points.size(); ++l) {
    FieldElement v = field->one();
    for (std::size_t t = 0; t < r; ++t) {
      m(t, l) = v;
      v = field->mul(v, points[l]);
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// PackedBitRows

PackedBitRows::PackedBitRows(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), words_(rows * stride_, 0) {}

PackedBitRows::PackedBitRows(const FieldMatrix& m) : PackedBitRows(m.rows(), m.cols()) {
  if (m.field()->order() != 2) {
    throw GraphCodeError(ErrorCode::kFieldMismatch, "packed rows require GF(2)");
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (m(r, c).value) words_[r * stride_ + c / 64] |= std::uint64_t{1} << (c % 64);
    }
  }
}

void PackedBitRows::set(std::size_t r, std::size_t c, bool v) noexcept {
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  if (v) {
    words_[r * stride_ + c / 64] |= bit;
  } else {
    words_[r * stride_ + c / 64] &= ~bit;
  }
}

void PackedBitRows::xor_row(std::size_t dst, std::size_t src) noexcept {
  std::uint64_t* d = words_.data() + dst * stride_;
  const std::uint64_t* s = words_.data() + src * stride_;
  for (std::size_t w = 0; w < stride_; ++w) d[w] ^= s[w];
}

void PackedBitRows::swap_rows(std::size_t a, std::size_t b) noexcept {
  std::swap_ranges(words_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                   words_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                   words_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

std::size_t PackedBitRows::rank() const {
  PackedBitRows work = *this;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && !work.get(piv, c)) ++piv;
    if (piv == rows_) continue;
    if (piv != r) work.swap_rows(piv, r);
    for (std::size_t other = r + 1; other < rows_; ++other) {
      if (work.get(other, c)) work.xor_row(other, r);
    }
    ++r;
  }
  return r;
}

}  // namespace graphcode
