#include "delzant/lattice.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

#include "delzant/error.hpp"

namespace delzant {

namespace {

BigInt abs_value(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// Floor division for arbitrary signs (mpz "/" truncates toward zero).
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct ExtendedGcd {
  BigInt g, x, y;  // x*a + y*b == g >= 0
};

ExtendedGcd extended_gcd(const BigInt& a, const BigInt& b) {
  BigInt old_r = a, r = b;
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

// Applies [[x, y], [-b/g, a/g]] to rows (i, j) of m. The matrix has det 1.
void combine_rows(IntMatrix& m, std::size_t i, std::size_t j, const BigInt& x,
                  const BigInt& y, const BigInt& bg, const BigInt& ag) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    BigInt ri = m(i, c);
    BigInt rj = m(j, c);
    m(i, c) = x * ri + y * rj;
    m(j, c) = -bg * ri + ag * rj;
  }
}

void add_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, const BigInt& factor) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(target, c) += factor * m(source, c);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

}  // namespace

IntVec make_int_vec(std::initializer_list<long> entries) {
  IntVec v;
  v.reserve(entries.size());
  for (long e : entries) v.emplace_back(e);
  return v;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols())
      throw Error(ErrorCode::DimensionMismatch, "ragged rows in integer matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& columns) {
  return from_rows(columns).transpose();
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVec> converted;
  for (const auto& r : rows) converted.push_back(make_int_vec(r));
  return from_rows(converted);
}

IntVec IntMatrix::row(std::size_t r) const {
  return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVec IntMatrix::column(std::size_t c) const {
  IntVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::DimensionMismatch, "matrix product dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

IntVec operator*(const IntMatrix& m, const IntVec& v) {
  if (m.cols() != v.size())
    throw Error(ErrorCode::DimensionMismatch, "matrix-vector dimension mismatch");
  IntVec out(m.rows(), BigInt(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

BigInt dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product length mismatch");
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

BigInt content(const IntVec& v) {
  BigInt g = 0;
  for (const auto& e : v) g = boost::multiprecision::gcd(g, abs_value(e));
  return g;
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const BigInt& e) { return e == 0; });
}

PrimitiveVec PrimitiveVec::checked(IntVec v) {
  if (v.empty() || is_zero(v)) throw Error(ErrorCode::ZeroVector, "ZeroVector: the zero vector is not primitive");
  if (content(v) != 1)
    throw Error(ErrorCode::NonPrimitiveNormal, "vector " + to_string(v) + " is not primitive");
  return PrimitiveVec(std::move(v));
}

PrimitiveVec PrimitiveVec::negated() const {
  IntVec v = entries_;
  for (auto& e : v) e = -e;
  return PrimitiveVec(std::move(v));
}

PrimitiveVec primitive_part(const IntVec& v) {
  if (v.empty() || is_zero(v)) throw Error(ErrorCode::ZeroVector, "ZeroVector: cannot normalise the zero vector");
  BigInt g = content(v);
  auto first = std::find_if(v.begin(), v.end(), [](const BigInt& e) { return e != 0; });
  if (*first < 0) g = -g;
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return PrimitiveVec(std::move(out));
}

BigInt determinant(const IntMatrix& input) {
  if (input.rows() != input.cols())
    throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  BigInt sign = 1;
  BigInt previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

HermiteForm hermite_form(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& h = out.hermite;
  IntMatrix& t = out.transform;
  std::size_t pivot = 0;
  for (std::size_t col = 0; col < h.cols() && pivot < h.rows(); ++col) {
    for (std::size_t i = pivot + 1; i < h.rows(); ++i) {
      if (h(i, col) == 0) continue;
      if (h(pivot, col) == 0) {
        h.swap_rows(pivot, i);
        t.swap_rows(pivot, i);
        continue;
      }
      const BigInt a = h(pivot, col);
      const BigInt b = h(i, col);
      const ExtendedGcd e = extended_gcd(a, b);
      const BigInt bg = b / e.g;
      const BigInt ag = a / e.g;
      combine_rows(h, pivot, i, e.x, e.y, bg, ag);
      combine_rows(t, pivot, i, e.x, e.y, bg, ag);
    }
    if (h(pivot, col) == 0) continue;
    if (h(pivot, col) < 0) {
      negate_row(h, pivot);
      negate_row(t, pivot);
    }
    for (std::size_t i = 0; i < pivot; ++i) {
      const BigInt q = floor_div(h(i, col), h(pivot, col));
      if (q == 0) continue;
      add_row_multiple(h, i, pivot, -q);
      add_row_multiple(t, i, pivot, -q);
    }
    ++pivot;
  }
  out.rank = pivot;
  return out;
}

std::size_t rank(const IntMatrix& m) { return hermite_form(m).rank; }

std::vector<BigInt> smith_invariants(const IntMatrix& input) {
  IntMatrix a = input;
  std::vector<BigInt> factors;
  const std::size_t limit = std::min(a.rows(), a.cols());
  std::size_t t = 0;
  while (t < limit) {
    // Bring the smallest nonzero entry of the trailing block to (t, t).
    std::size_t best_r = a.rows(), best_c = a.cols();
    for (std::size_t r = t; r < a.rows(); ++r)
      for (std::size_t c = t; c < a.cols(); ++c)
        if (a(r, c) != 0 && (best_r == a.rows() || abs_value(a(r, c)) < abs_value(a(best_r, best_c)))) {
          best_r = r;
          best_c = c;
        }
    if (best_r == a.rows()) break;
    a.swap_rows(t, best_r);
    a.swap_columns(t, best_c);

    bool clean = true;
    for (std::size_t r = t + 1; r < a.rows(); ++r) {
      const BigInt q = a(r, t) / a(t, t);
      if (q != 0) add_row_multiple(a, r, t, -q);
      if (a(r, t) != 0) clean = false;
    }
    for (std::size_t c = t + 1; c < a.cols(); ++c) {
      const BigInt q = a(t, c) / a(t, t);
      if (q != 0)
        for (std::size_t r = 0; r < a.rows(); ++r) a(r, c) -= q * a(r, t);
      if (a(t, c) != 0) clean = false;
    }
    if (!clean) continue;

    // The pivot must divide the whole trailing block.
    bool divides = true;
    for (std::size_t r = t + 1; r < a.rows() && divides; ++r)
      for (std::size_t c = t + 1; c < a.cols(); ++c)
        if (a(r, c) % a(t, t) != 0) {
          add_row_multiple(a, t, r, BigInt(1));
          divides = false;
          break;
        }
    if (!divides) continue;

    factors.push_back(abs_value(a(t, t)));
    ++t;
  }
  return factors;
}

HermiteSmith hermite_smith(const IntMatrix& m) { return {hermite_form(m), smith_invariants(m)}; }

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::NotUnimodular, "NotUnimodular: matrix is not square");
  const BigInt det = determinant(m);
  if (abs_value(det) != 1)
    throw Error(ErrorCode::NotUnimodular, "NotUnimodular: determinant " + det.str());
  // The Hermite form of a unimodular matrix is the identity, so the recorded
  // transform is the inverse.
  HermiteForm hf = hermite_form(m);
  return std::move(hf.transform);
}

std::vector<PrimitiveVec> integer_kernel_basis(const IntMatrix& m) {
  const std::size_t n = m.cols();
  // Row operations T on M^t with T M^t = H: the rows of T paired with zero
  // rows of H span the full kernel lattice because T is unimodular.
  HermiteForm hf = hermite_form(m.transpose());
  std::vector<IntVec> raw;
  for (std::size_t r = hf.rank; r < n; ++r) raw.push_back(hf.transform.row(r));
  if (raw.empty()) return {};
  HermiteForm canonical = hermite_form(IntMatrix::from_rows(raw));
  std::vector<PrimitiveVec> basis;
  basis.reserve(canonical.rank);
  for (std::size_t r = 0; r < canonical.rank; ++r) basis.push_back(PrimitiveVec::checked(canonical.hermite.row(r)));
  return basis;
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string to_string(const RationalVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "," : "") << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

long to_long(const BigInt& value) {
  if (value > std::numeric_limits<long>::max() || value < std::numeric_limits<long>::min())
    throw Error(ErrorCode::DimensionMismatch, "integer " + value.str() + " does not fit in a machine word");
  return value.convert_to<long>();
}

}  // namespace delzant
