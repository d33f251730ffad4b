#include "arrcount/exactlin.hpp"

#include <algorithm>
#include <sstream>

namespace arrcount {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DuplicateHyperplane: return "DuplicateHyperplane";
    case ErrorCode::CommonPoint: return "CommonPoint";
    case ErrorCode::FlatTooSmall: return "FlatTooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::OutOfTheoremRange: return "OutOfTheoremRange";
    case ErrorCode::OffsetCollision: return "OffsetCollision";
    case ErrorCode::TripleIntersection: return "TripleIntersection";
    case ErrorCode::DuplicateSubtorus: return "DuplicateSubtorus";
    case ErrorCode::Unstable: return "Unstable";
    case ErrorCode::UnsupportedManifold: return "UnsupportedManifold";
    case ErrorCode::PlacementUnavailable: return "PlacementUnavailable";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

Integer parse_integer(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) throw Error(ErrorCode::ParseError, "empty integer '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw Error(ErrorCode::ParseError, "bad integer '" + text + "'");
  }
  Integer v;
  v.set_str(text[0] == '+' ? text.substr(1) : text, 10);
  return v;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.q_ == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  q_ /= o.q_;
  return *this;
}

Integer Rational::floor() const {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Integer Rational::ceil() const {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

IntVector::IntVector(std::initializer_list<long> values) {
  entries_.reserve(values.size());
  for (long v : values) entries_.emplace_back(v);
}

bool IntVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

IntVector IntVector::operator-() const {
  IntVector r(*this);
  for (auto& x : r.entries_) x = -x;
  return r;
}

IntVector IntVector::scaled(const Integer& k) const {
  IntVector r(*this);
  for (auto& x : r.entries_) x *= k;
  return r;
}

std::string IntVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? ", " : "") << entries_[i].get_str();
  os << ')';
  return os.str();
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

IntVector cross(const IntVector& a, const IntVector& b) {
  IntVector r(3);
  r[0] = a[1] * b[2] - a[2] * b[1];
  r[1] = a[2] * b[0] - a[0] * b[2];
  r[2] = a[0] * b[1] - a[1] * b[0];
  return r;
}

IntVector unit_vector(std::size_t dim, std::size_t axis) {
  IntVector e(dim);
  e[axis] = 1;
  return e;
}

IntVector primitive_scale(const IntVector& v) {
  Integer g = 0;
  for (std::size_t i = 0; i < v.dim(); ++i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
  if (g == 0) throw Error(ErrorCode::ZeroVector, "cannot normalize the zero vector");
  IntVector r(v);
  if (g != 1) {
    for (std::size_t i = 0; i < r.dim(); ++i) mpz_divexact(r[i].get_mpz_t(), r[i].get_mpz_t(), g.get_mpz_t());
  }
  return r;
}

IntVector primitive_normalize(const IntVector& v) {
  IntVector r = primitive_scale(v);
  for (std::size_t i = 0; i < r.dim(); ++i) {
    if (r[i] != 0) {
      if (r[i] < 0) r = -r;
      break;
    }
  }
  return r;
}

RatMatrix RatMatrix::from_rows(std::span<const IntVector> rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].dim() != cols) throw Error(ErrorCode::InvalidArgument, "row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Rational(rows[r][c]);
  }
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

namespace {

// Rows scaled by the lcm of their denominators.
std::vector<std::vector<Integer>> cleared_rows(const RatMatrix& m) {
  std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).den().get_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.at(r, c).num() * (l / m.at(r, c).den());
  }
  return out;
}

std::size_t bareiss_rank(std::vector<std::vector<Integer>> a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = a[r][k] * a[rank][c] - a[r][c] * a[rank][k];
        mpz_divexact(a[r][k].get_mpz_t(), a[r][k].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank(const RatMatrix& m) { return bareiss_rank(cleared_rows(m), m.cols()); }

std::size_t rank(std::span<const IntVector> rows, std::size_t cols) {
  std::vector<std::vector<Integer>> a;
  a.reserve(rows.size());
  for (const auto& r : rows) a.push_back(r.entries());
  return bareiss_rank(std::move(a), cols);
}

std::vector<IntVector> kernel_basis(const RatMatrix& m) {
  // Reduced row echelon form, first nonzero pivot in row-major scan.
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.at(r, c);

  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t piv = row;
    while (piv < m.rows() && a[piv][c].sign() == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[row]);
    const Rational inv = Rational(1) / a[row][c];
    for (std::size_t k = c; k < m.cols(); ++k) a[row][k] *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || a[r][c].sign() == 0) continue;
      const Rational factor = a[r][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= factor * a[row][k];
    }
    pivot_cols.push_back(c);
    ++row;
  }

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<IntVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][free];
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    IntVector iv(m.cols());
    for (std::size_t k = 0; k < m.cols(); ++k) iv[k] = v[k].num() * (l / v[k].den());
    basis.push_back(primitive_normalize(iv));
  }
  return basis;
}

std::vector<IntVector> kernel_basis(std::span<const IntVector> rows, std::size_t cols) {
  return kernel_basis(RatMatrix::from_rows(rows, cols));
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace arrcount
