#pragma once

// Exact integer/rational scalars, vectors and matrices.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "arrcount/error.hpp"

namespace arrcount {

using Integer = mpz_class;

/// Reduced fraction p/q with q > 0. Every constructor canonicalizes.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "p", "-p" or "p/q".
  static Rational parse(const std::string& text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Integer floor() const;
  Integer ceil() const;
  /// Representative of this value modulo 1 in [0, 1).
  Rational frac() const;

  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

/// Integer vector; used for covectors, normals and kernel basis vectors.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::size_t dim) : entries_(dim, 0) {}
  explicit IntVector(std::vector<Integer> entries) : entries_(std::move(entries)) {}
  IntVector(std::initializer_list<long> values);

  std::size_t dim() const { return entries_.size(); }
  Integer& operator[](std::size_t i) { return entries_[i]; }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Integer>& entries() const { return entries_; }

  bool is_zero() const;
  IntVector operator-() const;
  IntVector scaled(const Integer& k) const;

  friend bool operator==(const IntVector& a, const IntVector& b) { return a.entries_ == b.entries_; }
  friend bool operator<(const IntVector& a, const IntVector& b) { return a.entries_ < b.entries_; }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const IntVector& v) { return os << v.str(); }

 private:
  std::vector<Integer> entries_;
};

Integer dot(const IntVector& a, const IntVector& b);
IntVector cross(const IntVector& a, const IntVector& b);  // dim 3 only
IntVector unit_vector(std::size_t dim, std::size_t axis);

/// Divides by the gcd of the entries and makes the first nonzero entry positive.
IntVector primitive_normalize(const IntVector& v);
/// Divides by the gcd of the entries; keeps the direction (no sign flip).
IntVector primitive_scale(const IntVector& v);

/// Dense matrix over the rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RatMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact rank via fraction-free (Bareiss) elimination.
std::size_t rank(const RatMatrix& m);
std::size_t rank(std::span<const IntVector> rows, std::size_t cols);

/// Basis of the right null space as primitive integer vectors, one per free
/// column of the reduced echelon form, in increasing free-column order.
std::vector<IntVector> kernel_basis(const RatMatrix& m);
std::vector<IntVector> kernel_basis(std::span<const IntVector> rows, std::size_t cols);

Integer binomial(long n, long k);

}  // namespace arrcount
