#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cherednik/rational.hpp"

namespace cherednik {

// Power series in q known modulo q^(trunc+1).
class QSeries {
 public:
  explicit QSeries(int trunc = 0);
  QSeries(int trunc, std::vector<Rational> coeffs);

  static QSeries one(int trunc);
  static QSeries monomial(int trunc, int exponent, const Rational& c = 1);
  // 1 / (1 - q^k)
  static QSeries geometric(int trunc, int k);
  // prod_{j >= from} 1 / (1 - q^j)
  static QSeries euler_inverse(int trunc, int from = 1);

  int trunc() const { return trunc_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](int i) const { return c_.at(i); }
  void set(int i, const Rational& v) { c_.at(i) = v; }

  // Index of the first nonzero coefficient; empty when all known ones vanish.
  std::optional<int> ord() const;
  bool is_zero() const { return !ord().has_value(); }
  bool has_nonnegative_integer_coeffs() const;

  QSeries truncated(int n) const;
  // Multiply by q^a, a >= 0.
  QSeries shifted(int a) const;
  QSeries scaled(const Rational& k) const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const QSeries& o);
  QSeries& operator/=(const QSeries& o);
  // Multiply by (1 - q^k) in place.
  QSeries& mul_one_minus(int k);
  // Divide by (1 - q^k) in place.
  QSeries& div_one_minus(int k);

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const QSeries& b) { return a *= b; }
  friend QSeries operator/(QSeries a, const QSeries& b) { return a /= b; }

  bool operator==(const QSeries& o) const { return trunc_ == o.trunc_ && c_ == o.c_; }

  std::string str() const;

 private:
  int trunc_;
  std::vector<Rational> c_;
};

}  // namespace cherednik
