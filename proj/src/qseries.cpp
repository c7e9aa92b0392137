#include "cherednik/qseries.hpp"

#include <algorithm>

namespace cherednik {

QSeries::QSeries(int trunc) : trunc_(trunc) {
  if (trunc < 0) throw DomainError("negative truncation");
  c_.assign(trunc + 1, Rational(0));
}

QSeries::QSeries(int trunc, std::vector<Rational> coeffs) : QSeries(trunc) {
  for (std::size_t i = 0; i < coeffs.size() && i <= static_cast<std::size_t>(trunc); ++i)
    c_[i] = coeffs[i];
}

QSeries QSeries::one(int trunc) { return monomial(trunc, 0); }

QSeries QSeries::monomial(int trunc, int exponent, const Rational& c) {
  QSeries s(trunc);
  if (exponent < 0) throw DomainError("negative exponent");
  if (exponent <= trunc) s.c_[exponent] = c;
  return s;
}

QSeries QSeries::geometric(int trunc, int k) {
  if (k <= 0) throw DomainError("geometric needs k >= 1");
  QSeries s(trunc);
  for (int i = 0; i <= trunc; i += k) s.c_[i] = 1;
  return s;
}

QSeries QSeries::euler_inverse(int trunc, int from) {
  QSeries s = one(trunc);
  for (int j = std::max(from, 1); j <= trunc; ++j) s.div_one_minus(j);
  return s;
}

std::optional<int> QSeries::ord() const {
  for (int i = 0; i <= trunc_; ++i)
    if (c_[i] != 0) return i;
  return std::nullopt;
}

bool QSeries::has_nonnegative_integer_coeffs() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x >= 0 && is_integer(x); });
}

QSeries QSeries::truncated(int n) const {
  if (n > trunc_) throw DomainError("cannot extend truncation");
  return QSeries(n, std::vector<Rational>(c_.begin(), c_.begin() + n + 1));
}

QSeries QSeries::shifted(int a) const {
  if (a < 0) throw DomainError("negative shift");
  QSeries out(trunc_);
  for (int i = 0; i + a <= trunc_; ++i) out.c_[i + a] = c_[i];
  return out;
}

QSeries QSeries::scaled(const Rational& k) const {
  QSeries out(*this);
  for (auto& x : out.c_) x *= k;
  return out;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  if (o.trunc_ < trunc_) *this = truncated(o.trunc_);
  for (int i = 0; i <= trunc_; ++i) c_[i] += o.c_[i];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  if (o.trunc_ < trunc_) *this = truncated(o.trunc_);
  for (int i = 0; i <= trunc_; ++i) c_[i] -= o.c_[i];
  return *this;
}

QSeries& QSeries::operator*=(const QSeries& o) {
  const int n = std::min(trunc_, o.trunc_);
  std::vector<Rational> out(n + 1, Rational(0));
  for (int i = 0; i <= n; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j)
      if (o.c_[j] != 0) out[i + j] += c_[i] * o.c_[j];
  }
  trunc_ = n;
  c_ = std::move(out);
  return *this;
}

QSeries& QSeries::operator/=(const QSeries& o) {
  if (o.c_[0] == 0) throw DomainError("division by a series with zero constant term");
  const int n = std::min(trunc_, o.trunc_);
  std::vector<Rational> out(n + 1, Rational(0));
  for (int i = 0; i <= n; ++i) {
    Rational acc = c_[i];
    for (int j = 1; j <= i; ++j)
      if (o.c_[j] != 0) acc -= o.c_[j] * out[i - j];
    out[i] = acc / o.c_[0];
  }
  trunc_ = n;
  c_ = std::move(out);
  return *this;
}

QSeries& QSeries::mul_one_minus(int k) {
  if (k <= 0) throw DomainError("mul_one_minus needs k >= 1");
  for (int i = trunc_; i >= k; --i) c_[i] -= c_[i - k];
  return *this;
}

QSeries& QSeries::div_one_minus(int k) {
  if (k <= 0) throw DomainError("div_one_minus needs k >= 1");
  for (int i = k; i <= trunc_; ++i) c_[i] += c_[i - k];
  return *this;
}

std::string QSeries::str() const {
  std::string out;
  for (int i = 0; i <= trunc_; ++i) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c_[i].get_str() + ")";
    if (i > 0) out += "q^" + std::to_string(i);
  }
  if (out.empty()) out = "0";
  return out + " + O(q^" + std::to_string(trunc_ + 1) + ")";
}

}  // namespace cherednik
