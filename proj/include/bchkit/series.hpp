#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bchkit/ncpoly.hpp"

namespace bchkit {

// A formal power series known exactly up to a truncation order: the body is a
// polynomial with no term of degree above `order`, and arithmetic between two
// series truncates at the smaller of the two orders.
class TruncatedSeries {
 public:
  TruncatedSeries(const NcPoly& body, std::size_t order)
      : body_(body.truncated(order)), order_(order) {}

  static TruncatedSeries zero(const Alphabet& alphabet, std::size_t order) {
    return TruncatedSeries(NcPoly::zero(alphabet), order);
  }

  static TruncatedSeries one(const Alphabet& alphabet, std::size_t order) {
    return TruncatedSeries(NcPoly::one(alphabet), order);
  }

  static TruncatedSeries constant(const Alphabet& alphabet, const Rational& c,
                                  std::size_t order) {
    return TruncatedSeries(NcPoly::monomial(alphabet, Word(), c), order);
  }

  const NcPoly& body() const { return body_; }
  std::size_t order() const { return order_; }
  const Alphabet& alphabet() const { return body_.alphabet(); }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order_, b.order_);
    return TruncatedSeries(a.body_ + b.body_, n);
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order_, b.order_);
    return TruncatedSeries(a.body_ - b.body_, n);
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order_, b.order_);
    return TruncatedSeries(truncated_product(a.body_, b.body_, n), n);
  }

  friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& s) {
    return TruncatedSeries(c * s.body_, s.order_);
  }

  friend TruncatedSeries operator/(const TruncatedSeries& s, const Rational& c) {
    return TruncatedSeries(s.body_ / c, s.order_);
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  NcPoly body_;
  std::size_t order_;
};

// exp(X) = sum X^k / k! up to the order of X, accumulated Horner-style so
// every multiplication is already truncated. X must have zero constant term.
inline TruncatedSeries exp(const TruncatedSeries& x) {
  if (x.body().constant_term() != 0)
    throw std::invalid_argument("exp: series must have zero constant term");
  TruncatedSeries acc = TruncatedSeries::one(x.alphabet(), x.order());
  for (std::size_t k = x.order(); k >= 1; --k)
    acc = TruncatedSeries::one(x.alphabet(), x.order()) + x * acc / Rational(k);
  return acc;
}

// log(S) = sum_{k>=1} (-1)^{k+1}/k (S-1)^k up to the order of S. The constant
// term of S must be exactly 1.
inline TruncatedSeries log(const TruncatedSeries& s) {
  if (s.body().constant_term() != 1)
    throw std::invalid_argument("log: series must have constant term 1");
  const std::size_t n = s.order();
  if (n == 0) return TruncatedSeries::zero(s.alphabet(), 0);
  const TruncatedSeries y = s - TruncatedSeries::one(s.alphabet(), n);
  auto coeff = [](std::size_t k) {
    Rational c = Rational(1) / Rational(k);
    return k % 2 == 0 ? -c : c;
  };
  TruncatedSeries acc = TruncatedSeries::constant(s.alphabet(), coeff(n), n);
  for (std::size_t k = n - 1; k >= 1; --k)
    acc = TruncatedSeries::constant(s.alphabet(), coeff(k), n) + y * acc;
  return y * acc;
}

// Homogeneous components C_1..C_N of log(exp(A) exp(B)) over {A, B}, computed
// by direct truncated-series expansion. Index i holds C_{i+1}.
inline std::vector<NcPoly> bch_direct(std::size_t n) {
  if (n < 1) throw std::invalid_argument("bch_direct: degree must be at least 1");
  const Alphabet& ab = bch_alphabet();
  const TruncatedSeries ea = exp(TruncatedSeries(NcPoly::letter(ab, 0), n));
  const TruncatedSeries eb = exp(TruncatedSeries(NcPoly::letter(ab, 1), n));
  const NcPoly body = log(ea * eb).body();
  std::vector<NcPoly> components;
  components.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) components.push_back(body.homogeneous_component(k));
  return components;
}

// Conjugation identity exp(X) Y exp(-X) = sum_k ad_X^k(Y)/k!, compared
// exactly at truncation order `order`. X and Y should be constant-free.
inline bool check_exp_ad_identity(const NcPoly& x, const NcPoly& y, std::size_t order) {
  const TruncatedSeries ex = exp(TruncatedSeries(x, order));
  const TruncatedSeries exn = exp(TruncatedSeries(-x, order));
  const NcPoly lhs = (ex * TruncatedSeries(y, order) * exn).body();

  NcPoly acc = y.truncated(order);
  NcPoly rhs = acc;
  Integer kfact = 1;
  for (std::size_t k = 1; k <= order; ++k) {
    acc = ad(x, acc).truncated(order);
    kfact *= static_cast<unsigned long long>(k);
    rhs += acc / Rational(kfact);
  }
  return lhs == rhs;
}

}  // namespace bchkit
