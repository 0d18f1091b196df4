#pragma once

#include <string>
#include <vector>

#include "dbc/bigint.hpp"

namespace dbc {

// Truncated formal power series in q with exact integer coefficients.
// A series carries its truncation order explicitly: it is known modulo
// q^(trunc_order+1) and arithmetic never looks past that.
// Values are immutable once built; every operation returns a fresh series.
class QSeries {
 public:
  explicit QSeries(int trunc_order);
  QSeries(std::vector<BigInt> coeffs, int trunc_order);

  static QSeries one(int trunc_order);
  static QSeries monomial(const BigInt& c, int degree, int trunc_order);

  int trunc_order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& coeff(int k) const { return coeffs_.at(k); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  bool operator==(const QSeries& other) const = default;

  BigInt eval_at_one() const;
  // Index of the first coefficient where *this and g differ, or -1.
  int first_mismatch(const QSeries& g) const;

  std::string to_json() const;
  static QSeries from_json(const std::string& text);

 private:
  std::vector<BigInt> coeffs_;  // coeffs_[k] = coefficient of q^k
};

// Throw std::invalid_argument on mismatched truncation orders (caller bug).
QSeries add(const QSeries& f, const QSeries& g);
QSeries sub(const QSeries& f, const QSeries& g);
QSeries mul(const QSeries& f, const QSeries& g);
QSeries shift(const QSeries& f, int k);  // multiply by q^k, same truncation

// Multiplicative inverse modulo q^(N+1); requires constant term +1 or -1.
QSeries inverse(const QSeries& f);

// M(q) = prod_{i>=1} 1/(1-q^i)^i, truncated. Factors with i > trunc_order
// are identically 1 modulo the truncation and are skipped.
QSeries macmahon(int trunc_order);

// M_{a,b,c}(q) = prod_{s<=a} prod_{t<=b} prod_{r<=c}
//                  (1-q^(s+t+r-1)) / (1-q^(s+t+r-2)).
// Computed as (truncated numerator product) * inverse(denominator product);
// the full product is a polynomial so cancellation is automatic.
QSeries macmahon_box(int a, int b, int c, int trunc_order);

}  // namespace dbc
