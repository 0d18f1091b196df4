#include "dbc/qseries.hpp"

#include <stdexcept>

#include "json.hpp"

namespace dbc {

QSeries::QSeries(int trunc_order) {
  if (trunc_order < 0) throw std::invalid_argument("trunc_order must be >= 0");
  coeffs_.assign(trunc_order + 1, BigInt(0));
}

QSeries::QSeries(std::vector<BigInt> coeffs, int trunc_order) {
  if (trunc_order < 0) throw std::invalid_argument("trunc_order must be >= 0");
  coeffs.resize(trunc_order + 1, BigInt(0));
  coeffs_ = std::move(coeffs);
}

QSeries QSeries::one(int trunc_order) {
  QSeries s(trunc_order);
  s.coeffs_[0] = 1;
  return s;
}

QSeries QSeries::monomial(const BigInt& c, int degree, int trunc_order) {
  QSeries s(trunc_order);
  if (degree <= trunc_order) s.coeffs_[degree] = c;
  return s;
}

BigInt QSeries::eval_at_one() const {
  BigInt total = 0;
  for (const auto& c : coeffs_) total += c;
  return total;
}

int QSeries::first_mismatch(const QSeries& g) const {
  int n = std::min(trunc_order(), g.trunc_order());
  for (int k = 0; k <= n; ++k)
    if (coeffs_[k] != g.coeffs_[k]) return k;
  if (trunc_order() != g.trunc_order()) return n + 1;
  return -1;
}

namespace {

void require_same_order(const QSeries& f, const QSeries& g) {
  if (f.trunc_order() != g.trunc_order())
    throw std::invalid_argument("mismatched truncation orders: " +
                                std::to_string(f.trunc_order()) + " vs " +
                                std::to_string(g.trunc_order()));
}

}  // namespace

QSeries add(const QSeries& f, const QSeries& g) {
  require_same_order(f, g);
  std::vector<BigInt> r(f.coeffs());
  for (int k = 0; k <= g.trunc_order(); ++k) r[k] += g.coeff(k);
  return QSeries(std::move(r), f.trunc_order());
}

QSeries sub(const QSeries& f, const QSeries& g) {
  require_same_order(f, g);
  std::vector<BigInt> r(f.coeffs());
  for (int k = 0; k <= g.trunc_order(); ++k) r[k] -= g.coeff(k);
  return QSeries(std::move(r), f.trunc_order());
}

QSeries mul(const QSeries& f, const QSeries& g) {
  require_same_order(f, g);
  int n = f.trunc_order();
  std::vector<BigInt> r(n + 1, BigInt(0));
  for (int i = 0; i <= n; ++i) {
    if (f.coeff(i) == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (g.coeff(j) == 0) continue;
      r[i + j] += f.coeff(i) * g.coeff(j);
    }
  }
  return QSeries(std::move(r), n);
}

QSeries shift(const QSeries& f, int k) {
  if (k < 0) throw std::invalid_argument("negative shift");
  int n = f.trunc_order();
  std::vector<BigInt> r(n + 1, BigInt(0));
  for (int i = 0; i + k <= n; ++i) r[i + k] = f.coeff(i);
  return QSeries(std::move(r), n);
}

QSeries inverse(const QSeries& f) {
  int n = f.trunc_order();
  const BigInt& c0 = f.coeff(0);
  if (c0 != 1 && c0 != -1)
    throw std::invalid_argument("not invertible in truncated series");
  std::vector<BigInt> g(n + 1, BigInt(0));
  g[0] = c0;  // 1/c0 == c0 for a unit
  for (int k = 1; k <= n; ++k) {
    BigInt s = 0;
    for (int i = 1; i <= k; ++i) s += f.coeff(i) * g[k - i];
    g[k] = -g[0] * s;
  }
  return QSeries(std::move(g), n);
}

QSeries macmahon(int trunc_order) {
  QSeries result = QSeries::one(trunc_order);
  for (int i = 1; i <= trunc_order; ++i) {
    // geometric series 1/(1-q^i)
    QSeries geo(trunc_order);
    std::vector<BigInt> gc(trunc_order + 1, BigInt(0));
    for (int m = 0; m * i <= trunc_order; ++m) gc[m * i] = 1;
    QSeries factor(std::move(gc), trunc_order);
    for (int rep = 0; rep < i; ++rep) result = mul(result, factor);
  }
  return result;
}

QSeries macmahon_box(int a, int b, int c, int trunc_order) {
  if (a < 0 || b < 0 || c < 0)
    throw std::invalid_argument("box dimensions must be nonnegative");
  QSeries num = QSeries::one(trunc_order);
  QSeries den = QSeries::one(trunc_order);
  auto one_minus = [&](int e) {
    std::vector<BigInt> v(trunc_order + 1, BigInt(0));
    v[0] = 1;
    if (e <= trunc_order && e >= 1) v[e] = -1;
    return QSeries(std::move(v), trunc_order);
  };
  for (int s = 1; s <= a; ++s)
    for (int t = 1; t <= b; ++t)
      for (int r = 1; r <= c; ++r) {
        num = mul(num, one_minus(s + t + r - 1));
        den = mul(den, one_minus(s + t + r - 2));
      }
  return mul(num, inverse(den));
}

std::string QSeries::to_json() const {
  nlohmann::json j;
  j["trunc_order"] = trunc_order();
  auto arr = nlohmann::json::array();
  for (const auto& c : coeffs_) arr.push_back(c.str());
  j["coeffs"] = arr;
  return j.dump();
}

QSeries QSeries::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  int n = j.at("trunc_order").get<int>();
  std::vector<BigInt> coeffs;
  for (const auto& s : j.at("coeffs")) coeffs.emplace_back(s.get<std::string>());
  if (static_cast<int>(coeffs.size()) != n + 1)
    throw std::invalid_argument("coeffs length does not match trunc_order");
  return QSeries(std::move(coeffs), n);
}

}  // namespace dbc
