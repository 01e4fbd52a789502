#pragma once

// Exact arithmetic carriers: big integers, rationals, integer polynomials,
// truncated rational power series and small dense matrices.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zetacat/error.hpp"

namespace zetacat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

// "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline bool is_integer(const Rational& v) {
  return boost::multiprecision::denominator(v) == 1;
}

// ---------------------------------------------------------------------------
// IntPolynomial
// ---------------------------------------------------------------------------

/// Polynomial in t with arbitrary-precision integer coefficients stored in
/// ascending degree. The zero polynomial has no coefficients; otherwise the
/// leading coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(const BigInt& constant_term) : coeffs_{constant_term} { trim(); }
  explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  IntPolynomial(std::initializer_list<long long> coeffs) {
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static IntPolynomial constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

  static IntPolynomial monomial(const BigInt& c, std::size_t degree) {
    std::vector<BigInt> v(degree + 1);
    v[degree] = c;
    return IntPolynomial(std::move(v));
  }

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  BigInt coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coefficient(i) + b.coefficient(i);
    return IntPolynomial(std::move(r));
  }

  friend IntPolynomial operator-(const IntPolynomial& a) {
    std::vector<BigInt> r = a.coeffs_;
    for (auto& c : r) c = -c;
    return IntPolynomial(std::move(r));
  }

  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(r));
  }

  IntPolynomial pow(unsigned e) const {
    IntPolynomial result = constant(1);
    for (unsigned i = 0; i < e; ++i) result = result * *this;
    return result;
  }

  /// Quotient a / b when b divides a in Z[t]; nullopt otherwise.
  static std::optional<IntPolynomial> exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw InputError("polynomial division by zero");
    if (a.is_zero()) return IntPolynomial{};
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<BigInt> rem = a.coeffs_;
    const std::size_t db = b.coeffs_.size() - 1;
    const BigInt& lead = b.coeffs_.back();
    std::vector<BigInt> q(rem.size() - db);
    for (std::size_t k = q.size(); k-- > 0;) {
      const BigInt& top = rem[k + db];
      if (top == 0) continue;
      if (top % lead != 0) return std::nullopt;
      q[k] = top / lead;
      for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q[k] * b.coeffs_[j];
    }
    for (const auto& c : rem)
      if (c != 0) return std::nullopt;
    return IntPolynomial(std::move(q));
  }

  // Human-readable form, e.g. "1 - 2t + t^2".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      BigInt c = coeffs_[k];
      if (c == 0) continue;
      const bool neg = c < 0;
      if (neg) c = -c;
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      first = false;
      if (k == 0 || c != 1) os << c;
      if (k >= 1) os << "t";
      if (k >= 2) os << "^" << k;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

// ---------------------------------------------------------------------------
// RationalPowerSeries
// ---------------------------------------------------------------------------

/// Power series c_0 + c_1 t + ... + c_P t^P truncated at order P, with exact
/// rational coefficients. Arithmetic between two series truncates to the
/// smaller order.
class RationalPowerSeries {
 public:
  explicit RationalPowerSeries(std::size_t order) : coeffs_(order + 1) {}
  RationalPowerSeries(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
  }

  static RationalPowerSeries one(std::size_t order) {
    RationalPowerSeries s(order);
    s.coeffs_[0] = 1;
    return s;
  }

  static RationalPowerSeries from_polynomial(const IntPolynomial& p, std::size_t order) {
    RationalPowerSeries s(order);
    for (std::size_t k = 0; k <= order; ++k) s.coeffs_[k] = Rational(p.coefficient(k));
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
  Rational& operator[](std::size_t k) { return coeffs_.at(k); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  friend bool operator==(const RationalPowerSeries&, const RationalPowerSeries&) = default;

  friend RationalPowerSeries operator+(const RationalPowerSeries& a, const RationalPowerSeries& b) {
    RationalPowerSeries r(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k <= r.order(); ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return r;
  }

  friend RationalPowerSeries operator-(const RationalPowerSeries& a, const RationalPowerSeries& b) {
    RationalPowerSeries r(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k <= r.order(); ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return r;
  }

  friend RationalPowerSeries operator*(const RationalPowerSeries& a, const RationalPowerSeries& b) {
    RationalPowerSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j <= r.order(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }

  /// exp(S) for S with zero constant term, via (exp S)' = S' exp S:
  /// k E_k = sum_{j=1..k} j S_j E_{k-j}.
  RationalPowerSeries exp() const {
    if (coeffs_[0] != 0) throw InputError("exp requires a zero constant term");
    RationalPowerSeries e(order());
    e.coeffs_[0] = 1;
    for (std::size_t k = 1; k <= order(); ++k) {
      Rational acc = 0;
      for (std::size_t j = 1; j <= k; ++j)
        if (coeffs_[j] != 0) acc += Rational(static_cast<long long>(j)) * coeffs_[j] * e.coeffs_[k - j];
      e.coeffs_[k] = acc / static_cast<long long>(k);
    }
    return e;
  }

  /// log(F) for F with constant term 1, via F L' = F'.
  RationalPowerSeries log() const {
    if (coeffs_[0] != 1) throw InputError("log requires constant term 1");
    // Solve for D = L' from F * D = F' (orders shift by one).
    std::vector<Rational> d(order());
    for (std::size_t k = 0; k < d.size(); ++k) {
      Rational acc = Rational(static_cast<long long>(k + 1)) * coeffs_[k + 1];
      for (std::size_t j = 1; j <= k; ++j) acc -= coeffs_[j] * d[k - j];
      d[k] = acc;
    }
    RationalPowerSeries l(order());
    for (std::size_t k = 1; k <= order(); ++k) l.coeffs_[k] = d[k - 1] / static_cast<long long>(k);
    return l;
  }

  /// Multiplicative inverse; requires an invertible constant term.
  RationalPowerSeries inverse() const {
    if (coeffs_[0] == 0) throw InputError("series with zero constant term is not invertible");
    RationalPowerSeries r(order());
    r.coeffs_[0] = Rational(1) / coeffs_[0];
    for (std::size_t k = 1; k <= order(); ++k) {
      Rational acc = 0;
      for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * r.coeffs_[k - j];
      r.coeffs_[k] = -acc / coeffs_[0];
    }
    return r;
  }

  bool all_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
  }

 private:
  std::vector<Rational> coeffs_;
};

// ---------------------------------------------------------------------------
// Dense square matrices
// ---------------------------------------------------------------------------

template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, const T& fill = T(0)) : n_(n), data_(n * n, fill) {}

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t size() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < a.n_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  T trace() const {
    T t(0);
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using IntMatrix = SquareMatrix<BigInt>;

/// Traces tr(M), tr(M^2), ..., tr(M^max_power).
inline std::vector<BigInt> power_traces(const IntMatrix& m, std::size_t max_power) {
  std::vector<BigInt> traces;
  traces.reserve(max_power);
  IntMatrix power = IntMatrix::identity(m.size());
  for (std::size_t p = 1; p <= max_power; ++p) {
    power = power * m;
    traces.push_back(power.trace());
  }
  return traces;
}

namespace detail {

inline BigInt exact_quotient(const BigInt& a, const BigInt& b) { return a / b; }

inline IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  auto q = IntPolynomial::exact_divide(a, b);
  if (!q) throw InternalError("Bareiss step produced an inexact polynomial quotient");
  return *std::move(q);
}

inline bool is_zero(const BigInt& v) { return v == 0; }
inline bool is_zero(const IntPolynomial& v) { return v.is_zero(); }

}  // namespace detail

/// Fraction-free (Bareiss) determinant over an integral domain with exact
/// division: BigInt or IntPolynomial.
template <class Ring>
Ring bareiss_determinant(std::vector<std::vector<Ring>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Ring(1);
  Ring previous(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (detail::is_zero(m[k][k])) {
      std::size_t pivot = k + 1;
      while (pivot < n && detail::is_zero(m[pivot][k])) ++pivot;
      if (pivot == n) return Ring(0);
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = detail::exact_quotient(m[i][j] * m[k][k] - m[i][k] * m[k][j], previous);
      m[i][k] = Ring(0);
    }
    previous = m[k][k];
  }
  Ring det = m[n - 1][n - 1];
  return negate ? Ring(-det) : det;
}

/// det(I - tM) as an integer polynomial.
inline IntPolynomial det_one_minus_t(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<IntPolynomial>> entries(n, std::vector<IntPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      entries[i][j] = IntPolynomial(std::vector<BigInt>{BigInt(i == j ? 1 : 0), BigInt(-m(i, j))});
  return bareiss_determinant(std::move(entries));
}

}  // namespace zetacat
