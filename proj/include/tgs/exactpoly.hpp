#pragma once

#include "tgs/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tgs {

// Dense univariate polynomial with exact integer coefficients, stored
// degree-ascending with no trailing zeros. The zero polynomial is the
// empty vector and has no degree.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial x() { return Polynomial{Scalar(0), Scalar(1)}; }
  static Polynomial constant(Scalar v) { return Polynomial{std::move(v)}; }

  bool is_zero() const { return c_.empty(); }

  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }

  // coefficient of x^d; zero beyond the stored degree
  Scalar coeff(std::size_t d) const { return d < c_.size() ? c_[d] : Scalar(0); }

  const std::vector<Scalar>& coeffs() const { return c_; }

  const Scalar& leading() const {
    if (c_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
    return c_.back();
  }

  Scalar eval(const Scalar& v) const {
    Scalar acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
    return acc;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> out(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return Polynomial(std::move(out));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> out(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
    return Polynomial(std::move(out));
  }

  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Scalar> out = a.c_;
    for (auto& v : out) v = -v;
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const Scalar& s, const Polynomial& a) {
    std::vector<Scalar> out = a.c_;
    for (auto& v : out) v *= s;
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const Polynomial& a, const Scalar& s) { return s * a; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Scalar(0)) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

using IntPolynomial = Polynomial<BigInt>;

template <typename Scalar>
Polynomial<Scalar> pow(const Polynomial<Scalar>& base, std::size_t e) {
  Polynomial<Scalar> acc = Polynomial<Scalar>::constant(Scalar(1));
  for (std::size_t i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

// Flips the global sign so the leading coefficient is +1. A leading
// coefficient other than +-1 means exact arithmetic went wrong upstream.
template <typename Scalar>
Polynomial<Scalar> monic_canonical(const Polynomial<Scalar>& p) {
  if (p.is_zero()) throw std::logic_error("cannot normalize the zero polynomial");
  if (p.leading() == Scalar(1)) return p;
  if (p.leading() == Scalar(-1)) return -p;
  throw std::logic_error("leading coefficient is not a unit");
}

// Synthetic division by (x - r). Returns {quotient, remainder}.
template <typename Scalar>
std::pair<Polynomial<Scalar>, Scalar> divide_linear(const Polynomial<Scalar>& p, const Scalar& r) {
  if (p.is_zero()) return {Polynomial<Scalar>(), Scalar(0)};
  const auto& c = p.coeffs();
  if (c.size() == 1) return {Polynomial<Scalar>(), c[0]};
  std::vector<Scalar> q(c.size() - 1, Scalar(0));
  Scalar carry = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    q[i] = carry;
    carry = c[i] + r * carry;
  }
  return {Polynomial<Scalar>(std::move(q)), carry};
}

// Quotient of an exact factor; nonzero remainder signals a broken invariant.
template <typename Scalar>
Polynomial<Scalar> divide_linear_exact(const Polynomial<Scalar>& p, const Scalar& r) {
  auto [q, rem] = divide_linear(p, r);
  if (!(rem == Scalar(0))) throw std::logic_error("division by expected linear factor left a remainder");
  return q;
}

template <typename Scalar>
std::size_t root_multiplicity(const Polynomial<Scalar>& p, const Scalar& r) {
  if (p.is_zero()) throw std::invalid_argument("root multiplicity of the zero polynomial is undefined");
  Polynomial<Scalar> cur = p;
  std::size_t k = 0;
  while (cur.eval(r) == Scalar(0)) {
    cur = divide_linear(cur, r).first;
    ++k;
  }
  return k;
}

namespace detail {

inline std::string scalar_str(const BigInt& v) { return v.get_str(10); }

template <typename T>
std::string scalar_str(const T& v) {
  return std::to_string(v);
}

}  // namespace detail

// Coefficients as decimal strings, degree-ascending. This is the wire
// format: JSON numbers cannot hold the coefficients exactly.
template <typename Scalar>
std::vector<std::string> coeff_strings(const Polynomial<Scalar>& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) out.push_back(detail::scalar_str(v));
  return out;
}

// Human form, degree-descending: "x^4 - 2x^3 + x - 6".
template <typename Scalar>
std::string to_string(const Polynomial<Scalar>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t d = c.size(); d-- > 0;) {
    if (c[d] == Scalar(0)) continue;
    const bool neg = c[d] < Scalar(0);
    Scalar mag = neg ? Scalar(-c[d]) : c[d];
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (!(mag == Scalar(1)) || d == 0) out += detail::scalar_str(mag);
    if (d == 1)
      out += "x";
    else if (d > 1)
      out += "x^" + std::to_string(d);
  }
  return out;
}

}  // namespace tgs
