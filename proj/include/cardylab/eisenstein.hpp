#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>

namespace cardylab {

using Rational = boost::multiprecision::cpp_rational;

/// Exact element a + b*tau of Q[tau], tau = exp(2*pi*i/3), reduced with
/// tau^2 = -1 - tau.
struct Eisenstein {
  Rational a;
  Rational b;

  Eisenstein() = default;
  Eisenstein(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}

  static Eisenstein zero() { return {}; }
  static Eisenstein tau_pow(int k);

  bool is_zero() const { return a == 0 && b == 0; }

  Eisenstein& operator+=(const Eisenstein& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  friend Eisenstein operator+(Eisenstein x, const Eisenstein& y) { return x += y; }
  friend Eisenstein operator-(const Eisenstein& x, const Eisenstein& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend Eisenstein operator*(const Eisenstein& x, const Eisenstein& y) {
    // (a1 + b1 t)(a2 + b2 t), t^2 = -1 - t
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
  }
  friend Eisenstein operator*(const Eisenstein& x, const Rational& s) { return {x.a * s, x.b * s}; }
  friend bool operator==(const Eisenstein& x, const Eisenstein& y) = default;

  /// Multiplication by tau^k: tau * (a + b tau) = -b + (a - b) tau.
  Eisenstein mul_tau_pow(int k) const {
    Eisenstein r = *this;
    for (int i = 0; i < ((k % 3) + 3) % 3; ++i) r = Eisenstein{-r.b, r.a - r.b};
    return r;
  }

  std::complex<double> to_complex() const {
    const double sqrt3_2 = 0.86602540378443864676;
    double da = static_cast<double>(a), db = static_cast<double>(b);
    return {da - 0.5 * db, sqrt3_2 * db};
  }
};

inline Eisenstein Eisenstein::tau_pow(int k) { return Eisenstein{1, 0}.mul_tau_pow(k); }

std::string to_string(const Rational& r);
std::string to_string(const Eisenstein& e);

}  // namespace cardylab
