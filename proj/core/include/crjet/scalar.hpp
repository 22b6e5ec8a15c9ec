#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace crjet {

/// Exact complex number with arbitrary-precision rational real and imaginary
/// parts. gmpxx keeps every mpq_class result in lowest terms with a positive
/// denominator.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& real() const noexcept { return re_; }
  const mpq_class& imag() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }

  /// *this += a * b without heap temporaries in the common real case.
  void add_product(const GaussianRational& a, const GaussianRational& b);

  GaussianRational& operator+=(const GaussianRational& rhs);
  GaussianRational& operator-=(const GaussianRational& rhs);
  GaussianRational& operator*=(const GaussianRational& rhs);
  GaussianRational& operator/=(const GaussianRational& rhs);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

using FloatComplex = std::complex<double>;

/// Per-scalar hooks used by the series kernel.
template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<GaussianRational> {
  static constexpr bool exact = true;
  static bool is_zero(const GaussianRational& c) { return c.is_zero(); }
  static bool is_real(const GaussianRational& c) { return c.is_real(); }
  static GaussianRational conj(const GaussianRational& c) { return c.conj(); }
  static GaussianRational one() { return GaussianRational(1); }
  static void add_product(GaussianRational& acc, const GaussianRational& a,
                          const GaussianRational& b) {
    acc.add_product(a, b);
  }
};

template <>
struct ScalarTraits<FloatComplex> {
  static constexpr bool exact = false;
  static bool is_zero(const FloatComplex& c) { return c.real() == 0.0 && c.imag() == 0.0; }
  static bool is_real(const FloatComplex& c);
  static FloatComplex conj(const FloatComplex& c) { return std::conj(c); }
  static FloatComplex one() { return {1.0, 0.0}; }
  static void add_product(FloatComplex& acc, const FloatComplex& a, const FloatComplex& b) {
    acc += a * b;
  }
};

template <class Scalar>
Scalar scalar_pow(const Scalar& base, unsigned exponent) {
  Scalar result = ScalarTraits<Scalar>::one();
  for (unsigned i = 0; i < exponent; ++i) {
    result *= base;
  }
  return result;
}

/// `p/q` (or `p` when q = 1).
std::string rational_to_string(const mpq_class& q);

/// Parses `p`, `-p`, `p/q`, or a plain decimal like `1e-6` or `0.25` into an
/// exact rational. Throws Error(invalid_argument) on malformed input.
mpq_class parse_rational(const std::string& text);

/// Exact rational with the shortest decimal expansion that round-trips to `x`.
mpq_class rational_from_double(double x);

FloatComplex to_float(const GaussianRational& c);

}  // namespace crjet
