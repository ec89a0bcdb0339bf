#pragma once

// Arbitrary-precision reals over MPFR. Each value carries its own precision;
// binary operations produce the larger of the two operand precisions, so
// there is no global precision state and values are safe to use from many
// threads.

#include <compare>
#include <string>

#include <mpfr.h>

#include "mperron/integer.hpp"

namespace mperron {

class Real {
 public:
  explicit Real(mpfr_prec_t precision = 64);
  Real(double value, mpfr_prec_t precision);
  Real(const Integer& value, mpfr_prec_t precision);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  // Changes precision, rounding the current value to nearest.
  void set_precision(mpfr_prec_t precision);

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Decimal rendering with the given number of significant digits.
  std::string to_string(int significant_digits) const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, double b);

 private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
// x * 2^e, exact.
Real ldexp(const Real& x, long e);

struct Complex {
  Real re;
  Real im;

  explicit Complex(mpfr_prec_t precision = 64) : re(precision), im(precision) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  mpfr_prec_t precision() const { return re.precision(); }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(const Complex& a, const Complex& b);
  friend Complex operator/(const Complex& a, const Complex& b);
};

Complex conj(const Complex& z);
Real abs(const Complex& z);
// Multiply by a real scalar.
Complex scale(const Complex& z, const Real& s);

}  // namespace mperron
