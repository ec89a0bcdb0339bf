#pragma once

// Exact univariate polynomials over Z and over F_q.
//
// Coefficients are stored in ascending degree order (constant term first)
// everywhere: in memory, in the text format, and in JSON.

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mperron/integer.hpp"

namespace mperron {

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> ascending);
  IntPoly(std::initializer_list<long> ascending);

  static IntPoly monomial(const Integer& coefficient, std::size_t power);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  // Coefficient of x^i; zero beyond the degree.
  const Integer& operator[](std::size_t i) const;
  const Integer& leading() const;
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const Integer& scalar);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const Integer& s) { return a *= s; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void normalize();

  std::vector<Integer> coeffs_;
};

IntPoly derivative(const IntPoly& f);
Integer evaluate(const IntPoly& f, const Integer& x);

// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
Integer content(const IntPoly& f);
// f / content(f) with positive leading coefficient.
IntPoly primitive_part(const IntPoly& f);

// lc(b)^(deg a - deg b + 1) * a  mod  b, computed without fractions.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

// a / b when the quotient has integer coefficients and the remainder is zero.
std::optional<IntPoly> try_divide_exact(const IntPoly& a, const IntPoly& b);
// As above; throws std::domain_error when the division is not exact.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

// Primitive gcd with positive leading coefficient (primitive-PRS).
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Resultant by the fraction-free subresultant algorithm.
/// Throws InvalidInput if either argument is the zero polynomial.
Integer resultant(const IntPoly& f, const IntPoly& g);

/// (-1)^(n(n-1)/2) Res(f, f') / lc(f). Throws InvalidInput for deg f < 2.
Integer discriminant_resultant(const IntPoly& f);

// x^n f(1/x) == f(x).
bool is_self_reciprocal(const IntPoly& f);

// f(x) == g(x^k) for the largest such k (1 when no such structure exists).
unsigned exponent_stride(const IntPoly& f);

// Text format: comma-separated ascending coefficients, "-3,-1,1" is x^2-x-3.
IntPoly parse_poly(std::string_view text);
std::string format_poly(const IntPoly& f);
// Conventional descending rendering for messages, e.g. "x^2 - x - 3".
std::string pretty(const IntPoly& f);

/// Polynomial over F_q with residues kept in [0, q).
class ModPoly {
 public:
  ModPoly(Integer modulus, std::vector<Integer> ascending);
  ModPoly(const IntPoly& f, Integer modulus);

  static ModPoly zero(Integer modulus) { return ModPoly(std::move(modulus), {}); }
  static ModPoly one(Integer modulus) { return ModPoly(std::move(modulus), {Integer(1)}); }

  const Integer& modulus() const { return q_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Integer& operator[](std::size_t i) const;
  const Integer& leading() const;
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  ModPoly monic() const;

  friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
  friend bool operator==(const ModPoly&, const ModPoly&) = default;

 private:
  void normalize();

  Integer q_;
  std::vector<Integer> coeffs_;
};

struct ModDivision {
  ModPoly quotient;
  ModPoly remainder;
};

// Euclidean division; throws InvalidInput on division by zero or modulus mismatch.
ModDivision divmod(const ModPoly& a, const ModPoly& b);

/// Monic gcd in F_q[x]. Throws InvalidInput if the moduli differ or both
/// arguments are zero.
ModPoly gcd_mod(const ModPoly& f, const ModPoly& g);

ModPoly derivative(const ModPoly& f);

/// Product of the distinct monic irreducible factors of f in F_q[x].
/// Handles inseparable parts (f' == 0) by extracting q-th roots.
ModPoly radical(const ModPoly& f);

// Integer lift with coefficients in [0, q).
IntPoly lift(const ModPoly& f);

}  // namespace mperron
