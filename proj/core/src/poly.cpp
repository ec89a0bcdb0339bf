#include "mperron/poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "mperron/errors.hpp"

namespace mperron {
namespace {

const Integer& zero_integer() {
  static const Integer z = 0;
  return z;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

IntPoly::IntPoly(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::monomial(const Integer& coefficient, std::size_t power) {
  std::vector<Integer> c(power + 1, 0);
  c[power] = coefficient;
  return IntPoly(std::move(c));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPoly::operator[](std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : zero_integer();
}

const Integer& IntPoly::leading() const {
  return coeffs_.empty() ? zero_integer() : coeffs_.back();
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a) {
  IntPoly out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPoly derivative(const IntPoly& f) {
  if (f.degree() < 1) return {};
  std::vector<Integer> out(f.coefficients().size() - 1);
  for (std::size_t i = 1; i < f.coefficients().size(); ++i) out[i - 1] = f[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(out));
}

Integer evaluate(const IntPoly& f, const Integer& x) {
  Integer acc = 0;
  const auto& c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Integer content(const IntPoly& f) {
  Integer g = 0;
  for (const auto& c : f.coefficients()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return {};
  Integer g = content(f);
  if (f.leading() < 0) g = -g;
  std::vector<Integer> out;
  out.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) out.push_back(c / g);
  return IntPoly(std::move(out));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InvalidInput("pseudo_remainder: division by zero polynomial");
  const int db = b.degree();
  if (a.degree() < db) return a;
  std::vector<Integer> r = a.coefficients();
  const Integer& lb = b.leading();
  // One multiplication by lc(b) per quotient step: lc(b)^(deg a - deg b + 1) in total.
  for (int k = a.degree(); k >= db; --k) {
    const Integer lead = r[k];
    for (auto& c : r) c *= lb;
    if (lead != 0) {
      for (int j = 0; j <= db; ++j) r[k - db + j] -= lead * b[j];
    }
    r.pop_back();
  }
  return IntPoly(std::move(r));
}

std::optional<IntPoly> try_divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InvalidInput("divide_exact: division by zero polynomial");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> r = a.coefficients();
  const int db = b.degree();
  std::vector<Integer> q(a.degree() - db + 1, 0);
  const Integer& lb = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    if (r[k] == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Integer t = r[k] / lb;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= t * b[j];
    q[k - db] = std::move(t);
  }
  for (int i = 0; i < db; ++i) {
    if (r[i] != 0) return std::nullopt;
  }
  return IntPoly(std::move(q));
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  auto q = try_divide_exact(a, b);
  if (!q) throw std::domain_error("divide_exact: " + pretty(b) + " does not divide " + pretty(a));
  return *std::move(q);
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  IntPoly x = primitive_part(a);
  IntPoly y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return x;
}

Integer resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw InvalidInput("resultant: zero polynomial");

  IntPoly A = f;
  IntPoly B = g;
  int sign = 1;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if ((A.degree() % 2 == 1) && (B.degree() % 2 == 1)) sign = -sign;
  }
  if (B.degree() == 0) return sign * pow(B.leading(), static_cast<unsigned long>(A.degree()));

  const Integer a = content(A);
  const Integer b = content(B);
  A = divide_exact(A, IntPoly({a}));
  B = divide_exact(B, IntPoly({b}));
  const Integer t = pow(a, static_cast<unsigned long>(B.degree())) * pow(b, static_cast<unsigned long>(A.degree()));

  Integer gg = 1;
  Integer h = 1;
  for (;;) {
    const int delta = A.degree() - B.degree();
    if ((A.degree() % 2 == 1) && (B.degree() % 2 == 1)) sign = -sign;
    IntPoly R = pseudo_remainder(A, B);
    A = std::move(B);
    if (R.is_zero()) return 0;
    const Integer divisor = gg * pow(h, static_cast<unsigned long>(delta));
    B = divide_exact(R, IntPoly({divisor}));
    gg = A.leading();
    if (delta > 0) h = pow(gg, static_cast<unsigned long>(delta)) / pow(h, static_cast<unsigned long>(delta - 1));
    if (B.degree() == 0) break;
  }
  const unsigned long da = static_cast<unsigned long>(A.degree());
  h = pow(B.leading(), da) / pow(h, da - 1);
  return sign * t * h;
}

Integer discriminant_resultant(const IntPoly& f) {
  const int n = f.degree();
  if (n < 2) throw InvalidInput("discriminant: degree must be at least 2");
  Integer r = resultant(f, derivative(f));
  if (!mpz_divisible_p(r.get_mpz_t(), f.leading().get_mpz_t())) {
    throw OracleViolation("discriminant: resultant not divisible by leading coefficient");
  }
  r /= f.leading();
  const long half = static_cast<long>(n) * (n - 1) / 2;
  return (half % 2 == 0) ? r : Integer(-r);
}

bool is_self_reciprocal(const IntPoly& f) {
  const auto& c = f.coefficients();
  for (std::size_t i = 0, j = c.size(); i < j--; ++i) {
    if (c[i] != c[j]) return false;
  }
  return true;
}

unsigned exponent_stride(const IntPoly& f) {
  unsigned g = 0;
  for (std::size_t i = 1; i < f.coefficients().size(); ++i) {
    if (f[i] != 0) g = std::gcd(g, static_cast<unsigned>(i));
  }
  return g == 0 ? 1 : g;
}

IntPoly parse_poly(std::string_view text) {
  std::vector<Integer> coeffs;
  text = trim(text);
  if (text.empty()) throw InvalidInput("polynomial text is empty");
  while (true) {
    const std::size_t comma = text.find(',');
    std::string token(trim(text.substr(0, comma)));
    if (token.empty()) throw InvalidInput("empty coefficient in polynomial text");
    std::string_view digits = token;
    if (digits.front() == '+' || digits.front() == '-') digits.remove_prefix(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
      throw InvalidInput("malformed coefficient '" + token + "'");
    }
    if (token.front() == '+') token.erase(0, 1);
    coeffs.emplace_back(token, 10);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return IntPoly(std::move(coeffs));
}

std::string format_poly(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.coefficients().size(); ++i) {
    if (i) out += ',';
    out += f[i].get_str();
  }
  return out;
}

std::string pretty(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = f.degree(); k >= 0; --k) {
    const Integer& c = f[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

}  // namespace mperron
