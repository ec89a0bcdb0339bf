#include "mperron/errors.hpp"
#include "mperron/poly.hpp"

namespace mperron {
namespace {

Integer reduce(const Integer& v, const Integer& q) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t());
  return r;
}

Integer inverse_mod(const Integer& v, const Integer& q) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t()) == 0) {
    throw InvalidInput("modular inverse does not exist; modulus must be prime");
  }
  return inv;
}

void require_same_modulus(const ModPoly& a, const ModPoly& b) {
  if (a.modulus() != b.modulus()) throw InvalidInput("ModPoly modulus mismatch");
}

const Integer& zero_residue() {
  static const Integer z = 0;
  return z;
}

}  // namespace

ModPoly::ModPoly(Integer modulus, std::vector<Integer> ascending)
    : q_(std::move(modulus)), coeffs_(std::move(ascending)) {
  if (q_ < 2) throw InvalidInput("ModPoly modulus must be at least 2");
  for (auto& c : coeffs_) c = reduce(c, q_);
  normalize();
}

ModPoly::ModPoly(const IntPoly& f, Integer modulus) : ModPoly(std::move(modulus), f.coefficients()) {}

void ModPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& ModPoly::operator[](std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : zero_residue();
}

const Integer& ModPoly::leading() const { return coeffs_.empty() ? zero_residue() : coeffs_.back(); }

ModPoly ModPoly::monic() const {
  if (is_zero()) return *this;
  const Integer inv = inverse_mod(leading(), q_);
  std::vector<Integer> out = coeffs_;
  for (auto& c : out) c *= inv;
  return ModPoly(q_, std::move(out));
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b);
  std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return ModPoly(a.q_, std::move(out));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b);
  std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
  return ModPoly(a.q_, std::move(out));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b);
  if (a.is_zero() || b.is_zero()) return ModPoly::zero(a.q_);
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return ModPoly(a.q_, std::move(out));
}

ModDivision divmod(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b);
  if (b.is_zero()) throw InvalidInput("ModPoly division by zero");
  const Integer& q = a.modulus();
  if (a.degree() < b.degree()) return {ModPoly::zero(q), a};
  const Integer inv = inverse_mod(b.leading(), q);
  std::vector<Integer> r = a.coefficients();
  const int db = b.degree();
  std::vector<Integer> quot(a.degree() - db + 1, 0);
  for (int k = a.degree(); k >= db; --k) {
    Integer t = reduce(r[k] * inv, q);
    if (t == 0) continue;
    for (int j = 0; j <= db; ++j) r[k - db + j] = reduce(r[k - db + j] - t * b[j], q);
    quot[k - db] = std::move(t);
  }
  r.resize(db);
  return {ModPoly(q, std::move(quot)), ModPoly(q, std::move(r))};
}

ModPoly gcd_mod(const ModPoly& f, const ModPoly& g) {
  require_same_modulus(f, g);
  if (f.is_zero() && g.is_zero()) throw InvalidInput("gcd_mod: both arguments are zero");
  ModPoly a = f;
  ModPoly b = g;
  while (!b.is_zero()) {
    ModPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ModPoly derivative(const ModPoly& f) {
  if (f.degree() < 1) return ModPoly::zero(f.modulus());
  std::vector<Integer> out(f.coefficients().size() - 1);
  for (std::size_t i = 1; i < f.coefficients().size(); ++i) out[i - 1] = f[i] * static_cast<unsigned long>(i);
  return ModPoly(f.modulus(), std::move(out));
}

ModPoly radical(const ModPoly& f) {
  const Integer& q = f.modulus();
  if (f.is_zero()) throw InvalidInput("radical of the zero polynomial");
  if (f.degree() <= 0) return ModPoly::one(q);

  ModPoly df = derivative(f);
  if (df.is_zero()) {
    // f(x) = u(x^q) = u(x)^q over F_q, since a^q = a for residues.
    const unsigned long step = q.get_ui();
    std::vector<Integer> u;
    for (std::size_t i = 0; i < f.coefficients().size(); i += step) u.push_back(f[i]);
    return radical(ModPoly(q, std::move(u)));
  }

  const ModPoly c = gcd_mod(f, df);
  // Factors whose multiplicity is not a multiple of q, each once.
  ModPoly w = divmod(f, c).quotient.monic();
  // What remains of c after removing every factor shared with w has all
  // multiplicities divisible by q.
  ModPoly rest = c;
  for (;;) {
    ModPoly g = gcd_mod(rest, w);
    if (g.degree() <= 0) break;
    rest = divmod(rest, g).quotient;
  }
  return (w * radical(rest)).monic();
}

IntPoly lift(const ModPoly& f) { return IntPoly(f.coefficients()); }

}  // namespace mperron
