#include <symmoment/error.hpp>
#include <symmoment/polynomial.hpp>

#include <sstream>

namespace symmoment {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, int k) {
  std::vector<BigInt> v(k + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[k];
}

int IntPolynomial::parity() const {
  bool has_even = false, has_odd = false;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    (k % 2 ? has_odd : has_even) = true;
  }
  if (has_even && has_odd) return 0;
  return has_odd ? -1 : 1;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[i + k] += a.coeffs_[i] * b.coeffs_[k];
  }
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

IntPolynomial pow(const IntPolynomial& base, unsigned exp) {
  IntPolynomial result = IntPolynomial::constant(1);
  IntPolynomial sq = base;
  while (exp) {
    if (exp & 1u) result = result * sq;
    exp >>= 1u;
    if (exp) sq = sq * sq;
  }
  return result;
}

std::vector<IntPolynomial> sym_prime_polys(int max_r) {
  if (max_r < 0) throw DomainError("sym_prime_polys: negative index");
  const IntPolynomial t{0, 1};
  std::vector<IntPolynomial> s;
  s.reserve(max_r + 1);
  s.push_back(IntPolynomial::constant(1));
  if (max_r >= 1) s.push_back(t);
  for (int r = 2; r <= max_r; ++r) s.push_back(t * s[r - 1] - s[r - 2]);
  return s;
}

IntPolynomial sym_prime_poly(int r) {
  if (r < 0) throw DomainError("sym_prime_poly: r must be nonnegative");
  return sym_prime_polys(r).back();
}

IntPolynomial conjugate_pair_poly(int e) {
  if (e < 0) e = -e;
  const IntPolynomial t{0, 1};
  IntPolynomial prev = IntPolynomial::constant(2);
  if (e == 0) return prev;
  IntPolynomial cur = t;
  for (int k = 2; k <= e; ++k) {
    IntPolynomial next = t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

double poly_eval(const IntPolynomial& p, double t) {
  double acc = 0.0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

BigRational poly_eval(const IntPolynomial& p, const BigRational& t) {
  BigRational acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + BigRational(*it);
  acc.canonicalize();
  return acc;
}

DecompositionCertificate verify_decomposition(int l, int j, int cap) {
  DecompositionCertificate cert;
  cert.l = l;
  cert.j = j;
  cert.weights = decomposition_coeffs(l, j, cap);
  const int lj = l * j;
  const auto basis = sym_prime_polys(lj);
  cert.lhs = pow(basis[j], static_cast<unsigned>(l));
  for (std::size_t m = 0; m < cert.weights.size(); ++m) {
    cert.rhs += basis[lj - 2 * m] * cert.weights[m];
  }
  cert.holds = cert.lhs == cert.rhs;
  return cert;
}

}  // namespace symmoment
