#include "tauscope/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tauscope::exactlin {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().isZero()) c_.pop_back();
}

Polynomial Polynomial::monomial(std::size_t degree, const Scalar& c) {
  std::vector<Scalar> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Scalar& root) { return Polynomial({-root, Scalar(1)}); }

Polynomial Polynomial::monic() const {
  if (isZero()) return *this;
  const Scalar inv = leading().inverse();
  std::vector<Scalar> v(c_);
  for (auto& x : v) x *= inv;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Scalar> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = Scalar(static_cast<long>(i)) * c_[i];
  return Polynomial(std::move(v));
}

Scalar Polynomial::evaluate(const Scalar& x) const {
  Scalar acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Matrix Polynomial::evaluate(const Matrix& m) const {
  Matrix acc(m.rows(), m.cols());
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * m;
    for (std::size_t d = 0; d < m.rows(); ++d) acc(d, d) += c_[i];
  }
  return acc;
}

std::string Polynomial::str() const {
  if (isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].isZero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || !c_[i].isOne()) os << c_[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
  return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.isZero() || b.isZero()) return {};
  std::vector<Scalar> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(v));
}

DivisionResult divide(const Polynomial& a, const Polynomial& b) {
  if (b.isZero()) throw std::domain_error("polynomial division by zero");
  std::vector<Scalar> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Scalar inv = b.leading().inverse();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Scalar q = rem[static_cast<std::size_t>(k + db)] * inv;
    quot[static_cast<std::size_t>(k)] = q;
    if (q.isZero()) continue;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k + j)] -= q * b.coefficients()[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.isZero()) {
    Polynomial r = divide(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial power(const Polynomial& p, std::size_t k) {
  Polynomial r({Scalar(1)});
  for (std::size_t i = 0; i < k; ++i) r = r * p;
  return r;
}

std::vector<Polynomial> squarefreeDecomposition(const Polynomial& p) {
  std::vector<Polynomial> out;
  if (p.degree() <= 0) return out;
  const Polynomial f = p.monic();
  const Polynomial df = f.derivative();
  if (df.isZero()) return {f};  // only reachable in characteristic p
  Polynomial a = gcd(f, df);
  Polynomial b = divide(f, a).quotient;
  Polynomial c = divide(df, a).quotient;
  Polynomial d = c - b.derivative();
  while (b.degree() > 0) {
    Polynomial g = gcd(b, d);
    out.push_back(g);
    b = divide(b, g).quotient;
    c = divide(d, g).quotient;
    d = c - b.derivative();
  }
  return out;
}

namespace {

const mpz_class kTrialLimit("1000000000000");

// Positive divisors of |n| by trial division; empty when n is too large.
std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  if (n == 0 || n > kTrialLimit) return {};
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Scalar> rationalRoots(const Polynomial& p) {
  std::vector<Scalar> roots;
  if (p.degree() <= 0) return roots;
  Polynomial q = p.monic();
  // Strip the root 0.
  std::size_t zeros = 0;
  while (zeros < q.coefficients().size() && q.coefficients()[zeros].isZero()) ++zeros;
  if (zeros > 0) {
    roots.emplace_back(0);
    q = Polynomial(std::vector<Scalar>(q.coefficients().begin() + static_cast<std::ptrdiff_t>(zeros),
                                       q.coefficients().end()));
  }
  if (q.degree() <= 0) return roots;

  std::vector<Scalar> candidates;
  if (FieldMode::isPrime()) {
    if (FieldMode::modulus() <= 100000)
      for (unsigned long r = 1; r < FieldMode::modulus(); ++r) candidates.emplace_back(static_cast<long>(r));
  } else {
    mpz_class lcm = 1;
    for (const auto& c : q.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.value().get_den().get_mpz_t());
    const mpz_class a0 = mpq_class(q.coefficients().front().value() * lcm).get_num();
    const mpz_class an = mpq_class(q.coefficients().back().value() * lcm).get_num();
    for (const auto& num : divisors(a0))
      for (const auto& den : divisors(an)) {
        candidates.emplace_back(mpq_class(num, den));
        candidates.emplace_back(mpq_class(-num, den));
      }
    std::sort(candidates.begin(), candidates.end(),
              [](const Scalar& x, const Scalar& y) { return x.value() < y.value(); });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  }
  for (const auto& r : candidates)
    if (q.evaluate(r).isZero()) roots.push_back(r);
  std::sort(roots.begin(), roots.end(),
            [](const Scalar& x, const Scalar& y) { return x.value() < y.value(); });
  return roots;
}

Polynomial minimalPolynomial(const Matrix& m) {
  if (!m.isSquare()) throw std::invalid_argument("minimalPolynomial: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial({Scalar(1)});
  std::vector<Vector> powers{Matrix::identity(n).flatten()};
  Matrix current = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    current = current * m;
    const Vector flat = current.flatten();
    auto coeffs = solve(Matrix::fromColumns(powers, n * n), flat);
    if (coeffs) {
      std::vector<Scalar> c(k + 1);
      for (std::size_t i = 0; i < k; ++i) c[i] = -(*coeffs)[i];
      c[k] = Scalar(1);
      return Polynomial(std::move(c));
    }
    powers.push_back(flat);
  }
  throw std::logic_error("minimalPolynomial: Cayley-Hamilton violated");
}

std::vector<Polynomial> coprimeFactors(const Polynomial& mu) {
  const auto layers = squarefreeDecomposition(mu);
  std::vector<Polynomial> factors;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const std::size_t mult = i + 1;
    Polynomial rest = layers[i];
    if (rest.degree() <= 0) continue;
    for (const auto& r : rationalRoots(rest)) {
      factors.push_back(power(Polynomial::linear(r), mult));
      rest = divide(rest, Polynomial::linear(r)).quotient;
    }
    if (rest.degree() > 0) factors.push_back(power(rest.monic(), mult));
  }
  return factors;
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.isZero() || b.isZero()) return {};
  return divide(a * b, gcd(a, b)).quotient.monic();
}

std::vector<InvariantPiece> coprimeSplit(const Matrix& m) {
  std::vector<InvariantPiece> out;
  for (auto& f : coprimeFactors(minimalPolynomial(m))) {
    Matrix basis = kernelBasis(f.evaluate(m));
    out.push_back({std::move(f), std::move(basis)});
  }
  return out;
}

}  // namespace tauscope::exactlin
