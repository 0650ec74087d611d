#include "tauscope/scalar.hpp"

#include <stdexcept>

namespace tauscope::exactlin {

void FieldMode::useRationals() { modulus_ = 0; }

void FieldMode::usePrime(unsigned long p) {
  if (p < 2 || mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 30) == 0)
    throw std::invalid_argument("field modulus must be prime, got " + std::to_string(p));
  modulus_ = p;
}

void Scalar::reduceModP() {
  const mpz_class p(FieldMode::modulus());
  mpz_class num = v_.get_num() % p;
  if (v_.get_den() != 1) {
    mpz_class den = v_.get_den() % p;
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw std::domain_error("denominator divisible by the field characteristic");
    num = (num * inv) % p;
  }
  if (num < 0) num += p;
  v_ = mpq_class(num);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.isZero()) throw std::domain_error("division by zero");
  if (FieldMode::isPrime()) {
    const mpz_class p(FieldMode::modulus());
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), o.v_.get_num().get_mpz_t(), p.get_mpz_t());
    v_ = mpq_class((v_.get_num() * inv) % p);
    return *this;
  }
  v_ /= o.v_;
  return *this;
}

Scalar Scalar::parse(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("not a rational number: '" + text + "'");
  return Scalar(q);
}

std::string Scalar::str() const { return v_.get_str(); }

}  // namespace tauscope::exactlin
