#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

namespace tauscope::exactlin {

// Field of scalars for the current session.  Modulus 0 means the rationals;
// a prime p switches every Scalar to residues mod p.  Set once, before any
// Scalar is created.
class FieldMode {
 public:
  static void useRationals();
  static void usePrime(unsigned long p);
  static bool isPrime() { return modulus_ != 0; }
  static unsigned long modulus() { return modulus_; }

 private:
  static inline unsigned long modulus_ = 0;
};

// Exact scalar: a reduced rational (positive denominator), or a residue in
// [0, p) in prime-field mode.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : v_(v) { normalise(); }           // NOLINT
  Scalar(int v) : v_(v) { normalise(); }            // NOLINT
  Scalar(long num, long den) : v_(num, den) {
    v_.canonicalize();
    normalise();
  }
  explicit Scalar(const mpq_class& v) : v_(v) {
    v_.canonicalize();
    normalise();
  }

  // Parses "p", "-p", "p/q".
  static Scalar parse(const std::string& text);

  const mpq_class& value() const { return v_; }
  bool isZero() const { return sgn(v_) == 0; }
  bool isOne() const { return v_ == 1; }
  std::string str() const;

  Scalar& operator+=(const Scalar& o) {
    v_ += o.v_;
    normalise();
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    v_ -= o.v_;
    normalise();
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    v_ *= o.v_;
    normalise();
    return *this;
  }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(0) - *this; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.str();
  }

  Scalar inverse() const { return Scalar(1) / *this; }

 private:
  void normalise() {
    if (FieldMode::isPrime()) reduceModP();
  }
  void reduceModP();

  mpq_class v_;
};

}  // namespace tauscope::exactlin
