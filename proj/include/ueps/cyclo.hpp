#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_k).
//
// An element is stored in the power basis 1, z, ..., z^{phi(k)-1} of the
// k-th cyclotomic field, with exact rational coefficients, reduced modulo
// the k-th cyclotomic polynomial.  Operands with different conductors are
// lifted to Q(zeta_lcm) before combining; the lcm is subject to a runtime
// cap so that root extractions cannot silently explode the working field.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ueps::cyclo {

using Rational = mpq_class;

// Raised when an operation would need a conductor above the configured cap.
struct ConductorCapError : std::runtime_error {
  explicit ConductorCapError(long needed, long cap)
      : std::runtime_error("conductor " + std::to_string(needed) +
                           " exceeds cap " + std::to_string(cap)),
        needed(needed), cap(cap) {}
  long needed;
  long cap;
};

struct RootExtractionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Process-wide conductor cap (default 720 = 2*3*120).
long conductor_cap();
void set_conductor_cap(long cap);

long euler_phi(long k);
// Cyclotomic polynomial Phi_k, monic, as integer coefficient vector
// (index = degree).  Cached.
const std::vector<mpz_class>& cyclotomic_poly(long k);

class Number {
 public:
  // Zero in Q.
  Number() : k_(1), c_(1, Rational(0)) {}
  // Rational constant.
  Number(const Rational& r) : k_(1), c_(1, r) {}
  Number(long n) : k_(1), c_(1, Rational(n)) {}
  // From coefficient vector in the power basis of Q(zeta_k); the vector is
  // reduced mod Phi_k and truncated/padded to length phi(k).
  Number(long k, std::vector<Rational> coeffs);

  // zeta_k^j
  static Number root_of_unity(long k, long j = 1);

  long conductor() const { return k_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const { return *this == Number(1); }
  bool is_rational() const;
  // Valid only when is_rational().
  Rational rational_value() const;

  Number operator-() const;
  Number operator+(const Number& o) const;
  Number operator-(const Number& o) const;
  Number operator*(const Number& o) const;
  Number operator/(const Number& o) const;  // throws on o == 0
  Number& operator+=(const Number& o) { return *this = *this + o; }
  Number& operator-=(const Number& o) { return *this = *this - o; }
  Number& operator*=(const Number& o) { return *this = *this * o; }
  Number& operator/=(const Number& o) { return *this = *this / o; }

  Number inverse() const;
  Number pow(long e) const;  // integer power, negative allowed for units

  bool operator==(const Number& o) const;
  bool operator!=(const Number& o) const { return !(*this == o); }
  // Total order used for deterministic tie-breaking (conductor, then
  // coefficient lex).  Not a field order.
  bool operator<(const Number& o) const;

  // Lift into Q(zeta_m); m must be a multiple of the conductor.
  Number lifted(long m) const;

  // Textual form "a0 + a1*z + ... @ k" with exact rationals.
  std::string str() const;
  static Number parse(const std::string& s);

  // If *this == r * zeta_k^m for a rational r, return true and fill r, m.
  bool as_rational_times_root(Rational& r, long& m) const;

  // Principal d-th root: the d-th root (when one exists among
  // rational-times-root-of-unity candidates) whose coefficient vector is
  // lexicographically least at the common conductor.  Throws
  // RootExtractionError when the element has no such root in a cyclotomic
  // field of admissible conductor.
  Number principal_root(long d) const;

 private:
  void reduce_(std::vector<Rational>& poly);

  long k_;
  std::vector<Rational> c_;  // length phi(k_)
};

inline Number operator*(long a, const Number& b) { return Number(a) * b; }
inline Number operator+(long a, const Number& b) { return Number(a) + b; }
inline Number operator-(long a, const Number& b) { return Number(a) - b; }

// q-combinatorics at a primitive ell-th root eps, ell odd >= 3.
// [n] = (eps^n - eps^{-n}) / (eps - eps^{-1}).
Number q_int(long n, const Number& eps, long ell);
Number q_factorial(long n, const Number& eps, long ell);
// Gaussian binomial evaluated at eps via the Pascal recurrence, so root-of-
// unity specializations never hit a removable 0/0.
Number q_binomial(long n, long m, const Number& eps, long ell);

// Checks that eps is a root of unity of exact order ell (throws otherwise).
void require_primitive_root(const Number& eps, long ell);

}  // namespace ueps::cyclo
