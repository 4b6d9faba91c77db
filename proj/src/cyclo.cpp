#include "ueps/cyclo.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ueps::cyclo {

namespace {

std::atomic<long> g_cap{720};

// a*b mod nothing: plain polynomial product.
std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                               const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

void poly_trim(std::vector<Rational>& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Remainder of p mod the monic integer polynomial m (in place).
void poly_mod(std::vector<Rational>& p, const std::vector<mpz_class>& m) {
  const size_t dm = m.size() - 1;
  while (p.size() > dm) {
    Rational c = p.back();
    p.pop_back();
    if (c == 0) continue;
    const size_t off = p.size() - dm;
    for (size_t j = 0; j < dm; ++j) {
      if (m[j] == 0) continue;
      p[off + j] -= c * Rational(m[j]);
    }
  }
  p.resize(dm, Rational(0));
}

}  // namespace

long conductor_cap() { return g_cap.load(); }
void set_conductor_cap(long cap) { g_cap.store(cap); }

long euler_phi(long k) {
  long r = k;
  for (long p = 2; p * p <= k; ++p) {
    if (k % p == 0) {
      r -= r / p;
      while (k % p == 0) k /= p;
    }
  }
  if (k > 1) r -= r / k;
  return r;
}

namespace {

// Exact division by a monic divisor, in place; returns the quotient.
std::vector<mpz_class> monic_div(std::vector<mpz_class> num,
                                 const std::vector<mpz_class>& den) {
  std::vector<mpz_class> q(num.size() - den.size() + 1, 0);
  for (long i = (long)q.size() - 1; i >= 0; --i) {
    q[i] = num[i + den.size() - 1];
    if (q[i] == 0) continue;
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= q[i] * den[j];
  }
  return q;
}

const std::vector<mpz_class>& phi_poly(
    long k, std::map<long, std::vector<mpz_class>>& cache) {
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  // Phi_k = (x^k - 1) / prod_{d|k, d<k} Phi_d
  std::vector<mpz_class> num(k + 1, 0);
  num[0] = -1;
  num[k] = 1;
  for (long d = 1; d < k; ++d)
    if (k % d == 0) num = monic_div(std::move(num), phi_poly(d, cache));
  return cache.emplace(k, std::move(num)).first->second;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_poly(long k) {
  static std::map<long, std::vector<mpz_class>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  return phi_poly(k, cache);
}

void Number::reduce_(std::vector<Rational>& poly) {
  poly_mod(poly, cyclotomic_poly(k_));
}

Number::Number(long k, std::vector<Rational> coeffs) : k_(k) {
  if (k < 1) throw std::invalid_argument("conductor must be >= 1");
  if (k > conductor_cap()) throw ConductorCapError(k, conductor_cap());
  if (coeffs.empty()) coeffs.assign(1, Rational(0));
  reduce_(coeffs);
  c_ = std::move(coeffs);
  for (auto& q : c_) q.canonicalize();
}

Number Number::root_of_unity(long k, long j) {
  j %= k;
  if (j < 0) j += k;
  std::vector<Rational> v(j + 1, Rational(0));
  v[j] = 1;
  return Number(k, std::move(v));
}

bool Number::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Rational& q) { return q == 0; });
}

bool Number::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational Number::rational_value() const {
  if (!is_rational()) throw std::logic_error("not a rational element");
  return c_[0];
}

Number Number::lifted(long m) const {
  if (m == k_) return *this;
  if (m % k_ != 0) throw std::invalid_argument("lift target not a multiple");
  if (m > conductor_cap()) throw ConductorCapError(m, conductor_cap());
  const long step = m / k_;
  std::vector<Rational> poly((c_.size() - 1) * step + 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) poly[i * step] = c_[i];
  return Number(m, std::move(poly));
}

namespace {
long lcm_checked(long a, long b) {
  long g = std::gcd(a, b);
  long l = a / g * b;
  if (l > conductor_cap()) throw ConductorCapError(l, conductor_cap());
  return l;
}
}  // namespace

Number Number::operator-() const {
  Number r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Number Number::operator+(const Number& o) const {
  long m = lcm_checked(k_, o.k_);
  Number a = lifted(m), b = o.lifted(m);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

Number Number::operator-(const Number& o) const { return *this + (-o); }

Number Number::operator*(const Number& o) const {
  long m = lcm_checked(k_, o.k_);
  Number a = lifted(m), b = o.lifted(m);
  auto prod = poly_mul(a.c_, b.c_);
  return Number(m, std::move(prod));
}

Number Number::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(zeta)");
  if (is_rational()) return Number(Rational(1) / c_[0]);
  // Extended Euclid in Q[x] against Phi_k: u*a + v*Phi = 1.
  std::vector<Rational> r0, r1 = c_;
  poly_trim(r1);
  for (const auto& z : cyclotomic_poly(k_)) r0.emplace_back(z);
  std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};
  while (!(r1.size() == 1 && r1[0] == 0)) {
    // divide r0 by r1
    std::vector<Rational> q(std::max<long>(1, (long)r0.size() - (long)r1.size() + 1),
                            Rational(0));
    std::vector<Rational> rem = r0;
    for (long i = (long)rem.size() - (long)r1.size(); i >= 0; --i) {
      Rational f = rem[i + r1.size() - 1] / r1.back();
      q[i] = f;
      if (f == 0) continue;
      for (size_t j = 0; j < r1.size(); ++j) rem[i + j] -= f * r1[j];
    }
    poly_trim(rem);
    // s_next = s0 - q*s1
    auto qs = poly_mul(q, s1);
    std::vector<Rational> s2(std::max(s0.size(), qs.size()), Rational(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    poly_trim(s2);
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  // r0 is the gcd (a nonzero constant since Phi_k is irreducible).
  Rational lead = r0[0];
  for (auto& q : s0) q /= lead;
  return Number(k_, std::move(s0));
}

Number Number::operator/(const Number& o) const { return *this * o.inverse(); }

Number Number::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Number acc(1), base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool Number::operator==(const Number& o) const {
  long m = lcm_checked(k_, o.k_);
  Number a = lifted(m), b = o.lifted(m);
  return a.c_ == b.c_;
}

bool Number::operator<(const Number& o) const {
  long m = lcm_checked(k_, o.k_);
  Number a = lifted(m), b = o.lifted(m);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    int c = mpq_cmp(a.c_[i].get_mpq_t(), b.c_[i].get_mpq_t());
    if (c != 0) return c < 0;
  }
  return false;
}

std::string Number::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational q = c_[i];
    if (first) {
      if (q < 0) {
        os << "-";
        q = -q;
      }
    } else {
      os << (q < 0 ? " - " : " + ");
      if (q < 0) q = -q;
    }
    first = false;
    if (i == 0) {
      os << q.get_str();
    } else {
      if (q != 1) os << q.get_str() << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  os << " @ " << k_;
  return os.str();
}

Number Number::parse(const std::string& s) {
  auto at = s.find('@');
  std::string body = (at == std::string::npos) ? s : s.substr(0, at);
  long k = 1;
  if (at != std::string::npos) {
    k = std::stol(s.substr(at + 1));
    if (k < 1) throw std::invalid_argument("bad conductor in: " + s);
  }
  // strip whitespace
  std::string t;
  for (char ch : body)
    if (!isspace((unsigned char)ch)) t.push_back(ch);
  if (t.empty()) throw std::invalid_argument("empty cyclotomic literal");

  Number result(k, {});
  size_t pos = 0;
  while (pos < t.size()) {
    int sign = 1;
    while (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
      if (t[pos] == '-') sign = -sign;
      ++pos;
    }
    if (pos >= t.size()) throw std::invalid_argument("dangling sign in: " + s);
    Rational coeff(1);
    bool saw_num = false;
    size_t start = pos;
    while (pos < t.size() && (isdigit((unsigned char)t[pos]) || t[pos] == '/'))
      ++pos;
    if (pos > start) {
      coeff = Rational(t.substr(start, pos - start));
      coeff.canonicalize();
      saw_num = true;
    }
    long expo = 0;
    if (pos < t.size() && (t[pos] == '*' || t[pos] == 'z')) {
      if (t[pos] == '*') ++pos;
      if (pos >= t.size() || t[pos] != 'z')
        throw std::invalid_argument("expected z in: " + s);
      ++pos;
      expo = 1;
      if (pos < t.size() && t[pos] == '^') {
        ++pos;
        size_t es = pos;
        while (pos < t.size() && isdigit((unsigned char)t[pos])) ++pos;
        if (pos == es) throw std::invalid_argument("bad exponent in: " + s);
        expo = std::stol(t.substr(es, pos - es));
      }
    } else if (!saw_num) {
      throw std::invalid_argument("bad term in: " + s);
    }
    std::vector<Rational> v(expo + 1, Rational(0));
    v[expo] = sign * coeff;
    result += Number(k, std::move(v));
  }
  return result;
}

bool Number::as_rational_times_root(Rational& r, long& m) const {
  if (is_zero()) {
    r = 0;
    m = 0;
    return true;
  }
  for (long j = 0; j < k_; ++j) {
    Number t = *this * root_of_unity(k_, (k_ - j) % k_);
    if (t.is_rational()) {
      r = t.rational_value();
      m = j;
      return true;
    }
  }
  return false;
}

Number Number::principal_root(long d) const {
  if (d < 1) throw std::invalid_argument("root order must be positive");
  if (d == 1) return *this;
  if (is_zero()) return Number(0);
  Rational r;
  long m = 0;
  if (!as_rational_times_root(r, m))
    throw RootExtractionError("no rational*root-of-unity form for " + str());

  // Fold the sign into the root-of-unity part.
  long K = k_;
  if (r < 0) {
    K = lcm_checked(k_, 2);
    m = m * (K / k_) + K / 2;
    m %= K;
    r = -r;
  }
  // The rational part must be an exact d-th power in Q.
  mpz_class num = r.get_num(), den = r.get_den(), rn, rd;
  int okn = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), (unsigned long)d);
  int okd = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), (unsigned long)d);
  if (!okn || !okd)
    throw RootExtractionError("rational part " + r.get_str() +
                              " is not an exact power of order " +
                              std::to_string(d));
  Rational base(rn, rd);
  base.canonicalize();

  long DK = d * K;
  if (DK > conductor_cap()) throw ConductorCapError(DK, conductor_cap());
  Number best;
  bool have = false;
  for (long j = 0; j < d; ++j) {
    Number cand = Number(base) * root_of_unity(DK, m + j * K);
    if (!(cand.pow(d) == *this)) continue;  // sign-of-rational subtlety guard
    if (!have || cand < best) {
      best = cand;
      have = true;
    }
  }
  if (!have)
    throw RootExtractionError("no cyclotomic root of order " +
                              std::to_string(d) + " for " + str());
  return best;
}

void require_primitive_root(const Number& eps, long ell) {
  if (ell < 3 || ell % 2 == 0)
    throw std::invalid_argument("order must be odd and >= 3");
  if (!(eps.pow(ell) == Number(1)))
    throw std::invalid_argument("not a root of unity of order " +
                                std::to_string(ell));
  for (long j = 1; j < ell; ++j)
    if (ell % j == 0 && eps.pow(j) == Number(1))
      throw std::invalid_argument("root of unity of smaller order " +
                                  std::to_string(j));
}

Number q_int(long n, const Number& eps, long ell) {
  require_primitive_root(eps, ell);
  Number num = eps.pow(n) - eps.pow(-n);
  return num / (eps - eps.pow(-1));
}

Number q_factorial(long n, const Number& eps, long ell) {
  require_primitive_root(eps, ell);
  Number acc(1);
  for (long j = 2; j <= n; ++j)
    acc *= (eps.pow(j) - eps.pow(-j)) / (eps - eps.pow(-1));
  return acc;
}

Number q_binomial(long n, long m, const Number& eps, long ell) {
  require_primitive_root(eps, ell);
  if (m < 0 || m > n) return Number(0);
  // [n m] = eps^m [n-1 m] + eps^{m-n} [n-1 m-1]
  std::vector<std::vector<Number>> tab(n + 1);
  for (long i = 0; i <= n; ++i) {
    tab[i].resize(i + 1);
    for (long j = 0; j <= i; ++j) {
      if (j == 0 || j == i)
        tab[i][j] = Number(1);
      else
        tab[i][j] = eps.pow(j) * tab[i - 1][j] +
                    eps.pow(j - i) * tab[i - 1][j - 1];
    }
  }
  return tab[n][m];
}

}  // namespace ueps::cyclo
