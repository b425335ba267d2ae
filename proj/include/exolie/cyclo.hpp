#pragma once

// Exact cyclotomic field arithmetic.
//
// A value is a rational polynomial in zeta_N (the primitive N-th root of
// unity exp(2*pi*i/N)) of degree < phi(N), reduced modulo the N-th
// cyclotomic polynomial.  Conductors are kept in the set {1} u {N >= 3,
// N != 2 mod 4}; mixed-conductor arithmetic lifts lazily to the lcm and
// reduction to the minimal conductor happens only on demand.

#include "exolie/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace exolie {

namespace detail {

inline long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      r -= r / p;
      while (n % p == 0) n /= p;
    }
  if (n > 1) r -= r / n;
  return r;
}

// Exact division of integer polynomials (little-endian coefficients).
inline std::vector<Integer> poly_div(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> r = a, q(a.size() - b.size() + 1);
  for (long i = (long)q.size() - 1; i >= 0; --i) {
    Integer f = r[i + b.size() - 1] / b.back();
    q[i] = f;
    if (f != 0)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] -= f * b[j];
  }
  return q;
}

inline const std::vector<Integer>& cyclotomic_poly(long n) {
  static std::map<long, std::vector<Integer>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // x^n - 1 divided by the product of Phi_d over proper divisors d.
  std::function<const std::vector<Integer>&(long)> get = [&](long m) -> const std::vector<Integer>& {
    auto jt = cache.find(m);
    if (jt != cache.end()) return jt->second;
    std::vector<Integer> p(m + 1);
    p[0] = -1;
    p[m] = 1;
    for (long d = 1; d < m; ++d)
      if (m % d == 0) p = poly_div(p, get(d));
    return cache.emplace(m, std::move(p)).first->second;
  };
  return get(n);
}

struct CycloTable {
  long n = 1;
  long phi = 1;
  // pow[e] = coefficients of x^e mod Phi_n, for e in [0, max(n, 2*phi-1)).
  std::vector<std::vector<Rational>> pow;
};

inline const CycloTable& cyclo_table(long n) {
  static std::map<long, CycloTable> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  CycloTable t;
  t.n = n;
  t.phi = euler_phi(n);
  const auto& cp = cyclotomic_poly(n);
  long rows = std::max(n, 2 * t.phi - 1);
  t.pow.resize(rows);
  for (long e = 0; e < rows; ++e) {
    if (e < t.phi) {
      t.pow[e].assign(t.phi, Rational(0));
      t.pow[e][e] = 1;
    } else {
      // x^e = x * x^(e-1), then cancel the x^phi term via Phi_n (monic).
      std::vector<Rational> v(t.phi + 1, Rational(0));
      for (long j = 0; j < t.phi; ++j) v[j + 1] = t.pow[e - 1][j];
      Rational lead = v[t.phi];
      t.pow[e].assign(t.phi, Rational(0));
      for (long j = 0; j < t.phi; ++j) t.pow[e][j] = v[j] - lead * Rational(cp[j]);
    }
  }
  return cache.emplace(n, std::move(t)).first->second;
}

}  // namespace detail

class Cyclo {
 public:
  Cyclo() : n_(1), c_(1, Rational(0)) {}
  Cyclo(const Rational& q) : n_(1), c_(1, q) {}
  Cyclo(long v) : n_(1), c_(1, Rational(v)) {}
  Cyclo(int v) : n_(1), c_(1, Rational(v)) {}

  // zeta_n^k, conductor-normalized.
  static Cyclo zeta(long n, long k = 1) {
    k %= n;
    if (k < 0) k += n;
    // Strip the factor shared with the exponent.
    long g = std::gcd(k == 0 ? n : k, n);
    if (k == 0) return Cyclo(1);
    n /= g;
    k /= g;
    if (n == 1) return Cyclo(1);
    if (n == 2) return Cyclo(-1);
    if (n % 4 == 2) {
      // zeta_{2m}^k with m odd, k odd: equals -zeta_m^{(k+m)/2 mod m}.
      long m = n / 2;
      Cyclo r = zeta(m, ((k + m) / 2) % m);
      return r * Cyclo(-1);
    }
    Cyclo r;
    r.n_ = n;
    const auto& t = detail::cyclo_table(n);
    r.c_ = t.pow[k];
    return r;
  }

  long conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& q : c_)
      if (q != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (size_t j = 1; j < c_.size(); ++j)
      if (c_[j] != 0) return false;
    return true;
  }
  Rational rational_value() const {
    if (!is_rational()) throw std::runtime_error("Cyclo: not a rational value");
    return c_[0];
  }

  // Lift to a larger conductor (m must be a multiple of the current one).
  Cyclo lifted(long m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw std::runtime_error("Cyclo: bad lift target");
    Cyclo r;
    r.n_ = m;
    const auto& t = detail::cyclo_table(m);
    r.c_.assign(t.phi, Rational(0));
    long step = m / n_;
    for (size_t j = 0; j < c_.size(); ++j) {
      if (c_[j] == 0) continue;
      const auto& row = t.pow[(long)j * step];
      for (long i = 0; i < t.phi; ++i) r.c_[i] += c_[j] * row[i];
    }
    return r;
  }

  friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    if (a.n_ == b.n_) {
      Cyclo r = a;
      for (size_t j = 0; j < r.c_.size(); ++j) r.c_[j] += b.c_[j];
      return r;
    }
    long m = lcm_long(a.n_, b.n_);
    return a.lifted(m) + b.lifted(m);
  }
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (b * Cyclo(-1)); }
  Cyclo operator-() const { return *this * Cyclo(-1); }

  friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    if (a.n_ == 1) return b.scaled(a.c_[0]);
    if (b.n_ == 1) return a.scaled(b.c_[0]);
    if (a.n_ != b.n_) {
      long m = lcm_long(a.n_, b.n_);
      return a.lifted(m) * b.lifted(m);
    }
    const auto& t = detail::cyclo_table(a.n_);
    std::vector<Rational> conv(2 * t.phi - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j)
        if (b.c_[j] != 0) conv[i + j] += a.c_[i] * b.c_[j];
    }
    Cyclo r;
    r.n_ = a.n_;
    r.c_.assign(t.phi, Rational(0));
    for (long j = 0; j < t.phi; ++j) r.c_[j] = conv[j];
    for (long e = t.phi; e < (long)conv.size(); ++e) {
      if (conv[e] == 0) continue;
      const auto& row = t.pow[e];
      for (long j = 0; j < t.phi; ++j) r.c_[j] += conv[e] * row[j];
    }
    return r;
  }

  Cyclo& operator+=(const Cyclo& b) { return *this = *this + b; }
  Cyclo& operator-=(const Cyclo& b) { return *this = *this - b; }
  Cyclo& operator*=(const Cyclo& b) { return *this = *this * b; }

  friend bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.n_ == b.n_) return a.c_ == b.c_;
    long m = lcm_long(a.n_, b.n_);
    return a.lifted(m).c_ == b.lifted(m).c_;
  }
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  // Galois action zeta -> zeta^k, gcd(k, n) = 1.
  Cyclo galois(long k) const {
    if (n_ == 1) return *this;
    k %= n_;
    if (k < 0) k += n_;
    if (std::gcd(k, n_) != 1) throw std::runtime_error("Cyclo: galois exponent not coprime");
    const auto& t = detail::cyclo_table(n_);
    Cyclo r;
    r.n_ = n_;
    r.c_.assign(t.phi, Rational(0));
    for (size_t j = 0; j < c_.size(); ++j) {
      if (c_[j] == 0) continue;
      const auto& row = t.pow[((long)j * k) % n_];
      for (long i = 0; i < t.phi; ++i) r.c_[i] += c_[j] * row[i];
    }
    return r;
  }

  // Complex conjugation.
  Cyclo conj() const { return n_ == 1 ? *this : galois(n_ - 1); }

  Cyclo inverse() const {
    if (is_zero()) throw std::runtime_error("Cyclo: division by zero");
    if (n_ == 1) return Cyclo(Rational(1) / c_[0]);
    // Monomial fast path: (c * zeta^j)^-1 = (1/c) * zeta^(n-j).
    long nz = -1;
    bool monomial = true;
    for (size_t j = 0; j < c_.size(); ++j)
      if (c_[j] != 0) {
        if (nz >= 0) {
          monomial = false;
          break;
        }
        nz = (long)j;
      }
    if (monomial) return zeta(n_, n_ - nz).scaled(Rational(1) / c_[nz]);
    // Norm trick: 1/a = (product of the other conjugates) / Norm(a).
    Cyclo prod(Rational(1));
    for (long k = 2; k < n_; ++k) {
      if (std::gcd(k, n_) != 1) continue;
      prod = prod * galois(k);
    }
    Cyclo full = *this * prod;  // the field norm, a rational
    if (!full.is_rational()) throw std::runtime_error("Cyclo: norm not rational");
    Rational nm = full.rational_value();
    if (nm == 0) throw std::runtime_error("Cyclo: division by zero");
    return prod.scaled(Rational(1) / nm);
  }
  friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

  Cyclo pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo r(1), base = *this;
    while (e) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  // Minimal-conductor form (on demand; arithmetic never calls this).
  Cyclo reduced() const {
    if (n_ == 1) return *this;
    if (is_rational()) return Cyclo(c_[0]);
    std::vector<long> divs;
    for (long d = 1; d <= n_; ++d)
      if (n_ % d == 0 && (d == 1 || d % 4 != 2)) divs.push_back(d);
    std::sort(divs.begin(), divs.end(), [](long a, long b) {
      long pa = detail::euler_phi(a), pb = detail::euler_phi(b);
      return pa != pb ? pa < pb : a < b;
    });
    for (long d : divs) {
      if (d == n_) break;
      auto r = try_express(d);
      if (r) return *r;
    }
    return *this;
  }

  // Order as a root of unity; 0 if not one.
  long unity_order() const {
    if (is_zero()) return 0;
    long bound = (n_ % 2 == 1) ? 2 * n_ : n_;
    if (pow(bound) != Cyclo(1)) return 0;
    long best = bound;
    for (long d = 1; d * d <= bound; ++d)
      if (bound % d == 0) {
        if (pow(d) == Cyclo(1)) return d;
        if (pow(bound / d) == Cyclo(1)) best = std::min(best, bound / d);
      }
    return best;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (size_t j = 0; j < c_.size(); ++j) {
      if (c_[j] == 0) continue;
      if (!first) out += " + ";
      first = false;
      if (j == 0) {
        out += rational_str(c_[0]);
      } else {
        if (c_[j] != 1) out += rational_str(c_[j]) + "*";
        out += "z(" + std::to_string(n_) + ")";
        if (j > 1) out += "^" + std::to_string(j);
      }
    }
    return out;
  }

  static Cyclo parse(const std::string& s);

  // Scale by a rational without conductor churn.
  Cyclo scaled(const Rational& q) const {
    if (q == 0) return Cyclo();
    Cyclo r = *this;
    for (auto& x : r.c_) x *= q;
    return r;
  }

 private:
  // Try to express this value inside Q(zeta_d); returns nullopt on failure.
  std::optional<Cyclo> try_express(long d) const {
    const auto& td = detail::cyclo_table(d);
    // Columns: lifts of zeta_d^j into the current conductor's basis.
    long phi_n = (long)c_.size();
    std::vector<std::vector<Rational>> cols(td.phi);
    for (long j = 0; j < td.phi; ++j) {
      Cyclo b = Cyclo::zeta(d, j);
      if (j == 0) b = Cyclo(1);
      cols[j] = b.lifted(n_).c_;
    }
    // Solve cols * y = c_ by Gaussian elimination.
    long rows = phi_n, ncols = td.phi;
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(ncols + 1));
    for (long i = 0; i < rows; ++i) {
      for (long j = 0; j < ncols; ++j) m[i][j] = cols[j][i];
      m[i][ncols] = c_[i];
    }
    long rank = 0;
    std::vector<long> pivot_col(rows, -1);
    for (long col = 0; col < ncols && rank < rows; ++col) {
      long piv = -1;
      for (long i = rank; i < rows; ++i)
        if (m[i][col] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      std::swap(m[rank], m[piv]);
      Rational inv = Rational(1) / m[rank][col];
      for (long j = col; j <= ncols; ++j) m[rank][j] *= inv;
      for (long i = 0; i < rows; ++i)
        if (i != rank && m[i][col] != 0) {
          Rational f = m[i][col];
          for (long j = col; j <= ncols; ++j) m[i][j] -= f * m[rank][j];
        }
      pivot_col[rank] = col;
      ++rank;
    }
    for (long i = rank; i < rows; ++i)
      if (m[i][ncols] != 0) return std::nullopt;
    Cyclo r;
    r.n_ = d;
    r.c_.assign(td.phi, Rational(0));
    for (long i = 0; i < rank; ++i) r.c_[pivot_col[i]] = m[i][ncols];
    return r;
  }

  long n_;
  std::vector<Rational> c_;
};

// ---- Parsing of the textual grammar "a0 + a1*z(N)^1 + ..." -----------------

namespace detail {

struct CycloParser {
  const std::string& s;
  size_t i = 0;
  explicit CycloParser(const std::string& str) : s(str) {}

  void skip_ws() {
    while (i < s.size() && isspace((unsigned char)s[i])) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  long parse_long() {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && isdigit((unsigned char)s[i])) ++i;
    if (start == i) throw std::runtime_error("Cyclo parse: expected integer in '" + s + "'");
    return std::stol(s.substr(start, i - start));
  }
  Rational parse_rat() {
    long n = parse_long();
    if (eat('/')) {
      long d = parse_long();
      return Rational(n, d);
    }
    return Rational(n);
  }
  // term := rational | rational '*' z-part | ['-'] z-part
  Cyclo parse_term() {
    skip_ws();
    Rational coef(1);
    bool have_coef = false;
    if (i < s.size() && (isdigit((unsigned char)s[i]) || s[i] == '-' || s[i] == '+')) {
      if (s[i] == '-' && i + 1 < s.size() && s[i + 1] == 'z') {
        coef = -1;
        ++i;
      } else {
        coef = parse_rat();
      }
      have_coef = true;
    }
    if (have_coef) eat('*');
    skip_ws();
    if (i < s.size() && s[i] == 'z') {
      ++i;
      if (!eat('(')) throw std::runtime_error("Cyclo parse: expected ( after z");
      long n = parse_long();
      if (!eat(')')) throw std::runtime_error("Cyclo parse: expected )");
      long k = 1;
      if (eat('^')) k = parse_long();
      return Cyclo::zeta(n, k).scaled(coef);
    }
    if (!have_coef) throw std::runtime_error("Cyclo parse: empty term in '" + s + "'");
    return Cyclo(coef);
  }
  Cyclo parse_sum() {
    Cyclo total = parse_term();
    while (true) {
      skip_ws();
      if (i >= s.size()) break;
      if (s[i] == '+') {
        ++i;
        total += parse_term();
      } else if (s[i] == '-') {
        // "a -b" parses as a + (-b); the '-' stays with the term.
        total += parse_term();
      } else {
        throw std::runtime_error("Cyclo parse: trailing junk in '" + s + "'");
      }
    }
    return total;
  }
};

}  // namespace detail

inline Cyclo Cyclo::parse(const std::string& s) {
  detail::CycloParser p(s);
  Cyclo r = p.parse_sum();
  return r;
}

// Convenience constants.
inline Cyclo cyc_i() { return Cyclo::zeta(4); }
inline Cyclo cyc_omega() { return Cyclo::zeta(3); }
inline Cyclo cyc_sqrt2() { return Cyclo::zeta(8) + Cyclo::zeta(8, 7); }
inline Cyclo cyc_sqrt3() { return Cyclo::zeta(12) + Cyclo::zeta(12, 11); }
inline Cyclo cyc_sqrt5() { return Cyclo(1) + (Cyclo::zeta(5) + Cyclo::zeta(5, 4)).scaled(2); }
// cos(2*pi*q) and sin(2*pi*q) for rational q.
inline Cyclo cyc_cos(const Rational& q) {
  Rational f = frac_mod1(q);
  long N = to_long(den(f));
  long K = to_long(num(f));
  return (Cyclo::zeta(N, K) + Cyclo::zeta(N, N - K)).scaled(Rational(1, 2));
}
inline Cyclo cyc_sin(const Rational& q) {
  // sin = (zeta - conj(zeta)) / (2i), and 1/i = -i = zeta_4^3.
  Rational f = frac_mod1(q);
  long N = to_long(den(f));
  long K = to_long(num(f));
  Cyclo diff = Cyclo::zeta(N, K) - Cyclo::zeta(N, N - K);
  return diff * Cyclo::zeta(4, 3).scaled(Rational(1, 2));
}
// e^{2*pi*i*q} for rational q (as an exact root of unity).
inline Cyclo cyc_exp(const Rational& q) {
  Rational f = frac_mod1(q);
  return Cyclo::zeta(to_long(den(f)), to_long(num(f)));
}

}  // namespace exolie
