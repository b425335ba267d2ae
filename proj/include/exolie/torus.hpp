#pragma once
// Rational torus elements.  An element is a vector x of rationals in coroot
// coordinates, standing for exp(2*pi*i*x); the value alpha(x) of a root gives
// the adjoint eigenvalue e^{2*pi*i*alpha(x)} on the root line.
//
// Orders: in the simply connected group the order is the lcm of the
// coordinate denominators (coroot lattice = Z^r in these coordinates); in the
// adjoint group it is the lcm of the denominators of the simple-root values
// C x (coweight lattice = C^{-1} Z^r).
//
// Kac coordinates: the affine alcove walk reduces x by simple and affine
// reflections; the normalized tuple (s_0, ..., s_r) with gcd 1 satisfies
// sum a_i s_i = adjoint order (a_0 = 1, a_i = marks of the highest root).

#include <numeric>
#include <stdexcept>
#include <vector>

#include "exolie/numeric.hpp"
#include "exolie/roots.hpp"

namespace exolie {

// Rotation subgroup of the affine-diagram automorphisms (the action of the
// center on alcove/Kac data).  Node 0 is the affine node; node i>=1 is the
// i-th simple root.  Each entry maps node index to its image.
inline const std::vector<std::vector<long>>& omega_rotations(const RootSystem& rs) {
  static const std::vector<std::vector<long>> e6{
      {0, 1, 2, 3, 4, 5, 6},
      {1, 6, 3, 5, 4, 2, 0},   // arm rotation (0,2)->(1,3)->(6,5)->(0,2)
      {6, 0, 5, 2, 4, 3, 1}};  // its square
  static const std::vector<std::vector<long>> e7{
      {0, 1, 2, 3, 4, 5, 6, 7},
      {7, 6, 2, 5, 4, 3, 1, 0}};  // end-for-end flip
  static const std::vector<std::vector<long>> e8{{0, 1, 2, 3, 4, 5, 6, 7, 8}};
  if (rs.name() == "e6") return e6;
  if (rs.name() == "e7") return e7;
  if (rs.name() == "e8") return e8;
  throw std::invalid_argument("omega_rotations: unknown system");
}

class TorusElement {
 public:
  explicit TorusElement(const RootSystem& rs) : rs_(&rs), x_(rs.rank(), Rational(0)) {}
  TorusElement(const RootSystem& rs, std::vector<Rational> coords)
      : rs_(&rs), x_(std::move(coords)) {
    if ((long)x_.size() != rs.rank()) throw std::invalid_argument("torus coord size");
  }

  // Element with prescribed simple-root values mu_i = alpha_i(x).
  static TorusElement from_alpha_values(const RootSystem& rs, const std::vector<Rational>& mu) {
    auto x = solve(rs.cartan_qmat(), mu);
    if (!x) throw std::logic_error("cartan matrix singular");
    return TorusElement(rs, *x);
  }

  // x = (fundamental coweight i) / denom.
  static TorusElement coweight(const RootSystem& rs, long i, long denom = 1) {
    auto w = rs.fundamental_coweight(i);
    for (auto& v : w) v /= denom;
    return TorusElement(rs, std::move(w));
  }

  const RootSystem& system() const { return *rs_; }
  const std::vector<Rational>& coords() const { return x_; }

  Rational alpha_value(long rootidx) const {
    const RootCoords& a = rs_->root(rootidx);
    std::vector<Rational> cx = simple_values();
    Rational v(0);
    for (long i = 0; i < rs_->rank(); ++i)
      if (a[i] != 0) v += Rational(a[i]) * cx[i];
    return v;
  }

  std::vector<Rational> simple_values() const {
    long r = rs_->rank();
    std::vector<Rational> out(r, Rational(0));
    for (long i = 0; i < r; ++i)
      for (long j = 0; j < r; ++j)
        if (rs_->cartan(i, j) != 0) out[i] += Rational(rs_->cartan(i, j)) * x_[j];
    return out;
  }

  long order_sc() const {
    long m = 1;
    for (const Rational& v : x_) m = lcm_long(m, rational_denominator(v));
    return m;
  }

  long order_adjoint() const {
    long m = 1;
    for (const Rational& v : simple_values()) m = lcm_long(m, rational_denominator(v));
    return m;
  }

  bool is_identity_sc() const { return order_sc() == 1; }
  bool is_identity_adjoint() const { return order_adjoint() == 1; }

  TorusElement reduced() const {
    std::vector<Rational> y(x_.size());
    for (size_t i = 0; i < x_.size(); ++i) y[i] = frac_mod1(x_[i]);
    return TorusElement(*rs_, std::move(y));
  }

  TorusElement operator+(const TorusElement& o) const {
    std::vector<Rational> y(x_.size());
    for (size_t i = 0; i < x_.size(); ++i) y[i] = x_[i] + o.x_[i];
    return TorusElement(*rs_, std::move(y));
  }
  TorusElement operator-() const {
    std::vector<Rational> y(x_.size());
    for (size_t i = 0; i < x_.size(); ++i) y[i] = -x_[i];
    return TorusElement(*rs_, std::move(y));
  }
  TorusElement times(long k) const {
    std::vector<Rational> y(x_.size());
    for (size_t i = 0; i < x_.size(); ++i) y[i] = Rational(k) * x_[i];
    return TorusElement(*rs_, std::move(y));
  }

  // Equality in the simply connected torus (mod coroot lattice).
  bool operator==(const TorusElement& o) const {
    for (size_t i = 0; i < x_.size(); ++i)
      if (frac_mod1(x_[i] - o.x_[i]) != 0) return false;
    return true;
  }
  bool operator!=(const TorusElement& o) const { return !(*this == o); }

  // Equality in the adjoint torus (mod coweight lattice).
  bool same_adjoint(const TorusElement& o) const {
    auto a = simple_values(), b = o.simple_values();
    for (size_t i = 0; i < a.size(); ++i)
      if (frac_mod1(a[i] - b[i]) != 0) return false;
    return true;
  }

  // Roots alpha with alpha(x) integral (the centralizer's root system).
  std::vector<long> fixed_roots() const {
    std::vector<long> out;
    std::vector<Rational> cx = simple_values();
    for (long idx = 0; idx < rs_->nroots(); ++idx) {
      const RootCoords& a = rs_->root(idx);
      Rational v(0);
      for (long i = 0; i < rs_->rank(); ++i)
        if (a[i] != 0) v += Rational(a[i]) * cx[i];
      if (frac_mod1(v) == 0) out.push_back(idx);
    }
    return out;
  }

  static std::vector<long> joint_fixed_roots(const std::vector<TorusElement>& elems) {
    if (elems.empty()) throw std::invalid_argument("joint_fixed_roots: empty");
    std::vector<long> acc = elems[0].fixed_roots();
    for (size_t k = 1; k < elems.size(); ++k) {
      std::vector<char> keep(elems[k].system().nroots(), 0);
      for (long r : elems[k].fixed_roots()) keep[r] = 1;
      std::vector<long> next;
      for (long r : acc)
        if (keep[r]) next.push_back(r);
      acc = std::move(next);
    }
    return acc;
  }

  // dim of the centralizer (fixed subalgebra) of exp(2 pi i x): rank + fixed roots.
  long dim_fixed() const { return rs_->rank() + (long)fixed_roots().size(); }

  TorusElement reflect(long i) const {
    std::vector<Rational> y = x_;
    Rational v(0);
    for (long j = 0; j < rs_->rank(); ++j)
      if (rs_->cartan(i, j) != 0) v += Rational(rs_->cartan(i, j)) * x_[j];
    y[i] -= v;
    return TorusElement(*rs_, std::move(y));
  }

  TorusElement weyl_apply(const std::vector<long>& word) const {
    TorusElement t = *this;
    for (auto it = word.rbegin(); it != word.rend(); ++it) t = t.reflect(*it);
    return t;
  }

  struct Kac {
    std::vector<long> s;  // s[0] affine, s[i] = node alpha_i
    long order = 0;       // = sum a_i s_i = adjoint order
    bool operator==(const Kac& o) const { return s == o.s && order == o.order; }
  };

  // Alcove walk; canonical per simply-connected conjugacy class.
  Kac kac() const {
    long r = rs_->rank();
    RootCoords marks = rs_->marks();
    TorusElement t = reduced();
    for (long guard = 0;; ++guard) {
      if (guard > 200000) throw std::logic_error("alcove walk did not terminate");
      std::vector<Rational> vals = t.simple_values();
      long neg = -1;
      for (long i = 0; i < r && neg < 0; ++i)
        if (vals[i] < 0) neg = i;
      if (neg >= 0) {
        t.x_[neg] -= vals[neg];
        continue;
      }
      Rational bval(0);
      for (long i = 0; i < r; ++i) bval += Rational(marks[i]) * vals[i];
      if (bval > 1) {
        // affine reflection across {beta = 1}: x -> x - (beta(x)-1) beta-coroot
        for (long i = 0; i < r; ++i) t.x_[i] -= (bval - 1) * Rational(marks[i]);
        continue;
      }
      // In the alcove: normalize values to the integer tuple.
      Kac k;
      std::vector<Rational> v(r + 1);
      v[0] = Rational(1) - bval;
      for (long i = 0; i < r; ++i) v[i + 1] = vals[i];
      long m = 1;
      for (const Rational& q : v) m = lcm_long(m, rational_denominator(q));
      k.s.resize(r + 1);
      long g = 0;
      for (long i = 0; i <= r; ++i) {
        Rational si = v[i] * m;
        k.s[i] = to_long(num(si));
        g = std::gcd(g, k.s[i]);
      }
      if (g > 1)
        for (long& si : k.s) si /= g;
      k.order = k.s[0];
      for (long i = 0; i < r; ++i) k.order += marks[i] * k.s[i + 1];
      return k;
    }
  }

  // Canonical per adjoint conjugacy class: lexicographically least over the
  // center-induced affine diagram rotations.
  Kac kac_adjoint_canonical() const {
    Kac base = kac();
    Kac best = base;
    for (const auto& perm : omega_rotations(*rs_)) {
      std::vector<long> s(base.s.size());
      for (size_t i = 0; i < perm.size(); ++i) s[perm[i]] = base.s[i];
      if (s < best.s) best.s = std::move(s);
    }
    return best;
  }

 private:
  const RootSystem* rs_;
  std::vector<Rational> x_;
};

}  // namespace exolie
