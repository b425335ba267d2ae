#pragma once
// Complex Clifford algebra Cl(n) with orthonormal generators e_1..e_n
// (e_i^2 = +1, e_i e_j = -e_j e_i), basis monomials keyed by bitmask,
// and the Fock (fermionic) model of the spinor representation for even n.
//
// Fock conventions (n = 2m):
//   f_k  = (e_{2k-1} - i e_{2k}) / 2,   f_k* = (e_{2k-1} + i e_{2k}) / 2
//   basis: f_S* |0> for S subset of {1..m}, factors in increasing order,
//   indexed by bitmask over bits 0..m-1 (bit k-1 <-> position k).
// Generators act monomially:
//   e_{2k-1} = f_k + f_k*, e_{2k} = i (f_k* - f_k), crossing sign
//   (-1)^{|S cap [1,k)|} from moving past earlier creation operators.
// The volume element e_1..e_n acts on f_S* as i^m (-1)^{|S|}; its +1
// eigenspace is the half-spinor space S+ (even subsets for m = 8,
// odd subsets for m = 6).

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "exolie/cyclo.hpp"
#include "exolie/linalg.hpp"

namespace exolie {

// Sign produced when concatenating basis monomials e_S * e_T and sorting
// the generators of T into place: (-1)^{#{(s,t) in SxT : s > t}}.
// Squared generators then cancel with no further sign (e_i^2 = +1),
// leaving e_{S xor T}.
inline int clifford_mul_sign(uint32_t S, uint32_t T) {
  int inv = 0;
  for (uint32_t t = T; t != 0; t &= t - 1) {
    int b = std::countr_zero(t);
    inv += std::popcount(S >> (b + 1));
  }
  return (inv % 2 != 0) ? -1 : 1;
}

class Clifford {
 public:
  explicit Clifford(long n) : n_(n) {
    if (n < 1 || n > 16) throw std::invalid_argument("Clifford: n out of range");
  }
  Clifford(long n, const Cyclo& c) : Clifford(n) {
    if (!c.is_zero()) terms_[0] = c;
  }

  static Clifford zero(long n) { return Clifford(n); }
  static Clifford one(long n) { return Clifford(n, Cyclo(1)); }
  // Generator e_i, 1-based.
  static Clifford gen(long n, long i) {
    if (i < 1 || i > n) throw std::invalid_argument("Clifford::gen: index out of range");
    Clifford r(n);
    r.terms_[uint32_t(1) << (i - 1)] = Cyclo(1);
    return r;
  }
  // c * e_{i1} e_{i2} ... with the given indices (1-based, must be
  // strictly increasing so the monomial is a basis element).
  static Clifford monomial(long n, const std::vector<long>& idx, const Cyclo& c = Cyclo(1)) {
    Clifford r(n);
    uint32_t mask = 0;
    long prev = 0;
    for (long i : idx) {
      if (i <= prev || i > n) throw std::invalid_argument("Clifford::monomial: indices must be increasing and in range");
      mask |= uint32_t(1) << (i - 1);
      prev = i;
    }
    if (!c.is_zero()) r.terms_[mask] = c;
    return r;
  }
  // Volume element e_1 e_2 ... e_n.
  static Clifford volume(long n) {
    Clifford r(n);
    r.terms_[(uint32_t(1) << n) - 1] = Cyclo(1);
    return r;
  }
  // cos(q) + sin(q) e_i e_j  (q in turns; equals exp(2*pi*q * e_i e_j / 1)
  // in the sense (e_i e_j)^2 = -1).  Its vector action rotates the
  // (i,j)-plane by angle 4*pi*q, i.e. 2q turns.
  static Clifford rotation(long n, long i, long j, const Rational& q) {
    if (i == j) throw std::invalid_argument("Clifford::rotation: need i != j");
    Clifford r = Clifford(n, cyc_cos(q));
    Clifford eij = gen(n, std::min(i, j)) * gen(n, std::max(i, j));
    if (i > j) eij = eij.scale(Cyclo(-1));
    return r + eij.scale(cyc_sin(q));
  }

  long n() const { return n_; }
  const std::map<uint32_t, Cyclo>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long term_count() const { return (long)terms_.size(); }

  // Coefficient of the basis monomial with the given mask.
  Cyclo coeff(uint32_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? Cyclo(0) : it->second;
  }
  Cyclo scalar_part() const { return coeff(0); }

  Clifford operator+(const Clifford& o) const {
    check(o);
    Clifford r = *this;
    for (const auto& [mask, c] : o.terms_) r.add_term(mask, c);
    return r;
  }
  Clifford operator-(const Clifford& o) const {
    check(o);
    Clifford r = *this;
    for (const auto& [mask, c] : o.terms_) r.add_term(mask, -c);
    return r;
  }
  Clifford operator*(const Clifford& o) const {
    check(o);
    Clifford r(n_);
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) {
        Cyclo c = ca * cb;
        if (clifford_mul_sign(ma, mb) < 0) c = -c;
        r.add_term(ma ^ mb, c);
      }
    return r;
  }
  Clifford scale(const Cyclo& c) const {
    Clifford r(n_);
    if (c.is_zero()) return r;
    for (const auto& [mask, t] : terms_) r.terms_[mask] = t * c;
    return r;
  }
  Clifford operator-() const { return scale(Cyclo(-1)); }

  bool operator==(const Clifford& o) const { return n_ == o.n_ && (*this - o).is_zero(); }
  bool operator!=(const Clifford& o) const { return !(*this == o); }

  // Reversal anti-automorphism: e_{i1}..e_{ik} -> e_{ik}..e_{i1},
  // i.e. (-1)^{k(k-1)/2} on a degree-k monomial.
  Clifford reversal() const {
    Clifford r(n_);
    for (const auto& [mask, c] : terms_) {
      long k = std::popcount(mask);
      r.terms_[mask] = (((k * (k - 1) / 2) % 2) != 0) ? -c : c;
    }
    return r;
  }
  // Grade involution: e_i -> -e_i.
  Clifford grade_involution() const {
    Clifford r(n_);
    for (const auto& [mask, c] : terms_)
      r.terms_[mask] = ((std::popcount(mask) % 2) != 0) ? -c : c;
    return r;
  }
  bool is_even() const {
    for (const auto& [mask, c] : terms_)
      if (std::popcount(mask) % 2 != 0) return false;
    return true;
  }
  bool is_odd() const {
    for (const auto& [mask, c] : terms_)
      if (std::popcount(mask) % 2 == 0) return false;
    return true;
  }
  // Degree-1 part as a coordinate vector (length n).
  std::vector<Cyclo> vector_part() const {
    std::vector<Cyclo> v(n_, Cyclo(0));
    for (const auto& [mask, c] : terms_)
      if (std::popcount(mask) == 1) v[std::countr_zero(mask)] = c;
    return v;
  }
  bool is_vector() const {
    for (const auto& [mask, c] : terms_)
      if (std::popcount(mask) != 1) return false;
    return true;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [mask, c] : terms_) {
      if (!first) s += " + ";
      first = false;
      s += "(" + c.str() + ")";
      for (uint32_t t = mask; t != 0; t &= t - 1)
        s += "e" + std::to_string(std::countr_zero(t) + 1);
    }
    return s;
  }

 private:
  void check(const Clifford& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Clifford: mixed ranks");
  }
  void add_term(uint32_t mask, const Cyclo& c) {
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_[mask] = c;
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  long n_;
  std::map<uint32_t, Cyclo> terms_;
};

// Membership gate for the spin group as tracked here: even, invertible
// with inverse equal to its reversal, and preserving the vector space
// under conjugation (the last is checked by vector_action below).
inline bool is_spin_normalized(const Clifford& g) {
  if (!g.is_even()) return false;
  return g * g.reversal() == Clifford::one(g.n());
}

// Matrix of v -> g v g^{-1} on span{e_1..e_n}, with g^{-1} = reversal(g)
// (valid for spin-normalized g).  Returns nullopt if some image leaves
// the degree-1 subspace.
inline std::optional<CMat> vector_action(const Clifford& g) {
  long n = g.n();
  Clifford gi = g.reversal();
  CMat m(n, n);
  for (long j = 1; j <= n; ++j) {
    Clifford img = g * Clifford::gen(n, j) * gi;
    if (!img.is_vector()) return std::nullopt;
    std::vector<Cyclo> col = img.vector_part();
    for (long i = 0; i < n; ++i) m.at(i, j - 1) = col[i];
  }
  return m;
}

// Fock model of the spinor representation of Cl(n), n = 2m even.
class FockModel {
 public:
  explicit FockModel(long n) : n_(n), m_(n / 2) {
    if (n % 2 != 0 || n < 2 || n > 16) throw std::invalid_argument("FockModel: n must be even, 2..16");
  }

  long n() const { return n_; }
  long m() const { return m_; }
  long dim() const { return 1L << m_; }

  // Action of generator e_i (1-based) on basis vector src: (target, coeff).
  std::pair<long, Cyclo> gen_apply(long i, long src) const {
    long k = (i + 1) / 2;
    long b = k - 1;
    uint32_t msk = (uint32_t)src;
    int cross = std::popcount(msk & ((uint32_t(1) << b) - 1));
    Cyclo c((cross % 2 != 0) ? -1 : 1);
    uint32_t out;
    if (i % 2 == 1) {
      out = msk ^ (uint32_t(1) << b);
    } else {
      if ((msk >> b) & 1) {
        out = msk & ~(uint32_t(1) << b);
        c = -(c * cyc_i());
      } else {
        out = msk | (uint32_t(1) << b);
        c = c * cyc_i();
      }
    }
    return {(long)out, c};
  }

  // Action of one basis monomial e_S (rightmost generator acts first)
  // on basis vector src.
  std::pair<long, Cyclo> monomial_apply(uint32_t S, long src) const {
    long idx = src;
    Cyclo c(1);
    // descending generator index = right-to-left in e_{s1}..e_{sl}
    for (long i = n_; i >= 1; --i) {
      if ((S >> (i - 1)) & 1) {
        auto [j, d] = gen_apply(i, idx);
        idx = j;
        c = c * d;
      }
    }
    return {idx, c};
  }

  // Column src of the matrix of a general element: list of (row, coeff).
  std::vector<std::pair<long, Cyclo>> apply_basis(const Clifford& a, long src) const {
    checkn(a);
    std::map<long, Cyclo> acc;
    for (const auto& [mask, c] : a.terms()) {
      auto [row, d] = monomial_apply(mask, src);
      auto it = acc.find(row);
      if (it == acc.end())
        acc[row] = c * d;
      else
        it->second = it->second + c * d;
    }
    std::vector<std::pair<long, Cyclo>> out;
    for (auto& [row, c] : acc)
      if (!c.is_zero()) out.emplace_back(row, c);
    return out;
  }

  std::vector<Cyclo> apply(const Clifford& a, const std::vector<Cyclo>& v) const {
    std::vector<Cyclo> out((size_t)dim(), Cyclo(0));
    for (long src = 0; src < dim(); ++src) {
      if (v[src].is_zero()) continue;
      for (const auto& [row, c] : apply_basis(a, src)) out[row] = out[row] + c * v[src];
    }
    return out;
  }

  CMat matrix(const Clifford& a) const {
    long d = dim();
    CMat mres(d, d);
    for (long src = 0; src < d; ++src)
      for (const auto& [row, c] : apply_basis(a, src)) mres.at(row, src) = c;
    return mres;
  }

  // Eigenvalue of the volume element e_1..e_n on basis vector idx:
  // i^m (-1)^{popcount}.  Real (+-1) exactly when m is even.
  int chirality(long idx) const {
    if (m_ % 2 != 0) throw std::logic_error("FockModel::chirality: m must be even for real chirality");
    long pc = std::popcount((uint32_t)idx);
    return (((m_ / 2) + pc) % 2 != 0) ? -1 : 1;
  }
  std::vector<long> half_indices(int sign) const {
    std::vector<long> out;
    for (long idx = 0; idx < dim(); ++idx)
      if (chirality(idx) == sign) out.push_back(idx);
    return out;
  }

  // Restriction of an even element to a half-spinor space (basis order =
  // half_indices(sign)).  Throws if the element mixes chiralities.
  CMat half_matrix(const Clifford& a, int sign) const {
    std::vector<long> idxs = half_indices(sign);
    std::vector<long> pos((size_t)dim(), -1);
    for (size_t p = 0; p < idxs.size(); ++p) pos[idxs[p]] = (long)p;
    long d = (long)idxs.size();
    CMat mres(d, d);
    for (long p = 0; p < d; ++p)
      for (const auto& [row, c] : apply_basis(a, idxs[p])) {
        if (pos[row] < 0) throw std::logic_error("FockModel::half_matrix: element mixes chiralities");
        mres.at(pos[row], p) = c;
      }
    return mres;
  }

  // Invariant pairing: beta(f_S*, f_T*) = 0 unless T = complement(S),
  // else (-1)^{|S|(|S|-1)/2} * sgn(S, S^c) with sgn the sign of the
  // shuffle sorting (S ascending, S^c ascending) into (1..m).
  // Satisfies beta(e_i u, v) = beta(u, e_i v) for every generator.
  Cyclo beta(long srow, long trow) const {
    uint32_t S = (uint32_t)srow, T = (uint32_t)trow;
    uint32_t full = (uint32_t(1) << m_) - 1;
    if ((S ^ T) != full) return Cyclo(0);
    long k = std::popcount(S);
    long inv = 0;
    for (uint32_t t = T; t != 0; t &= t - 1) {
      int b = std::countr_zero(t);
      inv += std::popcount(S >> (b + 1));
    }
    long e = k * (k - 1) / 2 + inv;
    return Cyclo((e % 2 != 0) ? -1 : 1);
  }

  // Gram matrix of beta restricted to a half-spinor space.
  CMat half_beta(int sign) const {
    std::vector<long> idxs = half_indices(sign);
    long d = (long)idxs.size();
    CMat mres(d, d);
    for (long p = 0; p < d; ++p)
      for (long q = 0; q < d; ++q) mres.at(p, q) = beta(idxs[p], idxs[q]);
    return mres;
  }

 private:
  void checkn(const Clifford& a) const {
    if (a.n() != n_) throw std::invalid_argument("FockModel: rank mismatch");
  }
  long n_, m_;
};

// Ordered basis pairs (i,j), i<j (1-based), of so(n) realized inside
// Cl(n) as x_{ij} = e_i e_j / 2 with [x_{ij}, e_j] = e_i.
inline std::vector<std::pair<long, long>> so_pairs(long n) {
  std::vector<std::pair<long, long>> out;
  for (long i = 1; i <= n; ++i)
    for (long j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  return out;
}

inline Clifford so_element(long n, long i, long j) {
  if (i == j) throw std::invalid_argument("so_element: need i != j");
  Clifford e = Clifford::gen(n, std::min(i, j)) * Clifford::gen(n, std::max(i, j));
  if (i > j) e = -e;
  return e.scale(Cyclo(Rational(1) / 2));
}

}  // namespace exolie
