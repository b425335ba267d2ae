#pragma once
// Symmetric-pair decompositions g = k (+) p of the three largest exceptional
// Lie algebras, over the cyclotomic field, with:
//   - exact isotropy actions of group elements given in the classical models
//     (matrix, quaternion, spin blocks, including diagram-twisted elements),
//   - the full Lie bracket on k (+) p, with the one Jacobi-constrained
//     relative normalization solved at build time,
//   - fixed-subalgebra dimensions for commuting families (joint kernels),
//   - Killing-form / trace-form ratio data for integrity checks,
//   - certified extensions of outer (entrywise-conjugation) twists, the
//     p-scalar solved from bracket equivariance and the square identified as
//     a group element (it need not be the identity: the twist lifts to the
//     algebra with a central cocycle in general).
//
// The six pairs:
//   e6-su6sp1 : k = sl(6)+sl(2)         p = Lambda^3 C^6 (x) C^2   (38 + 40)
//   e6-f4     : k = fixed(tau), 52      p = 26    (from the rank-6 engine)
//   e6-sp4    : k = fixed(tau'), 36     p = 42    (from the rank-6 engine)
//   e7-su8    : k = sl(8)               p = Lambda^4 C^8           (63 + 70)
//   e7-so12sp1: k = so(12)+sl(2)        p = S+_12 (x) C^2          (69 + 64)
//   e8-so16   : k = so(16)              p = S+_16                  (120 + 128)
//
// so(n) is realized inside the Clifford algebra as the span of the degree-2
// monomials e_a e_b (a < b); the commutator is the Clifford commutator and
// the spinor action is Clifford multiplication in the Fock model, so the
// representation property is structural.  Divisor (kernel) elements of each
// hosting model are verified to act trivially at build time.

#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "exolie/chevalley.hpp"
#include "exolie/clifford.hpp"
#include "exolie/linalg.hpp"
#include "exolie/models.hpp"

namespace exolie {

using SRow = std::vector<std::pair<long, Cyclo>>;

// ---------------------------------------------------------------------------
// Small combinatorics for exterior powers.

// All size-k subsets of {0..n-1} as bitmasks, ascending.
inline std::vector<uint32_t> subsets_of_size(long n, long k) {
  std::vector<uint32_t> out;
  for (uint32_t m = 0; m < (uint32_t(1) << n); ++m)
    if (std::popcount(m) == k) out.push_back(m);
  return out;
}

// Sign of e_S ^ e_T as a multiple of e_{S|T} (disjoint 0-based masks):
// (-1)^{#{(s,t) in S x T : s > t}}, the same count as the Clifford
// concatenation sign.
inline int wedge_sign(uint32_t S, uint32_t T) { return clifford_mul_sign(S, T); }

// Derivation action of E_{ab} (0-based) on the basis vector e_S of an
// exterior power: returns (target mask, sign), or nullopt if it kills e_S.
inline std::optional<std::pair<uint32_t, int>> eab_on_subset(long a, long b, uint32_t S) {
  if (!((S >> b) & 1)) return std::nullopt;
  if (a == b) return std::make_pair(S, 1);
  if ((S >> a) & 1) return std::nullopt;
  uint32_t T = (S & ~(uint32_t(1) << b)) | (uint32_t(1) << a);
  long lo = std::min(a, b), hi = std::max(a, b);
  uint32_t strict_between = (((uint32_t(1) << hi) - 1) & ~((uint32_t(1) << (lo + 1)) - 1));
  int crossings = std::popcount((S & ~(uint32_t(1) << b)) & strict_between);
  return std::make_pair(T, (crossings % 2 != 0) ? -1 : 1);
}

// Determinant of the (rows, cols) minor of A (masks of equal popcount).
inline Cyclo minor_det(const CMat& A, uint32_t rows, uint32_t cols) {
  std::vector<long> r, c;
  for (long i = 0; i < A.rows(); ++i)
    if ((rows >> i) & 1) r.push_back(i);
  for (long j = 0; j < A.cols(); ++j)
    if ((cols >> j) & 1) c.push_back(j);
  long k = (long)r.size();
  CMat m(k, k);
  for (long i = 0; i < k; ++i)
    for (long j = 0; j < k; ++j) m.at(i, j) = A.at(r[i], c[j]);
  return determinant(m);
}

// Matrix of Lambda^k(A) on the given subset basis.
inline CMat exterior_power(const CMat& A, const std::vector<uint32_t>& subsets) {
  long d = (long)subsets.size();
  CMat out(d, d);
  for (long j = 0; j < d; ++j)
    for (long i = 0; i < d; ++i) out.at(i, j) = minor_det(A, subsets[i], subsets[j]);
  return out;
}

// ---------------------------------------------------------------------------
// sl(n) basis bookkeeping: off-diagonal units E_{ab} (a != b, row-major
// order) followed by H_i = E_{ii} - E_{i+1,i+1}.

struct SlBasis {
  long n;
  std::vector<std::pair<long, long>> off;

  explicit SlBasis(long nn) : n(nn) {
    for (long a = 0; a < n; ++a)
      for (long b = 0; b < n; ++b)
        if (a != b) off.emplace_back(a, b);
  }
  long dim() const { return n * n - 1; }
  long off_count() const { return (long)off.size(); }

  CMat matrix(long idx) const {
    CMat m(n, n);
    if (idx < off_count()) {
      m.at(off[idx].first, off[idx].second) = Cyclo(1);
    } else {
      long i = idx - off_count();
      m.at(i, i) = Cyclo(1);
      m.at(i + 1, i + 1) = Cyclo(-1);
    }
    return m;
  }

  // Coordinates of a traceless matrix; the diagonal is resolved through
  // partial sums.  Throws if the trace is nonzero.
  std::vector<Cyclo> coords(const CMat& X) const {
    std::vector<Cyclo> c((size_t)dim());
    for (long i = 0; i < off_count(); ++i) c[i] = X.at(off[i].first, off[i].second);
    Cyclo run(0);
    for (long i = 0; i + 1 < n; ++i) {
      run += X.at(i, i);
      c[off_count() + i] = run;
    }
    if (!(run + X.at(n - 1, n - 1)).is_zero())
      throw std::logic_error("SlBasis::coords: matrix is not traceless");
    return c;
  }
};

// Unit quaternion as an SU(2) matrix: a + bj -> [[a, b], [-conj b, conj a]].
inline CMat quat_su2(const Quat& q) {
  CMat m(2, 2);
  m.at(0, 0) = q.a;
  m.at(0, 1) = q.b;
  m.at(1, 0) = -q.b.conj();
  m.at(1, 1) = q.a.conj();
  return m;
}

inline bool is_identity_mat(const CMat& A) {
  if (A.rows() != A.cols()) return false;
  for (long i = 0; i < A.rows(); ++i)
    for (long j = 0; j < A.cols(); ++j)
      if (!(A.at(i, j) == (i == j ? Cyclo(1) : Cyclo(0)))) return false;
  return true;
}

// Gauss-Jordan inverse; throws on a singular input.
inline CMat inverse_mat(const CMat& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("inverse_mat: square required");
  long n = A.rows();
  CMat aug(n, 2 * n);
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, n + i) = Cyclo(1);
  }
  auto pivots = echelonize(aug);
  if ((long)pivots.size() != n) throw std::logic_error("inverse_mat: singular matrix");
  for (long r = n - 1; r >= 0; --r) {
    long pc = pivots[r];
    Cyclo inv = aug.at(r, pc).inverse();
    for (long j = pc; j < 2 * n; ++j)
      if (!aug.at(r, j).is_zero()) aug.at(r, j) = aug.at(r, j) * inv;
    for (long i = 0; i < r; ++i) {
      Cyclo f = aug.at(i, pc);
      if (f.is_zero()) continue;
      for (long j = pc; j < 2 * n; ++j)
        if (!aug.at(r, j).is_zero()) aug.at(i, j) -= f * aug.at(r, j);
    }
  }
  CMat out(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

// ---------------------------------------------------------------------------

class SymPair {
 public:
  static const SymPair& get(const std::string& label);

  const std::string& label() const { return label_; }
  long k_dim() const { return kdim_; }
  long p_dim() const { return pdim_; }
  long dim() const { return kdim_ + pdim_; }
  bool model_hosted() const { return model_ != nullptr; }
  const Model& model() const {
    if (!model_) throw std::logic_error("SymPair: pair is not hosted in a classical model");
    return *model_;
  }
  // The defining involution for the rank-6-engine pairs.
  const MonOp& involution() const {
    if (model_) throw std::logic_error("SymPair: pair has no stored involution");
    return tau_;
  }
  // The solved relative normalization of the second k-component of [p,p].
  const Cyclo& pp_scale() const { return ppscale_; }

  // -------------------------------------------------------------------------
  // Bracket of basis elements.  Index order: k-basis first, then p-basis.
  SRow brk(long i, long j) const {
    if (table_) return (*table_)[i * dim() + j];
    return brk_raw(i, j);
  }

  SRow brk_sparse(const SRow& u, const SRow& v) const {
    std::map<long, Cyclo> acc;
    for (const auto& [i, a] : u)
      for (const auto& [j, b] : v)
        for (const auto& [t, c] : brk(i, j)) {
          Cyclo add = a * b * c;
          auto it = acc.find(t);
          if (it == acc.end())
            acc.emplace(t, std::move(add));
          else
            it->second += add;
        }
    SRow out;
    for (auto& [t, c] : acc)
      if (!c.is_zero()) out.emplace_back(t, c);
    return out;
  }

  // Jacobi sum [[i,j],k] + [[j,k],i] + [[k,i],j] as a sparse vector.
  SRow jacobi_vec(long i, long j, long k) const {
    std::map<long, Cyclo> acc;
    auto add = [&](const SRow& r) {
      for (const auto& [t, c] : r) {
        auto it = acc.find(t);
        if (it == acc.end())
          acc.emplace(t, c);
        else
          it->second += c;
      }
    };
    SRow bi{{i, Cyclo(1)}}, bj{{j, Cyclo(1)}}, bk{{k, Cyclo(1)}};
    add(brk_sparse(brk(i, j), bk));
    add(brk_sparse(brk(j, k), bi));
    add(brk_sparse(brk(k, i), bj));
    SRow out;
    for (auto& [t, c] : acc)
      if (!c.is_zero()) out.emplace_back(t, c);
    return out;
  }

  bool jacobi_basis(long i, long j, long k) const { return jacobi_vec(i, j, k).empty(); }

  // All unordered basis triples; returns the number of failures.
  long jacobi_full() const {
    long bad = 0;
    for (long i = 0; i < dim(); ++i)
      for (long j = i; j < dim(); ++j)
        for (long k = j; k < dim(); ++k)
          if (!jacobi_basis(i, j, k)) ++bad;
    return bad;
  }

  // All triples with at least two k-indices.
  long jacobi_kk_full() const {
    long bad = 0;
    for (long i = 0; i < kdim_; ++i)
      for (long j = i; j < kdim_; ++j)
        for (long k = 0; k < dim(); ++k)
          if (!jacobi_basis(i, j, k)) ++bad;
    return bad;
  }

  // Random basis triples with at least two p-indices.
  long jacobi_mixed_sampled(long count, uint64_t seed) const {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> anyd(0, dim() - 1), pd(kdim_, dim() - 1);
    long bad = 0;
    for (long t = 0; t < count; ++t)
      if (!jacobi_basis(anyd(rng), pd(rng), pd(rng))) ++bad;
    return bad;
  }

  // tr(ad b_i ad b_j) over the whole algebra.
  Cyclo killing(long i, long j) const {
    Cyclo out(0);
    for (long m = 0; m < dim(); ++m)
      for (const auto& [t, c] : brk(j, m))
        for (const auto& [s, d] : brk(i, t))
          if (s == m) out += c * d;
    return out;
  }

  // Intrinsic Killing form of the subalgebra k (trace over k only).
  Cyclo killing_k(long i, long j) const {
    if (i >= kdim_ || j >= kdim_) throw std::invalid_argument("killing_k: k-indices required");
    Cyclo out(0);
    for (long m = 0; m < kdim_; ++m)
      for (const auto& [t, c] : brk(j, m))
        for (const auto& [s, d] : brk(i, t))
          if (s == m) out += c * d;
    return out;
  }

  // Reference form: per-summand trace forms on k, the invariant pairing on
  // p, zero across the k/p split and across distinct k-summands.  For the
  // rank-6-engine pairs this is the ambient Killing form.
  Cyclo natural(long i, long j) const;

  // Number of basis pairs whose bracket violates the block structure
  // ([k,k] in k, [k,p] in p, [p,p] in k).
  long block_violations() const {
    long bad = 0;
    for (long i = 0; i < dim(); ++i)
      for (long j = i; j < dim(); ++j) {
        bool want_k = ((i < kdim_) == (j < kdim_));
        for (const auto& [t, c] : brk(i, j))
          if ((t < kdim_) != want_k) {
            ++bad;
            break;
          }
      }
    return bad;
  }

  // -------------------------------------------------------------------------
  // Isotropy action of a model element on k (+) p.
  CMat action(const ModelElement& e) const;

  long dim_fixed(const std::vector<ModelElement>& gens) const {
    if (gens.empty()) return dim();
    for (size_t a = 0; a < gens.size(); ++a)
      for (size_t b = a + 1; b < gens.size(); ++b)
        if (!model().same(model().mul(gens[a], gens[b]), model().mul(gens[b], gens[a])))
          throw std::invalid_argument("SymPair::dim_fixed: generators do not commute");
    std::vector<CMat> ops;
    ops.reserve(gens.size());
    for (const auto& g : gens) ops.push_back(action(g));
    return dim_fixed_mats(ops);
  }

  // Fixed dimension for the rank-6-engine pairs, elements given as certified
  // monomial operators on the ambient algebra.
  long dim_fixed_mon(const std::vector<MonOp>& ops) const {
    if (model_) throw std::logic_error("SymPair::dim_fixed_mon: pair is model-hosted");
    if (ops.empty()) return dim();
    for (size_t a = 0; a < ops.size(); ++a)
      for (size_t b = a + 1; b < ops.size(); ++b)
        if (!ops[a].commutes_with(ops[b]))
          throw std::invalid_argument("SymPair::dim_fixed_mon: operators do not commute");
    return joint_fixed_dim(ops);
  }

  // Joint kernel of (M - 1) over a list of operators, by iterative
  // restriction of an explicit basis.
  static long dim_fixed_mats(const std::vector<CMat>& ops) {
    if (ops.empty()) throw std::invalid_argument("dim_fixed_mats: empty operator list");
    long D = ops[0].rows();
    CMat basis;
    bool full = true;
    for (const CMat& M : ops) {
      if (M.rows() != D || M.cols() != D)
        throw std::invalid_argument("dim_fixed_mats: size mismatch");
      CMat N;
      if (full) {
        N = M;
        for (long i = 0; i < D; ++i) N.at(i, i) -= Cyclo(1);
      } else {
        N = M * basis - basis;
      }
      auto ker = nullspace(N);
      long d2 = (long)ker.size();
      CMat next(D, d2);
      for (long c = 0; c < d2; ++c) {
        if (full) {
          for (long i = 0; i < D; ++i) next.at(i, c) = ker[c][i];
        } else {
          for (long i = 0; i < D; ++i) {
            Cyclo s(0);
            for (long j = 0; j < basis.cols(); ++j)
              if (!ker[c][j].is_zero() && !basis.at(i, j).is_zero())
                s += basis.at(i, j) * ker[c][j];
            next.at(i, c) = s;
          }
        }
      }
      basis = std::move(next);
      full = false;
      if (basis.cols() == 0) return 0;
    }
    return basis.cols();
  }

  // -------------------------------------------------------------------------
  // Extension of an outer (entrywise-conjugation) twist to the pair.  The
  // p-scalar is solved from bracket equivariance; every claimed property is
  // certified or the call throws.  The square of the extension is identified
  // by the caller against action(): it is NOT asserted to be the identity,
  // because the twist lifts with a central cocycle in general.
  struct OuterExtension {
    CMat on_k, on_p;  // certified operators; on_p includes the solved scalar
    Cyclo scale;      // on_p = scale * seed
    long order;       // order of on_k (+) on_p as an operator (searched <= 8)
  };

  OuterExtension extend_outer(const CMat& k_map, const CMat& p_seed,
                              const std::vector<ModelElement>& probes, const Twist& twist,
                              const Cyclo* forced_scale = nullptr) const;

  // The cached extension of the hosting model's conjugation twist (available
  // for the special-unitary-hosted pairs).
  const OuterExtension& conj_outer() const {
    if (!outer_) throw std::logic_error("SymPair: no conjugation twist for this pair");
    return *outer_;
  }
  bool has_outer() const { return outer_.has_value(); }

 private:
  SymPair() = default;

  std::string label_;
  long kdim_ = 0, pdim_ = 0;
  enum class Kind { su6sp1, su8, so12sp1, so16, chev } kind_ = Kind::chev;
  std::unique_ptr<Model> model_own_;
  const Model* model_ = nullptr;

  std::unique_ptr<FockModel> fock_;
  std::vector<long> hplus_;  // Fock indices of S+, basis order
  std::vector<long> hpos_;   // inverse: Fock index -> S+ position (-1 outside)
  std::vector<std::pair<long, long>> sopairs_;  // (a, b) 1-based, a < b
  std::vector<long> sopos_;
  long nso_ = 0;

  std::vector<uint32_t> psubsets_;
  std::vector<long> subpos_;
  std::unique_ptr<SlBasis> sl_, sl2_;

  MonOp tau_;
  std::vector<Chevalley::Vec> kbasis_, pbasis_;
  CMat binv_;

  Cyclo ppscale_ = Cyclo(1);
  std::optional<OuterExtension> outer_;

  // Full bracket table, built eagerly for the small pairs (the rank-6-engine
  // pairs and the 38+40 pair); the larger pairs compute rows on demand.
  std::unique_ptr<std::vector<SRow>> table_;

  SRow brk_raw(long i, long j) const;
  SRow brk_pp(long pi, long pj) const;
  CMat act_k(const ModelElement& e) const;
  CMat act_p(const ModelElement& e) const;

  void build_su6sp1();
  void build_su8();
  void build_so12sp1();
  void build_so16();
  void build_chev(bool dim52);
  void build_table() {
    table_ = std::make_unique<std::vector<SRow>>((size_t)(dim() * dim()));
    for (long a = 0; a < dim(); ++a)
      for (long b = 0; b < dim(); ++b) (*table_)[a * dim() + b] = brk_raw(a, b);
  }
  void verify_kernel();
  void solve_ppscale();
  void attach_conj_outer();

  // The twist whose extension is cached: entrywise conjugation on the first
  // (matrix) block, no permutation.
  Twist outer_twist_shape() const {
    Twist t = Twist::id((long)model_->identity().blocks.size());
    t.conj[0] = 1;
    return t;
  }

  const Quat& quat_block(const ModelElement& e, long idx) const {
    const HMat& q = e.blocks[idx].qmat();
    if (q.rows() != 1 || q.cols() != 1)
      throw std::invalid_argument("SymPair: expected a rank-one quaternion block");
    return q.at(0, 0);
  }

  long so_index(long a, long b) const { return sopos_[(a - 1) * fock_->n() + (b - 1)]; }

  SRow grade2_coords(const Clifford& h) const {
    SRow out;
    for (const auto& [mask, c] : h.terms()) {
      if (c.is_zero()) continue;
      if (std::popcount(mask) != 2)
        throw std::logic_error("SymPair: conjugate left the degree-2 component");
      long a = std::countr_zero(mask) + 1;
      long b = 32 - std::countl_zero(mask);
      out.emplace_back(so_index(a, b), c);
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// Bracket implementation.

inline SRow SymPair::brk_raw(long i, long j) const {
  long K = kdim_;
  bool ik = i < K, jk = j < K;

  if (kind_ == Kind::chev) {
    const Chevalley& ch = *tau_.ch;
    const Chevalley::Vec& u = ik ? kbasis_[i] : pbasis_[i - K];
    const Chevalley::Vec& v = jk ? kbasis_[j] : pbasis_[j - K];
    Chevalley::Vec w = ch.bracket(u, v);
    SRow out;
    for (long t = 0; t < dim(); ++t) {
      Cyclo s(0);
      for (long m = 0; m < dim(); ++m)
        if (!w[m].is_zero() && !binv_.at(t, m).is_zero()) s += binv_.at(t, m) * w[m];
      if (!s.is_zero()) out.emplace_back(t, s);
    }
    return out;
  }

  if (kind_ == Kind::so16 || kind_ == Kind::so12sp1) {
    long nso = nso_;
    auto is_so = [&](long x) { return x < nso; };
    if (ik && jk) {
      if (is_so(i) && is_so(j)) {
        long n = fock_->n();
        auto [a1, b1] = sopairs_[i];
        auto [a2, b2] = sopairs_[j];
        Clifford x = Clifford::monomial(n, {a1, b1}), y = Clifford::monomial(n, {a2, b2});
        return grade2_coords(x * y - y * x);
      }
      if (!is_so(i) && !is_so(j)) {
        CMat a = sl2_->matrix(i - nso), b = sl2_->matrix(j - nso);
        auto c = sl2_->coords(a * b - b * a);
        SRow out;
        for (long t = 0; t < 3; ++t)
          if (!c[t].is_zero()) out.emplace_back(nso + t, c[t]);
        return out;
      }
      return {};  // distinct summands commute
    }
    if (ik != jk) {
      long kidx = ik ? i : j, pidx = (ik ? j : i) - K;
      SRow out;
      if (kind_ == Kind::so16) {
        auto [a, b] = sopairs_[kidx];
        auto [row, c] =
            fock_->monomial_apply((uint32_t(1) << (a - 1)) | (uint32_t(1) << (b - 1)), hplus_[pidx]);
        out.emplace_back(K + hpos_[row], c);
      } else {
        long spos = pidx / 2, t = pidx % 2;
        if (is_so(kidx)) {
          auto [a, b] = sopairs_[kidx];
          auto [row, c] = fock_->monomial_apply(
              (uint32_t(1) << (a - 1)) | (uint32_t(1) << (b - 1)), hplus_[spos]);
          out.emplace_back(K + 2 * hpos_[row] + t, c);
        } else {
          CMat m = sl2_->matrix(kidx - nso);
          for (long r = 0; r < 2; ++r)
            if (!m.at(r, t).is_zero()) out.emplace_back(K + 2 * spos + r, m.at(r, t));
        }
      }
      if (!ik)
        for (auto& [t2, c2] : out) c2 = -c2;
      return out;
    }
    return brk_pp(i - K, j - K);
  }

  // special-unitary-hosted pairs
  if (ik && jk) {
    long n1 = sl_->dim();
    if (i < n1 && j < n1) {
      CMat a = sl_->matrix(i), b = sl_->matrix(j);
      auto c = sl_->coords(a * b - b * a);
      SRow out;
      for (long t = 0; t < n1; ++t)
        if (!c[t].is_zero()) out.emplace_back(t, c[t]);
      return out;
    }
    if (i >= n1 && j >= n1) {
      CMat a = sl2_->matrix(i - n1), b = sl2_->matrix(j - n1);
      auto c = sl2_->coords(a * b - b * a);
      SRow out;
      for (long t = 0; t < 3; ++t)
        if (!c[t].is_zero()) out.emplace_back(n1 + t, c[t]);
      return out;
    }
    return {};
  }
  if (ik != jk) {
    long kidx = ik ? i : j, pidx = (ik ? j : i) - K;
    long n1 = sl_->dim();
    long spos = (kind_ == Kind::su6sp1) ? pidx / 2 : pidx;
    long t = (kind_ == Kind::su6sp1) ? pidx % 2 : 0;
    long stride = (kind_ == Kind::su6sp1) ? 2 : 1;
    std::map<long, Cyclo> acc;
    auto add = [&](long tgt, const Cyclo& c) {
      if (c.is_zero()) return;
      auto it = acc.find(tgt);
      if (it == acc.end())
        acc.emplace(tgt, c);
      else
        it->second += c;
    };
    if (kidx < n1) {
      CMat m = sl_->matrix(kidx);
      long nn = sl_->n;
      uint32_t S = psubsets_[spos];
      for (long a = 0; a < nn; ++a)
        for (long b = 0; b < nn; ++b) {
          if (m.at(a, b).is_zero()) continue;
          auto img = eab_on_subset(a, b, S);
          if (!img) continue;
          add(K + stride * subpos_[img->first] + t, m.at(a, b).scaled(img->second));
        }
    } else {
      CMat m = sl2_->matrix(kidx - n1);
      for (long r = 0; r < 2; ++r) add(K + 2 * spos + r, m.at(r, t));
    }
    SRow out;
    for (auto& [t2, c2] : acc)
      if (!c2.is_zero()) out.emplace_back(t2, ik ? c2 : -c2);
    return out;
  }
  return brk_pp(i - K, j - K);
}

// [p,p] on basis elements; the sl(2)-component (the pairing term in the
// one-component pairs is the whole bracket) carries ppscale_.
inline SRow SymPair::brk_pp(long pi, long pj) const {
  std::map<long, Cyclo> acc;
  auto add = [&](long t, const Cyclo& c) {
    if (c.is_zero()) return;
    auto it = acc.find(t);
    if (it == acc.end())
      acc.emplace(t, c);
    else
      it->second += c;
  };

  CMat J2(2, 2);
  J2.at(0, 1) = Cyclo(1);
  J2.at(1, 0) = Cyclo(-1);
  // nu(eps_a, eps_b) = eps_a eps_b^T J + eps_b eps_a^T J, in sl(2)
  auto nu_coords = [&](long a, long b) {
    CMat nu(2, 2);
    for (long col = 0; col < 2; ++col) {
      nu.at(a, col) += J2.at(b, col);
      nu.at(b, col) += J2.at(a, col);
    }
    return sl2_->coords(nu);
  };

  if (kind_ == Kind::so16) {
    long sfull = hplus_[pi], tfull = hplus_[pj];
    for (long idx = 0; idx < nso_; ++idx) {
      auto [a, b] = sopairs_[idx];
      auto [row, c] =
          fock_->monomial_apply((uint32_t(1) << (a - 1)) | (uint32_t(1) << (b - 1)), tfull);
      Cyclo pairing = fock_->beta(sfull, row);
      if (!pairing.is_zero()) add(idx, c * pairing);
    }
  } else if (kind_ == Kind::so12sp1) {
    long si = pi / 2, ti = pi % 2, sj = pj / 2, tj = pj % 2;
    long sfull = hplus_[si], tfull = hplus_[sj];
    long om = (ti == 0 && tj == 1) ? 1 : (ti == 1 && tj == 0) ? -1 : 0;
    if (om != 0) {
      for (long idx = 0; idx < nso_; ++idx) {
        auto [a, b] = sopairs_[idx];
        auto [row, c] =
            fock_->monomial_apply((uint32_t(1) << (a - 1)) | (uint32_t(1) << (b - 1)), tfull);
        Cyclo pairing = fock_->beta(sfull, row);
        if (!pairing.is_zero()) add(idx, (c * pairing).scaled(om));
      }
    }
    Cyclo bst = fock_->beta(sfull, tfull);
    if (!bst.is_zero()) {
      auto c = nu_coords(ti, tj);
      for (long t = 0; t < 3; ++t) add(nso_ + t, ppscale_ * bst * c[t]);
    }
  } else if (kind_ == Kind::su8) {
    // Trace-dual of X -> vol(e_S ^ X e_T), projected to the traceless part:
    // entry (a,b) is the volume coefficient of e_S ^ (E_ba e_T).
    uint32_t S = psubsets_[pi], T = psubsets_[pj];
    long n = sl_->n;
    uint32_t full = (uint32_t(1) << n) - 1;
    CMat mu(n, n);
    Cyclo tr(0);
    for (long a = 0; a < n; ++a)
      for (long b = 0; b < n; ++b) {
        if (auto img = eab_on_subset(b, a, T); img && (S ^ img->first) == full) {
          mu.at(a, b) = Cyclo(img->second * wedge_sign(S, img->first));
          if (a == b) tr += mu.at(a, b);
        }
      }
    if (!tr.is_zero()) {
      Cyclo shift = tr.scaled(Rational(1, n));
      for (long a = 0; a < n; ++a) mu.at(a, a) -= shift;
    }
    auto c = sl_->coords(mu);
    for (long t = 0; t < sl_->dim(); ++t) add(t, c[t]);
  } else {  // su6sp1
    long si = pi / 2, ti = pi % 2, sj = pj / 2, tj = pj % 2;
    uint32_t S = psubsets_[si], T = psubsets_[sj];
    long n = sl_->n;
    uint32_t full = (uint32_t(1) << n) - 1;
    long om = (ti == 0 && tj == 1) ? 1 : (ti == 1 && tj == 0) ? -1 : 0;
    if (om != 0) {
      CMat mu(n, n);
      Cyclo tr(0);
      for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) {
          if (auto img = eab_on_subset(b, a, T); img && (S ^ img->first) == full) {
            mu.at(a, b) = Cyclo(img->second * wedge_sign(S, img->first));
            if (a == b) tr += mu.at(a, b);
          }
        }
      if (!tr.is_zero()) {
        Cyclo shift = tr.scaled(Rational(1, n));
        for (long a = 0; a < n; ++a) mu.at(a, a) -= shift;
      }
      auto c = sl_->coords(mu);
      for (long t = 0; t < sl_->dim(); ++t) add(t, c[t].scaled(om));
    }
    if ((S ^ T) == full) {
      Cyclo vol = Cyclo(wedge_sign(S, T));
      auto c = nu_coords(ti, tj);
      for (long t = 0; t < 3; ++t) add(sl_->dim() + t, ppscale_ * vol * c[t]);
    }
  }

  SRow out;
  for (auto& [t, c] : acc)
    if (!c.is_zero()) out.emplace_back(t, c);
  return out;
}

// ---------------------------------------------------------------------------
// Natural forms.

inline Cyclo SymPair::natural(long i, long j) const {
  long K = kdim_;
  bool ik = i < K, jk = j < K;
  if (kind_ == Kind::chev) {
    const Chevalley& ch = *tau_.ch;
    const Chevalley::Vec& u = ik ? kbasis_[i] : pbasis_[i - K];
    const Chevalley::Vec& v = jk ? kbasis_[j] : pbasis_[j - K];
    return ch.killing(u, v);
  }
  if (ik != jk) return Cyclo(0);
  if (ik && jk) {
    bool so_kind = (kind_ == Kind::so16 || kind_ == Kind::so12sp1);
    long n1 = so_kind ? nso_ : sl_->dim();
    if (i < n1 && j < n1) {
      if (so_kind)
        // trace form of the defining so(n) matrices of e_a e_b
        return (sopairs_[i] == sopairs_[j]) ? Cyclo(-8) : Cyclo(0);
      CMat pr = sl_->matrix(i) * sl_->matrix(j);
      Cyclo tr(0);
      for (long t = 0; t < pr.rows(); ++t) tr += pr.at(t, t);
      return tr;
    }
    if (i >= n1 && j >= n1) {
      CMat pr = sl2_->matrix(i - n1) * sl2_->matrix(j - n1);
      return pr.at(0, 0) + pr.at(1, 1);
    }
    return Cyclo(0);
  }
  long pi = i - K, pj = j - K;
  if (kind_ == Kind::so16) return fock_->beta(hplus_[pi], hplus_[pj]);
  if (kind_ == Kind::so12sp1) {
    long si = pi / 2, ti = pi % 2, sj = pj / 2, tj = pj % 2;
    long om = (ti == 0 && tj == 1) ? 1 : (ti == 1 && tj == 0) ? -1 : 0;
    return fock_->beta(hplus_[si], hplus_[sj]).scaled(om);
  }
  if (kind_ == Kind::su8) {
    uint32_t S = psubsets_[pi], T = psubsets_[pj];
    uint32_t full = (uint32_t(1) << sl_->n) - 1;
    return ((S ^ T) == full) ? Cyclo(wedge_sign(S, T)) : Cyclo(0);
  }
  long si = pi / 2, ti = pi % 2, sj = pj / 2, tj = pj % 2;
  uint32_t S = psubsets_[si], T = psubsets_[sj];
  uint32_t full = (uint32_t(1) << sl_->n) - 1;
  long om = (ti == 0 && tj == 1) ? 1 : (ti == 1 && tj == 0) ? -1 : 0;
  if ((S ^ T) != full || om == 0) return Cyclo(0);
  return Cyclo(wedge_sign(S, T)).scaled(om);
}

// ---------------------------------------------------------------------------
// Actions.

inline CMat SymPair::act_k(const ModelElement& e) const {
  long K = kdim_;
  CMat out(K, K);
  if (kind_ == Kind::so16 || kind_ == Kind::so12sp1) {
    const Clifford& g = e.blocks[0].cliff();
    if (!is_spin_normalized(g))
      throw std::invalid_argument("SymPair::action: spin block is not normalized");
    Clifford gi = g.reversal();
    for (long idx = 0; idx < nso_; ++idx) {
      auto [a, b] = sopairs_[idx];
      Clifford img = g * Clifford::monomial(fock_->n(), {a, b}) * gi;
      for (const auto& [t, c] : grade2_coords(img)) out.at(t, idx) = c;
    }
    if (kind_ == Kind::so12sp1) {
      CMat u = quat_su2(quat_block(e, 1));
      CMat ui = conj_transpose(u);
      for (long idx = 0; idx < 3; ++idx) {
        auto c = sl2_->coords(u * sl2_->matrix(idx) * ui);
        for (long t = 0; t < 3; ++t) out.at(nso_ + t, nso_ + idx) = c[t];
      }
    }
    return out;
  }
  const CMat& A = e.blocks[0].cmat();
  if (!is_unitary(A)) throw std::invalid_argument("SymPair::action: matrix block is not unitary");
  CMat Ai = conj_transpose(A);
  long n1 = sl_->dim();
  for (long idx = 0; idx < n1; ++idx) {
    auto c = sl_->coords(A * sl_->matrix(idx) * Ai);
    for (long t = 0; t < n1; ++t) out.at(t, idx) = c[t];
  }
  if (kind_ == Kind::su6sp1) {
    CMat u = quat_su2(quat_block(e, 1));
    CMat ui = conj_transpose(u);
    for (long idx = 0; idx < 3; ++idx) {
      auto c = sl2_->coords(u * sl2_->matrix(idx) * ui);
      for (long t = 0; t < 3; ++t) out.at(n1 + t, n1 + idx) = c[t];
    }
  }
  return out;
}

inline CMat SymPair::act_p(const ModelElement& e) const {
  if (kind_ == Kind::so16) return fock_->half_matrix(e.blocks[0].cliff(), +1);
  if (kind_ == Kind::so12sp1) {
    CMat sm = fock_->half_matrix(e.blocks[0].cliff(), +1);
    CMat u = quat_su2(quat_block(e, 1));
    long hs = (long)hplus_.size();
    CMat out(pdim_, pdim_);
    for (long i = 0; i < hs; ++i)
      for (long j = 0; j < hs; ++j) {
        if (sm.at(i, j).is_zero()) continue;
        for (long s = 0; s < 2; ++s)
          for (long t = 0; t < 2; ++t)
            if (!u.at(s, t).is_zero()) out.at(2 * i + s, 2 * j + t) = sm.at(i, j) * u.at(s, t);
      }
    return out;
  }
  CMat ext = exterior_power(e.blocks[0].cmat(), psubsets_);
  if (kind_ == Kind::su8) return ext;
  CMat u = quat_su2(quat_block(e, 1));
  long np = (long)psubsets_.size();
  CMat out(pdim_, pdim_);
  for (long i = 0; i < np; ++i)
    for (long j = 0; j < np; ++j) {
      if (ext.at(i, j).is_zero()) continue;
      for (long s = 0; s < 2; ++s)
        for (long t = 0; t < 2; ++t)
          if (!u.at(s, t).is_zero()) out.at(2 * i + s, 2 * j + t) = ext.at(i, j) * u.at(s, t);
    }
  return out;
}

inline CMat SymPair::action(const ModelElement& e) const {
  if (!model_) throw std::logic_error("SymPair::action: pair is not model-hosted");
  if (e.blocks.size() != model_->identity().blocks.size())
    throw std::invalid_argument("SymPair::action: element shape does not match the model");
  for (size_t b = 0; b < e.blocks.size(); ++b)
    if (!e.blocks[b].same_shape(model_->identity().blocks[b]))
      throw std::invalid_argument("SymPair::action: element shape does not match the model");
  if (!e.twist.is_identity()) {
    if (!outer_)
      throw std::invalid_argument("SymPair::action: twisted elements are not supported here");
    Twist expect = outer_twist_shape();
    if (!(e.twist == expect))
      throw std::invalid_argument("SymPair::action: unsupported twist shape");
    CMat full = action(ModelElement::plain(e.blocks));
    CMat om(dim(), dim());
    for (long i = 0; i < kdim_; ++i)
      for (long j = 0; j < kdim_; ++j) om.at(i, j) = outer_->on_k.at(i, j);
    for (long i = 0; i < pdim_; ++i)
      for (long j = 0; j < pdim_; ++j) om.at(kdim_ + i, kdim_ + j) = outer_->on_p.at(i, j);
    return full * om;
  }
  CMat k = act_k(e), p = act_p(e);
  CMat out(dim(), dim());
  for (long i = 0; i < kdim_; ++i)
    for (long j = 0; j < kdim_; ++j) out.at(i, j) = k.at(i, j);
  for (long i = 0; i < pdim_; ++i)
    for (long j = 0; j < pdim_; ++j) out.at(kdim_ + i, kdim_ + j) = p.at(i, j);
  return out;
}

}  // namespace exolie

#include "exolie/sympair_build.hpp"
