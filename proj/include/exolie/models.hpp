#pragma once
// Exact models of the classical groups that appear as centralizers:
// special-unitary matrix blocks over Cyclo, compact symplectic blocks as
// quaternionic matrices (q = a + b j with j z = conj(z) j), spin blocks as
// Clifford elements, direct products with an optional diagram twist
// (block permutation and/or entrywise conjugation), quotients by a listed
// finite central subgroup, and the m-function of an abelian subgroup of
// the adjoint group: the commutator of lifts, identified as a power of the
// designated central generator.

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "exolie/clifford.hpp"
#include "exolie/cyclo.hpp"
#include "exolie/linalg.hpp"

namespace exolie {

// ---------------------------------------------------------------------------
// Quaternions over the cyclotomic complex numbers: q = a + b j, with
// j z = conj(z) j and j^2 = -1, so (a+bj)(c+dj) = (ac - b conj(d)) + (ad + b conj(c)) j.
struct Quat {
  Cyclo a, b;
  Quat() : a(0), b(0) {}
  Quat(long v) : a(v), b(0) {}
  explicit Quat(const Cyclo& a_, const Cyclo& b_ = Cyclo(0)) : a(a_), b(b_) {}
  static Quat qi() { return Quat(cyc_i()); }
  static Quat qj() { return Quat(Cyclo(0), Cyclo(1)); }
  static Quat qk() { return Quat(Cyclo(0), cyc_i()); }

  Quat operator*(const Quat& o) const {
    return Quat(a * o.a - b * o.b.conj(), a * o.b + b * o.a.conj());
  }
  Quat operator+(const Quat& o) const { return Quat(a + o.a, b + o.b); }
  Quat operator-(const Quat& o) const { return Quat(a - o.a, b - o.b); }
  Quat& operator+=(const Quat& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  Quat& operator-=(const Quat& o) {
    a -= o.a;
    b -= o.b;
    return *this;
  }
  Quat operator-() const { return Quat(-a, -b); }
  bool operator==(const Quat& o) const { return a == o.a && b == o.b; }
  bool operator!=(const Quat& o) const { return !(*this == o); }
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  // quaternion conjugate: conj(a + bj) = conj(a) - b j
  Quat qconj() const { return Quat(a.conj(), -b); }
  // |q|^2 = q qconj(q), a rational scalar for cyclotomic entries
  Cyclo norm2() const { return a * a.conj() + b * b.conj(); }
  std::string str() const { return "(" + a.str() + ")+(" + b.str() + ")j"; }
};

inline bool field_is_zero(const Quat& q) { return q.is_zero(); }

using HMat = Mat<Quat>;

// ---------------------------------------------------------------------------
// Matrix helpers and the standard constant matrices.
inline CMat conj_transpose(const CMat& m) {
  CMat r(m.cols(), m.rows());
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j) r.at(j, i) = m.at(i, j).conj();
  return r;
}
inline HMat conj_transpose(const HMat& m) {
  HMat r(m.cols(), m.rows());
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j) r.at(j, i) = m.at(i, j).qconj();
  return r;
}
inline bool is_unitary(const CMat& m) {
  return m.rows() == m.cols() && conj_transpose(m) * m == CMat::identity(m.rows());
}
inline bool is_special_unitary(const CMat& m) {
  return is_unitary(m) && determinant(m) == Cyclo(1);
}
inline bool is_quat_unitary(const HMat& m) {
  return m.rows() == m.cols() && conj_transpose(m) * m == HMat::identity(m.rows());
}

inline CMat scalar_matrix(long n, const Cyclo& c) { return CMat::identity(n).scaled(c); }

// diag(I_p, -I_q)
inline CMat mat_ipq(long p, long q) {
  CMat m = CMat::identity(p + q);
  for (long i = p; i < p + q; ++i) m.at(i, i) = Cyclo(-1);
  return m;
}
// J_n = [[0, I_n], [-I_n, 0]]  (2n x 2n antisymmetric)
inline CMat mat_j(long n) {
  CMat m(2 * n, 2 * n);
  for (long i = 0; i < n; ++i) {
    m.at(i, n + i) = Cyclo(1);
    m.at(n + i, i) = Cyclo(-1);
  }
  return m;
}
// J'_n = [[0, I_n], [I_n, 0]]  (2n x 2n symmetric)
inline CMat mat_jprime(long n) {
  CMat m(2 * n, 2 * n);
  for (long i = 0; i < n; ++i) {
    m.at(i, n + i) = Cyclo(1);
    m.at(n + i, i) = Cyclo(1);
  }
  return m;
}

inline CMat block_diag(const std::vector<CMat>& blocks) {
  long n = 0;
  for (const auto& b : blocks) {
    if (b.rows() != b.cols()) throw std::invalid_argument("block_diag: square blocks required");
    n += b.rows();
  }
  CMat m(n, n);
  long off = 0;
  for (const auto& b : blocks) {
    for (long i = 0; i < b.rows(); ++i)
      for (long j = 0; j < b.cols(); ++j) m.at(off + i, off + j) = b.at(i, j);
    off += b.rows();
  }
  return m;
}

// Generalized Pauli pair in SU(n): A_n is the clock matrix, B_n the shift
// with (B v)_i = v_{i+1}; for even n both are scaled by zeta_{2n} to fix
// the determinant.  They satisfy A B = zeta_n^{-1} B A.
inline CMat pauli_a(long n) {
  CMat m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = Cyclo::zeta(n, i % n);
  if (n % 2 == 0) m = m.scaled(Cyclo::zeta(2 * n));
  return m;
}
inline CMat pauli_b(long n) {
  CMat m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, (i + 1) % n) = Cyclo(1);
  if (n % 2 == 0) m = m.scaled(Cyclo::zeta(2 * n));
  return m;
}

// ---------------------------------------------------------------------------
// A block of a product group element.
class Block {
 public:
  enum class Kind { matrix, quat, spin };

  static Block matrix(CMat m) {
    Block b;
    b.kind_ = Kind::matrix;
    b.cm_ = std::move(m);
    return b;
  }
  static Block quat(HMat m) {
    Block b;
    b.kind_ = Kind::quat;
    b.qm_ = std::move(m);
    return b;
  }
  static Block quat1(const Quat& q) {
    HMat m(1, 1);
    m.at(0, 0) = q;
    return quat(std::move(m));
  }
  static Block spin(Clifford c) {
    Block b;
    b.kind_ = Kind::spin;
    b.cl_ = std::move(c);
    return b;
  }

  Kind kind() const { return kind_; }
  const CMat& cmat() const { return cm_; }
  const HMat& qmat() const { return qm_; }
  const Clifford& cliff() const { return *cl_; }

  Block mul(const Block& o) const {
    if (kind_ != o.kind_) throw std::invalid_argument("Block::mul: kind mismatch");
    switch (kind_) {
      case Kind::matrix:
        return matrix(cm_ * o.cm_);
      case Kind::quat:
        return quat(qm_ * o.qm_);
      default:
        return spin(*cl_ * *o.cl_);
    }
  }
  // Inverse of a group-like block: conjugate transpose for (quaternionic)
  // unitary matrices, reversal for spin-normalized Clifford elements.
  // Verified against the identity, so non-group payloads fail loud.
  Block inverse() const {
    Block r;
    switch (kind_) {
      case Kind::matrix: {
        r = matrix(conj_transpose(cm_));
        if (!(cm_ * r.cm_ == CMat::identity(cm_.rows())))
          throw std::logic_error("Block::inverse: matrix payload is not unitary");
        return r;
      }
      case Kind::quat: {
        r = quat(conj_transpose(qm_));
        if (!(qm_ * r.qm_ == HMat::identity(qm_.rows())))
          throw std::logic_error("Block::inverse: quaternion payload is not unitary");
        return r;
      }
      default: {
        r = spin(cl_->reversal());
        if (!(*cl_ * *r.cl_ == Clifford::one(cl_->n())))
          throw std::logic_error("Block::inverse: spin payload is not spin-normalized");
        return r;
      }
    }
  }
  // Entrywise complex conjugation (used by diagram twists).
  Block conj_entries() const {
    switch (kind_) {
      case Kind::matrix: {
        CMat m(cm_.rows(), cm_.cols());
        for (long i = 0; i < m.rows(); ++i)
          for (long j = 0; j < m.cols(); ++j) m.at(i, j) = cm_.at(i, j).conj();
        return matrix(std::move(m));
      }
      case Kind::quat: {
        // conjugation by j: a + bj -> conj(a) + conj(b) j
        HMat m(qm_.rows(), qm_.cols());
        for (long i = 0; i < m.rows(); ++i)
          for (long j = 0; j < m.cols(); ++j)
            m.at(i, j) = Quat(qm_.at(i, j).a.conj(), qm_.at(i, j).b.conj());
        return quat(std::move(m));
      }
      default:
        throw std::logic_error("Block::conj_entries: not defined for spin blocks");
    }
  }
  bool operator==(const Block& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
      case Kind::matrix:
        return cm_ == o.cm_;
      case Kind::quat:
        return qm_ == o.qm_;
      default:
        return *cl_ == *o.cl_;
    }
  }
  bool same_shape(const Block& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
      case Kind::matrix:
        return cm_.rows() == o.cm_.rows() && cm_.cols() == o.cm_.cols();
      case Kind::quat:
        return qm_.rows() == o.qm_.rows() && qm_.cols() == o.qm_.cols();
      default:
        return cl_->n() == o.cl_->n();
    }
  }
  // Canonical form: entries are reduced to their minimal conductor so that
  // equal values always produce equal keys, whatever field the arithmetic
  // passed through.
  std::string key() const {
    std::string s;
    switch (kind_) {
      case Kind::matrix:
        s = "M" + std::to_string(cm_.rows()) + ":";
        for (long i = 0; i < cm_.rows(); ++i)
          for (long j = 0; j < cm_.cols(); ++j) s += cm_.at(i, j).reduced().str() + ",";
        return s;
      case Kind::quat:
        s = "Q" + std::to_string(qm_.rows()) + ":";
        for (long i = 0; i < qm_.rows(); ++i)
          for (long j = 0; j < qm_.cols(); ++j) {
            const Quat& q = qm_.at(i, j);
            s += "(" + q.a.reduced().str() + ")+(" + q.b.reduced().str() + ")j,";
          }
        return s;
      default: {
        s = "S" + std::to_string(cl_->n()) + ":";
        for (const auto& [mask, c] : cl_->terms())
          s += std::to_string(mask) + "*(" + c.reduced().str() + ")|";
        return s;
      }
    }
  }

 private:
  Kind kind_ = Kind::matrix;
  CMat cm_;
  HMat qm_;
  std::optional<Clifford> cl_;
};

// ---------------------------------------------------------------------------
// A diagram twist: t(b)[i] = conj^{c[i]}(b[perm[i]]).
struct Twist {
  std::vector<long> perm;
  std::vector<char> conj;

  static Twist id(long nblocks) {
    Twist t;
    t.perm.resize(nblocks);
    t.conj.assign(nblocks, 0);
    for (long i = 0; i < nblocks; ++i) t.perm[i] = i;
    return t;
  }
  // entrywise conjugation on every block, no permutation
  static Twist conj_all(long nblocks) {
    Twist t = id(nblocks);
    t.conj.assign(nblocks, 1);
    return t;
  }
  bool is_identity() const {
    for (size_t i = 0; i < perm.size(); ++i)
      if (perm[i] != (long)i || conj[i]) return false;
    return true;
  }
  // (this o other): apply other first, then this.
  Twist compose(const Twist& o) const {
    Twist t;
    long n = (long)perm.size();
    t.perm.resize(n);
    t.conj.resize(n);
    for (long i = 0; i < n; ++i) {
      t.perm[i] = o.perm[perm[i]];
      t.conj[i] = (char)(conj[i] ^ o.conj[perm[i]]);
    }
    return t;
  }
  Twist inverse() const {
    Twist t;
    long n = (long)perm.size();
    t.perm.resize(n);
    t.conj.resize(n);
    for (long i = 0; i < n; ++i) t.perm[perm[i]] = i;
    for (long i = 0; i < n; ++i) t.conj[i] = conj[t.perm[i]];
    return t;
  }
  std::vector<Block> apply(const std::vector<Block>& b) const {
    std::vector<Block> out;
    out.reserve(b.size());
    for (size_t i = 0; i < perm.size(); ++i) {
      Block x = b[perm[i]];
      if (conj[i]) x = x.conj_entries();
      out.push_back(std::move(x));
    }
    return out;
  }
  bool operator==(const Twist& o) const { return perm == o.perm && conj == o.conj; }
  std::string key() const {
    std::string s = "T:";
    for (size_t i = 0; i < perm.size(); ++i)
      s += std::to_string(perm[i]) + (conj[i] ? "c" : "") + ".";
    return s;
  }
};

struct ModelElement {
  std::vector<Block> blocks;
  Twist twist;

  static ModelElement plain(std::vector<Block> b) {
    ModelElement e;
    e.twist = Twist::id((long)b.size());
    e.blocks = std::move(b);
    return e;
  }
  static ModelElement twisted(std::vector<Block> b, Twist t) {
    ModelElement e;
    e.blocks = std::move(b);
    e.twist = std::move(t);
    return e;
  }
  std::string key() const {
    std::string s;
    for (const auto& b : blocks) s += b.key() + "|";
    s += twist.key();
    return s;
  }
};

// ---------------------------------------------------------------------------
// A quotient model: H / divisor, where H is a product of blocks extended by
// diagram twists.  `divisor` is the central subgroup defining where the
// catalog group lives (typically the adjoint-level kernel); `m_divisor` is
// the smaller kernel of the simply-connected-level model, and `center`
// designates the generator c of the center the m-function takes values in.
class Model {
 public:
  std::string name;

  Model(std::string nm, ModelElement identity, std::vector<ModelElement> divisor_gens,
        std::vector<ModelElement> m_divisor_gens, std::optional<ModelElement> center_gen,
        long center_order)
      : name(std::move(nm)),
        id_(std::move(identity)),
        center_(std::move(center_gen)),
        center_order_(center_order) {
    m_divisor_ = close_central(m_divisor_gens);
    divisor_ = close_central(divisor_gens);
    if (center_) {
      // powers of c, cached for m identification
      ModelElement p = id_;
      for (long j = 0; j < center_order_; ++j) {
        center_pows_.push_back(p);
        p = mul(p, *center_);
      }
      if (!same_class(p, id_, m_divisor_))
        throw std::logic_error("Model " + name + ": center generator order mismatch");
    }
  }

  const ModelElement& identity() const { return id_; }
  const std::vector<ModelElement>& divisor() const { return divisor_; }
  const std::vector<ModelElement>& m_divisor() const { return m_divisor_; }
  const ModelElement& center() const { return *center_; }
  long center_order() const { return center_order_; }

  ModelElement mul(const ModelElement& x, const ModelElement& y) const {
    ModelElement r;
    std::vector<Block> ty = x.twist.apply(y.blocks);
    r.blocks.reserve(x.blocks.size());
    for (size_t i = 0; i < x.blocks.size(); ++i) r.blocks.push_back(x.blocks[i].mul(ty[i]));
    r.twist = x.twist.compose(y.twist);
    return r;
  }
  ModelElement inverse(const ModelElement& x) const {
    ModelElement r;
    std::vector<Block> inv;
    inv.reserve(x.blocks.size());
    for (const auto& b : x.blocks) inv.push_back(b.inverse());
    Twist ti = x.twist.inverse();
    r.blocks = ti.apply(inv);
    r.twist = ti;
    return r;
  }
  ModelElement power(const ModelElement& x, long k) const {
    ModelElement r = id_;
    ModelElement base = k < 0 ? inverse(x) : x;
    long e = k < 0 ? -k : k;
    for (long i = 0; i < e; ++i) r = mul(r, base);
    return r;
  }
  ModelElement commutator(const ModelElement& x, const ModelElement& y) const {
    return mul(mul(x, y), mul(inverse(x), inverse(y)));
  }

  // Canonical key of the class of x modulo the given central list.
  std::string class_key(const ModelElement& x, const std::vector<ModelElement>& central) const {
    std::string best;
    for (const auto& d : central) {
      std::string k = mul(x, d).key();
      if (best.empty() || k < best) best = k;
    }
    return best;
  }
  std::string class_key(const ModelElement& x) const { return class_key(x, divisor_); }

  bool same_class(const ModelElement& x, const ModelElement& y,
                  const std::vector<ModelElement>& central) const {
    std::string kx = x.key();
    for (const auto& d : central)
      if (mul(y, d).key() == kx) return true;
    return false;
  }
  bool same(const ModelElement& x, const ModelElement& y) const {
    return same_class(x, y, divisor_);
  }
  bool is_identity(const ModelElement& x) const { return same(x, id_); }

  // Least k >= 1 with x^k in the divisor.
  long order(const ModelElement& x, long cap = 96) const {
    ModelElement p = x;
    for (long k = 1; k <= cap; ++k) {
      if (is_identity(p)) return k;
      p = mul(p, x);
    }
    throw std::runtime_error("Model::order: order exceeds cap");
  }

  // Closure of the generated subgroup in the quotient; returns one
  // representative per class.
  std::vector<ModelElement> closure(const std::vector<ModelElement>& gens, long cap = 4096) const {
    std::vector<ModelElement> reps{id_};
    std::set<std::string> seen{class_key(id_)};
    for (size_t head = 0; head < reps.size(); ++head) {
      ModelElement cur = reps[head];
      for (const auto& g : gens) {
        ModelElement nxt = mul(cur, g);
        std::string k = class_key(nxt);
        if (seen.insert(k).second) {
          reps.push_back(std::move(nxt));
          if ((long)reps.size() > cap) throw std::runtime_error("Model::closure: size exceeds cap");
        }
      }
    }
    return reps;
  }

  // The m-function: commutator of the lifts, reduced modulo the
  // simply-connected kernel and identified as a power of the designated
  // central generator c.  Returns the exponent j with m(x,y) = c^j.
  long m_power(const ModelElement& x, const ModelElement& y) const {
    if (!center_) throw std::logic_error("Model::m_power: no designated center");
    ModelElement h = commutator(x, y);
    for (long j = 0; j < center_order_; ++j)
      if (same_class(h, center_pows_[j], m_divisor_)) return j;
    throw std::runtime_error("Model::m_power: non-commuting images");
  }
  ModelElement m_value(const ModelElement& x, const ModelElement& y) const {
    return center_pows_[m_power(x, y)];
  }

 private:
  std::vector<ModelElement> close_central(const std::vector<ModelElement>& gens) const {
    std::vector<ModelElement> out{id_};
    std::set<std::string> seen{id_.key()};
    for (size_t head = 0; head < out.size(); ++head) {
      ModelElement cur = out[head];
      for (const auto& g : gens) {
        if (!g.twist.is_identity())
          throw std::invalid_argument("Model: central divisor elements must be twist-free");
        ModelElement nxt = mul(cur, g);
        if (seen.insert(nxt.key()).second) {
          out.push_back(std::move(nxt));
          if (out.size() > 256) throw std::runtime_error("Model: central divisor not small/finite");
        }
      }
    }
    return out;
  }

  ModelElement id_;
  std::vector<ModelElement> divisor_, m_divisor_;
  std::optional<ModelElement> center_;
  long center_order_ = 1;
  std::vector<ModelElement> center_pows_;
};

// ---------------------------------------------------------------------------
// Model factories for the centralizer groups the catalog uses.

// (SU(6) x Sp(1)) / <(-I,-1)>, adjoint level adds <(omega I, 1)> = <c>.
inline Model model_su6_sp1() {
  ModelElement id = ModelElement::plain({Block::matrix(CMat::identity(6)), Block::quat1(Quat(1))});
  ModelElement minus = ModelElement::plain(
      {Block::matrix(scalar_matrix(6, Cyclo(-1))), Block::quat1(Quat(-1))});
  ModelElement c = ModelElement::plain(
      {Block::matrix(scalar_matrix(6, cyc_omega())), Block::quat1(Quat(1))});
  return Model("su6xsp1", id, {minus, c}, {minus}, c, 3);
}

// (SU(3)^3) / <(wI,wI,wI)>, adjoint level adds c = (wI, w^2 I, I); the
// diagram twist cycles the three factors: eta (A1,A2,A3) eta^-1 = (A2,A3,A1).
inline Model model_su3_cubed() {
  auto sc = [](const Cyclo& z) { return Block::matrix(scalar_matrix(3, z)); };
  Cyclo w = cyc_omega(), w2 = cyc_omega() * cyc_omega(), one(1);
  ModelElement id = ModelElement::plain({sc(one), sc(one), sc(one)});
  ModelElement diag = ModelElement::plain({sc(w), sc(w), sc(w)});
  ModelElement c = ModelElement::plain({sc(w), sc(w2), sc(one)});
  return Model("su3cubed", id, {diag, c}, {diag}, c, 3);
}
// (SU(3)^3) / <(wI,wI,wI)> with no further quotient: the simply-connected
// 3A2 pattern (trivial residual center, lift commutators must land in the
// diagonal scalar subgroup exactly).
inline Model model_su3_cubed_sc() {
  auto sc = [](const Cyclo& z) { return Block::matrix(scalar_matrix(3, z)); };
  Cyclo w = cyc_omega(), one(1);
  ModelElement id = ModelElement::plain({sc(one), sc(one), sc(one)});
  ModelElement diag = ModelElement::plain({sc(w), sc(w), sc(w)});
  return Model("su3cubed-sc", id, {diag}, {diag}, id, 1);
}

// The twist implementing eta in the su3-cubed model.
inline ModelElement su3_cubed_eta() {
  Twist t;
  t.perm = {1, 2, 0};
  t.conj = {0, 0, 0};
  return ModelElement::twisted({Block::matrix(CMat::identity(3)), Block::matrix(CMat::identity(3)),
                                Block::matrix(CMat::identity(3))},
                               t);
}

// (SU(3) x SU(3)) / <(wI, w^-1 I)>: the 2A2 pattern; the quotient kernel is
// the full adjoint divisor and the designated center c = [(wI, w^2 I)] has
// order 3 (the simply-connected-level model is SU(3) x SU(3) itself).
inline Model model_su3_su3() {
  auto sc3 = [](const Cyclo& z) { return Block::matrix(scalar_matrix(3, z)); };
  Cyclo w = cyc_omega(), w2 = cyc_omega() * cyc_omega(), one(1);
  ModelElement id = ModelElement::plain({sc3(one), sc3(one)});
  ModelElement c = ModelElement::plain({sc3(w), sc3(w2)});
  return Model("su3xsu3", id, {c}, {}, c, 3);
}

// SU(8) / <iI>: the A7 pattern; simply-connected level is SU(8) / <-I> and
// c = [iI] generates the residual order-2 center.
inline Model model_su8() {
  ModelElement id = ModelElement::plain({Block::matrix(CMat::identity(8))});
  ModelElement minus = ModelElement::plain({Block::matrix(scalar_matrix(8, Cyclo(-1)))});
  ModelElement c = ModelElement::plain({Block::matrix(scalar_matrix(8, cyc_i()))});
  return Model("su8", id, {c}, {minus}, c, 2);
}

// (SU(6) x SU(3)) / <(-I,I), (wI, w^-1 I)>: the A5+A2 pattern; the
// simply-connected level keeps the order-3 part of the kernel, and
// c = [(-I, I)] has order 2.
inline Model model_su6_su3() {
  ModelElement id =
      ModelElement::plain({Block::matrix(CMat::identity(6)), Block::matrix(CMat::identity(3))});
  ModelElement k3 = ModelElement::plain({Block::matrix(scalar_matrix(6, cyc_omega())),
                                         Block::matrix(scalar_matrix(3, cyc_omega().conj()))});
  ModelElement c = ModelElement::plain(
      {Block::matrix(scalar_matrix(6, Cyclo(-1))), Block::matrix(CMat::identity(3))});
  return Model("su6xsu3", id, {k3, c}, {k3}, c, 2);
}

// (SU(6) x Sp(1) x SU(3)) / <(-I, -1, I), (wI, 1, wI)>: an A5+A1+A2 pattern
// in a group with trivial center (both kernel generators already divide the
// simply connected level, and the residual center is trivial).
inline Model model_su6_sp1_su3() {
  ModelElement id = ModelElement::plain({Block::matrix(CMat::identity(6)), Block::quat1(Quat(1)),
                                         Block::matrix(CMat::identity(3))});
  ModelElement k2 = ModelElement::plain({Block::matrix(scalar_matrix(6, Cyclo(-1))),
                                         Block::quat1(Quat(-1)), Block::matrix(CMat::identity(3))});
  ModelElement k3 =
      ModelElement::plain({Block::matrix(scalar_matrix(6, cyc_omega())), Block::quat1(Quat(1)),
                           Block::matrix(scalar_matrix(3, cyc_omega()))});
  return Model("su6xsp1xsu3", id, {k2, k3}, {k2, k3}, id, 1);
}

// (Spin(12) x Sp(1)) / <(-w, -1), (w, 1)>: the D6+A1 pattern (w = volume);
// the simply-connected level divides by <(-w, -1)> only, so the residual
// order-2 center is generated by c = [(w, 1)] = [(-1, -1)].
inline Model model_spin12_sp1() {
  ModelElement id = ModelElement::plain({Block::spin(Clifford::one(12)), Block::quat1(Quat(1))});
  ModelElement mm =
      ModelElement::plain({Block::spin(Clifford(12, Cyclo(-1))), Block::quat1(Quat(-1))});
  ModelElement mw = ModelElement::plain(
      {Block::spin(Clifford::volume(12).scale(Cyclo(-1))), Block::quat1(Quat(-1))});
  ModelElement c = ModelElement::plain({Block::spin(Clifford::volume(12)), Block::quat1(Quat(1))});
  return Model("spin12xsp1", id, {mm, c}, {mw}, c, 2);
}

// Sp(1)^3 / <(-1,-1,-1)>: the 3A1 pattern; simply connected level is
// Sp(1)^3 itself and c = [(-1,-1,-1)].
inline Model model_sp1_cubed() {
  auto q = [](long v) { return Block::quat1(Quat(v)); };
  ModelElement id = ModelElement::plain({q(1), q(1), q(1)});
  ModelElement c = ModelElement::plain({q(-1), q(-1), q(-1)});
  return Model("sp1cubed", id, {c}, {}, c, 2);
}

// Spin(n) with no quotient and no residual center pairing (the designated
// center is trivial: lift commutators must vanish exactly).
inline Model model_spin_plain(long n) {
  ModelElement id = ModelElement::plain({Block::spin(Clifford::one(n))});
  return Model("spin" + std::to_string(n), id, {}, {}, id, 1);
}

// (Spin(8) x Sp(1)) / <(-1,-1)>: the D4+A1 pattern; simply connected level
// is the product itself and c = [(-1,-1)].
inline Model model_spin8_sp1() {
  ModelElement id = ModelElement::plain({Block::spin(Clifford::one(8)), Block::quat1(Quat(1))});
  ModelElement c =
      ModelElement::plain({Block::spin(Clifford(8, Cyclo(-1))), Block::quat1(Quat(-1))});
  return Model("spin8xsp1", id, {c}, {}, c, 2);
}

// (Spin(10) x Sp(1)) / <(-1,-1)>: the D5+A1 pattern.
inline Model model_spin10_sp1() {
  ModelElement id = ModelElement::plain({Block::spin(Clifford::one(10)), Block::quat1(Quat(1))});
  ModelElement c =
      ModelElement::plain({Block::spin(Clifford(10, Cyclo(-1))), Block::quat1(Quat(-1))});
  return Model("spin10xsp1", id, {c}, {}, c, 2);
}

// Spin(12) / <volume>: the half-spin group (D6 pattern inside a group with
// order-2 center); c = [volume] at the simply connected level.
inline Model model_spin12_half() {
  ModelElement id = ModelElement::plain({Block::spin(Clifford::one(12))});
  ModelElement w = ModelElement::plain({Block::spin(Clifford::volume(12))});
  return Model("spin12half", id, {w}, {}, w, 2);
}

// Spin(16) / <volume>: the half-spin group inside a group with trivial
// center.  The residual center [-1] is designated as an order-2 class for
// model-level pairings only.
inline Model model_spin16() {
  ModelElement id = ModelElement::plain({Block::spin(Clifford::one(16))});
  ModelElement w = ModelElement::plain({Block::spin(Clifford::volume(16))});
  ModelElement minus = ModelElement::plain({Block::spin(Clifford(16, Cyclo(-1)))});
  return Model("spin16", id, {w}, {w}, minus, 2);
}

// (SU(5) x SU(5)) / <(w5 I, w5^2 I)>: the 2A4 pattern inside a group with
// trivial center; the designated center is trivial.
inline Model model_su5_su5() {
  ModelElement id =
      ModelElement::plain({Block::matrix(CMat::identity(5)), Block::matrix(CMat::identity(5))});
  ModelElement k = ModelElement::plain({Block::matrix(scalar_matrix(5, Cyclo::zeta(5))),
                                        Block::matrix(scalar_matrix(5, Cyclo::zeta(5, 2)))});
  return Model("su5xsu5", id, {k}, {k}, id, 1);
}

// SU(9) / <wI>: the A8 pattern inside a group with trivial center; the
// designated center is trivial.
inline Model model_su9() {
  ModelElement id = ModelElement::plain({Block::matrix(CMat::identity(9))});
  ModelElement k = ModelElement::plain({Block::matrix(scalar_matrix(9, cyc_omega()))});
  return Model("su9", id, {k}, {k}, id, 1);
}

}  // namespace exolie
