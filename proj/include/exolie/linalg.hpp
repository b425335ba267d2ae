#pragma once

// Small exact dense linear algebra over Cyclo (or Rational).
//
// Elimination is division-free by default (cross-multiplication rows), with a
// fast path that normalizes monomial pivots exactly; this avoids coefficient
// blowup from repeated general cyclotomic inversion.  Row operations preserve
// row space, hence kernels and ranks, so no bookkeeping of multipliers is
// needed.

#include "exolie/cyclo.hpp"

#include <optional>
#include <vector>

namespace exolie {

inline bool field_is_zero(const Cyclo& x) { return x.is_zero(); }
inline bool field_is_zero(const Rational& x) { return x == 0; }
inline Cyclo field_inv(const Cyclo& x) { return x.inverse(); }
inline Rational field_inv(const Rational& x) { return Rational(1) / x; }

template <typename T>
class Mat {
 public:
  Mat() : r_(0), c_(0) {}
  Mat(long r, long c) : r_(r), c_(c), a_(r * c) {}

  long rows() const { return r_; }
  long cols() const { return c_; }
  T& at(long i, long j) { return a_[i * c_ + j]; }
  const T& at(long i, long j) const { return a_[i * c_ + j]; }

  static Mat identity(long n) {
    Mat m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  friend Mat operator*(const Mat& x, const Mat& y) {
    Mat z(x.r_, y.c_);
    for (long i = 0; i < x.r_; ++i)
      for (long k = 0; k < x.c_; ++k) {
        const T& v = x.at(i, k);
        if (field_is_zero(v)) continue;
        for (long j = 0; j < y.c_; ++j) {
          const T& w = y.at(k, j);
          if (!field_is_zero(w)) z.at(i, j) += v * w;
        }
      }
    return z;
  }
  friend Mat operator+(const Mat& x, const Mat& y) {
    Mat z = x;
    for (size_t i = 0; i < z.a_.size(); ++i) z.a_[i] += y.a_[i];
    return z;
  }
  friend Mat operator-(const Mat& x, const Mat& y) {
    Mat z = x;
    for (size_t i = 0; i < z.a_.size(); ++i) z.a_[i] -= y.a_[i];
    return z;
  }
  friend bool operator==(const Mat& x, const Mat& y) {
    if (x.r_ != y.r_ || x.c_ != y.c_) return false;
    for (size_t i = 0; i < x.a_.size(); ++i)
      if (!(x.a_[i] == y.a_[i])) return false;
    return true;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    std::vector<T> out(r_);
    for (long i = 0; i < r_; ++i)
      for (long j = 0; j < c_; ++j)
        if (!field_is_zero(at(i, j)) && !field_is_zero(v[j])) out[i] += at(i, j) * v[j];
    return out;
  }

  Mat scaled(const T& s) const {
    Mat z = *this;
    for (auto& v : z.a_) v = v * s;
    return z;
  }

  Mat transposed() const {
    Mat z(c_, r_);
    for (long i = 0; i < r_; ++i)
      for (long j = 0; j < c_; ++j) z.at(j, i) = at(i, j);
    return z;
  }

 private:
  long r_, c_;
  std::vector<T> a_;
};

using CMat = Mat<Cyclo>;
using QMat = Mat<Rational>;

namespace detail {

// True if x is c*zeta^k for rational c (so its inverse is cheap and exact).
inline bool is_monomial(const Cyclo& x) {
  int nz = 0;
  for (const auto& q : x.coeffs())
    if (q != 0) ++nz;
  return nz == 1;
}
inline bool is_monomial(const Rational&) { return true; }

}  // namespace detail

// Forward elimination to row echelon form in place; returns pivot columns.
template <typename T>
std::vector<long> echelonize(Mat<T>& m) {
  std::vector<long> pivots;
  long r = 0;
  for (long col = 0; col < m.cols() && r < m.rows(); ++col) {
    // Pivot choice: prefer a monomial entry (exact cheap inverse).
    long piv = -1;
    for (long i = r; i < m.rows(); ++i) {
      if (field_is_zero(m.at(i, col))) continue;
      if (piv < 0) piv = i;
      if (detail::is_monomial(m.at(i, col))) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r)
      for (long j = col; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(piv, j));
    const bool unit = detail::is_monomial(m.at(r, col));
    if (unit) {
      T inv = field_inv(m.at(r, col));
      for (long j = col; j < m.cols(); ++j)
        if (!field_is_zero(m.at(r, j))) m.at(r, j) = m.at(r, j) * inv;
    }
    for (long i = r + 1; i < m.rows(); ++i) {
      if (field_is_zero(m.at(i, col))) continue;
      T f = m.at(i, col);
      if (unit) {
        for (long j = col; j < m.cols(); ++j)
          if (!field_is_zero(m.at(r, j))) m.at(i, j) -= f * m.at(r, j);
      } else {
        T p = m.at(r, col);
        for (long j = col; j < m.cols(); ++j) {
          m.at(i, j) = m.at(i, j) * p - f * m.at(r, j);
        }
      }
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

template <typename T>
long rank(Mat<T> m) {
  return (long)echelonize(m).size();
}

template <typename T>
T determinant(Mat<T> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: square matrix required");
  long n = m.rows();
  T d(1);
  for (long c = 0; c < n; ++c) {
    long piv = -1;
    for (long i = c; i < n; ++i) {
      if (field_is_zero(m.at(i, c))) continue;
      if (piv < 0) piv = i;
      if (detail::is_monomial(m.at(i, c))) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return T(0);
    if (piv != c) {
      for (long j = c; j < n; ++j) std::swap(m.at(c, j), m.at(piv, j));
      d = d * T(-1);
    }
    d = d * m.at(c, c);
    T inv = field_inv(m.at(c, c));
    for (long i = c + 1; i < n; ++i) {
      if (field_is_zero(m.at(i, c))) continue;
      T f = m.at(i, c) * inv;
      for (long j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return d;
}

// Basis of {x : m x = 0}, as column vectors.
template <typename T>
std::vector<std::vector<T>> nullspace(Mat<T> m) {
  auto pivots = echelonize(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (long c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (long f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> x(m.cols());
    x[f] = T(1);
    // Back-substitute pivot rows from the bottom up.
    for (long r = (long)pivots.size() - 1; r >= 0; --r) {
      long pc = pivots[r];
      T acc{};
      for (long j = pc + 1; j < m.cols(); ++j)
        if (!field_is_zero(m.at(r, j)) && !field_is_zero(x[j])) acc += m.at(r, j) * x[j];
      if (field_is_zero(acc))
        x[pc] = T{};
      else
        x[pc] = T{} - acc * field_inv(m.at(r, pc));
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

// One solution of m x = b, if any.
template <typename T>
std::optional<std::vector<T>> solve(Mat<T> m, const std::vector<T>& b) {
  Mat<T> aug(m.rows(), m.cols() + 1);
  for (long i = 0; i < m.rows(); ++i) {
    for (long j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  auto pivots = echelonize(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // inconsistent
  std::vector<T> x(m.cols());
  for (long r = (long)pivots.size() - 1; r >= 0; --r) {
    long pc = pivots[r];
    T acc = aug.at(r, m.cols());
    for (long j = pc + 1; j < m.cols(); ++j)
      if (!field_is_zero(aug.at(r, j)) && !field_is_zero(x[j])) acc -= aug.at(r, j) * x[j];
    x[pc] = acc * field_inv(aug.at(r, pc));
  }
  return x;
}

// Basis of the joint eigenspace {v : A_i v = lambda_i v for all i}.
// Restriction is iterative: each operator cuts the basis of the space found
// so far, which keeps later eliminations tiny.
template <typename T>
std::vector<std::vector<T>> joint_eigenspace_basis(const std::vector<Mat<T>>& ops,
                                                   const std::vector<T>& lambdas) {
  if (ops.empty()) return {};
  long n = ops[0].cols();
  // Current subspace basis as columns of K (starts as full space).
  std::vector<std::vector<T>> basis;
  bool first = true;
  for (size_t t = 0; t < ops.size(); ++t) {
    const Mat<T>& A = ops[t];
    if (first) {
      Mat<T> m = A;
      for (long i = 0; i < n; ++i) m.at(i, i) -= lambdas[t];
      basis = nullspace(m);
      first = false;
    } else {
      Mat<T> m(n, (long)basis.size());
      for (size_t j = 0; j < basis.size(); ++j) {
        auto img = A.apply(basis[j]);
        for (long i = 0; i < n; ++i) m.at(i, (long)j) = img[i] - lambdas[t] * basis[j][i];
      }
      auto coords = nullspace(m);
      std::vector<std::vector<T>> next;
      for (const auto& cvec : coords) {
        std::vector<T> v(n);
        for (size_t j = 0; j < basis.size(); ++j)
          if (!field_is_zero(cvec[j]))
            for (long i = 0; i < n; ++i) v[i] += basis[j][i] * cvec[j];
        next.push_back(std::move(v));
      }
      basis = std::move(next);
    }
    if (basis.empty()) return {};
  }
  return basis;
}

template <typename T>
long joint_eigenspace_dim(const std::vector<Mat<T>>& ops, const std::vector<T>& lambdas) {
  return (long)joint_eigenspace_basis(ops, lambdas).size();
}

template <typename T>
long joint_fixed_dim(const std::vector<Mat<T>>& ops) {
  return joint_eigenspace_dim(ops, std::vector<T>(ops.size(), T(1)));
}

}  // namespace exolie
