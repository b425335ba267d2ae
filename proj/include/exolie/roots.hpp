#pragma once
// Root systems of types E6, E7 and E8 in the standard (Bourbaki) numbering.
// Roots are stored as integer coordinate vectors over the simple basis; all
// pairings go through the Cartan matrix, so no Euclidean embedding is needed.
//
// Node indices are 0-based throughout (node i here is alpha_{i+1} in the
// usual labelling).  Root indices: [0, npos) are the positive roots ordered
// by (height, lex); index npos + p is the negative of positive root p.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "exolie/linalg.hpp"
#include "exolie/numeric.hpp"

namespace exolie {

using RootCoords = std::vector<long>;
using NodeMatrix = std::vector<std::vector<long>>;  // rank x rank, row-major

class RootSystem {
 public:
  static const RootSystem& get(const std::string& name);

  const std::string& name() const { return name_; }
  long rank() const { return rank_; }
  long cartan(long i, long j) const { return cartan_[i][j]; }
  long npos() const { return npos_; }
  long nroots() const { return 2 * npos_; }
  long dim() const { return rank_ + 2 * npos_; }

  const RootCoords& root(long idx) const { return roots_[idx]; }
  long root_index(const RootCoords& c) const {
    auto it = index_.find(c);
    return it == index_.end() ? -1 : it->second;
  }
  bool is_positive(long idx) const { return idx < npos_; }
  long neg(long idx) const { return idx < npos_ ? idx + npos_ : idx - npos_; }
  // Index of simple root i.
  long simple(long i) const { return simple_idx_[i]; }

  std::optional<long> sum(long a, long b) const {
    RootCoords c = roots_[a];
    for (long k = 0; k < rank_; ++k) c[k] += roots_[b][k];
    long idx = root_index(c);
    if (idx < 0) return std::nullopt;
    return idx;
  }

  long height(long idx) const {
    long h = 0;
    for (long v : roots_[idx]) h += v;
    return h;
  }

  long pairing_coords(const RootCoords& a, const RootCoords& b) const {
    long s = 0;
    for (long i = 0; i < rank_; ++i) {
      if (a[i] == 0) continue;
      for (long j = 0; j < rank_; ++j)
        if (b[j] != 0) s += a[i] * cartan_[i][j] * b[j];
    }
    return s;
  }
  // <root_a, root_b-coroot>; symmetric since all roots have equal length here.
  long pairing(long a, long b) const { return pairing_coords(roots_[a], roots_[b]); }

  long highest() const { return highest_; }
  RootCoords marks() const { return roots_[highest_]; }
  long coxeter_number() const { return height(highest_) + 1; }

  // --- reflections and Weyl words ------------------------------------------
  long reflect(long rootidx, long i) const {
    RootCoords c = roots_[rootidx];
    long p = 0;
    for (long j = 0; j < rank_; ++j) p += cartan_[i][j] * c[j];
    c[i] -= p;
    long idx = root_index(c);
    if (idx < 0) throw std::logic_error("reflect: image is not a root");
    return idx;
  }

  NodeMatrix identity_matrix() const {
    NodeMatrix m(rank_, std::vector<long>(rank_, 0));
    for (long i = 0; i < rank_; ++i) m[i][i] = 1;
    return m;
  }

  // Action of s_i on root coordinates: s_i(alpha_j) = alpha_j - cartan(i,j) alpha_i.
  NodeMatrix simple_reflection_matrix(long i) const {
    NodeMatrix m = identity_matrix();
    for (long j = 0; j < rank_; ++j) m[i][j] -= cartan_[i][j];
    return m;
  }

  // Action of the reflection in an arbitrary root.
  NodeMatrix reflection_matrix(long rootidx) const {
    NodeMatrix m = identity_matrix();
    const RootCoords& g = roots_[rootidx];
    for (long j = 0; j < rank_; ++j) {
      long p = 0;
      for (long k = 0; k < rank_; ++k) p += cartan_[j][k] * g[k];
      for (long r = 0; r < rank_; ++r) m[r][j] -= p * g[r];
    }
    return m;
  }

  static NodeMatrix mat_mul(const NodeMatrix& a, const NodeMatrix& b) {
    long n = (long)a.size();
    NodeMatrix c(n, std::vector<long>(n, 0));
    for (long i = 0; i < n; ++i)
      for (long k = 0; k < n; ++k)
        if (a[i][k] != 0)
          for (long j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
  }

  RootCoords apply_matrix(const NodeMatrix& m, const RootCoords& v) const {
    RootCoords out(rank_, 0);
    for (long j = 0; j < rank_; ++j)
      if (v[j] != 0)
        for (long i = 0; i < rank_; ++i) out[i] += m[i][j] * v[j];
    return out;
  }

  // A word [i0, i1, ..., ik-1] denotes the product s_{i0} s_{i1} ... s_{ik-1};
  // applied to a vector, the rightmost letter acts first.
  NodeMatrix word_matrix(const std::vector<long>& word) const {
    NodeMatrix m = identity_matrix();
    for (long i : word) m = mat_mul(m, simple_reflection_matrix(i));
    return m;
  }

  RootCoords apply_word(const std::vector<long>& word, RootCoords v) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      long i = *it;
      long p = 0;
      for (long j = 0; j < rank_; ++j) p += cartan_[i][j] * v[j];
      v[i] -= p;
    }
    return v;
  }

  long apply_word_to_root(const std::vector<long>& word, long idx) const {
    long r = root_index(apply_word(word, roots_[idx]));
    if (r < 0) throw std::logic_error("apply_word_to_root: image is not a root");
    return r;
  }

  // True iff M preserves the pairing (hence permutes the roots).
  bool is_root_automorphism(const NodeMatrix& m) const {
    for (long i = 0; i < rank_; ++i)
      for (long j = 0; j < rank_; ++j) {
        long s = 0;
        for (long a = 0; a < rank_; ++a)
          for (long b = 0; b < rank_; ++b) s += m[a][i] * cartan_[a][b] * m[b][j];
        if (s != cartan_[i][j]) return false;
      }
    return true;
  }

  struct Factorization {
    std::vector<long> diagram;  // node permutation; diagram[i] = image of node i
    std::vector<long> word;     // M = P(diagram) * prod_j S_{word[j]}
    bool diagram_trivial() const {
      for (size_t i = 0; i < diagram.size(); ++i)
        if (diagram[i] != (long)i) return false;
      return true;
    }
  };

  // Descent walk: factor a root-system automorphism as diagram-part times a
  // reduced Weyl word.  Returns nullopt if M is not an automorphism.
  std::optional<Factorization> weyl_factorize(NodeMatrix m) const {
    if (!is_root_automorphism(m)) return std::nullopt;
    std::vector<long> rec;
    for (long guard = 0; guard <= npos_ + 1; ++guard) {
      long desc = -1;
      for (long i = 0; i < rank_ && desc < 0; ++i) {
        bool neg = false, pos = false;
        for (long r = 0; r < rank_; ++r) {
          if (m[r][i] < 0) neg = true;
          if (m[r][i] > 0) pos = true;
        }
        if (neg && !pos) desc = i;
      }
      if (desc < 0) break;
      m = mat_mul(m, simple_reflection_matrix(desc));
      rec.push_back(desc);
    }
    // The residue must be a permutation of the simple roots.
    Factorization f;
    f.diagram.assign(rank_, -1);
    for (long j = 0; j < rank_; ++j) {
      long img = -1;
      for (long i = 0; i < rank_; ++i) {
        if (m[i][j] == 0) continue;
        if (m[i][j] != 1 || img >= 0) return std::nullopt;
        img = i;
      }
      if (img < 0) return std::nullopt;
      f.diagram[j] = img;
    }
    f.word.assign(rec.rbegin(), rec.rend());
    return f;
  }

  // --- subsystems -----------------------------------------------------------
  // Closure of a set of roots under negation and root-sums (equals closure
  // under the reflections it contains, in the simply-laced case).
  std::vector<long> subsystem_closure(const std::vector<long>& gens) const {
    std::vector<char> inset(nroots(), 0);
    std::vector<long> work;
    auto add = [&](long idx) {
      if (!inset[idx]) {
        inset[idx] = 1;
        work.push_back(idx);
      }
    };
    for (long g : gens) {
      add(g);
      add(neg(g));
    }
    for (size_t head = 0; head < work.size(); ++head) {
      long a = work[head];
      size_t stop = work.size();
      for (size_t k = 0; k < stop; ++k) {
        auto s = sum(a, work[k]);
        if (s) {
          add(*s);
          add(neg(*s));
        }
      }
    }
    std::sort(work.begin(), work.end());
    return work;
  }

  // Simple system of a closed subsystem: indecomposable positive members.
  std::vector<long> subsystem_simples(const std::vector<long>& closed) const {
    std::vector<char> inset(nroots(), 0);
    for (long r : closed) inset[r] = 1;
    std::vector<long> pos;
    for (long r : closed)
      if (is_positive(r)) pos.push_back(r);
    std::vector<long> simples;
    for (long a : pos) {
      bool decomposable = false;
      for (long b : pos) {
        if (b == a) continue;
        RootCoords c = roots_[a];
        for (long k = 0; k < rank_; ++k) c[k] -= roots_[b][k];
        long idx = root_index(c);
        if (idx >= 0 && inset[idx] && is_positive(idx)) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) simples.push_back(a);
    }
    return simples;
  }

  // Canonical ADE type of a closed subsystem, e.g. "A5+A1", "A2+A2+A2", "D4".
  // Empty set gives "".  Throws if a component is not of type A/D/E (cannot
  // happen for genuine closed subsystems here).
  std::string subsystem_type(const std::vector<long>& closed) const {
    std::vector<long> s = subsystem_simples(closed);
    long n = (long)s.size();
    if (n == 0) return "";
    // Adjacency among the subsystem's simple roots.
    std::vector<std::vector<long>> adj(n);
    for (long i = 0; i < n; ++i)
      for (long j = i + 1; j < n; ++j)
        if (pairing(s[i], s[j]) != 0) {
          adj[i].push_back(j);
          adj[j].push_back(i);
        }
    std::vector<char> seen(n, 0);
    std::vector<std::pair<long, char>> comps;  // (rank, letter)
    for (long start = 0; start < n; ++start) {
      if (seen[start]) continue;
      std::vector<long> comp{start};
      seen[start] = 1;
      for (size_t h = 0; h < comp.size(); ++h)
        for (long nb : adj[comp[h]])
          if (!seen[nb]) {
            seen[nb] = 1;
            comp.push_back(nb);
          }
      comps.push_back(classify_component(comp, adj));
    }
    std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    std::string out;
    for (size_t i = 0; i < comps.size(); ++i) {
      if (i) out += "+";
      out += comps[i].second;
      out += std::to_string(comps[i].first);
    }
    return out;
  }

  QMat cartan_qmat() const {
    QMat m(rank_, rank_);
    for (long i = 0; i < rank_; ++i)
      for (long j = 0; j < rank_; ++j) m.at(i, j) = Rational(cartan_[i][j]);
    return m;
  }

  // Coweight vector x (coroot coordinates) with alpha_j(x) = delta_ij.
  std::vector<Rational> fundamental_coweight(long i) const {
    Mat<Rational> m = cartan_qmat();
    std::vector<Rational> b(rank_, Rational(0));
    b[i] = Rational(1);
    auto x = solve(m, b);
    if (!x) throw std::logic_error("cartan matrix singular");
    return *x;
  }

 private:
  std::string name_;
  long rank_ = 0;
  std::vector<std::vector<long>> cartan_;
  std::vector<RootCoords> roots_;
  std::map<RootCoords, long> index_;
  long npos_ = 0;
  long highest_ = -1;
  std::vector<long> simple_idx_;

  static std::pair<long, char> classify_component(const std::vector<long>& comp,
                                                  const std::vector<std::vector<long>>& adj) {
    long n = (long)comp.size();
    long branch = -1, maxdeg = 0, edges = 0;
    for (long v : comp) {
      long d = 0;
      for (long nb : adj[v])
        if (std::find(comp.begin(), comp.end(), nb) != comp.end()) ++d;
      edges += d;
      if (d > maxdeg) maxdeg = d;
      if (d == 3) branch = v;
      if (d > 3) throw std::logic_error("subsystem component has a degree-4 node");
    }
    edges /= 2;
    if (edges != n - 1) throw std::logic_error("subsystem component is not a tree");
    if (maxdeg <= 2) return {n, 'A'};
    long nbranch = 0;
    for (long v : comp) {
      long d = 0;
      for (long nb : adj[v])
        if (std::find(comp.begin(), comp.end(), nb) != comp.end()) ++d;
      if (d == 3) ++nbranch;
    }
    if (nbranch != 1) throw std::logic_error("subsystem component has two branch nodes");
    // Arm lengths from the branch node.
    std::vector<long> arms;
    for (long nb : adj[branch]) {
      if (std::find(comp.begin(), comp.end(), nb) == comp.end()) continue;
      long len = 1, prev = branch, cur = nb;
      for (;;) {
        long next = -1;
        for (long nn : adj[cur])
          if (nn != prev && std::find(comp.begin(), comp.end(), nn) != comp.end()) next = nn;
        if (next < 0) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() != 3) throw std::logic_error("branch node arm count");
    if (arms[0] == 1 && arms[1] == 1) return {n, 'D'};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {n, 'E'};
    throw std::logic_error("subsystem component is not of type A/D/E");
  }

  void build(const std::string& name) {
    name_ = name;
    std::vector<std::pair<long, long>> edges;
    if (name == "e6") {
      rank_ = 6;
      edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
    } else if (name == "e7") {
      rank_ = 7;
      edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 3}};
    } else if (name == "e8") {
      rank_ = 8;
      edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
    } else {
      throw std::invalid_argument("unknown root system: " + name);
    }
    cartan_.assign(rank_, std::vector<long>(rank_, 0));
    for (long i = 0; i < rank_; ++i) cartan_[i][i] = 2;
    for (auto [a, b] : edges) cartan_[a][b] = cartan_[b][a] = -1;

    // Enumerate positive roots by height.
    std::map<RootCoords, long> seen;  // coords -> height
    std::vector<RootCoords> layer;
    std::vector<RootCoords> pos;
    for (long i = 0; i < rank_; ++i) {
      RootCoords c(rank_, 0);
      c[i] = 1;
      layer.push_back(c);
      seen[c] = 1;
      pos.push_back(c);
    }
    while (!layer.empty()) {
      std::vector<RootCoords> next;
      for (const RootCoords& b : layer) {
        for (long i = 0; i < rank_; ++i) {
          long p = 0;
          for (long j = 0; j < rank_; ++j) p += cartan_[i][j] * b[j];
          if (p >= 0) continue;  // simply laced: b + alpha_i is a root iff p = -1
          RootCoords c = b;
          c[i] += 1;
          if (seen.count(c)) continue;
          seen[c] = 1;
          next.push_back(c);
          pos.push_back(c);
        }
      }
      layer = std::move(next);
    }
    auto ht = [](const RootCoords& c) {
      long h = 0;
      for (long v : c) h += v;
      return h;
    };
    std::sort(pos.begin(), pos.end(), [&](const RootCoords& a, const RootCoords& b) {
      long ha = ht(a), hb = ht(b);
      if (ha != hb) return ha < hb;
      return a < b;
    });
    npos_ = (long)pos.size();
    roots_ = pos;
    for (const RootCoords& c : pos) {
      RootCoords n(rank_);
      for (long i = 0; i < rank_; ++i) n[i] = -c[i];
      roots_.push_back(n);
    }
    for (long i = 0; i < nroots(); ++i) index_[roots_[i]] = i;
    highest_ = npos_ - 1;
    simple_idx_.assign(rank_, -1);
    for (long i = 0; i < rank_; ++i) {
      RootCoords c(rank_, 0);
      c[i] = 1;
      simple_idx_[i] = root_index(c);
    }
  }

  friend const RootSystem& root_system_get(const std::string&);
};

inline const RootSystem& RootSystem::get(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it == cache.end()) {
    auto rs = std::unique_ptr<RootSystem>(new RootSystem());
    rs->build(name);
    it = cache.emplace(name, std::move(rs)).first;
  }
  return *it->second;
}

}  // namespace exolie
