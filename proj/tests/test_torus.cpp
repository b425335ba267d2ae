// Torus elements: orders, fixed subsystems, Kac coordinates.  Frozen values
// are hand-computed from the Cartan matrices (see comments).

#include "exolie/torus.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace exolie;

namespace {
long al(long i) { return i - 1; }

TorusElement thirds(const RootSystem& rs, std::initializer_list<long> nums) {
  std::vector<Rational> x;
  for (long n : nums) x.push_back(Rational(n) / 3);
  return TorusElement(rs, x);
}
}  // namespace

TEST_CASE("central element of E6") {
  const RootSystem& e6 = RootSystem::get("e6");
  // x = (1,0,2,0,1,2)/3: C x = (0,0,1,-1,0,1), integral, so adjoint-trivial.
  TorusElement c = thirds(e6, {1, 0, 2, 0, 1, 2});
  REQUIRE(c.order_sc() == 3);
  REQUIRE(c.order_adjoint() == 1);
  REQUIRE(c.is_identity_adjoint());
  REQUIRE(!c.is_identity_sc());
  REQUIRE(c.same_adjoint(TorusElement(e6)));
  REQUIRE((long)c.fixed_roots().size() == e6.nroots());
  REQUIRE(c.dim_fixed() == 78);
  // The fundamental coweight for node 1 is another center representative.
  TorusElement w1 = TorusElement::coweight(e6, al(1));
  REQUIRE(w1.order_sc() == 3);
  REQUIRE(w1.order_adjoint() == 1);
  // c + c + c = identity in the simply connected torus.
  REQUIRE((c + c + c) == TorusElement(e6));
  REQUIRE(c + c != TorusElement(e6));
}

TEST_CASE("order-3 classes of E6: centralizers 3A2 and D4") {
  const RootSystem& e6 = RootSystem::get("e6");
  TorusElement t1 = thirds(e6, {2, 0, 1, 0, 0, 0});
  REQUIRE(t1.order_sc() == 3);
  REQUIRE(t1.order_adjoint() == 3);
  auto f1 = t1.fixed_roots();
  REQUIRE(f1.size() == 18);
  REQUIRE(e6.subsystem_type(f1) == "A2+A2+A2");
  REQUIRE(t1.dim_fixed() == 24);  // su(3)^3

  TorusElement t2 = thirds(e6, {2, 1, 2, 2, 1, 0});
  REQUIRE(t2.order_adjoint() == 3);
  auto f2 = t2.fixed_roots();
  REQUIRE(f2.size() == 24);
  REQUIRE(e6.subsystem_type(f2) == "D4");
  REQUIRE(t2.dim_fixed() == 30);  // so(8) + 2-dim torus part
}

TEST_CASE("involution representatives and centralizer types") {
  const RootSystem& e6 = RootSystem::get("e6");
  TorusElement s1 = TorusElement::coweight(e6, al(2), 2);
  REQUIRE(s1.order_sc() == 2);
  REQUIRE(e6.subsystem_type(s1.fixed_roots()) == "A5+A1");
  REQUIRE(s1.dim_fixed() == 38);  // su(6)+su(2)

  const RootSystem& e7 = RootSystem::get("e7");
  TorusElement s7 = TorusElement::coweight(e7, al(1), 2);
  REQUIRE(e7.subsystem_type(s7.fixed_roots()) == "D6+A1");
  REQUIRE(s7.dim_fixed() == 69);  // so(12)+su(2)

  const RootSystem& e8 = RootSystem::get("e8");
  TorusElement a = TorusElement::coweight(e8, al(8), 2);
  REQUIRE(e8.subsystem_type(a.fixed_roots()) == "E7+A1");
  REQUIRE(a.dim_fixed() == 136);
  TorusElement b = TorusElement::coweight(e8, al(1), 2);
  REQUIRE(e8.subsystem_type(b.fixed_roots()) == "D8");
  REQUIRE(b.dim_fixed() == 120);
}

TEST_CASE("affine node attachment") {
  // The highest root pairs 1 with exactly one simple root: alpha_2 for E6,
  // alpha_1 for E7, alpha_8 for E8.
  const RootSystem& e6 = RootSystem::get("e6");
  for (long i = 0; i < 6; ++i)
    REQUIRE(e6.pairing(e6.highest(), e6.simple(i)) == (i == al(2) ? 1 : 0));
  const RootSystem& e7 = RootSystem::get("e7");
  for (long i = 0; i < 7; ++i)
    REQUIRE(e7.pairing(e7.highest(), e7.simple(i)) == (i == al(1) ? 1 : 0));
  const RootSystem& e8 = RootSystem::get("e8");
  for (long i = 0; i < 8; ++i)
    REQUIRE(e8.pairing(e8.highest(), e8.simple(i)) == (i == al(8) ? 1 : 0));
}

TEST_CASE("omega rotations are mark-preserving affine diagram automorphisms") {
  for (const char* name : {"e6", "e7", "e8"}) {
    const RootSystem& rs = RootSystem::get(name);
    long r = rs.rank();
    // Extended Cartan matrix: node 0 is -highest.
    std::vector<std::vector<long>> ext(r + 1, std::vector<long>(r + 1, 0));
    ext[0][0] = 2;
    for (long i = 0; i < r; ++i) {
      ext[0][i + 1] = ext[i + 1][0] = -rs.pairing(rs.highest(), rs.simple(i));
      for (long j = 0; j < r; ++j) ext[i + 1][j + 1] = rs.cartan(i, j);
    }
    std::vector<long> amarks(r + 1, 1);
    RootCoords m = rs.marks();
    for (long i = 0; i < r; ++i) amarks[i + 1] = m[i];
    const auto& perms = omega_rotations(rs);
    REQUIRE((long)perms.size() == (rs.name() == "e6" ? 3 : rs.name() == "e7" ? 2 : 1));
    for (const auto& p : perms) {
      for (long i = 0; i <= r; ++i) {
        REQUIRE(amarks[p[i]] == amarks[i]);
        for (long j = 0; j <= r; ++j) REQUIRE(ext[p[i]][p[j]] == ext[i][j]);
      }
    }
  }
}

TEST_CASE("kac coordinates") {
  const RootSystem& e6 = RootSystem::get("e6");
  TorusElement id(e6);
  auto kid = id.kac();
  REQUIRE(kid.s == std::vector<long>{1, 0, 0, 0, 0, 0, 0});
  REQUIRE(kid.order == 1);

  // 3A2 class: support on node 4 (mark 3).
  TorusElement t1 = thirds(e6, {2, 0, 1, 0, 0, 0});
  auto k1 = t1.kac();
  REQUIRE(k1.s == std::vector<long>{0, 0, 0, 0, 1, 0, 0});
  REQUIRE(k1.order == 3);
  REQUIRE(k1.order == t1.order_adjoint());

  // D4 class: support on the three mark-1 nodes.
  TorusElement t2 = thirds(e6, {2, 1, 2, 2, 1, 0});
  auto k2 = t2.kac();
  REQUIRE(k2.s == std::vector<long>{1, 1, 0, 0, 0, 0, 1});
  REQUIRE(k2.order == 3);

  // A center element is adjoint-trivial: canonical tuple matches the identity.
  TorusElement c = thirds(e6, {1, 0, 2, 0, 1, 2});
  REQUIRE(c.kac() != kid);  // distinct simply-connected classes
  REQUIRE(c.kac_adjoint_canonical() == id.kac_adjoint_canonical());
  REQUIRE(c.kac_adjoint_canonical().s == std::vector<long>{0, 0, 0, 0, 0, 0, 1});

  // Kac data is Weyl-invariant and stable under the walk's own output.
  std::vector<long> word{al(1), al(4), al(2), al(6), al(3)};
  REQUIRE(t1.weyl_apply(word).kac() == k1);
  REQUIRE(t2.weyl_apply(word).kac() == k2);
  // Reconstruct from s: alpha_i(x) = s_i / m.
  std::vector<Rational> mu(6);
  for (long i = 0; i < 6; ++i) mu[i] = Rational(k2.s[i + 1]) / k2.order;
  TorusElement back = TorusElement::from_alpha_values(e6, mu);
  REQUIRE(back.kac() == k2);
}

TEST_CASE("from_alpha_values round-trip") {
  const RootSystem& e7 = RootSystem::get("e7");
  std::vector<Rational> mu{Rational(1) / 2, Rational(0),     Rational(1) / 3, Rational(0),
                           Rational(1) / 6, Rational(1) / 2, Rational(0)};
  TorusElement t = TorusElement::from_alpha_values(e7, mu);
  auto v = t.simple_values();
  for (long i = 0; i < 7; ++i) REQUIRE(v[i] == mu[i]);
  REQUIRE(t.order_adjoint() == 6);
}
