// Exact cyclotomic arithmetic against an independent floating-point oracle
// plus frozen algebraic facts (cyclotomic polynomial coefficients, reduction
// vectors, conductor normalization).

#include "exolie/cyclo.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <complex>

using namespace exolie;

namespace {

// Oracle: numeric evaluation of a value at zeta_N = exp(2*pi*i/N).
std::complex<double> eval(const Cyclo& a) {
  const double pi = 3.14159265358979323846;
  std::complex<double> z = std::polar(1.0, 2 * pi / (double)a.conductor());
  std::complex<double> acc{0.0, 0.0}, p{1.0, 0.0};
  for (const auto& q : a.coeffs()) {
    acc += p * (double)num(q).convert_to<double>() / (double)den(q).convert_to<double>();
    p *= z;
  }
  return acc;
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

}  // namespace

TEST_CASE("cyclotomic polynomials: frozen coefficients") {
  // Phi_12 = x^4 - x^2 + 1
  auto& p12 = exolie::detail::cyclotomic_poly(12);
  REQUIRE(p12 == std::vector<Integer>{1, 0, -1, 0, 1});
  // Phi_24 = x^8 - x^4 + 1
  auto& p24 = exolie::detail::cyclotomic_poly(24);
  REQUIRE(p24 == std::vector<Integer>{1, 0, 0, 0, -1, 0, 0, 0, 1});
  // Phi_9 = x^6 + x^3 + 1
  auto& p9 = exolie::detail::cyclotomic_poly(9);
  REQUIRE(p9 == std::vector<Integer>{1, 0, 0, 1, 0, 0, 1});
  // Phi_105 famously has a -2 coefficient at degree 7.
  auto& p105 = exolie::detail::cyclotomic_poly(105);
  REQUIRE(p105.size() == 49);  // phi(105) = 48
  REQUIRE(p105[7] == -2);
}

TEST_CASE("zeta normalization and basic identities") {
  REQUIRE(Cyclo::zeta(1).is_rational());
  REQUIRE(Cyclo::zeta(2) == Cyclo(-1));
  REQUIRE(Cyclo::zeta(4).pow(2) == Cyclo(-1));
  REQUIRE(Cyclo::zeta(3).pow(3) == Cyclo(1));
  // Conductor 2 mod 4 gets normalized away: zeta_6 lives in Q(zeta_3).
  REQUIRE(Cyclo::zeta(6).conductor() == 3);
  REQUIRE(close(eval(Cyclo::zeta(6)), std::polar(1.0, 3.14159265358979323846 / 3)));
  // zeta_12^2 has conductor 3 after construction through arithmetic.
  Cyclo z12 = Cyclo::zeta(12);
  REQUIRE((z12 * z12).reduced().conductor() == 3);
  // omega + omega^2 = -1.
  REQUIRE(Cyclo::zeta(3) + Cyclo::zeta(3, 2) == Cyclo(-1));
  // Frozen reduction: zeta_12^4 = zeta_3 = -1 - zeta_12^2 ... check via lift equality.
  REQUIRE(Cyclo::zeta(12).pow(4) == Cyclo::zeta(3));
}

TEST_CASE("ring operations against the numeric oracle") {
  std::vector<Cyclo> samples = {
      Cyclo(Rational(3, 7)),
      Cyclo::zeta(8) + Cyclo(Rational(1, 2)),
      Cyclo::zeta(12, 5).scaled(Rational(-2, 3)) + Cyclo::zeta(12, 2),
      Cyclo::zeta(5) + Cyclo::zeta(5, 4),
      Cyclo::zeta(7, 3) - Cyclo::zeta(7, 2).scaled(Rational(5)),
      cyc_sqrt2(),
      cyc_sqrt3(),
  };
  for (const auto& a : samples)
    for (const auto& b : samples) {
      REQUIRE(close(eval(a) + eval(b), eval(a + b)));
      REQUIRE(close(eval(a) - eval(b), eval(a - b)));
      REQUIRE(close(eval(a) * eval(b), eval(a * b)));
    }
}

TEST_CASE("mixed-conductor arithmetic lifts to the lcm") {
  Cyclo a = Cyclo::zeta(8);   // conductor 8
  Cyclo b = Cyclo::zeta(3);   // conductor 3
  Cyclo c = a * b;            // zeta_24^(3+8) = zeta_24^11
  REQUIRE(c.conductor() == 24);
  REQUIRE(c == Cyclo::zeta(24, 11));
  REQUIRE(close(eval(c), eval(a) * eval(b)));
  // Equality across conductors.
  REQUIRE(Cyclo::zeta(3) == Cyclo::zeta(12, 4));
  REQUIRE(Cyclo::zeta(3) != Cyclo::zeta(12, 5));
}

TEST_CASE("sqrt constants square correctly") {
  REQUIRE(cyc_sqrt2() * cyc_sqrt2() == Cyclo(2));
  REQUIRE(cyc_sqrt3() * cyc_sqrt3() == Cyclo(3));
  REQUIRE(cyc_sqrt5() * cyc_sqrt5() == Cyclo(5));
  REQUIRE(close(eval(cyc_sqrt2()), {std::sqrt(2.0), 0.0}));
  REQUIRE(close(eval(cyc_sqrt5()), {std::sqrt(5.0), 0.0}));
  REQUIRE(cyc_cos(Rational(1, 4)) == Cyclo(0));
  REQUIRE(cyc_sin(Rational(1, 4)) == Cyclo(1));
  REQUIRE(cyc_cos(Rational(1, 8)) * Cyclo(2) == cyc_sqrt2());
  // cos^2 + sin^2 = 1 at a generic rational angle.
  Cyclo cs = cyc_cos(Rational(2, 7)), sn = cyc_sin(Rational(2, 7));
  REQUIRE(cs * cs + sn * sn == Cyclo(1));
}

TEST_CASE("conjugation and inverses") {
  Cyclo a = Cyclo::zeta(12, 5).scaled(Rational(3, 4)) + Cyclo::zeta(12, 2) - Cyclo(Rational(1, 3));
  REQUIRE(a.conj().conj() == a);
  REQUIRE(close(eval(a.conj()), std::conj(eval(a))));
  REQUIRE(a * a.inverse() == Cyclo(1));
  Cyclo b = Cyclo::zeta(8, 3);
  REQUIRE(b * b.inverse() == Cyclo(1));
  REQUIRE(b.inverse() == Cyclo::zeta(8, 5));
  // |root of unity| = 1: z * conj(z) = 1.
  REQUIRE(Cyclo::zeta(24, 7) * Cyclo::zeta(24, 7).conj() == Cyclo(1));
}

TEST_CASE("conductor reduction on demand") {
  Cyclo a = Cyclo::zeta(3);
  Cyclo lifted = a.lifted(24);
  REQUIRE(lifted.conductor() == 24);
  REQUIRE(lifted.reduced().conductor() == 3);
  REQUIRE(lifted.reduced() == a);
  // A sum that collapses to a rational.
  Cyclo s = Cyclo::zeta(5) + Cyclo::zeta(5, 2) + Cyclo::zeta(5, 3) + Cyclo::zeta(5, 4);
  REQUIRE(s.reduced().conductor() == 1);
  REQUIRE(s == Cyclo(-1));
  // sqrt2 has true conductor 8.
  REQUIRE(cyc_sqrt2().lifted(24).reduced().conductor() == 8);
}

TEST_CASE("unity order detection") {
  REQUIRE(Cyclo(1).unity_order() == 1);
  REQUIRE(Cyclo(-1).unity_order() == 2);
  REQUIRE(Cyclo::zeta(12, 5).unity_order() == 12);
  REQUIRE(Cyclo::zeta(12, 4).unity_order() == 3);
  REQUIRE((-Cyclo::zeta(3)).unity_order() == 6);
  REQUIRE(Cyclo(2).unity_order() == 0);
  REQUIRE((Cyclo::zeta(8) + Cyclo(1)).unity_order() == 0);
}

TEST_CASE("textual grammar round-trips") {
  std::vector<Cyclo> samples = {
      Cyclo(0),
      Cyclo(Rational(-22, 7)),
      Cyclo::zeta(8),
      Cyclo::zeta(12, 7).scaled(Rational(1, 2)) - Cyclo::zeta(12, 2).scaled(Rational(5, 3)),
      cyc_sqrt5(),
  };
  for (const auto& a : samples) {
    CAPTURE(a.str());
    REQUIRE(Cyclo::parse(a.str()) == a);
  }
  REQUIRE(Cyclo::parse("z(8)") == Cyclo::zeta(8));
  REQUIRE(Cyclo::parse("1/2 + -1/2*z(4)") == Cyclo(Rational(1, 2)) - Cyclo::zeta(4).scaled(Rational(1, 2)));
  REQUIRE(Cyclo::parse("-z(3)^2") == -Cyclo::zeta(3, 2));
  REQUIRE(Cyclo::parse(" 2 ") == Cyclo(2));
  REQUIRE_THROWS(Cyclo::parse("z(8)^^2"));
  REQUIRE_THROWS(Cyclo::parse("3 4"));
}
