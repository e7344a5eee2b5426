#include <doctest.h>

#include <cmath>

#include "cet/cbba.hpp"
#include "cet/random.hpp"
#include "fixtures.hpp"

using namespace cet;
using fixtures::make;

TEST_SUITE("cbba") {

TEST_CASE("validate accepts a certain mass and reports violations in order") {
  Frame f({"e1", "e2"});
  CHECK(validate(make(f, {{0b01, {1.0, 0.0}}})).ok);

  const auto sum = validate(make(f, {{0b01, {0.5, 0.0}}}));
  CHECK_FALSE(sum.ok);
  CHECK(sum.violation == "SumViolation");
  CHECK(sum.residual == doctest::Approx(0.5).epsilon(1e-12));

  const auto empty = validate(make(f, {{0, {0.1, 0.0}}, {0b01, {0.9, 0.0}}}));
  CHECK_FALSE(empty.ok);
  CHECK(empty.violation == "EmptySetMass");

  const auto mag = validate(make(f, {{0b01, {1.4, 0.0}}, {0b10, {-0.4, 0.0}}}));
  CHECK_FALSE(mag.ok);
  CHECK(mag.violation == "MagnitudeViolation");

  const auto range = validate(make(f, {{0b100, {1.0, 0.0}}}));
  CHECK_FALSE(range.ok);
  CHECK(range.violation == "FocalOutOfRange");
}

TEST_CASE("magnitude matches the worked example") {
  CHECK(magnitude({0.1, -0.1}) == doctest::Approx(0.1414).epsilon(1e-3));
  CHECK(magnitude({0.9, 0.1}) == doctest::Approx(0.9055).epsilon(1e-3));
  CHECK(magnitude({0.0, 0.0}) == 0.0);
}

TEST_CASE("phase follows the five-case rule") {
  CHECK(phase({0.1, -0.1}) == doctest::Approx(-M_PI / 4).epsilon(1e-12));
  CHECK(phase({0.0, 0.7}) == doctest::Approx(M_PI / 2));
  CHECK(phase({0.0, -0.7}) == doctest::Approx(-M_PI / 2));
  CHECK(phase({-0.5, 0.5}) == doctest::Approx(std::atan(-1.0) + M_PI));
  CHECK(phase({-0.5, -0.5}) == doctest::Approx(std::atan(1.0) - M_PI));
  CHECK_THROWS_AS(phase({0.0, 0.0}), Error);
}

TEST_CASE("phase agrees with atan2 and inverts from_euler") {
  Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const double u = rng.uniform01() * 2 - 1;
    const double v = rng.uniform01() * 2 - 1;
    if (u == 0.0 && v == 0.0) continue;
    CHECK(phase({u, v}) == doctest::Approx(std::atan2(v, u)).epsilon(1e-14));
  }
  for (int i = 0; i < 2000; ++i) {
    const double theta = (rng.uniform01() * 2 - 1) * M_PI;
    const double m = rng.uniform01() + 1e-6;
    CHECK(phase(from_euler(m, theta)) == doctest::Approx(theta).epsilon(1e-12));
  }
}

TEST_CASE("commitment is a normalized modulus") {
  Frame f({"e1", "e2"});
  CHECK(commitment(make(f, {{0b01, {1.0, 0.0}}}), 0b01) == 1.0);

  const auto even = make(f, {{0b01, {0.5, 0.0}}, {0b10, {0.5, 0.0}}});
  CHECK(commitment(even, 0b01) == doctest::Approx(0.5));
  CHECK(commitment(even, 0b10) == doctest::Approx(0.5));

  Cbba zero;
  zero.frame = f;
  zero.masses[0b01] = {0.0, 0.0};
  CHECK_THROWS_AS(commitment(zero, 0b01), Error);
}

TEST_CASE("commitments sum to one and equal the masses when real") {
  Frame f({"a", "b", "c"});
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Cbba c = random_cbba(f, seed, RandomProfile::ComplexGeneral);
    double total = 0.0;
    for (const auto& [s, w] : commitments(c)) total += w;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

    const Cbba r = random_cbba(f, seed, RandomProfile::RealGeneral);
    for (const auto& [s, w] : commitments(r)) {
      CHECK(w == doctest::Approx(r.at(s).real()).epsilon(1e-12));
    }
  }
}

TEST_CASE("interference on the worked example is 0.16") {
  const Cbba c = fixtures::example1();
  CHECK(interference(c, 0b11) == doctest::Approx(0.16).epsilon(1e-3));
  // real non-negative masses: IE = 2 sum_{i<j} m_i m_j
  Frame f({"e1", "e2"});
  const auto real = make(f, {{0b01, {0.3, 0.0}}, {0b10, {0.7, 0.0}}});
  CHECK(interference(real, 0b11) == doctest::Approx(2 * 0.3 * 0.7).epsilon(1e-12));
  // orthogonal phases cancel the cross term
  const auto ortho = make(f, {{0b01, {0.5, 0.0}}, {0b10, {0.0, 0.5}}});
  CHECK(interference(ortho, 0b11) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("both interference routes agree everywhere") {
  Frame f({"a", "b", "c", "d"});
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Cbba c = random_cbba(f, seed, RandomProfile::ComplexGeneral);
    for (FocalSet b = 0; b <= f.full_set(); ++b) {
      CHECK(interference(c, b) ==
            doctest::Approx(fixtures::oracle::interference_pairwise(c, b))
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("bayesian and real predicates") {
  Frame f({"e1", "e2"});
  const auto certain = make(f, {{0b01, {1.0, 0.0}}});
  CHECK(is_bayesian(certain));
  CHECK(is_real(certain));

  const auto vacuous = make(f, {{0b11, {1.0, 0.0}}});
  CHECK_FALSE(is_bayesian(vacuous));
  CHECK(is_real(vacuous));

  const auto complex_bayes =
      make(f, {{0b01, {0.5, 0.1}}, {0b10, {0.5, -0.1}}});
  CHECK(is_bayesian(complex_bayes));
  CHECK_FALSE(is_real(complex_bayes));
}

TEST_CASE("random generator honors its profile contracts") {
  Frame f({"e1", "e2"});
  const Cbba bayes = random_cbba(f, 7, RandomProfile::RealBayesian);
  CHECK(is_bayesian(bayes));
  CHECK(is_bba(bayes));
  CHECK(validate(bayes).ok);

  CHECK(random_cbba(f, 7, RandomProfile::RealBayesian) == bayes);

  Frame g({"a", "b", "c", "d"});
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    CHECK(validate(random_cbba(g, seed, RandomProfile::ComplexGeneral)).ok);
    CHECK(is_bba(random_cbba(g, seed, RandomProfile::RealGeneral)));
  }
}

}  // TEST_SUITE
