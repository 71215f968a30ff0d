#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "splice/sequences.hpp"

using namespace splice;

namespace {
double dist_to_integers(double x) { return std::abs(x - std::round(x)); }
}  // namespace

TEST_CASE("rational arithmetic basics") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
  CHECK((Rational(1, 2) - Rational(1, 3)) == Rational(1, 6));
  CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
  CHECK((Rational(2, 3) / Rational(4, 3)) == Rational(1, 2));
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(-7, 2).frac() == Rational(1, 2));
  CHECK(Rational(5).is_integer());
  CHECK(Rational(5, 1).to_double() == 5.0);
  CHECK(abs(Rational(-3, 7)) == Rational(3, 7));
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational parse and print") {
  CHECK(*Rational::parse("5/2") == Rational(5, 2));
  CHECK(*Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(*Rational::parse("7") == Rational(7));
  CHECK(!Rational::parse("2.5").has_value());
  CHECK(!Rational::parse("1/0").has_value());
  CHECK(!Rational::parse("").has_value());
  CHECK(!Rational::parse("a/b").has_value());
  CHECK(Rational(5, 2).str() == "5/2");
  CHECK(Rational(-4).str() == "-4");
}

TEST_CASE("rational from_double is exact on dyadics") {
  CHECK(Rational::from_double(0.5) == Rational(1, 2));
  CHECK(Rational::from_double(2.5) == Rational(5, 2));
  CHECK(Rational::from_double(-0.75) == Rational(-3, 4));
  CHECK(Rational::from_double(3.0) == Rational(3));
  CHECK(Rational::from_double(0.0) == Rational(0));
  // 0.3 is not dyadic; the exact value of the stored double is returned
  Rational r = Rational::from_double(0.3);
  CHECK(r.to_double() == 0.3);
  CHECK(r != Rational(3, 10));
  CHECK_THROWS_AS(Rational::from_double(1e300), Error);
}

TEST_CASE("scale parameter parsing") {
  auto a = ScaleParameter::parse("5/2");
  REQUIRE(a.has_value());
  CHECK(a->is_exact());
  CHECK(a->rational() == Rational(5, 2));
  CHECK(a->value() == 2.5);

  auto b = ScaleParameter::parse("2.5");
  REQUIRE(b.has_value());
  CHECK(!b->is_exact());
  CHECK(b->value() == 2.5);
  CHECK_THROWS_AS(b->rational(), Error);

  auto c = ScaleParameter::parse("3");
  REQUIRE(c.has_value());
  CHECK(c->is_exact());

  CHECK(!ScaleParameter::parse("0").has_value());
  CHECK(!ScaleParameter::parse("-1/2").has_value());
  CHECK(!ScaleParameter::parse("nonsense").has_value());
}

TEST_CASE("rounded deviation: pinned values") {
  CHECK(delta_star_exact(5, Rational(1)) == Rational(0));
  CHECK(delta_star_exact(1, Rational(5, 2)) == Rational(1, 5));
  CHECK(delta_star_exact(7, Rational(3)) == Rational(0));
  // tie {3/2 * 1} = 1/2 takes the upper branch
  CHECK(delta_star_exact(1, Rational(3, 2)) == Rational(1, 3));
  CHECK(delta_star(5, ScaleParameter::exact(1, 1)) == 0.0);
  CHECK(delta_star(1, ScaleParameter::exact(5, 2)) == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(delta_star(1, ScaleParameter::real(2.5)) == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("rounded deviation: sign/distance factorization") {
  // delta_n = xi_n * dist(Z, beta n) / beta, exactly in the rational case
  for (auto [p, q] : {std::pair{5LL, 2LL}, {3LL, 2LL}, {7LL, 4LL}, {9LL, 5LL}, {11LL, 3LL}}) {
    Rational beta(p, q);
    ScaleParameter sp = ScaleParameter::exact(beta);
    for (long long n = -40; n <= 40; ++n) {
      Rational d = delta_star_exact(n, beta);
      Rational bn = beta * Rational(n);
      Rational f = bn.frac();
      Rational dist = f <= Rational(1, 2) ? f : Rational(1) - f;
      CHECK(abs(d) == dist / beta);
      if (!dist.is_zero()) CHECK((d.num() > 0 ? 1 : -1) == xi_sign(n, sp));
    }
  }
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> bdist(1.0, 4.0);
  for (int t = 0; t < 50; ++t) {
    ScaleParameter beta = ScaleParameter::real(bdist(rng));
    for (long long n = -20; n <= 20; ++n) {
      double d = delta_star(n, beta);
      double bn = beta.value() * static_cast<double>(n);
      CHECK(std::abs(d) ==
            doctest::Approx(dist_to_integers(bn) / beta.value()).epsilon(1e-10));
    }
  }
}

TEST_CASE("rounded deviation: bound, integrality, periodicity, antisymmetry") {
  for (auto [p, q] : {std::pair{3LL, 2LL}, {5LL, 2LL}, {7LL, 4LL}, {13LL, 6LL}, {4LL, 1LL}}) {
    Rational beta(p, q);
    Rational bound(q, 2 * p);  // 1/(2 beta)
    for (long long n = -512; n <= 512; ++n) {
      Rational d = delta_star_exact(n, beta);
      CHECK(abs(d) <= bound);
      Rational lam = Rational(n) + d;
      CHECK((beta * lam).is_integer());
      CHECK(delta_star_exact(n + q, beta) == d);
    }
    CHECK(delta_star_exact(q, beta) == Rational(0));
    for (long long n = 1; n < q; ++n) {
      Rational f = (beta * Rational(n)).frac();
      if (f == Rational(1, 2)) continue;  // tie pairs with itself, skipped
      CHECK(delta_star_exact(n, beta) + delta_star_exact(q - n, beta) == Rational(0));
    }
  }
}

TEST_CASE("star window: pinned 5/2 and 3/2 values") {
  FrequencySet fs = star_frequency_set(ScaleParameter::exact(5, 2), 2);
  REQUIRE(fs.size() == 5);
  CHECK(fs.exact_lambdas[0] == Rational(-2));
  CHECK(fs.exact_lambdas[1] == Rational(-4, 5));
  CHECK(fs.exact_lambdas[2] == Rational(0));
  CHECK(fs.exact_lambdas[3] == Rational(6, 5));
  CHECK(fs.exact_lambdas[4] == Rational(2));
  CHECK(fs.provenance == Provenance::star);
  CHECK(fs.window == 2);

  FrequencySet g = star_frequency_set(ScaleParameter::exact(3, 2), 2);
  CHECK(g.exact_lambdas[0] == Rational(-2));
  CHECK(g.exact_lambdas[1] == Rational(-2, 3));
  CHECK(g.exact_lambdas[2] == Rational(0));
  CHECK(g.exact_lambdas[3] == Rational(4, 3));
  CHECK(g.exact_lambdas[4] == Rational(2));
}

TEST_CASE("star window: monotone and separated for beta >= 1") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<long long> pd(1, 40), qd(1, 12);
  for (int t = 0; t < 60; ++t) {
    long long q = qd(rng);
    long long p = q + pd(rng);  // beta > 1
    ScaleParameter beta = ScaleParameter::exact(p, q);
    FrequencySet fs = star_frequency_set(beta, 24);
    double floor = 1.0 - 1.0 / beta.value();
    for (std::size_t i = 1; i < fs.size(); ++i) {
      double gap = fs.lambdas[static_cast<Eigen::Index>(i)] -
                   fs.lambdas[static_cast<Eigen::Index>(i - 1)];
      CHECK(gap > 0.0);
      CHECK(gap >= floor - 1e-12);
    }
    CHECK(separation_gap(fs) >= floor - 1e-12);
  }
  CHECK(separation_gap(star_frequency_set(ScaleParameter::exact(5, 2), 8)) ==
        doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("star window: domain guard and override") {
  CHECK_THROWS_AS(star_frequency_set(ScaleParameter::exact(1, 2), 4), Error);
  FrequencySet fs = star_frequency_set(ScaleParameter::exact(1, 2), 4, true);
  CHECK(fs.size() == 9);  // representable, just not separated
  CHECK_THROWS_AS(star_frequency_set(ScaleParameter::exact(5, 2), 0), Error);
}

TEST_CASE("sawtooth profile") {
  CHECK(sawtooth_g(0.0) == 0.0);
  CHECK(sawtooth_g(0.75) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(sawtooth_g(2.25) == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(sawtooth_g(0.5) == doctest::Approx(0.5).epsilon(1e-15));
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> xs(-50.0, 50.0);
  for (int t = 0; t < 200; ++t) {
    double x = xs(rng);
    CHECK(sawtooth_g(x + 1.0) == doctest::Approx(sawtooth_g(x)).epsilon(1e-12));
    CHECK(std::abs(sawtooth_g(x)) <= 0.5 + 1e-15);
  }
}

TEST_CASE("sawtooth identity with the rounded deviation") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> bdist(1.0, 4.0);
  for (int t = 0; t < 30; ++t) {
    ScaleParameter beta = ScaleParameter::real(bdist(rng));
    for (long long n = -64; n <= 64; ++n) {
      double lhs = delta_star(n, beta);
      double rhs = sawtooth_g(static_cast<double>(n) * beta.value()) / beta.value();
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
  ScaleParameter b52 = ScaleParameter::exact(5, 2);
  for (long long n = -64; n <= 64; ++n)
    CHECK(delta_star(n, b52) ==
          doctest::Approx(sawtooth_g(2.5 * static_cast<double>(n)) / 2.5).epsilon(1e-14));
}

TEST_CASE("deviation period") {
  CHECK(period_of(ScaleParameter::exact(5, 2)) == 2);
  CHECK(period_of(ScaleParameter::exact(7, 4)) == 4);
  CHECK(period_of(ScaleParameter::exact(3, 1)) == 1);
  CHECK_THROWS_AS(period_of(ScaleParameter::real(2.5)), Error);
}

TEST_CASE("block averages of deviations") {
  FrequencySet fs52 = star_frequency_set(ScaleParameter::exact(5, 2), 16);
  CHECK(avdonin_average(fs52, 2, 0) == doctest::Approx(0.1).epsilon(1e-14));
  FrequencySet fs32 = star_frequency_set(ScaleParameter::exact(3, 2), 16);
  CHECK(avdonin_average(fs32, 2, 0) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  // periodic: every aligned block gives the same value
  for (long long m : {-3LL, -2LL, -1LL, 1LL, 2LL})
    CHECK(avdonin_average(fs32, 2, m) == doctest::Approx(1.0 / 6.0).epsilon(1e-13));
  CHECK_THROWS_AS(avdonin_average(fs32, 8, 4), Error);  // block leaves the window
}

TEST_CASE("period sums match the tie-branch arithmetic") {
  // beta = 3/2: the tie at n = q/2 contributes 1/(2 beta), so the period sum
  // is 1/3 rather than zero.
  Rational sum32 = delta_star_exact(1, Rational(3, 2)) + delta_star_exact(2, Rational(3, 2));
  CHECK(sum32 == Rational(1, 3));
  Rational sum74(0);
  for (long long n = 1; n <= 4; ++n) sum74 += delta_star_exact(n, Rational(7, 4));
  CHECK(sum74 == Rational(2, 7));  // = 1/(2 beta)
}

TEST_CASE("lattice window") {
  FrequencySet fs = lattice_frequency_set(Rational(5), 3);
  REQUIRE(fs.size() == 7);
  CHECK(fs.exact_lambdas[0] == Rational(-3, 5));
  CHECK(fs.exact_lambdas[6] == Rational(3, 5));
  CHECK(fs.provenance == Provenance::lattice);
  CHECK(separation_gap(fs) == doctest::Approx(0.2).epsilon(1e-15));
}

TEST_CASE("perturbed window") {
  Eigen::VectorXd dev(5);
  dev << 0.1, -0.2, 0.0, 0.2, -0.1;
  FrequencySet fs = perturbed_frequency_set(2, dev);
  CHECK(fs.lambdas[0] == doctest::Approx(-1.9));
  CHECK(fs.lambdas[4] == doctest::Approx(1.9));
  Eigen::VectorXd round_trip = fs.deviations();
  for (int i = 0; i < 5; ++i) CHECK(round_trip[i] == doctest::Approx(dev[i]).epsilon(1e-15));
  CHECK_THROWS_AS(perturbed_frequency_set(3, dev), Error);
}

TEST_CASE("equidistribution average") {
  // beta = 1: every term is g(n) = 0
  CHECK(weyl_average(1.0, 1000) == 0.0);
  double a3 = weyl_average(std::sqrt(2.0), 1000);
  double a5 = weyl_average(std::sqrt(2.0), 100000);
  CHECK(std::abs(a5) <= 1e-2);
  CHECK(std::abs(a5) <= 2.0 * std::abs(a3));
  double g5 = weyl_average((1.0 + std::sqrt(5.0)) / 2.0, 100000);
  CHECK(std::abs(g5) <= 1e-2);
  CHECK_THROWS_AS(weyl_average(std::sqrt(2.0), 0), Error);
}
