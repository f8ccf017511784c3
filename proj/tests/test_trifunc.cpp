#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "calmkit/superpotential.hpp"
#include "calmkit/trifunction.hpp"

using namespace calmkit;

namespace {

const Vector kNoParam = Vector::Zero(1);

Bifunction scalar_bifunction(double (*fn)(double, double),
                             bool diagonal_zero) {
  Bifunction f;
  f.eval = [fn](const Vector& u, const Vector& v, const Vector&) {
    return fn(u[0], v[0]);
  };
  f.diagonal_zero = diagonal_zero;
  return f;
}

std::vector<PointPair> grid_pairs(double lo, double hi, int n) {
  std::vector<PointPair> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double u = lo + (hi - lo) * i / (n - 1);
      double v = lo + (hi - lo) * j / (n - 1);
      pairs.emplace_back(scalar_point(u), scalar_point(v));
    }
  return pairs;
}

}  // namespace

TEST_CASE("lift_bifunction: direct substitution and diagonal identity") {
  auto f = scalar_bifunction([](double u, double v) { return v - u; }, true);
  auto lifted = lift_bifunction(f);
  CHECK(lifted.eval(scalar_point(1), scalar_point(2), scalar_point(3),
                    kNoParam) == doctest::Approx(1.0));

  // F(u, v, u) = f(u, v) since f vanishes on the diagonal
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int i = 0; i < 50; ++i) {
    double u = dist(rng), v = dist(rng);
    CHECK(lifted.eval(scalar_point(u), scalar_point(v), scalar_point(u),
                      kNoParam) ==
          doctest::Approx(f.eval(scalar_point(u), scalar_point(v), kNoParam)));
  }
}

TEST_CASE("lift_bifunction: requires the diagonal_zero assertion") {
  auto f = scalar_bifunction([](double u, double v) { return v - u; }, false);
  CHECK_THROWS_AS(lift_bifunction(f), Error);
}

TEST_CASE("lift_bifunction: monotone bifunction lifts to monotone trifunction") {
  // f(u,v) = (v-u)u has f(u,v) + f(v,u) = -(v-u)^2 <= 0
  auto f =
      scalar_bifunction([](double u, double v) { return (v - u) * u; }, true);
  auto lifted = lift_bifunction(f);
  auto report = check_monotone(lifted, grid_pairs(-1.0, 1.0, 20), kNoParam);
  CHECK(report.holds);

  // and a non-monotone bifunction lifts to a non-monotone trifunction
  auto bad =
      scalar_bifunction([](double u, double v) { return (v - u) * v; }, true);
  auto lifted_bad = lift_bifunction(bad);
  auto report_bad =
      check_monotone(lifted_bad, grid_pairs(-1.0, 1.0, 20), kNoParam);
  CHECK_FALSE(report_bad.holds);
}

TEST_CASE("remark-equivalence: lift is monotone iff the bifunction is") {
  auto pairs = grid_pairs(-1.5, 1.5, 15);
  auto check_bifunction_monotone = [&](const Bifunction& f) {
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& [u, v] : pairs)
      worst = std::max(worst, f.eval(u, v, kNoParam) + f.eval(v, u, kNoParam));
    return worst <= 1e-9;
  };

  std::vector<Bifunction> cases = {
      scalar_bifunction([](double u, double v) { return (v - u) * u; }, true),
      scalar_bifunction([](double u, double v) { return (v - u) * v; }, true),
      scalar_bifunction([](double u, double v) { return v * v - u * u; },
                        true),
      scalar_bifunction(
          [](double u, double v) { return std::sin(v) - std::sin(u); }, true),
  };
  for (const auto& f : cases) {
    bool f_monotone = check_bifunction_monotone(f);
    bool lift_monotone =
        check_monotone(lift_bifunction(f), pairs, kNoParam).holds;
    CHECK(f_monotone == lift_monotone);
  }
}

TEST_CASE("mixed_trifunction: collapse cases and direct substitution") {
  auto f =
      scalar_bifunction([](double u, double v) { return (v - u) * u; }, true);
  auto g = scalar_bifunction([](double u, double v) { return v - u; }, false);

  // g == 0 collapses to the lift
  MixedPair pure{f, scalar_bifunction([](double, double) { return 0.0; },
                                      false)};
  auto collapsed = mixed_trifunction(pure);
  auto lifted = lift_bifunction(f);
  for (double u : {-1.0, 0.2, 0.9})
    for (double v : {-0.4, 0.5})
      for (double w : {-0.3, 0.8})
        CHECK(collapsed.eval(scalar_point(u), scalar_point(v), scalar_point(w),
                             kNoParam) ==
              doctest::Approx(lifted.eval(scalar_point(u), scalar_point(v),
                                          scalar_point(w), kNoParam)));

  // f == 0 leaves F = g, monotone as a trifunction
  MixedPair gonly{scalar_bifunction([](double, double) { return 0.0; }, true),
                  g};
  auto gtri = mixed_trifunction(gonly);
  CHECK(check_monotone(gtri, grid_pairs(-1, 1, 10), kNoParam).holds);
  CHECK(check_monotone(gtri, grid_pairs(-1, 1, 10), kNoParam).worst_violation ==
        doctest::Approx(0.0));

  // direct numbers: u=0, v=1, w=2 gives f(2,1)-f(2,0)+g(0,1) = 3
  MixedPair both{f, g};
  auto mixed = mixed_trifunction(both);
  CHECK(mixed.eval(scalar_point(0), scalar_point(1), scalar_point(2),
                   kNoParam) == doctest::Approx(3.0));
}

TEST_CASE("check_monotone: sign cases and the empty-list error") {
  Trifunction pro;
  pro.eval = [](const Vector& u, const Vector& v, const Vector& w,
                const Vector&) { return w[0] * (v[0] - u[0]); };
  std::vector<PointPair> pair01 = {{scalar_point(0.0), scalar_point(1.0)}};
  CHECK(check_monotone(pro, pair01, kNoParam).holds);

  Trifunction anti;
  anti.eval = [](const Vector& u, const Vector& v, const Vector& w,
                 const Vector&) { return -w[0] * (v[0] - u[0]); };
  auto report = check_monotone(anti, pair01, kNoParam);
  CHECK_FALSE(report.holds);
  CHECK(report.worst_violation == doctest::Approx(1.0));

  CHECK_THROWS_AS(check_monotone(pro, {}, kNoParam), Error);
}

TEST_CASE("check_strongly_monotone: exact modulus on the lifted example") {
  auto f =
      scalar_bifunction([](double u, double v) { return (v - u) * u; }, true);
  auto lifted = lift_bifunction(f);
  auto pairs = grid_pairs(-1.0, 1.0, 20);
  auto norm = Norm::euclidean(1);

  CHECK(check_strongly_monotone(lifted, 1.0, 2.0, pairs, kNoParam, norm).holds);
  CHECK_FALSE(
      check_strongly_monotone(lifted, 2.0, 2.0, pairs, kNoParam, norm).holds);

  std::vector<PointPair> diag = {{scalar_point(0.3), scalar_point(0.3)}};
  auto report = check_strongly_monotone(lifted, 2.0, 2.0, diag, kNoParam, norm);
  CHECK(report.holds);
  CHECK(report.worst_violation == doctest::Approx(0.0));
}

TEST_CASE("j0 closed forms: registered kinds") {
  auto quad = Superpotential::smooth_quadratic(2.0);
  CHECK(j0_eval(quad, Vec2(1, 0), Vec2(0, 1)) == doctest::Approx(0.0));

  auto norm1 = Superpotential::scaled_norm(1.0);
  CHECK(j0_eval(norm1, Vec2(3, 4), Vec2(1, 0)) == doctest::Approx(0.6));
  CHECK(j0_eval(norm1, Vec2(0, 0), Vec2(0.3, -0.4)) == doctest::Approx(0.5));

  // kink value for negative scale fixed by the limsup
  auto normneg = Superpotential::scaled_norm(-2.0);
  CHECK(j0_eval(normneg, Vec2(0, 0), Vec2(1, 0)) == doctest::Approx(2.0));

  Superpotential empty;
  CHECK_THROWS_AS(j0_eval(empty, Vec2(0, 0), Vec2(1, 0)), Error);
}

TEST_CASE("j0: positive homogeneity, subadditivity, Lipschitz bound") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  std::uniform_real_distribution<double> pos(0.1, 5.0);

  // sampled r stays inside [-2,2]^2, so quadratics carry rank |kappa| * 2v2
  const double box_radius = 2.0 * std::sqrt(2.0);
  std::vector<Superpotential> potentials = {
      Superpotential::smooth_quadratic(1.5, box_radius),
      Superpotential::smooth_quadratic(-0.8, box_radius),
      Superpotential::scaled_norm(1.0),
      Superpotential::scaled_norm(-0.7),
  };
  for (const auto& j : potentials) {
    for (int i = 0; i < 500; ++i) {
      Vec2 r(dist(rng), dist(rng));
      Vec2 s(dist(rng), dist(rng));
      Vec2 s2(dist(rng), dist(rng));
      double lambda = pos(rng);

      CHECK(j0_eval(j, r, lambda * s) ==
            doctest::Approx(lambda * j0_eval(j, r, s)).epsilon(1e-10));
      CHECK(j0_eval(j, r, s + s2) <=
            j0_eval(j, r, s) + j0_eval(j, r, s2) + 1e-10);
      CHECK(std::abs(j0_eval(j, r, s)) <=
            j.lipschitz_rank * s.norm() + 1e-10);
    }
  }
}

TEST_CASE("j0: reflection j0(r;-s) equals the derivative of -j at (r,s)") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int i = 0; i < 200; ++i) {
    Vec2 r(dist(rng), dist(rng));
    Vec2 s(dist(rng), dist(rng));
    for (double kappa : {1.3, -0.6}) {
      auto jq = Superpotential::smooth_quadratic(kappa);
      auto jq_neg = Superpotential::smooth_quadratic(-kappa);
      CHECK(j0_eval(jq, r, -s) == doctest::Approx(j0_eval(jq_neg, r, s)));

      auto jn = Superpotential::scaled_norm(kappa);
      auto jn_neg = Superpotential::scaled_norm(-kappa);
      CHECK(j0_eval(jn, r, -s) ==
            doctest::Approx(j0_eval(jn_neg, r, s)).epsilon(1e-12));
    }
  }
}

TEST_CASE("oracle gate: closed forms match the sampled limsup") {
  // 10 base points x 10 directions; the oracle sweeps 8 t-levels.
  std::vector<Vec2> rs = {{0, 0},     {0.5, 0},    {0, -0.75}, {0.7, 0.7},
                          {-1.2, 0.3}, {2, 0},      {0.8, -0.8}, {-0.5, -0.5},
                          {0, 1.5},   {1.5, -0.4}};
  std::vector<Vec2> ss;
  for (int k = 0; k < 10; ++k) {
    double ang = 2.0 * M_PI * k / 10.0;
    ss.emplace_back(std::cos(ang), std::sin(ang));
  }

  std::vector<Superpotential> potentials = {
      Superpotential::smooth_quadratic(1.5),
      Superpotential::smooth_quadratic(-0.8),
      Superpotential::scaled_norm(1.0),
      Superpotential::scaled_norm(-0.7),
  };
  for (const auto& j : potentials) {
    for (const auto& r : rs) {
      for (const auto& s : ss) {
        double closed = j0_eval(j, r, s);
        double sampled = clarke_limsup(j.j_raw, r, s);
        CHECK(std::abs(closed - sampled) <= 1e-6);
      }
    }
  }
}

TEST_CASE("clarke_limsup: exact value at the scaled-norm kink") {
  auto j = Superpotential::scaled_norm(1.0);
  CHECK(clarke_limsup(j.j_raw, Vec2(0, 0), Vec2(1, 0)) ==
        doctest::Approx(1.0).epsilon(1e-8));
  auto jneg = Superpotential::scaled_norm(-1.0);
  CHECK(clarke_limsup(jneg.j_raw, Vec2(0, 0), Vec2(1, 0)) ==
        doctest::Approx(1.0).epsilon(1e-8));
}
