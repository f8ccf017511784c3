#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "calmkit/solve.hpp"

using namespace calmkit;

namespace {

FeasibleSet line_grid(double lo, double hi, int n) {
  std::vector<Vector> pts;
  for (int i = 0; i < n; ++i)
    pts.push_back(scalar_point(lo + (hi - lo) * i / (n - 1)));
  return FeasibleSet::finite_grid(std::move(pts), Norm::euclidean(1));
}

// F(u, z, u; mu) = (u - mu)(z - u): unique equilibrium at clamp(mu).
Trifunction clamp_problem() {
  Trifunction f;
  f.eval = [](const Vector& u, const Vector& v, const Vector& w,
              const Vector& mu) { return (w[0] - mu[0]) * (v[0] - u[0]); };
  return f;
}

}  // namespace

TEST_CASE("solve_grid: interior and boundary equilibria") {
  auto k = line_grid(0.0, 1.0, 5);
  auto f = clamp_problem();

  auto s = solve_grid(f, k, scalar_point(0.5), 1e-12);
  REQUIRE(s.points.size() == 1);
  CHECK(s.points.points()[0][0] == doctest::Approx(0.5));
  CHECK(s.residuals[0] >= -1e-12);

  auto boundary = solve_grid(f, k, scalar_point(2.0), 1e-12);
  REQUIRE(boundary.points.size() == 1);
  CHECK(boundary.points.points()[0][0] == doctest::Approx(1.0));
}

TEST_CASE("solve_grid: identically zero objective keeps the whole grid") {
  Trifunction zero;
  zero.eval = [](const Vector&, const Vector&, const Vector&, const Vector&) {
    return 0.0;
  };
  auto k = line_grid(0.0, 1.0, 7);
  auto s = solve_grid(zero, k, scalar_point(0.0), 0.0);
  CHECK(s.points.size() == 7);
}

TEST_CASE("solve_grid: soundness re-verification and tolerance monotonicity") {
  auto k = line_grid(-1.0, 1.0, 41);
  auto f = clamp_problem();
  auto mu = scalar_point(0.31);

  auto s = solve_grid(f, k, mu, 1e-3);
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const auto& u = s.points.points()[i];
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& z : k.grid_points())
      worst = std::min(worst, f.eval(u, z, u, mu));
    CHECK(worst == doctest::Approx(s.residuals[i]));
    CHECK(worst >= -1e-3);
  }

  auto tight = solve_grid(f, k, mu, 1e-6);
  CHECK(tight.points.size() <= s.points.size());
  for (const auto& u : tight.points.points()) {
    bool found = false;
    for (const auto& v : s.points.points())
      found = found || (u - v).norm() == 0.0;
    CHECK(found);
  }

  CHECK_THROWS_AS(
      FeasibleSet::finite_grid({}, Norm::euclidean(1)), Error);
}

TEST_CASE("solve_projected_iteration: contraction fixed points") {
  auto box = FeasibleSet::box(scalar_point(0.0), scalar_point(1.0),
                              Norm::euclidean(1));
  VariationalMap g = [](const Vector& u, const Vector& mu) {
    return Vector(mu - u);
  };
  ProjectedOptions opts;
  opts.step = 0.5;
  opts.tol = 1e-12;

  auto s = solve_projected_iteration(g, box, scalar_point(0.3), opts);
  REQUIRE(s.points.size() == 1);
  CHECK(s.points.points()[0][0] == doctest::Approx(0.3).epsilon(1e-9));
  CHECK(s.certification == SolutionSet::Certification::sampled);
  CHECK(s.residuals[0] >= -1e-9);

  auto clamped = solve_projected_iteration(g, box, scalar_point(2.0), opts);
  REQUIRE(clamped.points.size() == 1);
  CHECK(clamped.points.points()[0][0] == doctest::Approx(1.0));
}

TEST_CASE("solve_projected_iteration: divergence raises, stall reports") {
  // stiff map with an over-long step inside a huge box
  auto wide = FeasibleSet::box(scalar_point(-1e9), scalar_point(1e9),
                               Norm::euclidean(1));
  VariationalMap stiff = [](const Vector& u, const Vector& mu) {
    return Vector(50.0 * (mu - u));
  };
  ProjectedOptions opts;
  opts.step = 0.1;  // step * 50 = 5 > 2: explodes
  opts.start = scalar_point(1.0);
  CHECK_THROWS_AS(
      solve_projected_iteration(stiff, wide, scalar_point(0.0), opts), Error);

  // oscillation without reaching tolerance: max_iter exhausts
  auto box = FeasibleSet::box(scalar_point(-1.0), scalar_point(1.0),
                              Norm::euclidean(1));
  ProjectedOptions stall;
  stall.step = 0.04;  // step * 50 = 2: period-two oscillation
  stall.max_iter = 100;
  stall.start = scalar_point(0.5);
  auto empty = solve_projected_iteration(stiff, box, scalar_point(0.0), stall);
  CHECK(empty.points.empty());
  CHECK_FALSE(empty.diagnostic.empty());
}

TEST_CASE("solve_projected_iteration: agrees with the grid on the induced grid") {
  auto box = FeasibleSet::box(scalar_point(0.0), scalar_point(1.0),
                              Norm::euclidean(1));
  VariationalMap g = [](const Vector& u, const Vector& mu) {
    return Vector(mu - u);
  };
  Trifunction f;
  f.eval = [](const Vector& u, const Vector& v, const Vector&,
              const Vector& mu) { return (mu[0] - u[0]) * (v[0] - u[0]); };

  int n = 101;
  auto grid = line_grid(0.0, 1.0, n);
  double spacing = 1.0 / (n - 1);

  for (double mu : {0.137, 0.5, 0.912}) {
    ProjectedOptions opts;
    opts.tol = 1e-12;
    auto cont = solve_projected_iteration(g, box, scalar_point(mu), opts);
    auto disc = solve_grid(f, grid, scalar_point(mu), spacing * 0.5);
    REQUIRE(cont.points.size() == 1);
    REQUIRE(disc.points.size() >= 1);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& z : disc.points.points())
      best = std::min(best, std::abs(z[0] - cont.points.points()[0][0]));
    CHECK(best <= spacing + 1e-9);
  }
}

TEST_CASE("measure_excess: restriction and conventions") {
  Norm n1 = Norm::euclidean(1);
  SolutionSet ref{PointSet(n1, {scalar_point(0.5)}), 0.0, scalar_point(0.5),
                  {0.0}, SolutionSet::Certification::exact, ""};
  SolutionSet near{PointSet(n1, {scalar_point(0.52)}), 0.0, scalar_point(0.52),
                   {0.0}, SolutionSet::Certification::exact, ""};

  CHECK(measure_excess(near, ref, scalar_point(0.5), ExtReal::finite(1.0))
            .value() == doctest::Approx(0.02));

  // everything falls outside the neighborhood: empty excess is zero
  SolutionSet far{PointSet(n1, {scalar_point(9.0)}), 0.0, scalar_point(9.0),
                  {0.0}, SolutionSet::Certification::exact, ""};
  CHECK(measure_excess(far, ref, scalar_point(0.5), ExtReal::finite(1.0))
            .value() == 0.0);

  // empty reference set: infinite excess, the experiment is invalid
  SolutionSet none{PointSet(n1), 0.0, scalar_point(0.0), {},
                   SolutionSet::Certification::exact, ""};
  CHECK(measure_excess(near, none, scalar_point(0.5), ExtReal::infinity())
            .is_infinite());
}

TEST_CASE("feasible sets: projection and membership in a weighted norm") {
  Matrix w(2, 2);
  w << 4.0, 0.0, 0.0, 1.0;
  auto norm = Norm::weighted(w);
  Vector center = Vector::Zero(2);
  auto ball = FeasibleSet::ball(center, 1.0, norm);

  Vector outside(2);
  outside << 1.0, 0.0;  // weighted norm 2
  CHECK_FALSE(ball.contains(outside));
  Vector proj = ball.project(outside);
  CHECK(norm(proj) == doctest::Approx(1.0));
  CHECK(proj[0] == doctest::Approx(0.5));

  auto boundary = ball.sample_boundary(32, 7);
  for (const auto& p : boundary) CHECK(norm(p) == doctest::Approx(1.0));
  auto cloud = ball.sample_interior(32, 7);
  for (const auto& p : cloud) CHECK(norm(p) <= 1.0 + 1e-12);

  // deterministic given the seed
  auto cloud2 = ball.sample_interior(32, 7);
  for (std::size_t i = 0; i < cloud.size(); ++i)
    CHECK((cloud[i] - cloud2[i]).norm() == 0.0);

  CHECK_THROWS_AS(FeasibleSet::box(scalar_point(1.0), scalar_point(0.0),
                                   Norm::euclidean(1)),
                  Error);
  CHECK_THROWS_AS(FeasibleSet::ball(center, -1.0, norm), Error);
}
