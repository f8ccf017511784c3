#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "calmkit/extreal.hpp"
#include "calmkit/holder_fit.hpp"
#include "calmkit/parts.hpp"
#include "calmkit/pointset.hpp"

using namespace calmkit;

namespace {

PointSet set1d(std::initializer_list<double> xs) {
  std::vector<Vector> pts;
  for (double x : xs) pts.push_back(scalar_point(x));
  return PointSet(Norm::euclidean(1), std::move(pts));
}

}  // namespace

TEST_CASE("parts: sign cases and the subadditivity example") {
  auto p = parts(-3.0);
  CHECK(p.plus == 0.0);
  CHECK(p.minus == 3.0);

  p = parts(2.5);
  CHECK(p.plus == 2.5);
  CHECK(p.minus == 0.0);

  // (a+b)_+ <= a_+ + b_+ with a = 1, b = -2
  CHECK(parts(1.0 + (-2.0)).plus == 0.0);
  CHECK(parts(1.0).plus + parts(-2.0).plus == 1.0);
}

TEST_CASE("parts: rejects non-finite input") {
  CHECK_THROWS_AS(parts(std::numeric_limits<double>::quiet_NaN()), Error);
  CHECK_THROWS_AS(parts(std::numeric_limits<double>::infinity()), Error);
}

TEST_CASE("parts: calculus properties on random pairs") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  std::uniform_real_distribution<double> pos(1e-6, 10.0);
  for (int i = 0; i < 20000; ++i) {
    double a = dist(rng), b = dist(rng), alpha = pos(rng);

    // (a) reflection
    CHECK(parts(-a).plus == parts(a).minus);
    CHECK(parts(-a).minus == parts(a).plus);

    // reconstruction
    CHECK(parts(a).plus - parts(a).minus == a);

    // (b) monotone under nonnegative shifts
    double shift = std::abs(b);
    CHECK(parts(a).plus <= parts(a + shift).plus);

    // (c) subadditivity, equality iff ab >= 0
    CHECK(parts(a + b).plus <= parts(a).plus + parts(b).plus + 1e-12);
    if (a * b >= 0.0)
      CHECK(parts(a + b).plus == parts(a).plus + parts(b).plus);
    else if (std::min(std::abs(a), std::abs(b)) > 1e-9)
      CHECK(parts(a + b).plus < parts(a).plus + parts(b).plus);

    // (d)
    CHECK(parts(a + b).plus <= parts(a).plus + std::abs(b) + 1e-12);

    // (e)
    CHECK((parts(a).plus <= alpha) == (a <= alpha));
  }
}

TEST_CASE("point_to_set_distance: enumeration, membership, empty set") {
  auto b = set1d({1.0, -2.0});
  CHECK(point_to_set_distance(scalar_point(0.0), b).value() == 1.0);
  CHECK(point_to_set_distance(scalar_point(-2.0), b).value() == 0.0);

  auto empty = PointSet(Norm::euclidean(1));
  CHECK(point_to_set_distance(scalar_point(0.0), empty).is_infinite());

  CHECK_THROWS_AS(point_to_set_distance(Vector::Zero(2), b), DimensionError);
}

TEST_CASE("pompeiu_excess: conventions and enumeration") {
  auto b = set1d({0.0});
  CHECK(pompeiu_excess(PointSet(Norm::euclidean(1)), b).value() == 0.0);

  CHECK(pompeiu_excess(set1d({0.0, 3.0}), set1d({1.0})).value() == 2.0);

  auto empty = PointSet(Norm::euclidean(1));
  CHECK(pompeiu_excess(set1d({0.0}), empty).is_infinite());
  CHECK(pompeiu_excess(empty, empty).is_infinite());
}

TEST_CASE("pompeiu_excess: subset gives zero, triangle bound holds") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  std::uniform_int_distribution<int> count(1, 8);
  auto random_set = [&](int extra) {
    std::vector<Vector> pts;
    int n = count(rng) + extra;
    for (int i = 0; i < n; ++i) {
      Vector p(2);
      p << dist(rng), dist(rng);
      pts.push_back(p);
    }
    return PointSet(Norm::euclidean(2), std::move(pts));
  };

  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_set(0);
    auto b = random_set(0);
    auto c = random_set(0);

    // subset: A against A union B
    std::vector<Vector> merged = a.points();
    for (const auto& p : b.points()) merged.push_back(p);
    PointSet u(Norm::euclidean(2), merged);
    CHECK(pompeiu_excess(a, u).value() == 0.0);

    double eac = pompeiu_excess(a, c).value();
    double eab = pompeiu_excess(a, b).value();
    double ebc = pompeiu_excess(b, c).value();
    CHECK(eac <= eab + ebc + 1e-12);
  }
}

TEST_CASE("hausdorff_distance: examples and metric properties") {
  auto a = set1d({0.5, 2.0});
  CHECK(hausdorff_distance(a, a).value() == 0.0);
  CHECK(hausdorff_distance(set1d({0.0}), set1d({1.0})).value() == 1.0);
  CHECK(hausdorff_distance(set1d({0.0, 3.0}), set1d({1.0})).value() == 2.0);

  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> dist(-4.0, 4.0);
  std::uniform_int_distribution<int> count(1, 6);
  auto random_set = [&] {
    std::vector<Vector> pts;
    int n = count(rng);
    for (int i = 0; i < n; ++i) pts.push_back(scalar_point(dist(rng)));
    return PointSet(Norm::euclidean(1), std::move(pts));
  };
  for (int trial = 0; trial < 300; ++trial) {
    auto x = random_set(), y = random_set(), z = random_set();
    double hxy = hausdorff_distance(x, y).value();
    CHECK(hxy == hausdorff_distance(y, x).value());
    CHECK(hausdorff_distance(x, z).value() <=
          hxy + hausdorff_distance(y, z).value() + 1e-12);
    if (hxy == 0.0) {
      // equal as sets up to duplicates
      CHECK(pompeiu_excess(x, y).value() == 0.0);
      CHECK(pompeiu_excess(y, x).value() == 0.0);
    }
  }
}

TEST_CASE("metric outputs are duplicate-invariant") {
  auto a = set1d({0.0, 3.0});
  auto b = set1d({1.0, -0.5});
  std::vector<Vector> dup = a.points();
  dup.push_back(scalar_point(3.0));
  dup.push_back(scalar_point(0.0));
  PointSet a2(Norm::euclidean(1), dup);

  CHECK(pompeiu_excess(a, b).value() == pompeiu_excess(a2, b).value());
  CHECK(pompeiu_excess(b, a).value() == pompeiu_excess(b, a2).value());
  CHECK(hausdorff_distance(a, b).value() ==
        hausdorff_distance(a2, b).value());
}

TEST_CASE("norms: weighted construction and mixing rules") {
  Matrix w(2, 2);
  w << 2.0, 0.5, 0.5, 1.0;
  auto weighted = Norm::weighted(w);
  Vector x(2);
  x << 1.0, -1.0;
  CHECK(weighted(x) == doctest::Approx(std::sqrt(2.0 - 1.0 + 1.0)));

  CHECK_FALSE(weighted.compatible(Norm::euclidean(2)));
  CHECK(weighted.compatible(Norm::weighted(w)));

  Matrix bad(2, 2);
  bad << 1.0, 2.0, 2.0, 1.0;  // indefinite
  CHECK_THROWS_AS(Norm::weighted(bad), Error);

  CHECK_THROWS_AS(
      PointSet(Norm::euclidean(2), std::vector<Vector>{scalar_point(1.0)}),
      DimensionError);
}

TEST_CASE("fit_holder_exponent: exact power laws") {
  std::vector<HolderSample> linear;
  for (double d : {0.1, 0.01, 0.001})
    linear.push_back({d, 2.0 * d});
  auto fit = fit_holder_exponent(linear);
  CHECK(fit.exponent_estimate == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.rank_estimate == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(fit.residual <= 1e-12);
  CHECK(fit.used_count == 3);

  std::vector<HolderSample> sqrt_law;
  for (double d : {0.5, 0.1, 0.02, 0.004})
    sqrt_law.push_back({d, std::sqrt(d)});
  fit = fit_holder_exponent(sqrt_law);
  CHECK(fit.exponent_estimate == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("fit_holder_exponent: discards zero outputs, counts them") {
  std::vector<HolderSample> samples = {
      {0.1, 0.2}, {0.01, 0.02}, {0.001, 0.0}};
  auto fit = fit_holder_exponent(samples);
  CHECK(fit.sample_count == 3);
  CHECK(fit.used_count == 2);
  CHECK(fit.discarded_count == 1);

  std::vector<HolderSample> too_few = {{0.1, 0.0}, {0.01, 0.02}};
  CHECK_THROWS_AS(fit_holder_exponent(too_few), Error);

  std::vector<HolderSample> bad_in = {{0.0, 0.1}, {0.01, 0.02}};
  CHECK_THROWS_AS(fit_holder_exponent(bad_in), Error);
}

TEST_CASE("fit_holder_exponent: noisy fit matches normal-equation oracle") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> noise(-0.05, 0.05);
  const double slope = 0.75, logk = std::log(3.0);

  std::vector<HolderSample> samples;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (double d = 0.2; d > 1e-4; d *= 0.5) {
    double ly = logk + slope * std::log(d) + noise(rng);
    samples.push_back({d, std::exp(ly)});
    double lx = std::log(d);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  // independent closed-form normal equations
  double det = n * sxx - sx * sx;
  double oracle_slope = (n * sxy - sx * sy) / det;
  double oracle_icept = (sxx * sy - sx * sxy) / det;

  auto fit = fit_holder_exponent(samples);
  CHECK(fit.exponent_estimate == doctest::Approx(oracle_slope).epsilon(1e-10));
  CHECK(fit.rank_estimate ==
        doctest::Approx(std::exp(oracle_icept)).epsilon(1e-10));
  CHECK(fit.residual > 0.0);
  CHECK(fit.exponent_estimate == doctest::Approx(slope).epsilon(0.2));
}

TEST_CASE("ExtReal: tagged infinity semantics") {
  auto fin = ExtReal::finite(2.0);
  auto inf = ExtReal::infinity();
  CHECK(fin < inf);
  CHECK_FALSE(inf < fin);
  CHECK(max(fin, inf).is_infinite());
  CHECK(fin.value() == 2.0);
  CHECK_THROWS_AS(inf.value(), Error);
  CHECK_THROWS_AS(ExtReal::finite(std::numeric_limits<double>::infinity()),
                  Error);
}
