#include "calmkit/feasible_set.hpp"

#include <random>

namespace calmkit {

namespace {

// Van der Corput radical inverse; bases taken from the prime sequence.
double radical_inverse(std::uint64_t index, int base) {
  double inv = 1.0 / base, f = inv, x = 0.0;
  while (index > 0) {
    x += f * static_cast<double>(index % base);
    index /= base;
    f *= inv;
  }
  return x;
}

constexpr int kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                           23, 29, 31, 37, 41, 43, 47, 53};

Vector halton_point(std::uint64_t index, int dim) {
  Vector p(dim);
  for (int d = 0; d < dim; ++d)
    p[d] = radical_inverse(index + 1, kPrimes[d % 16]);
  return p;
}

}  // namespace

FeasibleSet FeasibleSet::finite_grid(std::vector<Vector> points, Norm norm) {
  if (points.empty()) throw Error("FeasibleSet: finite grid must be nonempty");
  FeasibleSet k(Kind::finite_grid, std::move(norm));
  for (const auto& p : points)
    if (p.size() != k.dim())
      throw DimensionError("FeasibleSet: grid point dimension mismatch");
  k.points_ = std::move(points);
  return k;
}

FeasibleSet FeasibleSet::box(Vector lo, Vector hi, Norm norm) {
  FeasibleSet k(Kind::box, std::move(norm));
  if (lo.size() != k.dim() || hi.size() != k.dim())
    throw DimensionError("FeasibleSet: box bound dimension mismatch");
  for (int i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) throw Error("FeasibleSet: box bounds out of order");
  k.lo_ = std::move(lo);
  k.hi_ = std::move(hi);
  return k;
}

FeasibleSet FeasibleSet::ball(Vector center, double radius, Norm norm) {
  if (!(radius > 0.0)) throw Error("FeasibleSet: ball radius must be positive");
  FeasibleSet k(Kind::ball, std::move(norm));
  if (center.size() != k.dim())
    throw DimensionError("FeasibleSet: ball center dimension mismatch");
  k.center_ = std::move(center);
  k.radius_ = radius;
  return k;
}

const std::vector<Vector>& FeasibleSet::grid_points() const {
  if (kind_ != Kind::finite_grid) throw Error("FeasibleSet: not a finite grid");
  return points_;
}

const Vector& FeasibleSet::box_lo() const {
  if (kind_ != Kind::box) throw Error("FeasibleSet: not a box");
  return lo_;
}

const Vector& FeasibleSet::box_hi() const {
  if (kind_ != Kind::box) throw Error("FeasibleSet: not a box");
  return hi_;
}

const Vector& FeasibleSet::ball_center() const {
  if (kind_ != Kind::ball) throw Error("FeasibleSet: not a ball");
  return center_;
}

double FeasibleSet::ball_radius() const {
  if (kind_ != Kind::ball) throw Error("FeasibleSet: not a ball");
  return radius_;
}

bool FeasibleSet::contains(const Vector& x, double tol) const {
  if (x.size() != dim()) throw DimensionError("FeasibleSet: dimension mismatch");
  switch (kind_) {
    case Kind::finite_grid:
      for (const auto& p : points_)
        if (norm_.distance(x, p) <= tol) return true;
      return false;
    case Kind::box:
      for (int i = 0; i < x.size(); ++i)
        if (x[i] < lo_[i] - tol || x[i] > hi_[i] + tol) return false;
      return true;
    case Kind::ball:
      return norm_.distance(x, center_) <= radius_ + tol;
  }
  return false;
}

Vector FeasibleSet::project(const Vector& x) const {
  if (x.size() != dim()) throw DimensionError("FeasibleSet: dimension mismatch");
  switch (kind_) {
    case Kind::finite_grid: {
      double best = std::numeric_limits<double>::infinity();
      const Vector* arg = &points_.front();
      for (const auto& p : points_) {
        double d = norm_.distance(x, p);
        if (d < best) {
          best = d;
          arg = &p;
        }
      }
      return *arg;
    }
    case Kind::box:
      return x.cwiseMax(lo_).cwiseMin(hi_);
    case Kind::ball: {
      double d = norm_.distance(x, center_);
      if (d <= radius_) return x;
      return center_ + (radius_ / d) * (x - center_);
    }
  }
  return x;
}

Vector FeasibleSet::center() const {
  switch (kind_) {
    case Kind::finite_grid: {
      Vector c = Vector::Zero(dim());
      for (const auto& p : points_) c += p;
      return c / static_cast<double>(points_.size());
    }
    case Kind::box:
      return 0.5 * (lo_ + hi_);
    case Kind::ball:
      return center_;
  }
  return Vector::Zero(dim());
}

std::vector<Vector> FeasibleSet::sample_boundary(int count,
                                                 std::uint64_t seed) const {
  std::vector<Vector> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  switch (kind_) {
    case Kind::finite_grid: {
      for (int i = 0; i < count && i < static_cast<int>(points_.size()); ++i)
        out.push_back(points_[static_cast<std::size_t>(i)]);
      break;
    }
    case Kind::box: {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<int> face(0, 2 * dim() - 1);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      for (int i = 0; i < count; ++i) {
        Vector p(dim());
        for (int d = 0; d < dim(); ++d)
          p[d] = lo_[d] + unit(rng) * (hi_[d] - lo_[d]);
        int f = face(rng);
        p[f / 2] = (f % 2 == 0) ? lo_[f / 2] : hi_[f / 2];
        out.push_back(std::move(p));
      }
      break;
    }
    case Kind::ball: {
      std::uint64_t index = seed;
      while (static_cast<int>(out.size()) < count) {
        Vector c = halton_point(index++, dim());
        Vector d = 2.0 * c - Vector::Ones(dim());
        double n = norm_(d);
        if (n < 1e-8) continue;
        out.push_back(center_ + (radius_ / n) * d);
      }
      break;
    }
  }
  return out;
}

std::vector<Vector> FeasibleSet::sample_interior(int count,
                                                 std::uint64_t seed) const {
  std::vector<Vector> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  switch (kind_) {
    case Kind::finite_grid: {
      for (int i = 0; i < count && i < static_cast<int>(points_.size()); ++i)
        out.push_back(points_[static_cast<std::size_t>(i)]);
      break;
    }
    case Kind::box: {
      for (int i = 0; i < count; ++i) {
        Vector c = halton_point(seed + static_cast<std::uint64_t>(i), dim());
        out.push_back(lo_.array() + c.array() * (hi_ - lo_).array());
      }
      break;
    }
    case Kind::ball: {
      std::uint64_t index = seed;
      while (static_cast<int>(out.size()) < count) {
        Vector c = halton_point(index++, dim());
        Vector d = 2.0 * c - Vector::Ones(dim());
        if (norm_(d) > 1.0) continue;  // rejection keeps the cloud uniform
        out.push_back(center_ + radius_ * d);
      }
      break;
    }
  }
  return out;
}

}  // namespace calmkit
