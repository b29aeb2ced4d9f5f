#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "erap/manifold.hpp"
#include "erap/rng.hpp"

namespace erap {

// Ordered point set on a manifold, tagged with its ensemble of origin:
// P (Poisson), S/T (lattice grid), F (Fibonacci), plus a replication count
// for the grid-transportation construction.
struct PointSet {
  ManifoldSpec manifold;
  std::vector<SurfacePoint> points;
  std::string label = "P";
  int replication = 1;

  std::size_t size() const { return points.size(); }
};

class GridIncompatibility : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Poisson ensemble: N i.i.d. points uniform w.r.t. the area measure
// ---------------------------------------------------------------------------

inline SurfacePoint sample_uniform_point(const Manifold& M, Xoshiro256ss& rng) {
  switch (M.family()) {
    case Family::Rectangle:
    case Family::Cylinder:
    case Family::Moebius:
    case Family::Klein:
    case Family::Boy:
      return {M.side_x() * rng.uniform(), M.side_y() * rng.uniform()};
    case Family::Torus: {
      const auto w = M.lattice();
      const double u = rng.uniform(), v = rng.uniform();
      return {w[0] * u + w[1] * v, w[2] * u + w[3] * v};
    }
    case Family::Disc: {
      const double u = M.radius() * std::sqrt(rng.uniform());
      const double ang = 2.0 * kPi * rng.uniform();
      return {u * std::cos(ang), u * std::sin(ang)};
    }
    case Family::ConeSector: {
      const double u = M.radius() * std::sqrt(rng.uniform());
      return {u, M.wedge_angle() * rng.uniform()};
    }
    case Family::Sphere: {
      const double z = 2.0 * rng.uniform() - 1.0;  // z/r uniform in [-1, 1]
      const double theta = std::acos(std::clamp(z, -1.0, 1.0));
      return {theta, 2.0 * kPi * rng.uniform()};
    }
    case Family::SphericalLune: {
      const double z = 2.0 * rng.uniform() - 1.0;
      const double theta = std::acos(std::clamp(z, -1.0, 1.0));
      return {theta, M.wedge_angle() * rng.uniform()};
    }
    case Family::ProjectiveSphere: {
      const double z = 2.0 * rng.uniform() - 1.0;
      const double theta = std::acos(std::clamp(z, -1.0, 1.0));
      return M.canonicalize({theta, 2.0 * kPi * rng.uniform()});
    }
  }
  return {};
}

inline PointSet sample_poisson(const Manifold& M, std::size_t n, Xoshiro256ss& rng) {
  if (n < 1) throw std::invalid_argument("sample_poisson: requires N >= 1");
  PointSet ps;
  ps.manifold = M.spec();
  ps.label = "P";
  ps.points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ps.points.push_back(sample_uniform_point(M, rng));
  return ps;
}

inline PointSet sample_poisson(const Manifold& M, std::size_t n, const StreamKey& key) {
  Xoshiro256ss rng = make_rng(key);
  return sample_poisson(M, n, rng);
}

// ---------------------------------------------------------------------------
// Deterministic grids
// ---------------------------------------------------------------------------

// Cell-centered lattice grid of spacing 1/k on the flat families. On the
// torus the grid is omega * ((i+1/2)/k, (j+1/2)/k), so Torus(i) carries the
// square grid and Torus(exp(i pi/3)) the triangular one.
inline PointSet lattice_grid(const Manifold& M, std::size_t k) {
  if (k < 1) throw std::invalid_argument("lattice_grid: requires k >= 1");
  PointSet ps;
  ps.manifold = M.spec();
  ps.label = "S";
  switch (M.family()) {
    case Family::Torus: {
      const auto w = M.lattice();
      ps.points.reserve(k * k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          const double u = (i + 0.5) / k, v = (j + 0.5) / k;
          ps.points.push_back({w[0] * u + w[1] * v, w[2] * u + w[3] * v});
        }
      return ps;
    }
    case Family::Rectangle:
    case Family::Cylinder:
    case Family::Moebius:
    case Family::Klein:
    case Family::Boy: {
      const double nx_real = k * M.side_x(), ny_real = k * M.side_y();
      const auto near_int = [](double v) { return std::abs(v - std::round(v)) < 1e-9; };
      if (!near_int(nx_real) || !near_int(ny_real)) {
        throw GridIncompatibility(
            "lattice_grid: k*sqrt(rho) = " + detail::format_double(nx_real) +
            " and k/sqrt(rho) = " + detail::format_double(ny_real) +
            " must both be integers (k = " + std::to_string(k) +
            ", rho = " + detail::format_double(M.spec().rho) + ")");
      }
      const auto nx = static_cast<std::size_t>(std::llround(nx_real));
      const auto ny = static_cast<std::size_t>(std::llround(ny_real));
      ps.points.reserve(nx * ny);
      for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j)
          ps.points.push_back({(i + 0.5) / k, (j + 0.5) / k});
      return ps;
    }
    default:
      throw GridIncompatibility(std::string("lattice_grid: unsupported family ") +
                                family_name(M.family()));
  }
}

// Fibonacci (golden-angle) point sets on the sphere, disc and projective
// sphere. phi_j = 2 pi frac(j (phi_golden - 1)).
inline PointSet fibonacci_grid(const Manifold& M, std::size_t n) {
  if (n < 1) throw std::invalid_argument("fibonacci_grid: requires N >= 1");
  constexpr double golden_frac = 0.6180339887498949;  // 1/phi = phi - 1
  const auto golden_phi = [&](std::size_t j) {
    double f = j * golden_frac;
    return 2.0 * kPi * (f - std::floor(f));
  };
  PointSet ps;
  ps.manifold = M.spec();
  ps.label = "F";
  ps.points.reserve(n);
  const double r = M.radius();
  switch (M.family()) {
    case Family::Sphere:
      for (std::size_t j = 0; j < n; ++j) {
        const double z = 1.0 - (2.0 * j + 1.0) / n;  // z/r
        ps.points.push_back({std::acos(std::clamp(z, -1.0, 1.0)), golden_phi(j)});
      }
      return ps;
    case Family::Disc:
      for (std::size_t j = 0; j < n; ++j) {
        const double u = r * std::sqrt((j + 0.5) / n);
        const double ang = golden_phi(j);
        ps.points.push_back({u * std::cos(ang), u * std::sin(ang)});
      }
      return ps;
    case Family::ProjectiveSphere:
      // 2N-point sphere construction; the points with z > 0 are exactly the
      // first N and already lie in the representative hemisphere.
      for (std::size_t j = 0; j < n; ++j) {
        const double z = 1.0 - (2.0 * j + 1.0) / (2.0 * n);
        ps.points.push_back({std::acos(std::clamp(z, -1.0, 1.0)), golden_phi(j)});
      }
      return ps;
    default:
      throw std::invalid_argument(std::string("fibonacci_grid: unsupported family ") +
                                  family_name(M.family()));
  }
}

// Each point repeated h times consecutively; casts the N-blue versus
// hN-grid transportation problem as an (hN) x (hN) assignment.
inline PointSet replicate(const PointSet& ps, std::size_t h) {
  if (h < 1) throw std::invalid_argument("replicate: requires h >= 1");
  if (h == 1) return ps;
  PointSet out;
  out.manifold = ps.manifold;
  out.label = ps.label;
  out.replication = static_cast<int>(h) * ps.replication;
  out.points.reserve(ps.points.size() * h);
  for (const SurfacePoint& p : ps.points)
    for (std::size_t c = 0; c < h; ++c) out.points.push_back(p);
  return out;
}

}  // namespace erap
