#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "erap/rng.hpp"
#include "erap/special_functions.hpp"

namespace erap {

// ---------------------------------------------------------------------------
// Specs and points
// ---------------------------------------------------------------------------

enum class Family {
  Rectangle,
  Torus,
  Cylinder,
  Moebius,
  Klein,
  Boy,
  ConeSector,
  Disc,
  Sphere,
  ProjectiveSphere,
  SphericalLune,
};

enum class LuneBc { Periodic, Neumann };

// Parametric description of a unit-area manifold. Only the fields relevant
// to the family are meaningful.
struct ManifoldSpec {
  Family family = Family::Rectangle;
  double rho = 1.0;      // aspect parameter of the flat families
  double tau_re = 0.0;   // torus half-period ratio
  double tau_im = 1.0;
  int cone_p = 1;        // sector order
  int lune_k = 1;        // lune order
  LuneBc bc = LuneBc::Periodic;

  std::complex<double> tau() const { return {tau_re, tau_im}; }

  static ManifoldSpec rectangle(double rho) { return {Family::Rectangle, rho}; }
  static ManifoldSpec torus(std::complex<double> tau) {
    ManifoldSpec s;
    s.family = Family::Torus;
    s.tau_re = tau.real();
    s.tau_im = tau.imag();
    return s;
  }
  static ManifoldSpec cylinder(double rho) { return {Family::Cylinder, rho}; }
  static ManifoldSpec moebius(double rho) { return {Family::Moebius, rho}; }
  static ManifoldSpec klein(double rho) { return {Family::Klein, rho}; }
  static ManifoldSpec boy(double rho) { return {Family::Boy, rho}; }
  static ManifoldSpec cone(int p) {
    ManifoldSpec s;
    s.family = Family::ConeSector;
    s.cone_p = p;
    return s;
  }
  static ManifoldSpec disc() { return {Family::Disc}; }
  static ManifoldSpec sphere() { return {Family::Sphere}; }
  static ManifoldSpec projective_sphere() { return {Family::ProjectiveSphere}; }
  static ManifoldSpec lune(int k, LuneBc bc) {
    ManifoldSpec s;
    s.family = Family::SphericalLune;
    s.lune_k = k;
    s.bc = bc;
    return s;
  }
};

inline const char* family_name(Family f) {
  switch (f) {
    case Family::Rectangle: return "rectangle";
    case Family::Torus: return "torus";
    case Family::Cylinder: return "cylinder";
    case Family::Moebius: return "moebius";
    case Family::Klein: return "klein";
    case Family::Boy: return "boy";
    case Family::ConeSector: return "cone";
    case Family::Disc: return "disc";
    case Family::Sphere: return "sphere";
    case Family::ProjectiveSphere: return "projective_sphere";
    case Family::SphericalLune: return "lune";
  }
  return "?";
}

inline Family family_from_name(const std::string& name) {
  for (Family f : {Family::Rectangle, Family::Torus, Family::Cylinder,
                   Family::Moebius, Family::Klein, Family::Boy,
                   Family::ConeSector, Family::Disc, Family::Sphere,
                   Family::ProjectiveSphere, Family::SphericalLune}) {
    if (name == family_name(f)) return f;
  }
  throw std::invalid_argument("unknown manifold family: " + name);
}

inline bool uses_rho(Family f) {
  return f == Family::Rectangle || f == Family::Cylinder || f == Family::Moebius ||
         f == Family::Klein || f == Family::Boy;
}

inline void validate_spec(const ManifoldSpec& s) {
  if (uses_rho(s.family) && !(s.rho > 0.0 && std::isfinite(s.rho)))
    throw std::invalid_argument("manifold: requires rho > 0");
  if (s.family == Family::Torus && !(s.tau_im > 0.0 && std::isfinite(s.tau_im)))
    throw std::invalid_argument("manifold: requires Im(tau) > 0");
  if (s.family == Family::ConeSector && s.cone_p < 1)
    throw std::invalid_argument("manifold: requires sector order p >= 1");
  if (s.family == Family::SphericalLune && s.lune_k < 1)
    throw std::invalid_argument("manifold: requires lune order k >= 1");
}

namespace detail {
inline std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}
}  // namespace detail

// Compact parameter string, also used as the manifold identity in RNG
// stream keys and CSV output ("rho=2", "tau_re=0;tau_im=1", ...).
inline std::string params_string(const ManifoldSpec& s) {
  using detail::format_double;
  switch (s.family) {
    case Family::Rectangle:
    case Family::Cylinder:
    case Family::Moebius:
    case Family::Klein:
    case Family::Boy:
      return "rho=" + format_double(s.rho);
    case Family::Torus:
      return "tau_re=" + format_double(s.tau_re) + ";tau_im=" + format_double(s.tau_im);
    case Family::ConeSector:
      return "p=" + std::to_string(s.cone_p);
    case Family::SphericalLune:
      return "k=" + std::to_string(s.lune_k) +
             ";bc=" + (s.bc == LuneBc::Periodic ? "periodic" : "neumann");
    default:
      return "";
  }
}

inline std::uint64_t spec_hash(const ManifoldSpec& s) {
  return fnv1a64(std::string(family_name(s.family)) + "|" + params_string(s));
}

inline bool operator==(const ManifoldSpec& a, const ManifoldSpec& b) {
  if (a.family != b.family) return false;
  switch (a.family) {
    case Family::Torus: return a.tau_re == b.tau_re && a.tau_im == b.tau_im;
    case Family::ConeSector: return a.cone_p == b.cone_p;
    case Family::SphericalLune: return a.lune_k == b.lune_k && a.bc == b.bc;
    case Family::Disc:
    case Family::Sphere:
    case Family::ProjectiveSphere: return true;
    default: return a.rho == b.rho;
  }
}
inline bool operator!=(const ManifoldSpec& a, const ManifoldSpec& b) { return !(a == b); }

// Chart coordinates of a point in the fundamental domain: Cartesian (x, y)
// for the flat families and the disc, polar (u, theta) for the cone sector,
// (colatitude, longitude) for the spherical families.
struct SurfacePoint {
  double c1 = 0.0;
  double c2 = 0.0;
};

// Affine plane map x -> L x + t with L orthogonal with entries in {-1,0,1}.
struct PlanarIsometry {
  std::array<double, 4> lin{1, 0, 0, 1};
  std::array<double, 2> tr{0, 0};

  SurfacePoint apply(const SurfacePoint& s) const {
    return {lin[0] * s.c1 + lin[1] * s.c2 + tr[0],
            lin[2] * s.c1 + lin[3] * s.c2 + tr[1]};
  }
  // this after g: x -> this(g(x))
  PlanarIsometry compose(const PlanarIsometry& g) const {
    PlanarIsometry r;
    r.lin = {lin[0] * g.lin[0] + lin[1] * g.lin[2], lin[0] * g.lin[1] + lin[1] * g.lin[3],
             lin[2] * g.lin[0] + lin[3] * g.lin[2], lin[2] * g.lin[1] + lin[3] * g.lin[3]};
    r.tr = {lin[0] * g.tr[0] + lin[1] * g.tr[1] + tr[0],
            lin[2] * g.tr[0] + lin[3] * g.tr[1] + tr[1]};
    return r;
  }
  PlanarIsometry inverse() const {
    PlanarIsometry r;
    r.lin = {lin[0], lin[2], lin[1], lin[3]};  // orthogonal: inverse = transpose
    r.tr = {-(r.lin[0] * tr[0] + r.lin[1] * tr[1]),
            -(r.lin[2] * tr[0] + r.lin[3] * tr[1])};
    return r;
  }
};

namespace detail {

inline double wrap_half(double x, double period) {
  return x - period * std::round(x / period);
}

inline double posmod(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0.0) r += period;
  return r;
}

struct Vec3 {
  double x, y, z;
};

inline Vec3 unit_from_angles(double theta, double phi) {
  const double s = std::sin(theta);
  return {s * std::cos(phi), s * std::sin(phi), std::cos(theta)};
}

inline double angle_between(const Vec3& a, const Vec3& b) {
  const Vec3 c{a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
  const double cross = std::sqrt(c.x * c.x + c.y * c.y + c.z * c.z);
  const double dot = a.x * b.x + a.y * b.y + a.z * b.z;
  return std::atan2(cross, dot);
}

inline Vec3 rotate_z(const Vec3& v, double ang) {
  const double c = std::cos(ang), s = std::sin(ang);
  return {c * v.x - s * v.y, s * v.x + c * v.y, v.z};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Manifold
// ---------------------------------------------------------------------------

// Unit-area manifold handle: normalization constants, the identification
// group for the quotient families, and exact geodesic distances.
class Manifold {
 public:
  explicit Manifold(const ManifoldSpec& spec) : spec_(spec) {
    validate_spec(spec);
    switch (spec.family) {
      case Family::Rectangle:
      case Family::Cylinder:
      case Family::Moebius:
      case Family::Klein:
      case Family::Boy:
        a_ = std::sqrt(spec.rho);
        b_ = 1.0 / a_;
        init_flat_quotient();
        break;
      case Family::Torus:
        init_torus();
        break;
      case Family::ConeSector:
        radius_ = std::sqrt(spec.cone_p / kPi);
        wedge_ = 2.0 * kPi / spec.cone_p;
        break;
      case Family::Disc:
        radius_ = 1.0 / std::sqrt(kPi);
        break;
      case Family::Sphere:
        radius_ = 1.0 / std::sqrt(4.0 * kPi);
        break;
      case Family::ProjectiveSphere:
        radius_ = 1.0 / std::sqrt(2.0 * kPi);
        break;
      case Family::SphericalLune:
        radius_ = std::sqrt(spec.lune_k / (4.0 * kPi));
        wedge_ = 2.0 * kPi / spec.lune_k;
        break;
    }
  }

  const ManifoldSpec& spec() const { return spec_; }
  Family family() const { return spec_.family; }

  double side_x() const { return a_; }
  double side_y() const { return b_; }
  double radius() const { return radius_; }
  double wedge_angle() const { return wedge_; }
  // lattice matrix columns (omega_1 | omega_2) for the torus
  std::array<double, 4> lattice() const { return omega_; }

  bool has_identifications() const {
    switch (spec_.family) {
      case Family::Rectangle:
      case Family::Disc:
      case Family::Sphere:
        return false;
      case Family::SphericalLune:
        return spec_.bc == LuneBc::Periodic;
      default:
        return true;
    }
  }

  bool contains(const SurfacePoint& s) const {
    constexpr double eps = 1e-12;
    switch (spec_.family) {
      case Family::Rectangle:
      case Family::Cylinder:
      case Family::Moebius:
      case Family::Klein:
      case Family::Boy:
        return s.c1 >= -eps && s.c1 <= a_ + eps && s.c2 >= -eps && s.c2 <= b_ + eps;
      case Family::Torus: {
        const double u = omega_inv_[0] * s.c1 + omega_inv_[1] * s.c2;
        const double v = omega_inv_[2] * s.c1 + omega_inv_[3] * s.c2;
        return u >= -eps && u <= 1.0 + eps && v >= -eps && v <= 1.0 + eps;
      }
      case Family::ConeSector:
        return s.c1 >= -eps && s.c1 <= radius_ + eps && s.c2 >= -eps && s.c2 <= wedge_ + eps;
      case Family::Disc:
        return s.c1 * s.c1 + s.c2 * s.c2 <= radius_ * radius_ * (1.0 + 1e-10);
      case Family::Sphere:
        return s.c1 >= -eps && s.c1 <= kPi + eps && s.c2 >= -eps && s.c2 <= 2.0 * kPi + eps;
      case Family::ProjectiveSphere:
        return s.c1 >= -eps && s.c1 <= 0.5 * kPi + eps && s.c2 >= -eps &&
               s.c2 <= 2.0 * kPi + eps;
      case Family::SphericalLune:
        return s.c1 >= -eps && s.c1 <= kPi + eps && s.c2 >= -eps && s.c2 <= wedge_ + eps;
    }
    return false;
  }

  // Map a point of the covering space (or an equivalent representative) to
  // its fundamental-domain representative. Identity for families without
  // identifications.
  SurfacePoint canonicalize(const SurfacePoint& s) const {
    using detail::posmod;
    switch (spec_.family) {
      case Family::Rectangle:
      case Family::Disc:
      case Family::Sphere:
        return s;
      case Family::Torus: {
        double u = omega_inv_[0] * s.c1 + omega_inv_[1] * s.c2;
        double v = omega_inv_[2] * s.c1 + omega_inv_[3] * s.c2;
        u -= std::floor(u);
        v -= std::floor(v);
        return {omega_[0] * u + omega_[1] * v, omega_[2] * u + omega_[3] * v};
      }
      case Family::Cylinder:
        return {posmod(s.c1, a_), s.c2};
      case Family::Moebius: {
        double x = posmod(s.c1, 2.0 * a_), y = s.c2;
        if (x >= a_) {
          x -= a_;
          y = b_ - y;
        }
        return {x, y};
      }
      case Family::Klein: {
        double x = posmod(s.c1, 2.0 * a_), y = posmod(s.c2, b_);
        if (x >= a_) {
          x -= a_;
          y = b_ - y;
        }
        return {x, y};
      }
      case Family::Boy: {
        double x = posmod(s.c1, 2.0 * a_), y = posmod(s.c2, 2.0 * b_);
        if (x >= a_) {
          x -= a_;
          y = posmod(b_ - y, 2.0 * b_);
        }
        if (y >= b_) {
          x = a_ - x;
          y -= b_;
        }
        return {x, y};
      }
      case Family::ConeSector:
        return {s.c1, posmod(s.c2, wedge_)};
      case Family::ProjectiveSphere: {
        double theta = s.c1, phi = s.c2;
        if (theta > 0.5 * kPi) {
          theta = kPi - theta;
          phi = posmod(phi + kPi, 2.0 * kPi);
        } else if (theta == 0.5 * kPi && phi >= kPi) {
          phi -= kPi;
        }
        return {theta, phi};
      }
      case Family::SphericalLune:
        if (spec_.bc == LuneBc::Neumann) return s;
        return {s.c1, posmod(s.c2, wedge_)};
    }
    return s;
  }

  double squared_distance_unchecked(const SurfacePoint& x, const SurfacePoint& y) const {
    using detail::wrap_half;
    switch (spec_.family) {
      case Family::Rectangle:
      case Family::Disc: {
        const double dx = x.c1 - y.c1, dy = x.c2 - y.c2;
        return dx * dx + dy * dy;
      }
      case Family::Torus: {
        const double zx = x.c1 - y.c1, zy = x.c2 - y.c2;
        // Babai rounding on the Lagrange-reduced basis, then a 3x3 window.
        const double n0 = std::round(red_inv_[0] * zx + red_inv_[1] * zy);
        const double n1 = std::round(red_inv_[2] * zx + red_inv_[3] * zy);
        double best = 1e300;
        for (int di = -1; di <= 1; ++di) {
          for (int dj = -1; dj <= 1; ++dj) {
            const double wx = zx - (red_[0] * (n0 + di) + red_[1] * (n1 + dj));
            const double wy = zy - (red_[2] * (n0 + di) + red_[3] * (n1 + dj));
            best = std::min(best, wx * wx + wy * wy);
          }
        }
        return best;
      }
      case Family::Cylinder: {
        const double dx = wrap_half(x.c1 - y.c1, a_), dy = x.c2 - y.c2;
        return dx * dx + dy * dy;
      }
      case Family::Moebius:
      case Family::Klein:
      case Family::Boy: {
        // min over cosets; axis periods decouple because linear parts are
        // diagonal, so per-axis wrapping is exact.
        double best = 1e300;
        for (const PlanarIsometry& c : cosets_) {
          const SurfacePoint im = c.apply(y);
          double dx = x.c1 - im.c1, dy = x.c2 - im.c2;
          if (period_x_ > 0.0) dx = wrap_half(dx, period_x_);
          if (period_y_ > 0.0) dy = wrap_half(dy, period_y_);
          best = std::min(best, dx * dx + dy * dy);
        }
        return best;
      }
      case Family::ConeSector: {
        const double delta = std::abs(wrap_half(x.c2 - y.c2, wedge_));
        const double du = x.c1 - y.c1;
        const double s = std::sin(0.5 * delta);
        return du * du + 4.0 * x.c1 * y.c1 * s * s;
      }
      case Family::Sphere: {
        const double ang = detail::angle_between(detail::unit_from_angles(x.c1, x.c2),
                                                 detail::unit_from_angles(y.c1, y.c2));
        const double d = radius_ * ang;
        return d * d;
      }
      case Family::ProjectiveSphere: {
        const double ang = detail::angle_between(detail::unit_from_angles(x.c1, x.c2),
                                                 detail::unit_from_angles(y.c1, y.c2));
        const double d = radius_ * std::min(ang, kPi - ang);
        return d * d;
      }
      case Family::SphericalLune: {
        const auto nx = detail::unit_from_angles(x.c1, x.c2);
        const auto ny = detail::unit_from_angles(y.c1, y.c2);
        if (spec_.bc == LuneBc::Neumann) {
          const double d = radius_ * detail::angle_between(nx, ny);
          return d * d;
        }
        double ang = detail::angle_between(nx, ny);
        for (int j = 1; j < spec_.lune_k; ++j)
          ang = std::min(ang, detail::angle_between(nx, detail::rotate_z(ny, j * wedge_)));
        const double d = radius_ * ang;
        return d * d;
      }
    }
    return 0.0;
  }

  double squared_distance(const SurfacePoint& x, const SurfacePoint& y) const {
    require_contains(x);
    require_contains(y);
    return squared_distance_unchecked(x, y);
  }

  double geodesic_distance(const SurfacePoint& x, const SurfacePoint& y) const {
    return std::sqrt(squared_distance(x, y));
  }

  double diameter_bound() const {
    switch (spec_.family) {
      case Family::Rectangle:
      case Family::Cylinder:
      case Family::Moebius:
      case Family::Klein:
      case Family::Boy:
        return std::hypot(a_, b_);
      case Family::Torus: {
        const double l1 = std::hypot(red_[0], red_[2]);
        const double l2 = std::hypot(red_[1], red_[3]);
        return 0.5 * (l1 + l2);
      }
      case Family::ConeSector:
      case Family::Disc:
        return 2.0 * radius_;
      case Family::Sphere:
      case Family::SphericalLune:
        return kPi * radius_;
      case Family::ProjectiveSphere:
        return 0.5 * kPi * radius_;
    }
    return 0.0;
  }

  // --- identification group (flat families) --------------------------------

  // Side-pairing generators of the identification group.
  std::vector<PlanarIsometry> generators() const {
    std::vector<PlanarIsometry> g;
    switch (spec_.family) {
      case Family::Torus:
        g.push_back({{1, 0, 0, 1}, {omega_[0], omega_[2]}});
        g.push_back({{1, 0, 0, 1}, {omega_[1], omega_[3]}});
        break;
      case Family::Cylinder:
        g.push_back({{1, 0, 0, 1}, {a_, 0}});
        break;
      case Family::Moebius:
        g.push_back({{1, 0, 0, -1}, {a_, b_}});
        break;
      case Family::Klein:
        g.push_back({{1, 0, 0, -1}, {a_, b_}});
        g.push_back({{1, 0, 0, 1}, {0, b_}});
        break;
      case Family::Boy:
        g.push_back({{1, 0, 0, -1}, {a_, b_}});
        g.push_back({{-1, 0, 0, 1}, {a_, b_}});
        break;
      default:
        break;
    }
    return g;
  }

  // Group elements as coset maps composed with translation-lattice vectors
  // within the given window (flat quotient families and the rectangle).
  std::vector<PlanarIsometry> group_images(int window) const {
    std::vector<PlanarIsometry> out;
    const PlanarIsometry id{};
    switch (spec_.family) {
      case Family::Rectangle:
        out.push_back(id);
        return out;
      case Family::Torus:
        for (int n = -window; n <= window; ++n)
          for (int m = -window; m <= window; ++m)
            out.push_back({{1, 0, 0, 1},
                           {omega_[0] * n + omega_[1] * m, omega_[2] * n + omega_[3] * m}});
        return out;
      case Family::Cylinder:
      case Family::Moebius:
      case Family::Klein:
      case Family::Boy: {
        const auto& cosets = cosets_.empty() ? std::vector<PlanarIsometry>{id} : cosets_;
        const int wy = period_y_ > 0.0 ? window : 0;
        const int wx = period_x_ > 0.0 ? window : 0;
        for (const auto& c : cosets)
          for (int n = -wx; n <= wx; ++n)
            for (int m = -wy; m <= wy; ++m) {
              PlanarIsometry t{{1, 0, 0, 1}, {period_x_ * n, period_y_ * m}};
              out.push_back(t.compose(c));
            }
        return out;
      }
      default:
        throw std::invalid_argument("group_images: flat families only");
    }
  }

  // Same group, generated by breadth-first composition of the generators and
  // their inverses with deduplication. Slow; used to validate the coset
  // decomposition above.
  std::vector<PlanarIsometry> group_images_bfs(int word_length) const {
    std::vector<PlanarIsometry> gens = generators();
    const std::size_t ngen = gens.size();
    for (std::size_t i = 0; i < ngen; ++i) gens.push_back(gens[i].inverse());
    std::vector<PlanarIsometry> all{PlanarIsometry{}};
    std::vector<std::string> seen{isometry_key(PlanarIsometry{})};
    std::size_t frontier_begin = 0;
    for (int len = 0; len < word_length; ++len) {
      const std::size_t frontier_end = all.size();
      for (std::size_t i = frontier_begin; i < frontier_end; ++i)
        for (const auto& g : gens) {
          const PlanarIsometry h = g.compose(all[i]);
          const std::string key = isometry_key(h);
          if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
            seen.push_back(key);
            all.push_back(h);
          }
        }
      frontier_begin = frontier_end;
    }
    return all;
  }

  // Brute-force image-minimization oracle for the flat families.
  double squared_distance_windowed(const SurfacePoint& x, const SurfacePoint& y,
                                   int window) const {
    double best = 1e300;
    for (const auto& g : group_images(window)) {
      const SurfacePoint im = g.apply(y);
      const double dx = x.c1 - im.c1, dy = x.c2 - im.c2;
      best = std::min(best, dx * dx + dy * dy);
    }
    return best;
  }

 private:
  void require_contains(const SurfacePoint& s) const {
    if (!contains(s))
      throw std::invalid_argument(std::string("point outside fundamental domain of ") +
                                  family_name(spec_.family));
  }

  static std::string isometry_key(const PlanarIsometry& g) {
    std::string k;
    for (double v : g.lin) k += std::to_string(static_cast<int>(std::lround(v))) + ",";
    for (double v : g.tr) k += std::to_string(std::llround(v * 1e9)) + ",";
    return k;
  }

  void init_flat_quotient() {
    switch (spec_.family) {
      case Family::Cylinder:
        period_x_ = a_;
        cosets_ = {PlanarIsometry{}};
        break;
      case Family::Moebius:
        period_x_ = 2.0 * a_;
        cosets_ = {PlanarIsometry{}, PlanarIsometry{{1, 0, 0, -1}, {a_, b_}}};
        break;
      case Family::Klein:
        period_x_ = 2.0 * a_;
        period_y_ = b_;
        cosets_ = {PlanarIsometry{}, PlanarIsometry{{1, 0, 0, -1}, {a_, b_}}};
        break;
      case Family::Boy:
        period_x_ = 2.0 * a_;
        period_y_ = 2.0 * b_;
        cosets_ = {PlanarIsometry{},
                   PlanarIsometry{{1, 0, 0, -1}, {a_, b_}},
                   PlanarIsometry{{-1, 0, 0, 1}, {a_, b_}},
                   PlanarIsometry{{-1, 0, 0, -1}, {0, 0}}};
        break;
      default:
        break;
    }
  }

  void init_torus() {
    const double rho = spec_.tau_im, sigma = spec_.tau_re;
    const double inv_sqrt_rho = 1.0 / std::sqrt(rho);
    // omega = (1/sqrt(rho)) [[1, sigma], [0, rho]], unit cell area 1
    omega_ = {inv_sqrt_rho, sigma * inv_sqrt_rho, 0.0, rho * inv_sqrt_rho};
    const double det = omega_[0] * omega_[3] - omega_[1] * omega_[2];
    omega_inv_ = {omega_[3] / det, -omega_[1] / det, -omega_[2] / det, omega_[0] / det};

    // Lagrange reduction of the lattice basis
    double b1x = omega_[0], b1y = omega_[2], b2x = omega_[1], b2y = omega_[3];
    for (int iter = 0; iter < 64; ++iter) {
      if (b2x * b2x + b2y * b2y < b1x * b1x + b1y * b1y) {
        std::swap(b1x, b2x);
        std::swap(b1y, b2y);
      }
      const double mu = std::round((b1x * b2x + b1y * b2y) / (b1x * b1x + b1y * b1y));
      if (mu == 0.0) break;
      b2x -= mu * b1x;
      b2y -= mu * b1y;
    }
    red_ = {b1x, b2x, b1y, b2y};
    const double rdet = red_[0] * red_[3] - red_[1] * red_[2];
    red_inv_ = {red_[3] / rdet, -red_[1] / rdet, -red_[2] / rdet, red_[0] / rdet};
  }

  ManifoldSpec spec_;
  double a_ = 0.0, b_ = 0.0;
  double radius_ = 0.0;
  double wedge_ = 0.0;
  std::array<double, 4> omega_{1, 0, 0, 1};
  std::array<double, 4> omega_inv_{1, 0, 0, 1};
  std::array<double, 4> red_{1, 0, 0, 1};
  std::array<double, 4> red_inv_{1, 0, 0, 1};
  std::vector<PlanarIsometry> cosets_;
  double period_x_ = 0.0, period_y_ = 0.0;
};

inline Manifold make_manifold(const ManifoldSpec& spec) { return Manifold(spec); }

}  // namespace erap
