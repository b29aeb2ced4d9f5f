#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "erap/manifold.hpp"

namespace erap {

struct SpectrumLevel {
  double lambda;
  std::int64_t multiplicity;
};

// Nonzero Laplace-Beltrami eigenvalues up to a cutoff, ascending, with exact
// multiplicities (Neumann boundary conditions where a boundary exists).
struct SpectrumStream {
  std::vector<SpectrumLevel> levels;
  double lambda_max = 0.0;

  std::int64_t count_below(double lambda) const {
    std::int64_t n = 0;
    for (const auto& lv : levels) {
      if (lv.lambda > lambda) break;
      n += lv.multiplicity;
    }
    return n;
  }
};

inline double boundary_length(const ManifoldSpec& spec) {
  switch (spec.family) {
    case Family::Rectangle: {
      const double a = std::sqrt(spec.rho);
      return 2.0 * (a + 1.0 / a);
    }
    case Family::Cylinder:
      return 2.0 * std::sqrt(spec.rho);  // two boundary circles of length sqrt(rho)
    case Family::Moebius:
      return 2.0 * std::sqrt(spec.rho);  // one boundary circle of twice the width
    case Family::Disc:
      return 2.0 * std::sqrt(kPi);
    case Family::ConeSector:
      return 2.0 * std::sqrt(kPi * spec.cone_p);  // rim circle 2 pi r
    case Family::SphericalLune:
      return spec.bc == LuneBc::Neumann ? std::sqrt(kPi * spec.lune_k) : 0.0;
    default:
      return 0.0;
  }
}

// Weyl counting estimate for a unit-area surface.
inline double weyl_estimate(const ManifoldSpec& spec, double lambda) {
  return (lambda + boundary_length(spec) * std::sqrt(lambda)) / (4.0 * kPi);
}

namespace detail {

inline void push_level(std::vector<SpectrumLevel>& out, double lambda, std::int64_t mult) {
  if (mult > 0) out.push_back({lambda, mult});
}

inline void sort_and_merge(std::vector<SpectrumLevel>& levels) {
  std::sort(levels.begin(), levels.end(),
            [](const SpectrumLevel& a, const SpectrumLevel& b) { return a.lambda < b.lambda; });
  std::vector<SpectrumLevel> merged;
  merged.reserve(levels.size());
  for (const auto& lv : levels) {
    if (!merged.empty() &&
        std::abs(lv.lambda - merged.back().lambda) <= 1e-12 * merged.back().lambda) {
      merged.back().multiplicity += lv.multiplicity;
    } else {
      merged.push_back(lv);
    }
  }
  levels = std::move(merged);
}

// Zeros of d/dx J_m(x) on (0, xmax], located by sign scanning plus bisection.
// J_0' = -J_1; for m >= 1 the first zero lies above x = m.
inline std::vector<double> bessel_jprime_zeros(int m, double xmax) {
  const auto f = [m](double x) {
    if (m == 0) return -std::cyl_bessel_j(1.0, x);
    return 0.5 * (std::cyl_bessel_j(m - 1.0, x) - std::cyl_bessel_j(m + 1.0, x));
  };
  std::vector<double> zeros;
  const double start = std::max(1e-3, static_cast<double>(m) * (1.0 - 1e-12));
  if (start >= xmax) return zeros;
  const double step = 0.25;
  double a = start, fa = f(a);
  while (a < xmax) {
    double b = std::min(a + step, xmax);
    double fb = f(b);
    if (fa == 0.0) {
      zeros.push_back(a);
    } else if (fa * fb < 0.0) {
      double lo = a, hi = b;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fa * fm <= 0.0)
          hi = mid;
        else
          lo = mid;
        if (hi - lo < 1e-13 * hi) break;
      }
      zeros.push_back(0.5 * (lo + hi));
    }
    a = b;
    fa = fb;
    if (b >= xmax) break;
  }
  return zeros;
}

// Neumann spectrum of a disc sector of radius R with angular modes restricted
// to multiples of `order` (order = 1: full disc).
inline void sector_bessel_levels(std::vector<SpectrumLevel>& out, double R, int order,
                                 double lambda_max) {
  const double xmax = std::sqrt(lambda_max) * R;
  for (int m = 0; m <= static_cast<int>(xmax) + 1; m += order) {
    const std::vector<double> zeros = bessel_jprime_zeros(m, xmax);
    for (double x : zeros) {
      const double lambda = (x / R) * (x / R);
      if (lambda > lambda_max || lambda <= 1e-12) continue;
      push_level(out, lambda, m == 0 ? 1 : 2);
    }
  }
}

}  // namespace detail

inline SpectrumStream spectrum(const ManifoldSpec& spec, double lambda_max) {
  validate_spec(spec);
  if (!(lambda_max > 0.0)) throw std::invalid_argument("spectrum: requires lambda_max > 0");
  std::vector<SpectrumLevel> out;
  const double pi2 = kPi * kPi;
  switch (spec.family) {
    case Family::Rectangle: {
      // pi^2 (n^2/rho + rho m^2), (n, m) in N^2 \ {0}
      const double rho = spec.rho;
      const int nmax = static_cast<int>(std::sqrt(lambda_max * rho) / kPi) + 1;
      const int mmax = static_cast<int>(std::sqrt(lambda_max / rho) / kPi) + 1;
      for (int n = 0; n <= nmax; ++n)
        for (int m = 0; m <= mmax; ++m) {
          if (n == 0 && m == 0) continue;
          const double lam = pi2 * (n * n / rho + rho * m * m);
          if (lam <= lambda_max) detail::push_level(out, lam, 1);
        }
      break;
    }
    case Family::Torus: {
      // (2 pi)^2 |n + tau m|^2 / Im(tau), (n, m) in Z^2 \ {0}
      const double rho = spec.tau_im, sigma = spec.tau_re;
      const double scale = 4.0 * pi2 / rho;
      const int mmax = static_cast<int>(std::sqrt(lambda_max / scale) / rho) + 1;
      for (int m = -mmax; m <= mmax; ++m) {
        const double disc = lambda_max / scale - rho * rho * m * m;
        if (disc < 0.0) continue;
        const double half = std::sqrt(disc);
        const int nlo = static_cast<int>(std::ceil(-sigma * m - half - 1));
        const int nhi = static_cast<int>(std::floor(-sigma * m + half + 1));
        for (int n = nlo; n <= nhi; ++n) {
          if (n == 0 && m == 0) continue;
          const double re = n + sigma * m;
          const double lam = scale * (re * re + rho * rho * m * m);
          if (lam <= lambda_max) detail::push_level(out, lam, 1);
        }
      }
      break;
    }
    case Family::Cylinder: {
      // pi^2 (4 m^2/rho + rho n^2), m in Z, n in N
      const double rho = spec.rho;
      const int mmax = static_cast<int>(std::sqrt(lambda_max * rho) / (2.0 * kPi)) + 1;
      const int nmax = static_cast<int>(std::sqrt(lambda_max / rho) / kPi) + 1;
      for (int m = 0; m <= mmax; ++m)
        for (int n = 0; n <= nmax; ++n) {
          if (n == 0 && m == 0) continue;
          const double lam = pi2 * (4.0 * m * m / rho + rho * n * n);
          if (lam <= lambda_max) detail::push_level(out, lam, m == 0 ? 1 : 2);
        }
      break;
    }
    case Family::Moebius: {
      // pi^2 (m^2/rho + rho n^2), m in Z, n in N, m + n even
      const double rho = spec.rho;
      const int mmax = static_cast<int>(std::sqrt(lambda_max * rho) / kPi) + 1;
      const int nmax = static_cast<int>(std::sqrt(lambda_max / rho) / kPi) + 1;
      for (int m = 0; m <= mmax; ++m)
        for (int n = 0; n <= nmax; ++n) {
          if (n == 0 && m == 0) continue;
          if ((m + n) % 2 != 0) continue;
          const double lam = pi2 * (m * m / rho + rho * n * n);
          if (lam <= lambda_max) detail::push_level(out, lam, m == 0 ? 1 : 2);
        }
      break;
    }
    case Family::Klein: {
      // u modes: pi^2 (m^2/rho + 4 rho n^2), m in Z, n in N, m + n even;
      // v modes: pi^2 ((2m+1)^2/rho + 4 rho n^2), 2m+1 odd, n >= 1
      const double rho = spec.rho;
      const int mmax = static_cast<int>(std::sqrt(lambda_max * rho) / kPi) + 1;
      const int nmax = static_cast<int>(std::sqrt(lambda_max / rho) / (2.0 * kPi)) + 1;
      for (int m = 0; m <= mmax; ++m)
        for (int n = 0; n <= nmax; ++n) {
          if (n == 0 && m == 0) continue;
          if ((m + n) % 2 != 0) continue;
          const double lam = pi2 * (m * m / rho + 4.0 * rho * n * n);
          if (lam <= lambda_max) detail::push_level(out, lam, m == 0 ? 1 : 2);
        }
      for (int q = 1; q <= mmax; q += 2)
        for (int n = 1; n <= nmax; ++n) {
          const double lam = pi2 * (q * q / rho + 4.0 * rho * n * n);
          if (lam <= lambda_max) detail::push_level(out, lam, 2);
        }
      break;
    }
    case Family::Boy: {
      // cos/cos modes with m + n even (m, n >= 0, not both zero) and
      // sin/cos modes with m + n odd (m >= 1, n >= 0)
      const double rho = spec.rho;
      const int mmax = static_cast<int>(std::sqrt(lambda_max * rho) / kPi) + 1;
      const int nmax = static_cast<int>(std::sqrt(lambda_max / rho) / kPi) + 1;
      for (int m = 0; m <= mmax; ++m)
        for (int n = 0; n <= nmax; ++n) {
          if (n == 0 && m == 0) continue;
          const bool even = (m + n) % 2 == 0;
          if (!even && m == 0) continue;  // sin(0) vanishes
          const double lam = pi2 * (m * m / rho + rho * n * n);
          if (lam <= lambda_max) detail::push_level(out, lam, 1);
        }
      break;
    }
    case Family::Sphere: {
      const double inv_r2 = 4.0 * kPi;  // r^2 = 1/(4 pi)
      for (std::int64_t l = 1;; ++l) {
        const double lam = l * (l + 1.0) * inv_r2;
        if (lam > lambda_max) break;
        detail::push_level(out, lam, 2 * l + 1);
      }
      break;
    }
    case Family::ProjectiveSphere: {
      const double inv_r2 = 2.0 * kPi;  // r^2 = 1/(2 pi); even l only
      for (std::int64_t j = 1;; ++j) {
        const double lam = 2.0 * j * (2.0 * j + 1.0) * inv_r2;
        if (lam > lambda_max) break;
        detail::push_level(out, lam, 4 * j + 1);
      }
      break;
    }
    case Family::SphericalLune: {
      const int k = spec.lune_k;
      const double inv_r2 = 4.0 * kPi / k;  // r^2 = k/(4 pi)
      for (std::int64_t l = 1;; ++l) {
        const double lam = l * (l + 1.0) * inv_r2;
        if (lam > lambda_max) break;
        std::int64_t mult;
        if (spec.bc == LuneBc::Periodic) {
          mult = 2 * (l / k) + 1;  // m in [-l, l], m = 0 mod k
        } else if (k % 2 == 0) {
          mult = l / (k / 2) + 1;  // m in [0, l], 2m = 0 mod k
        } else {
          mult = l / k + 1;
        }
        detail::push_level(out, lam, mult);
      }
      break;
    }
    case Family::Disc:
      detail::sector_bessel_levels(out, 1.0 / std::sqrt(kPi), 1, lambda_max);
      break;
    case Family::ConeSector:
      detail::sector_bessel_levels(out, std::sqrt(spec.cone_p / kPi), spec.cone_p, lambda_max);
      break;
  }
  detail::sort_and_merge(out);
  SpectrumStream s;
  s.levels = std::move(out);
  s.lambda_max = lambda_max;
  return s;
}

}  // namespace erap
