#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace erap {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kEulerGamma = std::numbers::egamma;

// R - K offset universal across manifolds (Morpurgo).
inline constexpr double morpurgo_offset() {
  return (std::numbers::ln2 - std::numbers::egamma) / (2.0 * std::numbers::pi);
}

// ---------------------------------------------------------------------------
// digamma
// ---------------------------------------------------------------------------

// psi(x) for x > 0 by upward recurrence into the asymptotic region, then the
// Bernoulli series. Absolute accuracy ~1e-14 over the positive axis.
inline double digamma(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("digamma: requires x > 0");
  double value = 0.0;
  while (x < 10.0) {
    value -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // ln x - 1/(2x) - sum B_{2n}/(2n x^{2n})
  double series = inv2 * (1.0 / 12 -
                  inv2 * (1.0 / 120 -
                  inv2 * (1.0 / 252 -
                  inv2 * (1.0 / 240 -
                  inv2 * (1.0 / 132 -
                  inv2 * (691.0 / 32760 -
                  inv2 * (1.0 / 12)))))));
  return value + std::log(x) - 0.5 * inv - series;
}

// ---------------------------------------------------------------------------
// Dedekind eta
// ---------------------------------------------------------------------------

namespace detail {

// Euler pentagonal series: prod (1-q^n) = sum_{k in Z} (-1)^k q^{k(3k-1)/2}.
// Converges in a handful of terms once |q| <= exp(-pi*sqrt(3)) ~ 0.0043.
template <class Complex>
Complex euler_product(Complex q) {
  Complex sum = Complex(1.0);
  for (int k = 1; k < 64; ++k) {
    const double e1 = 0.5 * k * (3.0 * k - 1.0);
    const double e2 = 0.5 * k * (3.0 * k + 1.0);
    const Complex term = std::pow(q, e1) + std::pow(q, e2);
    sum += (k % 2 == 0) ? term : -term;
    if (std::abs(term) < 1e-18) break;
  }
  return sum;
}

// Reduce tau by T: tau -> tau+1 and S: tau -> -1/tau until |Re| <= 1/2 and
// |tau| >= 1, tracking eta multipliers. Callback signature: shift(double k)
// and invert(std::complex<double> old_tau).
template <class Shift, class Invert>
std::complex<double> reduce_tau(std::complex<double> tau, Shift&& shift, Invert&& invert) {
  if (!(tau.imag() > 0.0))
    throw std::invalid_argument("dedekind_eta: requires Im(tau) > 0");
  for (int guard = 0; guard < 256; ++guard) {
    const double k = std::round(tau.real());
    if (k != 0.0) {
      tau -= k;
      shift(k);
    }
    if (std::norm(tau) >= 1.0 - 1e-15) break;
    invert(tau);
    tau = -1.0 / tau;
  }
  return tau;
}

}  // namespace detail

// eta(tau) for Im(tau) > 0, via modular reduction and the pentagonal series.
inline std::complex<double> dedekind_eta(std::complex<double> tau) {
  std::complex<double> factor(1.0, 0.0);
  tau = detail::reduce_tau(
      tau,
      [&](double k) {
        // eta(tau) = exp(i pi k / 12) eta(tau - k)
        factor *= std::polar(1.0, kPi * k / 12.0);
      },
      [&](std::complex<double> t) {
        // eta(t) = eta(-1/t) / sqrt(-i t); Re(-i t) > 0, principal branch
        factor /= std::sqrt(std::complex<double>(0.0, -1.0) * t);
      });
  const std::complex<double> q = std::exp(std::complex<double>(0.0, 2.0 * kPi) * tau);
  const std::complex<double> prefactor =
      std::exp(std::complex<double>(0.0, kPi / 12.0) * tau);
  return factor * prefactor * detail::euler_product(q);
}

// log|eta(tau)|, stable for extreme aspect ratios where eta itself under- or
// overflows (e.g. tau = 1e4 i).
inline double log_abs_dedekind_eta(std::complex<double> tau) {
  double acc = 0.0;
  tau = detail::reduce_tau(
      tau,
      [](double) {},  // |eta| is invariant under tau -> tau + 1
      [&](std::complex<double> t) { acc -= 0.5 * std::log(std::abs(t)); });
  const std::complex<double> q = std::exp(std::complex<double>(0.0, 2.0 * kPi) * tau);
  return acc - kPi * tau.imag() / 12.0 + std::log(std::abs(detail::euler_product(q)));
}

// ---------------------------------------------------------------------------
// Jacobi theta_1
// ---------------------------------------------------------------------------

// theta_1(z; tau) = 2 sum_{n>=0} (-1)^n q^{(n+1/2)^2} sin((2n+1) z),
// q = exp(i pi tau). Intended for Im(tau) bounded away from zero (the torus
// moduli used here are reduced or reducible to Im(tau) >= sqrt(3)/2).
inline std::complex<double> jacobi_theta1(std::complex<double> z, std::complex<double> tau) {
  if (!(tau.imag() > 0.0))
    throw std::invalid_argument("jacobi_theta1: requires Im(tau) > 0");
  const std::complex<double> ipi(0.0, kPi);
  std::complex<double> sum(0.0);
  for (int n = 0; n < 128; ++n) {
    const double half = n + 0.5;
    const std::complex<double> term =
        std::exp(ipi * tau * (half * half)) * std::sin((2.0 * n + 1.0) * z);
    sum += (n % 2 == 0) ? term : -term;
    const double bound =
        std::exp(-kPi * tau.imag() * half * half + (2.0 * n + 1.0) * std::abs(z.imag()));
    if (bound < 1e-18 && n >= 2) break;
  }
  return 2.0 * sum;
}

}  // namespace erap
