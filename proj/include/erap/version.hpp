#pragma once

namespace erap {

inline constexpr const char* kVersion = "0.1.0";

// Conventions recorded in every output metadata block. Several constructions
// in the literature admit variants; these strings pin the ones used here.
inline constexpr const char* kFibonacciConvention =
    "phi_j = 2*pi*frac(j*(golden_ratio-1)); sphere z_j = r*(1-(2j+1)/N); "
    "disc u_j = R*sqrt((j+1/2)/N); projective sphere built from 2N-point "
    "sphere spiral restricted to z > 0";
inline constexpr const char* kLuneDistanceConvention =
    "neumann lune uses ambient great-circle distance (the lune is "
    "geodesically convex for dihedral angle <= pi)";
inline constexpr const char* kFitBasis = "{1, N^(-1/2), 1/N} weighted least squares";

}  // namespace erap
