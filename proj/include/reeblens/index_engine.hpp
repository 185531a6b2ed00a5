#pragma once

#include "reeblens/bott.hpp"
#include "reeblens/lens.hpp"
#include "reeblens/rotation_path.hpp"

namespace reeblens {

/// The correction path t -> phi^{G_a}_{-t} on [0,1], acting on C^{(n+1)N}:
/// N(n+1)-1 planes of speed -l^a_i/p in coordinate order plus a final plane
/// of speed -(l^a_n - N*sum(l^a))/p. Throws TrivialClass.
RotationPath twist_ga(const LensSpace& lens, const HomotopyClass& a);

/// Strict upper bound for admissible eps in twist_ga_eps: a quarter of the
/// smallest gap between consecutive values of {0, 1/2} and the distinct
/// normalized weight angles lbar_i/p.
Rational eps_upper_bound(const LensSpace& lens, const HomotopyClass& a);

/// Perturbed correction path t -> phi^{G_a^eps}_{-t}: every plane speed
/// gains +eps ahead of the final plane's -N*sum(l^a) correction. Throws
/// EpsTooLarge when eps violates eps_upper_bound, which in particular keeps
/// -1 and 1 out of the endpoint spectrum.
RotationPath twist_ga_eps(const LensSpace& lens, const HomotopyClass& a, const Rational& eps);

/// Index of a closed Reeb orbit from the N copies of its linearized flow:
/// cz(twist * gamma_beta)/N + 1. gamma_beta must have duration 1 and
/// (n+1)N planes laid out as N consecutive copies of the coordinates.
/// The trivial class is admitted with the zero twist.
Rational orbit_index(const LensSpace& lens, const HomotopyClass& a, const RotationPath& gamma_beta);

/// Independent oracle for k_a: the minimal orbit_index over the n+1
/// coordinate-plane orbit families of the ellipsoid with coefficients
/// c_0 = j_a/p and c_i = eps_i from the fixed schedule
/// eps_i = 1/(p*(n+2)*4^i), optionally halved to certify genericity.
Rational ellipsoid_min_index(const LensSpace& lens, const HomotopyClass& a,
                             bool halve_eps = false);

/// Closed-form index 2*((sum lhat_i) j_a/p + m - n/2) of the generic orbit
/// of the toric Reeb vector attached to (a, m); lhat_i = l_i mod p in
/// [1, p-1]. Requires gcd(j_a, m) = 1.
Rational toric_orbit_index(const LensSpace& lens, const HomotopyClass& a, long long m);

/// The lift of that generic orbit as a rotation path (one copy of the
/// coordinates, duration 1): speeds lhat_i j_a/p for i < n and
/// lhat_n j_a/p + m for the last plane, repeated N times. Feeding it to
/// orbit_index must reproduce toric_orbit_index.
RotationPath toric_lift_path(const LensSpace& lens, const HomotopyClass& a, long long m);

/// True when max over the circle of B - B(1) is at least half_dim; the
/// endpoint of any path with such a Bott function is elliptic.
bool elliptic_certificate(const BottFunction& bott, long long half_dim);

} // namespace reeblens
