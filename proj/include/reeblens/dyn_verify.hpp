#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reeblens/class_invariants.hpp"
#include "reeblens/lens.hpp"

namespace reeblens {

enum class SpectrumKind {
    rotation,       // unit eigenvalue pair e^{+-2 pi i angle}, angle in (0, 1/2)
    hyperbolic,     // real pair {m, 1/m} or {-m, -1/m}, modulus m != 1
    unit_minus_one, // eigenvalue -1
    unit_plus_one,  // eigenvalue +1
};

/// One descriptor of the linearized Poincare map's spectrum; count is the
/// number of eigenvalues it accounts for (rotation and hyperbolic
/// descriptors come in conjugate/reciprocal pairs, so even counts).
struct SpectrumEntry {
    SpectrumKind kind;
    Rational param; // rotation angle in turns, or hyperbolic modulus
    long long count = 2;
};

/// One closed Reeb orbit as its producer certifies it: homotopy class,
/// action, index, nullity and return-map spectrum. Local homology is
/// supported in [index, index + nullity]; only the bookkeeping lives here.
struct OrbitRecord {
    LensSpace lens;
    long long j;
    Rational action;
    Rational index;
    long long nullity = 0;
    std::vector<SpectrumEntry> spectrum;
};

enum class OrbitClass { elliptic, hyperbolic, neither };

const char* orbit_class_name(OrbitClass c);

/// elliptic when every eigenvalue has modulus one, hyperbolic when none
/// does. Throws BadSpectrum if the descriptor counts do not sum to 2n or
/// the nullity disagrees with the +1 descriptors.
OrbitClass classify(const OrbitRecord& orbit);

/// Outcome of testing one orbit against the index/ellipticity constraints
/// that convexity (strict = false) or strict convexity (strict = true)
/// forces. An empty violation list is consistent with convexity; any entry
/// certifies that no (strictly) convex form can produce this orbit.
struct TheoremReport {
    bool strict = false;
    Rational k_a;
    Rational h_a;
    Rational h_tilde_a;
    std::vector<std::string> violations;

    bool consistent() const { return violations.empty(); }
};

TheoremReport check_main_theorem(const OrbitRecord& orbit, bool strict);

/// Least even integer Delta with (2n+4)/p <= Delta - (2n+2)/p < 2n+2 - (2n+2)/p,
/// i.e. in [(4n+6)/p, 2n+2); nullopt when the window holds none.
std::optional<long long> delta_search(int n, long long p);

/// 2x + 1 for integer x, 2*ceil(x) - 1 otherwise.
long long delta_fn(const Rational& x);

struct DcInequality {
    bool holds = false;            // the displayed inequality, evaluated exactly
    bool sufficient_route = false; // (2n-1)eps < 2/p and Delta - (2n+3)/q - (2n-1)eps >= (2n+2)/p
};

/// The contractible-orbit index inequality with period T_G and winding q:
/// q^{-1} (n+2 + delta((2n+4-Delta+eps)/2 * T_G) + (n-1) delta(eps*T_G) + 1)
///   <= 2n+4 - (2n+2)/p.
/// Requires q >= p and ceil(T_G) <= q.
DcInequality dc_inequality_check(int n, long long p, long long delta, const Rational& eps,
                                 long long q, const Rational& t_g);

/// Index (2n+2) j_a / p - 2 of the plugged-in hyperbolic orbit on
/// L^{2n+1}_p(1,...,1) with m = n - 1.
Rational hyperbolic_index_eq(int n, long long p, long long j_a);

/// Pinching parameters (r, R), r <= R. Here p = 1 (the sphere) is allowed.
struct PinchingData {
    Rational r;
    Rational R;
    long long p = 1;
    int n = 1;
};

/// R^2 < (p+1) r^2, the exact form of R/r < sqrt(p+1).
bool pinching_ok(const PinchingData& d);

/// Croke-Weinstein lower bound for the period of a simple class-a orbit, as
/// a coefficient of pi: 2 r^2 / p (from the contractible p-th iterate).
Rational cw_min_period(const PinchingData& d);

/// Positivity of the twisted-iterate generator: (2/p) / ((kp+1) T) < 1/R^2
/// with T a coefficient of pi, T >= 2 r^2 / p. Monotone in k; under
/// pinching_ok it holds for every k >= 1.
bool simplicity_certificate(const PinchingData& d, long long k, const Rational& t_coeff);

enum class ConvexKind { h_pinched, pinched_strictly_convex };

/// Guaranteed orbit counts under the pinching hypotheses:
/// floor((n+1)/2) non-hyperbolic orbits for H-pinched forms, n+1 orbits for
/// pinched strictly convex ones. Throws PinchingFails when R^2 >= (p+1)r^2.
long long multiplicity_guarantee(const PinchingData& d, ConvexKind kind);

} // namespace reeblens
