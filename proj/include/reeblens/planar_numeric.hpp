#pragma once

#include <array>
#include <vector>

#include "reeblens/errors.hpp"

namespace reeblens {

/// Row-major 2x2 real matrix.
using Mat2 = std::array<double, 4>;

/// A planar symplectic path sampled at uniform times, starting at the
/// identity, |det - 1| <= 1e-9 per sample.
struct PlanarPathSample {
    std::vector<Mat2> samples;
};

struct PlanarIndex {
    long long mu_tilde = 0;
    bool degenerate = false;
};

/// Winding numbers (in turns) of a spread of directions under the path;
/// returns {min, max}. Throws UnresolvedWinding if consecutive samples turn
/// some direction by a quarter turn or more, NotSymplectic on determinant
/// drift.
std::pair<double, double> winding_interval(const PlanarPathSample& path, int directions = 256);

/// Robust index from the winding interval I: 2k when an integer k lies in
/// I, otherwise 2k-1 for the integer k just above I. Equals the
/// Conley-Zehnder index when the endpoint is nondegenerate and exceeds it
/// by at most one otherwise. degenerate flags an endpoint eigenvalue 1
/// (within 1e-6).
PlanarIndex planar_index_numeric(const PlanarPathSample& path);

/// Homotopy normal form of a nondegenerate planar path, recovered from the
/// winding data and the endpoint conjugacy class. Enough to evaluate the
/// Bott function anywhere off the endpoint eigenvalues.
class PlanarBott {
public:
    /// Throws BadParams when the endpoint is too close to parabolic for the
    /// classification to be trusted; callers resample.
    static PlanarBott reconstruct(const PlanarPathSample& path, int directions = 128);

    bool elliptic() const { return elliptic_; }
    /// Signed total rotation of the elliptic representative.
    double rotation() const { return x_; }

    /// Bott function value at the circle point of angle `turns`. Throws
    /// BadParams within angle_tol of an endpoint eigenvalue angle.
    long long at(double turns, double angle_tol = 1e-7) const;

private:
    bool elliptic_ = false;
    double x_ = 0;        // elliptic representative
    long long level_ = 0; // hyperbolic paths have constant Bott function
};

/// Convenience wrapper: reconstruct + evaluate once.
long long planar_bott_numeric(const PlanarPathSample& path, double turns,
                              double angle_tol = 1e-7);

/// Uniform sampling of t -> exp(2 pi i w t) on [0, 1].
PlanarPathSample sample_rotation(double speed_turns, int steps);

} // namespace reeblens
