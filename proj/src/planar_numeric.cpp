#include "reeblens/planar_numeric.hpp"

#include <cmath>

namespace reeblens {

namespace {

constexpr double kDetTol = 1e-9;
constexpr double kEigenOneTol = 1e-6;
constexpr double kTwoPi = 6.283185307179586476925286766559;

double det(const Mat2& m) { return m[0] * m[3] - m[1] * m[2]; }

// Winding in turns of one direction along the sampled path.
double winding_of(const PlanarPathSample& path, double vx, double vy) {
    double total = 0.0;
    double px = vx, py = vy;
    for (size_t i = 1; i < path.samples.size(); ++i) {
        const Mat2& m = path.samples[i];
        double x = m[0] * vx + m[1] * vy;
        double y = m[2] * vx + m[3] * vy;
        double cross = px * y - py * x;
        double dot = px * x + py * y;
        double step = std::atan2(cross, dot) / kTwoPi;
        if (std::abs(step) >= 0.25)
            throw error(errc::unresolved_winding,
                        "samples too coarse: a direction turned by a quarter turn in one step");
        total += step;
        px = x;
        py = y;
    }
    return total;
}

void validate(const PlanarPathSample& path) {
    if (path.samples.size() < 2)
        throw error(errc::bad_params, "need at least two samples");
    const Mat2& first = path.samples.front();
    if (std::abs(first[0] - 1) > kDetTol || std::abs(first[3] - 1) > kDetTol ||
        std::abs(first[1]) > kDetTol || std::abs(first[2]) > kDetTol)
        throw error(errc::bad_params, "path must start at the identity");
    for (const Mat2& m : path.samples)
        if (std::abs(det(m) - 1.0) > kDetTol)
            throw error(errc::not_symplectic, "determinant drifted away from 1");
}

} // namespace

std::pair<double, double> winding_interval(const PlanarPathSample& path, int directions) {
    validate(path);
    double lo = 0, hi = 0;
    for (int k = 0; k < directions; ++k) {
        double theta = kTwoPi * k / directions / 2.0; // half circle: v and -v wind alike
        double w = winding_of(path, std::cos(theta), std::sin(theta));
        if (k == 0) {
            lo = hi = w;
        } else {
            lo = std::min(lo, w);
            hi = std::max(hi, w);
        }
    }
    return {lo, hi};
}

PlanarIndex planar_index_numeric(const PlanarPathSample& path) {
    auto [lo, hi] = winding_interval(path);
    const Mat2& end = path.samples.back();
    // eigenvalue 1 <=> det(P - I) = 0, which for det P = 1 reads 2 - tr P
    double tr = end[0] + end[3];
    PlanarIndex out;
    out.degenerate = std::abs(2.0 - tr) <= kEigenOneTol;

    // integer inside [lo, hi] (with a hair of slack for roundoff)
    double candidate = std::floor(hi + 1e-12);
    if (candidate >= lo - 1e-12) {
        out.mu_tilde = 2 * (long long)std::llround(candidate);
    } else {
        out.mu_tilde = 2 * (long long)std::llround(std::ceil(hi)) - 1;
    }
    return out;
}

PlanarBott PlanarBott::reconstruct(const PlanarPathSample& path, int directions) {
    auto [lo, hi] = winding_interval(path, directions);
    const Mat2& end = path.samples.back();
    const double tr = end[0] + end[3];
    PlanarBott out;

    if (std::abs(std::abs(tr) - 2.0) <= kEigenOneTol)
        throw error(errc::bad_params, "endpoint too close to parabolic");

    if (std::abs(tr) < 2.0) {
        // elliptic: eigenvalue angle from the trace, rotation sense from the
        // sign of P21 - P12 (constant on each Sp(2)-conjugacy class), and the
        // winding unit interval (k-1, k) containing I pins the representative
        if (std::abs(hi - std::round(hi)) < 1e-9 || std::abs(lo - std::round(lo)) < 1e-9)
            throw error(errc::bad_params, "winding interval touches an integer");
        double sigma = std::acos(tr / 2.0) / kTwoPi;
        double signed_sigma = (end[2] - end[1]) > 0 ? sigma : -sigma;
        long long k = (long long)std::ceil(hi);
        long long m = signed_sigma > 0 ? k - 1 : k;
        out.elliptic_ = true;
        out.x_ = double(m) + signed_sigma;
        return out;
    }

    // hyperbolic: the winding of an eigendirection is pinned mod 1, integer
    // for a positive eigenvalue, half-integer for a negative one
    double lambda = (tr + (tr > 0 ? 1 : -1) * std::sqrt(tr * tr - 4.0)) / 2.0;
    double vx = end[1], vy = lambda - end[0];
    if (std::abs(vx) + std::abs(vy) < 1e-12) {
        vx = lambda - end[3];
        vy = end[2];
    }
    double norm = std::hypot(vx, vy);
    double w = winding_of(path, vx / norm, vy / norm);
    if (tr > 0) {
        out.level_ = 2 * (long long)std::llround(w);
    } else {
        out.level_ = 2 * (long long)std::llround(w - 0.5) + 1;
    }
    return out;
}

long long PlanarBott::at(double turns, double angle_tol) const {
    if (!elliptic_) return level_;
    double s = turns - std::floor(turns);
    if (s > 0.5) s = 1.0 - s;
    double frac = x_ - std::floor(x_);
    double sigma = std::min(frac, 1.0 - frac);
    if (std::abs(s - sigma) < angle_tol)
        throw error(errc::bad_params, "sample angle too close to an endpoint eigenvalue");
    return (long long)std::floor(x_ - s) + (long long)std::floor(x_ + s) + 1;
}

long long planar_bott_numeric(const PlanarPathSample& path, double turns, double angle_tol) {
    return PlanarBott::reconstruct(path).at(turns, angle_tol);
}

PlanarPathSample sample_rotation(double speed_turns, int steps) {
    PlanarPathSample path;
    path.samples.reserve(size_t(steps) + 1);
    for (int i = 0; i <= steps; ++i) {
        double ang = kTwoPi * speed_turns * i / steps;
        double c = std::cos(ang), sn = std::sin(ang);
        path.samples.push_back({c, -sn, sn, c});
    }
    return path;
}

} // namespace reeblens
