#pragma once

#include <vector>

#include "reeblens/rotation_path.hpp"

namespace reeblens {

/// One-sided jumps of a Bott function at the circle point of angle
/// `angle` turns, 0 < angle <= 1/2. s_plus is the jump moving
/// counterclockwise away from the point, s_minus clockwise (toward 1).
struct BottJump {
    Rational angle;
    long long s_plus = 0;
    long long s_minus = 0;
};

/// Integer-valued piecewise-constant function on the unit circle, stored on
/// the closed upper half-circle: value at 1, the splitting number at 1
/// (S^+_1 = S^-_1 by conjugation symmetry), and the jump list at angles in
/// (0, 1/2]. The lower half follows from B(z) = B(conj z).
class BottFunction {
public:
    BottFunction(long long value_at_one, long long s_at_one, std::vector<BottJump> jumps);

    /// Bott function of a rotation path, per plane: total rotation
    /// x = m + r with r in [-1/2, 1/2) picked so the endpoint eigenvalue
    /// angle is |r|; every whole loop shifts the function by 2, the residual
    /// contributes (S+,S-) = (0,1) at r for r > 0, (1,0) at |r| for r < 0,
    /// (1,1) at 1/2, and S_1 = 1 for the constant residual.
    static BottFunction from_path(const RotationPath& path);

    long long value_at_one() const { return value_at_one_; }
    long long s_at_one() const { return s_at_one_; }
    const std::vector<BottJump>& jumps() const { return jumps_; }

    /// Value at the circle point with angle t turns, any t in [0, 1);
    /// angles above 1/2 are folded by conjugation symmetry.
    long long at(Rational angle_turns) const;

    /// Sum of values over the k-th roots of unity (the right-hand side of
    /// Bott's iteration formula).
    long long sum_over_roots(long long k) const;

    /// Integral over the circle with total measure 1; equals the mean index
    /// of any path with this Bott function.
    Rational integral() const;

    /// Maximum over the circle minus the point 1.
    long long max_excluding_one() const;

    /// Constant arcs of the upper half-circle as (from, to, value), jump
    /// points excluded; covers (0, 1/2] plus point values via jumps().
    std::vector<std::tuple<Rational, Rational, long long>> arcs() const;

    friend BottFunction operator+(const BottFunction& a, const BottFunction& b);

    friend bool operator==(const BottFunction& a, const BottFunction& b);
    friend bool operator!=(const BottFunction& a, const BottFunction& b) { return !(a == b); }

private:
    long long value_at_one_;
    long long s_at_one_;
    std::vector<BottJump> jumps_; // strictly increasing angles in (0, 1/2]
};

} // namespace reeblens
