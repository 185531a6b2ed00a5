#pragma once

#include <vector>

#include "reeblens/errors.hpp"
#include "reeblens/rational.hpp"

namespace reeblens {

struct RotationBlock {
    Rational speed;     // turns per unit time
    long long count = 1; // number of planes rotating at this speed
};

/// The symplectic path t -> direct sum of e^{2 pi i w t} planes on
/// [0, duration]. Block order is preserved: the path owns an implicit
/// plane layout given by expanding the blocks in order, which is what
/// diagonal composition aligns on.
class RotationPath {
public:
    RotationPath(std::vector<RotationBlock> blocks, Rational duration);

    const std::vector<RotationBlock>& blocks() const { return blocks_; }
    const Rational& duration() const { return duration_; }

    /// Half the symplectic dimension (number of planes).
    long long half_dim() const;

    /// Per-plane speeds in block order.
    std::vector<Rational> plane_speeds() const;

    /// Total rotation per plane: speed * duration, collapsed back to blocks.
    std::vector<std::pair<Rational, long long>> total_rotations() const;

    /// The k-th iterate: same speeds on [0, k*duration].
    RotationPath iterate(long long k) const;

    /// Adds q turns-per-duration to every plane (composition with the
    /// diagonal loop of winding q when duration is 1).
    RotationPath shifted(const Rational& q) const;

private:
    std::vector<RotationBlock> blocks_;
    Rational duration_;
};

/// Conley-Zehnder index, lower semicontinuous convention: a plane with total
/// rotation x contributes 2*floor(x) + 1 when x is not an integer and 2x - 1
/// when it is.
long long cz_index(const RotationPath& path);

/// Mean index: sum over planes of twice the total rotation.
Rational mean_index(const RotationPath& path);

/// Pointwise product of two simultaneously diagonal paths with equal
/// duration and matching plane layout: per-plane speeds add.
/// Throws DimensionMismatch when the layouts cannot be aligned.
RotationPath compose_diagonal(const RotationPath& a, const RotationPath& b);

} // namespace reeblens
