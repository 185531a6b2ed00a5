#include "reeblens/rotation_path.hpp"

namespace reeblens {

RotationPath::RotationPath(std::vector<RotationBlock> blocks, Rational duration)
    : blocks_(std::move(blocks)), duration_(std::move(duration)) {
    if (!(duration_ > Rational(0)))
        throw error(errc::bad_params, "path duration must be positive");
    if (blocks_.empty()) throw error(errc::bad_params, "path needs at least one block");
    for (const auto& b : blocks_)
        if (b.count < 1) throw error(errc::bad_params, "block multiplicity must be positive");
}

long long RotationPath::half_dim() const {
    long long d = 0;
    for (const auto& b : blocks_) d += b.count;
    return d;
}

std::vector<Rational> RotationPath::plane_speeds() const {
    std::vector<Rational> out;
    out.reserve(size_t(half_dim()));
    for (const auto& b : blocks_)
        for (long long i = 0; i < b.count; ++i) out.push_back(b.speed);
    return out;
}

std::vector<std::pair<Rational, long long>> RotationPath::total_rotations() const {
    std::vector<std::pair<Rational, long long>> out;
    out.reserve(blocks_.size());
    for (const auto& b : blocks_) out.emplace_back(b.speed * duration_, b.count);
    return out;
}

RotationPath RotationPath::iterate(long long k) const {
    if (k < 1) throw error(errc::bad_params, "iterate count must be positive");
    return RotationPath(blocks_, duration_ * Rational(k));
}

RotationPath RotationPath::shifted(const Rational& q) const {
    std::vector<RotationBlock> shifted = blocks_;
    for (auto& b : shifted) b.speed += q / duration_;
    return RotationPath(std::move(shifted), duration_);
}

namespace {

long long plane_cz(const Rational& total_rotation) {
    if (total_rotation.is_integer()) return 2 * total_rotation.num() - 1;
    return 2 * total_rotation.floor() + 1;
}

} // namespace

long long cz_index(const RotationPath& path) {
    long long mu = 0;
    for (const auto& [x, count] : path.total_rotations()) mu += count * plane_cz(x);
    return mu;
}

Rational mean_index(const RotationPath& path) {
    Rational m(0);
    for (const auto& [x, count] : path.total_rotations()) m += Rational(2 * count) * x;
    return m;
}

RotationPath compose_diagonal(const RotationPath& a, const RotationPath& b) {
    if (a.duration() != b.duration())
        throw error(errc::dimension_mismatch, "paths have different durations");
    if (a.half_dim() != b.half_dim())
        throw error(errc::dimension_mismatch, "paths act on different dimensions");
    const auto sa = a.plane_speeds();
    const auto sb = b.plane_speeds();
    std::vector<RotationBlock> blocks;
    blocks.reserve(sa.size());
    for (size_t i = 0; i < sa.size(); ++i) {
        Rational s = sa[i] + sb[i];
        if (!blocks.empty() && blocks.back().speed == s)
            ++blocks.back().count;
        else
            blocks.push_back({s, 1});
    }
    return RotationPath(std::move(blocks), a.duration());
}

} // namespace reeblens
