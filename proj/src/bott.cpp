#include "reeblens/bott.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace reeblens {

namespace {

const Rational kHalf(1, 2);

std::vector<BottJump> canonicalize(std::vector<BottJump> jumps) {
    std::map<Rational, std::pair<long long, long long>> merged;
    for (const auto& j : jumps) {
        if (!(j.angle > Rational(0)) || j.angle > kHalf)
            throw error(errc::bad_params, "jump angle must lie in (0, 1/2]");
        if (j.s_plus < 0 || j.s_minus < 0)
            throw error(errc::bad_params, "splitting numbers must be nonnegative");
        auto& m = merged[j.angle];
        m.first += j.s_plus;
        m.second += j.s_minus;
    }
    std::vector<BottJump> out;
    for (const auto& [angle, s] : merged)
        if (s.first != 0 || s.second != 0) out.push_back({angle, s.first, s.second});
    return out;
}

} // namespace

BottFunction::BottFunction(long long value_at_one, long long s_at_one, std::vector<BottJump> jumps)
    : value_at_one_(value_at_one), s_at_one_(s_at_one), jumps_(canonicalize(std::move(jumps))) {
    if (s_at_one_ < 0) throw error(errc::bad_params, "splitting number at 1 must be nonnegative");
}

BottFunction BottFunction::from_path(const RotationPath& path) {
    long long value = 0, s_one = 0;
    std::vector<BottJump> jumps;
    for (const auto& [x, count] : path.total_rotations()) {
        if (x.is_integer()) {
            value += count * (2 * x.num() - 1);
            s_one += count;
            continue;
        }
        value += count * (2 * x.floor() + 1);
        Rational fr = x.frac();
        if (fr < kHalf)
            jumps.push_back({fr, 0, count});
        else if (fr == kHalf)
            jumps.push_back({fr, count, count});
        else
            jumps.push_back({Rational(1) - fr, count, 0});
    }
    return BottFunction(value, s_one, std::move(jumps));
}

long long BottFunction::at(Rational t) const {
    if (t < Rational(0) || t >= Rational(1))
        t = t - Rational(t.floor());
    if (t > kHalf) t = Rational(1) - t;
    if (t.is_zero()) return value_at_one_;
    long long v = value_at_one_ + s_at_one_;
    for (const auto& j : jumps_) {
        if (j.angle < t)
            v += j.s_plus - j.s_minus;
        else if (j.angle == t)
            return v - j.s_minus;
        else
            break;
    }
    return v;
}

long long BottFunction::sum_over_roots(long long k) const {
    if (k < 1) throw error(errc::bad_params, "iterate count must be positive");
    long long sum = 0;
    for (long long j = 0; j < k; ++j) sum += at(Rational(j, k));
    return sum;
}

std::vector<std::tuple<Rational, Rational, long long>> BottFunction::arcs() const {
    std::vector<std::tuple<Rational, Rational, long long>> out;
    long long v = value_at_one_ + s_at_one_;
    Rational lo(0);
    for (const auto& j : jumps_) {
        out.emplace_back(lo, j.angle, v);
        v += j.s_plus - j.s_minus;
        lo = j.angle;
    }
    if (lo < kHalf) out.emplace_back(lo, kHalf, v);
    return out;
}

Rational BottFunction::integral() const {
    Rational total(0);
    for (const auto& [lo, hi, v] : arcs()) total += (hi - lo) * Rational(v);
    return Rational(2) * total;
}

long long BottFunction::max_excluding_one() const {
    long long best = value_at_one_ + s_at_one_;
    long long v = best;
    for (const auto& j : jumps_) {
        best = std::max(best, v - j.s_minus); // value at the jump point itself
        v += j.s_plus - j.s_minus;
        if (j.angle < kHalf) best = std::max(best, v);
    }
    return best;
}

BottFunction operator+(const BottFunction& a, const BottFunction& b) {
    std::vector<BottJump> jumps = a.jumps_;
    jumps.insert(jumps.end(), b.jumps_.begin(), b.jumps_.end());
    return BottFunction(a.value_at_one_ + b.value_at_one_, a.s_at_one_ + b.s_at_one_,
                        std::move(jumps));
}

bool operator==(const BottFunction& a, const BottFunction& b) {
    if (a.value_at_one_ != b.value_at_one_ || a.s_at_one_ != b.s_at_one_) return false;
    if (a.jumps_.size() != b.jumps_.size()) return false;
    for (size_t i = 0; i < a.jumps_.size(); ++i) {
        if (a.jumps_[i].angle != b.jumps_[i].angle || a.jumps_[i].s_plus != b.jumps_[i].s_plus ||
            a.jumps_[i].s_minus != b.jumps_[i].s_minus)
            return false;
    }
    return true;
}

} // namespace reeblens
