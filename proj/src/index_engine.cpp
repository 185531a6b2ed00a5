#include "reeblens/index_engine.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace reeblens {

namespace {

void push_speed(std::vector<RotationBlock>& blocks, const Rational& s) {
    if (!blocks.empty() && blocks.back().speed == s)
        ++blocks.back().count;
    else
        blocks.push_back({s, 1});
}

long long weight_sum(const HomotopyClass& a) {
    return std::accumulate(a.weights.begin(), a.weights.end(), 0LL);
}

RotationPath twist_path(const LensSpace& lens, const HomotopyClass& a, const Rational& eps) {
    const long long p = lens.p();
    const long long N = lens.chern_order();
    const int n = lens.n();
    const Rational correction(N * weight_sum(a), p); // integer by the choice of N
    std::vector<RotationBlock> blocks;
    for (long long copy = 0; copy < N; ++copy) {
        for (int i = 0; i <= n; ++i) {
            Rational s = Rational(-a.weights[size_t(i)], p) + eps;
            if (copy == N - 1 && i == n) s += correction;
            push_speed(blocks, s);
        }
    }
    return RotationPath(std::move(blocks), Rational(1));
}

} // namespace

RotationPath twist_ga(const LensSpace& lens, const HomotopyClass& a) {
    if (a.is_trivial(lens.p()))
        throw error(errc::trivial_class, "twist path is undefined for the trivial class");
    return twist_path(lens, a, Rational(0));
}

Rational eps_upper_bound(const LensSpace& lens, const HomotopyClass& a) {
    if (a.is_trivial(lens.p()))
        throw error(errc::trivial_class, "eps bound is undefined for the trivial class");
    std::set<Rational> marks{Rational(0), Rational(1, 2)};
    for (long long w : a.weights) marks.insert(Rational(std::llabs(w), lens.p()));
    Rational gap(1, 2);
    auto it = marks.begin();
    for (auto next = std::next(it); next != marks.end(); ++it, ++next)
        gap = std::min(gap, *next - *it);
    return gap / Rational(4);
}

RotationPath twist_ga_eps(const LensSpace& lens, const HomotopyClass& a, const Rational& eps) {
    const Rational bound = eps_upper_bound(lens, a);
    if (!(eps > Rational(0)) || !(eps < bound))
        throw error(errc::eps_too_large,
                    "eps must lie in (0, " + bound.str() + "), got " + eps.str());
    return twist_path(lens, a, eps);
}

Rational orbit_index(const LensSpace& lens, const HomotopyClass& a,
                     const RotationPath& gamma_beta) {
    const long long N = lens.chern_order();
    const long long planes = N * (lens.n() + 1);
    if (gamma_beta.half_dim() != planes)
        throw error(errc::dimension_mismatch,
                    "expected " + std::to_string(planes) + " planes, got " +
                        std::to_string(gamma_beta.half_dim()));
    if (gamma_beta.duration() != Rational(1))
        throw error(errc::dimension_mismatch, "gamma_beta must have duration 1");
    RotationPath twist = a.is_trivial(lens.p())
                             ? RotationPath({{Rational(0), planes}}, Rational(1))
                             : twist_ga(lens, a);
    return Rational(cz_index(compose_diagonal(twist, gamma_beta)), N) + Rational(1);
}

Rational ellipsoid_min_index(const LensSpace& lens, const HomotopyClass& a, bool halve_eps) {
    if (a.is_trivial(lens.p()))
        throw error(errc::trivial_class, "ellipsoid oracle is undefined for the trivial class");
    const long long p = lens.p();
    const long long N = lens.chern_order();
    const int n = lens.n();
    const long long j = a.j;

    std::vector<Rational> coeff(size_t(n) + 1);
    coeff[0] = Rational(j, p);
    Rational scale = halve_eps ? Rational(1, 2) : Rational(1);
    long long pow4 = 1;
    for (int i = 1; i <= n; ++i) {
        pow4 *= 4;
        coeff[size_t(i)] = scale / Rational(p * (n + 2) * pow4);
    }

    Rational best;
    bool have = false;
    for (int plane = 0; plane <= n; ++plane) {
        // shortest orbit in the given class within this coordinate plane
        Rational turn = Rational(lens.weights()[size_t(plane)] * j, p).frac();
        Rational period = turn / coeff[size_t(plane)];
        std::vector<RotationBlock> blocks;
        for (long long copy = 0; copy < N; ++copy)
            for (int i = 0; i <= n; ++i) push_speed(blocks, coeff[size_t(i)] * period);
        Rational mu = orbit_index(lens, a, RotationPath(std::move(blocks), Rational(1)));
        if (!have || mu < best) {
            best = mu;
            have = true;
        }
    }
    return best;
}

RotationPath toric_lift_path(const LensSpace& lens, const HomotopyClass& a, long long m) {
    if (m < 1 || std::gcd(a.j, m) != 1)
        throw error(errc::not_coprime, "m must be a positive integer coprime with j_a");
    const long long p = lens.p();
    const long long N = lens.chern_order();
    const int n = lens.n();
    std::vector<RotationBlock> blocks;
    for (long long copy = 0; copy < N; ++copy) {
        for (int i = 0; i <= n; ++i) {
            Rational s(positive_residue(lens.weights()[size_t(i)], p) * a.j, p);
            if (i == n) s += Rational(m);
            push_speed(blocks, s);
        }
    }
    return RotationPath(std::move(blocks), Rational(1));
}

Rational toric_orbit_index(const LensSpace& lens, const HomotopyClass& a, long long m) {
    if (m < 1 || std::gcd(a.j, m) != 1)
        throw error(errc::not_coprime, "m must be a positive integer coprime with j_a");
    long long hat_sum = 0;
    for (long long w : lens.weights()) hat_sum += positive_residue(w, lens.p());
    return Rational(2) * (Rational(hat_sum * a.j, lens.p()) + Rational(m) - Rational(lens.n(), 2));
}

bool elliptic_certificate(const BottFunction& bott, long long half_dim) {
    return bott.max_excluding_one() - bott.value_at_one() >= half_dim;
}

} // namespace reeblens
