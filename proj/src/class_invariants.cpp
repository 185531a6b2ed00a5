#include "reeblens/class_invariants.hpp"

#include <algorithm>
#include <map>

namespace reeblens {

namespace {

void require_nontrivial(const LensSpace& lens, const HomotopyClass& a, const char* op) {
    if (a.is_trivial(lens.p()))
        throw error(errc::trivial_class, std::string(op) + " is undefined for the trivial class");
}

} // namespace

Rational k_a(const LensSpace& lens, const HomotopyClass& a) {
    if (a.is_trivial(lens.p())) return Rational(lens.n() + 2);
    long long wp = 0, wm = 0, sum = 0;
    for (long long w : a.weights) {
        if (w > 0) ++wp;
        if (w < 0) ++wm;
        sum += w;
    }
    return Rational(wm - wp) + Rational(2 * sum, lens.p()) + Rational(1);
}

WeightMultiplicities multiplicities(const LensSpace& lens, const HomotopyClass& a) {
    require_nontrivial(lens, a, "multiplicities");
    const long long p = lens.p();
    std::map<long long, std::pair<long long, long long>> counts; // |w| -> (#positive, #negative)
    for (long long w : a.weights) {
        auto& c = counts[std::llabs(w)];
        (w > 0 ? c.first : c.second)++;
    }
    WeightMultiplicities m;
    for (const auto& [absval, c] : counts) {
        bool half = (2 * absval == p);
        m.abs_values.push_back(absval);
        m.mu.push_back(half ? 0 : c.first);
        m.nu.push_back(half ? c.second + c.first : c.second);
        m.mu_tilde.push_back(c.first);
        m.nu_tilde.push_back(c.second);
    }
    return m;
}

Rational h_a(const LensSpace& lens, const HomotopyClass& a) {
    const Rational base = k_a(lens, a) - Rational(1);
    const WeightMultiplicities m = multiplicities(lens, a);
    // j = 0 term is the bare k_a - 1 (mu_0 = nu_0 = 0)
    Rational best = base;
    long long running = 0;
    for (size_t i = 0; i < m.size(); ++i) {
        running += m.mu[i] - m.nu[i];
        best = std::max(best, base + Rational(running));
    }
    return best;
}

Rational h_tilde_a(const LensSpace& lens, const HomotopyClass& a) {
    const Rational base = k_a(lens, a) - Rational(1);
    const WeightMultiplicities m = multiplicities(lens, a);
    // max over j = 1..k of base + sum_{i<=j} mu_tilde_i - sum_{i<=j-1} nu_tilde_i
    Rational best;
    long long mu_sum = 0, nu_sum = 0;
    for (size_t i = 0; i < m.size(); ++i) {
        mu_sum += m.mu_tilde[i];
        Rational value = base + Rational(mu_sum - nu_sum);
        best = (i == 0) ? value : std::max(best, value);
        nu_sum += m.nu_tilde[i];
    }
    return best;
}

std::pair<bool, bool> positivity(const LensSpace& lens, const HomotopyClass& a) {
    require_nontrivial(lens, a, "positivity");
    bool pos = true, strict = true;
    for (long long w : a.weights) {
        if (w <= 0) pos = false;
        if (w <= 0 || 2 * w == lens.p()) strict = false;
    }
    return {pos, strict};
}

std::vector<std::pair<HomotopyClass, bool>> find_positive_classes(const LensSpace& lens) {
    std::vector<std::pair<HomotopyClass, bool>> out;
    for (long long j = 1; j < lens.p(); ++j) {
        HomotopyClass cls = lens.homotopy_class(j);
        auto [pos, strict] = positivity(lens, cls);
        if (pos) out.emplace_back(std::move(cls), strict);
    }
    return out;
}

ClassInvariants class_invariants(const LensSpace& lens, const HomotopyClass& a) {
    ClassInvariants inv;
    inv.j = a.j;
    inv.homotopy_weights = a.weights;
    inv.k_a = k_a(lens, a);
    if (a.is_trivial(lens.p())) return inv;
    for (long long w : a.weights) {
        if (w > 0) ++inv.w_plus;
        if (w < 0) ++inv.w_minus;
    }
    inv.h_a = h_a(lens, a);
    inv.h_tilde_a = h_tilde_a(lens, a);
    auto [pos, strict] = positivity(lens, a);
    inv.positive = pos;
    inv.strictly_positive = strict;
    return inv;
}

} // namespace reeblens
