#include "reeblens/dyn_verify.hpp"

namespace reeblens {

const char* orbit_class_name(OrbitClass c) {
    switch (c) {
        case OrbitClass::elliptic: return "elliptic";
        case OrbitClass::hyperbolic: return "hyperbolic";
        case OrbitClass::neither: return "neither";
    }
    return "?";
}

OrbitClass classify(const OrbitRecord& orbit) {
    long long total = 0, plus_one = 0;
    bool all_unit = true, none_unit = true;
    for (const auto& e : orbit.spectrum) {
        if (e.count < 1) throw error(errc::bad_spectrum, "descriptor count must be positive");
        total += e.count;
        switch (e.kind) {
            case SpectrumKind::rotation:
                if (!(e.param > Rational(0)) || !(e.param < Rational(1, 2)))
                    throw error(errc::bad_spectrum, "rotation angle must lie in (0, 1/2)");
                none_unit = false;
                break;
            case SpectrumKind::hyperbolic:
                if (e.param == Rational(1) || e.param == Rational(-1) || e.param.is_zero())
                    throw error(errc::bad_spectrum, "hyperbolic modulus must differ from 0, 1");
                all_unit = false;
                break;
            case SpectrumKind::unit_minus_one:
                none_unit = false;
                break;
            case SpectrumKind::unit_plus_one:
                none_unit = false;
                plus_one += e.count;
                break;
        }
    }
    if (total != 2 * orbit.lens.n())
        throw error(errc::bad_spectrum, "descriptor multiplicities must sum to 2n = " +
                                            std::to_string(2 * orbit.lens.n()));
    if (plus_one != orbit.nullity)
        throw error(errc::bad_spectrum, "nullity must match the +1 eigenvalue count");
    if (all_unit) return OrbitClass::elliptic;
    if (none_unit) return OrbitClass::hyperbolic;
    return OrbitClass::neither;
}

TheoremReport check_main_theorem(const OrbitRecord& orbit, bool strict) {
    if (orbit.j == orbit.lens.p())
        throw error(errc::trivial_class, "the theorem constrains nontrivial classes only");
    HomotopyClass cls = orbit.lens.homotopy_class(orbit.j);
    TheoremReport report;
    report.strict = strict;
    report.k_a = k_a(orbit.lens, cls);
    report.h_a = h_a(orbit.lens, cls);
    report.h_tilde_a = h_tilde_a(orbit.lens, cls);
    const OrbitClass type = classify(orbit);
    auto [positive, strictly_positive] = positivity(orbit.lens, cls);

    if (orbit.index < report.k_a) report.violations.push_back("index_below_k_a");

    const Rational& threshold = strict ? report.h_tilde_a : report.h_a;
    if (orbit.index < threshold && type == OrbitClass::hyperbolic)
        report.violations.push_back("hyperbolic_below_h_a");

    const bool class_cond = strict ? positive : strictly_positive;
    if (class_cond && orbit.index == report.k_a && type != OrbitClass::elliptic)
        report.violations.push_back("not_elliptic_at_k_a");

    return report;
}

std::optional<long long> delta_search(int n, long long p) {
    if (n < 1) throw error(errc::bad_params, "n must be at least 1");
    if (p < 2) throw error(errc::bad_modulus, "p must be at least 2");
    const Rational lo(4 * n + 6, p);
    const long long hi = 2 * n + 2; // exclusive
    long long delta = lo.ceil();
    if (delta % 2 != 0) ++delta;
    if (delta >= hi) return std::nullopt;
    return delta;
}

long long delta_fn(const Rational& x) {
    if (x.is_integer()) return 2 * x.num() + 1;
    return 2 * x.ceil() - 1;
}

DcInequality dc_inequality_check(int n, long long p, long long delta, const Rational& eps,
                                 long long q, const Rational& t_g) {
    if (n < 1 || p < 2 || !(eps > Rational(0)) || !(t_g > Rational(0)))
        throw error(errc::bad_params, "need n >= 1, p >= 2, eps > 0, T_G > 0");
    if (q < p)
        throw error(errc::bad_params, "the winding q of a contractible orbit is at least p");
    if (t_g.ceil() > q)
        throw error(errc::bad_params, "the action bound requires ceil(T_G) <= q");

    DcInequality out;
    const Rational first_speed = Rational(2 * n + 4 - delta) + eps;
    Rational lhs = (Rational(n + 2) + Rational(delta_fn(first_speed / Rational(2) * t_g)) +
                    Rational(n - 1) * Rational(delta_fn(eps * t_g)) + Rational(1)) /
                   Rational(q);
    out.holds = lhs <= Rational(2 * n + 4) - Rational(2 * n + 2, p);
    out.sufficient_route = Rational(2 * n - 1) * eps < Rational(2, p) &&
                           Rational(delta) - Rational(2 * n + 3, q) -
                                   Rational(2 * n - 1) * eps >=
                               Rational(2 * n + 2, p);
    return out;
}

Rational hyperbolic_index_eq(int n, long long p, long long j_a) {
    return Rational((2 * n + 2) * j_a, p) - Rational(2);
}

bool pinching_ok(const PinchingData& d) {
    if (!(Rational(0) < d.r) || d.r > d.R || d.p < 1 || d.n < 1)
        throw error(errc::bad_params, "need 0 < r <= R, p >= 1, n >= 1");
    return d.R * d.R < Rational(d.p + 1) * d.r * d.r;
}

Rational cw_min_period(const PinchingData& d) {
    if (!(Rational(0) < d.r) || d.r > d.R || d.p < 1)
        throw error(errc::bad_params, "need 0 < r <= R, p >= 1");
    return Rational(2) * d.r * d.r / Rational(d.p);
}

bool simplicity_certificate(const PinchingData& d, long long k, const Rational& t_coeff) {
    if (k < 1) throw error(errc::bad_params, "iterate parameter k must be positive");
    if (t_coeff < cw_min_period(d))
        throw error(errc::bad_params, "period below the Croke-Weinstein bound");
    // largest Hessian eigenvalue is 2 pi / p, so positivity of the twisted
    // generator reduces to (2/p) / ((kp+1) T) < 1/R^2
    return Rational(2, d.p) / (Rational(k * d.p + 1) * t_coeff) <
           Rational(1) / (d.R * d.R);
}

long long multiplicity_guarantee(const PinchingData& d, ConvexKind kind) {
    if (!pinching_ok(d))
        throw error(errc::pinching_fails, "requires R^2 < (p+1) r^2");
    return kind == ConvexKind::h_pinched ? (d.n + 1) / 2 : d.n + 1;
}

} // namespace reeblens
