#include "reeblens/esh_ranks.hpp"

namespace reeblens {

namespace {

void check_np(int n, long long p) {
    if (n < 1) throw error(errc::bad_params, "n must be at least 1");
    if (p < 2) throw error(errc::bad_modulus, "p must be at least 2");
}

} // namespace

Rational iterate_index(int n, long long p, long long k) {
    check_np(n, p);
    if (k < 1) throw error(errc::bad_params, "iterate count must be positive");
    return Rational((2 * n + 2) * k, p) - Rational(n);
}

GradedRanks graded_ranks(int n, long long p, long long j, long long k_max) {
    check_np(n, p);
    if (j < 1 || j > p) throw error(errc::out_of_range, "class index outside {1,...,p}");
    if (k_max < 1) throw error(errc::bad_params, "k_max must be positive");
    GradedRanks table;
    table.n = n;
    table.p = p;
    table.j = j;
    table.k_max = k_max;
    for (long long k = 1; k <= k_max; ++k) {
        Rational base = iterate_index(n, p, (k - 1) * p + j);
        for (int i = 0; i <= n; ++i) table.ranks[base + Rational(2 * i)] += 1;
    }
    return table;
}

Rational min_degree(const GradedRanks& table) {
    if (table.ranks.empty()) throw error(errc::empty_table, "rank table is empty");
    return table.ranks.begin()->first;
}

GradedRanks filtered_ranks(int n, long long p, const Rational& scale_t, const Rational& action_T) {
    check_np(n, p);
    if (!(scale_t > Rational(0))) throw error(errc::bad_params, "scale must be positive");
    GradedRanks table;
    table.n = n;
    table.p = p;
    table.j = 1;
    table.action_bound = action_T;
    table.scale = scale_t;
    const Rational t2 = scale_t * scale_t;
    for (long long k = 1;; ++k) {
        Rational action = Rational((k - 1) * p + 1, p) * t2; // coefficient of pi
        if (action == action_T)
            throw error(errc::on_spectrum,
                        "action bound hits the spectrum at iterate k = " + std::to_string(k));
        if (action > action_T) break;
        Rational base = iterate_index(n, p, (k - 1) * p + 1);
        for (int i = 0; i <= n; ++i) table.ranks[base + Rational(2 * i)] += 1;
    }
    return table;
}

CarrierDegrees carrier_degrees(int n, long long p) {
    check_np(n, p);
    CarrierDegrees out;
    const Rational h(2 * n + 2, p);
    const Rational base = h - Rational(n);
    for (int i = 0; i <= n; ++i) {
        Rational deg = base + Rational(2 * i);
        out.degrees.push_back(deg);
        if (deg < h) ++out.count_below_h;
    }
    return out;
}

} // namespace reeblens
