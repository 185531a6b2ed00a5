#include "reeblens/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "reeblens/class_invariants.hpp"
#include "reeblens/dyn_verify.hpp"
#include "reeblens/esh_ranks.hpp"
#include "reeblens/index_engine.hpp"
#include "reeblens/planar_numeric.hpp"
#include "reeblens/sweep.hpp"

namespace reeblens::verify {

namespace {

class Suite {
public:
    explicit Suite(std::vector<Check>& out) : out_(out) {}

    void check(const std::string& name, bool pass, const std::string& detail = "") {
        out_.push_back({name, pass, detail});
    }

    // first failure wins the detail slot
    class Scope {
    public:
        Scope(Suite& s, std::string name) : suite_(s), name_(std::move(name)) {}
        ~Scope() { suite_.check(name_, pass_, detail_); }

        void require(bool ok, const std::string& detail) {
            if (!ok && pass_) {
                pass_ = false;
                detail_ = detail;
            }
        }
        bool passing() const { return pass_; }

    private:
        Suite& suite_;
        std::string name_;
        bool pass_ = true;
        std::string detail_;
    };

    Scope scope(std::string name) { return Scope(*this, std::move(name)); }

private:
    std::vector<Check>& out_;
};

std::vector<long long> ones(int n) { return std::vector<long long>(size_t(n) + 1, 1); }

std::vector<long long> alternating(int n) {
    std::vector<long long> w;
    for (int i = 0; i <= n; ++i) w.push_back(i % 2 == 0 ? 1 : -1);
    return w;
}

std::string tag(long long p, const std::vector<long long>& w, long long j) {
    std::ostringstream os;
    os << "p=" << p << " w=(";
    for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ") j=" << j;
    return os.str();
}

OrbitRecord elliptic_orbit(LensSpace lens, long long j, Rational index,
                           const std::vector<Rational>& angles) {
    OrbitRecord orbit{std::move(lens), j, Rational(1), std::move(index), 0, {}};
    for (const auto& a : angles) {
        if (a.is_zero()) {
            orbit.spectrum.push_back({SpectrumKind::unit_plus_one, Rational(1), 2});
            orbit.nullity += 2;
        } else if (a == Rational(1, 2)) {
            orbit.spectrum.push_back({SpectrumKind::unit_minus_one, Rational(-1), 2});
        } else {
            orbit.spectrum.push_back({SpectrumKind::rotation, a, 2});
        }
    }
    return orbit;
}

OrbitRecord hyperbolic_orbit(LensSpace lens, long long j, Rational index) {
    const int n = lens.n();
    OrbitRecord orbit{std::move(lens), j, Rational(1), std::move(index), 0, {}};
    for (int i = 0; i < n; ++i)
        orbit.spectrum.push_back({SpectrumKind::hyperbolic, Rational(2), 2});
    return orbit;
}

bool has_violations(const TheoremReport& r, std::vector<std::string> expected) {
    std::vector<std::string> got = r.violations;
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    return got == expected;
}

// ---------------------------------------------------------------- examples

void examples_suite(Suite& s) {
    {
        auto sc = s.scope("normalize_weights worked cases");
        sc.require(LensSpace(4, {1, -1}).weights() == std::vector<long long>({1, -1}),
                   "(4,[1,-1]) should stay (1,-1)");
        sc.require(LensSpace(5, {2, 4}).weights() == std::vector<long long>({1, 2}),
                   "(5,[2,4]) should normalize to (1,2)");
        // window reduction -2 -> 2 through the square of the L(4,-1) generator
        sc.require(LensSpace(4, {1, -1}).homotopy_class(2).weights ==
                       std::vector<long long>({2, 2}),
                   "homotopy weights of the half class must both be p/2");
        bool threw = false;
        try {
            LensSpace(4, {1, -2});
        } catch (const error& e) {
            threw = e.code() == errc::not_coprime;
        }
        sc.require(threw, "non-coprime weights must be rejected");
    }
    {
        auto sc = s.scope("homotopy weights worked cases");
        sc.require(LensSpace(5, {1, 2}).homotopy_class(3).weights ==
                       std::vector<long long>({-2, 1}),
                   "L3_5(1,2) j=3");
        sc.require(LensSpace(11, {1, 1, 1}).homotopy_class(5).weights ==
                       std::vector<long long>({5, 5, 5}),
                   "L5_11(1,1,1) j=5");
        sc.require(LensSpace(7, {1, 3}).homotopy_class(7).weights ==
                       std::vector<long long>({0, 0}),
                   "trivial class weights vanish");
    }
    {
        auto sc = s.scope("chern order worked cases");
        sc.require(LensSpace(4, {1, 1}).chern_order() == 2, "N(L3_4(1,1)) = 2");
        sc.require(LensSpace(11, {1, 1, 1}).chern_order() == 11, "N(L5_11(1,1,1)) = 11");
        sc.require(LensSpace(5, alternating(3)).chern_order() == 1,
                   "zero weight sum forces N = 1");
    }
    {
        auto sc = s.scope("k_a on L_p(1,...,1) equals 2 j (n+1)/p - n");
        for (long long p = 2; p <= 10 && sc.passing(); ++p) {
            for (int n = 1; n <= 4; ++n) {
                LensSpace lens(p, ones(n));
                std::vector<Rational> seen;
                for (long long j = 1; j < p; ++j) {
                    Rational got = k_a(lens, lens.homotopy_class(j));
                    sc.require(got == Rational(2 * j * (n + 1), p) - Rational(n),
                               tag(p, lens.weights(), j) + " k_a=" + got.str());
                    seen.push_back(got);
                }
                std::sort(seen.begin(), seen.end());
                sc.require(std::adjacent_find(seen.begin(), seen.end()) == seen.end(),
                           "k_a must separate classes on round weights");
            }
        }
        sc.require(k_a(LensSpace(11, ones(2)), LensSpace(11, ones(2)).homotopy_class(5)) ==
                       Rational(8, 11),
                   "k_a(L5_11, j=5) = 8/11");
    }
    {
        auto sc = s.scope("k_a = 1 on alternating weights, n odd");
        for (long long p = 3; p <= 9; ++p)
            for (int n = 1; n <= 3; n += 2) {
                LensSpace lens(p, alternating(n));
                for (long long j = 1; j < p; ++j)
                    sc.require(k_a(lens, lens.homotopy_class(j)) == Rational(1),
                               tag(p, lens.weights(), j));
            }
    }
    {
        auto sc = s.scope("trivial class: k = n+2, other invariants refuse");
        LensSpace lens(5, {1, 2});
        sc.require(k_a(lens, lens.homotopy_class(5)) == Rational(3), "k_0 = n+2");
        bool threw = false;
        try {
            h_a(lens, lens.homotopy_class(5));
        } catch (const error& e) {
            threw = e.code() == errc::trivial_class;
        }
        sc.require(threw, "h_a must raise TrivialClass");
    }
    {
        auto sc = s.scope("h_a branches on L_p(1,...,1)");
        for (long long p = 2; p <= 10; ++p)
            for (int n = 1; n <= 4; ++n) {
                LensSpace lens(p, ones(n));
                for (long long j = 1; j < p; ++j) {
                    HomotopyClass cls = lens.homotopy_class(j);
                    Rational h = h_a(lens, cls), ht = h_tilde_a(lens, cls);
                    if (2 * j < p) {
                        sc.require(h == Rational(2 * j * (n + 1), p) && h == ht,
                                   tag(p, lens.weights(), j) + " below-half branch");
                    } else if (2 * j == p) {
                        sc.require(h == Rational(0) && ht == Rational(n + 1),
                                   tag(p, lens.weights(), j) + " half branch");
                    } else {
                        sc.require(h == Rational(2 * j * (n + 1), p) - Rational(n + 1) && h == ht,
                                   tag(p, lens.weights(), j) + " above-half branch");
                    }
                }
            }
    }
    {
        auto sc = s.scope("h_a branches on alternating weights");
        for (long long p = 3; p <= 9; ++p)
            for (int n = 1; n <= 3; n += 2) {
                LensSpace lens(p, alternating(n));
                for (long long j = 1; j < p; ++j) {
                    HomotopyClass cls = lens.homotopy_class(j);
                    bool square_trivial = (2 * j) % p == 0;
                    Rational expect_ht = square_trivial ? Rational(n + 1) : Rational(n + 1, 2);
                    sc.require(h_a(lens, cls) == Rational(0),
                               tag(p, lens.weights(), j) + " h_a");
                    sc.require(h_tilde_a(lens, cls) == expect_ht,
                               tag(p, lens.weights(), j) + " h~_a");
                }
            }
    }
    {
        auto sc = s.scope("multiplicity counts worked cases");
        WeightMultiplicities m =
            multiplicities(LensSpace(4, {1, 1}), LensSpace(4, {1, 1}).homotopy_class(2));
        sc.require(m.size() == 1 && m.mu[0] == 0 && m.nu[0] == 2 && m.mu_tilde[0] == 2 &&
                       m.nu_tilde[0] == 0,
                   "half-weights class on L3_4(1,1)");
        m = multiplicities(LensSpace(11, ones(2)), LensSpace(11, ones(2)).homotopy_class(5));
        sc.require(m.size() == 1 && m.mu[0] == 3 && m.nu[0] == 0 && m.mu_tilde[0] == 3 &&
                       m.nu_tilde[0] == 0,
                   "L5_11 j=5 counts");
    }
    {
        auto sc = s.scope("positivity worked cases");
        LensSpace a(5, {1, 2});
        auto pa = positivity(a, a.homotopy_class(1));
        sc.require(pa.first && pa.second, "L3_5(1,2) j=1 strictly positive");
        LensSpace b(4, {1, 1});
        auto pb = positivity(b, b.homotopy_class(2));
        sc.require(pb.first && !pb.second, "L3_4(1,1) j=2 positive, not strict");
        LensSpace c(5, {1, -1});
        for (long long j = 1; j < 5; ++j) {
            auto pc = positivity(c, c.homotopy_class(j));
            sc.require(!pc.first && !pc.second, "L3_5(1,-1) has no positive class");
        }
    }
    {
        auto sc = s.scope("L5_11(1,1,1) class-5 headline values");
        LensSpace lens(11, ones(2));
        HomotopyClass cls = lens.homotopy_class(5);
        sc.require(lens.chern_order() == 11, "N = 11");
        sc.require(k_a(lens, cls) == Rational(8, 11), "k_a = 8/11");
        sc.require(h_a(lens, cls) == Rational(30, 11), "h_a = 30/11");
        sc.require(h_tilde_a(lens, cls) == Rational(30, 11), "h~_a = 30/11");
        sc.require(hyperbolic_index_eq(2, 11, 5) == Rational(8, 11),
                   "plugged hyperbolic orbit index = 8/11");
    }
}

// --------------------------------------------------------------- sharpness

void sharpness_suite(Suite& s) {
    {
        auto sc = s.scope("minimal-index orbit exists at degree k_a (rank tables)");
        for (long long p = 2; p <= 12; ++p)
            for (int n = 1; n <= 4; ++n) {
                LensSpace lens(p, ones(n));
                for (long long j = 1; j < p; ++j)
                    sc.require(min_degree(graded_ranks(n, p, j, 3)) ==
                                   k_a(lens, lens.homotopy_class(j)),
                               tag(p, lens.weights(), j));
            }
    }
    {
        auto sc = s.scope("hyperbolic orbit at index h_a = h~_a is admissible");
        for (int n = 1; n <= 5; ++n)
            for (long long p = 2; p <= 12; ++p) {
                LensSpace lens(p, ones(n));
                OrbitRecord orbit = hyperbolic_orbit(lens, 1, Rational(2 * n + 2, p));
                HomotopyClass cls = lens.homotopy_class(1);
                if (p > 2) {
                    // j = 1 < p/2, the below-half branch: both thresholds agree
                    sc.require(orbit.index == h_a(lens, cls) &&
                                   orbit.index == h_tilde_a(lens, cls),
                               tag(p, lens.weights(), 1) + " index must equal both thresholds");
                } else {
                    // p = 2 makes j = 1 the half class; only h~ matches
                    sc.require(orbit.index == h_tilde_a(lens, cls),
                               tag(p, lens.weights(), 1) + " index must equal h~_a");
                }
                sc.require(check_main_theorem(orbit, false).consistent(),
                           tag(p, lens.weights(), 1) + " convex check");
                sc.require(check_main_theorem(orbit, true).consistent(),
                           tag(p, lens.weights(), 1) + " strictly convex check");
            }
    }
    {
        auto sc = s.scope("L3_4(1,1): hyperbolic orbit at k_a + 1 in a strictly positive class");
        LensSpace lens(4, {1, 1});
        HomotopyClass cls = lens.homotopy_class(1);
        sc.require(k_a(lens, cls) == Rational(0) && h_a(lens, cls) == Rational(1) &&
                       h_tilde_a(lens, cls) == Rational(1),
                   "thresholds k_a=0, h_a=h~_a=1");
        sc.require(positivity(lens, cls) == std::make_pair(true, true),
                   "class j=1 strictly positive");
        OrbitRecord orbit = hyperbolic_orbit(lens, 1, k_a(lens, cls) + Rational(1));
        sc.require(check_main_theorem(orbit, false).consistent(), "convex check");
        sc.require(check_main_theorem(orbit, true).consistent(), "strictly convex check");
    }
}

// ---------------------------------------------------------- counterexamples

void counterexamples_suite(Suite& s) {
    {
        auto sc = s.scope("even-Delta window: worked cases and brute-force scan");
        sc.require(delta_search(2, 4) == std::optional<long long>(4), "(n,p)=(2,4) -> 4");
        sc.require(delta_search(1, 5) == std::optional<long long>(2), "(n,p)=(1,5) -> 2");
        sc.require(!delta_search(1, 3).has_value(), "(1,3) empty");
        sc.require(!delta_search(1, 4).has_value(), "(1,4) empty");
        sc.require(!delta_search(2, 3).has_value(), "(2,3) empty");
        for (int n = 1; n <= 10; ++n)
            for (long long p = 2; p <= 30; ++p) {
                // independent scan over even integers
                std::optional<long long> brute;
                for (long long d = -2 * (2 * n + 2); d < 2 * n + 2; d += 2)
                    if (d % 2 == 0 && Rational(d) >= Rational(4 * n + 6, p)) {
                        brute = d;
                        break;
                    }
                sc.require(delta_search(n, p) == brute,
                           "scan mismatch at n=" + std::to_string(n) + " p=" + std::to_string(p));
                bool expect = p >= 3 && !((n == 1 && (p == 3 || p == 4)) || (n == 2 && p == 3));
                sc.require(delta_search(n, p).has_value() == expect,
                           "admissible set mismatch at n=" + std::to_string(n) +
                               " p=" + std::to_string(p));
            }
    }
    {
        auto sc = s.scope("low-index orbit below k_a (first construction)");
        for (int n = 1; n <= 5; ++n)
            for (long long p = 3; p <= 12; ++p) {
                auto delta = delta_search(n, p);
                if (!delta) continue;
                LensSpace lens(p, ones(n));
                const long long j = p - 1;
                const Rational eps(1, 20);
                Rational index = Rational(*delta) - Rational(2 * n + 2, p) - Rational(n);
                std::vector<Rational> angles;
                angles.push_back(fold_angle((Rational(2 * n + 4 - *delta) + eps) / Rational(2)));
                for (int i = 1; i < n; ++i) angles.push_back(fold_angle(eps));
                OrbitRecord orbit = elliptic_orbit(lens, j, index, angles);
                Rational ka = k_a(lens, lens.homotopy_class(j));
                sc.require(index < ka, tag(p, lens.weights(), j) + " index below k_a");
                sc.require(ka == Rational(n + 2) - Rational(2 * n + 2, p),
                           tag(p, lens.weights(), j) + " k_a closed form");
                sc.require(has_violations(check_main_theorem(orbit, false), {"index_below_k_a"}),
                           tag(p, lens.weights(), j) + " exactly violation (1), convex");
                sc.require(has_violations(check_main_theorem(orbit, true), {"index_below_k_a"}),
                           tag(p, lens.weights(), j) + " exactly violation (1), strict");
            }
    }
    {
        auto sc = s.scope("contractible-index inequality sweep");
        const std::pair<int, long long> cases[] = {{2, 4}, {1, 5}, {3, 3}, {2, 11}};
        for (auto [n, p] : cases) {
            auto delta = delta_search(n, p);
            if (!sc.passing()) break;
            if (!delta) {
                sc.require(false, "expected a Delta for the sweep");
                continue;
            }
            Rational eps = std::min(Rational(1, 20), Rational(1, p * (2 * n - 1) + 1));
            for (long long q = p; q <= 4 * p; ++q) {
                for (long long tg = 1; tg <= q; ++tg) {
                    auto res = dc_inequality_check(n, p, *delta, eps, q, Rational(tg));
                    sc.require(res.holds, "holds fails at n=" + std::to_string(n) +
                                              " p=" + std::to_string(p) + " q=" + std::to_string(q) +
                                              " T_G=" + std::to_string(tg));
                    sc.require(res.sufficient_route, "sufficient route fails at n=" +
                                                         std::to_string(n) + " p=" + std::to_string(p));
                }
                // fractional period variant
                auto res = dc_inequality_check(n, p, *delta, eps, q, Rational(2 * q - 1, 2));
                sc.require(res.holds, "fractional T_G fails at q=" + std::to_string(q));
            }
        }
        sc.require(dc_inequality_check(2, 4, 4, Rational(1, 20), 4, Rational(3)).holds,
                   "worked case (2,4)");
        sc.require(dc_inequality_check(1, 5, 2, Rational(1, 20), 5, Rational(4)).holds,
                   "worked case (1,5)");
    }
    {
        auto sc = s.scope("hyperbolic orbit at k_a < h_a (second construction)");
        LensSpace lens(11, ones(2));
        HomotopyClass cls = lens.homotopy_class(5);
        Rational index = hyperbolic_index_eq(2, 11, 5);
        sc.require(index == k_a(lens, cls), "index = k_a = 8/11");
        sc.require(index < h_a(lens, cls), "k_a < h_a");
        OrbitRecord orbit = hyperbolic_orbit(lens, 5, index);
        sc.require(has_violations(check_main_theorem(orbit, false),
                                  {"hyperbolic_below_h_a", "not_elliptic_at_k_a"}),
                   "exactly violations (2)+(3), convex");
        sc.require(has_violations(check_main_theorem(orbit, true),
                                  {"hyperbolic_below_h_a", "not_elliptic_at_k_a"}),
                   "exactly violations (2)+(3), strict");
    }
    {
        auto sc = s.scope("hyperbolic-index identity against k_a on round weights, n = 2");
        for (long long p = 2; p <= 12; ++p) {
            LensSpace lens(p, ones(2));
            for (long long j = 1; j < p; ++j)
                sc.require(hyperbolic_index_eq(2, p, j) == k_a(lens, lens.homotopy_class(j)),
                           tag(p, lens.weights(), j));
        }
    }
}

// -------------------------------------------------------------- properties

void properties_suite(Suite& s) {
    {
        auto sc = s.scope("Bott iteration formula on random paths");
        PathGenerator gen(0x5eed0001);
        for (int trial = 0; trial < 200 && sc.passing(); ++trial) {
            RotationPath path = gen.next();
            BottFunction bott = BottFunction::from_path(path);
            for (long long k = 1; k <= 40; ++k)
                sc.require(cz_index(path.iterate(k)) == bott.sum_over_roots(k),
                           "iterate " + std::to_string(k) + " in trial " + std::to_string(trial));
        }
    }
    {
        auto sc = s.scope("mean index = circle integral of the Bott function");
        PathGenerator gen(0x5eed0002);
        for (int trial = 0; trial < 200; ++trial) {
            RotationPath path = gen.next();
            BottFunction bott = BottFunction::from_path(path);
            sc.require(mean_index(path) == bott.integral(), "trial " + std::to_string(trial));
            long long dim = path.half_dim();
            for (long long k : {1, 2, 7, 32, 64}) {
                Rational gap = Rational(cz_index(path.iterate(k))) - Rational(k) * mean_index(path);
                if (gap < Rational(0)) gap = -gap;
                sc.require(gap <= Rational(2 * dim), "mean-index drift bound, trial " +
                                                     std::to_string(trial));
            }
        }
    }
    {
        auto sc = s.scope("correction-path Bott data matches the invariants");
        for (long long p = 2; p <= 8; ++p)
            for (int n = 1; n <= 3; ++n)
                for (const auto& w : weight_vectors(p, n)) {
                    LensSpace lens(p, w);
                    long long N = lens.chern_order();
                    for (long long j = 1; j < p; ++j) {
                        HomotopyClass cls = lens.homotopy_class(j);
                        BottFunction bott = BottFunction::from_path(twist_ga(lens, cls));
                        Rational ka = k_a(lens, cls);
                        sc.require(Rational(bott.value_at_one()) == Rational(N) * (ka - Rational(1)),
                                   tag(p, w, j) + " value at 1");
                        sc.require(Rational(bott.max_excluding_one()) ==
                                       Rational(N) * h_a(lens, cls),
                                   tag(p, w, j) + " max = N h_a");
                        Rational eps = eps_upper_bound(lens, cls) / Rational(2);
                        BottFunction be = BottFunction::from_path(twist_ga_eps(lens, cls, eps));
                        sc.require(Rational(be.value_at_one()) == Rational(N) * (ka - Rational(1)),
                                   tag(p, w, j) + " eps value at 1");
                        sc.require(Rational(be.max_excluding_one()) ==
                                       Rational(N) * h_tilde_a(lens, cls),
                                   tag(p, w, j) + " eps max = N h~_a");
                    }
                }
    }
    {
        auto sc = s.scope("k_a oracle triangle (formula / ellipsoid / rank table)");
        for (long long p = 2; p <= 8; ++p)
            for (int n = 1; n <= 2; ++n)
                for (const auto& w : weight_vectors(p, n)) {
                    LensSpace lens(p, w);
                    for (long long j = 1; j < p; ++j) {
                        HomotopyClass cls = lens.homotopy_class(j);
                        Rational ka = k_a(lens, cls);
                        sc.require(ellipsoid_min_index(lens, cls) == ka,
                                   tag(p, w, j) + " ellipsoid oracle");
                        sc.require(ellipsoid_min_index(lens, cls, true) == ka,
                                   tag(p, w, j) + " halved-eps oracle");
                    }
                }
        for (long long p = 2; p <= 8; ++p)
            for (int n = 1; n <= 2; ++n) {
                LensSpace lens(p, ones(n));
                for (long long j = 1; j < p; ++j)
                    sc.require(min_degree(graded_ranks(n, p, j, 2)) ==
                                   k_a(lens, lens.homotopy_class(j)),
                               tag(p, lens.weights(), j) + " rank table");
            }
    }
    {
        auto sc = s.scope("positive-class existence law");
        for (long long p = 2; p <= 30; ++p)
            for (long long q : coprime_residues(p)) {
                LensSpace lens(p, {1, q});
                auto found = find_positive_classes(lens);
                bool expect_empty = q == -1 && p % 2 == 1;
                sc.require(found.empty() == expect_empty,
                           tag(p, lens.weights(), 0) + " existence");
                if (q == -1 && p % 2 == 0)
                    sc.require(found.size() == 1 && found[0].first.j == p / 2,
                               tag(p, lens.weights(), p / 2) + " unique positive class at p/2");
            }
    }
    {
        auto sc = s.scope("invariants are weight-permutation invariant");
        PathGenerator gen(0x5eed0003);
        for (int trial = 0; trial < 60; ++trial) {
            long long p = gen.uniform(2, 12);
            int n = (int)gen.uniform(1, 4);
            auto residues = coprime_residues(p);
            std::vector<long long> w{1};
            for (int i = 0; i < n; ++i)
                w.push_back(residues[size_t(gen.uniform(0, (long long)residues.size() - 1))]);
            std::vector<long long> shuffled = w;
            for (size_t i = shuffled.size() - 1; i > 1; --i)
                std::swap(shuffled[i], shuffled[size_t(gen.uniform(1, (long long)i))]);
            LensSpace a(p, w), b(p, shuffled);
            sc.require(a.chern_order() == b.chern_order(), "chern order");
            for (long long j = 1; j <= p; ++j) {
                sc.require(k_a(a, a.homotopy_class(j)) == k_a(b, b.homotopy_class(j)), "k_a");
                auto wa = a.homotopy_class(j).weights;
                auto wb = b.homotopy_class(j).weights;
                std::sort(wa.begin(), wa.end());
                std::sort(wb.begin(), wb.end());
                sc.require(wa == wb, "weight multiset");
            }
        }
    }
    {
        auto sc = s.scope("integer speed shifts move index and Bott function by 2qd");
        PathGenerator gen(0x5eed0004);
        for (int trial = 0; trial < 100; ++trial) {
            RotationPath path = gen.next();
            long long q = gen.uniform(-3, 3);
            long long d = path.half_dim();
            RotationPath moved = path.shifted(Rational(q));
            sc.require(cz_index(moved) == cz_index(path) + 2 * q * d, "index shift");
            BottFunction b0 = BottFunction::from_path(path);
            BottFunction b1 = BottFunction::from_path(moved);
            sc.require(b1.value_at_one() == b0.value_at_one() + 2 * q * d, "Bott shift at 1");
            sc.require(b1.max_excluding_one() == b0.max_excluding_one() + 2 * q * d,
                       "Bott shift of max");
        }
    }
    {
        auto sc = s.scope("positive rotation speeds force index >= planes");
        PathGenerator gen(0x5eed0005);
        for (int trial = 0; trial < 100; ++trial) {
            RotationPath path = gen.next();
            std::vector<RotationBlock> positive;
            for (const auto& b : path.blocks()) {
                Rational sp = b.speed;
                if (!(sp > Rational(0))) sp = Rational(1) - sp;
                positive.push_back({sp, b.count});
            }
            RotationPath pos(std::move(positive), Rational(1));
            sc.require(cz_index(pos) >= pos.half_dim(), "trial " + std::to_string(trial));
        }
    }
    {
        auto sc = s.scope("carrier degree count");
        for (int n = 1; n <= 10; ++n)
            for (long long p = 2; p <= 12; ++p)
                sc.require(carrier_degrees(n, p).count_below_h == (n + 1) / 2,
                           "n=" + std::to_string(n) + " p=" + std::to_string(p));
    }
    {
        auto sc = s.scope("simplicity certificate: grid and monotonicity");
        const Rational grid[] = {Rational(1), Rational(5, 4), Rational(3, 2), Rational(7, 4),
                                 Rational(2)};
        for (long long p = 1; p <= 12; ++p)
            for (const Rational& r : grid)
                for (const Rational& R : grid) {
                    if (r > R) continue;
                    PinchingData d{r, R, p, 3};
                    if (!pinching_ok(d)) continue;
                    bool prev = false;
                    for (long long k = 1; k <= 20; ++k) {
                        bool ok = simplicity_certificate(d, k, cw_min_period(d));
                        sc.require(ok, "must hold under pinching at k=" + std::to_string(k));
                        sc.require(!prev || ok, "monotone in k");
                        prev = ok;
                    }
                }
        PinchingData boundary{Rational(1), Rational(2), 3, 2};
        sc.require(!simplicity_certificate(boundary, 1, cw_min_period(boundary)),
                   "equality case R^2 = (p+1) r^2 must fail");
    }
    {
        auto sc = s.scope("elliptic certificate coheres with spectrum data");
        PathGenerator gen(0x5eed0006);
        int built = 0;
        while (built < 300) {
            int n = gen.uniform(0, 1) ? 2 : 3; // Sp(4) and Sp(6)
            LensSpace lens(7, ones(n));
            OrbitRecord orbit{lens, 1, Rational(1), Rational(0), 0, {}};
            BottFunction bott(0, 0, {});
            for (int i = 0; i < n; ++i) {
                if (gen.uniform(0, 3) == 0) {
                    orbit.spectrum.push_back({SpectrumKind::hyperbolic, Rational(2), 2});
                    // stretch block: constant Bott function, value 0
                    bott = bott + BottFunction(0, 0, {});
                } else {
                    Rational speed(gen.uniform(-40, 40), gen.uniform(1, 10));
                    RotationPath block({{speed, 1}}, Rational(1));
                    bott = bott + BottFunction::from_path(block);
                    Rational angle = fold_angle(speed);
                    if (angle.is_zero()) {
                        orbit.spectrum.push_back({SpectrumKind::unit_plus_one, Rational(1), 2});
                        orbit.nullity += 2;
                    } else if (angle == Rational(1, 2)) {
                        orbit.spectrum.push_back({SpectrumKind::unit_minus_one, Rational(-1), 2});
                    } else {
                        orbit.spectrum.push_back({SpectrumKind::rotation, angle, 2});
                    }
                }
            }
            ++built;
            if (elliptic_certificate(bott, n))
                sc.require(classify(orbit) == OrbitClass::elliptic,
                           "certificate true but spectrum not elliptic");
        }
    }
    {
        auto sc = s.scope("filtered tables agree with unfiltered truncations");
        for (long long p = 2; p <= 6; ++p)
            for (int n = 1; n <= 3; ++n) {
                const long long kmax = 50;
                // bound halfway between the actions of iterates kmax and kmax+1
                Rational bound =
                    (Rational((kmax - 1) * p + 1, p) + Rational(kmax * p + 1, p)) / Rational(2);
                GradedRanks filtered = filtered_ranks(n, p, Rational(1), bound);
                GradedRanks full = graded_ranks(n, p, 1, kmax);
                sc.require(filtered.ranks == full.ranks,
                           "n=" + std::to_string(n) + " p=" + std::to_string(p));
            }
        sc.require(filtered_ranks(1, 2, Rational(1), Rational(2)).ranks.size() == 4,
                   "worked filtered case keeps k = 1, 2");
        sc.require(filtered_ranks(1, 2, Rational(1), Rational(1, 4)).ranks.empty(),
                   "bound below the first action gives an empty table");
        bool threw = false;
        try {
            filtered_ranks(1, 2, Rational(1), Rational(3, 2));
        } catch (const error& e) {
            threw = e.code() == errc::on_spectrum;
        }
        sc.require(threw, "spectrum hit raises OnSpectrum");
    }
    {
        auto sc = s.scope("comparison of Bott functions under generator domination");
        PathGenerator gen(0x5eed0008);
        auto uniform_real = [&](double lo, double hi) {
            return lo + (hi - lo) * (double(gen.next_raw() >> 11) / 9007199254740992.0);
        };
        const double two_pi = 6.283185307179586476925286766559;
        struct Coeffs {
            double a[3][3]; // a11, a12, a22 as constant/cos/sin coefficients
            double b[4][2]; // B(t) entries; Q = B^T B
        };
        auto gen_eval = [&](const Coeffs& c, bool upper, double t, double out[3]) {
            double cs = std::cos(two_pi * t), sn = std::sin(two_pi * t);
            for (int e = 0; e < 3; ++e) out[e] = c.a[e][0] + c.a[e][1] * cs + c.a[e][2] * sn;
            if (!upper) return;
            double b00 = c.b[0][0] + c.b[0][1] * cs, b01 = c.b[1][0] + c.b[1][1] * cs;
            double b10 = c.b[2][0] + c.b[2][1] * cs, b11 = c.b[3][0] + c.b[3][1] * cs;
            out[0] += b00 * b00 + b10 * b10;
            out[1] += b00 * b01 + b10 * b11;
            out[2] += b01 * b01 + b11 * b11;
        };
        auto integrate = [&](const Coeffs& c, bool upper) {
            PlanarPathSample path;
            Mat2 g{1, 0, 0, 1};
            path.samples.push_back(g);
            const int steps = 1200;
            const double h = 1.0 / steps;
            auto deriv = [&](double t, const Mat2& m, Mat2& out) {
                double a[3];
                gen_eval(c, upper, t, a);
                double j11 = -a[1], j12 = -a[2], j21 = a[0], j22 = a[1];
                out = {j11 * m[0] + j12 * m[2], j11 * m[1] + j12 * m[3],
                       j21 * m[0] + j22 * m[2], j21 * m[1] + j22 * m[3]};
            };
            for (int i = 0; i < steps; ++i) {
                double t = i * h;
                Mat2 k1, k2, k3, k4, tmp;
                deriv(t, g, k1);
                for (int e = 0; e < 4; ++e) tmp[e] = g[e] + 0.5 * h * k1[e];
                deriv(t + 0.5 * h, tmp, k2);
                for (int e = 0; e < 4; ++e) tmp[e] = g[e] + 0.5 * h * k2[e];
                deriv(t + 0.5 * h, tmp, k3);
                for (int e = 0; e < 4; ++e) tmp[e] = g[e] + h * k3[e];
                deriv(t + h, tmp, k4);
                for (int e = 0; e < 4; ++e)
                    g[e] += h / 6.0 * (k1[e] + 2 * k2[e] + 2 * k3[e] + k4[e]);
                double d = g[0] * g[3] - g[1] * g[2];
                double scale = 1.0 / std::sqrt(d);
                for (int e = 0; e < 4; ++e) g[e] *= scale;
                path.samples.push_back(g);
            }
            return path;
        };
        int done = 0, attempts = 0;
        while (done < 100 && attempts < 500) {
            ++attempts;
            Coeffs c;
            for (int e = 0; e < 3; ++e)
                for (int i = 0; i < 3; ++i) c.a[e][i] = uniform_real(-1.5, 1.5);
            for (int e = 0; e < 4; ++e)
                for (int i = 0; i < 2; ++i) c.b[e][i] = uniform_real(-1.0, 1.0);
            try {
                PlanarBott upper = PlanarBott::reconstruct(integrate(c, true));
                PlanarBott lower = PlanarBott::reconstruct(integrate(c, false));
                for (int k = 0; k < 16; ++k) {
                    double z = (k + 0.5) / 33.0;
                    try {
                        sc.require(upper.at(z) >= lower.at(z),
                                   "dominated generator produced a larger Bott value");
                    } catch (const error&) {
                        continue; // sample angle collided with an eigenvalue
                    }
                }
                ++done;
            } catch (const error&) {
                continue; // near-parabolic endpoint: resample
            }
        }
        sc.require(done == 100, "pair generation starved");
    }
    {
        auto sc = s.scope("numeric planar oracle against the closed form");
        PathGenerator gen(0x5eed0007);
        for (int trial = 0; trial < 120; ++trial) {
            long long den = gen.uniform(1, 40);
            long long num = gen.uniform(-20 * den, 20 * den);
            Rational speed(num, den);
            PlanarPathSample sample = sample_rotation(speed.to_double(), 1000);
            PlanarIndex got = planar_index_numeric(sample);
            long long mu = cz_index(RotationPath({{speed, 1}}, Rational(1)));
            if (speed.is_integer()) {
                sc.require(got.degenerate && (got.mu_tilde == mu || got.mu_tilde == mu + 1),
                           "degenerate trial " + std::to_string(trial));
            } else {
                sc.require(!got.degenerate && got.mu_tilde == mu,
                           "trial " + std::to_string(trial) + " speed " + speed.str());
            }
        }
    }
}

} // namespace

bool all_passed(const std::vector<Check>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<Check> run_suite(const std::string& suite) {
    std::vector<Check> out;
    Suite s(out);
    auto guarded = [&](const char* name, void (*fn)(Suite&)) {
        try {
            fn(s);
        } catch (const std::exception& e) {
            out.push_back({std::string(name) + " suite aborted", false, e.what()});
        }
    };
    bool known = false;
    if (suite == "examples" || suite == "all") guarded("examples", examples_suite), known = true;
    if (suite == "sharpness" || suite == "all") guarded("sharpness", sharpness_suite), known = true;
    if (suite == "counterexamples" || suite == "all")
        guarded("counterexamples", counterexamples_suite), known = true;
    if (suite == "properties" || suite == "all")
        guarded("properties", properties_suite), known = true;
    if (!known)
        throw error(errc::bad_params,
                    "unknown suite '" + suite +
                        "' (expected examples|sharpness|counterexamples|properties|all)");
    return out;
}

} // namespace reeblens::verify
