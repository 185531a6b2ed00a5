// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.
// Everything arithmetic is checked exactly; the only tolerances live in the
// numeric planar oracle (1e-9 winding, 1e-6 eigenvalue-one detection).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "reeblens/class_invariants.hpp"
#include "reeblens/dyn_verify.hpp"
#include "reeblens/esh_ranks.hpp"
#include "reeblens/index_engine.hpp"
#include "reeblens/planar_numeric.hpp"
#include "reeblens/sweep.hpp"

using namespace reeblens;

namespace {

int failures = 0;
constexpr double kTwoPi = 6.283185307179586476925286766559;

class Criterion {
public:
    Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}
    ~Criterion() { done(); }
    void done() {
        if (printed_) return;
        printed_ = true;
        std::string note = pass_ ? "" : "  -- " + first_;
        std::printf("[%s] criterion %2d: %s%s\n", pass_ ? "PASS" : "FAIL", id_, title_.c_str(),
                    note.c_str());
        if (!pass_) ++failures;
    }
    void expect(bool ok, const std::string& what) {
        ++checked_;
        if (!ok && pass_) {
            pass_ = false;
            first_ = what;
        }
    }
    long long count() const { return checked_; }

private:
    int id_;
    std::string title_;
    bool pass_ = true;
    bool printed_ = false;
    long long checked_ = 0;
    std::string first_;
};

std::vector<long long> ones(int n) { return std::vector<long long>(size_t(n) + 1, 1); }

std::string at(long long p, int n, long long j) {
    std::ostringstream os;
    os << "p=" << p << " n=" << n << " j=" << j;
    return os.str();
}

// ---- criterion 1: worked example tables -----------------------------------

void criterion_1() {
    Criterion c(1, "example tables (round and alternating weights)");
    for (long long p = 2; p <= 12; ++p)
        for (int n = 1; n <= 5; ++n) {
            LensSpace lens(p, ones(n));
            for (long long j = 1; j < p; ++j) {
                HomotopyClass cls = lens.homotopy_class(j);
                c.expect(k_a(lens, cls) == Rational(2 * j * (n + 1), p) - Rational(n),
                         at(p, n, j) + " k_a");
                Rational h = h_a(lens, cls), ht = h_tilde_a(lens, cls);
                if (2 * j < p) {
                    c.expect(h == Rational(2 * j * (n + 1), p) && ht == h,
                             at(p, n, j) + " h below half");
                } else if (2 * j == p) {
                    c.expect(h == Rational(0) && ht == Rational(n + 1), at(p, n, j) + " h at half");
                } else {
                    c.expect(h == Rational(2 * j * (n + 1), p) - Rational(n + 1) && ht == h,
                             at(p, n, j) + " h above half");
                }
            }
        }
    for (long long p = 3; p <= 12; ++p)
        for (int n = 1; n <= 5; n += 2) {
            std::vector<long long> w;
            for (int i = 0; i <= n; ++i) w.push_back(i % 2 ? -1 : 1);
            LensSpace lens(p, w);
            for (long long j = 1; j < p; ++j) {
                HomotopyClass cls = lens.homotopy_class(j);
                c.expect(k_a(lens, cls) == Rational(1), at(p, n, j) + " alternating k_a");
                bool square_trivial = (2 * j) % p == 0;
                c.expect(h_a(lens, cls) == Rational(0), at(p, n, j) + " alternating h_a");
                c.expect(h_tilde_a(lens, cls) ==
                             (square_trivial ? Rational(n + 1) : Rational(n + 1, 2)),
                         at(p, n, j) + " alternating h~_a");
            }
        }
}

// ---- criterion 2: L^5_11(1,1,1), class 5 -----------------------------------

void criterion_2() {
    Criterion c(2, "L5_11(1,1,1) class 5 headline values");
    LensSpace lens(11, ones(2));
    HomotopyClass cls = lens.homotopy_class(5);
    c.expect(lens.chern_order() == 11, "N = 11");
    c.expect(k_a(lens, cls) == Rational(8, 11), "k_a = 8/11");
    c.expect(h_a(lens, cls) == Rational(30, 11), "h_a = 30/11");
    c.expect(h_tilde_a(lens, cls) == Rational(30, 11), "h~_a = 30/11");
    Rational idx = hyperbolic_index_eq(2, 11, 5);
    c.expect(idx == Rational(8, 11), "hyperbolic orbit index 8/11");
    c.expect(idx == k_a(lens, cls), "index = k_a");
    c.expect(idx < h_a(lens, cls), "index < h_a");
}

// ---- criterion 3: L^3_4(1,1) ------------------------------------------------

void criterion_3() {
    Criterion c(3, "L3_4(1,1) class table and boundary instance");
    LensSpace lens(4, {1, 1});
    c.expect(lens.chern_order() == 2, "N = 2");
    HomotopyClass c1 = lens.homotopy_class(1), c2 = lens.homotopy_class(2);
    c.expect(k_a(lens, c1) == Rational(0), "j=1 k_a = 0");
    c.expect(h_a(lens, c1) == Rational(1) && h_tilde_a(lens, c1) == Rational(1),
             "j=1 h = h~ = 1");
    c.expect(positivity(lens, c1) == std::make_pair(true, true), "j=1 strictly positive");
    c.expect(k_a(lens, c2) == Rational(1), "j=2 k_a = 1");
    c.expect(h_a(lens, c2) == Rational(0), "j=2 h_a = 0");
    c.expect(h_tilde_a(lens, c2) == Rational(2), "j=2 h~_a = 2");
    auto p2 = positivity(lens, c2);
    c.expect(p2.first && !p2.second, "j=2 positive, not strictly");
    // boundary instance: hyperbolic orbit at index k_a + 1 = 1
    OrbitRecord orbit{lens, 1, Rational(1), Rational(1), 0,
                      {{SpectrumKind::hyperbolic, Rational(2), 2}}};
    c.expect(orbit.index == k_a(lens, c1) + Rational(1), "instance index = k_a + 1");
    c.expect(check_main_theorem(orbit, false).consistent(), "no violation, convex");
    c.expect(check_main_theorem(orbit, true).consistent(), "no violation, strictly convex");
}

// ---- criterion 4: Bott formula property suite -------------------------------

long long unit_multiplicity(const RotationPath& path, const Rational& angle) {
    long long m = 0;
    for (const auto& [x, count] : path.total_rotations()) {
        if (fold_angle(x) != angle) continue;
        m += ((angle.is_zero() || angle == Rational(1, 2)) ? 2 : 1) * count;
    }
    return m;
}

void criterion_4() {
    Criterion c(4, "Bott iteration formula, mean index, symmetry, splitting bounds");
    PathGenerator gen(0xACC40001);
    for (int trial = 0; trial < 500; ++trial) {
        RotationPath path = gen.next(6, 20, 40);
        BottFunction bott = BottFunction::from_path(path);
        for (long long k = 1; k <= 50; ++k)
            c.expect(cz_index(path.iterate(k)) == bott.sum_over_roots(k),
                     "Bott formula, trial " + std::to_string(trial) + " k=" + std::to_string(k));
        c.expect(mean_index(path) == bott.integral(), "mean index, trial " + std::to_string(trial));
        // symmetry under conjugation
        for (long long q = 1; q < 16; ++q)
            c.expect(bott.at(Rational(q, 16)) == bott.at(Rational(16 - q, 16)),
                     "symmetry, trial " + std::to_string(trial));
        // splitting bounds against endpoint multiplicities
        c.expect(bott.s_at_one() >= 0 && 2 * bott.s_at_one() <= unit_multiplicity(path, Rational(0)),
                 "splitting bound at 1, trial " + std::to_string(trial));
        for (const auto& j : bott.jumps()) {
            long long nu = unit_multiplicity(path, j.angle);
            c.expect(j.s_plus >= 0 && j.s_minus >= 0 && j.s_plus <= nu && j.s_minus <= nu &&
                         j.s_plus + j.s_minus <= nu,
                     "splitting bounds, trial " + std::to_string(trial));
        }
    }
}

// ---- criteria 5 and 6: correction-path structure and the k_a triangle -------

void criteria_5_6() {
    Criterion c5(5, "correction-path Bott data: value N(k_a-1), maxima N h_a and N h~_a");
    Criterion c6(6, "k_a triangle: formula = ellipsoid oracle = rank-table minimum");
    for (long long p = 2; p <= 12; ++p)
        for (int n = 1; n <= 4; ++n)
            for (const auto& w : weight_vectors(p, n)) {
                LensSpace lens(p, w);
                const long long N = lens.chern_order();
                for (long long j = 1; j < p; ++j) {
                    HomotopyClass cls = lens.homotopy_class(j);
                    Rational ka = k_a(lens, cls);
                    BottFunction bott = BottFunction::from_path(twist_ga(lens, cls));
                    c5.expect(Rational(bott.value_at_one()) == Rational(N) * (ka - Rational(1)),
                              at(p, n, j) + " value at 1");
                    c5.expect(Rational(bott.max_excluding_one()) == Rational(N) * h_a(lens, cls),
                              at(p, n, j) + " max N h_a");
                    // eps schedule: half the admissible bound
                    Rational eps = eps_upper_bound(lens, cls) / Rational(2);
                    BottFunction be = BottFunction::from_path(twist_ga_eps(lens, cls, eps));
                    c5.expect(Rational(be.value_at_one()) == Rational(N) * (ka - Rational(1)),
                              at(p, n, j) + " eps value at 1");
                    c5.expect(Rational(be.max_excluding_one()) ==
                                  Rational(N) * h_tilde_a(lens, cls),
                              at(p, n, j) + " eps max N h~_a");

                    c6.expect(ellipsoid_min_index(lens, cls) == ka, at(p, n, j) + " ellipsoid");
                    c6.expect(ellipsoid_min_index(lens, cls, true) == ka,
                              at(p, n, j) + " ellipsoid, halved eps");
                }
                if (std::all_of(w.begin(), w.end(), [](long long x) { return x == 1; })) {
                    for (long long j = 1; j < p; ++j)
                        c6.expect(min_degree(graded_ranks(n, p, j, 2)) ==
                                      k_a(lens, lens.homotopy_class(j)),
                                  at(p, n, j) + " rank table");
                }
            }
    c5.done();
    c6.done();
}

// ---- criterion 7: positive-class law ----------------------------------------

void criterion_7() {
    Criterion c(7, "positive classes on L(p, q): existence and uniqueness law");
    for (long long p = 2; p <= 30; ++p)
        for (long long q : coprime_residues(p)) {
            LensSpace lens(p, {1, q});
            auto found = find_positive_classes(lens);
            bool expect_empty = q == -1 && p % 2 == 1;
            c.expect(found.empty() == expect_empty,
                     "p=" + std::to_string(p) + " q=" + std::to_string(q) + " existence");
            if (q == -1 && p % 2 == 0)
                c.expect(found.size() == 1 && found[0].first.j == p / 2,
                         "p=" + std::to_string(p) + " unique class p/2");
        }
}

// ---- criterion 8: the even-Delta lemma --------------------------------------

void criterion_8() {
    Criterion c(8, "Delta window: exact admissible set and membership");
    for (int n = 1; n <= 10; ++n)
        for (long long p = 2; p <= 30; ++p) {
            auto delta = delta_search(n, p);
            bool expect = p >= 3 && !((n == 1 && (p == 3 || p == 4)) || (n == 2 && p == 3));
            c.expect(delta.has_value() == expect,
                     "admissible set at n=" + std::to_string(n) + " p=" + std::to_string(p));
            if (delta) {
                Rational d(*delta);
                c.expect(*delta % 2 == 0, "Delta even");
                c.expect(Rational(2 * n + 4, p) <= d - Rational(2 * n + 2, p),
                         "lower window bound");
                c.expect(d - Rational(2 * n + 2, p) < Rational(2 * n + 2) - Rational(2 * n + 2, p),
                         "upper window bound");
            }
        }
}

// ---- criterion 9: toric cross-check -----------------------------------------

void criterion_9() {
    Criterion c(9, "toric indices: closed form = engine recomputation");
    for (long long p = 2; p <= 8; ++p)
        for (int n = 1; n <= 3; ++n)
            for (const auto& w : weight_vectors(p, n)) {
                LensSpace lens(p, w);
                for (long long j = 1; j <= p; ++j)
                    for (long long m = 1; m <= 5; ++m) {
                        if (std::gcd(j, m) != 1) continue;
                        HomotopyClass cls = lens.homotopy_class(j);
                        c.expect(toric_orbit_index(lens, cls, m) ==
                                     orbit_index(lens, cls, toric_lift_path(lens, cls, m)),
                                 at(p, n, j) + " m=" + std::to_string(m));
                    }
            }
}

// ---- criterion 10: numeric oracles ------------------------------------------

struct Sym2 {
    // symmetric generator a11, a12, a22 as trig polynomials in t
    double c11[3], c12[3], c22[3];
    void eval(double t, double& a11, double& a12, double& a22) const {
        double cs = std::cos(kTwoPi * t), sn = std::sin(kTwoPi * t);
        a11 = c11[0] + c11[1] * cs + c11[2] * sn;
        a12 = c12[0] + c12[1] * cs + c12[2] * sn;
        a22 = c22[0] + c22[1] * cs + c22[2] * sn;
    }
};

struct Gen {
    Sym2 base;     // A2
    double b[4][2]; // B(t) entries, constant + cos; Q = B^T B
    bool upper;     // evaluate A1 = A2 + Q or just A2

    void eval(double t, double& a11, double& a12, double& a22) const {
        base.eval(t, a11, a12, a22);
        if (!upper) return;
        double cs = std::cos(kTwoPi * t);
        double b00 = b[0][0] + b[0][1] * cs, b01 = b[1][0] + b[1][1] * cs;
        double b10 = b[2][0] + b[2][1] * cs, b11 = b[3][0] + b[3][1] * cs;
        a11 += b00 * b00 + b10 * b10;
        a12 += b00 * b01 + b10 * b11;
        a22 += b01 * b01 + b11 * b11;
    }
};

// integrate dG/dt = J A(t) G with RK4, renormalizing the determinant
PlanarPathSample integrate(const Gen& gen, int steps) {
    PlanarPathSample path;
    Mat2 g{1, 0, 0, 1};
    path.samples.push_back(g);
    const double h = 1.0 / steps;
    auto deriv = [&](double t, const Mat2& m, Mat2& out) {
        double a11, a12, a22;
        gen.eval(t, a11, a12, a22);
        // J A with J = [[0,-1],[1,0]]: rows (-a21, -a22), (a11, a12)
        double j11 = -a12, j12 = -a22, j21 = a11, j22 = a12;
        out = {j11 * m[0] + j12 * m[2], j11 * m[1] + j12 * m[3], j21 * m[0] + j22 * m[2],
               j21 * m[1] + j22 * m[3]};
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
        for (int e = 0; e < 4; ++e) g[e] += h / 6.0 * (k1[e] + 2 * k2[e] + 2 * k3[e] + k4[e]);
        double d = g[0] * g[3] - g[1] * g[2];
        double scale = 1.0 / std::sqrt(d);
        for (int e = 0; e < 4; ++e) g[e] *= scale;
        path.samples.push_back(g);
    }
    return path;
}

void criterion_10() {
    Criterion c(10, "numeric oracle agreement and comparison Monte Carlo");
    PathGenerator gen(0xACC100AA);
    for (int trial = 0; trial < 500; ++trial) {
        long long den = gen.uniform(1, 40);
        long long num = gen.uniform(-20 * den, 20 * den);
        Rational speed(num, den);
        PlanarIndex got = planar_index_numeric(sample_rotation(speed.to_double(), 1000));
        long long mu = cz_index(RotationPath({{speed, 1}}, Rational(1)));
        if (speed.is_integer())
            c.expect(got.degenerate && (got.mu_tilde == mu || got.mu_tilde == mu + 1),
                     "degenerate rotation " + speed.str());
        else
            c.expect(!got.degenerate && got.mu_tilde == mu, "rotation " + speed.str());
    }

    auto uniform_real = [&](double lo, double hi) {
        return lo + (hi - lo) * (double(gen.next_raw() >> 11) / 9007199254740992.0);
    };
    int done = 0, attempts = 0;
    while (done < 1000 && attempts < 4000) {
        ++attempts;
        Gen g2;
        for (int i = 0; i < 3; ++i) {
            g2.base.c11[i] = uniform_real(-1.5, 1.5);
            g2.base.c12[i] = uniform_real(-1.5, 1.5);
            g2.base.c22[i] = uniform_real(-1.5, 1.5);
        }
        for (int i = 0; i < 4; ++i) {
            g2.b[i][0] = uniform_real(-1.0, 1.0);
            g2.b[i][1] = uniform_real(-1.0, 1.0);
        }
        g2.upper = false;
        Gen g1 = g2;
        g1.upper = true;
        try {
            PlanarBott upper = PlanarBott::reconstruct(integrate(g1, 1500));
            PlanarBott lower = PlanarBott::reconstruct(integrate(g2, 1500));
            for (int k = 0; k < 64; ++k) {
                double s = (k + 0.5) / 129.0; // angles inside (0, 1/2)
                long long b1, b2;
                try {
                    b1 = upper.at(s);
                    b2 = lower.at(s);
                } catch (const error&) {
                    continue; // sample angle collided with an eigenvalue
                }
                c.expect(b1 >= b2, "comparison violated in pair " + std::to_string(done));
            }
            ++done;
        } catch (const error&) {
            continue; // near-parabolic endpoint: resample
        }
    }
    c.expect(done == 1000, "Monte Carlo pair generation starved");
}

// ---- criterion 11: multiplicity bookkeeping ---------------------------------

void criterion_11() {
    Criterion c(11, "carrier counts, simplicity certificates, multiplicity bounds");
    for (int n = 1; n <= 10; ++n)
        for (long long p = 2; p <= 12; ++p)
            c.expect(carrier_degrees(n, p).count_below_h == (n + 1) / 2,
                     "carrier count n=" + std::to_string(n) + " p=" + std::to_string(p));

    const Rational grid[] = {Rational(1), Rational(5, 4), Rational(3, 2), Rational(7, 4),
                             Rational(2)};
    for (long long p = 1; p <= 12; ++p)
        for (const Rational& r : grid)
            for (const Rational& R : grid) {
                if (r > R) continue;
                PinchingData d{r, R, p, 3};
                if (!pinching_ok(d)) continue;
                for (long long k = 1; k <= 20; ++k) {
                    c.expect(simplicity_certificate(d, k, cw_min_period(d)),
                             "certificate p=" + std::to_string(p) + " k=" + std::to_string(k));
                    c.expect(simplicity_certificate(d, k, cw_min_period(d) + Rational(1)),
                             "certificate above the bound");
                }
                c.expect(multiplicity_guarantee(d, ConvexKind::h_pinched) == (d.n + 1) / 2,
                         "H-pinched count");
                c.expect(multiplicity_guarantee(d, ConvexKind::pinched_strictly_convex) ==
                             d.n + 1,
                         "strictly convex count");
            }
    PinchingData ekeland{Rational(1), Rational(5, 4), 1, 1};
    c.expect(multiplicity_guarantee(ekeland, ConvexKind::pinched_strictly_convex) == 2,
             "Ekeland-Lasry case p = 1");
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criteria_5_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    if (failures != 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
