#include "reeblens/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace reeblens {

json to_json(const ClassInvariants& inv, long long p) {
    json out;
    out["j"] = inv.j;
    out["homotopy_weights"] = inv.homotopy_weights;
    out["k_a"] = inv.k_a.str();
    if (inv.j == p) {
        out["h_a"] = nullptr;
        out["h_tilde_a"] = nullptr;
        out["positive"] = nullptr;
        out["strictly_positive"] = nullptr;
        out["w_plus"] = nullptr;
        out["w_minus"] = nullptr;
    } else {
        out["h_a"] = inv.h_a.str();
        out["h_tilde_a"] = inv.h_tilde_a.str();
        out["positive"] = inv.positive;
        out["strictly_positive"] = inv.strictly_positive;
        out["w_plus"] = inv.w_plus;
        out["w_minus"] = inv.w_minus;
    }
    return out;
}

json invariants_table_json(const LensSpace& lens) {
    json out;
    out["p"] = lens.p();
    out["n"] = lens.n();
    out["weights"] = lens.weights();
    out["chern_order"] = lens.chern_order();
    out["classes"] = json::array();
    for (const auto& cls : lens.classes())
        out["classes"].push_back(to_json(class_invariants(lens, cls), lens.p()));
    return out;
}

std::string invariants_table_text(const LensSpace& lens) {
    std::ostringstream os;
    os << "L^" << 2 * lens.n() + 1 << "_" << lens.p() << "(";
    for (size_t i = 0; i < lens.weights().size(); ++i)
        os << (i ? "," : "") << lens.weights()[i];
    os << ")  N=" << lens.chern_order() << "\n";
    os << "j\tweights\tw+\tw-\tk_a\th_a\th~_a\tpos\tstrict\n";
    for (const auto& cls : lens.classes()) {
        ClassInvariants inv = class_invariants(lens, cls);
        os << inv.j << "\t(";
        for (size_t i = 0; i < inv.homotopy_weights.size(); ++i)
            os << (i ? "," : "") << inv.homotopy_weights[i];
        os << ")";
        if (inv.j == lens.p()) {
            os << "\t-\t-\t" << inv.k_a.str() << "\t-\t-\t-\t-\n";
        } else {
            os << "\t" << inv.w_plus << "\t" << inv.w_minus << "\t" << inv.k_a.str() << "\t"
               << inv.h_a.str() << "\t" << inv.h_tilde_a.str() << "\t"
               << (inv.positive ? "yes" : "no") << "\t" << (inv.strictly_positive ? "yes" : "no")
               << "\n";
        }
    }
    return os.str();
}

namespace {

std::string frac(long long value, long long divisor) {
    return Rational(value, divisor).str();
}

} // namespace

std::string bott_csv(const BottFunction& bott, long long divisor) {
    std::ostringstream os;
    os << "angle_turns,value,s_plus,s_minus\n";
    os << "0," << frac(bott.value_at_one(), divisor) << "," << frac(bott.s_at_one(), divisor)
       << "," << frac(bott.s_at_one(), divisor) << "\n";
    for (const auto& j : bott.jumps())
        os << j.angle.str() << "," << frac(bott.at(j.angle), divisor) << ","
           << frac(j.s_plus, divisor) << "," << frac(j.s_minus, divisor) << "\n";
    return os.str();
}

std::string bott_svg(const BottFunction& bott, long long divisor) {
    const double W = 640, H = 360, ml = 56, mr = 16, mt = 16, mb = 36;
    const double div = double(divisor);

    std::vector<double> values{double(bott.value_at_one()) / div};
    for (const auto& [lo, hi, v] : bott.arcs()) {
        (void)lo;
        (void)hi;
        values.push_back(double(v) / div);
    }
    for (const auto& j : bott.jumps()) values.push_back(double(bott.at(j.angle)) / div);
    double vmin = *std::min_element(values.begin(), values.end());
    double vmax = *std::max_element(values.begin(), values.end());
    if (vmax - vmin < 1e-12) {
        vmax += 1;
        vmin -= 1;
    }

    auto X = [&](double turns) { return ml + (W - ml - mr) * (turns / 0.5); };
    auto Y = [&](double v) { return H - mb - (H - mt - mb) * ((v - vmin) / (vmax - vmin)); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << W << " " << H
       << "\" font-family=\"monospace\" font-size=\"12\">\n";
    os << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    // axes
    os << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr << "\" y2=\""
       << H - mb << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << H - mb
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << ml << "\" y=\"" << H - 12 << "\">0</text>\n";
    os << "<text x=\"" << W - mr - 12 << "\" y=\"" << H - 12 << "\">pi</text>\n";
    os << "<text x=\"4\" y=\"" << Y(vmax) + 4 << "\">" << vmax << "</text>\n";
    os << "<text x=\"4\" y=\"" << Y(vmin) + 4 << "\">" << vmin << "</text>\n";

    auto closed_dot = [&](double x, double y) {
        os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3.2\" fill=\"black\"/>\n";
    };
    auto open_dot = [&](double x, double y) {
        os << "<circle cx=\"" << x << "\" cy=\"" << y
           << "\" r=\"3.2\" fill=\"white\" stroke=\"black\"/>\n";
    };

    // value at 1 (theta = 0)
    closed_dot(X(0), Y(double(bott.value_at_one()) / div));
    for (const auto& [lo, hi, v] : bott.arcs()) {
        double y = Y(double(v) / div);
        os << "<line x1=\"" << X(lo.to_double()) << "\" y1=\"" << y << "\" x2=\""
           << X(hi.to_double()) << "\" y2=\"" << y << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
        open_dot(X(lo.to_double()), y);
        if (hi < Rational(1, 2)) open_dot(X(hi.to_double()), y);
    }
    // attained values at the jump angles, and at pi when no jump sits there
    for (const auto& j : bott.jumps()) closed_dot(X(j.angle.to_double()), Y(double(bott.at(j.angle)) / div));
    if (bott.jumps().empty() || bott.jumps().back().angle < Rational(1, 2))
        closed_dot(X(0.5), Y(double(bott.at(Rational(1, 2))) / div));
    os << "</svg>\n";
    return os.str();
}

json to_json(const GradedRanks& table) {
    json context;
    context["n"] = table.n;
    context["p"] = table.p;
    context["class"] = table.j;
    if (table.k_max)
        context["k_max"] = *table.k_max;
    else
        context["k_max"] = nullptr;
    if (table.action_bound) {
        context["action_bound_pi"] = table.action_bound->str();
        context["scale"] = table.scale->str();
    } else {
        context["action_bound_pi"] = nullptr;
        context["scale"] = nullptr;
    }
    json ranks = json::array();
    for (const auto& [degree, rank] : table.ranks)
        ranks.push_back({{"degree", degree.str()}, {"rank", rank}});
    return json{{"context", context}, {"ranks", ranks}};
}

json to_json(const OrbitRecord& orbit) {
    json out;
    out["p"] = orbit.lens.p();
    out["weights"] = orbit.lens.weights();
    out["class"] = orbit.j;
    out["action"] = orbit.action.str();
    out["index"] = orbit.index.str();
    out["nullity"] = orbit.nullity;
    json spec = json::array();
    for (const auto& e : orbit.spectrum) {
        const char* kind = e.kind == SpectrumKind::rotation ? "rotation"
                           : e.kind == SpectrumKind::hyperbolic ? "hyperbolic"
                           : e.kind == SpectrumKind::unit_minus_one ? "unit_minus_one"
                                                                    : "unit_plus_one";
        spec.push_back({{"kind", kind}, {"param", e.param.str()}, {"count", e.count}});
    }
    out["spectrum"] = spec;
    return out;
}

json to_json(const OrbitRecord& orbit, const TheoremReport& report) {
    json out;
    out["orbit"] = to_json(orbit);
    out["strict"] = report.strict;
    out["violations"] = report.violations;
    out["thresholds"] = {{"k_a", report.k_a.str()},
                         {"h_a", report.h_a.str()},
                         {"h_tilde_a", report.h_tilde_a.str()}};
    return out;
}

} // namespace reeblens
