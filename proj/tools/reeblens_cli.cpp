#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "reeblens/class_invariants.hpp"
#include "reeblens/esh_ranks.hpp"
#include "reeblens/index_engine.hpp"
#include "reeblens/serialize.hpp"
#include "reeblens/verify.hpp"

namespace {

using namespace reeblens;

// exit codes: 0 success, 1 verification failure, 2 usage/validation error
constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

int cmd_invariants(long long p, const std::vector<long long>& weights,
                   std::optional<long long> cls, const std::string& format) {
    LensSpace lens(p, weights);
    if (cls) {
        ClassInvariants inv = class_invariants(lens, lens.homotopy_class(*cls));
        if (format == "json") {
            json out = to_json(inv, lens.p());
            out["chern_order"] = lens.chern_order();
            std::cout << out.dump() << "\n";
        } else {
            std::cout << invariants_table_text(lens);
        }
        return kOk;
    }
    if (format == "json")
        std::cout << invariants_table_json(lens).dump() << "\n";
    else
        std::cout << invariants_table_text(lens);
    return kOk;
}

int cmd_bott(long long p, const std::vector<long long>& weights, long long cls,
             const std::optional<std::string>& eps, const std::string& format) {
    LensSpace lens(p, weights);
    HomotopyClass a = lens.homotopy_class(cls);
    RotationPath path = eps ? twist_ga_eps(lens, a, Rational::parse(*eps)) : twist_ga(lens, a);
    BottFunction bott = BottFunction::from_path(path);
    const long long N = lens.chern_order();
    if (format == "svg")
        std::cout << bott_svg(bott, N);
    else
        std::cout << bott_csv(bott, N);
    return kOk;
}

int cmd_esh(int n, long long p, long long cls, std::optional<long long> kmax,
            std::optional<std::string> action, std::optional<std::string> scale) {
    GradedRanks table;
    if (action) {
        if (cls != 1)
            throw error(errc::bad_params, "action filtering is defined for --class 1");
        Rational t = scale ? Rational::parse(*scale) : Rational(1);
        table = filtered_ranks(n, p, t, Rational::parse(*action));
    } else {
        table = graded_ranks(n, p, cls, kmax.value_or(3));
    }
    json out = to_json(table);
    LensSpace lens(p, std::vector<long long>(size_t(n) + 1, 1));
    Rational ka = k_a(lens, lens.homotopy_class(cls));
    out["k_a"] = ka.str();
    if (table.ranks.empty()) {
        out["min_degree"] = nullptr;
        out["k_a_match"] = false;
    } else {
        Rational lowest = min_degree(table);
        out["min_degree"] = lowest.str();
        out["k_a_match"] = lowest == ka;
    }
    std::cout << out.dump() << "\n";
    return kOk;
}

int cmd_verify(const std::string& suite, bool json_lines) {
    auto checks = verify::run_suite(suite);
    bool ok = true;
    for (const auto& c : checks) {
        if (json_lines) {
            json line = {{"check", c.name}, {"pass", c.pass}};
            if (!c.detail.empty()) line["detail"] = c.detail;
            std::cout << line.dump() << "\n";
        } else {
            std::cout << (c.pass ? "ok   " : "FAIL ") << c.name;
            if (!c.pass && !c.detail.empty()) std::cout << "  [" << c.detail << "]";
            std::cout << "\n";
        }
        if (!c.pass && ok) {
            ok = false;
            if (!json_lines) std::cerr << "first failing check: " << c.name << "\n";
        }
    }
    return ok ? kOk : kVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of lens-space Reeb flows: class thresholds, "
                 "Conley-Zehnder indices, Bott functions and rank tables"};
    app.require_subcommand(1);

    // invariants
    auto* inv = app.add_subcommand("invariants", "Per-class invariant table (k_a, h_a, ...)");
    long long inv_p = 0;
    std::vector<long long> inv_weights;
    std::optional<long long> inv_class;
    std::string inv_format = "text";
    inv->add_option("p", inv_p, "Order of the cyclic group")->required();
    inv->add_option("weights", inv_weights, "Weights l_0 ... l_n")->required()->expected(-1);
    inv->add_option("--class", inv_class, "Restrict to one class j in {1,...,p}");
    inv->add_option("--format", inv_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // bott
    auto* bott = app.add_subcommand("bott", "Bott function of the correction path, scaled by 1/N");
    long long bott_p = 0, bott_class = 0;
    std::vector<long long> bott_weights;
    std::optional<std::string> bott_eps;
    std::string bott_format = "csv";
    bott->add_option("p", bott_p, "Order of the cyclic group")->required();
    bott->add_option("weights", bott_weights, "Weights l_0 ... l_n")->required()->expected(-1);
    bott->add_option("--class", bott_class, "Class j in {1,...,p-1}")->required();
    bott->add_option("--eps", bott_eps, "Perturbation parameter, e.g. 1/100");
    bott->add_option("--format", bott_format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));

    // esh
    auto* esh = app.add_subcommand("esh", "Equivariant homology rank table on round weights");
    int esh_n = 0;
    long long esh_p = 0, esh_class = 1;
    std::optional<long long> esh_kmax;
    std::optional<std::string> esh_action, esh_scale;
    esh->add_option("n", esh_n, "Dimension parameter (space dimension 2n+1)")->required();
    esh->add_option("p", esh_p, "Order of the cyclic group")->required();
    esh->add_option("--class", esh_class, "Class j (default 1)");
    esh->add_option("--kmax", esh_kmax, "Truncation of the iterate sum");
    esh->add_option("--action", esh_action, "Action bound as a coefficient of pi");
    esh->add_option("--scale", esh_scale, "Contact-form scale t (default 1)");
    std::string esh_format = "json";
    esh->add_option("--format", esh_format, "json")->check(CLI::IsMember({"json"}));

    // verify
    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    bool ver_json = false;
    ver->add_option("suite", suite, "examples|sharpness|counterexamples|properties|all")
        ->required();
    ver->add_flag("--json", ver_json, "One JSON line per check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (inv->parsed()) return cmd_invariants(inv_p, inv_weights, inv_class, inv_format);
        if (bott->parsed()) return cmd_bott(bott_p, bott_weights, bott_class, bott_eps, bott_format);
        if (esh->parsed()) return cmd_esh(esh_n, esh_p, esh_class, esh_kmax, esh_action, esh_scale);
        if (ver->parsed()) return cmd_verify(suite, ver_json);
    } catch (const reeblens::error& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
