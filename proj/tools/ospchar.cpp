#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ospchar/errors.hpp"
#include "ospchar/json_io.hpp"

namespace {

using namespace ospchar;

bool color_enabled() {
    const char* v = std::getenv("OSPCHAR_COLOR");
    return v != nullptr && std::string(v) != "0" && std::string(v) != "";
}

void diagnose(const std::string& kind, const std::string& message) {
    if (color_enabled())
        std::cerr << "\033[31m" << kind << ":\033[0m " << message << "\n";
    else
        std::cerr << kind << ": " << message << "\n";
}

Signature make_sig(int m, int n) {
    Signature sig{m, n};
    sig.validate();
    return sig;
}

int run_roots(int m, int n, const std::string& weight_text) {
    const Signature sig = make_sig(m, n);
    const Weight w = parse_weight(weight_text, sig);
    validate_dominant(w);
    const CharRoots roots = characteristic_roots(w);
    Json j;
    j["schema"] = "ospchar/roots/1";
    j["signature"] = signature_json(sig);
    j["weight"] = weight_json(w);
    j["alpha_even"] = roots_json(roots)["alpha_even"];
    j["alpha_odd"] = roots_json(roots)["alpha_odd"];
    j["degenerate_pairs"] = degeneracy_json(degeneracy_report(roots));
    std::cout << dump_json(j);
    return 0;
}

int run_rho(int m, int n, const std::string& convention) {
    const Signature sig = make_sig(m, n);
    const Convention conv =
        convention == "distinguished" ? Convention::Distinguished : Convention::Canonical;
    Json j;
    j["schema"] = "ospchar/rho/1";
    j["signature"] = signature_json(sig);
    j["convention"] = convention;
    j["rho"] = weight_json(rho(sig, conv));
    std::cout << dump_json(j);
    return 0;
}

int run_casimir(int m, int n, const std::string& weight_text, const std::string& convention) {
    const Signature sig = make_sig(m, n);
    const Weight w = parse_weight(weight_text, sig);
    const Convention conv =
        convention == "distinguished" ? Convention::Distinguished : Convention::Canonical;
    // Dominance rules are convention-specific; only the canonical ones are
    // implemented, so distinguished labels pass through unchecked.
    if (conv == Convention::Canonical) validate_dominant(w);
    Json j;
    j["schema"] = "ospchar/casimir/1";
    j["signature"] = signature_json(sig);
    j["convention"] = convention;
    j["weight"] = weight_json(w);
    j["eigenvalue"] = casimir_eigenvalue(w, conv).to_string();
    std::cout << dump_json(j);
    return 0;
}

int run_branch(int m, int n, const std::string& weight_text) {
    const Signature parent_sig = make_sig(m, n);
    if (parent_sig.m < 1)
        throw DomainError("branch: the parent needs an even index to remove");
    const Weight pw = parse_weight(weight_text, parent_sig);
    const Signature child_sig{parent_sig.m - 1, parent_sig.n};
    Json j;
    j["schema"] = "ospchar/branch/1";
    j["parent_signature"] = signature_json(parent_sig);
    j["parent_weight"] = weight_json(pw);
    j["child_signature"] = signature_json(child_sig);
    Json children = Json::array();
    for (const Weight& cw : branch_enumerate(pw, child_sig))
        children.push_back(branch_child_json(index_sets(pw, cw)));
    j["children"] = children;
    std::cout << dump_json(j);
    return 0;
}

int run_invariants(int m, int n, const std::string& parent_text, const std::string& child_text,
                   bool limit) {
    const Signature parent_sig = make_sig(m, n);
    if (parent_sig.m < 1)
        throw DomainError("invariants: the parent needs an even index to remove");
    const Signature child_sig{parent_sig.m - 1, parent_sig.n};
    const Weight pw = parse_weight(parent_text, parent_sig);
    const Weight cw = parse_weight(child_text, child_sig);
    const BranchContext ctx = index_sets(pw, cw);
    Json j;
    j["schema"] = "ospchar/invariants/1";
    j["parent_signature"] = signature_json(parent_sig);
    j["parent_weight"] = weight_json(pw);
    j["child_weight"] = weight_json(cw);
    j["mode"] = limit ? "limit" : "direct";
    {
        Json annotated = branch_child_json(ctx);
        Json sets;
        sets["I0"] = annotated["I0"];
        sets["I1"] = annotated["I1"];
        sets["I1bar"] = annotated["I1bar"];
        sets["Itilde"] = annotated["Itilde"];
        j["index_sets"] = sets;
    }
    if (!limit) {
        j.update(invariant_table_json(invariant_table(ctx)));
        std::cout << dump_json(j);
        return 0;
    }
    const Weight eta = canonical_direction(parent_sig);
    InvariantTable table;
    Json poles = Json::array();
    auto eval = [&ctx, &eta, &poles](InvariantKind kind, const CIdx& first, const CIdx& second,
                                     const std::string& label) -> std::pair<bool, Rat> {
        try {
            return {true, evaluate_with_limit(InvariantSelector{kind, first, second}, ctx, eta)};
        } catch (const PoleError& err) {
            Json e;
            e["entry"] = label;
            e["error"] = err.what();
            poles.push_back(std::move(e));
        } catch (const DegenerateDirection& err) {
            Json e;
            e["entry"] = label;
            e["error"] = err.what();
            poles.push_back(std::move(e));
        }
        return {false, Rat(0)};
    };
    for (const CIdx& q : ctx.Itilde) {
        auto [ok, v] = eval(InvariantKind::C, q, CIdx::zero(), "C[" + q.to_string() + "]");
        if (ok) table.C[q] = v;
    }
    for (const Gi& p : ctx.I) {
        auto [ok, v] = eval(InvariantKind::GammaP, CIdx::of(p), CIdx::zero(),
                            "gamma[" + p.to_string() + "]");
        if (ok) table.gamma[p] = v;
        for (const CIdx& s : ctx.Itilde) {
            auto [oks, vs] = eval(InvariantKind::GammaPS, CIdx::of(p), s,
                                  "gamma_s[" + p.to_string() + "," + s.to_string() + "]");
            if (oks) table.gamma_s[{p, s}] = vs;
        }
        auto [okm, vm] =
            eval(InvariantKind::Mu, CIdx::of(p), CIdx::zero(), "mu[" + p.to_string() + "]");
        if (okm) table.mu[p] = vm;
    }
    for (const CIdx& s : ctx.Itilde)
        for (const Gi& t : ctx.I) {
            auto [ok, v] = eval(InvariantKind::Omega, s, CIdx::of(t),
                                "omega[" + s.to_string() + "," + t.to_string() + "]");
            if (ok) table.omega[{s, t}] = v;
        }
    j.update(invariant_table_json(table));
    j["poles"] = poles;
    std::cout << dump_json(j);
    return 0;
}

int run_matrep(int m, int n, const std::string& basis) {
    const Signature sig = make_sig(m, n);
    Json j;
    j["schema"] = "ospchar/matrep/1";
    j["signature"] = signature_json(sig);
    j["basis"] = basis;
    j["dim"] = sig.dim();
    Json gens = Json::object();
    if (basis == "racah") {
        const Realization rep = defining_realization(sig);
        for (const Gi& p : all_indices(sig)) {
            Json row = Json::object();
            for (const Gi& q : all_indices(sig)) row[q.to_string()] = rat_matrix_json(rep.gen(p, q));
            gens[p.to_string()] = std::move(row);
        }
    } else {
        for (const Gi& p : all_indices(sig)) {
            Json row = Json::object();
            for (const Gi& q : all_indices(sig))
                row[q.to_string()] = ext_matrix_json(cw_generator(p, q, sig));
            gens[p.to_string()] = std::move(row);
        }
    }
    j["generators"] = gens;
    std::cout << dump_json(j);
    return 0;
}

int run_verify(int m, int n, const std::string& suite) {
    const Signature sig = make_sig(m, n);
    std::vector<SuiteCheck> checks;
    if (suite == "all") {
        checks = structure_suite(sig);
        if (sig.m >= 1) {
            const std::vector<SuiteCheck> extra = oracle_suite(sig);
            checks.insert(checks.end(), extra.begin(), extra.end());
        }
    } else {
        checks = oracle_suite(sig);
    }
    Json j;
    j["schema"] = "ospchar/verify/1";
    j["signature"] = signature_json(sig);
    j["suite"] = suite;
    j["checks"] = suite_json(checks);
    bool all = true;
    for (const SuiteCheck& c : checks) all = all && c.pass;
    j["pass"] = all;
    std::cout << dump_json(j);
    return all ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for osp(m|n) characteristic identities"};
    app.require_subcommand(1);

    int m = 0, n = 2;
    std::string weight_text, parent_text, child_text;
    std::string convention = "canonical", basis = "racah", suite = "all";
    bool limit = false;

    auto add_sig = [&](CLI::App* cmd) {
        cmd->add_option("--m", m, "even dimension m")->required();
        cmd->add_option("--n", n, "odd dimension n")->required();
    };

    CLI::App* roots_cmd = app.add_subcommand("roots", "characteristic roots of a weight");
    add_sig(roots_cmd);
    roots_cmd->add_option("--weight", weight_text, "weight, 'even:a,..;odd:b,..'")->required();

    CLI::App* rho_cmd = app.add_subcommand("rho", "half-sum weight");
    add_sig(rho_cmd);
    rho_cmd->add_option("--convention", convention, "canonical|distinguished")
        ->check(CLI::IsMember({"canonical", "distinguished"}));

    CLI::App* casimir_cmd = app.add_subcommand("casimir", "quadratic Casimir eigenvalue");
    add_sig(casimir_cmd);
    casimir_cmd->add_option("--weight", weight_text, "weight, 'even:a,..;odd:b,..'")->required();
    casimir_cmd->add_option("--convention", convention, "canonical|distinguished")
        ->check(CLI::IsMember({"canonical", "distinguished"}));

    CLI::App* branch_cmd =
        app.add_subcommand("branch", "admissible osp(m-1|n) constituents of a parent weight");
    add_sig(branch_cmd);
    branch_cmd->add_option("--weight", weight_text, "parent weight")->required();

    CLI::App* inv_cmd =
        app.add_subcommand("invariants", "containment invariants of a branching pair");
    add_sig(inv_cmd);
    inv_cmd->add_option("--parent-weight", parent_text, "osp(m|n) weight")->required();
    inv_cmd->add_option("--child-weight", child_text, "osp(m-1|n) weight")->required();
    inv_cmd->add_flag("--limit", limit, "evaluate along the canonical deformation direction");

    CLI::App* matrep_cmd = app.add_subcommand("matrep", "defining-module generator matrices");
    add_sig(matrep_cmd);
    matrep_cmd->add_option("--basis", basis, "racah|cartan-weyl")
        ->check(CLI::IsMember({"racah", "cartan-weyl"}));

    CLI::App* verify_cmd = app.add_subcommand("verify", "exact identity suites");
    add_sig(verify_cmd);
    verify_cmd->add_option("--suite", suite, "all|oracle")
        ->check(CLI::IsMember({"all", "oracle"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (roots_cmd->parsed()) return run_roots(m, n, weight_text);
        if (rho_cmd->parsed()) return run_rho(m, n, convention);
        if (casimir_cmd->parsed()) return run_casimir(m, n, weight_text, convention);
        if (branch_cmd->parsed()) return run_branch(m, n, weight_text);
        if (inv_cmd->parsed()) return run_invariants(m, n, parent_text, child_text, limit);
        if (matrep_cmd->parsed()) return run_matrep(m, n, basis);
        if (verify_cmd->parsed()) return run_verify(m, n, suite);
    } catch (const PoleError& e) {
        diagnose("pole", e.what());
        return 2;
    } catch (const DegenerateDirection& e) {
        diagnose("degenerate direction", e.what());
        return 2;
    } catch (const SingularSystem& e) {
        diagnose("singular system", e.what());
        return 2;
    } catch (const DomainError& e) {
        diagnose("domain error", e.what());
        return 2;
    }
    return 1;
}
