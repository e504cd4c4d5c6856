#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "brachy/brachynomial.hpp"
#include "brachy/builtins.hpp"
#include "brachy/certify.hpp"
#include "brachy/errors.hpp"
#include "brachy/finstruct.hpp"
#include "brachy/formula_check.hpp"
#include "brachy/identities.hpp"
#include "brachy/matrixlab.hpp"
#include "brachy/modelsearch.hpp"
#include "brachy/morphism.hpp"
#include "brachy/parallel.hpp"
#include "brachy/report.hpp"
#include "brachy/ringzoo.hpp"

namespace {

using namespace brachy;

std::string join_pairs(const std::vector<std::pair<int, int>>& ps, size_t cap) {
    std::ostringstream os;
    for (size_t i = 0; i < ps.size() && i < cap; ++i)
        os << (i ? " " : "") << "(" << ps[i].first << "," << ps[i].second << ")";
    if (ps.size() > cap) os << " ...";
    return os.str();
}

std::string map_str(const std::vector<int>& m) {
    std::ostringstream os;
    for (size_t i = 0; i < m.size(); ++i) os << (i ? " " : "") << m[i];
    return os.str();
}

std::vector<std::pair<std::string, FiniteStruct>> load_battery(
    const std::string& dir) {
    if (dir.empty()) return default_battery();
    std::vector<std::pair<std::string, FiniteStruct>> battery;
    std::vector<std::string> paths;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".struct") paths.push_back(e.path().string());
    std::sort(paths.begin(), paths.end());
    if (paths.empty()) throw UsageError("battery directory has no .struct files");
    for (const auto& p : paths)
        battery.emplace_back(std::filesystem::path(p).stem().string(),
                             read_struct_file(p));
    return battery;
}

int cmd_identities(Report& rep, const std::string& only,
                   const std::string& file) {
    std::vector<IdentityCase> cases = builtin_identities();
    if (!file.empty()) {
        auto extra = load_identity_file(file);
        cases.insert(cases.end(), extra.begin(), extra.end());
    }
    int failed = 0, ran = 0;
    for (const auto& c : cases) {
        if (!only.empty() && c.name != only) continue;
        ++ran;
        IdentityReport r = verify_identity(c);
        rep.kv("case " + r.name, r.holds ? "pass" : "FAIL");
        if (!r.holds) {
            rep.kv("  difference", to_string(r.difference));
            ++failed;
        }
    }
    if (!only.empty() && ran == 0) throw UsageError("no case named " + only);
    rep.kv("cases", ran);
    rep.kv("failed", failed);
    return failed ? 1 : 0;
}

int cmd_weyl(Report& rep, int m) {
    WeylReport r = weyl_check(m);
    rep.kv("m", r.m);
    rep.kv("normal_form", to_string(r.normal_form));
    rep.kv("char0", r.char0_ok ? "pass" : "FAIL");
    rep.kv("mod_m", r.modm_ok ? "pass" : "FAIL");
    return r.char0_ok && r.modm_ok ? 0 : 1;
}

int cmd_check(Report& rep, const std::string& path) {
    FiniteStruct S = read_struct_file(path);
    const Classification& c = S.cls();
    rep.kv("order", S.order());
    rep.kv("zero", S.zero());
    rep.kv("one", S.one());
    auto flag = [&](const char* k, bool v) { rep.kv(k, v ? "yes" : "no"); };
    flag("is_ring", c.is_ring);
    flag("is_commutative_ring", c.is_commutative_ring);
    flag("is_commutative_semiring", c.is_commutative_semiring);
    flag("is_cancellative_semiring", c.is_cancellative_semiring);
    flag("is_right_nearring", c.is_right_nearring);
    flag("add_commutative", c.add_commutative);
    flag("mul_zero_absorbs", c.mul_zero_absorbs);
    flag("left_distributive", c.left_distributive);
    flag("right_distributive", c.right_distributive);
    for (const auto& p : element_profile(S)) {
        std::ostringstream os;
        os << "unit=" << (p.is_unit ? "yes" : "no");
        if (p.is_unit) os << " inverse=" << p.inverse;
        os << " regular=" << (p.is_regular ? "yes" : "no");
        if (p.is_regular) os << " quasi_inverse=" << p.quasi_inverse;
        os << " idempotent=" << (p.is_idempotent ? "yes" : "no");
        os << " nilpotency_index=" << p.nilpotency_index;
        os << " pi_regular_k=" << p.pi_regular_k;
        os << " central=" << (p.is_central ? "yes" : "no");
        rep.kv("element " + std::to_string(p.element) + " (" +
                   S.label(p.element) + ")",
               os.str());
    }
    if (c.is_ring) {
        auto rad = jacobson_radical(S);
        std::ostringstream os;
        for (size_t i = 0; i < rad.size(); ++i) os << (i ? " " : "") << rad[i];
        rep.kv("jacobson_radical", os.str());
    }
    return 0;
}

int cmd_build(Report& rep, const std::string& expr, const std::string& out) {
    FiniteStruct S = build_zoo(expr);
    rep.kv("spec", expr);
    rep.kv("order", S.order());
    rep.kv("is_ring", S.cls().is_ring ? "yes" : "no");
    if (!out.empty()) {
        write_struct_file(out, S);
        rep.kv("written", out);
    }
    return 0;
}

int cmd_morphisms(Report& rep, const std::string& src, const std::string& dst,
                  long long budget) {
    FiniteStruct R = read_struct_file(src);
    FiniteStruct S = read_struct_file(dst);
    EnumConfig cfg;
    if (budget > 0) cfg.node_budget = budget;
    EnumResult res = enumerate_brachymorphisms(R, S, cfg);
    rep.kv("morphisms", res.morphisms.size());
    int idx = 0;
    long long total_violations = 0;
    for (const auto& m : res.morphisms) {
        rep.kv("morphism " + std::to_string(idx), map_str(m.map));
        rep.kv("  additive", m.is_additive ? "yes" : "no");
        if (!m.violations.empty())
            rep.kv("  violations", join_pairs(m.violations, 8));
        total_violations += (long long)m.violations.size();
        ++idx;
    }
    rep.kv("total_violations", total_violations);
    rep.stat("nodes", res.nodes);
    if (res.budget_exhausted) {
        rep.kv("budget_exhausted", "yes");
        return 3;
    }
    return 0;
}

int cmd_certify(Report& rep, const std::string& path, bool pairs) {
    FiniteStruct R = read_struct_file(path);
    if (!pairs) {
        AddCertification cert = certify_addable(R);
        int count = 0;
        for (bool b : cert.certified) count += b;
        rep.kv("certified_addable", count);
        rep.kv("order", R.order());
        for (const auto& c : cert.certs) {
            std::ostringstream os;
            os << "rule " << rule_name(c.rule);
            if (!c.premises.empty()) {
                os << " premises";
                for (int p : c.premises) os << " " << p;
            }
            rep.kv("element " + std::to_string(c.element), os.str());
        }
        for (const auto& [rule, n] : cert.fired)
            rep.kv("fired " + rule, n);
        rep.kv("replay", replay_all(R, cert) ? "pass" : "FAIL");
        return replay_all(R, cert) ? 0 : 1;
    }
    PairCertification cert = certify_summable_pairs(R);
    long long count = 0;
    for (bool b : cert.certified) count += b;
    rep.kv("certified_pairs", count);
    rep.kv("total_pairs", (long long)R.order() * R.order());
    for (const auto& [rule, n] : cert.fired)
        rep.kv("fired " + rule, n);
    rep.kv("replay", replay_all(R, cert) ? "pass" : "FAIL");
    return replay_all(R, cert) ? 0 : 1;
}

int cmd_formula(Report& rep, const std::string& name, const std::string& path,
                const std::string& tuple_text, const std::string& battery_dir) {
    const NamedFormula& phi = builtin_formula(name);
    FiniteStruct R = read_struct_file(path);
    std::vector<int> tuple;
    std::istringstream ts(tuple_text);
    std::string tok;
    while (std::getline(ts, tok, ',')) tuple.push_back(std::stoi(tok));
    auto battery = load_battery(battery_dir);
    FormulaCheckReport r = check_summability_formula(phi, R, tuple, battery);
    rep.kv("formula", r.formula_name);
    rep.kv("formula_text", to_string(phi.formula));
    rep.kv("condition_ii", r.cond_ii ? "pass" : "FAIL");
    rep.kv("condition_i_on_battery", r.cond_i ? "pass" : "FAIL");
    if (!r.battery_failure.empty()) rep.kv("failure", r.battery_failure);
    rep.kv("note", r.note);
    return r.cond_ii && r.cond_i ? 0 : 1;
}

int cmd_search(Report& rep, const std::string& cls_name, int order,
               long long budget, double time_budget, int jobs) {
    SearchTask task;
    if (cls_name == "semiring") task.cls = StructClass::CommutativeSemiring;
    else if (cls_name == "nearring") task.cls = StructClass::RightNearring;
    else throw UsageError("search class must be semiring or nearring");
    task.order = order;
    if (budget > 0) task.node_budget = budget;
    if (time_budget > 0) task.time_budget_s = time_budget;
    task.jobs = jobs;
    SearchResult res = search_counterexample(task);
    rep.kv("class", cls_name);
    rep.kv("order", order);
    rep.kv("found", res.found.size());
    rep.kv("exhaustive", res.exhaustive ? "yes" : "no");
    int idx = 0;
    for (const auto& f : res.found) {
        std::ostringstream os;
        write_struct(os, f.structure);
        rep.line("structure " + std::to_string(idx));
        std::istringstream is(os.str());
        std::string line;
        while (std::getline(is, line)) rep.line("  " + line);
        rep.kv("witness " + std::to_string(idx), map_str(f.witness));
        rep.kv("violations " + std::to_string(idx), join_pairs(f.violations, 8));
        ++idx;
    }
    rep.stat("nodes", res.stats.nodes);
    rep.stat("prunes", res.stats.prunes);
    rep.stat("structures_examined", res.stats.structures);
    rep.stat("wall_ms", res.stats.wall_ms);
    return res.budget_exhausted ? 3 : 0;
}

int cmd_fixture(Report& rep, const std::string& name, const std::string& dir) {
    FixtureReport r = verify_fixture(name, dir);
    rep.kv("fixture", r.name);
    for (const auto& l : r.lines) rep.line(l);
    rep.kv("result", r.pass ? "pass" : "FAIL");
    return r.pass ? 0 : 1;
}

int cmd_matrix(Report& rep, int nmax) {
    auto reports = verify_matrix_suite(nmax);
    int failed = 0;
    for (const auto& r : reports) {
        rep.kv("case " + r.name,
               std::string(r.holds ? "pass" : "FAIL") +
                   (r.detail.empty() ? "" : " (" + r.detail + ")"));
        failed += !r.holds;
    }
    rep.kv("cases", reports.size());
    rep.kv("failed", failed);
    return failed ? 1 : 0;
}

int cmd_detaudit(Report& rep, const std::string& path) {
    DetAuditSpec spec = load_detaudit_spec(path);
    DetAuditReport r = det_brachy_audit(spec);
    rep.kv("ring", spec.ring_expr);
    rep.kv("n", spec.n);
    rep.kv("subring_order", r.subring_order);
    rep.kv("contains_identity", r.contains_identity ? "yes" : "no");
    rep.kv("premise_det_succ", r.premise_holds ? "holds" : "violated");
    if (!r.premise_holds) rep.kv("premise_counterexample", r.premise_counterexample);
    if (r.conclusion_checked)
        rep.kv("conclusion_det_additive", r.conclusion_holds ? "holds" : "FAIL");
    rep.kv("scalar_condition", r.scalar_condition ? "yes" : "no");
    if (r.scalar_condition) {
        std::ostringstream os;
        for (size_t i = 0; i < r.scalars_used.size(); ++i)
            os << (i ? " " : "") << r.scalars_used[i];
        rep.kv("scalars", os.str());
        if (r.premise_holds)
            rep.kv("powers_central", r.powers_central ? "holds" : "FAIL");
    }
    bool failed = (r.conclusion_checked && !r.conclusion_holds) ||
                  (r.premise_holds && r.scalar_condition && !r.powers_central);
    return failed ? 1 : 0;
}

int cmd_brachynomial(Report& rep, const std::string& text) {
    NCPoly p = parse_ncpoly(text);
    rep.kv("polynomial", to_string(p));
    auto w = decide_brachynomial(p);
    if (w) {
        rep.kv("verdict", "brachynomial");
        rep.kv("witness", to_string(w->term));
        rep.kv("witness_expands", to_string(w->expansion));
    } else {
        rep.kv("verdict", "not a brachynomial");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"brachymorphism workbench"};
    app.require_subcommand(1);
    std::string report_path;
    int jobs = 0;
    app.add_option("--report", report_path, "also write the report to a file");
    app.add_option("--jobs", jobs, "worker count for parallel subcommands");

    auto* c_id = app.add_subcommand("identities", "verify the identity battery");
    std::string id_case, id_file;
    c_id->add_option("--case", id_case, "run a single named case");
    c_id->add_option("--file", id_file, "additional identity-case file");

    auto* c_weyl = app.add_subcommand("weyl", "central-power normal form checks");
    int weyl_m = 2;
    c_weyl->add_option("--m", weyl_m, "exponent (>= 2)")->required();

    auto* c_check = app.add_subcommand("check", "classify a structure file");
    std::string check_path;
    c_check->add_option("path", check_path, "structure file")->required();

    auto* c_build = app.add_subcommand("build", "build a zoo structure");
    std::string build_spec, build_out;
    c_build->add_option("--spec", build_spec, "constructor expression")->required();
    c_build->add_option("--out", build_out, "write the structure file here");

    auto* c_mor = app.add_subcommand("morphisms", "enumerate brachymorphisms");
    std::string mor_src, mor_dst;
    long long mor_budget = 0;
    c_mor->add_option("src", mor_src, "source structure file")->required();
    c_mor->add_option("dst", mor_dst, "target structure file")->required();
    c_mor->add_option("--budget", mor_budget, "node budget");

    auto* c_cert = app.add_subcommand("certify", "certify addable elements");
    std::string cert_path;
    bool cert_pairs = false;
    c_cert->add_option("path", cert_path, "structure file")->required();
    c_cert->add_flag("--pairs", cert_pairs, "certify summable pairs instead");

    auto* c_form = app.add_subcommand("formula", "check a summability formula");
    std::string form_name, form_struct, form_tuple, form_battery;
    c_form->add_option("--name", form_name, "S_perp | S_comm | S_div")->required();
    c_form->add_option("--struct", form_struct, "structure file")->required();
    c_form->add_option("--tuple", form_tuple, "comma-separated tuple")->required();
    c_form->add_option("--battery", form_battery, "battery directory");

    auto* c_search = app.add_subcommand("search", "finite model search");
    std::string search_class;
    int search_order = 4, search_jobs = 0;
    long long search_budget = 0;
    double search_time = 0;
    c_search->add_option("--class", search_class, "semiring | nearring")->required();
    c_search->add_option("--order", search_order, "carrier size")->required();
    c_search->add_option("--budget", search_budget, "node budget");
    c_search->add_option("--time", search_time, "time budget in seconds");
    c_search->add_option("--jobs", search_jobs, "worker count");

    auto* c_fix = app.add_subcommand("fixture", "verify a pinned fixture");
    std::string fix_name, fix_dir = "fixtures";
    c_fix->add_option("name", fix_name, "table1 | table2")->required();
    c_fix->add_option("--dir", fix_dir, "fixture directory (default fixtures)");

    auto* c_mat = app.add_subcommand("matrix", "symbolic matrix identity suite");
    int mat_nmax = 4;
    c_mat->add_option("--nmax", mat_nmax, "largest order (<= 4)")->required();

    auto* c_det = app.add_subcommand("detaudit", "determinant brachymorphism audit");
    std::string det_spec;
    c_det->add_option("--spec", det_spec, "audit spec file")->required();

    auto* c_brachy = app.add_subcommand("brachynomial", "decide brachynomial-hood");
    std::string brachy_poly;
    c_brachy->add_option("--poly", brachy_poly, "polynomial text")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    set_jobs(jobs);
    Report rep(report_path);
    try {
        if (*c_id) return cmd_identities(rep, id_case, id_file);
        if (*c_weyl) return cmd_weyl(rep, weyl_m);
        if (*c_check) return cmd_check(rep, check_path);
        if (*c_build) return cmd_build(rep, build_spec, build_out);
        if (*c_mor) return cmd_morphisms(rep, mor_src, mor_dst, mor_budget);
        if (*c_cert) return cmd_certify(rep, cert_path, cert_pairs);
        if (*c_form)
            return cmd_formula(rep, form_name, form_struct, form_tuple,
                               form_battery);
        if (*c_search)
            return cmd_search(rep, search_class, search_order, search_budget,
                              search_time, search_jobs ? search_jobs : jobs);
        if (*c_fix) return cmd_fixture(rep, fix_name, fix_dir);
        if (*c_mat) return cmd_matrix(rep, mat_nmax);
        if (*c_det) return cmd_detaudit(rep, det_spec);
        if (*c_brachy) return cmd_brachynomial(rep, brachy_poly);
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
