#pragma once

#include <algorithm>
#include <chrono>
#include <future>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "liepois/io.hpp"
#include "liepois/poisson.hpp"
#include "liepois/random.hpp"

namespace liepois {

struct RunConfig {
    std::string algebra = "sl2";
    int degree = 4;
    std::vector<Rational> nu_values;
    std::vector<std::string> checks;  // empty = all
    uint64_t seed = 1;
    bool trace = false;
    int max_degree = 6;

    static const std::vector<std::string>& known_checks() {
        static const std::vector<std::string> k = {"cyb",   "cdybe", "solve", "pushforward",
                                                   "gauge", "fm",    "lemma1"};
        return k;
    }
};

struct CheckResult {
    std::string name;
    std::string status;  // pass | fail | unsupported | error
    std::string detail;
    nlohmann::json data = nlohmann::json::object();
    double seconds = 0.0;
};

struct Certificate {
    std::string version = "1";
    RunConfig config;
    std::vector<CheckResult> results;

    bool all_pass() const {
        for (const auto& r : results)
            if (r.status != "pass") return false;
        return !results.empty();
    }

    // deterministic structured output; wall-clock timings only when traced
    nlohmann::json to_json() const {
        nlohmann::json j;
        j["version"] = version;
        nlohmann::json cfg;
        cfg["algebra"] = config.algebra;
        cfg["degree"] = config.degree;
        nlohmann::json nus = nlohmann::json::array();
        for (const auto& n : config.nu_values) nus.push_back(n.to_string());
        cfg["nu"] = nus;
        cfg["checks"] = config.checks;
        cfg["seed"] = config.seed;
        j["config"] = cfg;
        nlohmann::json res = nlohmann::json::array();
        for (const auto& r : results) {
            nlohmann::json e;
            e["name"] = r.name;
            e["status"] = r.status;
            e["detail"] = r.detail;
            e["data"] = r.data;
            res.push_back(e);
        }
        j["results"] = res;
        nlohmann::json timings = nlohmann::json::object();
        if (config.trace)
            for (const auto& r : results) timings[r.name] = r.seconds;
        j["timings"] = timings;
        return j;
    }

    std::string to_text() const {
        std::ostringstream os;
        os << "algebra=" << config.algebra << " degree=" << config.degree
           << " seed=" << config.seed << "\n";
        for (const auto& r : results) {
            os << "[" << (r.status == "pass" ? "PASS" : (r.status == "fail" ? "FAIL"
                                                                            : "SKIP"))
               << "] " << r.name;
            if (!r.detail.empty()) os << ": " << r.detail;
            char buf[32];
            std::snprintf(buf, sizeof(buf), " (%.3fs)", r.seconds);
            os << buf << "\n";
        }
        os << (all_pass() ? "all checks passed" : "NOT all checks passed") << "\n";
        return os.str();
    }
};

namespace detail {

// everything a check needs, built once per check so checks can run concurrently
struct Engine {
    AlgebraBundle bundle;
    Quasitriangular qt;
    SeriesOps ops;
    GroupOps grp;
    GaugeOps gauge;
    RMatrixOps rmx;
    PoissonOps poisson;
    Linearizer lin;

    explicit Engine(const RunConfig& cfg)
        : bundle(load_algebra(cfg.algebra)),
          qt(bundle.algebra, bundle.r),
          ops(bundle.algebra),
          grp(ops),
          gauge(grp),
          rmx(qt, ops),
          poisson(qt, ops, grp, rmx),
          lin(qt, ops, grp, gauge, rmx) {}
};

inline nlohmann::json residual_summary(const TensorSeries& r) {
    nlohmann::json j;
    j["zero"] = r.is_zero();
    j["nonzero_terms"] = r.term_count();
    if (!r.is_zero()) {
        j["min_degree"] = r.min_degree();
        const auto& [k, c] = *r.terms().begin();
        j["witness_coefficient"] = c.to_string();
    }
    return j;
}

inline CheckResult check_cyb(const RunConfig& cfg) {
    Engine e(cfg);
    CheckResult out{"cyb", "pass", "", {}, 0};
    auto rep = e.bundle.algebra.validate();
    if (!rep.ok) {
        out.status = "fail";
        out.detail = rep.message;
        return out;
    }
    auto qrep = e.qt.validate();
    if (!qrep.ok) {
        out.status = "fail";
        out.detail = qrep.message;
        return out;
    }
    out.detail = "Jacobi, CYB(r)=0, t invariant, L/R morphisms, dual bracket";
    out.data["factorizable"] = e.qt.factorizable();
    return out;
}

inline CheckResult check_cdybe(const RunConfig& cfg) {
    Engine e(cfg);
    CheckResult out{"cdybe", "pass", "", {}, 0};
    const int N = cfg.degree;
    TensorSeries rho = e.rmx.rho_am(N);
    Rational c = e.rmx.derive_z_constant(rho);
    TensorSeries Z = e.rmx.t12_t23(N).scaled(c);
    TensorSeries res = e.rmx.cdybe_residual(rho, Z);
    out.data["z_constant"] = c.to_string();
    out.data["residual"] = residual_summary(res);
    out.data["through_degree"] = N - 1;
    if (!res.is_zero()) {
        out.status = "fail";
        out.detail = "CDYBE residual nonzero";
    } else {
        out.detail = "Z = (" + c.to_string() + ")*[t12,t23], residual zero through degree " +
                     std::to_string(N - 1);
    }
    return out;
}

inline CheckResult check_solve(const RunConfig& cfg) {
    Engine e(cfg);
    CheckResult out{"solve", "pass", "", {}, 0};
    const int N = cfg.degree;
    SolveResult sol = e.lin.solve_g(N, cfg.max_degree);
    out.data["residual"] = residual_summary(sol.residual);
    TensorSeries lead = sol.g.A.pure_degree_part(1) - e.lin.initial_log(N).pure_degree_part(1);
    out.data["leading_term_is_minus_r_half"] = lead.is_zero();
    out.data["log_g"] = sol.g.A.to_string(e.bundle.algebra.labels());
    nlohmann::json tr = nlohmann::json::array();
    for (const auto& t : sol.trace) {
        nlohmann::json rec;
        rec["degree"] = t.degree;
        rec["residual_terms"] = t.residual_terms;
        rec["corrector_rank"] = t.corrector_rank;
        rec["corrector_nullity"] = t.corrector_nullity;
        tr.push_back(rec);
    }
    out.data["trace"] = tr;
    if (!sol.residual.is_zero() || !lead.is_zero()) {
        out.status = "fail";
        out.detail = "solver certificate nonzero";
    } else {
        out.detail = "twisted r0 matches the dynamical r-matrix through degree " +
                     std::to_string(N);
    }
    return out;
}

inline CheckResult check_pushforward(const RunConfig& cfg) {
    Engine e(cfg);
    CheckResult out{"pushforward", "pass", "", {}, 0};
    const int N = cfg.degree;
    if (!e.qt.factorizable()) {
        out.status = "unsupported";
        out.detail = "NotFactorizable: t is degenerate, b is not invertible";
        return out;
    }
    SolveResult sol = e.lin.solve_g(N, cfg.max_degree);
    auto residuals = e.poisson.pushforward_check(sol.g, N);
    nlohmann::json pairs = nlohmann::json::array();
    bool ok = true;
    for (const auto& pr : residuals) {
        nlohmann::json rec;
        rec["pair"] = {pr.xi, pr.eta};
        rec["residual"] = residual_summary(pr.residual);
        ok = ok && pr.residual.is_zero();
        pairs.push_back(rec);
    }
    out.data["pairs"] = pairs;
    out.data["through_degree"] = N - 1;
    if (!ok) {
        out.status = "fail";
        out.detail = "bracket pushforward residual nonzero";
    } else {
        out.detail = "all dual-pair residuals zero through degree " + std::to_string(N - 1);
    }
    return out;
}

inline CheckResult check_gauge(const RunConfig& cfg) {
    Engine e(cfg);
    CheckResult out{"gauge", "pass", "", {}, 0};
    const int N = cfg.degree;
    const int NA = N + 1;
    SolveResult sol = e.lin.solve_g(N, cfg.max_degree);
    TensorSeries target = e.rmx.rho_am(N);
    Rng rng(cfg.seed);
    const unsigned dim = e.bundle.algebra.dim();
    nlohmann::json elems = nlohmann::json::array();
    bool ok = true;
    for (int i = 0; i < 5; ++i) {
        TensorSeries f = rng.random_function(dim, 3, NA);
        while (f.is_zero()) f = rng.random_function(dim, 3, NA);
        HamElement alpha = e.gauge.exp_star(e.ops.differential(f));
        nlohmann::json rec;
        TensorSeries hres = e.gauge.ham_residual(alpha.element);
        rec["ham_residual"] = residual_summary(hres);
        GroupMap acted = e.gauge.act_on_solution(alpha, sol.g);
        TensorSeries stab = e.lin.twisted_r0(acted).with_truncation(N) - target;
        rec["gauge_stability"] = residual_summary(stab);
        FormalDiffeo lhs = e.grp.ad_star_diffeo(e.grp.star_product(alpha.element, sol.g));
        FormalDiffeo rhs = e.grp.compose_diffeo(e.grp.ad_star_diffeo(sol.g),
                                                e.grp.ad_star_diffeo(alpha.element));
        bool anti = true;
        for (unsigned v = 0; v < dim; ++v) anti = anti && (lhs.comps[v] == rhs.comps[v]);
        rec["theta_antihomomorphism"] = anti;
        bool this_ok = hres.is_zero() && stab.is_zero() && anti;
        if (e.qt.factorizable()) {
            TensorSeries eq = e.poisson.equivariance_check(alpha, sol.g, e.gauge);
            rec["equivariance"] = residual_summary(eq);
            this_ok = this_ok && eq.is_zero();
        } else {
            rec["equivariance"] = "skipped: NotFactorizable";
        }
        ok = ok && this_ok;
        elems.push_back(rec);
    }
    out.data["elements"] = elems;
    if (!ok) {
        out.status = "fail";
        out.detail = "gauge-suite residual nonzero";
    } else {
        out.detail = "5 seeded Hamiltonian elements: membership, stability, "
                     "equivariance, anti-homomorphism";
    }
    return out;
}

inline CheckResult check_fm(const RunConfig& cfg) {
    Engine e(cfg);
    CheckResult out{"fm", "pass", "", {}, 0};
    const int N = cfg.degree;
    if (cfg.nu_values.empty()) {
        out.status = "error";
        out.detail = "fm requested without --nu values";
        return out;
    }
    if (!e.qt.factorizable()) {
        out.status = "unsupported";
        out.detail = "NotFactorizable: t is degenerate";
        return out;
    }
    SolveResult sol = e.lin.solve_g(N, cfg.max_degree);
    nlohmann::json per_nu = nlohmann::json::array();
    bool ok = true;
    for (const auto& nu : cfg.nu_values) {
        TensorSeries res = e.poisson.fm_identity_check(sol.g, nu, N);
        nlohmann::json rec;
        rec["nu"] = nu.to_string();
        rec["residual"] = residual_summary(res);
        ok = ok && res.is_zero();
        per_nu.push_back(rec);
    }
    out.data["per_nu"] = per_nu;
    if (!ok) {
        out.status = "fail";
        out.detail = "dynamical r-matrix comparison residual nonzero";
    } else {
        out.detail = "identity holds for all requested nu";
    }
    return out;
}

inline CheckResult check_lemma1(const RunConfig& cfg) {
    Engine e(cfg);
    CheckResult out{"lemma1", "pass", "", {}, 0};
    const int N = cfg.degree;
    TensorSeries rho_inv = e.rmx.rho_am(N);
    Rational c = e.rmx.derive_z_constant(rho_inv);
    TensorSeries Z = e.rmx.t12_t23(N).scaled(c);
    SolveResult sol = e.lin.solve_g(N, cfg.max_degree);
    nlohmann::json stages = nlohmann::json::array();
    bool ok = true;
    for (size_t i = 0; i + 1 < sol.states.size() && i < 3; ++i) {
        const GroupMap& gn = sol.states[i];
        TensorSeries rho_n = e.lin.twisted_r0(gn).with_truncation(N);
        TensorSeries alpha = rho_n - rho_inv;
        TensorSeries res = e.lin.lemma1_residual(gn, rho_inv, alpha, Z);
        nlohmann::json rec;
        rec["stage"] = i;
        rec["alpha_min_degree"] = alpha.is_zero() ? -1 : alpha.min_degree();
        rec["residual"] = residual_summary(res);
        ok = ok && res.is_zero();
        stages.push_back(rec);
    }
    out.data["stages"] = stages;
    if (!ok) {
        out.status = "fail";
        out.detail = "commutator-defect identity residual nonzero";
    } else {
        out.detail = "identity holds at the solver's intermediate stages";
    }
    return out;
}

}  // namespace detail

inline Certificate run(const RunConfig& cfg_in) {
    RunConfig cfg = cfg_in;
    if (cfg.degree < 1) throw InputError("degree must be >= 1");
    if (cfg.degree > cfg.max_degree) throw DegreeOverflow("degree exceeds configured bound");
    if (cfg.checks.empty()) cfg.checks = RunConfig::known_checks();
    std::sort(cfg.checks.begin(), cfg.checks.end());
    cfg.checks.erase(std::unique(cfg.checks.begin(), cfg.checks.end()), cfg.checks.end());
    for (const auto& c : cfg.checks) {
        const auto& known = RunConfig::known_checks();
        if (std::find(known.begin(), known.end(), c) == known.end())
            throw InputError("unknown check \"" + c + "\"");
    }
    if (std::find(cfg.checks.begin(), cfg.checks.end(), std::string("fm")) !=
            cfg.checks.end() &&
        cfg.nu_values.empty())
        throw InputError("--checks fm requires at least one --nu value");
    // fail early on unreadable input
    load_algebra(cfg.algebra);

    auto dispatch = [&cfg](const std::string& name) -> CheckResult {
        auto t0 = std::chrono::steady_clock::now();
        CheckResult r;
        try {
            if (name == "cyb") r = detail::check_cyb(cfg);
            else if (name == "cdybe") r = detail::check_cdybe(cfg);
            else if (name == "solve") r = detail::check_solve(cfg);
            else if (name == "pushforward") r = detail::check_pushforward(cfg);
            else if (name == "gauge") r = detail::check_gauge(cfg);
            else if (name == "fm") r = detail::check_fm(cfg);
            else r = detail::check_lemma1(cfg);
        } catch (const NotFactorizable& e) {
            r = CheckResult{name, "unsupported", e.what(), {}, 0};
        } catch (const Error& e) {
            r = CheckResult{name, "error", e.what(), {}, 0};
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                        .count();
        return r;
    };

    // checks are independent and pure; results re-sorted by name afterwards
    std::vector<std::future<CheckResult>> futs;
    for (const auto& name : cfg.checks)
        futs.push_back(std::async(std::launch::async, dispatch, name));
    Certificate cert;
    cert.config = cfg;
    for (auto& f : futs) cert.results.push_back(f.get());
    std::sort(cert.results.begin(), cert.results.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return cert;
}

}  // namespace liepois
