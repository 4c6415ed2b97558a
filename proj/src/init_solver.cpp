#include "tubal/init_solver.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include "tubal/tsvd.hpp"

namespace tubal {

namespace {

double objective(const Tensor3& t, const ObservationSet& obs) {
    double s = 0.0;
    for (const auto& o : obs.entries) {
        const double r = t(o.j, o.k, o.l) - o.y;
        s += r * r;
    }
    return s;
}

// G = (d*/n) sum_i (<T,X_i> - y_i) X_i, duplicates accumulated.
void gradient(const Tensor3& t, const ObservationSet& obs, Tensor3& g) {
    g.set_zero();
    const double scale =
        static_cast<double>(t.dims().count()) / static_cast<double>(obs.entries.size());
    for (const auto& o : obs.entries) g(o.j, o.k, o.l) += scale * (t(o.j, o.k, o.l) - o.y);
}

}  // namespace

Tensor3 spectral_init(const ObservationSet& obs, Dims dims, int r) {
    if (obs.entries.empty()) throw std::invalid_argument("spectral_init: no observations");
    Tensor3 acc(dims);
    for (const auto& o : obs.entries) acc(o.j, o.k, o.l) += o.y;
    acc *= static_cast<double>(dims.count()) / static_cast<double>(obs.entries.size());
    return project_rank(acc, r);
}

RefineResult refine(const Tensor3& init, const ObservationSet& obs, const SolverConfig& cfg) {
    if (obs.entries.empty()) throw std::invalid_argument("refine: no observations");
    if (cfg.max_iters < 1) throw std::invalid_argument("refine: max_iters must be >= 1");
    if (cfg.tol <= 0) throw std::invalid_argument("refine: tol must be positive");

    constexpr double kEtaMin = 1e-12;
    RefineResult res;
    res.estimate = init;
    double obj = objective(res.estimate, obs);
    res.trace.push_back({0, obj, 0.0});
    if (!std::isfinite(obj)) throw std::runtime_error("refine: non-finite objective");

    Tensor3 g(init.dims());
    double eta = cfg.eta0;
    for (int it = 1; it <= cfg.max_iters; ++it) {
        gradient(res.estimate, obs, g);
        Tensor3 candidate;
        double cand_obj = std::numeric_limits<double>::infinity();
        if (cfg.step_rule == StepRule::Fixed) {
            candidate = project_rank(lincomb(1.0, res.estimate, -eta, g), cfg.r);
            cand_obj = objective(candidate, obs);
        } else {
            while (eta >= kEtaMin) {
                candidate = project_rank(lincomb(1.0, res.estimate, -eta, g), cfg.r);
                cand_obj = objective(candidate, obs);
                if (cand_obj < obj) break;
                eta *= 0.5;
            }
        }
        if (!std::isfinite(cand_obj)) throw std::runtime_error("refine: diverged");
        if (!(cand_obj < obj)) break;  // no descent direction left at the floor step
        const double rel = (obj - cand_obj) / std::max(obj, 1e-300);
        res.estimate = std::move(candidate);
        obj = cand_obj;
        res.iterations = it;
        res.trace.push_back({it, obj, eta});
        if (cfg.step_rule == StepRule::Backtracking)
            eta = std::min(eta * 1.5, 64.0);  // recover from conservative halvings
        if (rel < cfg.tol) break;
    }
    res.final_objective = obj;
    return res;
}

void save_trace(const RefineResult& r, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("trace: cannot open for writing: " + path);
    os << "iter,objective,step\n";
    for (const auto& row : r.trace)
        os << row.iter << "," << row.objective << "," << row.step << "\n";
}

InitQualityReport quality_report(const Tensor3& est, const Tensor3& truth, double sigma,
                                 const RefineResult* solver_result) {
    if (!(est.dims() == truth.dims()))
        throw std::invalid_argument("quality_report: dimension mismatch");
    InitQualityReport rep;
    rep.max_abs_error = max_abs_diff(est, truth);
    Tensor3 diff = est;
    diff -= truth;
    rep.fro_error = fro_norm(diff);
    if (sigma > 0)
        rep.gamma_hat = rep.max_abs_error / sigma;
    else
        rep.gamma_hat =
            rep.max_abs_error > 0 ? std::numeric_limits<double>::infinity() : 0.0;
    if (solver_result) {
        rep.iterations = solver_result->iterations;
        rep.final_objective = solver_result->final_objective;
    }
    return rep;
}

}  // namespace tubal
