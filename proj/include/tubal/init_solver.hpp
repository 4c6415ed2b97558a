#pragma once

#include <cstdint>
#include <vector>

#include "tubal/sampling.hpp"
#include "tubal/tensor3.hpp"

namespace tubal {

enum class StepRule { Fixed, Backtracking };

struct SolverConfig {
    int r = 1;
    int max_iters = 50;
    StepRule step_rule = StepRule::Backtracking;
    double eta0 = 1.0;       // initial step; the inverse-propensity gradient has
                             // expectation T - truth, so unit steps are the
                             // natural scale
    double tol = 5e-5;       // stop when the relative objective decrease drops below
    std::uint64_t seed = 0;
};

// Inverse-propensity spectral initialization:
//   truncate_rank( (d*/n) * sum_i y_i X_i , r ),
// duplicates summed. Unbiased for the truth in expectation when sigma = 0.
Tensor3 spectral_init(const ObservationSet& obs, Dims dims, int r);

struct TraceRow {
    int iter = 0;
    double objective = 0.0;
    double step = 0.0;
};

struct RefineResult {
    Tensor3 estimate;
    int iterations = 0;
    double final_objective = 0.0;
    std::vector<TraceRow> trace;
};

// Projected gradient with t-SVD retraction:
//   T <- truncate_rank(T - eta * G, r),  G = (d*/n) sum_i (<T,X_i> - y_i) X_i
// minimizing sum_i (<T,X_i> - y_i)^2. Under backtracking the objective is
// strictly decreasing across accepted steps; a non-finite objective raises
// std::runtime_error (divergence).
RefineResult refine(const Tensor3& init, const ObservationSet& obs, const SolverConfig& cfg);

// Emit the iteration trace as CSV (iter,objective,step).
void save_trace(const RefineResult& r, const std::string& path);

struct InitQualityReport {
    double max_abs_error = 0.0;
    double fro_error = 0.0;
    double gamma_hat = 0.0;  // max_abs_error / sigma; inf when sigma = 0 and error > 0
    int iterations = 0;
    double final_objective = 0.0;
};

InitQualityReport quality_report(const Tensor3& est, const Tensor3& truth, double sigma,
                                 const RefineResult* solver_result = nullptr);

}  // namespace tubal
