#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "tubal/init_solver.hpp"
#include "tubal/mask.hpp"
#include "tubal/sampling.hpp"
#include "tubal/tsvd.hpp"

namespace tubal {

// Seeded uniform permutation split into |D1| = ceil(n/2) and |D2| = n - |D1|;
// requires n >= 2.
std::pair<ObservationSet, ObservationSet> split(const ObservationSet& obs, std::uint64_t seed);

// One-step debiasing against a held-out sample:
//   T_unbs = T_init + (d*/|heldout|) * sum_i (y_i - <T_init, X_i>) X_i.
Tensor3 debias(const Tensor3& t_init, const ObservationSet& heldout);

// Everything Algorithm 1 produces: cross-fitted initializers, debiased
// tensors, retracted tensors with their factors, and the averaged estimator
// T_hat = (T_proj_1 + T_proj_2) / 2 (exact identity).
struct DebiasState {
    Tensor3 init1, init2;
    Tensor3 unbs1, unbs2;
    Tensor3 proj1, proj2;
    TsvdFactors factors1, factors2;
    Tensor3 t_hat;
    ObservationSet half1, half2;
    std::size_t n_total = 0;
    std::size_t n0 = 0;  // |D1| = ceil(n/2)
};

// Debias + retract + average for externally supplied initializers fitted on
// half1/half2 respectively: init1 is corrected with half2 and vice versa.
DebiasState debias_retract(Tensor3 init1, Tensor3 init2, ObservationSet half1,
                           ObservationSet half2, int r);

// Full pipeline: split with a seed derived from cfg.seed, fit each half with
// spectral_init + refine at rank r, then debias/retract/average.
DebiasState run_algorithm1(const ObservationSet& obs, const SolverConfig& cfg, int r);

// Cross-fitted residual variance estimate,
//   sigma^2 = (1/n) sum_{D2} (y - <T_init_1, X>)^2 + (1/n) sum_{D1} (y - <T_init_2, X>)^2.
double estimate_sigma(const DebiasState& state);

// Plug-in variance factor,
//   s_M^2 = 1/2 ( ||M V1||_F^2 + ||U1^dag M||_F^2 + ||M V2||_F^2 + ||U2^dag M||_F^2 ).
double estimate_sM(const DebiasState& state, const LinearFunctionalMask& m);

// Oracle variance factor from the truth's own rank-r factors.
double oracle_sM(const Tensor3& truth, int r, const LinearFunctionalMask& m);

std::pair<double, double> confidence_interval(double estimate, double sigma_hat, double s_hat,
                                              std::int64_t d_star, std::size_t n, double alpha);
std::pair<double, double> observation_interval(double estimate, double sigma_hat, double s_hat,
                                               std::int64_t d_star, std::size_t n, double alpha);

struct InferenceReport {
    std::string mask_label;
    double estimate = 0.0;
    double sigma_hat = 0.0;
    double s_hat = 0.0;
    double std_error = 0.0;  // sigma_hat * s_hat * sqrt(d*/n)
    double ci_low = 0.0;
    double ci_high = 0.0;
    double ci_obs_low = 0.0;
    double ci_obs_high = 0.0;
    double alpha = 0.05;
    double z = 0.0;
};

InferenceReport infer_linear_form(const DebiasState& state, const LinearFunctionalMask& m,
                                  double alpha);

std::string to_json(const InferenceReport& rep);

// Standardized statistic (requires the truth):
//   ( <T_hat, M> - <T, M> ) / ( sigma_hat * s_hat * sqrt(d*/n) ).
double standardized_stat(const DebiasState& state, const LinearFunctionalMask& m,
                         const Tensor3& truth);

// Diagnostic split of the debiasing error for half a: <E_rn, M> from the
// observation noise and <E_init, M> from the initialization remainder.
struct ErrorSplit {
    double e_rn = 0.0;
    double e_init = 0.0;
};

ErrorSplit error_split(const Tensor3& t_init, const ObservationSet& heldout,
                       const Tensor3& truth, const LinearFunctionalMask& m);

}  // namespace tubal
