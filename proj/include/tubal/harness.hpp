#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tubal/debias.hpp"
#include "tubal/mask.hpp"
#include "tubal/sampling.hpp"

namespace tubal {

// Monte-Carlo experiment specification. The ground truth is generated once
// from base_seed and held fixed; every replicate draws fresh noise and
// sampling from a seed derived from (base_seed, replicate).
struct ExperimentSpec {
    Dims dims{60, 60, 30};
    int r = 3;
    double sigma = 0.5;
    double fraction = 0.4;
    int replicates = 300;
    double alpha = 0.05;
    NoiseFamily noise = NoiseFamily::Gaussian;
    double amp_mod = 0.1;
    double phase_mod = 0.2;
    SolverConfig solver;
    std::vector<LinearFunctionalMask> masks;
    std::uint64_t base_seed = 1;
    std::string out_dir;
};

// Desk-scale default with the four study masks: two single entries at distant
// locations, a two-entry cross-location sum within slice 1, and a three-entry
// tube sum.
ExperimentSpec desk_spec();

// Default masks for arbitrary dims, same four shapes.
std::vector<LinearFunctionalMask> default_masks(Dims dims);

std::string spec_to_json(const ExperimentSpec& spec);
ExperimentSpec spec_from_json(const std::string& text);
ExperimentSpec load_spec(const std::string& path);

enum Stage : int { kInit1 = 0, kInit2 = 1, kProj1 = 2, kProj2 = 3, kFinal = 4 };
constexpr int kStageCount = 5;
extern const std::array<const char*, kStageCount> kStageNames;

struct MaskStageMetrics {
    double bias = 0.0;
    double sd = 0.0;   // population standard deviation over replicates
    double mse = 0.0;  // mean squared error; equals bias^2 + sd^2
};

constexpr int kHistBins = 40;  // fixed layout over [-4, 4]

struct MaskSummary {
    std::string label;
    double true_value = 0.0;
    std::array<MaskStageMetrics, kStageCount> stages;
    double ci_width_mean = 0.0, ci_width_se = 0.0;
    double coverage = 0.0, coverage_se = 0.0;
    double ci_obs_width_mean = 0.0, ci_obs_width_se = 0.0;
    double coverage_obs = 0.0, coverage_obs_se = 0.0;
    double stat_mean = 0.0, stat_std = 0.0, ks_stat = 0.0;
    std::array<double, kHistBins> histogram{};  // density over [-4,4]
    double gain_init_proj_median = 0.0;   // median over replicates of squared-error gain
    double gain_proj_final_median = 0.0;
    std::vector<double> stats;  // standardized statistics, one per replicate
};

struct McSummary {
    std::array<double, kStageCount> tensor_rmse{};  // mean over replicates
    double frac_final_below_init = 0.0;  // share of replicates with final RMSE
                                         // below both initializer RMSEs
    std::vector<MaskSummary> masks;
    int completed = 0;
    int failed = 0;
    double sigma_hat_mean = 0.0;
};

// R replicates of the full pipeline on a fixed truth; aggregates per-stage
// metrics and per-mask interval performance. Replicates run in parallel with
// per-replicate derived seeds; aggregation order is deterministic. Throws if
// more than 5% of replicates fail.
McSummary run_monte_carlo(const ExperimentSpec& spec);

struct NormalityCheck {
    double ks_stat = 0.0;
    double mean = 0.0;
    double stddev = 0.0;
    std::array<double, kHistBins> histogram{};
};

// Kolmogorov-Smirnov distance against N(0,1) plus moments and the fixed-bin
// density histogram; requires at least 30 values.
NormalityCheck normality_check(const std::vector<double>& stats);

struct PerturbRow {
    double fraction = 0.0;
    std::size_t n = 0;
    double med_row_dist_u = 0.0;
    double med_row_dist_v = 0.0;
};

struct PerturbTable {
    std::vector<PerturbRow> rows;
    double slope_u = 0.0;  // fitted slope of log(distance) vs log(n)
    double slope_v = 0.0;
    std::vector<double> ratio_u;  // distance ratios between consecutive n
    std::vector<double> ratio_v;
};

// Row-wise projector distance of the Algorithm-1 factors against the truth's
// factors, as a function of the sample budget. Uses perfect initializers so
// the measured perturbation isolates the debiasing noise.
PerturbTable perturbation_scaling(const ExperimentSpec& spec,
                                  const std::vector<double>& fractions, int replicates);

// File-based grid imputation with per-entry confidence bounds.
struct GridConfig {
    std::string input_path;      // TNS3 tensor file
    double mask_fraction = 0.6;  // share of entries hidden (ignored with mask_file)
    std::string mask_file;       // optional 0/1 indicator tensor; nonzero = observed
    int r = 5;
    double alpha = 0.05;
    SolverConfig solver;
    std::uint64_t seed = 0;
    std::string out_dir = ".";
};

struct GridResult {
    Dims dims;
    std::size_t n = 0;
    double sigma_hat = 0.0;
    double rmse_vs_input = 0.0;
    double baseline_rmse = 0.0;  // per-slice observed-mean fill
    double corr_width_abs_input = 0.0;
    double max_ci_width = 0.0;
    std::string imputed_path, ci_low_path, ci_high_path, summary_path;
};

GridResult grid_pipeline(const GridConfig& cfg);

// CSV / JSON exports. Every CSV starts with a "# tubal-<name> v1" schema line.
void write_table1(const McSummary& s, const std::string& path);
void write_table2(const McSummary& s, const std::string& path);
void write_histograms(const McSummary& s, const std::string& dir);
void write_perturb(const PerturbTable& t, const std::string& path);
void write_mc_summary_json(const ExperimentSpec& spec, const McSummary& s,
                           const std::string& path);

}  // namespace tubal
