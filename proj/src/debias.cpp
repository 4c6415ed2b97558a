#include "tubal/debias.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "tubal/dft.hpp"
#include "tubal/rng.hpp"
#include "tubal/stats.hpp"

namespace tubal {

std::pair<ObservationSet, ObservationSet> split(const ObservationSet& obs, std::uint64_t seed) {
    const std::size_t n = obs.entries.size();
    if (n < 2) throw std::invalid_argument("split: need at least two observations");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Rng rng = Rng(seed).derive(0x73706c69);
    for (std::size_t i = n - 1; i > 0; --i) {
        const auto j = static_cast<std::size_t>(rng.below(i + 1));
        std::swap(perm[i], perm[j]);
    }
    const std::size_t n0 = (n + 1) / 2;  // ceil(n/2)
    ObservationSet d1, d2;
    d1.dims = d2.dims = obs.dims;
    d1.sigma_xi = d2.sigma_xi = obs.sigma_xi;
    d1.seed = d2.seed = seed;
    d1.truth = d2.truth = obs.truth;
    d1.entries.reserve(n0);
    d2.entries.reserve(n - n0);
    for (std::size_t i = 0; i < n0; ++i) d1.entries.push_back(obs.entries[perm[i]]);
    for (std::size_t i = n0; i < n; ++i) d2.entries.push_back(obs.entries[perm[i]]);
    return {std::move(d1), std::move(d2)};
}

Tensor3 debias(const Tensor3& t_init, const ObservationSet& heldout) {
    if (heldout.entries.empty()) throw std::invalid_argument("debias: empty held-out sample");
    if (!(t_init.dims() == heldout.dims))
        throw std::invalid_argument("debias: dimension mismatch");
    Tensor3 out = t_init;
    const double scale = static_cast<double>(t_init.dims().count()) /
                         static_cast<double>(heldout.entries.size());
    for (const auto& o : heldout.entries)
        out(o.j, o.k, o.l) += scale * (o.y - t_init(o.j, o.k, o.l));
    return out;
}

DebiasState debias_retract(Tensor3 init1, Tensor3 init2, ObservationSet half1,
                           ObservationSet half2, int r) {
    DebiasState st;
    st.n_total = half1.entries.size() + half2.entries.size();
    st.n0 = half1.entries.size();
    st.init1 = std::move(init1);
    st.init2 = std::move(init2);
    st.unbs1 = debias(st.init1, half2);
    st.unbs2 = debias(st.init2, half1);
    std::tie(st.proj1, st.factors1) = truncate_rank(st.unbs1, r);
    std::tie(st.proj2, st.factors2) = truncate_rank(st.unbs2, r);
    st.t_hat = lincomb(0.5, st.proj1, 0.5, st.proj2);
    st.half1 = std::move(half1);
    st.half2 = std::move(half2);
    return st;
}

DebiasState run_algorithm1(const ObservationSet& obs, const SolverConfig& cfg, int r) {
    auto [d1, d2] = split(obs, Rng(cfg.seed).derive(0x616c6731).next_u64());
    // The two branches share only read-only inputs; run them concurrently.
    Tensor3 init1, init2;
    std::exception_ptr err;
#pragma omp parallel for schedule(static) num_threads(2)
    for (int a = 0; a < 2; ++a) {
        try {
            const ObservationSet& half = (a == 0) ? d1 : d2;
            Tensor3 fit = refine(spectral_init(half, obs.dims, r), half, cfg).estimate;
            if (a == 0)
                init1 = std::move(fit);
            else
                init2 = std::move(fit);
        } catch (...) {
#pragma omp critical
            err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return debias_retract(std::move(init1), std::move(init2), std::move(d1), std::move(d2), r);
}

double estimate_sigma(const DebiasState& state) {
    const double n = static_cast<double>(state.n_total);
    double s = 0.0;
    for (const auto& o : state.half2.entries) {
        const double r = o.y - state.init1(o.j, o.k, o.l);
        s += r * r;
    }
    for (const auto& o : state.half1.entries) {
        const double r = o.y - state.init2(o.j, o.k, o.l);
        s += r * r;
    }
    return std::sqrt(s / n);
}

double estimate_sM(const DebiasState& state, const LinearFunctionalMask& m) {
    const SpectralTensor u1 = dft3(state.factors1.U);
    const SpectralTensor v1 = dft3(state.factors1.V);
    const SpectralTensor u2 = dft3(state.factors2.U);
    const SpectralTensor v2 = dft3(state.factors2.V);
    const double s2 = 0.5 * (proj_energy_right(v1, m) + proj_energy_left(u1, m) +
                             proj_energy_right(v2, m) + proj_energy_left(u2, m));
    return std::sqrt(s2);
}

double oracle_sM(const Tensor3& truth, int r, const LinearFunctionalMask& m) {
    const TsvdFactors f = truncate_rank(truth, r).second;
    const double s2 =
        proj_energy_right(dft3(f.V), m) + proj_energy_left(dft3(f.U), m);
    return std::sqrt(s2);
}

namespace {

void check_interval_args(std::size_t n, double alpha) {
    if (n < 1) throw std::invalid_argument("interval: n must be >= 1");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("interval: alpha in (0,1)");
}

}  // namespace

std::pair<double, double> confidence_interval(double estimate, double sigma_hat, double s_hat,
                                              std::int64_t d_star, std::size_t n, double alpha) {
    check_interval_args(n, alpha);
    const double z = normal_quantile(1.0 - alpha / 2.0);
    const double hw =
        z * sigma_hat * s_hat * std::sqrt(static_cast<double>(d_star) / static_cast<double>(n));
    return {estimate - hw, estimate + hw};
}

std::pair<double, double> observation_interval(double estimate, double sigma_hat, double s_hat,
                                               std::int64_t d_star, std::size_t n, double alpha) {
    check_interval_args(n, alpha);
    const double z = normal_quantile(1.0 - alpha / 2.0);
    const double hw =
        z * (sigma_hat * s_hat *
                 std::sqrt(static_cast<double>(d_star) / static_cast<double>(n)) +
             sigma_hat);
    return {estimate - hw, estimate + hw};
}

InferenceReport infer_linear_form(const DebiasState& state, const LinearFunctionalMask& m,
                                  double alpha) {
    InferenceReport rep;
    rep.mask_label = m.label();
    rep.alpha = alpha;
    rep.estimate = linear_form(state.t_hat, m);
    rep.sigma_hat = estimate_sigma(state);
    rep.s_hat = estimate_sM(state, m);
    rep.z = normal_quantile(1.0 - alpha / 2.0);
    const auto d_star = state.t_hat.dims().count();
    rep.std_error = rep.sigma_hat * rep.s_hat *
                    std::sqrt(static_cast<double>(d_star) / static_cast<double>(state.n_total));
    std::tie(rep.ci_low, rep.ci_high) = confidence_interval(
        rep.estimate, rep.sigma_hat, rep.s_hat, d_star, state.n_total, alpha);
    std::tie(rep.ci_obs_low, rep.ci_obs_high) = observation_interval(
        rep.estimate, rep.sigma_hat, rep.s_hat, d_star, state.n_total, alpha);
    return rep;
}

std::string to_json(const InferenceReport& rep) {
    nlohmann::json j{{"mask", rep.mask_label},
                     {"estimate", rep.estimate},
                     {"sigma_hat", rep.sigma_hat},
                     {"s_hat", rep.s_hat},
                     {"std_error", rep.std_error},
                     {"ci_low", rep.ci_low},
                     {"ci_high", rep.ci_high},
                     {"ci_obs_low", rep.ci_obs_low},
                     {"ci_obs_high", rep.ci_obs_high},
                     {"alpha", rep.alpha},
                     {"z", rep.z}};
    return j.dump(2);
}

double standardized_stat(const DebiasState& state, const LinearFunctionalMask& m,
                         const Tensor3& truth) {
    const double s_hat = estimate_sM(state, m);
    if (s_hat == 0.0) throw std::runtime_error("standardized_stat: s_hat is zero");
    const double sigma_hat = estimate_sigma(state);
    const auto d_star = state.t_hat.dims().count();
    const double denom =
        sigma_hat * s_hat *
        std::sqrt(static_cast<double>(d_star) / static_cast<double>(state.n_total));
    return (linear_form(state.t_hat, m) - linear_form(truth, m)) / denom;
}

ErrorSplit error_split(const Tensor3& t_init, const ObservationSet& heldout,
                       const Tensor3& truth, const LinearFunctionalMask& m) {
    if (heldout.entries.empty()) throw std::invalid_argument("error_split: empty sample");
    const double scale = static_cast<double>(truth.dims().count()) /
                         static_cast<double>(heldout.entries.size());
    ErrorSplit out;
    // E_rn = (d*/n) sum xi_i X_i, with xi recovered as y - truth.
    // E_init = (T_init - T) - (d*/n) sum <T_init - T, X_i> X_i.
    out.e_init = linear_form(t_init, m) - linear_form(truth, m);
    for (const auto& o : heldout.entries) {
        const double w = mask_weight_at(m, o.j, o.k, o.l);
        if (w == 0.0) continue;
        const double xi = o.y - truth(o.j, o.k, o.l);
        const double dev = t_init(o.j, o.k, o.l) - truth(o.j, o.k, o.l);
        out.e_rn += scale * xi * w;
        out.e_init -= scale * dev * w;
    }
    return out;
}

}  // namespace tubal
