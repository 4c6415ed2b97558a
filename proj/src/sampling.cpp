#include "tubal/sampling.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "tubal/dft.hpp"
#include "tubal/rng.hpp"

namespace tubal {

const char* noise_family_name(NoiseFamily f) {
    switch (f) {
        case NoiseFamily::Gaussian: return "gaussian";
        case NoiseFamily::UniformBounded: return "uniform";
        case NoiseFamily::RademacherScaled: return "rademacher";
    }
    return "gaussian";
}

NoiseFamily noise_family_from_name(const std::string& name) {
    if (name == "gaussian") return NoiseFamily::Gaussian;
    if (name == "uniform") return NoiseFamily::UniformBounded;
    if (name == "rademacher") return NoiseFamily::RademacherScaled;
    throw std::invalid_argument("unknown noise family: " + name);
}

namespace {

// Draw with variance sigma^2. Uniform is scaled to [-sqrt(3) sigma, sqrt(3)
// sigma]; Rademacher to +-sigma. All three families are sub-Gaussian (the
// bounded ones via Hoeffding's lemma).
double draw_noise(Rng& rng, NoiseFamily family, double sigma) {
    switch (family) {
        case NoiseFamily::Gaussian: return sigma * rng.gaussian();
        case NoiseFamily::UniformBounded:
            return sigma * 1.7320508075688772935 * (2.0 * rng.uniform01() - 1.0);
        case NoiseFamily::RademacherScaled: return (rng.next_u64() & 1) ? sigma : -sigma;
    }
    return 0.0;
}

}  // namespace

Tensor3 generate_ground_truth(const GeneratorConfig& cfg) {
    const Dims& d = cfg.dims;
    if (cfg.r < 1 || cfg.r > std::min(d.d1, d.d2))
        throw std::invalid_argument("generate_ground_truth: need 1 <= r <= min(d1,d2)");
    Rng rng = Rng(cfg.seed).derive(0x67656e);

    // Deterministic group indicator: r groups of floor(d1/r) rows, remainder
    // in the last group.
    Matrix u = Matrix::Zero(d.d1, cfg.r);
    const int base = d.d1 / cfg.r;
    for (int j = 0; j < d.d1; ++j) {
        const int g = std::min(j / base, cfg.r - 1);
        u(j, g) = 1.0;
    }

    SpectralTensor that(d);
    const int half = d.d3 / 2;
    for (int t = 0; t <= half; ++t) {
        const bool self_conjugate = (t == 0) || (2 * t == d.d3);
        CMatrix vt(d.d2, cfg.r);
        if (self_conjugate) {
            // These slices must be real for the inverse transform to be real.
            for (int k = 0; k < d.d2; ++k)
                for (int c = 0; c < cfg.r; ++c) vt(k, c) = Complex(rng.gaussian(), 0.0);
        } else {
            for (int k = 0; k < d.d2; ++k)
                for (int c = 0; c < cfg.r; ++c)
                    vt(k, c) = Complex(rng.gaussian(), rng.gaussian()) * 0.7071067811865475244;
        }
        const double amp = 1.0 + cfg.amp_mod * (2.0 * rng.uniform01() - 1.0);
        const double phase =
            self_conjugate ? 0.0 : cfg.phase_mod * (2.0 * rng.uniform01() - 1.0);
        vt *= std::polar(amp, phase);
        that.slice(t) = u * vt.adjoint();
    }
    for (int t = half + 1; t < d.d3; ++t) that.slice(t) = that.slice(d.d3 - t).conjugate();

    Tensor3 out = idft3(that);
    double mean = 0.0;
    const double* p = out.data();
    for (std::int64_t i = 0; i < out.size(); ++i) mean += p[i];
    mean /= static_cast<double>(out.size());
    double var = 0.0;
    for (std::int64_t i = 0; i < out.size(); ++i) var += (p[i] - mean) * (p[i] - mean);
    var /= static_cast<double>(out.size());
    if (var <= 0.0) throw std::runtime_error("generate_ground_truth: degenerate draw");
    out *= 1.0 / std::sqrt(var);
    return out;
}

ObservationSet sample_observations(const Tensor3& t, const GeneratorConfig& cfg) {
    const Dims& d = t.dims();
    const auto n =
        static_cast<std::size_t>(std::llround(cfg.fraction * static_cast<double>(d.count())));
    Rng rng = Rng(cfg.seed).derive(0x6f6273);
    ObservationSet obs;
    obs.dims = d;
    obs.sigma_xi = cfg.sigma;
    obs.seed = cfg.seed;
    obs.entries.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Observation o;
        o.j = static_cast<int>(rng.below(static_cast<std::uint64_t>(d.d1)));
        o.k = static_cast<int>(rng.below(static_cast<std::uint64_t>(d.d2)));
        o.l = static_cast<int>(rng.below(static_cast<std::uint64_t>(d.d3)));
        o.y = t(o.j, o.k, o.l);
        if (cfg.sigma > 0.0) o.y += draw_noise(rng, cfg.noise, cfg.sigma);
        obs.entries.push_back(o);
    }
    return obs;
}

MaskedTensor observed_mask_tensor(const ObservationSet& obs) {
    MaskedTensor out{Tensor3(obs.dims), 0, 0};
    double* p = out.values.data();
    for (std::int64_t i = 0; i < out.values.size(); ++i)
        p[i] = std::numeric_limits<double>::quiet_NaN();
    for (const auto& o : obs.entries) {
        double& cell = out.values(o.j, o.k, o.l);
        if (std::isnan(cell))
            ++out.n_observed;
        else
            ++out.n_duplicates;
        cell = o.y;  // last value wins
    }
    return out;
}

void save_observations(const ObservationSet& obs, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("observations: cannot open for writing: " + path);
    nlohmann::json header{{"dims", {obs.dims.d1, obs.dims.d2, obs.dims.d3}},
                          {"n", obs.entries.size()},
                          {"sigma_xi", obs.sigma_xi},
                          {"seed", obs.seed}};
    os << header.dump() << "\n";
    for (const auto& o : obs.entries) {
        nlohmann::json rec{{"j", o.j + 1}, {"k", o.k + 1}, {"l", o.l + 1}, {"y", o.y}};
        os << rec.dump() << "\n";
    }
    if (!os) throw std::runtime_error("observations: write failed: " + path);
}

ObservationSet load_observations(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("observations: cannot open: " + path);
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("observations: empty file: " + path);
    nlohmann::json header = nlohmann::json::parse(line);
    ObservationSet obs;
    obs.dims.d1 = header.at("dims").at(0).get<int>();
    obs.dims.d2 = header.at("dims").at(1).get<int>();
    obs.dims.d3 = header.at("dims").at(2).get<int>();
    obs.sigma_xi = header.at("sigma_xi").get<double>();
    obs.seed = header.at("seed").get<std::uint64_t>();
    const auto n = header.at("n").get<std::size_t>();
    obs.entries.reserve(n);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        nlohmann::json rec = nlohmann::json::parse(line);
        Observation o;
        o.j = rec.at("j").get<int>() - 1;
        o.k = rec.at("k").get<int>() - 1;
        o.l = rec.at("l").get<int>() - 1;
        o.y = rec.at("y").get<double>();
        if (o.j < 0 || o.j >= obs.dims.d1 || o.k < 0 || o.k >= obs.dims.d2 || o.l < 0 ||
            o.l >= obs.dims.d3)
            throw std::runtime_error("observations: index out of range in " + path);
        obs.entries.push_back(o);
    }
    if (obs.entries.size() != n)
        throw std::runtime_error("observations: record count differs from header in " + path);
    return obs;
}

}  // namespace tubal
