#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tubal/tensor3.hpp"

namespace tubal {

enum class NoiseFamily { Gaussian, UniformBounded, RademacherScaled };

const char* noise_family_name(NoiseFamily f);
NoiseFamily noise_family_from_name(const std::string& name);

class Rng;

// One draw with variance sigma^2: Gaussian, uniform on [-sqrt(3)s, sqrt(3)s],
// or +-sigma Rademacher. All are sub-Gaussian (bounded families via
// Hoeffding's lemma).
double draw_noise(Rng& rng, NoiseFamily family, double sigma);

// Configuration for the synthetic ground truth and the observation draw.
// fraction may exceed 1: sampling is with replacement, so n > d1*d2*d3 is
// legal. amp_mod / phase_mod are the per-slice modulation knobs of the
// loading matrices (relative amplitude spread and phase drift in radians).
struct GeneratorConfig {
    Dims dims;
    int r = 1;
    double sigma = 0.0;
    double fraction = 0.5;
    NoiseFamily noise = NoiseFamily::Gaussian;
    std::uint64_t seed = 0;
    double amp_mod = 0.1;
    double phase_mod = 0.2;
};

struct Observation {
    int j = 0;
    int k = 0;
    int l = 0;
    double y = 0.0;
};

// n sampled triples realizing Y_i = T(j,k,l) + xi_i, duplicates allowed.
struct ObservationSet {
    Dims dims;
    std::vector<Observation> entries;
    double sigma_xi = 0.0;
    std::uint64_t seed = 0;
    std::shared_ptr<const Tensor3> truth;  // optional handle to the generator input

    std::size_t n() const { return entries.size(); }
};

// Low-tubal-rank ground truth: frequency slices U * V_t^H with U a 0/1 group
// indicator over r row groups and V_t fresh complex Gaussian loadings with
// mild per-slice amplitude/phase modulation; conjugate symmetry is imposed
// before the inverse transform and the result is scaled to unit entry
// standard deviation. The output has tubal rank exactly r.
Tensor3 generate_ground_truth(const GeneratorConfig& cfg);

// n = round(fraction * d1*d2*d3) i.i.d. uniform index triples with replacement,
// observed through the configured noise family at variance sigma^2.
ObservationSet sample_observations(const Tensor3& t, const GeneratorConfig& cfg);

// Dense view of an observation set: last observed value per index, NaN where
// never observed. Duplicate hits are counted.
struct MaskedTensor {
    Tensor3 values;
    std::int64_t n_observed = 0;    // distinct indices hit
    std::int64_t n_duplicates = 0;  // draws beyond the first per index
};

MaskedTensor observed_mask_tensor(const ObservationSet& obs);

// JSON-lines format: one header record {"dims":[d1,d2,d3],"n":..,
// "sigma_xi":..,"seed":..} followed by one {"j","k","l","y"} record per
// observation, indices 1-based.
void save_observations(const ObservationSet& obs, const std::string& path);
ObservationSet load_observations(const std::string& path);

}  // namespace tubal
