#pragma once

#include <string>
#include <vector>

#include "tubal/tensor3.hpp"

namespace tubal {

struct MaskEntry {
    int j = 0;
    int k = 0;
    int l = 0;
    double w = 0.0;
};

// Sparse test tensor M defining the linear functional <T, M>. Entries must be
// nonempty, in range, and carry nonzero total weight; Frobenius and l1 norms
// are cached at construction.
class LinearFunctionalMask {
public:
    LinearFunctionalMask(Dims dims, std::vector<MaskEntry> entries, std::string label = "");

    static LinearFunctionalMask single_entry(Dims dims, int j, int k, int l, double w = 1.0,
                                             std::string label = "");

    const Dims& dims() const { return dims_; }
    const std::vector<MaskEntry>& entries() const { return entries_; }
    const std::string& label() const { return label_; }
    double fro_norm() const { return fro_; }
    double l1_norm() const { return l1_; }

    Tensor3 to_tensor() const;

private:
    Dims dims_;
    std::vector<MaskEntry> entries_;
    std::string label_;
    double fro_ = 0.0;
    double l1_ = 0.0;
};

double linear_form(const Tensor3& t, const LinearFunctionalMask& m);

// Total mask weight at one index (entries may repeat). Linear scan; masks are
// small by construction.
double mask_weight_at(const LinearFunctionalMask& m, int j, int k, int l);

// Projection energies of the mask against frequency-domain singular factors.
// uhat/vhat are dft3 of the factor tensors U (d1 x r x d3), V (d2 x r x d3).
//
//   proj_energy_left  = ||U^dagger M||_F^2 = (1/d3) sum_t ||Uhat(t)^H Mhat(t)||_F^2
//   proj_energy_right = ||M V||_F^2        = (1/d3) sum_t ||Mhat(t) Vhat(t)||_F^2
//
// Mhat(t) has one rank-one term per mask entry, so the sums touch only the
// rows of Uhat/Vhat named by the mask; nothing is densified.
double proj_energy_left(const SpectralTensor& uhat, const LinearFunctionalMask& m);
double proj_energy_right(const SpectralTensor& vhat, const LinearFunctionalMask& m);

// Parse the CLI mask grammar: "j,k,l:w" items joined by ';', 1-based indices.
LinearFunctionalMask parse_mask(const std::string& text, Dims dims, std::string label = "");

}  // namespace tubal
