#pragma once

#include "tubal/tensor3.hpp"

namespace tubal {

// t-product via the frequency domain: C^(t) = A^(t) B^(t) slice by slice,
// parallel over slices. Real inputs give conjugate-symmetric spectra, so only
// slices t <= d3/2 are multiplied and the rest mirrored.
Tensor3 tprod(const Tensor3& a, const Tensor3& b);

// Frequency-domain slice products for already-transformed operands.
SpectralTensor spectral_product(const SpectralTensor& a, const SpectralTensor& b);

}  // namespace tubal
