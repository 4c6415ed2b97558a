#pragma once

#include "tubal/tensor3.hpp"

// Serial reference implementations, kept deliberately naive. They follow the
// defining formulas (block-circulant lifting, per-tube DFT sums) rather than
// the fast paths in dft.hpp/tprod.hpp, and serve as independent oracles for
// the tests and as baselines for the benchmark target.
namespace tubal::ref {

// Block-circulant lifting: block (i,j) is slice ((i-j) mod d3). Memory grows
// as d3^2, so both output dimensions are capped at 4096.
Matrix bcirc(const Tensor3& a);

// t-product straight from the definition: fold(bcirc(A) * unfold(B)).
Tensor3 tprod(const Tensor3& a, const Tensor3& b);

// Mode-3 DFT / inverse as explicit per-tube O(d3^2) summation loops.
SpectralTensor dft3(const Tensor3& a);
Tensor3 idft3(const SpectralTensor& ahat);

// Block-diagonal matrix of the frequency slices, bdiag(dft3(a)).
CMatrix bdiag(const Tensor3& a);

}  // namespace tubal::ref
