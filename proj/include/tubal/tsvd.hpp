#pragma once

#include <optional>
#include <string>
#include <utility>

#include "tubal/mask.hpp"
#include "tubal/tensor3.hpp"

namespace tubal {

// Skinny t-SVD triple T = U * S * V^dagger with tubal rank r. Every frequency
// slice of U and V has orthonormal columns; S is f-diagonal with nonnegative
// nonincreasing diagonals in every frequency slice.
struct TsvdFactors {
    Tensor3 U;  // d1 x r x d3
    Tensor3 S;  // r x r x d3, f-diagonal
    Tensor3 V;  // d2 x r x d3
    int r = 0;
};

constexpr double kDefaultRankTol = 1e-9;

// Full skinny t-SVD at relative tolerance tol (r = tubal rank at tol).
// Throws if the input is numerically zero (tubal rank 0 has no factors).
TsvdFactors tsvd(const Tensor3& t, double tol = kDefaultRankTol);

// Maximum matrix rank among frequency slices, with singular values below
// tol * sigma_max (global) treated as zero.
int tubal_rank(const Tensor3& t, double tol = kDefaultRankTol);

// Best tubal-rank-r approximation: every frequency slice is replaced by its
// top-r truncated SVD. Returns the projected tensor together with the skinny
// factors of the truncation.
std::pair<Tensor3, TsvdFactors> truncate_rank(const Tensor3& t, int r);

// Same projection without assembling real-domain factors (hot path for the
// iterative solver).
Tensor3 project_rank(const Tensor3& t, int r);

// Reconstruct U * S * V^dagger.
Tensor3 compose(const TsvdFactors& f);

// Spectral quantities used by the theory-side diagnostics. lambda_min and
// lambda_max are the extreme nonzero singular values of bdiag of the spectrum,
// mu_max is the smallest constant satisfying the two incoherence inequalities
// at rank r, and alpha_M the largest constant satisfying both alignment
// inequalities for the given mask. Row distances are measured against
// reference factors when supplied:
//   row_dist_U = max_j max_t ||row_j(Uhat(t) Uhat(t)^H - Uref(t) Uref(t)^H)||.
struct SpectrumDiagnostics {
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    double kappa0 = 0.0;
    double mu_max = 0.0;
    int tubal_rank = 0;
    std::optional<double> alpha_M;
    std::optional<double> row_dist_U;
    std::optional<double> row_dist_V;
};

SpectrumDiagnostics diagnostics(const Tensor3& t, int r,
                                const LinearFunctionalMask* mask = nullptr,
                                const TsvdFactors* reference = nullptr,
                                double tol = kDefaultRankTol);

// Row-wise projector distance between two orthogonal factor tensors of the
// same shape d x r x d3: max_j max_t || row_j( Ahat(t) Ahat(t)^H -
// Bhat(t) Bhat(t)^H ) ||_2. Bounded by 2 for any pair of projectors.
double row_projector_distance(const Tensor3& a, const Tensor3& b);

// Serialization: <prefix>.U.tns3, <prefix>.S.tns3, <prefix>.V.tns3 plus a
// JSON sidecar <prefix>.json with {r, tol, lambda_min, lambda_max}.
void save_factors(const TsvdFactors& f, const std::string& prefix, double tol = kDefaultRankTol);
TsvdFactors load_factors(const std::string& prefix);

}  // namespace tubal
