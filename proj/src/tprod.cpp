#include "tubal/tprod.hpp"

#include "tubal/dft.hpp"

namespace tubal {

Tensor3 tprod(const Tensor3& a, const Tensor3& b) {
    const auto& da = a.dims();
    const auto& db = b.dims();
    if (da.d2 != db.d1 || da.d3 != db.d3)
        throw std::invalid_argument("tprod: dimension mismatch");
    const SpectralTensor ahat = dft3(a);
    const SpectralTensor bhat = dft3(b);
    SpectralTensor chat(Dims{da.d1, db.d2, da.d3});
    const int d3 = da.d3;
    const int half = d3 / 2;
#pragma omp parallel for schedule(static)
    for (int t = 0; t <= half; ++t) chat.slice(t) = ahat.slice(t) * bhat.slice(t);
    for (int t = half + 1; t < d3; ++t) chat.slice(t) = chat.slice(d3 - t).conjugate();
    return idft3(chat);
}

SpectralTensor spectral_product(const SpectralTensor& a, const SpectralTensor& b) {
    const auto& da = a.dims();
    const auto& db = b.dims();
    if (da.d2 != db.d1 || da.d3 != db.d3)
        throw std::invalid_argument("spectral_product: dimension mismatch");
    SpectralTensor c(Dims{da.d1, db.d2, da.d3});
#pragma omp parallel for schedule(static)
    for (int t = 0; t < da.d3; ++t) c.slice(t) = a.slice(t) * b.slice(t);
    return c;
}

}  // namespace tubal
