#include "tubal/reference.hpp"

#include <cmath>

namespace tubal::ref {

Matrix bcirc(const Tensor3& a) {
    const auto& d = a.dims();
    const std::int64_t rows = static_cast<std::int64_t>(d.d1) * d.d3;
    const std::int64_t cols = static_cast<std::int64_t>(d.d2) * d.d3;
    if (rows > 4096 || cols > 4096)
        throw std::invalid_argument("bcirc: output larger than the 4096 x 4096 guard");
    Matrix m(rows, cols);
    for (int i = 0; i < d.d3; ++i)
        for (int j = 0; j < d.d3; ++j) {
            const int s = ((i - j) % d.d3 + d.d3) % d.d3;
            m.block(static_cast<std::int64_t>(i) * d.d1, static_cast<std::int64_t>(j) * d.d2,
                    d.d1, d.d2) = a.slice(s);
        }
    return m;
}

Tensor3 tprod(const Tensor3& a, const Tensor3& b) {
    const auto& da = a.dims();
    const auto& db = b.dims();
    if (da.d2 != db.d1 || da.d3 != db.d3)
        throw std::invalid_argument("ref::tprod: dimension mismatch");
    const Matrix prod = bcirc(a) * unfold(b);
    return fold(prod, Dims{da.d1, db.d2, da.d3});
}

SpectralTensor dft3(const Tensor3& a) {
    const auto& d = a.dims();
    SpectralTensor out(d);
    const double step = -2.0 * M_PI / static_cast<double>(d.d3);
    for (int j = 0; j < d.d1; ++j)
        for (int k = 0; k < d.d2; ++k)
            for (int t = 0; t < d.d3; ++t) {
                Complex acc(0, 0);
                for (int s = 0; s < d.d3; ++s) {
                    const long long m = (static_cast<long long>(t) * s) % d.d3;
                    acc += a(j, k, s) * std::polar(1.0, step * static_cast<double>(m));
                }
                out(j, k, t) = acc;
            }
    return out;
}

Tensor3 idft3(const SpectralTensor& ahat) {
    const auto& d = ahat.dims();
    Tensor3 out(d);
    const double step = 2.0 * M_PI / static_cast<double>(d.d3);
    for (int j = 0; j < d.d1; ++j)
        for (int k = 0; k < d.d2; ++k)
            for (int s = 0; s < d.d3; ++s) {
                Complex acc(0, 0);
                for (int t = 0; t < d.d3; ++t) {
                    const long long m = (static_cast<long long>(t) * s) % d.d3;
                    acc += ahat(j, k, t) * std::polar(1.0, step * static_cast<double>(m));
                }
                out(j, k, s) = acc.real() / static_cast<double>(d.d3);
            }
    return out;
}

CMatrix bdiag(const Tensor3& a) {
    const auto& d = a.dims();
    const std::int64_t rows = static_cast<std::int64_t>(d.d1) * d.d3;
    const std::int64_t cols = static_cast<std::int64_t>(d.d2) * d.d3;
    if (rows > 4096 || cols > 4096)
        throw std::invalid_argument("bdiag: output larger than the 4096 x 4096 guard");
    const SpectralTensor ahat = dft3(a);
    CMatrix m = CMatrix::Zero(rows, cols);
    for (int t = 0; t < d.d3; ++t)
        m.block(static_cast<std::int64_t>(t) * d.d1, static_cast<std::int64_t>(t) * d.d2, d.d1,
                d.d2) = ahat.slice(t);
    return m;
}

}  // namespace tubal::ref
