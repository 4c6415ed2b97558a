#include "tubal/tensor3.hpp"

#include <Eigen/SVD>

#include <cmath>

#include "tubal/dft.hpp"

namespace tubal {

Matrix unfold(const Tensor3& a) {
    const auto& d = a.dims();
    Matrix m(static_cast<std::int64_t>(d.d1) * d.d3, d.d2);
    for (int l = 0; l < d.d3; ++l)
        m.middleRows(static_cast<std::int64_t>(l) * d.d1, d.d1) = a.slice(l);
    return m;
}

Tensor3 fold(const Matrix& m, Dims dims) {
    if (m.rows() != static_cast<std::int64_t>(dims.d1) * dims.d3 || m.cols() != dims.d2)
        throw std::invalid_argument("fold: matrix shape does not match dims");
    Tensor3 a(dims);
    for (int l = 0; l < dims.d3; ++l)
        a.slice(l) = m.middleRows(static_cast<std::int64_t>(l) * dims.d1, dims.d1);
    return a;
}

Tensor3 conj_transpose(const Tensor3& a) {
    const auto& d = a.dims();
    Tensor3 out(d.d2, d.d1, d.d3);
    out.slice(0) = a.slice(0).transpose();
    for (int l = 1; l < d.d3; ++l) out.slice(l) = a.slice(d.d3 - l).transpose();
    return out;
}

double fro_norm(const Tensor3& a) {
    double s = 0.0;
    const double* p = a.data();
    for (std::int64_t i = 0; i < a.size(); ++i) s += p[i] * p[i];
    return std::sqrt(s);
}

double max_abs(const Tensor3& a) {
    double m = 0.0;
    const double* p = a.data();
    for (std::int64_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(p[i]));
    return m;
}

Norms norms(const Tensor3& a) {
    Norms n;
    const double* p = a.data();
    double fro2 = 0.0;
    for (std::int64_t i = 0; i < a.size(); ++i) {
        const double x = p[i];
        fro2 += x * x;
        n.l1 += std::abs(x);
        n.max = std::max(n.max, std::abs(x));
    }
    n.fro = std::sqrt(fro2);
    const SpectralTensor ahat = dft3(a);
    // sigma_max of a conjugate pair of slices is shared, so the upper half
    // contributes nothing new.
    for (int t = 0; t <= a.dims().d3 / 2; ++t) {
        Eigen::JacobiSVD<CMatrix> svd(ahat.slice(t));
        n.spectral = std::max(n.spectral, svd.singularValues()(0));
    }
    return n;
}

double inner(const Tensor3& a, const Tensor3& b) {
    if (!(a.dims() == b.dims())) throw std::invalid_argument("inner: dimension mismatch");
    const double* pa = a.data();
    const double* pb = b.data();
    double s = 0.0;
    for (std::int64_t i = 0; i < a.size(); ++i) s += pa[i] * pb[i];
    return s;
}

Tensor3 lincomb(double alpha, const Tensor3& a, double beta, const Tensor3& b) {
    if (!(a.dims() == b.dims())) throw std::invalid_argument("lincomb: dimension mismatch");
    Tensor3 out(a.dims());
    double* po = out.data();
    const double* pa = a.data();
    const double* pb = b.data();
    for (std::int64_t i = 0; i < a.size(); ++i) po[i] = alpha * pa[i] + beta * pb[i];
    return out;
}

double max_abs_diff(const Tensor3& a, const Tensor3& b) {
    if (!(a.dims() == b.dims())) throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double m = 0.0;
    const double* pa = a.data();
    const double* pb = b.data();
    for (std::int64_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(pa[i] - pb[i]));
    return m;
}

bool all_finite(const Tensor3& a) {
    const double* p = a.data();
    for (std::int64_t i = 0; i < a.size(); ++i)
        if (!std::isfinite(p[i])) return false;
    return true;
}

}  // namespace tubal
