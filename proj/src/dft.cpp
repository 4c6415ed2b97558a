#include "tubal/dft.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace tubal {

namespace {

CMatrix build_dft_matrix(int n) {
    CMatrix f(n, n);
    const double step = -2.0 * M_PI / static_cast<double>(n);
    for (int t = 0; t <= n / 2; ++t) {
        for (int s = 0; s < n; ++s) {
            // Reduce t*s mod n before taking the angle so that large indices
            // do not lose precision; pin the real lattice points exactly so
            // self-conjugate rows (t = 0 and n/2) stay exactly real.
            const long long m = (static_cast<long long>(t) * s) % n;
            if (m == 0)
                f(t, s) = Complex(1.0, 0.0);
            else if (2 * m == n)
                f(t, s) = Complex(-1.0, 0.0);
            else
                f(t, s) = std::polar(1.0, step * static_cast<double>(m));
        }
    }
    for (int t = n / 2 + 1; t < n; ++t) f.row(t) = f.row(n - t).conjugate();
    return f;
}

}  // namespace

const CMatrix& dft_matrix(int n) {
    static std::mutex mu;
    static std::map<int, CMatrix> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_dft_matrix(n)).first;
    return it->second;
}

SpectralTensor dft3(const Tensor3& a) {
    const auto& d = a.dims();
    const CMatrix& f = dft_matrix(d.d3);
    SpectralTensor out(d);
    // Tube p transformed by F: out(p,t) = sum_s a(p,s) F(t,s); F is symmetric,
    // so this is the plain product X * F. Split into two real GEMMs.
    auto x = a.as_tube_matrix();
    auto y = out.as_tube_matrix();
    y.real() = x * f.real();
    y.imag() = x * f.imag();
    return out;
}

namespace {

// Inverse transform as a complex matrix pair (re, im): X = Y * conj(F) / d3.
void idft3_raw(const SpectralTensor& ahat, Matrix& re, Matrix& im) {
    const auto& d = ahat.dims();
    const CMatrix& f = dft_matrix(d.d3);
    auto y = ahat.as_tube_matrix();
    const double inv = 1.0 / static_cast<double>(d.d3);
    // conj(F) = F^H since F is symmetric; X(p,:) = Y(p,:) * conj(F) / d3.
    re = (y.real() * f.real() + y.imag() * f.imag()) * inv;
    im = (y.imag() * f.real() - y.real() * f.imag()) * inv;
}

}  // namespace

Tensor3 idft3(const SpectralTensor& ahat, double imag_tol) {
    Matrix re, im;
    idft3_raw(ahat, re, im);
    const double re_norm = re.norm();
    const double im_norm = im.norm();
    if (im_norm > imag_tol * std::max(re_norm, 1e-300))
        throw std::runtime_error(
            "idft3: inverse transform is not real (input lacks conjugate symmetry)");
    Tensor3 out(ahat.dims());
    out.as_tube_matrix() = re;
    return out;
}

double idft3_imag_residue(const SpectralTensor& ahat) {
    Matrix re, im;
    idft3_raw(ahat, re, im);
    return im.norm() / std::max(re.norm(), 1e-300);
}

}  // namespace tubal
