#include "tubal/tsvd.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <fstream>
#include <vector>

#include <json.hpp>

#include "tubal/dft.hpp"
#include "tubal/io.hpp"
#include "tubal/tprod.hpp"

namespace tubal {

namespace {

// Thin SVDs of the frequency slices t = 0 .. d3/2. Real input tensors have
// conjugate-symmetric spectra, so slice d3-t is the conjugate of slice t and
// its SVD is obtained by conjugating factors; slices 0 (and d3/2 for even d3)
// are self-conjugate.
struct FreqSvd {
    std::vector<CMatrix> u;             // thin left factors, one per slice <= half
    std::vector<CMatrix> v;             // thin right factors
    std::vector<Eigen::VectorXd> s;     // singular values, nonincreasing
    int d3 = 0;
    double sigma_max = 0.0;
};

FreqSvd slice_svds(const SpectralTensor& that, bool want_vectors) {
    const auto& d = that.dims();
    const int half = d.d3 / 2;
    FreqSvd out;
    out.d3 = d.d3;
    out.s.resize(static_cast<std::size_t>(half) + 1);
    if (want_vectors) {
        out.u.resize(static_cast<std::size_t>(half) + 1);
        out.v.resize(static_cast<std::size_t>(half) + 1);
    }
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t <= half; ++t) {
        if (want_vectors) {
            Eigen::BDCSVD<CMatrix> svd(that.slice(t), Eigen::ComputeThinU | Eigen::ComputeThinV);
            out.u[t] = svd.matrixU();
            out.v[t] = svd.matrixV();
            out.s[t] = svd.singularValues();
        } else {
            Eigen::BDCSVD<CMatrix> svd(that.slice(t));
            out.s[t] = svd.singularValues();
        }
    }
    for (int t = 0; t <= half; ++t)
        if (out.s[t].size() > 0) out.sigma_max = std::max(out.sigma_max, out.s[t](0));
    return out;
}

int rank_at(const FreqSvd& f, double tol) {
    const double threshold = tol * f.sigma_max;
    int r = 0;
    for (const auto& s : f.s) {
        int k = 0;
        while (k < s.size() && s(k) > threshold) ++k;
        r = std::max(r, k);
    }
    return r;
}

// Mirror a spectral factor tensor from its computed lower half.
void mirror_upper(SpectralTensor& x) {
    const int d3 = x.dims().d3;
    for (int t = d3 / 2 + 1; t < d3; ++t) x.slice(t) = x.slice(d3 - t).conjugate();
}

TsvdFactors assemble_factors(const FreqSvd& f, Dims dims, int r) {
    SpectralTensor uhat(Dims{dims.d1, r, dims.d3});
    SpectralTensor shat(Dims{r, r, dims.d3});
    SpectralTensor vhat(Dims{dims.d2, r, dims.d3});
    for (int t = 0; t <= dims.d3 / 2; ++t) {
        uhat.slice(t) = f.u[t].leftCols(r);
        vhat.slice(t) = f.v[t].leftCols(r);
        shat.slice(t) = f.s[t].head(r).cast<Complex>().asDiagonal();
    }
    mirror_upper(uhat);
    mirror_upper(shat);
    mirror_upper(vhat);
    TsvdFactors out;
    out.U = idft3(uhat);
    out.S = idft3(shat);
    out.V = idft3(vhat);
    out.r = r;
    return out;
}

Tensor3 assemble_projection(const FreqSvd& f, Dims dims, int r) {
    SpectralTensor phat(dims);
    const int half = dims.d3 / 2;
#pragma omp parallel for schedule(static)
    for (int t = 0; t <= half; ++t)
        phat.slice(t) = f.u[t].leftCols(r) * f.s[t].head(r).cast<Complex>().asDiagonal() *
                        f.v[t].leftCols(r).adjoint();
    mirror_upper(phat);
    return idft3(phat);
}

void check_rank_arg(const Tensor3& t, int r) {
    if (r < 1 || r > std::min(t.dims().d1, t.dims().d2))
        throw std::invalid_argument("rank r must satisfy 1 <= r <= min(d1,d2)");
}

}  // namespace

TsvdFactors tsvd(const Tensor3& t, double tol) {
    if (tol < 0) throw std::invalid_argument("tsvd: tol must be nonnegative");
    const FreqSvd f = slice_svds(dft3(t), true);
    const int r = rank_at(f, tol);
    if (r == 0) throw std::runtime_error("tsvd: input is numerically zero (tubal rank 0)");
    return assemble_factors(f, t.dims(), r);
}

int tubal_rank(const Tensor3& t, double tol) {
    if (tol < 0) throw std::invalid_argument("tubal_rank: tol must be nonnegative");
    return rank_at(slice_svds(dft3(t), false), tol);
}

std::pair<Tensor3, TsvdFactors> truncate_rank(const Tensor3& t, int r) {
    check_rank_arg(t, r);
    const FreqSvd f = slice_svds(dft3(t), true);
    return {assemble_projection(f, t.dims(), r), assemble_factors(f, t.dims(), r)};
}

Tensor3 project_rank(const Tensor3& t, int r) {
    check_rank_arg(t, r);
    const FreqSvd f = slice_svds(dft3(t), true);
    return assemble_projection(f, t.dims(), r);
}

Tensor3 compose(const TsvdFactors& f) {
    return tprod(f.U, tprod(f.S, conj_transpose(f.V)));
}

namespace {

// max over rows j and slices t of || row_j( A(t) A(t)^H - B(t) B(t)^H ) ||_2.
double max_row_projector_dist(const SpectralTensor& a, const SpectralTensor& b) {
    const auto& d = a.dims();
    double worst = 0.0;
    for (int t = 0; t < d.d3; ++t) {
        const CMatrix pa = a.slice(t) * a.slice(t).adjoint();
        const CMatrix pb = b.slice(t) * b.slice(t).adjoint();
        const CMatrix diff = pa - pb;
        for (int j = 0; j < d.d1; ++j) worst = std::max(worst, diff.row(j).norm());
    }
    return worst;
}

double max_row_norm(const SpectralTensor& x) {
    const auto& d = x.dims();
    double worst = 0.0;
    for (int t = 0; t < d.d3; ++t) {
        const auto slice = x.slice(t);
        for (int j = 0; j < d.d1; ++j) worst = std::max(worst, slice.row(j).norm());
    }
    return worst;
}

SpectralTensor spectral_from_columns(const FreqSvd& f, const std::vector<CMatrix>& cols, int d,
                                     int r, int d3) {
    SpectralTensor out(Dims{d, r, d3});
    for (int t = 0; t <= d3 / 2; ++t) out.slice(t) = cols[t].leftCols(r);
    mirror_upper(out);
    return out;
}

}  // namespace

double row_projector_distance(const Tensor3& a, const Tensor3& b) {
    if (!(a.dims() == b.dims()))
        throw std::invalid_argument("row_projector_distance: dimension mismatch");
    return max_row_projector_dist(dft3(a), dft3(b));
}

SpectrumDiagnostics diagnostics(const Tensor3& t, int r, const LinearFunctionalMask* mask,
                                const TsvdFactors* reference, double tol) {
    check_rank_arg(t, r);
    const auto& d = t.dims();
    const FreqSvd f = slice_svds(dft3(t), true);
    SpectrumDiagnostics out;
    out.tubal_rank = rank_at(f, tol);
    out.lambda_max = f.sigma_max;
    const double threshold = tol * f.sigma_max;
    double lmin = f.sigma_max;
    for (const auto& s : f.s)
        for (Eigen::Index i = 0; i < s.size(); ++i)
            if (s(i) > threshold) lmin = std::min(lmin, s(i));
    out.lambda_min = lmin;
    out.kappa0 = (lmin > 0) ? out.lambda_max / lmin : 0.0;

    const SpectralTensor uhat = spectral_from_columns(f, f.u, d.d1, r, d.d3);
    const SpectralTensor vhat = spectral_from_columns(f, f.v, d.d2, r, d.d3);
    const double mu_u = max_row_norm(uhat) * std::sqrt(static_cast<double>(d.d1) / r);
    const double mu_v = max_row_norm(vhat) * std::sqrt(static_cast<double>(d.d2) / r);
    out.mu_max = std::max(mu_u, mu_v);

    if (mask) {
        const double au = std::sqrt(proj_energy_left(uhat, *mask) / r * d.d1) / mask->fro_norm();
        const double av = std::sqrt(proj_energy_right(vhat, *mask) / r * d.d2) / mask->fro_norm();
        out.alpha_M = std::min(au, av);
    }
    if (reference) {
        if (reference->r != r)
            throw std::invalid_argument("diagnostics: reference factors have different rank");
        out.row_dist_U = max_row_projector_dist(uhat, dft3(reference->U));
        out.row_dist_V = max_row_projector_dist(vhat, dft3(reference->V));
    }
    return out;
}

void save_factors(const TsvdFactors& f, const std::string& prefix, double tol) {
    save_tns3(f.U, prefix + ".U.tns3");
    save_tns3(f.S, prefix + ".S.tns3");
    save_tns3(f.V, prefix + ".V.tns3");
    // The diagonal of the spectrum of S carries the singular values.
    const SpectralTensor shat = dft3(f.S);
    double lmax = 0.0, lmin = 0.0;
    for (int t = 0; t < f.S.dims().d3; ++t)
        for (int i = 0; i < f.r; ++i) lmax = std::max(lmax, std::abs(shat(i, i, t)));
    lmin = lmax;
    for (int t = 0; t < f.S.dims().d3; ++t)
        for (int i = 0; i < f.r; ++i) {
            const double s = std::abs(shat(i, i, t));
            if (s > tol * lmax) lmin = std::min(lmin, s);
        }
    nlohmann::json j{{"r", f.r}, {"tol", tol}, {"lambda_min", lmin}, {"lambda_max", lmax}};
    std::ofstream os(prefix + ".json");
    if (!os) throw std::runtime_error("save_factors: cannot open sidecar for " + prefix);
    os << j.dump(2) << "\n";
}

TsvdFactors load_factors(const std::string& prefix) {
    TsvdFactors f;
    f.U = load_tns3(prefix + ".U.tns3");
    f.S = load_tns3(prefix + ".S.tns3");
    f.V = load_tns3(prefix + ".V.tns3");
    std::ifstream is(prefix + ".json");
    if (!is) throw std::runtime_error("load_factors: missing sidecar for " + prefix);
    nlohmann::json j;
    is >> j;
    f.r = j.at("r").get<int>();
    if (f.U.dims().d2 != f.r || f.V.dims().d2 != f.r || f.S.dims().d1 != f.r)
        throw std::runtime_error("load_factors: sidecar rank does not match tensors");
    return f;
}

}  // namespace tubal
