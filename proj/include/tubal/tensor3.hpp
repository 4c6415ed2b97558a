#pragma once

#include <Eigen/Dense>

#include <cassert>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tubal {

using Matrix = Eigen::MatrixXd;
using CMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

struct Dims {
    int d1 = 0;
    int d2 = 0;
    int d3 = 0;

    std::int64_t count() const {
        return static_cast<std::int64_t>(d1) * d2 * d3;
    }
    bool operator==(const Dims&) const = default;
};

// Dense real third-order tensor.
//
// Canonical storage order: the frontal-slice index l is slowest, and each
// d1 x d2 slice is column-major. Entry (j,k,l), all 0-based, lives at offset
// l*d1*d2 + k*d1 + j, so slice(l) is a contiguous Eigen matrix view and the
// whole buffer doubles as a (d1*d2) x d3 column-major matrix whose columns
// are frontal slices (each column traversing one slice, each row one tube).
class Tensor3 {
public:
    Tensor3() = default;

    explicit Tensor3(Dims dims) : dims_(dims), data_(check_count(dims), 0.0) {}
    Tensor3(int d1, int d2, int d3) : Tensor3(Dims{d1, d2, d3}) {}

    const Dims& dims() const { return dims_; }
    std::int64_t size() const { return static_cast<std::int64_t>(data_.size()); }

    double operator()(int j, int k, int l) const { return data_[offset(j, k, l)]; }
    double& operator()(int j, int k, int l) { return data_[offset(j, k, l)]; }

    // Bounds-checked access.
    double at(int j, int k, int l) const {
        check_index(j, k, l);
        return data_[offset(j, k, l)];
    }
    double& at(int j, int k, int l) {
        check_index(j, k, l);
        return data_[offset(j, k, l)];
    }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    Eigen::Map<Matrix> slice(int l) {
        return {data_.data() + static_cast<std::int64_t>(l) * dims_.d1 * dims_.d2, dims_.d1,
                dims_.d2};
    }
    Eigen::Map<const Matrix> slice(int l) const {
        return {data_.data() + static_cast<std::int64_t>(l) * dims_.d1 * dims_.d2, dims_.d1,
                dims_.d2};
    }

    // The buffer viewed as (d1*d2) x d3: row p is the tube at linear position
    // p inside each slice. This is the view the mode-3 DFT operates on.
    Eigen::Map<Matrix> as_tube_matrix() {
        return {data_.data(), static_cast<std::int64_t>(dims_.d1) * dims_.d2, dims_.d3};
    }
    Eigen::Map<const Matrix> as_tube_matrix() const {
        return {data_.data(), static_cast<std::int64_t>(dims_.d1) * dims_.d2, dims_.d3};
    }

    void set_zero() { std::fill(data_.begin(), data_.end(), 0.0); }

    Tensor3& operator+=(const Tensor3& o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Tensor3& operator-=(const Tensor3& o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Tensor3& operator*=(double a) {
        for (double& x : data_) x *= a;
        return *this;
    }

    static Tensor3 identity(int d, int d3) {
        Tensor3 t(d, d, d3);
        for (int j = 0; j < d; ++j) t(j, j, 0) = 1.0;
        return t;
    }

private:
    std::int64_t offset(int j, int k, int l) const {
        assert(j >= 0 && j < dims_.d1 && k >= 0 && k < dims_.d2 && l >= 0 && l < dims_.d3);
        return (static_cast<std::int64_t>(l) * dims_.d2 + k) * dims_.d1 + j;
    }

    void check_index(int j, int k, int l) const {
        if (j < 0 || j >= dims_.d1 || k < 0 || k >= dims_.d2 || l < 0 || l >= dims_.d3)
            throw std::out_of_range("Tensor3: index out of range");
    }

    void check_same(const Tensor3& o) const {
        if (!(dims_ == o.dims_)) throw std::invalid_argument("Tensor3: dimension mismatch");
    }

    static std::size_t check_count(Dims d) {
        if (d.d1 <= 0 || d.d2 <= 0 || d.d3 <= 0)
            throw std::invalid_argument("Tensor3: dimensions must be positive");
        return static_cast<std::size_t>(d.count());
    }

    Dims dims_;
    std::vector<double> data_;
};

// Frequency-domain counterpart: d3 complex d1 x d2 slices, same layout.
class SpectralTensor {
public:
    SpectralTensor() = default;
    explicit SpectralTensor(Dims dims)
        : dims_(dims), data_(static_cast<std::size_t>(dims.count()), Complex(0, 0)) {}

    const Dims& dims() const { return dims_; }

    Complex operator()(int j, int k, int l) const {
        return data_[(static_cast<std::int64_t>(l) * dims_.d2 + k) * dims_.d1 + j];
    }
    Complex& operator()(int j, int k, int l) {
        return data_[(static_cast<std::int64_t>(l) * dims_.d2 + k) * dims_.d1 + j];
    }

    Complex* data() { return data_.data(); }
    const Complex* data() const { return data_.data(); }

    Eigen::Map<CMatrix> slice(int t) {
        return {data_.data() + static_cast<std::int64_t>(t) * dims_.d1 * dims_.d2, dims_.d1,
                dims_.d2};
    }
    Eigen::Map<const CMatrix> slice(int t) const {
        return {data_.data() + static_cast<std::int64_t>(t) * dims_.d1 * dims_.d2, dims_.d1,
                dims_.d2};
    }

    Eigen::Map<CMatrix> as_tube_matrix() {
        return {data_.data(), static_cast<std::int64_t>(dims_.d1) * dims_.d2, dims_.d3};
    }
    Eigen::Map<const CMatrix> as_tube_matrix() const {
        return {data_.data(), static_cast<std::int64_t>(dims_.d1) * dims_.d2, dims_.d3};
    }

private:
    Dims dims_;
    std::vector<Complex> data_;
};

// Basis tensors: a column basis e_j (d x 1 x d3) or a tube basis (1 x 1 x d3),
// with a single unit entry in the first frontal slice.
struct TubeBasis {
    enum class Kind { Column, Tube };
    Kind kind = Kind::Column;
    int index = 0;  // row index j for Column; slice position for Tube

    static Tensor3 column(int j, int d, int d3) {
        if (j < 0 || j >= d) throw std::out_of_range("TubeBasis: column index");
        Tensor3 t(d, 1, d3);
        t(j, 0, 0) = 1.0;
        return t;
    }
    static Tensor3 tube(int l, int d3) {
        if (l < 0 || l >= d3) throw std::out_of_range("TubeBasis: tube index");
        Tensor3 t(1, 1, d3);
        t(0, 0, l) = 1.0;
        return t;
    }
};

// unfold stacks the frontal slices vertically into a (d1*d3) x d2 matrix;
// fold is its inverse for the stated dims.
Matrix unfold(const Tensor3& a);
Tensor3 fold(const Matrix& m, Dims dims);

// Conjugate tensor transpose: transpose every slice, reverse slices 2..d3.
Tensor3 conj_transpose(const Tensor3& a);

struct Norms {
    double fro = 0.0;
    double spectral = 0.0;
    double max = 0.0;
    double l1 = 0.0;
};

// fro/max/l1 are entrywise; spectral is the largest singular value across
// frequency slices (involves a mode-3 DFT).
Norms norms(const Tensor3& a);

double fro_norm(const Tensor3& a);
double max_abs(const Tensor3& a);
double inner(const Tensor3& a, const Tensor3& b);

Tensor3 lincomb(double alpha, const Tensor3& a, double beta, const Tensor3& b);
double max_abs_diff(const Tensor3& a, const Tensor3& b);

bool all_finite(const Tensor3& a);

}  // namespace tubal
