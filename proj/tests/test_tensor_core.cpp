#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tubal/dft.hpp"
#include "tubal/reference.hpp"
#include "tubal/rng.hpp"
#include "tubal/tensor3.hpp"
#include "tubal/tprod.hpp"

using namespace tubal;

namespace {

Tensor3 random_tensor(Dims d, std::uint64_t seed) {
    Rng rng(seed);
    Tensor3 t(d);
    for (std::int64_t i = 0; i < t.size(); ++i) t.data()[i] = rng.gaussian();
    return t;
}

}  // namespace

TEST_CASE("unfold of a single-slice tensor is the slice itself") {
    Tensor3 a = random_tensor({3, 4, 1}, 1);
    const Matrix m = unfold(a);
    CHECK(m.rows() == 3);
    CHECK(m.cols() == 4);
    CHECK((m - a.slice(0)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("unfold stacks frontal slices vertically in slice order") {
    Tensor3 a(2, 3, 2);
    for (int l = 0; l < 2; ++l)
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 2; ++j) a(j, k, l) = 100 * l + 10 * k + j;
    const Matrix m = unfold(a);
    CHECK(m.rows() == 4);
    CHECK((m.topRows(2) - a.slice(0)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((m.bottomRows(2) - a.slice(1)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("fold inverts unfold exactly") {
    Tensor3 a = random_tensor({3, 4, 5}, 2);
    CHECK(max_abs_diff(fold(unfold(a), a.dims()), a) == 0.0);
    CHECK_THROWS_AS(fold(Matrix::Zero(7, 4), Dims{3, 4, 5}), std::invalid_argument);
}

TEST_CASE("bcirc of a single slice is the slice") {
    Tensor3 a = random_tensor({2, 2, 1}, 3);
    CHECK((ref::bcirc(a) - a.slice(0)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("bcirc layout for two slices is [[S1,S2],[S2,S1]]") {
    Tensor3 a = random_tensor({2, 3, 2}, 4);
    const Matrix m = ref::bcirc(a);
    CHECK((m.block(0, 0, 2, 3) - a.slice(0)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((m.block(0, 3, 2, 3) - a.slice(1)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((m.block(2, 0, 2, 3) - a.slice(1)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((m.block(2, 3, 2, 3) - a.slice(0)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("bcirc of a tube is the circulant with the tube as first column") {
    Tensor3 a(1, 1, 3);
    a(0, 0, 0) = 1.5;
    a(0, 0, 1) = -2.0;
    a(0, 0, 2) = 0.25;
    const Matrix m = ref::bcirc(a);
    // First column (a,b,c); each further column is a cyclic downward shift.
    Matrix want(3, 3);
    want << 1.5, 0.25, -2.0, -2.0, 1.5, 0.25, 0.25, -2.0, 1.5;
    CHECK((m - want).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("dft3 of a mode-3 constant tube concentrates at frequency zero") {
    Tensor3 a(1, 1, 4);
    for (int l = 0; l < 4; ++l) a(0, 0, l) = 2.5;
    const SpectralTensor ahat = dft3(a);
    CHECK(std::abs(ahat(0, 0, 0) - Complex(10.0, 0.0)) < 1e-12);
    for (int t = 1; t < 4; ++t) CHECK(std::abs(ahat(0, 0, t)) < 1e-12);
}

TEST_CASE("dft3 of a unit impulse tube is flat") {
    Tensor3 a(1, 1, 4);
    a(0, 0, 0) = 1.0;
    const SpectralTensor ahat = dft3(a);
    for (int t = 0; t < 4; ++t) CHECK(std::abs(ahat(0, 0, t) - Complex(1.0, 0.0)) < 1e-14);
}

TEST_CASE("idft3 inverts dft3 to 1e-12 relative") {
    for (std::uint64_t seed : {10u, 11u, 12u}) {
        Tensor3 a = random_tensor({4, 3, 7}, seed);
        const Tensor3 back = idft3(dft3(a));
        CHECK(max_abs_diff(a, back) <= 1e-12 * std::max(1.0, max_abs(a)));
    }
}

TEST_CASE("dft3 matches the naive per-tube reference") {
    Tensor3 a = random_tensor({3, 2, 6}, 13);
    const SpectralTensor fast = dft3(a);
    const SpectralTensor slow = ref::dft3(a);
    double worst = 0.0;
    for (int t = 0; t < 6; ++t)
        worst = std::max(worst, (fast.slice(t) - slow.slice(t)).cwiseAbs().maxCoeff());
    CHECK(worst < 1e-12);
}

TEST_CASE("spectra of real tensors are conjugate-symmetric") {
    Tensor3 a = random_tensor({3, 3, 6}, 14);
    const SpectralTensor ahat = dft3(a);
    for (int t = 1; t < 6; ++t) {
        const double diff =
            (ahat.slice(t) - ahat.slice((6 - t) % 6).conjugate()).cwiseAbs().maxCoeff();
        CHECK(diff < 1e-12);
    }
}

TEST_CASE("idft3 rejects spectra without conjugate symmetry") {
    SpectralTensor bad(Dims{2, 2, 3});
    bad(0, 0, 1) = Complex(1.0, 1.0);  // no conjugate partner in slice 2
    CHECK_THROWS_AS(idft3(bad), std::runtime_error);
}

TEST_CASE("tprod against the block-circulant oracle") {
    Rng seeds(99);
    for (int rep = 0; rep < 20; ++rep) {
        const int d1 = 1 + static_cast<int>(seeds.below(5));
        const int dmid = 1 + static_cast<int>(seeds.below(5));
        const int d2 = 1 + static_cast<int>(seeds.below(5));
        const int d3 = 1 + static_cast<int>(seeds.below(7));
        const Tensor3 a = random_tensor({d1, dmid, d3}, seeds.next_u64());
        const Tensor3 b = random_tensor({dmid, d2, d3}, seeds.next_u64());
        CHECK(max_abs_diff(tprod(a, b), ref::tprod(a, b)) < 1e-10);
    }
}

TEST_CASE("t-product with the identity tensor") {
    const Tensor3 a = random_tensor({4, 3, 5}, 21);
    const Tensor3 id3 = Tensor3::identity(3, 5);
    const Tensor3 id4 = Tensor3::identity(4, 5);
    CHECK(max_abs_diff(tprod(a, id3), a) < 1e-12);
    CHECK(max_abs_diff(tprod(id4, a), a) < 1e-12);
}

TEST_CASE("t-product with d3=1 is the matrix product") {
    const Tensor3 a = random_tensor({3, 2, 1}, 22);
    const Tensor3 b = random_tensor({2, 5, 1}, 23);
    const Tensor3 c = tprod(a, b);
    CHECK((c.slice(0) - a.slice(0) * b.slice(0)).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("tprod rejects mismatched dimensions") {
    const Tensor3 a = random_tensor({3, 2, 4}, 24);
    const Tensor3 b = random_tensor({3, 2, 4}, 25);
    CHECK_THROWS_AS(tprod(a, b), std::invalid_argument);
}

TEST_CASE("conj_transpose of a single slice is the matrix transpose") {
    const Tensor3 a = random_tensor({3, 4, 1}, 30);
    const Tensor3 at = conj_transpose(a);
    CHECK((at.slice(0) - a.slice(0).transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("conj_transpose is an involution and matches slice adjoints in frequency") {
    const Tensor3 a = random_tensor({3, 4, 5}, 31);
    CHECK(max_abs_diff(conj_transpose(conj_transpose(a)), a) == 0.0);
    const SpectralTensor ahat = dft3(a);
    const SpectralTensor athat = dft3(conj_transpose(a));
    for (int t = 0; t < 5; ++t)
        CHECK((athat.slice(t) - ahat.slice(t).adjoint()).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("(A B)^dagger = B^dagger A^dagger") {
    const Tensor3 a = random_tensor({3, 2, 4}, 32);
    const Tensor3 b = random_tensor({2, 5, 4}, 33);
    const Tensor3 lhs = conj_transpose(tprod(a, b));
    const Tensor3 rhs = tprod(conj_transpose(b), conj_transpose(a));
    CHECK(max_abs_diff(lhs, rhs) < 1e-10);
}

TEST_CASE("symmetric single-slice tensor is a conj_transpose fixed point") {
    Tensor3 a(3, 3, 1);
    a.slice(0) << 1, 2, 3, 2, 5, 6, 3, 6, 9;
    CHECK(max_abs_diff(conj_transpose(a), a) == 0.0);
}

TEST_CASE("norms of the identity tensor") {
    const Tensor3 id = Tensor3::identity(4, 3);
    const Norms n = norms(id);
    CHECK(n.spectral == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(n.fro == doctest::Approx(2.0).epsilon(1e-12));  // sqrt(d)
    CHECK(n.max == 1.0);
    CHECK(n.l1 == 4.0);
}

TEST_CASE("Parseval: fro norm equals bdiag fro norm over sqrt(d3)") {
    for (std::uint64_t seed : {40u, 41u}) {
        const Tensor3 a = random_tensor({4, 5, 6}, seed);
        const double lhs = fro_norm(a);
        const double rhs = ref::bdiag(a).norm() / std::sqrt(6.0);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("single-entry tensor: max = l1 = fro = spectral = 1") {
    Tensor3 a(4, 4, 3);
    a(1, 2, 0) = 1.0;
    const Norms n = norms(a);
    CHECK(n.max == 1.0);
    CHECK(n.l1 == 1.0);
    CHECK(n.fro == 1.0);
    CHECK(n.spectral == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("inner product is consistent across domains") {
    const Tensor3 a = random_tensor({3, 4, 5}, 50);
    const Tensor3 b = random_tensor({3, 4, 5}, 51);
    const double direct = inner(a, b);
    const SpectralTensor ahat = dft3(a);
    const SpectralTensor bhat = dft3(b);
    Complex freq(0, 0);
    for (int t = 0; t < 5; ++t)
        freq += (ahat.slice(t).adjoint() * bhat.slice(t)).trace();
    CHECK(direct == doctest::Approx(freq.real() / 5.0).epsilon(1e-10));
    CHECK(inner(a, a) == doctest::Approx(fro_norm(a) * fro_norm(a)).epsilon(1e-12));
}

TEST_CASE("tube bound: max entry of an extracted tube is at most its spectral norm") {
    Rng seeds(60);
    for (int rep = 0; rep < 10; ++rep) {
        const Tensor3 a = random_tensor({4, 3, 5}, seeds.next_u64());
        const int j1 = static_cast<int>(seeds.below(4));
        const int j2 = static_cast<int>(seeds.below(3));
        Tensor3 tube(1, 1, 5);
        for (int l = 0; l < 5; ++l) tube(0, 0, l) = a(j1, j2, l);
        const SpectralTensor tubehat = dft3(tube);
        double freq_max = 0.0;
        for (int t = 0; t < 5; ++t) freq_max = std::max(freq_max, std::abs(tubehat(0, 0, t)));
        CHECK(max_abs(tube) <= freq_max + 1e-12);
    }
}

TEST_CASE("bcirc refuses to build oversized liftings") {
    const Tensor3 a(70, 70, 70);  // 4900 > 4096
    CHECK_THROWS_AS(ref::bcirc(a), std::invalid_argument);
}

TEST_CASE("tensor accessors are bounds-checked via at()") {
    Tensor3 a(2, 2, 2);
    CHECK_THROWS_AS(a.at(2, 0, 0), std::out_of_range);
    CHECK_THROWS_AS(a.at(0, -1, 0), std::out_of_range);
    a.at(1, 1, 1) = 3.0;
    CHECK(a(1, 1, 1) == 3.0);
}
