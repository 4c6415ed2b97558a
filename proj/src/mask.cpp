#include "tubal/mask.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tubal/dft.hpp"

namespace tubal {

LinearFunctionalMask::LinearFunctionalMask(Dims dims, std::vector<MaskEntry> entries,
                                           std::string label)
    : dims_(dims), entries_(std::move(entries)), label_(std::move(label)) {
    if (entries_.empty()) throw std::invalid_argument("mask: no entries");
    double fro2 = 0.0;
    for (const auto& e : entries_) {
        if (e.j < 0 || e.j >= dims_.d1 || e.k < 0 || e.k >= dims_.d2 || e.l < 0 ||
            e.l >= dims_.d3)
            throw std::invalid_argument("mask: entry index out of range");
        fro2 += e.w * e.w;
        l1_ += std::abs(e.w);
    }
    fro_ = std::sqrt(fro2);
    if (fro_ == 0.0) throw std::invalid_argument("mask: all weights are zero");
}

LinearFunctionalMask LinearFunctionalMask::single_entry(Dims dims, int j, int k, int l, double w,
                                                        std::string label) {
    return LinearFunctionalMask(dims, {MaskEntry{j, k, l, w}}, std::move(label));
}

Tensor3 LinearFunctionalMask::to_tensor() const {
    Tensor3 t(dims_);
    for (const auto& e : entries_) t(e.j, e.k, e.l) += e.w;
    return t;
}

double linear_form(const Tensor3& t, const LinearFunctionalMask& m) {
    if (!(t.dims() == m.dims())) throw std::invalid_argument("linear_form: dimension mismatch");
    double s = 0.0;
    for (const auto& e : m.entries()) s += e.w * t(e.j, e.k, e.l);
    return s;
}

double mask_weight_at(const LinearFunctionalMask& m, int j, int k, int l) {
    double w = 0.0;
    for (const auto& e : m.entries())
        if (e.j == j && e.k == k && e.l == l) w += e.w;
    return w;
}

namespace {

// Shared accumulation: per frequency slice, the mask's rank-one terms are
// grouped by `group_key` and each group contributes the squared norm of a
// weighted phase-modulated combination of factor rows selected by `row_key`.
template <typename GroupKey, typename RowKey>
double energy(const SpectralTensor& fhat, const LinearFunctionalMask& m, bool conj_phase,
              GroupKey group_key, RowKey row_key) {
    std::vector<MaskEntry> es = m.entries();
    std::stable_sort(es.begin(), es.end(), [&](const MaskEntry& a, const MaskEntry& b) {
        return group_key(a) < group_key(b);
    });
    const auto& d = fhat.dims();  // d x r x d3
    const int r = d.d2;
    const int d3 = d.d3;
    const CMatrix& f = dft_matrix(d3);
    Eigen::VectorXcd acc(r);
    double total = 0.0;
    for (int t = 0; t < d3; ++t) {
        const auto slice = fhat.slice(t);
        std::size_t i = 0;
        while (i < es.size()) {
            const int key = group_key(es[i]);
            acc.setZero();
            for (; i < es.size() && group_key(es[i]) == key; ++i) {
                const auto& e = es[i];
                const Complex phase = conj_phase ? std::conj(f(t, e.l)) : f(t, e.l);
                acc += e.w * phase * slice.row(row_key(e)).transpose();
            }
            total += acc.squaredNorm();
        }
    }
    return total / static_cast<double>(d3);
}

}  // namespace

double proj_energy_left(const SpectralTensor& uhat, const LinearFunctionalMask& m) {
    if (uhat.dims().d1 != m.dims().d1)
        throw std::invalid_argument("proj_energy_left: dimension mismatch");
    // Column k of Uhat(t)^H Mhat(t) = sum over entries in column k of
    // w * F(t,l) * conj(Uhat(t) row j); conjugating the whole column swaps the
    // conjugation onto the phase and leaves the norm unchanged.
    return energy(
        uhat, m, /*conj_phase=*/true, [](const MaskEntry& e) { return e.k; },
        [](const MaskEntry& e) { return e.j; });
}

double proj_energy_right(const SpectralTensor& vhat, const LinearFunctionalMask& m) {
    if (vhat.dims().d1 != m.dims().d2)
        throw std::invalid_argument("proj_energy_right: dimension mismatch");
    // Row j of Mhat(t) Vhat(t) = sum over entries in row j of
    // w * F(t,l) * (Vhat(t) row k).
    return energy(
        vhat, m, /*conj_phase=*/false, [](const MaskEntry& e) { return e.j; },
        [](const MaskEntry& e) { return e.k; });
}

LinearFunctionalMask parse_mask(const std::string& text, Dims dims, std::string label) {
    std::vector<MaskEntry> entries;
    std::istringstream items(text);
    std::string item;
    while (std::getline(items, item, ';')) {
        if (item.empty()) continue;
        MaskEntry e;
        char c1, c2, c3;
        std::istringstream ls(item);
        if (!(ls >> e.j >> c1 >> e.k >> c2 >> e.l) || c1 != ',' || c2 != ',')
            throw std::invalid_argument("mask: expected 'j,k,l:w', got '" + item + "'");
        if (ls >> c3) {
            if (c3 != ':' || !(ls >> e.w))
                throw std::invalid_argument("mask: expected 'j,k,l:w', got '" + item + "'");
        } else {
            e.w = 1.0;
        }
        // grammar is 1-based
        e.j -= 1;
        e.k -= 1;
        e.l -= 1;
        entries.push_back(e);
    }
    return LinearFunctionalMask(dims, std::move(entries), std::move(label));
}

}  // namespace tubal
