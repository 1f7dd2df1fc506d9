#include "hochcalc/homology.hpp"

namespace hochcalc {

SliceHomology slice_homology(const SparseMatrix& d_out, const SparseMatrix& d_in) {
    if (d_out.cols() != d_in.rows())
        throw input_error("slice_homology: d_out/d_in dimension mismatch");
    SparseMatrix comp = d_out.times(d_in);
    if (!comp.entries().empty()) {
        int witness = comp.entries().begin()->first.second;
        throw consistency_error("not a complex: d_out∘d_in nonzero on basis element " +
                                std::to_string(witness));
    }

    SliceHomology h;
    h.d_out = d_out;

    EchelonBasis span;
    auto cols = d_in.transposed().row_lists();  // columns of d_in
    for (int c = 0; c < d_in.cols(); ++c) {
        SparseVec col;
        for (const auto& [r, v] : cols[c]) col.set(r, v);
        if (span.insert(col)) h.boundary_basis.push_back(col);
    }
    RankKernel rk = rank_kernel(d_out);
    for (const auto& z : rk.kernel)
        if (span.insert(z)) h.representatives.push_back(z);

    h.dim = static_cast<long>(h.representatives.size());
    h.coord_matrix = SparseMatrix(
        d_out.cols(),
        static_cast<int>(h.boundary_basis.size() + h.representatives.size()));
    int c = 0;
    for (const auto& b : h.boundary_basis) h.coord_matrix.set_col(c++, b);
    for (const auto& r : h.representatives) h.coord_matrix.set_col(c++, r);
    return h;
}

std::optional<SparseVec> SliceHomology::class_coords(const SparseVec& x) const {
    if (!is_cycle(x)) return std::nullopt;
    auto y = solve(coord_matrix, x);
    if (!y) return std::nullopt;
    SparseVec out;
    int nb = static_cast<int>(boundary_basis.size());
    for (const auto& [i, v] : y->entries())
        if (i >= nb) out.set(i - nb, v);
    return out;
}

}  // namespace hochcalc
