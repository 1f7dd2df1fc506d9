#include "hochcalc/sparse.hpp"

namespace hochcalc {

SparseVec SparseMatrix::apply(const SparseVec& x) const {
    for (const auto& [i, v] : x.entries())
        if (i < 0 || i >= cols_) throw input_error("vector index out of bounds");
    SparseVec r;
    for (const auto& [rc, v] : e_) {
        Rational xv = x.at(rc.second);
        if (!xv.is_zero()) r.add(rc.first, v * xv);
    }
    return r;
}

SparseMatrix SparseMatrix::transposed() const {
    SparseMatrix t(cols_, rows_);
    for (const auto& [rc, v] : e_) t.set(rc.second, rc.first, v);
    return t;
}

SparseMatrix SparseMatrix::times(const SparseMatrix& o) const {
    if (cols_ != o.rows()) throw input_error("matrix product dimension mismatch");
    SparseMatrix p(rows_, o.cols());
    // group o by row
    auto orows = o.row_lists();
    for (const auto& [rc, v] : e_) {
        for (const auto& [c2, w] : orows[rc.second]) p.add(rc.first, c2, v * w);
    }
    return p;
}

std::vector<std::map<int, Rational>> SparseMatrix::row_lists() const {
    std::vector<std::map<int, Rational>> rows(rows_);
    for (const auto& [rc, v] : e_) rows[rc.first].emplace(rc.second, v);
    return rows;
}

}  // namespace hochcalc
