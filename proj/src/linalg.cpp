#include "hochcalc/linalg.hpp"

#include <algorithm>

namespace hochcalc {

namespace {

struct Elimination {
    std::vector<std::map<int, Rational>> rows;
    std::vector<int> pivot_row_of_col;  // -1 if free
    std::vector<bool> row_used;
    int ncols;

    Elimination(const SparseMatrix& m, const SparseVec* aug) : ncols(m.cols()) {
        rows = m.row_lists();
        if (aug)
            for (const auto& [r, v] : aug->entries()) rows[r][ncols] = v;
        pivot_row_of_col.assign(ncols, -1);
        row_used.assign(rows.size(), false);
    }

    void run() {
        for (int col = 0; col < ncols; ++col) {
            int best = -1;
            std::size_t best_nnz = 0;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (row_used[r]) continue;
                auto it = rows[r].find(col);
                if (it == rows[r].end()) continue;
                if (best < 0 || rows[r].size() < best_nnz) {
                    best = static_cast<int>(r);
                    best_nnz = rows[r].size();
                }
            }
            if (best < 0) continue;
            pivot_row_of_col[col] = best;
            row_used[best] = true;
            Rational inv = rows[best].at(col).inv();
            for (auto& [c, v] : rows[best]) v *= inv;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (static_cast<int>(r) == best) continue;
                auto it = rows[r].find(col);
                if (it == rows[r].end()) continue;
                Rational factor = it->second;
                for (const auto& [c, v] : rows[best]) {
                    Rational upd = rows[r][c] - factor * v;
                    if (upd.is_zero())
                        rows[r].erase(c);
                    else
                        rows[r][c] = upd;
                }
            }
        }
    }

    int rank() const {
        int k = 0;
        for (int p : pivot_row_of_col)
            if (p >= 0) ++k;
        return k;
    }
};

}  // namespace

RankKernel rank_kernel(const SparseMatrix& m) {
    Elimination e(m, nullptr);
    e.run();
    RankKernel rk;
    rk.rank = e.rank();
    for (int f = 0; f < m.cols(); ++f) {
        if (e.pivot_row_of_col[f] >= 0) continue;
        SparseVec v;
        v.set(f, Rational(1));
        for (int c = 0; c < m.cols(); ++c) {
            int pr = e.pivot_row_of_col[c];
            if (pr < 0) continue;
            auto it = e.rows[pr].find(f);
            if (it != e.rows[pr].end()) v.set(c, -it->second);
        }
        rk.kernel.push_back(std::move(v));
    }
    return rk;
}

std::optional<SparseVec> solve(const SparseMatrix& m, const SparseVec& b) {
    for (const auto& [r, v] : b.entries())
        if (r < 0 || r >= m.rows()) throw input_error("rhs dimension mismatch");
    Elimination e(m, &b);
    e.run();
    // inconsistency: a row with empty matrix part but nonzero augment
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
        const auto& row = e.rows[r];
        if (row.size() == 1 && row.begin()->first == e.ncols) return std::nullopt;
    }
    SparseVec x;
    for (int c = 0; c < m.cols(); ++c) {
        int pr = e.pivot_row_of_col[c];
        if (pr < 0) continue;
        auto it = e.rows[pr].find(e.ncols);
        if (it != e.rows[pr].end()) x.set(c, it->second);
    }
    return x;
}

long homology_dims(const SparseMatrix& d_out, const SparseMatrix& d_in) {
    if (d_out.cols() != d_in.rows())
        throw input_error("homology_dims: dimension mismatch between d_out and d_in");
    SparseMatrix comp = d_out.times(d_in);
    if (!comp.entries().empty()) {
        int witness = comp.entries().begin()->first.second;
        throw consistency_error("not a complex: d_out∘d_in nonzero on basis element " +
                                std::to_string(witness));
    }
    RankKernel out = rank_kernel(d_out);
    RankKernel in = rank_kernel(d_in);
    return static_cast<long>(d_out.cols()) - out.rank - in.rank;
}

bool EchelonBasis::insert(const SparseVec& v) {
    SparseVec r = reduce(v);
    if (r.is_zero()) return false;
    int piv = r.entries().begin()->first;
    SparseVec norm = r.scaled(r.entries().begin()->second.inv());
    rows_.emplace(piv, std::move(norm));
    return true;
}

SparseVec EchelonBasis::reduce(SparseVec v) const {
    while (!v.is_zero()) {
        int piv = v.entries().begin()->first;
        auto it = rows_.find(piv);
        if (it == rows_.end()) {
            // try deeper pivots
            bool reduced = false;
            for (const auto& [i, c] : v.entries()) {
                auto jt = rows_.find(i);
                if (jt != rows_.end()) {
                    v.axpy(-c, jt->second);
                    reduced = true;
                    break;
                }
            }
            if (!reduced) break;
        } else {
            v.axpy(-v.entries().begin()->second, it->second);
        }
    }
    return v;
}

}  // namespace hochcalc
