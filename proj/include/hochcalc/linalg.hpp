#pragma once

#include <optional>

#include "hochcalc/sparse.hpp"

namespace hochcalc {

struct RankKernel {
    int rank = 0;
    std::vector<SparseVec> kernel;  // canonical basis, one vector per free column
};

// Exact Gauss-Jordan elimination.  Pivot rule (deterministic, relied on by
// golden-file tests): columns are processed left to right; within a column
// the pivot row is the unreduced row with the fewest nonzero entries, ties
// broken by the smallest row index.
RankKernel rank_kernel(const SparseMatrix& m);

// Exact solve m·x = b.  Returns std::nullopt iff b is not in the image.
// Free variables are set to zero, so the result is deterministic.
std::optional<SparseVec> solve(const SparseMatrix& m, const SparseVec& b);

// dim ker(d_out) - rank(d_in) for a two-step complex
//   C_in --d_in--> C_mid --d_out--> C_out.
// Verifies d_out∘d_in = 0 exactly; on failure throws consistency_error
// naming a witness basis element of C_in.
long homology_dims(const SparseMatrix& d_out, const SparseMatrix& d_in);

// Incremental echelon span, used for independence tests and rank counting.
class EchelonBasis {
public:
    // Reduce v against the span; if a nonzero residual remains, add it and
    // return true.
    bool insert(const SparseVec& v);
    SparseVec reduce(SparseVec v) const;
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    std::map<int, SparseVec> rows_;  // pivot index -> normalized row
};

}  // namespace hochcalc
