#pragma once

#include <optional>

#include "hochcalc/linalg.hpp"

namespace hochcalc {

// Graded dimension table, degree -> nonnegative count.
class GradedDims {
public:
    void set(int degree, long dim) {
        if (dim < 0) throw input_error("negative graded dimension");
        if (dim == 0)
            d_.erase(degree);
        else
            d_[degree] = dim;
    }
    long at(int degree) const {
        auto it = d_.find(degree);
        return it == d_.end() ? 0 : it->second;
    }
    const std::map<int, long>& table() const { return d_; }
    friend bool operator==(const GradedDims& a, const GradedDims& b) { return a.d_ == b.d_; }
    GradedDims shifted(int by) const {
        GradedDims r;
        for (auto& [d, n] : d_) r.set(d + by, n);
        return r;
    }
    bool dominates(const GradedDims& o) const {
        for (auto& [d, n] : o.d_)
            if (at(d) < n) return false;
        return true;
    }

private:
    std::map<int, long> d_;
};

// Homology of one slice C_in --d_in--> C_mid --d_out--> C_out with chosen
// cycle representatives.  The complement of the boundaries inside the
// cycles is picked deterministically by the elimination pivot rule, so
// representatives are reproducible.
struct SliceHomology {
    long dim = 0;
    std::vector<SparseVec> representatives;  // coordinates in the C_mid basis
    std::vector<SparseVec> boundary_basis;   // basis of im(d_in)
    SparseMatrix d_out;                      // kept for cycle checks
    SparseMatrix coord_matrix;               // columns [boundary_basis | representatives]

    bool is_cycle(const SparseVec& x) const { return d_out.apply(x).is_zero(); }

    // Coordinates of the class of a cycle x in the representative basis.
    // std::nullopt when x is not a cycle or lies outside the tracked span
    // (representative drift).
    std::optional<SparseVec> class_coords(const SparseVec& x) const;
};

SliceHomology slice_homology(const SparseMatrix& d_out, const SparseMatrix& d_in);

}  // namespace hochcalc
