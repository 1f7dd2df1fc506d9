#pragma once

#include "hochcalc/homology.hpp"
#include "hochcalc/hochschild.hpp"

namespace hochcalc {

// basis bookkeeping for C^k_norm and C_m^norm of a finite-dimensional algebra
long cochain_space_dim(const AlgebraSpec& a, int arity);
long chain_space_dim(const AlgebraSpec& a, int length);
SparseVec encode_cochain(const Cochain& p);
Cochain decode_cochain(const AlgebraSpec& a, int arity, const SparseVec& v);
SparseVec encode_chain(const Chain& c);
Chain decode_chain(const AlgebraSpec& a, int length, const SparseVec& v);

SparseMatrix cochain_boundary_matrix(const AlgebraSpec& a, int arity);
SparseMatrix chain_boundary_matrix(const AlgebraSpec& a, int length);

struct HochschildCohomology {
    const AlgebraSpec* alg = nullptr;
    int k_max = 0;
    GradedDims dims;
    std::vector<SliceHomology> slices;        // index k
    std::vector<std::vector<Cochain>> reps;   // exact cocycles, per degree

    // class coordinates of a cocycle in the representative basis; nullopt on
    // non-cocycles or representative drift
    std::optional<SparseVec> class_of(const Cochain& p) const;
};

struct HochschildHomology {
    const AlgebraSpec* alg = nullptr;
    int m_max = 0;
    GradedDims dims;  // stored at degrees -m
    std::vector<SliceHomology> slices;      // index m
    std::vector<std::vector<Chain>> reps;   // exact cycles, per length

    std::optional<SparseVec> class_of(const Chain& c) const;
};

HochschildCohomology cohomology(const AlgebraSpec& a, int k_max);
HochschildHomology homology(const AlgebraSpec& a, int m_max);

// preimage under ∂^Hoch, verified exactly by the caller via substitution;
// nullopt iff the argument is not exact
std::optional<Cochain> exactness_witness(const Cochain& x);
std::optional<Chain> exactness_witness(const Chain& x);

}  // namespace hochcalc
