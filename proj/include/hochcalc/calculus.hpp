#pragma once

#include "hochcalc/cohomology.hpp"
#include "hochcalc/signs.hpp"

namespace hochcalc {

// Finite slice of a calculus pair (V, W): graded bases plus operation
// tables.  Keys hold (degree, basis index) pairs; a missing key means the
// operation leaves the declared degree window, and axiom instances needing
// it are skipped rather than failed.
class CalculusData {
public:
    std::map<int, int> v_dims;  // degree -> basis size
    std::map<int, int> w_dims;

    using Key2 = std::tuple<int, int, int, int>;
    std::map<Key2, SparseVec> wedge;     // V ⊗ V -> V, degree 0
    std::map<Key2, SparseVec> bracket;   // V ⊗ V -> V, degree -1
    std::map<Key2, SparseVec> contract;  // i: V ⊗ W -> W, degree 0
    std::map<Key2, SparseVec> lie;       // l: V ⊗ W -> W, degree -1
    std::map<std::pair<int, int>, SparseVec> delta;  // W -> W, degree -1

    int vdim(int d) const {
        auto it = v_dims.find(d);
        return it == v_dims.end() ? 0 : it->second;
    }
    int wdim(int d) const {
        auto it = w_dims.find(d);
        return it == w_dims.end() ? 0 : it->second;
    }

    // linear extensions; nullopt when a needed table entry is absent
    std::optional<SparseVec> apply_wedge(int d1, const SparseVec& a, int d2,
                                         const SparseVec& b) const;
    std::optional<SparseVec> apply_bracket(int d1, const SparseVec& a, int d2,
                                           const SparseVec& b) const;
    std::optional<SparseVec> apply_contract(int d1, const SparseVec& a, int d2,
                                            const SparseVec& w) const;
    std::optional<SparseVec> apply_lie(int d1, const SparseVec& a, int d2,
                                       const SparseVec& w) const;
    std::optional<SparseVec> apply_delta(int d, const SparseVec& w) const;
};

struct AxiomCheck {
    std::string axiom_id;
    std::string status;   // "pass" | "fail"
    std::string witness;  // first violating tuple, empty when passing
    long checked = 0;
    long violations = 0;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (c.status != "pass") return false;
        return true;
    }
    const AxiomCheck& at(const std::string& id) const;
};

// Gerstenhaber axioms on the V part: comm, assoc, antisym, jacobi, leibniz
// (Eq. cup-Lie exponents).
AxiomReport check_gerstenhaber(const CalculusData& data);
// Full calculus axioms: the above plus i-module, l-module, l-i, l-cup,
// l-i-delta, de-2.
AxiomReport check_calculus(const CalculusData& data);
// ΛLie+δ axioms only: antisym, jacobi, l-module, Lie-de-2, l-delta.
AxiomReport check_lie_plus_delta(const CalculusData& data);

// Induced calculus on (HH^•(A), HH_•(A)): evaluates ∪, [,]_G, I, L, B on
// stored representatives and re-expresses the results in the representative
// bases.  The Lie action carries the manifest's induced-l-twist; on V^0
// classes (where the L formula has no arity) it is defined through
// l-i-delta.  Throws consistency_error on representative drift.
CalculusData induce_on_homology(const HochschildCohomology& coh, const HochschildHomology& hom,
                                const SignsManifest& signs);

}  // namespace hochcalc
