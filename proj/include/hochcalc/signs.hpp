#pragma once

#include <cstdint>

#include "hochcalc/hochschild.hpp"

namespace hochcalc {

// Frozen global signs of the composite identities (Leibniz exponents,
// chain-map signs, the induced-action twist).  The displayed operation
// formulas fix each operation but not these signs; they were determined
// once by exact computation on small generic algebras (see derive_signs)
// and are asserted against this table by the test suites.
//
// Exponent expressions are over k1, k2 (arities of the first and second
// cochain input) and g = k - 1.  Every defect below has the shape
//     term0 - (-1)^{e1}·term1 - (-1)^{e2}·term2
// with term2 absent for the two-term identities; the per-identity shape is
// documented at the defect function.
struct SignsManifest {
    struct Entry {
        std::string e1 = "0";
        std::string e2 = "0";
    };
    std::map<std::string, Entry> entries;
    int version = 1;

    const Entry& at(const std::string& id) const;
    std::string to_json() const;  // canonical bytes (sorted keys)
    static SignsManifest from_json(const std::string& text);
    static SignsManifest builtin();  // the frozen table
    std::uint64_t hash() const;     // FNV-1a over to_json()
};

long eval_exponent(const std::string& expr, long k1, long k2);

// --- operator identities (defect must vanish identically) ----------------
// ∂(P∪Q) - (-1)^{e1} ∂P∪Q - (-1)^{e2} P∪∂Q
Cochain defect_leibniz_cup(const Cochain& p, const Cochain& q, const SignsManifest::Entry& e);
// ∂[Q1,Q2] - (-1)^{e1} [∂Q1,Q2] - (-1)^{e2} [Q1,∂Q2]
Cochain defect_leibniz_bracket(const Cochain& q1, const Cochain& q2,
                               const SignsManifest::Entry& e);
// [Q1,[Q2,Q3]] - (-1)^{e1} [[Q1,Q2],Q3] - (-1)^{e2} [Q2,[Q1,Q3]]
Cochain defect_jacobi(const Cochain& q1, const Cochain& q2, const Cochain& q3,
                      const SignsManifest::Entry& e);
// [Q1,Q2] + (-1)^{e1} [Q2,Q1]
Cochain defect_antisym(const Cochain& q1, const Cochain& q2, const SignsManifest::Entry& e);
// L_{Q1}L_{Q2} - (-1)^{e1} L_{Q2}L_{Q1} - (-1)^{e2} L_{[Q1,Q2]}
Chain defect_l_morphism(const Cochain& q1, const Cochain& q2, const Chain& c,
                        const SignsManifest::Entry& e);
// B∘L_Q - (-1)^{e1} L_Q∘B
Chain defect_b_l(const Cochain& q, const Chain& c, const SignsManifest::Entry& e);
// ∂∘I_P - (-1)^{e1} I_P∘∂ - (-1)^{e2} I_{∂P}
Chain defect_i_chain_map(const Cochain& p, const Chain& c, const SignsManifest::Entry& e);
// ∂∘L_Q - (-1)^{e1} L_Q∘∂ - (-1)^{e2} L_{∂Q}
Chain defect_l_chain_map(const Cochain& q, const Chain& c, const SignsManifest::Entry& e);
// ∂∘B - (-1)^{e1} B∘∂
Chain defect_del_b(const Chain& c, const SignsManifest::Entry& e);
// I_{Q∪P} - (-1)^{e1} I_P∘I_Q
Chain defect_i_cup(const Cochain& p, const Cochain& q, const Chain& c,
                   const SignsManifest::Entry& e);

// --- homotopy identities (defect must be ∂-exact on cocycle/cycle input) --
// B∘I_P - (-1)^{e1} I_P∘B - (-1)^{e2} L_P
Chain defect_b_i_homotopy(const Cochain& p, const Chain& c, const SignsManifest::Entry& e);
// P∪Q - (-1)^{e1} Q∪P
Cochain cup_commutator(const Cochain& p, const Cochain& q, const SignsManifest::Entry& e);
// I_P L_Q - (-1)^{e1} L_Q I_P - (-1)^{e2} I_{[P,Q]}
Chain defect_l_i(const Cochain& p, const Cochain& q, const Chain& c,
                 const SignsManifest::Entry& e);
// L_{P∪Q} - (-1)^{e1} L_P I_Q - (-1)^{e2} I_P L_Q
Chain defect_l_cup(const Cochain& p, const Cochain& q, const Chain& c,
                   const SignsManifest::Entry& e);

// The manifest also records "induced-l-twist": the induced Lie action on
// homology classes is l_[P] = (-1)^{e1(k)}·[L_P]; the calculus axioms close
// only with this twist.
Rational induced_l_twist(const SignsManifest& m, int arity);

// Checks every manifest entry against seeded random instances and returns
// the ids that fail; empty result means the manifest is consistent.  Used
// by the identities suite to detect a corrupted manifest file.
std::vector<std::string> verify_signs(const SignsManifest& m, std::uint64_t seed);

// Re-derives the manifest by scanning candidate exponents on a generic
// 2-dimensional algebra plus the other small fixtures.  Candidates that the
// desk-scale samples cannot distinguish are resolved toward the builtin
// table; a builtin entry that fails its samples throws consistency_error.
SignsManifest derive_signs(std::uint64_t seed);

}  // namespace hochcalc
