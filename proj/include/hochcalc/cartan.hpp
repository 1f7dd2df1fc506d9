#pragma once

#include "hochcalc/calculus.hpp"
#include "hochcalc/polydiff.hpp"

namespace hochcalc {

// Polyvector field on affine n-space: sum of terms coeff · x^β ∂_S with S a
// strictly increasing index set (stored as a bitmask).  The internal weight
// of a term is |β| - |S|.
struct Polyvector {
    int nvars = 0;
    std::map<std::pair<Expvec, std::uint32_t>, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    void add_term(const Expvec& beta, std::uint32_t mask, const Rational& c);
    friend bool operator==(const Polyvector& a, const Polyvector& b) {
        return a.terms == b.terms;
    }
};

// Exterior form x^β dx_S, reversed grading (a k-form sits in degree -k).
// The internal weight of a term is |β| + |S|.
struct Form {
    int nvars = 0;
    std::map<std::pair<Expvec, std::uint32_t>, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    void add_term(const Expvec& beta, std::uint32_t mask, const Rational& c);
    friend bool operator==(const Form& a, const Form& b) { return a.terms == b.terms; }
};

int mask_size(std::uint32_t mask);

Polyvector pv_add(const Polyvector& a, const Polyvector& b);
Polyvector pv_scale(const Polyvector& a, const Rational& c);
Form form_add(const Form& a, const Form& b);
Form form_scale(const Form& a, const Rational& c);

// exterior product on polyvectors
Polyvector pv_wedge(const Polyvector& a, const Polyvector& b);
// Schouten-Nijenhuis bracket (degree -1), the biderivation extending the
// commutator of vector fields and their action on functions
Polyvector schouten(const Polyvector& a, const Polyvector& b);

// contraction of a form with a polyvector (O-linear insertion of vectors,
// i_{a∧b} = i_a ∘ i_b)
Form contract_form(const Polyvector& g, const Form& e);
// pairing of Eq. type <γ, η> = I_γ η when |η| = -|γ| and 0 otherwise
Poly pair_form(const Polyvector& g, const Form& e);
// exterior differential
Form de_rham(const Form& e);
// Lie derivative via the Cartan formula d∘I_γ - (-1)^{|γ|} I_γ∘d
// (heterogeneous polyvectors split into homogeneous parts)
Form lie_derivative(const Polyvector& g, const Form& e);

// ---- Lie-Rinehart structure on (V, Ω¹(V)) --------------------------------
// One-forms with polyvector legs, canonically expanded over the generators
// of the Kähler module: coeffs[i] multiplies dx_i for i < n and dθ_{i-n}
// (θ_j = ∂_j as an odd generator of V) for i >= n.
struct KahlerForm {
    int nvars = 0;
    std::vector<Polyvector> coeffs;  // 2n coefficients

    bool is_zero() const;
    friend bool operator==(const KahlerForm& a, const KahlerForm& b) {
        return a.coeffs == b.coeffs;
    }
};

KahlerForm kahler_of(const Polyvector& a1, const Polyvector& a2);  // a1·d(a2)
KahlerForm kahler_add(const KahlerForm& a, const KahlerForm& b);
KahlerForm kahler_scale(const KahlerForm& a, const Rational& c);

// the displayed bracket {a1 da2, b1 db2} and action 𝔩_{a1 da2}(b)
KahlerForm rinehart_bracket(const Polyvector& a1, const Polyvector& a2, const Polyvector& b1,
                            const Polyvector& b2);
Polyvector rinehart_action(const Polyvector& a1, const Polyvector& a2, const Polyvector& b);

// ---- HKR and Connes-HKR ---------------------------------------------------
// hkr(v1∧..∧vk)(a1..ak) = (1/k!) Σ_σ sgn(σ) v_{σ(1)}(a1) ⋯ v_{σ(k)}(ak)
PolyCochain hkr(const Polyvector& g);
// chkr(a0, .., am) = (1/m!) a0 da1 ∧ .. ∧ dam
Form chkr(const PolyChain& c);
// chain evaluated on a cochain of matching arity: c(P) = Σ a0·P(a1..am)
Poly chain_on_cochain(const PolyChain& c, const PolyCochain& p);

// Cartan calculus slices as CalculusData, for the axiom checkers:
// V degrees 0..n, W degrees -n..0, basis per degree filtered by internal
// weight <= weight_bound.
CalculusData cartan_calculus_data(int nvars, int weight_bound);

// ---- the bounded affine comparison ----------------------------------------
struct HkrCheck {
    std::string id;
    std::string status;  // "pass" | "fail"
    std::string witness;
};

struct HkrReport {
    int nvars = 0;
    int degree_bound = 0, arity_bound = 0, order_bound = 0;
    std::vector<HkrCheck> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (c.status != "pass") return false;
        return true;
    }
};

// Per (internal degree <= degree_bound, arity <= arity_bound): chain-map
// checks for hkr/chkr, HH vs V and HH vs Ω dimension equality (with the
// order-stability re-run at order_bound+1), bijectivity on classes, and
// transport of the induced operations onto the Cartan ones.
HkrReport verify_hkr(int nvars, int degree_bound, int arity_bound, int order_bound);

}  // namespace hochcalc
