#pragma once

#include "hochcalc/homology.hpp"

namespace hochcalc {

using Expvec = std::vector<int>;

std::vector<Expvec> exponents_of_degree(int nvars, int degree);
std::vector<Expvec> exponents_up_to(int nvars, int degree);
int expvec_degree(const Expvec& e);

// polynomial = sparse map monomial exponent -> coefficient
using Poly = std::map<Expvec, Rational>;

// Normalized polydifferential Hochschild cochain on K[x1..xn]: a sum of
// terms coeff · x^β · ∂^{α1} ⊗ .. ⊗ ∂^{αk} acting by
//   P(a1, .., ak) = coeff · x^β · ∂^{α1}(a1) ⋯ ∂^{αk}(ak),
// with |αi| >= 1 in every slot.  The key layout is [β, α1, .., αk].
// Internal degree of a term is |β| - Σ|αi| (the differential preserves it);
// the total differential order Σ|αi| is preserved as well.
struct PolyCochain {
    int nvars = 0;
    int arity = 0;
    std::map<std::vector<Expvec>, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    bool is_normalized() const;
    void add_term(const std::vector<Expvec>& key, const Rational& c);
    friend bool operator==(const PolyCochain& a, const PolyCochain& b) {
        return a.arity == b.arity && a.terms == b.terms;
    }
};

// Normalized chain: tuple of monomials (β0, .., βm), |βi| >= 1 for i >= 1.
// The total internal degree Σ|βi| is preserved by ∂ and B.
struct PolyChain {
    int nvars = 0;
    int length = 0;
    std::map<std::vector<Expvec>, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    void add_term(const std::vector<Expvec>& key, const Rational& c);
    friend bool operator==(const PolyChain& a, const PolyChain& b) {
        return a.length == b.length && a.terms == b.terms;
    }
};

Poly pd_eval(const PolyCochain& p, const std::vector<Expvec>& monomials);

PolyCochain pd_boundary(const PolyCochain& p);
PolyCochain pd_cup(const PolyCochain& a, const PolyCochain& b);
PolyCochain pd_bracket(const PolyCochain& a, const PolyCochain& b, bool allow_arity0 = false);

PolyChain pc_boundary(const PolyChain& c);
PolyChain pc_connes_B(const PolyChain& c);
PolyChain pc_contract_I(const PolyCochain& p, const PolyChain& c);
PolyChain pc_lie_L(const PolyCochain& p, const PolyChain& c);

PolyChain pc_add(const PolyChain& a, const PolyChain& b);
PolyChain pc_scale(const PolyChain& a, const Rational& c);
PolyCochain pd_add(const PolyCochain& a, const PolyCochain& b);
PolyCochain pd_scale(const PolyCochain& a, const Rational& c);

// ---- finite slices -------------------------------------------------------

// all normalized keys with arity slots, per-slot order in [1, order],
// total order exactly total_order, coefficient degree = degree + total_order
struct PDSlice {
    int nvars = 0, arity = 0, degree = 0, order = 0, total_order = 0;
    std::vector<std::vector<Expvec>> basis;
    std::map<std::vector<Expvec>, int> index;
    long dim() const { return static_cast<long>(basis.size()); }
};
PDSlice pd_slice(int nvars, int arity, int degree, int order, int total_order);
SparseVec pd_encode(const PDSlice& s, const PolyCochain& p);
PolyCochain pd_decode(const PDSlice& s, const SparseVec& v);
// matrix of ∂ between two slices (same degree, order, total_order; arity+1)
SparseMatrix pd_boundary_matrix(const PDSlice& from, const PDSlice& to);

// Cohomology of the order-truncated polydifferential slice at fixed
// (arity, internal degree), computed per total order.
struct PDCohomology {
    int nvars = 0, arity = 0, degree = 0, order = 0;
    long dim = 0;
    std::vector<PDSlice> slices;          // per total order T = arity..arity*order
    std::vector<SliceHomology> homology;  // matching index
    std::vector<PolyCochain> reps;

    std::optional<SparseVec> class_of(const PolyCochain& p) const;
};
PDCohomology pd_cohomology(int nvars, int arity, int degree, int order);

struct PCSlice {
    int nvars = 0, length = 0, degree = 0;  // degree = total internal degree
    std::vector<std::vector<Expvec>> basis;
    std::map<std::vector<Expvec>, int> index;
    long dim() const { return static_cast<long>(basis.size()); }
};
PCSlice pc_slice(int nvars, int length, int degree);
SparseVec pc_encode(const PCSlice& s, const PolyChain& c);
PolyChain pc_decode(const PCSlice& s, const SparseVec& v);
SparseMatrix pc_boundary_matrix(const PCSlice& from, const PCSlice& to);

struct PCHomology {
    int nvars = 0, length = 0, degree = 0;
    long dim = 0;
    PCSlice slice;
    SliceHomology homology;
    std::vector<PolyChain> reps;

    std::optional<SparseVec> class_of(const PolyChain& c) const;
};
PCHomology pc_homology(int nvars, int length, int degree);

}  // namespace hochcalc
