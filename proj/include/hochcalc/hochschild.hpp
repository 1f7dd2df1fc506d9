#pragma once

#include <iosfwd>

#include "hochcalc/algebra.hpp"

namespace hochcalc {

// Normalized Hochschild cochain as a sparse multilinear table.  Keys are
// arity-tuples of reduced-basis indices >= 1 (arguments from a complement
// of K·1), values are elements in reduced coordinates.  Values on tuples
// touching the unit direction are identically zero, so they are not stored.
struct Cochain {
    const AlgebraSpec* alg = nullptr;
    int arity = 0;
    std::map<std::vector<int>, SparseVec> table;

    bool is_zero() const { return table.empty(); }
    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.arity == b.arity && a.table == b.table;
    }
};

// Normalized Hochschild chain of length m (degree -m): sparse tensor over
// tuples (t0, t1..tm) with t0 any reduced index and t1..tm >= 1.
struct Chain {
    const AlgebraSpec* alg = nullptr;
    int length = 0;
    std::map<std::vector<int>, Rational> table;

    bool is_zero() const { return table.empty(); }
    friend bool operator==(const Chain& a, const Chain& b) {
        return a.length == b.length && a.table == b.table;
    }
};

Cochain zero_cochain(const AlgebraSpec& a, int arity);
Cochain element_cochain(const AlgebraSpec& a, const SparseVec& reduced_coords);
Cochain identity_cochain(const AlgebraSpec& a);
Cochain multiplication_cochain(const AlgebraSpec& a);
Chain zero_chain(const AlgebraSpec& a, int length);

Cochain random_cochain(const AlgebraSpec& a, int arity, Rng& rng);
Chain random_chain(const AlgebraSpec& a, int length, Rng& rng);

// expand a slot tuple of reduced-coordinate elements into a normalized chain
Chain chain_of(const AlgebraSpec& a, const std::vector<SparseVec>& slots);

// evaluation on reduced-coordinate elements (multilinear, unit arguments
// killed by normalization)
SparseVec evaluate(const Cochain& p, const std::vector<SparseVec>& args);

// ∂^Hoch on cochains: arity k -> k+1
Cochain cochain_boundary(const Cochain& p);
// ∂^Hoch on chains: length m -> m-1 (the zero chain when m = 0)
Chain chain_boundary(const Chain& c);
// cup product, arity k1+k2
Cochain cup(const Cochain& p1, const Cochain& p2);
// Gerstenhaber bracket; arities >= 1 unless allow_arity0 is set, which
// enables the k = -1 extension of the insertion formula for 0-cochains.
Cochain gerstenhaber_bracket(const Cochain& q1, const Cochain& q2, bool allow_arity0 = false);
// contraction I_P, length m -> m-k (zero when m < k)
Chain contract_I(const Cochain& p, const Chain& c);
// Lie derivative L_Q along Q of arity k+1, length m -> m-k
Chain lie_derive_L(const Cochain& q, const Chain& c);
// Connes' operator, length m -> m+1
Chain connes_B(const Chain& c);

Chain add(const Chain& a, const Chain& b);
Chain scale(const Chain& a, const Rational& c);
Cochain add(const Cochain& a, const Cochain& b);
Cochain scale(const Cochain& a, const Rational& c);

// (co)chain literal format: one line per table entry,
//   "<label> <label> ... -> <coeffs>"
// with reduced-basis labels on the left and rational coordinates (cochains)
// or a single rational coefficient (chains) on the right.
void print_cochain(const Cochain& p, std::ostream& out);
Cochain parse_cochain(const AlgebraSpec& a, int arity, std::istream& in);
void print_chain(const Chain& c, std::ostream& out);
Chain parse_chain(const AlgebraSpec& a, int length, std::istream& in);

}  // namespace hochcalc
