#include "hochcalc/cohomology.hpp"

namespace hochcalc {

namespace {

constexpr long kMaxSpaceDim = 4000000;

long checked_pow(long base, int exp, const std::string& what) {
    long r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= base;
        if (r > kMaxSpaceDim)
            throw resource_error(what + ": basis larger than " + std::to_string(kMaxSpaceDim) +
                                 " elements; reduce arity/length bounds");
    }
    return r;
}

long tuple_rank_cochain(const AlgebraSpec& a, const std::vector<int>& t) {
    long r = 0;
    for (int x : t) r = r * (a.rdim() - 1) + (x - 1);
    return r;
}

long tuple_rank_chain(const AlgebraSpec& a, const std::vector<int>& t) {
    long r = t[0];
    for (std::size_t i = 1; i < t.size(); ++i) r = r * (a.rdim() - 1) + (t[i] - 1);
    return r;
}

}  // namespace

long cochain_space_dim(const AlgebraSpec& a, int arity) {
    long tuples = checked_pow(a.rdim() - 1, arity, "cochain space");
    if (tuples * a.rdim() > kMaxSpaceDim)
        throw resource_error("cochain space too large at arity " + std::to_string(arity));
    return tuples * a.rdim();
}

long chain_space_dim(const AlgebraSpec& a, int length) {
    long tuples = checked_pow(a.rdim() - 1, length, "chain space");
    if (tuples * a.rdim() > kMaxSpaceDim)
        throw resource_error("chain space too large at length " + std::to_string(length));
    return tuples * a.rdim();
}

SparseVec encode_cochain(const Cochain& p) {
    const AlgebraSpec& a = *p.alg;
    SparseVec out;
    for (const auto& [t, v] : p.table) {
        long base = tuple_rank_cochain(a, t) * a.rdim();
        for (const auto& [i, c] : v.entries()) out.set(static_cast<int>(base + i), c);
    }
    return out;
}

Cochain decode_cochain(const AlgebraSpec& a, int arity, const SparseVec& v) {
    Cochain p{&a, arity, {}};
    int rd = a.rdim();
    for (const auto& [idx, c] : v.entries()) {
        long rank = idx / rd;
        int val = static_cast<int>(idx % rd);
        std::vector<int> t(arity);
        for (int i = arity - 1; i >= 0; --i) {
            t[i] = static_cast<int>(rank % (rd - 1)) + 1;
            rank /= (rd - 1);
        }
        p.table[t].set(val, c);
    }
    return p;
}

SparseVec encode_chain(const Chain& c) {
    const AlgebraSpec& a = *c.alg;
    SparseVec out;
    for (const auto& [t, v] : c.table) out.set(static_cast<int>(tuple_rank_chain(a, t)), v);
    return out;
}

Chain decode_chain(const AlgebraSpec& a, int length, const SparseVec& v) {
    Chain c{&a, length, {}};
    int rd = a.rdim();
    for (const auto& [idx, val] : v.entries()) {
        long rank = idx;
        std::vector<int> t(length + 1);
        for (int i = length; i >= 1; --i) {
            t[i] = static_cast<int>(rank % (rd - 1)) + 1;
            rank /= (rd - 1);
        }
        t[0] = static_cast<int>(rank);
        c.table[t] = val;
    }
    return c;
}

SparseMatrix cochain_boundary_matrix(const AlgebraSpec& a, int arity) {
    long cols = cochain_space_dim(a, arity);
    long rows = cochain_space_dim(a, arity + 1);
    SparseMatrix m(static_cast<int>(rows), static_cast<int>(cols));
    for (long col = 0; col < cols; ++col) {
        SparseVec e;
        e.set(static_cast<int>(col), Rational(1));
        Cochain basis = decode_cochain(a, arity, e);
        m.set_col(static_cast<int>(col), encode_cochain(cochain_boundary(basis)));
    }
    return m;
}

SparseMatrix chain_boundary_matrix(const AlgebraSpec& a, int length) {
    long cols = chain_space_dim(a, length);
    long rows = length == 0 ? 0 : chain_space_dim(a, length - 1);
    SparseMatrix m(static_cast<int>(rows), static_cast<int>(cols));
    if (length == 0) return m;
    for (long col = 0; col < cols; ++col) {
        SparseVec e;
        e.set(static_cast<int>(col), Rational(1));
        Chain basis = decode_chain(a, length, e);
        m.set_col(static_cast<int>(col), encode_chain(chain_boundary(basis)));
    }
    return m;
}

HochschildCohomology cohomology(const AlgebraSpec& a, int k_max) {
    if (!a.finalized()) throw input_error("cohomology: algebra must be validated first");
    HochschildCohomology h;
    h.alg = &a;
    h.k_max = k_max;
    std::vector<SparseMatrix> d(k_max + 2);
    for (int k = 0; k <= k_max; ++k) d[k] = cochain_boundary_matrix(a, k);
    for (int k = 0; k <= k_max; ++k) {
        SparseMatrix d_in = k == 0
                                ? SparseMatrix(static_cast<int>(cochain_space_dim(a, 0)), 0)
                                : d[k - 1];
        SliceHomology s = slice_homology(d[k], d_in);
        h.dims.set(k, s.dim);
        std::vector<Cochain> reps;
        for (const auto& r : s.representatives) reps.push_back(decode_cochain(a, k, r));
        h.reps.push_back(std::move(reps));
        h.slices.push_back(std::move(s));
    }
    return h;
}

HochschildHomology homology(const AlgebraSpec& a, int m_max) {
    if (!a.finalized()) throw input_error("homology: algebra must be validated first");
    HochschildHomology h;
    h.alg = &a;
    h.m_max = m_max;
    for (int m = 0; m <= m_max; ++m) {
        SparseMatrix d_out = chain_boundary_matrix(a, m);
        SparseMatrix d_in = chain_boundary_matrix(a, m + 1);
        SliceHomology s = slice_homology(d_out, d_in);
        h.dims.set(-m, s.dim);
        std::vector<Chain> reps;
        for (const auto& r : s.representatives) reps.push_back(decode_chain(a, m, r));
        h.reps.push_back(std::move(reps));
        h.slices.push_back(std::move(s));
    }
    return h;
}

std::optional<SparseVec> HochschildCohomology::class_of(const Cochain& p) const {
    if (p.arity < 0 || p.arity > k_max) throw input_error("class_of: arity out of range");
    return slices[p.arity].class_coords(encode_cochain(p));
}

std::optional<SparseVec> HochschildHomology::class_of(const Chain& c) const {
    if (c.length < 0 && c.is_zero()) return SparseVec();
    if (c.length < 0 || c.length > m_max) throw input_error("class_of: length out of range");
    return slices[c.length].class_coords(encode_chain(c));
}

std::optional<Cochain> exactness_witness(const Cochain& x) {
    const AlgebraSpec& a = *x.alg;
    if (x.arity == 0) {
        if (x.is_zero()) return zero_cochain(a, 0);
        return std::nullopt;
    }
    SparseMatrix d = cochain_boundary_matrix(a, x.arity - 1);
    auto y = solve(d, encode_cochain(x));
    if (!y) return std::nullopt;
    return decode_cochain(a, x.arity - 1, *y);
}

std::optional<Chain> exactness_witness(const Chain& x) {
    const AlgebraSpec& a = *x.alg;
    if (x.length < 0) return zero_chain(a, x.length + 1);
    SparseMatrix d = chain_boundary_matrix(a, x.length + 1);
    auto y = solve(d, encode_chain(x));
    if (!y) return std::nullopt;
    return decode_chain(a, x.length + 1, *y);
}

}  // namespace hochcalc
