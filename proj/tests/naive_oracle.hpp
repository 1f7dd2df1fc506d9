#pragma once

// Brute-force reference implementations of the chain-level operations,
// written directly from the displayed formulas over full basis tuples.
// Test-only; intentionally independent of the table machinery in
// src/hochschild.cpp.  Requires the unit to be basis element 0 (true for
// every fixture of dimension <= 3 used in the tests).

#include <map>
#include <vector>

#include "hochcalc/algebra.hpp"
#include "hochcalc/hochschild.hpp"

namespace naive {

using hochcalc::AlgebraSpec;
using hochcalc::Rational;
using hochcalc::SparseVec;

using Dense = std::vector<Rational>;  // element in full basis coordinates

inline Dense dense_of(const AlgebraSpec& a, const SparseVec& v) {
    Dense d(a.dim());
    for (const auto& [i, c] : v.entries()) d[i] = c;
    return d;
}

inline Dense dmul(const AlgebraSpec& a, const Dense& x, const Dense& y) {
    Dense r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            if (x[i].is_zero() || y[j].is_zero()) continue;
            for (const auto& [k, c] : a.mult_at(i, j).entries()) r[k] += x[i] * y[j] * c;
        }
    return r;
}

inline bool dzero(const Dense& x) {
    for (const auto& c : x)
        if (!c.is_zero()) return false;
    return true;
}

// normalized cochain: dense multilinear table over full basis tuples; the
// value on any tuple containing index 0 is implicitly zero
struct NCochain {
    int arity = 0;
    std::map<std::vector<int>, Dense> t;
};

// normalized chain: tuples over the full basis, slots >= 1 never index 0
struct NChain {
    int length = 0;
    std::map<std::vector<int>, Rational> t;
};

inline Dense value(const AlgebraSpec& a, const NCochain& p, const std::vector<int>& args) {
    for (int x : args)
        if (x == 0) return Dense(a.dim());
    auto it = p.t.find(args);
    return it == p.t.end() ? Dense(a.dim()) : it->second;
}

// value with one argument a general element
inline Dense value_elem(const AlgebraSpec& a, const NCochain& p, std::vector<int> args, int pos,
                        const Dense& e) {
    Dense total(a.dim());
    for (int i = 0; i < a.dim(); ++i) {
        if (e[i].is_zero()) continue;
        args[pos] = i;
        Dense v = value(a, p, args);
        for (int k = 0; k < a.dim(); ++k) total[k] += e[i] * v[k];
    }
    return total;
}

inline void chain_add(const AlgebraSpec& a, NChain& out, std::vector<int> key, int pos,
                      const Dense& elem, const Rational& coeff) {
    for (int i = 0; i < a.dim(); ++i) {
        if (elem[i].is_zero()) continue;
        if (pos >= 1 && i == 0) continue;  // degenerate tuple, dies in the quotient
        key[pos] = i;
        out.t[key] += coeff * elem[i];
    }
}

inline void prune(NChain& c) {
    for (auto it = c.t.begin(); it != c.t.end();)
        it = it->second.is_zero() ? c.t.erase(it) : std::next(it);
}

inline NCochain nboundary(const AlgebraSpec& a, const NCochain& p) {
    int k = p.arity;
    NCochain out{k + 1, {}};
    std::vector<int> t(k + 1, 0);
    // iterate all full-basis tuples
    while (true) {
        Dense val(a.dim());
        bool nonunit = true;
        for (int x : t)
            if (x == 0) nonunit = false;
        if (nonunit) {
            Dense e0(a.dim());
            e0[t[0]] = Rational(1);
            std::vector<int> rest(t.begin() + 1, t.end());
            Dense v = value(a, p, rest);
            Dense term = dmul(a, e0, v);
            for (int q = 0; q < a.dim(); ++q) val[q] += term[q];
            for (int j = 1; j <= k; ++j) {
                std::vector<int> args;
                for (int i = 0; i < j - 1; ++i) args.push_back(t[i]);
                args.push_back(0);
                for (int i = j + 1; i <= k; ++i) args.push_back(t[i]);
                Dense ej(a.dim());
                ej[t[j - 1]] = Rational(1);
                Dense ejj(a.dim());
                ejj[t[j]] = Rational(1);
                Dense merged = dmul(a, ej, ejj);
                Dense term2 = value_elem(a, p, args, j - 1, merged);
                Rational s = hochcalc::sign_pow(j);
                for (int q = 0; q < a.dim(); ++q) val[q] += s * term2[q];
            }
            std::vector<int> head(t.begin(), t.end() - 1);
            Dense v2 = value(a, p, head);
            Dense ek(a.dim());
            ek[t[k]] = Rational(1);
            Dense term3 = dmul(a, v2, ek);
            Rational s = hochcalc::sign_pow(k + 1);
            for (int q = 0; q < a.dim(); ++q) val[q] += s * term3[q];
            if (!dzero(val)) out.t[t] = val;
        }
        int pos = k;
        while (pos >= 0 && t[pos] == a.dim() - 1) t[pos--] = 0;
        if (pos < 0) break;
        ++t[pos];
    }
    return out;
}

inline NChain nchain_boundary(const AlgebraSpec& a, const NChain& c) {
    int m = c.length;
    NChain out{m - 1, {}};
    if (m <= 0) return out;
    for (const auto& [t, coeff] : c.t) {
        for (int i = 0; i < m; ++i) {
            Dense x(a.dim()), y(a.dim());
            x[t[i]] = Rational(1);
            y[t[i + 1]] = Rational(1);
            std::vector<int> key(m, 0);
            for (int s = 0; s < i; ++s) key[s] = t[s];
            for (int s = i + 1; s < m; ++s) key[s] = t[s + 1];
            chain_add(a, out, key, i, dmul(a, x, y), coeff * hochcalc::sign_pow(i));
        }
        Dense x(a.dim()), y(a.dim());
        x[t[m]] = Rational(1);
        y[t[0]] = Rational(1);
        std::vector<int> key(m, 0);
        for (int s = 1; s < m; ++s) key[s] = t[s];
        chain_add(a, out, key, 0, dmul(a, x, y), coeff * hochcalc::sign_pow(m));
    }
    prune(out);
    return out;
}

inline NChain nconnes_B(const AlgebraSpec& a, const NChain& c) {
    int m = c.length;
    NChain out{m + 1, {}};
    for (const auto& [t, coeff] : c.t) {
        for (int i = 0; i <= m; ++i) {
            std::vector<int> key;
            key.push_back(0);  // unit
            for (int s = i; s <= m; ++s) key.push_back(t[s]);
            for (int s = 0; s < i; ++s) key.push_back(t[s]);
            bool degenerate = false;
            for (std::size_t s = 1; s < key.size(); ++s)
                if (key[s] == 0) degenerate = true;
            if (degenerate) continue;
            out.t[key] += coeff * hochcalc::sign_pow(static_cast<long>(m) * i);
        }
    }
    prune(out);
    return out;
}

inline NChain ncontract(const AlgebraSpec& a, const NCochain& p, const NChain& c) {
    int k = p.arity, m = c.length;
    NChain out{m - k, {}};
    if (m < k) return out;
    for (const auto& [t, coeff] : c.t) {
        std::vector<int> args(t.begin() + 1, t.begin() + 1 + k);
        Dense v = value(a, p, args);
        Dense e0(a.dim());
        e0[t[0]] = Rational(1);
        Dense head = dmul(a, e0, v);
        std::vector<int> key(m - k + 1, 0);
        for (int s = k + 1; s <= m; ++s) key[s - k] = t[s];
        chain_add(a, out, key, 0, head, coeff);
    }
    prune(out);
    return out;
}

inline NChain nlie(const AlgebraSpec& a, const NCochain& q, const NChain& c) {
    int k = q.arity - 1, m = c.length;
    NChain out{m - k, {}};
    if (m < k) return out;
    for (const auto& [t, coeff] : c.t) {
        for (int i = 0; i + k <= m; ++i) {
            std::vector<int> args(t.begin() + i, t.begin() + i + k + 1);
            Dense v = value(a, q, args);
            std::vector<int> key(m - k + 1, 0);
            for (int s = 0; s < i; ++s) key[s] = t[s];
            for (int s = i + k + 1; s <= m; ++s) key[s - k] = t[s];
            chain_add(a, out, key, i, v, coeff * hochcalc::sign_pow(static_cast<long>(k) * i));
        }
        for (int j = (m - k > 0 ? m - k : 0); j <= m - 1; ++j) {
            std::vector<int> args;
            for (int s = j + 1; s <= m; ++s) args.push_back(t[s]);
            for (int s = 0; s <= k + j - m; ++s) args.push_back(t[s]);
            Dense v = value(a, q, args);
            std::vector<int> key(m - k + 1, 0);
            for (int s = k + j + 1 - m; s <= j; ++s) key[s - (k + j - m)] = t[s];
            chain_add(a, out, key, 0, v,
                      coeff * hochcalc::sign_pow(static_cast<long>(m) * (j + 1)));
        }
    }
    prune(out);
    return out;
}

inline NCochain ncup(const AlgebraSpec& a, const NCochain& p1, const NCochain& p2) {
    NCochain out{p1.arity + p2.arity, {}};
    for (const auto& [t1, v1] : p1.t)
        for (const auto& [t2, v2] : p2.t) {
            std::vector<int> t = t1;
            t.insert(t.end(), t2.begin(), t2.end());
            Dense prod = dmul(a, v1, v2);
            if (dzero(prod)) continue;
            auto& slot = out.t[t];
            if (slot.empty()) slot.assign(a.dim(), Rational());
            for (int q = 0; q < a.dim(); ++q) slot[q] += prod[q];
        }
    for (auto it = out.t.begin(); it != out.t.end();)
        it = dzero(it->second) ? out.t.erase(it) : std::next(it);
    return out;
}

// conversions (valid when the unit is basis element 0)
inline NCochain to_naive(const hochcalc::Cochain& p) {
    NCochain out{p.arity, {}};
    for (const auto& [t, v] : p.table) out.t[t] = dense_of(*p.alg, v);
    return out;
}

inline bool same(const AlgebraSpec& a, const NCochain& x, const hochcalc::Cochain& y) {
    NCochain yn = to_naive(y);
    if (x.arity != yn.arity) return false;
    std::map<std::vector<int>, Dense> all = x.t;
    for (const auto& [t, v] : yn.t) {
        auto it = all.find(t);
        Dense diff = it == all.end() ? Dense(a.dim()) : it->second;
        for (int q = 0; q < a.dim(); ++q) diff[q] -= v[q];
        if (!dzero(diff)) return false;
        if (it != all.end()) all.erase(it);
    }
    for (const auto& [t, v] : all)
        if (!dzero(v)) return false;
    return true;
}

inline bool same(const AlgebraSpec& a, const NChain& x, const hochcalc::Chain& y) {
    (void)a;
    if (x.length != y.length && !(x.t.empty() && y.table.empty())) return false;
    std::map<std::vector<int>, Rational> diff = x.t;
    for (const auto& [t, v] : y.table) diff[t] -= v;
    for (const auto& [t, v] : diff)
        if (!v.is_zero()) return false;
    return true;
}

inline NChain to_naive(const hochcalc::Chain& c) {
    NChain out{c.length, {}};
    for (const auto& [t, v] : c.table) out.t[t] = v;
    return out;
}

}  // namespace naive
