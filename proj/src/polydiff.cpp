#include "hochcalc/polydiff.hpp"

#include <algorithm>
#include <functional>

namespace hochcalc {

std::vector<Expvec> exponents_of_degree(int nvars, int degree) {
    std::vector<Expvec> out;
    if (degree < 0) return out;
    Expvec cur(nvars, 0);
    std::function<void(int, int)> rec = [&](int v, int left) {
        if (v == nvars - 1) {
            cur[v] = left;
            out.push_back(cur);
            return;
        }
        for (int k = left; k >= 0; --k) {
            cur[v] = k;
            rec(v + 1, left - k);
        }
    };
    if (nvars == 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    rec(0, degree);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Expvec> exponents_up_to(int nvars, int degree) {
    std::vector<Expvec> out;
    for (int d = 0; d <= degree; ++d) {
        auto level = exponents_of_degree(nvars, d);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

int expvec_degree(const Expvec& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

namespace {

Expvec expvec_add(const Expvec& a, const Expvec& b) {
    Expvec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Expvec expvec_sub(const Expvec& a, const Expvec& b) {
    Expvec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

// coefficient of ∂^α(x^γ) = ff(γ, α)·x^{γ-α}
Rational falling(const Expvec& gamma, const Expvec& alpha) {
    Rational f(1);
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        for (int j = 0; j < alpha[i]; ++j) {
            long v = gamma[i] - j;
            if (v <= 0) return Rational(0);
            f *= Rational(v);
        }
    }
    return f;
}

Rational binom_multi(const Expvec& alpha, const Expvec& gamma) {
    Rational b(1);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        long n = alpha[i], k = gamma[i];
        if (k < 0 || k > n) return Rational(0);
        Rational c(1);
        for (long j = 0; j < k; ++j) c *= Rational(n - j) / Rational(j + 1);
        b *= c;
    }
    return b;
}

void for_subindices(const Expvec& alpha, const std::function<void(const Expvec&)>& f) {
    Expvec g(alpha.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
        if (v == alpha.size()) {
            f(g);
            return;
        }
        for (int k = 0; k <= alpha[v]; ++k) {
            g[v] = k;
            rec(v + 1);
        }
    };
    rec(0);
}

// splits of α into `parts` multi-indices with multinomial coefficients
void for_splits(const Expvec& alpha, int parts,
                const std::function<void(const std::vector<Expvec>&, const Rational&)>& f) {
    std::vector<Expvec> split(parts, Expvec(alpha.size(), 0));
    std::function<void(std::size_t, Rational)> rec = [&](std::size_t v, Rational coeff) {
        if (v == alpha.size()) {
            f(split, coeff);
            return;
        }
        std::function<void(int, int, Rational)> dist = [&](int part, int rem, Rational c) {
            if (part == parts - 1) {
                split[part][v] = rem;
                rec(v + 1, c);
                split[part][v] = 0;
                return;
            }
            for (int j = 0; j <= rem; ++j) {
                Rational cc = c;
                for (int t = 0; t < j; ++t) cc *= Rational(rem - t) / Rational(t + 1);
                split[part][v] = j;
                dist(part + 1, rem - j, cc);
                split[part][v] = 0;
            }
        };
        dist(0, alpha[v], coeff);
    };
    rec(0, Rational(1));
}

}  // namespace

bool PolyCochain::is_normalized() const {
    for (const auto& [key, c] : terms)
        for (int i = 1; i <= arity; ++i)
            if (expvec_degree(key[i]) == 0) return false;
    return true;
}

void PolyCochain::add_term(const std::vector<Expvec>& key, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

void PolyChain::add_term(const std::vector<Expvec>& key, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

Poly pd_eval(const PolyCochain& p, const std::vector<Expvec>& monomials) {
    if (static_cast<int>(monomials.size()) != p.arity)
        throw input_error("pd_eval: arity mismatch");
    Poly out;
    for (const auto& [key, c] : p.terms) {
        Rational coeff = c;
        Expvec exp = key[0];
        for (int i = 0; i < p.arity; ++i) {
            coeff *= falling(monomials[i], key[i + 1]);
            if (coeff.is_zero()) break;
            exp = expvec_add(exp, expvec_sub(monomials[i], key[i + 1]));
        }
        if (coeff.is_zero()) continue;
        auto [it, fresh] = out.emplace(exp, coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

PolyCochain pd_boundary(const PolyCochain& p) {
    int k = p.arity;
    PolyCochain out{p.nvars, k + 1, {}};
    for (const auto& [key, c] : p.terms) {
        const Expvec& beta = key[0];
        {
            std::vector<Expvec> nk;
            nk.push_back(beta);
            nk.push_back(Expvec(p.nvars, 0));
            for (int i = 1; i <= k; ++i) nk.push_back(key[i]);
            out.add_term(nk, c);
        }
        for (int j = 1; j <= k; ++j) {
            const Expvec& alpha = key[j];
            for_subindices(alpha, [&](const Expvec& g) {
                std::vector<Expvec> nk;
                nk.push_back(beta);
                for (int i = 1; i < j; ++i) nk.push_back(key[i]);
                nk.push_back(g);
                nk.push_back(expvec_sub(alpha, g));
                for (int i = j + 1; i <= k; ++i) nk.push_back(key[i]);
                out.add_term(nk, c * sign_pow(j) * binom_multi(alpha, g));
            });
        }
        {
            std::vector<Expvec> nk = key;
            nk.push_back(Expvec(p.nvars, 0));
            out.add_term(nk, c * sign_pow(k + 1));
        }
    }
    return out;
}

PolyCochain pd_cup(const PolyCochain& a, const PolyCochain& b) {
    if (a.nvars != b.nvars) throw input_error("pd_cup: variable count mismatch");
    PolyCochain out{a.nvars, a.arity + b.arity, {}};
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            std::vector<Expvec> nk;
            nk.push_back(expvec_add(ka[0], kb[0]));
            for (int i = 1; i <= a.arity; ++i) nk.push_back(ka[i]);
            for (int i = 1; i <= b.arity; ++i) nk.push_back(kb[i]);
            out.add_term(nk, ca * cb);
        }
    return out;
}

namespace {

// insertion sum of Eq. Gerst with the slot cochain a polydifferential op
PolyCochain pd_circ(const PolyCochain& a, const PolyCochain& b) {
    int k1 = a.arity - 1, k2 = b.arity - 1;
    PolyCochain out{a.nvars, a.arity + k2, {}};
    if (a.arity == 0) return out;
    for (int pos = 0; pos <= k1; ++pos) {
        Rational psign = sign_pow(static_cast<long>(pos) * k2);
        for (const auto& [ka, ca] : a.terms) {
            const Expvec& alpha = ka[pos + 1];
            for (const auto& [kb, cb] : b.terms) {
                for_splits(alpha, b.arity + 1, [&](const std::vector<Expvec>& split,
                                                   const Rational& multinom) {
                    Rational ff = falling(kb[0], split[0]);
                    if (ff.is_zero()) return;
                    std::vector<Expvec> nk;
                    nk.push_back(expvec_add(ka[0], expvec_sub(kb[0], split[0])));
                    for (int i = 1; i <= pos; ++i) nk.push_back(ka[i]);
                    for (int j = 1; j <= b.arity; ++j) nk.push_back(expvec_add(kb[j], split[j]));
                    for (int i = pos + 2; i <= a.arity; ++i) nk.push_back(ka[i]);
                    out.add_term(nk, ca * cb * psign * multinom * ff);
                });
            }
        }
    }
    return out;
}

}  // namespace

PolyCochain pd_bracket(const PolyCochain& a, const PolyCochain& b, bool allow_arity0) {
    if (a.nvars != b.nvars) throw input_error("pd_bracket: variable count mismatch");
    if (!allow_arity0 && (a.arity < 1 || b.arity < 1))
        throw input_error("pd_bracket: arity 0 requires the explicit k = -1 extension flag");
    long k1 = a.arity - 1, k2 = b.arity - 1;
    PolyCochain lhs = pd_circ(a, b);
    PolyCochain rhs = pd_circ(b, a);
    return pd_add(lhs, pd_scale(rhs, -sign_pow(k1 * k2)));
}

PolyChain pc_boundary(const PolyChain& c) {
    int m = c.length;
    PolyChain out{c.nvars, m - 1, {}};
    if (m <= 0) return out;
    for (const auto& [key, v] : c.terms) {
        for (int i = 0; i < m; ++i) {
            std::vector<Expvec> nk;
            for (int s = 0; s < i; ++s) nk.push_back(key[s]);
            nk.push_back(expvec_add(key[i], key[i + 1]));
            for (int s = i + 2; s <= m; ++s) nk.push_back(key[s]);
            out.add_term(nk, v * sign_pow(i));
        }
        std::vector<Expvec> nk;
        nk.push_back(expvec_add(key[m], key[0]));
        for (int s = 1; s < m; ++s) nk.push_back(key[s]);
        out.add_term(nk, v * sign_pow(m));
    }
    return out;
}

PolyChain pc_connes_B(const PolyChain& c) {
    int m = c.length;
    PolyChain out{c.nvars, m + 1, {}};
    for (const auto& [key, v] : c.terms) {
        if (expvec_degree(key[0]) == 0) continue;  // slot 0 lands in a slot >= 1
        for (int i = 0; i <= m; ++i) {
            std::vector<Expvec> nk;
            nk.push_back(Expvec(c.nvars, 0));
            for (int s = i; s <= m; ++s) nk.push_back(key[s]);
            for (int s = 0; s < i; ++s) nk.push_back(key[s]);
            out.add_term(nk, v * sign_pow(static_cast<long>(m) * i));
        }
    }
    return out;
}

namespace {

// scatter a polynomial into chain slot pos; constants die in slots >= 1
void pc_scatter(PolyChain& out, std::vector<Expvec> key, int pos, const Poly& poly,
                const Rational& coeff) {
    for (const auto& [exp, c] : poly) {
        if (pos >= 1 && expvec_degree(exp) == 0) continue;
        key[pos] = exp;
        out.add_term(key, coeff * c);
    }
}

}  // namespace

PolyChain pc_contract_I(const PolyCochain& p, const PolyChain& c) {
    if (p.nvars != c.nvars) throw input_error("pc_contract_I: variable count mismatch");
    int k = p.arity, m = c.length;
    PolyChain out{c.nvars, m - k, {}};
    if (m < k) return out;
    for (const auto& [key, v] : c.terms) {
        std::vector<Expvec> args(key.begin() + 1, key.begin() + 1 + k);
        Poly val = pd_eval(p, args);
        if (val.empty()) continue;
        Poly head;
        for (const auto& [exp, cv] : val) head[expvec_add(key[0], exp)] = cv;
        std::vector<Expvec> nk(m - k + 1, Expvec(c.nvars, 0));
        for (int s = k + 1; s <= m; ++s) nk[s - k] = key[s];
        pc_scatter(out, nk, 0, head, v);
    }
    return out;
}

PolyChain pc_lie_L(const PolyCochain& p, const PolyChain& c) {
    if (p.nvars != c.nvars) throw input_error("pc_lie_L: variable count mismatch");
    if (p.arity < 1) throw input_error("pc_lie_L: cochain arity must be >= 1");
    int k = p.arity - 1, m = c.length;
    PolyChain out{c.nvars, m - k, {}};
    if (m < k) return out;
    for (const auto& [key, v] : c.terms) {
        for (int i = 0; i + k <= m; ++i) {
            std::vector<Expvec> args(key.begin() + i, key.begin() + i + k + 1);
            Poly val = pd_eval(p, args);
            if (val.empty()) continue;
            std::vector<Expvec> nk(m - k + 1, Expvec(c.nvars, 0));
            for (int s = 0; s < i; ++s) nk[s] = key[s];
            for (int s = i + k + 1; s <= m; ++s) nk[s - k] = key[s];
            pc_scatter(out, nk, i, val, v * sign_pow(static_cast<long>(k) * i));
        }
        for (int j = std::max(0, m - k); j <= m - 1; ++j) {
            std::vector<Expvec> args;
            for (int s = j + 1; s <= m; ++s) args.push_back(key[s]);
            for (int s = 0; s <= k + j - m; ++s) args.push_back(key[s]);
            Poly val = pd_eval(p, args);
            if (val.empty()) continue;
            std::vector<Expvec> nk(m - k + 1, Expvec(c.nvars, 0));
            for (int s = k + j + 1 - m; s <= j; ++s) nk[s - (k + j - m)] = key[s];
            pc_scatter(out, nk, 0, val, v * sign_pow(static_cast<long>(m) * (j + 1)));
        }
    }
    return out;
}

PolyChain pc_add(const PolyChain& a, const PolyChain& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.length != b.length) throw input_error("pc_add: length mismatch");
    PolyChain out = a;
    for (const auto& [k, v] : b.terms) out.add_term(k, v);
    return out;
}

PolyChain pc_scale(const PolyChain& a, const Rational& c) {
    PolyChain out{a.nvars, a.length, {}};
    if (c.is_zero()) return out;
    for (const auto& [k, v] : a.terms) out.terms[k] = v * c;
    return out;
}

PolyCochain pd_add(const PolyCochain& a, const PolyCochain& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.arity != b.arity) throw input_error("pd_add: arity mismatch");
    PolyCochain out = a;
    for (const auto& [k, v] : b.terms) out.add_term(k, v);
    return out;
}

PolyCochain pd_scale(const PolyCochain& a, const Rational& c) {
    PolyCochain out{a.nvars, a.arity, {}};
    if (c.is_zero()) return out;
    for (const auto& [k, v] : a.terms) out.terms[k] = v * c;
    return out;
}

PDSlice pd_slice(int nvars, int arity, int degree, int order, int total_order) {
    PDSlice s{nvars, arity, degree, order, total_order, {}, {}};
    int beta_deg = degree + total_order;
    if (beta_deg < 0) return s;
    std::vector<Expvec> betas = exponents_of_degree(nvars, beta_deg);
    if (arity == 0) {
        if (total_order == 0)
            for (const auto& beta : betas) {
                std::vector<Expvec> key{beta};
                s.index[key] = static_cast<int>(s.basis.size());
                s.basis.push_back(key);
            }
        return s;
    }
    // the slice at fixed total order carries the full differential: slots
    // range over all multi-indices of degree 1..total_order-(arity-1)
    std::vector<Expvec> slot_choices;
    for (int d = 1; d <= total_order - (arity - 1); ++d) {
        auto level = exponents_of_degree(nvars, d);
        slot_choices.insert(slot_choices.end(), level.begin(), level.end());
    }
    std::vector<Expvec> cur(arity);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == arity) {
            if (left != 0) return;
            for (const auto& beta : betas) {
                std::vector<Expvec> key;
                key.push_back(beta);
                for (const auto& a : cur) key.push_back(a);
                s.index[key] = static_cast<int>(s.basis.size());
                s.basis.push_back(key);
            }
            return;
        }
        for (const auto& a : slot_choices) {
            int d = expvec_degree(a);
            if (d > left) continue;
            cur[pos] = a;
            rec(pos + 1, left - d);
        }
    };
    rec(0, total_order);
    return s;
}

SparseVec pd_encode(const PDSlice& s, const PolyCochain& p) {
    SparseVec out;
    for (const auto& [key, c] : p.terms) {
        auto it = s.index.find(key);
        if (it == s.index.end())
            throw resource_error("pd_encode: term outside the slice; need a larger order bound");
        out.set(it->second, c);
    }
    return out;
}

PolyCochain pd_decode(const PDSlice& s, const SparseVec& v) {
    PolyCochain p{s.nvars, s.arity, {}};
    for (const auto& [i, c] : v.entries()) p.terms[s.basis[i]] = c;
    return p;
}

SparseMatrix pd_boundary_matrix(const PDSlice& from, const PDSlice& to) {
    SparseMatrix m(static_cast<int>(to.dim()), static_cast<int>(from.dim()));
    for (long col = 0; col < from.dim(); ++col) {
        PolyCochain basis{from.nvars, from.arity, {}};
        basis.terms[from.basis[col]] = Rational(1);
        PolyCochain img = pd_boundary(basis);
        m.set_col(static_cast<int>(col), pd_encode(to, img));
    }
    return m;
}

PDCohomology pd_cohomology(int nvars, int arity, int degree, int order) {
    PDCohomology h;
    h.nvars = nvars;
    h.arity = arity;
    h.degree = degree;
    h.order = order;
    int t_lo = arity == 0 ? 0 : arity;
    int t_hi = arity == 0 ? 0 : order;  // order bounds the total differential order
    for (int t = t_lo; t <= t_hi; ++t) {
        PDSlice mid = pd_slice(nvars, arity, degree, order, t);
        PDSlice up = pd_slice(nvars, arity + 1, degree, order, t);
        SparseMatrix d_out = pd_boundary_matrix(mid, up);
        SparseMatrix d_in(static_cast<int>(mid.dim()), 0);
        if (arity >= 1) {
            PDSlice down = pd_slice(nvars, arity - 1, degree, order, t);
            if (down.dim() > 0) d_in = pd_boundary_matrix(down, mid);
        }
        SliceHomology sh = slice_homology(d_out, d_in);
        h.dim += sh.dim;
        for (const auto& r : sh.representatives) h.reps.push_back(pd_decode(mid, r));
        h.slices.push_back(std::move(mid));
        h.homology.push_back(std::move(sh));
    }
    return h;
}

std::optional<SparseVec> PDCohomology::class_of(const PolyCochain& p) const {
    if (p.arity != arity) throw input_error("class_of: arity mismatch");
    std::map<int, PolyCochain> by_t;
    for (const auto& [key, c] : p.terms) {
        int t = 0;
        for (int i = 1; i <= arity; ++i) t += expvec_degree(key[i]);
        auto [it, fresh] = by_t.emplace(t, PolyCochain{nvars, arity, {}});
        it->second.terms[key] = c;
    }
    SparseVec out;
    int offset = 0;
    for (std::size_t s = 0; s < slices.size(); ++s) {
        int t = slices[s].total_order;
        auto it = by_t.find(t);
        if (it != by_t.end()) {
            auto cls = homology[s].class_coords(pd_encode(slices[s], it->second));
            if (!cls) return std::nullopt;
            for (const auto& [i, c] : cls->entries()) out.set(offset + i, c);
            by_t.erase(it);
        }
        offset += static_cast<int>(homology[s].dim);
    }
    if (!by_t.empty())
        throw resource_error("class_of: cochain has total order outside the computed range");
    return out;
}

PCSlice pc_slice(int nvars, int length, int degree) {
    PCSlice s{nvars, length, degree, {}, {}};
    if (length < 0 || degree < length) return s;  // slots >= 1 carry degree >= 1 each
    std::vector<Expvec> cur(length + 1);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == length + 1) {
            if (left != 0) return;
            s.index[cur] = static_cast<int>(s.basis.size());
            s.basis.push_back(cur);
            return;
        }
        int lo = pos == 0 ? 0 : 1;
        for (int d = lo; d <= left; ++d)
            for (const auto& e : exponents_of_degree(nvars, d)) {
                cur[pos] = e;
                rec(pos + 1, left - d);
            }
    };
    rec(0, degree);
    return s;
}

SparseVec pc_encode(const PCSlice& s, const PolyChain& c) {
    SparseVec out;
    for (const auto& [key, v] : c.terms) {
        auto it = s.index.find(key);
        if (it == s.index.end())
            throw resource_error("pc_encode: chain outside the slice; need a larger degree bound");
        out.set(it->second, v);
    }
    return out;
}

PolyChain pc_decode(const PCSlice& s, const SparseVec& v) {
    PolyChain c{s.nvars, s.length, {}};
    for (const auto& [i, val] : v.entries()) c.terms[s.basis[i]] = val;
    return c;
}

SparseMatrix pc_boundary_matrix(const PCSlice& from, const PCSlice& to) {
    SparseMatrix m(static_cast<int>(to.dim()), static_cast<int>(from.dim()));
    for (long col = 0; col < from.dim(); ++col) {
        PolyChain basis{from.nvars, from.length, {}};
        basis.terms[from.basis[col]] = Rational(1);
        m.set_col(static_cast<int>(col), pc_encode(to, pc_boundary(basis)));
    }
    return m;
}

PCHomology pc_homology(int nvars, int length, int degree) {
    PCHomology h;
    h.nvars = nvars;
    h.length = length;
    h.degree = degree;
    h.slice = pc_slice(nvars, length, degree);
    PCSlice up = pc_slice(nvars, length + 1, degree);
    SparseMatrix d_out(0, static_cast<int>(h.slice.dim()));
    if (length >= 1) {
        PCSlice down = pc_slice(nvars, length - 1, degree);
        d_out = pc_boundary_matrix(h.slice, down);
    }
    SparseMatrix d_in = pc_boundary_matrix(up, h.slice);
    h.homology = slice_homology(d_out, d_in);
    h.dim = h.homology.dim;
    for (const auto& r : h.homology.representatives) h.reps.push_back(pc_decode(h.slice, r));
    return h;
}

std::optional<SparseVec> PCHomology::class_of(const PolyChain& c) const {
    if (c.length < 0 && c.is_zero()) return SparseVec();
    if (c.length != length) throw input_error("class_of: length mismatch");
    return homology.class_coords(pc_encode(slice, c));
}

}  // namespace hochcalc
