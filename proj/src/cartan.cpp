#include "hochcalc/cartan.hpp"

#include <algorithm>
#include <functional>

namespace hochcalc {

int mask_size(std::uint32_t mask) { return __builtin_popcount(mask); }

namespace {

Expvec ev_add(const Expvec& a, const Expvec& b) {
    Expvec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

std::vector<int> mask_bits(std::uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; mask >> i; ++i)
        if (mask & (1u << i)) out.push_back(i);
    return out;
}

// sign of sorting the concatenation of two sorted index sets
int shuffle_sign(std::uint32_t s, std::uint32_t t) {
    int inv = 0;
    for (int i : mask_bits(s))
        for (int j : mask_bits(t))
            if (i > j) ++inv;
    return (inv % 2) ? -1 : 1;
}

}  // namespace

void Polyvector::add_term(const Expvec& beta, std::uint32_t mask, const Rational& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(beta, mask);
    auto [it, fresh] = terms.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

void Form::add_term(const Expvec& beta, std::uint32_t mask, const Rational& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(beta, mask);
    auto [it, fresh] = terms.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

Polyvector pv_add(const Polyvector& a, const Polyvector& b) {
    Polyvector r = a;
    if (r.nvars == 0) r.nvars = b.nvars;
    for (const auto& [k, c] : b.terms) r.add_term(k.first, k.second, c);
    return r;
}

Polyvector pv_scale(const Polyvector& a, const Rational& c) {
    Polyvector r{a.nvars, {}};
    if (c.is_zero()) return r;
    for (const auto& [k, v] : a.terms) r.terms[k] = v * c;
    return r;
}

Form form_add(const Form& a, const Form& b) {
    Form r = a;
    if (r.nvars == 0) r.nvars = b.nvars;
    for (const auto& [k, c] : b.terms) r.add_term(k.first, k.second, c);
    return r;
}

Form form_scale(const Form& a, const Rational& c) {
    Form r{a.nvars, {}};
    if (c.is_zero()) return r;
    for (const auto& [k, v] : a.terms) r.terms[k] = v * c;
    return r;
}

Polyvector pv_wedge(const Polyvector& a, const Polyvector& b) {
    Polyvector r{a.nvars ? a.nvars : b.nvars, {}};
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            if (ka.second & kb.second) continue;
            Rational sgn(shuffle_sign(ka.second, kb.second));
            r.add_term(ev_add(ka.first, kb.first), ka.second | kb.second, ca * cb * sgn);
        }
    return r;
}

namespace {

// left odd derivative ∂/∂θ_i: θ_S -> ±θ_{S∖i}
std::optional<std::pair<std::uint32_t, int>> theta_derive(std::uint32_t mask, int i) {
    if (!(mask & (1u << i))) return std::nullopt;
    int before = 0;
    for (int j = 0; j < i; ++j)
        if (mask & (1u << j)) ++before;
    return std::make_pair(mask & ~(1u << i), (before % 2) ? -1 : 1);
}

Polyvector pv_term(int nvars, const Expvec& beta, std::uint32_t mask, const Rational& c) {
    Polyvector p{nvars, {}};
    p.add_term(beta, mask, c);
    return p;
}

}  // namespace

Polyvector schouten(const Polyvector& a, const Polyvector& b) {
    // odd Poisson bracket in the (x, θ) coordinates:
    //   [a, b] = Σ_i (a ∂⃖θ_i)∧(∂⃗x_i b) - (a ∂⃖x_i)∧(∂⃗θ_i b)
    // with a right θ-derivative on the first slot and a left one on the
    // second
    int n = a.nvars ? a.nvars : b.nvars;
    Polyvector r{n, {}};
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            for (int i = 0; i < n; ++i) {
                if ((ka.second & (1u << i)) && kb.first[i] > 0) {
                    int after = 0;
                    for (int j = i + 1; j < n; ++j)
                        if (ka.second & (1u << j)) ++after;
                    Rational s((after % 2) ? -1 : 1);
                    Expvec gb = kb.first;
                    gb[i] -= 1;
                    Polyvector lhs = pv_term(n, ka.first, ka.second & ~(1u << i), ca * s);
                    Polyvector rhs = pv_term(n, gb, kb.second, cb * Rational(kb.first[i]));
                    r = pv_add(r, pv_wedge(lhs, rhs));
                }
                if (ka.first[i] > 0 && (kb.second & (1u << i))) {
                    auto db = theta_derive(kb.second, i);
                    Expvec ga = ka.first;
                    ga[i] -= 1;
                    Polyvector lhs = pv_term(n, ga, ka.second, ca * Rational(ka.first[i]));
                    Polyvector rhs = pv_term(n, kb.first, db->first, cb * Rational(db->second));
                    r = pv_add(r, pv_scale(pv_wedge(lhs, rhs), Rational(-1)));
                }
            }
        }
    return r;
}

Form contract_form(const Polyvector& g, const Form& e) {
    int n = g.nvars ? g.nvars : e.nvars;
    Form r{n, {}};
    for (const auto& [kg, cg] : g.terms) {
        // I_{x^β ∂_S} = x^β · I_{∂_{i1}} ∘ .. ∘ I_{∂_{ik}} with the largest
        // index acting first; each single contraction removes its dx from
        // the left of the remaining factors
        std::vector<int> s = mask_bits(kg.second);
        for (const auto& [ke, ce] : e.terms) {
            std::uint32_t mask = ke.second;
            int sign = 1;
            bool dead = false;
            for (auto it = s.rbegin(); it != s.rend(); ++it) {
                int i = *it;
                if (!(mask & (1u << i))) {
                    dead = true;
                    break;
                }
                int before = 0;
                for (int j = 0; j < i; ++j)
                    if (mask & (1u << j)) ++before;
                if (before % 2) sign = -sign;
                mask &= ~(1u << i);
            }
            if (dead) continue;
            r.add_term(ev_add(kg.first, ke.first), mask, cg * ce * Rational(sign));
        }
    }
    return r;
}

Poly pair_form(const Polyvector& g, const Form& e) {
    Poly out;
    for (const auto& [kg, cg] : g.terms) {
        Polyvector single{g.nvars, {}};
        single.terms[kg] = cg;
        for (const auto& [ke, ce] : e.terms) {
            if (mask_size(ke.second) != mask_size(kg.second)) continue;  // 0 otherwise
            Form fe{e.nvars, {}};
            fe.terms[ke] = ce;
            Form res = contract_form(single, fe);
            for (const auto& [kr, cr] : res.terms) {
                if (kr.second != 0) continue;
                auto [it, fresh] = out.emplace(kr.first, cr);
                if (!fresh) {
                    it->second += cr;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        }
    }
    return out;
}

Form de_rham(const Form& e) {
    Form r{e.nvars, {}};
    for (const auto& [ke, ce] : e.terms) {
        for (int i = 0; i < e.nvars; ++i) {
            if (ke.first[i] == 0) continue;
            if (ke.second & (1u << i)) continue;
            Expvec b = ke.first;
            b[i] -= 1;
            int before = 0;
            for (int j = 0; j < i; ++j)
                if (ke.second & (1u << j)) ++before;
            Rational s = (before % 2) ? Rational(-1) : Rational(1);
            r.add_term(b, ke.second | (1u << i), ce * Rational(ke.first[i]) * s);
        }
    }
    return r;
}

Form lie_derivative(const Polyvector& g, const Form& e) {
    // Cartan formula per homogeneous polyvector degree
    std::map<int, Polyvector> by_deg;
    for (const auto& [k, c] : g.terms) {
        auto [it, fresh] = by_deg.emplace(mask_size(k.second), Polyvector{g.nvars, {}});
        it->second.terms[k] = c;
    }
    Form out{e.nvars ? e.nvars : g.nvars, {}};
    for (const auto& [deg, part] : by_deg) {
        Form t1 = de_rham(contract_form(part, e));
        Form t2 = contract_form(part, de_rham(e));
        out = form_add(out, form_add(t1, form_scale(t2, -sign_pow(deg))));
    }
    return out;
}

bool KahlerForm::is_zero() const {
    for (const auto& c : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

KahlerForm kahler_of(const Polyvector& a1, const Polyvector& a2) {
    // a1·d(a2) in the left-module normal form over dx_i, dθ_j; dx_i is odd
    // in this grading, so it hops past θ_S with a (-1)^{|S|}
    int n = a1.nvars ? a1.nvars : a2.nvars;
    KahlerForm w;
    w.nvars = n;
    w.coeffs.assign(2 * n, Polyvector{n, {}});
    for (const auto& [k, c] : a2.terms) {
        int s = mask_size(k.second);
        for (int i = 0; i < n; ++i) {
            if (k.first[i] > 0) {
                Expvec b = k.first;
                b[i] -= 1;
                Rational coeff = c * Rational(k.first[i]) * sign_pow(s);
                w.coeffs[i] = pv_add(w.coeffs[i], pv_term(n, b, k.second, coeff));
            }
            auto dth = theta_derive(k.second, i);
            if (dth)
                w.coeffs[n + i] = pv_add(
                    w.coeffs[n + i], pv_term(n, k.first, dth->first, c * Rational(dth->second)));
        }
    }
    for (auto& coeff : w.coeffs) coeff = pv_wedge(a1, coeff);
    return w;
}

KahlerForm kahler_add(const KahlerForm& a, const KahlerForm& b) {
    if (a.coeffs.empty()) return b;
    if (b.coeffs.empty()) return a;
    KahlerForm r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
        r.coeffs[i] = pv_add(r.coeffs[i], b.coeffs[i]);
    return r;
}

KahlerForm kahler_scale(const KahlerForm& a, const Rational& c) {
    KahlerForm r = a;
    for (auto& coeff : r.coeffs) coeff = pv_scale(coeff, c);
    return r;
}

namespace {

int pv_degree(const Polyvector& p) {
    int d = -1;
    for (const auto& [k, c] : p.terms) {
        int cur = mask_size(k.second);
        if (d < 0) d = cur;
        if (d != cur) throw input_error("expected a homogeneous polyvector");
    }
    return d < 0 ? 0 : d;
}

}  // namespace

KahlerForm rinehart_bracket(const Polyvector& a1, const Polyvector& a2, const Polyvector& b1,
                            const Polyvector& b2) {
    long da1 = pv_degree(a1), da2 = pv_degree(a2), db1 = pv_degree(b1), db2 = pv_degree(b2);
    KahlerForm t1 = kahler_of(pv_wedge(a1, schouten(a2, b1)), b2);
    t1 = kahler_scale(t1, sign_pow(da2 + 1));
    KahlerForm t2 = kahler_of(pv_wedge(a1, b1), schouten(a2, b2));
    t2 = kahler_scale(t2, sign_pow((da2 + 1) * db1));
    KahlerForm t3 = kahler_of(pv_wedge(b1, schouten(b2, a1)), a2);
    t3 = kahler_scale(t3, sign_pow((da1 + da2 + 1) * (db1 + db2 + 1) + db2));
    return kahler_add(t1, kahler_add(t2, t3));
}

Polyvector rinehart_action(const Polyvector& a1, const Polyvector& a2, const Polyvector& b) {
    long da2 = pv_degree(a2);
    return pv_scale(pv_wedge(a1, schouten(a2, b)), sign_pow(da2 + 1));
}

PolyCochain hkr(const Polyvector& g) {
    PolyCochain out{g.nvars, -1, {}};
    for (const auto& [k, c] : g.terms) {
        std::vector<int> s = mask_bits(k.second);
        int arity = static_cast<int>(s.size());
        if (out.arity < 0)
            out.arity = arity;
        else if (out.arity != arity)
            throw input_error("hkr: polyvector must be homogeneous");
        Rational fact(1);
        for (int i = 2; i <= arity; ++i) fact *= Rational(i);
        // θ_S is read as ∂_{ik}∧..∧∂_{i1} (descending), so the base
        // ordering carries the reversal sign
        Rational base = sign_pow(static_cast<long>(arity) * (arity - 1) / 2);
        std::vector<int> perm = s;
        std::sort(perm.begin(), perm.end());
        do {
            int inv = 0;
            for (std::size_t i = 0; i < perm.size(); ++i)
                for (std::size_t j = i + 1; j < perm.size(); ++j)
                    if (perm[i] > perm[j]) ++inv;
            std::vector<Expvec> key;
            key.push_back(k.first);
            for (int idx : perm) {
                Expvec e(g.nvars, 0);
                e[idx] = 1;
                key.push_back(e);
            }
            out.add_term(key, c * base * Rational((inv % 2) ? -1 : 1) / fact);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    if (out.arity < 0) out.arity = 0;
    return out;
}

Form chkr(const PolyChain& c) {
    int n = c.nvars;
    Form out{n, {}};
    int m = c.length;
    Rational fact(1);
    for (int i = 2; i <= m; ++i) fact *= Rational(i);
    for (const auto& [key, v] : c.terms) {
        // (1/m!) x^{β0} dβ1 ∧ .. ∧ dβm
        std::vector<int> choice(m, 0);
        std::function<void(int, Expvec, Rational, std::uint32_t)> rec =
            [&](int slot, Expvec beta, Rational coeff, std::uint32_t mask) {
                if (slot == m) {
                    int inv = 0;
                    for (int i = 0; i < m; ++i)
                        for (int j = i + 1; j < m; ++j)
                            if (choice[i] > choice[j]) ++inv;
                    out.add_term(beta, mask, coeff * Rational((inv % 2) ? -1 : 1) / fact);
                    return;
                }
                const Expvec& b = key[slot + 1];
                for (int i = 0; i < n; ++i) {
                    if (b[i] == 0 || (mask & (1u << i))) continue;
                    Expvec nb = beta;
                    for (int t = 0; t < n; ++t) nb[t] += b[t];
                    nb[i] -= 1;
                    choice[slot] = i;
                    rec(slot + 1, nb, coeff * Rational(b[i]), mask | (1u << i));
                }
            };
        rec(0, key[0], v, 0u);
    }
    return out;
}

Poly chain_on_cochain(const PolyChain& c, const PolyCochain& p) {
    if (c.length != p.arity) throw input_error("chain_on_cochain: arity mismatch");
    Poly out;
    for (const auto& [key, v] : c.terms) {
        std::vector<Expvec> args(key.begin() + 1, key.end());
        Poly val = pd_eval(p, args);
        for (const auto& [e, cv] : val) {
            Expvec exp = ev_add(e, key[0]);
            auto [it, fresh] = out.emplace(exp, cv * v);
            if (!fresh) {
                it->second += cv * v;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

// ---- CalculusData from the Cartan operations ------------------------------

namespace {

struct CartanBasis {
    int nvars, weight_bound;
    std::map<int, std::vector<std::pair<Expvec, std::uint32_t>>> v, w;
    std::map<int, std::map<std::pair<Expvec, std::uint32_t>, int>> v_index, w_index;

    CartanBasis(int n, int wb) : nvars(n), weight_bound(wb) {
        auto betas = exponents_up_to(n, wb);
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            int k = mask_size(mask);
            for (const auto& b : betas) {
                v[k].push_back({b, mask});
                v_index[k][{b, mask}] = static_cast<int>(v[k].size()) - 1;
                w[-k].push_back({b, mask});
                w_index[k][{b, mask}] = static_cast<int>(w[-k].size()) - 1;
            }
        }
    }

    std::optional<SparseVec> encode_v(const Polyvector& p, int degree) const {
        SparseVec out;
        const auto& idx = v_index.at(degree);
        for (const auto& [key, c] : p.terms) {
            if (mask_size(key.second) != degree) throw input_error("degree mismatch");
            auto it = idx.find(key);
            if (it == idx.end()) return std::nullopt;
            out.set(it->second, c);
        }
        return out;
    }
    std::optional<SparseVec> encode_w(const Form& f, int degree /* -m */) const {
        SparseVec out;
        const auto& idx = w_index.at(-degree);
        for (const auto& [key, c] : f.terms) {
            if (-mask_size(key.second) != degree) throw input_error("degree mismatch");
            auto it = idx.find(key);
            if (it == idx.end()) return std::nullopt;
            out.set(it->second, c);
        }
        return out;
    }
};

}  // namespace

CalculusData cartan_calculus_data(int nvars, int weight_bound) {
    if (nvars < 1 || nvars > 4) throw input_error("cartan_calculus_data: 1 <= nvars <= 4");
    CartanBasis basis(nvars, weight_bound);
    CalculusData out;
    for (const auto& [k, list] : basis.v) out.v_dims[k] = static_cast<int>(list.size());
    for (const auto& [mdeg, list] : basis.w) out.w_dims[mdeg] = static_cast<int>(list.size());

    auto pv_of = [&](int deg, int idx) {
        Polyvector p{nvars, {}};
        p.terms[basis.v.at(deg)[idx]] = Rational(1);
        return p;
    };
    auto form_of = [&](int deg, int idx) {
        Form f{nvars, {}};
        f.terms[basis.w.at(deg)[idx]] = Rational(1);
        return f;
    };

    for (const auto& [d1, l1] : basis.v)
        for (int i = 0; i < (int)l1.size(); ++i) {
            for (const auto& [d2, l2] : basis.v)
                for (int j = 0; j < (int)l2.size(); ++j) {
                    Polyvector a = pv_of(d1, i), b = pv_of(d2, j);
                    if (d1 + d2 <= nvars) {
                        auto enc = basis.encode_v(pv_wedge(a, b), d1 + d2);
                        if (enc) out.wedge[{d1, i, d2, j}] = *enc;
                    }
                    int bd = d1 + d2 - 1;
                    if (bd >= 0 && bd <= nvars) {
                        auto enc = basis.encode_v(schouten(a, b), bd);
                        if (enc) out.bracket[{d1, i, d2, j}] = *enc;
                    }
                }
            for (const auto& [wd, lw] : basis.w)
                for (int j = 0; j < (int)lw.size(); ++j) {
                    Polyvector a = pv_of(d1, i);
                    Form f = form_of(wd, j);
                    int target_i = d1 + wd;
                    if (-target_i >= 0 && -target_i <= nvars) {
                        auto enc = basis.encode_w(contract_form(a, f), target_i);
                        if (enc) out.contract[{d1, i, wd, j}] = *enc;
                    }
                    int target_l = d1 + wd - 1;
                    if (-target_l >= 0 && -target_l <= nvars) {
                        auto enc = basis.encode_w(lie_derivative(a, f), target_l);
                        if (enc) out.lie[{d1, i, wd, j}] = *enc;
                    }
                }
        }
    for (const auto& [wd, lw] : basis.w)
        for (int j = 0; j < (int)lw.size(); ++j) {
            if (-(wd - 1) > nvars) continue;
            auto enc = basis.encode_w(de_rham(form_of(wd, j)), wd - 1);
            if (enc) out.delta[{wd, j}] = *enc;
        }
    return out;
}

// ---- verify_hkr ------------------------------------------------------------

namespace {

long binom_int(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

long monom_count(int nvars, int degree) {
    if (degree < 0) return 0;
    return binom_int(degree + nvars - 1, nvars - 1);
}

std::vector<Polyvector> v_basis(int nvars, int k, int d) {
    // terms x^β ∂_S with |S| = k and |β| = d + k
    std::vector<Polyvector> out;
    if (d + k < 0 || k > nvars) return out;
    for (std::uint32_t mask = 0; mask < (1u << nvars); ++mask) {
        if (mask_size(mask) != k) continue;
        for (const auto& b : exponents_of_degree(nvars, d + k)) {
            Polyvector p{nvars, {}};
            p.add_term(b, mask, Rational(1));
            out.push_back(p);
        }
    }
    return out;
}

struct FormIndex {
    std::map<std::pair<Expvec, std::uint32_t>, int> index;
    int count = 0;
    int at(const std::pair<Expvec, std::uint32_t>& key) {
        auto [it, fresh] = index.emplace(key, count);
        if (fresh) ++count;
        return it->second;
    }
    SparseVec encode(const Form& f) {
        SparseVec out;
        for (const auto& [k, c] : f.terms) out.set(at(k), c);
        return out;
    }
};

}  // namespace

HkrReport verify_hkr(int nvars, int degree_bound, int arity_bound, int order_bound) {
    HkrReport rep;
    rep.nvars = nvars;
    rep.degree_bound = degree_bound;
    rep.arity_bound = arity_bound;
    rep.order_bound = order_bound;

    auto check = [&](const std::string& id, bool ok, const std::string& witness) {
        rep.checks.push_back({id, ok ? "pass" : "fail", ok ? "" : witness});
    };

    // cochain-side dims per (arity, internal degree), order-stability re-run
    for (int k = 0; k <= arity_bound; ++k)
        for (int d = -arity_bound; d <= degree_bound; ++d) {
            PDCohomology h = pd_cohomology(nvars, k, d, order_bound);
            PDCohomology h2 = pd_cohomology(nvars, k, d, order_bound + 1);
            long vdim = k > nvars ? 0 : binom_int(nvars, k) * monom_count(nvars, d + k);
            bool ok = h.dim == vdim && h2.dim == vdim;
            check("hh-dims-k" + std::to_string(k) + "-d" + std::to_string(d), ok,
                  "hh dim " + std::to_string(h.dim) + " (order+1: " + std::to_string(h2.dim) +
                      ") vs V dim " + std::to_string(vdim));
        }

    // hkr lands in cocycles and induces a bijection on classes
    for (int k = 0; k <= std::min(arity_bound, nvars); ++k)
        for (int d = -k; d <= degree_bound; ++d) {
            auto basis = v_basis(nvars, k, d);
            if (basis.empty()) continue;
            bool cocycle_ok = true;
            std::string wit;
            PDCohomology h = pd_cohomology(nvars, k, d, order_bound);
            EchelonBasis classes;
            long rank = 0;
            for (const auto& g : basis) {
                PolyCochain hg = hkr(g);
                if (!pd_boundary(hg).is_zero()) {
                    cocycle_ok = false;
                    wit = "hkr image not closed at k=" + std::to_string(k);
                    break;
                }
                auto cls = h.class_of(hg);
                if (!cls) {
                    cocycle_ok = false;
                    wit = "hkr image has no class at k=" + std::to_string(k);
                    break;
                }
                if (classes.insert(*cls)) ++rank;
            }
            check("hkr-chain-map-k" + std::to_string(k) + "-d" + std::to_string(d), cocycle_ok,
                  wit);
            check("hkr-bijective-k" + std::to_string(k) + "-d" + std::to_string(d),
                  cocycle_ok && rank == h.dim && rank == (long)basis.size(),
                  "class rank " + std::to_string(rank) + " vs dim " + std::to_string(h.dim));
        }

    // chain side: dims, chkr chain map, chkr∘B = d∘chkr, the pairing
    // characterization, bijectivity on classes
    for (int m = 0; m <= arity_bound; ++m)
        for (int t = m; t <= degree_bound + m; ++t) {
            PCHomology h = pc_homology(nvars, m, t);
            long wdim = m > nvars ? 0 : binom_int(nvars, m) * monom_count(nvars, t - m);
            check("hh-chain-dims-m" + std::to_string(m) + "-t" + std::to_string(t), h.dim == wdim,
                  "hh dim " + std::to_string(h.dim) + " vs form dim " + std::to_string(wdim));

            const PCSlice& slice = h.slice;
            bool cm_ok = true, bd_ok = true, pairing_ok = true;
            for (long i = 0; i < slice.dim(); ++i) {
                PolyChain basis{nvars, m, {}};
                basis.terms[slice.basis[i]] = Rational(1);
                if (!chkr(pc_boundary(basis)).is_zero()) cm_ok = false;
                Form lhs = chkr(pc_connes_B(basis));
                Form rhs = de_rham(chkr(basis));
                if (!(lhs == rhs)) bd_ok = false;
                for (const auto& g : v_basis(nvars, m, t - 2 * m)) {
                    Poly lhsp = pair_form(g, chkr(basis));
                    Poly rhsp = chain_on_cochain(basis, hkr(g));
                    if (!(lhsp == rhsp)) pairing_ok = false;
                }
            }
            check("chkr-chain-map-m" + std::to_string(m) + "-t" + std::to_string(t), cm_ok, "");
            check("chkr-b-derham-m" + std::to_string(m) + "-t" + std::to_string(t), bd_ok, "");
            check("hkr111-m" + std::to_string(m) + "-t" + std::to_string(t), pairing_ok, "");

            FormIndex fidx;
            EchelonBasis span;
            long rank = 0;
            for (const auto& r : h.reps)
                if (span.insert(fidx.encode(chkr(r)))) ++rank;
            check("chkr-bijective-m" + std::to_string(m) + "-t" + std::to_string(t),
                  rank == h.dim && h.dim == wdim,
                  "form rank " + std::to_string(rank) + " vs dim " + std::to_string(h.dim));
        }

    // transport of i and l onto the Cartan contraction and Lie derivative
    SignsManifest signs = SignsManifest::builtin();
    for (int k = 0; k <= std::min(arity_bound, nvars); ++k)
        for (int d = -k; d <= degree_bound; ++d)
            for (const auto& g : v_basis(nvars, k, d)) {
                PolyCochain hg = hkr(g);
                for (int m = k; m <= arity_bound; ++m)
                    for (int t = m; t <= degree_bound + m - std::max(0, d); ++t) {
                        PCHomology h = pc_homology(nvars, m, t);
                        bool i_ok = true, l_ok = true;
                        for (const auto& r : h.reps) {
                            Form lhs = chkr(pc_contract_I(hg, r));
                            Form rhs = contract_form(g, chkr(r));
                            if (!(lhs == rhs)) i_ok = false;
                            if (k >= 1) {
                                Form llhs =
                                    form_scale(chkr(pc_lie_L(hg, r)), induced_l_twist(signs, k));
                                Form lrhs = lie_derivative(g, chkr(r));
                                if (!(llhs == lrhs)) l_ok = false;
                            }
                        }
                        check("transport-i-k" + std::to_string(k) + "-d" + std::to_string(d) +
                                  "-m" + std::to_string(m) + "-t" + std::to_string(t),
                              i_ok, "contraction transport mismatch");
                        if (k >= 1)
                            check("transport-l-k" + std::to_string(k) + "-d" + std::to_string(d) +
                                      "-m" + std::to_string(m) + "-t" + std::to_string(t),
                                  l_ok, "lie transport mismatch");
                    }
            }

    // cup and bracket transport on classes
    for (int k1 = 0; k1 <= std::min(arity_bound, nvars); ++k1)
        for (int k2 = 0; k2 + k1 <= std::min(arity_bound, nvars); ++k2)
            for (int d1 = -k1; d1 <= 1; ++d1)
                for (int d2 = -k2; d2 <= 1; ++d2) {
                    if (d1 + d2 > degree_bound) continue;
                    bool cup_ok = true, br_ok = true;
                    PDCohomology hw = pd_cohomology(nvars, k1 + k2, d1 + d2, order_bound);
                    PDCohomology hb =
                        k1 + k2 >= 1 ? pd_cohomology(nvars, k1 + k2 - 1, d1 + d2, order_bound)
                                     : PDCohomology{};
                    Rational cup_sign = sign_pow(
                        eval_exponent(signs.at("transport-cup").e1, k1, k2));
                    Rational br_sign = sign_pow(
                        eval_exponent(signs.at("transport-bracket").e1, k1, k2));
                    for (const auto& g1 : v_basis(nvars, k1, d1))
                        for (const auto& g2 : v_basis(nvars, k2, d2)) {
                            auto lhs = hw.class_of(pd_cup(hkr(g1), hkr(g2)));
                            Polyvector w = pv_wedge(g1, g2);
                            auto rhs = w.is_zero() ? std::optional<SparseVec>(SparseVec())
                                                   : hw.class_of(hkr(w));
                            if (!lhs || !rhs)
                                cup_ok = false;
                            else {
                                SparseVec diff = *lhs;
                                diff.axpy(-cup_sign, *rhs);
                                if (!diff.is_zero()) cup_ok = false;
                            }
                            if (k1 + k2 >= 1) {
                                auto bl = hb.class_of(pd_bracket(hkr(g1), hkr(g2), true));
                                Polyvector sb = schouten(g1, g2);
                                auto br = sb.is_zero() ? std::optional<SparseVec>(SparseVec())
                                                       : hb.class_of(hkr(sb));
                                if (!bl || !br)
                                    br_ok = false;
                                else {
                                    SparseVec diff = *bl;
                                    diff.axpy(-br_sign, *br);
                                    if (!diff.is_zero()) br_ok = false;
                                }
                            }
                        }
                    check("transport-cup-k" + std::to_string(k1) + std::to_string(k2) + "-d" +
                              std::to_string(d1) + std::to_string(d2),
                          cup_ok, "cup transport mismatch");
                    if (k1 + k2 >= 1)
                        check("transport-bracket-k" + std::to_string(k1) + std::to_string(k2) +
                                  "-d" + std::to_string(d1) + std::to_string(d2),
                              br_ok, "bracket transport mismatch");
                }

    return rep;
}

}  // namespace hochcalc
