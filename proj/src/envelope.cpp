#include "hochcalc/envelope.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hochcalc {

namespace {

Expvec zero_exp(int n) { return Expvec(n, 0); }

bool is_unit_mono(const EnvSym& s) { return s.mask == 0 && expvec_degree(s.beta) == 0; }

// |v| for v = x^β θ_S
int v_degree(const EnvSym& s) { return mask_size(s.mask); }

int sym_degree(const EnvSym& s) {
    switch (s.kind) {
        case EnvSym::I: return v_degree(s);
        case EnvSym::L: return v_degree(s) - 1;
        default: return -1;
    }
}

int sym_weight(const EnvSym& s) {
    if (s.kind == EnvSym::Delta || s.kind == EnvSym::Md) return 0;
    return expvec_degree(s.beta) + mask_size(s.mask);
}

bool is_l_generator(const EnvSym& s) {
    return s.kind == EnvSym::L && expvec_degree(s.beta) + mask_size(s.mask) == 1;
}

// sort key for generator l-symbols: all l_{x_i} before all l_{θ_j}
std::pair<int, int> l_gen_key(const EnvSym& s) {
    if (s.mask == 0) {
        for (std::size_t i = 0; i < s.beta.size(); ++i)
            if (s.beta[i] == 1) return {0, static_cast<int>(i)};
    }
    for (int j = 0; s.mask >> j; ++j)
        if (s.mask & (1u << j)) return {1, j};
    throw input_error("not a generator l-symbol");
}

Polyvector pv_of_sym(int n, const EnvSym& s) {
    Polyvector p{n, {}};
    p.add_term(s.beta, s.mask, Rational(1));
    return p;
}

}  // namespace

void EnvElement::add_term(const EnvWord& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

EnvSym sym_i(const Expvec& beta, std::uint32_t mask) { return EnvSym{EnvSym::I, beta, mask}; }
EnvSym sym_l(const Expvec& beta, std::uint32_t mask) { return EnvSym{EnvSym::L, beta, mask}; }
EnvSym sym_delta() { return EnvSym{EnvSym::Delta, {}, 0}; }
EnvSym sym_md() { return EnvSym{EnvSym::Md, {}, 0}; }

EnvElement env_one(int nvars) {
    EnvElement e{nvars, {}};
    e.terms[{}] = Rational(1);
    return e;
}

EnvElement env_of(int nvars, const EnvWord& w) {
    EnvElement e{nvars, {}};
    e.terms[w] = Rational(1);
    return e;
}

EnvElement env_add(const EnvElement& a, const EnvElement& b) {
    EnvElement r = a;
    if (r.nvars == 0) r.nvars = b.nvars;
    for (const auto& [w, c] : b.terms) r.add_term(w, c);
    return r;
}

EnvElement env_scale(const EnvElement& a, const Rational& c) {
    EnvElement r{a.nvars, {}};
    if (c.is_zero()) return r;
    for (const auto& [w, v] : a.terms) r.terms[w] = v * c;
    return r;
}

EnvElement env_mul(const EnvElement& a, const EnvElement& b) {
    EnvElement r{a.nvars ? a.nvars : b.nvars, {}};
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms) {
            EnvWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    return r;
}

int env_word_weight(const EnvWord& w) {
    int t = 0;
    for (const auto& s : w) t += sym_weight(s);
    return t;
}

int env_word_degree(const EnvWord& w) {
    int t = 0;
    for (const auto& s : w) t += sym_degree(s);
    return t;
}

namespace {

// i of a general polyvector: one i-monomial symbol per term (the unit
// monomial contributes the bare word)
EnvElement env_i_of(int n, const Polyvector& p, const EnvWord& prefix, const EnvWord& suffix) {
    EnvElement out{n, {}};
    for (const auto& [k, c] : p.terms) {
        EnvWord w = prefix;
        if (!(expvec_degree(k.first) == 0 && k.second == 0)) w.push_back(sym_i(k.first, k.second));
        w.insert(w.end(), suffix.begin(), suffix.end());
        out.add_term(w, c);
    }
    return out;
}

struct Rewriter {
    int nvars;
    EnvMode mode;
    int weight_bound;
    std::vector<std::pair<EnvWord, Rational>> queue;
    long steps = 0;

    void push(const EnvWord& w, const Rational& c) {
        if (c.is_zero()) return;
        if (env_word_weight(w) > weight_bound)
            throw resource_error("envelope rewriting exceeded weight bound " +
                                 std::to_string(weight_bound));
        queue.push_back({w, c});
    }

    void push_all(const EnvElement& e, const Rational& c) {
        for (const auto& [w, v] : e.terms) push(w, v * c);
    }

    // applies the leftmost reduction; returns false when w is normal
    bool step(const EnvWord& w, const Rational& coeff) {
        int n = nvars;
        for (std::size_t p = 0; p < w.size(); ++p) {
            const EnvSym& s = w[p];
            if (s.kind == EnvSym::I && is_unit_mono(s)) {
                EnvWord nw(w.begin(), w.begin() + p);
                nw.insert(nw.end(), w.begin() + p + 1, w.end());
                push(nw, coeff);
                return true;
            }
            if (s.kind == EnvSym::L && is_unit_mono(s)) return true;  // l_1 = 0
            if (s.kind == EnvSym::Delta && mode == EnvMode::Y0)
                throw input_error("delta symbol in mode Y0");

            // expand composite l via l_{g·v} = l_g i_v + (-1)^{|g|} i_g l_v
            if (s.kind == EnvSym::L && !is_l_generator(s)) {
                EnvWord pre(w.begin(), w.begin() + p);
                EnvWord post(w.begin() + p + 1, w.end());
                Expvec gb = zero_exp(n), rb = s.beta;
                std::uint32_t gm = 0, rm = s.mask;
                int gi = -1;
                for (std::size_t i = 0; i < s.beta.size(); ++i)
                    if (s.beta[i] > 0) {
                        gi = static_cast<int>(i);
                        break;
                    }
                if (gi >= 0) {
                    gb[gi] = 1;
                    rb[gi] -= 1;
                } else {
                    std::uint32_t low = s.mask & (~(s.mask - 1));
                    gm = low;
                    rm = s.mask & ~low;
                }
                int gdeg = mask_size(gm);
                {
                    EnvWord nw = pre;
                    nw.push_back(sym_l(gb, gm));
                    if (!(expvec_degree(rb) == 0 && rm == 0)) nw.push_back(sym_i(rb, rm));
                    nw.insert(nw.end(), post.begin(), post.end());
                    push(nw, coeff);
                }
                {
                    EnvWord nw = pre;
                    nw.push_back(sym_i(gb, gm));
                    nw.push_back(sym_l(rb, rm));
                    nw.insert(nw.end(), post.begin(), post.end());
                    push(nw, coeff * sign_pow(gdeg));
                }
                return true;
            }

            if (p + 1 >= w.size()) continue;
            const EnvSym& t = w[p + 1];
            EnvWord pre(w.begin(), w.begin() + p);
            EnvWord post(w.begin() + p + 2, w.end());

            if (s.kind == EnvSym::I && t.kind == EnvSym::I) {
                Polyvector prod = pv_wedge(pv_of_sym(n, s), pv_of_sym(n, t));
                push_all(env_i_of(n, prod, pre, post), coeff);
                return true;
            }
            // l_v i_w = (-1)^{|w|(|v|-1)}( i_w l_v - i_{[w,v]} )
            if (s.kind == EnvSym::L && t.kind == EnvSym::I) {
                long sv = v_degree(s) - 1, sw = v_degree(t);
                Rational sgn = sign_pow(sw * sv);
                {
                    EnvWord nw = pre;
                    nw.push_back(t);
                    nw.push_back(s);
                    nw.insert(nw.end(), post.begin(), post.end());
                    push(nw, coeff * sgn);
                }
                Polyvector br = schouten(pv_of_sym(n, t), pv_of_sym(n, s));
                push_all(env_i_of(n, br, pre, post), coeff * (-sgn));
                return true;
            }
            // δ/𝔡 pushed rightward
            if ((s.kind == EnvSym::Delta || s.kind == EnvSym::Md) && t.kind != EnvSym::Delta &&
                t.kind != EnvSym::Md) {
                long td = sym_degree(t);
                Rational sgn = sign_pow(td);
                EnvWord nw = pre;
                nw.push_back(t);
                nw.push_back(s);
                nw.insert(nw.end(), post.begin(), post.end());
                push(nw, coeff * sgn);
                if (s.kind == EnvSym::Delta && t.kind == EnvSym::I) {
                    // [δ, i_v] = l_v
                    EnvWord lw = pre;
                    lw.push_back(sym_l(t.beta, t.mask));
                    lw.insert(lw.end(), post.begin(), post.end());
                    push(lw, coeff);
                }
                return true;
            }
            if ((s.kind == EnvSym::Delta && t.kind == EnvSym::Delta) ||
                (s.kind == EnvSym::Md && t.kind == EnvSym::Md))
                return true;  // square zero
            if (s.kind == EnvSym::Md && t.kind == EnvSym::Delta) {
                EnvWord nw = pre;
                nw.push_back(t);
                nw.push_back(s);
                nw.insert(nw.end(), post.begin(), post.end());
                push(nw, coeff * Rational(-1));
                return true;
            }
            // sort generator l's; odd generators square to zero
            if (s.kind == EnvSym::L && t.kind == EnvSym::L) {
                auto ka = l_gen_key(s), kb = l_gen_key(t);
                long da = sym_degree(s), db = sym_degree(t);
                if (ka == kb && (da % 2 != 0)) return true;
                if (kb < ka) {
                    EnvWord nw = pre;
                    nw.push_back(t);
                    nw.push_back(s);
                    nw.insert(nw.end(), post.begin(), post.end());
                    push(nw, coeff * sign_pow(da * db));
                    return true;
                }
            }
        }
        return false;
    }

    EnvElement run(const EnvElement& e) {
        for (const auto& [w, c] : e.terms) push(w, c);
        EnvElement out{nvars, {}};
        while (!queue.empty()) {
            if (++steps > 5000000)
                throw resource_error("envelope rewriting did not terminate within bounds");
            auto [w, c] = queue.back();
            queue.pop_back();
            if (!step(w, c)) out.add_term(w, c);
        }
        return out;
    }
};

}  // namespace

EnvElement normal_form(const EnvElement& e, EnvMode mode, int weight_bound) {
    Rewriter rw{e.nvars, mode, weight_bound};
    return rw.run(e);
}

Form act_on_forms(const EnvElement& e, const Form& phi) {
    Form out{phi.nvars, {}};
    for (const auto& [w, c] : e.terms) {
        Form cur = phi;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            switch (it->kind) {
                case EnvSym::I:
                    cur = contract_form(pv_of_sym(phi.nvars, *it), cur);
                    break;
                case EnvSym::L:
                    cur = lie_derivative(pv_of_sym(phi.nvars, *it), cur);
                    break;
                case EnvSym::Delta:
                    cur = de_rham(cur);
                    break;
                case EnvSym::Md: {
                    Form d1 = de_rham(cur);
                    Form d2 = act_on_forms(de_rham_word(phi.nvars), cur);
                    cur = form_add(d1, form_scale(d2, Rational(-1)));
                    break;
                }
            }
            if (cur.is_zero()) break;
        }
        out = form_add(out, form_scale(cur, c));
    }
    return out;
}

EnvElement de_rham_word(int nvars) {
    // d = Σ_i l_{x_i} l_{θ_i}
    EnvElement out{nvars, {}};
    for (int i = 0; i < nvars; ++i) {
        Expvec xi = zero_exp(nvars);
        xi[i] = 1;
        EnvWord w;
        w.push_back(sym_l(xi, 0));
        w.push_back(sym_l(zero_exp(nvars), 1u << i));
        out.add_term(w, Rational(1));
    }
    return out;
}

EnvElement substitute_d(const EnvElement& e, int weight_bound) {
    EnvElement d = de_rham_word(e.nvars);
    EnvElement out{e.nvars, {}};
    for (const auto& [w, c] : e.terms) {
        EnvElement acc = env_scale(env_one(e.nvars), c);
        for (const auto& s : w) {
            EnvElement factor{e.nvars, {}};
            if (s.kind == EnvSym::Delta) {
                factor.add_term({sym_md()}, Rational(1));
                factor = env_add(factor, d);
            } else {
                factor.add_term({s}, Rational(1));
            }
            acc = env_mul(acc, factor);
        }
        out = env_add(out, acc);
    }
    return normal_form(out, EnvMode::Y, weight_bound);
}

std::vector<PbwSlice> graded_dims(int nvars, int k_max, int weight_max) {
    std::vector<EnvSym> gens_i, gens_l;
    for (std::uint32_t mask = 0; mask < (1u << nvars); ++mask)
        for (int bd = 0; bd + mask_size(mask) <= weight_max; ++bd)
            for (const auto& b : exponents_of_degree(nvars, bd)) {
                if (bd + mask_size(mask) == 0) continue;
                gens_i.push_back(sym_i(b, mask));
                gens_l.push_back(sym_l(b, mask));
            }

    struct Entry {
        EnvWord word;
        int l_count;
        int weight;
    };
    std::vector<Entry> words;
    EnvWord cur;
    std::function<void(int, int)> rec = [&](int weight, int lc) {
        words.push_back({cur, lc, weight});
        // words are built in nonincreasing symbol classes to cut duplicates;
        // full generality is unnecessary for a spanning set, but we keep all
        // orderings since the rewriting itself is being exercised
        for (const auto& g : gens_i) {
            int wgt = sym_weight(g);
            if (weight + wgt > weight_max) continue;
            cur.push_back(g);
            rec(weight + wgt, lc);
            cur.pop_back();
        }
        if (lc < k_max)
            for (const auto& g : gens_l) {
                int wgt = sym_weight(g);
                if (weight + wgt > weight_max) continue;
                cur.push_back(g);
                rec(weight + wgt, lc + 1);
                cur.pop_back();
            }
    };
    rec(0, 0);

    std::map<EnvWord, int> nf_index;
    auto encode = [&](const EnvElement& e) {
        SparseVec v;
        for (const auto& [w, c] : e.terms) {
            auto [it, fresh] = nf_index.emplace(w, static_cast<int>(nf_index.size()));
            v.set(it->second, c);
        }
        return v;
    };

    // normal forms once per word
    std::vector<SparseVec> nf;
    nf.reserve(words.size());
    for (const auto& en : words)
        nf.push_back(encode(normal_form(env_of(nvars, en.word), EnvMode::Y0, weight_max)));

    std::map<std::pair<int, int>, long> rank;
    for (int k = 0; k <= k_max; ++k)
        for (int wgt = 0; wgt <= weight_max; ++wgt) {
            EchelonBasis span;
            long r = 0;
            for (std::size_t i = 0; i < words.size(); ++i) {
                if (words[i].l_count > k || words[i].weight > wgt) continue;
                if (span.insert(nf[i])) ++r;
            }
            rank[{k, wgt}] = r;
        }
    auto rk = [&](int k, int wgt) {
        if (k < 0 || wgt < 0) return 0l;
        return rank.at({std::min(k, k_max), wgt});
    };

    // V ⊗ S^k(Ω¹) at exact weight: basis (β, S) ⊗ dx_T ⊗ dθ^μ with
    // |T| + Σμ = k; dx odd (square-free), dθ even; every generator and
    // every dx/dθ has weight 1
    auto sym_dim = [&](int k, int wgt) {
        long count = 0;
        for (std::uint32_t vm = 0; vm < (1u << nvars); ++vm)
            for (int bd = 0; bd + mask_size(vm) + k <= wgt; ++bd) {
                if (bd + mask_size(vm) + k != wgt) continue;
                long vcount = static_cast<long>(exponents_of_degree(nvars, bd).size());
                for (std::uint32_t tm = 0; tm < (1u << nvars); ++tm) {
                    int tcnt = mask_size(tm);
                    if (tcnt > k) continue;
                    long mu = static_cast<long>(exponents_of_degree(nvars, k - tcnt).size());
                    count += vcount * mu;
                }
            }
        return count;
    };

    std::vector<PbwSlice> out;
    for (int k = 0; k <= k_max; ++k)
        for (int wgt = 0; wgt <= weight_max; ++wgt) {
            PbwSlice s;
            s.l_count = k;
            s.weight = wgt;
            s.pbw_dim = rk(k, wgt) - rk(k - 1, wgt) - rk(k, wgt - 1) + rk(k - 1, wgt - 1);
            s.sym_dim = sym_dim(k, wgt);
            out.push_back(s);
        }
    return out;
}

Poly apply_diffop(const DiffOp& d, const Poly& p) {
    Poly out;
    for (const auto& [key, c] : d.terms)
        for (const auto& [e, v] : p) {
            Rational coeff = c * v;
            Expvec res = e;
            bool dead = false;
            for (int i = 0; i < d.nvars; ++i) {
                for (int j = 0; j < key.second[i]; ++j) {
                    if (res[i] == 0) {
                        dead = true;
                        break;
                    }
                    coeff *= Rational(res[i]);
                    res[i] -= 1;
                }
                if (dead) break;
                res[i] += key.first[i];
            }
            if (dead || coeff.is_zero()) continue;
            auto [it, fresh] = out.emplace(res, coeff);
            if (!fresh) {
                it->second += coeff;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

Form map_r(const Form& eta, const DiffOp& dop, const Polyvector& g, const Form& phi) {
    Poly paired = pair_form(g, phi);
    Poly applied = apply_diffop(dop, paired);
    Form out{eta.nvars, {}};
    for (const auto& [ke, ce] : eta.terms)
        for (const auto& [e, c] : applied) {
            Expvec b = ke.first;
            for (std::size_t i = 0; i < b.size(); ++i) b[i] += e[i];
            out.add_term(b, ke.second, ce * c);
        }
    return out;
}

InjectivityReport map_r_injectivity(int nvars, int coeff_bound, int order_bound,
                                    int form_bound) {
    InjectivityReport rep;
    struct Triple {
        std::uint32_t s;
        Expvec b;
        Expvec alpha;
        std::uint32_t t;
    };
    std::vector<Triple> triples;
    for (std::uint32_t s = 0; s < (1u << nvars); ++s)
        for (std::uint32_t t = 0; t < (1u << nvars); ++t)
            for (int bd = 0; bd <= coeff_bound; ++bd)
                for (const auto& b : exponents_of_degree(nvars, bd))
                    for (int od = 0; od <= order_bound; ++od)
                        for (const auto& a : exponents_of_degree(nvars, od))
                            triples.push_back({s, b, a, t});
    rep.columns = static_cast<long>(triples.size());

    std::vector<std::pair<Expvec, std::uint32_t>> inputs;
    for (std::uint32_t u = 0; u < (1u << nvars); ++u)
        for (int fd = 0; fd <= form_bound; ++fd)
            for (const auto& f : exponents_of_degree(nvars, fd)) inputs.push_back({f, u});

    std::map<std::pair<int, std::pair<Expvec, std::uint32_t>>, int> rows;
    EchelonBasis span;
    rep.rank = 0;
    for (const auto& tr : triples) {
        Form eta{nvars, {}};
        eta.add_term(zero_exp(nvars), tr.s, Rational(1));
        DiffOp dop{nvars, {}};
        dop.terms[{tr.b, tr.alpha}] = Rational(1);
        Polyvector g{nvars, {}};
        g.add_term(zero_exp(nvars), tr.t, Rational(1));
        SparseVec col;
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            Form phi{nvars, {}};
            phi.add_term(inputs[i].first, inputs[i].second, Rational(1));
            Form res = map_r(eta, dop, g, phi);
            for (const auto& [k, c] : res.terms) {
                auto key = std::make_pair(static_cast<int>(i), k);
                auto [it, fresh] = rows.emplace(key, static_cast<int>(rows.size()));
                col.set(it->second, c);
            }
        }
        if (span.insert(col)) ++rep.rank;
    }
    return rep;
}

namespace {

// one symbol body like "x^2*th1" into (β, mask)
std::pair<Expvec, std::uint32_t> parse_mono(int nvars, const std::string& body) {
    Expvec beta(nvars, 0);
    std::uint32_t mask = 0;
    if (body == "1" || body.empty()) return {beta, mask};
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, '*')) {
        int pow = 1;
        auto caret = tok.find('^');
        std::string var = tok;
        if (caret != std::string::npos) {
            var = tok.substr(0, caret);
            pow = std::stoi(tok.substr(caret + 1));
        }
        static const char* names[] = {"x", "y", "z", "w"};
        bool found = false;
        if (var.rfind("th", 0) == 0) {
            int j = std::stoi(var.substr(2));
            if (j < 0 || j >= nvars) throw input_error("bad theta index in " + tok);
            mask |= 1u << j;
            found = true;
        } else {
            for (int i = 0; i < nvars && i < 4; ++i)
                if (var == names[i]) {
                    beta[i] += pow;
                    found = true;
                    break;
                }
        }
        if (!found) throw input_error("unknown variable in envelope word: " + tok);
    }
    return {beta, mask};
}

}  // namespace

EnvElement parse_env_word(int nvars, const std::string& text) {
    EnvWord w;
    std::stringstream ss(text);
    std::string tok;
    while (ss >> tok) {
        if (tok == "delta") {
            w.push_back(sym_delta());
            continue;
        }
        if (tok == "md") {
            w.push_back(sym_md());
            continue;
        }
        if ((tok[0] == 'i' || tok[0] == 'l') && tok.size() >= 3 && tok[1] == '[' &&
            tok.back() == ']') {
            auto [beta, mask] = parse_mono(nvars, tok.substr(2, tok.size() - 3));
            w.push_back(tok[0] == 'i' ? sym_i(beta, mask) : sym_l(beta, mask));
            continue;
        }
        throw input_error("bad envelope token: " + tok);
    }
    return env_of(nvars, w);
}

std::string print_env(const EnvElement& e) {
    if (e.is_zero()) return "0";
    std::string out;
    static const char* names[] = {"x", "y", "z", "w"};
    for (const auto& [word, c] : e.terms) {
        if (!out.empty()) out += " + ";
        out += c.str() + "·";
        if (word.empty()) out += "1";
        for (const auto& s : word) {
            switch (s.kind) {
                case EnvSym::Delta: out += " delta"; break;
                case EnvSym::Md: out += " md"; break;
                default: {
                    std::string body;
                    for (std::size_t i = 0; i < s.beta.size(); ++i)
                        for (int p = 0; p < s.beta[i]; ++p)
                            body += std::string(body.empty() ? "" : "*") +
                                    (i < 4 ? names[i] : ("x" + std::to_string(i + 1)));
                    for (int j = 0; s.mask >> j; ++j)
                        if (s.mask & (1u << j))
                            body += std::string(body.empty() ? "" : "*") + "th" +
                                    std::to_string(j);
                    if (body.empty()) body = "1";
                    out += std::string(" ") + (s.kind == EnvSym::I ? "i[" : "l[") + body + "]";
                }
            }
        }
    }
    return out;
}

}  // namespace hochcalc
