#include "hochcalc/hochschild.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

namespace hochcalc {

namespace {

void check_same(const AlgebraSpec* a, const AlgebraSpec* b) {
    if (a == nullptr || a != b) throw input_error("operands live over different algebras");
}

// product of two reduced-coordinate elements
SparseVec rprod(const AlgebraSpec& a, const SparseVec& x, const SparseVec& y) {
    SparseVec r;
    for (const auto& [i, xv] : x.entries())
        for (const auto& [j, yv] : y.entries()) r.axpy(xv * yv, a.rmult_at(i, j));
    return r;
}

// iterate over all tuples of given length with entries in [1, rdim)
bool next_tuple(std::vector<int>& t, int rdim) {
    for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
        if (++t[i] < rdim) return true;
        t[i] = 1;
    }
    return false;
}

void add_to(Cochain& out, const std::vector<int>& key, const SparseVec& val) {
    if (val.is_zero()) return;
    auto [it, fresh] = out.table.emplace(key, val);
    if (!fresh) {
        it->second = it->second + val;
        if (it->second.is_zero()) out.table.erase(it);
    }
}

void add_to(Chain& out, const std::vector<int>& key, const Rational& val) {
    if (val.is_zero()) return;
    auto [it, fresh] = out.table.emplace(key, val);
    if (!fresh) {
        it->second += val;
        if (it->second.is_zero()) out.table.erase(it);
    }
}

// scatter an element value into chain slot `pos`; unit components are
// projected out for pos >= 1
void scatter(Chain& out, std::vector<int>& key, int pos, const SparseVec& elem,
             const Rational& coeff) {
    for (const auto& [idx, v] : elem.entries()) {
        if (pos >= 1 && idx == 0) continue;
        key[pos] = idx;
        add_to(out, key, coeff * v);
    }
    key[pos] = -1;
}

}  // namespace

Cochain zero_cochain(const AlgebraSpec& a, int arity) { return Cochain{&a, arity, {}}; }

Cochain element_cochain(const AlgebraSpec& a, const SparseVec& reduced) {
    Cochain p{&a, 0, {}};
    if (!reduced.is_zero()) p.table[{}] = reduced;
    return p;
}

Cochain identity_cochain(const AlgebraSpec& a) {
    Cochain p{&a, 1, {}};
    for (int i = 1; i < a.rdim(); ++i) p.table[{i}] = SparseVec::unit(i);
    return p;
}

Cochain multiplication_cochain(const AlgebraSpec& a) {
    Cochain p{&a, 2, {}};
    for (int i = 1; i < a.rdim(); ++i)
        for (int j = 1; j < a.rdim(); ++j) {
            SparseVec v = a.rmult_at(i, j);
            if (!v.is_zero()) p.table[{i, j}] = v;
        }
    return p;
}

Chain zero_chain(const AlgebraSpec& a, int length) { return Chain{&a, length, {}}; }

Chain chain_of(const AlgebraSpec& a, const std::vector<SparseVec>& slots) {
    if (slots.empty()) throw input_error("chain_of: need at least the slot-0 element");
    Chain c{&a, static_cast<int>(slots.size()) - 1, {}};
    std::vector<int> key(slots.size(), -1);
    std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t pos,
                                                                const Rational& coeff) {
        if (pos == slots.size()) {
            add_to(c, key, coeff);
            return;
        }
        for (const auto& [i, v] : slots[pos].entries()) {
            if (pos >= 1 && i == 0) continue;
            key[pos] = i;
            rec(pos + 1, coeff * v);
        }
    };
    rec(0, Rational(1));
    return c;
}

Cochain random_cochain(const AlgebraSpec& a, int arity, Rng& rng) {
    Cochain p{&a, arity, {}};
    std::vector<int> t(arity, 1);
    if (arity > 0 && a.rdim() <= 1) return p;
    if (arity == 0) {
        SparseVec v;
        for (int i = 0; i < a.rdim(); ++i) v.set(i, rng.coeff());
        if (!v.is_zero()) p.table[{}] = v;
        return p;
    }
    do {
        SparseVec v;
        for (int i = 0; i < a.rdim(); ++i) v.set(i, rng.coeff());
        if (!v.is_zero()) p.table[t] = v;
    } while (next_tuple(t, a.rdim()));
    return p;
}

Chain random_chain(const AlgebraSpec& a, int length, Rng& rng) {
    Chain c{&a, length, {}};
    if (length > 0 && a.rdim() <= 1) return c;
    std::vector<int> t(length + 1, 1);
    for (int s0 = 0; s0 < a.rdim(); ++s0) {
        t[0] = s0;
        std::vector<int> rest(t.begin() + 1, t.end());
        if (length == 0) {
            Rational v = rng.coeff();
            if (!v.is_zero()) c.table[t] = v;
            continue;
        }
        std::fill(rest.begin(), rest.end(), 1);
        do {
            for (int i = 0; i < length; ++i) t[i + 1] = rest[i];
            Rational v = rng.coeff();
            if (!v.is_zero()) c.table[t] = v;
        } while (next_tuple(rest, a.rdim()));
    }
    return c;
}

SparseVec evaluate(const Cochain& p, const std::vector<SparseVec>& args) {
    if (static_cast<int>(args.size()) != p.arity)
        throw input_error("evaluate: arity mismatch");
    SparseVec total;
    std::vector<int> idx(p.arity, 0);
    std::function<void(int, const Rational&)> rec = [&](int pos, const Rational& coeff) {
        if (pos == p.arity) {
            auto it = p.table.find(idx);
            if (it != p.table.end()) total.axpy(coeff, it->second);
            return;
        }
        for (const auto& [i, v] : args[pos].entries()) {
            if (i == 0) continue;  // normalized: unit arguments killed
            idx[pos] = i;
            rec(pos + 1, coeff * v);
        }
    };
    rec(0, Rational(1));
    return total;
}

namespace {

// value of p on basis tuple where position `pos` holds an element instead
SparseVec eval_with_elem(const Cochain& p, std::vector<int>& idx, int pos,
                         const SparseVec& elem) {
    SparseVec total;
    for (const auto& [i, v] : elem.entries()) {
        if (i == 0) continue;
        idx[pos] = i;
        auto it = p.table.find(idx);
        if (it != p.table.end()) total.axpy(v, it->second);
    }
    idx[pos] = -1;
    return total;
}

}  // namespace

Cochain cochain_boundary(const Cochain& p) {
    const AlgebraSpec& a = *p.alg;
    int k = p.arity;
    Cochain out{&a, k + 1, {}};
    if (a.rdim() <= 1) return out;
    std::vector<int> t(k + 1, 1);
    do {
        SparseVec val;
        // a_0 · P(a_1..a_k)
        {
            std::vector<int> rest(t.begin() + 1, t.end());
            auto it = p.table.find(rest);
            if (it != p.table.end()) val.axpy(Rational(1), rprod(a, SparseVec::unit(t[0]), it->second));
        }
        // (-1)^j P(a_0, .., a_{j-1}a_j, .., a_k)
        for (int j = 1; j <= k; ++j) {
            std::vector<int> args;
            args.reserve(k);
            for (int i = 0; i < j - 1; ++i) args.push_back(t[i]);
            args.push_back(-1);  // merged slot placeholder
            for (int i = j + 1; i <= k; ++i) args.push_back(t[i]);
            SparseVec merged = a.rmult_at(t[j - 1], t[j]);
            SparseVec term = eval_with_elem(p, args, j - 1, merged);
            val.axpy(sign_pow(j), term);
        }
        // (-1)^{k+1} P(a_0..a_{k-1}) · a_k
        {
            std::vector<int> head(t.begin(), t.end() - 1);
            auto it = p.table.find(head);
            if (it != p.table.end())
                val.axpy(sign_pow(k + 1), rprod(a, it->second, SparseVec::unit(t[k])));
        }
        if (!val.is_zero()) out.table[t] = val;
    } while (next_tuple(t, a.rdim()));
    return out;
}

Chain chain_boundary(const Chain& c) {
    const AlgebraSpec& a = *c.alg;
    int m = c.length;
    Chain out{&a, m - 1, {}};
    if (m <= 0) return out;
    for (const auto& [t, coeff] : c.table) {
        std::vector<int> key(m, -1);
        // (-1)^i (a_0, .., a_i a_{i+1}, .., a_m)
        for (int i = 0; i < m; ++i) {
            for (int s = 0; s < i; ++s) key[s] = t[s];
            for (int s = i + 1; s < m; ++s) key[s] = t[s + 1];
            scatter(out, key, i, a.rmult_at(t[i], t[i + 1]), coeff * sign_pow(i));
            std::fill(key.begin(), key.end(), -1);
        }
        // (-1)^m (a_m a_0, a_1, .., a_{m-1})
        for (int s = 1; s < m; ++s) key[s] = t[s];
        scatter(out, key, 0, a.rmult_at(t[m], t[0]), coeff * sign_pow(m));
    }
    return out;
}

Cochain cup(const Cochain& p1, const Cochain& p2) {
    check_same(p1.alg, p2.alg);
    const AlgebraSpec& a = *p1.alg;
    Cochain out{&a, p1.arity + p2.arity, {}};
    for (const auto& [t1, v1] : p1.table)
        for (const auto& [t2, v2] : p2.table) {
            std::vector<int> t = t1;
            t.insert(t.end(), t2.begin(), t2.end());
            add_to(out, t, rprod(a, v1, v2));
        }
    return out;
}

namespace {

// insertion sum Σ_i (-1)^{i·k2} q1(a_0, .., q2(a_i..), ..) of Eq. Gerst
Cochain circ(const Cochain& q1, const Cochain& q2) {
    const AlgebraSpec& a = *q1.alg;
    int k1 = q1.arity - 1, k2 = q2.arity - 1;
    int out_arity = q1.arity + k2;  // (k1+k2)+1
    Cochain out{&a, out_arity, {}};
    if (q1.arity == 0) return out;  // nothing to insert into
    if (out_arity > 0 && a.rdim() <= 1) return out;
    std::vector<int> t(out_arity, 1);
    if (out_arity == 0) {
        // q1 arity 1, q2 arity 0: single insertion
        SparseVec inner = q2.table.count({}) ? q2.table.at({}) : SparseVec();
        std::vector<int> args(1, -1);
        SparseVec val = eval_with_elem(q1, args, 0, inner);
        if (!val.is_zero()) out.table[{}] = val;
        return out;
    }
    do {
        SparseVec val;
        for (int i = 0; i <= k1; ++i) {
            // q2 consumes positions i..i+k2 of the output tuple
            SparseVec inner;
            if (q2.arity == 0) {
                auto it = q2.table.find({});
                if (it != q2.table.end()) inner = it->second;
            } else {
                std::vector<int> sub(t.begin() + i, t.begin() + i + q2.arity);
                auto it = q2.table.find(sub);
                if (it != q2.table.end()) inner = it->second;
            }
            if (inner.is_zero()) continue;
            std::vector<int> args;
            args.reserve(q1.arity);
            for (int s = 0; s < i; ++s) args.push_back(t[s]);
            args.push_back(-1);
            for (int s = i + q2.arity; s < out_arity; ++s) args.push_back(t[s]);
            SparseVec term = eval_with_elem(q1, args, i, inner);
            val.axpy(sign_pow(static_cast<long>(i) * k2), term);
        }
        if (!val.is_zero()) out.table[t] = val;
    } while (next_tuple(t, a.rdim()));
    return out;
}

}  // namespace

Cochain gerstenhaber_bracket(const Cochain& q1, const Cochain& q2, bool allow_arity0) {
    check_same(q1.alg, q2.alg);
    if (!allow_arity0 && (q1.arity < 1 || q2.arity < 1))
        throw input_error("gerstenhaber_bracket: arity 0 requires the explicit k = -1 extension flag");
    long k1 = q1.arity - 1, k2 = q2.arity - 1;
    Cochain lhs = circ(q1, q2);
    Cochain rhs = circ(q2, q1);
    return add(lhs, scale(rhs, -sign_pow(k1 * k2)));
}

Chain contract_I(const Cochain& p, const Chain& c) {
    check_same(p.alg, c.alg);
    const AlgebraSpec& a = *p.alg;
    int k = p.arity, m = c.length;
    Chain out{&a, m - k, {}};
    if (m < k) return out;
    for (const auto& [t, coeff] : c.table) {
        std::vector<int> args(t.begin() + 1, t.begin() + 1 + k);
        auto it = p.table.find(args);
        if (it == p.table.end()) continue;
        SparseVec head = rprod(a, SparseVec::unit(t[0]), it->second);
        std::vector<int> key(m - k + 1, -1);
        for (int s = k + 1; s <= m; ++s) key[s - k] = t[s];
        scatter(out, key, 0, head, coeff);
    }
    return out;
}

Chain lie_derive_L(const Cochain& q, const Chain& c) {
    check_same(q.alg, c.alg);
    const AlgebraSpec& a = *q.alg;
    if (q.arity < 1) throw input_error("lie_derive_L: cochain arity must be >= 1");
    int k = q.arity - 1, m = c.length;
    Chain out{&a, m - k, {}};
    if (m < k) return out;
    for (const auto& [t, coeff] : c.table) {
        // Σ_{i=0}^{m-k} (-1)^{ki} (a_0, .., Q(a_i..a_{i+k}), .., a_m)
        for (int i = 0; i + k <= m; ++i) {
            std::vector<SparseVec> args;
            args.reserve(k + 1);
            for (int s = i; s <= i + k; ++s) args.push_back(SparseVec::unit(t[s]));
            SparseVec qv = evaluate(q, args);
            if (qv.is_zero()) continue;
            std::vector<int> key(m - k + 1, -1);
            for (int s = 0; s < i; ++s) key[s] = t[s];
            for (int s = i + k + 1; s <= m; ++s) key[s - k] = t[s];
            scatter(out, key, i, qv, coeff * sign_pow(static_cast<long>(k) * i));
        }
        // Σ_{j=m-k}^{m-1} (-1)^{m(j+1)} (Q(a_{j+1}, .., a_m, a_0, .., a_{k+j-m}), ..)
        for (int j = std::max(0, m - k); j <= m - 1; ++j) {
            std::vector<SparseVec> args;
            args.reserve(k + 1);
            for (int s = j + 1; s <= m; ++s) args.push_back(SparseVec::unit(t[s]));
            for (int s = 0; s <= k + j - m; ++s) args.push_back(SparseVec::unit(t[s]));
            SparseVec qv = evaluate(q, args);
            if (qv.is_zero()) continue;
            std::vector<int> key(m - k + 1, -1);
            for (int s = k + j + 1 - m; s <= j; ++s) key[s - (k + j - m)] = t[s];
            scatter(out, key, 0, qv, coeff * sign_pow(static_cast<long>(m) * (j + 1)));
        }
    }
    return out;
}

Chain connes_B(const Chain& c) {
    const AlgebraSpec& a = *c.alg;
    int m = c.length;
    Chain out{&a, m + 1, {}};
    for (const auto& [t, coeff] : c.table) {
        if (t[0] == 0) continue;  // a_0 lands in a slot >= 1 in every summand
        for (int i = 0; i <= m; ++i) {
            // (1, a_i, .., a_m, a_0, .., a_{i-1})
            std::vector<int> key(m + 2);
            key[0] = 0;
            int pos = 1;
            for (int s = i; s <= m; ++s) key[pos++] = t[s];
            for (int s = 0; s < i; ++s) key[pos++] = t[s];
            add_to(out, key, coeff * sign_pow(static_cast<long>(m) * i));
        }
    }
    return out;
}

Chain add(const Chain& x, const Chain& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.length != y.length) throw input_error("chain addition: length mismatch");
    Chain out = x;
    for (const auto& [t, v] : y.table) add_to(out, t, v);
    return out;
}

Chain scale(const Chain& x, const Rational& c) {
    Chain out{x.alg, x.length, {}};
    if (c.is_zero()) return out;
    for (const auto& [t, v] : x.table) out.table[t] = v * c;
    return out;
}

Cochain add(const Cochain& x, const Cochain& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.arity != y.arity) throw input_error("cochain addition: arity mismatch");
    Cochain out = x;
    for (const auto& [t, v] : y.table) add_to(out, t, v);
    return out;
}

Cochain scale(const Cochain& x, const Rational& c) {
    Cochain out{x.alg, x.arity, {}};
    if (c.is_zero()) return out;
    for (const auto& [t, v] : x.table) out.table[t] = v.scaled(c);
    return out;
}

void print_cochain(const Cochain& p, std::ostream& out) {
    const AlgebraSpec& a = *p.alg;
    for (const auto& [t, v] : p.table) {
        for (std::size_t i = 0; i < t.size(); ++i) out << (i ? " " : "") << a.rlabel(t[i]);
        if (t.empty()) out << "()";
        out << " ->";
        for (int i = 0; i < a.rdim(); ++i) out << " " << v.at(i).fraction_str();
        out << "\n";
    }
}

namespace {

int rindex_of_label(const AlgebraSpec& a, const std::string& label) {
    for (int i = 0; i < a.rdim(); ++i)
        if (a.rlabel(i) == label) return i;
    throw input_error("unknown basis label: " + label);
}

}  // namespace

Cochain parse_cochain(const AlgebraSpec& a, int arity, std::istream& in) {
    Cochain p{&a, arity, {}};
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::stringstream ss(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ss >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        auto arrow = std::find(toks.begin(), toks.end(), "->");
        if (arrow == toks.end()) throw input_error("cochain literal: missing '->'");
        std::vector<int> t;
        for (auto it = toks.begin(); it != arrow; ++it) {
            if (*it == "()") continue;
            int idx = rindex_of_label(a, *it);
            if (idx == 0) throw input_error("cochain literal: unit in an argument slot");
            t.push_back(idx);
        }
        if (static_cast<int>(t.size()) != arity)
            throw input_error("cochain literal: tuple length != arity");
        SparseVec v;
        int i = 0;
        for (auto it = arrow + 1; it != toks.end(); ++it) v.set(i++, Rational::parse(*it));
        if (i != a.rdim()) throw input_error("cochain literal: value length != dim");
        if (!v.is_zero()) p.table[t] = v;
    }
    return p;
}

void print_chain(const Chain& c, std::ostream& out) {
    const AlgebraSpec& a = *c.alg;
    for (const auto& [t, v] : c.table) {
        for (std::size_t i = 0; i < t.size(); ++i) out << (i ? " " : "") << a.rlabel(t[i]);
        out << " -> " << v.fraction_str() << "\n";
    }
}

Chain parse_chain(const AlgebraSpec& a, int length, std::istream& in) {
    Chain c{&a, length, {}};
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::stringstream ss(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ss >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        auto arrow = std::find(toks.begin(), toks.end(), "->");
        if (arrow == toks.end() || arrow + 2 != toks.end())
            throw input_error("chain literal: expected 'labels -> coeff'");
        std::vector<int> t;
        for (auto it = toks.begin(); it != arrow; ++it) t.push_back(rindex_of_label(a, *it));
        if (static_cast<int>(t.size()) != length + 1)
            throw input_error("chain literal: tuple length != m+1");
        for (std::size_t i = 1; i < t.size(); ++i)
            if (t[i] == 0) throw input_error("chain literal: unit in slot >= 1");
        Rational v = Rational::parse(toks.back());
        if (!v.is_zero()) c.table[t] = v;
    }
    return c;
}

}  // namespace hochcalc
