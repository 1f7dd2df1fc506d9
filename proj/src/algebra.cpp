#include "hochcalc/algebra.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

namespace hochcalc {

const SparseVec AlgebraSpec::zero_vec_{};

const SparseVec& AlgebraSpec::mult_at(int i, int j) const {
    if (i < 0 || i >= dim() || j < 0 || j >= dim())
        throw input_error("basis index out of range");
    if (degreewise && degree_of(i) + degree_of(j) > degree_bound)
        throw resource_error("product exceeds degreewise bound " +
                             std::to_string(degree_bound) + "; need bound " +
                             std::to_string(degree_of(i) + degree_of(j)));
    auto it = mult.find({i, j});
    return it == mult.end() ? zero_vec_ : it->second;
}

SparseVec AlgebraSpec::multiply(const SparseVec& a, const SparseVec& b) const {
    SparseVec r;
    for (const auto& [i, x] : a.entries())
        for (const auto& [j, y] : b.entries()) r.axpy(x * y, mult_at(i, j));
    return r;
}

Element multiply(const Element& a, const Element& b) {
    if (a.alg == nullptr || a.alg != b.alg)
        throw input_error("multiply: elements of different algebras");
    return Element{a.alg, a.alg->multiply(a.coords, b.coords)};
}

void AlgebraSpec::finalize() {
    if (unit.is_zero()) throw input_error("unit vector is zero");
    unit_pivot = unit.entries().begin()->first;
    rmult_.clear();
}

SparseVec AlgebraSpec::to_reduced(const SparseVec& x) const {
    // x = λ·1 + Σ_{i≠p} y_i e_i, reduced coords (λ, y_i)
    Rational lam = x.at(unit_pivot) / unit.at(unit_pivot);
    SparseVec r;
    r.set(0, lam);
    int slot = 1;
    for (int i = 0; i < dim(); ++i) {
        if (i == unit_pivot) continue;
        r.set(slot, x.at(i) - lam * unit.at(i));
        ++slot;
    }
    return r;
}

SparseVec AlgebraSpec::from_reduced(const SparseVec& r) const {
    SparseVec x = unit.scaled(r.at(0));
    int slot = 1;
    for (int i = 0; i < dim(); ++i) {
        if (i == unit_pivot) continue;
        Rational c = r.at(slot++);
        if (!c.is_zero()) x.add(i, c);
    }
    return x;
}

const SparseVec& AlgebraSpec::rmult_at(int i, int j) const {
    if (unit_pivot < 0) throw input_error("algebra not finalized; call validate() first");
    auto key = std::make_pair(i, j);
    auto it = rmult_.find(key);
    if (it != rmult_.end()) return it->second;
    SparseVec prod = multiply(from_reduced(SparseVec::unit(i)), from_reduced(SparseVec::unit(j)));
    auto [jt, ok] = rmult_.emplace(key, to_reduced(prod));
    return jt->second;
}

std::string AlgebraSpec::rlabel(int i) const {
    if (i == 0) return "1";
    int slot = 1;
    for (int k = 0; k < dim(); ++k) {
        if (k == unit_pivot) continue;
        if (slot == i) return basis[k];
        ++slot;
    }
    throw input_error("reduced index out of range");
}

ValidationReport validate(AlgebraSpec& spec) {
    ValidationReport rep;
    int n = spec.dim();
    if (n == 0) {
        rep.issues.push_back({"parse", "empty basis"});
        return rep;
    }
    if (!spec.grading.empty() && static_cast<int>(spec.grading.size()) != n)
        rep.issues.push_back({"parse", "degree list length mismatch"});
    for (const auto& [ij, v] : spec.mult) {
        if (ij.first < 0 || ij.first >= n || ij.second < 0 || ij.second >= n) {
            rep.issues.push_back({"parse", "structure constant index out of range"});
            return rep;
        }
        for (const auto& [k, c] : v.entries())
            if (k < 0 || k >= n) {
                rep.issues.push_back({"parse", "structure constant target out of range"});
                return rep;
            }
    }
    if (spec.unit.is_zero()) {
        rep.issues.push_back({"unit", "unit vector is zero"});
        return rep;
    }

    auto within = [&](int i, int j) {
        return !spec.degreewise ||
               spec.degree_of(i) + spec.degree_of(j) <= spec.degree_bound;
    };

    // unitality on each basis element
    for (int i = 0; i < n; ++i) {
        SparseVec e = SparseVec::unit(i);
        bool ok = true;
        if (spec.degreewise) {
            // the unit sits in degree 0, always within bounds
        }
        SparseVec left = spec.multiply(spec.unit, e);
        SparseVec right = spec.multiply(e, spec.unit);
        ok = (left == e) && (right == e);
        if (!ok)
            rep.issues.push_back({"unit", "1·" + spec.basis[i] + " or " + spec.basis[i] +
                                              "·1 differs from " + spec.basis[i]});
    }

    // associativity on basis triples within bounds
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!within(i, j)) continue;
            const SparseVec& ij = spec.mult_at(i, j);
            for (int k = 0; k < n; ++k) {
                if (spec.degreewise &&
                    spec.degree_of(i) + spec.degree_of(j) + spec.degree_of(k) >
                        spec.degree_bound)
                    continue;
                SparseVec lhs;
                for (const auto& [l, c] : ij.entries()) lhs.axpy(c, spec.mult_at(l, k));
                SparseVec rhs;
                for (const auto& [l, c] : spec.mult_at(j, k).entries())
                    rhs.axpy(c, spec.mult_at(i, l));
                ++rep.triples_checked;
                if (!(lhs == rhs))
                    rep.issues.push_back(
                        {"associativity", "(" + spec.basis[i] + "·" + spec.basis[j] + ")·" +
                                              spec.basis[k] + " ≠ " + spec.basis[i] + "·(" +
                                              spec.basis[j] + "·" + spec.basis[k] + ")"});
            }
        }

    // grading additivity
    if (!spec.grading.empty()) {
        for (const auto& [ij, v] : spec.mult) {
            int want = spec.degree_of(ij.first) + spec.degree_of(ij.second);
            for (const auto& [k, c] : v.entries())
                if (spec.degree_of(k) != want)
                    rep.issues.push_back(
                        {"grading", spec.basis[ij.first] + "·" + spec.basis[ij.second] +
                                        " hits degree " + std::to_string(spec.degree_of(k)) +
                                        ", expected " + std::to_string(want)});
        }
    }

    if (rep.ok()) spec.finalize();
    return rep;
}

namespace {

std::string var_name(int v, int nvars) {
    static const char* few[] = {"x", "y", "z", "w"};
    if (nvars <= 4) return few[v];
    return "x" + std::to_string(v + 1);
}

std::string monomial_label(const std::vector<int>& e) {
    std::string s;
    int n = static_cast<int>(e.size());
    for (int v = 0; v < n; ++v) {
        if (e[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += var_name(v, n);
        if (e[v] > 1) s += "^" + std::to_string(e[v]);
    }
    return s.empty() ? "1" : s;
}

void enumerate_monomials(int nvars, int max_deg, std::vector<std::vector<int>>& out) {
    // graded order: total degree, then lexicographic
    std::vector<int> cur(nvars, 0);
    for (int d = 0; d <= max_deg; ++d) {
        std::vector<std::vector<int>> level;
        std::function<void(int, int)> rec = [&](int v, int left) {
            if (v == nvars - 1) {
                cur[v] = left;
                level.push_back(cur);
                return;
            }
            for (int k = left; k >= 0; --k) {
                cur[v] = k;
                rec(v + 1, left - k);
            }
        };
        if (nvars == 0) {
            if (d == 0) out.push_back({});
            continue;
        }
        rec(0, d);
        std::sort(level.begin(), level.end());
        for (auto& m : level) out.push_back(m);
    }
}

AlgebraSpec poly_algebra(int vars, int bound, bool degreewise) {
    if (vars < 1 || vars > 6 || bound < 0 || bound > 40)
        throw input_error("polynomial algebra parameters out of range");
    AlgebraSpec a;
    a.name = (degreewise ? "graded_poly(" : "truncated_poly(") + std::to_string(vars) + "," +
             std::to_string(bound) + ")";
    a.poly_vars = vars;
    a.degreewise = degreewise;
    a.degree_bound = bound;
    enumerate_monomials(vars, bound, a.exponents);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < a.exponents.size(); ++i) {
        a.basis.push_back(monomial_label(a.exponents[i]));
        int d = 0;
        for (int e : a.exponents[i]) d += e;
        a.grading.push_back(d);
        index[a.exponents[i]] = static_cast<int>(i);
    }
    a.unit.set(0, Rational(1));
    int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (a.grading[i] + a.grading[j] > bound) continue;  // zero or out of range
            std::vector<int> s(vars);
            for (int v = 0; v < vars; ++v) s[v] = a.exponents[i][v] + a.exponents[j][v];
            SparseVec prod;
            prod.set(index.at(s), Rational(1));
            a.mult[{i, j}] = prod;
        }
    return a;
}

}  // namespace

AlgebraSpec builtin(const std::string& name, const std::vector<int>& params) {
    AlgebraSpec a;
    if (name == "dual_numbers") {
        a.name = name;
        a.basis = {"1", "eps"};
        a.unit.set(0, Rational(1));
        a.mult[{0, 0}] = SparseVec::unit(0);
        a.mult[{0, 1}] = SparseVec::unit(1);
        a.mult[{1, 0}] = SparseVec::unit(1);
        // eps^2 = 0: entry absent
    } else if (name == "matrix") {
        if (params.size() != 1 || params[0] < 1 || params[0] > 3)
            throw input_error("matrix(n) expects 1 <= n <= 3");
        int n = params[0];
        a.name = "matrix(" + std::to_string(n) + ")";
        auto id = [n](int r, int c) { return r * n + c; };
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                a.basis.push_back("e" + std::to_string(r + 1) + std::to_string(c + 1));
        for (int r = 0; r < n; ++r) a.unit.set(id(r, r), Rational(1));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                for (int c2 = 0; c2 < n; ++c2)
                    a.mult[{id(r, c), id(c, c2)}] = SparseVec::unit(id(r, c2));
    } else if (name == "truncated_poly") {
        if (params.size() != 2) throw input_error("truncated_poly expects (vars, max_total_degree)");
        a = poly_algebra(params[0], params[1], false);
    } else if (name == "graded_poly") {
        if (params.size() != 2) throw input_error("graded_poly expects (vars, degree_bound)");
        a = poly_algebra(params[0], params[1], true);
    } else if (name == "group_algebra_Z2") {
        a.name = name;
        a.basis = {"1", "g"};
        a.unit.set(0, Rational(1));
        a.mult[{0, 0}] = SparseVec::unit(0);
        a.mult[{0, 1}] = SparseVec::unit(1);
        a.mult[{1, 0}] = SparseVec::unit(1);
        a.mult[{1, 1}] = SparseVec::unit(0);
    } else {
        throw input_error("unknown builtin algebra: " + name);
    }
    ValidationReport rep = validate(a);
    if (!rep.ok()) throw consistency_error("builtin " + name + " failed validation");
    return a;
}

AlgebraSpec builtin_from_string(const std::string& descriptor) {
    auto open = descriptor.find('(');
    if (open == std::string::npos) return builtin(descriptor);
    if (descriptor.back() != ')') throw input_error("malformed builtin: " + descriptor);
    std::string name = descriptor.substr(0, open);
    std::string args = descriptor.substr(open + 1, descriptor.size() - open - 2);
    std::vector<int> params;
    std::stringstream ss(args);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw input_error("malformed builtin: " + descriptor);
        params.push_back(std::stoi(tok));
    }
    return builtin(name, params);
}

AlgebraSpec parse_algebra(std::istream& in) {
    AlgebraSpec a;
    std::string line;
    bool have_unit = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::stringstream ss(line);
        std::string first;
        if (!(ss >> first)) continue;
        auto fail = [&](const std::string& why) {
            throw input_error("algebra file line " + std::to_string(lineno) + ": " + why);
        };
        if (first == "algebra") {
            if (!(ss >> a.name)) fail("missing name");
        } else if (first == "basis") {
            std::string lab;
            while (ss >> lab) a.basis.push_back(lab);
            if (a.basis.empty()) fail("empty basis");
        } else if (first == "degrees") {
            int d;
            while (ss >> d) a.grading.push_back(d);
        } else if (first == "degreewise") {
            a.degreewise = true;
            if (!(ss >> a.degree_bound)) fail("degreewise needs a bound");
        } else if (first == "unit") {
            std::string tok;
            int i = 0;
            while (ss >> tok) a.unit.set(i++, Rational::parse(tok));
            have_unit = true;
        } else {
            // structure constant triple: i j k num/den
            int i, j, k;
            std::string val;
            std::stringstream ts(line);
            if (!(ts >> i >> j >> k >> val)) fail("malformed structure constant line");
            if (a.basis.empty()) fail("structure constants before basis");
            if (i < 0 || j < 0 || k < 0 || i >= a.dim() || j >= a.dim() || k >= a.dim())
                fail("index out of range");
            a.mult[{i, j}].set(k, Rational::parse(val));
        }
    }
    if (a.basis.empty()) throw input_error("algebra file: no basis");
    if (!have_unit) throw input_error("algebra file: no unit");
    return a;
}

void write_algebra(const AlgebraSpec& spec, std::ostream& out) {
    out << "algebra " << (spec.name.empty() ? "unnamed" : spec.name) << "\n";
    out << "basis";
    for (const auto& b : spec.basis) out << " " << b;
    out << "\n";
    if (!spec.grading.empty()) {
        out << "degrees";
        for (int d : spec.grading) out << " " << d;
        out << "\n";
    }
    if (spec.degreewise) out << "degreewise " << spec.degree_bound << "\n";
    out << "unit";
    for (int i = 0; i < spec.dim(); ++i) out << " " << spec.unit.at(i).fraction_str();
    out << "\n";
    for (const auto& [ij, v] : spec.mult)
        for (const auto& [k, c] : v.entries())
            out << ij.first << " " << ij.second << " " << k << " " << c.fraction_str() << "\n";
}

}  // namespace hochcalc
