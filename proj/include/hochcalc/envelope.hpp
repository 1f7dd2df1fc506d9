#pragma once

#include "hochcalc/cartan.hpp"

namespace hochcalc {

// Words in the symbols i_v, l_v (v a monomial basis element x^β θ_S of the
// polyvector algebra), δ and 𝔡.  Degrees: |i_v| = |v|, |l_v| = |v| - 1,
// |δ| = |𝔡| = -1.  The weight of i_v/l_v is |β| + |S|; rewriting never
// raises the weight.
struct EnvSym {
    enum Kind { I = 0, L = 1, Delta = 2, Md = 3 };
    int kind = I;
    Expvec beta;          // unused for Delta/Md
    std::uint32_t mask = 0;

    friend bool operator<(const EnvSym& a, const EnvSym& b) {
        return std::tie(a.kind, a.beta, a.mask) < std::tie(b.kind, b.beta, b.mask);
    }
    friend bool operator==(const EnvSym& a, const EnvSym& b) {
        return a.kind == b.kind && a.beta == b.beta && a.mask == b.mask;
    }
};

using EnvWord = std::vector<EnvSym>;

struct EnvElement {
    int nvars = 0;
    std::map<EnvWord, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    void add_term(const EnvWord& w, const Rational& c);
    friend bool operator==(const EnvElement& a, const EnvElement& b) {
        return a.terms == b.terms;
    }
};

enum class EnvMode { Y0, Y };

EnvSym sym_i(const Expvec& beta, std::uint32_t mask);
EnvSym sym_l(const Expvec& beta, std::uint32_t mask);
EnvSym sym_delta();
EnvSym sym_md();

EnvElement env_one(int nvars);
EnvElement env_of(int nvars, const EnvWord& w);
EnvElement env_add(const EnvElement& a, const EnvElement& b);
EnvElement env_scale(const EnvElement& a, const Rational& c);
EnvElement env_mul(const EnvElement& a, const EnvElement& b);

int env_word_weight(const EnvWord& w);
int env_word_degree(const EnvWord& w);

// Confluent rewriting to the PBW normal form: i-symbols merged into a
// single monomial prefix, l-symbols expanded to the generators l_{x_i},
// l_{θ_j} and sorted, δ/𝔡 rightmost.  Idempotent and linear; mode Y adds
// the relations δ² = 0 and [δ, i_v] = l_v, mode Y0 keeps δ inert (it may
// not appear).  Words whose weight exceeds weight_bound raise
// resource_error.
EnvElement normal_form(const EnvElement& e, EnvMode mode, int weight_bound);

// generators act by i_v -> 𝓘_v, l_v -> 𝓛_v, δ -> d, 𝔡 -> δ - Σ l_{x_i}l_{θ_i}
Form act_on_forms(const EnvElement& e, const Form& phi);

// the de Rham differential as an element of Y0 (acts as d on every form)
EnvElement de_rham_word(int nvars);

// 𝔡 = δ - d substituted into a mode-Y element; output over {i, l, 𝔡}
EnvElement substitute_d(const EnvElement& e, int weight_bound);

// desk-scale PBW: dims of F^k/F^{k-1} at each weight from normal forms of
// all bounded generator words vs the symmetric algebra S^k_V(Ω¹(V))
struct PbwSlice {
    int l_count = 0;
    int weight = 0;
    long pbw_dim = 0;
    long sym_dim = 0;
    bool match() const { return pbw_dim == sym_dim; }
};
std::vector<PbwSlice> graded_dims(int nvars, int k_max, int weight_max);

// polynomial-coefficient differential operators in the x's and ∂'s
struct DiffOp {
    int nvars = 0;
    std::map<std::pair<Expvec, Expvec>, Rational> terms;  // (β, α): x^β ∂^α
};
Poly apply_diffop(const DiffOp& d, const Poly& p);

// r(η, D, γ)(φ) = η · D⟨γ, φ⟩
Form map_r(const Form& eta, const DiffOp& dop, const Polyvector& g, const Form& phi);

struct InjectivityReport {
    long columns = 0;
    long rank = 0;
    bool full_rank() const { return columns == rank; }
};
// rank of r on the slice dx_S ⊗ x^b∂^c ⊗ θ_T (b <= coeff_bound,
// c <= order_bound) against forms of coefficient degree <= form_bound
InjectivityReport map_r_injectivity(int nvars, int coeff_bound, int order_bound, int form_bound);

// word literal syntax, e.g. "i[x*th1] l[x] delta"
EnvElement parse_env_word(int nvars, const std::string& text);
std::string print_env(const EnvElement& e);

}  // namespace hochcalc
