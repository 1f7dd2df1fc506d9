#include "hochcalc/calculus.hpp"

namespace hochcalc {

namespace {

std::optional<SparseVec> apply2(const std::map<CalculusData::Key2, SparseVec>& table, int d1,
                                const SparseVec& a, int d2, const SparseVec& b) {
    SparseVec out;
    for (const auto& [i, x] : a.entries())
        for (const auto& [j, y] : b.entries()) {
            auto it = table.find({d1, i, d2, j});
            if (it == table.end()) return std::nullopt;
            out.axpy(x * y, it->second);
        }
    return out;
}

}  // namespace

std::optional<SparseVec> CalculusData::apply_wedge(int d1, const SparseVec& a, int d2,
                                                   const SparseVec& b) const {
    return apply2(wedge, d1, a, d2, b);
}
std::optional<SparseVec> CalculusData::apply_bracket(int d1, const SparseVec& a, int d2,
                                                     const SparseVec& b) const {
    return apply2(bracket, d1, a, d2, b);
}
std::optional<SparseVec> CalculusData::apply_contract(int d1, const SparseVec& a, int d2,
                                                      const SparseVec& w) const {
    return apply2(contract, d1, a, d2, w);
}
std::optional<SparseVec> CalculusData::apply_lie(int d1, const SparseVec& a, int d2,
                                                 const SparseVec& w) const {
    return apply2(lie, d1, a, d2, w);
}
std::optional<SparseVec> CalculusData::apply_delta(int d, const SparseVec& w) const {
    SparseVec out;
    for (const auto& [i, x] : w.entries()) {
        auto it = delta.find({d, i});
        if (it == delta.end()) return std::nullopt;
        out.axpy(x, it->second);
    }
    return out;
}

const AxiomCheck& AxiomReport::at(const std::string& id) const {
    for (const auto& c : checks)
        if (c.axiom_id == id) return c;
    throw input_error("axiom report: no entry " + id);
}

namespace {

struct Checker {
    const CalculusData& d;
    AxiomReport report;

    AxiomCheck* current = nullptr;

    void begin(const std::string& id) {
        report.checks.push_back({id, "pass", "", 0, 0});
        current = &report.checks.back();
    }
    void instance(bool holds, const std::string& witness) {
        ++current->checked;
        if (!holds) {
            ++current->violations;
            current->status = "fail";
            if (current->witness.empty()) current->witness = witness;
        }
    }

    static std::string tup(std::initializer_list<std::pair<int, int>> elems) {
        std::string s = "(";
        bool first = true;
        for (const auto& [deg, idx] : elems) {
            if (!first) s += ", ";
            first = false;
            s += "deg " + std::to_string(deg) + "#" + std::to_string(idx);
        }
        return s + ")";
    }

    template <class F>
    void for_v(F f) {
        for (const auto& [deg, n] : d.v_dims)
            for (int i = 0; i < n; ++i) f(deg, i);
    }
    template <class F>
    void for_w(F f) {
        for (const auto& [deg, n] : d.w_dims)
            for (int i = 0; i < n; ++i) f(deg, i);
    }

    void comm() {
        begin("comm");
        for_v([&](int d1, int i) {
            for_v([&](int d2, int j) {
                auto ab = d.apply_wedge(d1, SparseVec::unit(i), d2, SparseVec::unit(j));
                auto ba = d.apply_wedge(d2, SparseVec::unit(j), d1, SparseVec::unit(i));
                if (!ab || !ba) return;
                SparseVec diff = *ab - ba->scaled(sign_pow(static_cast<long>(d1) * d2));
                instance(diff.is_zero(), tup({{d1, i}, {d2, j}}));
            });
        });
    }

    void assoc() {
        begin("assoc");
        for_v([&](int d1, int i) {
            for_v([&](int d2, int j) {
                for_v([&](int d3, int k) {
                    auto ab = d.apply_wedge(d1, SparseVec::unit(i), d2, SparseVec::unit(j));
                    auto bc = d.apply_wedge(d2, SparseVec::unit(j), d3, SparseVec::unit(k));
                    if (!ab || !bc) return;
                    auto l = d.apply_wedge(d1 + d2, *ab, d3, SparseVec::unit(k));
                    auto r = d.apply_wedge(d1, SparseVec::unit(i), d2 + d3, *bc);
                    if (!l || !r) return;
                    instance(*l == *r, tup({{d1, i}, {d2, j}, {d3, k}}));
                });
            });
        });
    }

    void antisym() {
        begin("antisym");
        for_v([&](int d1, int i) {
            for_v([&](int d2, int j) {
                auto ab = d.apply_bracket(d1, SparseVec::unit(i), d2, SparseVec::unit(j));
                auto ba = d.apply_bracket(d2, SparseVec::unit(j), d1, SparseVec::unit(i));
                if (!ab || !ba) return;
                SparseVec diff =
                    *ab + ba->scaled(sign_pow(static_cast<long>(d1 - 1) * (d2 - 1)));
                instance(diff.is_zero(), tup({{d1, i}, {d2, j}}));
            });
        });
    }

    void jacobi() {
        begin("jacobi");
        for_v([&](int d1, int i) {
            for_v([&](int d2, int j) {
                for_v([&](int d3, int k) {
                    auto bc = d.apply_bracket(d2, SparseVec::unit(j), d3, SparseVec::unit(k));
                    auto ab = d.apply_bracket(d1, SparseVec::unit(i), d2, SparseVec::unit(j));
                    auto ac = d.apply_bracket(d1, SparseVec::unit(i), d3, SparseVec::unit(k));
                    if (!bc || !ab || !ac) return;
                    auto l = d.apply_bracket(d1, SparseVec::unit(i), d2 + d3 - 1, *bc);
                    auto r1 = d.apply_bracket(d1 + d2 - 1, *ab, d3, SparseVec::unit(k));
                    auto r2 = d.apply_bracket(d2, SparseVec::unit(j), d1 + d3 - 1, *ac);
                    if (!l || !r1 || !r2) return;
                    SparseVec rhs =
                        *r1 + r2->scaled(sign_pow(static_cast<long>(d1 - 1) * (d2 - 1)));
                    instance(*l == rhs, tup({{d1, i}, {d2, j}, {d3, k}}));
                });
            });
        });
    }

    void leibniz() {
        begin("leibniz");
        for_v([&](int d1, int i) {
            for_v([&](int d2, int j) {
                for_v([&](int d3, int k) {
                    auto bc = d.apply_wedge(d2, SparseVec::unit(j), d3, SparseVec::unit(k));
                    auto ab = d.apply_bracket(d1, SparseVec::unit(i), d2, SparseVec::unit(j));
                    auto ac = d.apply_bracket(d1, SparseVec::unit(i), d3, SparseVec::unit(k));
                    if (!bc || !ab || !ac) return;
                    auto l = d.apply_bracket(d1, SparseVec::unit(i), d2 + d3, *bc);
                    auto r1 = d.apply_wedge(d1 + d2 - 1, *ab, d3, SparseVec::unit(k));
                    auto r2 = d.apply_wedge(d2, SparseVec::unit(j), d1 + d3 - 1, *ac);
                    if (!l || !r1 || !r2) return;
                    SparseVec rhs = *r1 + r2->scaled(sign_pow(static_cast<long>(d1 + 1) * d2));
                    instance(*l == rhs, tup({{d1, i}, {d2, j}, {d3, k}}));
                });
            });
        });
    }

    void i_module() {
        begin("i-module");
        for_v([&](int d1, int i) {
            for_v([&](int d2, int j) {
                for_w([&](int dw, int w) {
                    auto ab = d.apply_wedge(d1, SparseVec::unit(i), d2, SparseVec::unit(j));
                    auto bw = d.apply_contract(d2, SparseVec::unit(j), dw, SparseVec::unit(w));
                    if (!ab || !bw) return;
                    auto l = d.apply_contract(d1 + d2, *ab, dw, SparseVec::unit(w));
                    auto r = d.apply_contract(d1, SparseVec::unit(i), d2 + dw, *bw);
                    if (!l || !r) return;
                    instance(*l == *r, tup({{d1, i}, {d2, j}, {dw, w}}));
                });
            });
        });
    }

    void l_module(const std::string& id) {
        begin(id);
        for_v([&](int d1, int i) {
            for_v([&](int d2, int j) {
                for_w([&](int dw, int w) {
                    auto ab = d.apply_bracket(d1, SparseVec::unit(i), d2, SparseVec::unit(j));
                    auto bw = d.apply_lie(d2, SparseVec::unit(j), dw, SparseVec::unit(w));
                    auto aw = d.apply_lie(d1, SparseVec::unit(i), dw, SparseVec::unit(w));
                    if (!ab || !bw || !aw) return;
                    auto l = d.apply_lie(d1 + d2 - 1, *ab, dw, SparseVec::unit(w));
                    auto r1 = d.apply_lie(d1, SparseVec::unit(i), d2 + dw - 1, *bw);
                    auto r2 = d.apply_lie(d2, SparseVec::unit(j), d1 + dw - 1, *aw);
                    if (!l || !r1 || !r2) return;
                    SparseVec rhs =
                        *r1 - r2->scaled(sign_pow(static_cast<long>(d1 - 1) * (d2 - 1)));
                    instance(*l == rhs, tup({{d1, i}, {d2, j}, {dw, w}}));
                });
            });
        });
    }

    void l_i() {
        begin("l-i");
        for_v([&](int d1, int i) {
            for_v([&](int d2, int j) {
                for_w([&](int dw, int w) {
                    auto bw = d.apply_lie(d2, SparseVec::unit(j), dw, SparseVec::unit(w));
                    auto aw = d.apply_contract(d1, SparseVec::unit(i), dw, SparseVec::unit(w));
                    auto ab = d.apply_bracket(d1, SparseVec::unit(i), d2, SparseVec::unit(j));
                    if (!bw || !aw || !ab) return;
                    auto t1 = d.apply_contract(d1, SparseVec::unit(i), d2 + dw - 1, *bw);
                    auto t2 = d.apply_lie(d2, SparseVec::unit(j), d1 + dw, *aw);
                    auto t3 = d.apply_contract(d1 + d2 - 1, *ab, dw, SparseVec::unit(w));
                    if (!t1 || !t2 || !t3) return;
                    SparseVec lhs =
                        *t1 - t2->scaled(sign_pow(static_cast<long>(d1) * (d2 + 1)));
                    instance(lhs == *t3, tup({{d1, i}, {d2, j}, {dw, w}}));
                });
            });
        });
    }

    void l_cup() {
        begin("l-cup");
        for_v([&](int d1, int i) {
            for_v([&](int d2, int j) {
                for_w([&](int dw, int w) {
                    auto ab = d.apply_wedge(d1, SparseVec::unit(i), d2, SparseVec::unit(j));
                    auto bw = d.apply_contract(d2, SparseVec::unit(j), dw, SparseVec::unit(w));
                    auto lw = d.apply_lie(d2, SparseVec::unit(j), dw, SparseVec::unit(w));
                    if (!ab || !bw || !lw) return;
                    auto l = d.apply_lie(d1 + d2, *ab, dw, SparseVec::unit(w));
                    auto r1 = d.apply_lie(d1, SparseVec::unit(i), d2 + dw, *bw);
                    auto r2 = d.apply_contract(d1, SparseVec::unit(i), d2 + dw - 1, *lw);
                    if (!l || !r1 || !r2) return;
                    SparseVec rhs = *r1 + r2->scaled(sign_pow(d1));
                    instance(*l == rhs, tup({{d1, i}, {d2, j}, {dw, w}}));
                });
            });
        });
    }

    void l_i_delta() {
        begin("l-i-delta");
        for_v([&](int d1, int i) {
            for_w([&](int dw, int w) {
                auto iw = d.apply_contract(d1, SparseVec::unit(i), dw, SparseVec::unit(w));
                auto dww = d.apply_delta(dw, SparseVec::unit(w));
                auto lw = d.apply_lie(d1, SparseVec::unit(i), dw, SparseVec::unit(w));
                if (!iw || !dww || !lw) return;
                auto t1 = d.apply_delta(d1 + dw, *iw);
                auto t2 = d.apply_contract(d1, SparseVec::unit(i), dw - 1, *dww);
                if (!t1 || !t2) return;
                SparseVec lhs = *t1 - t2->scaled(sign_pow(d1));
                instance(lhs == *lw, tup({{d1, i}, {dw, w}}));
            });
        });
    }

    void de2(const std::string& id) {
        begin(id);
        for_w([&](int dw, int w) {
            auto dww = d.apply_delta(dw, SparseVec::unit(w));
            if (!dww) return;
            auto dd = d.apply_delta(dw - 1, *dww);
            if (!dd) return;
            instance(dd->is_zero(), tup({{dw, w}}));
        });
    }

    void l_delta() {
        begin("l-delta");
        for_v([&](int d1, int i) {
            for_w([&](int dw, int w) {
                auto lw = d.apply_lie(d1, SparseVec::unit(i), dw, SparseVec::unit(w));
                auto dww = d.apply_delta(dw, SparseVec::unit(w));
                if (!lw || !dww) return;
                auto t1 = d.apply_delta(d1 + dw - 1, *lw);
                auto t2 = d.apply_lie(d1, SparseVec::unit(i), dw - 1, *dww);
                if (!t1 || !t2) return;
                SparseVec diff = *t1 - t2->scaled(sign_pow(d1 - 1));
                instance(diff.is_zero(), tup({{d1, i}, {dw, w}}));
            });
        });
    }
};

}  // namespace

AxiomReport check_gerstenhaber(const CalculusData& data) {
    Checker c{data};
    c.comm();
    c.assoc();
    c.antisym();
    c.jacobi();
    c.leibniz();
    return c.report;
}

AxiomReport check_calculus(const CalculusData& data) {
    Checker c{data};
    c.comm();
    c.assoc();
    c.antisym();
    c.jacobi();
    c.leibniz();
    c.i_module();
    c.l_module("l-module");
    c.l_i();
    c.l_cup();
    c.l_i_delta();
    c.de2("de-2");
    return c.report;
}

AxiomReport check_lie_plus_delta(const CalculusData& data) {
    Checker c{data};
    c.antisym();
    c.jacobi();
    c.l_module("l-module");
    c.de2("Lie-de-2");
    c.l_delta();
    return c.report;
}

CalculusData induce_on_homology(const HochschildCohomology& coh, const HochschildHomology& hom,
                                const SignsManifest& signs) {
    if (coh.alg != hom.alg) throw input_error("induce_on_homology: different algebras");
    CalculusData out;
    for (int k = 0; k <= coh.k_max; ++k)
        if (coh.dims.at(k) > 0) out.v_dims[k] = static_cast<int>(coh.dims.at(k));
    for (int m = 0; m <= hom.m_max; ++m)
        if (hom.dims.at(-m) > 0) out.w_dims[-m] = static_cast<int>(hom.dims.at(-m));

    auto v_class = [&](const Cochain& p) {
        auto cls = coh.class_of(p);
        if (!cls)
            throw consistency_error(
                "induce_on_homology: representative drift on the cochain side");
        return *cls;
    };
    auto w_class = [&](const Chain& c) {
        if (c.length < 0 || c.length > hom.m_max || c.is_zero()) return SparseVec();
        auto cls = hom.class_of(c);
        if (!cls)
            throw consistency_error("induce_on_homology: representative drift on the chain side");
        return *cls;
    };

    for (int k1 = 0; k1 <= coh.k_max; ++k1)
        for (std::size_t i = 0; i < coh.reps[k1].size(); ++i)
            for (int k2 = 0; k2 <= coh.k_max; ++k2)
                for (std::size_t j = 0; j < coh.reps[k2].size(); ++j) {
                    const Cochain& p = coh.reps[k1][i];
                    const Cochain& q = coh.reps[k2][j];
                    if (k1 + k2 <= coh.k_max)
                        out.wedge[{k1, (int)i, k2, (int)j}] = v_class(cup(p, q));
                    int bd = k1 + k2 - 1;
                    if (bd >= 0 && bd <= coh.k_max)
                        out.bracket[{k1, (int)i, k2, (int)j}] =
                            v_class(gerstenhaber_bracket(p, q, true));
                }

    for (int k = 0; k <= coh.k_max; ++k)
        for (std::size_t i = 0; i < coh.reps[k].size(); ++i) {
            const Cochain& p = coh.reps[k][i];
            for (int m = 0; m <= hom.m_max; ++m)
                for (std::size_t j = 0; j < hom.reps[m].size(); ++j) {
                    const Chain& c = hom.reps[m][j];
                    if (m - k <= hom.m_max)
                        out.contract[{k, (int)i, -m, (int)j}] = w_class(contract_I(p, c));
                    if (m - k + 1 <= hom.m_max) {
                        Chain lc;
                        if (k >= 1) {
                            lc = scale(lie_derive_L(p, c), induced_l_twist(signs, k));
                        } else {
                            // V^0 classes carry no L formula; the action is
                            // forced by l-i-delta
                            Chain bi = connes_B(contract_I(p, c));
                            Chain ib = contract_I(p, connes_B(c));
                            lc = add(bi, scale(ib, -sign_pow(k)));
                        }
                        out.lie[{k, (int)i, -m, (int)j}] = w_class(lc);
                    }
                }
        }

    for (int m = 0; m <= hom.m_max; ++m)
        for (std::size_t j = 0; j < hom.reps[m].size(); ++j)
            if (m + 1 <= hom.m_max)
                out.delta[{-m, (int)j}] = w_class(connes_B(hom.reps[m][j]));

    return out;
}

}  // namespace hochcalc
