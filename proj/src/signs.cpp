#include "hochcalc/signs.hpp"

#include <json.hpp>

#include "hochcalc/cohomology.hpp"

namespace hochcalc {

const SignsManifest::Entry& SignsManifest::at(const std::string& id) const {
    auto it = entries.find(id);
    if (it == entries.end()) throw input_error("signs manifest: missing identity " + id);
    return it->second;
}

std::string SignsManifest::to_json() const {
    nlohmann::json j;  // nlohmann::json keeps object keys sorted
    j["version"] = version;
    for (const auto& [id, e] : entries) {
        j["identities"][id]["e1"] = e.e1;
        j["identities"][id]["e2"] = e.e2;
    }
    return j.dump(2) + "\n";
}

SignsManifest SignsManifest::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw input_error(std::string("signs manifest: bad json: ") + ex.what());
    }
    SignsManifest m;
    if (!j.contains("identities")) throw input_error("signs manifest: no identities object");
    m.version = j.value("version", 1);
    for (auto it = j["identities"].begin(); it != j["identities"].end(); ++it) {
        Entry e;
        e.e1 = it.value().value("e1", "0");
        e.e2 = it.value().value("e2", "0");
        m.entries[it.key()] = e;
    }
    return m;
}

std::uint64_t SignsManifest::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : to_json()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

long eval_exponent(const std::string& expr, long k1, long k2) {
    long g1 = k1 - 1, g2 = k2 - 1;
    if (expr == "0") return 0;
    if (expr == "1") return 1;
    if (expr == "k1") return k1;
    if (expr == "k2") return k2;
    if (expr == "k1+1") return k1 + 1;
    if (expr == "k2+1") return k2 + 1;
    if (expr == "k1+k2") return k1 + k2;
    if (expr == "k1+k2+1") return k1 + k2 + 1;
    if (expr == "k1*k2") return k1 * k2;
    if (expr == "g1*g2") return g1 * g2;
    if (expr == "k1*(k2+1)") return k1 * (k2 + 1);
    if (expr == "(k1+1)*k2") return (k1 + 1) * k2;
    throw input_error("signs manifest: unknown exponent expression " + expr);
}

namespace {

Rational s1(const SignsManifest::Entry& e, long k1, long k2) {
    return sign_pow(eval_exponent(e.e1, k1, k2));
}
Rational s2(const SignsManifest::Entry& e, long k1, long k2) {
    return sign_pow(eval_exponent(e.e2, k1, k2));
}

}  // namespace

Cochain defect_leibniz_cup(const Cochain& p, const Cochain& q, const SignsManifest::Entry& e) {
    Cochain lhs = cochain_boundary(cup(p, q));
    Cochain t1 = cup(cochain_boundary(p), q);
    Cochain t2 = cup(p, cochain_boundary(q));
    return add(lhs, add(scale(t1, -s1(e, p.arity, q.arity)), scale(t2, -s2(e, p.arity, q.arity))));
}

Cochain defect_leibniz_bracket(const Cochain& q1, const Cochain& q2,
                               const SignsManifest::Entry& e) {
    Cochain lhs = cochain_boundary(gerstenhaber_bracket(q1, q2, true));
    Cochain t1 = gerstenhaber_bracket(cochain_boundary(q1), q2, true);
    Cochain t2 = gerstenhaber_bracket(q1, cochain_boundary(q2), true);
    return add(lhs,
               add(scale(t1, -s1(e, q1.arity, q2.arity)), scale(t2, -s2(e, q1.arity, q2.arity))));
}

Cochain defect_jacobi(const Cochain& q1, const Cochain& q2, const Cochain& q3,
                      const SignsManifest::Entry& e) {
    Cochain lhs = gerstenhaber_bracket(q1, gerstenhaber_bracket(q2, q3, true), true);
    Cochain t1 = gerstenhaber_bracket(gerstenhaber_bracket(q1, q2, true), q3, true);
    Cochain t2 = gerstenhaber_bracket(q2, gerstenhaber_bracket(q1, q3, true), true);
    return add(lhs,
               add(scale(t1, -s1(e, q1.arity, q2.arity)), scale(t2, -s2(e, q1.arity, q2.arity))));
}

Cochain defect_antisym(const Cochain& q1, const Cochain& q2, const SignsManifest::Entry& e) {
    Cochain lhs = gerstenhaber_bracket(q1, q2, true);
    Cochain rhs = gerstenhaber_bracket(q2, q1, true);
    return add(lhs, scale(rhs, s1(e, q1.arity, q2.arity)));
}

Chain defect_l_morphism(const Cochain& q1, const Cochain& q2, const Chain& c,
                        const SignsManifest::Entry& e) {
    Chain lhs = lie_derive_L(q1, lie_derive_L(q2, c));
    Chain mid = lie_derive_L(q2, lie_derive_L(q1, c));
    Chain rhs = lie_derive_L(gerstenhaber_bracket(q1, q2), c);
    return add(add(lhs, scale(mid, -s1(e, q1.arity, q2.arity))),
               scale(rhs, -s2(e, q1.arity, q2.arity)));
}

Chain defect_b_l(const Cochain& q, const Chain& c, const SignsManifest::Entry& e) {
    Chain lhs = connes_B(lie_derive_L(q, c));
    Chain rhs = lie_derive_L(q, connes_B(c));
    return add(lhs, scale(rhs, -s1(e, q.arity, 0)));
}

Chain defect_i_chain_map(const Cochain& p, const Chain& c, const SignsManifest::Entry& e) {
    Chain lhs = chain_boundary(contract_I(p, c));
    Chain t1 = contract_I(p, chain_boundary(c));
    Chain t2 = contract_I(cochain_boundary(p), c);
    return add(lhs, add(scale(t1, -s1(e, p.arity, 0)), scale(t2, -s2(e, p.arity, 0))));
}

Chain defect_l_chain_map(const Cochain& q, const Chain& c, const SignsManifest::Entry& e) {
    Chain lhs = chain_boundary(lie_derive_L(q, c));
    Chain t1 = lie_derive_L(q, chain_boundary(c));
    Chain t2 = lie_derive_L(cochain_boundary(q), c);
    return add(lhs, add(scale(t1, -s1(e, q.arity, 0)), scale(t2, -s2(e, q.arity, 0))));
}

Chain defect_del_b(const Chain& c, const SignsManifest::Entry& e) {
    Chain lhs = chain_boundary(connes_B(c));
    Chain rhs = connes_B(chain_boundary(c));
    return add(lhs, scale(rhs, -s1(e, 0, 0)));
}

Chain defect_i_cup(const Cochain& p, const Cochain& q, const Chain& c,
                   const SignsManifest::Entry& e) {
    Chain lhs = contract_I(cup(q, p), c);
    Chain rhs = contract_I(p, contract_I(q, c));
    return add(lhs, scale(rhs, -s1(e, p.arity, q.arity)));
}

Chain defect_b_i_homotopy(const Cochain& p, const Chain& c, const SignsManifest::Entry& e) {
    Chain lhs = connes_B(contract_I(p, c));
    Chain t1 = contract_I(p, connes_B(c));
    Chain t2 = lie_derive_L(p, c);
    return add(lhs, add(scale(t1, -s1(e, p.arity, 0)), scale(t2, -s2(e, p.arity, 0))));
}

Cochain cup_commutator(const Cochain& p, const Cochain& q, const SignsManifest::Entry& e) {
    return add(cup(p, q), scale(cup(q, p), -s1(e, p.arity, q.arity)));
}

Chain defect_l_i(const Cochain& p, const Cochain& q, const Chain& c,
                 const SignsManifest::Entry& e) {
    Chain t0 = contract_I(p, lie_derive_L(q, c));
    Chain t1 = lie_derive_L(q, contract_I(p, c));
    Chain t2 = contract_I(gerstenhaber_bracket(p, q, true), c);
    return add(t0, add(scale(t1, -s1(e, p.arity, q.arity)), scale(t2, -s2(e, p.arity, q.arity))));
}

Chain defect_l_cup(const Cochain& p, const Cochain& q, const Chain& c,
                   const SignsManifest::Entry& e) {
    Chain t0 = lie_derive_L(cup(p, q), c);
    Chain t1 = lie_derive_L(p, contract_I(q, c));
    Chain t2 = contract_I(p, lie_derive_L(q, c));
    return add(t0, add(scale(t1, -s1(e, p.arity, q.arity)), scale(t2, -s2(e, p.arity, q.arity))));
}

Rational induced_l_twist(const SignsManifest& m, int arity) {
    return sign_pow(eval_exponent(m.at("induced-l-twist").e1, arity, 0));
}

SignsManifest SignsManifest::builtin() {
    SignsManifest m;
    m.entries["leibniz-cup"] = {"0", "k1"};
    m.entries["leibniz-bracket"] = {"k2+1", "0"};
    m.entries["jacobi"] = {"0", "g1*g2"};
    m.entries["antisym"] = {"g1*g2", "0"};
    m.entries["l-morphism"] = {"g1*g2", "0"};
    m.entries["b-l"] = {"k1+1", "0"};
    m.entries["i-chain-map"] = {"k1", "k1+1"};
    m.entries["l-chain-map"] = {"k1+1", "k1+1"};
    m.entries["del-b"] = {"1", "0"};
    m.entries["i-cup"] = {"0", "0"};
    m.entries["b-i-homotopy"] = {"k1", "k1+1"};
    m.entries["cup-comm-exact"] = {"k1*k2", "0"};
    m.entries["l-i"] = {"k1*(k2+1)", "k2+1"};
    m.entries["l-cup"] = {"k2", "0"};
    m.entries["induced-l-twist"] = {"k1+1", "0"};
    // comparison-map compatibilities (validated by the hkr suite): with
    // k1 the polyvector degree and k2 the chain length,
    //   chkr∘I_{hkr γ} = (-1)^{e1} 𝓘_γ∘chkr          (transport-i)
    //   chkr∘L_{hkr γ} = (-1)^{e1} 𝓛_γ∘chkr          (transport-l)
    //   [hkr γ1 ∪ hkr γ2] = (-1)^{e1} [hkr(γ1∧γ2)]   (transport-cup)
    //   [[hkr γ1, hkr γ2]] = (-1)^{e1} [hkr [γ1,γ2]]  (transport-bracket)
    m.entries["transport-i"] = {"0", "0"};
    m.entries["transport-l"] = {"k1+1", "0"};
    m.entries["transport-cup"] = {"k1*k2", "0"};
    m.entries["transport-bracket"] = {"0", "0"};
    return m;
}

namespace {

// generic 2-dimensional algebra K[t]/(t^2 - 2/3 - 5/7 t)
AlgebraSpec generic2() {
    AlgebraSpec a;
    a.name = "generic2";
    a.basis = {"1", "t"};
    a.unit.set(0, Rational(1));
    a.mult[{0, 0}] = SparseVec::unit(0);
    a.mult[{0, 1}] = SparseVec::unit(1);
    a.mult[{1, 0}] = SparseVec::unit(1);
    SparseVec tt;
    tt.set(0, Rational(2, 3));
    tt.set(1, Rational(5, 7));
    a.mult[{1, 1}] = tt;
    ValidationReport rep = validate(a);
    if (!rep.ok()) throw consistency_error("generic2 failed validation");
    return a;
}

struct SignCtx {
    std::vector<AlgebraSpec> algs;
    // per algebra: random (co)chains and cocycle/cycle samples
    struct Samples {
        std::vector<Cochain> cochains;  // arities 0..hi, two each
        std::vector<Chain> chains;      // lengths 0..3
        std::vector<Cochain> cocycles;
        std::vector<Chain> cycles;
    };
    std::vector<Samples> samples;

    SignCtx(std::uint64_t seed) {
        algs.push_back(generic2());
        algs.push_back(builtin("dual_numbers"));
        algs.push_back(builtin("matrix", {2}));
        algs.push_back(builtin("truncated_poly", {1, 2}));
        for (const auto& a : algs) {
            Samples s;
            Rng rng(seed ^ (0x5bull * a.dim()));
            int hi = a.rdim() > 2 ? 2 : 3;
            for (int k = 0; k <= hi; ++k) {
                s.cochains.push_back(random_cochain(a, k, rng));
                s.cochains.push_back(random_cochain(a, k, rng));
            }
            for (int m = 0; m <= 3; ++m) s.chains.push_back(random_chain(a, m, rng));
            int kmax = a.rdim() > 2 ? 2 : 3;
            HochschildCohomology h = cohomology(a, kmax);
            HochschildHomology hh = homology(a, 3);
            for (int k = 0; k <= kmax; ++k)
                for (const auto& r : h.reps[k]) s.cocycles.push_back(r);
            for (int m = 0; m <= 2; ++m) {
                for (const auto& r : hh.reps[m]) s.cycles.push_back(r);
                if (!hh.reps[m].empty())
                    s.cycles.push_back(
                        add(hh.reps[m][0], chain_boundary(random_chain(a, m + 1, rng))));
            }
            samples.push_back(std::move(s));
        }
    }
};

bool chain_exact(const Chain& d) {
    if (d.is_zero()) return true;
    auto w = exactness_witness(d);
    return w.has_value() && chain_boundary(*w) == d;
}

bool cochain_exact(const Cochain& d) {
    if (d.is_zero()) return true;
    auto w = exactness_witness(d);
    return w.has_value() && cochain_boundary(*w) == d;
}

const std::vector<std::string> kFamily = {"0",       "1",     "k1",    "k1+1",      "k2",
                                          "k2+1",    "k1+k2", "k1+k2+1", "k1*k2",   "g1*g2",
                                          "k1*(k2+1)", "(k1+1)*k2"};

using EntryCheck = std::function<bool(const SignCtx&, const SignsManifest::Entry&)>;

void derive_one(SignsManifest& out, const SignCtx& ctx, const SignsManifest& frozen,
                const std::string& id, bool two_exponents, const EntryCheck& check) {
    std::vector<SignsManifest::Entry> valid;
    for (const auto& e1 : kFamily) {
        if (!two_exponents) {
            SignsManifest::Entry e{e1, "0"};
            if (check(ctx, e)) valid.push_back(e);
            continue;
        }
        for (const auto& e2 : kFamily) {
            SignsManifest::Entry e{e1, e2};
            if (check(ctx, e)) valid.push_back(e);
        }
    }
    if (valid.empty())
        throw consistency_error("sign derivation for '" + id + "' found no valid candidate");
    // desk-scale samples cannot always separate aliased exponents; resolve
    // ties toward the frozen table, which must itself be valid
    const auto& want = frozen.at(id);
    for (const auto& e : valid)
        if (e.e1 == want.e1 && e.e2 == want.e2) {
            out.entries[id] = e;
            return;
        }
    throw consistency_error("sign derivation for '" + id +
                            "': frozen entry not among the valid candidates");
}

}  // namespace

std::vector<std::string> verify_signs(const SignsManifest& m, std::uint64_t seed) {
    SignCtx ctx(seed);
    std::vector<std::string> failures;
    auto run = [&](const std::string& id, const EntryCheck& check) {
        bool ok = false;
        try {
            ok = check(ctx, m.at(id));
        } catch (const input_error&) {
            ok = false;
        }
        if (!ok) failures.push_back(id);
    };

    run("leibniz-cup", [](const SignCtx& c, const SignsManifest::Entry& e) {
        for (const auto& s : c.samples)
            for (const auto& p : s.cochains)
                for (const auto& q : s.cochains)
                    if (!defect_leibniz_cup(p, q, e).is_zero()) return false;
        return true;
    });
    run("leibniz-bracket", [](const SignCtx& c, const SignsManifest::Entry& e) {
        for (const auto& s : c.samples)
            for (const auto& p : s.cochains)
                for (const auto& q : s.cochains) {
                    if (p.arity < 1 || q.arity < 1) continue;
                    if (!defect_leibniz_bracket(p, q, e).is_zero()) return false;
                }
        return true;
    });
    run("jacobi", [](const SignCtx& c, const SignsManifest::Entry& e) {
        for (const auto& s : c.samples)
            for (std::size_t i = 0; i < s.cochains.size(); ++i)
                for (std::size_t j = 0; j < s.cochains.size(); ++j)
                    for (std::size_t k = 0; k < s.cochains.size(); k += 2) {
                        const auto &q1 = s.cochains[i], &q2 = s.cochains[j], &q3 = s.cochains[k];
                        if (q1.arity < 1 || q2.arity < 1 || q3.arity < 1) continue;
                        if (!defect_jacobi(q1, q2, q3, e).is_zero()) return false;
                    }
        return true;
    });
    run("antisym", [](const SignCtx& c, const SignsManifest::Entry& e) {
        for (const auto& s : c.samples)
            for (const auto& q1 : s.cochains)
                for (const auto& q2 : s.cochains) {
                    if (q1.arity < 1 || q2.arity < 1) continue;
                    if (!defect_antisym(q1, q2, e).is_zero()) return false;
                }
        return true;
    });
    run("l-morphism", [](const SignCtx& c, const SignsManifest::Entry& e) {
        for (const auto& s : c.samples)
            for (const auto& q1 : s.cochains)
                for (const auto& q2 : s.cochains) {
                    if (q1.arity < 1 || q2.arity < 1) continue;
                    for (const auto& ch : s.chains)
                        if (!defect_l_morphism(q1, q2, ch, e).is_zero()) return false;
                }
        return true;
    });
    run("b-l", [](const SignCtx& c, const SignsManifest::Entry& e) {
        for (const auto& s : c.samples)
            for (const auto& q : s.cochains) {
                if (q.arity < 1) continue;
                for (const auto& ch : s.chains)
                    if (!defect_b_l(q, ch, e).is_zero()) return false;
            }
        return true;
    });
    run("i-chain-map", [](const SignCtx& c, const SignsManifest::Entry& e) {
        for (const auto& s : c.samples)
            for (const auto& p : s.cochains)
                for (const auto& ch : s.chains)
                    if (!defect_i_chain_map(p, ch, e).is_zero()) return false;
        return true;
    });
    run("l-chain-map", [](const SignCtx& c, const SignsManifest::Entry& e) {
        for (const auto& s : c.samples)
            for (const auto& q : s.cochains) {
                if (q.arity < 1) continue;
                for (const auto& ch : s.chains)
                    if (!defect_l_chain_map(q, ch, e).is_zero()) return false;
            }
        return true;
    });
    run("del-b", [](const SignCtx& c, const SignsManifest::Entry& e) {
        for (const auto& s : c.samples)
            for (const auto& ch : s.chains)
                if (!defect_del_b(ch, e).is_zero()) return false;
        return true;
    });
    run("i-cup", [](const SignCtx& c, const SignsManifest::Entry& e) {
        for (const auto& s : c.samples)
            for (const auto& p : s.cochains)
                for (const auto& q : s.cochains)
                    for (const auto& ch : s.chains)
                        if (!defect_i_cup(p, q, ch, e).is_zero()) return false;
        return true;
    });
    run("b-i-homotopy", [](const SignCtx& c, const SignsManifest::Entry& e) {
        for (const auto& s : c.samples)
            for (const auto& p : s.cocycles) {
                if (p.arity < 1) continue;
                for (const auto& ch : s.cycles)
                    if (!chain_exact(defect_b_i_homotopy(p, ch, e))) return false;
            }
        return true;
    });
    run("cup-comm-exact", [](const SignCtx& c, const SignsManifest::Entry& e) {
        for (const auto& s : c.samples)
            for (const auto& p : s.cocycles)
                for (const auto& q : s.cocycles) {
                    if (p.arity + q.arity > 3) continue;
                    if (!cochain_exact(cup_commutator(p, q, e))) return false;
                }
        return true;
    });
    run("l-i", [](const SignCtx& c, const SignsManifest::Entry& e) {
        for (const auto& s : c.samples)
            for (const auto& p : s.cocycles)
                for (const auto& q : s.cocycles) {
                    if (q.arity < 1) continue;
                    for (const auto& ch : s.cycles)
                        if (!chain_exact(defect_l_i(p, q, ch, e))) return false;
                }
        return true;
    });
    run("l-cup", [](const SignCtx& c, const SignsManifest::Entry& e) {
        for (const auto& s : c.samples)
            for (const auto& p : s.cocycles)
                for (const auto& q : s.cocycles) {
                    if (p.arity < 1 || q.arity < 1) continue;
                    for (const auto& ch : s.cycles)
                        if (!chain_exact(defect_l_cup(p, q, ch, e))) return false;
                }
        return true;
    });
    // the induced-l-twist and the transport entries are validated by the
    // calculus and hkr suites; here we only require well-formed exponents
    for (const char* id : {"induced-l-twist", "transport-i", "transport-l", "transport-cup",
                           "transport-bracket"}) {
        try {
            eval_exponent(m.at(id).e1, 1, 1);
        } catch (const input_error&) {
            failures.push_back(id);
        }
    }
    return failures;
}

SignsManifest derive_signs(std::uint64_t seed) {
    SignCtx ctx(seed);
    SignsManifest frozen = SignsManifest::builtin();
    SignsManifest out;
    auto with = [&](const std::string& id, bool two, const EntryCheck& check) {
        derive_one(out, ctx, frozen, id, two, check);
    };

    with("leibniz-cup", true, [](const SignCtx& c, const SignsManifest::Entry& e) {
        for (const auto& s : c.samples)
            for (const auto& p : s.cochains)
                for (const auto& q : s.cochains)
                    if (!defect_leibniz_cup(p, q, e).is_zero()) return false;
        return true;
    });
    with("leibniz-bracket", true, [](const SignCtx& c, const SignsManifest::Entry& e) {
        for (const auto& s : c.samples)
            for (const auto& p : s.cochains)
                for (const auto& q : s.cochains) {
                    if (p.arity < 1 || q.arity < 1) continue;
                    if (!defect_leibniz_bracket(p, q, e).is_zero()) return false;
                }
        return true;
    });
    with("jacobi", true, [](const SignCtx& c, const SignsManifest::Entry& e) {
        for (const auto& s : c.samples)
            for (std::size_t i = 0; i < s.cochains.size(); ++i)
                for (std::size_t j = 0; j < s.cochains.size(); ++j)
                    for (std::size_t k = 0; k < s.cochains.size(); k += 2) {
                        const auto &q1 = s.cochains[i], &q2 = s.cochains[j], &q3 = s.cochains[k];
                        if (q1.arity < 1 || q2.arity < 1 || q3.arity < 1) continue;
                        if (!defect_jacobi(q1, q2, q3, e).is_zero()) return false;
                    }
        return true;
    });
    with("antisym", false, [](const SignCtx& c, const SignsManifest::Entry& e) {
        for (const auto& s : c.samples)
            for (const auto& q1 : s.cochains)
                for (const auto& q2 : s.cochains) {
                    if (q1.arity < 1 || q2.arity < 1) continue;
                    if (!defect_antisym(q1, q2, e).is_zero()) return false;
                }
        return true;
    });
    with("l-morphism", true, [](const SignCtx& c, const SignsManifest::Entry& e) {
        for (const auto& s : c.samples)
            for (const auto& q1 : s.cochains)
                for (const auto& q2 : s.cochains) {
                    if (q1.arity < 1 || q2.arity < 1) continue;
                    for (const auto& ch : s.chains)
                        if (!defect_l_morphism(q1, q2, ch, e).is_zero()) return false;
                }
        return true;
    });
    with("b-l", false, [](const SignCtx& c, const SignsManifest::Entry& e) {
        for (const auto& s : c.samples)
            for (const auto& q : s.cochains) {
                if (q.arity < 1) continue;
                for (const auto& ch : s.chains)
                    if (!defect_b_l(q, ch, e).is_zero()) return false;
            }
        return true;
    });
    with("i-chain-map", true, [](const SignCtx& c, const SignsManifest::Entry& e) {
        for (const auto& s : c.samples)
            for (const auto& p : s.cochains)
                for (const auto& ch : s.chains)
                    if (!defect_i_chain_map(p, ch, e).is_zero()) return false;
        return true;
    });
    with("l-chain-map", true, [](const SignCtx& c, const SignsManifest::Entry& e) {
        for (const auto& s : c.samples)
            for (const auto& q : s.cochains) {
                if (q.arity < 1) continue;
                for (const auto& ch : s.chains)
                    if (!defect_l_chain_map(q, ch, e).is_zero()) return false;
            }
        return true;
    });
    with("del-b", false, [](const SignCtx& c, const SignsManifest::Entry& e) {
        for (const auto& s : c.samples)
            for (const auto& ch : s.chains)
                if (!defect_del_b(ch, e).is_zero()) return false;
        return true;
    });
    with("i-cup", false, [](const SignCtx& c, const SignsManifest::Entry& e) {
        for (const auto& s : c.samples)
            for (const auto& p : s.cochains)
                for (const auto& q : s.cochains)
                    for (const auto& ch : s.chains)
                        if (!defect_i_cup(p, q, ch, e).is_zero()) return false;
        return true;
    });
    with("b-i-homotopy", true, [](const SignCtx& c, const SignsManifest::Entry& e) {
        for (const auto& s : c.samples)
            for (const auto& p : s.cocycles) {
                if (p.arity < 1) continue;
                for (const auto& ch : s.cycles)
                    if (!chain_exact(defect_b_i_homotopy(p, ch, e))) return false;
            }
        return true;
    });
    with("cup-comm-exact", false, [](const SignCtx& c, const SignsManifest::Entry& e) {
        for (const auto& s : c.samples)
            for (const auto& p : s.cocycles)
                for (const auto& q : s.cocycles) {
                    if (p.arity + q.arity > 3) continue;
                    if (!cochain_exact(cup_commutator(p, q, e))) return false;
                }
        return true;
    });
    with("l-i", true, [](const SignCtx& c, const SignsManifest::Entry& e) {
        for (const auto& s : c.samples)
            for (const auto& p : s.cocycles)
                for (const auto& q : s.cocycles) {
                    if (q.arity < 1) continue;
                    for (const auto& ch : s.cycles)
                        if (!chain_exact(defect_l_i(p, q, ch, e))) return false;
                }
        return true;
    });
    with("l-cup", true, [](const SignCtx& c, const SignsManifest::Entry& e) {
        for (const auto& s : c.samples)
            for (const auto& p : s.cocycles)
                for (const auto& q : s.cocycles) {
                    if (p.arity < 1 || q.arity < 1) continue;
                    for (const auto& ch : s.cycles)
                        if (!chain_exact(defect_l_cup(p, q, ch, e))) return false;
                }
        return true;
    });
    out.entries["induced-l-twist"] = frozen.at("induced-l-twist");
    for (const char* id : {"transport-i", "transport-l", "transport-cup", "transport-bracket"})
        out.entries[id] = frozen.at(id);
    return out;
}

}  // namespace hochcalc
