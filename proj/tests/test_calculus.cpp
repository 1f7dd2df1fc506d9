#include <doctest.h>

#include "hochcalc/calculus.hpp"

using namespace hochcalc;

namespace {

CalculusData induced(const char* name, int k_max, int m_max) {
    AlgebraSpec a = builtin_from_string(name);
    HochschildCohomology coh = cohomology(a, k_max);
    HochschildHomology hom = homology(a, m_max);
    return induce_on_homology(coh, hom, SignsManifest::builtin());
}

}  // namespace

TEST_CASE("one-dimensional V in degree 0 with trivial bracket passes") {
    CalculusData d;
    d.v_dims[0] = 1;
    d.wedge[{0, 0, 0, 0}] = SparseVec::unit(0);
    d.bracket[{0, 0, 0, 0}] = SparseVec();
    AxiomReport r = check_gerstenhaber(d);
    CHECK(r.pass());
}

TEST_CASE("W = 0 passes vacuously") {
    CalculusData d;
    d.v_dims[0] = 1;
    d.wedge[{0, 0, 0, 0}] = SparseVec::unit(0);
    d.bracket[{0, 0, 0, 0}] = SparseVec();
    AxiomReport r = check_calculus(d);
    CHECK(r.pass());
    CHECK(r.at("l-i-delta").checked == 0);
}

TEST_CASE("induced calculus on matrix(2) passes with zero violations") {
    CalculusData d = induced("matrix(2)", 3, 3);
    AxiomReport r = check_calculus(d);
    for (const auto& c : r.checks) {
        INFO(c.axiom_id, " witness ", c.witness);
        CHECK(c.violations == 0);
    }
    CHECK(r.pass());
}

TEST_CASE("induced calculus on dual numbers up to degree 4 passes") {
    CalculusData d = induced("dual_numbers", 4, 4);
    AxiomReport r = check_calculus(d);
    for (const auto& c : r.checks) {
        INFO(c.axiom_id, " witness ", c.witness);
        CHECK(c.violations == 0);
    }
    CHECK(r.pass());
    // calculus pass implies ΛLie+δ pass on the restricted data
    AxiomReport r2 = check_lie_plus_delta(d);
    CHECK(r2.pass());
}

TEST_CASE("induced calculus on K[x]/(x^3) passes") {
    CalculusData d = induced("truncated_poly(1,2)", 3, 3);
    AxiomReport r = check_calculus(d);
    for (const auto& c : r.checks) {
        INFO(c.axiom_id, " witness ", c.witness);
        CHECK(c.violations == 0);
    }
    CHECK(r.pass());
}

TEST_CASE("injected bracket fault is reported with a witness") {
    CalculusData d = induced("dual_numbers", 3, 3);
    bool perturbed = false;
    for (auto& [key, v] : d.bracket) {
        auto [d1, i, d2, j] = key;
        if (d1 >= 1 && d2 >= 1) {
            SparseVec bump = v;
            bump.add(0, rat(1));
            v = bump;
            perturbed = true;
            break;
        }
    }
    REQUIRE(perturbed);
    AxiomReport r = check_calculus(d);
    CHECK(!r.pass());
    bool witnessed = false;
    for (const auto& c : r.checks)
        if (c.status == "fail" && !c.witness.empty()) witnessed = true;
    CHECK(witnessed);
}

TEST_CASE("injected delta fault fails l-i-delta / l-delta") {
    CalculusData d = induced("dual_numbers", 3, 3);
    bool perturbed = false;
    for (auto& [key, v] : d.delta) {
        if (!v.is_zero()) {
            v = v.scaled(rat(2));  // delta -> 2 delta on one degree
            perturbed = true;
            break;
        }
    }
    REQUIRE(perturbed);
    AxiomReport r = check_calculus(d);
    CHECK(!r.pass());
    bool found = false;
    for (const auto& c : r.checks)
        if (c.status == "fail" && (c.axiom_id == "l-i-delta" || c.axiom_id == "de-2"))
            found = true;
    CHECK(found);

    AxiomReport r2 = check_lie_plus_delta(d);
    bool found2 = false;
    for (const auto& c : r2.checks)
        if (c.status == "fail" && (c.axiom_id == "l-delta" || c.axiom_id == "Lie-de-2"))
            found2 = true;
    CHECK(found2);
}

TEST_CASE("induced operations are class-well-defined under representative perturbation") {
    AlgebraSpec a = builtin("dual_numbers");
    HochschildCohomology coh = cohomology(a, 3);
    HochschildHomology hom = homology(a, 3);
    Rng rng(5150);
    for (int trial = 0; trial < 10; ++trial) {
        int k = 1 + static_cast<int>(rng.below(2));
        if (coh.reps[k].empty()) continue;
        Cochain rep = coh.reps[k][0];
        Cochain noise = cochain_boundary(random_cochain(a, k - 1, rng));
        Cochain moved = add(rep, noise);
        auto c0 = coh.class_of(rep);
        auto c1 = coh.class_of(moved);
        REQUIRE(c0.has_value());
        REQUIRE(c1.has_value());
        CHECK(*c0 == *c1);
        for (int k2 = 0; k2 + k <= 3; ++k2) {
            for (const auto& q : coh.reps[k2]) {
                auto lhs = coh.class_of(cup(moved, q));
                auto rhs = coh.class_of(cup(rep, q));
                REQUIRE(lhs.has_value());
                REQUIRE(rhs.has_value());
                CHECK(*lhs == *rhs);
            }
        }
        int m = 1 + static_cast<int>(rng.below(2));
        if (hom.reps[m].empty()) continue;
        Chain crep = hom.reps[m][0];
        Chain cmoved = add(crep, chain_boundary(random_chain(a, m + 1, rng)));
        auto w0 = hom.class_of(contract_I(rep, crep));
        auto w1 = hom.class_of(contract_I(rep, cmoved));
        REQUIRE(w0.has_value());
        REQUIRE(w1.has_value());
        CHECK(*w0 == *w1);
    }
}

TEST_CASE("B of the unit class is zero") {
    AlgebraSpec a = builtin("dual_numbers");
    Chain unit_chain = chain_of(a, {SparseVec::unit(0)});
    CHECK(connes_B(unit_chain).is_zero());
}
