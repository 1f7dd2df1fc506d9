#include <doctest.h>

#include <sstream>

#include "hochcalc/algebra.hpp"

using namespace hochcalc;

TEST_CASE("dual numbers validate") {
    AlgebraSpec a = builtin("dual_numbers");
    CHECK(a.dim() == 2);
    CHECK(a.basis[1] == "eps");
    ValidationReport rep = validate(a);
    CHECK(rep.ok());
}

TEST_CASE("injected associativity fault is reported with the triple") {
    AlgebraSpec a = builtin("matrix", {2});
    // corrupt e12·e21: should be e11, make it e22
    int e12 = 1, e21 = 2, e22 = 3;
    a.mult[{e12, e21}] = SparseVec::unit(e22);
    ValidationReport rep = validate(a);
    CHECK(!rep.ok());
    bool found = false;
    for (const auto& issue : rep.issues)
        if (issue.kind == "associativity" && issue.witness.find("e12") != std::string::npos)
            found = true;
    CHECK(found);
}

TEST_CASE("matrix(2) passes all 64 triples") {
    AlgebraSpec a = builtin("matrix", {2});
    ValidationReport rep = validate(a);
    CHECK(rep.ok());
    CHECK(rep.triples_checked == 64);
}

TEST_CASE("multiply examples") {
    AlgebraSpec dual = builtin("dual_numbers");
    Element eps{&dual, SparseVec::unit(1)};
    CHECK(multiply(eps, eps).coords.is_zero());

    AlgebraSpec m2 = builtin("matrix", {2});
    Element e11{&m2, SparseVec::unit(0)}, e12{&m2, SparseVec::unit(1)};
    CHECK(multiply(e11, e12).coords == SparseVec::unit(1));

    Element one{&m2, m2.unit};
    Element x{&m2, SparseVec::unit(2)};
    CHECK(multiply(one, x).coords == x.coords);
    CHECK(multiply(x, one).coords == x.coords);

    Element wrong{&dual, SparseVec::unit(0)};
    CHECK_THROWS_AS(multiply(wrong, x), input_error);
}

TEST_CASE("builtins") {
    CHECK(builtin("dual_numbers").dim() == 2);
    CHECK(builtin("matrix", {2}).dim() == 4);
    CHECK(builtin("truncated_poly", {1, 2}).dim() == 3);  // K[x]/(x^3)
    AlgebraSpec g = builtin("graded_poly", {2, 3});
    CHECK(g.degreewise);
    CHECK(g.dim() == 10);
    CHECK(builtin("group_algebra_Z2").dim() == 2);
    CHECK_THROWS_AS(builtin("nope"), input_error);
    CHECK_THROWS_AS(builtin("matrix", {99}), input_error);
    CHECK(builtin_from_string("matrix(2)").dim() == 4);
    CHECK(builtin_from_string("truncated_poly(2,2)").dim() == 6);
}

TEST_CASE("degreewise products fail loudly beyond the bound") {
    AlgebraSpec g = builtin("graded_poly", {1, 3});
    int x3 = 3;  // basis order: 1, x, x^2, x^3
    CHECK(g.grading[x3] == 3);
    CHECK_THROWS_AS(g.mult_at(x3, x3), resource_error);
    // truncated_poly silently truncates instead
    AlgebraSpec t = builtin("truncated_poly", {1, 3});
    CHECK(t.mult_at(x3, x3).is_zero());
}

TEST_CASE("file format round-trips bit-exactly") {
    for (const char* name : {"dual_numbers", "group_algebra_Z2"}) {
        AlgebraSpec a = builtin(name);
        std::stringstream s1;
        write_algebra(a, s1);
        std::stringstream in(s1.str());
        AlgebraSpec b = parse_algebra(in);
        ValidationReport rep = validate(b);
        CHECK(rep.ok());
        std::stringstream s2;
        write_algebra(b, s2);
        CHECK(s1.str() == s2.str());
    }
    AlgebraSpec m2 = builtin("matrix", {2});
    std::stringstream s1;
    write_algebra(m2, s1);
    std::stringstream in(s1.str());
    AlgebraSpec b = parse_algebra(in);
    std::stringstream s2;
    write_algebra(b, s2);
    CHECK(s1.str() == s2.str());
}

TEST_CASE("parse errors") {
    std::stringstream bad("basis a b\nunit 1/1 0/1\n0 0 9 1/1\n");
    CHECK_THROWS_AS(parse_algebra(bad), input_error);
    std::stringstream bad2("basis a\n0 0 0 1/1\n");
    CHECK_THROWS_AS(parse_algebra(bad2), input_error);  // no unit
}

TEST_CASE("multiply is associative and unital on random elements") {
    Rng rng(7);
    for (const char* name : {"dual_numbers", "group_algebra_Z2", "matrix(2)",
                             "truncated_poly(2,2)"}) {
        AlgebraSpec a = builtin_from_string(name);
        for (int trial = 0; trial < 20; ++trial) {
            SparseVec x, y, z;
            for (int i = 0; i < a.dim(); ++i) {
                x.set(i, rng.coeff());
                y.set(i, rng.coeff());
                z.set(i, rng.coeff());
            }
            CHECK(a.multiply(a.multiply(x, y), z) == a.multiply(x, a.multiply(y, z)));
            CHECK(a.multiply(a.unit, x) == x);
            CHECK(a.multiply(x, a.unit) == x);
        }
    }
}

TEST_CASE("graded products add degrees on homogeneous elements") {
    AlgebraSpec g = builtin("graded_poly", {2, 4});
    for (const auto& [ij, v] : g.mult) {
        int want = g.grading[ij.first] + g.grading[ij.second];
        for (const auto& [k, c] : v.entries()) CHECK(g.grading[k] == want);
    }
}

TEST_CASE("reduced basis handles a unit that is not a basis direction") {
    AlgebraSpec m2 = builtin("matrix", {2});
    validate(m2);
    // unit = e11 + e22, pivot is e11; reduced basis: 1, e12, e21, e22
    CHECK(m2.unit_pivot == 0);
    CHECK(m2.rlabel(0) == "1");
    CHECK(m2.rlabel(3) == "e22");
    SparseVec e11 = SparseVec::unit(0);
    SparseVec red = m2.to_reduced(e11);
    CHECK(m2.from_reduced(red) == e11);
    // round-trip on all basis elements
    for (int i = 0; i < m2.dim(); ++i) {
        SparseVec e = SparseVec::unit(i);
        CHECK(m2.from_reduced(m2.to_reduced(e)) == e);
    }
    // reduced multiplication matches original multiplication
    SparseVec a = m2.to_reduced(SparseVec::unit(1));  // e12
    SparseVec b = m2.to_reduced(SparseVec::unit(2));  // e21
    SparseVec prod;
    for (const auto& [i, x] : a.entries())
        for (const auto& [j, y] : b.entries()) prod.axpy(x * y, m2.rmult_at(i, j));
    CHECK(m2.from_reduced(prod) == SparseVec::unit(0));  // e12·e21 = e11
}
