#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "hochcalc/sparse.hpp"

namespace hochcalc {

// An associative unital algebra given by an ordered basis and structure
// constants c_{ij}^k.  Degreewise specs (graded polynomial algebras) carry
// an explicit degree bound; products beyond the bound raise resource_error
// instead of silently truncating.
class AlgebraSpec {
public:
    std::string name;
    std::vector<std::string> basis;
    SparseVec unit;
    std::map<std::pair<int, int>, SparseVec> mult;  // absent entry = zero product
    std::vector<int> grading;                       // empty if ungraded
    bool degreewise = false;
    int degree_bound = -1;

    // set for builtin polynomial algebras (truncated_poly / graded_poly)
    int poly_vars = 0;
    std::vector<std::vector<int>> exponents;  // basis index -> exponent vector

    int dim() const { return static_cast<int>(basis.size()); }
    int degree_of(int i) const { return grading.empty() ? 0 : grading.at(i); }

    // c_{ij}^- as a sparse vector; degreewise bound violations throw.
    const SparseVec& mult_at(int i, int j) const;

    SparseVec multiply(const SparseVec& a, const SparseVec& b) const;

    // --- reduced basis for the normalized Hochschild complexes -----------
    // Index 0 is the unit direction, indices 1..dim-1 span a complement of
    // K·1 (the original basis with the unit pivot dropped).
    int unit_pivot = -1;
    int rdim() const { return dim(); }
    SparseVec to_reduced(const SparseVec& original) const;
    SparseVec from_reduced(const SparseVec& reduced) const;
    const SparseVec& rmult_at(int i, int j) const;  // product of reduced basis elements
    std::string rlabel(int i) const;

    void finalize();  // computes the reduced-basis data; called by validate()

    bool finalized() const { return unit_pivot >= 0; }

private:
    mutable std::map<std::pair<int, int>, SparseVec> rmult_;
    static const SparseVec zero_vec_;
};

struct Element {
    const AlgebraSpec* alg = nullptr;
    SparseVec coords;
};

Element multiply(const Element& a, const Element& b);

struct ValidationIssue {
    std::string kind;     // "associativity", "unit", "grading", "parse"
    std::string witness;  // e.g. the violating triple
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    long triples_checked = 0;
    bool ok() const { return issues.empty(); }
};

// Confirms associativity and unitality on all basis triples/elements within
// the stated degree bound, and that structure constants respect the grading.
// Also finalizes the reduced-basis data on success.
ValidationReport validate(AlgebraSpec& spec);

// builtin(name, params):
//   dual_numbers | matrix(n) | truncated_poly(vars, max_total_degree) |
//   graded_poly(vars, degree_bound) | group_algebra_Z2
AlgebraSpec builtin(const std::string& name, const std::vector<int>& params = {});

// Parses "matrix(2)"-style builtin descriptors.
AlgebraSpec builtin_from_string(const std::string& descriptor);

// Text file format: header with basis labels and optional degrees, unit
// vector, then structure-constant triples "i j k num/den" one per line;
// '#' starts a comment.  write_algebra ∘ parse_algebra is the identity on
// canonical files.
AlgebraSpec parse_algebra(std::istream& in);
void write_algebra(const AlgebraSpec& spec, std::ostream& out);

}  // namespace hochcalc
