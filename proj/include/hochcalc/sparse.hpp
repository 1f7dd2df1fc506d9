#pragma once

#include <map>
#include <vector>

#include "hochcalc/rational.hpp"

namespace hochcalc {

// Sparse vector over Rational; zero entries are never stored.
class SparseVec {
public:
    SparseVec() = default;

    const std::map<int, Rational>& entries() const { return e_; }
    bool is_zero() const { return e_.empty(); }
    Rational at(int i) const {
        auto it = e_.find(i);
        return it == e_.end() ? Rational() : it->second;
    }
    void set(int i, const Rational& v) {
        if (v.is_zero())
            e_.erase(i);
        else
            e_[i] = v;
    }
    void add(int i, const Rational& v) {
        if (v.is_zero()) return;
        auto [it, fresh] = e_.emplace(i, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) e_.erase(it);
        }
    }
    void axpy(const Rational& c, const SparseVec& o) {
        if (c.is_zero()) return;
        for (const auto& [i, v] : o.e_) add(i, c * v);
    }
    SparseVec scaled(const Rational& c) const {
        SparseVec r;
        if (c.is_zero()) return r;
        for (const auto& [i, v] : e_) r.e_.emplace(i, c * v);
        return r;
    }
    friend SparseVec operator+(const SparseVec& a, const SparseVec& b) {
        SparseVec r = a;
        r.axpy(Rational(1), b);
        return r;
    }
    friend SparseVec operator-(const SparseVec& a, const SparseVec& b) {
        SparseVec r = a;
        r.axpy(Rational(-1), b);
        return r;
    }
    friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.e_ == b.e_; }
    friend bool operator<(const SparseVec& a, const SparseVec& b) { return a.e_ < b.e_; }

    static SparseVec unit(int i) {
        SparseVec r;
        r.e_.emplace(i, Rational(1));
        return r;
    }

private:
    std::map<int, Rational> e_;
};

// Sparse matrix, entries (row, col) -> Rational, zeros absent.
class SparseMatrix {
public:
    SparseMatrix() : rows_(0), cols_(0) {}
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw input_error("negative matrix dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, const Rational& v) {
        check(r, c);
        if (v.is_zero())
            e_.erase({r, c});
        else
            e_[{r, c}] = v;
    }
    void add(int r, int c, const Rational& v) {
        check(r, c);
        if (v.is_zero()) return;
        auto key = std::make_pair(r, c);
        auto [it, fresh] = e_.emplace(key, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) e_.erase(it);
        }
    }
    Rational at(int r, int c) const {
        auto it = e_.find({r, c});
        return it == e_.end() ? Rational() : it->second;
    }
    const std::map<std::pair<int, int>, Rational>& entries() const { return e_; }

    // append a column given as a sparse vector over row indices
    void set_col(int c, const SparseVec& v) {
        for (const auto& [r, x] : v.entries()) set(r, c, x);
    }

    SparseVec apply(const SparseVec& x) const;  // m·x
    SparseMatrix transposed() const;
    SparseMatrix times(const SparseMatrix& o) const;

    std::vector<std::map<int, Rational>> row_lists() const;

private:
    void check(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw input_error("matrix index out of bounds");
    }
    int rows_, cols_;
    std::map<std::pair<int, int>, Rational> e_;
};

}  // namespace hochcalc
