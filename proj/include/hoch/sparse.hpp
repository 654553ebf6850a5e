#pragma once

#include <vector>
#include <utility>
#include "hoch/field.hpp"

namespace hoch {

// Sorted-by-index sparse vector; never stores zero entries.
class SparseVec {
public:
    using Entry = std::pair<int, Scalar>;

    SparseVec() = default;

    const std::vector<Entry>& entries() const { return e_; }
    bool empty() const { return e_.empty(); }
    std::size_t nnz() const { return e_.size(); }

    Scalar get(int i, const Field& f) const;
    void set(int i, const Scalar& v);          // overwrites; drops zeros
    void add(int i, const Scalar& v);          // accumulate
    int leading_index() const;                 // smallest index, -1 if empty

    SparseVec scaled(const Scalar& c) const;
    // this += c * other
    void axpy(const Scalar& c, const SparseVec& other);

    bool operator==(const SparseVec& o) const;

    static SparseVec unit(int i, const Scalar& one);

private:
    std::vector<Entry> e_;
};

// Column-major sparse matrix over the active field.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols, Field f) : rows_(rows), cols_(cols), f_(f), col_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return f_; }

    const SparseVec& col(int j) const { return col_.at(j); }
    SparseVec& col(int j) { return col_.at(j); }
    Scalar at(int i, int j) const { return col_.at(j).get(i, f_); }
    void set(int i, int j, const Scalar& v);
    void add(int i, int j, const Scalar& v);

    SparseVec apply(const SparseVec& v) const;          // M * v
    SparseMatrix multiply(const SparseMatrix& o) const; // M * o
    SparseMatrix transpose() const;
    bool is_zero() const;

    static SparseMatrix identity(int n, const Field& f);
    static SparseMatrix zero(int rows, int cols, const Field& f) { return SparseMatrix(rows, cols, f); }
    static SparseMatrix from_columns(int rows, const std::vector<SparseVec>& cols, const Field& f);

    bool operator==(const SparseMatrix& o) const;

private:
    int rows_ = 0, cols_ = 0;
    Field f_;
    std::vector<SparseVec> col_;
};

}  // namespace hoch
