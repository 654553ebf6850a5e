#pragma once

#include <optional>
#include <stdexcept>
#include <vector>
#include "hoch/sparse.hpp"

namespace hoch {

struct CompositionNotZero : std::runtime_error {
    int witness_col;
    explicit CompositionNotZero(int col)
        : std::runtime_error("d_out * d_in != 0 at column " + std::to_string(col)), witness_col(col) {}
};

struct NotAChainMapOnClasses : std::runtime_error {
    explicit NotAChainMapOnClasses(const std::string& what) : std::runtime_error(what) {}
};

struct RrefResult {
    int rank = 0;
    std::vector<int> pivot_cols;
    SparseMatrix reduced;  // row-reduced echelon form
};

RrefResult rank_and_rref(const SparseMatrix& m);

// Basis of {v : Mv = 0}. Deterministic: one vector per free column in
// ascending index order, free coordinate set to 1.
std::vector<SparseVec> kernel_basis(const SparseMatrix& m);

// Incremental exact solver over a generating set of columns.
// Tracks recipes so that solve() returns coordinates in the original columns.
class ColumnSolver {
public:
    explicit ColumnSolver(const Field& f) : f_(f) {}

    // Returns true if the column enlarged the span.
    bool insert(const SparseVec& v);
    bool in_span(const SparseVec& v) const;
    // Coordinates c with sum_i c_i * col_i = v, or nullopt if v is outside the span.
    std::optional<std::vector<Scalar>> solve(const SparseVec& v) const;
    int rank() const { return static_cast<int>(rows_.size()); }
    int inserted() const { return ncols_; }

private:
    struct Row {
        SparseVec vec;     // echelonized vector
        SparseVec recipe;  // combination of inserted columns producing vec
    };
    Field f_;
    int ncols_ = 0;
    std::vector<Row> rows_;  // sorted by leading index

    // reduce v against rows_, accumulating the recipe; returns residual
    SparseVec reduce(const SparseVec& v, SparseVec* recipe) const;
};

// Exact solution of M x = v (deterministic: echelon elimination in column order).
std::optional<SparseVec> solve(const SparseMatrix& m, const SparseVec& v);

// ker(d_out)/im(d_in) with chosen representatives.
class Subquotient {
public:
    int ambient_dim = 0;
    std::vector<SparseVec> cycle_basis;
    std::vector<SparseVec> boundary_basis;
    std::vector<SparseVec> class_reps;
    int dim = 0;

    Field field;

    bool is_cycle(const SparseVec& v) const;
    bool is_boundary(const SparseVec& v) const;
    // Class coordinates of a cycle in the class_reps basis; nullopt if v is not a cycle.
    std::optional<std::vector<Scalar>> express(const SparseVec& v) const;

    friend Subquotient homology(const SparseMatrix& d_in, const SparseMatrix& d_out);

private:
    // boundaries first, then class_reps; membership tests reuse it
    ColumnSolver solver_{Field::rationals()};
    ColumnSolver cycle_solver_{Field::rationals()};
};

// Pre: d_out * d_in == 0 (checked; throws CompositionNotZero with a witness column).
Subquotient homology(const SparseMatrix& d_in, const SparseMatrix& d_out);

// Matrix of the map induced by f on class representatives.
// Pre: f maps cycles to cycles and boundaries to boundaries (checked).
SparseMatrix induced_map(const SparseMatrix& f, const Subquotient& dom, const Subquotient& cod);

// Exact inverse of a square matrix; throws std::domain_error if singular.
SparseMatrix inverse(const SparseMatrix& m);

}  // namespace hoch
