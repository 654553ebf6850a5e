#include "hoch/linalg.hpp"

#include <algorithm>
#include <map>

namespace hoch {

// Row-sparse Gaussian elimination. Pivot = first nonzero in column order,
// rows normalized and back-substituted (Gauss-Jordan), so the result is the
// row-reduced echelon form and fully deterministic.
RrefResult rank_and_rref(const SparseMatrix& m) {
    const Field f = m.field();
    std::vector<SparseVec> rows(m.rows());
    for (int j = 0; j < m.cols(); ++j)
        for (const auto& [i, v] : m.col(j).entries()) rows[i].set(j, v);

    std::vector<SparseVec> done;  // echelon rows, in pivot-column order
    std::vector<int> pivots;
    std::vector<bool> used(rows.size(), false);

    for (int j = 0; j < m.cols(); ++j) {
        int pr = -1;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!used[i] && rows[i].leading_index() == j) { pr = static_cast<int>(i); break; }
        }
        if (pr < 0) continue;
        used[pr] = true;
        SparseVec piv = rows[pr].scaled(rows[pr].get(j, f).inverse());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (used[i]) continue;
            Scalar c = rows[i].get(j, f);
            if (!c.is_zero()) rows[i].axpy(-c, piv);
        }
        for (auto& d : done) {
            Scalar c = d.get(j, f);
            if (!c.is_zero()) d.axpy(-c, piv);
        }
        done.push_back(std::move(piv));
        pivots.push_back(j);
    }

    RrefResult out;
    out.rank = static_cast<int>(pivots.size());
    out.pivot_cols = pivots;
    out.reduced = SparseMatrix(m.rows(), m.cols(), f);
    for (std::size_t r = 0; r < done.size(); ++r)
        for (const auto& [j, v] : done[r].entries()) out.reduced.set(static_cast<int>(r), j, v);
    return out;
}

std::vector<SparseVec> kernel_basis(const SparseMatrix& m) {
    const Field f = m.field();
    RrefResult r = rank_and_rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int j : r.pivot_cols) is_pivot[j] = true;

    std::vector<SparseVec> basis;
    for (int j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        SparseVec v;
        v.set(j, Scalar::one(f));
        // pivot row i has leading entry at pivot_cols[i]
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
            Scalar c = r.reduced.at(static_cast<int>(i), j);
            if (!c.is_zero()) v.set(r.pivot_cols[i], -c);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

SparseVec ColumnSolver::reduce(const SparseVec& v, SparseVec* recipe) const {
    SparseVec cur = v;
    while (!cur.empty()) {
        int lead = cur.leading_index();
        auto it = std::lower_bound(rows_.begin(), rows_.end(), lead,
                                   [](const Row& r, int l) { return r.vec.leading_index() < l; });
        if (it == rows_.end() || it->vec.leading_index() != lead) break;
        Scalar c = cur.get(lead, f_) / it->vec.get(lead, f_);
        cur.axpy(-c, it->vec);
        if (recipe) recipe->axpy(c, it->recipe);
    }
    return cur;
}

bool ColumnSolver::insert(const SparseVec& v) {
    int my_index = ncols_++;
    SparseVec recipe = SparseVec::unit(my_index, Scalar::one(f_));
    SparseVec residual = reduce(v, &recipe);
    if (residual.empty()) return false;
    // recipe currently satisfies: v - residual = combo(prev cols); we need
    // residual = v - combo, i.e. recipe with flipped previous coefficients.
    SparseVec fixed;
    for (const auto& [i, c] : recipe.entries()) fixed.set(i, i == my_index ? c : -c);
    Row row{std::move(residual), std::move(fixed)};
    auto it = std::lower_bound(rows_.begin(), rows_.end(), row.vec.leading_index(),
                               [](const Row& r, int l) { return r.vec.leading_index() < l; });
    rows_.insert(it, std::move(row));
    return true;
}

bool ColumnSolver::in_span(const SparseVec& v) const { return reduce(v, nullptr).empty(); }

std::optional<std::vector<Scalar>> ColumnSolver::solve(const SparseVec& v) const {
    SparseVec recipe;
    SparseVec residual = reduce(v, &recipe);
    if (!residual.empty()) return std::nullopt;
    std::vector<Scalar> out(ncols_, Scalar::zero(f_));
    for (const auto& [i, c] : recipe.entries()) out[i] = c;
    return out;
}

std::optional<SparseVec> solve(const SparseMatrix& m, const SparseVec& v) {
    ColumnSolver cs(m.field());
    for (int j = 0; j < m.cols(); ++j) cs.insert(m.col(j));
    auto coords = cs.solve(v);
    if (!coords) return std::nullopt;
    SparseVec x;
    for (std::size_t j = 0; j < coords->size(); ++j)
        if (!(*coords)[j].is_zero()) x.set(static_cast<int>(j), (*coords)[j]);
    return x;
}

bool Subquotient::is_cycle(const SparseVec& v) const { return cycle_solver_.in_span(v); }

bool Subquotient::is_boundary(const SparseVec& v) const {
    auto coords = solver_.solve(v);
    if (!coords) return false;
    for (std::size_t i = boundary_basis.size(); i < coords->size(); ++i)
        if (!(*coords)[i].is_zero()) return false;
    return true;
}

std::optional<std::vector<Scalar>> Subquotient::express(const SparseVec& v) const {
    auto coords = solver_.solve(v);
    if (!coords) return std::nullopt;
    std::vector<Scalar> cls(coords->begin() + static_cast<long>(boundary_basis.size()), coords->end());
    return cls;
}

Subquotient homology(const SparseMatrix& d_in, const SparseMatrix& d_out) {
    if (d_in.cols() > 0 && d_out.rows() > 0) {
        for (int j = 0; j < d_in.cols(); ++j) {
            if (!d_out.apply(d_in.col(j)).empty()) throw CompositionNotZero(j);
        }
    }
    const Field f = d_out.field();
    Subquotient sq;
    sq.field = f;
    sq.ambient_dim = d_out.cols();
    sq.cycle_basis = kernel_basis(d_out);
    sq.solver_ = ColumnSolver(f);
    sq.cycle_solver_ = ColumnSolver(f);
    for (const auto& v : sq.cycle_basis) sq.cycle_solver_.insert(v);

    for (int j = 0; j < d_in.cols(); ++j) {
        const SparseVec& b = d_in.col(j);
        if (b.empty()) continue;
        if (sq.solver_.insert(b)) sq.boundary_basis.push_back(b);
    }
    // class representatives: kernel-basis vectors surviving boundary reduction
    // (note: solver_ counts every probe, so rebuild it with reps only)
    ColumnSolver probe = sq.solver_;
    std::vector<SparseVec> reps;
    for (const auto& k : sq.cycle_basis)
        if (probe.insert(k)) reps.push_back(k);

    sq.solver_ = ColumnSolver(f);
    for (const auto& b : sq.boundary_basis) sq.solver_.insert(b);
    for (const auto& r : reps) sq.solver_.insert(r);
    sq.class_reps = std::move(reps);
    sq.dim = static_cast<int>(sq.class_reps.size());
    return sq;
}

SparseMatrix induced_map(const SparseMatrix& f, const Subquotient& dom, const Subquotient& cod) {
    for (const auto& b : dom.boundary_basis) {
        if (!cod.is_boundary(f.apply(b)))
            throw NotAChainMapOnClasses("image of a boundary is not a boundary");
    }
    SparseMatrix out(cod.dim, dom.dim, f.field());
    for (int j = 0; j < dom.dim; ++j) {
        SparseVec w = f.apply(dom.class_reps[j]);
        auto coords = cod.express(w);
        if (!coords) throw NotAChainMapOnClasses("image of a cycle is not a cycle");
        for (std::size_t i = 0; i < coords->size(); ++i) out.set(static_cast<int>(i), j, (*coords)[i]);
    }
    return out;
}

SparseMatrix inverse(const SparseMatrix& m) {
    if (m.rows() != m.cols()) throw std::domain_error("inverse: not square");
    const int n = m.rows();
    ColumnSolver cs(m.field());
    for (int j = 0; j < n; ++j) cs.insert(m.col(j));
    SparseMatrix inv(n, n, m.field());
    for (int i = 0; i < n; ++i) {
        auto coords = cs.solve(SparseVec::unit(i, Scalar::one(m.field())));
        if (!coords) throw std::domain_error("inverse: singular matrix");
        for (int j = 0; j < n; ++j)
            if (!(*coords)[j].is_zero()) inv.set(j, i, (*coords)[j]);
    }
    return inv;
}

}  // namespace hoch
