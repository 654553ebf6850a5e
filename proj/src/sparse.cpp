#include "hoch/sparse.hpp"

#include <algorithm>

namespace hoch {

static bool idx_less(const SparseVec::Entry& a, int i) { return a.first < i; }

Scalar SparseVec::get(int i, const Field& f) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), i, idx_less);
    if (it != e_.end() && it->first == i) return it->second;
    return Scalar::zero(f);
}

void SparseVec::set(int i, const Scalar& v) {
    auto it = std::lower_bound(e_.begin(), e_.end(), i, idx_less);
    if (it != e_.end() && it->first == i) {
        if (v.is_zero()) e_.erase(it);
        else it->second = v;
    } else if (!v.is_zero()) {
        e_.insert(it, {i, v});
    }
}

void SparseVec::add(int i, const Scalar& v) {
    if (v.is_zero()) return;
    auto it = std::lower_bound(e_.begin(), e_.end(), i, idx_less);
    if (it != e_.end() && it->first == i) {
        Scalar s = it->second + v;
        if (s.is_zero()) e_.erase(it);
        else it->second = s;
    } else {
        e_.insert(it, {i, v});
    }
}

int SparseVec::leading_index() const { return e_.empty() ? -1 : e_.front().first; }

SparseVec SparseVec::scaled(const Scalar& c) const {
    SparseVec out;
    if (c.is_zero()) return out;
    out.e_.reserve(e_.size());
    for (const auto& [i, v] : e_) out.e_.emplace_back(i, v * c);
    return out;
}

void SparseVec::axpy(const Scalar& c, const SparseVec& other) {
    if (c.is_zero() || other.e_.empty()) return;
    std::vector<Entry> merged;
    merged.reserve(e_.size() + other.e_.size());
    auto a = e_.begin();
    auto b = other.e_.begin();
    while (a != e_.end() || b != other.e_.end()) {
        if (b == other.e_.end() || (a != e_.end() && a->first < b->first)) {
            merged.push_back(*a++);
        } else if (a == e_.end() || b->first < a->first) {
            merged.emplace_back(b->first, b->second * c);
            ++b;
        } else {
            Scalar s = a->second + b->second * c;
            if (!s.is_zero()) merged.emplace_back(a->first, s);
            ++a;
            ++b;
        }
    }
    e_ = std::move(merged);
}

bool SparseVec::operator==(const SparseVec& o) const { return e_ == o.e_; }

SparseVec SparseVec::unit(int i, const Scalar& one) {
    SparseVec v;
    v.e_.emplace_back(i, one);
    return v;
}

void SparseMatrix::set(int i, int j, const Scalar& v) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("SparseMatrix::set");
    col_[j].set(i, v);
}

void SparseMatrix::add(int i, int j, const Scalar& v) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("SparseMatrix::add");
    col_[j].add(i, v);
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
    SparseVec out;
    for (const auto& [j, c] : v.entries()) out.axpy(c, col_.at(j));
    return out;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& o) const {
    if (cols_ != o.rows_) throw std::logic_error("SparseMatrix::multiply: shape mismatch");
    SparseMatrix out(rows_, o.cols_, f_);
    for (int j = 0; j < o.cols_; ++j) out.col_[j] = apply(o.col(j));
    return out;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix out(cols_, rows_, f_);
    for (int j = 0; j < cols_; ++j)
        for (const auto& [i, v] : col_[j].entries()) out.col_[i].add(j, v);
    return out;
}

bool SparseMatrix::is_zero() const {
    for (const auto& c : col_)
        if (!c.empty()) return false;
    return true;
}

SparseMatrix SparseMatrix::identity(int n, const Field& f) {
    SparseMatrix m(n, n, f);
    for (int i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
    return m;
}

SparseMatrix SparseMatrix::from_columns(int rows, const std::vector<SparseVec>& cols, const Field& f) {
    SparseMatrix m(rows, static_cast<int>(cols.size()), f);
    for (std::size_t j = 0; j < cols.size(); ++j) m.col(static_cast<int>(j)) = cols[j];
    return m;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && f_ == o.f_ && col_ == o.col_;
}

}  // namespace hoch
