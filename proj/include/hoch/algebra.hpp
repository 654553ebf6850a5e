#pragma once

#include <optional>
#include <string>
#include <vector>
#include "hoch/linalg.hpp"
#include "hoch/report.hpp"

namespace hoch {

inline int par(int n) { return n & 1; }                 // parity
inline int ksign(int e) { return (e & 1) ? -1 : 1; }    // (-1)^e

// Finite-dimensional graded DG algebra by structure constants.
// Cohomological grading: deg d = +1. The augmentation must be basis-aligned:
// eps(e_i) = 0 for every non-unit basis element, so Abar is spanned by the
// non-unit part of the basis and normalized bar words are words in those.
struct DgAlgebra {
    Field field;
    std::vector<std::string> names;
    std::vector<int> degree;
    int unit = 0;
    std::vector<std::vector<SparseVec>> mult;  // mult[i][j] = e_i * e_j
    SparseMatrix diff;                         // column j = d(e_j)
    std::vector<Scalar> aug;

    int dim() const { return static_cast<int>(names.size()); }
    const SparseVec& mul(int i, int j) const { return mult[i][j]; }
    SparseVec mul(const SparseVec& a, const SparseVec& b) const;
    SparseVec d(const SparseVec& v) const { return diff.apply(v); }
    Scalar eps(const SparseVec& v) const;
    int index_of(const std::string& name) const;

    // projection to Abar = ker(eps); with a basis-aligned augmentation this
    // just drops the unit coordinate
    SparseVec abar(SparseVec v) const {
        v.set(unit, Scalar::zero(field));
        return v;
    }
};

// Differential graded (A,d)-bimodule given on a finite basis.
struct Bimodule {
    Field field;
    std::vector<std::string> names;
    std::vector<int> degree;
    std::vector<std::vector<SparseVec>> left;   // left[a][m]  = e_a . m_m
    std::vector<std::vector<SparseVec>> right;  // right[m][a] = m_m . e_a
    SparseMatrix diff;

    int dim() const { return static_cast<int>(names.size()); }
    SparseVec lact(const SparseVec& a, const SparseVec& m) const;
    SparseVec ract(const SparseVec& m, const SparseVec& a) const;
    SparseVec d(const SparseVec& v) const { return diff.apply(v); }
};

// Coproduct data for a (DG open) Frobenius structure of the given degree.
struct FrobeniusData {
    int degree = 0;  // measured: |delta(a)| - |a|
    // cop[i] = list of ((j,k),c) with delta(e_i) = sum c e_j (x) e_k
    std::vector<std::vector<std::pair<std::pair<int, int>, Scalar>>> cop;
    std::optional<std::vector<Scalar>> counit;
    std::optional<SparseMatrix> pairing;
};

struct DegeneratePairing : std::runtime_error {
    SparseVec radical_witness;
    DegeneratePairing(const std::string& w, SparseVec rad)
        : std::runtime_error("degenerate pairing: " + w), radical_witness(std::move(rad)) {}
};

Report validate_algebra(const DgAlgebra& a);
Report validate_bimodule(const DgAlgebra& a, const Bimodule& m);
Report validate_frobenius(const DgAlgebra& a, const FrobeniusData& f);

// A as a bimodule over itself.
Bimodule as_bimodule(const DgAlgebra& a);

// A^vee with dual basis, negated degrees, Koszul-signed actions
// (a.phi.b)(x) = (-1)^{|a|(|phi|+|x|)} phi(b x a) and differential the signed
// transpose (d phi)(x) = -(-1)^{|phi|} phi(d x).
Bimodule dualize(const DgAlgebra& a);

// <x,y> := eta(x y); verifies the hint identity x = sum 1' <x,1''> and
// nondegeneracy. Throws DegeneratePairing with a radical witness.
SparseMatrix pairing_from_counit(const DgAlgebra& a, const FrobeniusData& f);

}  // namespace hoch
