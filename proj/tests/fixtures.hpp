#pragma once

#include <string>
#include "hoch/jsonio.hpp"

namespace fixtures {

inline hoch::AlgebraFile load(const std::string& name) {
    return hoch::load_algebra_file(std::string(DATA_DIR) + "/" + name + ".json");
}

inline std::vector<std::string> corpus_names() {
    return {"k", "dual_numbers", "poly3", "ext1", "ext2", "f2z2", "f3z3"};
}

inline std::vector<std::string> ungraded_corpus_names() {
    return {"k", "dual_numbers", "poly3", "f2z2", "f3z3"};
}

// graded algebra with nonzero differential: 1, x(1), y(2), w(3), d(x)=y
inline hoch::DgAlgebra acyclic_dga() {
    using namespace hoch;
    DgAlgebra a;
    a.field = Field::rationals();
    a.names = {"1", "x", "y", "w"};
    a.degree = {0, 1, 2, 3};
    a.unit = 0;
    const Scalar one = Scalar::one(a.field);
    a.mult.assign(4, std::vector<SparseVec>(4));
    for (int i = 0; i < 4; ++i) {
        a.mult[0][i] = SparseVec::unit(i, one);
        a.mult[i][0] = SparseVec::unit(i, one);
    }
    a.mult[1][2] = SparseVec::unit(3, one);  // x y = w
    a.mult[2][1] = SparseVec::unit(3, one);  // y x = w  (|x||y| even)
    a.diff = SparseMatrix(4, 4, a.field);
    a.diff.set(2, 1, one);  // d x = y
    a.aug.assign(4, Scalar::zero(a.field));
    a.aug[0] = one;
    return a;
}

// noncommutative: 1, e, al with e^2=e, e al = al, al e = 0
inline hoch::DgAlgebra noncommutative_dga() {
    using namespace hoch;
    DgAlgebra a;
    a.field = Field::rationals();
    a.names = {"1", "e", "al"};
    a.degree = {0, 0, 0};
    a.unit = 0;
    const Scalar one = Scalar::one(a.field);
    a.mult.assign(3, std::vector<SparseVec>(3));
    for (int i = 0; i < 3; ++i) {
        a.mult[0][i] = SparseVec::unit(i, one);
        a.mult[i][0] = SparseVec::unit(i, one);
    }
    a.mult[1][1] = SparseVec::unit(1, one);
    a.mult[1][2] = SparseVec::unit(2, one);
    // al e = 0, al al = 0 stay empty
    a.diff = SparseMatrix(3, 3, a.field);
    a.aug.assign(3, Scalar::zero(a.field));
    a.aug[0] = one;
    return a;
}

// k[y]/y^3 with |y| = 2: even-degree letters exercise suspension parities
inline hoch::DgAlgebra even_poly3() {
    using namespace hoch;
    DgAlgebra a;
    a.field = Field::rationals();
    a.names = {"1", "y", "y2"};
    a.degree = {0, 2, 4};
    a.unit = 0;
    const Scalar one = Scalar::one(a.field);
    a.mult.assign(3, std::vector<SparseVec>(3));
    for (int i = 0; i < 3; ++i) {
        a.mult[0][i] = SparseVec::unit(i, one);
        a.mult[i][0] = SparseVec::unit(i, one);
    }
    a.mult[1][1] = SparseVec::unit(2, one);
    a.diff = SparseMatrix(3, 3, a.field);
    a.aug.assign(3, Scalar::zero(a.field));
    a.aug[0] = one;
    return a;
}

}  // namespace fixtures
