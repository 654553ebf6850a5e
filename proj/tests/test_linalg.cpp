#include <doctest.h>

#include <random>
#include "hoch/linalg.hpp"

using namespace hoch;

static SparseMatrix mat(const Field& f, int rows, int cols, std::initializer_list<std::initializer_list<long>> rowdata) {
    SparseMatrix m(rows, cols, f);
    int i = 0;
    for (const auto& row : rowdata) {
        int j = 0;
        for (long v : row) {
            if (v != 0) m.set(i, j, Scalar::from_int(f, v));
            ++j;
        }
        ++i;
    }
    return m;
}

TEST_CASE("field basics") {
    Field q = Field::rationals();
    CHECK(Scalar::parse(q, "2/4") == Scalar::parse(q, "1/2"));
    CHECK((Scalar::parse(q, "1/3") + Scalar::parse(q, "1/6")) == Scalar::parse(q, "1/2"));
    CHECK_THROWS_AS(Field::prime(6), std::invalid_argument);
    Field f5 = Field::parse("Fp:5");
    CHECK(Scalar::from_int(f5, 7) == Scalar::from_int(f5, 2));
    CHECK((Scalar::from_int(f5, 2) / Scalar::from_int(f5, 3)) == Scalar::from_int(f5, 4));
    CHECK(Scalar::parse(f5, "1/2") == Scalar::from_int(f5, 3));
}

TEST_CASE("rref on zero and identity") {
    Field q = Field::rationals();
    auto z = SparseMatrix::zero(3, 3, q);
    auto rz = rank_and_rref(z);
    CHECK(rz.rank == 0);
    auto id = SparseMatrix::identity(3, q);
    auto ri = rank_and_rref(id);
    CHECK(ri.rank == 3);
    CHECK(ri.reduced == id);
}

TEST_CASE("rref rank-1 example") {
    Field q = Field::rationals();
    auto m = mat(q, 2, 2, {{1, 2}, {2, 4}});
    auto r = rank_and_rref(m);
    CHECK(r.rank == 1);
    REQUIRE(r.pivot_cols.size() == 1);
    CHECK(r.pivot_cols[0] == 0);
    CHECK(r.reduced.at(0, 0) == Scalar::one(q));
    CHECK(r.reduced.at(0, 1) == Scalar::from_int(q, 2));
}

TEST_CASE("kernel basis") {
    Field q = Field::rationals();
    CHECK(kernel_basis(SparseMatrix::identity(3, q)).empty());
    auto kz = kernel_basis(SparseMatrix::zero(2, 2, q));
    REQUIRE(kz.size() == 2);
    CHECK(kz[0] == SparseVec::unit(0, Scalar::one(q)));
    CHECK(kz[1] == SparseVec::unit(1, Scalar::one(q)));

    auto m = mat(q, 2, 2, {{1, 2}, {2, 4}});
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0].get(0, q) == Scalar::from_int(q, -2));
    CHECK(k[0].get(1, q) == Scalar::one(q));
}

TEST_CASE("rank + kernel = cols on random matrices over Q and F7") {
    std::mt19937 rng(12345);
    for (Field f : {Field::rationals(), Field::prime(7)}) {
        for (int trial = 0; trial < 25; ++trial) {
            int rows = 1 + static_cast<int>(rng() % 6);
            int cols = 1 + static_cast<int>(rng() % 6);
            SparseMatrix m(rows, cols, f);
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j)
                    if (rng() % 3 == 0) m.set(i, j, Scalar::from_int(f, static_cast<long>(rng() % 7) - 3));
            auto r = rank_and_rref(m);
            CHECK(r.rank + static_cast<int>(kernel_basis(m).size()) == cols);
            for (const auto& k : kernel_basis(m)) CHECK(m.apply(k).empty());
        }
    }
}

TEST_CASE("homology of simple complexes") {
    Field q = Field::rationals();
    // 0 -> k^3 -> 0
    auto sq = homology(SparseMatrix::zero(3, 0, q), SparseMatrix::zero(0, 3, q));
    CHECK(sq.dim == 3);
    // d_in = 0, d_out = identity
    auto sq2 = homology(SparseMatrix::zero(3, 0, q), SparseMatrix::identity(3, q));
    CHECK(sq2.dim == 0);
    // Q --(2,4)--> Q^2 --(2,-1)--> Q : dim 2-1-1 = 0
    auto d_in = mat(q, 2, 1, {{2}, {4}});
    auto d_out = mat(q, 1, 2, {{2, -1}});
    auto sq3 = homology(d_in, d_out);
    CHECK(sq3.dim == 0);
}

TEST_CASE("homology rejects nonzero composition") {
    Field q = Field::rationals();
    auto d_in = mat(q, 2, 1, {{1}, {0}});
    auto d_out = mat(q, 1, 2, {{1, 0}});
    CHECK_THROWS_AS(homology(d_in, d_out), CompositionNotZero);
}

TEST_CASE("induced maps") {
    Field q = Field::rationals();
    auto sq = homology(SparseMatrix::zero(3, 0, q), SparseMatrix::zero(0, 3, q));
    auto id3 = SparseMatrix::identity(3, q);
    CHECK(induced_map(id3, sq, sq) == SparseMatrix::identity(3, q));
    CHECK(induced_map(SparseMatrix::zero(3, 3, q), sq, sq).is_zero());

    SparseMatrix twice(3, 3, q);
    for (int i = 0; i < 3; ++i) twice.set(i, i, Scalar::from_int(q, 2));
    auto m = induced_map(twice, sq, sq);
    for (int i = 0; i < 3; ++i) CHECK(m.at(i, i) == Scalar::from_int(q, 2));
}

TEST_CASE("induced map is functorial on a nontrivial subquotient") {
    Field q = Field::rationals();
    // ambient k^3, d_out = 0, boundaries = span{(1,1,0)}
    SparseMatrix d_in(3, 1, q);
    d_in.set(0, 0, Scalar::one(q));
    d_in.set(1, 0, Scalar::one(q));
    auto sq = homology(d_in, SparseMatrix::zero(0, 3, q));
    CHECK(sq.dim == 2);

    // f, g chain maps preserving the boundary line
    auto f = mat(q, 3, 3, {{1, 1, 0}, {1, 1, 0}, {0, 0, 2}});
    auto g = mat(q, 3, 3, {{0, 0, 1}, {0, 0, 1}, {1, -1, 0}});
    auto fg = f.multiply(g);
    CHECK(induced_map(fg, sq, sq) == induced_map(f, sq, sq).multiply(induced_map(g, sq, sq)));
}

TEST_CASE("determinism of homology output") {
    Field q = Field::rationals();
    auto d_in = mat(q, 3, 2, {{1, 0}, {1, 1}, {0, 1}});
    auto run = [&] { return homology(d_in, SparseMatrix::zero(0, 3, q)); };
    auto a = run();
    auto b = run();
    CHECK(a.dim == b.dim);
    REQUIRE(a.class_reps.size() == b.class_reps.size());
    for (std::size_t i = 0; i < a.class_reps.size(); ++i) CHECK(a.class_reps[i] == b.class_reps[i]);
}

TEST_CASE("solve and inverse") {
    Field q = Field::rationals();
    auto m = mat(q, 2, 2, {{1, 2}, {3, 4}});
    auto inv = inverse(m);
    CHECK(m.multiply(inv) == SparseMatrix::identity(2, q));
    SparseVec v;
    v.set(0, Scalar::from_int(q, 5));
    v.set(1, Scalar::from_int(q, 6));
    auto x = solve(m, v);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == v);
    auto none = solve(mat(q, 2, 1, {{1}, {2}}), SparseVec::unit(0, Scalar::one(q)));
    CHECK(!none.has_value());
}
