#include <doctest.h>

#include <random>
#include "fixtures.hpp"
#include "hoch/complex.hpp"

using namespace hoch;

namespace {

Chain word(int module, std::initializer_list<int> letters, const Field& f) {
    Chain c;
    BarWord w;
    w.module = module;
    w.letters = letters;
    c.add(w, Scalar::one(f));
    return c;
}

// seeded random chain supported on words up to the given weight
Chain random_chain(const HochschildCtx& ctx, int max_weight, std::mt19937& rng) {
    Chain c;
    for (int w = 0; w <= max_weight; ++w) {
        auto words = words_of_weight(ctx, w);
        for (const auto& bw : words)
            if (rng() % 3 == 0) c.add(bw, Scalar::from_int(ctx.A.field, static_cast<long>(rng() % 5) - 2));
    }
    return c;
}

Cochain random_cochain(const HochschildCtx& ctx, int max_arity, std::mt19937& rng) {
    Cochain c;
    for (int k = 0; k <= max_arity; ++k)
        for (const auto& cw : cowords_of_arity(ctx, k))
            if (rng() % 3 == 0) c.add(cw, Scalar::from_int(ctx.A.field, static_cast<long>(rng() % 5) - 2));
    return c;
}

void check_d_squared_all_words(const DgAlgebra& a, const Bimodule& m, int cutoff) {
    HochschildCtx ctx{a, m};
    for (int w = 0; w <= cutoff; ++w) {
        for (const auto& bw : words_of_weight(ctx, w)) {
            Chain c;
            c.add(bw, Scalar::one(a.field));
            Chain dd = chain_differential(ctx, chain_differential(ctx, c));
            INFO("word ", word_str(a, m, bw));
            CHECK(dd.is_zero());
        }
    }
}

}  // namespace

TEST_CASE("enumerate_words matches spec examples on dual numbers") {
    auto af = fixtures::load("dual_numbers");
    auto b = as_bimodule(af.algebra);
    HochschildCtx ctx{af.algebra, b};
    auto deg0 = enumerate_words(ctx, 0, 3);
    REQUIRE(deg0.size() == 2);  // 1[], x[]
    CHECK(deg0[0].weight() == 0);
    CHECK(deg0[1].weight() == 0);
    auto degm2 = enumerate_words(ctx, -2, 3);
    REQUIRE(degm2.size() == 2);  // 1[x,x], x[x,x] have degree -2
    CHECK(degm2[0].weight() == 2);
}

TEST_CASE("enumerate_words over k is only the empty word") {
    auto af = fixtures::load("k");
    auto b = as_bimodule(af.algebra);
    HochschildCtx ctx{af.algebra, b};
    CHECK(enumerate_words(ctx, 0, 5).size() == 1);
    CHECK(enumerate_words(ctx, -1, 5).empty());
}

TEST_CASE("d^2 = 0 on all corpus algebras, both coefficient modules, cutoff 6") {
    for (const auto& name : fixtures::corpus_names()) {
        auto af = fixtures::load(name);
        INFO("algebra ", name);
        check_d_squared_all_words(af.algebra, as_bimodule(af.algebra), 6);
        check_d_squared_all_words(af.algebra, dualize(af.algebra), 6);
    }
}

TEST_CASE("d^2 = 0 on graded fixtures with nonzero differential") {
    for (auto a : {fixtures::acyclic_dga(), fixtures::noncommutative_dga(), fixtures::even_poly3()}) {
        check_d_squared_all_words(a, as_bimodule(a), 4);
        check_d_squared_all_words(a, dualize(a), 4);
    }
}

TEST_CASE("spec chain differential examples on dual numbers") {
    auto af = fixtures::load("dual_numbers");
    const auto& a = af.algebra;
    auto b = as_bimodule(a);
    HochschildCtx ctx{a, b};
    // D(x[x]) = 0 and D(1[x]) = 0
    CHECK(chain_differential(ctx, word(1, {1}, a.field)).is_zero());
    CHECK(chain_differential(ctx, word(0, {1}, a.field)).is_zero());
}

TEST_CASE("spec chain differential example on k[x]/x^3") {
    auto af = fixtures::load("poly3");
    const auto& a = af.algebra;
    auto b = as_bimodule(a);
    HochschildCtx ctx{a, b};
    // D(1[x,x]) = x[x] - 1[x^2] + x[x] = 2 x[x] - 1[x2]
    Chain d = chain_differential(ctx, word(0, {1, 1}, a.field));
    Chain expect;
    expect.add(BarWord{1, {1}}, Scalar::from_int(a.field, 2));
    expect.add(BarWord{0, {2}}, Scalar::from_int(a.field, -1));
    CHECK(d == expect);
}

TEST_CASE("connes B on dual numbers spec examples") {
    auto af = fixtures::load("dual_numbers");
    const auto& a = af.algebra;
    // B(x[]) = 1[x]
    Chain b1 = connes_B(a, word(1, {}, a.field), 6);
    Chain expect;
    expect.add(BarWord{0, {1}}, Scalar::one(a.field));
    CHECK(b1 == expect);
    // B(1[x]) = 0
    CHECK(connes_B(a, word(0, {1}, a.field), 6).is_zero());
    // cutoff guard
    CHECK_THROWS_AS(connes_B(a, word(1, {1, 1, 1, 1, 1, 1}, a.field), 6), CutoffExceeded);
}

TEST_CASE("B^2 = 0 and DB + BD = 0 on all corpus words up to cutoff 6") {
    for (const auto& name : fixtures::corpus_names()) {
        auto af = fixtures::load(name);
        const auto& a = af.algebra;
        auto b = as_bimodule(a);
        HochschildCtx ctx{a, b};
        for (int w = 0; w <= 6; ++w) {
            for (const auto& bw : words_of_weight(ctx, w)) {
                Chain c;
                c.add(bw, Scalar::one(a.field));
                INFO(name, " word ", word_str(a, b, bw));
                CHECK(connes_B(a, connes_B(a, c, 8), 8).is_zero());
                Chain db = chain_differential(ctx, connes_B(a, c, 8));
                db.add(connes_B(a, chain_differential(ctx, c), 8));
                CHECK(db.is_zero());
            }
        }
    }
}

TEST_CASE("B^2 = 0 and DB + BD = 0 on graded fixtures") {
    for (auto a : {fixtures::acyclic_dga(), fixtures::noncommutative_dga(), fixtures::even_poly3()}) {
        auto b = as_bimodule(a);
        HochschildCtx ctx{a, b};
        std::mt19937 rng(777);
        for (int trial = 0; trial < 5; ++trial) {
            Chain c = random_chain(ctx, 3, rng);
            CHECK(connes_B(a, connes_B(a, c, 8), 8).is_zero());
            Chain db = chain_differential(ctx, connes_B(a, c, 8));
            db.add(connes_B(a, chain_differential(ctx, c), 8));
            CHECK(db.is_zero());
        }
    }
}

TEST_CASE("cochain d^2 = 0 on corpus and graded fixtures") {
    auto check = [](const DgAlgebra& a) {
        for (const Bimodule& m : {as_bimodule(a), dualize(a)}) {
            HochschildCtx ctx{a, m};
            for (int k = 0; k <= 3; ++k)
                for (const auto& cw : cowords_of_arity(ctx, k)) {
                    Cochain c;
                    c.add(cw, Scalar::one(a.field));
                    CHECK(cochain_differential(ctx, cochain_differential(ctx, c)).is_zero());
                }
        }
    };
    for (const auto& name : fixtures::corpus_names()) check(fixtures::load(name).algebra);
    check(fixtures::acyclic_dga());
    check(fixtures::noncommutative_dga());
    check(fixtures::even_poly3());
}

TEST_CASE("cochain differential is adjoint to the chain differential") {
    std::mt19937 rng(4242);
    for (const auto& name : fixtures::corpus_names()) {
        auto af = fixtures::load(name);
        const auto& a = af.algebra;
        auto chain_b = as_bimodule(a);
        auto dual = dualize(a);
        HochschildCtx cctx{a, chain_b};
        HochschildCtx dctx{a, dual};
        for (int trial = 0; trial < 8; ++trial) {
            Chain w = random_chain(cctx, 4, rng);
            Cochain fc = random_cochain(dctx, 5, rng);
            // <Df, w> = (-1)^{|f|} <f, Dw> termwise; restrict to homogeneous f
            for (int k = 0; k <= 5; ++k) {
                Cochain fk;
                for (const auto& [cw, s] : fc.terms)
                    if (cw.arity() == k) fk.add(cw, s);
                if (fk.is_zero()) continue;
                // group by cochain degree so |f| is defined
                std::map<int, Cochain> by_deg;
                for (const auto& [cw, s] : fk.terms) by_deg[coword_degree(a, dual, cw)].add(cw, s);
                for (const auto& [deg, f1] : by_deg) {
                    Scalar lhs = eval_pairing(dctx, cochain_differential(dctx, f1), w);
                    Scalar rhs = eval_pairing(dctx, f1, chain_differential(cctx, w));
                    CHECK(lhs == rhs * Scalar::from_int(a.field, ksign(deg)));
                }
            }
        }
    }
}

TEST_CASE("B^vee is dual to B and squares to zero") {
    std::mt19937 rng(999);
    for (const auto& name : fixtures::corpus_names()) {
        auto af = fixtures::load(name);
        const auto& a = af.algebra;
        auto chain_b = as_bimodule(a);
        auto dual = dualize(a);
        HochschildCtx cctx{a, chain_b};
        HochschildCtx dctx{a, dual};
        for (int trial = 0; trial < 6; ++trial) {
            Chain w = random_chain(cctx, 3, rng);
            Cochain fc = random_cochain(dctx, 4, rng);
            std::map<int, Cochain> by_deg;
            for (const auto& [cw, s] : fc.terms)
                if (cw.arity() >= 1) by_deg[coword_degree(a, dual, cw)].add(cw, s);
            for (const auto& [deg, f1] : by_deg) {
                Scalar lhs = eval_pairing(dctx, connes_B_dual(a, dual, f1, 8), w);
                Scalar rhs = eval_pairing(dctx, f1, connes_B(a, w, 8));
                CHECK(lhs == rhs * Scalar::from_int(a.field, ksign(deg)));
                CHECK(connes_B_dual(a, dual, connes_B_dual(a, dual, f1, 8), 8).is_zero());
            }
        }
    }
}

TEST_CASE("hh_table for k: dim 1 at level 0, zero above") {
    auto af = fixtures::load("k");
    auto b = as_bimodule(af.algebra);
    HochschildCtx ctx{af.algebra, b};
    auto t = hh_table(ctx, 0, 4, 6);
    CHECK(t.entries[0].dim == 1);
    for (std::size_t i = 1; i < t.entries.size(); ++i) CHECK(t.entries[i].dim == 0);
}

// Independent oracle: the 2-periodic bimodule resolution of k[x]/x^2;
// tensoring over A^e gives the complex A <-0- A <-2x- A <-0- ... so
// dims are (2,1,1,1,...) over Q. The same dims must come out of hh_table.
TEST_CASE("dual numbers homology against the periodic resolution oracle") {
    auto af = fixtures::load("dual_numbers");
    const auto& a = af.algebra;
    const Field& q = a.field;

    // oracle: explicit complex C_n = A (dim 2), d_1 = 0, d_2 = 2x, alternating
    std::vector<int> oracle_dims;
    {
        auto mul2x = SparseMatrix(2, 2, q);  // multiplication by 2x in basis {1,x}
        mul2x.set(1, 0, Scalar::from_int(q, 2));
        auto zero = SparseMatrix::zero(2, 2, q);
        for (int n = 0; n <= 5; ++n) {
            // d_{n+1}: C_{n+1} -> C_n and d_n: C_n -> C_{n-1}
            const SparseMatrix& d_in = (n % 2 == 0) ? zero : mul2x;
            const SparseMatrix& d_out = (n == 0) ? SparseMatrix::zero(0, 2, q) : ((n % 2 == 0) ? mul2x : zero);
            oracle_dims.push_back(homology(d_in, d_out).dim);
        }
    }
    REQUIRE(oracle_dims.size() == 6);
    CHECK(oracle_dims[0] == 2);
    for (int n = 1; n <= 5; ++n) CHECK(oracle_dims[n] == 1);

    auto b = as_bimodule(a);
    HochschildCtx ctx{a, b};
    auto t = hh_table(ctx, 0, 5, 6);
    for (int n = 0; n <= 5; ++n) {
        INFO("level ", n);
        CHECK(t.entries[n].dim == oracle_dims[n]);
        CHECK(t.entries[n].stabilized);
    }
}

TEST_CASE("dual numbers cochain homology HH^n(A, A^vee) matches the oracle dims") {
    auto af = fixtures::load("dual_numbers");
    auto dual = dualize(af.algebra);
    HochschildCtx ctx{af.algebra, dual};
    auto t = hh_cotable(ctx, 0, 5, 7);
    CHECK(t.entries[0].dim == 2);
    for (int n = 1; n <= 5; ++n) {
        INFO("level ", n);
        CHECK(t.entries[n].dim == 1);
        CHECK(t.entries[n].stabilized);
    }
}

TEST_CASE("weight and arity graded blocks agree with the tables on ungraded algebras") {
    auto af = fixtures::load("poly3");
    auto b = as_bimodule(af.algebra);
    HochschildCtx ctx{af.algebra, b};
    auto t = hh_table(ctx, 0, 3, 5);
    for (int w = 0; w <= 3; ++w) CHECK(weight_homology(ctx, w).sq.dim == t.entries[w].dim);

    auto dual = dualize(af.algebra);
    HochschildCtx dctx{af.algebra, dual};
    auto ct = hh_cotable(dctx, 0, 3, 5);
    for (int k = 0; k <= 3; ++k) CHECK(arity_cohomology(dctx, k).sq.dim == ct.entries[k].dim);
}
