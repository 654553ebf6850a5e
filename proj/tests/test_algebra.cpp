#include <doctest.h>

#include "fixtures.hpp"
#include "hoch/algebra.hpp"

using namespace hoch;

TEST_CASE("corpus algebras validate") {
    for (const auto& name : fixtures::corpus_names()) {
        auto af = fixtures::load(name);
        auto rep = validate_algebra(af.algebra);
        INFO(name, "\n", rep.text());
        CHECK(rep.all_passed());
        auto mrep = validate_bimodule(af.algebra, as_bimodule(af.algebra));
        CHECK(mrep.all_passed());
        REQUIRE(af.frobenius.has_value());
        auto frep = validate_frobenius(af.algebra, *af.frobenius);
        INFO(name, " frobenius\n", frep.text());
        CHECK(frep.all_passed());
    }
}

TEST_CASE("fixture algebras validate") {
    for (auto a : {fixtures::acyclic_dga(), fixtures::noncommutative_dga(), fixtures::even_poly3()}) {
        auto rep = validate_algebra(a);
        INFO(rep.text());
        CHECK(rep.all_passed());
        CHECK(validate_bimodule(a, as_bimodule(a)).all_passed());
    }
}

TEST_CASE("broken multiplication is caught with a witness") {
    auto af = fixtures::load("dual_numbers");
    // x*x = 1 breaks the augmentation (eps(x^2)=1 but eps(x)^2=0)
    af.algebra.mult[1][1] = SparseVec::unit(0, Scalar::one(af.algebra.field));
    auto rep = validate_algebra(af.algebra);
    CHECK(!rep.all_passed());
    bool aug_failed = false;
    for (const auto& c : rep.checks)
        if (c.name == "augmentation" && !c.pass) aug_failed = c.witness == "(x,x)";
    CHECK(aug_failed);
}

TEST_CASE("dual bimodule validates and dualize twice recovers A") {
    for (const auto& name : fixtures::corpus_names()) {
        auto af = fixtures::load(name);
        const auto& a = af.algebra;
        auto dual = dualize(a);
        auto rep = validate_bimodule(a, dual);
        INFO(name, "\n", rep.text());
        CHECK(rep.all_passed());
        for (int i = 0; i < a.dim(); ++i) CHECK(dual.degree[i] == -a.degree[i]);
    }
    auto acy = fixtures::acyclic_dga();
    CHECK(validate_bimodule(acy, dualize(acy)).all_passed());
    auto nc = fixtures::noncommutative_dga();
    CHECK(validate_bimodule(nc, dualize(nc)).all_passed());
}

TEST_CASE("dual numbers dual action example") {
    auto af = fixtures::load("dual_numbers");
    const auto& a = af.algebra;
    auto dual = dualize(a);
    // x . x^vee = 1^vee
    auto got = dual.lact(SparseVec::unit(1, Scalar::one(a.field)), SparseVec::unit(1, Scalar::one(a.field)));
    CHECK(got == SparseVec::unit(0, Scalar::one(a.field)));
}

TEST_CASE("pairing from counit") {
    auto af = fixtures::load("dual_numbers");
    auto p = pairing_from_counit(af.algebra, *af.frobenius);
    Field q = af.algebra.field;
    CHECK(p.at(0, 1) == Scalar::one(q));
    CHECK(p.at(1, 0) == Scalar::one(q));
    CHECK(p.at(0, 0).is_zero());
    CHECK(p.at(1, 1).is_zero());

    auto ext = fixtures::load("ext1");
    auto pe = pairing_from_counit(ext.algebra, *ext.frobenius);
    CHECK(pe.at(0, 1) == Scalar::one(q));
    CHECK(pe.at(0, 0).is_zero());

    auto bad = *af.frobenius;
    bad.counit = std::vector<Scalar>(2, Scalar::zero(q));
    CHECK_THROWS_AS(pairing_from_counit(af.algebra, bad), DegeneratePairing);
}

TEST_CASE("pairing from counit is invariant and nondegenerate on the closed corpus") {
    for (const auto& name : fixtures::corpus_names()) {
        auto af = fixtures::load(name);
        if (!af.frobenius || !af.frobenius->counit) continue;
        auto p = pairing_from_counit(af.algebra, *af.frobenius);
        auto fd = *af.frobenius;
        fd.pairing = p;
        auto rep = validate_frobenius(af.algebra, fd);
        INFO(name, "\n", rep.text());
        CHECK(rep.all_passed());
    }
}

TEST_CASE("broken frobenius coproduct caught") {
    auto af = fixtures::load("dual_numbers");
    auto fd = *af.frobenius;
    // delta(x) = 1 (x) 1 breaks the bimodule identity at (x,x)
    fd.cop[1] = {{{0, 0}, Scalar::one(af.algebra.field)}};
    fd.counit.reset();
    auto rep = validate_frobenius(af.algebra, fd);
    CHECK(!rep.all_passed());
}
