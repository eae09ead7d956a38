#include "doctest.h"

#include "dgh/comodules.hpp"
#include "dgh/errors.hpp"
#include "support.hpp"

using namespace dgh;
using namespace dgh::test;

namespace {

bool fails_at(const Report& r, const std::string& name_part, const std::string& witness) {
    for (auto& c : r.failures())
        if (c.name.find(name_part) != std::string::npos && c.witness == witness) return true;
    return false;
}

}  // namespace

TEST_CASE("standard comodules satisfy the axioms") {
    HopfData L = exterior_hopf("L", {{"x", 1}});
    HopfData L2 = exterior_hopf("L2", {{"x", 1}, {"y", 1}});
    CochainComplex Z = small_complex(), W = line_complex("W", 2);
    for (const HopfData* B : {&L, &L2}) {
        for (auto kind : {ComoduleKind::trivial, ComoduleKind::regular, ComoduleKind::star})
            CHECK(verify_comodule(standard_comodule(kind, *B), *B).ok());
        for (const CochainComplex* M : {&Z, &W})
            for (auto kind : {ComoduleKind::cofree, ComoduleKind::point})
                CHECK(verify_comodule(standard_comodule(kind, *B, *M), *B).ok());
    }
    CHECK_THROWS_AS(standard_comodule(ComoduleKind::cofree, L), DimensionError);
    CHECK_THROWS_AS(star_comodule(exterior_hopf("L", {{"x", 1}}, false)), NotHopf);
}

TEST_CASE("coaction values") {
    HopfData L = exterior_hopf("L", {{"x", 1}});
    Comodule star = star_comodule(L);
    Space LL = tensor(L.space, L.space);
    CHECK(star.gamma.col(ix(L.space, {"x"})) ==
          add(unit_vec(LL, {"x", "1"}), unit_vec(LL, {"1", "x"}), -1));

    // cofree over k is the regular comodule after the unit isomorphism
    CochainComplex k{Space::ground(), zero_differential(Space::ground())};
    Comodule cof = cofree_comodule(k, L);
    CHECK(chain(tmap(left_unitor(L.space), id(L.space)), cof.gamma, left_unitor_inv(L.space)) == L.delta);

    Comodule bad = regular_comodule(L);
    bad.gamma = GradedMap(L.space, LL, 0);
    put(bad.gamma, {"1"}, {"1", "1"});
    put(bad.gamma, {"x"}, {"x", "1"}, -1);
    put(bad.gamma, {"x"}, {"1", "x"});
    CHECK(fails_at(verify_comodule(bad, L), "(I⊗ε)∘γ", "x"));
}

TEST_CASE("tensor products of comodules") {
    HopfData L = exterior_hopf("L", {{"x", 1}});
    Comodule R = regular_comodule(L), T = trivial_comodule(L);
    Comodule RR = tensor_comodule(R, R, L);
    CHECK(verify_comodule(RR, L).ok());
    CHECK(verify_comodule_morphism(L.m, RR, R, L));
    CHECK(verify_comodule_morphism(right_unitor(R.space), tensor_comodule(R, T, L), R, L));
    CHECK(verify_comodule_morphism(left_unitor(R.space), tensor_comodule(T, R, L), R, L));
    CHECK(verify_comodule_morphism(braiding(R.space, R.space), RR, RR, L));

    // associativity: both bracketings give the same space, so the coactions must agree
    Comodule S = star_comodule(L);
    CHECK(tensor_comodule(tensor_comodule(R, S, L), R, L).gamma ==
          tensor_comodule(R, tensor_comodule(S, R, L), L).gamma);

    // γ(x⊗x) = Σ signs: (x⊗1 + 1⊗x)(x⊗1 + 1⊗x) reshuffled
    Space target = RR.gamma.target();
    Vec xx = RR.gamma.col(ix(RR.space, {"x", "x"}));
    Vec expect;
    expect = add(expect, unit_vec(target, {"x", "x", "1"}));
    expect = add(expect, unit_vec(target, {"x", "1", "x"}));
    expect = add(expect, unit_vec(target, {"1", "x", "x"}), -1);
    CHECK(xx == expect);
}

TEST_CASE("comodule morphisms") {
    HopfData L = exterior_hopf("L", {{"x", 1}});
    Comodule R = regular_comodule(L), T = trivial_comodule(L);
    CochainComplex Z = small_complex();
    Comodule P = point_comodule(Z, L), Cof = cofree_comodule(Z, L);
    CHECK(verify_comodule_morphism(id(R.space), R, R, L));
    CHECK(verify_comodule_morphism(L.u, T, R, L));
    CHECK(verify_comodule_morphism(R.gamma, R, cofree_comodule({L.space, L.d}, L), L));
    CHECK(verify_comodule_morphism(P.gamma, P, Cof, L));
    CHECK_FALSE(verify_comodule_morphism(L.S(), R, R, L));
    // d_{M,M'} of a morphism is a morphism
    GradedMap psi = tmap(Z.d, id(L.space));
    CHECK(verify_comodule_morphism(psi, Cof, Cof, L));
    CHECK(verify_comodule_morphism(hom_differential(psi, Cof.d, Cof.d), Cof, Cof, L));
}

TEST_CASE("representations from comodules") {
    HopfData L2 = exterior_hopf("L2", {{"x", 1}, {"y", 1}});
    CdgAlgebra A = L2.algebra();
    Convolution C(L2, A);
    Comodule R = regular_comodule(L2), T = trivial_comodule(L2);
    GradedMap g1 = extend_multiplicatively(L2, A, {{"x", unit_vec(L2.space, {"y"})},
                                                   {"y", scaled(L2.space, {"x"}, -1)}});
    GradedMap g2 = id(L2.space);
    for (const Comodule* M : {&R, &T}) {
        Space MA = tensor(M->space, A.space);
        CHECK(rep_from_comodule(*M, L2, C.e(), A) == id(MA));
        GradedMap r1 = rep_from_comodule(*M, L2, g1, A), r2 = rep_from_comodule(*M, L2, g2, A);
        CHECK(rep_from_comodule(*M, L2, C.star(g1, g2), A) == compose(r1, r2));
        CHECK(compose(r1, rep_from_comodule(*M, L2, C.inverse(g1), A)) == id(MA));
        CHECK(is_module_morphism(r1, A));
        CHECK(hom_differential(r1, free_differential(M->d, A), free_differential(M->d, A)).is_zero());
    }
    CHECK(rep_from_comodule(T, L2, g1, A) == id(tensor(T.space, A.space)));
    CHECK_THROWS_AS(rep_from_comodule(R, L2, 2 * C.e(), A), NotGroupElement);

    // ρ(id) on the regular comodule of Λ(x): x⊗1 -> x⊗1 + 1⊗x
    HopfData L = exterior_hopf("L", {{"x", 1}});
    GradedMap rho = rep_from_comodule(regular_comodule(L), L, id(L.space), L.algebra());
    Space LL = tensor(L.space, L.space);
    CHECK(rho.col(ix(LL, {"x", "1"})) == add(unit_vec(LL, {"x", "1"}), unit_vec(LL, {"1", "x"})));
}

TEST_CASE("comodules from representations") {
    HopfData L2 = exterior_hopf("L2", {{"x", 1}, {"y", 1}});
    CochainComplex Z = small_complex();
    std::vector<Comodule> corpus = {trivial_comodule(L2), regular_comodule(L2), star_comodule(L2),
                                    cofree_comodule(Z, L2), point_comodule(Z, L2)};
    corpus.push_back(tensor_comodule(corpus[1], corpus[2], L2));
    for (auto& M : corpus) {
        CAPTURE(M.name);
        Representation rep = representation_of(M, L2);
        Comodule back = comodule_from_rep(rep, L2);
        CHECK(back.gamma == M.gamma);
        CHECK(representation_of(back, L2).universal == rep.universal);
        CHECK(rep_component(rep, L2, id(L2.space), L2.algebra()) ==
              rep_from_comodule(M, L2, id(L2.space), L2.algebra()));
    }
    Representation regular = representation_of(regular_comodule(L2), L2);
    CHECK(comodule_from_rep(regular, L2).gamma == L2.delta);

    Representation broken = regular;
    broken.universal = 2 * broken.universal;
    CHECK_THROWS_AS(comodule_from_rep(broken, L2), NotRepresentation);
    broken.universal = braiding(L2.space, L2.space);
    CHECK_THROWS_AS(comodule_from_rep(broken, L2), NotRepresentation);
}

TEST_CASE("finite subcomodules") {
    HopfData L = exterior_hopf("L", {{"x", 1}});
    Comodule R = regular_comodule(L);

    Subcomodule zero = finite_subcomodule(R, Vec{}, L);
    CHECK(zero.sub.space.dim() == 0);
    CHECK(zero.checks.ok());

    Subcomodule whole = finite_subcomodule(R, unit_vec(L.space, {"x"}), L);
    CHECK(whole.sub.space.dim() == 2);
    CHECK(whole.checks.ok());
    CHECK(whole.one_step_closed);

    CochainComplex W = line_complex("W", 0);
    Comodule Cof = cofree_comodule(W, L);
    Subcomodule just_one = finite_subcomodule(Cof, unit_vec(Cof.space, {"l", "1"}), L);
    CHECK(just_one.sub.space.dim() == 1);
    Subcomodule two = finite_subcomodule(Cof, unit_vec(Cof.space, {"l", "x"}), L);
    CHECK(two.sub.space.dim() == 2);
    for (auto* s : {&just_one, &two}) {
        CHECK(s->checks.ok());
        CHECK(s->one_step_closed);
        CHECK(verify_comodule(s->sub, L).ok());
        CHECK(verify_comodule_morphism(s->inclusion, s->sub, Cof, L));
    }

    // d-closure: z0⊗1 in the cofree comodule on Z pulls in z1⊗1
    CochainComplex Z = small_complex();
    Comodule CZ = cofree_comodule(Z, L);
    Subcomodule dz = finite_subcomodule(CZ, unit_vec(CZ.space, {"z0", "x"}), L);
    CHECK(dz.sub.space.dim() == 4);
    CHECK(dz.checks.ok());
}
