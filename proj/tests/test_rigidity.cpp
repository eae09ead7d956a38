#include "doctest.h"

#include "dgh/errors.hpp"
#include "dgh/rigidity.hpp"
#include "support.hpp"

using namespace dgh;
using namespace dgh::test;

namespace {

// ι∘(φ⊗I)∘Δ: a comodule endomorphism of the regular comodule for any functional φ
GradedMap left_translate(const HopfData& B, const GradedMap& phi) {
    return chain(left_unitor(B.space), tmap(phi, id(B.space)), B.delta);
}

GradedMap functional(const HopfData& B, const std::string& label) {
    GradedMap phi(B.space, Space::ground(), -B.space.degree(ix(B.space, {label})));
    put(phi, {label}, {"1"});
    return phi;
}

}  // namespace

TEST_CASE("components of natural endomorphisms") {
    HopfData L = exterior_hopf("L", {{"x", 1}});
    CdgAlgebra I = interval_algebra();
    Convolution C(L, I);
    CochainComplex Z = small_complex();
    std::vector<Comodule> comods = {trivial_comodule(L), regular_comodule(L), star_comodule(L),
                                    cofree_comodule(Z, L), point_comodule(Z, L)};
    NatEndo e{L, I, C.e()};
    for (auto& M : comods) CHECK(nat_component(e, M) == id(tensor(M.space, I.space)));

    GradedMap g = extend_multiplicatively(L, I, {{"x", unit_vec(I.space, {"dt"})}});
    NatEndo eta{L, I, g};
    CHECK(nat_component(eta, comods[0]) == id(tensor(comods[0].space, I.space)));
    CHECK(nat_component(eta, comods[3]) == tmap(id(Z.space), nat_component(eta, comods[1])));

    // restriction to a subcomodule
    Subcomodule sub = finite_subcomodule(comods[3], unit_vec(comods[3].space, {"z0", "x"}), L);
    GradedMap inc = tmap(sub.inclusion, id(I.space));
    CHECK(compose(nat_component(eta, comods[3]), inc) == compose(inc, nat_component(eta, sub.sub)));
}

TEST_CASE("naturality carries the Koszul sign") {
    HopfData L = exterior_hopf("L", {{"x", 1}});
    CdgAlgebra I = interval_algebra();
    Comodule R = regular_comodule(L);
    GradedMap psi = left_translate(L, functional(L, "x"));  // degree -1
    REQUIRE(verify_comodule_morphism(psi, R, R, L));
    Rng rng(2);
    for (int round = 0; round < 6; ++round) {
        GradedMap alpha = rng.map(L.space, I.space, rng.uniform(-1, 1));
        CHECK(naturality_report(NatEndo{L, I, alpha}, psi, R, R).ok());
        CHECK(naturality_report(NatEndo{L, I, alpha}, L.u, trivial_comodule(L), R).ok());
    }
}

TEST_CASE("reconstruction of alpha") {
    Rng rng(8);
    HopfData L = exterior_hopf("L", {{"x", 1}});
    HopfData L2 = exterior_hopf("L2", {{"x", 1}, {"y", 1}});
    CdgAlgebra I = interval_algebra();
    Convolution C(L, I);
    CHECK(extract_alpha(id(tensor(L.space, I.space)), L, I) == C.e());
    for (int round = 0; round < 8; ++round) {
        GradedMap alpha = rng.map(L.space, I.space, rng.uniform(-1, 1));
        CHECK(extract_alpha(nat_component(NatEndo{L, I, alpha}, regular_comodule(L)), L, I) == alpha);
    }
    Convolution C2(L2, L2.algebra());
    Comodule R2 = regular_comodule(L2);
    for (int round = 0; round < 5; ++round) {
        GradedMap a = rng.map(L2.space, L2.space, rng.uniform(-1, 1));
        GradedMap b = rng.map(L2.space, L2.space, rng.uniform(-1, 1));
        CHECK(nat_component(NatEndo{L2, L2.algebra(), C2.star(a, b)}, R2) ==
              compose(nat_component(NatEndo{L2, L2.algebra(), a}, R2),
                      nat_component(NatEndo{L2, L2.algebra(), b}, R2)));
    }
}

TEST_CASE("tensor naturality matches group elements") {
    HopfData L = exterior_hopf("L", {{"x", 1}});
    CdgAlgebra I = interval_algebra();
    Comodule R = regular_comodule(L), S = star_comodule(L);
    std::vector<ProbePair> probes = {{R, R}, {R, S}, {S, S}};
    Convolution C(L, I);
    CHECK(is_tensor_nat(NatEndo{L, I, C.e()}, probes));
    GradedMap g = extend_multiplicatively(L, I, {{"x", scaled(I.space, {"dt"}, 7)}});
    CHECK(is_tensor_nat(NatEndo{L, I, g}, probes));
    CHECK_FALSE(is_tensor_nat(NatEndo{L, I, 2 * C.e()}, probes));

    // unital but not multiplicative: fails only on the tensor probe
    HopfData L2 = exterior_hopf("L2", {{"x", 1}, {"y", 1}});
    Convolution C2(L2, L2.algebra());
    GradedMap h = id(L2.space);
    h.set(ix(L2.space, {"xy"}), ix(L2.space, {"xy"}), 2);
    Report r = tensor_nat_report(NatEndo{L2, L2.algebra(), h}, {{regular_comodule(L2), regular_comodule(L2)}});
    CHECK_FALSE(C2.is_group_element(h));
    CHECK_FALSE(r.ok());
    CHECK(tensor_nat_report(NatEndo{L2, L2.algebra(), h}, {}).ok());

    // multiplicative but not closed: x -> t⊗ds over I⊗J
    CdgAlgebra IJ = tensor_algebra(interval_algebra("I"), interval_algebra("J"));
    GradedMap open(L.space, IJ.space, 0);
    put(open, {"1"}, {"1", "1"});
    put(open, {"x"}, {"t", "dt"});
    Convolution CIJ(L, IJ);
    CHECK(compose(open, L.u) == IJ.u);
    CHECK(compose(open, L.m) == compose(IJ.m, tmap(open, open)));
    CHECK_FALSE(CIJ.is_group_element(open));
    CHECK_FALSE(is_tensor_nat(NatEndo{L, IJ, open}, {{R, R}}));
}

TEST_CASE("dual comodules") {
    HopfData L = exterior_hopf("L", {{"x", 1}});
    Comodule T = trivial_comodule(L), R = regular_comodule(L);

    DualComodule Td = dual_comodule(T, L);
    CHECK(Td.dual.gamma.nonzeros() == 1);
    CHECK(verify_comodule(Td.dual, L).ok());

    // γ∨(e¹) = e¹⊗1 + e^x⊗x and γ∨(e^x) = e^x⊗1, expanded by hand from the basis formula
    DualComodule Rd = dual_comodule(R, L);
    const Space& D = Rd.dual.space;
    Space DB = tensor(D, L.space);
    CHECK(D.degree(ix(D, {"x∨"})) == -1);
    CHECK(Rd.dual.gamma.col(ix(D, {"1∨"})) == add(unit_vec(DB, {"1∨", "1"}), unit_vec(DB, {"x∨", "x"})));
    CHECK(Rd.dual.gamma.col(ix(D, {"x∨"})) == unit_vec(DB, {"x∨", "1"}));
    CHECK(verify_comodule(Rd.dual, L).ok());

    Comodule MD = tensor_comodule(R, Rd.dual, L), DM = tensor_comodule(Rd.dual, R, L);
    CHECK(verify_comodule_morphism(Rd.ev, DM, T, L));
    CHECK(verify_comodule_morphism(Rd.cv, T, MD, L));
    CHECK(Rd.cv.col(0) == add(unit_vec(MD.space, {"1", "1∨"}), unit_vec(MD.space, {"x", "x∨"})));

    RigidPair p = rigid_pair(R, Rd);
    CHECK(triangle_report(p).ok());
    CHECK(triangle_report(flipped(p)).ok());

    // the double dual is the original comodule, through the graded canonical isomorphism
    DualComodule Rdd = dual_comodule(Rd.dual, L);
    GradedMap back(Rdd.dual.space, R.space, 0);
    // x -> (-1)^{|x|} x∨∨
    for (std::size_t i = 0; i < R.space.dim(); ++i) back.set(i, i, parity_sign(R.space.degree(i)));
    CHECK(compose(tmap(back, id(L.space)), Rdd.dual.gamma) == compose(R.gamma, back));
}

TEST_CASE("dual morphisms") {
    HopfData L = exterior_hopf("L", {{"x", 1}});
    Comodule T = trivial_comodule(L), R = regular_comodule(L);
    DualComodule Td = dual_comodule(T, L), Rd = dual_comodule(R, L);
    RigidPair pT = rigid_pair(T, Td), pR = rigid_pair(R, Rd);
    CHECK(dual_morphism(id(R.space), pR, pR) == id(Rd.dual.space));

    GradedMap u = L.u;                                        // T -> R
    GradedMap odd = left_translate(L, functional(L, "x"));   // R -> R, degree -1
    for (auto* psi : {&u, &odd}) {
        const RigidPair& src = psi == &u ? pT : pR;
        GradedMap dual = dual_morphism(*psi, src, pR);
        // ev_M'∘(I⊗ψ) = ev_M∘(ψ∨⊗I)
        CHECK(compose(pR.ev, tmap(id(Rd.dual.space), *psi)) == compose(src.ev, tmap(dual, id(src.object))));
        CHECK(dual_morphism(dual, flipped(pR), flipped(src)) == *psi);
    }
    CHECK(dual_morphism(compose(odd, u), pT, pR) ==
          compose(dual_morphism(u, pT, pR), dual_morphism(odd, pR, pR)));
    CHECK(dual_morphism(compose(odd, odd), pR, pR) ==
          compose(dual_morphism(odd, pR, pR), dual_morphism(odd, pR, pR)));
    CHECK_THROWS_AS(dual_morphism(u, pR, pR), SpaceMismatch);
}

TEST_CASE("two antipode inverses agree") {
    Rng rng(13);
    HopfData L = exterior_hopf("L", {{"x", 1}});
    HopfData L3 = exterior_hopf("L3", {{"x", 1}, {"y", 3}});
    CdgAlgebra I = interval_algebra();
    CochainComplex Z = small_complex();
    for (const HopfData* B : {&L, &L3}) {
        std::vector<Comodule> comods = {trivial_comodule(*B), regular_comodule(*B), star_comodule(*B),
                                        cofree_comodule(Z, *B), point_comodule(Z, *B)};
        comods.push_back(tensor_comodule(comods[1], comods[2], *B));
        Convolution C(*B, I);
        for (int round = 0; round < 4; ++round) {
            GradedMap alpha = rng.map(B->space, I.space, rng.uniform(-1, 1));
            NatEndo eta{*B, I, alpha};
            for (auto& M : comods) {
                CAPTURE(M.name);
                GradedMap sigma = sigma_component(eta, M);
                CHECK(sigma == S_component(eta, M));
                CHECK(sigma == nat_component(NatEndo{*B, I, compose(alpha, B->S())}, M));
            }
        }
        NatEndo e{*B, I, C.e()};
        for (auto& M : comods) {
            CHECK(S_component(e, M) == id(tensor(M.space, I.space)));
            CHECK(sigma_component(e, M) == id(tensor(M.space, I.space)));
        }
    }
    NatEndo idB{L, L.algebra(), id(L.space)};
    Comodule R = regular_comodule(L);
    GradedMap xi = nat_component(idB, R);
    Space RA = tensor(R.space, L.space);
    CHECK(compose(S_component(idB, R), xi) == id(RA));
    CHECK(compose(xi, S_component(idB, R)) == id(RA));
    CHECK(compose(sigma_component(idB, R), xi) == id(RA));
    CHECK(S_component(idB, trivial_comodule(L)) == id(tensor(Space::ground(), L.space)));
}

TEST_CASE("transport of natural endomorphisms") {
    HopfData L = exterior_hopf("L", {{"x", 1}});
    CdgAlgebra I = interval_algebra();
    CdgAlgebra k = ground_algebra();
    GradedMap g = extend_multiplicatively(L, I, {{"x", scaled(I.space, {"dt"}, 3)}});
    NatEndo eta{L, I, g};
    NatEndo same = nat_transport(id(I.space), I, eta);
    CHECK(same.alpha == g);

    GradedMap f(I.space, I.space, 0);
    put(f, {"1"}, {"1"});
    put(f, {"t"}, {"t"}, -2);
    put(f, {"dt"}, {"dt"}, -2);
    GradedMap ev(I.space, k.space, 0);
    put(ev, {"1"}, {"1"});
    CHECK(nat_transport(compose(ev, f), k, eta).alpha == nat_transport(ev, k, nat_transport(f, I, eta)).alpha);

    Comodule R = regular_comodule(L);
    NatEndo moved = nat_transport(f, I, eta);
    CHECK(is_tensor_nat(moved, {{R, R}, {R, star_comodule(L)}}));
    // componentwise: p((I⊗f)∘q(η^M))
    CHECK(nat_component(moved, R) == transport_endo(f, I, I, nat_component(eta, R)));
    CHECK_THROWS_AS(nat_transport(2 * id(I.space), I, eta), NotAlgebraMorphism);
}

TEST_CASE("homotopy pairs of natural endomorphisms") {
    HopfData L = exterior_hopf("L", {{"x", 1}});
    CdgAlgebra I = interval_algebra();
    Convolution C(L, I);
    Comodule R = regular_comodule(L), S = star_comodule(L), T = trivial_comodule(L);
    std::vector<Comodule> singles = {T, R, S};
    std::vector<ProbePair> pairs = {{R, R}, {R, S}};
    GradedMap g = extend_multiplicatively(L, I, {{"x", unit_vec(I.space, {"dt"})}});
    CHECK(verify_nat_homotopy_pair(C, constant_pair(g), singles, pairs).ok());
    auto hp = search_homotopy(C, g, C.e());
    REQUIRE(hp);
    CHECK(verify_nat_homotopy_pair(C, *hp, singles, pairs).ok());

    HopfData W = exterior_hopf("W", {{"w", -1}});
    Convolution CW(L, W.algebra());
    GradedMap xi(L.space, W.space, -1);
    put(xi, {"1"}, {"w"});
    HomotopyPair broken{Poly(CW.e()), Poly(xi), Flavor::algebra};
    Report r = verify_nat_homotopy_pair(CW, broken, {trivial_comodule(L), regular_comodule(L)},
                                        {{regular_comodule(L), regular_comodule(L)}});
    CHECK_FALSE(r.ok());
    bool lambda_k = false;
    for (auto& c : r.failures())
        if (c.name.find("λ^k") != std::string::npos) lambda_k = true;
    CHECK(lambda_k);
}
