#include "doctest.h"

#include "dgh/errors.hpp"
#include "dgh/free_modules.hpp"
#include "support.hpp"

using namespace dgh;
using namespace dgh::test;

namespace {

// t -> a t, dt -> a dt: an endomorphism of the interval since products of non-units vanish
GradedMap scale_interval(const CdgAlgebra& I, const Scalar& a) {
    GradedMap f(I.space, I.space, 0);
    put(f, {"1"}, {"1"});
    put(f, {"t"}, {"t"}, a);
    put(f, {"dt"}, {"dt"}, a);
    return f;
}

// evaluation at t = 0
GradedMap eval_zero(const CdgAlgebra& I) {
    GradedMap f(I.space, Space::ground(), 0);
    put(f, {"1"}, {"1"});
    return f;
}

}  // namespace

TEST_CASE("p q r s exactness") {
    Rng rng(11);
    HopfData L = exterior_hopf("L", {{"x", 1}});
    CdgAlgebra A = L.algebra();
    CdgAlgebra I = interval_algebra();
    Space M = small_complex().space, N = line_complex("W", 1).space;

    for (const CdgAlgebra* alg : {&A, &I}) {
        for (int deg = -2; deg <= 2; ++deg) {
            GradedMap alpha = rng.map(M, tensor(N, alg->space), deg);
            GradedMap phi = frak_p(alpha, *alg);
            CHECK(frak_q(phi, *alg) == alpha);
            CHECK(frak_r(phi, *alg).is_zero());
            CHECK(is_module_morphism(phi, *alg));
            GradedMap any = rng.map(tensor(M, alg->space), tensor(N, alg->space), deg);
            CHECK(frak_p(frak_q(any, *alg), *alg) + frak_s(frak_r(any, *alg), *alg) == any);
        }
        Space MA = tensor(M, alg->space);
        CHECK(frak_p(frak_q(id(MA), *alg), *alg) + frak_s(frak_r(id(MA), *alg), *alg) == id(MA));
        CHECK(verify_pqrs(M, N, *alg).ok());
        CHECK(verify_pqrs(N, M, *alg).ok());
    }
    // u_A∘ε-style: M = N = L, α = (I⊗u)∘ȷ⁻¹∘(u∘ε)
    GradedMap alpha = chain(tmap(id(L.space), A.u), right_unitor_inv(L.space), L.u, L.eps);
    CHECK(frak_r(frak_p(alpha, A), A).is_zero());
}

TEST_CASE("module morphism recognition") {
    CdgAlgebra I = interval_algebra();
    CochainComplex Z = small_complex();
    Space ZI = tensor(Z.space, I.space);
    CHECK(is_module_morphism(id(ZI), I));
    CHECK(is_module_morphism(tensor_map(Z.d, id(I.space)), I));
    // on I⊗I viewed as a free module over I, swapping the factors ignores the action
    GradedMap swap = braiding(I.space, I.space);
    CHECK_FALSE(is_module_morphism(swap, I));
    CHECK_THROWS_AS(tensor_module_morphism(swap, id(ZI), I), NotModuleMorphism);
}

TEST_CASE("tensor of module morphisms") {
    Rng rng(5);
    CdgAlgebra I = interval_algebra();
    CochainComplex Z = small_complex();
    CochainComplex W{Space(make_atom("V", {{"v0", 0}, {"v1", 1}})), GradedMap()};
    W.d = GradedMap(W.space, W.space, 1);
    put(W.d, {"v0"}, {"v1"}, 3);

    Space ZI = tensor(Z.space, I.space), WI = tensor(W.space, I.space);
    CHECK(tensor_module_morphism(id(ZI), id(WI), I) == id(tensor({Z.space, W.space, I.space})));

    // (ψ⊗I)⊗(ψ'⊗I) = ψ⊗ψ'⊗I
    GradedMap psi = rng.map(Z.space, Z.space, 1), psi2 = rng.map(W.space, W.space, 0);
    psi.add_to(ix(Z.space, {"z1"}), ix(Z.space, {"z0"}), 1);
    CHECK(tensor_module_morphism(tensor_map(psi, id(I.space)), tensor_map(psi2, id(I.space)), I) ==
          tmap(psi, psi2, id(I.space)));

    // Leibniz for the Hom differential of free modules
    GradedMap dZ = free_differential(Z.d, I), dW = free_differential(W.d, I);
    GradedMap dZW = free_differential(tensor_differential(Z.d, W.d), I);
    for (int round = 0; round < 10; ++round) {
        int a = rng.uniform(-1, 1), b = rng.uniform(-1, 1);
        GradedMap phi = frak_p(rng.map(Z.space, ZI, a), I);
        GradedMap phi2 = frak_p(rng.map(W.space, WI, b), I);
        GradedMap both = tensor_module_morphism(phi, phi2, I);
        CHECK(is_module_morphism(both, I));
        CHECK(hom_differential(both, dZW, dZW) ==
              tensor_module_morphism(hom_differential(phi, dZ, dZ), phi2, I) +
                  parity_sign(a) * tensor_module_morphism(phi, hom_differential(phi2, dW, dW), I));
    }
}

TEST_CASE("endomorphism transport") {
    Rng rng(3);
    CdgAlgebra I = interval_algebra();
    CdgAlgebra k = ground_algebra();
    CochainComplex Z = small_complex();
    Space ZI = tensor(Z.space, I.space);
    GradedMap dZI = free_differential(Z.d, I), dZk = free_differential(Z.d, k);

    GradedMap f = scale_interval(I, 2), g = scale_interval(I, Scalar(-1, 3)), ev = eval_zero(I);
    REQUIRE(verify_algebra_morphism(f, I, I).ok());
    REQUIRE(verify_algebra_morphism(ev, I, k).ok());

    for (int round = 0; round < 10; ++round) {
        int deg = rng.uniform(-1, 1);
        GradedMap phi = frak_p(rng.map(Z.space, ZI, deg), I);
        GradedMap psi = frak_p(rng.map(Z.space, ZI, rng.uniform(-1, 1)), I);
        CHECK(transport_endo(id(I.space), I, I, phi) == phi);
        CHECK(transport_endo(compose(g, f), I, I, phi) ==
              transport_endo(g, I, I, transport_endo(f, I, I, phi)));
        CHECK(transport_endo(compose(ev, f), I, k, phi) ==
              transport_endo(ev, I, k, transport_endo(f, I, I, phi)));
        GradedMap Ephi = transport_endo(ev, I, k, phi), Epsi = transport_endo(ev, I, k, psi);
        CHECK(transport_endo(ev, I, k, compose(phi, psi)) == compose(Ephi, Epsi));
        CHECK(transport_endo(ev, I, k, hom_differential(phi, dZI, dZI)) ==
              hom_differential(Ephi, dZk, dZk));
        CHECK(transport_endo(ev, I, k, commutator(phi, psi)) == commutator(Ephi, Epsi));
    }
    CHECK(transport_endo(ev, I, k, id(ZI)) == id(tensor(Z.space, k.space)));
    CHECK_THROWS_AS(transport_endo(2 * id(I.space), I, I, id(ZI)), NotAlgebraMorphism);
}

TEST_CASE("homotopy classes of module automorphisms") {
    Rng rng(9);
    CdgAlgebra I = interval_algebra();
    CochainComplex Z = small_complex();
    Space ZI = tensor(Z.space, I.space);
    GradedMap dZI = free_differential(Z.d, I);
    GradedMap phi = id(ZI);
    CHECK(homotopy_class_equal(phi, phi, Z.d, Z.d, I));

    for (int round = 0; round < 5; ++round) {
        GradedMap lambda = frak_p(rng.map(Z.space, ZI, -1), I);
        GradedMap phit = phi + hom_differential(lambda, dZI, dZI);
        auto rec = module_homotopy(phi, phit, Z.d, Z.d, I);
        REQUIRE(rec);
        CHECK(is_module_morphism(*rec, I));
        CHECK(hom_differential(*rec, dZI, dZI) == phit - phi);
    }

    HopfData L = exterior_hopf("L", {{"x", 1}});
    CochainComplex W = line_complex("W", 0);
    Space WL = tensor(W.space, L.space);
    CHECK_FALSE(homotopy_class_equal(id(WL), 2 * id(WL), W.d, W.d, L.algebra()));
}
