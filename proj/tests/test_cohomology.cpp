#include "doctest.h"

#include "dgh/cohomology.hpp"
#include "dgh/errors.hpp"
#include "support.hpp"

using namespace dgh;
using namespace dgh::test;

TEST_CASE("zero differential: H is the complex itself") {
    HopfData L2 = exterior_hopf("L2", {{"x", 1}, {"y", 1}});
    SDR s = compute_sdr({L2.space, L2.d}, L2.u);
    CHECK(s.H == L2.space);
    CHECK(s.p == id(L2.space));
    CHECK(s.q == id(L2.space));
    CHECK(s.chi.is_zero());
    HopfData h = induced_hopf_on_H(L2, s);
    CHECK(h.m == L2.m);
    CHECK(h.delta == L2.delta);
    CHECK(h.S() == L2.S());
    CHECK(verify_structure(h, StructureKind::hopf).ok());
    CHECK(sdr_defects(L2, s).ok());
}

TEST_CASE("the interval retracts onto its unit") {
    CdgAlgebra I = interval_algebra();
    SDR s = compute_sdr(I.complex(), I.u);
    CHECK(s.H.dim() == 1);
    CHECK(s.H.label(0) == "1");
    CHECK(entry(s.chi, {"dt"}, {"t"}) == 1);
    CHECK(s.chi.nonzeros() == 1);
    CHECK(verify_sdr(s, I.complex(), I.u).ok());
    CdgAlgebra h = induced_algebra_on_H(I, s);
    CHECK(verify_algebra(h).ok());
}

TEST_CASE("acyclic complexes have no cohomology") {
    CochainComplex Z = small_complex();
    SDR s = compute_sdr(Z);
    CHECK(s.H.dim() == 0);
    CHECK(verify_sdr(s, Z).ok());
    SDR r = compute_sdr(Z, std::nullopt, "", PivotOrder::reverse);
    CHECK(verify_sdr(r, Z).ok());
}

TEST_CASE("random complexes split in both pivot orders") {
    Rng rng(31);
    for (int round = 0; round < 30; ++round) {
        Space V = rng.space("V", 4);
        CochainComplex C{V, rng.differential(V)};
        // conjugate by I + E_{i,i+1} to make d less sparse; d² = 0 survives
        for (std::size_t i = 0; i + 1 < V.dim(); ++i)
            if (V.degree(i) == V.degree(i + 1)) {
                GradedMap g = id(V), gi = id(V);
                g.add_to(i, i + 1, 1);
                gi.add_to(i, i + 1, -1);
                C.d = chain(g, C.d, gi);
                break;
            }
        REQUIRE(compose(C.d, C.d).is_zero());
        for (PivotOrder order : {PivotOrder::forward, PivotOrder::reverse}) {
            SDR s = compute_sdr(C, std::nullopt, "", order);
            CHECK(verify_sdr(s, C).ok());
        }
    }
}

TEST_CASE("induced algebra structure does not depend on the splitting") {
    CdgAlgebra IJ = tensor_algebra(interval_algebra("I"), interval_algebra("J"));
    REQUIRE(verify_algebra(IJ).ok());
    SDR fwd = compute_sdr(IJ.complex(), IJ.u, "H", PivotOrder::forward);
    SDR rev = compute_sdr(IJ.complex(), IJ.u, "H", PivotOrder::reverse);
    CHECK(verify_sdr(fwd, IJ.complex(), IJ.u).ok());
    CHECK(verify_sdr(rev, IJ.complex(), IJ.u).ok());
    CHECK(fwd.chi != rev.chi);  // genuinely different complements
    CHECK(fwd.H == rev.H);
    CdgAlgebra a = induced_algebra_on_H(IJ, fwd), b = induced_algebra_on_H(IJ, rev);
    CHECK(a.m == b.m);
    CHECK(a.u == b.u);
}

TEST_CASE("non-negative degree reduction") {
    for (const HopfData& B : {exterior_hopf("L", {{"x", 1}}), exterior_hopf("L2", {{"x", 1}, {"y", 1}})}) {
        SDR s = compute_sdr({B.space, B.d}, B.u);
        CHECK(verify_nonneg_reduction(B, s).ok());
    }
    HopfData W = exterior_hopf("W", {{"w", -1}});
    SDR s = compute_sdr({W.space, W.d}, W.u);
    CHECK_THROWS_AS(verify_nonneg_reduction(W, s), WindowError);
}
