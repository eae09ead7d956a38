// Regenerates the bundles under corpus/ from the built-in catalog.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "dgh/bundle.hpp"
#include "dgh/catalog.hpp"
#include "dgh/comodules.hpp"

using namespace dgh;

namespace {

void add_atoms(Bundle& b, const Space& s) {
    for (auto& a : s.factors()) {
        if (a->name == "k") continue;
        bool seen = false;
        for (auto& x : b.atoms) seen = seen || x->name == a->name;
        if (!seen) b.atoms.push_back(a);
    }
}

void add_comodule(Bundle& b, const HopfData& B, Comodule c, const std::string& name) {
    c.name = name;
    add_atoms(b, c.space);
    b.comodules.push_back({B.name, c});
}

void add_element(Bundle& b, const std::string& name, ElementKind k, const HopfData& B, const std::string& target,
                 const GradedMap& f) {
    b.elements.push_back({name, k, B.name, target, f});
}

long at(const Space& s, const std::string& label) { return s.find({label}); }

GradedMap unit_map(const HopfData& B, const CdgAlgebra& A) { return compose(A.u, B.eps); }

// g(x_i) = Σ_j M[j][i] x_j on an exterior algebra with two degree-1 generators.
GradedMap linear_on_generators(const HopfData& B, const std::vector<std::vector<long>>& M) {
    const Space& S = B.space;
    GradedMap g(S, S, 0);
    g.set(0, 0, 1);
    const char* gen[] = {"x", "y"};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (M[j][i]) g.set(at(S, gen[j]), at(S, gen[i]), M[j][i]);
    long det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
    if (det) g.set(at(S, "xy"), at(S, "xy"), det);
    return g;
}

Bundle lambda_x() {
    Bundle b;
    HopfData L = exterior_hopf("L", {{"x", 1}});
    CdgAlgebra I = interval_algebra("I");
    CochainComplex Z = small_complex("Z");
    add_atoms(b, L.space);
    add_atoms(b, I.space);
    add_atoms(b, Z.space);
    b.complexes.push_back({"Z", Z});
    b.algebras.push_back(I);
    b.hopf.push_back(L);

    add_comodule(b, L, trivial_comodule(L), "k");
    add_comodule(b, L, regular_comodule(L), "L");
    add_comodule(b, L, star_comodule(L), "L*");
    add_comodule(b, L, cofree_comodule(Z, L), "Z⊗L");
    add_comodule(b, L, point_comodule(Z, L), "Z");
    add_comodule(b, L, cofree_comodule({L.space, L.d}, L), "L⊗L cofree");
    add_comodule(b, L, tensor_comodule(regular_comodule(L), star_comodule(L), L), "L⊗L*");
    add_comodule(b, L, tensor_comodule(regular_comodule(L), regular_comodule(L), L), "L⊗L");
    Subcomodule sub = finite_subcomodule(cofree_comodule(Z, L), Vec{{0, Scalar(1)}}, L);
    add_comodule(b, L, sub.sub, "⟨z0⊗1⟩");

    b.morphisms.push_back({"unit", "k", "L", L.u});
    b.morphisms.push_back({"coaction", "L", "L⊗L cofree", L.delta});
    b.morphisms.push_back({"product", "L⊗L", "L", L.m});
    b.morphisms.push_back({"dZ⊗I", "Z⊗L", "Z⊗L", tmap(Z.d, id(L.space))});
    b.morphisms.push_back({"include", "⟨z0⊗1⟩", "Z⊗L", sub.inclusion});

    const Space& A = I.space;
    for (auto [name, a] : std::vector<std::pair<std::string, Scalar>>{{"g", 1}, {"h", Scalar(-2)}, {"f", Scalar(1, 3)}}) {
        GradedMap g = unit_map(L, I);
        g.set(at(A, "dt"), at(L.space, "x"), a);
        add_element(b, name, ElementKind::group, L, "I", g);
    }
    add_element(b, "e", ElementKind::group, L, "I", unit_map(L, I));
    GradedMap v(L.space, A, 0);
    v.set(at(A, "dt"), at(L.space, "x"), 1);
    add_element(b, "v", ElementKind::tangential, L, "I", v);
    GradedMap w(L.space, A, 0);
    w.set(at(A, "dt"), at(L.space, "x"), Scalar(5, 2));
    add_element(b, "w", ElementKind::tangential, L, "I", w);

    add_element(b, "id", ElementKind::group, L, "L", id(L.space));
    GradedMap c = id(L.space);
    c.set(1, 1, 3);
    add_element(b, "c3", ElementKind::group, L, "L", c);
    GradedMap n(L.space, L.space, 0);
    n.set(1, 1, 1);
    add_element(b, "n", ElementKind::tangential, L, "L", n);
    add_element(b, "twice_e", ElementKind::map, L, "I", Scalar(2) * unit_map(L, I));
    GradedMap odd(L.space, A, 1);
    odd.set(at(A, "dt"), 0, 1);
    add_element(b, "odd", ElementKind::map, L, "I", odd);
    return b;
}

Bundle lambda_x_bialgebra() {
    Bundle b;
    HopfData L = exterior_hopf("L", {{"x", 1}}, false);
    add_atoms(b, L.space);
    b.hopf.push_back(L);
    return b;
}

Bundle lambda_xy(const std::string& name, int ydeg) {
    Bundle b;
    HopfData L = exterior_hopf(name, {{"x", 1}, {"y", ydeg}});
    CdgAlgebra I = interval_algebra("I");
    add_atoms(b, L.space);
    add_atoms(b, I.space);
    b.algebras.push_back(I);
    CdgAlgebra II = tensor_algebra(I, interval_algebra("J"));
    add_atoms(b, II.space);
    b.algebras.push_back(II);
    b.hopf.push_back(L);
    add_comodule(b, L, trivial_comodule(L), "k");
    add_comodule(b, L, regular_comodule(L), name);
    add_comodule(b, L, star_comodule(L), name + "*");
    CochainComplex W = line_complex("W", 2);
    add_atoms(b, W.space);
    add_comodule(b, L, cofree_comodule(W, L), "W⊗" + name);
    add_comodule(b, L, point_comodule(W, L), "W");
    add_comodule(b, L, tensor_comodule(regular_comodule(L), star_comodule(L), L), name + "⊗" + name + "*");
    b.morphisms.push_back({"unit", "k", name, L.u});
    b.morphisms.push_back({"antipode", name, name + "*", L.S()});

    const Space& S = L.space;
    const Space& A = I.space;
    add_element(b, "id", ElementKind::group, L, name, id(S));
    add_element(b, "e", ElementKind::group, L, name, unit_map(L, L.algebra()));
    if (ydeg == 1) {
        add_element(b, "r", ElementKind::group, L, name, linear_on_generators(L, {{1, 1}, {0, 1}}));
        add_element(b, "s", ElementKind::group, L, name, linear_on_generators(L, {{2, 0}, {3, -1}}));
        GradedMap u(S, S, 0);
        u.set(at(S, "x"), at(S, "x"), 1);
        u.set(at(S, "y"), at(S, "y"), 1);
        add_element(b, "u", ElementKind::tangential, L, name, u);
        GradedMap nil(S, S, 0);
        nil.set(at(S, "x"), at(S, "y"), 1);
        add_element(b, "nil", ElementKind::tangential, L, name, nil);
        GradedMap g = unit_map(L, I);
        g.set(at(A, "dt"), at(S, "x"), 1);
        g.set(at(A, "dt"), at(S, "y"), -1);
        add_element(b, "g", ElementKind::group, L, "I", g);
        add_element(b, "eI", ElementKind::group, L, "I", unit_map(L, I));
    } else {
        GradedMap d(S, S, 0);
        d.set(0, 0, 1);
        d.set(at(S, "x"), at(S, "x"), 2);
        d.set(at(S, "y"), at(S, "y"), -1);
        d.set(at(S, "xy"), at(S, "xy"), -2);
        add_element(b, "diag", ElementKind::group, L, name, d);
        GradedMap t(S, S, 0);
        t.set(at(S, "y"), at(S, "y"), 1);
        add_element(b, "ty", ElementKind::tangential, L, name, t);
        GradedMap odd(S, S, 1);
        odd.set(at(S, "x"), 0, 1);
        odd.set(at(S, "xy"), at(S, "y"), 1);
        add_element(b, "odd", ElementKind::map, L, name, odd);
        GradedMap odd3(S, S, 3);
        odd3.set(at(S, "y"), 0, 1);
        odd3.set(at(S, "xy"), at(S, "x"), -1);
        add_element(b, "odd3", ElementKind::map, L, name, odd3);
        GradedMap even2(S, S, 2);
        even2.set(at(S, "y"), at(S, "x"), Scalar(1, 2));
        add_element(b, "even2", ElementKind::map, L, name, even2);
        GradedMap g = unit_map(L, I);
        g.set(at(A, "dt"), at(S, "x"), 1);
        add_element(b, "g", ElementKind::group, L, "I", g);
    }
    return b;
}

Bundle ground() {
    Bundle b;
    HopfData K = ground_hopf();
    CdgAlgebra I = interval_algebra("I");
    CochainComplex Z = small_complex("Z");
    add_atoms(b, I.space);
    add_atoms(b, Z.space);
    b.complexes.push_back({"Z", Z});
    b.algebras.push_back(I);
    b.hopf.push_back(K);
    add_comodule(b, K, trivial_comodule(K), "trivial");
    add_comodule(b, K, point_comodule(Z, K), "Z");
    add_element(b, "e", ElementKind::group, K, "I", unit_map(K, I));
    add_element(b, "ek", ElementKind::group, K, K.name, id(K.space));
    add_element(b, "zero", ElementKind::tangential, K, "I", GradedMap(K.space, I.space, 0));
    return b;
}

}  // namespace

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "corpus";
    std::filesystem::create_directories(dir);
    std::vector<std::pair<std::string, Bundle>> out{{"lambda_x.json", lambda_x()},
                                                    {"lambda_x_bialgebra.json", lambda_x_bialgebra()},
                                                    {"lambda_xy.json", lambda_xy("L2", 1)},
                                                    {"lambda_odd.json", lambda_xy("L3", 3)},
                                                    {"ground.json", ground()}};
    for (auto& [file, b] : out) {
        std::ofstream f(dir / file, std::ios::binary);
        f << serialize_bundle(b);
        std::cout << (dir / file).string() << "\n";
    }
}
