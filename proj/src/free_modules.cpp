#include "dgh/free_modules.hpp"

#include <set>

#include "dgh/errors.hpp"

namespace dgh {

Space strip_suffix(const Space& s, const Space& suffix) {
    const auto& f = s.factors();
    const auto& g = suffix.factors();
    if (f.size() <= g.size()) throw SpaceMismatch(s.name() + " does not end in " + suffix.name());
    std::size_t off = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i)
        if (!f[off + i]->same_as(*g[i])) throw SpaceMismatch(s.name() + " does not end in " + suffix.name());
    return Space(std::vector<AtomPtr>(f.begin(), f.begin() + static_cast<long>(off)));
}

GradedMap frak_p(const GradedMap& alpha, const CdgAlgebra& A) {
    Space N = strip_suffix(alpha.target(), A.space);
    return compose(tmap(id(N), A.m), tmap(alpha, id(A.space)));
}

GradedMap frak_q(const GradedMap& phi, const CdgAlgebra& A) {
    Space M = strip_suffix(phi.source(), A.space);
    return chain(phi, tmap(id(M), A.u), right_unitor_inv(M));
}

GradedMap frak_r(const GradedMap& phi, const CdgAlgebra& A) {
    Space M = strip_suffix(phi.source(), A.space);
    Space N = strip_suffix(phi.target(), A.space);
    return compose(phi, tmap(id(M), A.m)) - compose(tmap(id(N), A.m), tmap(phi, id(A.space)));
}

GradedMap frak_s(const GradedMap& beta, const CdgAlgebra& A) {
    Space M = strip_suffix(strip_suffix(beta.source(), A.space), A.space);
    return chain(beta, tmap(id(M), A.u, id(A.space)), tmap(right_unitor_inv(M), id(A.space)));
}

bool is_module_morphism(const GradedMap& phi, const CdgAlgebra& A) { return frak_r(phi, A).is_zero(); }

GradedMap free_differential(const GradedMap& dM, const CdgAlgebra& A) {
    return tensor_differential(dM, A.d);
}

GradedMap tensor_module_morphism(const GradedMap& phi, const GradedMap& phi2, const CdgAlgebra& A) {
    if (!is_module_morphism(phi, A) || !is_module_morphism(phi2, A))
        throw NotModuleMorphism("tensor of module maps");
    Space N = strip_suffix(phi.target(), A.space);
    Space N2 = strip_suffix(phi2.target(), A.space);
    return chain(tmap(id(N), id(N2), A.m), tmap(id(N), braiding(A.space, N2), id(A.space)),
                 tmap(frak_q(phi, A), phi2));
}

GradedMap transport_endo(const GradedMap& f, const CdgAlgebra& A, const CdgAlgebra& A2,
                         const GradedMap& phi) {
    if (!verify_algebra_morphism(f, A, A2).ok()) throw NotAlgebraMorphism(A.name + " -> " + A2.name);
    Space N = strip_suffix(phi.target(), A.space);
    return frak_p(compose(tmap(id(N), f), frak_q(phi, A)), A2);
}

std::vector<GradedMap> module_hom_basis(const Space& M, const Space& N, const CdgAlgebra& A, int deg) {
    std::vector<GradedMap> out;
    for (auto& b : hom_basis(M, tensor(N, A.space), deg)) out.push_back(frak_p(b, A));
    return out;
}

std::optional<GradedMap> module_homotopy(const GradedMap& phi, const GradedMap& phit,
                                         const GradedMap& dM, const GradedMap& dN,
                                         const CdgAlgebra& A) {
    if (phi.source() != phit.source() || phi.target() != phit.target())
        throw SpaceMismatch("homotopy between maps with different shapes");
    GradedMap dMA = free_differential(dM, A), dNA = free_differential(dN, A);
    Space M = strip_suffix(phi.source(), A.space), N = strip_suffix(phi.target(), A.space);
    auto basis = module_hom_basis(M, N, A, phi.degree() - 1);
    LinearSystem sys;
    for (auto& b : basis) sys.add_variable({hom_differential(b, dMA, dNA)});
    auto x = sys.solve({phit - phi});
    if (!x) return std::nullopt;
    return combine(basis, *x, phi.source(), phi.target(), phi.degree() - 1);
}

bool homotopy_class_equal(const GradedMap& phi, const GradedMap& phit, const GradedMap& dM,
                          const GradedMap& dN, const CdgAlgebra& A) {
    return module_homotopy(phi, phit, dM, dN, A).has_value();
}

GradedMap commutator(const GradedMap& phi, const GradedMap& psi) {
    return compose(phi, psi) - Scalar(parity_sign(phi.degree() * psi.degree())) * compose(psi, phi);
}

static std::vector<GradedMap> all_maps(const Space& src, const Space& tgt) {
    std::set<int> degs;
    for (int a : src.populated_degrees())
        for (int b : tgt.populated_degrees()) degs.insert(b - a);
    std::vector<GradedMap> out;
    for (int d : degs)
        for (auto& m : hom_basis(src, tgt, d)) out.push_back(m);
    return out;
}

Report verify_pqrs(const Space& M, const Space& N, const CdgAlgebra& A) {
    Report r;
    r.title = "free modules " + M.name() + ", " + N.name() + " over " + A.name;
    Space MA = tensor(M, A.space), NA = tensor(N, A.space);
    std::size_t k = 0;
    for (auto& a : all_maps(M, NA)) {
        GradedMap pa = frak_p(a, A);
        r.expect_zero("r∘p = 0 on basis map " + std::to_string(k), frak_r(pa, A));
        r.expect_equal("q∘p = I on basis map " + std::to_string(k), frak_q(pa, A), a);
        ++k;
    }
    k = 0;
    for (auto& phi : all_maps(MA, NA)) {
        r.expect_equal("p∘q + s∘r = I on basis map " + std::to_string(k),
                       frak_p(frak_q(phi, A), A) + frak_s(frak_r(phi, A), A), phi);
        ++k;
    }
    return r;
}

}  // namespace dgh
