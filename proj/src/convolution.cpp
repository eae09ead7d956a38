#include "dgh/convolution.hpp"

#include "dgh/errors.hpp"

namespace dgh {

Convolution::Convolution(HopfData B, CdgAlgebra A) : B_(std::move(B)), A_(std::move(A)) {}

void Convolution::check(const GradedMap& a) const {
    if (a.source() != B_.space || a.target() != A_.space)
        throw SpaceMismatch("expected a map " + B_.space.name() + " -> " + A_.space.name() + ", got " +
                            a.source().name() + " -> " + a.target().name());
}

GradedMap Convolution::e() const { return compose(A_.u, B_.eps); }

GradedMap Convolution::zero(int degree) const { return GradedMap(B_.space, A_.space, degree); }

GradedMap Convolution::d(const GradedMap& alpha) const {
    check(alpha);
    return hom_differential(alpha, B_.d, A_.d);
}

GradedMap Convolution::star(const GradedMap& a, const GradedMap& b) const {
    check(a);
    check(b);
    return chain(A_.m, tmap(a, b), B_.delta);
}

GradedMap Convolution::star(const std::vector<GradedMap>& as) const {
    if (as.empty()) return e();
    if (as.size() == 1) return as.front();
    GradedMap t = as.back();
    for (std::size_t i = as.size() - 1; i-- > 0;) {
        check(as[i]);
        t = tensor_map(as[i], t);
    }
    auto n = static_cast<unsigned>(as.size());
    return chain(iterated_product(A_.m, n), t, iterate_coproduct(B_.delta, n));
}

GradedMap Convolution::power(const GradedMap& a, unsigned n) const {
    GradedMap r = e();
    for (unsigned i = 0; i < n; ++i) r = star(r, a);
    return r;
}

Report Convolution::group_element_report(const GradedMap& g) const {
    check(g);
    Report r;
    r.title = "group element " + B_.name + " -> " + A_.name;
    r.expect("degree 0", g.degree() == 0, "degree " + std::to_string(g.degree()));
    if (g.degree() != 0) return r;
    r.expect_zero("d g = 0", d(g));
    r.expect_equal("g∘u = u", compose(g, B_.u), A_.u);
    r.expect_equal("g∘m = m∘(g⊗g)", compose(g, B_.m), compose(A_.m, tmap(g, g)));
    return r;
}

bool Convolution::is_group_element(const GradedMap& g) const { return group_element_report(g).ok(); }

GradedMap Convolution::inverse(const GradedMap& g) const {
    if (!is_group_element(g)) throw NotGroupElement(B_.name + " -> " + A_.name);
    return compose(g, B_.S());
}

Report Convolution::tangential_report(const GradedMap& v) const {
    check(v);
    Report r;
    r.title = "tangential element " + B_.name + " -> " + A_.name;
    r.expect("degree 0", v.degree() == 0, "degree " + std::to_string(v.degree()));
    if (v.degree() != 0) return r;
    GradedMap ee = e();
    r.expect_zero("d υ = 0", d(v));
    r.expect_zero("υ∘u = 0", compose(v, B_.u));
    r.expect_equal("υ∘m = m∘(e⊗υ + υ⊗e)", compose(v, B_.m),
                   compose(A_.m, tmap(ee, v) + tmap(v, ee)));
    return r;
}

bool Convolution::is_tangential(const GradedMap& v) const { return tangential_report(v).ok(); }

GradedMap Convolution::bracket(const GradedMap& a, const GradedMap& b) const {
    if (!is_tangential(a) || !is_tangential(b)) throw NotTangential("bracket arguments");
    return star(a, b) - star(b, a);
}

unsigned Convolution::conilpotency_index() const {
    if (!index_) {
        auto F = conilpotency_filtration(B_);
        if (!F.index) throw NotConilpotent(B_.name);
        index_ = *F.index;
    }
    return *index_;
}

GradedMap Convolution::exp(const GradedMap& v) const {
    if (!is_tangential(v)) throw NotTangential("exp argument");
    unsigned N = conilpotency_index();
    GradedMap sum = e(), p = e();
    for (unsigned n = 1; n <= N; ++n) {
        p = star(p, v);
        sum += (1 / factorial(n)) * p;
    }
    return sum;
}

GradedMap Convolution::ln(const GradedMap& g) const {
    if (!is_group_element(g)) throw NotGroupElement("ln argument");
    unsigned N = conilpotency_index();
    GradedMap gb = g - e(), sum = zero(), p = e();
    for (unsigned n = 1; n <= N; ++n) {
        p = star(p, gb);
        sum += Scalar(-parity_sign(n), n) * p;
    }
    return sum;
}

GradedMap Convolution::act(const GradedMap& g, const GradedMap& x) const {
    if (g.target() != Space::ground()) throw SpaceMismatch("acting element must land in k");
    return star(compose(A_.u, g), x);
}

// ---- polynomial families

Poly::Poly(const Space& src, const Space& tgt, int deg)
    : src_(src), tgt_(tgt), deg_(deg), c_{GradedMap(src, tgt, deg)} {}

Poly::Poly(const GradedMap& constant)
    : src_(constant.source()), tgt_(constant.target()), deg_(constant.degree()), c_{constant} {}

Poly::Poly(std::vector<GradedMap> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw DimensionError("polynomial family needs a coefficient");
    src_ = c_.front().source();
    tgt_ = c_.front().target();
    deg_ = c_.front().degree();
}

GradedMap Poly::coeff(std::size_t k) const {
    if (k < c_.size()) return c_[k];
    return GradedMap(src_, tgt_, deg_);
}

GradedMap Poly::at(const Scalar& t) const {
    GradedMap r(src_, tgt_, deg_);
    for (std::size_t k = c_.size(); k-- > 0;) r = t * r + c_[k];
    return r;
}

Poly Poly::derivative() const {
    std::vector<GradedMap> out;
    for (std::size_t k = 1; k < c_.size(); ++k) out.push_back(Scalar(static_cast<long>(k)) * c_[k]);
    if (out.empty()) return Poly(src_, tgt_, deg_);
    return Poly(std::move(out));
}

Poly Poly::trimmed() const {
    std::vector<GradedMap> out = c_;
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return Poly(std::move(out));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<GradedMap> out;
    for (std::size_t k = 0; k < std::max(size(), o.size()); ++k) out.push_back(coeff(k) + o.coeff(k));
    return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& o) const { return *this + Scalar(-1) * o; }

Poly operator*(const Scalar& c, const Poly& p) {
    return p.map([&](const GradedMap& m) { return c * m; });
}

bool Poly::operator==(const Poly& o) const {
    for (std::size_t k = 0; k < std::max(size(), o.size()); ++k)
        if (coeff(k) != o.coeff(k)) return false;
    return true;
}

Poly star(const Convolution& C, const Poly& a, const Poly& b) {
    return Poly::product(a, b, [&](const GradedMap& x, const GradedMap& y) { return C.star(x, y); });
}

Poly compose(const Poly& f, const Poly& g) {
    return Poly::product(f, g, [](const GradedMap& x, const GradedMap& y) { return compose(x, y); });
}

Poly compose(const GradedMap& f, const Poly& g) { return compose(Poly(f), g); }
Poly compose(const Poly& f, const GradedMap& g) { return compose(f, Poly(g)); }

// ---- homotopy pairs

HomotopyPair constant_pair(const GradedMap& f, Flavor flavor) {
    return {Poly(f), Poly(f.source(), f.target(), -1), flavor};
}

static void check_flow(Report& r, const HomotopyPair& hp, const GradedMap& dS, const GradedMap& dT) {
    r.expect("f has degree 0", hp.f.degree() == 0);
    r.expect("ξ has degree -1", hp.xi.degree() == -1);
    std::size_t n = std::max(hp.f.size(), hp.xi.size() + 1);
    for (std::size_t k = 0; k + 1 < n; ++k)
        r.expect_equal("flow: coefficient t^" + std::to_string(k),
                       Scalar(static_cast<long>(k + 1)) * hp.f.coeff(k + 1),
                       hom_differential(hp.xi.coeff(k), dS, dT));
}

static std::size_t span_of(const HomotopyPair& hp) { return hp.f.size() + hp.xi.size(); }

static void check_algebra_conditions(Report& r, const HomotopyPair& hp, const CdgAlgebra& src,
                                     const CdgAlgebra& dst) {
    r.merge(verify_algebra_morphism(hp.f.coeff(0), src, dst), "f(0): ");
    for (std::size_t k = 0; k < hp.xi.size(); ++k)
        r.expect_zero("ξ∘u = 0 at t^" + std::to_string(k), compose(hp.xi.coeff(k), src.u));
    for (std::size_t k = 0; k < span_of(hp); ++k) {
        GradedMap rhs(tensor(src.space, src.space), dst.space, -1);
        for (std::size_t i = 0; i <= k; ++i) {
            GradedMap fi = hp.f.coeff(i), xj = hp.xi.coeff(k - i);
            rhs += compose(dst.m, tmap(fi, xj) + tmap(xj, fi));
        }
        r.expect_equal("ξ∘m = m∘(f⊗ξ + ξ⊗f) at t^" + std::to_string(k), compose(hp.xi.coeff(k), src.m),
                       rhs);
    }
}

Report verify_homotopy_pair(const HomotopyPair& hp, const CdgAlgebra& src, const CdgAlgebra& dst) {
    if (hp.flavor != Flavor::algebra) throw FlavorMismatch("expected an algebra pair");
    Report r;
    r.title = "homotopy pair " + src.name + " -> " + dst.name;
    check_flow(r, hp, src.d, dst.d);
    check_algebra_conditions(r, hp, src, dst);
    return r;
}

Report verify_homotopy_pair(const HomotopyPair& hp, const HopfData& src, const HopfData& dst) {
    if (hp.flavor == Flavor::tangential) throw FlavorMismatch("tangential pair between Hopf algebras");
    Report r;
    r.title = "homotopy pair " + src.name + " -> " + dst.name;
    check_flow(r, hp, src.d, dst.d);
    check_algebra_conditions(r, hp, src.algebra(), dst.algebra());
    if (hp.flavor == Flavor::hopf) {
        GradedMap f0 = hp.f.coeff(0);
        r.expect_equal("f(0): ε'∘f = ε", compose(dst.eps, f0), src.eps);
        r.expect_equal("f(0): Δ'∘f = (f⊗f)∘Δ", compose(dst.delta, f0), compose(tmap(f0, f0), src.delta));
        for (std::size_t k = 0; k < hp.xi.size(); ++k)
            r.expect_zero("ε'∘ξ = 0 at t^" + std::to_string(k), compose(dst.eps, hp.xi.coeff(k)));
        for (std::size_t k = 0; k < span_of(hp); ++k) {
            GradedMap rhs(src.space, tensor(dst.space, dst.space), -1);
            for (std::size_t i = 0; i <= k; ++i) {
                GradedMap fi = hp.f.coeff(i), xj = hp.xi.coeff(k - i);
                rhs += compose(tmap(fi, xj) + tmap(xj, fi), src.delta);
            }
            r.expect_equal("Δ'∘ξ = (f⊗ξ + ξ⊗f)∘Δ at t^" + std::to_string(k),
                           compose(dst.delta, hp.xi.coeff(k)), rhs);
        }
    }
    return r;
}

Report verify_homotopy_pair(const HomotopyPair& hp, const Convolution& C) {
    if (hp.flavor == Flavor::algebra) return verify_homotopy_pair(hp, C.B().algebra(), C.A());
    if (hp.flavor != Flavor::tangential) throw FlavorMismatch("Hopf pair on Hom(B, A)");
    Report r;
    r.title = "tangential homotopy pair " + C.B().name + " -> " + C.A().name;
    check_flow(r, hp, C.B().d, C.A().d);
    r.merge(C.tangential_report(hp.f.coeff(0)), "υ(0): ");
    GradedMap e = C.e();
    for (std::size_t k = 0; k < hp.xi.size(); ++k) {
        GradedMap s = hp.xi.coeff(k);
        r.expect_zero("σ∘u = 0 at t^" + std::to_string(k), compose(s, C.B().u));
        r.expect_equal("σ∘m = m∘(e⊗σ + σ⊗e) at t^" + std::to_string(k), compose(s, C.B().m),
                       compose(C.A().m, tmap(e, s) + tmap(s, e)));
    }
    return r;
}

std::optional<HomotopyPair> search_homotopy(const Convolution& C, const GradedMap& g,
                                            const GradedMap& gt, unsigned D) {
    if (!C.is_group_element(g) || !C.is_group_element(gt))
        throw NotGroupElement("search_homotopy endpoints");
    if (g == gt) return constant_pair(g);
    const HopfData& B = C.B();
    const CdgAlgebra& A = C.A();
    const GradedMap h = gt - g;
    const Space BB = tensor(B.space, B.space);
    auto basis = hom_basis(B.space, A.space, -1);

    // equations: flow (D+1), unit (D+1), multiplicative (D+2)
    const std::size_t n_eq = 3 * (D + 1) + 1;
    auto blank = [&]() {
        std::vector<GradedMap> eq;
        for (unsigned k = 0; k <= D; ++k) eq.push_back(GradedMap(B.space, A.space, 0));
        for (unsigned k = 0; k <= D; ++k) eq.push_back(GradedMap(Space::ground(), A.space, -1));
        for (unsigned k = 0; k <= D + 1; ++k) eq.push_back(GradedMap(BB, A.space, -1));
        return eq;
    };
    LinearSystem sys;
    for (unsigned k = 0; k <= D; ++k)
        for (auto& b : basis) {
            auto eq = blank();
            eq[k] = C.d(b);
            eq[D + 1 + k] = compose(b, B.u);
            eq[2 * (D + 1) + k] = compose(b, B.m) - compose(A.m, tmap(g, b) + tmap(b, g));
            eq[2 * (D + 1) + k + 1] = -compose(A.m, tmap(h, b) + tmap(b, h));
            sys.add_variable(eq);
        }
    auto rhs = blank();
    rhs[0] = h;
    (void)n_eq;
    auto x = sys.solve(rhs);
    if (!x) return std::nullopt;
    std::vector<GradedMap> xi;
    for (unsigned k = 0; k <= D; ++k) {
        std::vector<Scalar> part(x->begin() + static_cast<long>(k * basis.size()),
                                 x->begin() + static_cast<long>((k + 1) * basis.size()));
        xi.push_back(combine(basis, part, B.space, A.space, -1));
    }
    HomotopyPair hp{Poly(std::vector<GradedMap>{g, h}), Poly(std::move(xi)).trimmed(), Flavor::algebra};
    return hp;
}

static void require(const HomotopyPair& p, Flavor f, const char* what) {
    if (p.flavor != f) throw FlavorMismatch(what);
}

HomotopyPair transport_product(const Convolution& C, const HomotopyPair& p1, const HomotopyPair& p2) {
    require(p1, Flavor::algebra, "product transport needs algebra pairs");
    require(p2, Flavor::algebra, "product transport needs algebra pairs");
    return {star(C, p1.f, p2.f), star(C, p1.xi, p2.f) + star(C, p1.f, p2.xi), Flavor::algebra};
}

HomotopyPair transport_antipode(const Convolution& C, const HomotopyPair& p) {
    require(p, Flavor::algebra, "antipode transport needs an algebra pair");
    const GradedMap& S = C.B().S();
    return {compose(p.f, S), compose(p.xi, S), Flavor::algebra};
}

HomotopyPair transport_postcompose(const HomotopyPair& fa, const HomotopyPair& p) {
    require(fa, Flavor::algebra, "postcomposition needs an algebra pair A -> A'");
    require(p, Flavor::algebra, "postcomposition needs an algebra pair B -> A");
    return {compose(fa.f, p.f), compose(fa.f, p.xi) + compose(fa.xi, p.f), Flavor::algebra};
}

HomotopyPair transport_precompose(const HomotopyPair& psi, const HomotopyPair& p) {
    require(psi, Flavor::hopf, "precomposition needs a Hopf pair B -> B'");
    require(p, Flavor::algebra, "precomposition needs an algebra pair B' -> A");
    return {compose(p.f, psi.f), compose(p.xi, psi.f) + compose(p.f, psi.xi), Flavor::algebra};
}

static Poly bracket(const Convolution& C, const Poly& a, const Poly& b) {
    return star(C, a, b) - star(C, b, a);
}

HomotopyPair transport_bracket(const Convolution& C, const HomotopyPair& s1, const HomotopyPair& s2) {
    require(s1, Flavor::tangential, "bracket transport needs tangential pairs");
    require(s2, Flavor::tangential, "bracket transport needs tangential pairs");
    return {bracket(C, s1.f, s2.f), bracket(C, s1.xi, s2.f) + bracket(C, s1.f, s2.xi),
            Flavor::tangential};
}

HomotopyPair transport_lie_postcompose(const HomotopyPair& fa, const HomotopyPair& s) {
    require(fa, Flavor::algebra, "postcomposition needs an algebra pair A -> A'");
    require(s, Flavor::tangential, "postcomposition needs a tangential pair");
    return {compose(fa.f, s.f), compose(fa.f, s.xi) + compose(fa.xi, s.f), Flavor::tangential};
}

HomotopyPair transport_lie_precompose(const HomotopyPair& psi, const HomotopyPair& s) {
    require(psi, Flavor::hopf, "precomposition needs a Hopf pair B -> B'");
    require(s, Flavor::tangential, "precomposition needs a tangential pair");
    return {compose(s.f, psi.f), compose(s.f, psi.xi) + compose(s.xi, psi.f), Flavor::tangential};
}

HomotopyPair transport_exp(const Convolution& C, const HomotopyPair& s) {
    require(s, Flavor::tangential, "exp transport needs a tangential pair");
    unsigned N = C.conilpotency_index();
    const Poly& v = s.f;
    const Poly& sig = s.xi;
    std::vector<Poly> pw{Poly(C.e())};
    for (unsigned n = 1; n <= N; ++n) pw.push_back(star(C, pw.back(), v));
    Poly g = pw[0];
    Poly lam(C.B().space, C.A().space, -1);
    for (unsigned n = 1; n <= N; ++n) {
        Scalar c = 1 / factorial(n);
        g = g + c * pw[n];
        for (unsigned j = 1; j <= n; ++j) lam = lam + c * star(C, star(C, pw[j - 1], sig), pw[n - j]);
    }
    return {g.trimmed(), lam.trimmed(), Flavor::algebra};
}

HomotopyPair transport_ln(const Convolution& C, const HomotopyPair& p) {
    require(p, Flavor::algebra, "ln transport needs an algebra pair");
    unsigned N = C.conilpotency_index();
    Poly gb = p.f - Poly(C.e());
    std::vector<Poly> pw{Poly(C.e())};
    for (unsigned n = 1; n <= N; ++n) pw.push_back(star(C, pw.back(), gb));
    Poly v(C.B().space, C.A().space, 0);
    Poly sig(C.B().space, C.A().space, -1);
    for (unsigned n = 1; n <= N; ++n) {
        Scalar c(-parity_sign(n), n);
        v = v + c * pw[n];
        for (unsigned j = 1; j <= n; ++j) sig = sig + c * star(C, star(C, pw[j - 1], p.xi), pw[n - j]);
    }
    return {v.trimmed(), sig.trimmed(), Flavor::tangential};
}

}  // namespace dgh
