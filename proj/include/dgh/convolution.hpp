#pragma once

#include <optional>
#include <vector>

#include "dgh/structures.hpp"

namespace dgh {

// Hom(B, A) with ⋆, unit e = u_A∘ε_B and differential d_{B,A}.
class Convolution {
public:
    Convolution(HopfData B, CdgAlgebra A);

    const HopfData& B() const { return B_; }
    const CdgAlgebra& A() const { return A_; }

    GradedMap e() const;
    GradedMap zero(int degree = 0) const;
    GradedMap d(const GradedMap& alpha) const;

    GradedMap star(const GradedMap& a, const GradedMap& b) const;
    // m_A^(n)∘(α1⊗...⊗αn)∘Δ_B^(n); the empty product is e
    GradedMap star(const std::vector<GradedMap>& as) const;
    GradedMap power(const GradedMap& a, unsigned n) const;

    bool is_group_element(const GradedMap& g) const;
    Report group_element_report(const GradedMap& g) const;
    GradedMap inverse(const GradedMap& g) const;  // g∘ς

    bool is_tangential(const GradedMap& v) const;
    Report tangential_report(const GradedMap& v) const;
    GradedMap bracket(const GradedMap& a, const GradedMap& b) const;

    // Conilpotency index of B, computed once.
    unsigned conilpotency_index() const;
    GradedMap exp(const GradedMap& v) const;
    GradedMap ln(const GradedMap& g) const;

    // g.x = (u_A∘g)⋆x for g a group element over k
    GradedMap act(const GradedMap& g_over_k, const GradedMap& x) const;

private:
    void check(const GradedMap& a) const;

    HopfData B_;
    CdgAlgebra A_;
    mutable std::optional<unsigned> index_;
};

// Polynomial families in t with map coefficients.
class Poly {
public:
    // Always holds at least one coefficient.
    Poly() = default;
    Poly(const Space& src, const Space& tgt, int deg);
    explicit Poly(const GradedMap& constant);
    explicit Poly(std::vector<GradedMap> coeffs);

    const Space& source() const { return src_; }
    const Space& target() const { return tgt_; }
    int degree() const { return deg_; }
    std::size_t size() const { return c_.size(); }
    const std::vector<GradedMap>& coeffs() const { return c_; }
    // coefficient of t^k, zero past the end
    GradedMap coeff(std::size_t k) const;
    GradedMap at(const Scalar& t) const;
    Poly derivative() const;
    Poly trimmed() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    friend Poly operator*(const Scalar& c, const Poly& p);

    // coefficientwise map of a bilinear operation: (Σa_i t^i, Σb_j t^j) -> Σ op(a_i,b_j) t^{i+j}
    template <class Op>
    static Poly product(const Poly& a, const Poly& b, Op op);
    template <class Op>
    Poly map(Op op) const {
        std::vector<GradedMap> out;
        for (auto& c : c_) out.push_back(op(c));
        return Poly(std::move(out));
    }

    bool operator==(const Poly& o) const;

private:
    Space src_, tgt_;
    int deg_ = 0;
    std::vector<GradedMap> c_;
};

template <class Op>
Poly Poly::product(const Poly& a, const Poly& b, Op op) {
    std::vector<GradedMap> out;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            GradedMap v = op(a.c_[i], b.c_[j]);
            if (out.size() <= i + j) out.resize(i + j + 1, GradedMap(v.source(), v.target(), v.degree()));
            out[i + j] += v;
        }
    return Poly(std::move(out));
}

Poly star(const Convolution& C, const Poly& a, const Poly& b);
Poly compose(const Poly& f, const Poly& g);
Poly compose(const GradedMap& f, const Poly& g);
Poly compose(const Poly& f, const GradedMap& g);

enum class Flavor { algebra, hopf, tangential };

// (f(t), ξ(t)): f of degree 0, ξ of degree -1.
struct HomotopyPair {
    Poly f, xi;
    Flavor flavor = Flavor::algebra;
};

// Flow equation plus the infinitesimal conditions of the flavor, coefficientwise.
Report verify_homotopy_pair(const HomotopyPair& hp, const CdgAlgebra& src, const CdgAlgebra& dst);
Report verify_homotopy_pair(const HomotopyPair& hp, const HopfData& src, const HopfData& dst);
Report verify_homotopy_pair(const HomotopyPair& hp, const Convolution& C);

HomotopyPair constant_pair(const GradedMap& f, Flavor flavor = Flavor::algebra);

// Straight path f(t) = (1-t)g + t g̃, ξ(t) of t-degree <= flow_degree. Sound, not complete.
std::optional<HomotopyPair> search_homotopy(const Convolution& C, const GradedMap& g,
                                            const GradedMap& gt, unsigned flow_degree = 1);

// Transports. Inputs are assumed verified; flavors are checked.
HomotopyPair transport_product(const Convolution& C, const HomotopyPair& p1, const HomotopyPair& p2);
HomotopyPair transport_antipode(const Convolution& C, const HomotopyPair& p);
// (f(t), σ(t)) on algebra maps A -> A', (g(t), λ(t)) on B -> A
HomotopyPair transport_postcompose(const HomotopyPair& fa, const HomotopyPair& p);
// (ψ(t), ξ(t)) Hopf pair B -> B', (g'(t), λ'(t)) on B' -> A
HomotopyPair transport_precompose(const HomotopyPair& psi, const HomotopyPair& p);
HomotopyPair transport_bracket(const Convolution& C, const HomotopyPair& s1, const HomotopyPair& s2);
HomotopyPair transport_lie_postcompose(const HomotopyPair& fa, const HomotopyPair& s);
HomotopyPair transport_lie_precompose(const HomotopyPair& psi, const HomotopyPair& s);
HomotopyPair transport_exp(const Convolution& C, const HomotopyPair& s);
HomotopyPair transport_ln(const Convolution& C, const HomotopyPair& p);

}  // namespace dgh
