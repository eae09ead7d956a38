#include "dgh/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "dgh/cohomology.hpp"
#include "dgh/errors.hpp"
#include "dgh/rigidity.hpp"
#include "json.hpp"

namespace dgh {

bool Outcome::ok() const {
    for (auto& r : reports)
        if (!r.ok()) return false;
    return true;
}

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"verify", "antipode", "star",        "exp",
                                                "ln",     "bracket",  "homotopy",    "dualize",
                                                "reconstruct", "subcomodule", "cohomology"};
    return names;
}

namespace {

// Runs one unit of work; library errors become a failed check instead of aborting.
void guarded(Outcome& o, const std::string& title, const std::function<void(Report&)>& body) {
    Report r;
    r.title = title;
    try {
        body(r);
    } catch (const Error& e) {
        r.expect("completed", false, e.what());
    }
    o.reports.push_back(std::move(r));
}

std::vector<const Element*> elements_of(const Bundle& b, ElementKind kind) {
    std::vector<const Element*> out;
    for (auto& e : b.elements)
        if (e.kind == kind) out.push_back(&e);
    return out;
}

// Elements grouped by (source, target).
std::map<std::pair<std::string, std::string>, std::vector<const Element*>> by_pair(const Bundle& b,
                                                                                   ElementKind kind) {
    std::map<std::pair<std::string, std::string>, std::vector<const Element*>> out;
    for (auto* e : elements_of(b, kind)) out[{e->source, e->target}].push_back(e);
    return out;
}

std::vector<const BundleComodule*> comodules_over(const Bundle& b, const std::string& hopf) {
    std::vector<const BundleComodule*> out;
    for (auto& c : b.comodules)
        if (c.over == hopf) out.push_back(&c);
    return out;
}

bool has_name(const Bundle& b, const std::string& n) {
    for (auto& e : b.elements)
        if (e.name == n) return true;
    return false;
}

void cmd_verify(Outcome& o, const Bundle& b, const std::string& kind) {
    static const std::vector<std::string> kinds{"auto",     "algebra", "coalgebra", "bialgebra", "hopf",
                                                "comodule", "group",   "tangential", "morphism", "complex"};
    if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end())
        throw std::invalid_argument("unknown --kind '" + kind + "'");
    auto want = [&](const char* k) { return kind == "auto" || kind == k; };
    if (want("complex"))
        for (auto& c : b.complexes)
            guarded(o, "complex " + c.name, [&](Report& r) {
                r.expect_zero("d∘d = 0", compose(c.complex.d, c.complex.d));
            });
    if (want("algebra"))
        for (auto& a : b.algebras) guarded(o, "algebra " + a.name, [&](Report& r) { r.merge(verify_algebra(a)); });
    for (auto& h : b.hopf) {
        if (kind == "auto") {
            guarded(o, "Hopf data " + h.name, [&](Report& r) {
                if (h.antipode) {
                    r.merge(verify_structure(h, StructureKind::hopf));
                    r.merge(verify_antipode_properties(h), "antipode: ");
                } else {
                    r.merge(verify_structure(h, StructureKind::bialgebra));
                }
            });
        } else if (kind == "algebra" || kind == "coalgebra" || kind == "bialgebra" || kind == "hopf") {
            StructureKind k = kind == "algebra"     ? StructureKind::algebra
                              : kind == "coalgebra" ? StructureKind::coalgebra
                              : kind == "bialgebra" ? StructureKind::bialgebra
                                                    : StructureKind::hopf;
            guarded(o, kind + " " + h.name, [&](Report& r) {
                r.merge(verify_structure(h, k));
                if (k == StructureKind::hopf) r.merge(verify_antipode_properties(h), "antipode: ");
            });
        }
    }
    if (want("comodule"))
        for (auto& c : b.comodules)
            guarded(o, "comodule " + c.comodule.name,
                    [&](Report& r) { r.merge(verify_comodule(c.comodule, b.find_hopf(c.over))); });
    for (auto& e : b.elements) {
        if (e.kind == ElementKind::group && want("group"))
            guarded(o, "group element " + e.name, [&](Report& r) {
                r.merge(Convolution(b.find_hopf(e.source), b.find_algebra(e.target)).group_element_report(e.map));
            });
        if (e.kind == ElementKind::tangential && want("tangential"))
            guarded(o, "tangential element " + e.name, [&](Report& r) {
                r.merge(Convolution(b.find_hopf(e.source), b.find_algebra(e.target)).tangential_report(e.map));
            });
    }
    if (want("morphism"))
        for (auto& m : b.morphisms)
            guarded(o, "comodule map " + m.name, [&](Report& r) {
                const Comodule& C = b.find_comodule(m.from);
                const Comodule& C2 = b.find_comodule(m.to);
                std::string over;
                for (auto& c : b.comodules)
                    if (c.comodule.name == m.from) over = c.over;
                r.merge(comodule_morphism_report(m.map, C, C2, b.find_hopf(over)));
            });
}

void cmd_antipode(Outcome& o, const Bundle& b) {
    for (std::size_t i = 0; i < b.hopf.size(); ++i) {
        const HopfData& h = b.hopf[i];
        guarded(o, "antipode of " + h.name, [&](Report& r) {
            HopfData bi = h;
            bi.antipode.reset();
            auto S = solve_antipode(bi);
            r.expect("antipode exists", S.has_value());
            if (!S) return;
            if (h.antipode) r.expect_equal("stored antipode is the solved one", *h.antipode, *S);
            o.results.push_back({"ς_" + h.name, *S});
            o.updated.hopf[i].antipode = *S;
        });
    }
}

void cmd_star(Outcome& o, const Bundle& b) {
    for (auto& [key, gs] : by_pair(b, ElementKind::group)) {
        guarded(o, "convolution " + key.first + " -> " + key.second, [&, &gs = gs, &key = key](Report& r) {
            Convolution C(b.find_hopf(key.first), b.find_algebra(key.second));
            GradedMap e = C.e();
            for (auto* g : gs) {
                r.expect_equal("e⋆" + g->name + " = " + g->name, C.star(e, g->map), g->map);
                r.expect_equal(g->name + "⋆e = " + g->name, C.star(g->map, e), g->map);
                if (C.B().antipode)
                    r.expect_equal(g->name + "⋆(" + g->name + "∘ς) = e", C.star(g->map, C.inverse(g->map)), e);
                for (auto* h : gs) {
                    GradedMap p = C.star(g->map, h->map);
                    r.merge(C.group_element_report(p), g->name + "⋆" + h->name + ": ");
                    o.results.push_back({g->name + "⋆" + h->name, p});
                    for (auto* k : gs)
                        r.expect_equal("(" + g->name + "⋆" + h->name + ")⋆" + k->name + " associates",
                                       C.star(p, k->map), C.star(g->map, C.star(h->map, k->map)));
                }
            }
        });
    }
}

void cmd_exp(Outcome& o, const Bundle& b) {
    for (auto* v : elements_of(b, ElementKind::tangential))
        guarded(o, "exp of " + v->name, [&](Report& r) {
            Convolution C(b.find_hopf(v->source), b.find_algebra(v->target));
            GradedMap g = C.exp(v->map);
            r.merge(C.group_element_report(g), "exp: ");
            r.expect_equal("ln(exp) = id", C.ln(g), v->map);
            std::string n = "exp(" + v->name + ")";
            o.results.push_back({n, g});
            if (!has_name(o.updated, n)) o.updated.elements.push_back({n, ElementKind::group, v->source, v->target, g});
        });
}

void cmd_ln(Outcome& o, const Bundle& b) {
    for (auto* g : elements_of(b, ElementKind::group))
        guarded(o, "ln of " + g->name, [&](Report& r) {
            Convolution C(b.find_hopf(g->source), b.find_algebra(g->target));
            GradedMap v = C.ln(g->map);
            r.merge(C.tangential_report(v), "ln: ");
            r.expect_equal("exp(ln) = id", C.exp(v), g->map);
            std::string n = "ln(" + g->name + ")";
            o.results.push_back({n, v});
            if (!has_name(o.updated, n))
                o.updated.elements.push_back({n, ElementKind::tangential, g->source, g->target, v});
        });
}

void cmd_bracket(Outcome& o, const Bundle& b) {
    for (auto& [key, vs] : by_pair(b, ElementKind::tangential))
        guarded(o, "brackets " + key.first + " -> " + key.second, [&, &vs = vs, &key = key](Report& r) {
            Convolution C(b.find_hopf(key.first), b.find_algebra(key.second));
            for (auto* x : vs)
                for (auto* y : vs) {
                    GradedMap xy = C.bracket(x->map, y->map);
                    r.merge(C.tangential_report(xy), "[" + x->name + "," + y->name + "]: ");
                    r.expect_equal("[" + x->name + "," + y->name + "] = -[" + y->name + "," + x->name + "]", xy,
                                   -C.bracket(y->map, x->map));
                    o.results.push_back({"[" + x->name + "," + y->name + "]", xy});
                    for (auto* z : vs) {
                        GradedMap j = C.bracket(x->map, C.bracket(y->map, z->map)) +
                                      C.bracket(y->map, C.bracket(z->map, x->map)) +
                                      C.bracket(z->map, C.bracket(x->map, y->map));
                        r.expect_zero("Jacobi " + x->name + "," + y->name + "," + z->name, j);
                    }
                }
        });
}

void cmd_homotopy(Outcome& o, const Bundle& b, unsigned D) {
    for (auto& [key, gs] : by_pair(b, ElementKind::group))
        for (std::size_t i = 0; i < gs.size(); ++i)
            for (std::size_t j = i + 1; j < gs.size(); ++j)
                guarded(o, "homotopy " + gs[i]->name + " ~ " + gs[j]->name, [&, &gs = gs, &key = key](Report& r) {
                    Convolution C(b.find_hopf(key.first), b.find_algebra(key.second));
                    auto hp = search_homotopy(C, gs[i]->map, gs[j]->map, D);
                    if (!hp) {
                        o.notes.push_back("no homotopy " + gs[i]->name + " ~ " + gs[j]->name +
                                          " with flow degree <= " + std::to_string(D) +
                                          " (not a proof that none exists)");
                        return;
                    }
                    r.merge(verify_homotopy_pair(*hp, C));
                    for (std::size_t k = 0; k < hp->xi.size(); ++k)
                        o.results.push_back({"ξ[" + gs[i]->name + "," + gs[j]->name + "] t^" + std::to_string(k),
                                             hp->xi.coeff(k)});
                });
}

void cmd_dualize(Outcome& o, const Bundle& b) {
    for (auto& bc : b.comodules) {
        const Comodule& C = bc.comodule;
        const HopfData& B = b.find_hopf(bc.over);
        guarded(o, "dual of " + C.name, [&](Report& r) {
            DualComodule D = dual_comodule(C, B);
            r.merge(verify_comodule(D.dual, B), "dual: ");
            Comodule k = trivial_comodule(B);
            r.merge(comodule_morphism_report(D.ev, tensor_comodule(D.dual, C, B), k, B), "ev: ");
            r.merge(comodule_morphism_report(D.cv, k, tensor_comodule(C, D.dual, B), B), "cv: ");
            RigidPair P = rigid_pair(C, D);
            r.merge(triangle_report(P), "M: ");
            r.merge(triangle_report(flipped(P)), "M∨: ");
            GradedMap I = id(C.space);
            r.expect_equal("I∨ = I", dual_morphism(I, P, P), id(D.dual.space));
            o.results.push_back({"γ of " + D.dual.name, D.dual.gamma});
            for (auto& e : b.elements) {
                if (e.source != bc.over) continue;
                NatEndo eta{B, b.find_algebra(e.target), e.map};
                GradedMap s1 = sigma_component(eta, C), s2 = S_component(eta, C, D);
                r.expect_equal("ς(η)=S(η) for " + e.name, s1, s2);
                if (e.kind == ElementKind::group) {
                    GradedMap x = nat_component(eta, C);
                    GradedMap I2 = id(x.source());
                    r.expect_equal("S(ξ)∘ξ = I for " + e.name, compose(s2, x), I2);
                    r.expect_equal("ξ∘S(ξ) = I for " + e.name, compose(x, s2), I2);
                }
            }
        });
    }
    for (auto& m : b.morphisms)
        guarded(o, "dual of map " + m.name, [&](Report& r) {
            std::string over;
            for (auto& c : b.comodules)
                if (c.comodule.name == m.from) over = c.over;
            const HopfData& B = b.find_hopf(over);
            const Comodule& C = b.find_comodule(m.from);
            const Comodule& C2 = b.find_comodule(m.to);
            DualComodule D = dual_comodule(C, B), D2 = dual_comodule(C2, B);
            RigidPair P = rigid_pair(C, D), P2 = rigid_pair(C2, D2);
            GradedMap pd = dual_morphism(m.map, P, P2);
            r.expect_equal("ev'∘(I⊗ψ) = ev∘(ψ∨⊗I)", compose(P2.ev, tmap(id(P2.dual), m.map)),
                           compose(P.ev, tmap(pd, id(P.object))));
            r.expect_equal("ψ∨∨ = ψ", dual_morphism(pd, flipped(P2), flipped(P)), m.map);
            if (verify_comodule_morphism(m.map, C, C2, B))
                r.merge(comodule_morphism_report(pd, D2.dual, D.dual, B), "ψ∨: ");
            o.results.push_back({m.name + "∨", pd});
        });
}

void cmd_reconstruct(Outcome& o, const Bundle& b, unsigned probe_pairs) {
    for (auto& h : b.hopf) {
        auto cs = comodules_over(b, h.name);
        Comodule reg = regular_comodule(h);
        std::vector<ProbePair> probes{{reg, reg}};
        for (std::size_t i = 0; i < cs.size() && probes.size() < probe_pairs; ++i)
            for (std::size_t j = i; j < cs.size() && probes.size() < probe_pairs; ++j)
                probes.push_back({cs[i]->comodule, cs[j]->comodule});
        for (auto* c : cs)
            guarded(o, "representation of " + c->comodule.name, [&](Report& r) {
                Representation R = representation_of(c->comodule, h);
                Comodule back = comodule_from_rep(R, h);
                r.expect_equal("X(Y(C)) = C", back.gamma, c->comodule.gamma);
                r.expect_equal("Y(X(R)) = R", representation_of(back, h).universal, R.universal);
                for (auto* g : elements_of(b, ElementKind::group))
                    if (g->source == h.name) {
                        CdgAlgebra A = b.find_algebra(g->target);
                        r.expect_equal("ρ_A(" + g->name + ") from the universal element",
                                       rep_component(R, h, g->map, A), rep_from_comodule(c->comodule, h, g->map, A));
                    }
            });
        for (auto& e : b.elements) {
            if (e.source != h.name) continue;
            guarded(o, "reconstruction of " + e.name, [&](Report& r) {
                CdgAlgebra A = b.find_algebra(e.target);
                NatEndo eta{h, A, e.map};
                GradedMap comp = nat_component(eta, reg);
                r.expect_equal("ğ(η̆(α)) = α", extract_alpha(comp, h, A), e.map);
                r.expect_equal("η̆(e) = I", nat_component(NatEndo{h, A, Convolution(h, A).e()}, reg),
                               id(tensor(h.space, A.space)));
                Convolution C(h, A);
                for (auto& e2 : b.elements)
                    if (e2.source == e.source && e2.target == e.target) {
                        GradedMap lhs = nat_component(NatEndo{h, A, C.star(e.map, e2.map)}, reg);
                        GradedMap rhs = compose(comp, nat_component(NatEndo{h, A, e2.map}, reg));
                        r.expect_equal("η̆(" + e.name + "⋆" + e2.name + ") = η̆∘η̆", lhs, rhs);
                    }
                bool tensor_nat = is_tensor_nat(eta, probes);
                bool group = C.is_group_element(e.map);
                r.expect("tensor natural iff group element", tensor_nat == group,
                         std::string("tensor natural: ") + (tensor_nat ? "yes" : "no") +
                             ", group element: " + (group ? "yes" : "no"));
            });
        }
    }
}

void cmd_subcomodule(Outcome& o, const Bundle& b) {
    for (auto& bc : b.comodules) {
        const Comodule& C = bc.comodule;
        guarded(o, "subcomodules of " + C.name, [&](Report& r) {
            const HopfData& B = b.find_hopf(bc.over);
            for (std::size_t j = 0; j < C.space.dim(); ++j) {
                Vec m{{j, Scalar(1)}};
                Subcomodule s = finite_subcomodule(C, m, B);
                std::string at = " for " + C.space.label(j);
                r.merge(s.checks, "⟨" + C.space.label(j) + "⟩: ");
                LinearSystem sys;
                for (std::size_t k = 0; k < s.sub.space.dim(); ++k)
                    if (s.sub.space.degree(k) == C.space.degree(j)) {
                        GradedMap v(Space::ground(), C.space, C.space.degree(j));
                        v.set_col(0, s.inclusion.col(k));
                        sys.add_variable({v});
                    }
                GradedMap target(Space::ground(), C.space, C.space.degree(j));
                target.set_col(0, m);
                bool contains = sys.variables() > 0 && sys.solve({target}).has_value();
                r.expect("contains the generator" + at, contains);
                r.expect("one step already closed" + at, s.one_step_closed);
                o.results.push_back({"inclusion ⟨" + C.space.label(j) + "⟩ -> " + C.name, s.inclusion});
            }
        });
    }
}

void cmd_cohomology(Outcome& o, const Bundle& b) {
    for (auto& c : b.complexes)
        guarded(o, "cohomology of " + c.name, [&](Report& r) {
            for (auto order : {PivotOrder::forward, PivotOrder::reverse}) {
                SDR s = compute_sdr(c.complex, std::nullopt, "H(" + c.name + ")", order);
                r.merge(verify_sdr(s, c.complex), order == PivotOrder::forward ? "forward: " : "reverse: ");
            }
        });
    for (auto& a : b.algebras)
        guarded(o, "cohomology of " + a.name, [&](Report& r) {
            SDR s1 = compute_sdr(a.complex(), a.u, "H(" + a.name + ")", PivotOrder::forward);
            SDR s2 = compute_sdr(a.complex(), a.u, "H(" + a.name + ")", PivotOrder::reverse);
            r.merge(verify_sdr(s1, a.complex(), a.u), "forward: ");
            r.merge(verify_sdr(s2, a.complex(), a.u), "reverse: ");
            CdgAlgebra h1 = induced_algebra_on_H(a, s1), h2 = induced_algebra_on_H(a, s2);
            r.merge(verify_algebra(h1), "H: ");
            r.expect_equal("m_H independent of the splitting", h1.m, h2.m);
            r.expect_equal("u_H independent of the splitting", h1.u, h2.u);
            o.results.push_back({"m on " + h1.space.name(), h1.m});
        });
    for (auto& h : b.hopf)
        guarded(o, "cohomology of " + h.name, [&](Report& r) {
            CochainComplex cx{h.space, h.d};
            SDR s1 = compute_sdr(cx, h.u, "H(" + h.name + ")", PivotOrder::forward);
            SDR s2 = compute_sdr(cx, h.u, "H(" + h.name + ")", PivotOrder::reverse);
            r.merge(verify_sdr(s1, cx, h.u), "forward: ");
            r.merge(verify_sdr(s2, cx, h.u), "reverse: ");
            if (!h.antipode) {
                o.notes.push_back(h.name + " has no antipode; induced structure skipped");
                return;
            }
            HopfData H1 = induced_hopf_on_H(h, s1), H2 = induced_hopf_on_H(h, s2);
            r.merge(verify_structure(H1, StructureKind::hopf), "H: ");
            r.expect_equal("m_H independent of the splitting", H1.m, H2.m);
            r.expect_equal("Δ_H independent of the splitting", H1.delta, H2.delta);
            r.expect_equal("u_H independent of the splitting", H1.u, H2.u);
            r.expect_equal("ε_H independent of the splitting", H1.eps, H2.eps);
            r.expect_equal("ς_H independent of the splitting", H1.S(), H2.S());
            bool nonneg = true;
            for (int k : h.space.populated_degrees()) nonneg = nonneg && k >= 0;
            if (nonneg) r.merge(verify_nonneg_reduction(h, s1), "degree 0: ");
            o.results.push_back({"m on " + H1.space.name(), H1.m});
        });
}

}  // namespace

Outcome run_command(const std::string& command, const Bundle& b, const CommandOptions& opts) {
    Outcome o;
    o.command = command;
    o.updated = b;
    if (command == "verify") cmd_verify(o, b, opts.kind);
    else if (command == "antipode") cmd_antipode(o, b);
    else if (command == "star") cmd_star(o, b);
    else if (command == "exp") cmd_exp(o, b);
    else if (command == "ln") cmd_ln(o, b);
    else if (command == "bracket") cmd_bracket(o, b);
    else if (command == "homotopy") cmd_homotopy(o, b, opts.flow_degree);
    else if (command == "dualize") cmd_dualize(o, b);
    else if (command == "reconstruct") cmd_reconstruct(o, b, opts.probe_pairs);
    else if (command == "subcomodule") cmd_subcomodule(o, b);
    else if (command == "cohomology") cmd_cohomology(o, b);
    else throw std::invalid_argument("unknown command '" + command + "'");
    if (o.reports.empty() && o.results.empty()) o.notes.push_back("nothing in the bundle applies to " + command);
    return o;
}

std::string render_text(const Outcome& o) {
    std::ostringstream os;
    std::size_t total = 0, failed = 0;
    for (auto& r : o.reports) {
        os << r.text() << "\n";
        total += r.checks.size();
        failed += r.failures().size();
    }
    for (auto& m : o.results) os << m.name << ": " << m.map.describe() << "\n\n";
    for (auto& n : o.notes) os << "note: " << n << "\n";
    os << o.command << ": " << total << " checks, " << failed << " failed\n";
    return os.str();
}

std::string render_json(const Outcome& o) {
    using json = nlohmann::ordered_json;
    auto check_json = [](const Check& c) {
        json j{{"name", c.name}, {"pass", c.pass}};
        if (!c.pass) {
            j["witness"] = c.witness;
            j["lhs"] = c.lhs;
            j["rhs"] = c.rhs;
        }
        return j;
    };
    json doc{{"command", o.command}, {"ok", o.ok()}};
    json reports = json::array(), failures = json::array();
    for (auto& r : o.reports) {
        json checks = json::array(), fails = json::array();
        for (auto& c : r.checks) {
            checks.push_back(check_json(c));
            if (!c.pass) {
                fails.push_back(check_json(c));
                json f = check_json(c);
                f["report"] = r.title;
                failures.push_back(f);
            }
        }
        reports.push_back(json{{"title", r.title}, {"ok", r.ok()}, {"checks", checks}, {"failures", fails}});
    }
    doc["reports"] = reports;
    doc["failures"] = failures;
    json results = json::array();
    for (auto& m : o.results) {
        const GradedMap& f = m.map;
        json entries = json::array();
        for (std::size_t c = 0; c < f.source().dim(); ++c)
            for (auto& [r, x] : f.col(c))
                entries.push_back(json::array({f.source().label(c), f.target().label(r), to_string(x)}));
        json blocks = json::array();
        for (int n : f.source().populated_degrees()) {
            Matrix blk = f.block(n);
            json rows = json::array();
            for (std::size_t i = 0; i < blk.rows(); ++i) {
                json row = json::array();
                for (std::size_t j = 0; j < blk.cols(); ++j) row.push_back(to_string(blk(i, j)));
                rows.push_back(row);
            }
            json src = json::array(), tgt = json::array();
            for (auto i : f.source().indices_of_degree(n)) src.push_back(f.source().label(i));
            for (auto i : f.target().indices_of_degree(n + f.degree())) tgt.push_back(f.target().label(i));
            blocks.push_back(json{{"source_degree", n}, {"columns", src}, {"rows", tgt}, {"matrix", rows}});
        }
        results.push_back(json{{"name", m.name},
                               {"source", f.source().name()},
                               {"target", f.target().name()},
                               {"degree", f.degree()},
                               {"entries", entries},
                               {"blocks", blocks}});
    }
    doc["results"] = results;
    doc["notes"] = o.notes;
    return doc.dump(2) + "\n";
}

}  // namespace dgh
