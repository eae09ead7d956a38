#include "dgh/bundle.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "dgh/errors.hpp"
#include "json.hpp"

namespace dgh {

using json = nlohmann::ordered_json;

const char* kind_name(ElementKind k) {
    switch (k) {
        case ElementKind::group: return "group";
        case ElementKind::tangential: return "tangential";
        default: return "map";
    }
}

const HopfData& Bundle::find_hopf(const std::string& name) const {
    for (auto& h : hopf)
        if (h.name == name) return h;
    throw ReferenceError("no Hopf algebra named '" + name + "'");
}

CdgAlgebra Bundle::find_algebra(const std::string& name) const {
    for (auto& a : algebras)
        if (a.name == name) return a;
    for (auto& h : hopf)
        if (h.name == name) return h.algebra();
    throw ReferenceError("no algebra named '" + name + "'");
}

const Comodule& Bundle::find_comodule(const std::string& name) const {
    for (auto& c : comodules)
        if (c.comodule.name == name) return c.comodule;
    throw ReferenceError("no comodule named '" + name + "'");
}

namespace {

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
            ++col;
        }
    }
    return {line, col};
}

// Semantic reading of an already well-formed document. Errors about a specific
// literal are positioned at its first occurrence in the source text.
class Reader {
public:
    explicit Reader(const std::string& text) : text_(text) {}

    [[noreturn]] void fail_at(const std::string& what, const std::string& needle) const {
        std::size_t off = needle.empty() ? std::string::npos : text_.find(needle);
        auto [l, c] = line_col(text_, off == std::string::npos ? 0 : off);
        throw ParseError(what, l, c);
    }

    const json& field(const json& obj, const char* key, const std::string& where) const {
        if (!obj.is_object()) fail_at(where + " must be an object", "");
        auto it = obj.find(key);
        if (it == obj.end()) fail_at(where + " lacks \"" + key + "\"", "");
        return *it;
    }

    void only(const json& obj, std::set<std::string> keys, const std::string& where) const {
        for (auto& [k, v] : obj.items())
            if (!keys.count(k)) fail_at(where + ": unknown key \"" + k + "\"", "\"" + k + "\"");
    }

    std::string str(const json& j, const std::string& where) const {
        if (!j.is_string()) fail_at(where + " must be a string", "");
        return j.get<std::string>();
    }

    Scalar scalar(const json& j, const std::string& where) const {
        if (j.is_number_integer()) return Scalar(j.get<long>());
        if (!j.is_string()) fail_at(where + ": scalars are written as \"p/q\" strings", "");
        auto s = parse_scalar(j.get<std::string>());
        if (!s) fail_at(where + ": bad scalar \"" + j.get<std::string>() + "\"", "\"" + j.get<std::string>() + "\"");
        return *s;
    }

    Bundle read(const json& doc) {
        if (!doc.is_object()) fail_at("bundle must be a JSON object", "");
        only(doc, {"spaces", "complexes", "algebras", "hopf", "comodules", "elements", "morphisms"}, "bundle");
        if (doc.contains("spaces"))
            for (auto& s : doc["spaces"]) read_atom(s);
        if (doc.contains("complexes"))
            for (auto& c : doc["complexes"]) {
                only(c, {"name", "space", "d"}, "complex");
                Space V = space(field(c, "space", "complex"));
                b_.complexes.push_back({str(field(c, "name", "complex"), "complex name"),
                                        {V, entries(field(c, "d", "complex"), V, V, 1, "d")}});
            }
        if (doc.contains("algebras"))
            for (auto& a : doc["algebras"]) {
                only(a, {"name", "space", "d", "u", "m"}, "algebra");
                CdgAlgebra x;
                x.name = str(field(a, "name", "algebra"), "algebra name");
                x.space = space(field(a, "space", "algebra"));
                read_algebra_maps(a, x.space, x.d, x.u, x.m, x.name);
                b_.algebras.push_back(x);
            }
        if (doc.contains("hopf"))
            for (auto& h : doc["hopf"]) {
                only(h, {"name", "space", "d", "u", "m", "eps", "delta", "antipode"}, "hopf");
                HopfData x;
                x.name = str(field(h, "name", "hopf"), "hopf name");
                x.space = space(field(h, "space", "hopf"));
                read_algebra_maps(h, x.space, x.d, x.u, x.m, x.name);
                const Space& k = Space::ground();
                x.eps = entries(field(h, "eps", x.name), x.space, k, 0, x.name + ".eps");
                x.delta = entries(field(h, "delta", x.name), x.space, tensor(x.space, x.space), 0, x.name + ".delta");
                if (h.contains("antipode"))
                    x.antipode = entries(h["antipode"], x.space, x.space, 0, x.name + ".antipode");
                b_.hopf.push_back(x);
            }
        if (doc.contains("comodules"))
            for (auto& c : doc["comodules"]) {
                only(c, {"name", "over", "space", "d", "gamma"}, "comodule");
                BundleComodule x;
                x.over = str(field(c, "over", "comodule"), "comodule over");
                const HopfData& B = b_.find_hopf(x.over);
                x.comodule.name = str(field(c, "name", "comodule"), "comodule name");
                x.comodule.space = space(field(c, "space", "comodule"));
                const Space& M = x.comodule.space;
                x.comodule.d = entries(field(c, "d", "comodule"), M, M, 1, x.comodule.name + ".d");
                x.comodule.gamma = entries(field(c, "gamma", "comodule"), M, tensor(M, B.space), 0,
                                           x.comodule.name + ".gamma");
                b_.comodules.push_back(x);
            }
        if (doc.contains("elements"))
            for (auto& e : doc["elements"]) {
                only(e, {"name", "kind", "source", "target", "degree", "entries"}, "element");
                Element x;
                x.name = str(field(e, "name", "element"), "element name");
                std::string kind = str(field(e, "kind", "element"), "element kind");
                if (kind == "group") x.kind = ElementKind::group;
                else if (kind == "tangential") x.kind = ElementKind::tangential;
                else if (kind == "map") x.kind = ElementKind::map;
                else fail_at("unknown element kind \"" + kind + "\"", "\"" + kind + "\"");
                x.source = str(field(e, "source", "element"), "element source");
                x.target = str(field(e, "target", "element"), "element target");
                const json& deg = field(e, "degree", "element");
                if (!deg.is_number_integer()) fail_at("element degree must be an integer", "");
                x.map = entries(field(e, "entries", "element"), b_.find_hopf(x.source).space,
                                b_.find_algebra(x.target).space, deg.get<int>(), x.name);
                b_.elements.push_back(x);
            }
        if (doc.contains("morphisms"))
            for (auto& e : doc["morphisms"]) {
                only(e, {"name", "from", "to", "degree", "entries"}, "morphism");
                ComoduleMap x;
                x.name = str(field(e, "name", "morphism"), "morphism name");
                x.from = str(field(e, "from", "morphism"), "morphism from");
                x.to = str(field(e, "to", "morphism"), "morphism to");
                const json& deg = field(e, "degree", "morphism");
                if (!deg.is_number_integer()) fail_at("morphism degree must be an integer", "");
                x.map = entries(field(e, "entries", "morphism"), b_.find_comodule(x.from).space,
                                b_.find_comodule(x.to).space, deg.get<int>(), x.name);
                b_.morphisms.push_back(x);
            }
        return b_;
    }

private:
    void read_atom(const json& s) {
        only(s, {"name", "basis"}, "space");
        std::string name = str(field(s, "name", "space"), "space name");
        if (name == "k" || atoms_.count(name)) throw ReferenceError("space '" + name + "' declared twice");
        std::vector<std::pair<std::string, int>> basis;
        const json& bs = field(s, "basis", "space " + name);
        if (!bs.is_array()) fail_at("basis of " + name + " must be an array", "");
        for (auto& e : bs) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_number_integer())
                fail_at("basis entries of " + name + " are [label, degree]", "");
            basis.push_back({e[0].get<std::string>(), e[1].get<int>()});
        }
        auto a = make_atom(name, basis);
        atoms_[name] = a;
        b_.atoms.push_back(a);
    }

    Space space(const json& j) const {
        if (!j.is_array() || j.empty()) fail_at("a space is a non-empty list of space names", "");
        std::vector<AtomPtr> f;
        for (auto& n : j) {
            std::string name = str(n, "space name");
            if (name == "k") {
                f.push_back(Space::ground().factors().front());
                continue;
            }
            auto it = atoms_.find(name);
            if (it == atoms_.end()) throw ReferenceError("unknown space '" + name + "'");
            f.push_back(it->second);
        }
        return Space(f);
    }

    std::size_t index(const Space& V, const json& labels, const std::string& where) const {
        if (!labels.is_array() || labels.size() != V.factors().size())
            throw DimensionError(where + ": expected " + std::to_string(V.factors().size()) +
                                 " labels for " + V.name());
        std::vector<std::string> t;
        for (auto& l : labels) t.push_back(str(l, where));
        long i = V.find(t);
        if (i < 0) {
            std::string joined;
            for (auto& s : t) joined += (joined.empty() ? "" : "⊗") + s;
            throw ReferenceError(where + ": no basis element " + joined + " in " + V.name());
        }
        return static_cast<std::size_t>(i);
    }

    GradedMap entries(const json& j, const Space& src, const Space& tgt, int deg, const std::string& where) const {
        if (!j.is_array()) fail_at(where + " must be a list of entries", "");
        GradedMap f(src, tgt, deg);
        for (auto& e : j) {
            if (!e.is_array() || e.size() != 3) fail_at(where + ": entries are [source, target, scalar]", "");
            std::size_t c = index(src, e[0], where), r = index(tgt, e[1], where);
            Scalar x = scalar(e[2], where);
            if (src.degree(c) + deg != tgt.degree(r))
                throw DimensionError(where + ": entry " + src.label(c) + " -> " + tgt.label(r) +
                                     " does not have degree " + std::to_string(deg));
            f.add_to(r, c, x);
        }
        return f;
    }

    void read_algebra_maps(const json& a, const Space& A, GradedMap& d, GradedMap& u, GradedMap& m,
                           const std::string& name) const {
        d = entries(field(a, "d", name), A, A, 1, name + ".d");
        u = entries(field(a, "u", name), Space::ground(), A, 0, name + ".u");
        m = entries(field(a, "m", name), tensor(A, A), A, 0, name + ".m");
    }

    const std::string& text_;
    std::map<std::string, AtomPtr> atoms_;
    Bundle b_;
};

json space_json(const Space& s) {
    json a = json::array();
    for (auto& f : s.factors()) a.push_back(f->name);
    return a;
}

json entries_json(const GradedMap& f) {
    json out = json::array();
    for (std::size_t c = 0; c < f.source().dim(); ++c)
        for (auto& [r, x] : f.col(c)) {
            json src = json::array(), tgt = json::array();
            for (auto& l : f.source().label_tuple(c)) src.push_back(l);
            for (auto& l : f.target().label_tuple(r)) tgt.push_back(l);
            out.push_back(json::array({src, tgt, to_string(x)}));
        }
    return out;
}

// Objects and lists of objects or entries are spread over lines, one entry per
// line; everything else is written compactly.
void write(std::ostream& os, const json& j, int indent) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        os << "{";
        bool first = true;
        for (auto& [k, v] : j.items()) {
            os << (first ? "\n" : ",\n") << pad << "  " << json(k).dump() << ": ";
            write(os, v, indent + 2);
            first = false;
        }
        os << "\n" << pad << "}";
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        os << "[";
        bool first = true;
        for (auto& v : j) {
            os << (first ? "\n" : ",\n") << pad << "  ";
            if (v.is_object())
                write(os, v, indent + 2);
            else
                os << v.dump();
            first = false;
        }
        os << "\n" << pad << "]";
    } else {
        os << j.dump();
    }
}

}  // namespace

Bundle parse_bundle(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [l, c] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        std::string msg = e.what();
        auto p = msg.find("syntax error");
        throw ParseError(p == std::string::npos ? msg : msg.substr(p), l, c);
    }
    Reader r(text);
    return r.read(doc);
}

Bundle load_bundle(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path, 0, 0);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_bundle(ss.str());
}

std::string serialize_bundle(const Bundle& b) {
    json doc = json::object();
    if (!b.atoms.empty()) {
        json a = json::array();
        for (auto& at : b.atoms) {
            json basis = json::array();
            for (std::size_t i = 0; i < at->dim(); ++i) basis.push_back(json::array({at->labels[i], at->degrees[i]}));
            a.push_back(json{{"name", at->name}, {"basis", basis}});
        }
        doc["spaces"] = a;
    }
    if (!b.complexes.empty()) {
        json a = json::array();
        for (auto& c : b.complexes)
            a.push_back(json{{"name", c.name}, {"space", space_json(c.complex.space)}, {"d", entries_json(c.complex.d)}});
        doc["complexes"] = a;
    }
    if (!b.algebras.empty()) {
        json a = json::array();
        for (auto& x : b.algebras)
            a.push_back(json{{"name", x.name}, {"space", space_json(x.space)}, {"d", entries_json(x.d)},
                             {"u", entries_json(x.u)}, {"m", entries_json(x.m)}});
        doc["algebras"] = a;
    }
    if (!b.hopf.empty()) {
        json a = json::array();
        for (auto& x : b.hopf) {
            json h{{"name", x.name}, {"space", space_json(x.space)}, {"d", entries_json(x.d)},
                   {"u", entries_json(x.u)}, {"m", entries_json(x.m)}, {"eps", entries_json(x.eps)},
                   {"delta", entries_json(x.delta)}};
            if (x.antipode) h["antipode"] = entries_json(*x.antipode);
            a.push_back(h);
        }
        doc["hopf"] = a;
    }
    if (!b.comodules.empty()) {
        json a = json::array();
        for (auto& x : b.comodules)
            a.push_back(json{{"name", x.comodule.name}, {"over", x.over}, {"space", space_json(x.comodule.space)},
                             {"d", entries_json(x.comodule.d)}, {"gamma", entries_json(x.comodule.gamma)}});
        doc["comodules"] = a;
    }
    if (!b.elements.empty()) {
        json a = json::array();
        for (auto& x : b.elements)
            a.push_back(json{{"name", x.name}, {"kind", kind_name(x.kind)}, {"source", x.source},
                             {"target", x.target}, {"degree", x.map.degree()}, {"entries", entries_json(x.map)}});
        doc["elements"] = a;
    }
    if (!b.morphisms.empty()) {
        json a = json::array();
        for (auto& x : b.morphisms)
            a.push_back(json{{"name", x.name}, {"from", x.from}, {"to", x.to}, {"degree", x.map.degree()},
                             {"entries", entries_json(x.map)}});
        doc["morphisms"] = a;
    }
    std::ostringstream os;
    write(os, doc, 0);
    os << "\n";
    return os.str();
}

}  // namespace dgh
