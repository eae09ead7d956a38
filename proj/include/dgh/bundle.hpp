#pragma once

#include <string>
#include <vector>

#include "dgh/comodules.hpp"

namespace dgh {

struct NamedComplex {
    std::string name;
    CochainComplex complex;
};

struct BundleComodule {
    std::string over;  // name of a Hopf algebra in the bundle
    Comodule comodule;
};

enum class ElementKind { map, group, tangential };

// A map B -> A between a Hopf algebra and an algebra of the bundle.
struct Element {
    std::string name;
    ElementKind kind = ElementKind::map;
    std::string source, target;
    GradedMap map;
};

// A map between two comodules of the bundle.
struct ComoduleMap {
    std::string name, from, to;
    GradedMap map;
};

struct Bundle {
    std::vector<AtomPtr> atoms;
    std::vector<NamedComplex> complexes;
    std::vector<CdgAlgebra> algebras;
    std::vector<HopfData> hopf;
    std::vector<BundleComodule> comodules;
    std::vector<Element> elements;
    std::vector<ComoduleMap> morphisms;

    const HopfData& find_hopf(const std::string& name) const;
    // plain algebras first, then the algebras underlying Hopf entries
    CdgAlgebra find_algebra(const std::string& name) const;
    const Comodule& find_comodule(const std::string& name) const;
};

// Throws ParseError (with position), ReferenceError or DimensionError.
Bundle parse_bundle(const std::string& text);
Bundle load_bundle(const std::string& path);
// Canonical text; parse_bundle(serialize_bundle(b)) reproduces b.
std::string serialize_bundle(const Bundle& b);

const char* kind_name(ElementKind k);

}  // namespace dgh
