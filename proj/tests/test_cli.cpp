#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "dgh/cli.hpp"
#include "dgh/errors.hpp"
#include "support.hpp"

using namespace dgh;
using namespace dgh::test;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::filesystem::path> corpus_files() {
    std::vector<std::filesystem::path> out;
    for (auto& e : std::filesystem::directory_iterator(DGH_CORPUS_DIR))
        if (e.path().extension() == ".json") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

const Element& element(const Bundle& b, const std::string& name) {
    for (auto& e : b.elements)
        if (e.name == name) return e;
    throw std::logic_error("no element " + name);
}

const std::string tiny = R"({
  "spaces": [
    {"name": "A", "basis": [["a", 0], ["b", 1]]}
  ],
  "complexes": [
    {"name": "A", "space": ["A"], "d": [[["a"], ["b"], "SCALAR"]]}
  ]
})";

std::string with(const std::string& text, const std::string& from, const std::string& to) {
    std::string s = text;
    s.replace(s.find(from), from.size(), to);
    return s;
}

}  // namespace

TEST_CASE("the corpus round-trips byte for byte") {
    auto files = corpus_files();
    REQUIRE(files.size() >= 5);
    for (auto& f : files) {
        CAPTURE(f.string());
        std::string text = slurp(f);
        Bundle b = parse_bundle(text);
        CHECK(serialize_bundle(b) == text);
        CHECK(serialize_bundle(parse_bundle(serialize_bundle(b))) == text);
    }
}

TEST_CASE("parse errors carry positions") {
    CHECK_NOTHROW(parse_bundle(with(tiny, "SCALAR", "3/2")));
    try {
        parse_bundle(with(tiny, "SCALAR", "1/0"));
        FAIL("accepted 1/0");
    } catch (const ParseError& e) {
        CHECK(e.line == 6);
        CHECK(e.column > 1);
    }
    try {
        parse_bundle("{\n  \"spaces\": [,]\n}");
        FAIL("accepted a syntax error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(parse_bundle(with(tiny, "[\"b\"]", "[\"c\"]")), ReferenceError);
    CHECK_THROWS_AS(parse_bundle(with(tiny, "[\"b\"]", "[\"b\", \"b\"]")), DimensionError);
    CHECK_THROWS_AS(parse_bundle(with(tiny, "\"complexes\"", "\"complexs\"")), ParseError);
}

TEST_CASE("every command succeeds on every bundle") {
    for (auto& f : corpus_files()) {
        Bundle b = load_bundle(f.string());
        for (auto& cmd : command_names()) {
            CAPTURE(f.string());
            CAPTURE(cmd);
            Outcome o = run_command(cmd, b);
            CHECK(o.exit_code() == 0);
            CHECK(render_text(o) == render_text(run_command(cmd, b)));  // deterministic
        }
    }
    Bundle b = load_bundle(std::string(DGH_CORPUS_DIR) + "/ground.json");
    CHECK_THROWS_AS(run_command("frobnicate", b), std::invalid_argument);
    CommandOptions bad;
    bad.kind = "monoid";
    CHECK_THROWS_AS(run_command("verify", b, bad), std::invalid_argument);
}

TEST_CASE("antipode, exp and ln through the command layer") {
    Bundle bi = load_bundle(std::string(DGH_CORPUS_DIR) + "/lambda_x_bialgebra.json");
    Outcome anti = run_command("antipode", bi);
    REQUIRE(anti.results.size() == 1);
    const GradedMap& S = anti.results[0].map;
    CHECK(entry(S, {"x"}, {"x"}) == -1);
    CHECK(entry(S, {"1"}, {"1"}) == 1);

    Bundle b = load_bundle(std::string(DGH_CORPUS_DIR) + "/lambda_x.json");
    Outcome ex = run_command("exp", b);
    REQUIRE(ex.ok());
    const Element& g = element(ex.updated, "exp(v)");
    CHECK(g.kind == ElementKind::group);
    CHECK(entry(g.map, {"x"}, {"dt"}) == 1);
    Bundle reread = parse_bundle(serialize_bundle(ex.updated));
    Outcome ln = run_command("ln", reread);
    REQUIRE(ln.ok());
    CHECK(element(ln.updated, "ln(exp(v))").map == element(b, "v").map);
}

TEST_CASE("json reports") {
    Bundle b = load_bundle(std::string(DGH_CORPUS_DIR) + "/lambda_x.json");
    auto ok = nlohmann::json::parse(render_json(run_command("verify", b)));
    CHECK(ok["ok"] == true);
    CHECK(ok["failures"].empty());

    // a wrong antipode: the failure names the witness and both sides
    for (auto& h : b.hopf) h.antipode = id(h.space);
    CommandOptions hopf;
    hopf.kind = "hopf";
    Outcome o = run_command("verify", b, hopf);
    CHECK(o.exit_code() == 1);
    auto bad = nlohmann::json::parse(render_json(o));
    CHECK(bad["ok"] == false);
    REQUIRE(!bad["failures"].empty());
    bool found = false;
    for (auto& f : bad["failures"])
        if (f["witness"] == "x" && !f["lhs"].get<std::string>().empty() && !f["rhs"].get<std::string>().empty())
            found = true;
    CHECK(found);

    Bundle fresh = load_bundle(std::string(DGH_CORPUS_DIR) + "/lambda_x.json");
    auto ex = nlohmann::json::parse(render_json(run_command("exp", fresh)));
    REQUIRE(!ex["results"].empty());
    for (auto& r : ex["results"]) {
        CHECK(r.contains("blocks"));
        CHECK(!r["entries"].empty());
    }
}
