#include "dgh/report.hpp"

#include <algorithm>
#include <sstream>

namespace dgh {

bool Report::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](auto& c) { return c.pass; });
}

std::vector<Check> Report::failures() const {
    std::vector<Check> out;
    for (auto& c : checks)
        if (!c.pass) out.push_back(c);
    return out;
}

void Report::expect_equal(const std::string& name, const GradedMap& lhs, const GradedMap& rhs) {
    Check c;
    c.name = name;
    auto d = first_difference(lhs, rhs);
    if (d.differs) {
        c.pass = false;
        c.witness = d.element;
        c.lhs = d.lhs;
        c.rhs = d.rhs;
    }
    checks.push_back(std::move(c));
}

void Report::expect_zero(const std::string& name, const GradedMap& f) {
    expect_equal(name, f, GradedMap(f.source(), f.target(), f.degree()));
}

void Report::expect(const std::string& name, bool cond, const std::string& detail) {
    Check c;
    c.name = name;
    c.pass = cond;
    if (!cond) c.witness = detail;
    checks.push_back(std::move(c));
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (auto c : other.checks) {
        c.name = prefix + c.name;
        checks.push_back(std::move(c));
    }
}

std::string Report::text() const {
    std::ostringstream os;
    if (!title.empty()) os << title << "\n";
    for (auto& c : checks) {
        os << (c.pass ? "  ok    " : "  FAIL  ") << c.name << "\n";
        if (!c.pass) {
            if (!c.witness.empty()) os << "        at " << c.witness << "\n";
            if (!c.lhs.empty() || !c.rhs.empty())
                os << "        lhs = " << c.lhs << "\n        rhs = " << c.rhs << "\n";
        }
    }
    return os.str();
}

}  // namespace dgh
