#pragma once

#include <string>
#include <vector>

#include "dgh/graded_map.hpp"

namespace dgh {

struct Check {
    std::string name;
    bool pass = true;
    std::string witness, lhs, rhs;  // filled on failure
};

struct Report {
    std::string title;
    std::vector<Check> checks;

    bool ok() const;
    std::vector<Check> failures() const;

    // Records name: lhs == rhs, with the first differing basis element on failure.
    void expect_equal(const std::string& name, const GradedMap& lhs, const GradedMap& rhs);
    void expect_zero(const std::string& name, const GradedMap& f);
    void expect(const std::string& name, bool cond, const std::string& detail = "");
    void merge(const Report& other, const std::string& prefix = "");

    std::string text() const;
};

}  // namespace dgh
