#pragma once

#include <string>
#include <vector>

#include "dgh/bundle.hpp"

namespace dgh {

struct CommandOptions {
    std::string kind = "auto";
    unsigned flow_degree = 1;
    unsigned probe_pairs = 3;
};

struct NamedMap {
    std::string name;
    GradedMap map;
};

struct Outcome {
    std::string command;
    std::vector<Report> reports;
    std::vector<NamedMap> results;
    std::vector<std::string> notes;
    Bundle updated;  // input plus whatever the command computed

    bool ok() const;
    int exit_code() const { return ok() ? 0 : 1; }
};

const std::vector<std::string>& command_names();

// Throws std::invalid_argument on an unknown command or kind.
Outcome run_command(const std::string& command, const Bundle& b, const CommandOptions& opts = {});

std::string render_text(const Outcome& o);
std::string render_json(const Outcome& o);

}  // namespace dgh
