#pragma once

// Scenario files: a flat "key: value" syntax with "- item" lists and
// exact-rational literals. Parsing is total -- every failure is a
// positioned diagnostic -- and extraction rejects unknown keys.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cevalat/ceva.hpp"
#include "cevalat/diagrams.hpp"
#include "cevalat/finlat.hpp"
#include "cevalat/psbool.hpp"

namespace cevalat {

struct ScenarioError : std::runtime_error {
    int line;  // 1-based; 0 when no position applies

    ScenarioError(int l, const std::string& msg)
        : std::runtime_error("line " + std::to_string(l) + ": " + msg), line(l) {}
};

struct ScenarioField {
    std::string value;  // empty for list fields
    int line = 0;
    bool is_list = false;
    std::vector<std::string> items;
    std::vector<int> item_lines;
};

struct Scenario {
    std::string kind;
    std::map<std::string, ScenarioField> fields;
};

// Syntax pass only; the first entry must be "kind:" naming one of
// ceva, lemma43, lattice, diagram, condensate, cone.
Scenario parse_scenario(const std::string& text);

// --- kind-specific extraction (unknown keys rejected) ---

CevaInput scenario_ceva(const Scenario& s);

Lemma43Candidate scenario_lemma43(const Scenario& s);

// keys: ji (element count), covers (list of "lower upper")
JIPoset scenario_lattice(const Scenario& s);

struct DiagramScenario {
    std::string target;  // "A", "D", or "eta"
    int depth = 3;
};
DiagramScenario scenario_diagram(const Scenario& s);

struct ConeScenario {
    size_t dim = 0;
    Region a;
    std::optional<Region> b;
};
// keys: dim, ambient (list of weak constraints), a, b (lists of cells;
// a cell is constraints joined by ";")
ConeScenario scenario_cone(const Scenario& s);

struct CondensateScenario {
    std::vector<P3> tags;                // atoms of A by their norm tag
    std::optional<size_t> project_atom;  // request: drop to this atom's 2[tag]
};
CondensateScenario scenario_condensate(const Scenario& s);

// "2*x1 - 1/3*x2 >= 0" over variables x1..xdim.
Constraint parse_constraint(const std::string& text, size_t dim, int line);

}  // namespace cevalat
