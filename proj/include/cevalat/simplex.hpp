#pragma once

// Exact two-phase simplex over Q with Bland's anti-cycling rule.

#include <optional>
#include <vector>

#include "cevalat/linear.hpp"

namespace cevalat {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status;
    Rat value;                // objective at optimum
    std::vector<Rat> point;   // values of the structural variables
};

// maximize c.z subject to row constraints and z >= 0.
class LinProg {
public:
    explicit LinProg(size_t nvars) : nvars_(nvars), objective_(nvars) {}

    void set_objective(LinForm c);
    // a.z rel rhs, rel read as {GE: >=, EQ: =}; use add_le for <=.
    void add_ge(LinForm a, Rat rhs);
    void add_le(LinForm a, Rat rhs);
    void add_eq(LinForm a, Rat rhs);

    LpResult solve() const;

private:
    struct Row {
        LinForm a;
        Rat rhs;
        int kind;  // -1 le, 0 eq, +1 ge
    };
    size_t nvars_;
    LinForm objective_;
    std::vector<Row> rows_;
};

// Decision kernel: emptiness of a cell over the reals, decided on the
// section sum(xi) = 1 by maximizing the strict-constraint slack.
// Returns a rational interior witness when nonempty.
std::optional<std::vector<Rat>> cell_witness(const AmbientCone& ambient, const Cell& cell);

inline bool cell_is_empty(const AmbientCone& ambient, const Cell& cell) {
    return !cell_witness(ambient, cell).has_value();
}

}  // namespace cevalat
