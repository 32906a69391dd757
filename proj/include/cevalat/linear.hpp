#pragma once

// Homogeneous linear constraints over Q and the cell/region model of
// strict open polyhedral cones relative to an ambient closed cone.

#include <string>
#include <vector>

#include "cevalat/rat.hpp"

namespace cevalat {

// Homogeneous linear functional c1*x1 + ... + cn*xn.
struct LinForm {
    std::vector<Rat> coeffs;

    explicit LinForm(size_t n = 0) : coeffs(n) {}
    static LinForm unit(size_t n, size_t i);

    size_t dim() const { return coeffs.size(); }
    Rat eval(const std::vector<Rat>& x) const;

    LinForm operator+(const LinForm& o) const;
    LinForm operator-() const;
    LinForm scaled(const Rat& q) const;
    bool operator==(const LinForm& o) const { return coeffs == o.coeffs; }

    // "2*x1 - 1/3*x3" style rendering; "0" for the zero form.
    std::string str() const;
};

enum class Rel { GT, GE, EQ };

struct Constraint {
    LinForm form;
    Rel rel;

    bool holds(const std::vector<Rat>& x) const;
    std::string str() const;
};

// Closed convex cone inside (Q+)^n: the implicit xi >= 0 plus weak
// constraints (GE or EQ only).
struct AmbientCone {
    size_t dimension = 0;
    std::vector<Constraint> weak;  // rel in {GE, EQ}

    static AmbientCone trivial(size_t n) { return AmbientCone{n, {}}; }

    bool contains(const std::vector<Rat>& x) const;
    bool operator==(const AmbientCone& o) const;
};

// Conjunction of constraints within an ambient cone.
struct Cell {
    std::vector<Constraint> constraints;

    bool has_strict() const;
    bool holds(const std::vector<Rat>& x) const;
    Cell intersect(const Cell& o) const;
};

// Finite union of cells; the semantics never contains the origin as
// long as every cell carries a strict constraint.
struct Region {
    AmbientCone ambient;
    std::vector<Cell> cells;

    bool contains(const std::vector<Rat>& x) const;
};

}  // namespace cevalat
