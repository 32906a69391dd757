#include "cevalat/cones.hpp"

#include <stdexcept>

namespace cevalat {

namespace {

void check_same_ambient(const Region& a, const Region& b) {
    if (!(a.ambient == b.ambient))
        throw std::invalid_argument("region operation: ambient cones differ");
}

// Disjoint decomposition of the complement of a cell within the
// ambient: the j-th piece keeps constraints 1..j-1 and violates the
// j-th one.
std::vector<Cell> complement_of_cell(const Cell& cell) {
    std::vector<Cell> out;
    Cell prefix;
    for (const Constraint& c : cell.constraints) {
        switch (c.rel) {
            case Rel::GT: {
                Cell piece = prefix;
                piece.constraints.push_back({-c.form, Rel::GE});
                out.push_back(std::move(piece));
                break;
            }
            case Rel::GE: {
                Cell piece = prefix;
                piece.constraints.push_back({-c.form, Rel::GT});
                out.push_back(std::move(piece));
                break;
            }
            case Rel::EQ: {
                Cell above = prefix;
                above.constraints.push_back({c.form, Rel::GT});
                out.push_back(std::move(above));
                Cell below = prefix;
                below.constraints.push_back({-c.form, Rel::GT});
                out.push_back(std::move(below));
                break;
            }
        }
        prefix.constraints.push_back(c);
    }
    return out;
}

// Cells (possibly without strict constraints) covering ambient \ region.
std::vector<Cell> complement_cells(const Region& r) {
    std::vector<Cell> acc{Cell{}};
    for (const Cell& cell : r.cells) {
        std::vector<Cell> next;
        for (const Cell& p : acc)
            for (const Cell& q : complement_of_cell(cell)) {
                Cell merged = p.intersect(q);
                if (!cell_is_empty(r.ambient, merged)) next.push_back(std::move(merged));
            }
        acc = std::move(next);
        if (acc.empty()) break;
    }
    return acc;
}

}  // namespace

Region region_zero(AmbientCone ambient) { return Region{std::move(ambient), {}}; }

Region region_unit(AmbientCone ambient) {
    Region r{std::move(ambient), {}};
    for (size_t i = 0; i < r.ambient.dimension; ++i) {
        Cell c;
        c.constraints.push_back({LinForm::unit(r.ambient.dimension, i), Rel::GT});
        if (!cell_is_empty(r.ambient, c)) r.cells.push_back(std::move(c));
    }
    return r;
}

Region region_from_cell(AmbientCone ambient, Cell cell) {
    if (!cell.has_strict())
        throw std::invalid_argument("region cell needs at least one strict constraint");
    Region r{std::move(ambient), {std::move(cell)}};
    return region_prune(std::move(r));
}

Region region_prune(Region r) {
    std::vector<Cell> kept;
    for (Cell& c : r.cells)
        if (!cell_is_empty(r.ambient, c)) kept.push_back(std::move(c));
    r.cells = std::move(kept);
    return r;
}

Region region_meet(const Region& a, const Region& b) {
    check_same_ambient(a, b);
    Region r{a.ambient, {}};
    for (const Cell& ca : a.cells)
        for (const Cell& cb : b.cells) {
            Cell m = ca.intersect(cb);
            if (!cell_is_empty(r.ambient, m)) r.cells.push_back(std::move(m));
        }
    return r;
}

Region region_join(const Region& a, const Region& b) {
    check_same_ambient(a, b);
    Region r{a.ambient, a.cells};
    r.cells.insert(r.cells.end(), b.cells.begin(), b.cells.end());
    return region_prune(std::move(r));
}

Region region_complement(const Region& a) {
    Region unit = region_unit(a.ambient);
    Region r{a.ambient, {}};
    for (const Cell& nc : complement_cells(a))
        for (const Cell& uc : unit.cells) {
            Cell m = nc.intersect(uc);
            if (!cell_is_empty(a.ambient, m)) r.cells.push_back(std::move(m));
        }
    return r;
}

SubsetResult region_subset(const Region& a, const Region& b) {
    check_same_ambient(a, b);
    std::vector<Cell> outside = complement_cells(b);
    for (const Cell& ca : a.cells)
        for (const Cell& nc : outside) {
            auto w = cell_witness(a.ambient, ca.intersect(nc));
            if (w) return {false, std::move(w)};
        }
    return {true, std::nullopt};
}

bool region_equal(const Region& a, const Region& b) {
    return region_subset(a, b).holds && region_subset(b, a).holds;
}

bool region_is_empty(const Region& a) {
    for (const Cell& c : a.cells)
        if (!cell_is_empty(a.ambient, c)) return false;
    return true;
}

RatioSet region_to_ratioset(const Region& r) {
    if (r.ambient.dimension != 2 || !r.ambient.weak.empty())
        throw std::invalid_argument("region_to_ratioset: needs the trivial plane ambient");
    std::vector<Interval> parts;
    for (const Cell& cell : r.cells) {
        // Finite ratios: the representative point (1, t).
        Interval cur{ExtRat(Rat(0)), ExtRat::infinity(), true, false};
        bool dead = false;
        for (const Constraint& c : cell.constraints) {
            const Rat& a = c.form.coeffs[0];
            const Rat& b = c.form.coeffs[1];
            if (b.is_zero()) {
                bool holds = c.rel == Rel::GT   ? a.sign() > 0
                             : c.rel == Rel::GE ? a.sign() >= 0
                                                : a.sign() == 0;
                if (!holds) dead = true;
            } else {
                Rat t0 = -a / b;
                Interval sol;
                if (c.rel == Rel::EQ) {
                    if (t0.sign() < 0) {
                        dead = true;
                    } else {
                        sol = {ExtRat(t0), ExtRat(t0), true, true};
                    }
                } else if (b.sign() > 0) {  // t >(=) t0
                    ExtRat lo = t0.sign() < 0 ? ExtRat(Rat(0)) : ExtRat(t0);
                    bool lo_closed = t0.sign() < 0 || c.rel == Rel::GE;
                    sol = {lo, ExtRat::infinity(), lo_closed, false};
                } else {  // t <(=) t0
                    if (t0.sign() < 0 || (t0.is_zero() && c.rel == Rel::GT)) {
                        dead = true;
                    } else {
                        sol = {ExtRat(Rat(0)), ExtRat(t0), true, c.rel == Rel::GE};
                    }
                }
                if (!dead) {
                    // intersect cur with sol
                    if (sol.lo > cur.lo) {
                        cur.lo = sol.lo;
                        cur.lo_closed = sol.lo_closed;
                    } else if (sol.lo == cur.lo) {
                        cur.lo_closed = cur.lo_closed && sol.lo_closed;
                    }
                    if (sol.hi < cur.hi) {
                        cur.hi = sol.hi;
                        cur.hi_closed = sol.hi_closed;
                    } else if (sol.hi == cur.hi) {
                        cur.hi_closed = cur.hi_closed && sol.hi_closed;
                    }
                }
            }
            if (dead) break;
        }
        if (!dead && !(cur.hi < cur.lo) && !cur.empty()) parts.push_back(cur);
        // The infinite ratio: the representative point (0, 1).
        std::vector<Rat> at_inf{Rat(0), Rat(1)};
        if (cell.holds(at_inf))
            parts.push_back({ExtRat::infinity(), ExtRat::infinity(), true, true});
    }
    return RatioSet::normalize(std::move(parts));
}

Region ratioset_to_region(const RatioSet& u, size_t i, size_t j, size_t n) {
    if (i == j) throw std::invalid_argument("ratioset_to_region: i = j");
    if (i >= n || j >= n) throw std::invalid_argument("ratioset_to_region: index out of range");
    Region r{AmbientCone::trivial(n), {}};
    LinForm xi = LinForm::unit(n, i), xj = LinForm::unit(n, j);
    for (const Interval& iv : u.intervals()) {
        Cell cell;
        cell.constraints.push_back({xi + xj, Rel::GT});  // (xi, xj) != (0, 0)
        if (iv.lo == iv.hi) {
            if (iv.lo.is_infinite()) {
                cell.constraints.push_back({xi, Rel::EQ});
                cell.constraints.push_back({xj, Rel::GT});
            } else {
                // xj - v*xi = 0 and xi > 0
                cell.constraints.push_back({xj + xi.scaled(-iv.lo.finite()), Rel::EQ});
                cell.constraints.push_back({xi, Rel::GT});
            }
        } else {
            const Rat lo = iv.lo.finite();  // lo < hi, so lo is finite
            if (!(iv.lo_closed && lo.is_zero())) {
                // t >(=) lo  <=>  xj - lo*xi >(=) 0
                cell.constraints.push_back(
                    {xj + xi.scaled(-lo), iv.lo_closed ? Rel::GE : Rel::GT});
            }
            if (iv.hi.is_infinite()) {
                if (!iv.hi_closed) cell.constraints.push_back({xi, Rel::GT});
            } else {
                const Rat hi = iv.hi.finite();
                // t <(=) hi  <=>  hi*xi - xj >(=) 0
                cell.constraints.push_back(
                    {xi.scaled(hi) + (-xj), iv.hi_closed ? Rel::GE : Rel::GT});
            }
        }
        r.cells.push_back(std::move(cell));
    }
    return region_prune(std::move(r));
}

}  // namespace cevalat
