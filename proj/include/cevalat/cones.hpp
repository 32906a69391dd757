#pragma once

// The lattice of strict open polyhedral cones relative to an ambient
// closed cone: meet/join/complement, exact containment with witnesses,
// and the dimension-2 bridge to ratio sets.

#include <optional>

#include "cevalat/linear.hpp"
#include "cevalat/ratioset.hpp"
#include "cevalat/simplex.hpp"

namespace cevalat {

Region region_zero(AmbientCone ambient);
Region region_unit(AmbientCone ambient);
Region region_from_cell(AmbientCone ambient, Cell cell);

// Drops cells whose solution set is empty.
Region region_prune(Region r);

Region region_meet(const Region& a, const Region& b);
Region region_join(const Region& a, const Region& b);
// Complement within the unit of the lattice, via the disjoint
// first-violated-constraint decomposition of each cell complement.
Region region_complement(const Region& a);

struct SubsetResult {
    bool holds;
    std::optional<std::vector<Rat>> witness;  // point of A \ B when !holds
};

SubsetResult region_subset(const Region& a, const Region& b);
bool region_equal(const Region& a, const Region& b);
bool region_is_empty(const Region& a);

// Inverse of the cylinder construction, for homogeneous regions of the
// plane: returns U with R = {(x,y) != (0,0) : ratio(x,y) in U}.
RatioSet region_to_ratioset(const Region& r);

// Cylinder over coordinates (i, j), 0-based, of the ratio constraint
// xi^-1 xj in U, within the trivial ambient cone of dimension n.
Region ratioset_to_region(const RatioSet& u, size_t i, size_t j, size_t n);

}  // namespace cevalat
