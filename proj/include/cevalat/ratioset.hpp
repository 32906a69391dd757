#pragma once

// The interval algebra over the extended ray.  A RatioSet is a finite
// union of intervals of Q+ u {inf} in canonical form: sorted, pairwise
// disjoint, not adjacent.  All four open/closed endpoint combinations
// are representable so that complements stay in the class; membership
// in the admissible fragment (unions of [0,x), (x,y), (y,inf]) is a
// queryable flag, not a construction-time restriction.

#include <optional>
#include <string>
#include <vector>

#include "cevalat/rat.hpp"

namespace cevalat {

struct Interval {
    ExtRat lo, hi;
    bool lo_closed = false;
    bool hi_closed = false;

    bool contains(const ExtRat& t) const;
    bool empty() const;
    std::string str() const;
};

class RatioSet {
public:
    RatioSet() = default;

    // Canonicalizes an arbitrary interval list.  Throws on an interval
    // with lo > hi.
    static RatioSet normalize(std::vector<Interval> raw);

    // Parses "{[0,1), (2,inf]}".  Whitespace between items is ignored.
    static RatioSet parse(const std::string& text);

    static RatioSet empty_set() { return RatioSet(); }
    static RatioSet full();                       // [0, inf]
    static RatioSet initial(const Rat& x);        // [0, x)
    static RatioSet singleton(const ExtRat& x);   // {x}

    const std::vector<Interval>& intervals() const { return ivs_; }
    bool is_empty() const { return ivs_.empty(); }

    bool contains(const ExtRat& t) const;
    bool contains_zero() const { return contains(ExtRat(Rat(0))); }

    // [0,z) with finite z > 0, or nothing.
    std::optional<Rat> initial_bound() const;

    // True iff the set lies in the admissible interval algebra proper.
    bool is_admissible() const;

    RatioSet unite(const RatioSet& o) const;
    RatioSet intersect(const RatioSet& o) const;
    RatioSet complement() const;
    bool subset_of(const RatioSet& o) const;

    bool operator==(const RatioSet& o) const;

    std::string str() const;

private:
    std::vector<Interval> ivs_;  // canonical
};

}  // namespace cevalat
