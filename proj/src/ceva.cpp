#include "cevalat/ceva.hpp"

#include <algorithm>

namespace cevalat {

std::string CevaInput::str() const {
    return "U12=" + U12.str() + " U23=" + U23.str() + " U13=" + U13.str();
}

Region ceva_cylinder(const RatioSet& u, int i, int j) {
    return ratioset_to_region(u, static_cast<size_t>(i - 1), static_cast<size_t>(j - 1), 3);
}

namespace {

// Membership of a point in the cylinder C_ij, straight from the ratio
// semantics: defined off (xi, xj) = (0, 0) only.
bool cyl_member(const RatioSet& u, const Rat& xi, const Rat& xj) {
    if (xi.is_zero() && xj.is_zero()) return false;
    return u.contains(ratio(xi, xj));
}

// Coordinate values that separate all the cells cut out by the given
// endpoint list: the endpoints themselves, midpoints of consecutive
// ones, and one value beyond the largest.
std::vector<Rat> separating_values(std::vector<Rat> ends) {
    ends.push_back(Rat(0));
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    std::vector<Rat> vals;
    for (size_t i = 0; i < ends.size(); ++i) {
        vals.push_back(ends[i]);
        if (i + 1 < ends.size()) vals.push_back((ends[i] + ends[i + 1]) / Rat(2));
    }
    vals.push_back(ends.back() + Rat(1));
    return vals;
}

std::vector<Rat> finite_endpoints(const RatioSet& u) {
    std::vector<Rat> out;
    for (const Interval& iv : u.intervals()) {
        if (!iv.lo.is_infinite()) out.push_back(iv.lo.finite());
        if (!iv.hi.is_infinite()) out.push_back(iv.hi.finite());
    }
    return out;
}

// Searches a separating grid of (Q+)^3 for an exact counterexample to
// either chain inclusion; cheap, and any hit is a genuine witness.
std::optional<std::vector<Rat>> probe_chain(const CevaInput& in) {
    std::vector<Rat> ends = finite_endpoints(in.U12);
    for (const Rat& r : finite_endpoints(in.U23)) ends.push_back(r);
    for (const Rat& r : finite_endpoints(in.U13)) ends.push_back(r);
    std::vector<Rat> vals = separating_values(std::move(ends));
    for (const Rat& x1 : vals)
        for (const Rat& x2 : vals)
            for (const Rat& x3 : vals) {
                if (x1.is_zero() && x2.is_zero() && x3.is_zero()) continue;
                bool in12 = cyl_member(in.U12, x1, x2);
                bool in23 = cyl_member(in.U23, x2, x3);
                bool in13 = cyl_member(in.U13, x1, x3);
                if ((in12 && in23 && !in13) || (in13 && !in12 && !in23))
                    return std::vector<Rat>{x1, x2, x3};
            }
    return std::nullopt;
}

RatioSet finite_ray() {  // [0, inf)
    return RatioSet::normalize({Interval{ExtRat(Rat(0)), ExtRat::infinity(), true, false}});
}

}  // namespace

CevaVerdict ceva_check(const CevaInput& input) {
    CevaVerdict v;
    v.hyp_0 = input.U12.contains_zero() && input.U23.contains_zero() &&
              input.U13.contains_zero();
    RatioSet ray = finite_ray();
    v.hyp_notfull = !ray.subset_of(input.U12) && !ray.subset_of(input.U23);

    if (auto w = probe_chain(input)) {
        v.hyp_chain = false;
        v.witness = std::move(w);
    } else {
        Region c12 = ceva_cylinder(input.U12, 1, 2);
        Region c23 = ceva_cylinder(input.U23, 2, 3);
        Region c13 = ceva_cylinder(input.U13, 1, 3);
        SubsetResult lower = region_subset(region_meet(c12, c23), c13);
        SubsetResult upper =
            lower.holds ? region_subset(c13, region_join(c12, c23)) : SubsetResult{true, {}};
        v.hyp_chain = lower.holds && upper.holds;
        if (!lower.holds)
            v.witness = lower.witness;
        else if (!upper.holds)
            v.witness = upper.witness;
    }

    if (v.all_hypotheses()) {
        auto x = input.U12.initial_bound();
        auto y = input.U23.initial_bound();
        if (!x || !y || !(input.U13 == RatioSet::initial(*x * *y)))
            throw CevaInconsistency(
                "hypotheses hold but the forced initial shape fails: " + input.str());
        v.conclusion = std::make_pair(*x, *y);
    }
    return v;
}

bool ceva_converse_check(const Rat& x, const Rat& y) {
    if (x.sign() <= 0 || y.sign() <= 0)
        throw std::invalid_argument("ceva_converse_check: x, y must be positive");
    CevaInput in{RatioSet::initial(x), RatioSet::initial(y), RatioSet::initial(x * y)};
    CevaVerdict v = ceva_check(in);
    return v.all_hypotheses() && v.conclusion &&
           v.conclusion->first == x && v.conclusion->second == y;
}

std::vector<RatioSet> ceva_candidate_sets(const std::vector<ExtRat>& pool) {
    std::vector<Rat> f;
    for (const ExtRat& e : pool)
        if (!e.is_infinite() && e.finite().sign() > 0) f.push_back(e.finite());
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());

    const ExtRat zero{Rat(0)}, inf = ExtRat::infinity();
    std::vector<Interval> singles;
    for (const Rat& b : f) singles.push_back({zero, ExtRat(b), true, false});  // [0,b)
    singles.push_back({zero, inf, true, false});                               // [0,inf)
    singles.push_back({zero, inf, true, true});                                // [0,inf]
    for (size_t i = 0; i < f.size(); ++i) {
        for (size_t j = i + 1; j < f.size(); ++j)
            singles.push_back({ExtRat(f[i]), ExtRat(f[j]), false, false});
        singles.push_back({ExtRat(f[i]), inf, false, false});
        singles.push_back({ExtRat(f[i]), inf, false, true});
    }

    std::vector<RatioSet> out;
    out.push_back(RatioSet::empty_set());
    for (const Interval& iv : singles) out.push_back(RatioSet::normalize({iv}));
    for (const Interval& a : singles) {
        if (a.hi.is_infinite()) continue;
        for (const Interval& b : singles) {
            if (b.lo.is_infinite() || b.lo.is_zero()) continue;
            if (b.lo < a.hi) continue;  // open endpoints: touching leaves a gap
            out.push_back(RatioSet::normalize({a, b}));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RatioSet& x, const RatioSet& y) { return x.str() < y.str(); });
    return out;
}

CevaSearchReport ceva_search(const std::vector<ExtRat>& pool, unsigned long budget) {
    CevaSearchReport rep;
    std::vector<RatioSet> cand = ceva_candidate_sets(pool);
    const size_t m = cand.size();

    // Per-candidate cheap flags.
    std::vector<char> has0(m), isfull(m);
    RatioSet ray = finite_ray();
    for (size_t i = 0; i < m; ++i) {
        has0[i] = cand[i].contains_zero();
        isfull[i] = ray.subset_of(cand[i]);
    }

    // Shared probe grid, indexed: distinct ratio values over the grid,
    // a membership mask per candidate, and deduplicated ratio triples.
    std::vector<Rat> ends;
    for (const RatioSet& u : cand)
        for (const Rat& r : finite_endpoints(u)) ends.push_back(r);
    std::vector<Rat> vals = separating_values(std::move(ends));

    std::vector<ExtRat> ratios;
    auto ratio_index = [&](const Rat& a, const Rat& b) -> int {
        if (a.is_zero() && b.is_zero()) return -1;
        ExtRat r = ratio(a, b);
        for (size_t k = 0; k < ratios.size(); ++k)
            if (ratios[k] == r) return static_cast<int>(k);
        ratios.push_back(r);
        return static_cast<int>(ratios.size() - 1);
    };
    struct Tri {
        int i12, i23, i13;
    };
    std::vector<Tri> tris;
    std::vector<std::vector<Rat>> tri_points;
    for (const Rat& x1 : vals)
        for (const Rat& x2 : vals)
            for (const Rat& x3 : vals) {
                if (x1.is_zero() && x2.is_zero() && x3.is_zero()) continue;
                Tri t{ratio_index(x1, x2), ratio_index(x2, x3), ratio_index(x1, x3)};
                bool seen = false;
                for (const Tri& s : tris)
                    if (s.i12 == t.i12 && s.i23 == t.i23 && s.i13 == t.i13) {
                        seen = true;
                        break;
                    }
                if (!seen) {
                    tris.push_back(t);
                    tri_points.push_back({x1, x2, x3});
                }
            }
    std::vector<std::vector<char>> mask(m, std::vector<char>(ratios.size()));
    for (size_t i = 0; i < m; ++i)
        for (size_t k = 0; k < ratios.size(); ++k) mask[i][k] = cand[i].contains(ratios[k]);

    auto mem = [](const std::vector<char>& mk, int idx) { return idx >= 0 && mk[idx]; };

    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t k = 0; k < m; ++k) {
                if (budget && rep.total >= budget) {
                    rep.partial = true;
                    return rep;
                }
                ++rep.total;
                if (!(has0[i] && has0[j] && has0[k])) {
                    ++rep.failures["hyp_0"];
                    continue;
                }
                if (isfull[i] || isfull[j]) {
                    ++rep.failures["hyp_notfull"];
                    continue;
                }
                bool refuted = false;
                for (const Tri& t : tris) {
                    bool in12 = mem(mask[i], t.i12), in23 = mem(mask[j], t.i23),
                         in13 = mem(mask[k], t.i13);
                    if ((in12 && in23 && !in13) || (in13 && !in12 && !in23)) {
                        refuted = true;
                        break;
                    }
                }
                if (refuted) {
                    ++rep.failures["hyp_chain"];
                    continue;
                }
                // Survivor: decide exactly (the check may still throw the
                // inconsistency error, which deliberately propagates).
                CevaVerdict v = ceva_check(CevaInput{cand[i], cand[j], cand[k]});
                if (v.all_hypotheses()) {
                    ++rep.hyps_hold;
                    if (v.conclusion) ++rep.conclusion_verified;
                } else {
                    ++rep.failures[!v.hyp_0        ? "hyp_0"
                                   : !v.hyp_notfull ? "hyp_notfull"
                                                    : "hyp_chain"];
                }
            }
    return rep;
}

}  // namespace cevalat
