#pragma once

// Ceva configurations: hypotheses (i)-(iii) and the conclusion of the
// proposition forcing the initial shape U12=[0,x), U23=[0,y),
// U13=[0,xy), plus exhaustive search and converse-family harnesses.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "cevalat/cones.hpp"

namespace cevalat {

struct CevaInput {
    RatioSet U12, U23, U13;

    std::string str() const;
};

struct CevaVerdict {
    bool hyp_0 = false;        // 0 in U12 n U23 n U13
    bool hyp_notfull = false;  // [0,inf) not contained in U12 nor in U23
    bool hyp_chain = false;    // C12 n C23 <= C13 <= C12 u C23
    std::optional<std::pair<Rat, Rat>> conclusion;  // (x, y) with U13 = [0, xy)
    std::optional<std::vector<Rat>> witness;        // refutes a failed chain inclusion

    bool all_hypotheses() const { return hyp_0 && hyp_notfull && hyp_chain; }
};

// Raised when the hypotheses hold but the conclusion fails to verify:
// that would falsify the theorem, so it aborts with the offending input.
struct CevaInconsistency : std::logic_error {
    explicit CevaInconsistency(const std::string& what) : std::logic_error(what) {}
};

// The cylinder C_ij over U_ij in dimension 3 (1-based pair indices).
Region ceva_cylinder(const RatioSet& u, int i, int j);

CevaVerdict ceva_check(const CevaInput& input);

bool ceva_converse_check(const Rat& x, const Rat& y);

struct CevaSearchReport {
    unsigned long total = 0;       // inputs examined
    unsigned long hyps_hold = 0;
    unsigned long conclusion_verified = 0;
    std::map<std::string, unsigned long> failures;  // by first failing hypothesis
    unsigned long inconsistencies = 0;              // must stay 0
    bool partial = false;                           // budget exhausted
};

// All admissible-shaped ratio sets with at most two intervals whose
// endpoints come from the pool (plus 0 and inf), in lexicographic order
// of their serialization.
std::vector<RatioSet> ceva_candidate_sets(const std::vector<ExtRat>& pool);

// Exhaustive scan of candidate triples; budget 0 means unlimited.
CevaSearchReport ceva_search(const std::vector<ExtRat>& pool, unsigned long budget = 0);

}  // namespace cevalat
