#pragma once

// The cube-indexed non-commutative diagram of presented l-groups, the
// commutative lattice diagram of cone lattices, the connecting natural
// transformation, and the no-Cevian-family checker/refuter/scanner.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cevalat/ceva.hpp"
#include "cevalat/lterm.hpp"

namespace cevalat {

// Elements of the cube P[3] as subset bitmasks of {1,2,3}.
using P3 = unsigned;
inline constexpr P3 P_EMPTY = 0, P_1 = 1, P_2 = 2, P_3 = 4, P_12 = 3, P_13 = 5,
                    P_23 = 6, P_123 = 7;

std::vector<P3> p3_all();
std::string p3_name(P3 p);
std::optional<P3> p3_parse(const std::string& name);
inline bool p3_leq(P3 p, P3 q) { return (p & q) == p; }
inline size_t p3_card(P3 p) { return static_cast<size_t>(__builtin_popcount(p)); }

// The presentation of A_p on its canonical generators.
Presentation presentation_of(P3 p);

// Generator-substitution l-homomorphism between presentations.
struct SubstMap {
    std::map<std::string, std::string> sub;  // domain generator -> target generator

    bool operator==(const SubstMap& o) const { return sub == o.sub; }
    SubstMap then(const SubstMap& next) const;
    LTermPtr apply(const LTermPtr& t) const;
    std::string str() const;
};

struct DiagramA {
    std::map<P3, Presentation> obj;
    std::map<std::pair<P3, P3>, std::vector<SubstMap>> hom;

    const std::vector<SubstMap>& homset(P3 p, P3 q) const;
    bool is_commutative() const;  // every homset a singleton
};

DiagramA build_diagram_A();
// Def 2.1: identities present and composites contained in homsets.
bool diagram_closed(const DiagramA& d);

// The two maps A_1 -> A_123 induce the same closed map on principal
// ideal lattices: their images of the generator are asymptotic.
bool check_idc_collapse();

// Diagram D: object at p is O_{|p|} (with 2 = O_1 and {0} = O_0) and
// every arrow is the cylinder map along a coordinate injection.
struct CoordInj {
    std::vector<size_t> img;  // img[k] = target coordinate of source coordinate k
    size_t target_dim = 0;

    bool operator==(const CoordInj& o) const {
        return img == o.img && target_dim == o.target_dim;
    }
    CoordInj then(const CoordInj& next) const;
};

struct DiagramD {
    std::map<P3, size_t> dim;
    std::map<std::pair<P3, P3>, std::vector<CoordInj>> hom;

    const std::vector<CoordInj>& homset(P3 p, P3 q) const;
};

DiagramD build_diagram_D();
Region apply_cylinder(const CoordInj& inj, const Region& r);
// All composite equalities, evaluated on a generating family of regions.
bool check_D_commutative(std::string* detail = nullptr);

// The transformation eta: coordinates each generator of A_p occupies in
// D_p (the primed generator shares the coordinate of its plain twin).
std::map<std::string, size_t> eta_coords(P3 p);
Region eta_image(P3 p, const LTermPtr& t);

struct SquareFailure {
    P3 p, q;
    std::string term;
    std::vector<Rat> witness;  // point separating the two sides
};

// Naturality term pool over the generators of A_p; depth is the number
// of lattice-combination rounds applied to the difference atoms.
std::vector<LTermPtr> naturality_pool(P3 p, int depth);
std::vector<SquareFailure> check_eta_naturality(int depth = 3);

// --- The no-Cevian-family lemma at desk scale ---

struct Lemma43Candidate {
    LTermPtr c12, c21, c23, c32, c13, c31;

    const LTermPtr& at(int i, int j) const;
};

struct Lemma43Verdict {
    bool pass_ii = false, pass_iii = false, pass_iv = false;
    std::string failed;  // label of the first failed condition
    std::optional<std::vector<Rat>> witness;  // point of K_123 refuting it

    bool all_pass() const { return pass_ii && pass_iii && pass_iv; }
};

struct Lemma43Inconsistency : std::logic_error {
    explicit Lemma43Inconsistency(const std::string& w) : std::logic_error(w) {}
};

// Decides (ii), (iii), (iv) as exact support facts on K_123; an
// all-pass would falsify the lemma and aborts instead of returning.
Lemma43Verdict lemma43_check(const Lemma43Candidate& cand);

struct Lemma43Refutation {
    enum class Mode { Endgame, ChainViolation };
    Mode mode;
    RatioSet U12, U21, U23, U32, U13, U31;
    std::optional<Rat> lambda, mu;
    // f sends (a, a', b, c) to (1, 2, lambda, lambda*mu).
    std::vector<Rat> f_point;
    std::vector<Rat> canonical_values;  // of (la-b)+, (mb-c)+, (lma'-c)+ at f_point
    std::optional<std::vector<Rat>> chain_witness;  // K_123 point, ChainViolation mode
    std::string detail;
};

Lemma43Refutation lemma43_refute_pipeline(const Lemma43Candidate& cand);

// The depth-1 candidate pool for one slot: (p*g - q*h)+ for p,q in
// {1,2,3} over the ordered generator pair, closed under one meet/join
// level.
std::vector<LTermPtr> lemma43_slot_pool(const std::string& g, const std::string& h);

struct Lemma43ScanReport {
    unsigned long slot_pool_size = 0;
    unsigned long pairs12_compatible = 0;  // (c12, c21) passing (ii) and (iii)
    unsigned long pairs23_compatible = 0;
    unsigned long triples_checked = 0;     // (c12, c23, c13) with completable pairs
    unsigned long all_pass_tuples = 0;     // full six-slot families; must be 0
    unsigned long support_classes = 0;     // distinct (U12, U23, U13) classes
    unsigned long pipelines_completed = 0;
    unsigned long endgame_classes = 0, chain_violation_classes = 0;
};

Lemma43ScanReport lemma43_scan();

}  // namespace cevalat
