#pragma once

// Terms in the similarity type (0, +, -, \/, /\) with positive rational
// scalars: parsing, exact evaluation, compilation to piecewise-linear
// form over a presentation cone, supports, and the divisibility
// preorders propto / asymp.

#include <map>
#include <memory>
#include <set>
#include <string>

#include "cevalat/cones.hpp"

namespace cevalat {

enum class LKind { Zero, Var, Neg, Add, Meet, Join, Scale };

struct LTerm;
using LTermPtr = std::shared_ptr<const LTerm>;

struct LTerm {
    LKind kind;
    std::string name;  // Var
    Rat scale;         // Scale
    LTermPtr a, b;
};

LTermPtr lt_zero();
LTermPtr lt_var(std::string name);
LTermPtr lt_neg(LTermPtr t);
LTermPtr lt_add(LTermPtr a, LTermPtr b);
LTermPtr lt_sub(LTermPtr a, LTermPtr b);
LTermPtr lt_meet(LTermPtr a, LTermPtr b);
LTermPtr lt_join(LTermPtr a, LTermPtr b);
LTermPtr lt_scale(Rat q, LTermPtr t);  // q > 0
inline LTermPtr lt_pos(LTermPtr t) { return lt_join(std::move(t), lt_zero()); }
inline LTermPtr lt_abs(LTermPtr t) { return lt_join(t, lt_neg(t)); }

bool lterm_equal(const LTermPtr& a, const LTermPtr& b);
std::set<std::string> lterm_vars(const LTermPtr& t);

// Grammar: t ::= 0 | ident | q*t | -t | t+t | t-t | t \/ t | t /\ t
//              | (t) | pos(t) | abs(t)
// with \/ and /\ binding tighter than + and -.
LTermPtr parse_lterm(const std::string& src);
std::string print_lterm(const LTermPtr& t);

Rat eval_lterm(const LTermPtr& t, const std::map<std::string, Rat>& point);

// Finitely presented Abelian l-group: named generators plus the
// relation cone over their coordinates.
struct Presentation {
    std::vector<std::string> generators;
    AmbientCone ambient;  // dimension == generators.size()

    size_t index_of(const std::string& name) const;
    std::map<std::string, size_t> coord_map() const;
};

struct Piece {
    Cell cell;
    LinForm form;
};

// Piecewise-linear normal form: cells covering the ambient cone (up to
// section-empty slivers through the origin) with the linear functional
// the term equals on each.
struct PLFun {
    AmbientCone ambient;
    std::vector<Piece> pieces;
};

// var_to_coord lets distinct generators share a coordinate (used for
// substitution along diagram maps).
PLFun compile_plfun(const LTermPtr& t, const std::map<std::string, size_t>& var_to_coord,
                    const AmbientCone& ambient);
PLFun compile_plfun(const LTermPtr& t, const Presentation& p);

// Evaluation through the pieces; the origin short-circuits to 0 by
// homogeneity.
Rat plfun_eval(const PLFun& f, const std::vector<Rat>& x);

enum class SupportMode { Nonzero, Positive };

Region compile_support(const LTermPtr& t, const std::map<std::string, size_t>& var_to_coord,
                       const AmbientCone& ambient, SupportMode mode);
Region compile_support(const LTermPtr& t, const Presentation& p, SupportMode mode);

// x propto y iff x <= n*y for some positive integer n; decided as
// containment of |s|-support in |t|-support over the presentation cone.
bool propto(const LTermPtr& s, const LTermPtr& t, const Presentation& p);
bool asymp(const LTermPtr& s, const LTermPtr& t, const Presentation& p);

}  // namespace cevalat
