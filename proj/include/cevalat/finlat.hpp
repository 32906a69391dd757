#pragma once

// Finite distributive lattices as downset lattices of their
// join-irreducible posets: complete normality, minimal differences,
// Cevian operation tables and the solver, closure constructions, closed
// homomorphisms, and enumeration up to isomorphism.

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace cevalat {

// Poset of join-irreducibles on elements 0..n-1; below[i] is the
// bitmask of the principal downset of i (including i itself).
struct JIPoset {
    size_t n = 0;
    std::vector<uint32_t> below;

    bool valid() const;  // reflexive, antisymmetric, transitive
    bool leq(size_t i, size_t j) const { return (below[j] >> i) & 1u; }

    static JIPoset antichain(size_t n);
    static JIPoset chain(size_t n);
    // covers as (lower, upper) pairs; the order is the transitive closure
    static JIPoset from_covers(size_t n, const std::vector<std::pair<size_t, size_t>>& covers);

    // lexicographically least relation matrix over all relabelings
    std::vector<uint32_t> canonical_form() const;
};

// Birkhoff representation: elements are the downsets of the
// join-irreducible poset, as bitmasks, sorted ascending; index 0 is 0.
class FinDistLattice {
public:
    explicit FinDistLattice(JIPoset ji);

    static FinDistLattice chain_lattice(size_t n_elements);
    static FinDistLattice boolean_cube(size_t k);
    static FinDistLattice square_plus_zero();

    const JIPoset& ji() const { return ji_; }
    size_t size() const { return elems_.size(); }
    uint32_t element(size_t idx) const { return elems_[idx]; }
    bool is_element(uint32_t downset) const;
    size_t index_of(uint32_t downset) const;  // throws on a non-element

    size_t zero() const { return 0; }
    size_t top() const { return elems_.size() - 1; }
    size_t join(size_t a, size_t b) const { return index_of(elems_[a] | elems_[b]); }
    size_t meet(size_t a, size_t b) const { return index_of(elems_[a] & elems_[b]); }
    bool leq(size_t a, size_t b) const { return (elems_[a] & elems_[b]) == elems_[a]; }

    // minimum of a (-) b = {x : a <= b v x}, namely the downset
    // generated by a minus b.
    size_t min_diff(size_t a, size_t b) const;

    std::string elem_str(size_t idx) const;  // "{0,2}"

private:
    JIPoset ji_;
    std::vector<uint32_t> elems_;
};

struct NormalityResult {
    bool normal = false;
    std::optional<std::pair<size_t, size_t>> counterexample;
};

NormalityResult completely_normal(const FinDistLattice& D);

// Total binary operation table; op[a][b] is the element index of a \ b.
struct CevianTable {
    std::vector<std::vector<size_t>> op;
};

CevianTable min_diff_table(const FinDistLattice& D);

struct AxiomResult {
    bool ok = false;
    std::string axiom;          // "Cev1", "Cev2", "Cev3" when !ok
    std::vector<size_t> where;  // the violating pair/triple
};

// Checks Cev1-Cev3 exhaustively; also re-derives the consequence
// (x\y) ^ (y\z) <= x\z, which must follow from Cev2+Cev3 and aborts
// the process-level invariant if it does not.
AxiomResult cevian_axiom_check(const FinDistLattice& D, const CevianTable& T);

// The min-diff table when the lattice is completely normal; otherwise
// exhaustive backtracking proves no table exists.
std::optional<CevianTable> cevian_solve(const FinDistLattice& D);

// --- closure constructions (with table transport) ---

FinDistLattice product_lattice(const FinDistLattice& D, const FinDistLattice& E);
size_t product_pair(const FinDistLattice& D, const FinDistLattice& E,
                    const FinDistLattice& P, size_t a, size_t b);
CevianTable product_table(const FinDistLattice& D, const FinDistLattice& E,
                          const FinDistLattice& P, const CevianTable& TD,
                          const CevianTable& TE);

bool is_lattice_congruence(const FinDistLattice& D, const std::vector<size_t>& cls);

struct QuotientResult {
    FinDistLattice lat;
    std::vector<size_t> proj;  // element index of D -> element index of lat
    std::optional<CevianTable> table;
};
// cls assigns a class id to every element index; throws on a
// non-congruence. Transport picks the least-index section.
QuotientResult quotient_lattice(const FinDistLattice& D, const std::vector<size_t>& cls,
                                const CevianTable* table = nullptr);

struct IdealResult {
    FinDistLattice lat;
    std::vector<size_t> embed;  // element index of lat -> element index of D
    std::optional<CevianTable> table;
};
// The principal ideal below a, with the normalized variant
// x \' y = x ^ (x \ y) transported when a table is given.
IdealResult ideal_lattice(const FinDistLattice& D, size_t a,
                          const CevianTable* table = nullptr);

CevianTable normalized_table(const FinDistLattice& D, const CevianTable& T);

// --- homomorphisms ---

bool is_zero_lattice_hom(const FinDistLattice& D, const FinDistLattice& E,
                         const std::vector<size_t>& f);

struct ClosedResult {
    bool closed = false;
    // (a, a', b) with f(a) <= f(a') v b but no x as required
    std::optional<std::tuple<size_t, size_t, size_t>> counterexample;
};

// Direct quantifier sweep over the closedness definition.
ClosedResult is_closed_hom(const FinDistLattice& D, const FinDistLattice& E,
                           const std::vector<size_t>& f);

// Equivalent criterion via minimal differences, used as a cross-check:
// f closed iff f(min_diff(a,a')) <= min_diff(f(a), f(a')) for all a, a'.
bool is_closed_hom_via_min_diff(const FinDistLattice& D, const FinDistLattice& E,
                                const std::vector<size_t>& f);

// --- enumeration and round trip ---

// All join-irreducible posets with up to max_n elements, one per
// isomorphism class, in canonical order.
std::vector<JIPoset> enumerate_ji_posets(size_t max_n);

// Recovers the join-irreducible poset from abstract join/meet structure
// of a lattice (Birkhoff round trip; also used by quotient_lattice).
JIPoset ji_poset_of_abstract(size_t n, const std::vector<std::vector<size_t>>& join,
                             const std::vector<std::vector<size_t>>& meet, size_t zero_idx,
                             std::vector<uint32_t>* elem_downsets = nullptr);

}  // namespace cevalat
