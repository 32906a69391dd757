#pragma once

// Cube-scaled Boolean algebras at finite scale: finitely presented
// objects, 2[p], normal morphisms, norm-coverings with F(X) and pi_x,
// and condensates A (x) S over finite lattice diagrams.

#include <map>
#include <optional>
#include <vector>

#include "cevalat/diagrams.hpp"
#include "cevalat/finlat.hpp"

namespace cevalat {

// The Boolean algebra is the powerset of n_atoms atoms (subsets as
// bitmasks); every scale ideal is principal and recorded by its
// generator e_p.
struct PScaledBA {
    size_t n_atoms = 0;
    std::map<P3, uint32_t> scale;

    uint32_t full() const { return n_atoms ? (uint32_t(1) << n_atoms) - 1 : 0; }
    uint32_t e(P3 p) const { return scale.at(p); }
};

// Validates the two structural invariants (join of the scale ideals is
// the whole algebra; e_p ^ e_q is the join over r >= p,q); missing
// scale entries default to 0. Throws invalid_argument naming the
// violated invariant.
PScaledBA make_pscaled(size_t n_atoms, std::map<P3, uint32_t> scale);
PScaledBA make_2p(P3 p);

// ||a|| = {p : a in e_p}, ascending.
std::vector<P3> atom_norm(const PScaledBA& A, size_t atom);

struct PresentedResult {
    bool ok = false;
    std::vector<P3> tags;           // |a| per atom, when ok
    std::vector<size_t> offending;  // atoms whose norm has no largest element
};
PresentedResult finitely_presented(const PScaledBA& A);

// Boolean homomorphism 2^{At A} -> 2^{At B}, represented by its dual
// atom map; apply is the preimage map.
struct BoolMorphism {
    std::vector<size_t> atom_map;  // atom of B -> atom of A

    uint32_t apply(uint32_t a_set) const;
};

BoolMorphism identity_morphism(const PScaledBA& A);
bool scale_respecting(const PScaledBA& A, const PScaledBA& B, const BoolMorphism& f,
                      P3* bad = nullptr);
// Surjective with f[A^(p)] = B^(p) throughout.
bool is_normal_morphism(const PScaledBA& A, const PScaledBA& B, const BoolMorphism& f,
                        P3* bad = nullptr);

// Commutative cube-indexed diagram of finite distributive lattices with
// 0-lattice transition maps.
struct LatDiagram {
    std::map<P3, FinDistLattice> obj;
    std::map<std::pair<P3, P3>, std::vector<size_t>> arrow;  // for p <= q

    const std::vector<size_t>& at(P3 p, P3 q) const;
    void validate() const;  // 0-homs, identities, functoriality
};

// The sublattices of the cone diagram generated by the unit halfspaces,
// with the cylinder maps restricted to them. Elements are recorded by
// their orthant face pattern masks (bit s set iff the open face with
// positive coordinates s is included), which is an exact encoding.
struct DRestriction {
    LatDiagram diagram;
    std::map<P3, std::vector<uint32_t>> patterns;  // element index -> face mask
};
DRestriction finite_restriction_of_D();

// The union of open orthant faces named by the mask, as a region of the
// trivial ambient cone.
Region face_region(uint32_t pattern_mask, size_t dim);

// A (x) S: the product of S_{|a|} over the atoms of A, with elements as
// mixed-radix indices (atom 0 is the least significant digit).
struct Condensate {
    std::vector<P3> tags;
    std::vector<FinDistLattice> factors;

    size_t size() const;
    std::vector<size_t> tuple_of(size_t idx) const;
    size_t index_of(const std::vector<size_t>& tuple) const;
    size_t zero() const { return 0; }
    size_t top() const { return size() - 1; }
    size_t join(size_t a, size_t b) const;
    size_t meet(size_t a, size_t b) const;
    bool leq(size_t a, size_t b) const { return join(a, b) == b; }
};

// Throws invalid_argument listing the offending atoms when A is not
// finitely presented.
Condensate tensor(const PScaledBA& A, const LatDiagram& S);

// phi (x) S on element indices; requires f scale-respecting so that
// every |b^phi| <= |b|.
std::vector<size_t> tensor_morphism(const Condensate& CA, const Condensate& CB,
                                    const BoolMorphism& f, const LatDiagram& S);

// --- norm-coverings and F(X) ---

// X is any finite poset (JIPoset doubles as the representation); norm
// is the isotone map into the cube.
struct NormCovering {
    JIPoset X;
    std::vector<P3> norm;  // partial d: X -> P[3]

    bool isotone() const;
};

uint32_t upper_bounds(const JIPoset& X, uint32_t Z);
// Minimal upper bounds of the subset; for a finite poset the upper
// bound set is always generated by these.
uint32_t nabla(const JIPoset& X, uint32_t Z);
// Least nabla-closed superset.
uint32_t nabla_closure(const JIPoset& X, uint32_t Z);
bool is_supported(const JIPoset& X);

struct FXResult {
    PScaledBA algebra;                 // atoms are the valuations
    std::vector<uint32_t> valuations;  // masks over X, ascending
    std::vector<uint32_t> gen;         // cylinder of each u, mask over atoms
};
// Realizes F(X) as the algebra of subsets of the valuation set.
FXResult build_FX(const NormCovering& nc);

// F(X) -> 2[d(x)], the evaluation at the principal valuation of x.
BoolMorphism pi_x(const NormCovering& nc, const FXResult& fx, size_t x);

}  // namespace cevalat
