#include "cevalat/psbool.hpp"

#include <algorithm>
#include <stdexcept>

#include "cevalat/cones.hpp"

namespace cevalat {

PScaledBA make_pscaled(size_t n_atoms, std::map<P3, uint32_t> scale) {
    if (n_atoms > 20) throw std::invalid_argument("make_pscaled: too many atoms");
    PScaledBA A;
    A.n_atoms = n_atoms;
    for (P3 p : p3_all())
        A.scale[p] = scale.count(p) ? scale[p] : 0u;
    uint32_t all = 0;
    for (P3 p : p3_all()) {
        if (A.scale[p] & ~A.full())
            throw std::invalid_argument("make_pscaled: e_" + p3_name(p) +
                                        " is not a subset of the atoms");
        all |= A.scale[p];
    }
    if (all != A.full())
        throw std::invalid_argument("make_pscaled: the scale ideals do not join to 1");
    for (P3 p : p3_all())
        for (P3 q : p3_all()) {
            uint32_t rhs = 0;
            for (P3 r : p3_all())
                if (p3_leq(p, r) && p3_leq(q, r)) rhs |= A.scale[r];
            if ((A.scale[p] & A.scale[q]) != rhs)
                throw std::invalid_argument("make_pscaled: e_" + p3_name(p) + " ^ e_" +
                                            p3_name(q) +
                                            " differs from the join over r >= p,q");
        }
    return A;
}

PScaledBA make_2p(P3 p) {
    std::map<P3, uint32_t> scale;
    for (P3 q : p3_all()) scale[q] = p3_leq(q, p) ? 1u : 0u;
    return make_pscaled(1, std::move(scale));
}

std::vector<P3> atom_norm(const PScaledBA& A, size_t atom) {
    std::vector<P3> out;
    for (P3 p : p3_all())
        if ((A.e(p) >> atom) & 1u) out.push_back(p);
    return out;
}

PresentedResult finitely_presented(const PScaledBA& A) {
    PresentedResult out;
    out.ok = true;
    for (size_t a = 0; a < A.n_atoms; ++a) {
        std::vector<P3> norm = atom_norm(A, a);
        std::optional<P3> largest;
        for (P3 p : norm) {
            bool top = true;
            for (P3 q : norm) top = top && p3_leq(q, p);
            if (top) largest = p;
        }
        if (largest) {
            out.tags.push_back(*largest);
        } else {
            out.ok = false;
            out.offending.push_back(a);
            out.tags.push_back(P_EMPTY);
        }
    }
    if (!out.ok) out.tags.clear();
    return out;
}

uint32_t BoolMorphism::apply(uint32_t a_set) const {
    uint32_t out = 0;
    for (size_t b = 0; b < atom_map.size(); ++b)
        if ((a_set >> atom_map[b]) & 1u) out |= 1u << b;
    return out;
}

BoolMorphism identity_morphism(const PScaledBA& A) {
    BoolMorphism f;
    for (size_t a = 0; a < A.n_atoms; ++a) f.atom_map.push_back(a);
    return f;
}

bool scale_respecting(const PScaledBA& A, const PScaledBA& B, const BoolMorphism& f,
                      P3* bad) {
    for (size_t b = 0; b < f.atom_map.size(); ++b)
        if (f.atom_map[b] >= A.n_atoms)
            throw std::invalid_argument("scale_respecting: atom map out of range");
    if (f.atom_map.size() != B.n_atoms)
        throw std::invalid_argument("scale_respecting: atom map has wrong size");
    for (P3 p : p3_all())
        if (f.apply(A.e(p)) & ~B.e(p)) {
            if (bad) *bad = p;
            return false;
        }
    return true;
}

bool is_normal_morphism(const PScaledBA& A, const PScaledBA& B, const BoolMorphism& f,
                        P3* bad) {
    if (!scale_respecting(A, B, f, bad)) return false;
    // surjectivity of the preimage map = injectivity of the atom map
    std::vector<bool> hit(A.n_atoms, false);
    for (size_t a : f.atom_map) {
        if (hit[a]) return false;
        hit[a] = true;
    }
    for (P3 p : p3_all())
        if (f.apply(A.e(p)) != B.e(p)) {
            if (bad) *bad = p;
            return false;
        }
    return true;
}

const std::vector<size_t>& LatDiagram::at(P3 p, P3 q) const {
    auto it = arrow.find({p, q});
    if (it == arrow.end()) throw std::invalid_argument("LatDiagram: no arrow");
    return it->second;
}

void LatDiagram::validate() const {
    for (auto& [pq, f] : arrow) {
        auto [p, q] = pq;
        if (!p3_leq(p, q)) throw std::invalid_argument("LatDiagram: arrow against order");
        const FinDistLattice& D = obj.at(p);
        const FinDistLattice& E = obj.at(q);
        if (!is_zero_lattice_hom(D, E, f))
            throw std::invalid_argument("LatDiagram: arrow " + p3_name(p) + "->" +
                                        p3_name(q) + " is not a 0-lattice hom");
        if (p == q)
            for (size_t x = 0; x < f.size(); ++x)
                if (f[x] != x) throw std::invalid_argument("LatDiagram: identity arrow");
    }
    for (P3 p : p3_all())
        for (P3 q : p3_all())
            for (P3 r : p3_all()) {
                if (!p3_leq(p, q) || !p3_leq(q, r)) continue;
                const auto& f = at(p, q);
                const auto& g = at(q, r);
                const auto& h = at(p, r);
                for (size_t x = 0; x < f.size(); ++x)
                    if (g[f[x]] != h[x])
                        throw std::invalid_argument("LatDiagram: composition mismatch");
            }
}

namespace {

// positions of p's elements among q's, both listed in ascending bit order
std::vector<size_t> coord_positions(P3 p, P3 q) {
    std::vector<size_t> out;
    size_t pos = 0;
    for (unsigned bit = 0; bit < 3; ++bit) {
        if ((q >> bit) & 1u) {
            if ((p >> bit) & 1u) out.push_back(pos);
            ++pos;
        }
    }
    return out;
}

// the cylinder map on face-pattern masks
uint32_t cylinder_pattern(uint32_t m, const std::vector<size_t>& img, size_t target_dim) {
    uint32_t out = 0;
    for (uint32_t t = 1; t < (1u << target_dim); ++t) {
        uint32_t r = 0;
        for (size_t k = 0; k < img.size(); ++k)
            if ((t >> img[k]) & 1u) r |= 1u << k;
        if (r != 0 && ((m >> r) & 1u)) out |= 1u << t;
    }
    return out;
}

}  // namespace

DRestriction finite_restriction_of_D() {
    DRestriction out;
    // per cube element: sorted list of closure pattern masks and the
    // index of each mask
    std::map<P3, std::vector<uint32_t>> closure;
    std::map<P3, std::map<uint32_t, size_t>> pos_of;
    for (P3 p : p3_all()) {
        size_t k = p3_card(p);
        std::vector<uint32_t> gens;
        for (size_t i = 0; i < k; ++i) {
            uint32_t h = 0;
            for (uint32_t s = 1; s < (1u << k); ++s)
                if ((s >> i) & 1u) h |= 1u << s;
            gens.push_back(h);
        }
        std::vector<uint32_t> elems{0};
        elems.insert(elems.end(), gens.begin(), gens.end());
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        for (bool grew = true; grew;) {
            grew = false;
            std::vector<uint32_t> next = elems;
            for (uint32_t a : elems)
                for (uint32_t b : elems) {
                    next.push_back(a & b);
                    next.push_back(a | b);
                }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            if (next.size() > elems.size()) {
                elems = std::move(next);
                grew = true;
            }
        }
        std::vector<std::vector<size_t>> join(elems.size(), std::vector<size_t>(elems.size())),
            meet(elems.size(), std::vector<size_t>(elems.size()));
        auto idx = [&](uint32_t m) {
            return static_cast<size_t>(
                std::lower_bound(elems.begin(), elems.end(), m) - elems.begin());
        };
        for (size_t i = 0; i < elems.size(); ++i)
            for (size_t j = 0; j < elems.size(); ++j) {
                join[i][j] = idx(elems[i] | elems[j]);
                meet[i][j] = idx(elems[i] & elems[j]);
            }
        std::vector<uint32_t> downs;
        JIPoset jp = ji_poset_of_abstract(elems.size(), join, meet, 0, &downs);
        FinDistLattice lat(jp);
        if (lat.size() != elems.size())
            throw std::logic_error("finite_restriction_of_D: closure not distributive");
        std::vector<uint32_t> pat(elems.size());
        for (size_t i = 0; i < elems.size(); ++i) {
            size_t e = lat.index_of(downs[i]);
            pat[e] = elems[i];
            pos_of[p][elems[i]] = e;
        }
        out.diagram.obj.emplace(p, std::move(lat));
        out.patterns[p] = std::move(pat);
        closure[p] = elems;
    }
    for (P3 p : p3_all())
        for (P3 q : p3_all()) {
            if (!p3_leq(p, q)) continue;
            std::vector<size_t> img = coord_positions(p, q);
            const auto& src_pat = out.patterns.at(p);
            std::vector<size_t> f(src_pat.size());
            for (size_t e = 0; e < src_pat.size(); ++e) {
                uint32_t m = cylinder_pattern(src_pat[e], img, p3_card(q));
                auto it = pos_of[q].find(m);
                if (it == pos_of[q].end())
                    throw std::logic_error(
                        "finite_restriction_of_D: cylinder image escapes the sublattice");
                f[e] = it->second;
            }
            out.diagram.arrow[{p, q}] = std::move(f);
        }
    return out;
}

Region face_region(uint32_t pattern_mask, size_t dim) {
    Region r;
    r.ambient = AmbientCone::trivial(dim);
    for (uint32_t s = 1; s < (1u << dim); ++s) {
        if (!((pattern_mask >> s) & 1u)) continue;
        Cell c;
        for (size_t i = 0; i < dim; ++i)
            c.constraints.push_back(
                Constraint{LinForm::unit(dim, i), ((s >> i) & 1u) ? Rel::GT : Rel::EQ});
        r.cells.push_back(std::move(c));
    }
    return r;
}

size_t Condensate::size() const {
    size_t n = 1;
    for (const FinDistLattice& f : factors) n *= f.size();
    return n;
}

std::vector<size_t> Condensate::tuple_of(size_t idx) const {
    std::vector<size_t> t;
    for (const FinDistLattice& f : factors) {
        t.push_back(idx % f.size());
        idx /= f.size();
    }
    return t;
}

size_t Condensate::index_of(const std::vector<size_t>& tuple) const {
    size_t idx = 0, radix = 1;
    for (size_t a = 0; a < factors.size(); ++a) {
        idx += tuple[a] * radix;
        radix *= factors[a].size();
    }
    return idx;
}

size_t Condensate::join(size_t a, size_t b) const {
    std::vector<size_t> ta = tuple_of(a), tb = tuple_of(b);
    for (size_t i = 0; i < factors.size(); ++i) ta[i] = factors[i].join(ta[i], tb[i]);
    return index_of(ta);
}

size_t Condensate::meet(size_t a, size_t b) const {
    std::vector<size_t> ta = tuple_of(a), tb = tuple_of(b);
    for (size_t i = 0; i < factors.size(); ++i) ta[i] = factors[i].meet(ta[i], tb[i]);
    return index_of(ta);
}

Condensate tensor(const PScaledBA& A, const LatDiagram& S) {
    PresentedResult pr = finitely_presented(A);
    if (!pr.ok) {
        std::string msg = "tensor: not finitely presented; offending atoms:";
        for (size_t a : pr.offending) msg += " " + std::to_string(a);
        throw std::invalid_argument(msg);
    }
    Condensate c;
    c.tags = pr.tags;
    for (P3 t : pr.tags) c.factors.push_back(S.obj.at(t));
    return c;
}

std::vector<size_t> tensor_morphism(const Condensate& CA, const Condensate& CB,
                                    const BoolMorphism& f, const LatDiagram& S) {
    if (f.atom_map.size() != CB.tags.size())
        throw std::invalid_argument("tensor_morphism: atom map size mismatch");
    for (size_t b = 0; b < f.atom_map.size(); ++b) {
        if (f.atom_map[b] >= CA.tags.size())
            throw std::invalid_argument("tensor_morphism: atom map out of range");
        if (!p3_leq(CA.tags[f.atom_map[b]], CB.tags[b]))
            throw std::invalid_argument("tensor_morphism: tag of b^phi not below tag of b");
    }
    std::vector<size_t> out(CA.size());
    for (size_t idx = 0; idx < CA.size(); ++idx) {
        std::vector<size_t> x = CA.tuple_of(idx), y(CB.tags.size());
        for (size_t b = 0; b < CB.tags.size(); ++b) {
            size_t a = f.atom_map[b];
            y[b] = S.at(CA.tags[a], CB.tags[b])[x[a]];
        }
        out[idx] = CB.index_of(y);
    }
    return out;
}

bool NormCovering::isotone() const {
    for (size_t u = 0; u < X.n; ++u)
        for (size_t w = 0; w < X.n; ++w)
            if (X.leq(u, w) && !p3_leq(norm[u], norm[w])) return false;
    return true;
}

uint32_t upper_bounds(const JIPoset& X, uint32_t Z) {
    uint32_t out = 0;
    for (size_t w = 0; w < X.n; ++w) {
        bool ub = true;
        for (size_t u = 0; u < X.n && ub; ++u)
            if ((Z >> u) & 1u) ub = X.leq(u, w);
        if (ub) out |= 1u << w;
    }
    return out;
}

uint32_t nabla(const JIPoset& X, uint32_t Z) {
    uint32_t U = upper_bounds(X, Z), out = 0;
    for (size_t w = 0; w < X.n; ++w) {
        if (!((U >> w) & 1u)) continue;
        bool minimal = true;
        for (size_t v = 0; v < X.n && minimal; ++v)
            if (v != w && ((U >> v) & 1u) && X.leq(v, w)) minimal = false;
        if (minimal) out |= 1u << w;
    }
    return out;
}

uint32_t nabla_closure(const JIPoset& X, uint32_t Z) {
    uint32_t Y = Z;
    for (bool grew = true; grew;) {
        grew = false;
        uint32_t add = nabla(X, 0);
        for (uint32_t sub = Y;; sub = (sub - 1) & Y) {
            add |= nabla(X, sub);
            if (sub == 0) break;
        }
        if (add & ~Y) {
            Y |= add;
            grew = true;
        }
    }
    return Y;
}

bool is_supported(const JIPoset& X) {
    // finite posets are always pseudo join-semilattices, and the whole
    // poset is a finite nabla-closed superset of any subset
    uint32_t full = X.n ? (uint32_t(1) << X.n) - 1 : 0;
    return (nabla_closure(X, full) & ~full) == 0;
}

FXResult build_FX(const NormCovering& nc) {
    const JIPoset& X = nc.X;
    if (nc.norm.size() != X.n || !X.valid())
        throw std::invalid_argument("build_FX: malformed norm-covering");
    if (!nc.isotone()) throw std::invalid_argument("build_FX: norm map not isotone");
    FXResult out;
    uint32_t unit_nabla = nabla(X, 0);
    for (uint32_t v = 0; v < (1u << X.n); ++v) {
        bool ok = (v & unit_nabla) != 0;  // 1 = join over nabla of the empty set
        for (size_t u = 0; u < X.n && ok; ++u)
            for (size_t w = 0; w < X.n && ok; ++w) {
                if (X.leq(u, w) && ((v >> w) & 1u) && !((v >> u) & 1u)) ok = false;
                bool lhs = ((v >> u) & 1u) && ((v >> w) & 1u);
                bool rhs = (v & nabla(X, (1u << u) | (1u << w))) != 0;
                if (lhs != rhs) ok = false;
            }
        if (ok) out.valuations.push_back(v);
    }
    out.gen.assign(X.n, 0);
    for (size_t i = 0; i < out.valuations.size(); ++i)
        for (size_t u = 0; u < X.n; ++u)
            if ((out.valuations[i] >> u) & 1u) out.gen[u] |= 1u << i;
    std::map<P3, uint32_t> scale;
    for (P3 p : p3_all()) {
        scale[p] = 0;
        for (size_t u = 0; u < X.n; ++u)
            if (p3_leq(p, nc.norm[u])) scale[p] |= out.gen[u];
    }
    out.algebra = make_pscaled(out.valuations.size(), std::move(scale));
    return out;
}

BoolMorphism pi_x(const NormCovering& nc, const FXResult& fx, size_t x) {
    if (x >= nc.X.n) throw std::invalid_argument("pi_x: no such point");
    uint32_t target = nc.X.below[x];
    auto it = std::find(fx.valuations.begin(), fx.valuations.end(), target);
    if (it == fx.valuations.end())
        throw std::logic_error("pi_x: the principal valuation is not a valuation");
    return BoolMorphism{{static_cast<size_t>(it - fx.valuations.begin())}};
}

}  // namespace cevalat
