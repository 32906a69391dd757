#include "cevalat/diagrams.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cevalat {

std::vector<P3> p3_all() {
    return {P_EMPTY, P_1, P_2, P_3, P_12, P_13, P_23, P_123};
}

std::string p3_name(P3 p) {
    if (p == P_EMPTY) return "empty";
    std::string s;
    for (int e = 1; e <= 3; ++e)
        if (p & (1u << (e - 1))) s += static_cast<char>('0' + e);
    return s;
}

std::optional<P3> p3_parse(const std::string& name) {
    if (name == "empty") return P_EMPTY;
    P3 p = 0;
    char last = '0';
    for (char c : name) {
        if (c < '1' || c > '3' || c <= last) return std::nullopt;
        p |= 1u << (c - '1');
        last = c;
    }
    if (name.empty()) return std::nullopt;
    return p;
}

Presentation presentation_of(P3 p) {
    auto free_pres = [](std::vector<std::string> gens) {
        size_t n = gens.size();
        return Presentation{std::move(gens), AmbientCone::trivial(n)};
    };
    switch (p) {
        case P_EMPTY: return free_pres({});
        case P_1: return free_pres({"a"});
        case P_2: return free_pres({"b"});
        case P_3: return free_pres({"c"});
        case P_12: return free_pres({"a", "b"});
        case P_13: return free_pres({"a'", "c"});
        case P_23: return free_pres({"b", "c"});
        case P_123: {
            // K_123: x_a <= x_a' <= 2 x_a besides positivity.
            LinForm up(4), down(4);
            up.coeffs = {Rat(-1), Rat(1), Rat(0), Rat(0)};    // x_a' - x_a >= 0
            down.coeffs = {Rat(2), Rat(-1), Rat(0), Rat(0)};  // 2 x_a - x_a' >= 0
            AmbientCone amb{4, {{up, Rel::GE}, {down, Rel::GE}}};
            return Presentation{{"a", "a'", "b", "c"}, amb};
        }
        default: throw std::invalid_argument("presentation_of: not a subset of [3]");
    }
}

SubstMap SubstMap::then(const SubstMap& next) const {
    SubstMap out;
    for (const auto& [g, img] : sub) out.sub[g] = next.sub.at(img);
    return out;
}

LTermPtr SubstMap::apply(const LTermPtr& t) const {
    switch (t->kind) {
        case LKind::Zero: return t;
        case LKind::Var: return lt_var(sub.at(t->name));
        case LKind::Neg: return lt_neg(apply(t->a));
        case LKind::Add: return lt_add(apply(t->a), apply(t->b));
        case LKind::Meet: return lt_meet(apply(t->a), apply(t->b));
        case LKind::Join: return lt_join(apply(t->a), apply(t->b));
        case LKind::Scale: return lt_scale(t->scale, apply(t->a));
    }
    throw std::logic_error("SubstMap::apply: bad kind");
}

std::string SubstMap::str() const {
    std::string s = "{";
    for (const auto& [g, img] : sub) {
        if (s.size() > 1) s += ", ";
        s += g + " -> " + img;
    }
    return s + "}";
}

namespace {

// Generator the element e of [3] contributes to A_p.
std::string elem_gen(int e, P3 p) {
    switch (e) {
        case 1: return p == P_13 ? "a'" : "a";
        case 2: return "b";
        case 3: return "c";
    }
    throw std::logic_error("elem_gen");
}

bool p3_covers(P3 p, P3 q) {  // q covers p
    return p3_leq(p, q) && p3_card(q) == p3_card(p) + 1;
}

SubstMap cover_subst(P3 p, P3 q) {
    SubstMap m;
    for (int e = 1; e <= 3; ++e)
        if (p & (1u << (e - 1))) {
            // The one non-inclusion arrow of the diagram: alpha_1^13.
            std::string img = (e == 1 && p == P_1 && q == P_13) ? "a'" : elem_gen(e, p);
            m.sub[elem_gen(e, p)] = (q == P_123) ? img : elem_gen(e, q);
        }
    return m;
}

template <typename M>
void push_unique(std::vector<M>& v, const M& m) {
    if (std::find(v.begin(), v.end(), m) == v.end()) v.push_back(m);
}

}  // namespace

const std::vector<SubstMap>& DiagramA::homset(P3 p, P3 q) const {
    return hom.at({p, q});
}

bool DiagramA::is_commutative() const {
    for (const auto& [pq, maps] : hom)
        if (maps.size() != 1) return false;
    return true;
}

DiagramA build_diagram_A() {
    DiagramA d;
    for (P3 p : p3_all()) d.obj[p] = presentation_of(p);
    // hom(p,q) = all composites of cover substitutions, deduplicated.
    for (P3 p : p3_all()) {
        SubstMap id;
        for (const std::string& g : d.obj[p].generators) id.sub[g] = g;
        d.hom[{p, p}] = {id};
    }
    for (size_t diff = 1; diff <= 3; ++diff)
        for (P3 p : p3_all())
            for (P3 q : p3_all()) {
                if (!p3_leq(p, q) || p3_card(q) != p3_card(p) + diff) continue;
                std::vector<SubstMap> maps;
                for (P3 r : p3_all()) {
                    if (!p3_covers(p, r) || !p3_leq(r, q)) continue;
                    SubstMap first = cover_subst(p, r);
                    for (const SubstMap& rest : d.hom[{r, q}])
                        push_unique(maps, first.then(rest));
                }
                d.hom[{p, q}] = std::move(maps);
            }
    return d;
}

bool diagram_closed(const DiagramA& d) {
    for (const auto& [p, pres] : d.obj) {
        auto it = d.hom.find({p, p});
        if (it == d.hom.end() || it->second.empty()) return false;
    }
    for (const auto& [pq, us] : d.hom)
        for (const auto& [qr, vs] : d.hom) {
            if (pq.second != qr.first) continue;
            const auto& target = d.hom.at({pq.first, qr.second});
            for (const SubstMap& u : us)
                for (const SubstMap& v : vs)
                    if (std::find(target.begin(), target.end(), u.then(v)) == target.end())
                        return false;
        }
    return true;
}

bool check_idc_collapse() {
    DiagramA d = build_diagram_A();
    const auto& maps = d.homset(P_1, P_123);
    if (maps.size() != 2) return false;
    LTermPtr gen = lt_var("a");
    LTermPtr im0 = maps[0].apply(gen), im1 = maps[1].apply(gen);
    Presentation p123 = presentation_of(P_123);
    if (!asymp(im0, im1, p123)) return false;
    // The induced closed maps agree because the images have equal supports.
    Region s0 = compile_support(im0, p123, SupportMode::Nonzero);
    Region s1 = compile_support(im1, p123, SupportMode::Nonzero);
    return region_equal(s0, s1) && !d.is_commutative();
}

CoordInj CoordInj::then(const CoordInj& next) const {
    CoordInj out;
    out.target_dim = next.target_dim;
    out.img.reserve(img.size());
    for (size_t k : img) out.img.push_back(next.img[k]);
    return out;
}

const std::vector<CoordInj>& DiagramD::homset(P3 p, P3 q) const {
    return hom.at({p, q});
}

namespace {

CoordInj cover_inj(P3 p, P3 q) {
    CoordInj inj;
    inj.target_dim = p3_card(q);
    for (int e = 1; e <= 3; ++e)
        if (p & (1u << (e - 1))) {
            size_t pos = 0;
            for (int f = 1; f < e; ++f)
                if (q & (1u << (f - 1))) ++pos;
            inj.img.push_back(pos);
        }
    return inj;
}

}  // namespace

DiagramD build_diagram_D() {
    DiagramD d;
    for (P3 p : p3_all()) d.dim[p] = p3_card(p);
    for (P3 p : p3_all()) {
        CoordInj id;
        id.target_dim = d.dim[p];
        for (size_t k = 0; k < d.dim[p]; ++k) id.img.push_back(k);
        d.hom[{p, p}] = {id};
    }
    for (size_t diff = 1; diff <= 3; ++diff)
        for (P3 p : p3_all())
            for (P3 q : p3_all()) {
                if (!p3_leq(p, q) || p3_card(q) != p3_card(p) + diff) continue;
                std::vector<CoordInj> maps;
                for (P3 r : p3_all()) {
                    if (!p3_covers(p, r) || !p3_leq(r, q)) continue;
                    CoordInj first = cover_inj(p, r);
                    for (const CoordInj& rest : d.hom[{r, q}])
                        push_unique(maps, first.then(rest));
                }
                d.hom[{p, q}] = std::move(maps);
            }
    return d;
}

Region apply_cylinder(const CoordInj& inj, const Region& r) {
    Region out;
    out.ambient = AmbientCone::trivial(inj.target_dim);
    for (const Cell& cell : r.cells) {
        Cell mapped;
        for (const Constraint& c : cell.constraints) {
            LinForm f(inj.target_dim);
            for (size_t k = 0; k < c.form.dim(); ++k) f.coeffs[inj.img[k]] = c.form.coeffs[k];
            mapped.constraints.push_back({f, c.rel});
        }
        out.cells.push_back(std::move(mapped));
    }
    return out;
}

namespace {

Region strict_region(size_t n, std::vector<std::vector<Rat>> cells_coeffs) {
    Region r;
    r.ambient = AmbientCone::trivial(n);
    for (auto& coeffs : cells_coeffs) {
        LinForm f(n);
        f.coeffs = std::move(coeffs);
        r.cells.push_back(Cell{{{f, Rel::GT}}});
    }
    return r;
}

// A small generating family of regions of O_n for the commutativity check.
std::vector<Region> generating_regions(size_t n) {
    std::vector<Region> out;
    out.push_back(Region{AmbientCone::trivial(n), {}});  // bottom
    if (n == 0) return out;
    for (size_t i = 0; i < n; ++i) {
        std::vector<Rat> coeffs(n);
        coeffs[i] = Rat(1);
        out.push_back(strict_region(n, {coeffs}));
    }
    if (n >= 2) {
        out.push_back(strict_region(n, {{Rat(1), Rat(-1)}}));              // x1 > x2
        out.push_back(strict_region(n, {{Rat(1)}, {Rat(-2), Rat(3)}}));    // union
        Region mixed;
        mixed.ambient = AmbientCone::trivial(n);
        LinForm f(n), g(n);
        f.coeffs[0] = Rat(2);
        f.coeffs[1] = Rat(-3);
        g.coeffs[1] = Rat(1);
        mixed.cells.push_back(Cell{{{f, Rel::GE}, {g, Rel::GT}}});
        out.push_back(mixed);
    }
    for (Region& r : out)
        for (Cell& c : r.cells)
            for (Constraint& k : c.constraints) k.form.coeffs.resize(n);
    return out;
}

// Every composite of cover arrows from p to q.
void all_paths(const DiagramD& d, P3 p, P3 q, const CoordInj& prefix,
               std::vector<CoordInj>& out) {
    if (p == q) {
        out.push_back(prefix);
        return;
    }
    for (P3 r : p3_all())
        if (p3_covers(p, r) && p3_leq(r, q))
            all_paths(d, r, q, prefix.then(cover_inj(p, r)), out);
}

}  // namespace

bool check_D_commutative(std::string* detail) {
    DiagramD d = build_diagram_D();
    for (P3 p : p3_all())
        for (P3 q : p3_all()) {
            if (!p3_leq(p, q) || p == q) continue;
            CoordInj id;
            id.target_dim = d.dim[p];
            for (size_t k = 0; k < d.dim[p]; ++k) id.img.push_back(k);
            std::vector<CoordInj> paths;
            all_paths(d, p, q, id, paths);
            if (d.homset(p, q).size() != 1) {
                if (detail) *detail = "homset(" + p3_name(p) + "," + p3_name(q) + ") not a singleton";
                return false;
            }
            for (const Region& r : generating_regions(d.dim[p])) {
                Region first = apply_cylinder(paths[0], r);
                for (size_t k = 1; k < paths.size(); ++k)
                    if (!region_equal(first, apply_cylinder(paths[k], r))) {
                        if (detail)
                            *detail = "composites " + p3_name(p) + " -> " + p3_name(q) +
                                      " disagree on a generating region";
                        return false;
                    }
            }
        }
    return true;
}

std::map<std::string, size_t> eta_coords(P3 p) {
    std::map<std::string, size_t> m;
    size_t pos = 0;
    for (int e = 1; e <= 3; ++e)
        if (p & (1u << (e - 1))) {
            m[elem_gen(e, p)] = pos;
            if (e == 1 && p == P_123) m["a'"] = pos;  // the collapse x_a' -> x_a
            ++pos;
        }
    return m;
}

Region eta_image(P3 p, const LTermPtr& t) {
    return compile_support(t, eta_coords(p), AmbientCone::trivial(p3_card(p)),
                           SupportMode::Nonzero);
}

std::vector<LTermPtr> naturality_pool(P3 p, int depth) {
    std::vector<std::string> gens = presentation_of(p).generators;
    std::vector<LTermPtr> atoms;
    atoms.push_back(lt_zero());
    for (const std::string& g : gens) atoms.push_back(lt_var(g));
    for (const std::string& g : gens)
        for (const std::string& h : gens) {
            if (g == h) continue;
            LTermPtr vg = lt_var(g), vh = lt_var(h);
            atoms.push_back(lt_pos(lt_sub(vg, vh)));
            atoms.push_back(lt_pos(lt_sub(lt_scale(Rat(2), vg), vh)));
            atoms.push_back(lt_pos(lt_sub(vg, lt_scale(Rat(2), vh))));
        }
    std::vector<LTermPtr> pool = atoms;
    std::set<std::string> seen;
    for (const LTermPtr& t : pool) seen.insert(print_lterm(t));
    const size_t cap = 300;
    for (int round = 2; round <= depth && pool.size() < cap; ++round) {
        std::vector<LTermPtr> snapshot = pool;
        for (const LTermPtr& u : snapshot) {
            for (const LTermPtr& v : atoms) {
                if (v->kind == LKind::Zero) continue;
                for (int op = 0; op < 2; ++op) {
                    LTermPtr t = op ? lt_meet(u, v) : lt_join(u, v);
                    if (seen.insert(print_lterm(t)).second) {
                        pool.push_back(t);
                        if (pool.size() >= cap) return pool;
                    }
                }
            }
        }
    }
    return pool;
}

std::vector<SquareFailure> check_eta_naturality(int depth) {
    DiagramA a = build_diagram_A();
    std::vector<SquareFailure> failures;
    for (P3 p : p3_all())
        for (P3 q : p3_all()) {
            if (!p3_covers(p, q)) continue;
            CoordInj inj = cover_inj(p, q);
            std::vector<LTermPtr> pool = naturality_pool(p, depth);
            for (const SubstMap& alpha : a.homset(p, q))
                for (const LTermPtr& t : pool) {
                    Region lhs = eta_image(q, alpha.apply(t));
                    Region rhs = apply_cylinder(inj, eta_image(p, t));
                    if (region_equal(lhs, rhs)) continue;
                    SquareFailure f{p, q, print_lterm(t), {}};
                    SubsetResult s = region_subset(lhs, rhs);
                    if (s.holds) s = region_subset(rhs, lhs);
                    if (s.witness) f.witness = *s.witness;
                    failures.push_back(std::move(f));
                }
        }
    return failures;
}

// --- the no-Cevian-family lemma ---

namespace {

Presentation slot_presentation(int i, int j) {
    int lo = std::min(i, j), hi = std::max(i, j);
    if (lo == 1 && hi == 2) return presentation_of(P_12);
    if (lo == 2 && hi == 3) return presentation_of(P_23);
    if (lo == 1 && hi == 3) return presentation_of(P_13);
    throw std::invalid_argument("slot_presentation: bad pair");
}

std::optional<std::vector<Rat>> region_witness(const Region& r) {
    for (const Cell& c : r.cells)
        if (auto w = cell_witness(r.ambient, c)) return w;
    return std::nullopt;
}

void validate_slot_term(const LTermPtr& t, int i, int j) {
    Presentation pres = slot_presentation(i, j);
    for (const std::string& v : lterm_vars(t))
        if (std::find(pres.generators.begin(), pres.generators.end(), v) ==
            pres.generators.end())
            throw std::invalid_argument("candidate term for c" + std::to_string(i) +
                                        std::to_string(j) + " uses foreign generator " + v);
    Region nz = compile_support(t, pres, SupportMode::Nonzero);
    Region pos = compile_support(t, pres, SupportMode::Positive);
    if (!region_equal(nz, pos))
        throw std::invalid_argument("candidate term for c" + std::to_string(i) +
                                    std::to_string(j) + " is not nonnegative");
}

RatioSet slot_ratioset(const LTermPtr& t, int i, int j) {
    Presentation pres = slot_presentation(i, j);
    return region_to_ratioset(compile_support(t, pres, SupportMode::Nonzero));
}

std::map<std::string, Rat> full_point(const Rat& a, const Rat& ap, const Rat& b,
                                      const Rat& c) {
    return {{"a", a}, {"a'", ap}, {"b", b}, {"c", c}};
}

LTermPtr scaled_gen(const Rat& q, const std::string& g) {
    return q == Rat(1) ? lt_var(g) : lt_scale(q, lt_var(g));
}

LTermPtr wedge_term(const Rat& p, const std::string& g, const Rat& q, const std::string& h) {
    return lt_pos(lt_sub(scaled_gen(p, g), scaled_gen(q, h)));
}

}  // namespace

const LTermPtr& Lemma43Candidate::at(int i, int j) const {
    if (i == 1 && j == 2) return c12;
    if (i == 2 && j == 1) return c21;
    if (i == 2 && j == 3) return c23;
    if (i == 3 && j == 2) return c32;
    if (i == 1 && j == 3) return c13;
    if (i == 3 && j == 1) return c31;
    throw std::invalid_argument("Lemma43Candidate::at: bad pair");
}

Lemma43Verdict lemma43_check(const Lemma43Candidate& cand) {
    static const int pairs[6][2] = {{1, 2}, {2, 1}, {2, 3}, {3, 2}, {1, 3}, {3, 1}};
    for (auto& pr : pairs) validate_slot_term(cand.at(pr[0], pr[1]), pr[0], pr[1]);

    Presentation p123 = presentation_of(P_123);
    auto suppK = [&](const LTermPtr& t) {
        return compile_support(t, p123, SupportMode::Nonzero);
    };
    Region sgen[3] = {suppK(lt_var("a")), suppK(lt_var("b")), suppK(lt_var("c"))};
    auto gen_supp = [&](int e) -> const Region& { return sgen[e - 1]; };
    std::map<std::pair<int, int>, Region> sc;
    for (auto& pr : pairs) sc[{pr[0], pr[1]}] = suppK(cand.at(pr[0], pr[1]));

    struct Check {
        std::string label;
        bool ok;
        std::optional<std::vector<Rat>> wit;
    };
    std::vector<Check> checks;
    // (ii): a_i <= a_j v c_ij for {i,j} in {{1,2},{2,3}}.
    for (auto [i, j] : {std::pair{1, 2}, {2, 1}, {2, 3}, {3, 2}}) {
        SubsetResult s = region_subset(gen_supp(i), region_join(gen_supp(j), sc[{i, j}]));
        checks.push_back({"ii(" + std::to_string(i) + "," + std::to_string(j) + ")", s.holds,
                          s.witness});
    }
    size_t n_ii = checks.size();
    // (iii): c_ij ^ c_ji = 0 for the same pairs.
    for (auto [i, j] : {std::pair{1, 2}, {2, 3}}) {
        Region m = region_prune(region_meet(sc[{i, j}], sc[{j, i}]));
        checks.push_back({"iii(" + std::to_string(i) + "," + std::to_string(j) + ")",
                          m.cells.empty(), region_witness(m)});
    }
    size_t n_iii = checks.size();
    // (iv): c12 ^ c23 <= c13 <= c12 v c23.
    {
        SubsetResult lo = region_subset(region_meet(sc[{1, 2}], sc[{2, 3}]), sc[{1, 3}]);
        checks.push_back({"iv-left", lo.holds, lo.witness});
        SubsetResult hi = region_subset(sc[{1, 3}], region_join(sc[{1, 2}], sc[{2, 3}]));
        checks.push_back({"iv-right", hi.holds, hi.witness});
    }

    Lemma43Verdict v;
    v.pass_ii = v.pass_iii = v.pass_iv = true;
    for (size_t k = 0; k < checks.size(); ++k) {
        if (checks[k].ok) continue;
        bool& group = k < n_ii ? v.pass_ii : k < n_iii ? v.pass_iii : v.pass_iv;
        group = false;
        if (v.failed.empty()) {
            v.failed = checks[k].label;
            v.witness = checks[k].wit;
        }
    }
    if (v.all_pass())
        throw Lemma43Inconsistency(
            "lemma43_check: all conditions passed; this falsifies the lemma");
    return v;
}

Lemma43Refutation lemma43_refute_pipeline(const Lemma43Candidate& cand) {
    Lemma43Verdict v = lemma43_check(cand);
    if (!v.pass_ii || !v.pass_iii)
        throw std::invalid_argument(
            "lemma43_refute_pipeline: candidate must pass conditions (ii) and (iii)");

    Lemma43Refutation out;
    out.U12 = slot_ratioset(cand.c12, 1, 2);
    out.U21 = slot_ratioset(cand.c21, 2, 1);
    out.U23 = slot_ratioset(cand.c23, 2, 3);
    out.U32 = slot_ratioset(cand.c32, 3, 2);
    out.U13 = slot_ratioset(cand.c13, 1, 3);
    out.U31 = slot_ratioset(cand.c31, 3, 1);

    auto inconsistent = [](const std::string& step) {
        throw Lemma43Inconsistency("lemma43_refute_pipeline: derivation broke at " + step);
    };

    // The (C1)/(C2) consequences as region facts of O_3.
    AmbientCone o3 = AmbientCone::trivial(3);
    auto pos_region = [&](int i) {
        LinForm f(3);
        f.coeffs[i - 1] = Rat(1);
        return region_from_cell(o3, Cell{{{f, Rel::GT}}});
    };
    auto cyl = [&](const RatioSet& u, int i, int j) { return ceva_cylinder(u, i, j); };
    Region c12r = cyl(out.U12, 1, 2), c21r = cyl(out.U21, 1, 2);
    Region c23r = cyl(out.U23, 2, 3), c32r = cyl(out.U32, 2, 3);
    Region c13r = cyl(out.U13, 1, 3);
    if (!region_subset(pos_region(1), region_join(pos_region(2), c12r)).holds ||
        !region_subset(pos_region(2), region_join(pos_region(1), c21r)).holds ||
        !region_subset(pos_region(2), region_join(pos_region(3), c23r)).holds ||
        !region_subset(pos_region(3), region_join(pos_region(2), c32r)).holds)
        inconsistent("(C1)");
    if (!region_is_empty(region_meet(c12r, c21r)) ||
        !region_is_empty(region_meet(c23r, c32r)))
        inconsistent("(C2)");

    // Derived along the proof: 0 in U12, U23; U12, U23 bounded.
    if (!out.U12.contains_zero() || !out.U23.contains_zero()) inconsistent("0 in U12, U23");
    auto bounded = [](const RatioSet& u) {
        return u.is_empty() || !u.intervals().back().hi.is_infinite();
    };
    if (!bounded(out.U12) || !bounded(out.U23)) inconsistent("boundedness of U12, U23");

    out.lambda = out.U12.initial_bound();
    out.mu = out.U23.initial_bound();
    if (out.lambda && out.mu) {
        Rat lambda = *out.lambda, mu = *out.mu, lm = lambda * mu;
        // ceva_check on the forced shape extracts (lambda, mu) exactly.
        CevaVerdict cv =
            ceva_check(CevaInput{out.U12, out.U23, RatioSet::initial(lm)});
        if (!cv.all_hypotheses() || !cv.conclusion || cv.conclusion->first != lambda ||
            cv.conclusion->second != mu)
            inconsistent("ceva extraction of (lambda, mu)");

        LTermPtr t12 = wedge_term(lambda, "a", Rat(1), "b");
        LTermPtr t23 = wedge_term(mu, "b", Rat(1), "c");
        LTermPtr t13 = wedge_term(lm, "a'", Rat(1), "c");
        if (!asymp(cand.c12, t12, slot_presentation(1, 2))) inconsistent("c12 ~ (la-b)+");
        if (!asymp(cand.c23, t23, slot_presentation(2, 3))) inconsistent("c23 ~ (mb-c)+");

        out.f_point = {Rat(1), Rat(2), lambda, lm};
        auto pt = full_point(Rat(1), Rat(2), lambda, lm);
        out.canonical_values = {eval_lterm(t12, pt), eval_lterm(t23, pt),
                                eval_lterm(t13, pt)};
        if (!out.canonical_values[0].is_zero() || !out.canonical_values[1].is_zero() ||
            out.canonical_values[2] != lm)
            inconsistent("f-evaluation (expected 0, 0, lambda*mu)");

        if (out.U13 == RatioSet::initial(lm)) {
            if (!asymp(cand.c13, t13, slot_presentation(1, 3)))
                inconsistent("c13 ~ (lm a'-c)+");
            Rat v12 = eval_lterm(cand.c12, pt), v23 = eval_lterm(cand.c23, pt),
                v13 = eval_lterm(cand.c13, pt);
            if (!v12.is_zero() || !v23.is_zero() || v13.is_zero())
                inconsistent("direct (iv) witness at the f-point");
            out.mode = Lemma43Refutation::Mode::Endgame;
            out.detail =
                "at f = (1, 2, " + lambda.str() + ", " + lm.str() +
                ") the term (" + lm.str() + "*a' - c)+ evaluates to " + lm.str() +
                " > 0 while (" + lambda.str() + "*a - b)+ and (" + mu.str() +
                "*b - c)+ both vanish, so the right inclusion of (iv) fails";
            return out;
        }
        // U13 deviates from the forced [0, lambda*mu): the chain itself breaks.
        CevaVerdict actual = ceva_check(CevaInput{out.U12, out.U23, out.U13});
        if (actual.hyp_chain || !actual.witness) inconsistent("expected chain violation");
        const std::vector<Rat>& w = *actual.witness;
        out.chain_witness = std::vector<Rat>{w[0], w[0], w[1], w[2]};
        auto lifted = full_point(w[0], w[0], w[1], w[2]);
        Rat v12 = eval_lterm(cand.c12, lifted), v23 = eval_lterm(cand.c23, lifted),
            v13 = eval_lterm(cand.c13, lifted);
        bool breaks_lower = !v12.is_zero() && !v23.is_zero() && v13.is_zero();
        bool breaks_upper = !v13.is_zero() && v12.is_zero() && v23.is_zero();
        if (!breaks_lower && !breaks_upper) inconsistent("lifting the chain witness");
        out.mode = Lemma43Refutation::Mode::ChainViolation;
        out.detail = std::string("condition (iv) fails directly: the lifted point breaks the ") +
                     (breaks_lower ? "left" : "right") +
                     " inclusion; the forced shape would be U13 = [0, " + lm.str() + ")";
        return out;
    }

    // Non-initial U12 or U23: the chain cannot hold (else the initial
    // shape would be forced), so exhibit its violation.
    CevaVerdict actual = ceva_check(CevaInput{out.U12, out.U23, out.U13});
    if (actual.hyp_chain || !actual.witness) inconsistent("expected chain violation");
    const std::vector<Rat>& w = *actual.witness;
    out.chain_witness = std::vector<Rat>{w[0], w[0], w[1], w[2]};
    out.mode = Lemma43Refutation::Mode::ChainViolation;
    out.detail = "U12 or U23 is not an initial segment, contradicting the forced shape";
    return out;
}

std::vector<LTermPtr> lemma43_slot_pool(const std::string& g, const std::string& h) {
    std::vector<LTermPtr> basics;
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q) basics.push_back(wedge_term(Rat(p), g, Rat(q), h));
    std::vector<LTermPtr> pool = basics;
    for (size_t i = 0; i < basics.size(); ++i)
        for (size_t j = i + 1; j < basics.size(); ++j)
            pool.push_back(lt_meet(basics[i], basics[j]));
    for (size_t i = 0; i < basics.size(); ++i)
        for (size_t j = i + 1; j < basics.size(); ++j)
            pool.push_back(lt_join(basics[i], basics[j]));
    return pool;
}

Lemma43ScanReport lemma43_scan() {
    Lemma43ScanReport rep;
    struct Slot {
        std::vector<LTermPtr> terms;
        std::vector<RatioSet> U;
    };
    auto make_slot = [](const std::string& g, const std::string& h, int i, int j) {
        Slot s;
        s.terms = lemma43_slot_pool(g, h);
        for (const LTermPtr& t : s.terms) s.U.push_back(slot_ratioset(t, i, j));
        return s;
    };
    Slot s12 = make_slot("a", "b", 1, 2), s21 = make_slot("b", "a", 2, 1);
    Slot s23 = make_slot("b", "c", 2, 3), s32 = make_slot("c", "b", 3, 2);
    Slot s13 = make_slot("a'", "c", 1, 3), s31 = make_slot("c", "a'", 3, 1);
    rep.slot_pool_size = s12.terms.size();
    const size_t m = s12.terms.size();
    const ExtRat inf = ExtRat::infinity();

    // Conditions (ii) and (iii) factor through the ratio sets exactly:
    // ii(i,j) <=> 0 in U_ij, ii(j,i) <=> inf in U_ji, iii <=> disjoint.
    auto pair_scan = [&](const Slot& fwd, const Slot& rev, unsigned long& count,
                         std::vector<unsigned long>& compat,
                         std::vector<int>& first_rev) {
        compat.assign(m, 0);
        first_rev.assign(m, -1);
        for (size_t i = 0; i < m; ++i) {
            if (!fwd.U[i].contains_zero()) continue;
            for (size_t j = 0; j < m; ++j) {
                if (!rev.U[j].contains(inf)) continue;
                if (!fwd.U[i].intersect(rev.U[j]).is_empty()) continue;
                ++count;
                ++compat[i];
                if (first_rev[i] < 0) first_rev[i] = static_cast<int>(j);
            }
        }
    };
    std::vector<unsigned long> compat21, compat32;
    std::vector<int> first21, first32;
    pair_scan(s12, s21, rep.pairs12_compatible, compat21, first21);
    pair_scan(s23, s32, rep.pairs23_compatible, compat32, first32);

    // Group the completable slots by their ratio sets; condition (iv)
    // only depends on (U12, U23, U13), so each class is decided once.
    struct Group {
        size_t rep_idx;
        unsigned long terms = 0;
        unsigned long tuples = 0;  // weighted by compatible reverse terms
        RatioSet U;
    };
    auto group_by = [&](const Slot& slot, const std::vector<unsigned long>* weight) {
        std::map<std::string, Group> g;
        for (size_t i = 0; i < m; ++i) {
            if (weight && (*weight)[i] == 0) continue;
            auto [it, fresh] = g.try_emplace(slot.U[i].str());
            if (fresh) {
                it->second.rep_idx = i;
                it->second.U = slot.U[i];
            }
            ++it->second.terms;
            it->second.tuples += weight ? (*weight)[i] : 1;
        }
        return g;
    };
    auto g12 = group_by(s12, &compat21), g23 = group_by(s23, &compat32);
    auto g13 = group_by(s13, nullptr);

    AmbientCone k123 = presentation_of(P_123).ambient;
    auto cylK = [&](const RatioSet& u, size_t i, size_t j) {
        Region r = ratioset_to_region(u, i, j, 4);
        r.ambient = k123;
        return region_prune(r);
    };

    for (const auto& [k12, gr12] : g12)
        for (const auto& [k23, gr23] : g23) {
            Region r12 = cylK(gr12.U, 0, 2), r23 = cylK(gr23.U, 2, 3);
            Region lo = region_meet(r12, r23), hi = region_join(r12, r23);
            for (const auto& [k13, gr13] : g13) {
                ++rep.support_classes;
                rep.triples_checked += gr12.terms * gr23.terms * gr13.terms;
                Region r13 = cylK(gr13.U, 1, 3);
                bool iv = region_subset(lo, r13).holds &&
                          region_subset(r13, hi).holds;
                Lemma43Candidate cand{s12.terms[gr12.rep_idx],
                                      s21.terms[first21[gr12.rep_idx]],
                                      s23.terms[gr23.rep_idx],
                                      s32.terms[first32[gr23.rep_idx]],
                                      s13.terms[gr13.rep_idx], s31.terms[0]};
                if (iv) {
                    // Completable class satisfying (iv): a full family
                    // would pass everything, so force the abort path.
                    rep.all_pass_tuples +=
                        gr12.tuples * gr23.tuples * gr13.terms * m;
                    lemma43_check(cand);
                    continue;
                }
                Lemma43Refutation ref = lemma43_refute_pipeline(cand);
                ++rep.pipelines_completed;
                if (ref.mode == Lemma43Refutation::Mode::Endgame)
                    ++rep.endgame_classes;
                else
                    ++rep.chain_violation_classes;
            }
        }
    return rep;
}

}  // namespace cevalat
