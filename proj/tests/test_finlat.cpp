#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "cevalat/finlat.hpp"

using namespace cevalat;

namespace {

// Direct ∃u,v oracle for complete normality, straight off the definition.
bool normal_oracle(const FinDistLattice& D) {
    for (size_t x = 0; x < D.size(); ++x)
        for (size_t y = 0; y < D.size(); ++y) {
            bool found = false;
            for (size_t u = 0; u < D.size() && !found; ++u)
                for (size_t v = 0; v < D.size() && !found; ++v)
                    found = D.leq(x, D.join(y, u)) && D.leq(y, D.join(x, v)) &&
                            D.meet(u, v) == D.zero();
            if (!found) return false;
        }
    return true;
}

// Exhaustive minimum of a (-) b, ignoring the closed-form shortcut.
size_t min_diff_oracle(const FinDistLattice& D, size_t a, size_t b) {
    size_t best = D.top();
    bool have = false;
    for (size_t x = 0; x < D.size(); ++x)
        if (D.leq(a, D.join(b, x))) {
            if (!have || D.leq(x, best)) {
                // the minimum exists, so the least seen under <= is it
                if (!have || D.leq(x, best)) best = x;
                have = true;
            }
        }
    REQUIRE(have);
    return best;
}

std::vector<std::vector<size_t>> join_table(const FinDistLattice& D) {
    std::vector<std::vector<size_t>> t(D.size(), std::vector<size_t>(D.size()));
    for (size_t a = 0; a < D.size(); ++a)
        for (size_t b = 0; b < D.size(); ++b) t[a][b] = D.join(a, b);
    return t;
}

std::vector<std::vector<size_t>> meet_table(const FinDistLattice& D) {
    std::vector<std::vector<size_t>> t(D.size(), std::vector<size_t>(D.size()));
    for (size_t a = 0; a < D.size(); ++a)
        for (size_t b = 0; b < D.size(); ++b) t[a][b] = D.meet(a, b);
    return t;
}

}  // namespace

TEST_CASE("ji posets: validity and factories") {
    CHECK(JIPoset::antichain(3).valid());
    CHECK(JIPoset::chain(4).valid());
    JIPoset bad = JIPoset::antichain(2);
    bad.below[0] |= 2u;
    bad.below[1] |= 1u;  // 0 <= 1 and 1 <= 0
    CHECK(!bad.valid());
    JIPoset v = JIPoset::from_covers(3, {{0, 1}, {1, 2}});
    CHECK(v.leq(0, 2));  // closure of the covers
    CHECK(v.canonical_form() == JIPoset::chain(3).canonical_form());
    CHECK_THROWS_AS(JIPoset::from_covers(2, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("lattice shapes") {
    FinDistLattice c3 = FinDistLattice::chain_lattice(3);
    CHECK(c3.size() == 3);
    FinDistLattice sq = FinDistLattice::boolean_cube(2);
    CHECK(sq.size() == 4);
    FinDistLattice spz = FinDistLattice::square_plus_zero();
    CHECK(spz.size() == 5);
    FinDistLattice cube = FinDistLattice::boolean_cube(3);
    CHECK(cube.size() == 8);
    CHECK(FinDistLattice::boolean_cube(0).size() == 1);

    CHECK(sq.join(1, 2) == sq.top());
    CHECK(sq.meet(1, 2) == sq.zero());
    CHECK(sq.leq(0, 3));
    CHECK(!sq.leq(1, 2));
    CHECK(sq.elem_str(3) == "{0,1}");
    CHECK_THROWS_AS(spz.index_of(2u), std::invalid_argument);  // {1} is not a downset
}

TEST_CASE("min_diff against the exhaustive minimum") {
    for (const FinDistLattice& D :
         {FinDistLattice::chain_lattice(4), FinDistLattice::boolean_cube(3),
          FinDistLattice::square_plus_zero()}) {
        for (size_t a = 0; a < D.size(); ++a)
            for (size_t b = 0; b < D.size(); ++b) {
                size_t m = D.min_diff(a, b);
                CHECK(m == min_diff_oracle(D, a, b));
                CHECK(D.leq(a, D.join(b, m)));
            }
    }
    FinDistLattice c3 = FinDistLattice::chain_lattice(3);
    CHECK(c3.min_diff(2, 2) == 0);
    CHECK(c3.min_diff(2, 1) == 2);  // only the top recovers the top over m
    FinDistLattice sq = FinDistLattice::boolean_cube(2);
    CHECK(sq.min_diff(1, 2) == 1);  // incomparable: x itself
    CHECK(sq.min_diff(2, 1) == 2);
}

TEST_CASE("min_diff monotonicity") {
    for (const FinDistLattice& D :
         {FinDistLattice::boolean_cube(3), FinDistLattice::square_plus_zero()}) {
        for (size_t a = 0; a < D.size(); ++a)
            for (size_t a2 = 0; a2 < D.size(); ++a2)
                for (size_t b = 0; b < D.size(); ++b) {
                    if (D.leq(a, a2)) CHECK(D.leq(D.min_diff(a, b), D.min_diff(a2, b)));
                    for (size_t b2 = 0; b2 < D.size(); ++b2)
                        CHECK(D.leq(D.min_diff(a, D.join(b, b2)), D.min_diff(a, b)));
                }
    }
}

TEST_CASE("complete normality: criterion vs direct oracle") {
    CHECK(completely_normal(FinDistLattice::chain_lattice(3)).normal);
    CHECK(completely_normal(FinDistLattice::boolean_cube(3)).normal);

    FinDistLattice spz = FinDistLattice::square_plus_zero();
    NormalityResult nr = completely_normal(spz);
    CHECK(!nr.normal);
    REQUIRE(nr.counterexample.has_value());
    auto [a, b] = *nr.counterexample;
    CHECK(!spz.leq(a, b));
    CHECK(!spz.leq(b, a));  // the two incomparable elements

    for (const FinDistLattice& D :
         {FinDistLattice::chain_lattice(1), FinDistLattice::chain_lattice(4),
          FinDistLattice::boolean_cube(2), FinDistLattice::boolean_cube(3),
          FinDistLattice::square_plus_zero(),
          FinDistLattice(JIPoset::from_covers(4, {{0, 2}, {1, 2}, {1, 3}}))})
        CHECK(completely_normal(D).normal == normal_oracle(D));
}

TEST_CASE("cevian axioms on the min-diff table") {
    for (const FinDistLattice& D :
         {FinDistLattice::chain_lattice(4), FinDistLattice::boolean_cube(2),
          FinDistLattice::boolean_cube(3)}) {
        AxiomResult ax = cevian_axiom_check(D, min_diff_table(D));
        CHECK(ax.ok);
    }

    // x \ y := x on the square breaks Cev2
    FinDistLattice sq = FinDistLattice::boolean_cube(2);
    CevianTable t;
    t.op.assign(4, std::vector<size_t>(4));
    for (size_t x = 0; x < 4; ++x)
        for (size_t y = 0; y < 4; ++y) t.op[x][y] = x;
    AxiomResult ax = cevian_axiom_check(sq, t);
    CHECK(!ax.ok);
    CHECK(ax.axiom == "Cev2");
    REQUIRE(ax.where.size() == 2);
    CHECK(sq.meet(t.op[ax.where[0]][ax.where[1]], t.op[ax.where[1]][ax.where[0]]) !=
          sq.zero());

    // every table on the 1-element lattice passes
    FinDistLattice one = FinDistLattice::boolean_cube(0);
    CevianTable t1;
    t1.op = {{0}};
    CHECK(cevian_axiom_check(one, t1).ok);
}

TEST_CASE("lemma 5.2 consequence never fires on exhaustive 2-chain tables") {
    FinDistLattice c2 = FinDistLattice::chain_lattice(2);
    // all 16 tables: the consequence check must never throw
    for (unsigned bits = 0; bits < 16; ++bits) {
        CevianTable t;
        t.op = {{(bits >> 0) & 1u, (bits >> 1) & 1u}, {(bits >> 2) & 1u, (bits >> 3) & 1u}};
        CHECK_NOTHROW((void)cevian_axiom_check(c2, t));
    }
}

TEST_CASE("cevian_solve") {
    // 2-chain: forced table
    auto t2 = cevian_solve(FinDistLattice::chain_lattice(2));
    REQUIRE(t2.has_value());
    CHECK(t2->op[1][0] == 1);
    CHECK(t2->op[0][0] == 0);
    CHECK(t2->op[0][1] == 0);
    CHECK(t2->op[1][1] == 0);

    // square plus zero: no table exists
    CHECK(!cevian_solve(FinDistLattice::square_plus_zero()).has_value());

    // square: min-diff table, axioms verified
    FinDistLattice sq = FinDistLattice::boolean_cube(2);
    auto ts = cevian_solve(sq);
    REQUIRE(ts.has_value());
    CHECK(ts->op == min_diff_table(sq).op);
    CHECK(cevian_axiom_check(sq, *ts).ok);
}

TEST_CASE("product of two 2-chains is the square, with componentwise table") {
    FinDistLattice c2 = FinDistLattice::chain_lattice(2);
    FinDistLattice P = product_lattice(c2, c2);
    REQUIRE(P.size() == 4);
    CHECK(P.ji().canonical_form() == JIPoset::antichain(2).canonical_form());
    CevianTable TD = *cevian_solve(c2);
    CevianTable TP = product_table(c2, c2, P, TD, TD);
    CHECK(cevian_axiom_check(P, TP).ok);
    // componentwise agreement through the pairing
    for (size_t a = 0; a < 2; ++a)
        for (size_t b = 0; b < 2; ++b)
            for (size_t c = 0; c < 2; ++c)
                for (size_t d = 0; d < 2; ++d) {
                    size_t lhs = TP.op[product_pair(c2, c2, P, a, b)]
                                      [product_pair(c2, c2, P, c, d)];
                    CHECK(lhs == product_pair(c2, c2, P, TD.op[a][c], TD.op[b][d]));
                }
}

TEST_CASE("ideal of the 3-chain below m is the 2-chain with normalized table") {
    FinDistLattice c3 = FinDistLattice::chain_lattice(3);
    CevianTable T = *cevian_solve(c3);
    IdealResult ir = ideal_lattice(c3, 1, &T);
    CHECK(ir.lat.size() == 2);
    CHECK(ir.embed == std::vector<size_t>{0, 1});
    REQUIRE(ir.table.has_value());
    CHECK(cevian_axiom_check(ir.lat, *ir.table).ok);
    CHECK(ir.table->op[1][0] == 1);
}

TEST_CASE("quotients") {
    FinDistLattice sq = FinDistLattice::boolean_cube(2);
    // collapsing just the top pair {x, T} is not a meet-congruence
    CHECK(!is_lattice_congruence(sq, {0, 1, 2, 1}));
    CHECK_THROWS_AS(quotient_lattice(sq, {0, 1, 2, 1}), std::invalid_argument);

    // first-coordinate projection congruence: classes {0,y}, {x,T}
    std::vector<size_t> cls{0, 1, 0, 1};
    CHECK(is_lattice_congruence(sq, cls));
    CevianTable T = *cevian_solve(sq);
    QuotientResult qr = quotient_lattice(sq, cls, &T);
    CHECK(qr.lat.size() == 2);
    CHECK(qr.proj == std::vector<size_t>{0, 1, 0, 1});
    REQUIRE(qr.table.has_value());
    CHECK(cevian_axiom_check(qr.lat, *qr.table).ok);
    CHECK(qr.table->op[1][0] == 1);

    // trivial congruences
    QuotientResult all = quotient_lattice(sq, {0, 0, 0, 0});
    CHECK(all.lat.size() == 1);
    QuotientResult id = quotient_lattice(sq, {0, 1, 2, 3});
    CHECK(id.lat.size() == 4);
    for (size_t a = 0; a < 4; ++a)
        for (size_t b = 0; b < 4; ++b)
            CHECK(id.proj[sq.join(a, b)] == id.lat.join(id.proj[a], id.proj[b]));
}

TEST_CASE("normalized table is cevian again") {
    FinDistLattice cube = FinDistLattice::boolean_cube(3);
    CevianTable T = min_diff_table(cube);
    CevianTable N = normalized_table(cube, T);
    CHECK(cevian_axiom_check(cube, N).ok);
    for (size_t x = 0; x < cube.size(); ++x)
        for (size_t y = 0; y < cube.size(); ++y) CHECK(cube.leq(N.op[x][y], x));
}

TEST_CASE("closed homomorphisms") {
    FinDistLattice c2 = FinDistLattice::chain_lattice(2);
    FinDistLattice c3 = FinDistLattice::chain_lattice(3);
    FinDistLattice sq = FinDistLattice::boolean_cube(2);

    // identity
    CHECK(is_closed_hom(sq, sq, {0, 1, 2, 3}).closed);

    // inclusion of the 2-chain into the square sending 1 to the top
    std::vector<size_t> inc{0, 3};
    REQUIRE(is_zero_lattice_hom(c2, sq, inc));
    ClosedResult cr = is_closed_hom(c2, sq, inc);
    CHECK(cr.closed == is_closed_hom_via_min_diff(c2, sq, inc));
    CHECK(cr.closed);

    // constant zero
    CHECK(is_closed_hom(sq, c3, {0, 0, 0, 0}).closed);

    // 3-chain onto {0,m} inside the 3-chain: not closed
    std::vector<size_t> f{0, 1, 1};
    REQUIRE(is_zero_lattice_hom(c3, c3, f));
    ClosedResult bad = is_closed_hom(c3, c3, f);
    CHECK(!bad.closed);
    CHECK(!is_closed_hom_via_min_diff(c3, c3, f));
    REQUIRE(bad.counterexample.has_value());
    auto [a, a2, b] = *bad.counterexample;
    CHECK(c3.leq(f[a], c3.join(f[a2], b)));

    // criterion cross-check on every map square -> 3-chain
    for (size_t m0 = 0; m0 < 3; ++m0)
        for (size_t m1 = 0; m1 < 3; ++m1)
            for (size_t m2 = 0; m2 < 3; ++m2)
                for (size_t m3 = 0; m3 < 3; ++m3) {
                    std::vector<size_t> g{m0, m1, m2, m3};
                    if (!is_zero_lattice_hom(sq, c3, g)) continue;
                    CHECK(is_closed_hom(sq, c3, g).closed ==
                          is_closed_hom_via_min_diff(sq, c3, g));
                }

    CHECK_THROWS_AS(is_closed_hom(c3, c2, {0, 1, 0}), std::invalid_argument);
}

TEST_CASE("birkhoff round trip") {
    for (const FinDistLattice& D :
         {FinDistLattice::chain_lattice(4), FinDistLattice::boolean_cube(3),
          FinDistLattice::square_plus_zero()}) {
        std::vector<uint32_t> downs;
        JIPoset p = ji_poset_of_abstract(D.size(), join_table(D), meet_table(D), D.zero(),
                                         &downs);
        CHECK(p.canonical_form() == D.ji().canonical_form());
        FinDistLattice R(p);
        REQUIRE(R.size() == D.size());
        // the downset map is a lattice isomorphism
        std::set<uint32_t> image(downs.begin(), downs.end());
        CHECK(image.size() == D.size());
        for (size_t a = 0; a < D.size(); ++a)
            for (size_t b = 0; b < D.size(); ++b) {
                CHECK(R.index_of(downs[D.join(a, b)]) ==
                      R.join(R.index_of(downs[a]), R.index_of(downs[b])));
                CHECK(R.index_of(downs[D.meet(a, b)]) ==
                      R.meet(R.index_of(downs[a]), R.index_of(downs[b])));
            }
    }
}

TEST_CASE("enumeration up to isomorphism") {
    std::vector<JIPoset> all = enumerate_ji_posets(5);
    std::map<size_t, size_t> by_n;
    for (const JIPoset& p : all) by_n[p.n]++;
    CHECK(by_n[0] == 1);
    CHECK(by_n[1] == 1);
    CHECK(by_n[2] == 2);
    CHECK(by_n[3] == 5);
    CHECK(by_n[4] == 16);
    CHECK(by_n[5] == 63);
    // canonical forms are pairwise distinct
    std::set<std::vector<uint32_t>> forms;
    for (const JIPoset& p : all) CHECK(forms.insert(p.canonical_form()).second);
}

TEST_CASE("finite cor 5.5: cevian iff completely normal, up to 5 irreducibles") {
    for (const JIPoset& p : enumerate_ji_posets(5)) {
        FinDistLattice D(p);
        NormalityResult nr = completely_normal(D);
        auto t = cevian_solve(D);
        CHECK(t.has_value() == nr.normal);
        if (t) {
            CHECK(cevian_axiom_check(D, *t).ok);
            CHECK(t->op == min_diff_table(D).op);
        }
    }
}
