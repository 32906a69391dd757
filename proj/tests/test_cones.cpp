#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cevalat/cones.hpp"
#include "support/fourier_motzkin.hpp"

using namespace cevalat;

namespace {

LinForm lf(std::initializer_list<long> cs) {
    LinForm f(cs.size());
    size_t i = 0;
    for (long c : cs) f.coeffs[i++] = Rat(c);
    return f;
}

Cell cell(std::initializer_list<Constraint> cs) {
    Cell c;
    for (const Constraint& k : cs) c.constraints.push_back(k);
    return c;
}

// The relation cone of the three-generator presentation used throughout:
// 0 <= a <= a' <= 2a on coordinates (x1, x2) = (x_a, x_a').
AmbientCone k_cone() {
    AmbientCone k{2, {}};
    k.weak.push_back({lf({-1, 1}), Rel::GE});  // x2 - x1 >= 0
    k.weak.push_back({lf({2, -1}), Rel::GE});  // 2*x1 - x2 >= 0
    return k;
}

}  // namespace

TEST_CASE("cell witness on the open quadrant") {
    AmbientCone amb = AmbientCone::trivial(2);
    Cell c = cell({{lf({1, 0}), Rel::GT}, {lf({0, 1}), Rel::GT}});
    auto w = cell_witness(amb, c);
    REQUIRE(w.has_value());
    CHECK((*w)[0].sign() > 0);
    CHECK((*w)[1].sign() > 0);
    CHECK(c.holds(*w));
}

TEST_CASE("contradictory cell is empty") {
    AmbientCone amb = AmbientCone::trivial(2);
    CHECK(cell_is_empty(amb, cell({{lf({1, 0}), Rel::GT}, {lf({-1, 0}), Rel::GE}})));
    CHECK(cell_is_empty(amb, cell({{lf({-1, -1}), Rel::GT}})));
    CHECK(!cell_is_empty(amb, cell({{lf({1, -1}), Rel::GT}})));
}

TEST_CASE("ambient constraints participate in emptiness") {
    // Inside 0 <= x1 <= x2 <= 2*x1 the cell {x2 - 2*x1 > 0} is empty,
    // while {x2 - x1 > 0} is not.
    AmbientCone k = k_cone();
    CHECK(cell_is_empty(k, cell({{lf({-2, 1}), Rel::GT}})));
    auto w = cell_witness(k, cell({{lf({-1, 1}), Rel::GT}}));
    REQUIRE(w.has_value());
    CHECK(k.contains(*w));
    CHECK(((*w)[1] - (*w)[0]).sign() > 0);
}

TEST_CASE("equality constraints in cells") {
    AmbientCone amb = AmbientCone::trivial(3);
    Cell c = cell({{lf({1, -1, 0}), Rel::EQ}, {lf({0, 0, 1}), Rel::GT}});
    auto w = cell_witness(amb, c);
    REQUIRE(w.has_value());
    CHECK((*w)[0] == (*w)[1]);
    CHECK((*w)[2].sign() > 0);
    CHECK(cell_is_empty(amb, cell({{lf({1, 1, 1}), Rel::EQ}, {lf({1, 0, 0}), Rel::GT}})));
}

TEST_CASE("region lattice operations") {
    AmbientCone amb = AmbientCone::trivial(2);
    Region unit = region_unit(amb);
    Region zero = region_zero(amb);
    Region a = region_from_cell(amb, cell({{lf({1, -1}), Rel::GT}}));   // x1 > x2
    Region b = region_from_cell(amb, cell({{lf({-1, 1}), Rel::GT}}));   // x2 > x1

    CHECK(region_is_empty(zero));
    CHECK(!region_is_empty(unit));
    CHECK(region_is_empty(region_meet(a, b)));
    CHECK(region_subset(a, unit).holds);
    CHECK(region_subset(zero, a).holds);
    CHECK(!region_subset(unit, a).holds);
    CHECK(region_equal(region_join(a, b), region_complement(region_from_cell(
                           amb, cell({{lf({1, -1}), Rel::EQ}, {lf({1, 0}), Rel::GT}})))));
    // complement is an involution up to semantic equality
    CHECK(region_equal(region_complement(region_complement(a)), a));
    CHECK(region_equal(region_complement(zero), unit));
    CHECK(region_is_empty(region_complement(unit)));
}

TEST_CASE("subset failure produces a separating witness") {
    AmbientCone amb = AmbientCone::trivial(2);
    Region a = region_from_cell(amb, cell({{lf({1, 0}), Rel::GT}}));        // x1 > 0
    Region b = region_from_cell(amb, cell({{lf({1, -1}), Rel::GT}}));       // x1 > x2
    SubsetResult r = region_subset(a, b);
    REQUIRE(!r.holds);
    REQUIRE(r.witness.has_value());
    CHECK(a.contains(*r.witness));
    CHECK(!b.contains(*r.witness));
}

TEST_CASE("region to ratio set in the plane") {
    AmbientCone amb = AmbientCone::trivial(2);
    // lambda*x1 - x2 > 0 with lambda = 1 describes t = x2/x1 in [0, 1)
    Region r = region_from_cell(amb, cell({{lf({1, -1}), Rel::GT}}));
    CHECK(region_to_ratioset(r).str() == "{[0,1)}");
    // x2 - x1 > 0: t in (1, inf]
    Region s = region_from_cell(amb, cell({{lf({-1, 1}), Rel::GT}}));
    CHECK(region_to_ratioset(s).str() == "{(1,inf]}");
    // x1 = 0 and x2 > 0: t = inf only
    Region at_inf =
        region_from_cell(amb, cell({{lf({1, 0}), Rel::EQ}, {lf({0, 1}), Rel::GT}}));
    CHECK(region_to_ratioset(at_inf).str() == "{[inf,inf]}");
    CHECK(region_to_ratioset(region_unit(amb)) == RatioSet::full());
    CHECK(region_to_ratioset(region_zero(amb)).is_empty());
}

TEST_CASE("ratio set to region and back is the identity") {
    for (const char* text : {"{}", "{[0,inf]}", "{[0,1)}", "{(1/2,3)}", "{(2,inf]}",
                             "{[0,1), (2,3], [5,5]}", "{[inf,inf]}", "{(1,inf)}",
                             "{[0,0]}", "{[1/3,2/3]}"}) {
        RatioSet u = RatioSet::parse(text);
        Region r = ratioset_to_region(u, 0, 1, 2);
        CHECK(region_to_ratioset(r) == u);
    }
}

TEST_CASE("cylinder in higher dimension respects the ratio semantics") {
    RatioSet u = RatioSet::parse("{[0,1), (2,inf]}");
    Region r = ratioset_to_region(u, 0, 2, 3);  // constraint on x1^-1 x3
    auto probe = [&](long x1, long x3) {
        std::vector<Rat> p{Rat(x1), Rat(7), Rat(x3)};
        return r.contains(p);
    };
    CHECK(probe(2, 1));    // t = 1/2 in u
    CHECK(!probe(1, 1));   // t = 1 not in u
    CHECK(!probe(1, 2));   // t = 2 not in u
    CHECK(probe(1, 3));    // t = 3 in u
    CHECK(probe(0, 1));    // t = inf in u
    CHECK(!probe(0, 0));   // ratio undefined
}

TEST_CASE("emptiness agrees with the elimination oracle") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> nc(1, 4);
    std::uniform_int_distribution<int> relpick(0, 5);
    int nonempty = 0;
    for (int trial = 0; trial < 300; ++trial) {
        size_t n = 2 + trial % 3;
        AmbientCone amb = trial % 2 ? k_cone() : AmbientCone::trivial(n);
        if (trial % 2) n = 2;
        Cell c;
        int k = nc(rng);
        for (int i = 0; i < k; ++i) {
            LinForm f(n);
            for (size_t j = 0; j < n; ++j) f.coeffs[j] = Rat(coef(rng));
            int rp = relpick(rng);
            Rel rel = rp < 3 ? Rel::GT : rp < 5 ? Rel::GE : Rel::EQ;
            c.constraints.push_back({std::move(f), rel});
        }
        bool lp_empty = cell_is_empty(amb, c);
        bool fm_empty = testsupport::fm_cell_is_empty(amb, c);
        CHECK(lp_empty == fm_empty);
        if (!lp_empty) {
            ++nonempty;
            auto w = cell_witness(amb, c);
            REQUIRE(w.has_value());
            CHECK(amb.contains(*w));
            CHECK(c.holds(*w));
        }
    }
    CHECK(nonempty > 50);  // the sample exercises both outcomes
}

TEST_CASE("subset decisions agree with point sampling") {
    AmbientCone amb = AmbientCone::trivial(2);
    std::vector<Region> regions = {
        region_zero(amb),
        region_unit(amb),
        region_from_cell(amb, cell({{lf({1, -1}), Rel::GT}})),
        region_from_cell(amb, cell({{lf({3, -1}), Rel::GT}, {lf({0, 1}), Rel::GT}})),
        ratioset_to_region(RatioSet::parse("{[0,1), (2,inf]}"), 0, 1, 2),
        ratioset_to_region(RatioSet::parse("{[1/2,3]}"), 0, 1, 2),
    };
    std::vector<std::vector<Rat>> pts;
    for (long x = 0; x <= 4; ++x)
        for (long y = 0; y <= 4; ++y)
            if (x + y > 0) pts.push_back({Rat(x, 2), Rat(y, 2)});
    for (const Region& a : regions)
        for (const Region& b : regions) {
            bool sampled = true;
            for (const auto& p : pts)
                if (a.contains(p) && !b.contains(p)) sampled = false;
            SubsetResult r = region_subset(a, b);
            if (!r.holds) {
                REQUIRE(r.witness.has_value());
                CHECK(a.contains(*r.witness));
                CHECK(!b.contains(*r.witness));
            } else {
                CHECK(sampled);  // exact subset implies no sampled counterexample
            }
        }
}
