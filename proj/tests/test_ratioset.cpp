#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "cevalat/ratioset.hpp"

using namespace cevalat;

namespace {

RatioSet rs(const char* text) { return RatioSet::parse(text); }

// Probe points around all small rational endpoints, plus infinity.
std::vector<ExtRat> probe_points() {
    std::vector<ExtRat> pts;
    for (long n = 0; n <= 12; ++n)
        for (long d = 1; d <= 4; ++d) pts.push_back(ExtRat(Rat(n, d)));
    pts.push_back(ExtRat(Rat(1000)));
    pts.push_back(ExtRat::infinity());
    return pts;
}

}  // namespace

TEST_CASE("normalization merges and sorts") {
    CHECK(rs("{[0,1), (1/2,2)}").str() == "{[0,2)}");
    CHECK(rs("{(2,3), [0,1)}").str() == "{[0,1), (2,3)}");
    CHECK(rs("{(1,2), [2,3)}").str() == "{(1,3)}");   // adjacent, touching
    CHECK(rs("{(1,2), (2,3)}").str() == "{(1,2), (2,3)}");  // gap at 2
    CHECK(rs("{[1,1]}").str() == "{[1,1]}");
    CHECK(rs("{(1,1)}").str() == "{}");
    CHECK(rs("{}").is_empty());
    CHECK_THROWS(rs("{(3,2)}"));
    CHECK_THROWS(rs("{[0,1]"));
}

TEST_CASE("basic constructors and membership") {
    CHECK(RatioSet::full().str() == "{[0,inf]}");
    CHECK(RatioSet::initial(Rat(3, 2)).str() == "{[0,3/2)}");
    CHECK(RatioSet::initial(Rat(3, 2)).contains(ExtRat(Rat(1))));
    CHECK(!RatioSet::initial(Rat(3, 2)).contains(ExtRat(Rat(3, 2))));
    CHECK(RatioSet::singleton(ExtRat::infinity()).contains(ExtRat::infinity()));
    CHECK(rs("{[0,1), (2,inf]}").contains(ExtRat::infinity()));
    CHECK(rs("{[0,1)}").contains_zero());
    CHECK(!rs("{(0,1)}").contains_zero());
}

TEST_CASE("boolean operations on frozen examples") {
    CHECK(rs("{[0,1)}").intersect(rs("{(1/2,inf]}")).str() == "{(1/2,1)}");
    CHECK(rs("{[0,1)}").unite(rs("{[1,2)}")).str() == "{[0,2)}");
    CHECK(rs("{[0,1)}").complement().str() == "{[1,inf]}");
    CHECK(rs("{(1/2,3]}").complement().str() == "{[0,1/2], (3,inf]}");
    CHECK(RatioSet::full().complement().is_empty());
    CHECK(RatioSet::empty_set().complement() == RatioSet::full());
    CHECK(rs("{[0,1)}").subset_of(rs("{[0,2)}")));
    CHECK(!rs("{[0,2)}").subset_of(rs("{[0,1)}")));
}

TEST_CASE("admissible fragment membership") {
    CHECK(rs("{[0,1), (2,3), (5,inf]}").is_admissible());
    CHECK(rs("{[0,inf]}").is_admissible());
    CHECK(rs("{}").is_admissible());
    CHECK(!rs("{[1,2)}").is_admissible());     // closed at finite nonzero
    CHECK(!rs("{(1,2]}").is_admissible());
    CHECK(!rs("{[1,1]}").is_admissible());     // singleton
    CHECK(!RatioSet::singleton(ExtRat::infinity()).is_admissible());
}

TEST_CASE("initial_bound recognizes [0,z)") {
    CHECK(rs("{[0,5/3)}").initial_bound().value() == Rat(5, 3));
    CHECK(!rs("{[0,inf]}").initial_bound().has_value());
    CHECK(!rs("{[0,1), (2,3)}").initial_bound().has_value());
    CHECK(!rs("{(0,1)}").initial_bound().has_value());
}

TEST_CASE("operations agree with pointwise boolean logic") {
    std::vector<RatioSet> sets = {
        rs("{}"),
        RatioSet::full(),
        rs("{[0,1)}"),
        rs("{(1,2]}"),
        rs("{[2,2]}"),
        rs("{[0,1/2], (3,inf]}"),
        rs("{(1/3,7/2), [5,6)}"),
        rs("{[0,1), (1,2), (2,inf]}"),
        RatioSet::singleton(ExtRat::infinity()),
    };
    auto pts = probe_points();
    for (const RatioSet& a : sets) {
        const RatioSet ac = a.complement();
        for (const ExtRat& t : pts) CHECK(ac.contains(t) == !a.contains(t));
        CHECK(ac.complement() == a);  // involution implies canonicity
        for (const RatioSet& b : sets) {
            const RatioSet u = a.unite(b), m = a.intersect(b);
            for (const ExtRat& t : pts) {
                CHECK(u.contains(t) == (a.contains(t) || b.contains(t)));
                CHECK(m.contains(t) == (a.contains(t) && b.contains(t)));
            }
            // De Morgan
            CHECK(u.complement() == ac.intersect(b.complement()));
        }
    }
}

TEST_CASE("parse and print round trip") {
    for (const char* text :
         {"{}", "{[0,inf]}", "{[0,1), (2,3], (7,inf]}", "{(1/3,1/2)}", "{[4,4]}"}) {
        RatioSet a = rs(text);
        CHECK(RatioSet::parse(a.str()) == a);
    }
}
