#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sarkisov/hex_surface.hpp"

#include <set>

using namespace sarkisov;

namespace {

HexPoint pt111() {
    auto one = CycNum::one();
    return HexPoint{ProjPoint({one, one, one}), ProjPoint({one, one, one})};
}

}  // namespace

TEST_CASE("composition law agrees with the action on sample points") {
    std::vector<HexElement> sample = {
        hex_torus(Rational(0), Rational(1, 2), Rational(1, 3)),
        hex_perm({1, 2, 0}),
        hex_perm({1, 0, 2}),
        hex_swap(),
        hex_compose(hex_perm({2, 0, 1}), hex_swap()),
        hex_compose(hex_torus(Rational(0), Rational(1, 4), Rational(0)), hex_perm({0, 2, 1})),
    };
    std::vector<HexPoint> pts;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 2; ++b) {
            CycNum w1 = CycNum::from_rational(Rational(a));
            CycNum w2 = CycNum::from_rational(Rational(b, 3));
            pts.push_back(HexPoint{ProjPoint({CycNum::one(), w1, w2}),
                                   ProjPoint({CycNum::one(), w1.inverse(), w2.inverse()})});
        }
    for (const auto& g : sample)
        for (const auto& h : sample)
            for (const auto& p : pts) {
                REQUIRE(on_surface(p));
                HexPoint lhs = hex_apply(hex_compose(g, h), p);
                HexPoint rhs = hex_apply(g, hex_apply(h, p));
                CHECK(lhs == rhs);
                CHECK(on_surface(rhs));
            }
}

TEST_CASE("hexagon permutations: torus acts trivially, swap is the half turn") {
    HexElement t = hex_torus(Rational(0), Rational(1, 2), Rational(2, 3));
    CHECK(hexagon_perm(t) == HexPerm{0, 1, 2, 3, 4, 5});
    CHECK(hexagon_perm(hex_swap()) == HexPerm{3, 4, 5, 0, 1, 2});
    // a 3-cycle rotates the hexagon by two
    CHECK(hexagon_perm(hex_perm({1, 2, 0})) == HexPerm{2, 3, 4, 5, 0, 1});
    // a transposition is a vertex reflection (fixes two opposite curves)
    HexPerm tr = hexagon_perm(hex_perm({1, 0, 2}));
    int fixed = 0;
    for (int i = 0; i < 6; ++i)
        if (tr[static_cast<size_t>(i)] == i) ++fixed;
    CHECK(fixed == 2);
}

TEST_CASE("hexagon image labels") {
    CHECK(hexagon_image(build_hex_group({})).label == "1");
    CHECK(hexagon_image(build_hex_group(hex_section_gens("C6"))).label == "<r>");
    CHECK(hexagon_image(build_hex_group(hex_section_gens("S3"))).label == "<r^2,s>");
    CHECK(hexagon_image(build_hex_group(hex_section_gens("D6"))).label == "<r,s>");
    // pure torus group: trivial image
    CHECK(hexagon_image(build_hex_group({hex_torus(Rational(0), Rational(1, 2), Rational(0))})).label == "1");
    // diagonal coordinate permutations (no swap): the non-minimal S3 class
    CHECK(hexagon_image(build_hex_group({hex_perm({1, 2, 0}), hex_perm({1, 0, 2})})).label == "<r^2,r*s>");
    // coordinate permutations with the swap adjoined: full D6
    CHECK(hexagon_image(build_hex_group({hex_perm({1, 2, 0}), hex_perm({1, 0, 2}), hex_swap()})).label == "<r,s>");
}

TEST_CASE("hex_minimal: exactly <r>, <r^2,s>, <r,s> among the 16 subgroups of D6") {
    // enumerate subgroups of the position D6 through subgroups of the
    // geometric group generated by all section generators
    HexGroup full = build_hex_group(hex_section_gens("D6"));
    REQUIRE(full.group.order() == 12);
    auto subs = full.group.subgroups();
    REQUIRE(subs.size() == 16);
    std::set<std::string> minimal_labels;
    int minimal_count = 0;
    for (const auto& s : subs) {
        std::vector<HexElement> gens;
        for (int e : s.elements()) gens.push_back(full.elements[static_cast<size_t>(e)]);
        HexGroup h = build_hex_group(gens);
        if (hex_minimal(h)) {
            ++minimal_count;
            minimal_labels.insert(hexagon_image(h).label);
        }
    }
    CHECK(minimal_count == 3);
    CHECK(minimal_labels == std::set<std::string>{"<r>", "<r^2,s>", "<r,s>"});
}

TEST_CASE("torus part extraction") {
    auto gens = hex_section_gens("S3");
    gens.push_back(hex_torus(Rational(0), Rational(1, 2), Rational(0)));
    gens.push_back(hex_torus(Rational(0), Rational(0), Rational(1, 2)));
    HexGroup g = build_hex_group(gens);
    TorusPart n = torus_part(g);
    CHECK(n.invariants == std::vector<long>{2, 2});

    HexGroup plain = build_hex_group(hex_section_gens("D6"));
    CHECK(torus_part(plain).trivial());
}

TEST_CASE("fixed points: trivial torus sections fix ([1:1:1],[1:1:1])") {
    for (const char* image : {"C6", "S3", "D6"}) {
        HexGroup g = build_hex_group(hex_section_gens(image));
        auto fp = hex_fixed_points(g);
        CAPTURE(image);
        REQUIRE(!fp.whole);
        REQUIRE(!fp.points.empty());
        CHECK(std::find(fp.points.begin(), fp.points.end(), pt111()) != fp.points.end());
        for (const auto& p : fp.points) {
            CHECK(on_surface(p));
            for (const auto& gen : g.gens) CHECK(hex_apply(gen, p) == p);
        }
    }
    CHECK(hex_fixed_points(build_hex_group({})).whole);
}

TEST_CASE("fixed points vanish whenever the torus part is nontrivial") {
    for (const char* image : {"C6", "S3", "D6"}) {
        for (auto torus : {hex_torus(Rational(0), Rational(1, 2), Rational(0)),
                           hex_torus(Rational(0), Rational(1, 3), Rational(2, 3)),
                           hex_torus(Rational(0), Rational(1, 4), Rational(3, 4))}) {
            auto gens = hex_section_gens(image);
            gens.push_back(torus);
            // group closure adds the conjugate torus factors automatically
            HexGroup g = build_hex_group(gens, 1000);
            if (!hex_minimal(g)) continue;
            TorusPart n = torus_part(g);
            REQUIRE(!n.trivial());
            auto fp = hex_fixed_points(g);
            CAPTURE(image);
            CHECK(fp.points.empty());
        }
    }
}

TEST_CASE("twisted sections still have exact fixed points") {
    // a C6 lift twisted by a torus factor that cannot be conjugated away
    HexElement u = hex_section_gens("C6")[0];
    HexElement tw = hex_compose(hex_torus(Rational(0), Rational(1, 2), Rational(0)), u);
    HexGroup g = build_hex_group({tw});
    if (torus_part(g).trivial() && hex_minimal(g)) {
        auto fp = hex_fixed_points(g);
        CHECK(!fp.points.empty());
        for (const auto& p : fp.points) {
            CHECK(on_surface(p));
            CHECK(hex_apply(tw, p) == p);
        }
    }
}
