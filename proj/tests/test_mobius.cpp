#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sarkisov/mobius.hpp"

#include <map>

using namespace sarkisov;

TEST_CASE("realize produces groups of the right order and type") {
    CHECK(realize(KleinLabel::cyclic(1)).group.order() == 1);
    CHECK(realize(KleinLabel::cyclic(7)).group.order() == 7);
    CHECK(realize(KleinLabel::cyclic(12)).group.order() == 12);

    KleinGroup d5 = realize(KleinLabel::dihedral(5));
    CHECK(d5.group.order() == 10);
    CHECK(recognize(d5.group).is(IsoTag::Dihedral, 5));

    // even dihedral orders are the subtle ones projectively
    CHECK(realize(KleinLabel::dihedral(6)).group.order() == 12);
    CHECK(recognize(realize(KleinLabel::dihedral(6)).group).is(IsoTag::Dihedral, 6));
    CHECK(realize(KleinLabel::dihedral(12)).group.order() == 24);

    CHECK(recognize(realize(KleinLabel::a4()).group).is(IsoTag::A4));
    CHECK(recognize(realize(KleinLabel::s4()).group).is(IsoTag::S4));
    CHECK(recognize(realize(KleinLabel::a5()).group).is(IsoTag::A5));

    CHECK_THROWS_AS(realize(KleinLabel::cyclic(0)), EngineError);
}

TEST_CASE("dihedral relations r^n = s^2 = (sr)^2 = id hold projectively") {
    for (long n : {3L, 4L, 5L, 8L}) {
        KleinGroup d = realize(KleinLabel::dihedral(n));
        const Mat& r = d.gens[0];
        const Mat& s = d.gens[1];
        Mat rn = r;
        for (long i = 1; i < n; ++i) rn = rn * r;
        CHECK(rn.is_scalar());
        CHECK((s * s).is_scalar());
        Mat sr = s * r;
        CHECK((sr * sr).is_scalar());
    }
}

TEST_CASE("A5 element-order histogram is 1,2^15,3^20,5^24") {
    KleinGroup a5 = realize(KleinLabel::a5());
    std::map<long, long> hist;
    for (int i = 0; i < a5.group.order(); ++i) hist[a5.group.element_order(i)]++;
    CHECK(hist == std::map<long, long>{{1, 1}, {2, 15}, {3, 20}, {5, 24}});
}

TEST_CASE("fixed loci of single elements") {
    KleinGroup d5 = realize(KleinLabel::dihedral(5));
    auto fr = fixed_locus_on_P1(d5.gens[0]);
    REQUIRE(fr.points.size() == 2);
    CHECK(fr.points[0] == ProjPoint::of({0, 1}));
    CHECK(fr.points[1] == ProjPoint::of({1, 0}));

    auto fs = fixed_locus_on_P1(d5.gens[1]);
    REQUIRE(fs.points.size() == 2);
    CHECK(std::find(fs.points.begin(), fs.points.end(), ProjPoint::of({1, 1})) != fs.points.end());
    CHECK(std::find(fs.points.begin(), fs.points.end(), ProjPoint::of({1, -1})) != fs.points.end());

    CHECK(fixed_locus_on_P1(Mat::identity(2)).all);
}

TEST_CASE("group fixed points per label") {
    auto c7 = group_fixed_points(realize(KleinLabel::cyclic(7)));
    REQUIRE(c7.points.size() == 2);
    CHECK(c7.points[0] == ProjPoint::of({0, 1}));
    CHECK(c7.points[1] == ProjPoint::of({1, 0}));

    CHECK(group_fixed_points(realize(KleinLabel::dihedral(3))).points.empty());
    CHECK(group_fixed_points(realize(KleinLabel::a4())).points.empty());
    CHECK(group_fixed_points(realize(KleinLabel::s4())).points.empty());
    CHECK(group_fixed_points(realize(KleinLabel::a5())).points.empty());
    CHECK(group_fixed_points(realize(KleinLabel::cyclic(1))).whole);

    for (long n : {2L, 5L, 9L}) {
        auto fp = group_fixed_points(realize(KleinLabel::cyclic(n)));
        CHECK(fp.points.size() == 2);
    }
}

TEST_CASE("every element of every realized group fixes at least one point") {
    for (KleinLabel label : {KleinLabel::cyclic(6), KleinLabel::dihedral(4), KleinLabel::a4(),
                             KleinLabel::s4(), KleinLabel::a5()}) {
        KleinGroup k = realize(label);
        for (int i = 0; i < k.group.order(); ++i) {
            auto fs = fixed_locus_on_P1(k.mat(i));
            CHECK((fs.all || !fs.points.empty()));
            for (const auto& p : fs.points) CHECK(k.mat(i).apply(p) == p);
        }
    }
}

TEST_CASE("orbit sizes divide the group order") {
    KleinGroup s4 = realize(KleinLabel::s4());
    for (const ProjPoint& start : {ProjPoint::of({1, 0}), ProjPoint::of({1, 1}),
                                   ProjPoint::of({1, 3})}) {
        std::vector<ProjPoint> orbit = {start};
        for (size_t i = 0; i < orbit.size(); ++i) {
            for (const auto& g : s4.gens) {
                ProjPoint q = g.apply(orbit[i]);
                if (std::find(orbit.begin(), orbit.end(), q) == orbit.end()) orbit.push_back(q);
            }
        }
        CHECK(s4.group.order() % static_cast<long>(orbit.size()) == 0);
    }
}
