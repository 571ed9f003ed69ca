#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sarkisov/pic_lattice.hpp"
#include "sarkisov/errors.hpp"

using namespace sarkisov;

TEST_CASE("lattice basics: K^2 = degree, signature data") {
    for (int d = 1; d <= 9; ++d) {
        PicLattice lat(d);
        CHECK(lat.dot(lat.canonical_class(), lat.canonical_class()) == d);
        CHECK(lat.rank() == 10 - d);
    }
    PicLattice q = PicLattice::quadric();
    CHECK(q.dot(q.canonical_class(), q.canonical_class()) == 8);
}

TEST_CASE("(-1)-curve counts by brute force with stability certificate") {
    long expected[7] = {0, 240, 56, 27, 16, 10, 6};
    for (int d = 1; d <= 6; ++d) {
        PicLattice lat(d);
        auto curves = minus_one_curves(lat);
        CHECK(static_cast<long>(curves.size()) == expected[d]);
        for (const auto& c : curves) {
            CHECK(lat.dot(c.c, c.c) == -1);
            CHECK(lat.dot(c.c, lat.canonical_class()) == -1);
        }
    }
    CHECK(minus_one_curves(PicLattice(9)).empty());
    CHECK(minus_one_curves(PicLattice::quadric()).empty());
    // doubling the bound does not change the counts (certificate), checked on
    // the small degrees here; degree 1 runs in the acceptance suite
    for (int d = 4; d <= 6; ++d) CHECK(minus_one_curve_count_stable(PicLattice(d)));
}

TEST_CASE("degree 6 hexagon adjacency: neighbors meet once, opposites are disjoint") {
    PicLattice lat(6);
    auto curves = minus_one_curves(lat);
    REQUIRE(curves.size() == 6);
    // cycle e1 - d12 - e2 - d23 - e3 - d13 - e1
    auto cls = [&](std::vector<long> v) { return MinusOneCurve{std::move(v)}; };
    std::vector<MinusOneCurve> cycle = {
        cls({0, 1, 0, 0}), cls({1, -1, -1, 0}), cls({0, 0, 1, 0}),
        cls({1, 0, -1, -1}), cls({0, 0, 0, 1}), cls({1, -1, 0, -1}),
    };
    for (const auto& c : cycle)
        CHECK(std::find(curves.begin(), curves.end(), c) != curves.end());
    for (size_t i = 0; i < 6; ++i) {
        CHECK(lat.dot(cycle[i].c, cycle[(i + 1) % 6].c) == 1);
        CHECK(lat.dot(cycle[i].c, cycle[(i + 3) % 6].c) == 0);
    }
}

TEST_CASE("invariant rank of hexagon rotations") {
    PicLattice lat(6);
    // r: rotation by one step of the hexagon cycle above
    LatticeAction rot;
    // images: e1 -> d12 = h-e1-e2, e2 -> d23 = h-e2-e3, e3 -> d13... see cycle
    // order: position(e1)=0 -> position 1 = d12; d12 -> e2; e2 -> d23; ...
    // h = e1 + d12 + e2 -> d12 + e2 + d23 = 2h - e1 - 2e2 - e3 + ... compute
    // columns from the curve images:
    //   e1 -> h - e1 - e2, e2 -> h - e2 - e3, e3 -> h - e1 - e3 is NOT the
    //   rotation; the rotation sends e1->d12, d12->e2, e2->d23, d23->e3,
    //   e3->d13, d13->e1. Linear extension: determined by images of e1,e2,e3
    //   and h = e1 + d12 + e2 -> d12 + e2 + d23.
    auto col_of = [](std::initializer_list<long> v) { return std::vector<long>(v); };
    std::vector<long> im_e1 = col_of({1, -1, -1, 0});   // d12
    std::vector<long> im_e2 = col_of({1, 0, -1, -1});   // d23
    std::vector<long> im_e3 = col_of({1, -1, 0, -1});   // d13
    // im_h = im(e1) + im(d12) + im(e2); im(d12) = e2
    std::vector<long> im_h(4);
    std::vector<long> e2v = {0, 0, 1, 0};
    for (int i = 0; i < 4; ++i) im_h[static_cast<size_t>(i)] = im_e1[static_cast<size_t>(i)] + e2v[static_cast<size_t>(i)] + im_e2[static_cast<size_t>(i)];
    rot.m.assign(4, std::vector<long>(4));
    for (int i = 0; i < 4; ++i) {
        rot.m[static_cast<size_t>(i)][0] = im_h[static_cast<size_t>(i)];
        rot.m[static_cast<size_t>(i)][1] = im_e1[static_cast<size_t>(i)];
        rot.m[static_cast<size_t>(i)][2] = im_e2[static_cast<size_t>(i)];
        rot.m[static_cast<size_t>(i)][3] = im_e3[static_cast<size_t>(i)];
    }
    CHECK(invariant_rank(lat, {rot}) == 1);

    // r^3 = the half-turn: e_i <-> opposite side
    LatticeAction half;
    half.m.assign(4, std::vector<long>(4));
    auto set_col = [&](int j, std::initializer_list<long> v) {
        int i = 0;
        for (long x : v) half.m[static_cast<size_t>(i++)][static_cast<size_t>(j)] = x;
    };
    set_col(1, {1, 0, -1, -1});   // e1 -> d23
    set_col(2, {1, -1, 0, -1});   // e2 -> d13
    set_col(3, {1, -1, -1, 0});   // e3 -> d12
    set_col(0, {2, -1, -1, -1});  // h -> 2h - e1 - e2 - e3
    // involution with trace 2 on a rank-4 lattice: fixed part has rank 3
    CHECK(invariant_rank(lat, {half}) == 3);

    // r^2 fixes h and e1+e2+e3 and nothing more
    LatticeAction r2;
    r2.m.assign(4, std::vector<long>(4));
    auto set_col2 = [&](int j, std::initializer_list<long> v) {
        int i = 0;
        for (long x : v) r2.m[static_cast<size_t>(i++)][static_cast<size_t>(j)] = x;
    };
    set_col2(0, {1, 0, 0, 0});  // h fixed
    set_col2(1, {0, 0, 1, 0});  // e1 -> e2
    set_col2(2, {0, 0, 0, 1});  // e2 -> e3
    set_col2(3, {0, 1, 0, 0});  // e3 -> e1
    CHECK(invariant_rank(lat, {r2}) == 2);

    CHECK(invariant_rank(lat, {}) == 4);

    LatticeAction bogus;
    bogus.m = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 1, 1}};
    CHECK_THROWS_AS(invariant_rank(lat, {bogus}), EngineError);
}

TEST_CASE("invariant rank is monotone under adding generators") {
    PicLattice lat(6);
    LatticeAction swap12;  // e1 <-> e2 (lattice automorphism fixing h, e3)
    swap12.m = {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
    long r1 = invariant_rank(lat, {swap12});
    CHECK(r1 == 3);
    LatticeAction swap23;
    swap23.m = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    CHECK(invariant_rank(lat, {swap12, swap23}) <= r1);
    CHECK(invariant_rank(lat, {swap12, swap23}) == 2);
}
