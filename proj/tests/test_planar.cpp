#include "bpl/error.hpp"
#include "bpl/fibered.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace bpl;

namespace {

BaseLoop loop_of(std::initializer_list<std::pair<int, int>> pts) {
    BaseLoop L;
    for (auto [x, y] : pts) L.vertices.push_back({Rat(x), Rat(y)});
    return L;
}

Rat shoelace(const std::vector<Point>& v) {
    Rat s = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        s += a.x * b.y - a.y * b.x;
    }
    return s / 2;
}

}  // namespace

TEST_CASE("square: turning, area, winding") {
    const BaseLoop sq = loop_of({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    CHECK(turning_number(sq) == 1);
    CHECK(signed_area(sq) == 4);
    CHECK(winding_number(sq, {Rat(1), Rat(1)}) == 1);
    CHECK(winding_number(sq, {Rat(3), Rat(1)}) == 0);
    CHECK(self_intersections(sq).empty());
    const BaseLoop r = reversed(sq);
    CHECK(turning_number(r) == -1);
    CHECK(signed_area(r) == -4);
}

TEST_CASE("figure eight has one crossing and turning zero") {
    const BaseLoop f = loop_of({{0, 0}, {2, 2}, {2, 0}, {0, 2}});
    CHECK(self_intersections(f).size() == 1);
    CHECK(turning_number(f) == 0);
    CHECK(signed_area(f) == 0);
}

TEST_CASE("degenerate loops are geometry errors") {
    const BaseLoop zero = loop_of({{0, 0}, {0, 0}, {1, 0}, {1, 1}});
    try {
        validate(zero);
        FAIL("expected a geometry error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Geometry);
    }
}

TEST_CASE("crossing counter agrees with brute force on random polygons") {
    std::mt19937 rng(11);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        BaseLoop L;
        const int n = 4 + int(rng() % 6);
        for (int i = 0; i < n; ++i) L.vertices.push_back({Rat(int(rng() % 97), 7), Rat(int(rng() % 89), 5)});
        std::vector<Crossing> xs;
        try {
            validate(L);
            xs = self_intersections(L);
        } catch (const Error&) {
            continue;
        }
        CHECK(xs.size() == oracle::closed_crossings(traversal(L)).size());
        CHECK(signed_area(L) == shoelace(traversal(L)));
        const BaseLoop r = reversed(L);
        CHECK(turning_number(r) == -turning_number(L));
        CHECK(self_intersections(r).size() == xs.size());
        ++checked;
    }
    CHECK(checked > 50);
}

TEST_CASE("turning number parity matches crossing count") {
    // Whitney: turning + crossings is odd for a generic closed curve.
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        BaseLoop L;
        for (int i = 0; i < 6; ++i) L.vertices.push_back({Rat(int(rng() % 101), 3), Rat(int(rng() % 103), 11)});
        try {
            validate(L);
            const long t = turning_number(L);
            const long h = static_cast<long>(self_intersections(L).size());
            CHECK((t + h) % 2 != 0);
        } catch (const Error&) {
        }
    }
}

TEST_CASE("offset loop of a square stays disjoint and nested") {
    const BaseLoop sq = loop_of({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
    const BaseLoop off = offset_loop(sq, Rat(1, 4));
    CHECK(intersections(sq, off).empty());
    CHECK(abs(signed_area(off)) != signed_area(sq));
}

TEST_CASE("face areas sum to the total signed area") {
    const BaseLoop f = loop_of({{0, 0}, {4, 4}, {4, 0}, {0, 4}});
    const Arrangement arr = face_areas({f});
    Rat weighted = 0;
    for (const auto& face : arr.faces) weighted += face.area * face.depth.at(0);
    CHECK(weighted == signed_area(f));
    CHECK(arr.crossings.size() == 1);
}
