#pragma once

#include "bpl/exact.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bpl {

struct Point {
    Rat x, y;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rat& s, const Point& a);
Rat cross(const Point& a, const Point& b);
Rat dot(const Point& a, const Point& b);

// Closed loops repeat no vertex at the end; open paths are polylines.
struct BaseLoop {
    std::vector<Point> vertices;
    bool closed = true;
    int orientation = 1;

    friend bool operator==(const BaseLoop&, const BaseLoop&) = default;
};

// Vertices in traversal order.
std::vector<Point> traversal(const BaseLoop& loop);
BaseLoop reversed(const BaseLoop& loop);
int segment_count(const BaseLoop& loop);
std::pair<Point, Point> segment(const BaseLoop& loop, int i);

// Throws geometry errors for zero-length edges and reversals; drops collinear interior vertices.
BaseLoop normalized(const BaseLoop& loop);
void validate(const BaseLoop& loop);

long turning_number(const BaseLoop& loop);
Rat signed_area(const BaseLoop& loop);
int winding_number(const BaseLoop& loop, const Point& p);

// Position along a loop: segment index plus fraction in [0,1).
struct LoopPos {
    int seg = 0;
    Rat t;

    friend bool operator<(const LoopPos& a, const LoopPos& b) { return a.seg < b.seg || (a.seg == b.seg && a.t < b.t); }
    friend bool operator==(const LoopPos& a, const LoopPos& b) { return a.seg == b.seg && a.t == b.t; }
};

Point point_at(const BaseLoop& loop, const LoopPos& pos);
Point direction_at(const BaseLoop& loop, const LoopPos& pos);

// For self-intersections pos1 < pos2 and sign = sign(cross(d1, d2)).
struct Crossing {
    Point p;
    LoopPos pos1, pos2;
    int sign = 0;
};

std::vector<Crossing> self_intersections(const BaseLoop& loop);
std::vector<Crossing> intersections(const BaseLoop& a, const BaseLoop& b);

struct Face {
    int id = 0;
    Rat area;
    std::vector<int> depth;
    Point sample;
    std::vector<std::vector<Point>> boundary;
};

struct ArrangementCrossing {
    Crossing crossing;
    int loop1 = 0, loop2 = 0;
};

struct Arrangement {
    std::vector<Face> faces;
    std::vector<ArrangementCrossing> crossings;
};

Arrangement face_areas(const std::vector<BaseLoop>& loops);

// Arc of a loop between two positions, walking forward or backward.
struct Arc {
    LoopPos from, to;
    bool forward = true;
};

bool arc_contains(const BaseLoop& loop, const Arc& arc, const LoopPos& p);
std::vector<Point> arc_points(const BaseLoop& loop, const Arc& arc);

struct Bigon {
    int x = 0, y = 0;
    Arc arc1, arc2;
    // +1 when the counterclockwise boundary runs along the loop's own direction.
    int dir1 = 0, dir2 = 0;
    Rat area;
    std::vector<Point> boundary;
    std::vector<int> faces;
};

struct BigonOptions {
    std::optional<std::pair<int, int>> endpoints;
    bool with_faces = false;
};

// Embedded discs bounded by one arc of l1 and one of l2 with convex corners.
std::vector<Bigon> embedded_bigons(const BaseLoop& l1, const BaseLoop& l2, const BigonOptions& opts = {});

}  // namespace bpl
