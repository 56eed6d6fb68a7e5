#include "bpl/planar.hpp"

#include "bpl/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bpl {

Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(const Rat& s, const Point& a) { return {s * a.x, s * a.y}; }
Rat cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
Rat dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

namespace {

int sgn(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

std::string fmt(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

// Half-open angle order starting at direction (1, 0).
int half(const Point& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; }

bool angle_less(const Point& a, const Point& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

struct Box {
    double x0, x1, y0, y1;
};

std::vector<Box> boxes(const BaseLoop& loop) {
    std::vector<Box> out;
    const int n = segment_count(loop);
    for (int i = 0; i < n; ++i) {
        auto [a, b] = segment(loop, i);
        double ax = a.x.convert_to<double>(), ay = a.y.convert_to<double>();
        double bx = b.x.convert_to<double>(), by = b.y.convert_to<double>();
        const double eps = 1e-9 * (1.0 + std::max({std::abs(ax), std::abs(ay), std::abs(bx), std::abs(by)}));
        out.push_back({std::min(ax, bx) - eps, std::max(ax, bx) + eps, std::min(ay, by) - eps, std::max(ay, by) + eps});
    }
    return out;
}

bool overlap(const Box& a, const Box& b) { return a.x0 <= b.x1 && b.x0 <= a.x1 && a.y0 <= b.y1 && b.y0 <= a.y1; }

// Transverse interior crossing of p->p+d and q->q+e; throws on any degenerate contact.
std::optional<std::pair<Rat, Rat>> seg_cross(const Point& p, const Point& d, const Point& q, const Point& e) {
    const Rat den = cross(d, e);
    const Point w = q - p;
    if (den == 0) {
        if (cross(w, d) != 0) return std::nullopt;
        const Rat dd = dot(d, d);
        Rat s0 = dot(w, d) / dd, s1 = dot(w + e, d) / dd;
        if (s0 > s1) std::swap(s0, s1);
        if (s1 < 0 || s0 > 1) return std::nullopt;
        throw Error(ErrorKind::PerturbationRequired, "collinear overlap near " + fmt(q));
    }
    const Rat t = cross(w, e) / den;
    const Rat u = cross(w, d) / den;
    if (t < 0 || t > 1 || u < 0 || u > 1) return std::nullopt;
    if (t == 0 || t == 1 || u == 0 || u == 1)
        throw Error(ErrorKind::PerturbationRequired, "non-transverse contact at " + fmt(p + t * d));
    return std::make_pair(t, u);
}

bool cyclic_between(const LoopPos& a, const LoopPos& b, const LoopPos& p) {
    if (a < b) return a < p && p < b;
    return a < p || p < b;
}

}  // namespace

std::vector<Point> traversal(const BaseLoop& loop) {
    std::vector<Point> v = loop.vertices;
    if (loop.orientation < 0) std::reverse(v.begin(), v.end());
    return v;
}

BaseLoop reversed(const BaseLoop& loop) {
    BaseLoop r = loop;
    r.orientation = -loop.orientation;
    return r;
}

int segment_count(const BaseLoop& loop) {
    const int n = static_cast<int>(loop.vertices.size());
    if (n < 2) return 0;
    return loop.closed ? n : n - 1;
}

std::pair<Point, Point> segment(const BaseLoop& loop, int i) {
    const int n = static_cast<int>(loop.vertices.size());
    auto at = [&](int k) -> const Point& {
        k = ((k % n) + n) % n;
        return loop.orientation < 0 ? loop.vertices[n - 1 - k] : loop.vertices[k];
    };
    return {at(i), at(i + 1)};
}

BaseLoop normalized(const BaseLoop& loop) {
    std::vector<Point> v = traversal(loop);
    const int n0 = static_cast<int>(v.size());
    const int edges = loop.closed ? n0 : n0 - 1;
    for (int i = 0; i < edges; ++i)
        if (v[i] == v[(i + 1) % n0]) throw Error(ErrorKind::Geometry, "zero-length edge at " + fmt(v[i]));
    bool changed = true;
    while (changed && v.size() >= 3) {
        changed = false;
        const int n = static_cast<int>(v.size());
        for (int i = 0; i < n; ++i) {
            if (!loop.closed && (i == 0 || i == n - 1)) continue;
            const Point& prev = v[(i + n - 1) % n];
            const Point& cur = v[i];
            const Point& next = v[(i + 1) % n];
            const Point d1 = cur - prev, d2 = next - cur;
            if (cross(d1, d2) != 0) continue;
            if (dot(d1, d2) < 0) throw Error(ErrorKind::Geometry, "edge reverses direction at " + fmt(cur));
            v.erase(v.begin() + i);
            changed = true;
            break;
        }
    }
    BaseLoop out;
    out.vertices = std::move(v);
    out.closed = loop.closed;
    out.orientation = 1;
    if (loop.closed && out.vertices.size() < 3) throw Error(ErrorKind::Geometry, "closed loop needs three vertices");
    if (!loop.closed && out.vertices.size() < 2) throw Error(ErrorKind::Geometry, "path needs two vertices");
    return out;
}

void validate(const BaseLoop& loop) {
    const BaseLoop n = normalized(loop);
    if (n.vertices.size() != loop.vertices.size())
        throw Error(ErrorKind::Geometry, "loop has collinear consecutive vertices");
}

long turning_number(const BaseLoop& loop) {
    if (!loop.closed) throw Error(ErrorKind::Precondition, "turning number needs a closed loop");
    const int n = segment_count(loop);
    if (n < 3) throw Error(ErrorKind::Geometry, "degenerate loop");
    long wraps = 0;
    for (int i = 0; i < n; ++i) {
        auto [a0, a1] = segment(loop, i);
        auto [b0, b1] = segment(loop, i + 1);
        const Point da = a1 - a0, db = b1 - b0;
        if (da.x == 0 && da.y == 0) throw Error(ErrorKind::Geometry, "zero-length edge at " + fmt(a0));
        const Rat c = cross(da, db);
        if (c == 0) {
            if (dot(da, db) < 0) throw Error(ErrorKind::Geometry, "edge reverses direction at " + fmt(a1));
            continue;
        }
        if (c > 0 && angle_less(db, da)) ++wraps;
        if (c < 0 && angle_less(da, db)) --wraps;
    }
    return wraps;
}

Rat signed_area(const BaseLoop& loop) {
    Rat s = 0;
    const int n = static_cast<int>(loop.vertices.size());
    if (!loop.closed) return s;
    for (int i = 0; i < n; ++i) s += cross(loop.vertices[i], loop.vertices[(i + 1) % n]);
    s /= 2;
    return loop.orientation < 0 ? Rat(-s) : s;
}

int winding_number(const BaseLoop& loop, const Point& p) {
    if (!loop.closed) return 0;
    int w = 0;
    const int n = segment_count(loop);
    for (int i = 0; i < n; ++i) {
        auto [a, b] = segment(loop, i);
        if (a.y <= p.y) {
            if (b.y > p.y && cross(b - a, p - a) > 0) ++w;
        } else if (b.y <= p.y && cross(b - a, p - a) < 0) {
            --w;
        }
    }
    return w;
}

Point point_at(const BaseLoop& loop, const LoopPos& pos) {
    auto [a, b] = segment(loop, pos.seg);
    return a + pos.t * (b - a);
}

Point direction_at(const BaseLoop& loop, const LoopPos& pos) {
    auto [a, b] = segment(loop, pos.seg);
    return b - a;
}

std::vector<Crossing> self_intersections(const BaseLoop& loop) {
    const int n = segment_count(loop);
    const auto bx = boxes(loop);
    std::vector<Crossing> out;
    for (int i = 0; i < n; ++i) {
        auto [p, p1] = segment(loop, i);
        if (p == p1) throw Error(ErrorKind::Geometry, "zero-length edge at " + fmt(p));
        for (int j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (loop.closed && i == 0 && j == n - 1);
            if (!overlap(bx[i], bx[j])) continue;
            auto [q, q1] = segment(loop, j);
            if (adjacent) {
                const Point d = p1 - p, e = q1 - q;
                if (cross(d, e) == 0 && dot(d, e) < 0)
                    throw Error(ErrorKind::Geometry, "edge reverses direction near " + fmt(q));
                continue;
            }
            auto hit = seg_cross(p, p1 - p, q, q1 - q);
            if (!hit) continue;
            Crossing c;
            c.p = p + hit->first * (p1 - p);
            c.pos1 = {i, hit->first};
            c.pos2 = {j, hit->second};
            c.sign = sgn(cross(p1 - p, q1 - q));
            out.push_back(std::move(c));
        }
    }
    std::sort(out.begin(), out.end(), [](const Crossing& a, const Crossing& b) { return a.pos1 < b.pos1; });
    return out;
}

std::vector<Crossing> intersections(const BaseLoop& a, const BaseLoop& b) {
    const int na = segment_count(a), nb = segment_count(b);
    const auto ba = boxes(a), bb = boxes(b);
    std::vector<Crossing> out;
    for (int i = 0; i < na; ++i) {
        auto [p, p1] = segment(a, i);
        for (int j = 0; j < nb; ++j) {
            if (!overlap(ba[i], bb[j])) continue;
            auto [q, q1] = segment(b, j);
            auto hit = seg_cross(p, p1 - p, q, q1 - q);
            if (!hit) continue;
            Crossing c;
            c.p = p + hit->first * (p1 - p);
            c.pos1 = {i, hit->first};
            c.pos2 = {j, hit->second};
            c.sign = sgn(cross(p1 - p, q1 - q));
            out.push_back(std::move(c));
        }
    }
    std::sort(out.begin(), out.end(), [](const Crossing& x, const Crossing& y) { return x.pos1 < y.pos1; });
    return out;
}

Arrangement face_areas(const std::vector<BaseLoop>& loops) {
    Arrangement arr;
    const int L = static_cast<int>(loops.size());
    // Split parameters per (loop, segment).
    std::vector<std::vector<std::vector<Rat>>> cuts(L);
    for (int l = 0; l < L; ++l) cuts[l].assign(segment_count(loops[l]), {});
    for (int l = 0; l < L; ++l) {
        for (const auto& c : self_intersections(loops[l])) {
            cuts[l][c.pos1.seg].push_back(c.pos1.t);
            cuts[l][c.pos2.seg].push_back(c.pos2.t);
            arr.crossings.push_back({c, l, l});
        }
        for (int m = l + 1; m < L; ++m)
            for (const auto& c : intersections(loops[l], loops[m])) {
                cuts[l][c.pos1.seg].push_back(c.pos1.t);
                cuts[m][c.pos2.seg].push_back(c.pos2.t);
                arr.crossings.push_back({c, l, m});
            }
    }

    std::map<Point, int> vid;
    std::vector<Point> verts;
    auto vertex = [&](const Point& p) {
        auto it = vid.find(p);
        if (it != vid.end()) return it->second;
        int id = static_cast<int>(verts.size());
        vid.emplace(p, id);
        verts.push_back(p);
        return id;
    };
    struct Half {
        int from, to, twin, next = -1, cycle = -1;
    };
    std::vector<Half> hs;
    for (int l = 0; l < L; ++l) {
        for (int s = 0; s < segment_count(loops[l]); ++s) {
            auto [a, b] = segment(loops[l], s);
            auto ts = cuts[l][s];
            std::sort(ts.begin(), ts.end());
            std::vector<Point> pts{a};
            for (const auto& t : ts) pts.push_back(a + t * (b - a));
            pts.push_back(b);
            for (size_t k = 0; k + 1 < pts.size(); ++k) {
                int u = vertex(pts[k]), v = vertex(pts[k + 1]);
                int h = static_cast<int>(hs.size());
                hs.push_back({u, v, h + 1});
                hs.push_back({v, u, h});
            }
        }
    }
    std::vector<std::vector<int>> out_edges(verts.size());
    for (int h = 0; h < static_cast<int>(hs.size()); ++h) out_edges[hs[h].from].push_back(h);
    for (auto& oe : out_edges)
        std::sort(oe.begin(), oe.end(), [&](int a, int b) {
            return angle_less(verts[hs[a].to] - verts[hs[a].from], verts[hs[b].to] - verts[hs[b].from]);
        });
    std::vector<int> rank_at(hs.size());
    for (auto& oe : out_edges)
        for (int i = 0; i < static_cast<int>(oe.size()); ++i) rank_at[oe[i]] = i;
    for (auto& h : hs) {
        const auto& oe = out_edges[h.to];
        const int r = rank_at[h.twin];
        h.next = oe[(r + oe.size() - 1) % oe.size()];
    }

    struct Cycle {
        std::vector<int> edges;
        Rat area;
        Point sample;
    };
    std::vector<Cycle> cycles;
    for (int h0 = 0; h0 < static_cast<int>(hs.size()); ++h0) {
        if (hs[h0].cycle >= 0) continue;
        Cycle c;
        int h = h0;
        do {
            hs[h].cycle = static_cast<int>(cycles.size());
            c.edges.push_back(h);
            c.area += cross(verts[hs[h].from], verts[hs[h].to]);
            h = hs[h].next;
        } while (h != h0);
        c.area /= 2;
        cycles.push_back(std::move(c));
    }

    // Sample point: step left from an edge midpoint, halfway to the nearest other edge.
    std::vector<std::pair<Point, Point>> edges;
    for (size_t h = 0; h < hs.size(); h += 2) edges.push_back({verts[hs[h].from], verts[hs[h].to]});
    for (auto& c : cycles) {
        const int h = c.edges.front();
        const Point a = verts[hs[h].from], b = verts[hs[h].to];
        const Point m = Rat(1, 2) * (a + b);
        const Point nrm{-(b - a).y, (b - a).x};
        std::optional<Rat> best;
        for (size_t e = 0; e < edges.size(); ++e) {
            if (static_cast<int>(e) == h / 2) continue;
            const Point q = edges[e].first, d = edges[e].second - edges[e].first;
            const Rat den = cross(nrm, d);
            const Point w = q - m;
            if (den == 0) {
                if (cross(w, nrm) != 0) continue;
                const Rat nn = dot(nrm, nrm);
                Rat s0 = dot(w, nrm) / nn, s1 = dot(w + d, nrm) / nn;
                Rat s = std::min(s0, s1);
                if (std::max(s0, s1) > 0) {
                    if (s <= 0) s = std::max(s0, s1);
                    if (!best || s < *best) best = s;
                }
                continue;
            }
            const Rat t = cross(w, d) / den;
            const Rat u = cross(w, nrm) / den;
            if (t > 0 && u >= 0 && u <= 1 && (!best || t < *best)) best = t;
        }
        const Rat step = best ? Rat(*best / 2) : Rat(1);
        c.sample = m + step * nrm;
    }

    auto cycle_poly = [&](const Cycle& c) {
        BaseLoop poly;
        for (int h : c.edges) poly.vertices.push_back(verts[hs[h].from]);
        return poly;
    };
    std::vector<BaseLoop> polys;
    for (const auto& c : cycles) polys.push_back(cycle_poly(c));

    std::vector<int> face_of(cycles.size(), -1);
    for (size_t i = 0; i < cycles.size(); ++i) {
        if (cycles[i].area <= 0) continue;
        Face f;
        f.id = static_cast<int>(arr.faces.size());
        f.area = cycles[i].area;
        f.sample = cycles[i].sample;
        f.boundary.push_back(polys[i].vertices);
        face_of[i] = f.id;
        arr.faces.push_back(std::move(f));
    }
    // Holes go to the smallest positive cycle around them.
    for (size_t i = 0; i < cycles.size(); ++i) {
        if (cycles[i].area > 0) continue;
        int host = -1;
        for (size_t j = 0; j < cycles.size(); ++j) {
            if (cycles[j].area <= 0) continue;
            if (winding_number(polys[j], cycles[i].sample) == 0) continue;
            if (host < 0 || cycles[j].area < cycles[host].area) host = static_cast<int>(j);
        }
        if (host < 0) continue;
        Face& f = arr.faces[face_of[host]];
        f.area += cycles[i].area;
        f.boundary.push_back(polys[i].vertices);
    }
    for (auto& f : arr.faces)
        for (const auto& loop : loops) f.depth.push_back(winding_number(loop, f.sample));
    return arr;
}

bool arc_contains(const BaseLoop& loop, const Arc& arc, const LoopPos& p) {
    if (loop.closed) return arc.forward ? cyclic_between(arc.from, arc.to, p) : cyclic_between(arc.to, arc.from, p);
    if (arc.forward) return arc.from < p && p < arc.to;
    return arc.to < p && p < arc.from;
}

std::vector<Point> arc_points(const BaseLoop& loop, const Arc& arc) {
    std::vector<Point> pts{point_at(loop, arc.from)};
    const int n = static_cast<int>(loop.vertices.size());
    const int nseg = segment_count(loop);
    auto wrap = [&](int k) { return loop.closed ? ((k % n) + n) % n : k; };
    auto vertex_pos = [&](int k) { return LoopPos{k, Rat(0)}; };
    auto vertex_point = [&](int k) { return segment(loop, k).first; };
    if (arc.forward) {
        int k = wrap(arc.from.seg + 1);
        for (int steps = 0; steps < n; ++steps) {
            if (!loop.closed && k > nseg) break;
            const LoopPos vp = (!loop.closed && k == nseg) ? LoopPos{nseg - 1, Rat(1)} : vertex_pos(k);
            if (!arc_contains(loop, arc, vp)) break;
            pts.push_back(!loop.closed && k == nseg ? segment(loop, nseg - 1).second : vertex_point(k));
            k = wrap(k + 1);
        }
    } else {
        int k = arc.from.t > 0 ? arc.from.seg : wrap(arc.from.seg - 1);
        for (int steps = 0; steps < n; ++steps) {
            if (!loop.closed && k < 0) break;
            if (!arc_contains(loop, arc, vertex_pos(k))) break;
            pts.push_back(vertex_point(k));
            k = wrap(k - 1);
        }
    }
    pts.push_back(point_at(loop, arc.to));
    return pts;
}

std::vector<Bigon> embedded_bigons(const BaseLoop& l1, const BaseLoop& l2, const BigonOptions& opts) {
    const auto xs = intersections(l1, l2);
    const auto s1 = self_intersections(l1);
    const auto s2 = self_intersections(l2);
    std::vector<Bigon> out;
    std::optional<Arrangement> arr;

    auto arcs_between = [](const BaseLoop& loop, const LoopPos& a, const LoopPos& b) {
        std::vector<Arc> arcs;
        if (loop.closed) {
            arcs.push_back({a, b, true});
            arcs.push_back({a, b, false});
        } else {
            arcs.push_back({a, b, a < b});
        }
        return arcs;
    };
    auto arc_simple = [](const BaseLoop& loop, const Arc& arc, const std::vector<Crossing>& selfx) {
        for (const auto& c : selfx)
            if (arc_contains(loop, arc, c.pos1) && arc_contains(loop, arc, c.pos2)) return false;
        return true;
    };

    const int nx = static_cast<int>(xs.size());
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < nx; ++j) {
            if (i == j) continue;
            if (opts.endpoints) {
                auto [ea, eb] = *opts.endpoints;
                if (!((i == ea && j == eb) || (i == eb && j == ea))) continue;
            }
            // Unordered pair: l1 arc runs x -> y with x < y in crossing order.
            if (i > j) continue;
            const Crossing& x = xs[i];
            const Crossing& y = xs[j];
            for (const Arc& a1 : arcs_between(l1, x.pos1, y.pos1)) {
                if (!arc_simple(l1, a1, s1)) continue;
                for (const Arc& a2 : arcs_between(l2, y.pos2, x.pos2)) {
                    if (!arc_simple(l2, a2, s2)) continue;
                    bool clean = true;
                    for (int z = 0; z < nx && clean; ++z) {
                        if (z == i || z == j) continue;
                        if (arc_contains(l1, a1, xs[z].pos1) && arc_contains(l2, a2, xs[z].pos2)) clean = false;
                    }
                    if (!clean) continue;
                    BaseLoop poly;
                    poly.vertices = arc_points(l1, a1);
                    auto p2 = arc_points(l2, a2);
                    poly.vertices.pop_back();
                    poly.vertices.insert(poly.vertices.end(), p2.begin(), p2.end() - 1);
                    const Rat area = signed_area(poly);
                    const int o = sgn(area);
                    if (o == 0) continue;
                    const int f1 = a1.forward ? 1 : -1, f2 = a2.forward ? 1 : -1;
                    const Point d1x = Rat(f1) * direction_at(l1, x.pos1), d1y = Rat(f1) * direction_at(l1, y.pos1);
                    const Point d2x = Rat(f2) * direction_at(l2, x.pos2), d2y = Rat(f2) * direction_at(l2, y.pos2);
                    if (sgn(cross(d2x, d1x)) != o || sgn(cross(d1y, d2y)) != o) continue;
                    Bigon b;
                    b.x = i;
                    b.y = j;
                    b.arc1 = a1;
                    b.arc2 = a2;
                    b.dir1 = f1 * o;
                    b.dir2 = f2 * o;
                    b.area = o > 0 ? area : Rat(-area);
                    b.boundary = poly.vertices;
                    if (o < 0) std::reverse(b.boundary.begin(), b.boundary.end());
                    if (opts.with_faces) {
                        if (!arr) arr = face_areas({l1, l2});
                        for (const auto& f : arr->faces)
                            if (winding_number(poly, f.sample) != 0) b.faces.push_back(f.id);
                    }
                    out.push_back(std::move(b));
                }
            }
        }
    }
    return out;
}

}  // namespace bpl
