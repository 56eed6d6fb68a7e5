#include "bpl/error.hpp"
#include "bpl/fibered.hpp"

#include <algorithm>

namespace bpl {

namespace {

const Rat kS = 8;       // winding pitch
const Rat kMargin = 24; // extra half-width of every spiral
const Rat kDelta = Rat(1, 4);

Point left_of(const Point& u) { return {-u.y, u.x}; }
Point right_of(const Point& u) { return {u.y, -u.x}; }

struct Frame {
    Point o, u, w;
    Point at(const Rat& a, const Rat& b) const { return o + a * u + b * w; }
};

Frame make_frame(const Point& o, const Point& u, int hand) { return {o, u, hand > 0 ? left_of(u) : right_of(u)}; }

struct Draft {
    struct Tok {
        Point p;
        ConfigToken token;
        std::string site;
    };
    std::vector<Point> pts;
    std::vector<Tok> toks;

    void to(const Point& p) {
        if (!pts.empty() && pts.back() == p) return;
        pts.push_back(p);
    }
    void tok(const Point& p, TokenKind k, int tau, const std::string& site) { toks.push_back({p, {k, tau}, site}); }
};

std::vector<PlacedToken> resolve_tokens(const BaseLoop& loop, const std::vector<Draft::Tok>& toks) {
    std::vector<PlacedToken> out;
    LoopPos cur{0, Rat(-1)};
    const int n = segment_count(loop);
    for (const auto& t : toks) {
        bool found = false;
        for (int s = cur.seg; s < n && !found; ++s) {
            auto [a, b] = segment(loop, s);
            const Point d = b - a, r = t.p - a;
            if (cross(d, r) != 0) continue;
            const Rat par = dot(r, d) / dot(d, d);
            if (par <= 0 || par >= 1) continue;
            const LoopPos p{s, par};
            if (!(cur < p)) continue;
            out.push_back({t.token, p, t.site});
            cur = p;
            found = true;
        }
        if (!found)
            throw Error(ErrorKind::InvalidConstruction,
                        "configuration " + std::string(kind_name(t.token.kind)) + " at (" + to_string(t.p.x) + ", " +
                            to_string(t.p.y) + ") does not lie on the loop in order");
    }
    return out;
}

FiberedLagrangian finish(Draft& d, const std::string& id, const std::string& builder) {
    FiberedLagrangian L;
    L.id = id;
    L.builder = builder;
    BaseLoop raw;
    raw.vertices = d.pts;
    L.loop = normalized(raw);
    if (!(L.loop.vertices.front() == d.pts.front()))
        throw Error(ErrorKind::InvalidConstruction, "loop start is not a corner");
    L.tokens = resolve_tokens(L.loop, d.toks);
    return L;
}

struct Slot {
    TokenKind kind;
    int tau;
    bool top;
    Rat a;
    std::string site;
};

enum class Variant { Standard, Jump };

struct SpiralSpec {
    int hand = 1;
    int drawn = 0;
    int layout = 0;
    std::vector<Slot> slots;
    Variant variant = Variant::Standard;
    Rat exit_a = 0;
};

Rat half_width(int layout) { return layout == 0 ? Rat(0) : Rat(layout) * kS + kMargin; }
Rat height(int layout) { return Rat(2 * layout + 3) * kS; }

// Emits a spiral piece along the u axis starting on the line b = 0 (caller sits at a < -A).
void emit_spiral(Draft& d, const Frame& f, const SpiralSpec& sp) {
    if (sp.layout == 0) return;
    const Rat A = half_width(sp.layout), H = height(sp.layout), s = kS;
    std::vector<Slot> bottom, top;
    for (const auto& sl : sp.slots) (sl.top ? top : bottom).push_back(sl);
    std::sort(bottom.begin(), bottom.end(), [](const Slot& x, const Slot& y) { return x.a < y.a; });
    std::sort(top.begin(), top.end(), [](const Slot& x, const Slot& y) { return x.a > y.a; });
    for (int i = 0; i < sp.drawn; ++i) {
        const Rat lo = Rat(i) * s, hi = H - Rat(i) * s;
        for (const auto& sl : bottom) d.tok(f.at(sl.a, lo), sl.kind, sl.tau, sl.site);
        d.to(f.at(A - lo, lo));
        d.to(f.at(A - lo, hi));
        for (const auto& sl : top) d.tok(f.at(sl.a, hi), sl.kind, sl.tau, sl.site);
        d.to(f.at(-A + lo + s, hi));
        d.to(f.at(-A + lo + s, lo + s));
    }
    const Rat y0 = Rat(sp.drawn) * s;
    if (sp.variant == Variant::Jump) {
        const Rat xj = -s;
        const Rat ytop = (Rat(sp.layout) - Rat(1, 2)) * s;
        d.to(f.at(xj, y0));
        d.to(f.at(xj, ytop));
        d.to(f.at(sp.exit_a, ytop));
    } else {
        d.to(f.at(sp.exit_a, y0));
    }
    d.to(f.at(sp.exit_a, -s));
    d.to(f.at(A + s, -s));
    d.to(f.at(A + s, Rat(0)));
}

std::vector<Slot> left_pattern() {
    return {{TokenKind::BC, -1, false, Rat(-1), "L-BC"},
            {TokenKind::BC, -1, false, Rat(1), "L-BC"},
            {TokenKind::BB, 1, false, Rat(3), "L-BB"}};
}

std::vector<Slot> neutral_pattern(const std::string& p) {
    return {{TokenKind::BB, 1, false, Rat(-3), p + "-BB"},
            {TokenKind::BC, 1, false, Rat(-1), p + "-BC"},
            {TokenKind::BC, -1, false, Rat(1), p + "-BC"},
            {TokenKind::BB, 1, false, Rat(3), p + "-BB"}};
}

std::vector<Slot> positive_pattern(const std::string& p) {
    return {{TokenKind::BB, 1, false, Rat(-3), p + "-BB"},
            {TokenKind::BC, 1, false, Rat(-1), p + "-BC"},
            {TokenKind::BC, 1, false, Rat(1), p + "-BC"},
            {TokenKind::BB, 1, false, Rat(3), p + "-BB"}};
}

std::vector<Slot> right_pattern() {
    return {{TokenKind::BB, -1, false, Rat(-3), "R-BB"},
            {TokenKind::BC, -1, false, Rat(-1), "R-BC"},
            {TokenKind::BC, -1, false, Rat(1), "R-BC"},
            {TokenKind::BB, 1, false, Rat(3), "R-BB"},
            {TokenKind::BC, -1, true, Rat(2), "R-BC"},
            {TokenKind::BC, -1, true, Rat(-2), "R-BC"}};
}

// Figure-eight skeleton with a left spiral inside the left lobe, a top spiral outside it and a right spiral
// outside the right lobe.
struct EightSpec {
    int left = 0, left_layout = 0;
    int top = 0;
    std::vector<Slot> top_slots;
    int right = 0, right_layout = 0;
    Variant left_variant = Variant::Standard;
    Rat exit_a = 0;
};

struct EightGeom {
    Rat D, cxL, cxM, cxR, XL, XR;
    Rat AL, AM, AR, HL, HM, HR;
};

EightGeom eight_geometry(const EightSpec& e) {
    EightGeom g;
    const Rat s = kS;
    g.AL = half_width(e.left_layout);
    g.AM = half_width(e.top);
    g.AR = half_width(e.right_layout);
    g.HL = height(e.left_layout);
    g.HM = height(e.top);
    g.HR = height(e.right_layout);
    g.D = Rat(e.left_layout + 3) * s;
    const Rat amax = std::max(g.AL, g.AM);
    g.cxL = -g.D - 4 * s - amax;
    g.cxM = g.cxL - s;
    g.XL = -g.cxL + amax + 3 * s;
    g.cxR = g.D + 4 * s + g.AR;
    g.XR = g.cxR + g.AR + 4 * s;
    return g;
}

Draft draw_eight(const EightSpec& e, const EightGeom& g) {
    const Rat s = kS, D = g.D;
    Draft d;
    d.to({D, D});
    d.to({-D, -D});
    SpiralSpec left{-1, e.left, e.left_layout, left_pattern(), e.left_variant, e.exit_a};
    emit_spiral(d, make_frame({g.cxL, -D}, {Rat(-1), Rat(0)}, -1), left);
    d.to({-g.XL, -D});
    d.to({-g.XL, D});
    SpiralSpec top{1, e.top, e.top, e.top_slots, Variant::Standard, 0};
    emit_spiral(d, make_frame({g.cxM, D}, {Rat(1), Rat(0)}, 1), top);
    const Rat amax = std::max(g.AL, g.AM);
    d.tok({g.cxL + amax + s, D}, TokenKind::BB, 1, "waist");
    d.tok({g.cxL + amax + 2 * s, D}, TokenKind::BC, 1, "waist");
    d.to({-D, D});
    d.to({D, -D});
    d.tok({D + s, -D}, TokenKind::BC, -1, "waist");
    SpiralSpec right{-1, e.right, e.right_layout, right_pattern(), Variant::Standard, e.exit_a};
    emit_spiral(d, make_frame({g.cxR, -D}, {Rat(1), Rat(0)}, -1), right);
    d.to({g.XR, -D});
    d.to({g.XR, D});
    d.tok({D + 2 * s, D}, TokenKind::BB, -1, "waist");
    return d;
}

BaseLoop path(std::initializer_list<Point> pts) {
    BaseLoop p;
    p.vertices = pts;
    p.closed = false;
    return p;
}

void add_T_spheres(FiberedLagrangian& L, const EightGeom& g, int N, int m, int l) {
    const Rat s = kS, D = g.D;
    // S1: down through the top spiral and into the centre of the left spiral.
    const Rat x1 = g.cxM - s;
    const Rat y1_top = D + Rat(m + 2) * s;
    const Rat y1_end = -D + Rat(N + 2) * s;
    L.spheres.push_back({"S1", path({{x1, y1_top}, {x1, y1_end}}), Label::a, 1});
    // S2: from the left centre up and out across the top of the left lobe.
    const Rat x2c = g.cxL + 2 * s;
    const Rat yh = -D + g.HL + s;
    const Rat x2 = -g.XL + s;
    L.spheres.push_back(
        {"S2", path({{x2c, -D + Rat(N + 2) * s}, {x2c, yh}, {x2, yh}, {x2, D + s}}), Label::a, 1});
    // S3: a U entering the right spiral through its top edges.
    const Rat yo = -D - g.HR - s;
    const Rat yb = -D - Rat(l + 2) * s;
    L.spheres.push_back({"S3", path({{g.cxR - s, yo}, {g.cxR - s, yb}, {g.cxR + s, yb}, {g.cxR + s, yo}}), Label::a, 1});
}

std::string tid(const char* b, int x, int y, int z) {
    return std::string(b) + "_" + std::to_string(x) + "_" + std::to_string(y) + "_" + std::to_string(z);
}

void require_nonneg(std::initializer_list<int> xs) {
    for (int x : xs)
        if (x < 0) throw Error(ErrorKind::Schema, "builder parameters must be non-negative");
}

}  // namespace

BaseLoop offset_loop(const BaseLoop& loop, const Rat& delta) {
    const std::vector<Point> v = traversal(loop);
    const int n = static_cast<int>(v.size());
    auto normal = [](const Point& d) {
        const Rat m = std::max(Rat(abs(d.x)), Rat(abs(d.y)));
        return Point{-d.y / m, d.x / m};
    };
    BaseLoop out;
    out.closed = loop.closed;
    for (int i = 0; i < n; ++i) {
        const bool has_in = loop.closed || i > 0;
        const bool has_out = loop.closed || i < n - 1;
        if (!has_in) {
            out.vertices.push_back(v[i] + delta * normal(v[i + 1] - v[i]));
            continue;
        }
        const Point d1 = v[i] - v[(i - 1 + n) % n];
        if (!has_out) {
            out.vertices.push_back(v[i] + delta * normal(d1));
            continue;
        }
        const Point d2 = v[(i + 1) % n] - v[i];
        const Point p1 = v[i] + delta * normal(d1), p2 = v[i] + delta * normal(d2);
        const Rat den = cross(d1, d2);
        if (den == 0) throw Error(ErrorKind::Geometry, "offset of a collinear vertex");
        out.vertices.push_back(p1 + (cross(p2 - p1, d2) / den) * d1);
    }
    return out;
}

FiberedLagrangian build_T(int k, int l, int m, const BuildOptions& opts) {
    require_nonneg({k, l, m});
    const int N = 2 * k + opts.left_delta;
    const int NR = l + opts.right_delta;
    if (N < 0 || NR < 0) throw Error(ErrorKind::Schema, "Klein variant removes a winding that does not exist");
    EightSpec e;
    e.left = e.left_layout = N;
    e.top = m;
    e.top_slots = neutral_pattern("M");
    e.right = e.right_layout = NR;
    const EightGeom g = eight_geometry(e);
    Draft d = draw_eight(e, g);
    FiberedLagrangian L = finish(d, tid("T", k, l, m), "T");
    L.params = {{"k", k}, {"l", l}, {"m", m}};
    if (opts.left_delta || opts.right_delta) {
        L.builder = "KleinT";
        L.id += "_klein" + std::to_string(opts.left_delta) + "_" + std::to_string(opts.right_delta);
        L.params["left_delta"] = opts.left_delta;
        L.params["right_delta"] = opts.right_delta;
    }
    L.a3 = opts.a3;
    add_T_spheres(L, g, N, m, NR);
    check_embedded(L);
    if (opts.a3) check_a3(L);
    return L;
}

FiberedLagrangian build_klein_T(int k, int l, int m, int left_delta, int right_delta) {
    if ((left_delta + right_delta) % 2 == 0)
        throw Error(ErrorKind::Schema, "a Klein variant changes the total winding parity by one");
    BuildOptions o;
    o.left_delta = left_delta;
    o.right_delta = right_delta;
    return build_T(k, l, m, o);
}

FiberedLagrangian build_R(int k, int l, int m, const BuildOptions& opts) {
    require_nonneg({k, l, m});
    EightSpec e;
    e.left = e.left_layout = 2 * k;
    e.top = l;
    e.top_slots = positive_pattern("P");
    e.right = e.right_layout = m;
    const EightGeom g = eight_geometry(e);
    Draft d = draw_eight(e, g);
    FiberedLagrangian L = finish(d, tid("R", k, l, m), "R");
    L.params = {{"k", k}, {"l", l}, {"m", m}};
    L.a3 = opts.a3;
    add_T_spheres(L, g, 2 * k, l, m);
    // Overlay arc standing in for the S piece of the linked pair above R (fiber label d).
    MatchingPath arc = sphere_named(L, "S1");
    arc.name = "overlay";
    arc.label = Label::d;
    arc.orientation = 1;
    L.spheres.push_back(arc);
    check_embedded(L);
    if (opts.a3) check_a3(L);
    return L;
}

FiberedLagrangian build_S(int n, int p, int q, const BuildOptions& opts) {
    require_nonneg({n, p, q});
    const Rat s = kS;
    const int NP = 2 * p;
    const Rat AP = half_width(NP), AQ = half_width(q), AN = half_width(n);
    const Rat HP = height(NP), HQ = height(q);
    const Rat wd = 2 * std::max(AP, AQ) + 10 * s;
    const Rat ht = std::max(Rat(HP + HQ + 4 * s), Rat(2 * AN + 10 * s));
    Draft d;
    d.to({Rat(0), ht});
    SpiralSpec top{-1, q, q, right_pattern(), Variant::Standard, 0};
    emit_spiral(d, make_frame({wd / 2, ht}, {Rat(1), Rat(0)}, -1), top);
    d.to({wd, ht});
    SpiralSpec side{1, n, n, neutral_pattern("N"), Variant::Standard, 0};
    emit_spiral(d, make_frame({wd, ht / 2}, {Rat(0), Rat(-1)}, 1), side);
    d.to({wd, Rat(0)});
    SpiralSpec bottom{-1, NP, NP, left_pattern(), Variant::Standard, 0};
    emit_spiral(d, make_frame({wd / 2, Rat(0)}, {Rat(-1), Rat(0)}, -1), bottom);
    d.to({Rat(0), Rat(0)});
    FiberedLagrangian L = finish(d, tid("S", n, p, q), "S");
    L.params = {{"n", n}, {"p", p}, {"q", q}};
    L.a3 = opts.a3;
    check_embedded(L);
    if (opts.a3) check_a3(L);
    return L;
}

std::pair<FiberedLagrangian, FiberedLagrangian> build_T_pair(int k, int l, int m, int lambda) {
    require_nonneg({k, l, m, lambda});
    if (lambda == 0) throw Error(ErrorKind::Unsupported, "self-Floer cohomology (lambda = 0) is out of scope");
    FiberedLagrangian Lp = build_T(k + lambda, l + lambda, m);
    EightSpec e;
    e.left = 2 * k;
    e.left_layout = 2 * (k + lambda);
    e.left_variant = Variant::Jump;
    e.top = m;
    e.top_slots = neutral_pattern("M");
    e.right = l;
    e.right_layout = l + lambda;
    e.exit_a = -kDelta;
    const EightGeom g = eight_geometry(e);
    Draft d = draw_eight(e, g);
    FiberedLagrangian M = finish(d, tid("T", k, l, m), "T");
    FiberedLagrangian L = M;
    L.loop = offset_loop(M.loop, kDelta);
    L.params = {{"k", k}, {"l", l}, {"m", m}};
    L.id = tid("T", k, l, m) + "_beside_" + Lp.id;
    check_embedded(L);
    return {L, Lp};
}

LinkedPair build_RS(int k, int l, int m, int n, int p, int q) {
    LinkedPair out;
    out.R = build_R(k, l, m);
    out.S = build_S(n, p, q);
    out.joining_arc = sphere_named(out.R, "overlay");
    return out;
}

namespace {

Point shifted(const Point& p, const Rat& dx) { return {p.x + dx, p.y}; }

FiberedLagrangian translate(const FiberedLagrangian& L, const Rat& dx) {
    FiberedLagrangian out = L;
    for (auto& v : out.loop.vertices) v = shifted(v, dx);
    for (auto& sp : out.spheres)
        for (auto& v : sp.path.vertices) v = shifted(v, dx);
    return out;
}

Rat min_x(const FiberedLagrangian& L) {
    Rat m = L.loop.vertices.front().x;
    for (const auto& v : L.loop.vertices) m = std::min(m, v.x);
    return m;
}

Rat max_x(const FiberedLagrangian& L) {
    Rat m = L.loop.vertices.front().x;
    for (const auto& v : L.loop.vertices) m = std::max(m, v.x);
    return m;
}

// Places pieces left to right and joins neighbours with horizontal matching paths at height 0.
std::pair<std::vector<FiberedLagrangian>, std::vector<MatchingPath>> chain(std::vector<FiberedLagrangian> pieces,
                                                                           const std::vector<Label>& labels) {
    const Rat s = kS;
    Rat cursor = 0;
    for (size_t i = 0; i < pieces.size(); ++i) {
        const Rat dx = cursor - min_x(pieces[i]);
        pieces[i] = translate(pieces[i], dx);
        pieces[i].id += "#" + std::to_string(i);
        for (auto& sp : pieces[i].spheres) sp.name += "#" + std::to_string(i);
        cursor = max_x(pieces[i]) + 6 * s;
    }
    std::vector<MatchingPath> ms;
    for (size_t i = 0; i + 1 < pieces.size(); ++i) {
        const Rat x0 = max_x(pieces[i]) - s, x1 = min_x(pieces[i + 1]) + s;
        MatchingPath mp{"match" + std::to_string(i), path({{x0, Rat(0)}, {x1, Rat(0)}}), labels[i % labels.size()], 1};
        ms.push_back(mp);
    }
    return {pieces, ms};
}

}  // namespace

FiberedLagrangian build_Lambda(const std::vector<std::array<int, 3>>& params) {
    if (params.empty()) throw Error(ErrorKind::Schema, "Lambda_g needs g >= 1 triples");
    std::vector<FiberedLagrangian> pieces;
    for (const auto& t : params) pieces.push_back(build_T(t[0], t[1], t[2]));
    auto [placed, ms] = chain(pieces, {Label::a});
    std::vector<int> order(placed.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    FiberedLagrangian L = polterovich_sum(placed, ms, order);
    L.builder = "Lambda";
    L.id = "Lambda_" + std::to_string(params.size());
    L.params = {{"g", static_cast<int>(params.size())}};
    for (size_t i = 0; i < params.size(); ++i) {
        L.params["k" + std::to_string(i + 1)] = params[i][0];
        L.params["l" + std::to_string(i + 1)] = params[i][1];
        L.params["m" + std::to_string(i + 1)] = params[i][2];
    }
    check_embedded(L);
    return L;
}

FiberedLagrangian build_Xi(int g, const std::vector<std::array<int, 3>>& params) {
    if (g < 1 || static_cast<int>(params.size()) != g + 1)
        throw Error(ErrorKind::Schema, "Xi_g needs g >= 1 and g+1 triples {k0,l0,m0}..{kg,lg,mg}");
    std::vector<FiberedLagrangian> pieces;
    pieces.push_back(build_R(params[1][0], params[1][1], params[1][2]));
    for (int i = 2; i <= g; ++i) pieces.push_back(build_T(params[i][0], params[i][1], params[i][2]));
    auto [placed, ms] = chain(pieces, {Label::a});
    std::vector<int> order(placed.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    FiberedLagrangian L = polterovich_sum(placed, ms, order);
    L.builder = "Xi";
    L.id = "Xi_" + std::to_string(g);
    L.params = {{"g", g}};
    for (int i = 0; i <= g; ++i) {
        L.params["k" + std::to_string(i)] = params[i][0];
        L.params["l" + std::to_string(i)] = params[i][1];
        L.params["m" + std::to_string(i)] = params[i][2];
    }
    check_embedded(L);
    return L;
}

FiberedLagrangian build_zeta(int g, std::array<int, 3> t1, std::array<int, 3> t2) {
    if (g < 3 || g % 2 == 0) throw Error(ErrorKind::Schema, "zeta_g needs odd g >= 3");
    const int n = g - 1;
    std::vector<FiberedLagrangian> pieces;
    for (int i = 0; i < n; ++i) {
        const auto& t = i % 2 == 0 ? t1 : t2;
        pieces.push_back(build_T(t[0], t[1], t[2]));
    }
    auto [placed, ms] = chain(pieces, {Label::b, Label::c});
    // Closing matching: runs below the row from the last piece back to the first.
    const Rat s = kS;
    Rat low = 0;
    for (const auto& p : placed)
        for (const auto& v : p.loop.vertices) low = std::min(low, v.y);
    for (const auto& p : placed)
        for (const auto& sp : p.spheres)
            for (const auto& v : sp.path.vertices) low = std::min(low, v.y);
    const Rat xr = max_x(placed.back()), xl = min_x(placed.front());
    ms.push_back({"match" + std::to_string(n - 1),
                  path({{xr - s, Rat(0)}, {xr + 4 * s, Rat(0)}, {xr + 4 * s, low - 4 * s}, {xl - 4 * s, low - 4 * s},
                        {xl - 4 * s, Rat(0)}, {xl + s, Rat(0)}}),
                  (n - 1) % 2 == 0 ? Label::b : Label::c, 1});
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    FiberedLagrangian L = polterovich_sum(placed, ms, order);
    L.builder = "zeta";
    L.id = "zeta_" + std::to_string(g);
    L.params = {{"g", g}, {"k1", t1[0]}, {"l1", t1[1]}, {"m1", t1[2]},
                {"k2", t2[0]}, {"l2", t2[1]}, {"m2", t2[2]}};
    // First longitude: a limacon (outer and inner octagon) through the 2(g-1) surgery corners, each a
    // positively traversed configuration.
    Longitude lon;
    static const int dirs[8][2] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
    for (int r : {12, 4})
        for (const auto& dv : dirs) lon.loop.vertices.push_back({Rat(r * dv[0]), Rat(r * dv[1] + (r == 4 ? 2 : 0))});
    const int nseg = segment_count(lon.loop);
    for (int i = 0; i < 2 * n; ++i)
        lon.corners.push_back({{TokenKind::BB, 1}, {(i * nseg) / (2 * n), Rat(i % 2 + 1, 3)}, "surgery"});
    L.first_longitude = lon;
    check_embedded(L);
    return L;
}

}  // namespace bpl
