#include "bpl/fibered.hpp"

#include "bpl/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bpl {

namespace {

std::string fmt(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

std::string fmt(const FiberCycleState& s) {
    return std::string("(") + label_name(s.label) + "," + (s.orientation > 0 ? "+" : "-") + ")";
}

std::vector<const FiberedLagrangian*> pieces_of(const FiberedLagrangian& L) {
    std::vector<const FiberedLagrangian*> out;
    if (L.summands.empty()) {
        out.push_back(&L);
    } else {
        for (const auto& s : L.summands) out.push_back(&s);
    }
    return out;
}

}  // namespace

const char* label_name(Label l) {
    switch (l) {
        case Label::a: return "a";
        case Label::b: return "b";
        case Label::c: return "c";
        case Label::d: return "d";
    }
    return "?";
}

const char* kind_name(TokenKind k) {
    switch (k) {
        case TokenKind::BB: return "BB";
        case TokenKind::BC: return "BC";
        case TokenKind::CC: return "CC";
        case TokenKind::BD: return "BD";
        case TokenKind::CD: return "CD";
        case TokenKind::DD: return "DD";
    }
    return "?";
}

Label parse_label(const std::string& s) {
    if (s == "a") return Label::a;
    if (s == "b") return Label::b;
    if (s == "c") return Label::c;
    if (s == "d") return Label::d;
    throw Error(ErrorKind::Schema, "unknown fiber label '" + s + "'");
}

TokenKind parse_kind(const std::string& s) {
    static const std::pair<const char*, TokenKind> table[] = {
        {"BB", TokenKind::BB}, {"BC", TokenKind::BC}, {"CC", TokenKind::CC},
        {"BD", TokenKind::BD}, {"CD", TokenKind::CD}, {"DD", TokenKind::DD},
    };
    for (const auto& [name, k] : table)
        if (s == name) return k;
    throw Error(ErrorKind::Schema, "unknown configuration kind '" + s + "'");
}

bool disjoint(Label x, Label y) {
    if (x == y || x == Label::a || y == Label::a) return false;
    return true;
}

FiberCycleState transport(const FiberCycleState& s, const ConfigToken& t, TransportConvention conv) {
    auto swap_pair = [&](Label p, Label q, bool twist) -> FiberCycleState {
        const int o = twist ? -s.orientation : s.orientation;
        if (s.label == p) return {q, o};
        if (s.label == q) return {p, o};
        if (disjoint(s.label, p) && disjoint(s.label, q)) return s;
        throw Error(ErrorKind::IncompatibleToken, std::string("state ") + fmt(s) + " cannot pass through " +
                                                      kind_name(t.kind));
    };
    auto reflect = [&](Label p) -> FiberCycleState {
        if (s.label == p) return {p, -s.orientation};
        if (disjoint(s.label, p)) return s;
        throw Error(ErrorKind::IncompatibleToken, std::string("state ") + fmt(s) + " cannot pass through " +
                                                      kind_name(t.kind));
    };
    const bool twisted = conv == TransportConvention::ChainPatternTwisted;
    switch (t.kind) {
        case TokenKind::BC: return swap_pair(Label::b, Label::c, false);
        case TokenKind::BD: return swap_pair(Label::b, Label::d, twisted);
        case TokenKind::CD: return swap_pair(Label::c, Label::d, twisted);
        case TokenKind::BB: return reflect(Label::b);
        case TokenKind::CC: return reflect(Label::c);
        case TokenKind::DD: return reflect(Label::d);
    }
    return s;
}

Holonomy holonomy(const FiberedLagrangian& L) {
    Holonomy h;
    FiberCycleState s = L.initial;
    h.trace.push_back(s);
    for (const auto& pt : L.tokens) {
        s = transport(s, pt.token, L.convention);
        h.trace.push_back(s);
    }
    h.closes = s.label == L.initial.label;
    h.orientation_preserving = h.closes && s.orientation == L.initial.orientation;
    return h;
}

FiberCycleState state_at(const FiberedLagrangian& L, const LoopPos& pos) {
    FiberCycleState s = L.initial;
    for (const auto& pt : L.tokens) {
        if (!(pt.pos < pos)) break;
        s = transport(s, pt.token, L.convention);
    }
    return s;
}

std::vector<CrossingState> crossing_states(const FiberedLagrangian& L) {
    std::vector<CrossingState> out;
    for (const auto& c : self_intersections(L.loop)) {
        CrossingState cs;
        cs.crossing = c;
        cs.first = state_at(L, c.pos1);
        cs.second = state_at(L, c.pos2);
        cs.parallel = cs.first.orientation == cs.second.orientation;
        out.push_back(cs);
    }
    return out;
}

std::vector<CrossingState> crossing_states(const FiberedLagrangian& L, const FiberedLagrangian& Lp) {
    std::vector<CrossingState> out;
    for (const auto& c : intersections(L.loop, Lp.loop)) {
        CrossingState cs;
        cs.crossing = c;
        cs.first = state_at(L, c.pos1);
        cs.second = state_at(Lp, c.pos2);
        cs.parallel = cs.first.orientation == cs.second.orientation;
        out.push_back(cs);
    }
    return out;
}

void check_embedded(const FiberedLagrangian& L) {
    const auto ps = pieces_of(L);
    for (const auto* p : ps) {
        for (const auto& cs : crossing_states(*p))
            if (!disjoint(cs.first.label, cs.second.label))
                throw Error(ErrorKind::InvalidConstruction, "self-crossing at " + fmt(cs.crossing.p) + " of " +
                                                                p->id + " has non-disjoint states " +
                                                                fmt(cs.first) + " and " + fmt(cs.second));
    }
    for (size_t i = 0; i < ps.size(); ++i)
        for (size_t j = i + 1; j < ps.size(); ++j)
            for (const auto& cs : crossing_states(*ps[i], *ps[j]))
                if (!disjoint(cs.first.label, cs.second.label))
                    throw Error(ErrorKind::InvalidConstruction,
                                "crossing at " + fmt(cs.crossing.p) + " between " + ps[i]->id + " and " +
                                    ps[j]->id + " has non-disjoint states " + fmt(cs.first) + " and " +
                                    fmt(cs.second));
}

void check_a3(const FiberedLagrangian& L) {
    for (const auto* p : pieces_of(L)) {
        for (const auto& pt : p->tokens) {
            const auto k = pt.token.kind;
            if (k == TokenKind::BD || k == TokenKind::CD || k == TokenKind::DD)
                throw Error(ErrorKind::InvalidConstruction,
                            std::string("A3 reduction forbids configuration ") + kind_name(k) + " in " + p->id);
        }
        for (const auto& s : holonomy(*p).trace)
            if (s.label == Label::d)
                throw Error(ErrorKind::InvalidConstruction, "A3 reduction forbids label d in " + p->id);
    }
}

namespace {

long token_balance(const std::vector<PlacedToken>& toks) {
    long nu = 0;
    for (const auto& t : toks) nu += t.token.traversal > 0 ? -1 : 1;
    return nu;
}

long piece_maslov(const FiberedLagrangian& p) {
    const Holonomy h = holonomy(p);
    if (!h.closes)
        throw Error(ErrorKind::InvalidConstruction, "holonomy of " + p.id + " does not close: " +
                                                        fmt(p.initial) + " returns as " + fmt(h.trace.back()));
    return 2 * turning_number(p.loop) + token_balance(p.tokens);
}

}  // namespace

long maslov_of(const Longitude& lon) { return 2 * turning_number(lon.loop) + token_balance(lon.corners); }

long maslov_longitude(const FiberedLagrangian& L) {
    if (L.first_longitude) {
        for (const auto* p : pieces_of(L)) piece_maslov(*p);
        return maslov_of(*L.first_longitude);
    }
    if (!L.summands.empty()) return piece_maslov(L.summands.front());
    return piece_maslov(L);
}

std::vector<long> maslov_vector(const FiberedLagrangian& L) {
    std::vector<long> v;
    if (L.summands.empty()) return {maslov_longitude(L), 0};
    if (L.first_longitude) {
        v.push_back(maslov_longitude(L));
        v.push_back(0);
        return v;
    }
    for (const auto& p : L.summands) {
        v.push_back(piece_maslov(p));
        v.push_back(0);
    }
    return v;
}

SurfaceType surface_type_from_euler(int euler, bool orientable) {
    SurfaceType t;
    t.orientable = orientable;
    t.euler = euler;
    if (euler > 2 || (orientable && euler % 2 != 0))
        throw Error(ErrorKind::TopologicalObstruction, "no closed surface with Euler characteristic " +
                                                           std::to_string(euler));
    if (orientable) {
        t.genus = (2 - euler) / 2;
        return t;
    }
    t.crosscaps = 2 - euler;
    if (t.crosscaps % 2 != 0)
        throw Error(ErrorKind::TopologicalObstruction,
                    "non-orientable Lagrangian with " + std::to_string(t.crosscaps) +
                        " cross-caps: only even connected sums of RP2 embed as Lagrangians here");
    return t;
}

SurfaceType orientability_and_type(const FiberedLagrangian& L) {
    bool orientable = true;
    int euler = 0;
    for (const auto* p : pieces_of(L)) {
        const Holonomy h = holonomy(*p);
        if (!h.closes)
            throw Error(ErrorKind::InvalidConstruction, "holonomy of " + p->id + " does not close");
        orientable = orientable && h.orientation_preserving;
    }
    euler -= 2 * static_cast<int>(L.surgery_marks.size() / 2);
    return surface_type_from_euler(euler, orientable);
}

const MatchingPath& sphere_named(const FiberedLagrangian& L, const std::string& name) {
    for (const auto& s : L.spheres)
        if (s.name == name) return s;
    throw Error(ErrorKind::Schema, "construction " + L.id + " has no test sphere named '" + name + "'");
}

long homology_pairing(const FiberedLagrangian& L, const MatchingPath& sphere) {
    long total = 0;
    for (const auto* p : pieces_of(L)) {
        for (const auto& c : intersections(p->loop, sphere.path)) {
            const FiberCycleState s = state_at(*p, c.pos1);
            if (s.label == sphere.label)
                throw Error(ErrorKind::Geometry, "sphere " + sphere.name + " meets " + p->id + " at " + fmt(c.p) +
                                                     " in a non-transverse fiber configuration");
            if (disjoint(s.label, sphere.label)) continue;
            total += c.sign * s.orientation * sphere.orientation;
        }
    }
    return total;
}

AreaAssignment solve_monotone_areas(const FiberedLagrangian& L, const Rat& kappa) {
    if (kappa <= 0) throw Error(ErrorKind::Precondition, "monotonicity constant must be positive");
    const long mu = maslov_longitude(L);
    const FiberedLagrangian& base = L.summands.empty() ? L : L.summands.front();
    const Arrangement arr = face_areas({base.loop});
    AreaAssignment out;
    out.target = kappa * mu;
    Rat pos = 0, neg = 0;
    int pos_face = -1, neg_face = -1;
    for (const auto& f : arr.faces) {
        out.areas.push_back(f.area);
        out.depth.push_back(f.depth[0]);
        if (f.depth[0] > 0) {
            pos += f.area * f.depth[0];
            pos_face = f.id;
        } else if (f.depth[0] < 0) {
            neg -= f.area * f.depth[0];
            neg_face = f.id;
        }
    }
    Rat alpha = 1, beta = 1;
    if (out.target >= 0) {
        if (pos == 0 && !(out.target == 0 && neg == 0))
            throw Error(ErrorKind::StretchRequired, "no positively wound lobe of " + base.id +
                                                        " can absorb signed area " + to_string(out.target));
        if (pos != 0) alpha = (out.target + neg) / pos;
    } else {
        if (neg == 0)
            throw Error(ErrorKind::StretchRequired, "no negatively wound lobe of " + base.id +
                                                        " can absorb signed area " + to_string(out.target));
        beta = (pos - out.target) / neg;
    }
    (void)pos_face;
    (void)neg_face;
    out.signed_total = 0;
    for (size_t i = 0; i < out.areas.size(); ++i) {
        if (out.depth[i] > 0) out.areas[i] *= alpha;
        if (out.depth[i] < 0) out.areas[i] *= beta;
        out.signed_total += out.areas[i] * out.depth[i];
    }
    return out;
}

FiberedLagrangian polterovich_sum(const std::vector<FiberedLagrangian>& pieces, const std::vector<MatchingPath>& matchings,
                                  const std::vector<int>& ordering) {
    if (pieces.empty()) throw Error(ErrorKind::Precondition, "polterovich sum needs at least one piece");
    if (matchings.empty() && pieces.size() == 1) return pieces.front();
    const int n = static_cast<int>(pieces.size());
    if (static_cast<int>(ordering.size()) != n)
        throw Error(ErrorKind::Precondition, "ordering must list every piece once");
    std::set<int> seen(ordering.begin(), ordering.end());
    if (static_cast<int>(seen.size()) != n || *seen.begin() != 0 || *seen.rbegin() != n - 1)
        throw Error(ErrorKind::Precondition, "ordering must be a permutation of the pieces");
    if (static_cast<int>(matchings.size()) > n || (n > 1 && static_cast<int>(matchings.size()) < n - 1))
        throw Error(ErrorKind::Precondition, "a chain or cycle of pieces needs n-1 or n matchings");

    FiberedLagrangian out;
    out.builder = "sum";
    out.summands = pieces;
    out.loop = pieces.front().loop;
    out.tokens = pieces.front().tokens;
    out.initial = pieces.front().initial;
    for (size_t i = 0; i < matchings.size(); ++i) {
        const MatchingPath& mp = matchings[i];
        const int pa = ordering[i], pb = ordering[(i + 1) % n];
        for (int p = 0; p < n; ++p) {
            const auto xs = intersections(pieces[p].loop, mp.path);
            const bool designated = p == pa || p == pb;
            if ((designated && xs.size() != 1) || (!designated && !xs.empty()))
                throw Error(ErrorKind::AmbiguousSurgery, "matching path " + mp.name + " meets piece " +
                                                             pieces[p].id + " in " + std::to_string(xs.size()) +
                                                             " points");
            if (!designated) continue;
            // Type b/c matchings end at a critical point of a BB configuration; only type a is checked fiberwise.
            const FiberCycleState s = state_at(pieces[p], xs[0].pos1);
            if (mp.label == Label::a && (disjoint(s.label, mp.label) || s.label == mp.label))
                throw Error(ErrorKind::AmbiguousSurgery, "matching path " + mp.name + " does not meet the fiber of " +
                                                             pieces[p].id + " in one point");
            out.surgery_marks.push_back({pa, pb, mp.name, xs[0].p});
        }
        out.spheres.push_back(mp);
    }
    for (const auto& p : pieces)
        for (const auto& s : p.spheres) out.spheres.push_back(s);
    return out;
}

namespace {

struct Override {
    const char* builder;
    int (*value)(const std::map<std::string, int>&);
};

int param(const std::map<std::string, int>& p, const char* k) {
    auto it = p.find(k);
    return it == p.end() ? 0 : it->second;
}

}  // namespace

CapacityBound min_r(const FiberedLagrangian& L) {
    CapacityBound b;
    std::set<std::string> sites;
    for (const auto* p : pieces_of(L))
        for (const auto& t : p->tokens) sites.insert(p->id + "/" + t.site);
    b.sites = static_cast<int>(sites.size());
    b.naive = 4 * b.sites;
    static const Override table[] = {
        {"T", [](const std::map<std::string, int>&) { return 18; }},
        {"Lambda", [](const std::map<std::string, int>& p) { return 18 * param(p, "g"); }},
        {"zeta", [](const std::map<std::string, int>& p) { return 18 * (param(p, "g") - 1); }},
        {"Xi", [](const std::map<std::string, int>& p) { return 243 + 36 * (param(p, "g") - 1); }},
    };
    for (const auto& o : table)
        if (L.builder == o.builder) b.refined = o.value(L.params);
    return b;
}

}  // namespace bpl
