#include "bpl/threefold.hpp"

#include "bpl/error.hpp"

#include <numeric>

namespace bpl {

namespace {

constexpr int kCurl = 2;
constexpr int kCurlPitch = 8;
constexpr int kHeight = 10;

struct Curl {
    int turn = 1;
    long repeats = 0;
};

struct CurveSpec {
    std::vector<Curl> curls;
    std::vector<long> outer;
};

long mod(long a, long m) { return ((a % m) + m) % m; }

// Counterclockwise rectangle with curls along the bottom edge; outer blocks sit on the top edge.
void draw_curve(ThreefoldLagrangian& T, const CurveSpec& spec) {
    const int nc = static_cast<int>(spec.curls.size());
    const int W = kCurlPitch * nc + kCurlPitch / 2 + 4;
    std::vector<Point> v;
    auto add = [&](int x, int y) { v.push_back({Rat(x), Rat(y)}); };
    add(0, 0);
    for (int i = 0; i < nc; ++i) {
        const int x0 = kCurlPitch * i + 4, c = kCurl, s = spec.curls[i].turn;
        add(x0 + 2 * c, 0);
        const int seg = static_cast<int>(v.size()) - 1;
        add(x0 + 2 * c, s * c);
        add(x0 + c, s * c);
        add(x0 + c, -s * c);
        add(x0 + 3 * c, -s * c);
        add(x0 + 3 * c, 0);
        T.blocks.push_back({"curl" + std::to_string(i), spec.curls[i].repeats, {seg, Rat(1, 2)}});
    }
    add(W, 0);
    add(W, kHeight);
    const int top = static_cast<int>(v.size()) - 1;
    add(0, kHeight);
    const int no = static_cast<int>(spec.outer.size());
    for (int j = 0; j < no; ++j)
        T.blocks.push_back({"outer" + std::to_string(j), spec.outer[j], {top, Rat(j + 1, no + 1)}});
    T.base3 = normalized(BaseLoop{v, true, 1});
}

CurveSpec gamma_spec(int n, const BlockBudget& b) {
    const long E = b.rho(), Et = b.rho_tilde(), F = b.r_prime;
    switch (n) {
        case 0: return {{{-1, -E}}, {E}};
        case 1: return {{{1, E}, {-1, -E}}, {}};
        case 2: return {{{1, E}, {1, E}, {-1, -E}}, {-E}};
        case 3: return {{{1, -E}, {1, E}, {-1, -E}}, {-Et}};
        default: break;
    }
    // gamma_{4q} and gamma_{4q+2}: winding q, t = n - q full rotations.
    const int q = n / 2;
    const int t = n - q;
    CurveSpec s;
    for (int i = 0; i + 1 < q; ++i) {
        s.curls.push_back({1, -E});
        s.outer.push_back(-Et);
    }
    for (int i = 0; i < t - q + 1; ++i) s.outer.push_back(-F);
    return s;
}

bool strictly_between(const LoopPos& from, const LoopPos& to, const LoopPos& p) {
    if (from < to) return from < p && p < to;
    return from < p || p < to;
}

long accumulated(const ThreefoldLagrangian& T, const LoopPos& p) {
    long s = 0;
    for (const auto& b : T.blocks)
        if (b.placement < p) s += b.repeats;
    return s;
}

const MatchingPath& overlay_arc(const FiberedLagrangian& Xi) {
    for (const auto& sp : Xi.spheres)
        if (sp.name.rfind("overlay", 0) == 0) return sp;
    throw Error(ErrorKind::Precondition, "fiber piece " + Xi.id + " carries no overlay arc");
}

long gcd_abs(long a, long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

}  // namespace

BlockBudget xi_budget(int g) {
    if (g < 1) throw Error(ErrorKind::Schema, "Xi_g needs g >= 1");
    BlockBudget b;
    b.r_prime = 243 + 36 * (g - 1);
    b.eta = (81 + 18 * (g - 1)) / 3;
    b.eta_tilde = (162 + 18 * (g - 1)) / 3;
    return b;
}

ThreefoldLagrangian build_gamma(int n, const FiberedLagrangian& Xi, std::optional<long> r) {
    if (n < 0) throw Error(ErrorKind::Schema, "gamma_{2n} needs n >= 0");
    if (Xi.builder != "Xi") throw Error(ErrorKind::Precondition, "gamma_{2n} products take a Xi_g fiber, got " + Xi.builder);
    const int g = Xi.params.at("g");
    ThreefoldLagrangian T;
    T.id = "gamma" + std::to_string(2 * n) + "x" + Xi.id;
    T.n = n;
    T.fiber_piece = Xi;
    T.budget = xi_budget(g);
    T.r = r.value_or(T.budget.r_prime);
    const CapacityBound cap = min_r(Xi);
    const long need = cap.refined.value_or(cap.naive);
    if (T.r < need)
        throw Error(ErrorKind::InvalidConstruction,
                    "capacity: r = " + std::to_string(T.r) + " is below the minimum " + std::to_string(need));
    draw_curve(T, gamma_spec(n, T.budget));
    check_threefold_embedded(T);
    return T;
}

ThreefoldLagrangian build_product_circle(const FiberedLagrangian& fiber, long r_prime) {
    if (r_prime <= 0) throw Error(ErrorKind::Schema, "r' must be positive");
    ThreefoldLagrangian T;
    T.id = "circle_x_" + fiber.id;
    T.fiber_piece = fiber;
    T.budget.r_prime = r_prime;
    T.r = r_prime;
    draw_curve(T, {});
    return T;
}

ThreefoldLagrangian reversed(const ThreefoldLagrangian& T) {
    ThreefoldLagrangian out = T;
    const auto pts = traversal(T.base3);
    const int N = static_cast<int>(pts.size());
    out.base3 = BaseLoop{std::vector<Point>(pts.rbegin(), pts.rend()), true, 1};
    for (auto& b : out.blocks) {
        int j = mod(N - 2 - b.placement.seg, N);
        Rat t = 1 - b.placement.t;
        if (t == 1) {
            j = (j + 1) % N;
            t = 0;
        }
        b.placement = {j, t};
        b.repeats = -b.repeats;
    }
    out.displaced_pair = false;
    out.displaced_base.reset();
    out.id = T.id + "_reversed";
    return out;
}

ThreefoldLagrangian with_displaced_pair(const ThreefoldLagrangian& T) {
    ThreefoldLagrangian out = T;
    out.displaced_pair = true;
    out.displaced_base = offset_loop(T.base3, Rat(1, 4));
    check_displacement(out);
    return out;
}

long repeats_between(const ThreefoldLagrangian& T, const LoopPos& from, const LoopPos& to) {
    long s = 0;
    for (const auto& b : T.blocks)
        if (strictly_between(from, to, b.placement)) s += b.repeats;
    return s;
}

long total_repeats(const ThreefoldLagrangian& T) {
    long s = 0;
    for (const auto& b : T.blocks) s += b.repeats;
    return s;
}

long full_rotations(const ThreefoldLagrangian& T) {
    const long total = total_repeats(T), F = T.budget.r_prime;
    if (F <= 0 || total % F != 0)
        throw Error(ErrorKind::InvalidConstruction, "rotation blocks of " + T.id + " total " + std::to_string(total) +
                                                        " repeats, not a multiple of r' = " + std::to_string(F));
    // rho = Phi^{-eta}: negative repeats are positive rotations.
    return -total / F;
}

void check_threefold_embedded(const ThreefoldLagrangian& T) {
    full_rotations(T);
    const long F = T.budget.r_prime, E = mod(T.budget.rho(), F);
    for (const auto& x : self_intersections(T.base3)) {
        const long d = mod(repeats_between(T, x.pos1, x.pos2), F);
        if (d != E && d != mod(-E, F))
            throw Error(ErrorKind::InvalidConstruction,
                        "fiber images meet over the base crossing at (" + to_string(x.p.x) + ", " + to_string(x.p.y) +
                            "): relative rotation " + std::to_string(d) + " is not rho or rho^-1");
    }
}

long maslov_3d(const ThreefoldLagrangian& T) { return 2 * turning_number(T.base3) + 2 * full_rotations(T); }

void check_displacement(const ThreefoldLagrangian& T) {
    if (!T.displaced_pair || !T.displaced_base) throw Error(ErrorKind::Setup, T.id + " has no displaced partner");
    const auto xs = intersections(T.base3, *T.displaced_base);
    const auto self = self_intersections(T.base3);
    if (xs.size() != 2 * self.size())
        throw Error(ErrorKind::Setup, "displaced partner of " + T.id + " is not a parallel push-off");
    const long F = T.budget.r_prime;
    for (const auto& x : xs)
        if (mod(accumulated(T, x.pos1) - accumulated(T, x.pos2), F) == 0)
            throw Error(ErrorKind::Setup, "displaced pair of " + T.id + " meets over (" + to_string(x.p.x) + ", " +
                                              to_string(x.p.y) + ")");
}

AnnulusCount annulus_count(const ThreefoldLagrangian& T) {
    check_displacement(T);
    const FiberedLagrangian& Xi = T.fiber_piece;
    const MatchingPath& arc = overlay_arc(Xi);
    AnnulusCount a;
    a.h = static_cast<int>(self_intersections(T.base3).size());
    for (const auto& x : intersections(Xi.loop, arc.path)) {
        const FiberCycleState st = state_at(Xi, x.pos1);
        if (st.orientation * arc.orientation * x.sign > 0)
            ++a.parallel_per_crossing;
        else
            ++a.antiparallel_per_crossing;
    }
    a.parallel = static_cast<long>(a.h) * a.parallel_per_crossing;
    a.antiparallel = static_cast<long>(a.h) * a.antiparallel_per_crossing;
    a.total = a.parallel + a.antiparallel;
    a.count = a.parallel;
    return a;
}

FiberedLagrangian displaced_copy(const FiberedLagrangian& L) {
    FiberedLagrangian out = L;
    out.id = L.id + "_displaced";
    out.loop = offset_loop(L.loop, Rat(1, 4));
    return out;
}

long annulus_count_2d(const FiberedLagrangian& L, const FiberedLagrangian& Lp) {
    if (segment_count(L.loop) != segment_count(Lp.loop) || L.tokens.size() != Lp.tokens.size())
        throw Error(ErrorKind::Setup, Lp.id + " is not a displaced copy of " + L.id);
    const auto cs = crossing_states(L, Lp);
    if (cs.size() != 2 * self_intersections(L.loop).size())
        throw Error(ErrorKind::Setup, Lp.id + " does not run parallel to " + L.id);
    long par = 0;
    for (const auto& c : cs)
        if (c.parallel) ++par;
    return par / 2;
}

Floer3 hf_3d(const ThreefoldLagrangian& T, const Sphere3& sphere) {
    Floer3 f;
    f.crossings = static_cast<int>(intersections(T.base3, sphere.base_path).size());
    if (f.crossings == 0) return f;
    if (f.crossings > 1)
        throw Error(ErrorKind::ReductionNotApplicable, sphere.name + " meets the base of " + T.id + " " +
                                                           std::to_string(f.crossings) + " times");
    f.reduced = hf_with_sphere(T.fiber_piece, sphere_named(T.fiber_piece, sphere.fiber_sphere));
    f.rank = f.reduced->rank;
    return f;
}

Sphere3 vertical_sphere(const ThreefoldLagrangian& T, const std::string& fiber_sphere) {
    Rat xmax = 0, ymax = 0;
    for (const auto& v : T.base3.vertices) {
        xmax = std::max(xmax, v.x);
        ymax = std::max(ymax, v.y);
    }
    const Rat x = xmax - Rat(1, 2);
    return {"lift_" + fiber_sphere, BaseLoop{{{x, ymax + 4}, {x, ymax - 2}}, false, 1}, fiber_sphere};
}

C3Invariants c3_product_invariants(const FiberedLagrangian& Lambda) {
    C3Invariants c;
    c.maslov.push_back(2);
    for (long v : maslov_vector(Lambda)) c.maslov.push_back(v);
    for (size_t i = 1; i < c.maslov.size(); ++i) c.N = gcd_abs(c.N, c.maslov[i] / 2);
    return c;
}

bool c3_distinguished(const C3Invariants& x, const C3Invariants& y) { return x.N != y.N; }

}  // namespace bpl
