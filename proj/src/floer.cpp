#include "bpl/floer.hpp"

#include "bpl/error.hpp"

#include <set>

namespace bpl {

namespace {

std::string fmt(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

long arc_corners(const FiberedLagrangian& L, const Arc& arc, int dir) {
    long s = 0;
    for (const auto& t : L.tokens)
        if (arc_contains(L.loop, arc, t.pos)) s -= static_cast<long>(t.token.traversal) * dir;
    return s;
}

std::string describe(const CandidateDisc& c) {
    std::string s = "disc " + c.from + " -> " + c.to + " of index " + std::to_string(c.index) + ", area " +
                    to_string(c.bigon.area) + ", boundary";
    for (const auto& p : c.bigon.boundary) s += " " + fmt(p);
    return s;
}

std::vector<const FiberedLagrangian*> pieces(const FiberedLagrangian& L) {
    std::vector<const FiberedLagrangian*> out;
    if (L.summands.empty()) out.push_back(&L);
    for (const auto& s : L.summands) out.push_back(&s);
    return out;
}

}  // namespace

long index_filter(const Bigon& b, const FiberedLagrangian& L, const FiberedLagrangian* Lp) {
    long idx = 1 + arc_corners(L, b.arc1, b.dir1);
    if (Lp) idx += arc_corners(*Lp, b.arc2, b.dir2);
    return idx;
}

long fiber_lens_index() { return 1; }

bool differential_squares_to_zero(const FloerComplex& c) {
    const MatL sq = mul(c.differential, c.differential);
    for (Eigen::Index i = 0; i < sq.rows(); ++i)
        for (Eigen::Index j = 0; j < sq.cols(); ++j)
            if (!sq(i, j).is_zero()) return false;
    return true;
}

int rank_over_function_field(const MatL& m) { return rank(m); }

MatL specialize(const MatL& m, int var, const Rat& coeff, int target) {
    MatL out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).substitute(var, coeff, target);
    return out;
}

SphereFloer hf_with_sphere(const FiberedLagrangian& L, const MatchingPath& sphere) {
    SphereFloer out;
    for (const auto* p : pieces(L)) {
        const auto xs = intersections(p->loop, sphere.path);
        std::vector<bool> gen(xs.size(), false);
        for (size_t i = 0; i < xs.size(); ++i) {
            const FiberCycleState s = state_at(*p, xs[i].pos1);
            if (s.label == sphere.label)
                throw Error(ErrorKind::Geometry, "sphere " + sphere.name + " is not transverse to " + p->id + " at " +
                                                     fmt(xs[i].p));
            gen[i] = !disjoint(s.label, sphere.label);
            if (gen[i]) ++out.generators;
        }
        if (out.generators == 0) continue;
        for (const auto& b : embedded_bigons(p->loop, sphere.path)) {
            if (!gen[b.x] || !gen[b.y]) continue;
            CandidateDisc c;
            c.bigon = b;
            c.index = index_filter(b, *p);
            c.from = p->id + ":" + fmt(xs[b.x].p);
            c.to = p->id + ":" + fmt(xs[b.y].p);
            if (c.index >= 1)
                throw Error(ErrorKind::NotCertified, "HF(" + L.id + ", " + sphere.name + "): " + describe(c));
            out.certificate.push_back(std::move(c));
        }
    }
    out.rank = out.generators;
    return out;
}

namespace {

MatL tori_differential(const std::vector<int>& parallel, const Laurent& beta, const Laurent& beta_p) {
    const int n = static_cast<int>(parallel.size());
    MatL d(2 * n, 2 * n);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j) d(i, j) = Laurent(0);
    for (int i = 0; i < n; ++i) d(2 * i + 1, 2 * i) = parallel[i] ? beta - beta_p : beta + beta_p;
    return d;
}

}  // namespace

ToriFloer hf_tori(const FiberedLagrangian& L, const FiberedLagrangian& Lp, const std::vector<Rat>& ratios) {
    ToriFloer out;
    auto param = [](const FiberedLagrangian& X, const char* k) {
        auto it = X.params.find(k);
        if (it == X.params.end()) throw Error(ErrorKind::Precondition, X.id + " lacks parameter " + k);
        return it->second;
    };
    if (L.builder != "T" || Lp.builder != "T")
        throw Error(ErrorKind::Precondition, "hf_tori compares two T constructions");
    const int lambda = param(Lp, "k") - param(L, "k");
    if (lambda == 0) throw Error(ErrorKind::Unsupported, "self-Floer cohomology (lambda = 0) is out of scope");
    if (param(Lp, "l") - param(L, "l") != lambda || param(Lp, "m") != param(L, "m") || lambda < 0)
        throw Error(ErrorKind::Precondition, "second torus must be T_{k+lambda,l+lambda,m}");
    out.lambda = lambda;

    const auto cs = crossing_states(L, Lp);
    std::vector<int> dot_index(cs.size(), -1);
    std::vector<int> parallel;
    for (size_t i = 0; i < cs.size(); ++i) {
        const auto& c = cs[i];
        if (disjoint(c.first.label, c.second.label)) continue;
        if (c.first.label != c.second.label)
            throw Error(ErrorKind::Geometry, "tori meet at " + fmt(c.crossing.p) + " in isolated fiber points");
        dot_index[i] = static_cast<int>(parallel.size());
        parallel.push_back(c.parallel ? 1 : 0);
        Generator g0{"x" + std::to_string(parallel.size() - 1) + "^0", static_cast<int>(i), 0, c.crossing.p};
        Generator g1{"x" + std::to_string(parallel.size() - 1) + "^1", static_cast<int>(i), 1, c.crossing.p};
        out.complex.generators.push_back(g0);
        out.complex.generators.push_back(g1);
    }
    out.dots = static_cast<int>(parallel.size());
    for (int p : parallel) (p ? out.green : out.blue) += 1;

    // Base discs between dots lift with index shifted by at most one; any lift of index one would
    // contribute to the differential.
    for (const auto& b : embedded_bigons(L.loop, Lp.loop)) {
        if (dot_index[b.x] < 0 || dot_index[b.y] < 0) continue;
        CandidateDisc c;
        c.bigon = b;
        c.index = index_filter(b, L, &Lp);
        c.from = "dot" + std::to_string(dot_index[b.x]);
        c.to = "dot" + std::to_string(dot_index[b.y]);
        if (c.index >= 0 && c.index <= 2)
            throw Error(ErrorKind::NotCertified, "HF(" + L.id + ", " + Lp.id + "): " + describe(c));
        out.certificate.push_back(std::move(c));
    }

    const long mu = maslov_longitude(L);
    if (mu != 0) out.complex.grading_modulus = static_cast<int>(mu < 0 ? -mu : mu);
    out.complex.differential = tori_differential(parallel, Laurent::var(kBeta), Laurent::var(kBetaP));
    if (!differential_squares_to_zero(out.complex))
        throw Error(ErrorKind::Discrepancy, "differential does not square to zero");
    const long n = static_cast<long>(out.complex.generators.size());
    out.rank_generic = n - 2 * rank_over_function_field(out.complex.differential);
    for (const Rat& r : ratios) {
        Specialization s;
        s.ratio = r;
        s.name = "beta' = " + to_string(r) + " beta";
        s.rank = n - 2 * rank_over_function_field(specialize(out.complex.differential, kBetaP, r, kBeta));
        const MatL direct = tori_differential(parallel, Laurent::var(kBeta), Laurent(r) * Laurent::var(kBeta));
        s.rank_direct = n - 2 * rank_over_function_field(direct);
        if (s.rank != s.rank_direct)
            throw Error(ErrorKind::Discrepancy, "specialization does not commute with rank at " + s.name);
        out.specializations.push_back(s);
    }
    return out;
}

RankTable family_rank_table(const std::vector<std::array<int, 3>>& grid) {
    RankTable t;
    t.param_names = {"k", "l", "m"};
    t.columns = {"S1", "S2", "S3"};
    std::set<std::vector<long>> seen;
    for (const auto& g : grid) {
        const FiberedLagrangian L = build_T(g[0], g[1], g[2]);
        RankRow row;
        row.params = {g[0], g[1], g[2]};
        for (const auto& name : t.columns) row.ranks.push_back(hf_with_sphere(L, sphere_named(L, name)).rank);
        if (!seen.insert(row.ranks).second) t.injective = false;
        t.rows.push_back(std::move(row));
    }
    return t;
}

RankTable tori_rank_table(const std::vector<std::array<int, 4>>& grid, const std::vector<Rat>& ratios) {
    RankTable t;
    t.param_names = {"k", "l", "m", "lambda"};
    t.columns.push_back("generic");
    for (const Rat& r : ratios) t.columns.push_back("beta'=" + to_string(r) + "beta");
    t.injective = false;
    for (const auto& g : grid) {
        auto [L, Lp] = build_T_pair(g[0], g[1], g[2], g[3]);
        const ToriFloer hf = hf_tori(L, Lp, ratios);
        RankRow row;
        row.params = {g[0], g[1], g[2], g[3]};
        row.ranks.push_back(hf.rank_generic);
        for (const auto& s : hf.specializations) row.ranks.push_back(s.rank);
        t.rows.push_back(std::move(row));
    }
    return t;
}

RankTable lambda_rank_table(const std::vector<std::vector<std::array<int, 3>>>& grid) {
    RankTable t;
    std::set<std::vector<long>> seen;
    for (const auto& params : grid) {
        const FiberedLagrangian L = build_Lambda(params);
        if (t.columns.empty()) {
            for (size_t i = 0; i < params.size(); ++i) {
                for (const char* n : {"k", "l", "m"}) t.param_names.push_back(n + std::to_string(i + 1));
                for (const char* s : {"S1", "S2", "S3"}) t.columns.push_back(s + std::string("#") + std::to_string(i));
            }
        }
        RankRow row;
        for (const auto& p : params) row.params.insert(row.params.end(), p.begin(), p.end());
        for (const auto& name : t.columns) row.ranks.push_back(hf_with_sphere(L, sphere_named(L, name)).rank);
        if (!seen.insert(row.ranks).second) t.injective = false;
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace bpl
