// One line per acceptance criterion; exit status is the number of failures.

#include "bpl/error.hpp"
#include "bpl/floer.hpp"
#include "bpl/io.hpp"
#include "bpl/lattice.hpp"
#include "bpl/report.hpp"
#include "bpl/threefold.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

using namespace bpl;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_time(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

Outcome crit1() {
    const auto t0 = Clock::now();
    long bad = 0, n = 0;
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b)
            for (int c = 0; c <= 6; ++c) {
                bad += maslov_longitude(build_T(a, b, c)) != 2 * (b - a);
                bad += maslov_longitude(build_R(a, b, c)) != 2 * (c - a - b);
                bad += maslov_longitude(build_S(a, b, c)) != 2 * (c - b - 1);
                n += 3;
            }
    const double s = seconds_since(t0);
    return {bad == 0 && s < 10, std::to_string(n) + " cases, " + std::to_string(bad) + " mismatches, " + fmt_time(s)};
}

Outcome crit2() {
    long bad = 0, n = 0;
    for (int k = 0; k <= 4; ++k)
        for (int l = 0; l <= 4; ++l)
            for (int m = 0; m <= 4; ++m)
                for (int d : {1, -1}) {
                    if (2 * k + d < 0) continue;
                    const FiberedLagrangian L = build_klein_T(k, l, m, d, 0);
                    const SurfaceType t = orientability_and_type(L);
                    bad += maslov_longitude(L) != 2 * l - 2 * k - d || t.orientable;
                    ++n;
                }
    return {bad == 0, std::to_string(n) + " Klein variants, " + std::to_string(bad) + " mismatches"};
}

Outcome crit3() {
    const auto t0 = Clock::now();
    long bad = 0, n = 0, discs = 0;
    for (int k = 0; k <= 4; ++k)
        for (int l = 0; l <= 4; ++l)
            for (int m = 0; m <= 4; ++m) {
                const FiberedLagrangian L = build_T(k, l, m);
                const long want[3] = {m + 2 * k + 1, 2 * k + 1, 2 * l};
                const char* names[3] = {"S1", "S2", "S3"};
                for (int i = 0; i < 3; ++i) {
                    const SphereFloer f = hf_with_sphere(L, sphere_named(L, names[i]));
                    bad += f.rank != want[i];
                    // Certificate: every candidate disc has index below one, so the differential vanishes.
                    for (const auto& d : f.certificate) bad += d.index >= 1;
                    discs += static_cast<long>(f.certificate.size());
                    ++n;
                }
            }
    const double s = seconds_since(t0);
    return {bad == 0 && s < 60, std::to_string(n) + " ranks, " + std::to_string(discs) + " certified discs, " +
                                    std::to_string(bad) + " mismatches, " + fmt_time(s)};
}

Outcome crit4() {
    long bad = 0, n = 0;
    for (int lambda = 1; lambda <= 4; ++lambda)
        for (int k = 0; k <= 2; ++k)
            for (int l = 0; l <= 2; ++l)
                for (int m = 0; m <= 2; ++m) {
                    const auto [L, Lp] = build_T_pair(k, l, m, lambda);
                    const ToriFloer t = hf_tori(L, Lp, {Rat(1), Rat(-1), Rat(2)});
                    const long want[3] = {2L * lambda, 2L * lambda, 0};
                    for (int i = 0; i < 3; ++i)
                        bad += t.specializations[i].rank != want[i] || t.specializations[i].rank_direct != want[i];
                    ++n;
                }
    return {bad == 0, std::to_string(n) + " pairs, " + std::to_string(bad) + " mismatches"};
}

Outcome crit5() {
    long bad = 0, n = 0;
    for (int nn = 0; nn <= 3; ++nn)
        for (int k1 = 0; k1 <= 3; ++k1)
            for (int l1 = 0; l1 <= 3; ++l1) {
                const FiberedLagrangian Xi = build_Xi(1, {{{1, 1, 1}}, {{k1, l1, 1}}});
                const ThreefoldLagrangian T = with_displaced_pair(build_gamma(nn, Xi));
                const AnnulusCount a = annulus_count(T);
                const long h = static_cast<long>(oracle::closed_crossings(traversal(T.base3)).size());
                bad += a.h != h;
                bad += a.count != h * k1;
                bad += a.parallel + a.antiparallel != h * (2 * k1 + l1 + 1);
                bad += a.antiparallel != h * (k1 + l1 + 1);
                ++n;
            }
    return {bad == 0, std::to_string(n) + " displaced pairs, " + std::to_string(bad) + " mismatches"};
}

Outcome crit6() {
    long bad = 0, n = 0;
    std::string missing;
    for (int nn = 0; nn <= 5; ++nn) {
        const std::string path = std::string(BPL_CORPUS_DIR) + "/constructions/gamma_" + std::to_string(2 * nn) + "_Xi_1.json";
        try {
            const Construction c = construction_from_json(parse_json_text(read_file(path), path));
            bad += maslov_3d(*c.threefold) != 2 * nn;
            ++n;
        } catch (const Error& e) {
            missing += " " + path;
            ++bad;
        }
    }
    for (int nn = 0; nn <= 5; ++nn) {
        const FiberedLagrangian Xi = build_Xi(2, {{{1, 1, 1}}, {{2, 1, 1}}, {{1, 2, 0}}});
        bad += maslov_3d(build_gamma(nn, Xi)) != 2 * nn;
        ++n;
    }
    return {bad == 0, std::to_string(n) + " products (frozen corpus and Xi_2), " + std::to_string(bad) + " mismatches" + missing};
}

Outcome crit7() {
    const auto t0 = Clock::now();
    long bad = 0, n = 0;
    std::string first_bad;
    bool named[4] = {false, false, false, false};
    const std::vector<std::vector<int>> must{{3, 3}, {2, 4}, {3, 3, 3}, {2, 4, 4}};
    for (const auto& a : oracle::tuples_up_to(64, 4)) {
        const PolyZ cp = charpoly(total_monodromy(build_lattice(a)));
        const PolyZ ref = oracle::spectrum_by_roots(a);
        if (cp != ref) {
            ++bad;
            if (first_bad.empty())
                for (int x : a) first_bad += std::to_string(x) + ",";
        }
        for (int i = 0; i < 4; ++i) named[i] = named[i] || a == must[i];
        ++n;
    }
    for (bool b : named) bad += !b;
    const double s = seconds_since(t0);
    return {bad == 0 && s < 60, std::to_string(n) + " tuples, " + std::to_string(bad) + " mismatches" +
                                    (first_bad.empty() ? "" : " first (" + first_bad + ")") + ", " + fmt_time(s)};
}

Outcome crit8() {
    long bad = 0;
    for (int b : {3, 6}) {
        Exponents e;
        e.a = {3, 3};
        e.b = b;
        const int k = b / 3;
        const MilnorLattice lat = build_lattice({3, 3, b});
        const MatZ lhs = power(twist_product(lat, phi_factorization(e, k)), k);
        const MatZ rhs = power(total_monodromy(lat), b);
        bad += !equal(lhs, rhs);
    }
    return {bad == 0, "(3,3,3) and (3,3,6), " + std::to_string(bad) + " mismatches"};
}

Outcome crit9() {
    long bad = 0, catalogs = 0, certs = 0;
    for (int c = 0; c <= 2; ++c)
        for (int m = 0; m <= 1; ++m) {
            const Json cat = family_catalog(Json{{"family", "T_slice"}, {"c", c}, {"m", m}, {"k_min", 0}, {"k_max", 5}});
            bad += discrepancy_count(cat) != 0;
            bad += cat["entries"].size() != 6 || cat["certificates"].size() != 15;
            for (const auto& e : cat["entries"]) bad += e["soft"]["monotone"].value("feasible", false) != true;
            certs += static_cast<long>(cat["certificates"].size());
            ++catalogs;
        }
    return {bad == 0, std::to_string(catalogs) + " slices (k <= 5), " + std::to_string(certs) +
                          " pairwise S2 certificates, " + std::to_string(bad) + " failures"};
}

// Labels b and c swap at BC and stay put at BB, CC.
bpl::Label oracle_label(const FiberedLagrangian& L, const LoopPos& p) {
    bpl::Label lab = L.initial.label;
    for (const auto& t : L.tokens)
        if (t.pos < p && t.token.kind == TokenKind::BC) lab = lab == Label::b ? Label::c : Label::b;
    return lab;
}

bool oracle_embedded(const FiberedLagrangian& L) {
    for (const auto& x : oracle::closed_crossings(traversal(L.loop)))
        if (oracle_label(L, {x.seg1, x.t1}) == oracle_label(L, {x.seg2, x.t2})) return false;
    return true;
}

Outcome crit10() {
    long bad = 0;
    std::ostringstream os;
    // Form preservation under twists on 50 seeded random lattices.
    std::mt19937 rng(20261015);
    int forms = 0;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> a;
        long rank = 1;
        const int len = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < len; ++i) {
            const int x = 2 + static_cast<int>(rng() % 4);
            if (rank * (x - 1) > 40) break;
            a.push_back(x);
            rank *= x - 1;
        }
        const MilnorLattice lat = build_lattice(a);
        const int v = static_cast<int>(rng() % lat.rank);
        for (int sign : {1, -1}) {
            const MatZ T = twist_operator(lat, v, sign).matrix;
            bad += !equal(mul(mul(transpose(T), lat.gram), T), lat.gram);
        }
        ++forms;
    }
    os << forms << " lattices form-preserving";
    // d^2 = 0 on every constructed tori complex, generic and specialized.
    int complexes = 0;
    for (int lambda = 1; lambda <= 3; ++lambda)
        for (int k = 0; k <= 2; ++k)
            for (int l = 0; l <= 2; ++l) {
                const auto [L, Lp] = build_T_pair(k, l, 1, lambda);
                FloerComplex c = hf_tori(L, Lp).complex;
                bad += !differential_squares_to_zero(c);
                for (const Rat& r : {Rat(1), Rat(-1), Rat(2)}) {
                    c.differential = specialize(hf_tori(L, Lp).complex.differential, kBetaP, r, kBeta);
                    bad += !differential_squares_to_zero(c);
                }
                ++complexes;
            }
    os << ", " << complexes << " complexes with d^2 = 0";
    // Holonomy closure on every builder.
    std::vector<FiberedLagrangian> all;
    for (int k = 0; k <= 3; ++k)
        for (int l = 0; l <= 3; ++l) {
            all.push_back(build_T(k, l, 1));
            all.push_back(build_R(k, l, 1));
            all.push_back(build_S(1, k, l));
            all.push_back(build_klein_T(k, l, 1, 1, 0));
        }
    all.push_back(build_Lambda({{{0, 1, 0}}, {{1, 3, 0}}, {{2, 2, 2}}}));
    all.push_back(build_zeta(5, {1, 1, 1}, {1, 2, 0}));
    all.push_back(build_Xi(3, {{{1, 1, 1}}, {{1, 2, 0}}, {{2, 1, 1}}, {{0, 0, 1}}}));
    all.push_back(build_T_pair(1, 1, 1, 2).first);
    for (const auto& L : all) bad += !holonomy(L).closes;
    os << ", " << all.size() << " builders close";
    // Corrupted token words: check_embedded must agree with the oracle, and reject at least one.
    int rejected = 0, words = 0;
    for (const auto& base : {build_T(1, 1, 1), build_T(2, 1, 0), build_T(1, 2, 2)})
        for (size_t i = 0; i < base.tokens.size(); ++i)
            for (TokenKind kind : {TokenKind::BB, TokenKind::BC, TokenKind::CC}) {
                if (kind == base.tokens[i].token.kind) continue;
                FiberedLagrangian w = base;
                w.tokens[i].token.kind = kind;
                bool lib = true;
                try {
                    check_embedded(w);
                } catch (const Error& e) {
                    lib = false;
                    bad += e.kind() != ErrorKind::InvalidConstruction;
                }
                bad += lib != oracle_embedded(w);
                rejected += !lib;
                ++words;
            }
    bad += rejected == 0;
    os << ", " << rejected << "/" << words << " corrupted words rejected in agreement with the oracle";
    return {bad == 0, os.str() + ", " + std::to_string(bad) + " failures"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Maslov formulas T/R/S", crit1},
        {"Klein variants", crit2},
        {"HF rank table with certificates", crit3},
        {"Mutation obstruction hf_tori", crit4},
        {"Annulus counts", crit5},
        {"3d Maslov", crit6},
        {"Monodromy spectrum oracle", crit7},
        {"Phi factorization identity", crit8},
        {"Family distinctness slice", crit9},
        {"Property suites", crit10},
    };
    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::printf("CRITERION %zu %s: %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    o.detail.c_str());
        std::fflush(stdout);
    }
    return failures;
}
