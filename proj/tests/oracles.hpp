#pragma once

// Independent reference computations used by the tests. Nothing here calls the planar, fibered or
// lattice algorithms under test.

#include "bpl/exact.hpp"
#include "bpl/planar.hpp"

#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using bpl::Int;
using bpl::Point;
using bpl::PolyZ;
using bpl::Rat;

struct SegCrossing {
    int seg1 = 0, seg2 = 0;
    Rat t1, t2;
};

// Brute-force proper crossings of a closed polyline, parameters in [0, 1).
inline std::vector<SegCrossing> closed_crossings(const std::vector<Point>& v) {
    const int n = static_cast<int>(v.size());
    std::vector<SegCrossing> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Point a = v[i], b = v[(i + 1) % n], c = v[j], d = v[(j + 1) % n];
            const Rat rx = b.x - a.x, ry = b.y - a.y, sx = d.x - c.x, sy = d.y - c.y;
            const Rat den = rx * sy - ry * sx;
            if (den == 0) continue;
            const Rat qx = c.x - a.x, qy = c.y - a.y;
            const Rat t = (qx * sy - qy * sx) / den;
            const Rat u = (qx * ry - qy * rx) / den;
            if (t < 0 || t >= 1 || u < 0 || u >= 1) continue;
            if (j == i + 1 && u == 0) continue;
            if (i == 0 && j == n - 1 && t == 0) continue;
            out.push_back({i, j, t, u});
        }
    return out;
}

inline PolyZ poly_mul(const PolyZ& p, const PolyZ& q) {
    PolyZ r(p.size() + q.size() - 1, Int(0));
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    return r;
}

// Exact division of integer polynomials with monic divisor.
inline PolyZ poly_div(PolyZ num, const PolyZ& den) {
    PolyZ q(num.size() - den.size() + 1, Int(0));
    for (int i = static_cast<int>(num.size()) - 1; i >= static_cast<int>(den.size()) - 1; --i) {
        const Int c = num[i];
        const int k = i - static_cast<int>(den.size()) + 1;
        q[k] = c;
        for (size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
    }
    return q;
}

// Phi_d = (t^d - 1) / prod_{e | d, e < d} Phi_e.
inline PolyZ cyclotomic(int d, std::map<int, PolyZ>& memo) {
    if (auto it = memo.find(d); it != memo.end()) return it->second;
    PolyZ p(d + 1, Int(0));
    p[0] = -1;
    p[d] = 1;
    for (int e = 1; e < d; ++e)
        if (d % e == 0) p = poly_div(p, cyclotomic(e, memo));
    return memo[d] = p;
}

// prod over Pham labels j (1 <= j_k <= a_k - 1) of (t - w^{e(j)}), w = exp(2 pi i / N),
// e(j) = sum j_k N / a_k. Coefficients live in Z[x]/(x^N - 1); each is reduced modulo Phi_N(x)
// and must come out constant.
inline PolyZ spectrum_by_roots(const std::vector<int>& a) {
    long N = 1;
    for (int x : a) N = std::lcm(N, static_cast<long>(x));
    std::vector<long> exps{0};
    for (int x : a) {
        std::vector<long> next;
        for (long e : exps)
            for (int j = 1; j < x; ++j) next.push_back((e + j * (N / x)) % N);
        exps = next;
    }
    using Cyc = std::vector<Int>;
    std::vector<Cyc> poly{Cyc(N, Int(0))};
    poly[0][0] = 1;
    for (long e : exps) {
        std::vector<Cyc> next(poly.size() + 1, Cyc(N, Int(0)));
        for (size_t k = 0; k < poly.size(); ++k)
            for (long r = 0; r < N; ++r) {
                if (poly[k][r] == 0) continue;
                next[k + 1][r] += poly[k][r];
                next[k][(r + e) % N] -= poly[k][r];
            }
        poly = next;
    }
    std::map<int, PolyZ> memo;
    const PolyZ phi = cyclotomic(static_cast<int>(N), memo);
    PolyZ out;
    for (auto& c : poly) {
        PolyZ rem(c.begin(), c.end());
        for (int i = static_cast<int>(rem.size()) - 1; i >= static_cast<int>(phi.size()) - 1; --i) {
            const Int q = rem[i];
            if (q == 0) continue;
            const int k = i - static_cast<int>(phi.size()) + 1;
            for (size_t j = 0; j < phi.size(); ++j) rem[k + j] -= q * phi[j];
        }
        for (size_t i = 1; i < rem.size(); ++i)
            if (rem[i] != 0) return {};
        out.push_back(rem[0]);
    }
    return out;
}

// Non-decreasing exponent tuples of the given length range with prod (a_i - 1) <= max_rank.
inline std::vector<std::vector<int>> tuples_up_to(int max_rank, int max_len) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start, long rank) -> void {
        if (!cur.empty()) out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int a = start; rank * (a - 1) <= max_rank; ++a) {
            cur.push_back(a);
            self(self, a, rank * (a - 1));
            cur.pop_back();
        }
    };
    rec(rec, 2, 1);
    return out;
}

}  // namespace oracle
