#include "bpl/lattice.hpp"

#include "bpl/error.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>

namespace bpl {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

u64 reduce(const Int& v, u64 p) {
    Int r = v % p;
    if (r < 0) r += p;
    return r.convert_to<u64>();
}

// Hessenberg reduction then the standard recurrence, all modulo p.
std::vector<u64> charpoly_mod(const MatZ& m, u64 p) {
    const int n = static_cast<int>(m.rows());
    std::vector<std::vector<u64>> h(n, std::vector<u64>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h[i][j] = reduce(m(i, j), p);

    for (int k = 0; k + 2 <= n; ++k) {
        int piv = -1;
        for (int i = k + 1; i < n; ++i)
            if (h[i][k] != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != k + 1) {
            std::swap(h[piv], h[k + 1]);
            for (int i = 0; i < n; ++i) std::swap(h[i][piv], h[i][k + 1]);
        }
        u64 inv = powmod(h[k + 1][k], p - 2, p);
        for (int i = k + 2; i < n; ++i) {
            if (h[i][k] == 0) continue;
            u64 f = mulmod(h[i][k], inv, p);
            for (int j = 0; j < n; ++j) h[i][j] = (h[i][j] + p - mulmod(f, h[k + 1][j], p)) % p;
            for (int j = 0; j < n; ++j) h[j][k + 1] = (h[j][k + 1] + mulmod(f, h[j][i], p)) % p;
        }
    }

    // c[k] = charpoly of leading k x k block, low degree first.
    std::vector<std::vector<u64>> c(n + 1);
    c[0] = {1};
    for (int k = 1; k <= n; ++k) {
        std::vector<u64> next(k + 1, 0);
        const u64 a = h[k - 1][k - 1];
        for (int d = 0; d < k; ++d) {
            next[d + 1] = (next[d + 1] + c[k - 1][d]) % p;
            next[d] = (next[d] + p - mulmod(a, c[k - 1][d], p)) % p;
        }
        u64 prod = 1;
        for (int i = k - 1; i >= 1; --i) {
            prod = mulmod(prod, h[i][i - 1], p);
            if (prod == 0) break;
            u64 f = mulmod(prod, h[i - 1][k - 1], p);
            for (size_t d = 0; d < c[i - 1].size(); ++d)
                next[d] = (next[d] + p - mulmod(f, c[i - 1][d], p)) % p;
        }
        c[k] = std::move(next);
    }
    return c[n];
}

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

std::vector<int> pham_shape(const std::vector<int>& exps) {
    std::vector<int> shape;
    for (int a : exps) shape.push_back(a - 1);
    return shape;
}

std::vector<std::vector<int>> pham_labels(const std::vector<int>& exps) {
    std::vector<std::vector<int>> out;
    const auto shape = pham_shape(exps);
    long total = 1;
    for (int s : shape) total *= s;
    if (total <= 0) return out;
    std::vector<int> cur(shape.size(), 1);
    for (long t = 0; t < total; ++t) {
        out.push_back(cur);
        for (int i = static_cast<int>(shape.size()) - 1; i >= 0; --i) {
            if (cur[i] < shape[i]) { ++cur[i]; break; }
            cur[i] = 1;
        }
    }
    return out;
}

MatZ gram_from_seifert(const MatZ& v, int fiber_dim) {
    const int sym = (fiber_dim % 2 == 0) ? 1 : -1;
    MatZ s = zeros<Int>(v.rows(), v.cols());
    for (Eigen::Index i = 0; i < v.rows(); ++i)
        for (Eigen::Index j = 0; j < v.cols(); ++j) s(i, j) = -v(i, j) - sym * v(j, i);
    return s;
}

}  // namespace

long Exponents::varpi() const {
    long w = 1;
    for (int x : a) w *= (x - 1);
    return w;
}

long lcm_of(const std::vector<int>& v) {
    long l = 1;
    for (int x : v) l = std::lcm(l, static_cast<long>(x));
    return l;
}

PolyZ poly_mul(const PolyZ& p, const PolyZ& q) {
    if (p.empty() || q.empty()) return {};
    PolyZ r(p.size() + q.size() - 1, Int(0));
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    return r;
}

std::string poly_to_string(const PolyZ& p) {
    std::ostringstream os;
    bool first = true;
    for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d) {
        if (p[d] == 0) continue;
        Int c = p[d];
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        Int ac = abs_int(c);
        if (ac != 1 || d == 0) os << ac;
        if (d >= 1) os << "t";
        if (d >= 2) os << "^" << d;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

PolyZ cyclotomic(int d) {
    // t^d - 1 divided by Phi_e for proper divisors e.
    PolyZ num(d + 1, Int(0));
    num[0] = -1;
    num[d] = 1;
    for (int e = 1; e < d; ++e) {
        if (d % e) continue;
        PolyZ den = cyclotomic(e);
        PolyZ q(num.size() - den.size() + 1, Int(0));
        for (int i = static_cast<int>(num.size()) - 1; i >= static_cast<int>(den.size()) - 1; --i) {
            Int c = num[i];
            int shift = i - static_cast<int>(den.size()) + 1;
            q[shift] = c;
            for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
        }
        num = q;
    }
    return num;
}

PolyZ spectrum_polynomial(const std::vector<int>& exps) {
    const long L = lcm_of(exps);
    std::map<long, long> count;
    for (const auto& j : pham_labels(exps)) {
        long num = 0;
        for (size_t i = 0; i < exps.size(); ++i) num += j[i] * (L / exps[i]);
        num %= L;
        long d = L / std::gcd(num, L);
        ++count[d];
    }
    PolyZ out{Int(1)};
    for (const auto& [d, c] : count) {
        long phi = 0;
        for (long x = 1; x <= d; ++x)
            if (std::gcd(x, d) == 1) ++phi;
        if (c % phi != 0)
            throw Error(ErrorKind::Discrepancy, "spectrum multiplicity not Galois-closed");
        PolyZ cyc = cyclotomic(static_cast<int>(d));
        for (long r = 0; r < c / phi; ++r) out = poly_mul(out, cyc);
    }
    return out;
}

PolyZ charpoly(const MatZ& m) {
    const int n = static_cast<int>(m.rows());
    if (m.cols() != n) throw Error(ErrorKind::Precondition, "charpoly of non-square matrix");
    if (n == 0) return {Int(1)};
    // |coefficients| <= prod_i (1 + ||row_i||_1).
    Int bound = 1;
    for (int i = 0; i < n; ++i) {
        Int r = 1;
        for (int j = 0; j < n; ++j) r += abs_int(m(i, j));
        bound *= r;
    }
    Int modulus = 1;
    std::vector<Int> acc(n + 1, Int(0));
    u64 p = (1ULL << 31) - 1;
    bool first = true;
    while (modulus <= 2 * bound) {
        while (!is_prime(p)) --p;
        auto c = charpoly_mod(m, p);
        if (first) {
            for (int i = 0; i <= n; ++i) acc[i] = c[i];
            modulus = p;
            first = false;
        } else {
            // Garner step: x = acc + modulus * ((c - acc) * modulus^-1 mod p).
            u64 inv = powmod(reduce(modulus, p), p - 2, p);
            for (int i = 0; i <= n; ++i) {
                u64 diff = (c[i] + p - reduce(acc[i], p)) % p;
                acc[i] += modulus * Int(mulmod(diff, inv, p));
            }
            modulus *= p;
        }
        --p;
    }
    PolyZ out(n + 1);
    for (int i = 0; i <= n; ++i) out[i] = (acc[i] > modulus / 2) ? Int(acc[i] - modulus) : acc[i];
    return out;
}

VecZ twist(const MilnorLattice& lat, int v_index, const VecZ& x, int sign) {
    if (v_index < 0 || v_index >= lat.rank)
        throw Error(ErrorKind::Precondition, "twist index " + std::to_string(v_index) + " out of range");
    if (x.size() != lat.rank) throw Error(ErrorKind::Precondition, "vector length does not match lattice rank");
    Int pairing = 0;
    for (int i = 0; i < lat.rank; ++i) pairing += x(i) * lat.gram(i, v_index);
    // Reflections in even fiber dimension are involutions.
    int c = lat.twist_constant;
    if (sign < 0 && lat.dim_parity == 1) c = -c;
    VecZ y = x;
    y(v_index) += c * pairing;
    return y;
}

TwistOperator twist_operator(const MilnorLattice& lat, int v_index, int sign) {
    if (v_index < 0 || v_index >= lat.rank)
        throw Error(ErrorKind::Precondition, "twist index " + std::to_string(v_index) + " out of range");
    TwistOperator op;
    op.cycle_index = v_index;
    op.sign = sign;
    op.matrix = identity<Int>(lat.rank);
    int c = lat.twist_constant;
    if (sign < 0 && lat.dim_parity == 1) c = -c;
    for (int j = 0; j < lat.rank; ++j) op.matrix(v_index, j) += c * lat.gram(j, v_index);
    return op;
}

MatZ twist_product(const MilnorLattice& lat, const std::vector<int>& order) {
    MatZ acc = identity<Int>(lat.rank);
    for (int idx : order) {
        // acc * (I + e_idx r^T) = acc + (acc e_idx) r^T.
        const TwistOperator t = twist_operator(lat, idx, 1);
        for (int i = 0; i < lat.rank; ++i) {
            const Int f = acc(i, idx);
            if (f == 0) continue;
            for (int j = 0; j < lat.rank; ++j) {
                const Int r = t.matrix(idx, j) - (idx == j ? 1 : 0);
                if (r != 0) acc(i, j) += f * r;
            }
        }
    }
    return acc;
}

MatZ total_monodromy(const MilnorLattice& lat) {
    std::vector<int> order(lat.rank);
    std::iota(order.begin(), order.end(), 0);
    return twist_product(lat, order);
}

MilnorLattice build_lattice(const std::vector<int>& exps) {
    if (exps.empty()) throw Error(ErrorKind::InvalidExponent, "no exponents given");
    for (int a : exps)
        if (a < 1) throw Error(ErrorKind::InvalidExponent, "exponent " + std::to_string(a) + " < 1");

    MilnorLattice lat;
    lat.exponents = exps;
    lat.fiber_dim = static_cast<int>(exps.size()) - 1;
    lat.dim_parity = lat.fiber_dim % 2;
    lat.basis_labels = pham_labels(exps);
    lat.rank = static_cast<int>(lat.basis_labels.size());
    lat.twist_constant = 1;

    // Seifert form: tensor product of A-chain forms I - N in lex label order.
    MatZ v = identity<Int>(lat.rank);
    for (int r = 0; r < lat.rank; ++r)
        for (int s = 0; s < lat.rank; ++s) {
            int val = 1;
            for (size_t i = 0; i < exps.size() && val; ++i) {
                int d = lat.basis_labels[s][i] - lat.basis_labels[r][i];
                val *= (d == 0) ? 1 : (d == 1 ? -1 : 0);
            }
            v(r, s) = val;
        }
    if (lat.rank == 0) {
        lat.gram = v;
        lat.seifert = v;
        return lat;
    }

    const PolyZ target = spectrum_polynomial(exps);
    std::vector<int> passing;
    // Documented convention first: sigma = (-1)^fiber_dim.
    const int preferred = lat.dim_parity == 0 ? 1 : -1;
    for (int sigma : {preferred, -preferred}) {
        MilnorLattice cand = lat;
        cand.seifert_sign = sigma;
        cand.seifert = v;
        if (sigma < 0)
            for (int r = 0; r < lat.rank; ++r)
                for (int s = 0; s < lat.rank; ++s) cand.seifert(r, s) = -v(r, s);
        cand.gram = gram_from_seifert(cand.seifert, lat.fiber_dim);
        if (lat.dim_parity == 0 && cand.gram(0, 0) != -2) continue;
        if (charpoly(total_monodromy(cand)) == target) passing.push_back(sigma);
    }
    if (passing.empty())
        throw Error(ErrorKind::Discrepancy,
                    "intersection form fails the spectrum check for this exponent tuple");
    if (passing.front() != preferred)
        throw Error(ErrorKind::Discrepancy, "only the non-documented sign convention reproduces the spectrum");
    const int sigma = passing.front();
    lat.seifert_sign = sigma;
    lat.seifert = v;
    if (sigma < 0)
        for (int r = 0; r < lat.rank; ++r)
            for (int s = 0; s < lat.rank; ++s) lat.seifert(r, s) = -v(r, s);
    lat.gram = gram_from_seifert(lat.seifert, lat.fiber_dim);
    lat.convention_ambiguous = passing.size() > 1;
    return lat;
}

std::vector<int> phi_factorization(const Exponents& e, int k) {
    if (e.a.empty()) throw Error(ErrorKind::Precondition, "phi_factorization needs at least one fiber exponent");
    for (int x : e.a)
        if (x < 2) throw Error(ErrorKind::InvalidExponent, "fiber exponent " + std::to_string(x) + " < 2");
    const long l = lcm_of(e.a);
    if (k < 1 || e.b != k * l)
        throw Error(ErrorKind::Precondition, "b = " + std::to_string(e.b) + " is not k * lcm = " +
                                                 std::to_string(k) + " * " + std::to_string(l));
    const long w = e.varpi();
    // Full-lattice labels are lex with the last variable fastest: index = i * (b-1) + (j-1).
    std::vector<int> round;
    for (int j = 1; j <= e.b - 1; ++j)
        for (long i = 0; i < w; ++i) round.push_back(static_cast<int>(i * (e.b - 1) + (j - 1)));
    std::vector<int> out;
    for (long r = 0; r < l; ++r) out.insert(out.end(), round.begin(), round.end());
    return out;
}

std::string export_matrix(const MatZ& m) {
    std::ostringstream os;
    os << "rank " << m.rows() << "\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
        os << "\n";
    }
    return os.str();
}

MatZ import_matrix(const std::string& text) {
    std::istringstream is(text);
    std::string word;
    long n = -1;
    if (!(is >> word >> n) || word != "rank" || n < 0)
        throw Error(ErrorKind::Schema, "matrix text must start with 'rank <n>'");
    MatZ m(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            std::string tok;
            if (!(is >> tok)) throw Error(ErrorKind::Schema, "matrix text truncated");
            try {
                m(i, j) = Int(tok);
            } catch (const std::exception&) {
                throw Error(ErrorKind::Schema, "non-integer matrix entry '" + tok + "'");
            }
        }
    std::string extra;
    if (is >> extra) throw Error(ErrorKind::Schema, "trailing data after matrix");
    return m;
}

}  // namespace bpl
