#pragma once

#include "bpl/exact.hpp"

#include <string>
#include <vector>

namespace bpl {

struct Exponents {
    std::vector<int> a;
    int b = 0;

    long varpi() const;
};

struct MilnorLattice {
    int rank = 0;
    int fiber_dim = 0;
    int dim_parity = 0;
    MatZ gram;
    MatZ seifert;
    std::vector<std::vector<int>> basis_labels;
    int twist_constant = -1;
    int seifert_sign = 1;
    // Both sign conventions reproduce the spectrum.
    bool convention_ambiguous = false;
    std::vector<int> exponents;
};

struct TwistOperator {
    MatZ matrix;
    int cycle_index = 0;
    int sign = 1;
};

long lcm_of(const std::vector<int>& v);

MilnorLattice build_lattice(const std::vector<int>& exponents);

VecZ twist(const MilnorLattice& lat, int v_index, const VecZ& x, int sign);
TwistOperator twist_operator(const MilnorLattice& lat, int v_index, int sign);

// Ordered product tau_1 ... tau_n, applied right to left.
MatZ twist_product(const MilnorLattice& lat, const std::vector<int>& order);
MatZ total_monodromy(const MilnorLattice& lat);

// Characteristic polynomial det(tI - M), exact.
PolyZ charpoly(const MatZ& m);

PolyZ cyclotomic(int d);
PolyZ poly_mul(const PolyZ& p, const PolyZ& q);
std::string poly_to_string(const PolyZ& p);

// prod_j (t - exp(2 pi i sum j_k / a_k)) over Pham labels.
PolyZ spectrum_polynomial(const std::vector<int>& exponents);

// Twist indices of (tau_{V^1_1} ... tau_{V^{b-1}_varpi})^{lcm}, indexed into build_lattice(a..., b).
std::vector<int> phi_factorization(const Exponents& e, int k);

std::string export_matrix(const MatZ& m);
MatZ import_matrix(const std::string& text);

}  // namespace bpl
