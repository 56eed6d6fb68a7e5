#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <string>
#include <vector>

namespace bpl {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatZ = Mat<Int>;
using VecZ = Vec<Int>;
using MatQ = Mat<Rat>;

// Integer polynomial, coefficient i multiplies t^i.
using PolyZ = std::vector<Int>;

template <typename Scalar>
Mat<Scalar> identity(Eigen::Index n) {
    Mat<Scalar> m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Scalar(i == j ? 1 : 0);
    return m;
}

template <typename Scalar>
Mat<Scalar> zeros(Eigen::Index r, Eigen::Index c) {
    Mat<Scalar> m(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < c; ++j) m(i, j) = Scalar(0);
    return m;
}

template <typename Scalar>
Vec<Scalar> zero_vec(Eigen::Index n) {
    Vec<Scalar> v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = Scalar(0);
    return v;
}

// Dense product without relying on Eigen's lazy evaluator for non-POD scalars.
template <typename Scalar>
Mat<Scalar> mul(const Mat<Scalar>& a, const Mat<Scalar>& b) {
    Mat<Scalar> c = zeros<Scalar>(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (Eigen::Index j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

template <typename Scalar>
Vec<Scalar> mul(const Mat<Scalar>& a, const Vec<Scalar>& x) {
    Vec<Scalar> y = zero_vec<Scalar>(a.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index k = 0; k < a.cols(); ++k) y(i) += a(i, k) * x(k);
    return y;
}

template <typename Scalar>
Mat<Scalar> power(const Mat<Scalar>& a, long e) {
    Mat<Scalar> result = identity<Scalar>(a.rows());
    Mat<Scalar> base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return result;
}

template <typename Scalar>
bool equal(const Mat<Scalar>& a, const Mat<Scalar>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

template <typename Scalar>
Mat<Scalar> transpose(const Mat<Scalar>& a) {
    Mat<Scalar> t(a.cols(), a.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

// Rank by fraction-free elimination over the field of fractions of Scalar.
template <typename Scalar>
int rank(Mat<Scalar> a) {
    int r = 0;
    const Eigen::Index rows = a.rows(), cols = a.cols();
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = r; i < rows; ++i)
            if (a(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        a.row(piv).swap(a.row(r));
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            if (a(i, c) == 0) continue;
            Scalar f = a(i, c), p = a(r, c);
            for (Eigen::Index j = c; j < cols; ++j) a(i, j) = a(i, j) * p - a(r, j) * f;
        }
        ++r;
    }
    return r;
}

std::string to_string(const Int& v);
std::string to_string(const Rat& v);
Rat parse_rat(const std::string& s);

}  // namespace bpl
