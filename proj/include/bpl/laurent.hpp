#pragma once

#include "bpl/exact.hpp"

#include <array>
#include <map>
#include <string>

namespace bpl {

// Laurent polynomial over Q in the local-system variables alpha, beta (first torus) and alpha', beta' (second).
class Laurent {
public:
    static constexpr int kVars = 4;
    using Mono = std::array<int, kVars>;

    Laurent() = default;
    Laurent(int c) : Laurent(Rat(c)) {}
    Laurent(const Rat& c) {
        if (c != 0) terms_[Mono{}] = c;
    }
    static Laurent var(int i, int power = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Mono, Rat>& terms() const { return terms_; }

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }
    friend Laurent operator-(const Laurent& a) { return Laurent(0) - a; }
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
    friend bool operator==(const Laurent& a, int c) { return a == Laurent(c); }
    friend bool operator!=(const Laurent& a, int c) { return !(a == Laurent(c)); }

    // Replace variable i by coeff * x_j^power (j = -1 for a constant).
    Laurent substitute(int i, const Rat& coeff, int j, int power = 1) const;
    std::string str() const;

private:
    void add_term(const Mono& m, const Rat& c);
    std::map<Mono, Rat> terms_;
};

const char* laurent_var_name(int i);

}  // namespace bpl

namespace Eigen {
template <>
struct NumTraits<bpl::Laurent> : GenericNumTraits<bpl::Laurent> {
    typedef bpl::Laurent Real;
    typedef bpl::Laurent NonInteger;
    typedef bpl::Laurent Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 3,
        MulCost = 3
    };
};
}  // namespace Eigen
