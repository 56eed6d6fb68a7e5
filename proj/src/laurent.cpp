#include "bpl/laurent.hpp"

namespace bpl {

const char* laurent_var_name(int i) {
    static const char* names[Laurent::kVars] = {"alpha", "beta", "alpha'", "beta'"};
    return names[i];
}

Laurent Laurent::var(int i, int power) {
    Laurent l;
    Mono m{};
    m[i] = power;
    l.terms_[m] = 1;
    return l;
}

void Laurent::add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, Rat(-c));
    return *this;
}

Laurent& Laurent::operator*=(const Laurent& o) {
    Laurent r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Mono m;
            for (int i = 0; i < kVars; ++i) m[i] = m1[i] + m2[i];
            r.add_term(m, c1 * c2);
        }
    terms_ = std::move(r.terms_);
    return *this;
}

Laurent Laurent::substitute(int i, const Rat& coeff, int j, int power) const {
    Laurent r;
    for (const auto& [m, c] : terms_) {
        Mono mm = m;
        const int e = mm[i];
        mm[i] = 0;
        if (j >= 0) mm[j] += power * e;
        Rat f = 1;
        const Rat base = e >= 0 ? coeff : Rat(1 / coeff);
        for (int k = 0; k < (e >= 0 ? e : -e); ++k) f *= base;
        r.add_term(mm, c * f);
    }
    return r;
}

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string mono;
        for (int i = 0; i < kVars; ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += laurent_var_name(i);
            if (m[i] != 1) mono += "^" + std::to_string(m[i]);
        }
        const bool neg = c < 0;
        const Rat a = neg ? Rat(-c) : c;
        std::string coef = to_string(a);
        if (!out.empty()) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        if (mono.empty()) out += coef;
        else out += (a == 1 ? "" : coef + "*") + mono;
    }
    return out;
}

}  // namespace bpl
