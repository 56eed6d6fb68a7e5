#include "bpl/exact.hpp"

#include "bpl/error.hpp"

namespace bpl {

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rat& v) {
    if (boost::multiprecision::denominator(v) == 1) return boost::multiprecision::numerator(v).str();
    return boost::multiprecision::numerator(v).str() + "/" + boost::multiprecision::denominator(v).str();
}

Rat parse_rat(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(Int(s));
        Int den(s.substr(slash + 1));
        if (den == 0) throw Error(ErrorKind::Schema, "zero denominator in '" + s + "'");
        return Rat(Int(s.substr(0, slash)), den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error(ErrorKind::Schema, "malformed rational '" + s + "'");
    }
}

}  // namespace bpl
