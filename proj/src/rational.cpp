#include "gk/rational.hpp"

#include <sstream>

namespace gk {

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw error("zero denominator: " + s);
        return Rat(num, den);
    } catch (const std::exception& e) {
        throw error("bad rational literal '" + s + "': " + e.what());
    }
}

std::string GaussRat::str() const {
    if (im == 0) return rat_to_string(re);
    std::string s;
    if (re != 0) s = rat_to_string(re) + (im > 0 ? "+" : "");
    s += rat_to_string(im) + "i";
    return s;
}

} // namespace gk
