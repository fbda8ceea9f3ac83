#include "cyclo/rat.hpp"
#include "cyclo/errors.hpp"

namespace cyclo {

Rat rat_from_string(const std::string& s) {
    if (s.empty())
        throw ParseError("empty rational literal");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw ParseError("bad rational literal: '" + s + "'");
    try {
        Rat r(s);
        if (r.get_den() == 0)
            throw ParseError("zero denominator in '" + s + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: '" + s + "'");
    }
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

} // namespace cyclo
