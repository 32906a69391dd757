#include "cevalat/rat.hpp"

namespace cevalat {

Rat Rat::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Rat: empty literal");
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("Rat: bad literal '" + text + "'");
    if (q.get_den() == 0) throw std::domain_error("Rat: zero denominator");
    q.canonicalize();
    return Rat(q);
}

ExtRat ExtRat::parse(const std::string& text) {
    if (text == "inf") return ExtRat::infinity();
    return ExtRat(Rat::parse(text));
}

ExtRat ratio(const Rat& x, const Rat& y) {
    if (x.sign() < 0 || y.sign() < 0)
        throw std::domain_error("ratio: arguments must be nonnegative");
    if (x.is_zero()) {
        if (y.is_zero()) throw std::domain_error("ratio: undefined at (0,0)");
        return ExtRat::infinity();
    }
    return ExtRat(y / x);
}

}  // namespace cevalat
