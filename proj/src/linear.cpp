#include "cevalat/linear.hpp"

#include <stdexcept>

namespace cevalat {

LinForm LinForm::unit(size_t n, size_t i) {
    LinForm f(n);
    f.coeffs.at(i) = Rat(1);
    return f;
}

Rat LinForm::eval(const std::vector<Rat>& x) const {
    if (x.size() != coeffs.size())
        throw std::invalid_argument("LinForm::eval: dimension mismatch");
    Rat acc;
    for (size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * x[i];
    return acc;
}

LinForm LinForm::operator+(const LinForm& o) const {
    if (o.dim() != dim()) throw std::invalid_argument("LinForm: dimension mismatch");
    LinForm r(dim());
    for (size_t i = 0; i < dim(); ++i) r.coeffs[i] = coeffs[i] + o.coeffs[i];
    return r;
}

LinForm LinForm::operator-() const {
    LinForm r(dim());
    for (size_t i = 0; i < dim(); ++i) r.coeffs[i] = -coeffs[i];
    return r;
}

LinForm LinForm::scaled(const Rat& q) const {
    LinForm r(dim());
    for (size_t i = 0; i < dim(); ++i) r.coeffs[i] = coeffs[i] * q;
    return r;
}

std::string LinForm::str() const {
    std::string s;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        Rat c = coeffs[i];
        if (s.empty()) {
            if (c.sign() < 0) {
                s += "-";
                c = -c;
            }
        } else {
            s += c.sign() < 0 ? " - " : " + ";
            c = c.abs();
        }
        if (!(c == Rat(1))) s += c.str() + "*";
        s += "x" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

bool Constraint::holds(const std::vector<Rat>& x) const {
    int sg = form.eval(x).sign();
    switch (rel) {
        case Rel::GT: return sg > 0;
        case Rel::GE: return sg >= 0;
        case Rel::EQ: return sg == 0;
    }
    return false;
}

std::string Constraint::str() const {
    const char* op = rel == Rel::GT ? " > 0" : rel == Rel::GE ? " >= 0" : " = 0";
    return form.str() + op;
}

bool AmbientCone::contains(const std::vector<Rat>& x) const {
    if (x.size() != dimension) return false;
    for (const Rat& v : x)
        if (v.sign() < 0) return false;
    for (const Constraint& c : weak)
        if (!c.holds(x)) return false;
    return true;
}

bool AmbientCone::operator==(const AmbientCone& o) const {
    if (dimension != o.dimension || weak.size() != o.weak.size()) return false;
    for (size_t i = 0; i < weak.size(); ++i)
        if (weak[i].rel != o.weak[i].rel || !(weak[i].form == o.weak[i].form))
            return false;
    return true;
}

bool Cell::has_strict() const {
    for (const Constraint& c : constraints)
        if (c.rel == Rel::GT) return true;
    return false;
}

bool Cell::holds(const std::vector<Rat>& x) const {
    for (const Constraint& c : constraints)
        if (!c.holds(x)) return false;
    return true;
}

Cell Cell::intersect(const Cell& o) const {
    Cell r = *this;
    r.constraints.insert(r.constraints.end(), o.constraints.begin(), o.constraints.end());
    return r;
}

bool Region::contains(const std::vector<Rat>& x) const {
    if (!ambient.contains(x)) return false;
    for (const Cell& c : cells)
        if (c.holds(x)) return true;
    return false;
}

}  // namespace cevalat
