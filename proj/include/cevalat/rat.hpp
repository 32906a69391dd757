#pragma once

// Exact rational arithmetic over GMP, plus the extended positive ray
// Q+ u {inf} with its total order and the ratio map (x,y) -> x^-1 y.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace cevalat {

class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d) : v_(n, d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rat(const mpz_class& n) : v_(n) {}
    Rat(const mpz_class& n, const mpz_class& d) : v_(n, d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        v_.canonicalize();
    }

    // Accepts "p", "-p", "p/q".
    static Rat parse(const std::string& text);

    const mpq_class& value() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        return Rat(mpq_class(v_ / o.v_));
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

    auto operator<=>(const Rat& o) const { return cmp(v_, o.v_) <=> 0; }
    bool operator==(const Rat& o) const { return v_ == o.v_; }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

inline Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

// Element of the extended ray: a nonnegative rational or infinity.
// Every finite value is below infinity.
class ExtRat {
public:
    ExtRat() : fin_(Rat(0)) {}
    ExtRat(const Rat& r) : fin_(r) {
        if (r.sign() < 0) throw std::domain_error("ExtRat: negative value");
    }
    static ExtRat infinity() {
        ExtRat e;
        e.fin_.reset();
        return e;
    }
    static ExtRat parse(const std::string& text);

    bool is_infinite() const { return !fin_.has_value(); }
    bool is_zero() const { return fin_ && fin_->is_zero(); }
    const Rat& finite() const {
        if (!fin_) throw std::logic_error("ExtRat: infinite has no finite value");
        return *fin_;
    }

    bool operator==(const ExtRat& o) const { return fin_ == o.fin_; }
    bool operator<(const ExtRat& o) const {
        if (is_infinite()) return false;
        if (o.is_infinite()) return true;
        return *fin_ < *o.fin_;
    }
    bool operator<=(const ExtRat& o) const { return *this < o || *this == o; }
    bool operator>(const ExtRat& o) const { return o < *this; }
    bool operator>=(const ExtRat& o) const { return o <= *this; }

    std::string str() const { return fin_ ? fin_->str() : "inf"; }

private:
    std::optional<Rat> fin_;
};

// ratio(x, y) = x^-1 y for (x, y) != (0, 0), with ratio(0, y) = inf.
ExtRat ratio(const Rat& x, const Rat& y);

}  // namespace cevalat
