#include "cevalat/ratioset.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cevalat {

namespace {

// Start a is before start b (closed starts first on ties).
bool start_before(const Interval& a, const Interval& b) {
    if (!(a.lo == b.lo)) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
}

// End position of a is strictly before end of b.
bool end_before(const Interval& a, const Interval& b) {
    if (!(a.hi == b.hi)) return a.hi < b.hi;
    return !a.hi_closed && b.hi_closed;
}

}  // namespace

bool Interval::empty() const {
    if (lo == hi) return !(lo_closed && hi_closed);
    return hi < lo;
}

bool Interval::contains(const ExtRat& t) const {
    if (t < lo || (t == lo && !lo_closed)) return false;
    if (hi < t || (t == hi && !hi_closed)) return false;
    return true;
}

std::string Interval::str() const {
    std::string s;
    s += lo_closed ? '[' : '(';
    s += lo.str();
    s += ',';
    s += hi.str();
    s += hi_closed ? ']' : ')';
    return s;
}

RatioSet RatioSet::normalize(std::vector<Interval> raw) {
    for (const Interval& iv : raw)
        if (iv.hi < iv.lo)
            throw std::invalid_argument("RatioSet: interval with lo > hi: " + iv.str());
    std::erase_if(raw, [](const Interval& iv) { return iv.empty(); });
    std::sort(raw.begin(), raw.end(), start_before);

    RatioSet out;
    for (const Interval& iv : raw) {
        if (!out.ivs_.empty()) {
            Interval& cur = out.ivs_.back();
            bool touches = iv.lo < cur.hi ||
                           (iv.lo == cur.hi && (cur.hi_closed || iv.lo_closed));
            if (touches) {
                if (end_before(cur, iv)) {
                    cur.hi = iv.hi;
                    cur.hi_closed = iv.hi_closed;
                } else if (cur.hi == iv.hi) {
                    cur.hi_closed = cur.hi_closed || iv.hi_closed;
                }
                continue;
            }
        }
        out.ivs_.push_back(iv);
    }
    return out;
}

RatioSet RatioSet::full() {
    return normalize({Interval{ExtRat(Rat(0)), ExtRat::infinity(), true, true}});
}

RatioSet RatioSet::initial(const Rat& x) {
    return normalize({Interval{ExtRat(Rat(0)), ExtRat(x), true, false}});
}

RatioSet RatioSet::singleton(const ExtRat& x) {
    return normalize({Interval{x, x, true, true}});
}

bool RatioSet::contains(const ExtRat& t) const {
    for (const Interval& iv : ivs_) {
        if (iv.contains(t)) return true;
        if (t < iv.lo) break;
    }
    return false;
}

std::optional<Rat> RatioSet::initial_bound() const {
    if (ivs_.size() != 1) return std::nullopt;
    const Interval& iv = ivs_.front();
    if (!iv.lo_closed || !iv.lo.is_zero()) return std::nullopt;
    if (iv.hi_closed || iv.hi.is_infinite()) return std::nullopt;
    if (iv.hi.finite().is_zero()) return std::nullopt;
    return iv.hi.finite();
}

bool RatioSet::is_admissible() const {
    for (const Interval& iv : ivs_) {
        if (iv.lo == iv.hi) return false;  // singleton
        if (iv.lo_closed && !iv.lo.is_zero()) return false;
        if (iv.hi_closed && !iv.hi.is_infinite()) return false;
    }
    return true;
}

RatioSet RatioSet::unite(const RatioSet& o) const {
    std::vector<Interval> all = ivs_;
    all.insert(all.end(), o.ivs_.begin(), o.ivs_.end());
    return normalize(std::move(all));
}

RatioSet RatioSet::intersect(const RatioSet& o) const {
    std::vector<Interval> out;
    for (const Interval& a : ivs_) {
        for (const Interval& b : o.ivs_) {
            Interval c;
            if (start_before(a, b)) {
                c.lo = b.lo;
                c.lo_closed = b.lo_closed;
            } else {
                c.lo = a.lo;
                c.lo_closed = a.lo_closed;
            }
            if (end_before(a, b)) {
                c.hi = a.hi;
                c.hi_closed = a.hi_closed;
            } else {
                c.hi = b.hi;
                c.hi_closed = b.hi_closed;
            }
            if (!(c.hi < c.lo) && !c.empty()) out.push_back(c);
        }
    }
    return normalize(std::move(out));
}

RatioSet RatioSet::complement() const {
    std::vector<Interval> out;
    ExtRat cursor{Rat(0)};
    bool cursor_in = true;  // cursor point still to be covered
    for (const Interval& iv : ivs_) {
        Interval gap{cursor, iv.lo, cursor_in, !iv.lo_closed};
        if (!gap.empty()) out.push_back(gap);
        cursor = iv.hi;
        cursor_in = !iv.hi_closed;
        if (cursor.is_infinite() && !cursor_in) return normalize(std::move(out));
    }
    Interval tail{cursor, ExtRat::infinity(), cursor_in, true};
    if (!tail.empty()) out.push_back(tail);
    return normalize(std::move(out));
}

bool RatioSet::subset_of(const RatioSet& o) const { return intersect(o) == *this; }

bool RatioSet::operator==(const RatioSet& o) const {
    if (ivs_.size() != o.ivs_.size()) return false;
    for (size_t i = 0; i < ivs_.size(); ++i) {
        const Interval &a = ivs_[i], &b = o.ivs_[i];
        if (!(a.lo == b.lo) || !(a.hi == b.hi) || a.lo_closed != b.lo_closed ||
            a.hi_closed != b.hi_closed)
            return false;
    }
    return true;
}

std::string RatioSet::str() const {
    std::string s = "{";
    for (size_t i = 0; i < ivs_.size(); ++i) {
        if (i) s += ", ";
        s += ivs_[i].str();
    }
    return s + "}";
}

namespace {

struct Scanner {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("RatioSet parse error at position " +
                                    std::to_string(pos) + ": " + what);
    }
    char peek() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        return s[pos];
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }
    bool try_consume(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    ExtRat endpoint(const char* stop) {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && !strchr_any(s[pos], stop)) ++pos;
        std::string tok = s.substr(start, pos - start);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back())))
            tok.pop_back();
        if (tok.empty()) fail("empty endpoint");
        return ExtRat::parse(tok);
    }
    static bool strchr_any(char c, const char* set) {
        for (; *set; ++set)
            if (*set == c) return true;
        return false;
    }
};

}  // namespace

RatioSet RatioSet::parse(const std::string& text) {
    Scanner sc{text};
    sc.expect('{');
    std::vector<Interval> ivs;
    if (!sc.try_consume('}')) {
        while (true) {
            Interval iv;
            char open = sc.peek();
            if (open != '[' && open != '(') sc.fail("expected '[' or '('");
            iv.lo_closed = open == '[';
            ++sc.pos;
            iv.lo = sc.endpoint(",");
            sc.expect(',');
            iv.hi = sc.endpoint(")]");
            char close = sc.peek();
            if (close != ']' && close != ')') sc.fail("expected ']' or ')'");
            iv.hi_closed = close == ']';
            ++sc.pos;
            ivs.push_back(iv);
            if (sc.try_consume('}')) break;
            sc.expect(',');
        }
    }
    sc.skip_ws();
    if (sc.pos != text.size()) sc.fail("trailing input");
    return normalize(std::move(ivs));
}

}  // namespace cevalat
