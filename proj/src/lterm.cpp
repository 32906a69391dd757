#include "cevalat/lterm.hpp"

#include <cctype>
#include <stdexcept>

namespace cevalat {

LTermPtr lt_zero() {
    static LTermPtr z = std::make_shared<LTerm>(LTerm{LKind::Zero, "", Rat(), {}, {}});
    return z;
}

LTermPtr lt_var(std::string name) {
    return std::make_shared<LTerm>(LTerm{LKind::Var, std::move(name), Rat(), {}, {}});
}

LTermPtr lt_neg(LTermPtr t) {
    return std::make_shared<LTerm>(LTerm{LKind::Neg, "", Rat(), std::move(t), {}});
}

LTermPtr lt_add(LTermPtr a, LTermPtr b) {
    return std::make_shared<LTerm>(LTerm{LKind::Add, "", Rat(), std::move(a), std::move(b)});
}

LTermPtr lt_sub(LTermPtr a, LTermPtr b) { return lt_add(std::move(a), lt_neg(std::move(b))); }

LTermPtr lt_meet(LTermPtr a, LTermPtr b) {
    return std::make_shared<LTerm>(LTerm{LKind::Meet, "", Rat(), std::move(a), std::move(b)});
}

LTermPtr lt_join(LTermPtr a, LTermPtr b) {
    return std::make_shared<LTerm>(LTerm{LKind::Join, "", Rat(), std::move(a), std::move(b)});
}

LTermPtr lt_scale(Rat q, LTermPtr t) {
    if (q.sign() <= 0) throw std::invalid_argument("lt_scale: scalar must be positive");
    return std::make_shared<LTerm>(LTerm{LKind::Scale, "", std::move(q), std::move(t), {}});
}

bool lterm_equal(const LTermPtr& a, const LTermPtr& b) {
    if (a == b) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case LKind::Zero: return true;
        case LKind::Var: return a->name == b->name;
        case LKind::Neg: return lterm_equal(a->a, b->a);
        case LKind::Scale: return a->scale == b->scale && lterm_equal(a->a, b->a);
        default: return lterm_equal(a->a, b->a) && lterm_equal(a->b, b->b);
    }
}

static void collect_vars(const LTermPtr& t, std::set<std::string>& out) {
    switch (t->kind) {
        case LKind::Zero: return;
        case LKind::Var: out.insert(t->name); return;
        case LKind::Neg:
        case LKind::Scale: collect_vars(t->a, out); return;
        default:
            collect_vars(t->a, out);
            collect_vars(t->b, out);
    }
}

std::set<std::string> lterm_vars(const LTermPtr& t) {
    std::set<std::string> out;
    collect_vars(t, out);
    return out;
}

namespace {

// precedence levels: additive 0, lattice 1, unary 2, atom 3
int level_of(const LTermPtr& t) {
    switch (t->kind) {
        case LKind::Add: return 0;
        case LKind::Meet:
        case LKind::Join: return 1;
        case LKind::Neg:
        case LKind::Scale: return 2;
        default: return 3;
    }
}

void print_rec(const LTermPtr& t, int min_level, std::string& out) {
    const bool wrap = level_of(t) < min_level;
    if (wrap) out += '(';
    switch (t->kind) {
        case LKind::Zero: out += '0'; break;
        case LKind::Var: out += t->name; break;
        case LKind::Neg:
            out += '-';
            print_rec(t->a, 2, out);
            break;
        case LKind::Scale:
            out += t->scale.str();
            out += '*';
            print_rec(t->a, 2, out);
            break;
        case LKind::Add:
            print_rec(t->a, 0, out);
            if (t->b->kind == LKind::Neg) {
                out += " - ";
                print_rec(t->b->a, 1, out);
            } else {
                out += " + ";
                print_rec(t->b, 1, out);
            }
            break;
        case LKind::Meet:
        case LKind::Join:
            print_rec(t->a, 1, out);
            out += t->kind == LKind::Meet ? " /\\ " : " \\/ ";
            print_rec(t->b, 2, out);
            break;
    }
    if (wrap) out += ')';
}

struct TermParser {
    const std::string& s;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("term parse error at position " + std::to_string(pos) +
                                    ": " + what);
    }
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool try_op(const char* op) {
        skip_ws();
        size_t len = op[1] ? 2 : 1;
        if (s.compare(pos, len, op) == 0) {
            // Don't read the '/' of a "/\" as something else.
            pos += len;
            return true;
        }
        return false;
    }

    std::string ident() {
        skip_ws();
        size_t start = pos;
        auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
        auto tail = [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
        };
        if (pos >= s.size() || !head(s[pos])) fail("expected identifier");
        ++pos;
        while (pos < s.size() && tail(s[pos])) ++pos;
        return s.substr(start, pos - start);
    }

    Rat number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected number");
        if (pos + 1 < s.size() && s[pos] == '/' &&
            std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
            ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        return Rat::parse(s.substr(start, pos - start));
    }

    LTermPtr additive() {
        LTermPtr t = lattice();
        while (true) {
            if (try_op("+"))
                t = lt_add(std::move(t), lattice());
            else if (try_op("-"))
                t = lt_sub(std::move(t), lattice());
            else
                return t;
        }
    }

    LTermPtr lattice() {
        LTermPtr t = unary();
        while (true) {
            if (try_op("\\/"))
                t = lt_join(std::move(t), unary());
            else if (try_op("/\\"))
                t = lt_meet(std::move(t), unary());
            else
                return t;
        }
    }

    LTermPtr unary() {
        char c = peek();
        if (c == '-') {
            ++pos;
            return lt_neg(unary());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rat q = number();
            if (try_op("*")) {
                if (q.sign() <= 0) fail("scalar must be positive");
                return lt_scale(std::move(q), unary());
            }
            if (!q.is_zero()) fail("bare number other than 0");
            return lt_zero();
        }
        return atom();
    }

    LTermPtr atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            LTermPtr t = additive();
            if (!try_op(")")) fail("expected ')'");
            return t;
        }
        std::string id = ident();
        if ((id == "pos" || id == "abs") && peek() == '(') {
            ++pos;
            LTermPtr t = additive();
            if (!try_op(")")) fail("expected ')'");
            return id == "pos" ? lt_pos(std::move(t)) : lt_abs(std::move(t));
        }
        return lt_var(std::move(id));
    }
};

}  // namespace

LTermPtr parse_lterm(const std::string& src) {
    TermParser p{src};
    LTermPtr t = p.additive();
    if (!p.at_end()) p.fail("trailing input");
    return t;
}

std::string print_lterm(const LTermPtr& t) {
    std::string out;
    print_rec(t, 0, out);
    return out;
}

Rat eval_lterm(const LTermPtr& t, const std::map<std::string, Rat>& point) {
    switch (t->kind) {
        case LKind::Zero: return Rat(0);
        case LKind::Var: {
            auto it = point.find(t->name);
            if (it == point.end())
                throw std::invalid_argument("eval_lterm: unbound variable '" + t->name + "'");
            return it->second;
        }
        case LKind::Neg: return -eval_lterm(t->a, point);
        case LKind::Scale: return t->scale * eval_lterm(t->a, point);
        case LKind::Add: return eval_lterm(t->a, point) + eval_lterm(t->b, point);
        case LKind::Meet: return min(eval_lterm(t->a, point), eval_lterm(t->b, point));
        case LKind::Join: return max(eval_lterm(t->a, point), eval_lterm(t->b, point));
    }
    throw std::logic_error("eval_lterm: bad node");
}

size_t Presentation::index_of(const std::string& name) const {
    for (size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == name) return i;
    throw std::invalid_argument("presentation has no generator '" + name + "'");
}

std::map<std::string, size_t> Presentation::coord_map() const {
    std::map<std::string, size_t> m;
    for (size_t i = 0; i < generators.size(); ++i) m[generators[i]] = i;
    return m;
}

namespace {

std::vector<Piece> combine(const AmbientCone& ambient, const std::vector<Piece>& fa,
                           const std::vector<Piece>& fb, LKind kind) {
    std::vector<Piece> out;
    for (const Piece& p : fa)
        for (const Piece& q : fb) {
            Cell both = p.cell.intersect(q.cell);
            if (cell_is_empty(ambient, both)) continue;
            if (kind == LKind::Add) {
                out.push_back({std::move(both), p.form + q.form});
                continue;
            }
            // split by the sign of d = p.form - q.form
            LinForm d = p.form + (-q.form);
            Cell upper = both;
            upper.constraints.push_back({d, Rel::GE});  // p >= q here
            if (!cell_is_empty(ambient, upper))
                out.push_back({std::move(upper), kind == LKind::Meet ? q.form : p.form});
            Cell lower = std::move(both);
            lower.constraints.push_back({-d, Rel::GT});  // p < q here
            if (!cell_is_empty(ambient, lower))
                out.push_back({std::move(lower), kind == LKind::Meet ? p.form : q.form});
        }
    return out;
}

}  // namespace

PLFun compile_plfun(const LTermPtr& t, const std::map<std::string, size_t>& var_to_coord,
                    const AmbientCone& ambient) {
    const size_t n = ambient.dimension;
    PLFun f{ambient, {}};
    switch (t->kind) {
        case LKind::Zero:
            f.pieces.push_back({Cell{}, LinForm(n)});
            break;
        case LKind::Var: {
            auto it = var_to_coord.find(t->name);
            if (it == var_to_coord.end())
                throw std::invalid_argument("compile: unbound variable '" + t->name + "'");
            if (it->second >= n) throw std::invalid_argument("compile: coordinate out of range");
            f.pieces.push_back({Cell{}, LinForm::unit(n, it->second)});
            break;
        }
        case LKind::Neg: {
            f = compile_plfun(t->a, var_to_coord, ambient);
            for (Piece& p : f.pieces) p.form = -p.form;
            break;
        }
        case LKind::Scale: {
            f = compile_plfun(t->a, var_to_coord, ambient);
            for (Piece& p : f.pieces) p.form = p.form.scaled(t->scale);
            break;
        }
        case LKind::Add:
        case LKind::Meet:
        case LKind::Join: {
            PLFun fa = compile_plfun(t->a, var_to_coord, ambient);
            PLFun fb = compile_plfun(t->b, var_to_coord, ambient);
            f.pieces = combine(ambient, fa.pieces, fb.pieces, t->kind);
            break;
        }
    }
    return f;
}

PLFun compile_plfun(const LTermPtr& t, const Presentation& p) {
    return compile_plfun(t, p.coord_map(), p.ambient);
}

Rat plfun_eval(const PLFun& f, const std::vector<Rat>& x) {
    bool all_zero = true;
    for (const Rat& v : x)
        if (!v.is_zero()) all_zero = false;
    if (all_zero) return Rat(0);  // pieces are pruned on the section only
    for (const Piece& p : f.pieces)
        if (p.cell.holds(x)) return p.form.eval(x);
    throw std::logic_error("plfun_eval: point not covered (outside the ambient cone?)");
}

Region compile_support(const LTermPtr& t, const std::map<std::string, size_t>& var_to_coord,
                       const AmbientCone& ambient, SupportMode mode) {
    PLFun f = compile_plfun(t, var_to_coord, ambient);
    Region r{ambient, {}};
    for (const Piece& p : f.pieces) {
        Cell posc = p.cell;
        posc.constraints.push_back({p.form, Rel::GT});
        if (!cell_is_empty(ambient, posc)) r.cells.push_back(std::move(posc));
        if (mode == SupportMode::Nonzero) {
            Cell negc = p.cell;
            negc.constraints.push_back({-p.form, Rel::GT});
            if (!cell_is_empty(ambient, negc)) r.cells.push_back(std::move(negc));
        }
    }
    return r;
}

Region compile_support(const LTermPtr& t, const Presentation& p, SupportMode mode) {
    return compile_support(t, p.coord_map(), p.ambient, mode);
}

bool propto(const LTermPtr& s, const LTermPtr& t, const Presentation& p) {
    Region rs = compile_support(s, p, SupportMode::Nonzero);
    Region rt = compile_support(t, p, SupportMode::Nonzero);
    return region_subset(rs, rt).holds;
}

bool asymp(const LTermPtr& s, const LTermPtr& t, const Presentation& p) {
    return propto(s, t, p) && propto(t, s, p);
}

}  // namespace cevalat
