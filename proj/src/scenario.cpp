#include "cevalat/scenario.hpp"

#include <algorithm>
#include <sstream>

namespace cevalat {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

const std::vector<std::string> kKinds{"ceva",    "lemma43",    "lattice",
                                      "diagram", "condensate", "cone"};

// checks that every present key is expected and every required key is
// present
void check_keys(const Scenario& s, const std::vector<std::string>& required,
                const std::vector<std::string>& optional) {
    for (const auto& [key, field] : s.fields) {
        bool known = std::count(required.begin(), required.end(), key) ||
                     std::count(optional.begin(), optional.end(), key);
        if (!known) throw ScenarioError(field.line, "unknown key '" + key + "'");
    }
    for (const std::string& key : required)
        if (!s.fields.count(key)) throw ScenarioError(0, "missing key '" + key + "'");
}

const ScenarioField& want_value(const Scenario& s, const std::string& key) {
    const ScenarioField& f = s.fields.at(key);
    if (f.is_list) throw ScenarioError(f.line, "'" + key + "' must be a single value");
    return f;
}

const ScenarioField& want_list(const Scenario& s, const std::string& key) {
    const ScenarioField& f = s.fields.at(key);
    if (!f.is_list) throw ScenarioError(f.line, "'" + key + "' must be a list");
    return f;
}

RatioSet parse_ratioset_at(const std::string& text, int line) {
    try {
        return RatioSet::parse(text);
    } catch (const std::exception& e) {
        throw ScenarioError(line, std::string("bad ratio set: ") + e.what());
    }
}

LTermPtr parse_lterm_at(const std::string& text, int line) {
    try {
        return parse_lterm(text);
    } catch (const std::exception& e) {
        throw ScenarioError(line, std::string("bad term: ") + e.what());
    }
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    Scenario s;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    std::string open_list;  // key currently accepting "- " items
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        std::string t = trim(line);
        if (t.empty()) continue;
        if (t.rfind("- ", 0) == 0 || t == "-") {
            if (open_list.empty())
                throw ScenarioError(lineno, "list item outside any list");
            ScenarioField& f = s.fields[open_list];
            f.items.push_back(trim(t.substr(1)));
            f.item_lines.push_back(lineno);
            continue;
        }
        size_t colon = t.find(':');
        if (colon == std::string::npos)
            throw ScenarioError(lineno, "expected 'key: value' or '- item'");
        std::string key = trim(t.substr(0, colon));
        std::string value = trim(t.substr(colon + 1));
        if (key.empty()) throw ScenarioError(lineno, "empty key");
        if (key == "kind") {
            if (!s.kind.empty()) throw ScenarioError(lineno, "duplicate 'kind'");
            if (!std::count(kKinds.begin(), kKinds.end(), value))
                throw ScenarioError(lineno, "unknown kind '" + value + "'");
            s.kind = value;
            open_list.clear();
            continue;
        }
        if (s.kind.empty())
            throw ScenarioError(lineno, "the first entry must be 'kind:'");
        if (s.fields.count(key))
            throw ScenarioError(lineno, "duplicate key '" + key + "'");
        ScenarioField f;
        f.line = lineno;
        if (value.empty()) {
            f.is_list = true;
            open_list = key;
        } else {
            f.value = value;
            open_list.clear();
        }
        s.fields.emplace(key, std::move(f));
    }
    if (s.kind.empty()) throw ScenarioError(lineno, "missing 'kind:' entry");
    for (const auto& [key, f] : s.fields)
        if (f.is_list && f.items.empty())
            throw ScenarioError(f.line, "list '" + key + "' is empty");
    return s;
}

CevaInput scenario_ceva(const Scenario& s) {
    check_keys(s, {"u12", "u23", "u13"}, {});
    CevaInput in;
    in.U12 = parse_ratioset_at(want_value(s, "u12").value, s.fields.at("u12").line);
    in.U23 = parse_ratioset_at(want_value(s, "u23").value, s.fields.at("u23").line);
    in.U13 = parse_ratioset_at(want_value(s, "u13").value, s.fields.at("u13").line);
    return in;
}

Lemma43Candidate scenario_lemma43(const Scenario& s) {
    check_keys(s, {"c12", "c21", "c23", "c32", "c13", "c31"}, {});
    auto term = [&](const char* key) {
        return parse_lterm_at(want_value(s, key).value, s.fields.at(key).line);
    };
    Lemma43Candidate c;
    c.c12 = term("c12");
    c.c21 = term("c21");
    c.c23 = term("c23");
    c.c32 = term("c32");
    c.c13 = term("c13");
    c.c31 = term("c31");
    return c;
}

JIPoset scenario_lattice(const Scenario& s) {
    check_keys(s, {"ji"}, {"covers"});
    const ScenarioField& jf = want_value(s, "ji");
    size_t n = 0;
    try {
        size_t pos = 0;
        long v = std::stol(jf.value, &pos);
        if (pos != jf.value.size() || v < 0 || v > 16) throw std::exception();
        n = static_cast<size_t>(v);
    } catch (...) {
        throw ScenarioError(jf.line, "'ji' must be a small nonnegative integer");
    }
    std::vector<std::pair<size_t, size_t>> covers;
    if (s.fields.count("covers")) {
        const ScenarioField& cf = want_list(s, "covers");
        for (size_t i = 0; i < cf.items.size(); ++i) {
            std::istringstream item(cf.items[i]);
            long lo = -1, hi = -1;
            std::string rest;
            item >> lo >> hi;
            if (!item || (item >> rest) || lo < 0 || hi < 0 ||
                static_cast<size_t>(lo) >= n || static_cast<size_t>(hi) >= n)
                throw ScenarioError(cf.item_lines[i],
                                    "cover must be 'lower upper' with indices below ji");
            covers.push_back({static_cast<size_t>(lo), static_cast<size_t>(hi)});
        }
    }
    try {
        return JIPoset::from_covers(n, covers);
    } catch (const std::exception& e) {
        throw ScenarioError(s.fields.at("ji").line, e.what());
    }
}

DiagramScenario scenario_diagram(const Scenario& s) {
    check_keys(s, {"target"}, {"depth"});
    DiagramScenario d;
    d.target = want_value(s, "target").value;
    if (d.target != "A" && d.target != "D" && d.target != "eta")
        throw ScenarioError(s.fields.at("target").line, "target must be A, D, or eta");
    if (s.fields.count("depth")) {
        const ScenarioField& df = want_value(s, "depth");
        try {
            size_t pos = 0;
            d.depth = std::stoi(df.value, &pos);
            if (pos != df.value.size() || d.depth < 0 || d.depth > 5)
                throw std::exception();
        } catch (...) {
            throw ScenarioError(df.line, "'depth' must be an integer in 0..5");
        }
    }
    return d;
}

Constraint parse_constraint(const std::string& text, size_t dim, int line) {
    size_t relpos = std::string::npos;
    Rel rel = Rel::EQ;
    size_t rellen = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '>') {
            relpos = i;
            if (i + 1 < text.size() && text[i + 1] == '=') {
                rel = Rel::GE;
                rellen = 2;
            } else {
                rel = Rel::GT;
                rellen = 1;
            }
            break;
        }
        if (text[i] == '=') {
            relpos = i;
            rel = Rel::EQ;
            rellen = 1;
            break;
        }
    }
    if (relpos == std::string::npos)
        throw ScenarioError(line, "constraint needs a relation (>, >=, =)");
    std::string lhs = trim(text.substr(0, relpos));
    std::string rhs = trim(text.substr(relpos + rellen));
    if (rhs != "0") throw ScenarioError(line, "the right-hand side must be 0");
    LinForm form(dim);
    size_t i = 0;
    bool any = false;
    while (i < lhs.size()) {
        while (i < lhs.size() && (lhs[i] == ' ' || lhs[i] == '\t')) ++i;
        if (i >= lhs.size()) break;
        Rat sign(1);
        if (lhs[i] == '+' || lhs[i] == '-') {
            if (lhs[i] == '-') sign = Rat(-1);
            ++i;
            while (i < lhs.size() && (lhs[i] == ' ' || lhs[i] == '\t')) ++i;
        } else if (any) {
            throw ScenarioError(line, "terms must be joined by + or -");
        }
        Rat coef(1);
        if (i < lhs.size() && (isdigit(lhs[i]))) {
            size_t j = i;
            while (j < lhs.size() && (isdigit(lhs[j]) || lhs[j] == '/')) ++j;
            try {
                coef = Rat::parse(lhs.substr(i, j - i));
            } catch (const std::exception& e) {
                throw ScenarioError(line, std::string("bad coefficient: ") + e.what());
            }
            i = j;
            while (i < lhs.size() && (lhs[i] == ' ' || lhs[i] == '\t')) ++i;
            if (i < lhs.size() && lhs[i] == '*') {
                ++i;
                while (i < lhs.size() && (lhs[i] == ' ' || lhs[i] == '\t')) ++i;
            }
        }
        if (i >= lhs.size() || lhs[i] != 'x')
            throw ScenarioError(line, "expected a variable x1..x" + std::to_string(dim));
        ++i;
        size_t j = i;
        while (j < lhs.size() && isdigit(lhs[j])) ++j;
        if (j == i) throw ScenarioError(line, "variable needs an index");
        size_t var = std::stoul(lhs.substr(i, j - i));
        if (var < 1 || var > dim)
            throw ScenarioError(line, "variable index out of range 1.." + std::to_string(dim));
        i = j;
        form.coeffs[var - 1] += sign * coef;
        any = true;
    }
    if (!any) throw ScenarioError(line, "empty left-hand side");
    return Constraint{std::move(form), rel};
}

namespace {

Cell parse_cell(const std::string& text, size_t dim, int line) {
    Cell c;
    size_t start = 0;
    while (start <= text.size()) {
        size_t semi = text.find(';', start);
        std::string part =
            trim(semi == std::string::npos ? text.substr(start) : text.substr(start, semi - start));
        if (!part.empty()) c.constraints.push_back(parse_constraint(part, dim, line));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    if (c.constraints.empty()) throw ScenarioError(line, "empty cell");
    return c;
}

Region parse_region(const Scenario& s, const std::string& key, const AmbientCone& ambient) {
    const ScenarioField& f = s.fields.at(key);
    if (!f.is_list) throw ScenarioError(f.line, "'" + key + "' must be a list of cells");
    Region r;
    r.ambient = ambient;
    for (size_t i = 0; i < f.items.size(); ++i) {
        Cell c = parse_cell(f.items[i], ambient.dimension, f.item_lines[i]);
        if (!c.has_strict())
            throw ScenarioError(f.item_lines[i], "every cell needs a strict constraint");
        r.cells.push_back(std::move(c));
    }
    return r;
}

}  // namespace

ConeScenario scenario_cone(const Scenario& s) {
    check_keys(s, {"dim", "a"}, {"b", "ambient"});
    const ScenarioField& df = want_value(s, "dim");
    ConeScenario out;
    try {
        size_t pos = 0;
        long v = std::stol(df.value, &pos);
        if (pos != df.value.size() || v < 1 || v > 8) throw std::exception();
        out.dim = static_cast<size_t>(v);
    } catch (...) {
        throw ScenarioError(df.line, "'dim' must be an integer in 1..8");
    }
    AmbientCone ambient = AmbientCone::trivial(out.dim);
    if (s.fields.count("ambient")) {
        const ScenarioField& af = want_list(s, "ambient");
        for (size_t i = 0; i < af.items.size(); ++i) {
            Constraint c = parse_constraint(af.items[i], out.dim, af.item_lines[i]);
            if (c.rel == Rel::GT)
                throw ScenarioError(af.item_lines[i],
                                    "ambient constraints must be weak (>= or =)");
            ambient.weak.push_back(std::move(c));
        }
    }
    out.a = parse_region(s, "a", ambient);
    if (s.fields.count("b")) out.b = parse_region(s, "b", ambient);
    return out;
}

CondensateScenario scenario_condensate(const Scenario& s) {
    check_keys(s, {"atoms"}, {"project_atom"});
    const ScenarioField& af = want_value(s, "atoms");
    CondensateScenario out;
    std::istringstream in(af.value);
    std::string tok;
    while (in >> tok) {
        std::optional<P3> p = p3_parse(tok);
        if (!p) throw ScenarioError(af.line, "bad cube element '" + tok + "'");
        out.tags.push_back(*p);
    }
    if (out.tags.empty()) throw ScenarioError(af.line, "'atoms' must list at least one tag");
    if (s.fields.count("project_atom")) {
        const ScenarioField& pf = want_value(s, "project_atom");
        try {
            size_t pos = 0;
            long v = std::stol(pf.value, &pos);
            if (pos != pf.value.size() || v < 0 ||
                static_cast<size_t>(v) >= out.tags.size())
                throw std::exception();
            out.project_atom = static_cast<size_t>(v);
        } catch (...) {
            throw ScenarioError(pf.line, "'project_atom' must index an atom");
        }
    }
    return out;
}

}  // namespace cevalat
