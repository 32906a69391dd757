#include "cevalat/simplex.hpp"

#include <stdexcept>

namespace cevalat {

void LinProg::set_objective(LinForm c) {
    if (c.dim() != nvars_) throw std::invalid_argument("LinProg: objective dimension");
    objective_ = std::move(c);
}

void LinProg::add_ge(LinForm a, Rat rhs) {
    if (a.dim() != nvars_) throw std::invalid_argument("LinProg: row dimension");
    rows_.push_back({std::move(a), std::move(rhs), +1});
}

void LinProg::add_le(LinForm a, Rat rhs) {
    if (a.dim() != nvars_) throw std::invalid_argument("LinProg: row dimension");
    rows_.push_back({std::move(a), std::move(rhs), -1});
}

void LinProg::add_eq(LinForm a, Rat rhs) {
    if (a.dim() != nvars_) throw std::invalid_argument("LinProg: row dimension");
    rows_.push_back({std::move(a), std::move(rhs), 0});
}

namespace {

// Dense tableau simplex.  Columns: structural vars, slacks, artificials,
// then the rhs.  Bland's rule everywhere.
class Tableau {
public:
    Tableau(size_t m, size_t total_cols) : m_(m), cols_(total_cols) {
        t_.assign(m, std::vector<Rat>(cols_ + 1));
        basis_.assign(m, 0);
    }

    Rat& at(size_t r, size_t c) { return t_[r][c]; }
    Rat& rhs(size_t r) { return t_[r][cols_]; }
    size_t& basis(size_t r) { return basis_[r]; }
    size_t rows() const { return m_; }
    size_t cols() const { return cols_; }

    void pivot(size_t pr, size_t pc) {
        Rat inv = Rat(1) / t_[pr][pc];
        for (size_t c = 0; c <= cols_; ++c) t_[pr][c] *= inv;
        for (size_t r = 0; r < m_; ++r) {
            if (r == pr || t_[r][pc].is_zero()) continue;
            Rat f = t_[r][pc];
            for (size_t c = 0; c <= cols_; ++c) t_[r][c] -= f * t_[pr][c];
        }
        basis_[pr] = pc;
    }

    // Maximizes cost.z over the current feasible tableau.  cost has one
    // entry per column.  Returns false if unbounded.
    bool optimize(const std::vector<Rat>& cost, const std::vector<bool>& allowed) {
        while (true) {
            // Reduced costs: d_j = cost_j - cost_B . column_j.
            std::optional<size_t> enter;
            for (size_t j = 0; j < cols_; ++j) {
                if (!allowed[j]) continue;
                Rat d = cost[j];
                for (size_t r = 0; r < m_; ++r) {
                    const Rat& cb = cost[basis_[r]];
                    if (!cb.is_zero()) d -= cb * t_[r][j];
                }
                if (d.sign() > 0) {
                    enter = j;  // Bland: smallest index
                    break;
                }
            }
            if (!enter) return true;
            std::optional<size_t> leave;
            Rat best;
            for (size_t r = 0; r < m_; ++r) {
                if (t_[r][*enter].sign() <= 0) continue;
                Rat ratio = t_[r][cols_] / t_[r][*enter];
                if (!leave || ratio < best ||
                    (ratio == best && basis_[r] < basis_[*leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (!leave) return false;
            pivot(*leave, *enter);
        }
    }

    Rat objective_value(const std::vector<Rat>& cost) const {
        Rat v;
        for (size_t r = 0; r < m_; ++r)
            if (!cost[basis_[r]].is_zero()) v += cost[basis_[r]] * t_[r][cols_];
        return v;
    }

private:
    size_t m_, cols_;
    std::vector<std::vector<Rat>> t_;
    std::vector<size_t> basis_;
};

}  // namespace

LpResult LinProg::solve() const {
    const size_t m = rows_.size();
    size_t nslack = 0;
    for (const Row& r : rows_)
        if (r.kind != 0) ++nslack;

    // Column layout: [structural | slack | artificial | rhs].
    const size_t slack0 = nvars_;
    const size_t art0 = nvars_ + nslack;
    const size_t total = art0 + m;  // at most one artificial per row
    Tableau tab(m, total);

    size_t si = 0, nart = 0;
    std::vector<size_t> art_cols;
    for (size_t r = 0; r < m; ++r) {
        const Row& row = rows_[r];
        bool neg = row.rhs.sign() < 0;
        for (size_t j = 0; j < nvars_; ++j)
            tab.at(r, j) = neg ? -row.a.coeffs[j] : row.a.coeffs[j];
        tab.rhs(r) = neg ? -row.rhs : row.rhs;
        Rat slack_sign;
        if (row.kind != 0) {
            slack_sign = Rat(row.kind == -1 ? 1 : -1);
            if (neg) slack_sign = -slack_sign;
            tab.at(r, slack0 + si) = slack_sign;
        }
        if (row.kind != 0 && slack_sign == Rat(1)) {
            tab.basis(r) = slack0 + si;  // slack is basic
        } else {
            size_t ac = art0 + nart++;
            tab.at(r, ac) = Rat(1);
            tab.basis(r) = ac;
            art_cols.push_back(ac);
        }
        if (row.kind != 0) ++si;
    }

    std::vector<bool> allowed(total, true);

    // Phase 1: maximize -sum(artificials).
    if (nart > 0) {
        std::vector<Rat> cost1(total);
        for (size_t ac : art_cols) cost1[ac] = Rat(-1);
        if (!tab.optimize(cost1, allowed))
            throw std::logic_error("simplex: phase 1 unbounded");
        if (tab.objective_value(cost1).sign() < 0)
            return {LpStatus::Infeasible, Rat(0), {}};
        // Drive leftover artificials out of the basis.
        for (size_t r = 0; r < tab.rows(); ++r) {
            if (tab.basis(r) < art0) continue;
            bool pivoted = false;
            for (size_t j = 0; j < art0; ++j) {
                if (!tab.at(r, j).is_zero()) {
                    tab.pivot(r, j);
                    pivoted = true;
                    break;
                }
            }
            // A redundant row: the artificial stays basic at value 0,
            // which is harmless once its column is frozen.
            (void)pivoted;
        }
        for (size_t ac : art_cols) allowed[ac] = false;
    }

    // Phase 2.
    std::vector<Rat> cost2(total);
    for (size_t j = 0; j < nvars_; ++j) cost2[j] = objective_.coeffs[j];
    if (!tab.optimize(cost2, allowed)) return {LpStatus::Unbounded, Rat(0), {}};

    LpResult res{LpStatus::Optimal, tab.objective_value(cost2), std::vector<Rat>(nvars_)};
    for (size_t r = 0; r < tab.rows(); ++r)
        if (tab.basis(r) < nvars_) res.point[tab.basis(r)] = tab.rhs(r);
    return res;
}

std::optional<std::vector<Rat>> cell_witness(const AmbientCone& ambient, const Cell& cell) {
    const size_t n = ambient.dimension;
    for (const Constraint& c : cell.constraints)
        if (c.form.dim() != n)
            throw std::invalid_argument("cell_witness: constraint/ambient dimension mismatch");

    // Variables x1..xn, delta.
    LinProg lp(n + 1);
    LinForm ones(n + 1);
    for (size_t j = 0; j < n; ++j) ones.coeffs[j] = Rat(1);
    lp.add_eq(ones, Rat(1));  // section

    auto lift = [n](const LinForm& f) {
        LinForm g(n + 1);
        for (size_t j = 0; j < n; ++j) g.coeffs[j] = f.coeffs[j];
        return g;
    };
    for (const Constraint& c : ambient.weak) {
        if (c.rel == Rel::EQ)
            lp.add_eq(lift(c.form), Rat(0));
        else
            lp.add_ge(lift(c.form), Rat(0));
    }
    for (const Constraint& c : cell.constraints) {
        LinForm g = lift(c.form);
        switch (c.rel) {
            case Rel::EQ: lp.add_eq(std::move(g), Rat(0)); break;
            case Rel::GE: lp.add_ge(std::move(g), Rat(0)); break;
            case Rel::GT:
                g.coeffs[n] = Rat(-1);  // f - delta >= 0
                lp.add_ge(std::move(g), Rat(0));
                break;
        }
    }
    LinForm dcap(n + 1);
    dcap.coeffs[n] = Rat(1);
    lp.add_le(dcap, Rat(1));  // keeps the LP bounded
    LinForm obj(n + 1);
    obj.coeffs[n] = Rat(1);
    lp.set_objective(obj);

    LpResult res = lp.solve();
    if (res.status == LpStatus::Infeasible) return std::nullopt;
    if (res.status != LpStatus::Optimal)
        throw std::logic_error("cell_witness: unexpected LP status");
    bool needs_slack = cell.has_strict();
    if (needs_slack && res.value.sign() == 0) return std::nullopt;
    res.point.resize(n);
    return res.point;
}

}  // namespace cevalat
