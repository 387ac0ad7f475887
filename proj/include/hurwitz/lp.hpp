// Dense two-phase primal simplex over an exact ordered field.
//
// Pivoting follows Bland's rule (lowest-index entering column, lowest-index
// leaving basic variable on ratio ties), so the method terminates on the
// heavily degenerate systems produced by regularity and membership tests.

#ifndef HURWITZ_LP_HPP
#define HURWITZ_LP_HPP

#include "hurwitz/arith.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hurwitz::lp {

enum class Sense { LessEq, Equal, GreaterEq };
enum class Status { Optimal, Infeasible, Unbounded };

/// maximize objective·x  subject to  rows[i]·x (senses[i]) rhs[i],  x >= 0.
template <class Num>
struct Problem {
    std::size_t num_vars = 0;
    std::vector<std::vector<Num>> rows;
    std::vector<Sense> senses;
    std::vector<Num> rhs;
    std::vector<Num> objective;

    void add_row(std::vector<Num> coefficients, Sense sense, Num bound)
    {
        if (coefficients.size() != num_vars)
            throw std::invalid_argument("lp row has wrong width");
        rows.push_back(std::move(coefficients));
        senses.push_back(sense);
        rhs.push_back(std::move(bound));
    }
};

template <class Num>
struct Solution {
    Status status = Status::Infeasible;
    Num value{};
    std::vector<Num> x;
    std::size_t pivots = 0;
};

namespace detail {

template <class Num>
class Tableau {
public:
    // rows_ holds [A | b]; basis_[i] is the column basic in row i.
    std::vector<std::vector<Num>> rows_;
    std::vector<Num> cost_;  // reduced costs, last entry = -objective value
    std::vector<std::size_t> basis_;
    std::vector<bool> allowed_;  // columns permitted to enter
    std::size_t cols_ = 0;
    std::size_t pivots_ = 0;

    void pivot(std::size_t prow, std::size_t pcol)
    {
        ++pivots_;
        auto& pr = rows_[prow];
        const Num inv = Num(1) / pr[pcol];
        std::vector<std::size_t> nz;
        nz.reserve(cols_ + 1);
        for (std::size_t j = 0; j <= cols_; ++j) {
            if (sign_of(pr[j]) != 0) {
                pr[j] = pr[j] * inv;
                nz.push_back(j);
            }
        }
        auto eliminate = [&](std::vector<Num>& r) {
            if (sign_of(r[pcol]) == 0)
                return;
            const Num f = r[pcol];
            for (std::size_t j : nz)
                r[j] = r[j] - f * pr[j];
        };
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (i != prow)
                eliminate(rows_[i]);
        eliminate(cost_);
        basis_[prow] = pcol;
    }

    /// Returns false when unbounded.
    bool optimize()
    {
        for (;;) {
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (allowed_[j] && sign_of(cost_[j]) > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == cols_)
                return true;
            std::size_t leave = rows_.size();
            Num best{};
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                const Num& a = rows_[i][enter];
                if (sign_of(a) <= 0)
                    continue;
                Num ratio = rows_[i][cols_] / a;
                if (leave == rows_.size() || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows_.size())
                return false;
            pivot(leave, enter);
        }
    }

    void set_objective(const std::vector<Num>& c)
    {
        cost_.assign(cols_ + 1, Num(0));
        for (std::size_t j = 0; j < c.size(); ++j)
            cost_[j] = c[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Num f = cost_[basis_[i]];
            if (sign_of(f) == 0)
                continue;
            for (std::size_t j = 0; j <= cols_; ++j)
                if (sign_of(rows_[i][j]) != 0)
                    cost_[j] = cost_[j] - f * rows_[i][j];
        }
    }
};

}  // namespace detail

template <class Num>
Solution<Num> maximize(const Problem<Num>& problem)
{
    const std::size_t n = problem.num_vars;
    const std::size_t m = problem.rows.size();
    if (problem.objective.size() != n)
        throw std::invalid_argument("lp objective has wrong width");

    std::vector<std::vector<Num>> a = problem.rows;
    std::vector<Sense> sense = problem.senses;
    std::vector<Num> b = problem.rhs;
    for (std::size_t i = 0; i < m; ++i) {
        if (sign_of(b[i]) < 0) {
            for (auto& v : a[i])
                v = -v;
            b[i] = -b[i];
            if (sense[i] == Sense::LessEq)
                sense[i] = Sense::GreaterEq;
            else if (sense[i] == Sense::GreaterEq)
                sense[i] = Sense::LessEq;
        }
    }

    std::size_t num_slack = 0;
    std::size_t num_art = 0;
    for (auto s : sense) {
        if (s != Sense::Equal)
            ++num_slack;
        if (s != Sense::LessEq)
            ++num_art;
    }
    const std::size_t art_begin = n + num_slack;

    detail::Tableau<Num> t;
    t.cols_ = n + num_slack + num_art;
    t.rows_.assign(m, std::vector<Num>(t.cols_ + 1, Num(0)));
    t.basis_.assign(m, 0);
    t.allowed_.assign(t.cols_, true);
    std::size_t slack = n;
    std::size_t art = art_begin;
    for (std::size_t i = 0; i < m; ++i) {
        auto& r = t.rows_[i];
        for (std::size_t j = 0; j < n; ++j)
            r[j] = a[i][j];
        r[t.cols_] = b[i];
        switch (sense[i]) {
        case Sense::LessEq:
            r[slack] = Num(1);
            t.basis_[i] = slack++;
            break;
        case Sense::GreaterEq:
            r[slack++] = Num(-1);
            r[art] = Num(1);
            t.basis_[i] = art++;
            break;
        case Sense::Equal:
            r[art] = Num(1);
            t.basis_[i] = art++;
            break;
        }
    }

    Solution<Num> out;
    if (num_art > 0) {
        std::vector<Num> phase1(t.cols_, Num(0));
        for (std::size_t j = art_begin; j < t.cols_; ++j)
            phase1[j] = Num(-1);
        t.set_objective(phase1);
        t.optimize();  // bounded above by zero
        if (sign_of(t.cost_[t.cols_]) != 0) {
            out.status = Status::Infeasible;
            out.pivots = t.pivots_;
            return out;
        }
        // Drive zero-level artificials out of the basis; drop redundant rows.
        for (std::size_t i = 0; i < t.rows_.size();) {
            if (t.basis_[i] < art_begin) {
                ++i;
                continue;
            }
            std::size_t col = art_begin;
            for (std::size_t j = 0; j < art_begin; ++j) {
                if (sign_of(t.rows_[i][j]) != 0) {
                    col = j;
                    break;
                }
            }
            if (col == art_begin) {
                t.rows_.erase(t.rows_.begin() + static_cast<std::ptrdiff_t>(i));
                t.basis_.erase(t.basis_.begin() + static_cast<std::ptrdiff_t>(i));
                continue;
            }
            t.pivot(i, col);
            ++i;
        }
        for (std::size_t j = art_begin; j < t.cols_; ++j)
            t.allowed_[j] = false;
    }

    t.set_objective(problem.objective);
    if (!t.optimize()) {
        out.status = Status::Unbounded;
        out.pivots = t.pivots_;
        return out;
    }
    out.status = Status::Optimal;
    out.value = -t.cost_[t.cols_];
    out.x.assign(n, Num(0));
    for (std::size_t i = 0; i < t.rows_.size(); ++i)
        if (t.basis_[i] < n)
            out.x[t.basis_[i]] = t.rows_[i][t.cols_];
    out.pivots = t.pivots_;
    return out;
}

template <class Num>
struct FarkasResult {
    bool feasible = false;
    std::vector<Num> x;            // A x = b, x >= 0 when feasible
    std::vector<Num> certificate;  // w with w^T A >= 0 and w^T b < 0 otherwise
};

/// Decides whether {x >= 0 : A x = b} is nonempty for b >= 0, returning either
/// a point or a Farkas certificate read off the phase-one duals.
template <class Num>
FarkasResult<Num> feasible_or_farkas(const std::vector<std::vector<Num>>& a, const std::vector<Num>& b)
{
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a[0].size();
    detail::Tableau<Num> t;
    t.cols_ = n + m;
    t.rows_.assign(m, std::vector<Num>(t.cols_ + 1, Num(0)));
    t.basis_.resize(m);
    t.allowed_.assign(t.cols_, true);
    for (std::size_t i = 0; i < m; ++i) {
        if (sign_of(b[i]) < 0)
            throw std::invalid_argument("feasible_or_farkas needs b >= 0");
        for (std::size_t j = 0; j < n; ++j)
            t.rows_[i][j] = a[i][j];
        t.rows_[i][n + i] = Num(1);
        t.rows_[i][t.cols_] = b[i];
        t.basis_[i] = n + i;
    }
    std::vector<Num> phase1(t.cols_, Num(0));
    for (std::size_t j = n; j < t.cols_; ++j)
        phase1[j] = Num(-1);
    t.set_objective(phase1);
    t.optimize();

    FarkasResult<Num> out;
    if (sign_of(t.cost_[t.cols_]) == 0) {
        out.feasible = true;
        out.x.assign(n, Num(0));
        for (std::size_t i = 0; i < m; ++i)
            if (t.basis_[i] < n)
                out.x[t.basis_[i]] = t.rows_[i][t.cols_];
        return out;
    }
    out.certificate.resize(m);
    for (std::size_t i = 0; i < m; ++i)
        out.certificate[i] = Num(-1) - t.cost_[n + i];
    return out;
}

/// Feasibility of  sum_j lambda_j * generators[j] = target,  sum lambda = 1,
/// lambda >= 0, i.e. exact membership of target in conv(generators).
bool in_convex_hull(const std::vector<RationalVector>& generators, const RationalVector& target);

}  // namespace hurwitz::lp

#endif
