#include "hurwitz/lp.hpp"

namespace hurwitz::lp {

bool in_convex_hull(const std::vector<RationalVector>& generators, const RationalVector& target)
{
    if (generators.empty())
        return false;
    const std::size_t d = target.size();
    Problem<Rational> p;
    p.num_vars = generators.size();
    p.objective.assign(p.num_vars, Rational(0));
    for (std::size_t t = 0; t < d; ++t) {
        std::vector<Rational> row(p.num_vars);
        for (std::size_t j = 0; j < p.num_vars; ++j)
            row[j] = generators[j][t];
        p.add_row(std::move(row), Sense::Equal, target[t]);
    }
    p.add_row(std::vector<Rational>(p.num_vars, Rational(1)), Sense::Equal, Rational(1));
    return maximize(p).status == Status::Optimal;
}

}  // namespace hurwitz::lp
