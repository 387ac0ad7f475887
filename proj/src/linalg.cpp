#include "hurwitz/linalg.hpp"

#include "hurwitz/error.hpp"

#include <algorithm>
#include <stdexcept>
#include <type_traits>

namespace hurwitz {

Int dot(const IntVector& a, const IntVector& b)
{
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

Int determinant(IntMatrix m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0)
                ++swap;
            if (swap == n)
                return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // exact division by construction
                __int128 v = static_cast<__int128>(m[i][j]) * m[k][k] - static_cast<__int128>(m[i][k]) * m[k][j];
                v /= prev;
                if (v > INT64_MAX || v < INT64_MIN)
                    throw ArithmeticOverflow();
                m[i][j] = static_cast<Int>(v);
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

namespace {

template <class Num>
std::vector<std::size_t> rref_impl(std::vector<std::vector<Num>>& m)
{
    std::vector<std::size_t> pivots;
    if (m.empty())
        return pivots;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && sign_of(m[p][c]) == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[row], m[p]);
        const Num inv = Num(1) / m[row][c];
        for (auto& v : m[row])
            v = v * inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || sign_of(m[i][c]) == 0)
                continue;
            const Num f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = m[i][j] - f * m[row][j];
        }
        pivots.push_back(c);
        ++row;
    }
    m.resize(row);
    return pivots;
}

template <class Num>
std::vector<IntVector> kernel_impl(const IntMatrix& in, std::size_t cols)
{
    std::vector<std::vector<Num>> m;
    m.reserve(in.size());
    for (const auto& r : in) {
        std::vector<Num> row(cols);
        for (std::size_t j = 0; j < cols; ++j)
            row[j] = Num(r[j]);
        m.push_back(std::move(row));
    }
    auto pivots = rref_impl(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<IntVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        // x_f = 1, x_pivot(i) = -m[i][f]; clear denominators.
        std::vector<Num> x(cols, Num(0));
        x[f] = Num(1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            x[pivots[i]] = -m[i][f];
        RationalVector q(cols);
        for (std::size_t j = 0; j < cols; ++j) {
            if constexpr (std::is_same_v<Num, Rational>)
                q[j] = x[j];
            else
                q[j] = x[j].to_mpq();
        }
        basis.push_back(primitive_integer(q));
    }
    return basis;
}

}  // namespace

std::vector<std::size_t> rref(RationalMatrix& m)
{
    return rref_impl(m);
}

std::size_t rank(const IntMatrix& m)
{
    if (m.empty())
        return 0;
    RationalMatrix r;
    r.reserve(m.size());
    for (const auto& row : m) {
        RationalVector q(row.size());
        for (std::size_t j = 0; j < row.size(); ++j)
            q[j] = Rational(static_cast<long>(row[j]));
        r.push_back(std::move(q));
    }
    return rref_impl(r).size();
}

std::vector<IntVector> integer_kernel(const IntMatrix& m, std::size_t cols)
{
    try {
        return kernel_impl<SmallRational>(m, cols);
    } catch (const ArithmeticOverflow&) {
        return kernel_impl<Rational>(m, cols);
    }
}

IntVector affine_dependence(const std::vector<const IntVector*>& points)
{
    if (points.empty())
        return {};
    const std::size_t k = points.size();
    const std::size_t n = points[0]->size();
    IntMatrix m(n + 1, IntVector(k));
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < n; ++i)
            m[i][j] = (*points[j])[i];
        m[n][j] = 1;
    }
    auto kernel = integer_kernel(m, k);
    if (kernel.empty())
        return {};
    if (kernel.size() > 1)
        throw Error(ErrorCode::InvalidArgument, "affine dependence is not unique");
    IntVector c = std::move(kernel[0]);
    auto first = std::find_if(c.begin(), c.end(), [](Int v) { return v != 0; });
    if (first != c.end() && *first < 0)
        for (auto& v : c)
            v = -v;
    return c;
}

std::size_t affine_dimension(const std::vector<const IntVector*>& points)
{
    if (points.size() <= 1)
        return 0;
    IntMatrix diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        IntVector d(points[0]->size());
        for (std::size_t j = 0; j < d.size(); ++j)
            d[j] = checked_sub((*points[i])[j], (*points[0])[j]);
        diffs.push_back(std::move(d));
    }
    return rank(diffs);
}

IntVector cofactor_normal(const IntMatrix& differences)
{
    const std::size_t k = differences.size() + 1;
    IntVector normal(k, 0);
    IntMatrix minor(k - 1, IntVector(k - 1));
    for (std::size_t col = 0; col < k; ++col) {
        for (std::size_t i = 0; i + 1 < k; ++i) {
            std::size_t t = 0;
            for (std::size_t j = 0; j < k; ++j)
                if (j != col)
                    minor[i][t++] = differences[i][j];
        }
        Int d = determinant(minor);
        normal[col] = (col % 2 == 0) ? d : -d;
    }
    return normal;
}

}  // namespace hurwitz
