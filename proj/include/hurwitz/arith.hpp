// Exact arithmetic primitives shared by every module.
//
// Lattice coordinates are small machine integers with overflow-checked
// operations; everything that can grow (LP tableaux, integrals, heights)
// uses GMP rationals.  SmallRational is a fast path for the regularity LP:
// it throws ArithmeticOverflow as soon as a value leaves int64 range and the
// caller retries with mpq_class.

#ifndef HURWITZ_ARITH_HPP
#define HURWITZ_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hurwitz {

using Int = std::int64_t;
using Rational = mpq_class;
using Integer = mpz_class;

using IntVector = std::vector<Int>;
using RationalVector = std::vector<Rational>;

class ArithmeticOverflow : public std::overflow_error {
public:
    ArithmeticOverflow() : std::overflow_error("int64 overflow in exact arithmetic") {}
};

inline Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw ArithmeticOverflow();
    return r;
}

inline Int checked_sub(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw ArithmeticOverflow();
    return r;
}

inline Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ArithmeticOverflow();
    return r;
}

inline Int abs_gcd(Int a, Int b)
{
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

/// Divides out the gcd of all entries; the zero vector is returned unchanged.
inline void make_primitive(IntVector& v)
{
    Int g = 0;
    for (Int x : v)
        g = abs_gcd(g, x);
    if (g > 1)
        for (Int& x : v)
            x /= g;
}

/// Integer vector parallel to a rational one, with coprime entries and the
/// same orientation.
IntVector primitive_integer(const RationalVector& v);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q"; throws Error(InvalidArgument) otherwise.
Rational parse_rational(const std::string& text);

/// Rational with int64 numerator/denominator.  Every operation either
/// produces the exact reduced result or throws ArithmeticOverflow.
class SmallRational {
public:
    SmallRational() = default;
    SmallRational(Int n) : num_(n), den_(1) {}  // NOLINT: implicit by design of numeric types
    SmallRational(Int n, Int d) { assign(static_cast<__int128>(n), static_cast<__int128>(d)); }

    Int num() const { return num_; }
    Int den() const { return den_; }

    friend SmallRational operator+(const SmallRational& a, const SmallRational& b)
    {
        if (a.den_ == b.den_)
            return from128(static_cast<__int128>(a.num_) + b.num_, a.den_);
        return from128(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                       static_cast<__int128>(a.den_) * b.den_);
    }
    friend SmallRational operator-(const SmallRational& a, const SmallRational& b)
    {
        if (a.den_ == b.den_)
            return from128(static_cast<__int128>(a.num_) - b.num_, a.den_);
        return from128(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                       static_cast<__int128>(a.den_) * b.den_);
    }
    friend SmallRational operator*(const SmallRational& a, const SmallRational& b)
    {
        if (a.num_ == 0 || b.num_ == 0)
            return SmallRational();
        return from128(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    friend SmallRational operator/(const SmallRational& a, const SmallRational& b)
    {
        if (b.num_ == 0)
            throw std::domain_error("division by zero");
        return from128(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    }
    SmallRational operator-() const
    {
        if (num_ == INT64_MIN)
            throw ArithmeticOverflow();
        SmallRational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    SmallRational& operator+=(const SmallRational& o) { return *this = *this + o; }
    SmallRational& operator-=(const SmallRational& o) { return *this = *this - o; }
    SmallRational& operator*=(const SmallRational& o) { return *this = *this * o; }
    SmallRational& operator/=(const SmallRational& o) { return *this = *this / o; }

    friend bool operator==(const SmallRational& a, const SmallRational& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const SmallRational& a, const SmallRational& b)
    {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const SmallRational& a, const SmallRational& b) { return b < a; }
    friend bool operator<=(const SmallRational& a, const SmallRational& b) { return !(b < a); }
    friend bool operator>=(const SmallRational& a, const SmallRational& b) { return !(a < b); }

    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
    Rational to_mpq() const { return Rational(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_))); }

private:
    static SmallRational from128(__int128 n, __int128 d)
    {
        SmallRational r;
        r.assign(n, d);
        return r;
    }

    void assign(__int128 n, __int128 d)
    {
        if (d == 0)
            throw std::domain_error("zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            return;
        }
        if (d != 1) {
            __int128 a = n < 0 ? -n : n;
            __int128 b = d;
            while (b != 0) {
                __int128 t = a % b;
                a = b;
                b = t;
            }
            n /= a;
            d /= a;
        }
        if (n > INT64_MAX || n < -INT64_MAX || d > INT64_MAX)
            throw ArithmeticOverflow();
        num_ = static_cast<Int>(n);
        den_ = static_cast<Int>(d);
    }

    Int num_ = 0;
    Int den_ = 1;
};

inline int sign_of(const Rational& q) { return sgn(q); }
inline int sign_of(const SmallRational& q) { return q.sign(); }

}  // namespace hurwitz

#endif
