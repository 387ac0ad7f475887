#include "hurwitz/arith.hpp"
#include "hurwitz/error.hpp"

#include <cctype>

namespace hurwitz {

IntVector primitive_integer(const RationalVector& v)
{
    Integer lcm = 1;
    for (const auto& q : v)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> scaled(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        scaled[i] = v[i].get_num() * (lcm / v[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled[i].get_mpz_t());
    }
    IntVector out(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        Integer x = g == 0 ? scaled[i] : Integer(scaled[i] / g);
        if (!x.fits_slong_p())
            throw ArithmeticOverflow();
        out[i] = x.get_si();
    }
    return out;
}

std::string to_string(const Rational& value)
{
    Rational q = value;
    q.canonicalize();
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text)
{
    auto valid_int = [](const std::string& s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+'))
            i = 1;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                return false;
        return true;
    };
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw Error(ErrorCode::InvalidArgument, "not a rational: '" + text + "'");
    if (num[0] == '+')
        num.erase(0, 1);
    Rational q{Integer(num), Integer(den)};
    if (q.get_den() == 0)
        throw Error(ErrorCode::InvalidArgument, "zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::BadConfig: return "BadConfig";
    case ErrorCode::DegenerateSimplex: return "DegenerateSimplex";
    case ErrorCode::VolumeMismatch: return "VolumeMismatch";
    case ErrorCode::OverlapNotFace: return "OverlapNotFace";
    case ErrorCode::UnsupportedFlip: return "UnsupportedFlip";
    case ErrorCode::DimensionUnsupported: return "DimensionUnsupported";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NonconstantSum: return "NonconstantSum";
    case ErrorCode::NonConvex: return "NonConvex";
    case ErrorCode::LinearityViolation: return "LinearityViolation";
    case ErrorCode::TriangulationMismatch: return "TriangulationMismatch";
    case ErrorCode::CheckpointCorrupt: return "CheckpointCorrupt";
    case ErrorCode::DigestMismatch: return "DigestMismatch";
    }
    return "Unknown";
}

}  // namespace hurwitz
