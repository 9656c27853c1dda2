#include "mst/bigmath.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mst {

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    BigInt r;
    mpz_bin_uiui(r.backend().data(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt ceil_rational(const BigRat &q) {
    BigInt num = numerator(q), den = denominator(q);
    BigInt d = num / den;
    if (d * den < num)
        ++d;
    return d;
}

BigInt floor_rational(const BigRat &q) {
    BigInt num = numerator(q), den = denominator(q);
    BigInt d = num / den;
    if (d * den > num)
        --d;
    return d;
}

BigRat rational_from_double(double x) {
    if (!std::isfinite(x))
        throw std::invalid_argument("rational_from_double: non-finite value");
    BigRat r;
    mpq_set_d(r.backend().data(), x);
    return r;
}

BigRat rational_from_string(const std::string &s) {
    auto slash = s.find('/');
    if (slash != std::string::npos)
        return BigRat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    auto dot = s.find('.');
    if (dot == std::string::npos)
        return BigRat(BigInt(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    bool neg = false;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
        neg = digits[0] == '-';
        digits = digits.substr(1);
    }
    if (digits.empty())
        throw std::invalid_argument("rational_from_string: malformed number '" + s + "'");
    BigInt num(digits);
    BigInt den = pow_bigint(10, static_cast<unsigned long>(s.size() - dot - 1));
    BigRat r(num, den);
    return neg ? BigRat(-r) : r;
}

double log2_bigint(const BigInt &x) {
    if (x <= 0)
        throw std::invalid_argument("log2_bigint: argument must be positive");
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, x.backend().data());
    return std::log2(mant) + static_cast<double>(exp);
}

double log2_bigrat(const BigRat &x) {
    return log2_bigint(numerator(x)) - log2_bigint(denominator(x));
}

BigInt pow_bigint(const BigInt &base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.backend().data(), base.backend().data(), e);
    return r;
}

} // namespace mst
