#ifndef MST_BIGMATH_HPP_
#define MST_BIGMATH_HPP_

#include <boost/multiprecision/gmp.hpp>

namespace mst {

using BigInt = boost::multiprecision::mpz_int;
using BigRat = boost::multiprecision::mpq_rational;

BigInt binomial(long n, long k);

/// Smallest integer >= q.
BigInt ceil_rational(const BigRat &q);

/// Largest integer <= q.
BigInt floor_rational(const BigRat &q);

/// Exact rational from a double (every finite double is a dyadic rational).
BigRat rational_from_double(double x);

/// Rational parsed from a plain decimal string such as "0.1" or "3/7".
BigRat rational_from_string(const std::string &s);

/// log2 of a positive integer, rounded toward -inf as a double (exact enough
/// for the astronomically loose bound comparisons done in log space).
double log2_bigint(const BigInt &x);

double log2_bigrat(const BigRat &x);

BigInt pow_bigint(const BigInt &base, unsigned long e);

} // namespace mst

#endif
