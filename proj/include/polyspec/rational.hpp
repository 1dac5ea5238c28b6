#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace polyspec {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts optionally signed integers and fraction strings like "3/2" or
// "-7/3". Anything else (including decimal points) is rejected; decimal
// inputs arrive as JSON numbers and are converted from their exact binary
// value instead.
Rational parse_rational(const std::string& text);

// Exact conversion; every finite double is a rational.
Rational rational_from_double(double x);

double rational_to_double(const Rational& q);

// Square matrix over Q. Row-major storage.
struct RationalMatrix {
    int n = 0;
    std::vector<Rational> a;

    static RationalMatrix identity(int n);
    Rational& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const Rational& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

RationalMatrix multiply(const RationalMatrix& x, const RationalMatrix& y);
Rational determinant(const RationalMatrix& x);
// Gauss-Jordan over Q; throws NumericError on a singular input.
RationalMatrix exact_inverse(const RationalMatrix& x);

// Canonical dedup key: entries in lowest terms, ';'-joined. Two factor lists
// get the same key exactly when they are equal entrywise.
std::string canonical_key(const std::vector<RationalMatrix>& factors);

}  // namespace polyspec
