#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace brauercat {

// Exact rational scalars. Arbitrary-precision integers throughout; stored in
// lowest terms with positive denominator (maintained by the backend).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Strict inverse of to_string. Throws SchemaError on malformed input or a
// zero denominator.
Rational rational_from_string(const std::string& s);

BigInt factorial(int n);
BigInt binomial(int n, int k);

int permutation_sign(const std::vector<int>& perm);

// All permutations of {0,...,r-1} in lexicographic order.
std::vector<std::vector<int>> all_permutations(int r);

// Sorts v ascending and returns the sign of the sorting permutation.
// Entries must be distinct.
int sort_with_sign(std::vector<int>& v);

}  // namespace brauercat
