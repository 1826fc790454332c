#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace deltagon {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

// Parses "p", "p/q", or "-p/q"; whitespace is not accepted.
Rat parse_rational(const std::string& s);

// "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& r);

RatVec rat_vec(std::initializer_list<Rat> xs);

// Scales a nonzero rational vector to the unique integer vector with
// coprime entries and the same orientation. Zero maps to zero.
RatVec primitive_integer(const RatVec& v);

bool is_integer_vector(const RatVec& v);

// gcd of the numerators of an integer vector (0 for the zero vector).
Int integer_content(const RatVec& v);

inline Rat dot(const RatVec& a, const RatVec& b) { return a.dot(b); }

int rank_of(const RatMat& m);

// Rows of the returned matrix span the null space of m (x with m*x = 0,
// x viewed as a column); empty (0 x cols) when m is injective.
RatMat kernel_rows(const RatMat& m);

// Reduced row-echelon basis of the row space of m.
RatMat row_space_basis(const RatMat& m);

// Solves a*x = b exactly; returns false when inconsistent.
bool solve_exact(const RatMat& a, const RatVec& b, RatVec& x);

}  // namespace deltagon
