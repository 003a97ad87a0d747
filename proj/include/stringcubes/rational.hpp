/**
 * Shared exact-arithmetic types: arbitrary-precision rationals and integers,
 * Eigen vector/matrix aliases over them, and fraction string parsing.
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace stringcubes {

using Rational = boost::multiprecision::mpq_rational;
using Integer  = boost::multiprecision::mpz_int;

using MatrixXr = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXr = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using MatrixXz = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXz = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;

/** Thrown when an enumeration exceeds its configured candidate cap. */
class ResourceLimitError : public std::runtime_error
{
  public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/** Format a rational as "p" when integral, else "p/q" with q > 0. */
std::string to_fraction_string(const Rational& q);

/** Parse "p" or "p/q" (optional sign, q > 0). Throws std::invalid_argument. */
Rational rational_from_string(const std::string& s);

bool is_integral(const Rational& q);
Integer floor_int(const Rational& q);
Integer ceil_int(const Rational& q);

/** Lexicographic comparison, used everywhere a deterministic order is needed. */
bool lex_less(const VectorXr& a, const VectorXr& b);

}  // namespace stringcubes
