#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace proxygames {

/// Exact rational scalar. Expression templates are off so the type composes
/// with Eigen's own expression machinery.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// A dense tensor over the joint action space, flattened row-major.
template <typename Scalar>
using Tensor = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Payoffs = Tensor<Rational>;

/// Parses "p/q", an integer, or a decimal string such as "-0.125" or "1.5e-3"
/// into an exact rational. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical text form: "n" for integers, "p/q" otherwise. Round-trips
/// through parse_rational.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace proxygames
