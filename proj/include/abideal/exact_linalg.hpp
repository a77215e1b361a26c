#pragma once

#include <optional>
#include <vector>

#include <boost/rational.hpp>

namespace abideal {

using Rational = boost::rational<long long>;
using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix to_rational(const std::vector<std::vector<int>>& m);

/// Rank over Q by Gaussian elimination.
int matrix_rank(RationalMatrix m);

/// Solves m * x = rhs; returns nullopt if inconsistent. Free variables are
/// set to zero.
std::optional<std::vector<Rational>> solve_linear(RationalMatrix m, std::vector<Rational> rhs);

/// Inverse of a square matrix over Q, or nullopt if singular.
std::optional<RationalMatrix> invert(RationalMatrix m);

}  // namespace abideal
