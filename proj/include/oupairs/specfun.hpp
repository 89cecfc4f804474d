#ifndef OUPAIRS_SPECFUN_HPP
#define OUPAIRS_SPECFUN_HPP

/**
 * @file specfun.hpp
 * @brief Gamma-family functions on the positive real axis.
 *
 * All functions are pure and reentrant. Arguments must be positive and
 * finite; anything else raises DomainError.
 */

namespace oupairs::specfun {

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

/// ln Gamma(x) for x > 0. Relative error below 1e-12 on [0.5, 500].
double log_gamma(double x);

/// Digamma psi(x) = d/dx ln Gamma(x) for x > 0. Absolute error below 1e-12 on [0.5, 500].
double digamma(double x);

/**
 * @brief psi(n + 1/2) for integer n >= 0 via the closed recurrence
 *
 *   psi(n + 1/2) = -gamma - 2 ln 2 + 2 * sum_{k=1..n} 1/(2k - 1).
 */
double digamma_half_integer(int n);

}  // namespace oupairs::specfun

#endif  // OUPAIRS_SPECFUN_HPP
