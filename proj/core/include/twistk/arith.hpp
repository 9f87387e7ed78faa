#pragma once

#include <utility>
#include <vector>

#include "twistk/int_types.hpp"

namespace twistk::arith {

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

/// Deterministic primality test: trial division for small inputs, a fixed
/// Miller-Rabin witness set beyond. Never accepts a composite.
bool is_prime(const Int& n);

/// nu_p(p, x): the exponent of the prime p in x, i.e. the unique e with
/// x = p^e * x', gcd(x', p) = 1. Rejects composite p and x = 0.
Int nu_p(const Int& p, const Int& x);

/// Maximal odd divisor of x >= 1.
Int odd_part(const Int& x);

/// lcm of the integer range {a, a+1, ..., b}, 1 <= a <= b.
Int lcm_range(const Int& a, const Int& b);

/// Binomial coefficient in the falling-factorial convention:
/// binom(n, k) = n(n-1)...(n-k+1) / k!, defined for every integer n and
/// k >= 0. In particular binom(-4, 2) = 10 and binom(n, 0) = 1.
Int binom(const Int& n, const Int& k);

/// Prime factorization of n >= 1 as (prime, exponent) pairs, primes
/// ascending. factorize(1) = {}.
std::vector<std::pair<Int, Int>> factorize(const Int& n);

/// p-part of x: p^{nu_p(p, x)}.
Int p_power_part(const Int& p, const Int& x);

}  // namespace twistk::arith
