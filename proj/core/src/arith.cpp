#include "twistk/arith.hpp"

#include <boost/multiprecision/integer.hpp>

#include <stdexcept>

namespace twistk::arith {

namespace mp = boost::multiprecision;

Int gcd(const Int& a, const Int& b) { return mp::gcd(a, b); }

Int lcm(const Int& a, const Int& b) { return mp::lcm(a, b); }

namespace {

Int powmod(Int base, Int exp, const Int& mod)
{
    Int result = 1;
    base %= mod;
    while (exp > 0) {
        if (mp::bit_test(exp, 0))
            result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

bool miller_rabin_witness(const Int& n, const Int& a)
{
    // returns true if a proves n composite
    Int d = n - 1;
    unsigned r = 0;
    while (!mp::bit_test(d, 0)) {
        d >>= 1;
        ++r;
    }
    Int x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
        return false;
    for (unsigned i = 1; i < r; ++i) {
        x = x * x % n;
        if (x == n - 1)
            return false;
    }
    return true;
}

constexpr long kTrialLimit = 1000000;

}  // namespace

bool is_prime(const Int& n)
{
    if (n < 2)
        return false;
    if (n < 4)
        return true;
    if (!mp::bit_test(n, 0))
        return false;
    if (n <= kTrialLimit) {
        for (Int d = 3; d * d <= n; d += 2)
            if (n % d == 0)
                return false;
        return true;
    }
    for (long a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == a)
            return true;
        if (n % a == 0)
            return false;
        if (miller_rabin_witness(n, Int(a)))
            return false;
    }
    return true;
}

Int nu_p(const Int& p, const Int& x)
{
    if (p < 2)
        throw std::domain_error("nu_p: p must be at least 2");
    if (!is_prime(p))
        throw std::domain_error("nu_p: p must be prime");
    if (x < 1)
        throw std::domain_error("nu_p: x must be positive");
    Int e = 0;
    Int y = x;
    while (y % p == 0) {
        y /= p;
        ++e;
    }
    return e;
}

Int odd_part(const Int& x)
{
    if (x < 1)
        throw std::domain_error("odd_part: x must be positive");
    Int y = x;
    while (!mp::bit_test(y, 0))
        y >>= 1;
    return y;
}

Int lcm_range(const Int& a, const Int& b)
{
    if (a < 1 || a > b)
        throw std::domain_error("lcm_range: requires 1 <= a <= b");
    Int acc = 1;
    for (Int k = a; k <= b; ++k)
        acc = lcm(acc, k);
    return acc;
}

Int binom(const Int& n, const Int& k)
{
    if (k < 0)
        throw std::domain_error("binom: k must be nonnegative");
    Int r = 1;
    // Each partial product n(n-1)...(n-t) / (t+1)! is itself a binomial
    // coefficient, so every division below is exact.
    for (Int t = 0; t < k; ++t) {
        r *= n - t;
        r /= t + 1;
    }
    return r;
}

std::vector<std::pair<Int, Int>> factorize(const Int& n)
{
    if (n < 1)
        throw std::domain_error("factorize: n must be positive");
    std::vector<std::pair<Int, Int>> out;
    Int m = n;
    auto strip = [&](const Int& p) {
        Int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e > 0)
            out.emplace_back(p, e);
    };
    strip(2);
    for (Int d = 3; d * d <= m && d <= kTrialLimit; d += 2)
        strip(d);
    if (m > 1) {
        if (!is_prime(m))
            throw std::domain_error("factorize: residual cofactor exceeds the trial-division range");
        out.emplace_back(m, 1);
    }
    return out;
}

Int p_power_part(const Int& p, const Int& x)
{
    Int r = 1;
    Int e = nu_p(p, x);
    for (Int i = 0; i < e; ++i)
        r *= p;
    return r;
}

}  // namespace twistk::arith
