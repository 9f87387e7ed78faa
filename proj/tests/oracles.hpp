#pragma once

// Test-only oracles, independent of the library's reduction paths.

#include <algorithm>
#include <vector>

#include "twistk/abelian.hpp"
#include "twistk/arith.hpp"

namespace twistk::oracles {

/// SNF diagonal via determinantal divisors: d_k = D_k / D_{k-1} with D_k
/// the gcd of all k x k minors, enumerated by brute force.
inline std::vector<Int> minor_gcd_diagonal(const abelian::IntMatrix& m)
{
    using abelian::IntMatrix;
    std::size_t n = std::min(m.rows(), m.cols());
    std::vector<Int> diag(n, Int(0));
    Int prev = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Int dk = 0;
        std::vector<std::size_t> ri(k), ci(k);
        auto enumerate = [&](auto&& self, std::vector<std::size_t>& idx, std::size_t limit,
                             std::size_t pos, auto&& inner) -> void {
            if (pos == k) {
                inner();
                return;
            }
            std::size_t start = pos == 0 ? 0 : idx[pos - 1] + 1;
            for (std::size_t v = start; v + (k - pos - 1) < limit; ++v) {
                idx[pos] = v;
                self(self, idx, limit, pos + 1, inner);
            }
        };
        enumerate(enumerate, ri, m.rows(), 0, [&] {
            enumerate(enumerate, ci, m.cols(), 0, [&] {
                IntMatrix sub(k, k);
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = 0; b < k; ++b)
                        sub.at(a, b) = m.at(ri[a], ci[b]);
                dk = arith::gcd(dk, sub.determinant());
            });
        });
        if (dk == 0)
            break;  // rank < k; trailing diagonal stays 0
        diag[k - 1] = dk / prev;
        prev = dk;
    }
    return diag;
}

}  // namespace twistk::oracles
