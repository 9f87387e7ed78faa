#include <doctest.h>

#include <vector>

#include "twistk/abelian.hpp"
#include "twistk/khorami.hpp"

using namespace twistk;
using namespace twistk::khorami;
using abelian::AbGroup;

namespace {

// Oracle: expand ((1+u)(1+v) - 1)^k as a bivariate coefficient grid by
// repeated polynomial multiplication and read off the (i, j) entry.
Int expanded_coefficient(int k, int i, int j)
{
    std::size_t w = static_cast<std::size_t>(k) + 2;
    std::vector<Int> acc(w * w, Int(0)), base(w * w, Int(0));
    acc[0] = 1;                // 1
    base[0 * w + 1] = 1;       // v
    base[1 * w + 0] = 1;       // u
    base[1 * w + 1] = 1;       // uv
    for (int step = 0; step < k; ++step) {
        std::vector<Int> next(w * w, Int(0));
        for (std::size_t a = 0; a < w; ++a)
            for (std::size_t b = 0; b < w; ++b) {
                if (acc[a * w + b] == 0)
                    continue;
                for (std::size_t c = 0; a + c < w; ++c)
                    for (std::size_t d = 0; b + d < w; ++d)
                        next[(a + c) * w + (b + d)] += acc[a * w + b] * base[c * w + d];
            }
        acc = std::move(next);
    }
    if (static_cast<std::size_t>(i) >= w || static_cast<std::size_t>(j) >= w)
        return 0;
    return acc[static_cast<std::size_t>(i) * w + static_cast<std::size_t>(j)];
}

}  // namespace

TEST_SUITE_BEGIN("khorami");

TEST_CASE("structure constants of the beta basis")
{
    CHECK(structure_constant(1, 1, 1) == 1);
    CHECK(structure_constant(2, 1, 1) == 2);  // beta_1^2 = beta_1 + 2 beta_2
    CHECK(structure_constant(0, 0, 0) == 1);
    for (int k = 1; k <= 8; ++k)
        CHECK(structure_constant(k, 0, 0) == 0);
    CHECK(structure_constant(3, 2, 2) == 6);
    CHECK(structure_constant(3, 2, 2) == expanded_coefficient(3, 2, 2));
}

TEST_CASE("structure constants match the polynomial-expansion oracle")
{
    for (int k = 0; k <= 10; ++k)
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j)
                CHECK(structure_constant(k, i, j) == expanded_coefficient(k, i, j));
}

TEST_CASE("support bounds and symmetry")
{
    for (int k = 0; k <= 12; ++k)
        for (int i = 0; i <= 12; ++i)
            for (int j = 0; j <= i; ++j) {
                Int c = structure_constant(k, i, j);
                CHECK(c == structure_constant(k, j, i));
                if (k < std::max(i, j) || k > i + j)
                    CHECK(c == 0);
            }
}

TEST_CASE("ring table agrees with the free function")
{
    TruncatedRing ring(10);
    for (int k = 0; k <= 10; ++k)
        for (int i = 0; i <= 10; ++i)
            for (int j = 0; j <= 10; ++j)
                CHECK(ring.constant(k, i, j) == structure_constant(k, i, j));
}

TEST_CASE("beta_0 is the unit and the truncated product is associative")
{
    TruncatedRing ring(16);
    for (int j = 0; j <= 16; ++j)
        CHECK(ring.multiply_basis(0, j) == RModuleElt::basis(ring, j));

    // associativity whenever no term is lost to truncation
    for (int a = 0; a <= 16; ++a)
        for (int b = 0; a + b <= 16; ++b)
            for (int c = 0; a + b + c <= 16; ++c) {
                RModuleElt left = ring.multiply_basis(a, b) * RModuleElt::basis(ring, c);
                RModuleElt right = RModuleElt::basis(ring, a) * ring.multiply_basis(b, c);
                CHECK(left == right);
            }
}

TEST_CASE("epsilon sends beta_0 and beta_1 to 1, the rest to 0")
{
    TruncatedRing ring(6);
    CHECK(epsilon(RModuleElt::basis(ring, 0)) == 1);
    CHECK(epsilon(RModuleElt::basis(ring, 1)) == 1);
    CHECK(epsilon(RModuleElt::basis(ring, 2)) == 0);
    RModuleElt v = RModuleElt::basis(ring, 1).scaled(3) + RModuleElt::basis(ring, 4).scaled(-1);
    CHECK(epsilon(v) == 3);
}

TEST_CASE("epsilon is a ring map")
{
    TruncatedRing ring(16);
    for (int i = 0; i <= 16; ++i)
        for (int j = 0; j <= 16; ++j) {
            Int lhs = epsilon(ring.multiply_basis(i, j));
            Int rhs = epsilon(RModuleElt::basis(ring, i)) * epsilon(RModuleElt::basis(ring, j));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("tensoring the cyclic module down to Z")
{
    CHECK(tensor_over_r(5, 16) == AbGroup::cyclic(5));
    CHECK(tensor_over_r(1, 16) == AbGroup::trivial());
    CHECK(tensor_over_r(12, 2) == AbGroup::cyclic(12));
    CHECK(tensor_over_r(12, 2) == tensor_over_r(12, 64));
    CHECK_THROWS_AS(tensor_over_r(5, 1), std::domain_error);
    CHECK_THROWS_AS(tensor_over_r(0, 16), std::domain_error);
}

TEST_CASE("tensor result does not depend on the truncation")
{
    TruncatedRing r2(2), r5(5), r16(16);
    for (Int h = 1; h <= 50; ++h) {
        AbGroup expected = AbGroup::cyclic(h);
        CHECK(tensor_over_r(h, r2) == expected);
        CHECK(tensor_over_r(h, r5) == expected);
        CHECK(tensor_over_r(h, r16) == expected);
    }
}

TEST_CASE("homology of the degree-h bundle over S^3")
{
    CHECK(serre_homology_ph(2, 4) == AbGroup::cyclic(4));
    CHECK(serre_homology_ph(3, 7) == AbGroup::trivial());
    CHECK(serre_homology_ph(5, 10) == AbGroup::cyclic(25));
    CHECK(serre_homology_ph(7, 0) == AbGroup::free(1));
    CHECK(serre_homology_ph(7, 1) == AbGroup::trivial());
    CHECK(serre_homology_ph(7, 2) == AbGroup::cyclic(7));
}

TEST_CASE("bundle homology matches the explicit two-column page")
{
    // Oracle: assemble each degree from the two-column first-quadrant page
    // with derivation transgression, through the generic homology machinery.
    using abelian::homology_pair;
    using abelian::IntMatrix;
    for (Int h = 1; h <= 12; ++h)
        for (int degree = 0; degree <= 24; ++degree) {
            AbGroup expected;
            if (degree % 2 == 0) {
                Int n = degree / 2;
                if (n == 0)
                    expected = AbGroup::free(1);
                else
                    expected = homology_pair(IntMatrix(0, 1), IntMatrix(1, 1, {n * h}));
            } else if (degree >= 3) {
                Int n = (degree - 1) / 2;
                expected = homology_pair(IntMatrix(1, 1, {n * h}), IntMatrix(1, 0));
            }
            CHECK(serre_homology_ph(h, degree) == expected);
        }
}

TEST_SUITE_END();
