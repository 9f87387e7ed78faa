#pragma once

#include <vector>

#include "twistk/abelian.hpp"
#include "twistk/int_types.hpp"

namespace twistk::khorami {

/// Coefficient of u^i v^j in ((1+u)(1+v) - 1)^k: the structure constant
/// c^k_{ij} of the Pontryagin product on the beta-basis of K_0(CP^infty),
/// beta_j dual to (gamma - 1)^j. Symmetric in i, j; zero unless
/// max(i,j) <= k <= i+j.
Int structure_constant(int k, int i, int j);

class TruncatedRing;

/// An element of the truncated ring / of the module R/(h beta_1), stored as
/// the coefficient vector over beta_0..beta_N.
class RModuleElt {
public:
    RModuleElt(const TruncatedRing& ring, std::vector<Int> coeffs);

    static RModuleElt basis(const TruncatedRing& ring, int j);

    const std::vector<Int>& coeffs() const { return coeffs_; }
    const TruncatedRing& ring() const { return *ring_; }

    RModuleElt operator+(const RModuleElt& rhs) const;
    RModuleElt operator*(const RModuleElt& rhs) const;
    RModuleElt scaled(const Int& c) const;
    bool operator==(const RModuleElt& rhs) const { return coeffs_ == rhs.coeffs_; }

private:
    const TruncatedRing* ring_;
    std::vector<Int> coeffs_;
};

/// The Pontryagin ring truncated at beta_N. The beta_k with k > N span an
/// ideal (products only raise indices), so this is a genuine quotient ring,
/// not an approximation. Immutable after construction.
class TruncatedRing {
public:
    explicit TruncatedRing(int truncation);

    int truncation() const { return n_; }

    /// c^k_{ij} from the precomputed table; indices must be <= N.
    const Int& constant(int k, int i, int j) const;

    RModuleElt unit() const { return RModuleElt::basis(*this, 0); }
    RModuleElt multiply_basis(int i, int j) const;

private:
    int n_;
    std::vector<Int> table_;  // (N+1)^3 entries, k-major
};

/// The augmentation R -> Z sending beta_0, beta_1 to 1 and beta_j to 0 for
/// j > 1; this is the ring map making Z an R-module.
Int epsilon(const RModuleElt& v);

/// R/(h beta_1) tensor_R Z, computed as Z modulo the relation set
/// { epsilon(h beta_1 beta_j) : 0 <= j <= N }. Requires N >= 2.
abelian::AbGroup tensor_over_r(const Int& h, const TruncatedRing& ring);
abelian::AbGroup tensor_over_r(const Int& h, int truncation);

/// Integral homology of the principal CP^infty-bundle over S^3 of degree h,
/// from the two-column page whose transgression acts as a derivation:
/// Z in degree 0, Z/(n h) in degree 2n, 0 in odd degrees. The degree-2n
/// group is produced as the cokernel of the 1x1 presentation the derivation
/// rule yields, not read off a formula.
abelian::AbGroup serre_homology_ph(const Int& h, int degree);

}  // namespace twistk::khorami
