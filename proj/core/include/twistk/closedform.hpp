#pragma once

#include <stdexcept>
#include <string>

#include "twistk/abelian.hpp"
#include "twistk/int_types.hpp"

namespace twistk {

/// Input outside the range this library computes (e.g. so5 with 4 | h).
struct out_of_scope : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace closedform {

enum class Family { A, B, C, D, G2, F4, E6, E7, E8, SO5 };

/// A compact simple Lie group admitted by the computation: one of the
/// classical families with its rank parameter, an exceptional group, or
/// SO(5) (the only non-simply-connected entry).
struct GroupId {
    Family family;
    int rank_param = 0;  // the n of A_n/B_n/C_n/D_n; ignored otherwise

    GroupId(Family f, int n = 0);

    /// Lie rank of the group.
    int rank() const;
    bool simply_connected() const { return family != Family::SO5; }
    std::string name() const;

    bool operator==(const GroupId&) const = default;
};

/// Parses names like su3, sp2, spin7, g2, e8, so5. Throws
/// std::invalid_argument on unknown names, std::domain_error /
/// out_of_scope on groups outside the computable range.
GroupId parse_group(const std::string& name);

enum class Route { braun, douglas, segal, khorami };
std::string route_name(Route r);

/// Twisted K-groups of one group at twist h, by parity of degree,
/// tagged with the route that produced them.
struct KResult {
    abelian::AbGroup even;
    abelian::AbGroup odd;
    Route route;
    GroupId group;
    Int h;
};

/// The divisor y(G) entering c(G, h) = h / gcd(h, y(G)). Computed from lcm
/// expressions for the classical families; a fixed constant for the
/// exceptional groups. Not defined for SO(5).
Int braun_y(const GroupId& g);

/// c(G, h) = h / gcd(h, y(G)): the order of the cyclic torsion group in
/// each degree of the twisted K-theory of a simply connected G.
Int braun_c(const GroupId& g, const Int& h);

/// gcd( binom(h+i, i) - 1 : 1 <= i <= n ), the SU(n+1) torsion order.
Int douglas_su(int n, const Int& h);

/// gcd over 1 <= i <= n of sum_{j=-h}^{-1} binom(2j + 2(i-1), 2(i-1)),
/// the Sp(n) torsion order.
Int douglas_sp(int n, const Int& h);

/// Incremental evaluator for douglas_sp(n, h) along h = first_h, first_h+1,
/// ...; each step extends the inner series by its one new term.
class DouglasSpSweep {
public:
    explicit DouglasSpSweep(int n, const Int& first_h = 1);
    /// Returns douglas_sp(n, h) for the next h (first call: h = first_h).
    Int next();

private:
    int n_;
    Int h_ = 0;
    std::vector<Int> partial_sums_;
};

/// gcd(h, 2*binom(h,3) + binom(h,2)): the trinomial form of the Sp(2)
/// torsion order.
Int douglas_sp2_closed(const Int& h);

/// gcd(h, binom(h+2,2) - 1, (h+1)(h+2)(2h+3)(3h+4)(3h+5)/120 - 1): the G2
/// torsion order. The division by 120 is checked exact.
Int douglas_g2(const Int& h);

/// Twisted K-groups of SO(5) = PSp(2) for h odd or h = 2 mod 4:
/// Z/(h/gcd(h,3)) per parity when h is odd, and
/// (Z/2)^4 + Z/(odd_part(h)/gcd(h,3)) per parity when h = 2 mod 4.
/// Rejects 4 | h (out_of_scope).
KResult so5_k(const Int& h);

/// Full twisted K-groups of a simply connected group of rank n: each parity
/// carries 2^(n-2) copies of Z/c(G,h) for n >= 2; for n = 1 the even part
/// is Z/h and the odd part vanishes.
KResult assemble_full(const GroupId& g, const Int& h);

}  // namespace closedform
}  // namespace twistk
