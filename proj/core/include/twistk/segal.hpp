#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "twistk/abelian.hpp"
#include "twistk/closedform.hpp"
#include "twistk/int_types.hpp"

namespace twistk::segal {

/// A differential rule asked to kill more than its source or target holds.
struct inconsistent_rule : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Image orders of the composite pi_j(S^3) -> K_j(S^3, h) for j in
/// {4, 6, 10}: per prime q a capped power q^min(nu_q(h), cap). These are
/// the data that drive every catalog differential.
struct HurewiczTable {
    struct Entry {
        int j;
        std::vector<std::pair<Int, int>> prime_caps;  // (q, cap)
    };
    std::vector<Entry> entries;

    static const HurewiczTable& standard();
    /// Image order at one prime: q^min(nu, cap), 1 for primes off the row.
    Int image_order(int j, const Int& p, const Int& nu_p_h) const;
};

/// Order of the image of pi_j(S^3) -> K_j(S^3, h), j in {4, 6, 10}.
/// The 2-part at j = 6 is capped at 2: any larger cap would force the
/// Sp(2) order at h = 4 to 1, contradicting gcd(4, 34) = 2.
Int hurewicz_image(int j, const Int& h);

/// One multiplicative factor of a differential's image order, evaluated
/// p-locally at (h, p). Serializable.
struct ImageFactor {
    enum class Kind { prime_cap, prime_step, h_over_gcd, gcd_ratio };
    Kind kind;
    Int prime;         // prime_cap / prime_step
    int cap = 0;       // prime_cap:  prime^min(nu_prime(h), cap)
    int threshold = 0; // prime_step: prime^exp if nu_prime(h) >= threshold
    int exp = 0;
    Int m = 1;         // h_over_gcd: p-part of h / gcd(h, m)
    Int num = 1;       // gcd_ratio:  p-part of gcd(h, num) / gcd(h, den)
    Int den = 1;

    Int eval(const Int& h, const Int& p) const;

    static ImageFactor make_prime_cap(Int prime, int cap);
    static ImageFactor make_prime_step(Int prime, int threshold, int exp);
    static ImageFactor make_h_over_gcd(Int m);
    static ImageFactor make_gcd_ratio(Int num, Int den);
};

using ImageOrderExpr = std::vector<ImageFactor>;

Int eval_image_order(const ImageOrderExpr& expr, const Int& h, const Int& p);

/// d^page : (source_col, q) -> (source_col - page, q + page - 1), applied
/// on the fiber-degree row of the stated parity with the stated image
/// order. Sources and targets must be cyclic.
struct DifferentialRule {
    int page;
    int source_col;
    int fiber_parity;  // 0 = even fiber degree, 1 = odd
    ImageOrderExpr image;
};

/// Twisted K-theory of the fiber, per parity: cyclic of order
/// h / gcd(h, order_divisor) in even degrees, and the same in odd degrees
/// when both_parities is set (zero otherwise).
struct FiberK {
    bool both_parities = false;
    Int order_divisor = 1;

    Int order(const Int& h) const;
};

/// A catalog entry: the base's integral homology, the fiber's twisted
/// K-groups, and the differential rules. The twist must restrict
/// isomorphically to the fiber for the engine to apply.
struct FibrationSpec {
    std::string name;
    std::vector<abelian::AbGroup> base_homology;  // degree 0 .. dim(base)
    FiberK fiber;
    bool twist_restricts_isomorphically = true;
    std::vector<DifferentialRule> rules;

    void validate() const;

    std::string to_json() const;
    static FibrationSpec from_json(const std::string& text);
};

/// H_p(B, Z/m) expanded by universal coefficients:
/// entry p = (H_p tensor Z/m) + Tor(H_{p-1}, Z/m). One degree longer than
/// the input to carry the top Tor term.
std::vector<abelian::AbGroup> coefficient_row(const std::vector<abelian::AbGroup>& base_homology,
                                              const Int& m);

/// A bigraded page localized at one prime: (column, fiber-degree parity)
/// -> finite abelian group, 2-periodic in the fiber degree.
class SSState {
public:
    SSState(Int prime, std::size_t columns);

    const Int& prime() const { return prime_; }
    int page() const { return page_; }
    void set_page(int r) { page_ = r; }
    std::size_t columns() const { return grid_.size(); }

    abelian::AbGroup& entry(std::size_t col, int parity);
    const abelian::AbGroup& entry(std::size_t col, int parity) const;

    /// Product of entry orders along one total-degree parity.
    Int total_order(int total_parity) const;

    /// Count of nontrivial entries along one total-degree parity.
    std::size_t count_nontrivial(int total_parity) const;

private:
    Int prime_;
    int page_ = 2;
    std::vector<std::array<abelian::AbGroup, 2>> grid_;
};

/// Runs the spectral sequence to its stable page, localized at p: seeds the
/// starting page from coefficient_row, then applies each rule in increasing
/// page order, replacing the source by the kernel (order / image) and the
/// target by the cokernel. Trivial output when p does not divide h.
SSState run(const FibrationSpec& spec, const Int& h, const Int& p);

/// Stable-page order per total-degree parity, multiplied over all primes
/// dividing h: (even, odd).
std::pair<Int, Int> parity_orders(const FibrationSpec& spec, const Int& h);

/// The built-in fibrations: su3 (over S^5), sp2 (over S^7), g2/v72,
/// g2/s6, so5 (over RP^7).
const std::vector<FibrationSpec>& catalog();
const FibrationSpec& catalog_entry(const std::string& name);

/// Twisted K-groups assembled from stable-page orders: cyclic per parity
/// for the simply connected entries, (Z/2)^k + Z/odd for so5. Accepts
/// su3, sp2, g2 (via the v72 route) and so5; so5 rejects 4 | h.
closedform::KResult k_orders(const closedform::GroupId& group, const Int& h);

/// Same assembly but against a caller-supplied fibration (e.g. a catalog
/// loaded from JSON, or the alternate g2/s6 route).
closedform::KResult k_orders_via(const FibrationSpec& spec,
                                 const closedform::GroupId& group, const Int& h);

}  // namespace twistk::segal
