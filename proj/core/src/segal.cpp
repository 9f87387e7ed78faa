#include "twistk/segal.hpp"

#include <algorithm>

#include <json.hpp>

#include "json_util.hpp"
#include "twistk/arith.hpp"

namespace twistk::segal {

using abelian::AbGroup;
using closedform::Family;
using closedform::GroupId;
using closedform::KResult;
using closedform::Route;

namespace {

Int ipow(const Int& base, const Int& exp)
{
    Int r = 1;
    for (Int i = 0; i < exp; ++i)
        r *= base;
    return r;
}

}  // namespace

const HurewiczTable& HurewiczTable::standard()
{
    static const HurewiczTable table{{
        {4, {{2, 1}}},
        {6, {{2, 1}, {3, 1}}},
        {10, {{3, 1}, {5, 1}}},
    }};
    return table;
}

Int HurewiczTable::image_order(int j, const Int& p, const Int& nu_p_h) const
{
    for (const Entry& e : entries) {
        if (e.j != j)
            continue;
        for (const auto& [q, cap] : e.prime_caps)
            if (q == p)
                return ipow(p, std::min(nu_p_h, Int(cap)));
        return 1;
    }
    throw std::domain_error("HurewiczTable: no row for j = " + std::to_string(j));
}

Int hurewicz_image(int j, const Int& h)
{
    if (h < 1)
        throw std::domain_error("hurewicz_image: h must be positive");
    const HurewiczTable& table = HurewiczTable::standard();
    for (const auto& e : table.entries) {
        if (e.j != j)
            continue;
        Int r = 1;
        for (const auto& [q, cap] : e.prime_caps)
            r *= ipow(q, std::min(arith::nu_p(q, h), Int(cap)));
        return r;
    }
    throw std::domain_error("hurewicz_image: j must be one of 4, 6, 10");
}

ImageFactor ImageFactor::make_prime_cap(Int prime, int cap)
{
    ImageFactor f;
    f.kind = Kind::prime_cap;
    f.prime = std::move(prime);
    f.cap = cap;
    return f;
}

ImageFactor ImageFactor::make_prime_step(Int prime, int threshold, int exp)
{
    ImageFactor f;
    f.kind = Kind::prime_step;
    f.prime = std::move(prime);
    f.threshold = threshold;
    f.exp = exp;
    return f;
}

ImageFactor ImageFactor::make_h_over_gcd(Int m)
{
    ImageFactor f;
    f.kind = Kind::h_over_gcd;
    f.m = std::move(m);
    return f;
}

ImageFactor ImageFactor::make_gcd_ratio(Int num, Int den)
{
    ImageFactor f;
    f.kind = Kind::gcd_ratio;
    f.num = std::move(num);
    f.den = std::move(den);
    return f;
}

Int ImageFactor::eval(const Int& h, const Int& p) const
{
    const Int nu_h = arith::nu_p(p, h);
    switch (kind) {
    case Kind::prime_cap:
        if (prime != p)
            return 1;
        return ipow(p, std::min(nu_h, Int(cap)));
    case Kind::prime_step:
        if (prime != p)
            return 1;
        return nu_h >= threshold ? ipow(p, Int(exp)) : Int(1);
    case Kind::h_over_gcd:
        return ipow(p, nu_h - std::min(nu_h, arith::nu_p(p, m)));
    case Kind::gcd_ratio: {
        Int e = std::min(nu_h, arith::nu_p(p, num)) - std::min(nu_h, arith::nu_p(p, den));
        if (e < 0)
            throw inconsistent_rule("gcd_ratio image order is not an integer at p = " + p.str());
        return ipow(p, e);
    }
    }
    throw std::logic_error("unreachable");
}

Int eval_image_order(const ImageOrderExpr& expr, const Int& h, const Int& p)
{
    Int r = 1;
    for (const ImageFactor& f : expr)
        r *= f.eval(h, p);
    return r;
}

Int FiberK::order(const Int& h) const
{
    return h / arith::gcd(h, order_divisor);
}

void FibrationSpec::validate() const
{
    if (!twist_restricts_isomorphically)
        throw std::domain_error(name + ": twist must restrict isomorphically to the fiber");
    if (base_homology.empty() || base_homology.front() != AbGroup::free(1))
        throw std::domain_error(name + ": base homology must start with Z in degree 0");
    if (fiber.order_divisor < 1)
        throw std::domain_error(name + ": fiber order divisor must be positive");
    const int max_col = static_cast<int>(base_homology.size());
    for (const DifferentialRule& r : rules) {
        if (r.page < 2)
            throw std::domain_error(name + ": differential page must be >= 2");
        if (r.source_col < r.page || r.source_col > max_col)
            throw std::domain_error(name + ": rule source column out of range");
        if (r.fiber_parity != 0 && r.fiber_parity != 1)
            throw std::domain_error(name + ": fiber parity must be 0 or 1");
    }
}

std::vector<AbGroup> coefficient_row(const std::vector<AbGroup>& base_homology, const Int& m)
{
    if (m < 1)
        throw std::domain_error("coefficient_row: m must be positive");
    std::vector<AbGroup> row(base_homology.size() + 1);
    for (std::size_t p = 0; p < row.size(); ++p) {
        AbGroup entry;
        if (p < base_homology.size())
            entry = tensor_cyclic(base_homology[p], m);
        if (p >= 1)
            entry = direct_sum(entry, tor_cyclic(base_homology[p - 1], m));
        row[p] = entry;
    }
    return row;
}

SSState::SSState(Int prime, std::size_t columns) : prime_(std::move(prime)), grid_(columns) {}

AbGroup& SSState::entry(std::size_t col, int parity)
{
    return grid_.at(col)[static_cast<std::size_t>(parity)];
}

const AbGroup& SSState::entry(std::size_t col, int parity) const
{
    return grid_.at(col)[static_cast<std::size_t>(parity)];
}

Int SSState::total_order(int total_parity) const
{
    Int r = 1;
    for (std::size_t col = 0; col < grid_.size(); ++col)
        for (int q = 0; q < 2; ++q)
            if ((col + static_cast<std::size_t>(q)) % 2 == static_cast<std::size_t>(total_parity))
                r *= grid_[col][static_cast<std::size_t>(q)].torsion_order();
    return r;
}

std::size_t SSState::count_nontrivial(int total_parity) const
{
    std::size_t n = 0;
    for (std::size_t col = 0; col < grid_.size(); ++col)
        for (int q = 0; q < 2; ++q)
            if ((col + static_cast<std::size_t>(q)) % 2 == static_cast<std::size_t>(total_parity)
                && !grid_[col][static_cast<std::size_t>(q)].is_trivial())
                ++n;
    return n;
}

SSState run(const FibrationSpec& spec, const Int& h, const Int& p)
{
    spec.validate();
    if (h < 1)
        throw std::domain_error("run: h must be positive");
    if (!arith::is_prime(p))
        throw std::domain_error("run: p must be prime");

    SSState state(p, spec.base_homology.size() + 1);
    const Int fiber_order = spec.fiber.order(h);
    std::vector<AbGroup> row = coefficient_row(spec.base_homology, fiber_order);
    for (std::size_t col = 0; col < state.columns(); ++col) {
        state.entry(col, 0) = abelian::p_part(row[col], p);
        if (spec.fiber.both_parities)
            state.entry(col, 1) = state.entry(col, 0);
    }

    std::vector<DifferentialRule> rules = spec.rules;
    std::stable_sort(rules.begin(), rules.end(),
                     [](const DifferentialRule& a, const DifferentialRule& b) { return a.page < b.page; });

    for (const DifferentialRule& rule : rules) {
        state.set_page(rule.page);
        Int image = eval_image_order(rule.image, h, p);
        if (image == 1)
            continue;
        AbGroup& src = state.entry(static_cast<std::size_t>(rule.source_col), rule.fiber_parity);
        const int target_parity = (rule.fiber_parity + rule.page - 1) % 2;
        AbGroup& tgt = state.entry(static_cast<std::size_t>(rule.source_col - rule.page), target_parity);
        if (!src.is_cyclic() || !tgt.is_cyclic())
            throw std::logic_error(spec.name + ": differential endpoints are not cyclic");
        Int so = src.torsion_order();
        Int to = tgt.torsion_order();
        if (so % image != 0 || to % image != 0)
            throw inconsistent_rule(spec.name + ": image order " + image.str()
                                    + " does not divide source " + so.str() + " and target "
                                    + to.str());
        src = AbGroup::cyclic(so / image);
        tgt = AbGroup::cyclic(to / image);
    }
    state.set_page(rules.empty() ? 2 : rules.back().page + 1);
    return state;
}

std::pair<Int, Int> parity_orders(const FibrationSpec& spec, const Int& h)
{
    Int even = 1, odd = 1;
    for (const auto& [p, e] : arith::factorize(h)) {
        SSState st = run(spec, h, p);
        even *= st.total_order(0);
        odd *= st.total_order(1);
    }
    return {even, odd};
}

namespace {

std::vector<AbGroup> sphere_homology(std::size_t dim)
{
    std::vector<AbGroup> h(dim + 1);
    h[0] = AbGroup::free(1);
    h[dim] = AbGroup::free(1);
    return h;
}

ImageOrderExpr hurewicz_expr(int j)
{
    ImageOrderExpr expr;
    for (const auto& e : HurewiczTable::standard().entries)
        if (e.j == j)
            for (const auto& [q, cap] : e.prime_caps)
                expr.push_back(ImageFactor::make_prime_cap(q, cap));
    return expr;
}

std::vector<FibrationSpec> build_catalog()
{
    std::vector<FibrationSpec> specs;

    // su2 = S^3 -> su3 -> S^5; one d^5 with the j = 4 image
    specs.push_back(FibrationSpec{
        "su3",
        sphere_homology(5),
        FiberK{false, 1},
        true,
        {DifferentialRule{5, 5, 0, hurewicz_expr(4)}},
    });

    // sp1 -> sp2 -> S^7; one d^7 with the j = 6 image
    specs.push_back(FibrationSpec{
        "sp2",
        sphere_homology(7),
        FiberK{false, 1},
        true,
        {DifferentialRule{7, 7, 0, hurewicz_expr(6)}},
    });

    // su2 -> g2 -> V_{7,2}; the Stiefel base has a single Z/2 in degree 5
    // below the top cell. The two d^5s share the j = 4 image (the top-cell
    // one is tied to the first by the exterior-algebra module action); the
    // d^11 image combines the j = 10 data with an extra 2 once nu_2(h) >= 2.
    std::vector<AbGroup> v72(12);
    v72[0] = AbGroup::free(1);
    v72[5] = AbGroup::cyclic(2);
    v72[11] = AbGroup::free(1);
    specs.push_back(FibrationSpec{
        "g2/v72",
        std::move(v72),
        FiberK{false, 1},
        true,
        {
            DifferentialRule{5, 5, 0, hurewicz_expr(4)},
            DifferentialRule{5, 11, 0, hurewicz_expr(4)},
            DifferentialRule{11, 11, 0,
                             {ImageFactor::make_prime_cap(3, 1), ImageFactor::make_prime_cap(5, 1),
                              ImageFactor::make_prime_step(2, 2, 1)}},
        },
    });

    // su3 -> g2 -> S^6 (unit imaginary octonions). The fiber carries K in
    // both parities, so d^6 acts on each fiber row. The boundary
    // pi_6(S^6) -> pi_5(su3) is an isomorphism and the generator's image
    // fills K_5(su3, h), so the even-row d^6 is onto; the odd-row image is
    // the gcd(h,60)/gcd(h,2) datum.
    specs.push_back(FibrationSpec{
        "g2/s6",
        sphere_homology(6),
        FiberK{true, 2},
        true,
        {
            DifferentialRule{6, 6, 0, {ImageFactor::make_h_over_gcd(2)}},
            DifferentialRule{6, 6, 1, {ImageFactor::make_gcd_ratio(60, 2)}},
        },
    });

    // S^3 -> so5 -> RP^7. Odd-locally the transfer to sp2 forces the j = 6
    // odd image; 2-locally the sequence collapses (all torsion has order 2).
    std::vector<AbGroup> rp7(8);
    rp7[0] = AbGroup::free(1);
    rp7[1] = AbGroup::cyclic(2);
    rp7[3] = AbGroup::cyclic(2);
    rp7[5] = AbGroup::cyclic(2);
    rp7[7] = AbGroup::free(1);
    specs.push_back(FibrationSpec{
        "so5",
        std::move(rp7),
        FiberK{false, 1},
        true,
        {DifferentialRule{7, 7, 0, {ImageFactor::make_prime_cap(3, 1)}}},
    });

    for (const auto& s : specs)
        s.validate();
    return specs;
}

}  // namespace

const std::vector<FibrationSpec>& catalog()
{
    static const std::vector<FibrationSpec> specs = build_catalog();
    return specs;
}

const FibrationSpec& catalog_entry(const std::string& name)
{
    for (const FibrationSpec& s : catalog())
        if (s.name == name)
            return s;
    throw std::invalid_argument("no catalog entry named " + name);
}

KResult k_orders_via(const FibrationSpec& spec, const GroupId& group, const Int& h)
{
    if (h < 1)
        throw std::domain_error("k_orders: h must be positive");

    if (group.family == Family::SO5) {
        if (h % 4 == 0)
            throw out_of_scope("so5 with 4 | h is not computed");
        std::size_t k_even = 0, k_odd = 0;
        Int odd_even = 1, odd_odd = 1;
        for (const auto& [p, e] : arith::factorize(h)) {
            SSState st = run(spec, h, p);
            if (p == 2) {
                for (std::size_t col = 0; col < st.columns(); ++col)
                    for (int q = 0; q < 2; ++q) {
                        const AbGroup& g = st.entry(col, q);
                        if (!g.is_trivial() && g != AbGroup::cyclic(2))
                            throw std::logic_error("so5: 2-local stable entry of order > 2");
                    }
                k_even = st.count_nontrivial(0);
                k_odd = st.count_nontrivial(1);
            } else {
                odd_even *= st.total_order(0);
                odd_odd *= st.total_order(1);
            }
        }
        auto shape = [](std::size_t k, const Int& odd) {
            std::vector<Int> orders(k, Int(2));
            orders.push_back(odd);
            return AbGroup::from_cyclic_orders(0, std::move(orders));
        };
        return KResult{shape(k_even, odd_even), shape(k_odd, odd_odd), Route::segal, group, h};
    }

    auto [even, odd] = parity_orders(spec, h);
    // cyclicity per parity is the structural shape for these groups
    return KResult{AbGroup::cyclic(even), AbGroup::cyclic(odd), Route::segal, group, h};
}

KResult k_orders(const GroupId& group, const Int& h)
{
    if (group.family == Family::A && group.rank_param == 2)
        return k_orders_via(catalog_entry("su3"), group, h);
    if (group.family == Family::C && group.rank_param == 2)
        return k_orders_via(catalog_entry("sp2"), group, h);
    if (group.family == Family::G2)
        return k_orders_via(catalog_entry("g2/v72"), group, h);
    if (group.family == Family::SO5)
        return k_orders_via(catalog_entry("so5"), group, h);
    throw out_of_scope("k_orders: catalog covers su3, sp2, g2 and so5 only");
}

// --- JSON form -------------------------------------------------------------

namespace {

using nlohmann::json;
using twistk::detail::int_from_json;
using twistk::detail::int_to_json;

json group_to_json(const AbGroup& g)
{
    json t = json::array();
    for (const Int& d : g.invariant_factors())
        t.push_back(int_to_json(d));
    return json{{"free_rank", g.free_rank()}, {"torsion", t}};
}

AbGroup group_from_json(const json& j)
{
    std::vector<Int> torsion;
    for (const auto& d : j.at("torsion"))
        torsion.push_back(int_from_json(d));
    return AbGroup(j.at("free_rank").get<std::size_t>(), std::move(torsion));
}

json factor_to_json(const ImageFactor& f)
{
    switch (f.kind) {
    case ImageFactor::Kind::prime_cap:
        return json{{"kind", "prime_cap"}, {"prime", int_to_json(f.prime)}, {"cap", f.cap}};
    case ImageFactor::Kind::prime_step:
        return json{{"kind", "prime_step"},
                    {"prime", int_to_json(f.prime)},
                    {"threshold", f.threshold},
                    {"exp", f.exp}};
    case ImageFactor::Kind::h_over_gcd:
        return json{{"kind", "h_over_gcd"}, {"m", int_to_json(f.m)}};
    case ImageFactor::Kind::gcd_ratio:
        return json{{"kind", "gcd_ratio"}, {"num", int_to_json(f.num)}, {"den", int_to_json(f.den)}};
    }
    throw std::logic_error("unreachable");
}

ImageFactor factor_from_json(const json& j)
{
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "prime_cap")
        return ImageFactor::make_prime_cap(int_from_json(j.at("prime")), j.at("cap").get<int>());
    if (kind == "prime_step")
        return ImageFactor::make_prime_step(int_from_json(j.at("prime")),
                                            j.at("threshold").get<int>(), j.at("exp").get<int>());
    if (kind == "h_over_gcd")
        return ImageFactor::make_h_over_gcd(int_from_json(j.at("m")));
    if (kind == "gcd_ratio")
        return ImageFactor::make_gcd_ratio(int_from_json(j.at("num")), int_from_json(j.at("den")));
    throw std::invalid_argument("unknown image factor kind: " + kind);
}

}  // namespace

std::string FibrationSpec::to_json() const
{
    json j;
    j["name"] = name;
    j["base_homology"] = json::array();
    for (const AbGroup& g : base_homology)
        j["base_homology"].push_back(group_to_json(g));
    j["fiber"] = json{{"both_parities", fiber.both_parities},
                      {"order_divisor", int_to_json(fiber.order_divisor)}};
    j["twist_restricts_isomorphically"] = twist_restricts_isomorphically;
    j["rules"] = json::array();
    for (const DifferentialRule& r : rules) {
        json rj{{"page", r.page}, {"source_col", r.source_col}, {"fiber_parity", r.fiber_parity}};
        rj["image"] = json::array();
        for (const ImageFactor& f : r.image)
            rj["image"].push_back(factor_to_json(f));
        j["rules"].push_back(rj);
    }
    return j.dump(2);
}

FibrationSpec FibrationSpec::from_json(const std::string& text)
{
    json j = json::parse(text);
    FibrationSpec spec;
    spec.name = j.at("name").get<std::string>();
    for (const auto& g : j.at("base_homology"))
        spec.base_homology.push_back(group_from_json(g));
    spec.fiber.both_parities = j.at("fiber").at("both_parities").get<bool>();
    spec.fiber.order_divisor = int_from_json(j.at("fiber").at("order_divisor"));
    spec.twist_restricts_isomorphically = j.at("twist_restricts_isomorphically").get<bool>();
    for (const auto& rj : j.at("rules")) {
        DifferentialRule r;
        r.page = rj.at("page").get<int>();
        r.source_col = rj.at("source_col").get<int>();
        r.fiber_parity = rj.at("fiber_parity").get<int>();
        for (const auto& fj : rj.at("image"))
            r.image.push_back(factor_from_json(fj));
        spec.rules.push_back(std::move(r));
    }
    spec.validate();
    return spec;
}

}  // namespace twistk::segal
