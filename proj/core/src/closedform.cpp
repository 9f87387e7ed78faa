#include "twistk/closedform.hpp"

#include <cctype>

#include "twistk/arith.hpp"

namespace twistk::closedform {

using arith::binom;
using arith::gcd;
using arith::lcm;
using arith::lcm_range;
using arith::odd_part;

GroupId::GroupId(Family f, int n) : family(f), rank_param(n)
{
    switch (family) {
    case Family::A:
    case Family::B:
    case Family::C:
        if (rank_param < 1)
            throw std::domain_error("classical family needs rank parameter >= 1");
        break;
    case Family::D:
        if (rank_param <= 3)
            throw out_of_scope("D_n is only handled for n > 3");
        break;
    default:
        rank_param = 0;
        break;
    }
}

int GroupId::rank() const
{
    switch (family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::D:
        return rank_param;
    case Family::G2:
    case Family::SO5:
        return 2;
    case Family::F4:
        return 4;
    case Family::E6:
        return 6;
    case Family::E7:
        return 7;
    case Family::E8:
        return 8;
    }
    throw std::logic_error("unreachable");
}

std::string GroupId::name() const
{
    switch (family) {
    case Family::A:
        return "su" + std::to_string(rank_param + 1);
    case Family::B:
        return "spin" + std::to_string(2 * rank_param + 1);
    case Family::C:
        return "sp" + std::to_string(rank_param);
    case Family::D:
        return "spin" + std::to_string(2 * rank_param);
    case Family::G2:
        return "g2";
    case Family::F4:
        return "f4";
    case Family::E6:
        return "e6";
    case Family::E7:
        return "e7";
    case Family::E8:
        return "e8";
    case Family::SO5:
        return "so5";
    }
    throw std::logic_error("unreachable");
}

GroupId parse_group(const std::string& name)
{
    std::string s;
    for (char c : name)
        s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

    auto split_num = [&](const std::string& prefix) -> int {
        std::string digits = s.substr(prefix.size());
        if (digits.empty() || digits.size() > 6)
            throw std::invalid_argument("cannot parse group name: " + name);
        for (char c : digits)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("cannot parse group name: " + name);
        return std::stoi(digits);
    };

    if (s == "g2")
        return GroupId(Family::G2);
    if (s == "f4")
        return GroupId(Family::F4);
    if (s == "e6")
        return GroupId(Family::E6);
    if (s == "e7")
        return GroupId(Family::E7);
    if (s == "e8")
        return GroupId(Family::E8);
    if (s == "so5" || s == "psp2")
        return GroupId(Family::SO5);
    if (s.starts_with("spin")) {
        int n = split_num("spin");
        if (n < 3)
            throw std::invalid_argument("spin(n) needs n >= 3: " + name);
        if (n % 2 == 1)
            return GroupId(Family::B, (n - 1) / 2);
        return GroupId(Family::D, n / 2);  // rejects n <= 6 via the D constraint
    }
    if (s.starts_with("su")) {
        int n = split_num("su");
        if (n < 2)
            throw std::invalid_argument("su(n) needs n >= 2: " + name);
        return GroupId(Family::A, n - 1);
    }
    if (s.starts_with("sp")) {
        int n = split_num("sp");
        return GroupId(Family::C, n);
    }
    throw std::invalid_argument("unknown group name: " + name);
}

std::string route_name(Route r)
{
    switch (r) {
    case Route::braun:
        return "braun";
    case Route::douglas:
        return "douglas";
    case Route::segal:
        return "segal";
    case Route::khorami:
        return "khorami";
    }
    throw std::logic_error("unreachable");
}

Int braun_y(const GroupId& g)
{
    const int n = g.rank_param;
    switch (g.family) {
    case Family::A:
        return n == 1 ? Int(1) : lcm_range(1, n);
    case Family::B:
        return n == 1 ? Int(1) : lcm_range(1, 2 * n - 1);
    case Family::C: {
        Int y = n == 1 ? Int(1) : lcm_range(1, n);
        for (int k = 1; k <= 2 * n - 1; k += 2)
            y = lcm(y, k);
        return y;
    }
    case Family::D:
        return lcm_range(1, 2 * n - 1);
    // The exceptional values are fixed constants; each equals
    // lcm(1..m) for m = 6, 11, 11, 17, 29 respectively.
    case Family::G2:
        return 60;
    case Family::F4:
        return 27720;
    case Family::E6:
        return 27720;
    case Family::E7:
        return 12252240;
    case Family::E8:
        return Int("2329089562800");
    case Family::SO5:
        throw std::domain_error("braun_y: so5 is not in the table; use so5_k");
    }
    throw std::logic_error("unreachable");
}

Int braun_c(const GroupId& g, const Int& h)
{
    if (h < 1)
        throw std::domain_error("braun_c: h must be positive");
    return h / gcd(h, braun_y(g));
}

Int douglas_su(int n, const Int& h)
{
    if (n < 1)
        throw std::domain_error("douglas_su: n must be >= 1");
    if (h < 1)
        throw std::domain_error("douglas_su: h must be positive");
    Int g = 0;
    for (int i = 1; i <= n; ++i)
        g = gcd(g, binom(h + i, i) - 1);
    return g;
}

Int douglas_sp(int n, const Int& h)
{
    if (n < 1)
        throw std::domain_error("douglas_sp: n must be >= 1");
    if (h < 1)
        throw std::domain_error("douglas_sp: h must be positive");
    Int g = 0;
    for (int i = 1; i <= n; ++i) {
        Int sum = 0;
        for (Int j = -h; j <= -1; ++j)
            sum += binom(2 * j + 2 * (i - 1), 2 * (i - 1));
        g = gcd(g, sum);
    }
    return g;
}

DouglasSpSweep::DouglasSpSweep(int n, const Int& first_h)
    : n_(n), partial_sums_(static_cast<std::size_t>(n), Int(0))
{
    if (n < 1)
        throw std::domain_error("DouglasSpSweep: n must be >= 1");
    if (first_h < 1)
        throw std::domain_error("DouglasSpSweep: first_h must be positive");
    h_ = first_h - 1;
    for (int i = 1; i <= n_; ++i)
        for (Int j = -h_; j <= -1; ++j)
            partial_sums_[i - 1] += binom(2 * j + 2 * (i - 1), 2 * (i - 1));
}

Int DouglasSpSweep::next()
{
    ++h_;
    Int g = 0;
    for (int i = 1; i <= n_; ++i) {
        // going from h-1 to h adds the j = -h term of the series
        partial_sums_[i - 1] += binom(-2 * h_ + 2 * (i - 1), 2 * (i - 1));
        g = gcd(g, partial_sums_[i - 1]);
    }
    return g;
}

Int douglas_sp2_closed(const Int& h)
{
    if (h < 1)
        throw std::domain_error("douglas_sp2_closed: h must be positive");
    return gcd(h, 2 * binom(h, 3) + binom(h, 2));
}

Int douglas_g2(const Int& h)
{
    if (h < 1)
        throw std::domain_error("douglas_g2: h must be positive");
    Int quintic = (h + 1) * (h + 2) * (2 * h + 3) * (3 * h + 4) * (3 * h + 5);
    if (quintic % 120 != 0)
        throw std::logic_error("douglas_g2: quintic product not divisible by 120");
    return gcd(gcd(h, binom(h + 2, 2) - 1), quintic / 120 - 1);
}

KResult so5_k(const Int& h)
{
    using abelian::AbGroup;
    if (h < 1)
        throw std::domain_error("so5_k: h must be positive");
    if (h % 4 == 0)
        throw out_of_scope("so5 with 4 | h is not computed");

    Int odd_order = odd_part(h) / gcd(h, 3);
    AbGroup per_degree;
    if (h % 2 == 0) {
        std::vector<Int> orders(4, Int(2));
        orders.push_back(odd_order);
        per_degree = AbGroup::from_cyclic_orders(0, std::move(orders));
    } else {
        per_degree = AbGroup::cyclic(odd_order);
    }
    return KResult{per_degree, per_degree, Route::braun, GroupId(Family::SO5), h};
}

KResult assemble_full(const GroupId& g, const Int& h)
{
    using abelian::AbGroup;
    if (!g.simply_connected())
        throw std::domain_error("assemble_full: use so5_k for so5");
    if (h < 1)
        throw std::domain_error("assemble_full: h must be positive");

    Int c = braun_c(g, h);
    const int n = g.rank();
    if (n == 1)
        return KResult{AbGroup::cyclic(c), AbGroup::trivial(), Route::braun, g, h};

    // Exterior algebra on n-1 odd generators: 2^(n-2) basis elements in
    // each parity, each carrying one copy of Z/c.
    std::size_t copies = std::size_t(1) << (n - 2);
    std::vector<Int> orders(copies, c);
    AbGroup per_parity = AbGroup::from_cyclic_orders(0, std::move(orders));
    return KResult{per_parity, per_parity, Route::braun, g, h};
}

}  // namespace twistk::closedform
