#include <doctest.h>

#include "twistk/arith.hpp"
#include "twistk/closedform.hpp"
#include "twistk/segal.hpp"

using namespace twistk;
using namespace twistk::segal;
using abelian::AbGroup;
using closedform::Family;
using closedform::GroupId;
using closedform::KResult;

TEST_SUITE_BEGIN("segal");

TEST_CASE("hurewicz image orders")
{
    CHECK(hurewicz_image(4, 7) == 1);
    CHECK(hurewicz_image(4, 6) == 2);
    CHECK(hurewicz_image(4, 8) == 2);  // capped at 2 regardless of nu_2
    CHECK(hurewicz_image(6, 12) == 6);
    CHECK(hurewicz_image(6, 4) == 2);
    CHECK(hurewicz_image(6, 9) == 3);
    CHECK(hurewicz_image(10, 15) == 15);
    CHECK(hurewicz_image(10, 7) == 1);
    CHECK(hurewicz_image(10, 30) == 15);
    CHECK_THROWS_AS(hurewicz_image(5, 3), std::domain_error);
    CHECK_THROWS_AS(hurewicz_image(8, 3), std::domain_error);
}

TEST_CASE("hurewicz image divides the homotopy of S^3")
{
    // pi_4 = Z/2, pi_6 = Z/12, pi_10 = Z/15
    for (Int h = 1; h <= 240; ++h) {
        CHECK(Int(2) % hurewicz_image(4, h) == 0);
        CHECK(Int(12) % hurewicz_image(6, h) == 0);
        CHECK(Int(15) % hurewicz_image(10, h) == 0);
        for (const auto& [p, nu] : arith::factorize(h)) {
            Int local = HurewiczTable::standard().image_order(6, p, nu);
            CHECK(hurewicz_image(6, h) % local == 0);
        }
    }
}

TEST_CASE("coefficient rows by universal coefficients")
{
    std::vector<AbGroup> s5(6);
    s5[0] = AbGroup::free(1);
    s5[5] = AbGroup::free(1);
    for (Int m : {Int(5), Int(12)}) {
        auto row = coefficient_row(s5, m);
        REQUIRE(row.size() == 7);
        CHECK(row[0] == AbGroup::cyclic(m));
        CHECK(row[5] == AbGroup::cyclic(m));
        for (std::size_t p : {1u, 2u, 3u, 4u, 6u})
            CHECK(row[p] == AbGroup::trivial());
    }

    const auto& v72 = catalog_entry("g2/v72").base_homology;
    auto row = coefficient_row(v72, 4);
    CHECK(row[5] == AbGroup::cyclic(2));  // H_5 tensor Z/4
    CHECK(row[6] == AbGroup::cyclic(2));  // Tor(H_5, Z/4)
    CHECK(row[11] == AbGroup::cyclic(4));

    const auto& rp7 = catalog_entry("so5").base_homology;
    row = coefficient_row(rp7, 15);
    for (std::size_t p = 0; p < row.size(); ++p) {
        if (p == 0 || p == 7)
            CHECK(row[p] == AbGroup::cyclic(15));
        else
            CHECK(row[p] == AbGroup::trivial());
    }
}

TEST_CASE("su3 page at h = 4, p = 2")
{
    SSState st = run(catalog_entry("su3"), 4, 2);
    CHECK(st.entry(0, 0) == AbGroup::cyclic(2));
    CHECK(st.entry(5, 0) == AbGroup::cyclic(2));
    CHECK(st.entry(0, 1) == AbGroup::trivial());
    CHECK(st.entry(3, 0) == AbGroup::trivial());
    CHECK(st.total_order(0) == 2);
    CHECK(st.total_order(1) == 2);
}

TEST_CASE("sp2 page at h = 5, p = 5")
{
    SSState st = run(catalog_entry("sp2"), 5, 5);
    CHECK(st.entry(0, 0) == AbGroup::cyclic(5));
    CHECK(st.entry(7, 0) == AbGroup::cyclic(5));
    CHECK(st.total_order(0) == 5);
    CHECK(st.total_order(1) == 5);
}

TEST_CASE("g2 collapses completely at h = 4")
{
    SSState st = run(catalog_entry("g2/v72"), 4, 2);
    for (std::size_t col = 0; col < st.columns(); ++col)
        for (int q = 0; q < 2; ++q)
            CHECK(st.entry(col, q) == AbGroup::trivial());

    auto [even, odd] = parity_orders(catalog_entry("g2/s6"), 4);
    CHECK(even == 1);
    CHECK(odd == 1);
}

TEST_CASE("run is trivial when p does not divide h")
{
    for (const auto& spec : catalog()) {
        SSState st = run(spec, 15, 7);
        CHECK(st.total_order(0) == 1);
        CHECK(st.total_order(1) == 1);
    }
}

TEST_CASE("k_orders on the catalog groups")
{
    KResult r = k_orders(GroupId(Family::A, 2), 10);
    CHECK(r.even == AbGroup::cyclic(5));
    CHECK(r.odd == AbGroup::cyclic(5));

    r = k_orders(GroupId(Family::G2), 120);
    CHECK(r.even == AbGroup::cyclic(2));
    CHECK(closedform::douglas_g2(120) == 2);

    r = k_orders(GroupId(Family::SO5), 2);
    CHECK(r.even == AbGroup(0, {2, 2, 2, 2}));
    CHECK(r.odd == r.even);

    CHECK_THROWS_AS(k_orders(GroupId(Family::SO5), 12), out_of_scope);
    CHECK_THROWS_AS(k_orders(GroupId(Family::E8), 3), out_of_scope);
}

TEST_CASE("stable page divides the starting page")
{
    for (const auto& spec : catalog()) {
        for (Int h : {Int(2), Int(8), Int(12), Int(60), Int(90), Int(97)}) {
            for (const auto& [p, e] : arith::factorize(h)) {
                SSState st = run(spec, h, p);
                // starting-page order: the p-part of the full coefficient rows
                Int start_even = 1, start_odd = 1;
                Int m = spec.fiber.order(h);
                auto row = coefficient_row(spec.base_homology, m);
                for (std::size_t col = 0; col < row.size(); ++col) {
                    Int o = abelian::p_part(row[col], p).torsion_order();
                    (col % 2 == 0 ? start_even : start_odd) *= o;
                    if (spec.fiber.both_parities)
                        (col % 2 == 1 ? start_even : start_odd) *= o;
                }
                CHECK(start_even % st.total_order(0) == 0);
                CHECK(start_odd % st.total_order(1) == 0);
            }
        }
    }
}

TEST_CASE("catalog routes agree with the closed forms on a sample")
{
    for (Int h = 1; h <= 120; ++h) {
        Int su3 = closedform::braun_c(GroupId(Family::A, 2), h);
        Int sp2 = closedform::braun_c(GroupId(Family::C, 2), h);
        Int g2 = closedform::braun_c(GroupId(Family::G2), h);
        auto [a_even, a_odd] = parity_orders(catalog_entry("su3"), h);
        auto [c_even, c_odd] = parity_orders(catalog_entry("sp2"), h);
        auto [g_even, g_odd] = parity_orders(catalog_entry("g2/v72"), h);
        auto [s_even, s_odd] = parity_orders(catalog_entry("g2/s6"), h);
        CHECK(a_even == su3);
        CHECK(a_odd == su3);
        CHECK(c_even == sp2);
        CHECK(c_odd == sp2);
        CHECK(g_even == g2);
        CHECK(g_odd == g2);
        CHECK(s_even == g2);
        CHECK(s_odd == g2);
    }
}

TEST_CASE("prime-power twists give p-primary output")
{
    for (const GroupId& g : {GroupId(Family::A, 2), GroupId(Family::C, 2), GroupId(Family::G2)}) {
        for (Int h : {Int(8), Int(27), Int(125), Int(49)}) {
            KResult r = k_orders(g, h);
            Int p = arith::factorize(h).front().first;
            CHECK(abelian::p_part(r.even, p) == r.even);
        }
        CHECK(k_orders(g, 1).even == AbGroup::trivial());
    }
}

TEST_CASE("rules that cannot act fail loudly")
{
    FibrationSpec spec = catalog_entry("su3");
    spec.rules[0].image = {ImageFactor::make_prime_step(2, 1, 5)};  // demands image 32
    CHECK_THROWS_AS(run(spec, 2, 2), inconsistent_rule);

    FibrationSpec bad = catalog_entry("su3");
    bad.base_homology[5] = AbGroup(0, {2, 2});  // non-cyclic source
    CHECK_THROWS_AS(run(bad, 2, 2), std::logic_error);
}

TEST_CASE("spec validation")
{
    FibrationSpec spec = catalog_entry("sp2");
    spec.twist_restricts_isomorphically = false;
    CHECK_THROWS_AS(spec.validate(), std::domain_error);

    spec = catalog_entry("sp2");
    spec.rules[0].source_col = 3;  // target column would be negative
    CHECK_THROWS_AS(spec.validate(), std::domain_error);

    spec = catalog_entry("sp2");
    spec.base_homology[0] = AbGroup::cyclic(2);
    CHECK_THROWS_AS(spec.validate(), std::domain_error);
}

TEST_CASE("catalog serializes to JSON and back")
{
    for (const auto& spec : catalog()) {
        FibrationSpec reloaded = FibrationSpec::from_json(spec.to_json());
        CHECK(reloaded.to_json() == spec.to_json());
        // behavior-equal on a few twists
        for (Int h : {Int(4), Int(30), Int(8)}) {
            auto [e1, o1] = parity_orders(spec, h);
            auto [e2, o2] = parity_orders(reloaded, h);
            CHECK(e1 == e2);
            CHECK(o1 == o2);
        }
    }
    CHECK_THROWS_AS(catalog_entry("nope"), std::invalid_argument);
}

TEST_SUITE_END();
