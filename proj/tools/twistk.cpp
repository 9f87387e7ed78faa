#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twistk/khorami.hpp"
#include "twistk/report.hpp"
#include "twistk/segal.hpp"

namespace {

using namespace twistk;
using closedform::Family;
using closedform::GroupId;
using closedform::KResult;
using closedform::Route;

// exit codes: 0 ok/agree, 1 verify mismatch, 2 usage, 3 out of scope
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOutOfScope = 3;

Int parse_int(const std::string& text)
{
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("not a nonnegative integer: '" + text + "'");
    return Int(text);
}

std::pair<Int, Int> parse_range(const std::string& text)
{
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        Int h = parse_int(text);
        return {h, h};
    }
    Int lo = parse_int(text.substr(0, dots));
    Int hi = parse_int(text.substr(dots + 2));
    return {lo, hi};
}

Route parse_route(const std::string& name)
{
    if (name == "braun")
        return Route::braun;
    if (name == "douglas")
        return Route::douglas;
    if (name == "segal")
        return Route::segal;
    if (name == "khorami")
        return Route::khorami;
    throw std::invalid_argument("unknown route: " + name);
}

KResult assemble_with_order(const GroupId& g, const Int& h, const Int& c, Route route)
{
    using abelian::AbGroup;
    const int n = g.rank();
    if (n == 1)
        return KResult{AbGroup::cyclic(c), AbGroup::trivial(), route, g, h};
    std::vector<Int> orders(std::size_t(1) << (n - 2), c);
    AbGroup per_parity = AbGroup::from_cyclic_orders(0, std::move(orders));
    return KResult{per_parity, per_parity, route, g, h};
}

std::vector<segal::FibrationSpec> load_catalog_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open catalog file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    nlohmann::json j = nlohmann::json::parse(buf.str());
    std::vector<segal::FibrationSpec> specs;
    if (j.is_array())
        for (const auto& item : j)
            specs.push_back(segal::FibrationSpec::from_json(item.dump()));
    else
        specs.push_back(segal::FibrationSpec::from_json(j.dump()));
    return specs;
}

const segal::FibrationSpec& pick_fibration(const std::vector<segal::FibrationSpec>& extra,
                                           const std::string& name)
{
    for (const auto& s : extra)
        if (s.name == name)
            return s;
    return segal::catalog_entry(name);
}

std::string default_fibration_name(const GroupId& g)
{
    if (g.family == Family::A && g.rank_param == 2)
        return "su3";
    if (g.family == Family::C && g.rank_param == 2)
        return "sp2";
    if (g.family == Family::G2)
        return "g2/v72";
    if (g.family == Family::SO5)
        return "so5";
    throw out_of_scope("no fibration catalog entry for " + g.name());
}

struct OrderArgs {
    std::string group;
    std::string h_text;
    std::string route = "braun";
    int trunc = 16;
    std::string prime;
    std::string catalog_file;
    std::string fibration;
};

int cmd_order(const OrderArgs& args)
{
    GroupId g = closedform::parse_group(args.group);
    Int h = parse_int(args.h_text);
    if (h < 1)
        throw std::invalid_argument("h must be positive");
    Route route = parse_route(args.route);

    KResult result{abelian::AbGroup::trivial(), abelian::AbGroup::trivial(), route, g, h};
    switch (route) {
    case Route::braun:
        result = g.family == Family::SO5 ? closedform::so5_k(h) : closedform::assemble_full(g, h);
        break;
    case Route::douglas: {
        Int c;
        if (g.family == Family::A)
            c = closedform::douglas_su(g.rank_param, h);
        else if (g.family == Family::C)
            c = closedform::douglas_sp(g.rank_param, h);
        else if (g.family == Family::G2)
            c = closedform::douglas_g2(h);
        else
            throw out_of_scope("no gcd formula route for " + g.name());
        result = assemble_with_order(g, h, c, Route::douglas);
        break;
    }
    case Route::segal: {
        std::vector<segal::FibrationSpec> extra;
        if (!args.catalog_file.empty())
            extra = load_catalog_file(args.catalog_file);
        std::string name = args.fibration.empty() ? default_fibration_name(g) : args.fibration;
        const segal::FibrationSpec& spec = pick_fibration(extra, name);
        if (g.family == Family::SO5 && h % 4 == 0)
            throw out_of_scope("so5 with 4 | h is not computed");
        if (!args.prime.empty()) {
            // single-prime restriction: report the p-local groups
            Int p = parse_int(args.prime);
            segal::SSState st = segal::run(spec, h, p);
            result = KResult{abelian::AbGroup::cyclic(st.total_order(0)),
                             abelian::AbGroup::cyclic(st.total_order(1)), Route::segal, g, h};
            if (g.family == Family::SO5 && p == 2) {
                std::vector<Int> even(st.count_nontrivial(0), Int(2));
                std::vector<Int> odd(st.count_nontrivial(1), Int(2));
                result.even = abelian::AbGroup::from_cyclic_orders(0, std::move(even));
                result.odd = abelian::AbGroup::from_cyclic_orders(0, std::move(odd));
            }
        } else {
            result = segal::k_orders_via(spec, g, h);
        }
        break;
    }
    case Route::khorami: {
        if (!(g.family == Family::A && g.rank_param == 1))
            throw out_of_scope("the module route only computes su2");
        abelian::AbGroup even = khorami::tensor_over_r(h, args.trunc);
        result = KResult{even, abelian::AbGroup::trivial(), Route::khorami, g, h};
        break;
    }
    }

    std::cout << "group=" << g.name() << " h=" << h << " route=" << route_name(result.route)
              << "\n";
    std::cout << "even: " << result.even.str() << "\n";
    std::cout << "odd:  " << result.odd.str() << "\n";
    return 0;
}

struct VerifyArgs {
    std::vector<std::string> groups;
    std::string h_text = "1..100";
    std::string format = "text";
    int trunc = 16;
    unsigned threads = 0;
};

int cmd_verify(const VerifyArgs& args)
{
    auto [lo, hi] = parse_range(args.h_text);
    report::Format fmt = report::parse_format(args.format);
    report::VerifyOptions opts;
    opts.khorami_truncation = args.trunc;
    opts.threads = args.threads;

    bool all_agree = true;
    std::vector<report::ReportRow> rows;
    for (const std::string& name : args.groups) {
        GroupId g = closedform::parse_group(name);
        std::vector<report::ReportRow> group_rows = report::verify_range(g, lo, hi, opts);
        for (const auto& r : group_rows)
            all_agree = all_agree && r.agree;
        rows.insert(rows.end(), group_rows.begin(), group_rows.end());
    }

    if (fmt == report::Format::text) {
        std::size_t mismatches = 0;
        for (const auto& r : rows)
            if (!r.agree) {
                ++mismatches;
                std::cout << report::format_report({r}, fmt);
            }
        std::cout << "verified " << rows.size() << " rows: "
                  << (mismatches == 0 ? "all routes agree"
                                      : std::to_string(mismatches) + " mismatches")
                  << "\n";
    } else {
        std::cout << report::format_report(rows, fmt);
    }
    return all_agree ? 0 : kExitMismatch;
}

struct TableArgs {
    std::vector<std::string> groups;
    std::string h_text;
    std::string format = "csv";
};

int cmd_table(const TableArgs& args)
{
    auto [lo, hi] = parse_range(args.h_text);
    report::Format fmt = report::parse_format(args.format);
    std::vector<report::TableRow> rows;
    for (const std::string& name : args.groups) {
        GroupId g = closedform::parse_group(name);
        std::vector<report::TableRow> group_rows = report::table_range(g, lo, hi);
        rows.insert(rows.end(), group_rows.begin(), group_rows.end());
    }
    std::cout << report::format_table(rows, fmt);
    return 0;
}

int cmd_catalog(const std::string& name)
{
    if (!name.empty()) {
        std::cout << segal::catalog_entry(name).to_json() << "\n";
        return 0;
    }
    nlohmann::json all = nlohmann::json::array();
    for (const auto& spec : segal::catalog())
        all.push_back(nlohmann::json::parse(spec.to_json()));
    std::cout << all.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact twisted K-theory torsion of rank-2 compact Lie groups,\n"
                 "computed by independent routes and cross-checked"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");  // frees -h/--h for twist ranges

    OrderArgs order_args;
    CLI::App* order = app.add_subcommand("order", "twisted K-groups of one group at one twist");
    order->set_help_flag("--help", "print help");
    order->add_option("group", order_args.group, "group name (su3, sp2, g2, so5, spin7, e8, ...)")
        ->required();
    order->add_option("h", order_args.h_text, "twist level, a positive integer")->required();
    order->add_option("--route", order_args.route, "braun | douglas | segal | khorami");
    order->add_option("--trunc", order_args.trunc, "ring truncation for the khorami route");
    order->add_option("--prime", order_args.prime, "restrict the segal route to one prime");
    order->add_option("--catalog", order_args.catalog_file, "JSON file with extra fibrations");
    order->add_option("--fibration", order_args.fibration, "fibration name for the segal route");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "cross-check all routes over a twist range");
    verify->set_help_flag("--help", "print help");
    verify->add_option("--group", verify_args.groups, "group names")->required()->delimiter(',');
    verify->add_option("--h", verify_args.h_text, "twist range a..b")->required();
    verify->add_option("--format", verify_args.format, "text | csv | json | md");
    verify->add_option("--trunc", verify_args.trunc, "ring truncation for su2 khorami checks");
    verify->add_option("--threads", verify_args.threads, "worker threads (default: all cores)");

    TableArgs table_args;
    CLI::App* table = app.add_subcommand("table", "emit the torsion-order table");
    table->set_help_flag("--help", "print help");
    table->add_option("--groups", table_args.groups, "group names")->required()->delimiter(',');
    table->add_option("--h", table_args.h_text, "twist range a..b")->required();
    table->add_option("--format", table_args.format, "csv | json | md");

    std::string catalog_name;
    CLI::App* cat = app.add_subcommand("catalog", "dump the built-in fibration catalog as JSON");
    cat->set_help_flag("--help", "print help");
    cat->add_option("--name", catalog_name, "dump a single entry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (order->parsed())
            return cmd_order(order_args);
        if (verify->parsed())
            return cmd_verify(verify_args);
        if (table->parsed())
            return cmd_table(table_args);
        if (cat->parsed())
            return cmd_catalog(catalog_name);
    } catch (const out_of_scope& e) {
        std::cerr << "out of scope: " << e.what() << "\n";
        return kExitOutOfScope;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return kExitUsage;
}
