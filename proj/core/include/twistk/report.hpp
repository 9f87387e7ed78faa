#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistk/closedform.hpp"
#include "twistk/int_types.hpp"

namespace twistk::report {

/// One cross-route verification row. Columns are per-parity torsion orders;
/// a column is absent when the route does not cover the group. agree is
/// true iff every defined column coincides (and, where a route produces a
/// full group shape, the shapes coincide too).
struct ReportRow {
    std::string group;
    Int h = 0;
    std::optional<Int> closed;      // braun / so5 closed form
    std::optional<Int> douglas;     // gcd-formula order
    std::optional<Int> segal_even;  // stable-page order, even degrees
    std::optional<Int> segal_odd;
    std::optional<Int> khorami;     // R/(h beta_1) tensor_R Z (su2 only)
    bool agree = true;
    std::string diagnostics;  // per-prime valuations when columns disagree

    bool operator==(const ReportRow&) const = default;
};

struct VerifyOptions {
    int khorami_truncation = 16;
    unsigned threads = 0;  // 0 = from TWISTK_THREADS or hardware
};

/// Cross-route rows for one group over h in [h_lo, h_hi]. Chunks the range
/// and runs chunks in parallel; rows come back in h order regardless.
std::vector<ReportRow> verify_range(const closedform::GroupId& group, const Int& h_lo,
                                    const Int& h_hi, const VerifyOptions& opts = {});

/// One row of the c(G, h) table emitted by the table command.
struct TableRow {
    std::string group;
    Int h = 0;
    Int c = 0;  // per-parity torsion order
    std::string even;
    std::string odd;
};

std::vector<TableRow> table_range(const closedform::GroupId& group, const Int& h_lo,
                                  const Int& h_hi);

enum class Format { text, csv, json, md };
Format parse_format(const std::string& name);

/// RFC 4180 field quoting.
std::string csv_quote(const std::string& field);

std::string format_table(const std::vector<TableRow>& rows, Format fmt);
std::string format_report(const std::vector<ReportRow>& rows, Format fmt);

/// One JSON object per row, newline separated; inverse of format_report
/// with Format::json.
std::vector<ReportRow> parse_report_json(const std::string& text);

/// Worker count honoring TWISTK_THREADS.
unsigned effective_threads(unsigned requested);

}  // namespace twistk::report
