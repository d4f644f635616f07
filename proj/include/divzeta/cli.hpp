#pragma once

// Command orchestration: compute, verify and count-strata reports.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <divzeta/graph.hpp>
#include <divzeta/measures.hpp>
#include <divzeta/zeta.hpp>

namespace divzeta
{

enum class Mode { Compute, Verify, CountStrata };
enum class OutputFormat { Coefficients, Rational, Json };

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_validation = 2,
    exit_mismatch = 3,
};

std::string_view to_string(Mode m);
std::string_view to_string(OutputFormat f);
Mode parse_mode(std::string_view s);
ZetaKind parse_zeta_kind(std::string_view s);
OutputFormat parse_output_format(std::string_view s);

struct RunConfig {
    Mode mode = Mode::Compute;
    // Unset means divisorial; verify rejects anything else.
    std::optional<ZetaKind> zeta;
    unsigned max_degree = default_order;
    // Measure precedence: command-line kind/q, then the measure config file,
    // then a "measure" object embedded in the input document.
    std::optional<MotivicMeasure::Kind> measure;
    std::optional<Integer> q;
    std::optional<std::string> measure_config;
    OutputFormat output = OutputFormat::Coefficients;
    std::string input;
    bool allow_unstable = false;
};

struct GraphSummary {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t legs = 0;
    unsigned genus = 0;

    friend bool operator==(const GraphSummary &, const GraphSummary &) = default;
};

struct RationalReport {
    std::vector<std::string> numerator;
    std::vector<std::string> denominator;
    // Model ids whose Kapranov zeta multiplies the quotient (symbolic only).
    std::vector<std::string> vertex_factors;

    friend bool operator==(const RationalReport &, const RationalReport &) = default;
};

struct DegreeCheck {
    unsigned degree = 0;
    std::string oracle;
    std::string closed;
    std::string difference;
    bool zero = false;

    friend bool operator==(const DegreeCheck &, const DegreeCheck &) = default;
};

// Everything a run prints. Coefficient values are canonical RingElem text
// or, under a measure, decimal integers.
struct Report {
    Mode mode = Mode::Compute;
    ZetaKind zeta = ZetaKind::Divisorial;
    MeasureSpec measure;
    unsigned max_degree = 0;
    GraphSummary graph;
    std::vector<std::string> coefficients;
    std::optional<RationalReport> rational;
    std::vector<DegreeCheck> checks;
    std::optional<bool> verified;
    std::vector<std::uint64_t> strata_counts;
};

bool operator==(const Report &a, const Report &b);

nlohmann::json to_json(const Report &r);
// Inverse of to_json; throws std::invalid_argument on schema violations.
Report report_from_json(const nlohmann::json &j);

void write_text(std::ostream &os, const Report &r, OutputFormat format);

// Supplies the oracle coefficient for degree d. The default sums strata.
using CoefficientOracle = std::function<RingElem(unsigned)>;

// Per-degree comparison of the strata oracle against the closed divisorial
// form for d = 0..max_degree, under the given measure. Degrees may run
// concurrently; the result is in degree order.
std::vector<DegreeCheck> verify_zdiv(const DualGraph &g, unsigned max_degree, const MotivicMeasure &measure,
                                     const CoefficientOracle &oracle = {});

Report build_report(const RunConfig &config, const DualGraph &g, const MeasureSpec &spec);

// Loads the input, builds and prints the report; returns an ExitCode.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

} // namespace divzeta
