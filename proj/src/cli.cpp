#include <divzeta/cli.hpp>

#include <exception>
#include <fstream>
#include <ostream>
#include <sstream>

#include <divzeta/strata.hpp>

namespace divzeta
{

using nlohmann::json;

std::string_view to_string(Mode m)
{
    switch (m) {
        case Mode::Compute:
            return "compute";
        case Mode::Verify:
            return "verify";
        case Mode::CountStrata:
            return "count-strata";
    }
    return "?";
}

std::string_view to_string(OutputFormat f)
{
    switch (f) {
        case OutputFormat::Coefficients:
            return "coefficients";
        case OutputFormat::Rational:
            return "rational";
        case OutputFormat::Json:
            return "json";
    }
    return "?";
}

Mode parse_mode(std::string_view s)
{
    for (auto m : {Mode::Compute, Mode::Verify, Mode::CountStrata}) {
        if (to_string(m) == s) {
            return m;
        }
    }
    throw std::invalid_argument("unknown mode '" + std::string(s) + "'");
}

ZetaKind parse_zeta_kind(std::string_view s)
{
    for (auto k : {ZetaKind::Divisorial, ZetaKind::Hilbert, ZetaKind::KapranovNodal, ZetaKind::KapranovSmooth}) {
        if (to_string(k) == s) {
            return k;
        }
    }
    throw std::invalid_argument("unknown zeta function '" + std::string(s) + "'");
}

OutputFormat parse_output_format(std::string_view s)
{
    for (auto f : {OutputFormat::Coefficients, OutputFormat::Rational, OutputFormat::Json}) {
        if (to_string(f) == s) {
            return f;
        }
    }
    throw std::invalid_argument("unknown output format '" + std::string(s) + "'");
}

bool operator==(const Report &a, const Report &b)
{
    return a.mode == b.mode && a.zeta == b.zeta && a.measure == b.measure && a.max_degree == b.max_degree
           && a.graph == b.graph && a.coefficients == b.coefficients && a.rational == b.rational
           && a.checks == b.checks && a.verified == b.verified && a.strata_counts == b.strata_counts;
}

json to_json(const Report &r)
{
    json j = {
        {"mode", std::string(to_string(r.mode))},
        {"zeta", std::string(to_string(r.zeta))},
        {"measure", to_json(r.measure)},
        {"max_degree", r.max_degree},
        {"graph",
         {{"vertices", r.graph.vertices}, {"edges", r.graph.edges}, {"legs", r.graph.legs}, {"genus", r.graph.genus}}},
    };
    if (r.mode == Mode::Compute) {
        j["coefficients"] = r.coefficients;
        if (r.rational) {
            j["rational"] = {{"numerator", r.rational->numerator},
                             {"denominator", r.rational->denominator},
                             {"vertex_factors", r.rational->vertex_factors}};
        }
    }
    if (r.mode == Mode::Verify) {
        json checks = json::array();
        for (const auto &c : r.checks) {
            checks.push_back({{"degree", c.degree},
                              {"oracle", c.oracle},
                              {"closed", c.closed},
                              {"difference", c.difference},
                              {"zero", c.zero}});
        }
        j["checks"] = checks;
        j["verified"] = r.verified.value_or(false);
    }
    if (r.mode == Mode::CountStrata) {
        j["strata_counts"] = r.strata_counts;
    }
    return j;
}

namespace
{

template <typename T>
T field(const json &j, const char *key)
{
    if (!j.contains(key)) {
        throw std::invalid_argument(std::string("report lacks \"") + key + "\"");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("report field \"") + key + "\": " + e.what());
    }
}

} // namespace

Report report_from_json(const json &j)
{
    if (!j.is_object()) {
        throw std::invalid_argument("report must be a JSON object");
    }
    Report r;
    r.mode = parse_mode(field<std::string>(j, "mode"));
    r.zeta = parse_zeta_kind(field<std::string>(j, "zeta"));
    r.measure = measure_spec_from_json(field<json>(j, "measure"));
    r.max_degree = field<unsigned>(j, "max_degree");
    const json g = field<json>(j, "graph");
    r.graph = GraphSummary{field<std::size_t>(g, "vertices"), field<std::size_t>(g, "edges"),
                           field<std::size_t>(g, "legs"), field<unsigned>(g, "genus")};
    if (r.mode == Mode::Compute) {
        r.coefficients = field<std::vector<std::string>>(j, "coefficients");
        if (j.contains("rational")) {
            const json rat = j.at("rational");
            r.rational = RationalReport{field<std::vector<std::string>>(rat, "numerator"),
                                        field<std::vector<std::string>>(rat, "denominator"),
                                        field<std::vector<std::string>>(rat, "vertex_factors")};
        }
    }
    if (r.mode == Mode::Verify) {
        for (const auto &c : field<json>(j, "checks")) {
            r.checks.push_back(DegreeCheck{field<unsigned>(c, "degree"), field<std::string>(c, "oracle"),
                                           field<std::string>(c, "closed"), field<std::string>(c, "difference"),
                                           field<bool>(c, "zero")});
        }
        r.verified = field<bool>(j, "verified");
    }
    if (r.mode == Mode::CountStrata) {
        r.strata_counts = field<std::vector<std::uint64_t>>(j, "strata_counts");
    }
    return r;
}

namespace
{

// Same layout as to_string(Poly) but from pre-rendered coefficients.
std::string poly_text(const std::vector<std::string> &cs)
{
    std::string out;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        std::string c = cs[i];
        if (c == "0") {
            continue;
        }
        const bool compound = c.find_first_of("+-", 1) != std::string::npos;
        if (!out.empty()) {
            if (!compound && c.front() == '-') {
                out += " - ";
                c.erase(0, 1);
            } else {
                out += " + ";
            }
        }
        if (i == 0) {
            out += c;
            continue;
        }
        if (compound) {
            out += "(" + c + ")*";
        } else if (c == "-1") {
            out += "-";
        } else if (c != "1") {
            out += c + "*";
        }
        out += i == 1 ? std::string("t") : "t^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

std::string rational_text(const RationalReport &r)
{
    std::string s = "(" + poly_text(r.numerator) + ")/(" + poly_text(r.denominator) + ")";
    for (const auto &m : r.vertex_factors) {
        s += " * Z[" + m + "](t)";
    }
    return s;
}

} // namespace

void write_text(std::ostream &os, const Report &r, OutputFormat format)
{
    if (format == OutputFormat::Json) {
        os << to_json(r).dump(2) << '\n';
        return;
    }
    os << "# graph: |V|=" << r.graph.vertices << " |E|=" << r.graph.edges << " n=" << r.graph.legs
       << " genus=" << r.graph.genus << '\n';
    os << "# mode: " << to_string(r.mode);
    if (r.mode != Mode::CountStrata) {
        os << "  zeta: " << to_string(r.zeta) << "  measure: " << to_string(r.measure.kind);
        if (r.measure.q) {
            os << " q=" << r.measure.q->get_str();
        }
    }
    os << "  max-degree: " << r.max_degree << '\n';
    switch (r.mode) {
        case Mode::Compute:
            if (format == OutputFormat::Coefficients) {
                for (std::size_t d = 0; d < r.coefficients.size(); ++d) {
                    os << "t^" << d << ": " << r.coefficients[d] << '\n';
                }
            }
            if (r.rational) {
                os << "rational: " << rational_text(*r.rational) << '\n';
            }
            break;
        case Mode::Verify:
            for (const auto &c : r.checks) {
                os << "d=" << c.degree << " oracle: " << c.oracle << " | closed: " << c.closed
                   << " | difference: " << c.difference << '\n';
            }
            os << "verified: " << (r.verified.value_or(false) ? "yes" : "no") << '\n';
            break;
        case Mode::CountStrata:
            for (std::size_t d = 0; d < r.strata_counts.size(); ++d) {
                os << "d=" << d << ": " << r.strata_counts[d] << '\n';
            }
            break;
    }
}

std::vector<DegreeCheck> verify_zdiv(const DualGraph &g, unsigned max_degree, const MotivicMeasure &measure,
                                     const CoefficientOracle &oracle)
{
    const TruncSeries closed = zdiv_closed(g, max_degree);
    std::vector<DegreeCheck> checks(max_degree + 1);
    std::vector<std::exception_ptr> errors(max_degree + 1);
    const auto n = static_cast<long>(max_degree) + 1;

    // Highest degrees carry most strata; schedule them first.
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) {
        const auto d = static_cast<unsigned>(n - 1 - i);
        try {
            const RingElem o = oracle ? oracle(d) : zdiv_strata_coeff(g, d);
            const RingElem &c = closed[d];
            DegreeCheck &check = checks[d];
            check.degree = d;
            if (measure.is_symbolic()) {
                const RingElem diff = o - c;
                check.oracle = to_string(o);
                check.closed = to_string(c);
                check.difference = to_string(diff);
                check.zero = diff.is_zero();
            } else {
                const Integer mo = measure.apply(o);
                const Integer mc = measure.apply(c);
                const Integer diff = mo - mc;
                check.oracle = mo.get_str();
                check.closed = mc.get_str();
                check.difference = diff.get_str();
                check.zero = diff == 0;
            }
        } catch (...) {
            errors[d] = std::current_exception();
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return checks;
}

Report build_report(const RunConfig &config, const DualGraph &g, const MeasureSpec &spec)
{
    const ZetaKind zeta = config.zeta.value_or(ZetaKind::Divisorial);
    if (config.mode == Mode::Verify && zeta != ZetaKind::Divisorial) {
        throw std::invalid_argument("verify mode applies to the divisorial zeta function only");
    }
    const MotivicMeasure measure = make_measure(spec, g);

    Report r;
    r.mode = config.mode;
    r.zeta = zeta;
    r.measure = spec;
    r.max_degree = config.max_degree;
    r.graph = GraphSummary{g.vertices().size(), g.edges().size(), g.legs().size(), total_genus(g)};

    switch (config.mode) {
        case Mode::Compute: {
            const TruncSeries s = zeta_series(zeta, g, config.max_degree);
            const ClosedForm cf = zeta_closed_form(zeta, g);
            RationalReport rat;
            if (measure.is_symbolic()) {
                for (const auto &c : s.coeffs()) {
                    r.coefficients.push_back(to_string(c));
                }
                for (const auto &c : cf.prefactor.numerator().coeffs()) {
                    rat.numerator.push_back(to_string(c));
                }
                for (const auto &c : cf.prefactor.denominator().coeffs()) {
                    rat.denominator.push_back(to_string(c));
                }
                for (const auto &m : cf.vertex_factors) {
                    rat.vertex_factors.push_back(m.id);
                }
            } else {
                const IntSeries measured = measure.apply(s);
                for (const auto &c : measured.coeffs()) {
                    r.coefficients.push_back(c.get_str());
                }
                const IntRationalFn ir = measure.apply(cf);
                for (const auto &c : ir.numerator().coeffs()) {
                    rat.numerator.push_back(c.get_str());
                }
                for (const auto &c : ir.denominator().coeffs()) {
                    rat.denominator.push_back(c.get_str());
                }
            }
            r.rational = std::move(rat);
            break;
        }
        case Mode::Verify: {
            r.checks = verify_zdiv(g, config.max_degree, measure);
            bool ok = true;
            for (const auto &c : r.checks) {
                ok = ok && c.zero;
            }
            r.verified = ok;
            break;
        }
        case Mode::CountStrata:
            for (unsigned d = 0; d <= config.max_degree; ++d) {
                r.strata_counts.push_back(enumerate_stable_pairs(g, d).size());
            }
            break;
    }
    return r;
}

namespace
{

json read_json_file(const std::string &path, const char *what)
{
    std::ifstream in(path);
    if (!in) {
        throw graph_error(graph_error::Kind::Schema, std::string("cannot open ") + what + " '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return json::parse(buf.str());
    } catch (const json::parse_error &e) {
        throw graph_error(graph_error::Kind::Schema, std::string("malformed JSON in ") + what + ": " + e.what());
    }
}

} // namespace

int run(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    if (config.mode == Mode::Verify && config.zeta && *config.zeta != ZetaKind::Divisorial) {
        err << "error: verify mode applies to the divisorial zeta function only\n";
        return exit_usage;
    }
    if (config.input.empty()) {
        err << "error: --input is required\n";
        return exit_usage;
    }
    try {
        const json doc = read_json_file(config.input, "input");
        const DualGraph g = graph_from_json(doc, GraphOptions{config.allow_unstable});

        MeasureSpec spec;
        if (doc.contains("measure")) {
            spec = measure_spec_from_json(doc.at("measure"));
        }
        if (config.measure_config) {
            spec = measure_spec_from_json(read_json_file(*config.measure_config, "measure config"));
        }
        if (config.measure) {
            if (*config.measure != spec.kind) {
                spec.q.reset();
            }
            spec.kind = *config.measure;
        }
        if (config.q) {
            spec.q = config.q;
        }
        if (spec.kind != MotivicMeasure::Kind::PointCount) {
            spec.q.reset();
            spec.numerators.clear();
        }

        const Report r = build_report(config, g, spec);
        write_text(out, r, config.output);
        if (r.mode == Mode::Verify && !r.verified.value_or(false)) {
            err << "verification failed: oracle and closed form differ\n";
            return exit_mismatch;
        }
        return exit_ok;
    } catch (const graph_error &e) {
        err << "validation error: " << e.what() << '\n';
    } catch (const measure_error &e) {
        err << "measure error: " << e.what() << '\n';
    } catch (const unrealized_generator &e) {
        err << "measure error: " << e.what() << '\n';
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_validation;
}

} // namespace divzeta
