// Acceptance suite: one PASS/FAIL line per criterion; nonzero exit on failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <divzeta/cli.hpp>
#include <divzeta/measures.hpp>
#include <divzeta/strata.hpp>
#include <divzeta/zeta.hpp>

#include "battery.hpp"

using namespace divzeta;
using testing::sym_vertex;

namespace
{

const RingElem L = RingElem::lefschetz();

class Criterion
{
public:
    explicit Criterion(std::ostringstream &log) : log_(log) {}

    bool expect(bool ok, const std::string &what)
    {
        if (!ok) {
            log_ << "    failed: " << what << '\n';
            ok_ = false;
        }
        return ok;
    }

    void note(const std::string &text) { log_ << "    " << text << '\n'; }

    bool ok() const { return ok_; }

private:
    std::ostringstream &log_;
    bool ok_ = true;
};

using Body = std::function<void(Criterion &)>;

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool all_zero(const std::vector<DegreeCheck> &checks)
{
    return std::all_of(checks.begin(), checks.end(), [](const DegreeCheck &c) { return c.zero; });
}

MotivicMeasure test_point_count(const DualGraph &g, long q)
{
    MeasureSpec spec{MotivicMeasure::Kind::PointCount, Integer(q), {}};
    for (const auto &v : g.vertices()) {
        if (std::holds_alternative<SymbolicCurve>(v.model.shape)) {
            spec.numerators[v.model.id] = testing::test_numerator(v.genus, q);
        }
    }
    return make_measure(spec, g);
}

constexpr unsigned battery_degree = 6;

void criterion1(Criterion &c)
{
    const auto start = std::chrono::steady_clock::now();
    const auto n1 = enumerate_stable_pairs(testing::marked_curve(), 2).size();
    const auto n2 = enumerate_stable_pairs(testing::two_components(), 2).size();
    const double elapsed = seconds_since(start);
    c.expect(n1 == 4, "one vertex, one leg: " + std::to_string(n1) + " strata, expected 4");
    c.expect(n2 == 7, "two vertices, one edge: " + std::to_string(n2) + " strata, expected 7");
    c.expect(elapsed < 0.1, "runtime " + std::to_string(elapsed) + " s");
}

void criterion2(Criterion &c)
{
    const auto start = std::chrono::steady_clock::now();
    for (const auto &[name, g] : testing::battery()) {
        const TruncSeries closed = zdiv_closed(g, battery_degree);
        for (unsigned d = 0; d <= battery_degree; ++d) {
            c.expect(zdiv_strata_coeff(g, d) == closed[d], name + " at d=" + std::to_string(d));
        }
    }
    const double elapsed = seconds_since(start);
    c.expect(elapsed < 5.0, "runtime " + std::to_string(elapsed) + " s");
}

void criterion3(Criterion &c)
{
    const TruncSeries gm = series_from_rational(RationalFn(TPoly{1L, -1L}, TPoly{RingElem(1L), -L}), 10);
    const CurveModel p1 = projective_line_model("p");
    for (unsigned d = 1; d <= 10; ++d) {
        const RingElem expected = pow(L, d) - pow(L, d - 1);
        const std::string at = " at d=" + std::to_string(d);
        c.expect(torus_class(d) == expected, "closed form" + at);
        c.expect(gm[d] == expected, "series expansion" + at);
        c.expect(punctured_sym_class(p1, 2, d) == expected, "twice-punctured P^1" + at);
    }
}

void criterion4(Criterion &c)
{
    const TruncSeries node = node_factor(8);
    for (unsigned d = 1; d <= 8; ++d) {
        c.expect(composition_torus_sum(d) == node[d], "d=" + std::to_string(d));
    }
    c.expect(node[2] == L, "t^2 coefficient");
    c.expect(node[3] == L * L + L - 1, "t^3 coefficient");
}

void criterion5(Criterion &c)
{
    const unsigned N = 5;
    // Loop at u versus leg plus puncture at u, on a two-vertex graph.
    const DualGraph base({sym_vertex("u", 1), sym_vertex("w", 2)}, {{0, 1}}, {});
    const DualGraph looped = add_loop(base, 0);
    const DualGraph cut = add_puncture(add_leg(base, 0), 0);
    for (unsigned d = 0; d <= N; ++d) {
        c.expect(zdiv_strata_coeff(looped, d) == zdiv_strata_coeff(cut, d), "loop exchange at d=" + std::to_string(d));
    }

    // A separating edge convolves the leg side with the punctured side.
    const DualGraph x({sym_vertex("u", 2)}, {}, {}, {true});
    const DualGraph y({sym_vertex("w", 1)}, {{0, 0}}, {});
    const DualGraph glued = glue(x, 0, y, 0);
    const DualGraph a = add_leg(x, 0);
    const DualGraph b = add_puncture(y, 0);
    for (unsigned d = 0; d <= N; ++d) {
        RingElem conv;
        for (unsigned i = 0; i <= d; ++i) {
            conv += zdiv_strata_coeff(a, i) * zdiv_strata_coeff(b, d - i);
        }
        c.expect(zdiv_strata_coeff(glued, d) == conv, "cross convolution at d=" + std::to_string(d));
    }
}

void criterion6(Criterion &c)
{
    const unsigned N = 10;
    const IntSeries one_minus_t = IntPoly{Integer(1), Integer(-1)}.to_series(N);
    for (const auto &[name, g] : testing::battery()) {
        int exponent = static_cast<int>(g.edges().size());
        for (const auto &v : g.vertices()) {
            exponent += 2 * static_cast<int>(v.genus) - 2 + static_cast<int>(v.punctures);
        }
        const MotivicMeasure eu = make_measure(MeasureSpec{MotivicMeasure::Kind::EulerCharacteristic, {}, {}}, g);
        c.expect(eu.apply(zdiv_closed(g, N)) == pow(one_minus_t, exponent), name);
    }
}

void criterion7(Criterion &c)
{
    for (long q : {2L, 3L, 5L}) {
        const std::string qs = "q=" + std::to_string(q);
        const MotivicMeasure m = MotivicMeasure::point_count(q, {{"p", ModelRealization{0, std::vector<Integer>{Integer(1)}}}});
        Integer qd = q;
        for (unsigned d = 0; d <= 8; ++d) {
            c.expect(m.apply(RingElem::sym_pow("p", d)) == (qd - 1) / (q - 1),
                     "P^1 count, " + qs + ", d=" + std::to_string(d));
            qd *= q;
        }
        for (const auto &[name, g] : testing::battery()) {
            c.expect(all_zero(verify_zdiv(g, battery_degree, test_point_count(g, q))), name + ", " + qs);
        }
    }
    const DualGraph e({Vertex{"E", 1, elliptic_model("E", 2), 0}}, {}, {0});
    const MeasureSpec spec{MotivicMeasure::Kind::PointCount, Integer(5), {}};
    c.expect(make_measure(spec, e).apply(zdiv_closed(e, 1))[1] == 4, "elliptic q=5 trace 2, degree 1");
}

void criterion8(Criterion &c)
{
    const unsigned N = 10;
    for (unsigned genus : {0U, 1U, 2U, 3U}) {
        const DualGraph g({sym_vertex("m", genus)}, {}, {}, {true});
        const TruncSeries smooth = zeta_series(ZetaKind::KapranovSmooth, g, N);
        const std::string gs = "genus " + std::to_string(genus);
        c.expect(zeta_series(ZetaKind::Divisorial, g, N) == smooth, "divisorial, " + gs);
        c.expect(zeta_series(ZetaKind::Hilbert, g, N) == smooth, "Hilbert, " + gs);
        c.expect(zeta_series(ZetaKind::KapranovNodal, g, N) == smooth, "nodal, " + gs);
    }
}

void criterion9(Criterion &c)
{
    const unsigned N = 4;
    const TruncSeries h = zhilb_closed(testing::two_components(), N);
    // Hand expansion: coefficient d of (1 - t + L t^2) * sum_i c[u,i] t^i * sum_j c[w,j] t^j.
    auto zu_zw = [](unsigned d) {
        RingElem s;
        for (unsigned i = 0; i <= d; ++i) {
            s += RingElem::sym_pow("u", i) * RingElem::sym_pow("w", d - i);
        }
        return s;
    };
    for (unsigned d = 0; d <= N; ++d) {
        RingElem expected = zu_zw(d);
        if (d >= 1) {
            expected -= zu_zw(d - 1);
        }
        if (d >= 2) {
            expected += L * zu_zw(d - 2);
        }
        c.expect(h[d] == expected, "d=" + std::to_string(d));
    }
}

// Stratum class with the torus factor of one chain entry raised by one.
RingElem flipped_class(const StrataEvaluator &ev, const StablePair &p, std::size_t flip)
{
    RingElem x = RingElem::one();
    for (std::size_t v = 0; v < p.vertex_degrees.size(); ++v) {
        x *= ev.vertex_class(v, p.vertex_degrees[v]);
    }
    std::size_t k = 0;
    for (const auto *chains : {&p.edge_chains, &p.leg_chains}) {
        for (const auto &chain : *chains) {
            for (unsigned a : chain) {
                x *= ev.torus(k++ == flip ? a : a - 1);
            }
        }
    }
    return x;
}

std::size_t chain_entries(const StablePair &p)
{
    std::size_t n = 0;
    for (const auto *chains : {&p.edge_chains, &p.leg_chains}) {
        for (const auto &chain : *chains) {
            n += chain.size();
        }
    }
    return n;
}

void criterion10(Criterion &c)
{
    const MotivicMeasure symbolic = MotivicMeasure::symbolic();
    std::size_t mutants = 0;
    for (const auto &[name, g] : testing::battery()) {
        const StrataEvaluator ev(g, battery_degree);
        std::vector<RingElem> exact(battery_degree + 1);
        for (unsigned d = 0; d <= battery_degree; ++d) {
            exact[d] = sum_strata(ev, enumerate_stable_pairs(g, d));
        }
        c.expect(all_zero(verify_zdiv(g, battery_degree, symbolic, [&](unsigned d) { return exact[d]; })),
                 name + ": unmutated oracle");

        for (unsigned d = 0; d <= battery_degree; ++d) {
            const auto pairs = enumerate_stable_pairs(g, d);
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                const RingElem cls = ev.stratum_class(pairs[i]);
                auto detected = [&](const RingElem &mutated) {
                    ++mutants;
                    const auto checks = verify_zdiv(g, d, symbolic, [&](unsigned k) {
                        return k == d ? mutated : exact[k];
                    });
                    return !all_zero(checks);
                };
                const std::string where = name + " d=" + std::to_string(d) + " pair " + to_string(g, pairs[i]);
                c.expect(detected(exact[d] - cls), "dropped " + where);
                for (std::size_t k = 0; k < chain_entries(pairs[i]); ++k) {
                    c.expect(detected(exact[d] - cls + flipped_class(ev, pairs[i], k)),
                             "flipped entry " + std::to_string(k) + " of " + where);
                }
            }
        }
    }
    c.expect(mutants > 0, "no mutants generated");
    c.note(std::to_string(mutants) + " mutants checked");
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, Body>> criteria{
        {"strata counts of the one-leg and two-component graphs", criterion1},
        {"oracle equals closed divisorial form on the battery, d <= 6", criterion2},
        {"torus classes", criterion3},
        {"marked-point factor", criterion4},
        {"loop exchange and cross convolution at the strata level", criterion5},
        {"Euler characteristic specialization", criterion6},
        {"point-count specialization", criterion7},
        {"smooth unmarked degeneration", criterion8},
        {"Hilbert formula on the two-component graph", criterion9},
        {"verifier detects every single-stratum mutation", criterion10},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::ostringstream log;
        Criterion c(log);
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception &e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        std::cout << (c.ok() ? "PASS" : "FAIL") << ' ' << (i + 1) << ": " << criteria[i].first << " ("
                  << seconds_since(start) << " s)\n"
                  << log.str();
        failed += c.ok() ? 0 : 1;
    }
    std::cout << (criteria.size() - failed) << '/' << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
