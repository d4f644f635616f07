#include <doctest.h>

#include <divzeta/zeta.hpp>

#include "battery.hpp"

using namespace divzeta;
using testing::sym_vertex;

namespace
{

const RingElem L = RingElem::lefschetz();

RingElem c(const std::string &m, std::uint32_t d) { return RingElem::sym_pow(m, d); }

TruncSeries one_minus_t(std::size_t order) { return TPoly{1L, -1L}.to_series(order); }

} // namespace

TEST_CASE("zmot_vertex examples")
{
    const auto torus = zmot_vertex(projective_line_model("p"), 2, 6);
    const auto gm = series_from_rational(RationalFn(TPoly{1L, -1L}, TPoly{RingElem(1L), -L}), 6);
    CHECK(torus == gm);

    const auto z = zmot_vertex(symbolic_model("m", 3), 0, 2);
    CHECK(z[0] == 1);
    CHECK(z[1] == c("m", 1));
    CHECK(z[2] == c("m", 2));

    // Cauchy product with (1 - t): the t^2 term is c2 - c1.
    const auto zp = zmot_vertex(symbolic_model("m", 3), 1, 2);
    CHECK(zp[1] == c("m", 1) - 1);
    CHECK(zp[2] == c("m", 2) - c("m", 1));

    const auto p1 = zmot_vertex(projective_line_model("p"), 0, 3);
    CHECK(p1[3] == pow(L, 3) + L * L + L + 1);

    // Elliptic and Weil models stay symbolic.
    CHECK(zmot_vertex(elliptic_model("E", 2), 0, 2)[2] == c("E", 2));
}

TEST_CASE("node_factor coefficients")
{
    const auto n = node_factor(8);
    CHECK(n[0] == 1);
    CHECK(n[1] == 1);
    CHECK(n[2] == L);
    CHECK(n[3] == L * L + L - 1);
    CHECK(n[4] == pow(L, 4 - 1) + 2 * L * L - L - 1);
    const RationalFn r = node_factor_rational();
    CHECK(r.numerator() == TPoly{RingElem(1L), -L});
    CHECK(r.denominator() == TPoly{RingElem(1L), -L - 1, RingElem(1L)});
}

TEST_CASE("zdiv_closed examples")
{
    const DualGraph smooth({sym_vertex("m", 2)}, {}, {});
    CHECK(zdiv_closed(smooth, 6) == zmot_vertex(smooth.vertices()[0].model, 0, 6));

    CHECK(zdiv_closed(testing::genus1_loop(), 3)[1] == c("m", 1) - 1);
    CHECK(zdiv_closed(testing::marked_curve(), 3)[1] == c("m", 1));
}

TEST_CASE("zhilb_closed examples")
{
    const DualGraph smooth({sym_vertex("m", 2)}, {}, {});
    CHECK(zhilb_closed(smooth, 5) == zmot_vertex(smooth.vertices()[0].model, 0, 5));

    const auto h = zhilb_closed(testing::two_components(), 4);
    CHECK(h[2] == c("u", 2) + c("u", 1) * c("w", 1) + c("w", 2) - c("u", 1) - c("w", 1) + L);

    CHECK(zhilb_closed(testing::genus1_loop(), 2)[1] == c("m", 1) - 1);

    // Legs are ignored.
    CHECK(zhilb_closed(testing::marked_curve(), 5) == zhilb_closed(DualGraph({sym_vertex("m", 1)}, {}, {}, {true}), 5));
}

TEST_CASE("zmot_nodal_closed examples")
{
    const DualGraph smooth({sym_vertex("m", 2)}, {}, {});
    CHECK(zmot_nodal_closed(smooth, 5) == zmot_vertex(smooth.vertices()[0].model, 0, 5));
    CHECK(zmot_nodal_closed(testing::genus1_loop(), 2)[1] == c("m", 1) - 1);

    for (const auto &[name, g] : testing::battery()) {
        CAPTURE(name);
        const unsigned k = static_cast<unsigned>(g.edges().size() + g.legs().size());
        REQUIRE(zdiv_closed(g, 8) == zmot_nodal_closed(g, 8) * pow(node_factor(8), k) * pow(one_minus_t(8), k));
    }
}

TEST_CASE("closed forms expand to the series constructors")
{
    for (const auto &[name, g] : testing::battery()) {
        CAPTURE(name);
        REQUIRE(zdiv_rational(g).expand(9) == zdiv_closed(g, 9));
        REQUIRE(zhilb_rational(g).expand(9) == zhilb_closed(g, 9));
        REQUIRE(zmot_nodal_rational(g).expand(9) == zmot_nodal_closed(g, 9));
    }
    // P^1 vertices fold into the prefactor; symbolic ones stay as factors.
    CHECK(zdiv_rational(testing::theta()).vertex_factors.empty());
    CHECK(zdiv_rational(testing::two_components()).vertex_factors.size() == 2);
}

TEST_CASE("gluing identities of the closed form")
{
    const std::size_t N = 8;

    SUBCASE("closing: one puncture multiplies by (1 - t)")
    {
        for (const auto &[name, g] : testing::battery()) {
            CAPTURE(name);
            REQUIRE(zdiv_closed(add_puncture(g, 0), N) == zdiv_closed(g, N) * one_minus_t(N));
        }
    }

    SUBCASE("loop equals leg plus puncture")
    {
        const TruncSeries factor = node_factor(N) * pow(one_minus_t(N), 2U);
        for (const auto &[name, g] : testing::battery()) {
            CAPTURE(name);
            const TruncSeries looped = zdiv_closed(add_loop(g, 0), N);
            REQUIRE(looped == zdiv_closed(add_puncture(add_leg(g, 0), 0), N));
            REQUIRE(looped == zdiv_closed(g, N) * factor);
        }
    }

    SUBCASE("separating edge")
    {
        const DualGraph x({sym_vertex("x", 1)}, {}, {}, {true});
        const DualGraph y({sym_vertex("y", 2)}, {{0, 0}}, {0});
        const DualGraph joined = glue(x, 0, y, 0);
        const TruncSeries lhs = zdiv_closed(joined, N);
        const TruncSeries rhs = zdiv_closed(add_leg(x, 0), N) * zdiv_closed(add_puncture(y, 0), N);
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("smooth unmarked degeneration")
{
    for (const auto &model : {symbolic_model("m", 0), symbolic_model("m", 4), projective_line_model("p"),
                              elliptic_model("E", -1)}) {
        const DualGraph g({Vertex{"v", model.genus, CurveModel{"v", model.genus, model.shape}, 0}}, {}, {}, {true});
        const TruncSeries z = zeta_series(ZetaKind::KapranovSmooth, g, 10);
        CHECK(zeta_series(ZetaKind::Divisorial, g, 10) == z);
        CHECK(zeta_series(ZetaKind::Hilbert, g, 10) == z);
        CHECK(zeta_series(ZetaKind::KapranovNodal, g, 10) == z);
    }
    CHECK_THROWS_AS(zeta_series(ZetaKind::KapranovSmooth, testing::marked_curve(), 3), std::invalid_argument);
}

TEST_CASE("unit constant term")
{
    for (const auto &[name, g] : testing::battery()) {
        CAPTURE(name);
        for (auto kind : {ZetaKind::Divisorial, ZetaKind::Hilbert, ZetaKind::KapranovNodal}) {
            REQUIRE(zeta_series(kind, g, 4)[0].is_one());
        }
    }
}
