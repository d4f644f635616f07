#include <doctest.h>

#include <divzeta/series.hpp>

#include "battery.hpp"

using namespace divzeta;

namespace
{

const RingElem L = RingElem::lefschetz();

TruncSeries poly_series(std::initializer_list<RingElem> cs, std::size_t order)
{
    return TPoly(cs).to_series(order);
}

// Independent oracle: f_d = (L+1) f_{d-1} - f_{d-2}, the expansion of
// 1 / (1 - (L+1) t + t^2), seeded with f_0 and f_1.
std::vector<RingElem> recurrence(RingElem f0, RingElem f1, std::size_t n)
{
    std::vector<RingElem> f{std::move(f0), std::move(f1)};
    while (f.size() <= n) {
        const std::size_t d = f.size();
        f.push_back((L + 1) * f[d - 1] - f[d - 2]);
    }
    return f;
}

} // namespace

TEST_CASE("series_mul examples")
{
    const auto one_plus_t = poly_series({1L, 1L}, 4);
    const auto one_minus_t = poly_series({1L, -1L}, 4);
    CHECK(one_plus_t * one_minus_t == poly_series({1L, 0L, -1L}, 4));

    TruncSeries geometric(std::vector<RingElem>(5, RingElem(1L)));
    CHECK(one_minus_t * geometric == TruncSeries::unit(4));

    const RationalFn gm(TPoly{1L, -1L}, TPoly{RingElem(1L), -L});
    const RationalFn gm_inv(TPoly{RingElem(1L), -L}, TPoly{1L, -1L});
    CHECK(series_from_rational(gm, 6) * series_from_rational(gm_inv, 6) == TruncSeries::unit(6));
}

TEST_CASE("series order mismatch is rejected")
{
    CHECK_THROWS_AS(TruncSeries::unit(3) * TruncSeries::unit(4), std::invalid_argument);
    CHECK_THROWS_AS(TruncSeries::unit(3) + TruncSeries::unit(4), std::invalid_argument);
}

TEST_CASE("series_inverse examples")
{
    CHECK(inverse(poly_series({1L, -1L}, 5)) == TruncSeries(std::vector<RingElem>(6, RingElem(1L))));

    const auto inv = inverse(poly_series({RingElem(1L), -L}, 5));
    for (unsigned d = 0; d <= 5; ++d) {
        CHECK(inv[d] == pow(L, d));
    }

    const auto f = inverse(poly_series({RingElem(1L), -L - 1, RingElem(1L)}, 6));
    const auto oracle = recurrence(RingElem(1L), L + 1, 6);
    for (unsigned d = 0; d <= 6; ++d) {
        CHECK(f[d] == oracle[d]);
    }
    CHECK(f[2] == L * L + 2 * L);
    CHECK(f[3] == pow(L, 3) + 3 * L * L + L - 1);
}

TEST_CASE("non-unit constant term is not invertible")
{
    CHECK_THROWS_AS(inverse(poly_series({2L, 1L}, 3)), non_invertible_series);
    CHECK_THROWS_AS(inverse(poly_series({L, 1L}, 3)), non_invertible_series);
    CHECK_THROWS_AS(inverse(TruncSeries(3)), non_invertible_series);
}

TEST_CASE("series_from_rational examples")
{
    const auto gm = series_from_rational(RationalFn(TPoly{1L, -1L}, TPoly{RingElem(1L), -L}), 5);
    CHECK(gm[0] == 1);
    for (unsigned d = 1; d <= 5; ++d) {
        CHECK(gm[d] == pow(L, d) - pow(L, d - 1));
    }

    const auto node = series_from_rational(
        RationalFn(TPoly{RingElem(1L), -L}, TPoly{RingElem(1L), -L - 1, RingElem(1L)}), 8);
    const auto oracle = recurrence(RingElem(1L), RingElem(1L), 8);
    for (unsigned d = 0; d <= 8; ++d) {
        CHECK(node[d] == oracle[d]);
    }
    CHECK(node[2] == L);
    CHECK(node[3] == L * L + L - 1);

    CHECK(series_from_rational(RationalFn(), 4) == TruncSeries::unit(4));
}

TEST_CASE("series_pow examples")
{
    const auto one_minus_t = poly_series({1L, -1L}, 4);
    CHECK(pow(one_minus_t, 0U) == TruncSeries::unit(4));
    CHECK(pow(one_minus_t, 2U) == poly_series({1L, -2L, 1L}, 4));
    CHECK(pow(one_minus_t, -1) == TruncSeries(std::vector<RingElem>(5, RingElem(1L))));

    // Cauchy square of 1, L-1, L^2-L at t^2: 2(L^2-L) + (L-1)^2.
    const auto gm = series_from_rational(RationalFn(TPoly{1L, -1L}, TPoly{RingElem(1L), -L}), 3);
    const auto sq = pow(gm, 2U);
    CHECK(sq[2] == 2 * (L * L - L) + (L - 1) * (L - 1));
    CHECK(sq[2] == 3 * L * L - 4 * L + 1);
}

TEST_CASE("inverse property on random unit series")
{
    testing::RingGen gen(99);
    for (std::size_t order = 0; order <= 12; ++order) {
        for (int rep = 0; rep < 3; ++rep) {
            const TruncSeries a = gen.unit_series(order);
            REQUIRE(a * inverse(a) == TruncSeries::unit(order));
            REQUIRE(inverse(a) * a == TruncSeries::unit(order));
        }
    }
}

TEST_CASE("rational expansion times denominator recovers numerator")
{
    testing::RingGen gen(5);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<RingElem> num{gen.element(3, 2), gen.element(3, 2), gen.element(3, 2)};
        std::vector<RingElem> den{RingElem(1L), gen.element(3, 2), gen.element(3, 2)};
        const RationalFn r{TPoly(num), TPoly(den)};
        for (std::size_t order : {0U, 1U, 4U, 9U}) {
            const TruncSeries e = series_from_rational(r, order);
            REQUIRE(e * r.denominator().to_series(order) == r.numerator().to_series(order));
        }
    }
}

TEST_CASE("rational function equality by cross multiplication")
{
    const TPoly a{RingElem(1L), -L};
    const TPoly b{1L, -1L};
    CHECK(RationalFn(a, b) == RationalFn(a * b, b * b));
    CHECK_FALSE(RationalFn(a, b) == RationalFn(b, a));
    CHECK_THROWS_AS(RationalFn(a, TPoly{2L, 1L}), std::invalid_argument);
    CHECK_THROWS_AS(RationalFn(a, TPoly{}), std::invalid_argument);
}

TEST_CASE("polynomial text form")
{
    CHECK(to_string(TPoly{RingElem(1L), -L - 1, RingElem(1L)}) == "1 + (-L - 1)*t + t^2");
    CHECK(to_string(TPoly{RingElem(1L), -L}) == "1 - L*t");
    CHECK(to_string(IntPoly{Integer(1), Integer(-2), Integer(5)}) == "1 - 2*t + 5*t^2");
    CHECK(to_string(TPoly{}) == "0");
}

TEST_CASE("integer series")
{
    const IntSeries s = IntPoly{Integer(1), Integer(-3)}.to_series(4);
    const IntSeries inv = inverse(s);
    CHECK(inv[4] == 81);
    CHECK(s * inv == IntSeries::unit(4));
}
