#include <divzeta/zeta.hpp>

#include <stdexcept>

namespace divzeta
{

namespace
{

const RingElem L = RingElem::lefschetz();

TPoly one_minus_t() { return TPoly{RingElem(1L), RingElem(-1L)}; }

TruncSeries one_minus_t_series(std::size_t order) { return one_minus_t().to_series(order); }

// Rational part of a vertex zeta and whether a symbolic series remains.
RationalFn vertex_prefactor(const CurveModel &model, unsigned punctures)
{
    RationalFn r(pow(one_minus_t(), punctures), TPoly::one());
    if (model.is_projective_line()) {
        r = r * RationalFn(TPoly::one(), one_minus_t() * TPoly{RingElem(1L), -L});
    }
    return r;
}

TruncSeries vertex_product(const DualGraph &g, std::size_t order)
{
    TruncSeries prod = TruncSeries::unit(order);
    for (const auto &v : g.vertices()) {
        prod *= zmot_vertex(v.model, v.punctures, order);
    }
    return prod;
}

ClosedForm vertex_closed_form(const DualGraph &g)
{
    ClosedForm cf;
    for (const auto &v : g.vertices()) {
        cf.prefactor = cf.prefactor * vertex_prefactor(v.model, v.punctures);
        if (!v.model.is_projective_line()) {
            cf.vertex_factors.push_back(v.model);
        }
    }
    return cf;
}

bool is_smooth_unmarked(const DualGraph &g)
{
    return g.vertices().size() == 1 && g.edges().empty() && g.legs().empty();
}

} // namespace

std::string_view to_string(ZetaKind k)
{
    switch (k) {
        case ZetaKind::Divisorial:
            return "divisorial";
        case ZetaKind::Hilbert:
            return "hilbert";
        case ZetaKind::KapranovNodal:
            return "kapranov-nodal";
        case ZetaKind::KapranovSmooth:
            return "kapranov-smooth";
    }
    return "?";
}

TruncSeries zmot_vertex(const CurveModel &model, unsigned punctures, std::size_t order)
{
    TruncSeries z(order);
    if (model.is_projective_line()) {
        // [Sym^d P^1] = 1 + L + ... + L^d
        RingElem acc = RingElem::one();
        RingElem power = RingElem::one();
        z[0] = acc;
        for (std::size_t d = 1; d <= order; ++d) {
            power *= L;
            acc += power;
            z[d] = acc;
        }
    } else {
        z[0] = RingElem::one();
        for (std::size_t d = 1; d <= order; ++d) {
            z[d] = RingElem::sym_pow(model.id, static_cast<std::uint32_t>(d));
        }
    }
    if (punctures != 0) {
        z *= pow(one_minus_t_series(order), punctures);
    }
    return z;
}

RationalFn node_factor_rational()
{
    return RationalFn(TPoly{RingElem(1L), -L}, TPoly{RingElem(1L), -L - RingElem(1L), RingElem(1L)});
}

TruncSeries node_factor(std::size_t order)
{
    return series_from_rational(node_factor_rational(), order);
}

TruncSeries ClosedForm::expand(std::size_t order) const
{
    TruncSeries s = series_from_rational(prefactor, order);
    for (const auto &m : vertex_factors) {
        s *= zmot_vertex(m, 0, order);
    }
    return s;
}

ClosedForm zdiv_rational(const DualGraph &g)
{
    const unsigned e = static_cast<unsigned>(g.edges().size());
    const unsigned n = static_cast<unsigned>(g.legs().size());
    ClosedForm cf = vertex_closed_form(g);
    cf.prefactor = pow(node_factor_rational(), e + n) * RationalFn(pow(one_minus_t(), 2 * e + n), TPoly::one())
                   * cf.prefactor;
    return cf;
}

ClosedForm zhilb_rational(const DualGraph &g)
{
    const unsigned e = static_cast<unsigned>(g.edges().size());
    ClosedForm cf = vertex_closed_form(g);
    cf.prefactor = RationalFn(pow(TPoly{RingElem(1L), RingElem(-1L), L}, e), TPoly::one()) * cf.prefactor;
    return cf;
}

ClosedForm zmot_nodal_rational(const DualGraph &g)
{
    const unsigned e = static_cast<unsigned>(g.edges().size());
    ClosedForm cf = vertex_closed_form(g);
    cf.prefactor = RationalFn(pow(one_minus_t(), e), TPoly::one()) * cf.prefactor;
    return cf;
}

TruncSeries zdiv_closed(const DualGraph &g, std::size_t order)
{
    const unsigned e = static_cast<unsigned>(g.edges().size());
    const unsigned n = static_cast<unsigned>(g.legs().size());
    return pow(node_factor(order), e + n) * pow(one_minus_t_series(order), 2 * e + n) * vertex_product(g, order);
}

TruncSeries zhilb_closed(const DualGraph &g, std::size_t order)
{
    const unsigned e = static_cast<unsigned>(g.edges().size());
    const TruncSeries hilb_node = TPoly{RingElem(1L), RingElem(-1L), L}.to_series(order);
    return pow(hilb_node, e) * vertex_product(g, order);
}

TruncSeries zmot_nodal_closed(const DualGraph &g, std::size_t order)
{
    const unsigned e = static_cast<unsigned>(g.edges().size());
    return pow(one_minus_t_series(order), e) * vertex_product(g, order);
}

TruncSeries zeta_series(ZetaKind kind, const DualGraph &g, std::size_t order)
{
    switch (kind) {
        case ZetaKind::Divisorial:
            return zdiv_closed(g, order);
        case ZetaKind::Hilbert:
            return zhilb_closed(g, order);
        case ZetaKind::KapranovNodal:
            return zmot_nodal_closed(g, order);
        case ZetaKind::KapranovSmooth:
            if (!is_smooth_unmarked(g)) {
                throw std::invalid_argument("kapranov-smooth needs a single vertex without edges or legs");
            }
            return zmot_vertex(g.vertices().front().model, g.vertices().front().punctures, order);
    }
    throw std::invalid_argument("unknown zeta kind");
}

ClosedForm zeta_closed_form(ZetaKind kind, const DualGraph &g)
{
    switch (kind) {
        case ZetaKind::Divisorial:
            return zdiv_rational(g);
        case ZetaKind::Hilbert:
            return zhilb_rational(g);
        case ZetaKind::KapranovNodal:
            return zmot_nodal_rational(g);
        case ZetaKind::KapranovSmooth:
            if (!is_smooth_unmarked(g)) {
                throw std::invalid_argument("kapranov-smooth needs a single vertex without edges or legs");
            }
            return vertex_closed_form(g);
    }
    throw std::invalid_argument("unknown zeta kind");
}

} // namespace divzeta
