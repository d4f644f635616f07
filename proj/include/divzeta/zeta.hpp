#pragma once

// Closed-form divisorial, Hilbert and Kapranov zeta functions of a dual graph.

#include <cstddef>
#include <string_view>
#include <vector>

#include <divzeta/graph.hpp>
#include <divzeta/series.hpp>

namespace divzeta
{

inline constexpr std::size_t default_order = 10;

enum class ZetaKind { Divisorial, Hilbert, KapranovNodal, KapranovSmooth };

std::string_view to_string(ZetaKind k);

// Kapranov zeta of the normalization of one component with `punctures`
// points removed. Symbolic, elliptic and Weil models produce the generators
// c[id,d]; P^1 expands 1/((1-t)(1-Lt)).
TruncSeries zmot_vertex(const CurveModel &model, unsigned punctures, std::size_t order);

// (1 - L t) / (1 - L t - t + t^2), the factor contributed by each node branch
// or marked point.
RationalFn node_factor_rational();
TruncSeries node_factor(std::size_t order);

// A zeta function as an unreduced rational prefactor times the Kapranov
// series of every non-rational vertex model (kept symbolic).
struct ClosedForm {
    RationalFn prefactor;
    std::vector<CurveModel> vertex_factors;

    TruncSeries expand(std::size_t order) const;
};

ClosedForm zdiv_rational(const DualGraph &g);
ClosedForm zhilb_rational(const DualGraph &g);
ClosedForm zmot_nodal_rational(const DualGraph &g);

// node_factor^(|E|+n) (1-t)^(2|E|+n) prod_v zmot_vertex(v).
TruncSeries zdiv_closed(const DualGraph &g, std::size_t order);
// (1 - t + L t^2)^|E| prod_v zmot_vertex(v); legs are ignored.
TruncSeries zhilb_closed(const DualGraph &g, std::size_t order);
// (1-t)^|E| prod_v zmot_vertex(v).
TruncSeries zmot_nodal_closed(const DualGraph &g, std::size_t order);

// Dispatch by kind. KapranovSmooth requires a single vertex without edges
// or legs.
TruncSeries zeta_series(ZetaKind kind, const DualGraph &g, std::size_t order);
ClosedForm zeta_closed_form(ZetaKind kind, const DualGraph &g);

} // namespace divzeta
