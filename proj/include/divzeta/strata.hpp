#pragma once

// Brute-force oracle for the divisorial zeta function: enumerate the stable
// pairs of a dual graph and sum the classes of their strata.

#include <cstddef>
#include <string>
#include <vector>

#include <divzeta/graph.hpp>
#include <divzeta/ring.hpp>

namespace divzeta
{

using Composition = std::vector<unsigned>;

// Ordered compositions of n (positive parts), lexicographic order. n = 0
// yields the single empty composition.
std::vector<Composition> compositions(unsigned n);

// Weak compositions of n into `parts` nonnegative parts, lexicographic order.
std::vector<Composition> weak_compositions(unsigned n, std::size_t parts);

// A subdivision of the dual graph plus a degree assignment. Every chain entry
// is the degree on one exceptional P^1 and is >= 1. Edge chains are read from
// edge.first to edge.second (half-edge slot order for loops); leg chains from
// the component outward.
struct StablePair {
    std::vector<unsigned> vertex_degrees;
    std::vector<Composition> edge_chains;
    std::vector<Composition> leg_chains;

    unsigned degree() const;

    friend bool operator==(const StablePair &, const StablePair &) = default;
    // Lexicographic in (vertex_degrees, edge_chains, leg_chains).
    friend auto operator<=>(const StablePair &, const StablePair &) = default;
};

// All stable pairs of total degree d, sorted ascending. d = 0 gives the
// single pair with zero degrees and no chains.
std::vector<StablePair> enumerate_stable_pairs(const DualGraph &g, unsigned d);

// Dump line, e.g. "v:{v1:0} e:{} l:{leg0:[1,1]}".
std::string to_string(const DualGraph &g, const StablePair &p);

// [G_m], the m-th symmetric power of the torus: 1 if m = 0, else L^m - L^(m-1).
RingElem torus_class(unsigned m);

// [Sym^d of the model minus `holes` points]: the t^d coefficient of
// Z_mot(model) (1-t)^holes.
RingElem punctured_sym_class(const CurveModel &model, unsigned holes, unsigned d);

// Class of one stratum: prod_v punctured_sym_class(v, val+legs+punctures,
// deg v) times torus_class(a - 1) for every chain entry a.
RingElem stratum_class(const DualGraph &g, const StablePair &p);

// Precomputed vertex and torus classes up to a maximum degree; stratum
// evaluation then costs only multiplications.
class StrataEvaluator
{
public:
    StrataEvaluator(const DualGraph &g, unsigned max_degree);

    const DualGraph &graph() const noexcept { return *graph_; }
    unsigned max_degree() const noexcept { return max_degree_; }

    const RingElem &vertex_class(std::size_t vertex, unsigned d) const { return vertex_classes_.at(vertex).at(d); }
    const RingElem &torus(unsigned m) const { return torus_.at(m); }

    RingElem stratum_class(const StablePair &p) const;

private:
    const DualGraph *graph_;
    unsigned max_degree_;
    std::vector<std::vector<RingElem>> vertex_classes_;
    std::vector<RingElem> torus_;
};

// Sum of stratum classes over the given pairs. The OpenMP kernel partitions
// the pairs across threads; the serial version is the reference.
RingElem sum_strata(const StrataEvaluator &ev, const std::vector<StablePair> &pairs);
RingElem sum_strata_serial(const StrataEvaluator &ev, const std::vector<StablePair> &pairs);

// Oracle value of [Div_d^+]: sum over enumerate_stable_pairs(g, d).
RingElem zdiv_strata_coeff(const DualGraph &g, unsigned d);
RingElem zdiv_strata_coeff_serial(const DualGraph &g, unsigned d);

// Sum over ordered compositions a of d of prod_i torus_class(a_i - 1).
RingElem composition_torus_sum(unsigned d);

} // namespace divzeta
