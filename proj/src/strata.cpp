#include <divzeta/strata.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace divzeta
{

std::vector<Composition> compositions(unsigned n)
{
    if (n == 0) {
        return {Composition{}};
    }
    // Recursing on the first part yields lexicographic order.
    std::vector<Composition> out;
    for (unsigned first = 1; first <= n; ++first) {
        for (auto &rest : compositions(n - first)) {
            Composition c;
            c.reserve(rest.size() + 1);
            c.push_back(first);
            c.insert(c.end(), rest.begin(), rest.end());
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::vector<Composition> weak_compositions(unsigned n, std::size_t parts)
{
    std::vector<Composition> out;
    if (parts == 0) {
        if (n == 0) {
            out.emplace_back();
        }
        return out;
    }
    Composition current(parts, 0);
    auto rec = [&](auto &&self, std::size_t slot, unsigned remaining) -> void {
        if (slot + 1 == parts) {
            current[slot] = remaining;
            out.push_back(current);
            return;
        }
        for (unsigned k = 0; k <= remaining; ++k) {
            current[slot] = k;
            self(self, slot + 1, remaining - k);
        }
    };
    rec(rec, 0, n);
    return out;
}

unsigned StablePair::degree() const
{
    unsigned total = std::accumulate(vertex_degrees.begin(), vertex_degrees.end(), 0U);
    for (const auto &c : edge_chains) {
        total = std::accumulate(c.begin(), c.end(), total);
    }
    for (const auto &c : leg_chains) {
        total = std::accumulate(c.begin(), c.end(), total);
    }
    return total;
}

std::vector<StablePair> enumerate_stable_pairs(const DualGraph &g, unsigned d)
{
    const std::size_t nv = g.vertices().size();
    const std::size_t ne = g.edges().size();
    const std::size_t nl = g.legs().size();
    const std::size_t nchains = ne + nl;

    std::vector<std::vector<Composition>> comp_cache(d + 1);
    for (unsigned s = 0; s <= d; ++s) {
        comp_cache[s] = compositions(s);
    }

    std::vector<StablePair> out;
    for (const auto &shares : weak_compositions(d, nv + nchains)) {
        StablePair base;
        base.vertex_degrees.assign(shares.begin(), shares.begin() + static_cast<std::ptrdiff_t>(nv));
        base.edge_chains.resize(ne);
        base.leg_chains.resize(nl);

        // Mixed-radix odometer over the composition choices of every chain.
        std::vector<std::size_t> choice(nchains, 0);
        while (true) {
            StablePair p = base;
            for (std::size_t c = 0; c < nchains; ++c) {
                const Composition &comp = comp_cache[shares[nv + c]][choice[c]];
                (c < ne ? p.edge_chains[c] : p.leg_chains[c - ne]) = comp;
            }
            out.push_back(std::move(p));

            bool advanced = false;
            for (std::size_t c = nchains; c-- > 0;) {
                if (++choice[c] < comp_cache[shares[nv + c]].size()) {
                    advanced = true;
                    break;
                }
                choice[c] = 0;
            }
            if (!advanced) {
                break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace
{

std::string chain_string(const Composition &c)
{
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i != 0) {
            s += ',';
        }
        s += std::to_string(c[i]);
    }
    return s + "]";
}

} // namespace

std::string to_string(const DualGraph &g, const StablePair &p)
{
    std::string s = "v:{";
    for (std::size_t i = 0; i < p.vertex_degrees.size(); ++i) {
        s += (i ? "," : "") + g.vertices()[i].id + ":" + std::to_string(p.vertex_degrees[i]);
    }
    s += "} e:{";
    for (std::size_t i = 0; i < p.edge_chains.size(); ++i) {
        s += (i ? ",e" : "e") + std::to_string(i) + ":" + chain_string(p.edge_chains[i]);
    }
    s += "} l:{";
    for (std::size_t i = 0; i < p.leg_chains.size(); ++i) {
        s += (i ? ",leg" : "leg") + std::to_string(i) + ":" + chain_string(p.leg_chains[i]);
    }
    return s + "}";
}

RingElem torus_class(unsigned m)
{
    if (m == 0) {
        return RingElem::one();
    }
    const RingElem lower = pow(RingElem::lefschetz(), m - 1);
    return lower * RingElem::lefschetz() - lower;
}

namespace
{

RingElem sym_class(const CurveModel &model, unsigned j)
{
    if (!model.is_projective_line()) {
        return RingElem::sym_pow(model.id, j);
    }
    RingElem acc = RingElem::one();
    RingElem power = RingElem::one();
    for (unsigned i = 1; i <= j; ++i) {
        power *= RingElem::lefschetz();
        acc += power;
    }
    return acc;
}

} // namespace

RingElem punctured_sym_class(const CurveModel &model, unsigned holes, unsigned d)
{
    // sum_i (-1)^i C(holes, i) [X_{d-i}]
    RingElem result;
    Integer binom = 1;
    for (unsigned i = 0; i <= std::min(holes, d); ++i) {
        const Integer coeff = (i % 2 == 0) ? binom : Integer(-binom);
        result += RingElem(coeff) * sym_class(model, d - i);
        binom = binom * (holes - i) / (i + 1);
    }
    return result;
}

RingElem stratum_class(const DualGraph &g, const StablePair &p)
{
    return StrataEvaluator(g, p.degree()).stratum_class(p);
}

StrataEvaluator::StrataEvaluator(const DualGraph &g, unsigned max_degree) : graph_(&g), max_degree_(max_degree)
{
    const GraphCounts c = counts(g);
    vertex_classes_.resize(g.vertices().size());
    for (std::size_t v = 0; v < g.vertices().size(); ++v) {
        const unsigned holes = c.vertices[v].valence + c.vertices[v].legs + c.vertices[v].punctures;
        for (unsigned d = 0; d <= max_degree; ++d) {
            vertex_classes_[v].push_back(punctured_sym_class(g.vertices()[v].model, holes, d));
        }
    }
    for (unsigned m = 0; m <= max_degree; ++m) {
        torus_.push_back(torus_class(m));
    }
}

RingElem StrataEvaluator::stratum_class(const StablePair &p) const
{
    if (p.vertex_degrees.size() != graph_->vertices().size() || p.edge_chains.size() != graph_->edges().size()
        || p.leg_chains.size() != graph_->legs().size()) {
        throw std::invalid_argument("stable pair does not match the graph");
    }
    RingElem cls = RingElem::one();
    for (std::size_t v = 0; v < p.vertex_degrees.size(); ++v) {
        cls *= vertex_class(v, p.vertex_degrees[v]);
    }
    auto chains = [&](const std::vector<Composition> &cs) {
        for (const auto &chain : cs) {
            for (unsigned a : chain) {
                if (a == 0) {
                    throw std::invalid_argument("exceptional degree must be >= 1");
                }
                cls *= torus(a - 1);
            }
        }
    };
    chains(p.edge_chains);
    chains(p.leg_chains);
    return cls;
}

RingElem sum_strata_serial(const StrataEvaluator &ev, const std::vector<StablePair> &pairs)
{
    RingElem total;
    for (const auto &p : pairs) {
        total += ev.stratum_class(p);
    }
    return total;
}

RingElem sum_strata(const StrataEvaluator &ev, const std::vector<StablePair> &pairs)
{
#ifdef _OPENMP
    const auto n = static_cast<long>(pairs.size());
    std::vector<RingElem> partial(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
    {
        RingElem local;
#pragma omp for schedule(dynamic, 16)
        for (long i = 0; i < n; ++i) {
            local += ev.stratum_class(pairs[static_cast<std::size_t>(i)]);
        }
        partial[static_cast<std::size_t>(omp_get_thread_num())] = std::move(local);
    }
    RingElem total;
    for (const auto &x : partial) {
        total += x;
    }
    return total;
#else
    return sum_strata_serial(ev, pairs);
#endif
}

RingElem zdiv_strata_coeff(const DualGraph &g, unsigned d)
{
    const StrataEvaluator ev(g, d);
    return sum_strata(ev, enumerate_stable_pairs(g, d));
}

RingElem zdiv_strata_coeff_serial(const DualGraph &g, unsigned d)
{
    const StrataEvaluator ev(g, d);
    return sum_strata_serial(ev, enumerate_stable_pairs(g, d));
}

RingElem composition_torus_sum(unsigned d)
{
    if (d == 0) {
        throw std::invalid_argument("composition_torus_sum requires d >= 1");
    }
    RingElem total;
    for (const auto &alpha : compositions(d)) {
        RingElem term = RingElem::one();
        for (unsigned a : alpha) {
            term *= torus_class(a - 1);
        }
        total += term;
    }
    return total;
}

} // namespace divzeta
