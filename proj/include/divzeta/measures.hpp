#pragma once

// Motivic measures: ring homomorphisms from the symbolic coefficient ring to
// the integers (point counts over F_q, Euler characteristic).

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <divzeta/graph.hpp>
#include <divzeta/series.hpp>
#include <divzeta/zeta.hpp>

namespace divzeta
{

struct unrealized_generator : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct measure_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Expansion of P(t) / ((1 - t)(1 - q t)) through t^order. Requires P(0) = 1;
// q = 1 is accepted.
IntSeries weil_series(const std::vector<Integer> &numerator, const Integer &q, std::size_t order);

// Realization data of one curve model.
struct ModelRealization {
    unsigned genus = 0;
    // Weil numerator; required by point counting.
    std::optional<std::vector<Integer>> numerator;
};

class MotivicMeasure
{
public:
    enum class Kind { SymbolicIdentity, PointCount, EulerCharacteristic };

    static MotivicMeasure symbolic();
    // L -> 1, c[m,d] -> t^d coefficient of (1-t)^(2g_m - 2).
    static MotivicMeasure euler(std::map<std::string, ModelRealization> models);
    // L -> q, c[m,d] -> t^d coefficient of P_m(t)/((1-t)(1-qt)). Validates
    // q >= 2, P(0) = 1, deg P <= 2g and, when deg P = 2g, the functional
    // equation q^g t^2g P(1/(qt)) = P(t).
    static MotivicMeasure point_count(Integer q, std::map<std::string, ModelRealization> models);

    Kind kind() const noexcept { return kind_; }
    bool is_symbolic() const noexcept { return kind_ == Kind::SymbolicIdentity; }
    const Integer &q() const noexcept { return q_; }
    const std::map<std::string, ModelRealization> &models() const noexcept { return models_; }

    // Integer image; throws unrealized_generator naming the first generator
    // without a realization. The symbolic identity has no integer image
    // and throws std::logic_error.
    Integer apply(const RingElem &x) const;
    IntSeries apply(const TruncSeries &s) const;
    IntPoly apply(const TPoly &p) const;
    Integer apply(const Generator &g) const;

    // Integer rational function: the prefactor's image times the realized
    // Kapranov zeta of every symbolic vertex model.
    IntRationalFn apply(const ClosedForm &cf) const;

private:
    MotivicMeasure(Kind k, Integer q, std::map<std::string, ModelRealization> models);

    const ModelRealization &realization(const std::string &model_id, const Generator &g) const;

    Kind kind_;
    Integer q_;
    std::map<std::string, ModelRealization> models_;
};

std::string_view to_string(MotivicMeasure::Kind k);

// Measure request as it appears in configuration:
//   {"measure":"point-count","q":3,"numerators":{"m":[1,-2,5]}}
struct MeasureSpec {
    MotivicMeasure::Kind kind = MotivicMeasure::Kind::SymbolicIdentity;
    std::optional<Integer> q;
    std::map<std::string, std::vector<Integer>> numerators;

    friend bool operator==(const MeasureSpec &, const MeasureSpec &) = default;
};

MeasureSpec measure_spec_from_json(const nlohmann::json &j);
nlohmann::json to_json(const MeasureSpec &spec);
MotivicMeasure::Kind parse_measure_kind(std::string_view name);

// Realization table for every model of the graph. P^1 gets P = 1, elliptic
// models 1 - a t + q t^2, Weil models their own numerator, symbolic models
// the numerator from the spec (left unrealized when absent). A numerator for
// a model id the graph does not use is an error.
MotivicMeasure make_measure(const MeasureSpec &spec, const DualGraph &g);

} // namespace divzeta
