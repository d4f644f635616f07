#include <divzeta/measures.hpp>

#include <variant>

namespace divzeta
{

using nlohmann::json;

IntSeries weil_series(const std::vector<Integer> &numerator, const Integer &q, std::size_t order)
{
    if (numerator.empty() || numerator.front() != 1) {
        throw measure_error("Weil numerator must satisfy P(0) = 1");
    }
    // 1/((1-t)(1-qt)) = sum_d (1 + q + ... + q^d) t^d
    IntSeries denom_inv(order);
    Integer acc = 0;
    Integer power = 1;
    for (std::size_t d = 0; d <= order; ++d) {
        acc += power;
        denom_inv[d] = acc;
        power *= q;
    }
    return IntSeries::from_terms(order, numerator) * denom_inv;
}

namespace
{

void validate_numerator(const std::string &id, const ModelRealization &r, const Integer &q)
{
    const auto &p = *r.numerator;
    auto fail = [&](const std::string &what) { throw measure_error("model '" + id + "': " + what); };
    if (p.empty() || p.front() != 1) {
        fail("Weil numerator must satisfy P(0) = 1");
    }
    const std::size_t two_g = 2 * static_cast<std::size_t>(r.genus);
    if (p.size() > two_g + 1) {
        fail("Weil numerator degree " + std::to_string(p.size() - 1) + " exceeds 2g = " + std::to_string(two_g));
    }
    if (p.size() == two_g + 1) {
        // a_j = a_{2g-j} q^{j-g} for j >= g
        for (std::size_t j = r.genus; j <= two_g; ++j) {
            Integer qp;
            mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(), j - r.genus);
            if (p[j] != p[two_g - j] * qp) {
                fail("Weil numerator violates the functional equation q^g t^2g P(1/(qt)) = P(t) at t^"
                     + std::to_string(j));
            }
        }
    }
}

} // namespace

MotivicMeasure::MotivicMeasure(Kind k, Integer q, std::map<std::string, ModelRealization> models)
    : kind_(k), q_(std::move(q)), models_(std::move(models))
{
}

MotivicMeasure MotivicMeasure::symbolic()
{
    return MotivicMeasure(Kind::SymbolicIdentity, 0, {});
}

MotivicMeasure MotivicMeasure::euler(std::map<std::string, ModelRealization> models)
{
    return MotivicMeasure(Kind::EulerCharacteristic, 1, std::move(models));
}

MotivicMeasure MotivicMeasure::point_count(Integer q, std::map<std::string, ModelRealization> models)
{
    if (q < 2) {
        throw measure_error("point-count measure requires q >= 2");
    }
    for (const auto &[id, r] : models) {
        if (r.numerator) {
            validate_numerator(id, r, q);
        }
    }
    return MotivicMeasure(Kind::PointCount, std::move(q), std::move(models));
}

const ModelRealization &MotivicMeasure::realization(const std::string &model_id, const Generator &g) const
{
    auto it = models_.find(model_id);
    if (it == models_.end() || (kind_ == Kind::PointCount && !it->second.numerator)) {
        throw unrealized_generator("generator " + to_string(g) + " has no realization under the "
                                   + std::string(to_string(kind_)) + " measure");
    }
    return it->second;
}

Integer MotivicMeasure::apply(const Generator &g) const
{
    if (kind_ == Kind::SymbolicIdentity) {
        throw std::logic_error("the symbolic identity has no integer realization");
    }
    if (g.kind == Generator::Kind::Lefschetz) {
        return q_;
    }
    const ModelRealization &r = realization(g.model, g);
    if (kind_ == Kind::EulerCharacteristic) {
        const int k = 2 * static_cast<int>(r.genus) - 2;
        return pow(IntPoly{Integer(1), Integer(-1)}.to_series(g.degree), k)[g.degree];
    }
    return weil_series(*r.numerator, q_, g.degree)[g.degree];
}

Integer MotivicMeasure::apply(const RingElem &x) const
{
    if (kind_ == Kind::SymbolicIdentity) {
        throw std::logic_error("the symbolic identity has no integer realization");
    }
    Integer total = 0;
    for (const auto &[mono, coeff] : x.terms()) {
        Integer term = coeff;
        for (const auto &[gen, exp] : mono.factors()) {
            Integer value = apply(gen);
            Integer p;
            mpz_pow_ui(p.get_mpz_t(), value.get_mpz_t(), exp);
            term *= p;
        }
        total += term;
    }
    return total;
}

IntSeries MotivicMeasure::apply(const TruncSeries &s) const
{
    IntSeries r(s.order());
    for (std::size_t d = 0; d <= s.order(); ++d) {
        r[d] = apply(s[d]);
    }
    return r;
}

IntPoly MotivicMeasure::apply(const TPoly &p) const
{
    std::vector<Integer> cs;
    cs.reserve(p.coeffs().size());
    for (const auto &c : p.coeffs()) {
        cs.push_back(apply(c));
    }
    return IntPoly(std::move(cs));
}

IntRationalFn MotivicMeasure::apply(const ClosedForm &cf) const
{
    IntRationalFn r(apply(cf.prefactor.numerator()), apply(cf.prefactor.denominator()));
    const IntPoly one_minus_t{Integer(1), Integer(-1)};
    for (const auto &model : cf.vertex_factors) {
        const ModelRealization &real = realization(model.id, Generator::sym_pow(model.id, 1));
        if (kind_ == Kind::EulerCharacteristic) {
            const int k = 2 * static_cast<int>(real.genus) - 2;
            r = r * (k >= 0 ? IntRationalFn(pow(one_minus_t, static_cast<unsigned>(k)), IntPoly::one())
                            : IntRationalFn(IntPoly::one(), pow(one_minus_t, static_cast<unsigned>(-k))));
        } else {
            r = r * IntRationalFn(IntPoly(*real.numerator), one_minus_t * IntPoly{Integer(1), Integer(-q_)});
        }
    }
    return r;
}

std::string_view to_string(MotivicMeasure::Kind k)
{
    switch (k) {
        case MotivicMeasure::Kind::SymbolicIdentity:
            return "symbolic";
        case MotivicMeasure::Kind::PointCount:
            return "point-count";
        case MotivicMeasure::Kind::EulerCharacteristic:
            return "euler";
    }
    return "?";
}

MotivicMeasure::Kind parse_measure_kind(std::string_view name)
{
    if (name == "symbolic") {
        return MotivicMeasure::Kind::SymbolicIdentity;
    }
    if (name == "euler") {
        return MotivicMeasure::Kind::EulerCharacteristic;
    }
    if (name == "point-count") {
        return MotivicMeasure::Kind::PointCount;
    }
    throw measure_error("unknown measure '" + std::string(name) + "' (expected symbolic, euler or point-count)");
}

MeasureSpec measure_spec_from_json(const json &j)
{
    if (!j.is_object() || !j.contains("measure") || !j.at("measure").is_string()) {
        throw measure_error("measure spec must be an object with a string \"measure\"");
    }
    MeasureSpec spec;
    spec.kind = parse_measure_kind(j.at("measure").get<std::string>());
    for (const auto &item : j.items()) {
        if (item.key() != "measure" && item.key() != "q" && item.key() != "numerators") {
            throw measure_error("unexpected key '" + item.key() + "' in measure spec");
        }
    }
    if (j.contains("q")) {
        if (!j.at("q").is_number_integer()) {
            throw measure_error("\"q\" must be an integer");
        }
        spec.q = Integer(std::to_string(j.at("q").get<long long>()));
    }
    if (j.contains("numerators")) {
        if (!j.at("numerators").is_object()) {
            throw measure_error("\"numerators\" must map model ids to integer arrays");
        }
        for (const auto &[id, arr] : j.at("numerators").items()) {
            if (!arr.is_array()) {
                throw measure_error("numerator of model '" + id + "' must be an array");
            }
            std::vector<Integer> p;
            for (const auto &c : arr) {
                if (!c.is_number_integer()) {
                    throw measure_error("numerator of model '" + id + "' must contain integers");
                }
                p.emplace_back(std::to_string(c.get<long long>()));
            }
            spec.numerators.emplace(id, std::move(p));
        }
    }
    return spec;
}

json to_json(const MeasureSpec &spec)
{
    json j = {{"measure", std::string(to_string(spec.kind))}};
    if (spec.q) {
        j["q"] = spec.q->get_si();
    }
    if (!spec.numerators.empty()) {
        json nums = json::object();
        for (const auto &[id, p] : spec.numerators) {
            json arr = json::array();
            for (const auto &c : p) {
                arr.push_back(c.get_si());
            }
            nums[id] = arr;
        }
        j["numerators"] = nums;
    }
    return j;
}

MotivicMeasure make_measure(const MeasureSpec &spec, const DualGraph &g)
{
    if (spec.kind == MotivicMeasure::Kind::SymbolicIdentity) {
        return MotivicMeasure::symbolic();
    }
    std::map<std::string, ModelRealization> models;
    for (const auto &v : g.vertices()) {
        models.try_emplace(v.model.id, ModelRealization{v.model.genus, std::nullopt});
    }
    for (const auto &[id, p] : spec.numerators) {
        if (!models.count(id)) {
            throw measure_error("numerator given for model id '" + id + "' which the graph does not use");
        }
    }
    if (spec.kind == MotivicMeasure::Kind::EulerCharacteristic) {
        return MotivicMeasure::euler(std::move(models));
    }
    if (!spec.q) {
        throw measure_error("point-count measure requires q");
    }
    const Integer &q = *spec.q;
    for (const auto &v : g.vertices()) {
        auto &r = models.at(v.model.id);
        std::visit(
            [&](const auto &shape) {
                using T = std::decay_t<decltype(shape)>;
                if constexpr (std::is_same_v<T, ProjectiveLine>) {
                    r.numerator = std::vector<Integer>{1};
                } else if constexpr (std::is_same_v<T, EllipticCurve>) {
                    r.numerator = std::vector<Integer>{1, Integer(-shape.trace), q};
                } else if constexpr (std::is_same_v<T, WeilCurve>) {
                    r.numerator = shape.numerator;
                } else {
                    auto it = spec.numerators.find(v.model.id);
                    if (it != spec.numerators.end()) {
                        r.numerator = it->second;
                    }
                }
            },
            v.model.shape);
        if (!std::holds_alternative<SymbolicCurve>(v.model.shape) && spec.numerators.count(v.model.id)) {
            throw measure_error("model '" + v.model.id + "' is not symbolic; its numerator is fixed by the model");
        }
    }
    return MotivicMeasure::point_count(q, std::move(models));
}

} // namespace divzeta
