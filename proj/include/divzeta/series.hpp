#pragma once

// Truncated power series, polynomials and unreduced rational functions in t
// over an exact coefficient type (RingElem or Integer).

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <divzeta/ring.hpp>

namespace divzeta
{

struct non_invertible_series : std::domain_error {
    using std::domain_error::domain_error;
};

inline bool coeff_is_zero(const RingElem &c) { return c.is_zero(); }
inline bool coeff_is_zero(const Integer &c) { return c == 0; }
inline bool coeff_is_one(const RingElem &c) { return c.is_one(); }
inline bool coeff_is_one(const Integer &c) { return c == 1; }
inline std::string coeff_to_string(const RingElem &c) { return to_string(c); }
inline std::string coeff_to_string(const Integer &c) { return c.get_str(); }

// Power series truncated after t^order; always holds order+1 coefficients.
template <typename C>
class Series
{
public:
    explicit Series(std::size_t order = 0) : coeffs_(order + 1, C(0L)) {}
    explicit Series(std::vector<C> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) {
            throw std::invalid_argument("series needs at least the constant coefficient");
        }
    }

    static Series unit(std::size_t order)
    {
        Series s(order);
        s.coeffs_[0] = C(1L);
        return s;
    }

    // Leading terms of `terms`, zero padded or truncated to the order.
    static Series from_terms(std::size_t order, const std::vector<C> &terms)
    {
        Series s(order);
        for (std::size_t i = 0; i < terms.size() && i <= order; ++i) {
            s.coeffs_[i] = terms[i];
        }
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::vector<C> &coeffs() const noexcept { return coeffs_; }
    const C &operator[](std::size_t d) const { return coeffs_.at(d); }
    C &operator[](std::size_t d) { return coeffs_.at(d); }

    Series &operator+=(const Series &o)
    {
        check_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            coeffs_[i] += o.coeffs_[i];
        }
        return *this;
    }

    Series &operator-=(const Series &o)
    {
        check_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            coeffs_[i] -= o.coeffs_[i];
        }
        return *this;
    }

    friend Series operator+(Series a, const Series &b) { return a += b; }
    friend Series operator-(Series a, const Series &b) { return a -= b; }

    // Cauchy product, truncated.
    friend Series operator*(const Series &a, const Series &b)
    {
        a.check_order(b);
        const std::size_t n = a.order();
        Series r(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (coeff_is_zero(a.coeffs_[i])) {
                continue;
            }
            for (std::size_t j = 0; i + j <= n; ++j) {
                if (!coeff_is_zero(b.coeffs_[j])) {
                    multiply_add(r.coeffs_[i + j], a.coeffs_[i], b.coeffs_[j]);
                }
            }
        }
        return r;
    }

    Series &operator*=(const Series &o) { return *this = *this * o; }

    friend bool operator==(const Series &, const Series &) = default;

private:
    void check_order(const Series &o) const
    {
        if (o.order() != order()) {
            throw std::invalid_argument("series order mismatch: " + std::to_string(order()) + " vs "
                                        + std::to_string(o.order()));
        }
    }

    static void multiply_add(RingElem &acc, const RingElem &a, const RingElem &b) { acc.add_product(a, b); }
    static void multiply_add(Integer &acc, const Integer &a, const Integer &b) { acc += a * b; }

    std::vector<C> coeffs_;
};

using TruncSeries = Series<RingElem>;
using IntSeries = Series<Integer>;

// Multiplicative inverse; the constant coefficient must be exactly 1.
template <typename C>
Series<C> inverse(const Series<C> &a)
{
    if (!coeff_is_one(a[0])) {
        throw non_invertible_series("series is not invertible: constant coefficient is "
                                    + coeff_to_string(a[0]) + ", expected 1");
    }
    const std::size_t n = a.order();
    Series<C> b(n);
    b[0] = C(1L);
    for (std::size_t d = 1; d <= n; ++d) {
        C acc(0L);
        for (std::size_t i = 1; i <= d; ++i) {
            if (!coeff_is_zero(a[i]) && !coeff_is_zero(b[d - i])) {
                acc += a[i] * b[d - i];
            }
        }
        b[d] = C(0L) - acc;
    }
    return b;
}

template <typename C>
Series<C> pow(const Series<C> &a, unsigned k)
{
    Series<C> result = Series<C>::unit(a.order());
    Series<C> base = a;
    while (k != 0) {
        if (k & 1U) {
            result *= base;
        }
        k >>= 1U;
        if (k != 0) {
            base *= base;
        }
    }
    return result;
}

// Negative exponents go through inverse().
template <typename C>
Series<C> pow(const Series<C> &a, int k)
{
    if (k >= 0) {
        return pow(a, static_cast<unsigned>(k));
    }
    return pow(inverse(a), static_cast<unsigned>(-k));
}

// Polynomial in t, trailing zeros trimmed; the zero polynomial is empty.
template <typename C>
class Poly
{
public:
    Poly() = default;
    Poly(std::initializer_list<C> cs) : coeffs_(cs) { trim(); }
    explicit Poly(std::vector<C> cs) : coeffs_(std::move(cs)) { trim(); }

    static Poly one() { return Poly{C(1L)}; }

    const std::vector<C> &coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    C coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : C(0L); }

    Series<C> to_series(std::size_t order) const { return Series<C>::from_terms(order, coeffs_); }

    friend Poly operator+(const Poly &a, const Poly &b)
    {
        std::vector<C> r(std::max(a.coeffs_.size(), b.coeffs_.size()), C(0L));
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] = a.coeff(i) + b.coeff(i);
        }
        return Poly(std::move(r));
    }

    friend Poly operator-(const Poly &a, const Poly &b)
    {
        std::vector<C> r(std::max(a.coeffs_.size(), b.coeffs_.size()), C(0L));
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] = a.coeff(i) - b.coeff(i);
        }
        return Poly(std::move(r));
    }

    friend Poly operator*(const Poly &a, const Poly &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<C> r(a.coeffs_.size() + b.coeffs_.size() - 1, C(0L));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                r[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Poly(std::move(r));
    }

    friend bool operator==(const Poly &, const Poly &) = default;

private:
    void trim()
    {
        while (!coeffs_.empty() && coeff_is_zero(coeffs_.back())) {
            coeffs_.pop_back();
        }
    }

    std::vector<C> coeffs_;
};

template <typename C>
Poly<C> pow(const Poly<C> &p, unsigned k)
{
    Poly<C> r = Poly<C>::one();
    for (unsigned i = 0; i < k; ++i) {
        r = r * p;
    }
    return r;
}

// "1 + (-L - 1)*t + t^2"
template <typename C>
std::string to_string(const Poly<C> &p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const C &c = p.coeffs()[i];
        if (coeff_is_zero(c)) {
            continue;
        }
        std::string cs = coeff_to_string(c);
        const bool compound = cs.find_first_of("+-", 1) != std::string::npos;
        if (!out.empty()) {
            if (!compound && cs.front() == '-') {
                out += " - ";
                cs.erase(0, 1);
            } else {
                out += " + ";
            }
        }
        if (i == 0) {
            out += cs;
            continue;
        }
        if (compound) {
            out += "(" + cs + ")*";
        } else if (cs == "-1") {
            out += "-";
        } else if (cs != "1") {
            out += cs + "*";
        }
        out += i == 1 ? std::string("t") : "t^" + std::to_string(i);
    }
    return out;
}

template <typename C>
std::string to_string(const Series<C> &s)
{
    return to_string(Poly<C>(s.coeffs())) + " + O(t^" + std::to_string(s.order() + 1) + ")";
}

// Unreduced quotient numerator/denominator. The denominator must have
// constant term 1 so the series expansion exists.
template <typename C>
class Rational
{
public:
    Rational() : num_(Poly<C>::one()), den_(Poly<C>::one()) {}
    Rational(Poly<C> num, Poly<C> den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero() || !coeff_is_one(den_.coeff(0))) {
            throw std::invalid_argument("rational function denominator must have constant term 1");
        }
    }

    const Poly<C> &numerator() const noexcept { return num_; }
    const Poly<C> &denominator() const noexcept { return den_; }

    friend Rational operator*(const Rational &a, const Rational &b)
    {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }

    // Exact polynomial identity a.num * b.den == b.num * a.den.
    friend bool operator==(const Rational &a, const Rational &b)
    {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

private:
    Poly<C> num_;
    Poly<C> den_;
};

using TPoly = Poly<RingElem>;
using IntPoly = Poly<Integer>;
using RationalFn = Rational<RingElem>;
using IntRationalFn = Rational<Integer>;

template <typename C>
Rational<C> pow(const Rational<C> &r, unsigned k)
{
    return Rational<C>(pow(r.numerator(), k), pow(r.denominator(), k));
}

// Expansion denominator^{-1} * numerator truncated at `order`.
template <typename C>
Series<C> series_from_rational(const Rational<C> &r, std::size_t order)
{
    return inverse(r.denominator().to_series(order)) * r.numerator().to_series(order);
}

template <typename C>
std::string to_string(const Rational<C> &r)
{
    return "(" + to_string(r.numerator()) + ")/(" + to_string(r.denominator()) + ")";
}

} // namespace divzeta
