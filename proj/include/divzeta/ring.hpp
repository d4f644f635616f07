#pragma once

// Exact coefficient ring: integer polynomials in the Lefschetz class L and
// symbolic symmetric-power classes c[model,d].

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace divzeta
{

using Integer = mpz_class;

// A ring generator. The total order puts L first, then symmetric-power
// classes by (model id, degree).
struct Generator {
    enum class Kind : std::uint8_t { Lefschetz, SymPow };

    Kind kind = Kind::Lefschetz;
    std::string model;
    std::uint32_t degree = 0;

    static Generator lefschetz() { return {}; }
    // degree must be >= 1; degree 0 is the ring unit and never a generator.
    static Generator sym_pow(std::string model_id, std::uint32_t d);

    friend bool operator==(const Generator &, const Generator &) = default;
    friend std::strong_ordering operator<=>(const Generator &a, const Generator &b);
};

std::string to_string(const Generator &g);

// Power product of generators, stored as (generator, exponent) pairs sorted
// ascending by generator with every exponent >= 1.
class Monomial
{
public:
    using Factor = std::pair<Generator, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(Generator g, std::uint32_t exp = 1);

    const std::vector<Factor> &factors() const noexcept { return factors_; }
    bool is_unit() const noexcept { return factors_.empty(); }
    std::uint32_t exponent(const Generator &g) const;

    friend Monomial operator*(const Monomial &a, const Monomial &b);
    friend bool operator==(const Monomial &, const Monomial &) = default;

private:
    std::vector<Factor> factors_;
};

// Term order used for printing and storage: the exponent vector is compared
// lexicographically, most significant position = largest generator.
// Returns true when a sorts before b (a is the larger monomial).
struct MonomialOrder {
    bool operator()(const Monomial &a, const Monomial &b) const;
};

std::string to_string(const Monomial &m);

// Element of Z[L, c[m,d] ...]. Canonical: no zero coefficients, terms keyed
// by monomial in MonomialOrder.
class RingElem
{
public:
    using TermMap = std::map<Monomial, Integer, MonomialOrder>;

    RingElem() = default;
    RingElem(long n); // NOLINT(google-explicit-constructor)
    explicit RingElem(const Integer &n);
    explicit RingElem(const Monomial &m, const Integer &coeff = 1);

    static RingElem zero() { return {}; }
    static RingElem one() { return RingElem(1L); }
    static RingElem lefschetz() { return RingElem(Monomial(Generator::lefschetz())); }
    static RingElem sym_pow(const std::string &model, std::uint32_t d);

    const TermMap &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const;
    std::size_t size() const noexcept { return terms_.size(); }
    // Coefficient of the unit monomial.
    Integer constant_term() const;

    RingElem &operator+=(const RingElem &o);
    RingElem &operator-=(const RingElem &o);
    RingElem &operator*=(const RingElem &o);
    RingElem operator-() const;

    friend RingElem operator+(RingElem a, const RingElem &b) { return a += b; }
    friend RingElem operator-(RingElem a, const RingElem &b) { return a -= b; }
    friend RingElem operator*(const RingElem &a, const RingElem &b);
    friend bool operator==(const RingElem &, const RingElem &) = default;

    // this += a * b without materializing the product.
    void add_product(const RingElem &a, const RingElem &b);

private:
    void add_term(const Monomial &m, const Integer &c);

    TermMap terms_;
};

RingElem pow(const RingElem &x, unsigned k);

// Canonical text form, e.g. "L^2 - L" or "c[m,2] + c[m,1]*L".
//
//   elem    := "0" | term { ("+" | "-") term }
//   term    := ["-"] ( integer | [integer "*"] factor { "*" factor } )
//   factor  := ( "L" | "c[" ident "," integer "]" ) [ "^" integer ]
//   ident   := [A-Za-z_][A-Za-z0-9_]*
//
// Terms appear in MonomialOrder; factors within a term in descending
// generator order; a coefficient of +-1 is omitted unless the term is
// constant. Whitespace is " + " / " - " between terms.
std::string to_string(const RingElem &x);

struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Accepts the canonical grammar above (whitespace-insensitive, repeated
// factors and unsorted terms allowed) and returns the canonical element.
RingElem parse_ring_elem(std::string_view text);

bool is_identifier(std::string_view s);

} // namespace divzeta
