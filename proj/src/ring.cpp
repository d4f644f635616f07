#include <divzeta/ring.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace divzeta
{

Generator Generator::sym_pow(std::string model_id, std::uint32_t d)
{
    if (d == 0) {
        throw std::invalid_argument("symmetric-power generator requires degree >= 1");
    }
    if (!is_identifier(model_id)) {
        throw std::invalid_argument("invalid model id '" + model_id + "'");
    }
    return Generator{Kind::SymPow, std::move(model_id), d};
}

std::strong_ordering operator<=>(const Generator &a, const Generator &b)
{
    if (auto c = a.kind <=> b.kind; c != 0) {
        return c;
    }
    if (auto c = a.model.compare(b.model); c != 0) {
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.degree <=> b.degree;
}

std::string to_string(const Generator &g)
{
    if (g.kind == Generator::Kind::Lefschetz) {
        return "L";
    }
    return "c[" + g.model + "," + std::to_string(g.degree) + "]";
}

Monomial::Monomial(Generator g, std::uint32_t exp)
{
    if (exp != 0) {
        factors_.emplace_back(std::move(g), exp);
    }
}

std::uint32_t Monomial::exponent(const Generator &g) const
{
    auto it = std::lower_bound(factors_.begin(), factors_.end(), g,
                               [](const Factor &f, const Generator &x) { return f.first < x; });
    return (it != factors_.end() && it->first == g) ? it->second : 0;
}

Monomial operator*(const Monomial &a, const Monomial &b)
{
    Monomial r;
    r.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first < j->first) {
            r.factors_.push_back(*i++);
        } else if (j->first < i->first) {
            r.factors_.push_back(*j++);
        } else {
            r.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    r.factors_.insert(r.factors_.end(), i, a.factors_.end());
    r.factors_.insert(r.factors_.end(), j, b.factors_.end());
    return r;
}

bool MonomialOrder::operator()(const Monomial &a, const Monomial &b) const
{
    // Walk both factor lists from the largest generator down.
    const auto &fa = a.factors();
    const auto &fb = b.factors();
    auto i = fa.rbegin();
    auto j = fb.rbegin();
    while (i != fa.rend() && j != fb.rend()) {
        if (j->first < i->first) {
            return true;
        }
        if (i->first < j->first) {
            return false;
        }
        if (i->second != j->second) {
            return i->second > j->second;
        }
        ++i;
        ++j;
    }
    return i != fa.rend() && j == fb.rend();
}

std::string to_string(const Monomial &m)
{
    if (m.is_unit()) {
        return "1";
    }
    std::string out;
    for (auto it = m.factors().rbegin(); it != m.factors().rend(); ++it) {
        if (!out.empty()) {
            out += '*';
        }
        out += to_string(it->first);
        if (it->second != 1) {
            out += '^' + std::to_string(it->second);
        }
    }
    return out;
}

RingElem::RingElem(long n)
{
    if (n != 0) {
        terms_.emplace(Monomial{}, Integer(n));
    }
}

RingElem::RingElem(const Integer &n)
{
    if (n != 0) {
        terms_.emplace(Monomial{}, n);
    }
}

RingElem::RingElem(const Monomial &m, const Integer &coeff)
{
    if (coeff != 0) {
        terms_.emplace(m, coeff);
    }
}

RingElem RingElem::sym_pow(const std::string &model, std::uint32_t d)
{
    if (d == 0) {
        return one();
    }
    return RingElem(Monomial(Generator::sym_pow(model, d)));
}

bool RingElem::is_one() const
{
    return terms_.size() == 1 && terms_.begin()->first.is_unit() && terms_.begin()->second == 1;
}

Integer RingElem::constant_term() const
{
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Integer(0) : it->second;
}

void RingElem::add_term(const Monomial &m, const Integer &c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

RingElem &RingElem::operator+=(const RingElem &o)
{
    for (const auto &[m, c] : o.terms_) {
        add_term(m, c);
    }
    return *this;
}

RingElem &RingElem::operator-=(const RingElem &o)
{
    for (const auto &[m, c] : o.terms_) {
        add_term(m, -c);
    }
    return *this;
}

RingElem RingElem::operator-() const
{
    RingElem r = *this;
    for (auto &[m, c] : r.terms_) {
        c = -c;
    }
    return r;
}

void RingElem::add_product(const RingElem &a, const RingElem &b)
{
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            add_term(ma * mb, ca * cb);
        }
    }
}

RingElem operator*(const RingElem &a, const RingElem &b)
{
    RingElem r;
    r.add_product(a, b);
    return r;
}

RingElem &RingElem::operator*=(const RingElem &o)
{
    *this = *this * o;
    return *this;
}

RingElem pow(const RingElem &x, unsigned k)
{
    RingElem result = RingElem::one();
    RingElem base = x;
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

std::string to_string(const RingElem &x)
{
    if (x.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[m, c] : x.terms()) {
        const bool negative = c < 0;
        Integer mag = abs(c);
        if (first) {
            if (negative) {
                out += '-';
            }
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (m.is_unit()) {
            out += mag.get_str();
        } else {
            if (mag != 1) {
                out += mag.get_str() + "*";
            }
            out += to_string(m);
        }
    }
    return out;
}

bool is_identifier(std::string_view s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
        return false;
    }
    return std::all_of(s.begin(), s.end(), [](char ch) {
        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
    });
}

namespace
{

class RingParser
{
public:
    explicit RingParser(std::string_view text) : text_(text) {}

    RingElem parse()
    {
        RingElem result;
        skip_ws();
        bool negate = false;
        if (accept('-')) {
            negate = true;
        } else {
            accept('+');
        }
        RingElem t = term();
        result += negate ? -t : t;
        while (true) {
            skip_ws();
            if (pos_ == text_.size()) {
                break;
            }
            if (accept('+')) {
                result += term();
            } else if (accept('-')) {
                result -= term();
            } else {
                fail("expected '+' or '-'");
            }
        }
        return result;
    }

private:
    RingElem term()
    {
        skip_ws();
        Integer coeff = 1;
        Monomial mono;
        bool have_factor = false;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            coeff = integer();
            skip_ws();
            if (!accept('*')) {
                return RingElem(coeff);
            }
            mono = factor();
            have_factor = true;
        }
        if (!have_factor) {
            mono = factor();
        }
        while (true) {
            skip_ws();
            if (!accept('*')) {
                break;
            }
            mono = mono * factor();
        }
        return RingElem(mono, coeff);
    }

    Monomial factor()
    {
        skip_ws();
        Generator g;
        if (accept('L')) {
            g = Generator::lefschetz();
        } else if (accept('c')) {
            expect('[');
            const auto start = pos_;
            while (pos_ < text_.size() && text_[pos_] != ',') {
                ++pos_;
            }
            std::string id(text_.substr(start, pos_ - start));
            if (!is_identifier(id)) {
                fail("invalid model id");
            }
            expect(',');
            Integer d = integer();
            expect(']');
            if (d < 1 || !d.fits_uint_p()) {
                fail("symmetric-power degree must be a positive integer");
            }
            g = Generator::sym_pow(std::move(id), static_cast<std::uint32_t>(d.get_ui()));
        } else {
            fail("expected 'L' or 'c['");
        }
        std::uint32_t exp = 1;
        skip_ws();
        if (accept('^')) {
            Integer e = integer();
            if (e < 1 || !e.fits_uint_p()) {
                fail("exponent must be a positive integer");
            }
            exp = static_cast<std::uint32_t>(e.get_ui());
        }
        return Monomial(std::move(g), exp);
    }

    Integer integer()
    {
        skip_ws();
        const auto start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected integer");
        }
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    bool accept(char ch)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char ch)
    {
        if (!accept(ch)) {
            fail(std::string("expected '") + ch + "'");
        }
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    [[noreturn]] void fail(const std::string &what) const
    {
        std::ostringstream os;
        os << "ring element parse error at offset " << pos_ << ": " << what << " in \"" << text_ << "\"";
        throw parse_error(os.str());
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

RingElem parse_ring_elem(std::string_view text)
{
    return RingParser(text).parse();
}

} // namespace divzeta
