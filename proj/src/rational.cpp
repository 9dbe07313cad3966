#include "orbchi/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace orbchi {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole)
{
    std::size_t pos = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        pos = 1;
    }
    if (pos == text.size()) {
        throw std::invalid_argument("malformed rational \"" + std::string(whole) + "\"");
    }
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw std::invalid_argument("malformed rational \"" + std::string(whole) + "\"");
        }
    }
    // mpz_class rejects a leading '+'.
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return Integer(digits, 10);
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw std::domain_error("division by zero");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const auto body = trim(text);
    const auto slash = body.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(body, text));
    }
    const auto num = parse_integer(trim(body.substr(0, slash)), text);
    const auto den_text = trim(body.substr(slash + 1));
    if (!den_text.empty() && den_text[0] == '-') {
        throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
    }
    return Rational(num, parse_integer(den_text, text));
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw std::domain_error("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-value_));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    const int c = cmp(a.value_, b.value_);
    if (c < 0) {
        return std::strong_ordering::less;
    }
    if (c > 0) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string Rational::str() const
{
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational rational_from(const Integer& num, const Integer& den)
{
    return Rational(num, den);
}

Rational rational_from(long num, long den)
{
    return Rational(Integer(num), Integer(den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned n, unsigned k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace orbchi
