#include "fdes/degree.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "fdes/errors.hpp"

namespace fdes {

namespace {

mpq_class parse_decimal(std::string_view text)
{
    std::size_t pos = 0;
    std::string digits;
    long frac_digits = 0;
    bool seen_digit = false;

    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        digits += text[pos++];
        seen_digit = true;
    }
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            digits += text[pos++];
            ++frac_digits;
            seen_digit = true;
        }
    }
    if (!seen_digit)
        throw ParseError("not a decimal degree: '" + std::string(text) + "'");

    long exponent = 0;
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        ++pos;
        bool negative = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-'))
            negative = text[pos++] == '-';
        std::string exp_digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            exp_digits += text[pos++];
        if (exp_digits.empty() || exp_digits.size() > 6)
            throw ParseError("bad exponent in '" + std::string(text) + "'");
        exponent = std::stol(exp_digits) * (negative ? -1 : 1);
    }
    if (pos != text.size())
        throw ParseError("trailing characters in '" + std::string(text) + "'");

    mpz_class numerator(digits, 10);
    const long shift = exponent - frac_digits;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    mpq_class result;
    if (shift < 0)
        result = mpq_class(numerator, scale);
    else
        result = mpq_class(numerator * scale);
    result.canonicalize();
    return result;
}

mpq_class parse_fraction(std::string_view text, std::size_t slash)
{
    auto all_digits = [](std::string_view part) {
        if (part.empty())
            return false;
        for (char c : part)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("not a rational degree: '" + std::string(text) + "'");
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    mpq_class result(mpz_class(std::string(num), 10), d);
    result.canonicalize();
    return result;
}

} // namespace

Degree Degree::parse(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.empty())
        throw ParseError("empty degree");
    if (text.front() == '-') {
        const auto magnitude = text.substr(1);
        const auto slash = magnitude.find('/');
        const mpq_class value = slash == std::string_view::npos ? parse_decimal(magnitude)
                                                                 : parse_fraction(magnitude, slash);
        if (sgn(value) != 0)
            throw RangeError("degree " + std::string(text) + " is below 0");
        return Degree();
    }
    if (text.front() == '+')
        text.remove_prefix(1);
    const auto slash = text.find('/');
    const mpq_class value = slash == std::string_view::npos ? parse_decimal(text) : parse_fraction(text, slash);
    if (value > 1)
        throw RangeError("degree " + std::string(text) + " is above 1");
    return from_rational(value);
}

Degree Degree::from_rational(const mpq_class& value)
{
    if (sgn(value) < 0 || value > 1)
        throw RangeError("degree " + value.get_str() + " is outside [0,1]");
    mpq_class v = value;
    v.canonicalize();
    return Degree(std::move(v));
}

Degree Degree::one() { return Degree(mpq_class(1)); }

Degree Degree::complement() const { return Degree(mpq_class(1 - value_)); }

Degree operator*(const Degree& a, const Degree& b) { return Degree(mpq_class(a.value_ * b.value_)); }

std::string Degree::to_string() const
{
    const mpz_class& num = value_.get_num();
    mpz_class den = value_.get_den();
    if (den == 1)
        return num.get_str();

    unsigned long twos = 0;
    unsigned long fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
        den /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
        den /= 5;
        ++fives;
    }
    if (den != 1)
        return num.get_str() + "/" + value_.get_den().get_str();

    const unsigned long places = std::max(twos, fives);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
    const mpz_class scaled = num * scale / value_.get_den();
    std::string digits = scaled.get_str();
    if (digits.size() <= places)
        digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, 1, '.');
    return digits;
}

std::ostream& operator<<(std::ostream& os, const Degree& d) { return os << d.to_string(); }

} // namespace fdes

std::size_t std::hash<fdes::Degree>::operator()(const fdes::Degree& d) const noexcept
{
    const auto& v = d.value();
    const std::size_t h1 = mpz_get_ui(v.get_num_mpz_t());
    const std::size_t h2 = mpz_get_ui(v.get_den_mpz_t());
    return h1 * 1000003u ^ h2;
}
