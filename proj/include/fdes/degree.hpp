#pragma once

#include <compare>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fdes {

/// An exact rational possibility degree in [0,1].
///
/// Equality is exact. Degrees only ever come from parsed decimal literals,
/// min/max selection or products of degrees, so every value stays in range.
class Degree {
public:
    Degree() = default;

    /// Parses "0.8", ".25", "1", "3/4" or "2.5e-1". Throws ParseError on
    /// malformed text and RangeError when the value leaves [0,1].
    static Degree parse(std::string_view text);

    /// Throws RangeError when value is outside [0,1].
    static Degree from_rational(const mpq_class& value);

    static Degree zero() { return Degree(); }
    static Degree one();

    const mpq_class& value() const noexcept { return value_; }

    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool is_one() const noexcept { return value_ == 1; }

    /// 1 - x; used for the controllable share of an event.
    Degree complement() const;

    /// Shortest exact decimal when the denominator is 2^a 5^b, otherwise "p/q".
    std::string to_string() const;

    friend Degree operator*(const Degree& a, const Degree& b);

    friend bool operator==(const Degree& a, const Degree& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Degree& a, const Degree& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    explicit Degree(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Degree& d);

namespace literals {
/// "0.8"_deg
inline Degree operator""_deg(const char* text, std::size_t len) { return Degree::parse({text, len}); }
} // namespace literals

} // namespace fdes

template <>
struct std::hash<fdes::Degree> {
    std::size_t operator()(const fdes::Degree& d) const noexcept;
};
