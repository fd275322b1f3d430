#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace balcol {

/// Exact rational coordinate on the real line, always in lowest terms.
///
/// Accepts decimal literals ("-0.25", "3", "1.5e-3") and fractions ("7/3").
/// All comparisons are exact, so coinciding endpoints are detected reliably.
class Coord {
public:
    Coord() = default;
    Coord(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Coord(std::int64_t num, std::int64_t den);
    explicit Coord(mpq_class value);

    /// Throws InputError on anything that is not a finite decimal or fraction.
    static Coord parse(std::string_view text);

    /// Converts through the shortest decimal that round-trips the double,
    /// so 0.2 becomes 1/5 rather than its binary expansion.
    static Coord from_double(double value);

    const mpq_class& value() const { return value_; }
    std::string numerator() const { return value_.get_num().get_str(); }
    std::string denominator() const { return value_.get_den().get_str(); }
    bool is_integer() const { return value_.get_den() == 1; }

    /// Exact decimal when the expansion terminates, "p/q" otherwise.
    std::string to_string() const;
    double to_double() const { return value_.get_d(); }

    friend Coord operator+(const Coord& a, const Coord& b) { return Coord(mpq_class(a.value_ + b.value_)); }
    friend Coord operator-(const Coord& a, const Coord& b) { return Coord(mpq_class(a.value_ - b.value_)); }
    friend Coord operator*(const Coord& a, const Coord& b) { return Coord(mpq_class(a.value_ * b.value_)); }
    friend Coord operator/(const Coord& a, const Coord& b);
    Coord operator-() const { return Coord(mpq_class(-value_)); }

    friend bool operator==(const Coord& a, const Coord& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Coord& a, const Coord& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    static Coord midpoint(const Coord& a, const Coord& b);

private:
    mpq_class value_{0};
};

}  // namespace balcol
