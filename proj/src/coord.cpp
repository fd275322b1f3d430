#include "balcol/coord.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

#include "balcol/errors.hpp"

namespace balcol {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class pow10(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

[[noreturn]] void bad(std::string_view text) {
    throw InputError("not a decimal or fraction: '" + std::string(text) + "'");
}

}  // namespace

Coord::Coord(std::int64_t value) : value_(static_cast<long>(value)) {}

Coord::Coord(std::int64_t num, std::int64_t den) {
    if (den == 0) throw InputError("zero denominator");
    value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    value_.canonicalize();
}

Coord::Coord(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Coord operator/(const Coord& a, const Coord& b) {
    if (sgn(b.value_) == 0) throw InputError("division by zero coordinate");
    return Coord(mpq_class(a.value_ / b.value_));
}

Coord Coord::midpoint(const Coord& a, const Coord& b) {
    mpq_class m = a.value_ + b.value_;
    m /= 2;
    return Coord(std::move(m));
}

Coord Coord::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) bad(text);

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const auto num = s.substr(0, slash);
        const auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad(text);
        mpz_class n{std::string(num), 10};
        mpz_class d{std::string(den), 10};
        if (d == 0) bad(text);
        if (negative) n = -n;
        return Coord(mpq_class(n, d));
    }

    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp = s.substr(e + 1);
        s = s.substr(0, e);
        bool exp_negative = false;
        if (!exp.empty() && (exp.front() == '+' || exp.front() == '-')) {
            exp_negative = exp.front() == '-';
            exp.remove_prefix(1);
        }
        if (!all_digits(exp) || exp.size() > 6) bad(text);
        std::from_chars(exp.data(), exp.data() + exp.size(), exponent);
        if (exponent > 4096) bad(text);
        if (exp_negative) exponent = -exponent;
    }

    std::string digits;
    long frac_digits = 0;
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        const auto ip = s.substr(0, dot);
        const auto fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty()) bad(text);
        if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) bad(text);
        digits = std::string(ip) + std::string(fp);
        frac_digits = static_cast<long>(fp.size());
    } else {
        if (!all_digits(s)) bad(text);
        digits = std::string(s);
    }

    mpz_class n(digits, 10);
    if (negative) n = -n;
    const long scale = exponent - frac_digits;
    mpq_class q;
    if (scale >= 0) {
        q = mpq_class(n * pow10(static_cast<unsigned long>(scale)));
    } else {
        q = mpq_class(n, pow10(static_cast<unsigned long>(-scale)));
    }
    return Coord(std::move(q));
}

Coord Coord::from_double(double value) {
    if (!std::isfinite(value)) throw InputError("non-finite coordinate");
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return parse(std::string_view(buf.data(), static_cast<std::size_t>(res.ptr - buf.data())));
}

std::string Coord::to_string() const {
    if (is_integer()) return value_.get_num().get_str();

    mpz_class den = value_.get_den();
    unsigned long twos = 0, fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) { den /= 2; ++twos; }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) { den /= 5; ++fives; }
    if (den != 1) return value_.get_num().get_str() + "/" + value_.get_den().get_str();

    const unsigned long places = std::max(twos, fives);
    mpz_class scaled = value_.get_num() * pow10(places) / value_.get_den();
    const bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string s = scaled.get_str();
    if (s.size() <= places) s.insert(0, places - s.size() + 1, '0');
    s.insert(s.size() - places, ".");
    return negative ? "-" + s : s;
}

}  // namespace balcol
