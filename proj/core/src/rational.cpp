#include "robsel/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <ostream>

namespace robsel {

namespace {

using int128 = __int128;

std::int64_t checked_narrow(int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("rational arithmetic overflow");
    }
    return static_cast<std::int64_t>(v);
}

int128 gcd128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Normalizes a 128-bit fraction and narrows to 64-bit.
void normalize_assign(int128 num, int128 den, std::int64_t& out_num, std::int64_t& out_den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) {
        out_num = 0;
        out_den = 1;
        return;
    }
    int128 g = gcd128(num, den);
    out_num = checked_narrow(num / g);
    out_den = checked_narrow(den / g);
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    normalize_assign(num, den, num_, den_);
}

Rational& Rational::operator+=(const Rational& o) {
    normalize_assign(int128(num_) * o.den_ + int128(o.num_) * den_, int128(den_) * o.den_, num_, den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    normalize_assign(int128(num_) * o.den_ - int128(o.num_) * den_, int128(den_) * o.den_, num_, den_);
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    normalize_assign(int128(num_) * o.num_, int128(den_) * o.den_, num_, den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::invalid_argument("rational division by zero");
    normalize_assign(int128(num_) * o.den_, int128(den_) * o.num_, num_, den_);
    return *this;
}

bool operator<(const Rational& a, const Rational& b) {
    return int128(a.num_) * b.den_ < int128(b.num_) * a.den_;
}

Rational Rational::from_double_exact(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double mant = std::frexp(x, &exp); // x = mant * 2^exp, |mant| in [0.5, 1)
    // 53 mantissa bits
    auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
    exp -= 53;
    // x = scaled * 2^exp
    while (scaled % 2 == 0 && exp < 0) {
        scaled /= 2;
        ++exp;
    }
    if (exp >= 0) {
        if (exp > 62) throw std::overflow_error("double too large for rational");
        return Rational(checked_narrow(int128(scaled) << exp));
    }
    if (-exp > 62) throw std::overflow_error("double denominator exceeds 64 bits");
    return Rational(scaled, std::int64_t(1) << (-exp));
}

Rational Rational::floor_to_grid(double x, std::int64_t grid_den) {
    if (grid_den <= 0) throw std::invalid_argument("grid denominator must be positive");
    double scaled = std::floor(x * static_cast<double>(grid_den));
    if (std::abs(scaled) > 9.0e18) throw std::overflow_error("value too large for grid");
    return Rational(static_cast<std::int64_t>(scaled), grid_den);
}

Rational Rational::round_to_grid(double x, std::int64_t grid_den) {
    if (grid_den <= 0) throw std::invalid_argument("grid denominator must be positive");
    double scaled = std::round(x * static_cast<double>(grid_den));
    if (std::abs(scaled) > 9.0e18) throw std::overflow_error("value too large for grid");
    return Rational(static_cast<std::int64_t>(scaled), grid_den);
}

Rational Rational::parse(const std::string& text) {
    auto parse_int = [](const std::string& s, bool allow_sign) -> std::int64_t {
        if (s.empty()) throw std::invalid_argument("empty number");
        std::size_t i = 0;
        bool neg = false;
        if (allow_sign && (s[0] == '-')) {
            neg = true;
            i = 1;
            if (s.size() == 1) throw std::invalid_argument("bare sign");
        }
        if (s[i] == '0' && s.size() > i + 1) throw std::invalid_argument("leading zero in number");
        int128 v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("invalid digit in number");
            v = v * 10 + (s[i] - '0');
            if (v > std::numeric_limits<std::int64_t>::max()) throw std::overflow_error("number too large");
        }
        return neg ? -static_cast<std::int64_t>(v) : static_cast<std::int64_t>(v);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text, true));
    std::int64_t num = parse_int(text.substr(0, slash), true);
    std::int64_t den = parse_int(text.substr(slash + 1), false);
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    // canonical form required: reject non-reduced input such as 2/4
    if (r.den() != den) throw std::invalid_argument("rational not in lowest terms");
    return r;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

std::int64_t floor(const Rational& r) {
    std::int64_t q = r.num() / r.den();
    if (r.num() < 0 && r.num() % r.den() != 0) --q;
    return q;
}

} // namespace robsel
