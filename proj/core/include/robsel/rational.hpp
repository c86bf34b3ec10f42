#ifndef ROBSEL_RATIONAL_HPP
#define ROBSEL_RATIONAL_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace robsel {

/// Exact rational number on 64-bit numerator/denominator.
///
/// All instance data (costs, budgets, objective values) is kept in this type
/// so that oracles and round trips are bit-exact. Intermediate products use
/// 128-bit arithmetic; results that do not fit 64 bits after normalization
/// throw std::overflow_error instead of silently losing precision.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : num_(value), den_(1) {}
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Exact conversion of a finite double (mantissa/exponent decomposition).
    /// Throws std::overflow_error when the value needs more than 64 bits.
    static Rational from_double_exact(double x);

    /// Largest rational with denominator `grid_den` that is <= x.
    static Rational floor_to_grid(double x, std::int64_t grid_den);

    /// Nearest rational with denominator `grid_den`. Used to snap solver
    /// output onto a bounded-denominator grid without nudging integral
    /// values off their exact position.
    static Rational round_to_grid(double x, std::int64_t grid_den);

    /// Parses the canonical forms "123", "-4" and "7/2". Throws
    /// std::invalid_argument on anything else (leading zeros, spaces, den 0).
    static Rational parse(const std::string& text);

    /// Canonical text: numerator alone when integral, "num/den" otherwise.
    std::string str() const;

    Rational operator-() const { return Rational(-num_, den_, already_normal_tag{}); }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    struct already_normal_tag {};
    Rational(std::int64_t num, std::int64_t den, already_normal_tag) : num_(num), den_(den) {}

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational abs(const Rational& r);

/// Floor of a rational as an integer.
std::int64_t floor(const Rational& r);

} // namespace robsel

#endif
