// Exact arithmetic in real quadratic fields Q(sqrt d).
//
// Every scalar in the library is a QElem: a + b*sqrt(d) with arbitrary
// precision rational a and b. The real embedding is fixed with sqrt(d) > 0,
// so "positive" always means positive under that embedding.

#ifndef VEECH2_QFIELD_HPP
#define VEECH2_QFIELD_HPP

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace veech2 {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

class FieldError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

bool is_square_free(std::int64_t n);

/// Element a + b*sqrt(d). d == 0 marks an element with no fixed field;
/// such elements always have b == 0 and combine with any field.
class QElem {
public:
    QElem() = default;
    QElem(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
    QElem(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    QElem(Rational a, Rational b, std::int64_t d);

    /// Convenience for (p + q*sqrt(d)) / r.
    static QElem frac(long p, long q, long r, std::int64_t d);
    static QElem sqrt_d(std::int64_t d) { return QElem(Rational(0), Rational(1), d); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    std::int64_t d() const { return d_; }
    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QElem conj() const;
    Rational norm() const;
    QElem inverse() const;
    int sign() const;
    double to_double() const;

    /// Same value in field d (rational elements only may change field).
    QElem in_field(std::int64_t d) const;

    QElem operator-() const;
    QElem& operator+=(const QElem& o);
    QElem& operator-=(const QElem& o);
    QElem& operator*=(const QElem& o);
    QElem& operator/=(const QElem& o);

    friend QElem operator+(QElem x, const QElem& y) { return x += y; }
    friend QElem operator-(QElem x, const QElem& y) { return x -= y; }
    friend QElem operator*(QElem x, const QElem& y) { return x *= y; }
    friend QElem operator/(QElem x, const QElem& y) { return x /= y; }

    friend bool operator==(const QElem& x, const QElem& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend std::strong_ordering operator<=>(const QElem& x, const QElem& y);

    std::string to_string() const;

private:
    static std::int64_t merge_field(std::int64_t d1, std::int64_t d2);

    Rational a_{0};
    Rational b_{0};
    std::int64_t d_{0};
};

std::ostream& operator<<(std::ostream& os, const QElem& x);

inline QElem conj(const QElem& x) { return x.conj(); }
inline int sign(const QElem& x) { return x.sign(); }
inline QElem abs(const QElem& x) { return x.sign() < 0 ? -x : x; }
inline const QElem& min(const QElem& x, const QElem& y) { return y < x ? y : x; }
inline const QElem& max(const QElem& x, const QElem& y) { return x < y ? y : x; }

/// True iff x lies in the ring of integers O_d.
bool is_integer(const QElem& x, std::int64_t d);

/// Least positive integer n with n*x in O_d.
Integer integral_denominator(const QElem& x, std::int64_t d);

/// Floor of the real value, exact.
Integer floor(const QElem& x);

/// x - k*m with k = floor(x/m), so the result lies in [0, m) for m > 0.
QElem mod_positive(const QElem& x, const QElem& m);

class Field {
public:
    explicit Field(std::int64_t d);

    std::int64_t d() const { return d_; }
    QElem sqrt_d() const { return QElem::sqrt_d(d_); }
    QElem make(const Rational& a, const Rational& b) const { return QElem(a, b, d_); }

    /// Smallest unit > 1 of O_d (memoized per d, thread-safe).
    const QElem& fundamental_unit() const;
    /// Smallest unit > 1 with norm +1.
    QElem positive_norm_unit() const;
    /// Generator of O_d over Z beside 1: sqrt d or (1 + sqrt d)/2.
    QElem omega() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    std::int64_t d_;
};

QElem fundamental_unit(std::int64_t d);

}  // namespace veech2

#endif
