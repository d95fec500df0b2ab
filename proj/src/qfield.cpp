#include "veech2/qfield.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

namespace veech2 {

namespace {

int rsign(const Rational& r) { return r.sign(); }

Integer floor_div(const Integer& n, const Integer& m) {
    // m > 0
    Integer q = n / m;
    if (n % m != 0 && n < 0) q -= 1;
    return q;
}

Integer floor_rational(const Rational& r) {
    return floor_div(numerator(r), denominator(r));
}

Integer lcm_int(const Integer& x, const Integer& y) {
    return boost::multiprecision::lcm(x, y);
}

}  // namespace

bool is_square_free(std::int64_t n) {
    if (n < 1) return false;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
    }
    return true;
}

QElem::QElem(Rational a, Rational b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d_ == 0 && b_ != 0) throw FieldError("irrational part given without a field");
    if (d_ < 0) throw FieldError("negative discriminant");
}

QElem QElem::frac(long p, long q, long r, std::int64_t d) {
    if (r == 0) throw FieldError("zero denominator");
    return QElem(Rational(p, r), Rational(q, r), d);
}

std::int64_t QElem::merge_field(std::int64_t d1, std::int64_t d2) {
    if (d1 == 0) return d2;
    if (d2 == 0 || d1 == d2) return d1;
    throw FieldError("mixed fields: sqrt(" + std::to_string(d1) + ") and sqrt(" + std::to_string(d2) + ")");
}

QElem QElem::in_field(std::int64_t d) const {
    QElem r = *this;
    r.d_ = merge_field(d_, d);
    return r;
}

QElem QElem::conj() const {
    QElem r = *this;
    r.b_ = -r.b_;
    return r;
}

Rational QElem::norm() const {
    return a_ * a_ - b_ * b_ * d_;
}

QElem QElem::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(sqrt d)");
    Rational n = norm();
    QElem c = conj();
    c.a_ /= n;
    c.b_ /= n;
    return c;
}

int QElem::sign() const {
    int sa = rsign(a_);
    int sb = rsign(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: compare a^2 with b^2 d
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * d_;
    return lhs > rhs ? sa : sb;
}

double QElem::to_double() const {
    return a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(static_cast<double>(d_));
}

QElem QElem::operator-() const {
    QElem r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

QElem& QElem::operator+=(const QElem& o) {
    d_ = merge_field(d_, o.d_);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QElem& QElem::operator-=(const QElem& o) {
    d_ = merge_field(d_, o.d_);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QElem& QElem::operator*=(const QElem& o) {
    d_ = merge_field(d_, o.d_);
    if (b_ == 0 && o.b_ == 0) {
        a_ *= o.a_;
        return *this;
    }
    Rational na = a_ * o.a_ + b_ * o.b_ * d_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

QElem& QElem::operator/=(const QElem& o) {
    if (o.is_rational()) {
        if (o.a_ == 0) throw std::domain_error("division by zero in Q(sqrt d)");
        d_ = merge_field(d_, o.d_);
        a_ /= o.a_;
        b_ /= o.a_;
        return *this;
    }
    return *this *= o.inverse();
}

std::strong_ordering operator<=>(const QElem& x, const QElem& y) {
    int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string QElem::to_string() const {
    std::ostringstream os;
    if (b_ == 0) {
        os << a_;
        return os.str();
    }
    if (a_ != 0) os << a_ << (b_ > 0 ? " + " : " - ");
    else if (b_ < 0) os << "-";
    Rational ab = b_ < 0 ? Rational(-b_) : b_;
    if (ab != 1) os << ab << "*";
    os << "sqrt" << d_;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QElem& x) {
    return os << x.to_string();
}

bool is_integer(const QElem& x, std::int64_t d) {
    if (d % 4 == 1) {
        Rational ta = x.a() * 2;
        Rational tb = x.b() * 2;
        if (denominator(ta) != 1 || denominator(tb) != 1) return false;
        Integer diff = numerator(ta) - numerator(tb);
        return diff % 2 == 0;
    }
    return denominator(x.a()) == 1 && denominator(x.b()) == 1;
}

Integer integral_denominator(const QElem& x, std::int64_t d) {
    Integer n0 = lcm_int(denominator(x.a()), denominator(x.b()));
    if (d % 4 == 1 && n0 % 2 == 0) {
        Integer half = n0 / 2;
        if (is_integer(x * QElem(Rational(half)), d)) return half;
    }
    return n0;
}

Integer floor(const QElem& x) {
    if (x.b() == 0) return floor_rational(x.a());
    // x = (p*s + N*sqrt d) / (q*s) with N = r*q
    const Integer p = numerator(x.a());
    const Integer q = denominator(x.a());
    const Integer r = numerator(x.b());
    const Integer s = denominator(x.b());
    const Integer n = r * q;
    Integer m = boost::multiprecision::sqrt(Integer(n * n * x.d()));
    if (n < 0) m = -m - 1;
    return floor_div(p * s + m, q * s);
}

QElem mod_positive(const QElem& x, const QElem& m) {
    if (m.sign() <= 0) throw std::domain_error("mod_positive requires a positive modulus");
    Integer k = floor(x / m);
    return x - m * QElem(Rational(k));
}

Field::Field(std::int64_t d) : d_(d) {
    if (d < 2 || !is_square_free(d)) {
        throw FieldError("d = " + std::to_string(d) + " is not a square-free integer >= 2");
    }
}

QElem Field::omega() const {
    if (d_ % 4 == 1) return QElem(Rational(1, 2), Rational(1, 2), d_);
    return sqrt_d();
}

namespace {

// Continued fraction of (P0 + sqrt d)/Q0; the first convergent p/q whose
// associated element has norm +-1 gives the fundamental unit.
QElem compute_fundamental_unit(std::int64_t d) {
    const bool one_mod_four = d % 4 == 1;
    Integer P = one_mod_four ? 1 : 0;
    Integer Q = one_mod_four ? 2 : 1;
    Integer h_prev = 1, h_prev2 = 0;
    Integer k_prev = 0, k_prev2 = 1;
    for (int iter = 0; iter < 100000; ++iter) {
        QElem cur(Rational(P, Q), Rational(Integer(1), Q), d);
        Integer a = floor(cur);
        Integer h = a * h_prev + h_prev2;
        Integer k = a * k_prev + k_prev2;
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
        QElem unit = one_mod_four ? QElem(Rational(2 * h - k, 2), Rational(k, 2), d)
                                  : QElem(Rational(h), Rational(k), d);
        Rational n = unit.norm();
        if (n == 1 || n == -1) return unit;
        Integer p_next = a * Q - P;
        Integer q_next = (Integer(d) - p_next * p_next) / Q;
        P = p_next;
        Q = q_next;
    }
    throw FieldError("continued fraction did not terminate for d = " + std::to_string(d));
}

}  // namespace

const QElem& Field::fundamental_unit() const {
    static std::mutex mu;
    static std::map<std::int64_t, QElem> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d_);
    if (it == cache.end()) it = cache.emplace(d_, compute_fundamental_unit(d_)).first;
    return it->second;
}

QElem Field::positive_norm_unit() const {
    const QElem& e = fundamental_unit();
    if (e.norm() == 1) return e;
    return e * e;
}

QElem fundamental_unit(std::int64_t d) {
    return Field(d).fundamental_unit();
}

}  // namespace veech2
