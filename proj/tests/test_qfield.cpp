#include "doctest.h"

#include "veech2/qfield.hpp"

#include <cmath>
#include <random>

using namespace veech2;

namespace {

QElem q(long p, long qq, long r, std::int64_t d) { return QElem::frac(p, qq, r, d); }

// Independent brute force: smallest unit > 1 among (p + q sqrt d)/den with
// small integer p, q, where den is 2 for d = 1 mod 4 and 1 otherwise.
std::pair<long, long> brute_unit(std::int64_t d, long bound) {
    const long den = d % 4 == 1 ? 2 : 1;
    double best = 1e300;
    std::pair<long, long> arg{0, 0};
    for (long p = -bound; p <= bound; ++p) {
        for (long qq = -bound; qq <= bound; ++qq) {
            if (den == 2 && (p - qq) % 2 != 0) continue;
            long n = p * p - d * qq * qq;
            if (n != den * den && n != -den * den) continue;
            double v = (p + qq * std::sqrt(static_cast<double>(d))) / den;
            if (v > 1.0 + 1e-12 && v < best) {
                best = v;
                arg = {p, qq};
            }
        }
    }
    return arg;
}

QElem random_elem(std::mt19937& rng, std::int64_t d) {
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 9);
    return QElem(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), d);
}

}  // namespace

TEST_CASE("conj") {
    CHECK(q(3, 2, 1, 5).conj() == q(3, -2, 1, 5));
    CHECK(QElem(7).conj() == QElem(7));
    QElem x = q(1, 1, 1, 2);
    QElem y = q(2, -1, 1, 2);
    CHECK(conj(x * y) == conj(x) * conj(y));
    CHECK(conj(x * y) == QElem::sqrt_d(2) * QElem(-1));
}

TEST_CASE("sign") {
    CHECK(q(1, -1, 1, 2).sign() == -1);
    CHECK(QElem(0).sign() == 0);
    CHECK(q(3, -1, 2, 5).sign() == 1);
    CHECK(q(-3, 1, 2, 5).sign() == -1);
    CHECK(q(-1, 1, 1, 2).sign() == 1);
}

TEST_CASE("sign agrees with floating point away from zero") {
    std::mt19937 rng(11);
    for (std::int64_t d : {2, 3, 5, 13}) {
        for (int i = 0; i < 300; ++i) {
            QElem x = random_elem(rng, d);
            double v = x.to_double();
            if (std::abs(v) > 1e-9) CHECK(x.sign() == (v > 0 ? 1 : -1));
        }
    }
}

TEST_CASE("is_integer") {
    CHECK(is_integer(q(1, 1, 2, 5), 5));
    CHECK_FALSE(is_integer(q(1, 1, 2, 2), 2));
    CHECK(is_integer(QElem(4), 7));
    CHECK_FALSE(is_integer(q(1, 0, 2, 5), 5));
    CHECK(integral_denominator(q(1, 1, 2, 5), 5) == 1);
    CHECK(integral_denominator(q(1, 1, 4, 5), 5) == 2);
    CHECK(integral_denominator(q(1, 1, 2, 2), 2) == 2);
}

TEST_CASE("fundamental units match brute-force Pell search") {
    CHECK(fundamental_unit(2) == q(1, 1, 1, 2));
    CHECK(fundamental_unit(5) == q(1, 1, 2, 5));
    CHECK(fundamental_unit(3) == q(2, 1, 1, 3));
    for (std::int64_t d : {2, 3, 5, 6, 7, 13, 17, 21}) {
        auto [p, qq] = brute_unit(d, 200);
        const long den = d % 4 == 1 ? 2 : 1;
        QElem eps = fundamental_unit(d);
        CAPTURE(d);
        CHECK(eps == q(p, qq, den, d));
        CHECK(abs(QElem(eps.norm())) == QElem(1));
    }
}

TEST_CASE("fundamental unit minimality, exhaustive within its own coordinate bounds") {
    for (std::int64_t d : {2, 3, 5, 13}) {
        QElem eps = fundamental_unit(d);
        const long den = d % 4 == 1 ? 2 : 1;
        long pmax = static_cast<long>(abs(QElem(eps.a() * den)).a().convert_to<double>()) + 1;
        long qmax = static_cast<long>(abs(QElem(eps.b() * den)).a().convert_to<double>()) + 1;
        for (long p = -pmax; p <= pmax; ++p) {
            for (long qq = -qmax; qq <= qmax; ++qq) {
                QElem u = q(p, qq, den, d);
                if (!is_integer(u, d) || u.is_zero()) continue;
                if (abs(QElem(u.norm())) != QElem(1)) continue;
                CHECK_FALSE((QElem(1) < u && u < eps));
            }
        }
    }
}

TEST_CASE("Field rejects bad d") {
    CHECK_THROWS_AS(Field(4), FieldError);
    CHECK_THROWS_AS(Field(12), FieldError);
    CHECK_THROWS_AS(Field(1), FieldError);
    CHECK_NOTHROW(Field(7));
    CHECK(Field(2).positive_norm_unit() == q(3, 2, 1, 2));
    CHECK(Field(3).positive_norm_unit() == q(2, 1, 1, 3));
}

TEST_CASE("algebraic identities on random elements") {
    std::mt19937 rng(7);
    for (std::int64_t d : {2, 3, 5}) {
        for (int i = 0; i < 200; ++i) {
            QElem x = random_elem(rng, d);
            QElem y = random_elem(rng, d);
            CHECK(conj(conj(x)) == x);
            CHECK((x * conj(x)).is_rational());
            CHECK(x.norm() * y.norm() == (x * y).norm());
            CHECK(conj(x + y) == conj(x) + conj(y));
            if (!x.is_zero()) CHECK(x * x.inverse() == QElem(1));
            CHECK((x < y) == ((y - x).sign() > 0));
            CHECK((x == y) == (x - y).is_zero());
        }
    }
}

TEST_CASE("floor and mod_positive") {
    CHECK(floor(QElem::sqrt_d(2)) == 1);
    CHECK(floor(-QElem::sqrt_d(2)) == -2);
    CHECK(floor(q(1, 1, 2, 5)) == 1);
    CHECK(floor(QElem(Rational(-7, 2))) == -4);
    QElem phi = q(1, 1, 2, 5);
    CHECK(mod_positive(phi + QElem(3), QElem(1)) == phi - QElem(1));
    CHECK(mod_positive(-phi, phi) == QElem(0));
    std::mt19937 rng(3);
    for (int i = 0; i < 200; ++i) {
        QElem x = random_elem(rng, 3);
        CHECK(static_cast<double>(floor(x)) == std::floor(x.to_double()));
    }
}

TEST_CASE("mixed fields are rejected") {
    CHECK_THROWS_AS(QElem::sqrt_d(2) + QElem::sqrt_d(3), FieldError);
    CHECK_NOTHROW(QElem::sqrt_d(2) + QElem(1));
}
