#include "doctest.h"

#include "veech2/tensor.hpp"

#include <random>

using namespace veech2;

namespace {

QElem q(long p, long qq, long r, std::int64_t d) { return QElem::frac(p, qq, r, d); }

QElem random_elem(std::mt19937& rng, std::int64_t d) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 6);
    return QElem(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), d);
}

}  // namespace

TEST_CASE("wedge examples") {
    CHECK(wedge(q(1, 1, 1, 2), q(1, -1, 1, 2)).c == -2);
    CHECK(wedge(q(3, 4, 7, 2), q(3, 4, 7, 2)).is_zero());
    CHECK(wedge(QElem(3), QElem(5)).is_zero());
}

TEST_CASE("tensor examples") {
    CHECK(tensor(QElem::sqrt_d(3), QElem::sqrt_d(3)) == TensorC4{0, 0, 0, 1});
    CHECK(tensor(QElem(1), q(2, 3, 1, 7)) == TensorC4{2, 3, 0, 0});
    CHECK(tensor(q(1, 1, 1, 2), q(1, 1, 1, 2)) == TensorC4{1, 1, 1, 1});
    CHECK(tensor(QElem(Rational(2, 3)), QElem(5)) == TensorC4{Rational(10, 3), 0, 0, 0});
}

TEST_CASE("bilinearity and symmetry properties") {
    std::mt19937 rng(5);
    for (std::int64_t d : {2, 3, 5}) {
        for (int i = 0; i < 150; ++i) {
            QElem x = random_elem(rng, d), y = random_elem(rng, d), z = random_elem(rng, d);
            Rational r(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1);
            CHECK(wedge(x, y) == Rational(-1) * wedge(y, x));
            CHECK(wedge(x + QElem(r) * z, y) == wedge(x, y) + r * wedge(z, y));
            CHECK(tensor(x, y + QElem(r) * z) == tensor(x, y) + r * tensor(x, z));
            TensorC4 t = tensor(x, y), u = tensor(y, x);
            CHECK(t.c1 == u.c1);
            CHECK(t.c4 == u.c4);
            CHECK(t.c2 == u.c3);
            CHECK(t.c3 == u.c2);
        }
    }
}

TEST_CASE("mixed fields rejected") {
    CHECK_THROWS_AS(wedge(QElem::sqrt_d(2), QElem::sqrt_d(5)), FieldError);
    CHECK_THROWS_AS(tensor(QElem::sqrt_d(2), QElem::sqrt_d(5)), FieldError);
}
