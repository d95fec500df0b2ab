#include "veech2/tensor.hpp"

namespace veech2 {

TensorC4& TensorC4::operator+=(const TensorC4& o) {
    c1 += o.c1;
    c2 += o.c2;
    c3 += o.c3;
    c4 += o.c4;
    return *this;
}

TensorC4& TensorC4::operator-=(const TensorC4& o) {
    c1 -= o.c1;
    c2 -= o.c2;
    c3 -= o.c3;
    c4 -= o.c4;
    return *this;
}

TensorC4 operator*(const Rational& s, TensorC4 x) {
    x.c1 *= s;
    x.c2 *= s;
    x.c3 *= s;
    x.c4 *= s;
    return x;
}

namespace {

void check_same_field(const QElem& x, const QElem& y) {
    // merging the fields throws on mismatch
    (void)(x.in_field(y.d()));
}

}  // namespace

WedgeQQ wedge(const QElem& x, const QElem& y) {
    check_same_field(x, y);
    return WedgeQQ{x.a() * y.b() - x.b() * y.a()};
}

TensorC4 tensor(const QElem& x, const QElem& y) {
    check_same_field(x, y);
    return TensorC4{x.a() * y.a(), x.a() * y.b(), x.b() * y.a(), x.b() * y.b()};
}

}  // namespace veech2
