// Coordinate models of R ^_Q R and R (x)_Q R restricted to Q(sqrt d).

#ifndef VEECH2_TENSOR_HPP
#define VEECH2_TENSOR_HPP

#include "veech2/qfield.hpp"

namespace veech2 {

/// c * (1 ^ sqrt d). Every wedge of two elements of Q(sqrt d) lies on this line.
struct WedgeQQ {
    Rational c{0};

    bool is_zero() const { return c == 0; }
    WedgeQQ& operator+=(const WedgeQQ& o) { c += o.c; return *this; }
    WedgeQQ& operator-=(const WedgeQQ& o) { c -= o.c; return *this; }
    friend WedgeQQ operator+(WedgeQQ x, const WedgeQQ& y) { return x += y; }
    friend WedgeQQ operator-(WedgeQQ x, const WedgeQQ& y) { return x -= y; }
    friend WedgeQQ operator*(const Rational& s, WedgeQQ x) { x.c *= s; return x; }
    friend bool operator==(const WedgeQQ&, const WedgeQQ&) = default;
};

/// c1 (1 (x) 1) + c2 (1 (x) sqrt d) + c3 (sqrt d (x) 1) + c4 (sqrt d (x) sqrt d).
struct TensorC4 {
    Rational c1{0}, c2{0}, c3{0}, c4{0};

    bool is_zero() const { return c1 == 0 && c2 == 0 && c3 == 0 && c4 == 0; }
    TensorC4& operator+=(const TensorC4& o);
    TensorC4& operator-=(const TensorC4& o);
    friend TensorC4 operator+(TensorC4 x, const TensorC4& y) { return x += y; }
    friend TensorC4 operator-(TensorC4 x, const TensorC4& y) { return x -= y; }
    friend TensorC4 operator*(const Rational& s, TensorC4 x);
    friend bool operator==(const TensorC4&, const TensorC4&) = default;
};

WedgeQQ wedge(const QElem& x, const QElem& y);
TensorC4 tensor(const QElem& x, const QElem& y);

}  // namespace veech2

#endif
