#include "veech2/enumerate.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <thread>

namespace veech2 {

std::string SolutionSet::bounds_used() const {
    std::string r = d % 4 == 1 ? "2" : "1";
    return "(p + q sqrt " + std::to_string(d) + ")/" + r + " with |p|, |q| <= " + std::to_string(box);
}

SolutionH2 unit_act(const QElem& eps, const SolutionH2& s) {
    std::int64_t d = eps.d() ? eps.d() : s.w1.d();
    if (!is_integer(eps, d) || eps.norm() != 1) throw UnitError(UnitErrorKind::NotAUnit, eps.to_string() + " is not a unit of norm +1");
    if (eps.sign() <= 0) throw UnitError(UnitErrorKind::NegativeUnit, eps.to_string() + " is not positive");
    const QElem e = conj(eps);
    return {eps * s.w1, eps * s.w2, e * s.h1, e * s.h2, eps * s.t1, eps * s.t2};
}

SolutionH2 canonicalize(const SolutionH2& s, std::int64_t d) {
    const QElem eps = Field(d).positive_norm_unit();
    const QElem inv = conj(eps);
    SolutionH2 out = s;
    while (out.w1 < QElem(1)) out = unit_act(eps, out);
    while (!(out.w1 < eps)) out = unit_act(inv, out);
    return out;
}

namespace {

QElem area_constant(const Rational& c1, const Rational& c2, std::int64_t d, const EnumerateOptions& opts) {
    if (d < 2 || !is_square_free(d)) throw EnumerateError(EnumerateErrorKind::BadField, "d = " + std::to_string(d) + " is not a square-free integer >= 2");
    const bool half = opts.allow_half && d % 4 == 1;
    for (const Rational* c : {&c1, &c2}) {
        Rational twice = 2 * *c;
        if (denominator(*c) != 1 && !(half && denominator(twice) == 1)) {
            throw EnumerateError(EnumerateErrorKind::NotIntegral, "c = " + c->str() + " is not an integer");
        }
    }
    QElem a(2 * c1, 2 * c2, d);
    if (a.sign() <= 0) throw EnumerateError(EnumerateErrorKind::EmptyArea, "2(c1 + c2 sqrt d) is not positive");
    return a;
}

long box_denominator(std::int64_t d) { return d % 4 == 1 ? 2 : 1; }

bool in_box(const QElem& x, std::int64_t d, long box) {
    if (!is_integer(x, d)) return false;
    const long r = box_denominator(d);
    Rational p = x.a() * r, q = x.b() * r;
    return abs(p) <= box && abs(q) <= box;
}

std::vector<QElem> box_elements(std::int64_t d, long box) {
    const long r = box_denominator(d);
    std::vector<QElem> out;
    for (long p = -box; p <= box; ++p) {
        for (long q = -box; q <= box; ++q) {
            if (r == 2 && (p - q) % 2 != 0) continue;
            out.emplace_back(Rational(p, r), Rational(q, r), d);
        }
    }
    return out;
}

// Primitive element of O_d on the ray through z (z != 0), made positive.
QElem primitive(const QElem& z, std::int64_t d) {
    Rational m = z.a(), n = z.b();
    if (d % 4 == 1) {
        n = 2 * z.b();
        m = z.a() - z.b();
    }
    Integer l = boost::multiprecision::lcm(denominator(m), denominator(n));
    Integer mi = numerator(Rational(m * l)), ni = numerator(Rational(n * l));
    Integer g = boost::multiprecision::gcd(mi, ni);
    Rational mm(mi / g), nn(ni / g);
    QElem out = d % 4 == 1 ? QElem(mm + nn / 2, nn / 2, d) : QElem(mm, nn, d);
    return out.sign() < 0 ? -out : out;
}

using Found = std::set<SolutionH2>;

void solve_from(const QElem& w1, const QElem& a, std::int64_t d, long box, const std::vector<QElem>& positives,
                const std::vector<QElem>& all, Found& found) {
    const long r = box_denominator(d);
    for (const QElem& h1 : positives) {
        const QElem rest = a - w1 * h1;
        if (rest.sign() <= 0) continue;
        // the height equation and w2 h2 = rest fix conj(w2) / w2
        const QElem rho = -(conj(w1) * h1) / rest;
        if (rho.norm() != 1) continue;
        const QElem z0 = primitive(rho == QElem(-1) ? QElem::sqrt_d(d) : 1 + conj(rho), d);
        for (long k = 1;; ++k) {
            const QElem w2 = QElem(k) * z0;
            if (!in_box(w2, d, box)) break;
            if (!(w1 < w2)) continue;
            const QElem h2 = rest / w2;
            if (!in_box(h2, d, box)) continue;
            // twist equation: the sqrt d part of conj(w2) t2 is fixed by t1
            const Rational alpha = w2.a(), gamma = w2.b();
            for (const QElem& t1 : all) {
                if (t1.sign() < 0 || !(t1 < w1)) continue;
                const Rational beta = -(conj(w1) * t1 + conj(w1) * w2).b();
                // alpha q - gamma p = r beta
                auto emit = [&](const Rational& p, const Rational& q) {
                    if (denominator(p) != 1 || denominator(q) != 1) return;
                    if (abs(p) > box || abs(q) > box) return;
                    if (r == 2 && numerator(Rational(p - q)) % 2 != 0) return;
                    QElem t2(p / r, q / r, d);
                    if (t2.sign() < 0 || !(t2 < w2)) return;
                    found.insert(canonicalize({w1, w2, h1, h2, t1, t2}, d));
                };
                if (alpha != 0) {
                    for (long p = -box; p <= box; ++p) emit(Rational(p), (r * beta + gamma * p) / alpha);
                } else {
                    for (long q = -box; q <= box; ++q) emit(-r * beta / gamma, Rational(q));
                }
            }
        }
    }
}

unsigned thread_count(const EnumerateOptions& opts) {
    unsigned n = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    return std::max(1u, n);
}

// Runs work(i, found) for i in [0, n) on strided partitions and merges.
template <class Work>
std::vector<SolutionH2> partitioned(std::size_t n, unsigned threads, Work work) {
    std::vector<std::future<Found>> parts;
    for (unsigned t = 0; t < threads; ++t) {
        parts.push_back(std::async(std::launch::async, [=, &work] {
            Found f;
            for (std::size_t i = t; i < n; i += threads) work(i, f);
            return f;
        }));
    }
    Found all;
    for (auto& p : parts) all.merge(p.get());
    return {all.begin(), all.end()};
}

}  // namespace

bool is_solution(const SolutionH2& s, std::int64_t d, const Rational& c1, const Rational& c2) {
    for (const QElem* x : {&s.w1, &s.w2, &s.h1, &s.h2, &s.t1, &s.t2}) {
        if (x->d() != 0 && x->d() != d) return false;
        if (!is_integer(*x, d)) return false;
    }
    if (s.w1.sign() <= 0 || s.h1.sign() <= 0 || s.h2.sign() <= 0 || !(s.w1 < s.w2)) return false;
    if (s.t1.sign() < 0 || s.t2.sign() < 0 || !(s.t1 < s.w1) || !(s.t2 < s.w2)) return false;
    if (!(s.w1 * conj(s.h1) == -(s.w2 * conj(s.h2)))) return false;
    QElem twist = conj(s.w1) * s.t1 + conj(s.w2) * s.t2 + conj(s.w1) * s.w2;
    if (!twist.is_rational()) return false;
    return s.w1 * s.h1 + s.w2 * s.h2 == QElem(2 * c1, 2 * c2, d);
}

SolutionSet solve_h2(const Rational& c1, const Rational& c2, std::int64_t d, long box, const EnumerateOptions& opts) {
    const QElem a = area_constant(c1, c2, d, opts);
    const std::vector<QElem> all = box_elements(d, box);
    std::vector<QElem> positives;
    std::copy_if(all.begin(), all.end(), std::back_inserter(positives), [](const QElem& x) { return x.sign() > 0; });
    SolutionSet out{d, c1, c2, box, {}};
    out.solutions = partitioned(positives.size(), thread_count(opts), [&](std::size_t i, Found& f) {
        solve_from(positives[i], a, d, box, positives, all, f);
    });
    return out;
}

namespace {

// (p + q sqrt d) / r in machine integers; products carry the factor r^2.
struct Z2 {
    long long p = 0, q = 0;
};

using i128 = __int128;

int sign_of(i128 p, i128 q, long long d) {
    if (p >= 0 && q >= 0) return (p || q) ? 1 : 0;
    if (p <= 0 && q <= 0) return -1;
    i128 pp = p * p, dq = d * q * q;
    if (p > 0) return pp > dq ? 1 : -1;
    return dq > pp ? 1 : -1;
}

struct Z2Prod {
    i128 p = 0, q = 0;
    friend bool operator==(const Z2Prod&, const Z2Prod&) = default;
};

Z2Prod mul(const Z2& x, const Z2& y, long long d) {
    return {i128(x.p) * y.p + i128(d) * x.q * y.q, i128(x.p) * y.q + i128(x.q) * y.p};
}

Z2 conj(const Z2& x) { return {x.p, -x.q}; }

}  // namespace

SolutionSet oracle_h2(const Rational& c1, const Rational& c2, std::int64_t d, long box, const EnumerateOptions& opts) {
    const QElem a = area_constant(c1, c2, d, opts);
    const long r = box_denominator(d);
    const long long dd = d;
    std::vector<Z2> all, positives;
    for (long p = -box; p <= box; ++p) {
        for (long q = -box; q <= box; ++q) {
            if (r == 2 && (p - q) % 2 != 0) continue;
            all.push_back({p, q});
            if (sign_of(p, q, dd) > 0) positives.push_back({p, q});
        }
    }
    // A r^2 as an integer pair
    const Z2Prod target{i128(static_cast<long long>(numerator(Rational(a.a() * r * r)))),
                        i128(static_cast<long long>(numerator(Rational(a.b() * r * r))))};
    auto to_q = [&](const Z2& x) { return QElem(Rational(x.p, r), Rational(x.q, r), d); };
    SolutionSet out{d, c1, c2, box, {}};
    out.solutions = partitioned(positives.size(), thread_count(opts), [&](std::size_t i, Found& f) {
        const Z2& w1 = positives[i];
        for (const Z2& h1 : positives) {
            Z2Prod p1 = mul(w1, h1, dd);
            Z2Prod rest{target.p - p1.p, target.q - p1.q};
            if (sign_of(rest.p, rest.q, dd) <= 0) continue;
            Z2Prod e1 = mul(w1, conj(h1), dd);
            for (const Z2& w2 : positives) {
                if (sign_of(w2.p - w1.p, w2.q - w1.q, dd) <= 0) continue;
                for (const Z2& h2 : positives) {
                    if (!(mul(w2, h2, dd) == rest)) continue;
                    Z2Prod e2 = mul(w2, conj(h2), dd);
                    if (e1.p + e2.p != 0 || e1.q + e2.q != 0) continue;
                    i128 fixed = mul(conj(w1), w2, dd).q;
                    for (const Z2& t1 : all) {
                        if (sign_of(t1.p, t1.q, dd) < 0 || sign_of(w1.p - t1.p, w1.q - t1.q, dd) <= 0) continue;
                        i128 part = fixed + mul(conj(w1), t1, dd).q;
                        for (const Z2& t2 : all) {
                            if (part + mul(conj(w2), t2, dd).q != 0) continue;
                            if (sign_of(t2.p, t2.q, dd) < 0 || sign_of(w2.p - t2.p, w2.q - t2.q, dd) <= 0) continue;
                            f.insert(canonicalize({to_q(w1), to_q(w2), to_q(h1), to_q(h2), to_q(t1), to_q(t2)}, d));
                        }
                    }
                }
            }
        }
    });
    return out;
}

}  // namespace veech2
