// Solutions of the two-cylinder equations with all data in O_d, up to the
// action of norm-one positive units, inside an explicit coordinate box.
//
// A box of size N holds the elements (p + q sqrt d) / r with |p|, |q| <= N,
// where r = 2 when d = 1 mod 4 (and p = q mod 2) and r = 1 otherwise.

#ifndef VEECH2_ENUMERATE_HPP
#define VEECH2_ENUMERATE_HPP

#include "veech2/qfield.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace veech2 {

struct SolutionH2 {
    QElem w1, w2, h1, h2, t1, t2;
    friend bool operator==(const SolutionH2&, const SolutionH2&) = default;
    friend std::strong_ordering operator<=>(const SolutionH2&, const SolutionH2&) = default;
};

struct SolutionSet {
    std::int64_t d = 0;
    Rational c1, c2;
    long box = 0;
    std::vector<SolutionH2> solutions;  // canonical, sorted, pairwise inequivalent

    std::size_t count() const { return solutions.size(); }
    std::string bounds_used() const;
};

enum class EnumerateErrorKind { BadField, EmptyArea, NotIntegral };

class EnumerateError : public std::invalid_argument {
public:
    EnumerateError(EnumerateErrorKind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
    EnumerateErrorKind kind() const { return kind_; }

private:
    EnumerateErrorKind kind_;
};

enum class UnitErrorKind { NotAUnit, NegativeUnit };

class UnitError : public std::invalid_argument {
public:
    UnitError(UnitErrorKind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
    UnitErrorKind kind() const { return kind_; }

private:
    UnitErrorKind kind_;
};

/// (w, t) -> eps (w, t), h -> conj(eps) h, for a unit eps > 0 of norm +1.
SolutionH2 unit_act(const QElem& eps, const SolutionH2& s);

/// Orbit representative with 1 <= w1 < eps+, eps+ the smallest norm-one unit > 1.
SolutionH2 canonicalize(const SolutionH2& s, std::int64_t d);

/// Equations, O_d membership, positivity, w1 < w2 and 0 <= t_i < w_i.
bool is_solution(const SolutionH2& s, std::int64_t d, const Rational& c1, const Rational& c2);

struct EnumerateOptions {
    bool allow_half = false;  // accept c1, c2 in Z/2 when d = 1 mod 4
    unsigned threads = 0;     // 0: hardware concurrency
};

/// Canonical forms of all solutions whose six coordinates lie in the box.
SolutionSet solve_h2(const Rational& c1, const Rational& c2, std::int64_t d, long box,
                     const EnumerateOptions& opts = {});

/// The same set by exhaustive search over the box, in machine integers.
SolutionSet oracle_h2(const Rational& c1, const Rational& c2, std::int64_t d, long box,
                      const EnumerateOptions& opts = {});

}  // namespace veech2

#endif
