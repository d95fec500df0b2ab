// Classification of genus-2 surfaces: the cylinder equations for two-cylinder
// H(2) and three-cylinder H(1,1) data, Property X, and the bounded Veech,
// complete-periodicity and hyperperiodicity scans built on them.
//
// For H(2) data (cylinder 1 narrow, cylinder 2 wide):
//   height:  w1 conj(h1) = -w2 conj(h2)
//   twist:   conj(w1) t1 + conj(w2) t2 + conj(w1) w2 is rational
//   area:    w1 h1 + w2 h2 = 2 (c1 + c2 sqrt d)
// For H(1,1) data the same shapes hold with s_i = h_i + h3, tau_i = t_i + t3.

#ifndef VEECH2_CLASSIFY_HPP
#define VEECH2_CLASSIFY_HPP

#include "veech2/cylinder.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace veech2 {

enum class VerdictStatus { Proved, RefutedWithWitness, InconclusiveAtBound };

std::string to_string(VerdictStatus s);

struct Verdict {
    VerdictStatus status = VerdictStatus::InconclusiveAtBound;
    std::optional<Vec2> direction;  // the direction the verdict rests on
    std::optional<Vec2> twist_direction;
    std::optional<std::string> equation;  // failing or certifying equation
    std::optional<QElem> residual;  // right side minus left side when refuted
    std::string detail;

    bool proved() const { return status == VerdictStatus::Proved; }
    bool refuted() const { return status == VerdictStatus::RefutedWithWitness; }
};

class WrongStratumError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NoValidRenumberingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class PreconditionFailedError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotQuadraticError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct EquationReport {
    bool height_holds = false;
    bool twist_holds = false;
    QElem height_lhs, height_rhs;  // w1 conj(h1) and -w2 conj(h2)
    QElem twist_lhs, twist_rhs;  // the twist expression and its conjugate
    QElem c;  // (w1 h1 + w2 h2) / 2 = c1 + c2 sqrt d
    std::array<std::size_t, 3> order{0, 1, 2};  // input index used as cylinder 1, 2, 3

    bool holds() const { return height_holds && twist_holds; }
    QElem height_residual() const { return height_rhs - height_lhs; }
    QElem twist_residual() const { return twist_rhs - twist_lhs; }
};

EquationReport h2_equations(const CylinderData& c1, const CylinderData& c2);
bool check_h2_equations(const CylinderData& c1, const CylinderData& c2, std::int64_t d);

/// The cylinder whose width is the sum of the other two becomes cylinder 3;
/// the other two keep their input order, since the twist anchor of the wide
/// cylinder is tied to the first of them.
EquationReport h11_equations(const CylinderData& a, const CylinderData& b, const CylinderData& c);
bool check_h11_equations(const CylinderData& a, const CylinderData& b, const CylinderData& c, std::int64_t d);

/// Multiply all widths, heights and twists by the least positive integer
/// making every one of them an algebraic integer of Q(sqrt d).
std::vector<CylinderData> clear_denominators(std::vector<CylinderData> data, std::int64_t d);

/// J_vv = 0 for every homological direction up to the bound; refuted with
/// the first direction (in homological_directions order) where it fails.
Verdict property_x(const Surface& s, int coeff_bound);

/// c2 = c3 and c1 = d c4 for J_vw, given J_vv = J_ww = 0.
bool property_x_via_jvw(const Surface& s, const Vec2& v, const Vec2& w);

Verdict is_veech_h2(const Surface& s, std::optional<QElem> cap, int coeff_bound);
Verdict is_completely_periodic(const Surface& s, std::optional<QElem> cap, int coeff_bound);
Verdict is_hyperperiodic_genus2(const Surface& s, int coeff_bound);

/// Area after a diagonal rescaling that puts the period coordinates in O_d
/// with no common factor. The x and y coordinate ideals are each divided by
/// a generator normalized so that g > 0 and 1 <= g / |conj g| < eps^2; when
/// no generator turns up in a bounded search only the rational content is
/// removed.
QElem area_invariant(const Surface& s);

}  // namespace veech2

#endif
