// Cylinder surfaces: canonical builders for the two-cylinder H(2) and
// three-cylinder H(1,1) diagrams, exact decomposition of a surface into
// cylinders by tracing separatrices, and twist measurement.

#ifndef VEECH2_CYLINDER_HPP
#define VEECH2_CYLINDER_HPP

#include "veech2/surface.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace veech2 {

struct CylinderData {
    QElem width;
    QElem height;
    QElem twist;
    friend bool operator==(const CylinderData&, const CylinderData&) = default;
};

/// s_i = h_i + h_3 and tau_i = t_i + t_3 for a three-cylinder diagram.
struct H11Derived {
    QElem s1, s2, tau1, tau2;
};

H11Derived h11_derived(const CylinderData& c1, const CylinderData& c2, const CylinderData& c3);

enum class BuildErrorKind { WidthOrder, NonPositive, TwistRange };

class BuildError : public std::invalid_argument {
public:
    BuildError(BuildErrorKind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
    BuildErrorKind kind() const { return kind_; }

private:
    BuildErrorKind kind_;
};

using SymplecticBasis = std::vector<std::pair<Vec2, Vec2>>;

struct BuiltSurface {
    Surface surface;
    SymplecticBasis basis;
};

/// Two horizontal cylinders: C1 (width w1) stacked on C2 (width w2 > w1).
/// Twists are those reported by measure_twists against the vertical.
BuiltSurface build_h2(const QElem& w1, const QElem& w2, const QElem& h1, const QElem& h2,
                      const QElem& t1, const QElem& t2);

/// Three horizontal cylinders: C1 and C2 both sit on top of C3, whose width
/// is w1 + w2, and both glue back onto its bottom. The labels must follow the
/// order decompose reports: (w1, h1, t1) <= (w2, h2, t2) lexicographically.
BuiltSurface build_h11(const QElem& w1, const QElem& w2, const QElem& h1, const QElem& h2, const QElem& h3,
                       const QElem& t1, const QElem& t2, const QElem& t3);

/// One horizontal piece of a traced saddle connection, in the normalized chart.
struct TraceSegment {
    std::size_t polygon = 0;
    QElem y;
    QElem x0;
    QElem x1;
    QElem offset;  // length of the saddle connection before this piece
};

struct SaddleConnection {
    std::size_t from_class = 0;
    std::size_t to_class = 0;
    QElem length;
    std::vector<TraceSegment> segments;
};

/// Boundary combinatorics of one cylinder in the normalized chart. Positions
/// are measured along the core curve in a frame where the vertical through
/// bottom position x meets the top boundary at position x.
struct CylinderBoundary {
    std::vector<std::size_t> bottom;  // saddle connection ids, left to right
    std::vector<std::size_t> top;
    std::vector<QElem> bottom_starts;
    std::vector<QElem> top_starts;
};

struct CylinderDecomposition {
    Vec2 direction;
    Matrix2 normalizer;  // det 1, sends direction to the horizontal
    std::vector<CylinderData> cylinders;
    Vec2 twist_direction;
    std::vector<CylinderBoundary> boundaries;  // parallel to cylinders
    std::vector<SaddleConnection> saddles;
};

enum class DecomposeStatus { Periodic, NotPeriodic, Inconclusive };

struct DecomposeResult {
    DecomposeStatus status = DecomposeStatus::Inconclusive;
    std::optional<CylinderDecomposition> decomposition;
    std::string detail;

    bool periodic() const { return status == DecomposeStatus::Periodic; }
};

/// Default bound on the traced length of each separatrix: 100 times the sum
/// of |x| over all polygon edges in the normalized chart. The VEECH2_CAP
/// environment variable (an exact rational such as "500" or "7/2"), when
/// set, replaces it.
QElem default_cap(const Surface& s, const Vec2& direction);

/// Decompose s into cylinders in direction v. Twists are measured against
/// the direction the normalizer sends to the vertical. Separatrices are
/// traced from every vertex class of angle > 2pi (from every class when
/// there is none); a regular vertex met on the way is passed straight
/// through. Cylinders with one saddle connection on each side come first,
/// ordered by (width, height, twist), then the others by (width, height).
DecomposeResult decompose(const Surface& s, const Vec2& v, std::optional<QElem> cap = std::nullopt);

class ParallelDirectionsError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Twist of every cylinder measured along w, in [0, width).
///
/// A cylinder with a single saddle connection on each boundary is measured
/// from its bottom cone point to its top cone point. A wider cylinder with a
/// single-saddle neighbour N (whose top lies on its bottom and whose bottom
/// lies on its top) is measured from the start of N's top saddle connection
/// to the end of N's bottom saddle connection, with N the first such
/// neighbour in decomposition order. From the measured offset the
/// projection of w' (the vector along w spanning the height) onto the core
/// direction is subtracted before reducing modulo the width.
std::vector<QElem> measure_twists(const CylinderDecomposition& dec, const Vec2& w);

/// Directions p(lambda) for lambda = sum n_i g_i over a Z-basis of the
/// period lattice with |n_i| <= coeff_bound, normalized to (1, q) or (0, 1).
/// Ordered by the smallest coefficient weight sum |n_i| producing the
/// direction, then lexicographically.
std::vector<Vec2> homological_directions(const Surface& s, int coeff_bound);

/// Normalize a nonzero direction to (1, q) or (0, 1).
Vec2 canonical_direction(const Vec2& v);

}  // namespace veech2

#endif
