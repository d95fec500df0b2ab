// JSON documents for surfaces, decompositions, J-invariants, verdicts and
// solution sets. Every document carries the field as "d" (null when none),
// and each field element is written as four decimal strings
// [num_a, den_a, num_b, den_b] for (num_a/den_a) + (num_b/den_b) sqrt d.

#ifndef VEECH2_IO_HPP
#define VEECH2_IO_HPP

#include "veech2/classify.hpp"
#include "veech2/enumerate.hpp"
#include "veech2/jinvariant.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace veech2 {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json to_json(const QElem& x);
Json to_json(const Vec2& v);
QElem qelem_from_json(const Json& j, std::int64_t d);
Vec2 vec2_from_json(const Json& j, std::int64_t d);

Json surface_json(const Surface& s);
Surface parse_surface(const Json& j);

Json decomposition_json(const CylinderDecomposition& dec, std::int64_t d);
Json jinvariant_json(const JInvariant& j, std::int64_t d);

Json verdict_json(const Verdict& v, std::int64_t d);
Verdict parse_verdict(const Json& j);

Json solution_set_json(const SolutionSet& s);
SolutionSet parse_solution_set(const Json& j);

/// Compact single-line text followed by a newline.
std::string dump(const Json& j);
Json parse_json(const std::string& text);

/// Command-line element syntax "p,q,r" for (p + q sqrt d) / r; "p,q" and "p"
/// are accepted with r = 1 (and q = 0).
QElem parse_triple(const std::string& text, std::int64_t d);

}  // namespace veech2

#endif
