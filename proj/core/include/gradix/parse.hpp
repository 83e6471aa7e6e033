#ifndef GRADIX_PARSE_HPP
#define GRADIX_PARSE_HPP

#include <optional>
#include <string>
#include <vector>

#include "gradix/graded_field.hpp"
#include "gradix/grading.hpp"
#include "gradix/harness.hpp"
#include "gradix/ideal.hpp"

namespace gradix {

/// "QQ" or "GF(p)".
Field parse_field(const std::string& text);
/// "QQ[x,y]" / "GF(32003)[a,b,c]".
Ring parse_ring(const std::string& text);
/// Integer matrix literal "[[1,1],[0,2]]"; row length must match `nvars`.
GradingMap parse_grading(const std::string& text, std::size_t nvars);
/// "lex" or "grevlex".
MonomialOrder parse_order(const std::string& text);

/// Expression grammar: integer and rational coefficients, ring variables,
/// `+ - * ^` and parentheses. `*` may be omitted after a coefficient but is
/// required between variables. Errors carry 1-based positions.
Polynomial parse_polynomial(const std::string& text, const Ring& ring,
                            MonomialOrder order = MonomialOrder::grevlex());

/// Comma-separated generator list; an empty string is the zero ideal. A bare
/// name token is resolved against `splice` (earlier session declarations) and
/// contributes that ideal's generators.
Ideal parse_ideal(const std::string& text, const Ring& ring,
                  MonomialOrder order = MonomialOrder::grevlex(),
                  const std::vector<std::pair<std::string, Ideal>>* splice = nullptr);

/// "(0,1), (0,2), (1/2,-3)" with rational coordinates.
PointConfiguration parse_points(const std::string& text, const Field& field = Field::rationals());

/// Graded-field matrix format:
///   gfield GF(7) rank 2 support ((1,0); (0,2))
///   rowdeg (0,0) (1,1)
///   coldeg (0,0)
///   3*e(1,1)
///   0
/// Entries are row-major, `c*e(v)` or `0`, one matrix row per line.
HomogeneousMatrix parse_gfmatrix(const std::string& text);
std::string print_gfmatrix(const HomogeneousMatrix& matrix);

/// One-declaration-per-line session file: ring, grading, order, named ideals,
/// named point configurations, named graded-field matrices (whose entry block
/// spans the following lines). `#` starts a comment. Names must be declared
/// before use and printing round-trips.
struct SessionFile {
    std::optional<Ring> ring;
    std::optional<GradingMap> grading;
    std::optional<MonomialOrder> order;
    std::vector<std::pair<std::string, Ideal>> ideals;
    std::vector<std::pair<std::string, PointConfiguration>> points;
    std::vector<std::pair<std::string, HomogeneousMatrix>> matrices;
};

SessionFile parse_session(const std::string& text);
std::string print_session(const SessionFile& session);

}  // namespace gradix

#endif
