#ifndef RIORDAN_RIORDAN_HPP
#define RIORDAN_RIORDAN_HPP

// Umbrella header: exact truncated power series over the rationals, the
// Riordan group, the involution constructions, and continued-fraction /
// B-sequence analysis.

#include "riordan/analysis.hpp"
#include "riordan/construct.hpp"
#include "riordan/errors.hpp"
#include "riordan/expr.hpp"
#include "riordan/group.hpp"
#include "riordan/params.hpp"
#include "riordan/rational.hpp"
#include "riordan/series.hpp"

namespace riordan {

// Canonical instantiations used by the CLI and tests.
using Series = TruncatedSeries<Rational>;
using Element = RiordanElement<Rational>;
using Triangle = TriangleMatrix<Rational>;
using Params = FamilyParams<Rational>;

} // namespace riordan

#endif // RIORDAN_RIORDAN_HPP
