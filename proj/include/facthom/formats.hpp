#ifndef FACTHOM_FORMATS_HPP
#define FACTHOM_FORMATS_HPP

#include <string>

#include "facthom/algebra.hpp"
#include "facthom/simplicial.hpp"
#include "facthom/tft.hpp"

// Line-oriented text formats. '#' starts a comment; blank lines are ignored.
// Every reader throws ParseError with a 1-based line:column position.

namespace facthom::formats {

/// field Q | field F <p>; dim <d>; basis <names>; unit <coeffs>; mul <i> <j> <k> <value>
Algebra read_algebra(const std::string& text);
std::string write_algebra(const Algebra& a);

/// set <n>; unit <e>; op1 / op2 each followed by n rows of n entries
MonoidPair read_monoids(const std::string& text);
std::string write_monoids(const MonoidPair& m);

/// levels <L>; one `elems <names>` line per level 0..L; face <n> <i> <elem> <image>; degen <n> <i> <elem> <image>
SimplicialSet read_simplicial_set(const std::string& text);
std::string write_simplicial_set(const SimplicialSet& x);

/// objects <names>; morphisms <name> <src> <dst>; id <obj> <morphism>; compose <g> <f> <gf>.
/// Composites with an identity may be omitted.
FinCategory read_category(const std::string& text);
std::string write_category(const FinCategory& c);

/// source <signs>; target <signs>; arc <s|t><i> <s|t><j>; circles <c>. An empty side is a bare keyword.
Cobordism1 read_cobordism(const std::string& text);
std::string write_cobordism(const Cobordism1& x);

/// field ...; dims <n> <n_L>; u <n·n_L values>; epsilon <n_L·n values>
DualityDatum read_duality(const std::string& text);
std::string write_duality(const DualityDatum& d);

/// Reads a whole file; throws Error if it cannot be opened.
std::string slurp(const std::string& path);

}  // namespace facthom::formats

#endif
