#pragma once

#include <string>

#include "kshape/partial_shape.hpp"
#include "kshape/partition.hpp"
#include "kshape/pistol.hpp"
#include "kshape/skew.hpp"

namespace kshape {

/// Staircase tableau of a pistol of height h: h right-justified rows of
/// lengths 2, 4, ..., 2h printed top to bottom.  Domain position j is the
/// j-th column from the right; its dot sits in row f(j)/2 from the top.
/// Dots print as '*', empty staircase cells as '.'.
std::string render_pistol(const Pistol& f);

/// Diagram of a partition with every cell labeled by its hook length,
/// bottom row last (rows appear top to bottom).  Returns "()" when empty.
std::string render_partition(const Partition& p);

/// Diagram of a skew shape, occupied cells as '#', top row first.
std::string render_skew(const SkewShape& s);

/// Diagram of a labeled partial shape, top row first: '#' for label-1
/// columns and 'o' for label-2 columns.
std::string render_partial_shape(const PartialKShape& s);

} // namespace kshape
