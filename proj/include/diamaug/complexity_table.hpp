#pragma once

#include <string>

namespace diamaug {

enum class Complexity { kPolynomial, kNPComplete, kOpen };

/// Known complexity of asking for diameter exactly input_diameter + increase
/// with a deletion budget, on inputs of diameter input_diameter
/// (input_diameter, increase >= 1).
Complexity meda_complexity(int input_diameter, int increase);

/// "P", "NP-c" or "?".
const char* short_label(Complexity c);
/// "polynomial", "NP-complete" or "open".
const char* long_label(Complexity c);

/// Grid with rows input_diameter = 1..max_diameter and columns
/// increase = 1..max_increase, fixed-width text.
std::string render_complexity_table(int max_diameter = 8, int max_increase = 7);

}  // namespace diamaug
