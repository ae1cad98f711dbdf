#include "diamaug/complexity_table.hpp"

#include <iomanip>
#include <sstream>
#include <vector>

#include "diamaug/errors.hpp"

namespace diamaug {

Complexity meda_complexity(int input_diameter, int increase) {
  if (input_diameter < 1 || increase < 1) {
    throw PreconditionError("diameter and increase must be positive");
  }
  const int d = input_diameter, k = increase;
  if (d == 1) return Complexity::kPolynomial;           // complete graphs
  if (d == 2 && k == 1) return Complexity::kPolynomial; // exact diameter-three algorithm
  if (d == 3 && k == 2) return Complexity::kNPComplete; // vertex-cover gadget, two cliques
  if (d == 4 && k == 1) return Complexity::kNPComplete; // vertex-cover gadget, four cliques
  if (d >= 5 && k <= d - 1) return Complexity::kNPComplete;
  return Complexity::kOpen;
}

const char* short_label(Complexity c) {
  switch (c) {
    case Complexity::kPolynomial: return "P";
    case Complexity::kNPComplete: return "NP-c";
    case Complexity::kOpen: return "?";
  }
  return "?";
}

const char* long_label(Complexity c) {
  switch (c) {
    case Complexity::kPolynomial: return "polynomial";
    case Complexity::kNPComplete: return "NP-complete";
    case Complexity::kOpen: return "open";
  }
  return "open";
}

std::string render_complexity_table(int max_diameter, int max_increase) {
  auto row = [](std::string first, const std::vector<std::string>& cells) {
    std::ostringstream line;
    line << std::left << std::setw(6) << first;
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) line << std::setw(6) << cells[i];
    if (!cells.empty()) line << cells.back();
    return line.str() + "\n";
  };
  std::vector<std::string> header;
  for (int k = 1; k <= max_increase; ++k) header.push_back(std::to_string(k));
  std::string out = row("d\\k", header);
  for (int d = 1; d <= max_diameter; ++d) {
    std::vector<std::string> cells;
    for (int k = 1; k <= max_increase; ++k) cells.push_back(short_label(meda_complexity(d, k)));
    out += row(std::to_string(d), cells);
  }
  return out;
}

}  // namespace diamaug
