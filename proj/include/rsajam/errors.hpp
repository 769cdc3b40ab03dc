#pragma once

#include <stdexcept>
#include <string>

namespace rsajam {

// A root-finding bracket with no sign change.
struct bracket_error : std::runtime_error {
  explicit bracket_error(const std::string& what) : std::runtime_error(what) {}
};

// A coupled run whose consumed edge randomness disagrees with the graph it
// was handed; carries the first offending vertex.
struct coupling_error : std::runtime_error {
  coupling_error(const std::string& what, std::int64_t vertex)
      : std::runtime_error(what), vertex(vertex) {}
  std::int64_t vertex;
};

}  // namespace rsajam
