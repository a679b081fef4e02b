#pragma once

#include <cstddef>
#include <string>

#include "report.hpp"

namespace hnnkit::cli {

struct Options {
  std::string input = "builtin";  ///< a path, or a bundled name
  std::size_t budget = 200000;    ///< cell limit for group homology
  int jobs = 1;
};

Report verify_triangulation(const Options& o);
Report pi1(const Options& o);
Report analyze(const Options& o);
Report census(const Options& o);
Report out(const Options& o);

}  // namespace hnnkit::cli
