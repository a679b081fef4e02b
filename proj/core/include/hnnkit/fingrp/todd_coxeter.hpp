#pragma once

#include <cstddef>

#include "hnnkit/fingrp/finite_group.hpp"
#include "hnnkit/presentations/presentation.hpp"

namespace hnnkit::fingrp {

struct CosetOptions {
  /// Hard limit on simultaneously stored cosets.
  std::size_t max_cosets = 10000;
};

struct CosetStats {
  std::size_t defined = 0;      ///< cosets ever created
  std::size_t peak = 0;         ///< largest live table
  std::size_t lookaheads = 0;
  std::size_t index = 0;
};

/// Enumerates cosets of the trivial subgroup and returns the group with its
/// regular multiplication table. Elements are numbered in breadth-first
/// order of the standardized coset table, so the result is deterministic.
/// Throws BudgetExceeded when the coset limit is hit.
FiniteGroup from_presentation(const pres::Presentation& p, CosetOptions options = {}, CosetStats* stats = nullptr);

}  // namespace hnnkit::fingrp
