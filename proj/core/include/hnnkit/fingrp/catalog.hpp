#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hnnkit/fingrp/finite_group.hpp"

namespace hnnkit::fingrp {

struct CatalogEntry {
  std::string name;
  std::vector<std::string> aliases;
  std::string presentation;
};

/// Named presentations of every group of order <= 16 plus Z/7:Z/3.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_catalog_entry(std::string_view name);
/// Enumerated group for a catalog name or alias; cached and shared.
GroupPtr catalog_group(std::string_view name);
/// Catalog names whose profile matches g; a single name identifies g up to
/// isomorphism for |g| <= 16.
std::vector<std::string> profile_matches(const FiniteGroup& g);
/// The unique matching catalog name, or "?" followed by the order.
std::string isomorphism_label(const FiniteGroup& g);

}  // namespace hnnkit::fingrp
