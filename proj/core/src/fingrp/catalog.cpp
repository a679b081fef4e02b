#include "hnnkit/fingrp/catalog.hpp"

#include <map>
#include <mutex>

#include "hnnkit/error.hpp"
#include "hnnkit/fingrp/todd_coxeter.hpp"

namespace hnnkit::fingrp {

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (int n = 1; n <= 16; ++n) out.push_back({"Z/" + std::to_string(n), {"Z" + std::to_string(n)}, "< a | a^" + std::to_string(n) + " >"});
    auto add = [&](std::string name, std::vector<std::string> aliases, std::string text) {
      out.push_back({std::move(name), std::move(aliases), std::move(text)});
    };
    add("(Z/2)^2", {"Z2^2", "V4"}, "< a, b | a^2, b^2, [a,b] >");
    add("(Z/3)^2", {"Z3^2"}, "< a, b | a^3, b^3, [a,b] >");
    add("(Z/2)^3", {"Z2^3"}, "< a, b, c | a^2, b^2, c^2, [a,b], [a,c], [b,c] >");
    add("(Z/2)^4", {"Z2^4"}, "< a, b, c, d | a^2, b^2, c^2, d^2, [a,b], [a,c], [a,d], [b,c], [b,d], [c,d] >");
    add("Z/2xZ/4", {"Z2xZ4"}, "< a, b | a^2, b^4, [a,b] >");
    add("Z/2xZ/6", {"Z2xZ6"}, "< a, b | a^2, b^6, [a,b] >");
    add("(Z/2)^2xZ/4", {"Z2^2xZ4"}, "< a, b, c | a^2, b^2, c^4, [a,b], [a,c], [b,c] >");
    add("Z/4xZ/4", {"Z4xZ4"}, "< a, b | a^4, b^4, [a,b] >");
    add("Z/2xZ/8", {"Z2xZ8"}, "< a, b | a^2, b^8, [a,b] >");
    add("S3", {"D6"}, "< a, x | a^3, x^2, x*a*x = a^-1 >");
    add("D8", {}, "< a, x | a^4, x^2, x*a*x = a^-1 >");
    add("D10", {}, "< a, x | a^5, x^2, x*a*x = a^-1 >");
    add("D12", {}, "< a, x | a^6, x^2, x*a*x = a^-1 >");
    add("D14", {}, "< a, x | a^7, x^2, x*a*x = a^-1 >");
    add("D16", {}, "< a, x | a^8, x^2, x*a*x = a^-1 >");
    add("Q(8)", {"Q8"}, "< a, b | a^2 = b^2 = (a*b)^2 >");
    add("Q(16)", {"Q16"}, "< a, b | a^4 = b^2 = (a*b)^2 >");
    add("A4", {}, "< a, b | a^2, b^3, (a*b)^3 >");
    add("Z/3:Z/4", {"Z3:Z4", "Dic3"}, "< a, x | a^3, x^4, x^-1*a*x = a^-1 >");
    add("SD16", {}, "< a, x | a^8, x^2, x*a*x = a^3 >");
    add("M16", {}, "< a, x | a^8, x^2, x*a*x = a^5 >");
    add("Z/4:Z/4", {"Z4:Z4"}, "< a, x | a^4, x^4, x^-1*a*x = a^-1 >");
    add("(Z/2)^2:Z/4", {"Z2^2:Z4"}, "< a, b, x | a^4, b^2, x^2, a*b = b*a, b*x = x*b, a*x*a^-1 = b*x >");
    add("Q8xZ/2", {"Q8xZ2"}, "< a, b, c | a^2 = b^2 = (a*b)^2, c^2, [a,c], [b,c] >");
    add("D8xZ/2", {"D8xZ2"}, "< a, b, x | a^4, b^2, x^2, a*b = b*a, b*x = x*b, x*a*x = a^-1 >");
    add("D8oZ/4", {"D8oZ4", "central product"}, "< a, c, x | a^4, x^2, a^2 = c^2, a*c = c*a, c*x = x*c, x*a*x = a^-1 >");
    add("Z/7:Z/3", {"Z7:Z3"}, "< a, b | a^3, a*b*a^-1 = b^2 >");
    return out;
  }();
  return entries;
}

const CatalogEntry* find_catalog_entry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return &e;
    for (const auto& a : e.aliases)
      if (a == name) return &e;
  }
  return nullptr;
}

GroupPtr catalog_group(std::string_view name) {
  const CatalogEntry* entry = find_catalog_entry(name);
  if (!entry) throw Error("unknown catalog group '" + std::string(name) + "'");
  static std::mutex mutex;
  static std::map<std::string, GroupPtr> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(entry->name);
  if (it != cache.end()) return it->second;
  auto g = std::make_shared<const FiniteGroup>(from_presentation(pres::parse_presentation(entry->presentation)));
  cache.emplace(entry->name, g);
  return g;
}

namespace {

const std::vector<std::pair<std::string, GroupProfile>>& catalog_profiles() {
  static const auto profiles = [] {
    std::vector<std::pair<std::string, GroupProfile>> out;
    for (const auto& e : catalog()) out.emplace_back(e.name, profile(*catalog_group(e.name)));
    return out;
  }();
  return profiles;
}

}  // namespace

std::vector<std::string> profile_matches(const FiniteGroup& g) {
  GroupProfile p = profile(g);
  std::vector<std::string> out;
  for (const auto& [name, q] : catalog_profiles())
    if (p == q) out.push_back(name);
  return out;
}

std::string isomorphism_label(const FiniteGroup& g) {
  auto matches = profile_matches(g);
  if (matches.size() == 1 && g.order() <= 16) return matches.front();
  return "?" + std::to_string(g.order());
}

}  // namespace hnnkit::fingrp
