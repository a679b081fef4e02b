#include "hnnkit/abelian_invariants.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hnnkit/error.hpp"

namespace hnnkit {

namespace {

std::map<Integer, std::vector<Integer>> prime_power_parts(const std::vector<Integer>& orders) {
  // prime -> list of prime powers appearing as cyclic factors
  std::map<Integer, std::vector<Integer>> parts;
  for (Integer n : orders) {
    if (n < 0) n = -n;
    if (n <= 1) continue;
    for (Integer p = 2; p * p <= n; ++p) {
      if (n % p != 0) continue;
      Integer q = 1;
      while (n % p == 0) {
        n /= p;
        q *= p;
      }
      parts[p].push_back(q);
    }
    if (n > 1) parts[n].push_back(n);
  }
  return parts;
}

}  // namespace

AbelianInvariants AbelianInvariants::from_diagonal(const std::vector<Integer>& entries, std::size_t extra_free) {
  AbelianInvariants inv;
  inv.free_rank = extra_free;
  std::vector<Integer> finite;
  for (const auto& e : entries) {
    if (e == 0)
      ++inv.free_rank;
    else
      finite.push_back(e);
  }
  auto parts = prime_power_parts(finite);
  std::size_t count = 0;
  for (auto& [p, powers] : parts) {
    std::sort(powers.begin(), powers.end(), std::greater<>());
    count = std::max(count, powers.size());
  }
  // The largest invariant factor collects the largest prime power of every prime.
  std::vector<Integer> divisors(count, 1);
  for (const auto& [p, powers] : parts)
    for (std::size_t i = 0; i < powers.size(); ++i) divisors[count - 1 - i] *= powers[i];
  inv.divisors = std::move(divisors);
  return inv;
}

Integer AbelianInvariants::torsion_order() const {
  Integer n = 1;
  for (const auto& d : divisors) n *= d;
  return n;
}

std::string AbelianInvariants::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  if (free_rank == 1) {
    sep();
    os << "Z";
  } else if (free_rank > 1) {
    sep();
    os << "Z^" << free_rank;
  }
  for (const auto& d : divisors) {
    sep();
    os << "Z/" << d;
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const AbelianInvariants& inv) { return os << inv.to_string(); }

AbelianInvariants parse_abelian_invariants(const std::string& text) {
  std::vector<Integer> diag;
  std::size_t free = 0;
  std::string token;
  std::istringstream is(text);
  std::string all, part;
  while (std::getline(is, part, '+')) {
    std::string t;
    for (char c : part)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw ParseError("empty summand in abelian group '" + text + "'", 0, 0);
    if (t == "0") continue;
    if (t == "Z") {
      ++free;
    } else if (t.rfind("Z^", 0) == 0) {
      free += std::stoul(t.substr(2));
    } else if (t.rfind("Z/", 0) == 0) {
      diag.emplace_back(t.substr(2));
    } else {
      throw ParseError("unrecognised summand '" + t + "' in abelian group '" + text + "'", 0, 0);
    }
  }
  return AbelianInvariants::from_diagonal(diag, free);
}

}  // namespace hnnkit
