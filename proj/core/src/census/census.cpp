#include "hnnkit/census/census.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "hnnkit/error.hpp"
#include "hnnkit/fingrp/catalog.hpp"

namespace hnnkit::census {

using fingrp::Element;

std::vector<int> encode(const fingrp::Subgroup& c, const std::vector<Element>& phi) {
  std::vector<int> out;
  out.reserve(1 + 2 * c.elements.size());
  out.push_back(static_cast<int>(c.elements.size()));
  out.insert(out.end(), c.elements.begin(), c.elements.end());
  out.insert(out.end(), phi.begin(), phi.end());
  return out;
}

namespace {

struct Task {
  std::size_t candidate;
  std::vector<Element> phi;  // indexed like the candidate's elements
};

struct Outcome {
  hnn::KnotGroupCertificate cert;
  std::string failure;
};

std::string exclusion_reason(const BaseReport& r) {
  if (!r.hits.empty()) return {};
  if (r.subgroup_candidates == 0) return "no proper subgroup with abelianization " + r.abelianization;
  if (r.phi_budget_failures > 0) return "undecided: homology budget exceeded";
  std::vector<std::string> reasons;
  if (r.phi_h1 == 0) reasons.push_back("no phi with H1(j) - H1(phi) an isomorphism");
  if (r.phi_h2_any == 0) reasons.push_back("H2(j) - H2(phi) is never surjective");
  if (r.phi_normal_any == 0) reasons.push_back("N is a proper subgroup for every phi");
  if (reasons.empty()) return "no phi satisfies all three conditions at once";
  std::string out = reasons[0];
  for (std::size_t i = 1; i < reasons.size(); ++i) out += "; " + reasons[i];
  return out;
}

}  // namespace

BaseReport enumerate_base(const std::string& name, const fingrp::GroupPtr& base, const CensusOptions& options) {
  const auto& b = *base;
  if (b.order() > 16) throw Error("census: base " + name + " has order above 16");
  BaseReport rep;
  rep.base = name;
  rep.order = b.order();
  rep.abelian = fingrp::is_abelian(b);
  const auto ab = fingrp::abelianization(b);
  rep.abelianization = ab.to_string();

  struct Candidate {
    fingrp::Subgroup c;
    fingrp::GroupPtr group;
    std::vector<Element> generators;  // in the base's numbering
    std::optional<hnn::BaseHomology> homology;
    std::string failure;
  };
  std::vector<Candidate> candidates;
  for (const auto& s : fingrp::all_subgroups(b)) {
    if (s.order() == static_cast<std::size_t>(b.order())) continue;
    ++rep.proper_subgroups;
    auto g = std::make_shared<const fingrp::FiniteGroup>(fingrp::subgroup_as_group(b, s));
    if (!options.unfiltered && !(fingrp::abelianization(*g) == ab)) continue;
    Candidate cand{s, g, {}, std::nullopt, {}};
    for (Element x : g->generators()) cand.generators.push_back(s.elements[static_cast<std::size_t>(x)]);
    candidates.push_back(std::move(cand));
  }
  rep.subgroup_candidates = candidates.size();

  std::vector<Task> tasks;
  std::optional<grphom::HomologyGroup> b1, b2;
  std::string base_failure;
  if (!candidates.empty()) {
    try {
      b1 = grphom::homology(b, 1, options.homology);
      b2 = grphom::homology(b, 2, options.homology);
    } catch (const BudgetExceeded& e) {
      base_failure = e.what();
    }
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    auto& cand = candidates[i];
    if (b1 && b2) {
      try {
        cand.homology = hnn::BaseHomology{*b1, *b2, grphom::homology(*cand.group, 1, options.homology),
                                          grphom::homology(*cand.group, 2, options.homology)};
      } catch (const BudgetExceeded& e) {
        cand.failure = e.what();
      }
    } else {
      cand.failure = base_failure;
    }
    for (const auto& phi : fingrp::homomorphisms(cand.group, base, {.injective_only = true}))
      tasks.push_back({i, phi.map});
  }
  rep.phi_total = tasks.size();

  std::vector<Outcome> outcomes(tasks.size());
  auto work = [&](std::size_t k) {
    const auto& task = tasks[k];
    const auto& cand = candidates[task.candidate];
    if (!cand.homology) {
      outcomes[k].failure = cand.failure;
      return;
    }
    std::vector<Element> images;
    for (Element x : cand.group->generators()) images.push_back(task.phi[static_cast<std::size_t>(x)]);
    hnn::HnnData d(base, name, cand.generators, images);
    outcomes[k].cert = hnn::knot_group_certificate(d, *cand.homology);
  };
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1 || tasks.size() < 2) {
    for (std::size_t k = 0; k < tasks.size(); ++k) work(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t k; (k = next.fetch_add(1)) < tasks.size();) {
          try {
            work(k);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }

  for (std::size_t k = 0; k < tasks.size(); ++k) {
    const auto& out = outcomes[k];
    if (!out.failure.empty()) {
      ++rep.phi_budget_failures;
      if (std::find(rep.failures.begin(), rep.failures.end(), out.failure) == rep.failures.end())
        rep.failures.push_back(out.failure);
      continue;
    }
    if (out.cert.h2 == hnn::Verdict::pass) ++rep.phi_h2_any;
    if (out.cert.normal_closure == hnn::Verdict::pass) ++rep.phi_normal_any;
    if (out.cert.h1 != hnn::Verdict::pass) continue;
    ++rep.phi_h1;
    if (out.cert.h2 != hnn::Verdict::pass) continue;
    ++rep.phi_h2;
    if (out.cert.overall != hnn::Verdict::pass) continue;
    const auto& cand = candidates[tasks[k].candidate];
    rep.hits.push_back(CensusHit{name, cand.c, tasks[k].phi, out.cert, encode(cand.c, tasks[k].phi)});
  }
  std::sort(rep.hits.begin(), rep.hits.end(), [](const CensusHit& x, const CensusHit& y) { return x.encoding < y.encoding; });
  rep.classes = canonicalize(base, rep.hits);
  rep.exclusion = exclusion_reason(rep);
  return rep;
}

namespace {

// (C, phi) as sorted (c, phi(c)) pairs.
using Pairs = std::vector<std::pair<Element, Element>>;

Pairs pairs_of(const fingrp::Subgroup& c, const std::vector<Element>& phi) {
  Pairs p;
  for (std::size_t i = 0; i < c.elements.size(); ++i) p.emplace_back(c.elements[i], phi[i]);
  return p;
}

std::vector<int> encode_pairs(Pairs p) {
  std::sort(p.begin(), p.end());
  fingrp::Subgroup c;
  std::vector<Element> phi;
  for (auto [x, y] : p) {
    c.elements.push_back(x);
    phi.push_back(y);
  }
  return encode(c, phi);
}

}  // namespace

std::vector<EquivalenceClass> canonicalize(const fingrp::GroupPtr& base, const std::vector<CensusHit>& hits) {
  std::vector<EquivalenceClass> classes;
  if (hits.empty()) return classes;
  const auto auts = fingrp::automorphisms(base);
  std::vector<fingrp::FiniteHom> inner;
  {
    std::set<std::vector<Element>> seen;
    for (Element g = 0; g < base->order(); ++g) {
      auto c = fingrp::inner_automorphism(base, g);
      if (seen.insert(c.map).second) inner.push_back(std::move(c));
    }
  }

  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < hits.size(); ++i) index.emplace(hits[i].encoding, i);
  std::vector<bool> done(hits.size(), false);

  for (std::size_t start = 0; start < hits.size(); ++start) {
    if (done[start]) continue;
    std::set<std::vector<int>> orbit;
    std::deque<Pairs> queue;
    auto visit = [&](Pairs p) {
      auto e = encode_pairs(p);
      if (orbit.insert(e).second) queue.push_back(std::move(p));
    };
    visit(pairs_of(hits[start].c, hits[start].phi));
    while (!queue.empty()) {
      Pairs p = std::move(queue.front());
      queue.pop_front();
      for (const auto& i : inner) {
        Pairs q = p;
        for (auto& [x, y] : q) y = i(y);
        visit(std::move(q));
      }
      for (const auto& a : auts) {
        Pairs q = p;
        for (auto& [x, y] : q) {
          x = a(x);
          y = a(y);
        }
        visit(std::move(q));
      }
      Pairs q = p;
      for (auto& [x, y] : q) std::swap(x, y);
      visit(std::move(q));
    }
    for (const auto& e : orbit) {
      auto it = index.find(e);
      if (it == index.end()) throw Error("canonicalize: the hit list is not closed under equivalence");
      done[it->second] = true;
    }
    classes.push_back({hits[index.at(*orbit.begin())], orbit.size()});
  }
  std::sort(classes.begin(), classes.end(), [](const EquivalenceClass& x, const EquivalenceClass& y) {
    return x.representative.encoding < y.representative.encoding;
  });
  return classes;
}

CensusReport run_catalog(const CensusOptions& options) {
  CensusReport report;
  for (const auto& entry : fingrp::catalog()) {
    auto g = fingrp::catalog_group(entry.name);
    if (g->order() > 16) continue;
    report.bases.push_back(enumerate_base(entry.name, g, options));
  }
  report.open_questions.push_back("whether some 2-knot group has HNN base D8xZ/2");
  return report;
}

}  // namespace hnnkit::census
