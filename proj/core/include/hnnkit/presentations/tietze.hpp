#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hnnkit/presentations/presentation.hpp"

namespace hnnkit::pres {

enum class MoveKind {
  RemoveRelator,       ///< drop relator `relator` (duplicate or proven consequence)
  AddRelator,          ///< append `word`
  ReplaceRelator,      ///< relator `relator` := `word`, an equivalent relator
  EliminateGenerator,  ///< drop relator `relator`, substitute generator := `word`
};

/// The word c * r^sign * c^-1 for relator r = relators[relator].
struct ConjugateFactor {
  std::size_t relator = 0;
  int sign = 1;
  Word conjugator;
  friend bool operator==(const ConjugateFactor&, const ConjugateFactor&) = default;
};

struct TietzeMove {
  MoveKind kind = MoveKind::RemoveRelator;
  std::size_t relator = 0;
  int generator = -1;
  Word word;
  std::string reason;
  /// For removals of consequences: the removed relator as a product of
  /// conjugates of the relators present before the move.
  std::vector<ConjugateFactor> certificate;
};

/// An isomorphism witness between two presentations.
struct TietzeTrace {
  Presentation start;
  Presentation end;
  std::vector<TietzeMove> moves;
  std::vector<Word> forward;   ///< start generator -> word in end generators
  std::vector<Word> backward;  ///< end generator -> word in start generators
  bool budget_exhausted = false;
};

/// Applies a single move (used by replay and by property tests).
Presentation apply_move(const Presentation& p, const TietzeMove& move);
Presentation replay(const Presentation& start, const std::vector<TietzeMove>& moves);

/// True when replaying reproduces `end`, every consequence certificate
/// multiplies out to its relator, and backward-then-forward images are the
/// identity on end generators after free reduction.
bool trace_is_consistent(const TietzeTrace& trace);

struct SimplifyOptions {
  /// States expanded per consequence search.
  std::size_t consequence_budget = 20000;
  /// Total states across all consequence searches before giving up.
  std::size_t total_budget = 400000;
  bool remove_consequences = true;
};

struct SimplifyResult {
  Presentation presentation;
  TietzeTrace trace;
};

/// Deterministic greedy simplification: duplicate removal, generator
/// elimination through relators containing a generator exactly once,
/// relator shortening by substitution, and removal of relators that a
/// bounded search proves to be consequences of the others.
SimplifyResult tietze_simplify(const Presentation& p, SimplifyOptions options = {});

struct ConsequenceSearch {
  bool proven = false;
  std::size_t states = 0;
  /// When proven: w equals the product of these factors in the free group.
  std::vector<ConjugateFactor> certificate;
};

/// Best-first search for a derivation of `w` from `relators` (rewriting
/// subwords with relator pieces, up to free and cyclic reduction).
ConsequenceSearch prove_consequence(const std::vector<Word>& relators, const Word& w, std::size_t budget,
                                    std::size_t extra_length = 0);

/// Multiplies out the certificate and compares with w in the free group.
bool verify_consequence(const std::vector<Word>& relators, const Word& w, const std::vector<ConjugateFactor>& certificate);

}  // namespace hnnkit::pres
