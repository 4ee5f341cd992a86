#pragma once

// Nerves of finite monoids over Delta^op, invertible nerves of groups and
// groupoids over I-Delta^op, and word-bounded truncations of the (invertible)
// nerves of free groups.
//
// A map theta : [m] -> [k] acts on a k-simplex (g_1|...|g_k) entrywise: entry i
// of the result is the path product from vertex theta(i-1) to vertex theta(i).
// Ascending windows multiply g_{a+1}...g_b; descending windows contribute the
// inverse factors in reversed order; empty windows give identities.

#include <map>
#include <optional>
#include <vector>

#include "segalkit/algebra.hpp"
#include "segalkit/free_words.hpp"
#include "segalkit/presheaves.hpp"

namespace segalkit {

/// Level k = M^k, labels "(a|b|c)", level 0 "()".
DiagramPtr nerve(const FinMonoid& monoid, int truncation);
/// Level k = G^k over I-Delta^op.
DiagramPtr inerve(const FinGroup& group, int truncation);
/// Level 0 = objects ("o0", "o1", ...), level k = composable k-paths of
/// morphism ids, labels "(f|g)".
DiagramPtr inerve(const FinGroupoid& groupoid, int truncation);

struct FreeNerve {
  int generator_count = 1;
  int word_bound = 0;
  DiagramPtr diagram;
  /// entries[j][x] is the word tuple of element x of level j.
  std::vector<std::vector<std::vector<FreeWord>>> entries;

  std::optional<ElementId> find(const std::vector<FreeWord>& tuple) const;
  int total_length(int level, ElementId x) const;

  std::vector<std::map<std::vector<FreeWord>, ElementId>> index;
};

/// Level j = j-tuples of reduced words in n letters with total length <= K,
/// labelled in bar notation. Actions never increase total length; an action
/// that would leave the bound throws BoundError.
FreeNerve nerve_free(int generators, int truncation, int word_bound);
FreeNerve inerve_free(int generators, int truncation, int word_bound);

}  // namespace segalkit
