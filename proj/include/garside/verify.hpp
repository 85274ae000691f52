// Independent cross-checks: a rewrite-closure normal-form oracle, the poset
// of factorizations of a braid into nonidentity simples, and connectivity /
// first-homology evidence for its order complex.
#pragma once

#include "garside/braid.hpp"

namespace garside {
namespace verify {

// Normal form computed without the main algorithm: close the positive word
// under the braid relations, then peel maximal reduced prefixes greedily.
// Exhaustive, so the word length is capped.
BraidElement oracle_normal_form(const CoxeterSystem& sys,
                                const std::vector<int>& word,
                                std::size_t bound = 12);

// All factorizations of g into sequences of nonidentity simple factors,
// ordered by refinement: p < q when q arises from p by repeatedly replacing
// one factor with a pair of nonidentity simples multiplying to it.
struct DecompositionPoset {
  const CoxeterSystem* sys = nullptr;
  BraidElement g;
  std::vector<std::vector<GroupElement>> elements;  // sorted, deterministic
  std::vector<std::pair<int, int>> covers;          // (coarser, split-once)
};
DecompositionPoset decomposition_poset(const BraidElement& g, int bound = 12);

// Connectivity of the comparability graph and the rank of the first
// homology of the order complex's 2-skeleton (edges = comparable pairs,
// triangles = 3-chains), via boundary-matrix ranks mod the prime 2^31 - 1.
// A modular rank never exceeds the rational one for integer matrices, so
// h1_rank = 0 certifies vanishing of the rational H1.
struct TopologyEvidence {
  bool connected = false;
  long long h1_rank = 0;
};
TopologyEvidence check_simply_connected_evidence(const DecompositionPoset& p);

}  // namespace verify
}  // namespace garside
