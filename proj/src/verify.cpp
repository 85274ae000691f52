// Rewrite-closure normal-form oracle, factorization posets and order-complex
// homology evidence.
#include "garside/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace garside {
namespace verify {

namespace {

// All positive words obtainable from `word` by braid relations (the length
// is invariant, so the closure is finite).
std::set<std::vector<int>> relation_closure(const CoxeterSystem& sys,
                                            const std::vector<int>& word) {
  std::set<std::vector<int>> seen{word};
  std::vector<std::vector<int>> frontier{word};
  while (!frontier.empty()) {
    std::vector<int> w = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (int t = 0; t < sys.rank(); ++t) {
        int s = w[i];
        if (t == s) continue;
        int m = sys.coxeter_m(s, t);
        if (i + m > w.size()) continue;
        bool match = true;
        for (int j = 0; j < m; ++j)
          if (w[i + j] != (j % 2 ? t : s)) {
            match = false;
            break;
          }
        if (!match) continue;
        std::vector<int> w2 = w;
        for (int j = 0; j < m; ++j) w2[i + j] = (j % 2 ? s : t);
        if (seen.insert(w2).second) frontier.push_back(w2);
      }
    }
  }
  return seen;
}

// Longest reduced prefix of a word, as (letter count, group element).
std::pair<std::size_t, GroupElement> reduced_prefix(
    const CoxeterSystem& sys, const std::vector<int>& w) {
  GroupElement u = sys.identity();
  std::size_t k = 0;
  for (int s : w) {
    GroupElement us = sys.mul(u, sys.generator(s));
    if (sys.length(us) != sys.length(u) + 1) break;
    u = us;
    ++k;
  }
  return {k, u};
}

}  // namespace

BraidElement oracle_normal_form(const CoxeterSystem& sys,
                                const std::vector<int>& word,
                                std::size_t bound) {
  if (word.size() > bound)
    throw std::invalid_argument("oracle word length exceeds the bound");
  BraidElement out;
  out.sys = &sys;
  std::vector<int> rest = word;
  while (!rest.empty()) {
    auto words = relation_closure(sys, rest);
    // The maximal simple left divisor is the longest reduced prefix over
    // every equivalent word; all maximizers give the same group element.
    std::size_t best = 0;
    GroupElement h = sys.identity();
    const std::vector<int>* carrier = nullptr;
    for (const auto& w : words) {
      auto [k, u] = reduced_prefix(sys, w);
      if (k > best) {
        best = k;
        h = u;
        carrier = &w;
      } else if (k == best && carrier && u != h) {
        throw std::logic_error("ambiguous maximal prefix");
      }
    }
    out.factors.push_back(h);
    rest.assign(carrier->begin() + best, carrier->end());
  }
  return out;
}

DecompositionPoset decomposition_poset(const BraidElement& g, int bound) {
  const auto& sys = *g.sys;
  if (braid::letter_length(g) > bound)
    throw std::invalid_argument("atom length exceeds the bound");
  DecompositionPoset out;
  out.sys = &sys;
  out.g = g;
  // Nonidentity simple left divisors of a braid = nonidentity prefixes of
  // its head; enumerate factorizations by choosing one and recursing.
  std::set<std::vector<GroupElement>> found;
  std::vector<GroupElement> stack;
  auto prefixes = [&](const GroupElement& h) {
    std::set<GroupElement> seen{sys.identity()};
    std::vector<GroupElement> frontier{sys.identity()};
    while (!frontier.empty()) {
      GroupElement u = frontier.back();
      frontier.pop_back();
      GroupElement rem = sys.mul(sys.inv(u), h);
      for (int s = 0; s < sys.rank(); ++s) {
        GroupElement rem2 = sys.mul(sys.generator(s), rem);
        if (sys.length(rem2) != sys.length(rem) - 1) continue;
        GroupElement us = sys.mul(u, sys.generator(s));
        if (seen.insert(us).second) frontier.push_back(us);
      }
    }
    seen.erase(sys.identity());
    return seen;
  };
  std::function<void(const BraidElement&)> rec = [&](const BraidElement& r) {
    if (braid::is_identity(r)) {
      found.insert(stack);
      return;
    }
    for (const auto& u : prefixes(braid::head(r))) {
      stack.push_back(u);
      rec(braid::quotient(braid::lift(u), r, true));
      stack.pop_back();
    }
  };
  rec(g);
  out.elements.assign(found.begin(), found.end());
  std::map<std::vector<GroupElement>, int> index;
  for (std::size_t i = 0; i < out.elements.size(); ++i)
    index[out.elements[i]] = static_cast<int>(i);
  // Cover relations: split one factor into a length-additive pair.
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    const auto& f = out.elements[i];
    for (std::size_t j = 0; j < f.size(); ++j) {
      for (const auto& a : prefixes(f[j])) {
        GroupElement b = sys.mul(sys.inv(a), f[j]);
        if (sys.is_identity(b)) continue;
        if (sys.length(a) + sys.length(b) != sys.length(f[j])) continue;
        std::vector<GroupElement> split;
        split.reserve(f.size() + 1);
        split.insert(split.end(), f.begin(), f.begin() + j);
        split.push_back(a);
        split.push_back(b);
        split.insert(split.end(), f.begin() + j + 1, f.end());
        auto it = index.find(split);
        if (it == index.end())
          throw std::logic_error("split factorization missing from poset");
        out.covers.emplace_back(static_cast<int>(i), it->second);
      }
    }
  }
  std::sort(out.covers.begin(), out.covers.end());
  out.covers.erase(std::unique(out.covers.begin(), out.covers.end()),
                   out.covers.end());
  return out;
}

namespace {

constexpr long long kPrime = (1LL << 31) - 1;

long long mod_inv(long long a) {
  long long r = 1, e = kPrime - 2, b = a % kPrime;
  while (e) {
    if (e & 1) r = r * b % kPrime;
    b = b * b % kPrime;
    e >>= 1;
  }
  return r;
}

// Rank of a dense matrix over F_p (rows of equal width).
long long mod_rank(std::vector<std::vector<long long>> rows) {
  long long rank = 0;
  std::size_t col = 0, width = rows.empty() ? 0 : rows[0].size();
  for (; col < width && static_cast<std::size_t>(rank) < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] % kPrime == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    long long inv = mod_inv((rows[rank][col] % kPrime + kPrime) % kPrime);
    for (std::size_t c = col; c < width; ++c)
      rows[rank][c] = (rows[rank][c] % kPrime + kPrime) * inv % kPrime;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank)) continue;
      long long f = (rows[r][col] % kPrime + kPrime) % kPrime;
      if (!f) continue;
      for (std::size_t c = col; c < width; ++c)
        rows[r][c] = ((rows[r][c] - f * rows[rank][c]) % kPrime + kPrime) %
                     kPrime;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TopologyEvidence check_simply_connected_evidence(const DecompositionPoset& p) {
  const int n = static_cast<int>(p.elements.size());
  TopologyEvidence out;
  // Reachability along covers gives the full comparability relation (the
  // poset is graded by factor count, so covers generate it).
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  std::vector<std::vector<int>> succ(n);
  for (auto [a, b] : p.covers) succ[a].push_back(b);
  for (int i = 0; i < n; ++i) {
    std::vector<int> frontier{i};
    while (!frontier.empty()) {
      int x = frontier.back();
      frontier.pop_back();
      for (int y : succ[x])
        if (!reach[i][y]) {
          reach[i][y] = 1;
          frontier.push_back(y);
        }
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (reach[i][j]) edges.emplace_back(i, j);
  // Connectivity of the undirected comparability graph.
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    comp[i] = ncomp;
    std::vector<int> frontier{i};
    while (!frontier.empty()) {
      int x = frontier.back();
      frontier.pop_back();
      for (auto [a, b] : edges) {
        int other = a == x ? b : (b == x ? a : -1);
        if (other >= 0 && comp[other] < 0) {
          comp[other] = ncomp;
          frontier.push_back(other);
        }
      }
    }
    ++ncomp;
  }
  out.connected = n == 0 || ncomp == 1;
  // h1 = dim ker d1 - rank d2 for the 2-skeleton of the order complex.
  std::map<std::pair<int, int>, int> eindex;
  for (std::size_t e = 0; e < edges.size(); ++e)
    eindex[edges[e]] = static_cast<int>(e);
  std::vector<std::vector<long long>> d1(
      edges.size(), std::vector<long long>(n, 0));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    d1[e][edges[e].first] -= 1;
    d1[e][edges[e].second] += 1;
  }
  std::vector<std::vector<long long>> d2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!reach[i][j]) continue;
      for (int k = 0; k < n; ++k) {
        if (!reach[j][k]) continue;
        std::vector<long long> row(edges.size(), 0);
        row[eindex[{j, k}]] += 1;
        row[eindex[{i, k}]] -= 1;
        row[eindex[{i, j}]] += 1;
        d2.push_back(std::move(row));
      }
    }
  long long r1 = edges.empty() ? 0 : mod_rank(d1);
  long long r2 = d2.empty() ? 0 : mod_rank(d2);
  out.h1_rank = static_cast<long long>(edges.size()) - r1 - r2;
  return out;
}

}  // namespace verify
}  // namespace garside
