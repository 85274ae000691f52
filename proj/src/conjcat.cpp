// Cyclic conjugacy machinery: conjugation steps, component BFS with
// deterministic ordering, endomorphism monoids and DOT export.
#include "garside/conjcat.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace garside {
namespace conjcat {

GroupElement apply_auto(const Automorphism& A, const GroupElement& w) {
  const auto& W = *w.sys;
  GroupElement r = W.apply_automorphism(A.phi, w);
  if (A.delta % 2) {
    GroupElement w0 = W.longest_element((1u << W.rank()) - 1);
    r = W.mul(w0, W.mul(r, w0));
  }
  return r;
}

BraidElement apply_auto(const Automorphism& A, const BraidElement& b) {
  BraidElement r;
  r.sys = b.sys;
  r.factors.reserve(b.factors.size());
  // Both phi and conjugation by Delta preserve simples and normality.
  for (const auto& f : b.factors) r.factors.push_back(apply_auto(A, f));
  return r;
}

Subset apply_auto_subset(const CoxeterSystem& sys, const Automorphism& A,
                         Subset I) {
  Subset J = sys.phi_on_subset(A.phi, I);
  if (A.delta % 2) {
    GroupElement w0 = sys.longest_element((1u << sys.rank()) - 1);
    auto K = sys.conjugate_subset(w0, 0, J);
    if (!K) throw std::logic_error("w0 conjugation left S");
    J = *K;
  }
  return J;
}

Automorphism compose_auto(const CoxeterSystem& sys, const Automorphism& A,
                          const Automorphism& B) {
  Automorphism C;
  C.delta = (A.delta + B.delta) % 2;
  C.phi = (A.phi + B.phi) % sys.twist_order();
  return C;
}

ConjObject make_object(Subset source, const BraidElement& braid,
                       const Automorphism& twist) {
  const auto& W = *braid.sys;
  auto m = ribbon::make_morphism(source, braid);
  if (m.target != apply_auto_subset(W, twist, source))
    throw ConjugatesOutOfS();
  ConjObject o;
  o.source = source;
  o.braid = braid;
  o.twist = twist;
  return o;
}

ConjObject cyc_step(const ConjObject& obj, const BraidElement& v) {
  const auto& W = *obj.braid.sys;
  BraidElement rest = braid::quotient(v, obj.braid, true);
  BraidElement nb = braid::product(rest, apply_auto(obj.twist, v));
  auto J = W.conjugate_subset(braid::image(v), 0, obj.source);
  if (!J) throw ConjugatesOutOfS();
  ConjObject o;
  o.source = *J;
  o.braid = nb;
  o.twist = obj.twist;
  return o;
}

std::vector<GroupElement> simple_conjugators(const ConjObject& obj) {
  const auto& W = *obj.braid.sys;
  std::vector<GroupElement> out;
  if (obj.braid.factors.empty()) return out;
  GroupElement h = braid::head(obj.braid);
  // All nonidentity prefixes of the head, by BFS along ascending covers.
  std::vector<GroupElement> frontier{W.identity()};
  std::set<GroupElement> seen{W.identity()};
  while (!frontier.empty()) {
    GroupElement u = frontier.back();
    frontier.pop_back();
    GroupElement tailpart = W.mul(W.inv(u), h);
    for (int s = 0; s < W.rank(); ++s) {
      // u*s is still a prefix of h iff s is a left descent of u^-1 h.
      GroupElement rem = W.mul(W.inv(W.generator(s)), tailpart);
      if (W.length(rem) != W.length(tailpart) - 1) continue;
      GroupElement us = W.mul(u, W.generator(s));
      if (seen.insert(us).second) frontier.push_back(us);
    }
  }
  for (const auto& u : seen) {
    if (W.is_identity(u)) continue;
    if (obj.source != 0 && !W.conjugate_subset(u, 0, obj.source)) continue;
    out.push_back(u);
  }
  std::sort(out.begin(), out.end(),
            [&](const GroupElement& a, const GroupElement& b) {
              auto wa = W.canonical_word(a), wb = W.canonical_word(b);
              if (wa.size() != wb.size()) return wa.size() < wb.size();
              return wa < wb;
            });
  return out;
}

CategoryGraph explore_component(const ConjObject& start,
                                std::optional<Automorphism> fixed_under,
                                std::size_t max_nodes) {
  CategoryGraph g;
  g.constraint = fixed_under;
  std::map<ConjObject, int> index;
  std::queue<int> frontier;
  g.nodes.push_back(start);
  index[start] = 0;
  frontier.push(0);
  while (!frontier.empty()) {
    int i = frontier.front();
    frontier.pop();
    ConjObject cur = g.nodes[i];  // copy: nodes may reallocate
    for (const auto& v : simple_conjugators(cur)) {
      if (fixed_under && apply_auto(*fixed_under, v) != v) continue;
      ConjObject next = cyc_step(cur, braid::lift(v));
      auto it = index.find(next);
      int j;
      if (it == index.end()) {
        if (g.nodes.size() >= max_nodes) {
          g.complete = false;
          continue;
        }
        j = static_cast<int>(g.nodes.size());
        g.nodes.push_back(next);
        index[next] = j;
        frontier.push(j);
      } else {
        j = it->second;
      }
      CategoryGraph::Edge e;
      e.from = i;
      e.to = j;
      e.conjugator = braid::lift(v);
      e.simple = true;
      g.edges.push_back(e);
    }
  }
  return g;
}

std::vector<BraidElement> endo_elements(const ConjObject& obj,
                                        int length_bound) {
  const auto& W = *obj.braid.sys;
  // BFS over (object, accumulated conjugator); an accumulated conjugator is
  // a left divisor of any extension, so pruning on its length is safe.
  std::map<std::pair<ConjObject, BraidElement>, bool> seen;
  std::queue<std::pair<ConjObject, BraidElement>> frontier;
  auto startkey = std::make_pair(obj, braid::identity(W));
  seen[startkey] = true;
  frontier.push(startkey);
  std::set<BraidElement> loops;
  loops.insert(braid::identity(W));
  while (!frontier.empty()) {
    auto [cur, acc] = frontier.front();
    frontier.pop();
    for (const auto& v : simple_conjugators(cur)) {
      BraidElement acc2 = braid::product(acc, braid::lift(v));
      if (braid::canonical_length(acc2) > length_bound) continue;
      ConjObject next = cyc_step(cur, braid::lift(v));
      auto key = std::make_pair(next, acc2);
      if (seen.emplace(key, true).second) {
        if (next == obj) loops.insert(acc2);
        frontier.push(key);
      }
    }
  }
  return {loops.begin(), loops.end()};
}

std::vector<BraidElement> endo_generators(const ConjObject& obj,
                                          int length_bound) {
  auto elements = endo_elements(obj, length_bound);
  std::set<BraidElement> all(elements.begin(), elements.end());
  std::vector<BraidElement> gens;
  for (const auto& e : elements) {
    if (braid::is_identity(e)) continue;
    bool decomposable = false;
    for (const auto& e1 : elements) {
      if (braid::is_identity(e1) || e1 == e) continue;
      if (!braid::divides(e1, e, true)) continue;
      if (all.count(braid::quotient(e1, e, true))) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) gens.push_back(e);
  }
  return gens;
}

BraidElement gcd_in_cyc(const BraidElement& x, const BraidElement& y) {
  return braid::left_gcd(x, y);
}

std::string flat_word(const BraidElement& b) {
  std::string out;
  for (const auto& f : b.factors)
    out += b.sys->word_string(b.sys->canonical_word(f));
  return out.empty() ? "." : out;
}

std::string to_dot(const CategoryGraph& g) {
  std::ostringstream os;
  os << "digraph conjugacy {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    os << "  n" << i << " [label=\"";
    if (g.nodes[i].source != 0)
      os << subset_to_string(g.nodes[i].source) << ":";
    os << flat_word(g.nodes[i].braid) << "\"];\n";
  }
  for (const auto& e : g.edges)
    os << "  n" << e.from << " -> n" << e.to << " [label=\""
       << flat_word(e.conjugator) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace conjcat
}  // namespace garside
