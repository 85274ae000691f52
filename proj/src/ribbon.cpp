// Ribbon-category operations: parabolic head extraction, morphism
// validation, atoms, the Garside map and annotated normal forms.
#include "garside/ribbon.hpp"

#include <algorithm>
#include <map>

namespace garside {
namespace ribbon {

std::pair<BraidElement, BraidElement> alpha_I(Subset I, const BraidElement& b) {
  const auto& W = *b.sys;
  GroupElement wI = W.longest_element(I);
  BraidElement alpha = braid::identity(W);
  BraidElement omega = b;
  while (!omega.factors.empty()) {
    // Maximal prefix of the head lying in W_I.
    GroupElement t = braid::w_meet(braid::head(omega), wI);
    if (W.is_identity(t)) break;
    alpha = braid::product(alpha, braid::lift(t));
    omega = braid::quotient(braid::lift(t), omega, true);
  }
  return {alpha, omega};
}

RibbonMorphism make_morphism(Subset I, const BraidElement& b) {
  const auto& W = *b.sys;
  auto [alpha, omega] = alpha_I(I, b);
  if (!braid::is_identity(alpha)) throw NotIReduced();
  GroupElement x = braid::image(b);
  Subset J = 0;
  for (int s : subset_to_list(I)) {
    // s^x must be a generator t, certified at braid level: s * b = b * t.
    auto sub = W.conjugate_subset(x, 0, 1u << s);
    if (!sub) throw ConjugatesOutOfS();
    int t = subset_to_list(*sub)[0];
    if (braid::product(braid::lift(W.generator(s)), b) !=
        braid::product(b, braid::lift(W.generator(t))))
      throw ConjugatesOutOfS();
    J |= 1u << t;
  }
  RibbonMorphism m;
  m.source = I;
  m.braid = b;
  m.target = J;
  return m;
}

RibbonMorphism identity_morphism(const CoxeterSystem& sys, Subset I) {
  RibbonMorphism m;
  m.source = I;
  m.braid = braid::identity(sys);
  m.target = I;
  return m;
}

RibbonMorphism compose(const RibbonMorphism& f, const RibbonMorphism& g) {
  if (f.target != g.source)
    throw std::invalid_argument("morphisms are not composable");
  RibbonMorphism m;
  m.source = f.source;
  m.braid = braid::product(f.braid, g.braid);
  m.target = g.target;
  return m;
}

std::vector<RibbonMorphism> atoms_from(const CoxeterSystem& sys, Subset I) {
  std::vector<RibbonMorphism> atoms;
  for (int s = 0; s < sys.rank(); ++s) {
    if (I >> s & 1u) continue;
    // Connected component of s in I ∪ {s} along non-commuting bonds.
    Subset K = 1u << s;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int a : subset_to_list(K))
        for (int b : subset_to_list(I & ~K))
          if (sys.coxeter_m(a, b) > 2) {
            K |= 1u << b;
            grew = true;
          }
    }
    Subset Kminus = K & ~(1u << s);
    // v = w_{K\{s}}^-1 w_K as a positive quotient: a single simple factor.
    GroupElement v = sys.mul(sys.longest_element(Kminus),
                             sys.longest_element(K));
    atoms.push_back(make_morphism(I, braid::lift(v)));
  }
  // Drop any atom strictly divisible by another (a safeguard; for these
  // monoids the produced morphisms are already minimal).
  std::vector<RibbonMorphism> out;
  for (const auto& a : atoms) {
    bool minimal = true;
    for (const auto& b : atoms)
      if (b.braid != a.braid && braid::divides(b.braid, a.braid, true))
        minimal = false;
    if (minimal) out.push_back(a);
  }
  return out;
}

RibbonMorphism garside_map(const CoxeterSystem& sys, Subset I) {
  BraidElement b = braid::quotient(braid::lift(sys.longest_element(I)),
                                   braid::delta(sys), true);
  return make_morphism(I, b);
}

std::vector<ChainLink> category_normal_form(const RibbonMorphism& m) {
  const auto& W = *m.braid.sys;
  std::vector<ChainLink> chain;
  Subset cur = m.source;
  for (const auto& f : m.braid.factors) {
    ChainLink link;
    link.source = cur;
    link.factor = f;
    auto sub = W.conjugate_subset(f, 0, cur);
    if (!sub) throw ConjugatesOutOfS();
    link.target = *sub;
    // Each factor is itself reduced at its source.
    if (!W.is_identity(braid::w_meet(f, W.longest_element(cur))))
      throw NotIReduced();
    cur = *sub;
    chain.push_back(link);
  }
  if (cur != m.target) throw std::logic_error("chain target mismatch");
  return chain;
}

bool parabolic_split_check(Subset I, const BraidElement& v,
                           const RibbonMorphism& wm) {
  const auto& W = *v.sys;
  if (wm.source != I) return false;
  BraidElement vw = braid::product(v, wm.braid);
  // Head multiplicativity: alpha(v w) = alpha(v) alpha(w).
  GroupElement av = v.factors.empty() ? W.identity() : braid::head(v);
  GroupElement aw =
      wm.braid.factors.empty() ? W.identity() : braid::head(wm.braid);
  GroupElement avw =
      vw.factors.empty() ? W.identity() : braid::head(vw);
  if (avw != W.mul(av, aw)) return false;
  // Factor-wise quotients recover the normal form of v, conjugated along w.
  std::size_t k = vw.factors.size();
  std::vector<GroupElement> wfac = wm.braid.factors;
  while (wfac.size() < k) wfac.push_back(W.identity());
  if (wfac.size() > k) {
    // v*w shorter than w cannot happen for v positive.
    return braid::is_identity(v) && vw == wm.braid;
  }
  std::vector<GroupElement> vparts;
  for (std::size_t i = 0; i < k; ++i) {
    GroupElement vi = W.mul(vw.factors[i], W.inv(wfac[i]));
    if (W.length(vi) + W.length(wfac[i]) != W.length(vw.factors[i]))
      return false;
    vparts.push_back(vi);
  }
  GroupElement x = W.identity();
  std::vector<GroupElement> conj;
  for (std::size_t i = 0; i < k; ++i) {
    conj.push_back(W.mul(x, W.mul(vparts[i], W.inv(x))));
    x = W.mul(x, wfac[i]);
  }
  std::vector<GroupElement> vfac = v.factors;
  while (vfac.size() < k) vfac.push_back(W.identity());
  return conj == vfac;
}

const std::vector<Subset>& orbit(const CoxeterSystem& sys, Subset I) {
  static std::mutex mu;
  static std::map<std::pair<const CoxeterSystem*, Subset>,
                  std::vector<Subset>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(&sys, I);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Subset> frontier{I}, all{I};
  while (!frontier.empty()) {
    Subset J = frontier.back();
    frontier.pop_back();
    for (const auto& a : atoms_from(sys, J)) {
      if (std::find(all.begin(), all.end(), a.target) == all.end()) {
        all.push_back(a.target);
        frontier.push_back(a.target);
      }
    }
  }
  std::sort(all.begin(), all.end());
  return cache.emplace(key, std::move(all)).first->second;
}

}  // namespace ribbon
}  // namespace garside
