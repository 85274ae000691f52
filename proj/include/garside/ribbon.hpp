// The ribbon category of a finite Coxeter system: objects are subsets of S
// in one conjugacy orbit, morphisms are I-reduced positive braids that
// conjugate I into S; parabolic head/tail, atoms, the Garside map and
// category-level normal forms.
#pragma once

#include "garside/braid.hpp"

namespace garside {

struct RibbonMorphism {
  Subset source = 0;
  BraidElement braid;
  Subset target = 0;
  // Equality on (source, braid); the target is derived.
  bool operator==(const RibbonMorphism& o) const {
    return source == o.source && braid == o.braid;
  }
  bool operator!=(const RibbonMorphism& o) const { return !(*this == o); }
  bool operator<(const RibbonMorphism& o) const {
    return source != o.source ? source < o.source : braid < o.braid;
  }
};

struct NotIReduced : std::runtime_error {
  NotIReduced() : std::runtime_error("braid has a left divisor in the parabolic") {}
};
struct ConjugatesOutOfS : std::runtime_error {
  ConjugatesOutOfS()
      : std::runtime_error("braid does not conjugate the subset into S") {}
};

namespace ribbon {

// b = alpha * omega with alpha the maximal left divisor of b lying in the
// parabolic submonoid on I; returns (alpha, omega).
std::pair<BraidElement, BraidElement> alpha_I(Subset I, const BraidElement& b);

// Validated morphism with computed target; throws NotIReduced or
// ConjugatesOutOfS.
RibbonMorphism make_morphism(Subset I, const BraidElement& b);

RibbonMorphism identity_morphism(const CoxeterSystem& sys, Subset I);
RibbonMorphism compose(const RibbonMorphism& f, const RibbonMorphism& g);

// The atoms of the category with source I, one for each s outside I whose
// braid is the positive quotient of the longest lifts over the connected
// component of s in I ∪ {s}; sorted by s.
std::vector<RibbonMorphism> atoms_from(const CoxeterSystem& sys, Subset I);

// The Garside map at I: braid (lift w_I)^-1 (lift w_0), target I^{w0}.
RibbonMorphism garside_map(const CoxeterSystem& sys, Subset I);

// One normal-form factor with its source and target objects.
struct ChainLink {
  Subset source = 0;
  GroupElement factor;
  Subset target = 0;
};

// The braid's greedy normal form annotated with the object at each stage;
// every factor is itself a simple morphism (reduced at its source).
std::vector<ChainLink> category_normal_form(const RibbonMorphism& m);

// For v in the parabolic braid monoid on I and w a morphism sourced at I:
// checks head multiplicativity of the product v*w and that the factor-wise
// quotients of its normal form against that of w recover the (conjugated)
// normal form of v.
bool parabolic_split_check(Subset I, const BraidElement& v,
                           const RibbonMorphism& w);

// The objects reachable from I by atoms (the conjugacy orbit of I among
// subsets of S), sorted; memoized per (system, I).
const std::vector<Subset>& orbit(const CoxeterSystem& sys, Subset I);

}  // namespace ribbon
}  // namespace garside
