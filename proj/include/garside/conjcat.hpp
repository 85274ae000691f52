// Conjugacy and cyclic-conjugacy categories over the braid monoid and its
// ribbon category: stepwise conjugation, component exploration under
// automorphism constraints, endomorphism generators and graph export.
#pragma once

#include <optional>

#include "garside/ribbon.hpp"

namespace garside {
namespace conjcat {

// An automorphism x -> Delta^-d (phi^p x phi^-p) Delta^d of the braid monoid;
// conjugation by Delta acts on simple factors as group conjugation by w0.
struct Automorphism {
  int delta = 0;  // modulo 2 (Delta^2 is central)
  int phi = 0;    // modulo the twist order
  bool operator==(const Automorphism& o) const {
    return delta == o.delta && phi == o.phi;
  }
};

GroupElement apply_auto(const Automorphism& A, const GroupElement& w);
BraidElement apply_auto(const Automorphism& A, const BraidElement& b);
Subset apply_auto_subset(const CoxeterSystem& sys, const Automorphism& A,
                         Subset I);
Automorphism compose_auto(const CoxeterSystem& sys, const Automorphism& A,
                          const Automorphism& B);

// An object of the conjugacy category: the morphism I --w--> A(I), acted on
// by conjugators x via w -> x^-1 w A(x). A plain braid is the case I = empty.
struct ConjObject {
  Subset source = 0;
  BraidElement braid;
  Automorphism twist;
  bool operator==(const ConjObject& o) const {
    return source == o.source && braid == o.braid;
  }
  bool operator<(const ConjObject& o) const {
    return source != o.source ? source < o.source : braid < o.braid;
  }
};

// Validates that braid is reduced at source and conjugates source onto
// A(source); throws like make_morphism on failure.
ConjObject make_object(Subset source, const BraidElement& braid,
                       const Automorphism& twist);

// Conjugation by a left divisor: new braid = quotient(w, v) * A(v), new
// source = source^v. Throws NotADivisor if v does not left-divide w.
ConjObject cyc_step(const ConjObject& obj, const BraidElement& v);

// The nonidentity simple left divisors v of the object's braid whose
// conjugate of the source is again a subset of S, in canonical word order.
std::vector<GroupElement> simple_conjugators(const ConjObject& obj);

struct CategoryGraph {
  struct Edge {
    int from = 0, to = 0;
    BraidElement conjugator;
    bool simple = true;
  };
  std::vector<ConjObject> nodes;  // discovery (BFS) order
  std::vector<Edge> edges;
  std::optional<Automorphism> constraint;
  bool complete = true;
};

// BFS closure of the start object under simple cyclic conjugations; when
// fixed_under is given only conjugators fixed by that automorphism are used.
CategoryGraph explore_component(const ConjObject& start,
                                std::optional<Automorphism> fixed_under,
                                std::size_t max_nodes = 1000000);

// All endomorphism conjugators at obj (loops of the cyclic category) of
// canonical length at most the bound, identity included; sorted.
std::vector<BraidElement> endo_elements(const ConjObject& obj,
                                        int length_bound);
// The indecomposable ones.
std::vector<BraidElement> endo_generators(const ConjObject& obj,
                                          int length_bound);

// Left gcd of two conjugators from the same object (closed in cyc).
BraidElement gcd_in_cyc(const BraidElement& x, const BraidElement& y);

// Flat letter word of a braid, e.g. "123423" (factors concatenated).
std::string flat_word(const BraidElement& b);

std::string to_dot(const CategoryGraph& g);

}  // namespace conjcat
}  // namespace garside
