// The positive braid monoid of a finite Coxeter system with its Garside
// structure: greedy normal forms, divisibility, gcd/lcm, quotients, powers
// and the central elements pi, pi_I.
#pragma once

#include <string>
#include <vector>

#include "garside/coxeter.hpp"

namespace garside {

// A positive braid in left greedy normal form: a list of nonidentity simple
// factors (group elements) such that each consecutive pair (a, b) satisfies
// "every left descent of b is a right descent of a"; the empty list is the
// identity braid.
struct BraidElement {
  const CoxeterSystem* sys = nullptr;
  std::vector<GroupElement> factors;
  bool operator==(const BraidElement& o) const { return factors == o.factors; }
  bool operator!=(const BraidElement& o) const { return factors != o.factors; }
  bool operator<(const BraidElement& o) const { return factors < o.factors; }
};

struct NotADivisor : std::runtime_error {
  NotADivisor() : std::runtime_error("not a divisor") {}
};

namespace braid {

// ----- prefix (weak) order on W -----
// u is a prefix of w, i.e. l(u) + l(u^-1 w) = l(w).
bool w_le(const GroupElement& u, const GroupElement& w);
GroupElement w_meet(const GroupElement& x, const GroupElement& y);
GroupElement w_join(const GroupElement& x, const GroupElement& y);

// ----- construction -----
BraidElement identity(const CoxeterSystem& sys);
BraidElement lift(const GroupElement& w);  // the simple braid on w
BraidElement from_word(const CoxeterSystem& sys, const std::vector<int>& word);
// Normal form of an arbitrary product of simple factors.
BraidElement normalize(const CoxeterSystem& sys,
                       std::vector<GroupElement> factors);

// ----- basic queries -----
inline int canonical_length(const BraidElement& a) {
  return static_cast<int>(a.factors.size());
}
inline bool is_identity(const BraidElement& a) { return a.factors.empty(); }
GroupElement image(const BraidElement& a);  // product of factors in W
int letter_length(const BraidElement& a);   // total word length
// head = maximal simple left divisor (first normal factor); a = head * tail.
GroupElement head(const BraidElement& a);
BraidElement tail(const BraidElement& a);

// ----- arithmetic -----
BraidElement product(const BraidElement& a, const BraidElement& b);
BraidElement power(const BraidElement& a, int n);
BraidElement delta(const CoxeterSystem& sys);     // lift of w0
BraidElement pi(const CoxeterSystem& sys, Subset I);  // (lift of w_I)^2
// Reverse anti-automorphism: factors reversed and inverted, renormalized.
BraidElement rev(const BraidElement& a);
BraidElement apply_phi(int k, const BraidElement& a);

// ----- divisibility -----
bool divides(const BraidElement& a, const BraidElement& b, bool left);
// left: b = a*c, returns c; right: b = c*a. Throws NotADivisor.
BraidElement quotient(const BraidElement& a, const BraidElement& b, bool left);
BraidElement left_gcd(const BraidElement& a, const BraidElement& b);
BraidElement right_lcm(const BraidElement& a, const BraidElement& b);
BraidElement right_gcd(const BraidElement& a, const BraidElement& b);
BraidElement left_lcm(const BraidElement& a, const BraidElement& b);
// Right complement: the unique c with right_lcm(a,b) = a*c.
BraidElement complement(const BraidElement& a, const BraidElement& b);

// ----- serialization -----
std::vector<std::string> factor_words(const BraidElement& a);
std::string to_string(const BraidElement& a);  // e.g. "[121,1]" or "[]"

}  // namespace braid
}  // namespace garside
