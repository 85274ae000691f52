// Garside arithmetic in the positive braid monoid: normal forms by local
// domino passes, the prefix-order lattice on W, gcd/lcm and quotients.
#include "garside/braid.hpp"

#include <algorithm>

namespace garside {
namespace braid {

bool w_le(const GroupElement& u, const GroupElement& w) {
  const auto& W = *u.sys;
  return W.length(u) + W.length(W.mul(W.inv(u), w)) == W.length(w);
}

GroupElement w_meet(const GroupElement& x0, const GroupElement& y0) {
  // The meet has a common left descent of x and y as long as one exists.
  const auto& W = *x0.sys;
  GroupElement m = W.identity();
  GroupElement x = x0, y = y0;
  GroupElement xi = W.inv(x), yi = W.inv(y);
  const int N = W.num_roots();
  for (;;) {
    int s = -1;
    for (int t = 0; t < W.rank(); ++t)
      if (xi.img[t] >= N && yi.img[t] >= N) {
        s = t;
        break;
      }
    if (s < 0) break;
    const auto& g = W.generator(s);
    m = W.mul(m, g);
    x = W.mul(g, x);
    y = W.mul(g, y);
    xi = W.mul(xi, g);
    yi = W.mul(yi, g);
  }
  return m;
}

GroupElement w_join(const GroupElement& x, const GroupElement& y) {
  // w -> w0 w is an order-reversing involution of the prefix order.
  const auto& W = *x.sys;
  GroupElement w0 = W.longest_element((1u << W.rank()) - 1);
  return W.mul(w0, w_meet(W.mul(w0, x), W.mul(w0, y)));
}

BraidElement identity(const CoxeterSystem& sys) {
  BraidElement a;
  a.sys = &sys;
  return a;
}

BraidElement lift(const GroupElement& w) {
  BraidElement a;
  a.sys = w.sys;
  if (!w.sys->is_identity(w)) a.factors.push_back(w);
  return a;
}

BraidElement normalize(const CoxeterSystem& sys,
                       std::vector<GroupElement> f) {
  // Local domino passes: replace each consecutive pair (a, b) by
  // (a*t, t^-1*b) with t = (a^-1 w0) meet b, until no pair moves.
  GroupElement w0 = sys.longest_element((1u << sys.rank()) - 1);
  f.erase(std::remove_if(f.begin(), f.end(),
                         [&](const GroupElement& g) {
                           return sys.is_identity(g);
                         }),
          f.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      GroupElement t = w_meet(sys.mul(sys.inv(f[i]), w0), f[i + 1]);
      if (sys.is_identity(t)) continue;
      f[i] = sys.mul(f[i], t);
      f[i + 1] = sys.mul(sys.inv(t), f[i + 1]);
      changed = true;
      if (sys.is_identity(f[i + 1])) {
        f.erase(f.begin() + i + 1);
        --i;
      }
    }
  }
  BraidElement a;
  a.sys = &sys;
  a.factors = std::move(f);
  return a;
}

BraidElement from_word(const CoxeterSystem& sys,
                       const std::vector<int>& word) {
  std::vector<GroupElement> f;
  f.reserve(word.size());
  for (int s : word) {
    if (s < 0 || s >= sys.rank())
      throw std::out_of_range("generator index out of range");
    f.push_back(sys.generator(s));
  }
  return normalize(sys, std::move(f));
}

GroupElement image(const BraidElement& a) {
  GroupElement w = a.sys->identity();
  for (const auto& f : a.factors) w = a.sys->mul(w, f);
  return w;
}

int letter_length(const BraidElement& a) {
  int l = 0;
  for (const auto& f : a.factors) l += a.sys->length(f);
  return l;
}

GroupElement head(const BraidElement& a) {
  if (a.factors.empty())
    throw std::logic_error("head of the identity braid");
  return a.factors.front();
}

BraidElement tail(const BraidElement& a) {
  if (a.factors.empty())
    throw std::logic_error("tail of the identity braid");
  BraidElement t;
  t.sys = a.sys;
  t.factors.assign(a.factors.begin() + 1, a.factors.end());
  return t;
}

BraidElement product(const BraidElement& a, const BraidElement& b) {
  std::vector<GroupElement> f = a.factors;
  f.insert(f.end(), b.factors.begin(), b.factors.end());
  return normalize(*a.sys, std::move(f));
}

BraidElement power(const BraidElement& a, int n) {
  if (n < 0) throw std::invalid_argument("negative power of a positive braid");
  BraidElement r = identity(*a.sys);
  for (int i = 0; i < n; ++i) r = product(r, a);
  return r;
}

BraidElement delta(const CoxeterSystem& sys) {
  return lift(sys.longest_element((1u << sys.rank()) - 1));
}

BraidElement pi(const CoxeterSystem& sys, Subset I) {
  BraidElement w = lift(sys.longest_element(I));
  return product(w, w);
}

BraidElement rev(const BraidElement& a) {
  std::vector<GroupElement> f;
  f.reserve(a.factors.size());
  for (auto it = a.factors.rbegin(); it != a.factors.rend(); ++it)
    f.push_back(a.sys->inv(*it));
  return normalize(*a.sys, std::move(f));
}

BraidElement apply_phi(int k, const BraidElement& a) {
  BraidElement r;
  r.sys = a.sys;
  r.factors.reserve(a.factors.size());
  for (const auto& f : a.factors)
    r.factors.push_back(a.sys->apply_automorphism(k, f));
  return r;  // phi preserves descents, hence normality
}

namespace {

// Strip the simple u from the front of b; returns false if u is not a left
// divisor.
bool strip_simple(const CoxeterSystem& sys, const GroupElement& u,
                  BraidElement& b) {
  if (sys.is_identity(u)) return true;
  if (b.factors.empty()) return false;
  if (!w_le(u, b.factors.front())) return false;
  std::vector<GroupElement> f = b.factors;
  f.front() = sys.mul(sys.inv(u), f.front());
  b = normalize(sys, std::move(f));
  return true;
}

}  // namespace

bool divides(const BraidElement& a, const BraidElement& b, bool left) {
  if (!left) return divides(rev(a), rev(b), true);
  BraidElement c = b;
  for (const auto& u : a.factors)
    if (!strip_simple(*a.sys, u, c)) return false;
  return true;
}

BraidElement quotient(const BraidElement& a, const BraidElement& b,
                      bool left) {
  if (!left) return rev(quotient(rev(a), rev(b), true));
  BraidElement c = b;
  for (const auto& u : a.factors)
    if (!strip_simple(*a.sys, u, c)) throw NotADivisor();
  return c;
}

BraidElement left_gcd(const BraidElement& a, const BraidElement& b) {
  const auto& W = *a.sys;
  BraidElement x = a, y = b;
  std::vector<GroupElement> g;
  while (!x.factors.empty() && !y.factors.empty()) {
    GroupElement t = w_meet(x.factors.front(), y.factors.front());
    if (W.is_identity(t)) break;
    g.push_back(t);
    strip_simple(W, t, x);
    strip_simple(W, t, y);
  }
  return normalize(W, std::move(g));
}

namespace {

// x\b for a simple x, via x\(f g) = (x\f) * ((f\x)\g) and, for simples,
// x\f = x^-1 (x join f), f\x = f^-1 (x join f).
BraidElement simple_complement(const CoxeterSystem& W, GroupElement x,
                               const BraidElement& b) {
  std::vector<GroupElement> comp;
  for (const auto& f : b.factors) {
    GroupElement j = w_join(x, f);
    comp.push_back(W.mul(W.inv(x), j));  // x\f
    x = W.mul(W.inv(f), j);              // f\x
  }
  return normalize(W, std::move(comp));
}

}  // namespace

BraidElement complement(const BraidElement& a, const BraidElement& b) {
  const auto& W = *a.sys;
  BraidElement c = b;
  for (const auto& x : a.factors) c = simple_complement(W, x, c);
  return c;
}

BraidElement right_lcm(const BraidElement& a, const BraidElement& b) {
  return product(a, complement(a, b));
}

BraidElement right_gcd(const BraidElement& a, const BraidElement& b) {
  return rev(left_gcd(rev(a), rev(b)));
}

BraidElement left_lcm(const BraidElement& a, const BraidElement& b) {
  return rev(right_lcm(rev(a), rev(b)));
}

std::vector<std::string> factor_words(const BraidElement& a) {
  std::vector<std::string> out;
  out.reserve(a.factors.size());
  for (const auto& f : a.factors)
    out.push_back(a.sys->element_string(f));
  return out;
}

std::string to_string(const BraidElement& a) {
  std::string out = "[";
  auto words = factor_words(a);
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += ",";
    out += words[i];
  }
  return out + "]";
}

}  // namespace braid
}  // namespace garside
