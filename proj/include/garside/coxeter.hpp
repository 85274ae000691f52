// Finite Coxeter groups and twisted cosets: exact root systems, elements as
// signed root permutations, lengths, parabolic decompositions, diagram
// automorphisms, reflection-representation matrices and length-level
// enumeration caches.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace garside {

// Subset of the generating set S, as a bitmask over generator indices.
using Subset = std::uint32_t;

std::vector<int> subset_to_list(Subset I);
Subset subset_from_list(const std::vector<int>& v);
std::string subset_to_string(Subset I);  // e.g. "[2,5]"

// Exact coefficients a + b*tau with tau^2 = tau + 1 (tau = golden ratio).
// Crystallographic types only ever use b = 0.
struct Zt {
  long long a = 0, b = 0;
  Zt() = default;
  Zt(long long a_, long long b_ = 0) : a(a_), b(b_) {}
  friend Zt operator+(Zt x, Zt y) { return {x.a + y.a, x.b + y.b}; }
  friend Zt operator-(Zt x, Zt y) { return {x.a - y.a, x.b - y.b}; }
  friend Zt operator-(Zt x) { return {-x.a, -x.b}; }
  friend Zt operator*(Zt x, Zt y) {
    // (a+b tau)(c+d tau) = ac + bd + (ad+bc+bd) tau
    return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
  }
  friend bool operator==(Zt x, Zt y) { return x.a == y.a && x.b == y.b; }
  friend bool operator<(Zt x, Zt y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;  // ordering for map keys only
  }
  bool is_zero() const { return a == 0 && b == 0; }
  int sign() const;          // sign of the real value a + b*(1+sqrt5)/2
  double value() const;      // numeric value
};

class CoxeterSystem;

// An element of W stored as the permutation it induces on the signed root
// list: img[r] is the signed index of w(alpha_r) for each positive root r.
// Signed indices: k < N means positive root k, k >= N means -(root k-N).
struct GroupElement {
  const CoxeterSystem* sys = nullptr;
  std::vector<std::uint16_t> img;
  bool operator==(const GroupElement& o) const { return img == o.img; }
  bool operator!=(const GroupElement& o) const { return img != o.img; }
  bool operator<(const GroupElement& o) const { return img < o.img; }
};

// w * phi^twist, an element of the coset W phi^twist.
struct TwistedElement {
  GroupElement w;
  int twist = 0;
};

// A root of unity e^{2 pi i num/den}, used for the factors attached to the
// reflection degrees of a twisted coset.
struct Unity {
  int num = 0, den = 1;
};

class CoxeterSystem {
 public:
  // Descriptor grammar: [<twist digit>]<letter><rank> or [2]I2(<m>),
  // e.g. "A4", "2A5", "3D4", "2F4", "H3", "I2(7)". Heap-allocated because
  // elements keep back-pointers to their system.
  static std::unique_ptr<CoxeterSystem> build(const std::string& descriptor);

  const std::string& name() const { return descriptor_; }
  int rank() const { return rank_; }
  int num_roots() const { return nroots_; }           // number of positive roots
  int twist_order() const { return twist_order_; }    // order of phi (1 if untwisted)
  bool twisted() const { return twist_order_ > 1; }
  int coxeter_m(int s, int t) const { return cox_m_[s][t]; }

  const std::vector<int>& degrees() const { return degrees_; }
  const std::vector<Unity>& factors() const { return factors_; }
  const std::vector<int>& codegrees() const { return codegrees_; }
  const std::vector<Unity>& cofactors() const { return cofactors_; }

  // ----- group elements -----
  GroupElement identity() const;
  const GroupElement& generator(int s) const { return gens_[s]; }
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inv(const GroupElement& a) const;
  std::uint16_t apply(const GroupElement& a, std::uint16_t signed_idx) const;
  std::uint16_t flip(std::uint16_t k) const {
    return k < nroots_ ? k + nroots_ : k - nroots_;
  }
  int length(const GroupElement& w) const;
  bool is_identity(const GroupElement& w) const;

  bool is_right_descent(const GroupElement& w, int s) const {
    return w.img[s] >= nroots_;
  }
  Subset right_descent_set(const GroupElement& w) const;
  Subset left_descent_set(const GroupElement& w) const;

  GroupElement longest_element(Subset I) const;
  int longest_length(Subset I) const;  // cached l(w_I)

  // w = v * u with v in W_I and u without left descent in I (side = left),
  // or w = u * v (side = right). Returns (v, u).
  std::pair<GroupElement, GroupElement> coset_decompose(const GroupElement& w,
                                                        Subset I,
                                                        bool left) const;

  GroupElement from_word(const std::vector<int>& word) const;
  std::vector<int> canonical_word(const GroupElement& w) const;  // lex-least reduced word
  std::string word_string(const std::vector<int>& word) const;
  std::vector<int> parse_word(const std::string& text) const;
  std::string element_string(const GroupElement& w) const;

  // ----- diagram automorphism phi -----
  int phi_on_generator(int k, int s) const;  // sigma^k(s)
  Subset phi_on_subset(int k, Subset I) const;
  // phi^k as a signed root permutation (not an element of W).
  const GroupElement& phi_perm(int k) const;
  GroupElement apply_automorphism(int k, const GroupElement& w) const;

  // Subset conjugation I^{w phi^k}: the set {t : (w phi^k)^{-1}(alpha_s) =
  // +-alpha_t, s in I}; nullopt if some s is not sent to +-S.
  std::optional<Subset> conjugate_subset(const GroupElement& w, int k,
                                         Subset I) const;
  // t with (w phi^k)(alpha_s) = +-alpha_t, i.e. the left conjugate
  // ^{w phi^k}(s); nullopt if not +-simple.
  std::optional<int> left_conj_generator(const GroupElement& w, int k,
                                         int s) const;

  // ----- reflection representation (unit simple-root basis) -----
  Eigen::MatrixXd matrix_of(const TwistedElement& x) const;
  const Eigen::MatrixXd& gram() const { return gram_; }  // invariant form
  // Positive root r as a numeric vector in the unit simple-root basis
  // (only available for linearly realized types, i.e. all but I2(m)).
  bool has_root_coords() const { return !root_coords_.empty(); }
  Eigen::VectorXd root_vector(int r) const;
  // The reflection in positive root r, as a group element.
  const GroupElement& reflection(int r) const;

  // ----- enumeration by length levels (packed, cached) -----
  void ensure_levels(int max_len) const;
  std::size_t level_size(int l) const;
  const std::uint8_t* level_data(int l) const;  // stride num_roots()
  GroupElement unpack(const std::uint8_t* p) const;
  std::vector<std::uint8_t> pack(const GroupElement& w) const;

  // All elements of the twisted class of rep with exactly the target length.
  std::vector<GroupElement> enumerate_class_at_length(const TwistedElement& rep,
                                                      int target_len,
                                                      std::size_t cap) const;

  // Positive roots of the parabolic W_I, as root indices.
  const std::vector<int>& parabolic_roots(Subset I) const;
  // Elements of W_I (cached; throws if larger than cap).
  const std::vector<GroupElement>& parabolic_elements(Subset I,
                                                      std::size_t cap) const;

 private:
  CoxeterSystem() = default;
  void build_linear(const std::vector<std::vector<Zt>>& cartan);
  void build_dihedral(int m);
  void finish_build();

  std::string descriptor_;
  char letter_ = 0;
  int rank_ = 0;
  int nroots_ = 0;
  int twist_order_ = 1;
  int dihedral_m_ = 0;
  std::vector<std::vector<int>> cox_m_;
  std::vector<int> sigma_;  // phi on generator indices (identity if untwisted)

  std::vector<GroupElement> gens_;
  std::vector<GroupElement> phi_perms_;      // phi^k, k = 0..twist_order-1
  std::vector<GroupElement> phi_perm_invs_;

  std::vector<std::vector<Zt>> root_coords_;      // per positive root
  std::vector<std::pair<int, int>> root_parent_;  // (generator, parent root)
  std::vector<double> simple_len2_;               // |alpha_i|^2

  std::vector<int> degrees_;
  std::vector<Unity> factors_;
  std::vector<int> codegrees_;
  std::vector<Unity> cofactors_;

  Eigen::MatrixXd gram_;
  std::vector<Eigen::MatrixXd> gen_matrices_;
  Eigen::MatrixXd phi_matrix_;

  mutable std::mutex cache_mutex_;
  mutable std::vector<std::vector<std::uint8_t>> levels_;
  mutable std::vector<GroupElement> reflections_;
  mutable std::map<Subset, int> longest_len_cache_;
  mutable std::map<Subset, std::vector<int>> parabolic_roots_cache_;
  mutable std::map<Subset, std::vector<GroupElement>> parabolic_elts_cache_;
};

// Interned systems: a stable reference valid for the process lifetime.
const CoxeterSystem& coxeter(const std::string& descriptor);

// Deterministic chunked parallelism: run fn(i) for i in [0, n) using the
// configured worker count, preserving index order of any merged output.
void set_thread_count(int n);
int thread_count();

}  // namespace garside
