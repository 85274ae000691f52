// Periodic elements of twisted Artin-Tits monoids: roots of the central
// element pi/pi_I, sliding to power-stays-simple form, half-power structure,
// eigenvalue ranks and maximality, classical-type constructors, exhaustive
// classification, restriction of scalars and relative centralizer sections.
#pragma once

#include <optional>

#include "garside/conjcat.hpp"

namespace garside {
namespace periodic {

struct NotPeriodic : std::runtime_error {
  NotPeriodic() : std::runtime_error("element is not periodic") {}
};

struct NotGood : std::runtime_error {
  explicit NotGood(const std::string& what)
      : std::runtime_error("goodness check failed: " + what) {}
};

struct NotAdmissible : std::invalid_argument {
  explicit NotAdmissible(const std::string& what)
      : std::invalid_argument(what) {}
};

// w * phi^e(w) * phi^2e(w) * ... , `steps` factors; the group (resp. braid)
// part of (w phi^e)^steps.
GroupElement twisted_power(const GroupElement& w, int phi_exp, int steps);
BraidElement twisted_power(const BraidElement& b, int phi_exp, int steps);

// Whether (b phi^e)^d = phi^{ed} (pi/pi_I)^power as positive braids, i.e. the
// d-fold twisted power of b equals quotient(pi_I, pi)^power in normal form.
bool is_periodic(Subset I, const BraidElement& b, int d, int phi_exp = 1,
                 int power = 1);

// A verified d-th root of (pi/pi_I)^power in the coset W phi^phi_exp.
struct GoodCertificate {
  const CoxeterSystem* sys = nullptr;
  int d = 1;
  Subset I = 0;
  GroupElement w;         // I-reduced
  BraidElement braid_w;   // lift of w
  int phi_exp = 1;        // exponent on the system twist (mod its order)
  int power = 1;          // exponent on pi/pi_I in the braid identity
  struct Checks {
    bool stabilizes = false;      // ^{w phi}I = I and w is I-reduced
    bool length_law = false;      // l((w phi)^i phi^-i) = i l(w) on the range
    bool power_law = false;       // (w phi)^d = phi^d in W
    bool braid_identity = false;  // (b phi)^d = phi^d (pi/pi_I)^power
  } checks;
  int zeta_rank = 0;  // eigenvalue multiplicity of e^{2 pi i power/d} at w phi
  std::optional<long long> relative_order;
};

// Builds and fully verifies a certificate; throws NotGood naming the failed
// condition (including a non-phi^d-stable I or I^{w phi} != I).
GoodCertificate make_certificate(const CoxeterSystem& sys, int d, Subset I,
                                 const GroupElement& w, int phi_exp = 1,
                                 int power = 1);

// Cyclically conjugates a periodic morphism until all twisted powers up to
// floor(d/2) are simple, one left-divisor conjugation at a time: at the
// smallest i whose (i+1)-st power has canonical length 2, the conjugator is
// v = (image of the i-th power)^-1 * head((i+1)-st power), a left divisor of
// the braid. Returns the accumulated conjugator and the resulting object.
std::pair<BraidElement, conjcat::ConjObject> slide_to_good(
    Subset I, const BraidElement& b, int d, int phi_exp = 1);

// For even d the floor(d/2)-th twisted power equals w_I^-1 w0 (group and
// braid level); for odd d there is a simple u, fixed by phi^d, with
// I^u inside S, w phi = u phi * conj_{w0 phi^{(d-1)/2}}(u) and
// (w phi)^{(d-1)/2} u = w_I^-1 w0 phi^{(d-1)/2}.
struct HalfPowerStructure {
  bool even = true;
  GroupElement half;  // the floor(d/2)-th twisted power of w
  GroupElement u;     // identity in the even case
  bool verified = false;
};
HalfPowerStructure even_odd_structure(const GoodCertificate& cert);

// Multiplicity of e^{2 pi i k/d} as an eigenvalue of the reflection
// representation of x, counted with tolerance; throws if an eigenvalue falls
// within 10x the tolerance of the decision boundary without passing it.
int zeta_rank(const CoxeterSystem& sys, const TwistedElement& x, int k, int d,
              double tol = 1e-8);
// Coset-level maximum via the degree/factor counting formula (exact).
int coset_zeta_rank(const CoxeterSystem& sys, int k, int d);
int coset_zeta_corank(const CoxeterSystem& sys, int k, int d);

// Whether no element of W_I w phi has eigenvalue e^{2 pi i power/d} on the
// span of the root lines of W_I (brute force over W_I, early exit).
bool is_maximal(const GoodCertificate& cert, std::size_t cap = 2000000,
                double tol = 1e-8);

// Explicit constructions for the infinite families "A", "2A", "B", "D",
// "2D"; admissible_d lists the d >= 2 covered for each family at rank n.
std::vector<int> admissible_d(const std::string& family, int n);
GoodCertificate construct_classical(const std::string& family, int n, int d);

struct Limits {
  std::size_t max_parabolic = 2000000;  // brute-force cap inside W_I
  bool allow_huge = false;              // gate for very large groups
  int representative_limit = 3;         // words reported per table row
  double tol = 1e-8;
};

struct TableRow {
  Subset I = 0;
  int length = 0;
  long long count = 0;
  std::vector<std::string> representatives;  // lex-least canonical words
  std::optional<long long> relative_order;
};

// All maximal d-th-root elements of the coset, grouped by the subset I,
// found by sweeping the length levels allowed by the length law. Returns an
// empty table when the coset has no eigenvalue e^{2 pi i/d}.
std::vector<TableRow> classify_good(const CoxeterSystem& sys, int d,
                                    const Limits& limits = Limits());

// The section {v in C_W(w phi) | v normalizes W_I and is I-reduced} of the
// normalizer quotient acting on the eigenspace; elements retained up to
// element_cap (order is always exact).
struct SectionResult {
  std::vector<GroupElement> elements;
  long long order = 0;
  bool elements_complete = true;
};
SectionResult relative_section(const GoodCertificate& cert,
                               std::size_t element_cap = 100000);

// Reflection degrees of the ambient coset whose attached factor matches
// e^{2 pi i k/d} raised to the degree; their count is coset_zeta_rank and
// their product is the order of the relative group on a maximal eigenspace.
std::vector<int> coset_selected_degrees(const CoxeterSystem& sys, int k,
                                        int d);

// Reflection degrees of the subgroup generated by the reflections orthogonal
// to the fixed space of w phi on the span of W_I's root lines, keeping those
// degrees D with e^{2 pi i power D / d} = 1. Computed from a Coxeter element
// of the orthogonal root subsystem, so no subgroup enumeration is needed.
std::vector<int> parabolic_selected_degrees(const GoodCertificate& cert,
                                            double tol = 1e-8);

// Comparison between the full relative group of the eigenspace (realized by
// the section) and what the orthogonal reflection subgroup can realize: both
// the element counts and the active reflection degrees. The degrees disagree
// in a handful of documented cases even when the counts agree, because the
// subgroup may only reach the eigenvalue through the twist it inherits.
struct SectionComparison {
  long long section_order = 0;
  long long parabolic_order = 0;  // centralizer of w phi inside the subgroup
  std::vector<int> coset_degrees;
  std::vector<int> parabolic_degrees;
  bool mismatch = false;  // order or degree disagreement
};
SectionComparison section_mismatch(const GoodCertificate& cert,
                                   double tol = 1e-8);

// From a verified d-th root, the d-th root of (pi/pi_I)^k for gcd(k,d)=1,
// 2k <= d: with k k' = 1 + d d', the new element is the k-fold twisted power
// of the base with twist step phi^{k'}.
GoodCertificate construct_for_power(int k, int d, const GoodCertificate& base);

// ----- restriction of scalars: W^n with the coordinate-rotating twist -----
// sigma(x_0,...,x_{n-1}) = (x_1,...,x_{n-1}, phi(x_0)).

struct BlockCertificate {
  const CoxeterSystem* sys = nullptr;
  int n = 1, d = 1;
  int k = 1;  // gcd(n, d)
  int m = 1;  // m * (n/k) = 1 mod d/k, gcd(m, twist order) = 1
  std::vector<GroupElement> w;  // n blocks
  std::vector<Subset> I;        // n blocks
  GoodCertificate base;         // the d/k-th root this was assembled from
  bool verified = false;
};

// Assembles a d-th root of the central element of the product coset from a
// (d/k)-th root of W phi^m, and re-verifies stabilization, the length law,
// the power law and the blockwise braid identity.
BlockCertificate restriction_of_scalars(const CoxeterSystem& sys, int n,
                                        int d);

// Eigenvalue multiplicity of e^{2 pi i k/d} for the block element w sigma
// acting on the n-fold sum of reflection representations (numeric).
int block_zeta_rank(const CoxeterSystem& sys,
                    const std::vector<GroupElement>& w, int k, int d,
                    double tol = 1e-8);
// Coset-level maximum for W^n sigma via the degree/factor formula.
int block_coset_zeta_rank(const CoxeterSystem& sys, int n, int k, int d);

}  // namespace periodic
}  // namespace garside
