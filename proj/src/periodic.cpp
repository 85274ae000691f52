// Periodic-element machinery: twisted powers, periodicity and goodness
// certificates, sliding, half-power structure, eigenvalue ranks, maximality,
// classical constructors, classification sweeps, centralizer sections and
// restriction of scalars.
#include "garside/periodic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include <Eigen/Eigenvalues>

namespace garside {
namespace periodic {

namespace {

Subset full_subset(const CoxeterSystem& sys) {
  return (1u << sys.rank()) - 1;
}

// pi / pi_I as a positive braid (pi = pi_I * quotient).
BraidElement central_quotient(const CoxeterSystem& sys, Subset I) {
  return braid::quotient(braid::pi(sys, I), braid::pi(sys, full_subset(sys)),
                         true);
}

// ^{w phi^k} I, the left conjugate; nullopt if it leaves S.
std::optional<Subset> left_conjugate_subset(const CoxeterSystem& sys,
                                            const GroupElement& w, int k,
                                            Subset I) {
  Subset J = 0;
  for (int s : subset_to_list(I)) {
    auto t = sys.left_conj_generator(w, k, s);
    if (!t) return std::nullopt;
    J |= 1u << *t;
  }
  return J;
}

std::complex<double> unit_root(int num, int den) {
  double t = 2.0 * M_PI * static_cast<double>(num) / den;
  return {std::cos(t), std::sin(t)};
}

// Eigenvalue multiplicity of zeta in an arbitrary real matrix, with the
// 10x-tolerance guard band.
int eigen_multiplicity(const Eigen::MatrixXd& M, std::complex<double> zeta,
                       double tol) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(M, false);
  int count = 0;
  for (int i = 0; i < M.rows(); ++i) {
    double dist = std::abs(es.eigenvalues()(i) - zeta);
    if (dist < tol)
      ++count;
    else if (dist < 10 * tol)
      throw std::runtime_error(
          "eigenvalue too close to the tolerance boundary");
  }
  return count;
}

// Whether some element of W_I w phi^e has eigenvalue zeta on the span of the
// simple roots of I (early exit on the first witness).
bool parabolic_coset_has_eigenvalue(const CoxeterSystem& sys, Subset I,
                                    const GroupElement& w, int e,
                                    std::complex<double> zeta, std::size_t cap,
                                    double tol) {
  std::vector<int> idx = subset_to_list(I);
  const int k = static_cast<int>(idx.size());
  Eigen::MatrixXd Mw = sys.matrix_of({w, e});
  auto test = [&](const Eigen::MatrixXd& full) {
    Eigen::MatrixXd sub(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub(i, j) = full(idx[i], idx[j]);
    return eigen_multiplicity(sub, zeta, tol) > 0;
  };
  // Cheap witnesses first: w phi itself and w_I w phi.
  if (test(Mw)) return true;
  GroupElement wI = sys.longest_element(I);
  if (test(sys.matrix_of({sys.mul(wI, w), e}))) return true;
  for (const auto& v : sys.parabolic_elements(I, cap)) {
    if (test(sys.matrix_of({sys.mul(v, w), e}))) return true;
  }
  return false;
}

long long group_order(const CoxeterSystem& sys) {
  long long o = 1;
  for (int d : sys.degrees()) o *= d;
  return o;
}

int positive_gcd(int a, int b) { return std::gcd(a, b); }

}  // namespace

GroupElement twisted_power(const GroupElement& w, int phi_exp, int steps) {
  const auto& W = *w.sys;
  GroupElement res = W.identity();
  for (int i = 0; i < steps; ++i)
    res = W.mul(res, W.apply_automorphism(phi_exp * i, w));
  return res;
}

BraidElement twisted_power(const BraidElement& b, int phi_exp, int steps) {
  BraidElement res = braid::identity(*b.sys);
  for (int i = 0; i < steps; ++i)
    res = braid::product(res, braid::apply_phi(phi_exp * i, b));
  return res;
}

bool is_periodic(Subset I, const BraidElement& b, int d, int phi_exp,
                 int power) {
  const auto& W = *b.sys;
  BraidElement lhs = twisted_power(b, phi_exp, d);
  BraidElement rhs = braid::power(central_quotient(W, I), power);
  return lhs == rhs;
}

GoodCertificate make_certificate(const CoxeterSystem& sys, int d, Subset I,
                                 const GroupElement& w, int phi_exp,
                                 int power) {
  if (d < 1 || power < 1) throw NotGood("invalid parameters");
  GoodCertificate cert;
  cert.sys = &sys;
  cert.d = d;
  cert.I = I;
  cert.w = w;
  cert.phi_exp = phi_exp;
  cert.power = power;
  if (sys.phi_on_subset(phi_exp * d, I) != I)
    throw NotGood("I is not stable under the d-th twist power");
  if (d == 1) {
    if (!sys.is_identity(w)) throw NotGood("the group part must be trivial");
    if (sys.phi_on_subset(phi_exp, I) != I)
      throw NotGood("I is not twist-stable");
    cert.braid_w = braid::power(central_quotient(sys, I), power);
    cert.checks = {true, true, true, true};
    cert.zeta_rank = zeta_rank(sys, {w, phi_exp}, power, d);
    return cert;
  }
  cert.braid_w = braid::lift(w);
  // (i) stabilization and I-reducedness.
  auto J = left_conjugate_subset(sys, w, phi_exp, I);
  if (!J || *J != I) throw NotGood("w phi does not stabilize I");
  if (sys.left_descent_set(w) & I) throw NotGood("w is not I-reduced");
  cert.checks.stabilizes = true;
  // (ii) the length law, incrementally on twisted powers.
  const int N = sys.num_roots();
  const int lI = sys.longest_length(I);
  const int lw = sys.length(w);
  if (lw * d != 2 * power * (N - lI)) throw NotGood("length law at i = 1");
  GroupElement cur = w;
  const int imax = d / (2 * power);
  for (int i = 2; i <= d; ++i) {
    cur = sys.mul(cur, sys.apply_automorphism(phi_exp * (i - 1), w));
    if (i <= imax && sys.length(cur) != i * lw)
      throw NotGood("length law at i = " + std::to_string(i));
  }
  cert.checks.length_law = true;
  // (iii) the power law in W.
  if (!sys.is_identity(cur)) throw NotGood("d-th power is not the twist");
  cert.checks.power_law = true;
  // The braid-level identity.
  if (!is_periodic(I, cert.braid_w, d, phi_exp, power))
    throw NotGood("braid power identity");
  cert.checks.braid_identity = true;
  cert.zeta_rank = zeta_rank(sys, {w, phi_exp}, power, d);
  return cert;
}

std::pair<BraidElement, conjcat::ConjObject> slide_to_good(
    Subset I, const BraidElement& b, int d, int phi_exp) {
  const auto& W = *b.sys;
  if (!is_periodic(I, b, d, phi_exp)) throw NotPeriodic();
  conjcat::Automorphism A{0, phi_exp};
  conjcat::ConjObject obj;
  try {
    obj = conjcat::make_object(I, b, A);
  } catch (const std::exception&) {
    throw NotPeriodic();
  }
  BraidElement conjugator = braid::identity(W);
  const int half = d / 2;
  int guard = 4 * d * (W.num_roots() + 1);
  for (;;) {
    // Find the smallest power that is no longer simple.
    int bad = 0;
    BraidElement p = braid::identity(W);
    for (int i = 1; i <= half; ++i) {
      p = braid::product(p, braid::apply_phi(phi_exp * (i - 1), obj.braid));
      if (braid::canonical_length(p) > 1) {
        bad = i;
        break;
      }
    }
    if (bad == 0) break;
    if (--guard < 0) throw std::logic_error("sliding did not terminate");
    // p = (previous simple power) * v * tail with (prev * v) = head(p).
    GroupElement prev = braid::image(twisted_power(obj.braid, phi_exp, bad - 1));
    GroupElement v = W.mul(W.inv(prev), braid::head(p));
    BraidElement vb = braid::lift(v);
    if (!braid::divides(vb, obj.braid, true))
      throw std::logic_error("sliding conjugator is not a left divisor");
    obj = conjcat::cyc_step(obj, vb);
    conjugator = braid::product(conjugator, vb);
  }
  return {conjugator, obj};
}

HalfPowerStructure even_odd_structure(const GoodCertificate& cert) {
  const auto& sys = *cert.sys;
  if (cert.power != 1)
    throw std::invalid_argument("structure requires an exact d-th root");
  const int d = cert.d, e = cert.phi_exp;
  GroupElement w0 = sys.longest_element(full_subset(sys));
  GroupElement wI = sys.longest_element(cert.I);
  GroupElement target = sys.mul(sys.inv(wI), w0);
  HalfPowerStructure out;
  if (d % 2 == 0) {
    const int dh = d / 2;
    out.even = true;
    out.half = twisted_power(cert.w, e, dh);
    out.u = sys.identity();
    bool group_ok = out.half == target;
    bool braid_ok =
        twisted_power(cert.braid_w, e, dh) ==
        braid::quotient(braid::lift(wI), braid::delta(sys), true);
    out.verified = group_ok && braid_ok;
    if (!out.verified) throw NotGood("half-power structure");
    return out;
  }
  const int dh = (d - 1) / 2;
  out.even = false;
  out.half = twisted_power(cert.w, e, dh);
  // (w phi)^{dh} u = w_I^-1 w0 phi^{dh} determines u.
  out.u = sys.apply_automorphism(-e * dh,
                                 sys.mul(sys.inv(out.half), target));
  bool ok = true;
  // u is fixed by phi^d and conjugates I into S.
  ok = ok && sys.apply_automorphism(e * d, out.u) == out.u;
  ok = ok && sys.conjugate_subset(out.u, 0, cert.I).has_value();
  // w = u * w0 * phi^{e(dh+1)}(u) * w0.
  GroupElement rebuilt = sys.mul(
      out.u,
      sys.mul(w0, sys.mul(sys.apply_automorphism(e * (dh + 1), out.u), w0)));
  ok = ok && rebuilt == cert.w;
  // Braid level: (b phi)^{dh} * phi^{e dh}(u) = w_I^-1 w0.
  BraidElement bu = braid::lift(sys.apply_automorphism(e * dh, out.u));
  ok = ok && braid::product(twisted_power(cert.braid_w, e, dh), bu) ==
                 braid::quotient(braid::lift(wI), braid::delta(sys), true);
  out.verified = ok;
  if (!ok) throw NotGood("half-power structure");
  return out;
}

int zeta_rank(const CoxeterSystem& sys, const TwistedElement& x, int k, int d,
              double tol) {
  return eigen_multiplicity(sys.matrix_of(x), unit_root(k, d), tol);
}

int coset_zeta_rank(const CoxeterSystem& sys, int k, int d) {
  int count = 0;
  for (std::size_t i = 0; i < sys.degrees().size(); ++i) {
    long long di = sys.degrees()[i];
    long long p = sys.factors()[i].num, q = sys.factors()[i].den;
    long long mod = static_cast<long long>(d) * q;
    long long lhs = ((k * di * q - p * d) % mod + mod) % mod;
    if (lhs == 0) ++count;
  }
  return count;
}

int coset_zeta_corank(const CoxeterSystem& sys, int k, int d) {
  int count = 0;
  for (std::size_t i = 0; i < sys.codegrees().size(); ++i) {
    long long di = sys.codegrees()[i];
    long long p = sys.cofactors()[i].num, q = sys.cofactors()[i].den;
    long long mod = static_cast<long long>(d) * q;
    long long lhs = ((k * di * q - p * d) % mod + mod) % mod;
    if (lhs == 0) ++count;
  }
  return count;
}

bool is_maximal(const GoodCertificate& cert, std::size_t cap, double tol) {
  if (cert.I == 0) return true;
  return !parabolic_coset_has_eigenvalue(*cert.sys, cert.I, cert.w,
                                         cert.phi_exp,
                                         unit_root(cert.power, cert.d), cap,
                                         tol);
}

// ----------------------------------------------------------- classical types

namespace {

// Linear-type word builders (1-based generator labels, converted at the end).
std::vector<int> to_indices(const std::vector<int>& labels) {
  std::vector<int> out;
  out.reserve(labels.size());
  for (int l : labels) out.push_back(l - 1);
  return out;
}

std::vector<int> type_a_v(int n, int d) {
  std::vector<int> word;
  for (int i = 1; i <= n - d / 2; ++i) word.push_back(i);
  for (int i = n; i >= (d + 1) / 2; --i) word.push_back(i);
  return to_indices(word);
}

std::vector<int> type_a_vprime(int n, int d) {
  std::vector<int> word;
  for (int i = 1; i <= n - d / 2; ++i) word.push_back(i);
  return to_indices(word);
}

Subset type_a_J(int n, int d) {
  Subset J = 0;
  for (int i = (d + 1) / 2 + 1; i <= n - d / 2; ++i) J |= 1u << (i - 1);
  return J;
}

std::vector<int> type_b_v(int n, int d) {
  std::vector<int> word;
  for (int i = n + 1 - d / 2; i >= 2; --i) word.push_back(i);
  for (int i = 1; i <= n; ++i) word.push_back(i);
  return to_indices(word);
}

Subset type_b_J(int n, int d) {
  Subset J = 0;
  for (int i = 1; i <= n - d / 2; ++i) J |= 1u << (i - 1);
  return J;
}

std::vector<int> type_d_v(int n, int d) {
  std::vector<int> word;
  for (int i = n + 1 - d / 2; i >= 3; --i) word.push_back(i);
  word.push_back(2);
  word.push_back(1);
  for (int i = 3; i <= n; ++i) word.push_back(i);
  return to_indices(word);
}

Subset type_d_J(int n, int d) {
  if (d == 2 * (n - 1)) return 0;
  Subset J = 0;
  for (int i = 1; i <= n - d / 2; ++i) J |= 1u << (i - 1);
  return J;
}

GroupElement group_power(const CoxeterSystem& sys, const GroupElement& w,
                         int k) {
  GroupElement r = sys.identity();
  for (int i = 0; i < k; ++i) r = sys.mul(r, w);
  return r;
}

// w'_m for odd m in the twisted linear family: k = floor((n+1)/m); the
// k-fold phi-twisted power of v'_{km} when k is odd, v_{km}^{k/2} otherwise.
GroupElement type_a_wprime(const CoxeterSystem& sys, int n, int m) {
  int k = (n + 1) / m;
  if (k % 2 == 1)
    return twisted_power(sys.from_word(type_a_vprime(n, k * m)), 1, k);
  return group_power(sys, sys.from_word(type_a_v(n, k * m)), k / 2);
}

}  // namespace

std::vector<int> admissible_d(const std::string& family, int n) {
  std::vector<int> out;
  if (family == "A") {
    for (int d = 2; d <= n + 1; ++d) out.push_back(d);
  } else if (family == "2A") {
    for (int d = 2; d <= 2 * (n + 1); ++d) {
      if (d % 4 == 0 && d <= n + 1) out.push_back(d);
      if (d % 4 == 2) out.push_back(d);
      if (d % 2 == 1 && 2 * d <= n + 1) out.push_back(d);
    }
    std::sort(out.begin(), out.end());
  } else if (family == "B") {
    for (int d = 2; d <= 2 * n; ++d)
      if (d % 2 == 0 || d <= n) out.push_back(d);
  } else if (family == "D") {
    for (int d = 2; d <= 2 * (n - 1); ++d)
      if (d % 2 == 0 || d <= n) out.push_back(d);
  } else if (family == "2D") {
    for (int d = 2; d < 2 * (n - 1); ++d)
      if (d % 2 == 0 || d < n) out.push_back(d);
    out.push_back(2 * n);
  } else {
    throw NotAdmissible("unknown family: " + family);
  }
  return out;
}

GoodCertificate construct_classical(const std::string& family, int n, int d) {
  auto ok = admissible_d(family, n);
  if (std::find(ok.begin(), ok.end(), d) == ok.end())
    throw NotAdmissible("d = " + std::to_string(d) +
                        " is not admissible for " + family +
                        std::to_string(n));
  if (family == "A") {
    const auto& sys = coxeter("A" + std::to_string(n));
    int k = (n + 1) / d;
    GroupElement w = group_power(sys, sys.from_word(type_a_v(n, k * d)), k);
    return make_certificate(sys, d, type_a_J(n, k * d), w);
  }
  if (family == "2A") {
    const auto& sys = coxeter("2A" + std::to_string(n));
    if (d % 4 == 0) {
      int k = (n + 1) / d;
      GroupElement w = group_power(sys, sys.from_word(type_a_v(n, k * d)), k);
      return make_certificate(sys, d, type_a_J(n, k * d), w);
    }
    if (d % 4 == 2) {
      int m = d / 2, k = (n + 1) / m;
      return make_certificate(sys, d, type_a_J(n, k * m),
                              type_a_wprime(sys, n, m));
    }
    int k = (n + 1) / (2 * d);
    GroupElement w2d =
        group_power(sys, sys.from_word(type_a_v(n, 2 * k * d)), k);
    return make_certificate(sys, d, type_a_J(n, 2 * k * d),
                            sys.mul(w2d, w2d));
  }
  if (family == "B") {
    const auto& sys = coxeter("B" + std::to_string(n));
    int k = d % 2 == 0 ? 2 * n / d : 2 * (n / d);
    GroupElement w = group_power(sys, sys.from_word(type_b_v(n, k * d)), k);
    return make_certificate(sys, d, type_b_J(n, k * d), w);
  }
  if (family == "D" || family == "2D") {
    const auto& sys =
        coxeter((family == "D" ? "D" : "2D") + std::to_string(n));
    if (family == "D" && n % d == 0) {
      std::vector<int> word;
      for (int i = 1; i <= n; ++i) word.push_back(i);
      for (int i = 2; i <= n - 1; ++i) word.push_back(i);
      GroupElement wn = sys.from_word(to_indices(word));
      return make_certificate(sys, d, 0, group_power(sys, wn, n / d));
    }
    if (family == "2D" && (2 * n) % d == 0 && (2 * n / d) % 2 == 1) {
      std::vector<int> word{1, 3};
      for (int i = 4; i <= n; ++i) word.push_back(i);
      GroupElement w2n = sys.from_word(to_indices(word));
      return make_certificate(sys, d, 0,
                              twisted_power(w2n, 1, 2 * n / d));
    }
    int k = d % 2 == 0 ? (2 * n - 2) / d : 2 * ((n - 1) / d);
    GroupElement w = group_power(sys, sys.from_word(type_d_v(n, k * d)), k);
    return make_certificate(sys, d, type_d_J(n, k * d), w);
  }
  throw NotAdmissible("unknown family: " + family);
}

// ------------------------------------------------------------ classification

std::vector<TableRow> classify_good(const CoxeterSystem& sys, int d,
                                    const Limits& limits) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  if (!limits.allow_huge && group_order(sys) > 3000000)
    throw std::runtime_error(
        "group too large for exhaustive classification; "
        "enable the long-running override");
  std::vector<TableRow> rows;
  if (coset_zeta_rank(sys, 1, d) == 0) return rows;
  if (d == 1) {
    TableRow row;
    row.I = 0;
    row.length = 0;
    row.count = 1;
    row.representatives = {"."};
    rows.push_back(row);
    return rows;
  }
  const int N = sys.num_roots();
  const int rank = sys.rank();
  // Subsets grouped by the length of their longest element.
  std::vector<std::vector<Subset>> by_len(N + 1);
  for (Subset I = 0; I < (1u << rank); ++I)
    by_len[sys.longest_length(I)].push_back(I);
  struct Row {
    long long count = 0;
    int length = 0;
    std::set<std::vector<int>> reps;
  };
  std::map<Subset, Row> found;
  // l = 0 would only offer I = S itself, which the eigenvalue filter always
  // removes for d >= 2; skipping it avoids sweeping the whole group.
  for (int l = 1; l <= N && d * l <= 2 * N; ++l) {
    if ((d * l) % 2) continue;
    int target = N - d * l / 2;
    if (by_len[target].empty()) continue;
    sys.ensure_levels(l);
    const std::uint8_t* data = sys.level_data(l);
    const std::size_t count = sys.level_size(l);
    for (std::size_t i = 0; i < count; ++i) {
      GroupElement w = sys.unpack(data + i * static_cast<std::size_t>(N));
      Subset ld = sys.left_descent_set(w);
      std::vector<Subset> candidates;
      for (Subset I : by_len[target]) {
        if (I & ld) continue;
        auto J = left_conjugate_subset(sys, w, 1, I);
        if (J && *J == I) candidates.push_back(I);
      }
      if (candidates.empty()) continue;
      // Power conditions are independent of I.
      bool power_ok = true;
      GroupElement cur = w;
      for (int p = 2; p <= d && power_ok; ++p) {
        cur = sys.mul(cur, sys.apply_automorphism(p - 1, w));
        if (p <= d / 2 && sys.length(cur) != p * l) power_ok = false;
      }
      if (!power_ok || !sys.is_identity(cur)) continue;
      for (Subset I : candidates) {
        if (I != 0 &&
            parabolic_coset_has_eigenvalue(sys, I, w, 1, unit_root(1, d),
                                           limits.max_parabolic, limits.tol))
          continue;
        auto& row = found[I];
        ++row.count;
        row.length = l;
        row.reps.insert(sys.canonical_word(w));
        while (static_cast<int>(row.reps.size()) > limits.representative_limit)
          row.reps.erase(std::prev(row.reps.end()));
      }
    }
  }
  for (const auto& [I, row] : found) {
    TableRow out;
    out.I = I;
    out.length = row.length;
    out.count = row.count;
    for (const auto& wd : row.reps)
      out.representatives.push_back(sys.word_string(wd));
    rows.push_back(out);
  }
  return rows;
}

// --------------------------------------------------------- sections

SectionResult relative_section(const GoodCertificate& cert,
                               std::size_t element_cap) {
  const auto& sys = *cert.sys;
  const int N = sys.num_roots();
  const int e = cert.phi_exp;
  const auto& proots = sys.parabolic_roots(cert.I);
  std::vector<char> in_parab(N, 0);
  for (int r : proots) in_parab[r] = 1;
  SectionResult out;
  sys.ensure_levels(N);
  for (int l = 0; l <= N; ++l) {
    const std::uint8_t* data = sys.level_data(l);
    const std::size_t count = sys.level_size(l);
    for (std::size_t i = 0; i < count; ++i) {
      GroupElement v = sys.unpack(data + i * static_cast<std::size_t>(N));
      if (sys.mul(v, cert.w) !=
          sys.mul(cert.w, sys.apply_automorphism(e, v)))
        continue;
      if (sys.left_descent_set(v) & cert.I) continue;
      bool normalizes = true;
      for (int s : subset_to_list(cert.I)) {
        std::uint16_t r = sys.apply(v, static_cast<std::uint16_t>(s));
        if (!in_parab[r < N ? r : r - N]) {
          normalizes = false;
          break;
        }
      }
      if (!normalizes) continue;
      ++out.order;
      if (out.elements.size() < element_cap)
        out.elements.push_back(v);
      else
        out.elements_complete = false;
    }
  }
  return out;
}

namespace {

// Positive roots orthogonal to the fixed space of w phi on the span of the
// simple roots of I; their reflections generate the comparison subgroup.
std::vector<int> orthogonal_subsystem(const GoodCertificate& cert,
                                      double tol) {
  const auto& sys = *cert.sys;
  if (!sys.has_root_coords())
    throw std::logic_error("no root coordinates for this type");
  std::vector<int> idx = subset_to_list(cert.I);
  const int k = static_cast<int>(idx.size());
  Eigen::MatrixXd M = sys.matrix_of({cert.w, cert.phi_exp});
  Eigen::MatrixXd sub(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub(i, j) = M(idx[i], idx[j]);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      sub - Eigen::MatrixXd::Identity(k, k), Eigen::ComputeFullV);
  std::vector<Eigen::VectorXd> fixed;
  for (int i = 0; i < k; ++i) {
    if (i < svd.singularValues().size() && svd.singularValues()(i) >= tol)
      continue;
    Eigen::VectorXd v = Eigen::VectorXd::Zero(sys.rank());
    for (int j = 0; j < k; ++j) v(idx[j]) = svd.matrixV()(j, i);
    fixed.push_back(v);
  }
  std::vector<int> roots;
  for (int r = 0; r < sys.num_roots(); ++r) {
    Eigen::VectorXd root = sys.root_vector(r);
    bool orth = true;
    for (const auto& v : fixed)
      if (std::abs(root.dot(sys.gram() * v)) > tol) {
        orth = false;
        break;
      }
    if (orth) roots.push_back(r);
  }
  return roots;
}

}  // namespace

std::vector<int> coset_selected_degrees(const CoxeterSystem& sys, int k,
                                        int d) {
  std::vector<int> out;
  for (std::size_t i = 0; i < sys.degrees().size(); ++i) {
    long long di = sys.degrees()[i];
    long long p = sys.factors()[i].num, q = sys.factors()[i].den;
    if (((k * di * q - p * d) % (static_cast<long long>(d) * q)) == 0)
      out.push_back(static_cast<int>(di));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> parabolic_selected_degrees(const GoodCertificate& cert,
                                            double tol) {
  const auto& sys = *cert.sys;
  if (cert.I == 0) return coset_selected_degrees(sys, cert.power, cert.d);
  const int N = sys.num_roots();
  std::vector<int> roots = orthogonal_subsystem(cert, tol);
  std::vector<char> member(N, 0);
  for (int r : roots) member[r] = 1;
  // Simple roots of the subsystem: those whose reflection keeps every other
  // subsystem root positive.
  std::vector<int> simples;
  for (int r : roots) {
    bool simple = true;
    for (int p : roots) {
      if (p == r) continue;
      if (sys.apply(sys.reflection(r), static_cast<std::uint16_t>(p)) >= N) {
        simple = false;
        break;
      }
    }
    if (simple) simples.push_back(r);
  }
  // Degrees from the eigenvalue angles of a Coxeter element of the
  // subsystem: exponent m at angle m/h, degree m + 1; the fixed directions
  // outside the subsystem's span contribute the angle-zero eigenvalues.
  GroupElement cox = sys.identity();
  for (int r : simples) cox = sys.mul(cox, sys.reflection(r));
  int h = 0;
  GroupElement p = sys.identity();
  do {
    p = sys.mul(p, cox);
    ++h;
  } while (!sys.is_identity(p));
  Eigen::EigenSolver<Eigen::MatrixXd> es(sys.matrix_of({cox, 0}));
  std::vector<int> degrees;
  for (int i = 0; i < sys.rank(); ++i) {
    double angle = std::arg(es.eigenvalues()(i)) / (2 * M_PI);
    if (angle < 0) angle += 1.0;
    if (angle < 0.5 / h) continue;
    long long m = std::llround(angle * h);
    degrees.push_back(static_cast<int>(m) + 1);
  }
  if (degrees.size() != simples.size())
    throw std::logic_error("subsystem degree count disagrees with its rank");
  std::vector<int> out;
  for (int D : degrees)
    if ((static_cast<long long>(cert.power) * D) % cert.d == 0)
      out.push_back(D);
  std::sort(out.begin(), out.end());
  return out;
}

SectionComparison section_mismatch(const GoodCertificate& cert, double tol) {
  const auto& sys = *cert.sys;
  SectionComparison out;
  out.section_order = relative_section(cert).order;
  out.coset_degrees = coset_selected_degrees(sys, cert.power, cert.d);
  out.parabolic_degrees = parabolic_selected_degrees(cert, tol);
  if (cert.I == 0) {
    out.parabolic_order = out.section_order;
    out.mismatch = false;
    return out;
  }
  const int e = cert.phi_exp;
  std::vector<GroupElement> gens;
  for (int r : orthogonal_subsystem(cert, tol))
    gens.push_back(sys.reflection(r));
  auto key = [&](const GroupElement& w) {
    return std::string(reinterpret_cast<const char*>(w.img.data()),
                       w.img.size() * 2);
  };
  std::unordered_set<std::string> seen;
  std::vector<GroupElement> frontier{sys.identity()};
  seen.insert(key(frontier[0]));
  long long commuting = 0;
  while (!frontier.empty()) {
    GroupElement x = std::move(frontier.back());
    frontier.pop_back();
    if (sys.mul(x, cert.w) == sys.mul(cert.w, sys.apply_automorphism(e, x)))
      ++commuting;
    for (const auto& g : gens) {
      GroupElement y = sys.mul(x, g);
      if (seen.insert(key(y)).second) frontier.push_back(y);
    }
  }
  out.parabolic_order = commuting;
  out.mismatch = commuting != out.section_order ||
                 out.coset_degrees != out.parabolic_degrees;
  return out;
}

GoodCertificate construct_for_power(int k, int d, const GoodCertificate& base) {
  if (base.power != 1 || base.d != d)
    throw std::invalid_argument("base must be an exact d-th root");
  if (k < 1 || 2 * k > d || positive_gcd(k, d) != 1)
    throw std::invalid_argument("power parameters are inconsistent");
  if (k == 1) return base;
  const auto& sys = *base.sys;
  int kprime = 1;
  while ((k * kprime) % d != 1) ++kprime;
  GroupElement w = twisted_power(base.w, base.phi_exp * kprime, k);
  return make_certificate(sys, d, base.I, w, base.phi_exp, k);
}

// ---------------------------------------------- restriction of scalars

namespace {

// Block tuples under sigma(x_0,...,x_{n-1}) = (x_1,...,x_{n-1}, phi(x_0)).
std::vector<GroupElement> sigma_shift(const CoxeterSystem& sys,
                                      const std::vector<GroupElement>& x,
                                      int steps) {
  const int n = static_cast<int>(x.size());
  std::vector<GroupElement> out(n);
  for (int j = 0; j < n; ++j) {
    int src = j + steps;
    out[j] = sys.apply_automorphism(src / n, x[src % n]);
  }
  return out;
}

std::vector<GroupElement> tuple_mul(const CoxeterSystem& sys,
                                    const std::vector<GroupElement>& a,
                                    const std::vector<GroupElement>& b) {
  std::vector<GroupElement> out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = sys.mul(a[j], b[j]);
  return out;
}

}  // namespace

BlockCertificate restriction_of_scalars(const CoxeterSystem& sys, int n,
                                        int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("bad block parameters");
  BlockCertificate out;
  out.sys = &sys;
  out.n = n;
  out.d = d;
  out.k = positive_gcd(n, d);
  const int dprime = d / out.k, nprime = n / out.k;
  const int delta = sys.twist_order();
  int m = 0;
  for (int c = 1; c <= dprime * delta + 1 && m == 0; ++c)
    if ((c * nprime) % dprime == 1 % dprime && positive_gcd(c, delta) == 1)
      m = c;
  if (m == 0) throw std::logic_error("no valid twist exponent");
  out.m = m;
  if (delta > 1 && m % delta != 1 % delta)
    throw NotAdmissible("no base root available for this twisted coset");
  // A (d/k)-th root of the base coset.
  if (dprime == 1) {
    out.base = make_certificate(sys, 1, 0, sys.identity(), m);
  } else {
    auto table = classify_good(sys, dprime);
    if (table.empty()) throw NotAdmissible("base coset has no such root");
    GroupElement v =
        sys.from_word(sys.parse_word(table.front().representatives.front()));
    out.base = make_certificate(sys, dprime, table.front().I, v, m);
  }
  const GroupElement& v = out.base.w;
  const Subset I = out.base.I;
  // Assemble the blocks.
  out.w.assign(n, sys.identity());
  if (out.k == 1 || dprime % 2 == 0) {
    for (int i = 0; i < nprime; ++i)
      out.w[i * out.k] = sys.apply_automorphism(i * m, v);
  } else {
    const int dh = (dprime - 1) / 2;
    GroupElement w0 = sys.longest_element(full_subset(sys));
    GroupElement wI = sys.longest_element(I);
    GroupElement P = twisted_power(v, m, dh);
    GroupElement v1 = sys.apply_automorphism(
        -m * dh, sys.mul(sys.inv(P), sys.mul(sys.inv(wI), w0)));
    GroupElement v2 =
        sys.apply_automorphism(-m, sys.mul(sys.inv(v1), v));
    for (int i = 0; i < nprime; ++i) {
      out.w[i * out.k] = sys.apply_automorphism(i * m, v2);
      out.w[i * out.k + out.k / 2] = sys.apply_automorphism((i + 1) * m, v1);
    }
  }
  // Subsets: I_j is the left conjugate of I by w_j ... w_{n-1} phi.
  out.I.assign(n, 0);
  GroupElement suffix = sys.identity();
  std::vector<GroupElement> suffixes(n);
  for (int j = n - 1; j >= 0; --j) {
    suffix = sys.mul(out.w[j], suffix);
    suffixes[j] = suffix;
  }
  for (int j = 0; j < n; ++j) {
    auto J = left_conjugate_subset(sys, suffixes[j], 1, I);
    if (!J) throw NotGood("block subset leaves S");
    out.I[j] = *J;
  }
  // Re-verify: stabilization and reducedness.
  bool ok = true;
  for (int j = 0; j < n && ok; ++j) {
    Subset next = j + 1 < n ? out.I[j + 1] : 0;
    std::optional<Subset> J =
        j + 1 < n ? left_conjugate_subset(sys, out.w[j], 0, next)
                  : left_conjugate_subset(sys, out.w[j], 1, out.I[0]);
    ok = J && *J == out.I[j];
    ok = ok && !(sys.left_descent_set(out.w[j]) & out.I[j]);
  }
  // Length law and power law over the block twisted powers.
  const int N = sys.num_roots();
  int lw = 0, lI_total = 0;
  for (int j = 0; j < n; ++j) {
    lw += sys.length(out.w[j]);
    lI_total += sys.longest_length(out.I[j]);
  }
  ok = ok && lw * d == 2 * (n * N - lI_total);
  std::vector<GroupElement> cur(n, sys.identity());
  for (int i = 1; i <= d && ok; ++i) {
    cur = tuple_mul(sys, cur, sigma_shift(sys, out.w, i - 1));
    if (i <= d / 2) {
      int li = 0;
      for (const auto& x : cur) li += sys.length(x);
      ok = ok && li == i * lw;
    }
    if (i == d)
      for (const auto& x : cur) ok = ok && sys.is_identity(x);
  }
  // Blockwise braid identity: the d-th sigma-twisted power of the lifts
  // equals pi/pi_{I_j} in every block.
  if (ok) {
    std::vector<BraidElement> bcur(n, braid::identity(sys));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < n; ++j) {
        int src = j + i;
        bcur[j] = braid::product(
            bcur[j],
            braid::apply_phi(src / n, braid::lift(out.w[src % n])));
      }
    for (int j = 0; j < n; ++j)
      ok = ok && bcur[j] == central_quotient(sys, out.I[j]);
  }
  out.verified = ok;
  if (!ok) throw NotGood("block certificate verification");
  return out;
}

int block_zeta_rank(const CoxeterSystem& sys,
                    const std::vector<GroupElement>& w, int k, int d,
                    double tol) {
  const int n = static_cast<int>(w.size());
  const int r = sys.rank();
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n * r, n * r);
  for (int j = 0; j < n; ++j) {
    Eigen::MatrixXd blk = sys.matrix_of({w[j], j == n - 1 ? 1 : 0});
    M.block(j * r, ((j + 1) % n) * r, r, r) = blk;
  }
  return eigen_multiplicity(M, unit_root(k, d), tol);
}

int block_coset_zeta_rank(const CoxeterSystem& sys, int n, int k, int d) {
  int count = 0;
  for (std::size_t i = 0; i < sys.degrees().size(); ++i) {
    long long di = sys.degrees()[i];
    long long p = sys.factors()[i].num, q = sys.factors()[i].den;
    long long mod = static_cast<long long>(d) * q;
    long long lhs =
        ((static_cast<long long>(k) * n * di * q - p * d) % mod + mod) % mod;
    if (lhs == 0) ++count;
  }
  return count;
}

}  // namespace periodic
}  // namespace garside
