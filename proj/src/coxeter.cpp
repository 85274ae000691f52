// Construction of finite Coxeter systems (root systems over exact
// coefficients, reflection tables, diagram automorphisms, degree data) and
// the element-level operations declared in coxeter.hpp.
#include "garside/coxeter.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstring>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace garside {

namespace {

constexpr double kPi = 3.14159265358979323846;

int g_threads = 1;

struct ByteHash {
  std::size_t operator()(const std::string& s) const {
    // FNV-1a
    std::size_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

}  // namespace

void set_thread_count(int n) { g_threads = std::max(1, n); }
int thread_count() { return g_threads; }

// ---------------------------------------------------------------- subsets

std::vector<int> subset_to_list(Subset I) {
  std::vector<int> v;
  for (int s = 0; s < 32; ++s)
    if (I >> s & 1u) v.push_back(s);
  return v;
}

Subset subset_from_list(const std::vector<int>& v) {
  Subset I = 0;
  for (int s : v) I |= 1u << s;
  return I;
}

std::string subset_to_string(Subset I) {
  std::string out = "[";
  bool first = true;
  for (int s : subset_to_list(I)) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(s + 1);
  }
  return out + "]";
}

// ---------------------------------------------------------------- Zt

int Zt::sign() const {
  // value = (s + b sqrt5)/2 with s = 2a + b.
  long long s = 2 * a + b;
  if (b == 0) return s > 0 ? 1 : (s < 0 ? -1 : 0);
  if (b > 0) {
    if (s >= 0) return (s == 0 && b == 0) ? 0 : 1;
    return 5 * b * b > s * s ? 1 : (5 * b * b == s * s ? 0 : -1);
  }
  if (s <= 0) return (s == 0 && b == 0) ? 0 : -1;
  return s * s > 5 * b * b ? 1 : (s * s == 5 * b * b ? 0 : -1);
}

double Zt::value() const { return a + b * (1.0 + std::sqrt(5.0)) / 2.0; }

// ---------------------------------------------------------------- build

namespace {

struct TypeData {
  char letter;
  int rank;
  int twist;
  int dihedral_m = 0;
};

TypeData parse_descriptor(const std::string& d) {
  TypeData t{};
  std::size_t pos = 0;
  t.twist = 1;
  if (pos < d.size() && std::isdigit(static_cast<unsigned char>(d[pos]))) {
    t.twist = d[pos] - '0';
    ++pos;
  }
  if (pos >= d.size() || !std::isalpha(static_cast<unsigned char>(d[pos])))
    throw std::invalid_argument("bad type descriptor: " + d);
  t.letter = static_cast<char>(std::toupper(d[pos]));
  ++pos;
  if (t.letter == 'I') {
    // I2(m)
    if (d.substr(pos, 2) != "2(" || d.back() != ')')
      throw std::invalid_argument("bad dihedral descriptor: " + d);
    t.rank = 2;
    t.dihedral_m = std::stoi(d.substr(pos + 2, d.size() - pos - 3));
    if (t.dihedral_m < 3 || t.dihedral_m > 10000)
      throw std::invalid_argument("dihedral order out of range: " + d);
    return t;
  }
  if (pos >= d.size())
    throw std::invalid_argument("missing rank in descriptor: " + d);
  t.rank = std::stoi(d.substr(pos));
  return t;
}

}  // namespace

std::unique_ptr<CoxeterSystem> CoxeterSystem::build(
    const std::string& descriptor) {
  TypeData td = parse_descriptor(descriptor);
  std::unique_ptr<CoxeterSystem> sys_ptr(new CoxeterSystem);
  CoxeterSystem& sys = *sys_ptr;
  sys.descriptor_ = descriptor;
  sys.letter_ = td.letter;
  sys.rank_ = td.rank;
  sys.twist_order_ = td.twist;
  sys.dihedral_m_ = td.dihedral_m;
  const int n = td.rank;

  // Coxeter matrix and Cartan matrix (for the linear realization), following
  // the diagram conventions used throughout: A chain 1..n; B with the special
  // bond 1=4=2 and alpha_1 short; D with ends 1,2 on node 3; E with node 2
  // attached to node 4 of the chain 1,3,4,..; F4 1-2=3-4 with 1,2 long;
  // G2 bond of order 6; H with the bond 1=5=2.
  auto make_m = [&](int r) {
    std::vector<std::vector<int>> m(r, std::vector<int>(r, 2));
    for (int i = 0; i < r; ++i) m[i][i] = 1;
    return m;
  };
  auto bond = [&](std::vector<std::vector<int>>& m, int i, int j, int v) {
    m[i - 1][j - 1] = m[j - 1][i - 1] = v;
  };

  std::vector<std::vector<int>> m;
  std::vector<std::vector<Zt>> cartan;
  auto cartan_from = [&](const std::vector<double>& len2) {
    // a_{ij} = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i); for the types here
    // all entries lie in Z or Z[tau].
    cartan.assign(n, std::vector<Zt>(n, Zt(0)));
    sys.simple_len2_ = len2;
    for (int i = 0; i < n; ++i) {
      cartan[i][i] = Zt(2);
      for (int j = 0; j < n; ++j) {
        if (i == j || m[i][j] == 2) continue;
        if (m[i][j] == 3) {
          cartan[i][j] = Zt(-1);
        } else if (m[i][j] == 4 || m[i][j] == 6) {
          // (alpha_i, alpha_j) = -sqrt(len2_i len2_j) cos(pi/m); the Cartan
          // entries are -1 on the long-root side and -(m/2) on the short side.
          cartan[i][j] = len2[i] > len2[j] ? Zt(-1) : Zt(-(m[i][j] / 2));
        } else if (m[i][j] == 5) {
          cartan[i][j] = Zt(0, -1);  // -tau = -2cos(pi/5)
        } else {
          throw std::invalid_argument("unsupported bond order");
        }
      }
    }
  };

  switch (td.letter) {
    case 'A': {
      if (n < 1) throw std::invalid_argument("rank out of range: " + descriptor);
      m = make_m(n);
      for (int i = 1; i < n; ++i) bond(m, i, i + 1, 3);
      cartan_from(std::vector<double>(n, 2.0));
      break;
    }
    case 'B': {
      if (n < 2) throw std::invalid_argument("rank out of range: " + descriptor);
      m = make_m(n);
      bond(m, 1, 2, 4);
      for (int i = 2; i < n; ++i) bond(m, i, i + 1, 3);
      std::vector<double> len2(n, 2.0);
      len2[0] = 1.0;  // alpha_1 = e_1 short
      cartan_from(len2);
      break;
    }
    case 'D': {
      if (n < 3) throw std::invalid_argument("rank out of range: " + descriptor);
      m = make_m(n);
      bond(m, 1, 3, 3);
      bond(m, 2, 3, 3);
      for (int i = 3; i < n; ++i) bond(m, i, i + 1, 3);
      cartan_from(std::vector<double>(n, 2.0));
      break;
    }
    case 'E': {
      if (n < 6 || n > 8)
        throw std::invalid_argument("rank out of range: " + descriptor);
      m = make_m(n);
      bond(m, 1, 3, 3);
      bond(m, 3, 4, 3);
      bond(m, 2, 4, 3);
      for (int i = 4; i < n; ++i) bond(m, i, i + 1, 3);
      cartan_from(std::vector<double>(n, 2.0));
      break;
    }
    case 'F': {
      if (n != 4) throw std::invalid_argument("rank out of range: " + descriptor);
      m = make_m(4);
      bond(m, 1, 2, 3);
      bond(m, 2, 3, 4);
      bond(m, 3, 4, 3);
      cartan_from({2.0, 2.0, 1.0, 1.0});
      break;
    }
    case 'G': {
      if (n != 2) throw std::invalid_argument("rank out of range: " + descriptor);
      m = make_m(2);
      bond(m, 1, 2, 6);
      cartan_from({3.0, 1.0});
      break;
    }
    case 'H': {
      if (n < 3 || n > 4)
        throw std::invalid_argument("rank out of range: " + descriptor);
      m = make_m(n);
      bond(m, 1, 2, 5);
      for (int i = 2; i < n; ++i) bond(m, i, i + 1, 3);
      cartan_from(std::vector<double>(n, 1.0));
      break;
    }
    case 'I': {
      m = make_m(2);
      bond(m, 1, 2, td.dihedral_m);
      break;
    }
    default:
      throw std::invalid_argument("unknown type letter: " + descriptor);
  }
  sys.cox_m_ = m;

  // Diagram automorphism.
  sys.sigma_.resize(n);
  for (int i = 0; i < n; ++i) sys.sigma_[i] = i;
  if (td.twist > 1) {
    auto set_cycle = [&](std::vector<std::pair<int, int>> moves) {
      for (auto [a, b] : moves) sys.sigma_[a - 1] = b - 1;
    };
    bool ok = true;
    if (td.twist == 2 && td.letter == 'A' && n >= 2) {
      for (int i = 0; i < n; ++i) sys.sigma_[i] = n - 1 - i;
    } else if (td.twist == 2 && td.letter == 'D') {
      set_cycle({{1, 2}, {2, 1}});
    } else if (td.twist == 3 && td.letter == 'D' && n == 4) {
      set_cycle({{1, 2}, {2, 4}, {4, 1}});
    } else if (td.twist == 2 && td.letter == 'E' && n == 6) {
      set_cycle({{1, 6}, {6, 1}, {3, 5}, {5, 3}});
    } else if (td.twist == 2 && td.letter == 'F') {
      set_cycle({{1, 4}, {4, 1}, {2, 3}, {3, 2}});
    } else if (td.twist == 2 &&
               (td.letter == 'G' || td.letter == 'I' ||
                (td.letter == 'B' && n == 2))) {
      set_cycle({{1, 2}, {2, 1}});
    } else {
      ok = false;
    }
    if (!ok) throw std::invalid_argument("invalid twist: " + descriptor);
    // Check sigma is an automorphism of the diagram.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (m[sys.sigma_[i]][sys.sigma_[j]] != m[i][j])
          throw std::invalid_argument("invalid twist: " + descriptor);
  }

  if (td.letter == 'I')
    sys.build_dihedral(td.dihedral_m);
  else
    sys.build_linear(cartan);
  sys.finish_build();
  return sys_ptr;
}

void CoxeterSystem::build_linear(const std::vector<std::vector<Zt>>& cartan) {
  const int n = rank_;
  // BFS over positive roots, expressed in the simple-root basis.
  std::map<std::vector<Zt>, int> index;
  std::vector<std::vector<Zt>> roots;
  root_parent_.clear();
  for (int i = 0; i < n; ++i) {
    std::vector<Zt> e(n, Zt(0));
    e[i] = Zt(1);
    index[e] = i;
    roots.push_back(e);
    root_parent_.emplace_back(-1, -1);
  }
  auto reflect = [&](int s, std::vector<Zt> c) {
    Zt acc(0);
    for (int j = 0; j < n; ++j) acc = acc + cartan[s][j] * c[j];
    c[s] = c[s] - acc;
    return c;
  };
  for (std::size_t q = 0; q < roots.size(); ++q) {
    for (int s = 0; s < n; ++s) {
      auto r = reflect(s, roots[q]);
      // The image of a positive root is negative only for the simple root of
      // the applied generator itself.
      bool neg = true;
      for (auto& c : r)
        if (c.sign() > 0) {
          neg = false;
          break;
        }
      if (neg) continue;
      if (!index.count(r)) {
        index[r] = static_cast<int>(roots.size());
        roots.push_back(r);
        root_parent_.emplace_back(s, static_cast<int>(q));
      }
    }
  }
  nroots_ = static_cast<int>(roots.size());
  if (nroots_ > 254)
    throw std::invalid_argument("root system too large for packed storage");
  root_coords_ = roots;

  gens_.assign(n, GroupElement{});
  for (int s = 0; s < n; ++s) {
    gens_[s].sys = this;
    gens_[s].img.resize(nroots_);
    for (int r = 0; r < nroots_; ++r) {
      if (r == s) {
        gens_[s].img[r] = static_cast<std::uint16_t>(s + nroots_);
        continue;
      }
      auto im = reflect(s, roots[r]);
      auto it = index.find(im);
      if (it == index.end())
        throw std::logic_error("root reflection left the root system");
      gens_[s].img[r] = static_cast<std::uint16_t>(it->second);
    }
  }
}

namespace {

// Dihedral roots carry two indexings. The "angular" one (0..m-1 in rotation
// order, alpha_1 = 0, alpha_2 = m-1) gives closed-form reflection tables:
// s1: k -> m-k (mod 2m), s2: k -> 3m-2-k (mod 2m), and the reflection in
// root k is j -> 2k-j (mod 2m). The stored indexing must place alpha_s at
// index s, so roots are relabeled: 0 -> 0, m-1 -> 1, k -> k+1 otherwise.
int dihedral_stored(int m, int angular) {
  return angular == 0 ? 0 : (angular == m - 1 ? 1 : angular + 1);
}
int dihedral_angular(int m, int stored) {
  return stored == 0 ? 0 : (stored == 1 ? m - 1 : stored - 1);
}
// Apply an angular signed map to a stored signed index.
std::uint16_t dihedral_map(int m, int stored_signed,
                           int (*f)(int, int, int), int param) {
  bool neg = stored_signed >= m;
  int ang = dihedral_angular(m, neg ? stored_signed - m : stored_signed);
  int img = f(m, param, ang);  // signed angular: >= m means negative
  if (img >= m) {
    neg = !neg;
    img -= m;
  }
  int out = dihedral_stored(m, img);
  return static_cast<std::uint16_t>(neg ? out + m : out);
}

int dihedral_gen(int m, int s, int k) {
  return s == 0 ? (m - k) % (2 * m) : (3 * m - 2 - k) % (2 * m);
}
int dihedral_refl(int m, int k, int j) {
  return ((2 * k - j + m) % (2 * m) + 2 * m) % (2 * m);
}
int dihedral_rev(int m, int, int k) { return m - 1 - k; }

}  // namespace

void CoxeterSystem::build_dihedral(int mm) {
  nroots_ = mm;
  if (nroots_ > 254)
    throw std::invalid_argument("dihedral order too large for packed storage");
  gens_.assign(2, GroupElement{});
  for (int s = 0; s < 2; ++s) {
    gens_[s].sys = this;
    gens_[s].img.resize(mm);
    for (int k = 0; k < mm; ++k)
      gens_[s].img[k] = dihedral_map(mm, k, &dihedral_gen, s);
  }
  simple_len2_ = {1.0, 1.0};
}

void CoxeterSystem::finish_build() {
  const int n = rank_;
  // phi as a signed root permutation, by propagation from the simple roots.
  phi_perms_.clear();
  phi_perm_invs_.clear();
  GroupElement id;
  id.sys = this;
  id.img.resize(nroots_);
  for (int r = 0; r < nroots_; ++r) id.img[r] = static_cast<std::uint16_t>(r);
  phi_perms_.push_back(id);
  phi_perm_invs_.push_back(id);
  if (twist_order_ > 1) {
    GroupElement p;
    p.sys = this;
    p.img.assign(nroots_, 0);
    if (dihedral_m_ > 0) {
      // For I2(m) the swap of the two simple roots reverses the angular order.
      for (int k = 0; k < nroots_; ++k)
        p.img[k] = dihedral_map(nroots_, k, &dihedral_rev, 0);
    } else {
      std::vector<bool> done(nroots_, false);
      for (int s = 0; s < n; ++s) {
        p.img[s] = static_cast<std::uint16_t>(sigma_[s]);
        done[s] = true;
      }
      // Roots are stored in BFS order, so parents precede children.
      for (int r = n; r < nroots_; ++r) {
        auto [s, parent] = root_parent_[r];
        p.img[r] = apply(gens_[sigma_[s]], p.img[parent]);
        done[r] = true;
      }
      for (int r = 0; r < nroots_; ++r)
        if (!done[r]) throw std::logic_error("phi propagation incomplete");
    }
    GroupElement cur = p;
    for (int k = 1; k < twist_order_; ++k) {
      phi_perms_.push_back(cur);
      phi_perm_invs_.push_back(inv(cur));
      cur = mul(p, cur);
    }
    if (!(cur == id)) throw std::logic_error("phi does not have stated order");
  }

  // Degrees and factors.
  auto deg = [&](std::initializer_list<int> ds) {
    degrees_.assign(ds);
    factors_.assign(degrees_.size(), Unity{0, 1});
  };
  const Unity one{0, 1}, minus{1, 2}, z3{1, 3}, z3sq{2, 3};
  switch (letter_) {
    case 'A':
      degrees_.clear();
      for (int i = 2; i <= n + 1; ++i) degrees_.push_back(i);
      factors_.assign(degrees_.size(), one);
      if (twist_order_ == 2)
        for (std::size_t i = 0; i < degrees_.size(); ++i)
          factors_[i] = degrees_[i] % 2 ? minus : one;
      break;
    case 'B':
      degrees_.clear();
      for (int i = 1; i <= n; ++i) degrees_.push_back(2 * i);
      factors_.assign(degrees_.size(), one);
      if (twist_order_ == 2) factors_ = {one, minus};  // only 2B2
      break;
    case 'D':
      degrees_.clear();
      for (int i = 1; i < n; ++i) degrees_.push_back(2 * i);
      degrees_.push_back(n);  // kept last so its factor is identifiable
      factors_.assign(degrees_.size(), one);
      if (twist_order_ == 2) factors_.back() = minus;
      // The triality swaps the two degree-4 invariants, so they carry the
      // primitive cube roots; stored degree order is 2,4,6,4.
      if (twist_order_ == 3) factors_ = {one, z3, one, z3sq};
      break;
    case 'E':
      if (n == 6) deg({2, 5, 6, 8, 9, 12});
      if (n == 7) deg({2, 6, 8, 10, 12, 14, 18});
      if (n == 8) deg({2, 8, 12, 14, 18, 20, 24, 30});
      if (twist_order_ == 2) factors_ = {one, minus, one, one, minus, one};
      break;
    case 'F':
      deg({2, 6, 8, 12});
      if (twist_order_ == 2) factors_ = {one, minus, one, minus};
      break;
    case 'G':
      deg({2, 6});
      if (twist_order_ == 2) factors_ = {one, minus};
      break;
    case 'H':
      if (n == 3) deg({2, 6, 10});
      if (n == 4) deg({2, 12, 20, 30});
      break;
    case 'I':
      deg({2, dihedral_m_});
      if (twist_order_ == 2) factors_ = {one, minus};
      break;
  }
  codegrees_.clear();
  cofactors_.clear();
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    codegrees_.push_back(degrees_[i] - 2);
    cofactors_.push_back(
        Unity{(factors_[i].den - factors_[i].num) % factors_[i].den,
              factors_[i].den});
  }

  // Reflection representation in the unit simple-root basis.
  gram_.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      gram_(i, j) = i == j ? 1.0 : -std::cos(kPi / cox_m_[i][j]);
  gen_matrices_.clear();
  for (int s = 0; s < n; ++s) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Identity(n, n);
    for (int j = 0; j < n; ++j) g(s, j) -= 2.0 * gram_(s, j);
    gen_matrices_.push_back(g);
  }
  phi_matrix_ = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) phi_matrix_(sigma_[i], i) = 1.0;

  // Sanity: the longest element negates every positive root.
  GroupElement w0 = longest_element((1u << n) - 1);
  if (length(w0) != nroots_)
    throw std::logic_error("root count does not match l(w0)");
}

// ---------------------------------------------------------------- elements

GroupElement CoxeterSystem::identity() const {
  GroupElement e;
  e.sys = this;
  e.img.resize(nroots_);
  for (int r = 0; r < nroots_; ++r) e.img[r] = static_cast<std::uint16_t>(r);
  return e;
}

std::uint16_t CoxeterSystem::apply(const GroupElement& a,
                                   std::uint16_t k) const {
  return k < nroots_ ? a.img[k] : flip(a.img[k - nroots_]);
}

GroupElement CoxeterSystem::mul(const GroupElement& a,
                                const GroupElement& b) const {
  GroupElement r;
  r.sys = this;
  r.img.resize(nroots_);
  for (int i = 0; i < nroots_; ++i) r.img[i] = apply(a, b.img[i]);
  return r;
}

GroupElement CoxeterSystem::inv(const GroupElement& a) const {
  GroupElement r;
  r.sys = this;
  r.img.resize(nroots_);
  for (int i = 0; i < nroots_; ++i) {
    std::uint16_t v = a.img[i];
    if (v < nroots_)
      r.img[v] = static_cast<std::uint16_t>(i);
    else
      r.img[v - nroots_] = static_cast<std::uint16_t>(i + nroots_);
  }
  return r;
}

int CoxeterSystem::length(const GroupElement& w) const {
  int l = 0;
  for (int i = 0; i < nroots_; ++i)
    if (w.img[i] >= nroots_) ++l;
  return l;
}

bool CoxeterSystem::is_identity(const GroupElement& w) const {
  for (int i = 0; i < nroots_; ++i)
    if (w.img[i] != i) return false;
  return true;
}

Subset CoxeterSystem::right_descent_set(const GroupElement& w) const {
  Subset d = 0;
  for (int s = 0; s < rank_; ++s)
    if (w.img[s] >= nroots_) d |= 1u << s;
  return d;
}

Subset CoxeterSystem::left_descent_set(const GroupElement& w) const {
  Subset d = 0;
  for (int i = 0; i < nroots_; ++i) {
    int v = w.img[i];
    if (v >= nroots_ && v - nroots_ < rank_) d |= 1u << (v - nroots_);
  }
  return d;
}

GroupElement CoxeterSystem::longest_element(Subset I) const {
  GroupElement w = identity();
  for (;;) {
    int s = -1;
    for (int t = 0; t < rank_; ++t)
      if ((I >> t & 1u) && w.img[t] < nroots_) {
        s = t;
        break;
      }
    if (s < 0) break;
    w = mul(w, gens_[s]);
  }
  return w;
}

int CoxeterSystem::longest_length(Subset I) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = longest_len_cache_.find(I);
    if (it != longest_len_cache_.end()) return it->second;
  }
  int l = length(longest_element(I));
  std::lock_guard<std::mutex> lock(cache_mutex_);
  longest_len_cache_[I] = l;
  return l;
}

std::pair<GroupElement, GroupElement> CoxeterSystem::coset_decompose(
    const GroupElement& w, Subset I, bool left) const {
  if (left) {
    GroupElement u = w, v = identity(), uinv = inv(w);
    for (;;) {
      int s = -1;
      for (int t = 0; t < rank_; ++t)
        if ((I >> t & 1u) && uinv.img[t] >= nroots_) {
          s = t;
          break;
        }
      if (s < 0) break;
      v = mul(v, gens_[s]);
      u = mul(gens_[s], u);
      uinv = mul(uinv, gens_[s]);
    }
    return {v, u};
  }
  GroupElement u = w, v = identity();
  for (;;) {
    int s = -1;
    for (int t = 0; t < rank_; ++t)
      if ((I >> t & 1u) && u.img[t] >= nroots_) {
        s = t;
        break;
      }
    if (s < 0) break;
    v = mul(gens_[s], v);
    u = mul(u, gens_[s]);
  }
  return {v, u};
}

GroupElement CoxeterSystem::from_word(const std::vector<int>& word) const {
  GroupElement w = identity();
  for (int s : word) {
    if (s < 0 || s >= rank_)
      throw std::out_of_range("generator index out of range");
    w = mul(w, gens_[s]);
  }
  return w;
}

std::vector<int> CoxeterSystem::canonical_word(const GroupElement& w) const {
  std::vector<int> word;
  GroupElement u = w, uinv = inv(w);
  for (;;) {
    int s = -1;
    for (int t = 0; t < rank_; ++t)
      if (uinv.img[t] >= nroots_) {
        s = t;
        break;
      }
    if (s < 0) break;
    word.push_back(s);
    u = mul(gens_[s], u);
    uinv = mul(uinv, gens_[s]);
  }
  return word;
}

std::string CoxeterSystem::word_string(const std::vector<int>& word) const {
  if (word.empty()) return ".";
  std::string out;
  bool digits = rank_ <= 9;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!digits && i) out += ".";
    out += std::to_string(word[i] + 1);
  }
  return out;
}

std::vector<int> CoxeterSystem::parse_word(const std::string& text) const {
  std::vector<int> word;
  if (text == "." || text.empty()) return word;
  if (text.find('.') == std::string::npos && rank_ <= 9) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("bad word: " + text);
      word.push_back(c - '1');
    }
  } else {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, '.')) word.push_back(std::stoi(tok) - 1);
  }
  for (int s : word)
    if (s < 0 || s >= rank_) throw std::invalid_argument("bad word: " + text);
  return word;
}

std::string CoxeterSystem::element_string(const GroupElement& w) const {
  return word_string(canonical_word(w));
}

// ---------------------------------------------------------------- phi

int CoxeterSystem::phi_on_generator(int k, int s) const {
  k = ((k % twist_order_) + twist_order_) % twist_order_;
  int t = s;
  for (int i = 0; i < k; ++i) t = sigma_[t];
  return t;
}

Subset CoxeterSystem::phi_on_subset(int k, Subset I) const {
  Subset J = 0;
  for (int s : subset_to_list(I)) J |= 1u << phi_on_generator(k, s);
  return J;
}

const GroupElement& CoxeterSystem::phi_perm(int k) const {
  k = ((k % twist_order_) + twist_order_) % twist_order_;
  return phi_perms_[k];
}

GroupElement CoxeterSystem::apply_automorphism(int k,
                                               const GroupElement& w) const {
  k = ((k % twist_order_) + twist_order_) % twist_order_;
  if (k == 0) return w;
  return mul(phi_perms_[k], mul(w, phi_perm_invs_[k]));
}

std::optional<int> CoxeterSystem::left_conj_generator(const GroupElement& w,
                                                      int k, int s) const {
  // ^{w phi^k}(s) is the reflection in the root (w phi^k)(alpha_s).
  std::uint16_t r = apply(w, phi_perm(k).img[s]);
  int t = r < nroots_ ? r : r - nroots_;
  if (t >= rank_) return std::nullopt;
  return t;
}

std::optional<Subset> CoxeterSystem::conjugate_subset(const GroupElement& w,
                                                      int k, Subset I) const {
  // I^{w phi^k}: reflection roots (w phi^k)^{-1}(alpha_s).
  GroupElement x = mul(w, phi_perm(k));
  GroupElement xi = inv(x);
  Subset J = 0;
  for (int s : subset_to_list(I)) {
    std::uint16_t r = xi.img[s];
    int t = r < nroots_ ? r : r - nroots_;
    if (t >= rank_) return std::nullopt;
    J |= 1u << t;
  }
  return J;
}

// ---------------------------------------------------------------- matrices

Eigen::MatrixXd CoxeterSystem::matrix_of(const TwistedElement& x) const {
  Eigen::MatrixXd M = Eigen::MatrixXd::Identity(rank_, rank_);
  for (int s : canonical_word(x.w)) M = M * gen_matrices_[s];
  int k = ((x.twist % twist_order_) + twist_order_) % twist_order_;
  for (int i = 0; i < k; ++i) M = M * phi_matrix_;
  return M;
}

Eigen::VectorXd CoxeterSystem::root_vector(int r) const {
  if (!has_root_coords()) throw std::logic_error("no root coordinates");
  Eigen::VectorXd v(rank_);
  for (int i = 0; i < rank_; ++i)
    v(i) = root_coords_[r][i].value() * std::sqrt(simple_len2_[i]);
  return v;
}

const GroupElement& CoxeterSystem::reflection(int r) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (reflections_.empty()) {
      reflections_.resize(nroots_);
      for (int i = 0; i < rank_; ++i) reflections_[i] = gens_[i];
      if (dihedral_m_ > 0) {
        for (int k = 0; k < nroots_; ++k) {
          GroupElement t;
          t.sys = this;
          t.img.resize(nroots_);
          int ang = dihedral_angular(nroots_, k);
          for (int j = 0; j < nroots_; ++j)
            t.img[j] = dihedral_map(nroots_, j, &dihedral_refl, ang);
          reflections_[k] = t;
        }
      } else {
        for (int r2 = rank_; r2 < nroots_; ++r2) {
          auto [s, parent] = root_parent_[r2];
          reflections_[r2] =
              mul(gens_[s], mul(reflections_[parent], gens_[s]));
        }
      }
    }
  }
  return reflections_[r];
}

// ---------------------------------------------------------------- levels

void CoxeterSystem::ensure_levels(int max_len) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  max_len = std::min(max_len, nroots_);
  if (levels_.empty()) {
    levels_.resize(nroots_ + 1);
    levels_[0].resize(nroots_);
    for (int r = 0; r < nroots_; ++r)
      levels_[0][r] = static_cast<std::uint8_t>(r);
  }
  // Find the first level not yet built.
  int have = 0;
  while (have + 1 <= max_len && !levels_[have + 1].empty()) ++have;
  const int N = nroots_;
  for (int l = have; l < max_len; ++l) {
    const auto& cur = levels_[l];
    std::size_t cnt = cur.size() / N;
    std::unordered_set<std::string, ByteHash> next;
    next.reserve(cnt * 2);
    std::string buf(N, '\0');
    for (std::size_t i = 0; i < cnt; ++i) {
      const std::uint8_t* w = cur.data() + i * N;
      for (int s = 0; s < rank_; ++s) {
        if (w[s] >= N) continue;  // would shorten
        const auto& gs = gens_[s].img;
        for (int r = 0; r < N; ++r) {
          std::uint16_t g = gs[r];
          buf[r] = static_cast<char>(g < N ? w[g]
                                           : (w[g - N] < N ? w[g - N] + N
                                                           : w[g - N] - N));
        }
        next.insert(buf);
      }
    }
    std::vector<std::string> sorted(next.begin(), next.end());
    std::sort(sorted.begin(), sorted.end());
    auto& out = levels_[l + 1];
    out.clear();
    out.reserve(sorted.size() * N);
    for (const auto& s : sorted)
      out.insert(out.end(), s.begin(), s.end());
  }
}

std::size_t CoxeterSystem::level_size(int l) const {
  if (l < 0 || l > nroots_) return 0;
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (static_cast<std::size_t>(l) >= levels_.size()) return 0;
  return levels_[l].size() / nroots_;
}

const std::uint8_t* CoxeterSystem::level_data(int l) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return levels_[l].data();
}

GroupElement CoxeterSystem::unpack(const std::uint8_t* p) const {
  GroupElement w;
  w.sys = this;
  w.img.resize(nroots_);
  for (int r = 0; r < nroots_; ++r) w.img[r] = p[r];
  return w;
}

std::vector<std::uint8_t> CoxeterSystem::pack(const GroupElement& w) const {
  std::vector<std::uint8_t> p(nroots_);
  for (int r = 0; r < nroots_; ++r)
    p[r] = static_cast<std::uint8_t>(w.img[r]);
  return p;
}

// ---------------------------------------------------------------- classes

std::vector<GroupElement> CoxeterSystem::enumerate_class_at_length(
    const TwistedElement& rep, int target_len, std::size_t cap) const {
  const int k = rep.twist;
  // Reduce to an element of minimal length in the twisted class.
  GroupElement x = rep.w;
  int lx = length(x);
  for (bool moved = true; moved;) {
    moved = false;
    for (int s = 0; s < rank_; ++s) {
      GroupElement y = mul(gens_[s], mul(x, gens_[phi_on_generator(k, s)]));
      int ly = length(y);
      if (ly < lx) {
        x = y;
        lx = ly;
        moved = true;
        break;
      }
    }
  }
  if (lx > target_len) return {};
  // Closure under generator conjugation, never exceeding the target length.
  std::unordered_set<std::string, ByteHash> seen;
  std::vector<GroupElement> frontier{x}, result;
  auto key = [&](const GroupElement& w) {
    return std::string(reinterpret_cast<const char*>(w.img.data()),
                       w.img.size() * 2);
  };
  seen.insert(key(x));
  if (lx == target_len) result.push_back(x);
  while (!frontier.empty()) {
    if (seen.size() > cap)
      throw std::runtime_error("class enumeration cap exceeded");
    GroupElement w = std::move(frontier.back());
    frontier.pop_back();
    for (int s = 0; s < rank_; ++s) {
      GroupElement y = mul(gens_[s], mul(w, gens_[phi_on_generator(k, s)]));
      if (length(y) > target_len) continue;
      auto ky = key(y);
      if (seen.insert(ky).second) {
        if (length(y) == target_len) result.push_back(y);
        frontier.push_back(y);
      }
    }
  }
  std::sort(result.begin(), result.end(),
            [&](const GroupElement& a, const GroupElement& b) {
              return canonical_word(a) < canonical_word(b);
            });
  return result;
}

// ---------------------------------------------------------------- parabolic

const std::vector<int>& CoxeterSystem::parabolic_roots(Subset I) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = parabolic_roots_cache_.find(I);
    if (it != parabolic_roots_cache_.end()) return it->second;
  }
  GroupElement wI = longest_element(I);
  std::vector<int> roots;
  for (int r = 0; r < nroots_; ++r)
    if (wI.img[r] >= nroots_) roots.push_back(r);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return parabolic_roots_cache_.emplace(I, std::move(roots)).first->second;
}

const std::vector<GroupElement>& CoxeterSystem::parabolic_elements(
    Subset I, std::size_t cap) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = parabolic_elts_cache_.find(I);
    if (it != parabolic_elts_cache_.end()) return it->second;
  }
  std::unordered_set<std::string, ByteHash> seen;
  auto key = [&](const GroupElement& w) {
    return std::string(reinterpret_cast<const char*>(w.img.data()),
                       w.img.size() * 2);
  };
  std::vector<GroupElement> all{identity()}, frontier{identity()};
  seen.insert(key(all[0]));
  while (!frontier.empty()) {
    if (all.size() > cap)
      throw std::runtime_error("parabolic subgroup larger than cap");
    GroupElement w = std::move(frontier.back());
    frontier.pop_back();
    for (int s : subset_to_list(I)) {
      GroupElement y = mul(w, gens_[s]);
      if (seen.insert(key(y)).second) {
        all.push_back(y);
        frontier.push_back(y);
      }
    }
  }
  std::sort(all.begin(), all.end());
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return parabolic_elts_cache_.emplace(I, std::move(all)).first->second;
}

// ---------------------------------------------------------------- intern

const CoxeterSystem& coxeter(const std::string& descriptor) {
  static std::mutex m;
  static std::map<std::string, std::unique_ptr<CoxeterSystem>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(descriptor);
  if (it == cache.end())
    it = cache.emplace(descriptor, CoxeterSystem::build(descriptor)).first;
  return *it->second;
}

}  // namespace garside
