// Acceptance gate: re-derives the frozen classification tables, figures,
// counterexamples, family constructions, oracle agreements, category laws,
// topology evidence and CLI determinism, printing one PASS/FAIL line per
// criterion. Run with --slow-only for the large-type table suite; --cli PATH
// points at the command-line binary for the determinism checks.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include <Eigen/Dense>

#include "garside/periodic.hpp"
#include "garside/verify.hpp"

using namespace garside;
namespace br = garside::braid;
namespace cc = garside::conjcat;
namespace pd = garside::periodic;
namespace vf = garside::verify;

namespace {

bool g_ok = true;
std::vector<std::string> g_notes;

void expect(bool cond, const std::string& what) {
  if (!cond) {
    g_ok = false;
    if (g_notes.size() < 20) g_notes.push_back(what);
  }
}

void note(const std::string& what) { g_notes.push_back("info: " + what); }

// Runs one criterion body and prints its verdict; returns 0 on pass.
int criterion(int id, const std::function<void()>& body) {
  g_ok = true;
  g_notes.clear();
  try {
    body();
  } catch (const std::exception& e) {
    expect(false, std::string("unexpected exception: ") + e.what());
  }
  printf("CRITERION %d: %s\n", id, g_ok ? "PASS" : "FAIL");
  for (const auto& n : g_notes) printf("  %s\n", n.c_str());
  fflush(stdout);
  return g_ok ? 0 : 1;
}

Subset full_set(const CoxeterSystem& W) { return (1u << W.rank()) - 1; }

GroupElement fw(const CoxeterSystem& W, const std::string& s) {
  return W.from_word(W.parse_word(s));
}

GroupElement upow(const GroupElement& w, int k) {
  return pd::twisted_power(w, 0, k);
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

// ------------------------------------------------------------- table data

struct CountTable {
  const char* type;
  std::map<int, std::vector<long long>> rows;  // d -> per-subset counts
};

const std::vector<CountTable>& fast_counts() {
  static const std::vector<CountTable> t = {
      {"H3", {{10, {4}}, {6, {6}}, {5, {4}}, {3, {6}}, {2, {1}}, {1, {1}}}},
      {"H4",
       {{30, {8}},
        {20, {12}},
        {15, {8}},
        {12, {22}},
        {10, {24}},
        {6, {40}},
        {5, {24}},
        {4, {60}},
        {3, {40}},
        {2, {1}},
        {1, {1}}}},
      {"3D4", {{12, {6}}, {6, {8}}, {3, {8}}, {2, {1}}, {1, {1}}}},
      {"F4",
       {{12, {8}}, {8, {14}}, {6, {16}}, {4, {12}}, {3, {16}}, {2, {1}},
        {1, {1}}}},
      {"2F4",
       {{24, {6}}, {12, {10}}, {8, {12}}, {4, {24}}, {2, {1}}, {1, {1}}}},
      {"E6",
       {{12, {8}},
        {9, {24}},
        {8, {14}},
        {6, {16}},
        {5, {8, 8, 8}},
        {4, {12}},
        {3, {80}},
        {2, {1}},
        {1, {1}}}},
      {"2E6",
       {{18, {24}},
        {12, {8}},
        {10, {8, 8, 8}},
        {8, {14}},
        {6, {80}},
        {4, {12}},
        {3, {16}},
        {2, {1}},
        {1, {1}}}}};
  return t;
}

const CountTable& e7_counts() {
  static const CountTable t = {"E7",
                               {{18, {64}},
                                {14, {160}},
                                {12, {8}},
                                {10, {8, 8, 8}},
                                {9, {64}},
                                {8, {14}},
                                {7, {160}},
                                {6, {800}},
                                {5, {8, 8, 8}},
                                {4, {12}},
                                {3, {800}},
                                {2, {1}},
                                {1, {1}}}};
  return t;
}

void check_counts(const CountTable& t) {
  const auto& W = coxeter(t.type);
  for (const auto& [d, want_raw] : t.rows) {
    auto rows = pd::classify_good(W, d);
    std::vector<long long> got;
    for (const auto& r : rows) got.push_back(r.count);
    std::sort(got.begin(), got.end());
    auto want = want_raw;
    std::sort(want.begin(), want.end());
    std::ostringstream os;
    os << t.type << " d=" << d << ": got";
    for (long long c : got) os << " " << c;
    expect(got == want, os.str());
  }
}

struct CertRow {
  const char* type;
  int d;
  Subset I;
  GroupElement w;
  int phi_exp;
  long long order;   // expected relative-section order
  int mismatch;      // expected flag; -1 = do not compare
};

std::vector<CertRow> fast_cert_rows() {
  std::vector<CertRow> rows;
  auto add = [&](const char* t, int d, Subset I, const GroupElement& w,
                 int phi, long long order, int mism = -1) {
    rows.push_back({t, d, I, w, phi, order, mism});
  };
  {
    const auto& W = coxeter("H3");
    auto w10 = fw(W, "123"), w6 = fw(W, "32121");
    add("H3", 10, 0, w10, 1, 10);
    add("H3", 6, 0, w6, 1, 6);
    add("H3", 5, 0, upow(w10, 2), 1, 10);
    add("H3", 3, 0, upow(w6, 2), 1, 6);
    add("H3", 2, 0, W.longest_element(full_set(W)), 1, 120);
    add("H3", 1, 0, W.identity(), 1, 120);
  }
  {
    const auto& W = coxeter("H4");
    auto w30 = fw(W, "1234"), w20 = fw(W, "432121"), w12 = fw(W, "2121432123");
    add("H4", 30, 0, w30, 1, 30);
    add("H4", 20, 0, w20, 1, 20);
    add("H4", 15, 0, upow(w30, 2), 1, 30);
    add("H4", 12, 0, w12, 1, 12);
    add("H4", 10, 0, upow(w30, 3), 1, 600);
    add("H4", 6, 0, upow(w30, 5), 1, 360);
    add("H4", 5, 0, upow(w30, 6), 1, 600);
    add("H4", 4, 0, upow(w20, 5), 1, 240);
    add("H4", 3, 0, upow(w30, 10), 1, 360);
    add("H4", 2, 0, W.longest_element(full_set(W)), 1, 14400);
    add("H4", 1, 0, W.identity(), 1, 14400);
  }
  {
    const auto& W = coxeter("3D4");
    auto w12 = fw(W, "13"), w6 = fw(W, "1243");
    add("3D4", 12, 0, w12, 1, 4);
    add("3D4", 6, 0, w6, 1, 24);
    add("3D4", 3, 0, pd::twisted_power(w6, 1, 2), 2, 24);
    add("3D4", 2, 0, W.longest_element(full_set(W)), 1, 12);
    add("3D4", 1, 0, W.identity(), 1, 12);
  }
  {
    const auto& W = coxeter("F4");
    auto w12 = fw(W, "1234"), w8 = fw(W, "214323");
    add("F4", 12, 0, w12, 1, 12);
    add("F4", 8, 0, w8, 1, 8);
    add("F4", 6, 0, upow(w12, 2), 1, 72);
    add("F4", 4, 0, upow(w12, 3), 1, 96);
    add("F4", 4, 0, upow(w8, 2), 1, 96);
    add("F4", 3, 0, upow(w12, 4), 1, 72);
    add("F4", 2, 0, W.longest_element(full_set(W)), 1, 1152);
    add("F4", 1, 0, W.identity(), 1, 1152);
  }
  {
    const auto& W = coxeter("2F4");
    auto w24 = fw(W, "12"), w12 = fw(W, "3231");
    add("2F4", 24, 0, w24, 1, 12);
    add("2F4", 12, 0, w12, 1, 6);
    add("2F4", 8, 0, pd::twisted_power(w24, 1, 3), 1, 96);
    add("2F4", 4, 0, pd::twisted_power(w12, 1, 3), 1, 48);
    add("2F4", 2, 0, W.longest_element(full_set(W)), 1, 16);
    add("2F4", 1, 0, W.identity(), 1, 16);
  }
  {
    const auto& W = coxeter("E6");
    auto w12 = fw(W, "123654"), w9 = fw(W, "12342654"), w8 = fw(W, "123436543");
    add("E6", 12, 0, w12, 1, 12);
    add("E6", 9, 0, w9, 1, 9);
    add("E6", 8, 0, w8, 1, 8);
    add("E6", 6, 0, upow(w12, 2), 1, 72);
    add("E6", 5, 1u << 2, fw(W, "24231454234565"), 1, 5, 0);
    add("E6", 5, 1u << 3, fw(W, "12435423456543"), 1, 5, 0);
    add("E6", 5, 1u << 4, fw(W, "12314235423654"), 1, 5, 0);
    add("E6", 4, 0, upow(w8, 2), 1, 96);
    add("E6", 4, 0, upow(w12, 3), 1, 96);
    add("E6", 3, 0, upow(w12, 4), 1, 648);
    add("E6", 3, 0, upow(w9, 3), 1, 648);
    add("E6", 2, 0, W.longest_element(full_set(W)), 1, 1152);
    add("E6", 1, 0, W.identity(), 1, 51840);
  }
  {
    const auto& W = coxeter("2E6");
    auto w18 = fw(W, "1234"), w12 = fw(W, "123654"), w8 = fw(W, "123436543");
    add("2E6", 18, 0, w18, 1, 9);
    add("2E6", 12, 0, w12, 1, 12);
    add("2E6", 10, 1u << 2, fw(W, "2431543"), 1, 5, 1);
    add("2E6", 10, 1u << 3, fw(W, "5423145"), 1, 5, 1);
    add("2E6", 10, 1u << 4, fw(W, "3143542"), 1, 5, 1);
    add("2E6", 8, 0, w8, 1, 8);
    add("2E6", 6, 0, pd::twisted_power(w18, 1, 3), 1, 648);
    add("2E6", 4, 0, pd::twisted_power(w12, 1, 3), 1, 96);
    add("2E6", 3, 0, pd::twisted_power(w12, 1, 4), 1, 72);
    add("2E6", 2, 0, W.longest_element(full_set(W)), 1, 51840);
    add("2E6", 1, 0, W.identity(), 1, 1152);
  }
  return rows;
}

std::vector<CertRow> e7_cert_rows() {
  std::vector<CertRow> rows;
  const auto& W = coxeter("E7");
  auto w18 = fw(W, "1234567"), w14 = fw(W, "123425467"),
       w12 = fw(W, "1342546576"), w10a = fw(W, "134254234567"),
       w10b = fw(W, "243154234567"), w10c = fw(W, "124354265437"),
       w8 = fw(W, "134234542346576");
  const Subset I257 = (1u << 1) | (1u << 4) | (1u << 6);
  auto add = [&](int d, Subset I, const GroupElement& w, long long order,
                 int mism = -1) {
    rows.push_back({"E7", d, I, w, 1, order, mism});
  };
  add(18, 0, w18, 18);
  add(14, 0, w14, 14);
  add(12, I257, w12, 12, 0);
  add(10, (1u << 1) | (1u << 3), w10a, 10, 0);
  add(10, (1u << 2) | (1u << 3), w10b, 10, 0);
  add(10, (1u << 3) | (1u << 4), w10c, 10, 0);
  add(9, 0, upow(w18, 2), 18);
  add(8, I257, w8, 8, 0);
  add(7, 0, upow(w14, 2), 14);
  add(6, 0, upow(w18, 3), 1296);
  add(5, (1u << 1) | (1u << 3), upow(w10a, 2), 10, 1);
  add(5, (1u << 2) | (1u << 3), upow(w10b, 2), 10, 1);
  add(5, (1u << 3) | (1u << 4), upow(w10c, 2), 10, 1);
  add(4, I257, upow(w8, 2), 96, 1);
  add(3, 0, upow(w18, 6), 1296);
  add(2, 0, W.longest_element(full_set(W)), 2903040);
  add(1, 0, W.identity(), 2903040);
  return rows;
}

void check_cert_rows(const std::vector<CertRow>& rows) {
  for (const auto& r : rows) {
    std::ostringstream tag;
    tag << r.type << " d=" << r.d << " I=" << subset_to_string(r.I);
    try {
      auto cert =
          pd::make_certificate(coxeter(r.type), r.d, r.I, r.w, r.phi_exp);
      auto sec = pd::relative_section(cert);
      expect(sec.order == r.order,
             tag.str() + ": section order " + std::to_string(sec.order) +
                 " expected " + std::to_string(r.order));
      if (r.mismatch >= 0) {
        auto m = pd::section_mismatch(cert);
        expect(m.mismatch == (r.mismatch == 1),
               tag.str() + ": mismatch flag " + std::to_string(m.mismatch) +
                   " expected " + std::to_string(r.mismatch));
      }
    } catch (const std::exception& e) {
      expect(false, tag.str() + ": " + e.what());
    }
  }
}

// --------------------------------------------------------------- figures

const std::set<std::string>& figure_d4_words() {
  static const std::set<std::string> s = {
      "123243", "232431", "231431", "314312", "132432", "324312",
      "123143", "131432", "231234", "243123", "131234", "143123"};
  return s;
}

const std::set<std::string>& figure_a5_words() {
  static const std::set<std::string> s = {
      "21435", "43543", "35432", "25432", "24543", "32145", "12143", "12343",
      "12324", "12132", "14354", "21325", "34354", "23435", "23245", "32454",
      "12543", "13214", "34321", "24321", "21321", "13254"};
  return s;
}

std::set<std::string> component_words(const cc::CategoryGraph& g) {
  std::set<std::string> out;
  for (const auto& n : g.nodes) out.insert(cc::flat_word(n.braid));
  return out;
}

// --------------------------------------------------------- small helpers

// All positive braids of canonical length at most `bound`, by right
// multiplication with simple factors.
std::set<BraidElement> braids_up_to(const CoxeterSystem& W, int bound) {
  W.ensure_levels(W.num_roots());
  std::vector<GroupElement> simples;
  for (int l = 1; l <= W.num_roots(); ++l)
    for (std::size_t i = 0; i < W.level_size(l); ++i)
      simples.push_back(W.unpack(W.level_data(l) + i * W.num_roots()));
  std::set<BraidElement> all{br::identity(W)};
  std::vector<BraidElement> frontier{br::identity(W)};
  while (!frontier.empty()) {
    BraidElement b = frontier.back();
    frontier.pop_back();
    for (const auto& s : simples) {
      BraidElement p = br::product(b, br::lift(s));
      if (br::canonical_length(p) > bound) continue;
      if (all.insert(p).second) frontier.push_back(p);
    }
  }
  return all;
}

// Distinct braids arising from positive words of letter length <= bound.
std::set<BraidElement> braids_from_words(const CoxeterSystem& W, int bound) {
  std::set<BraidElement> out;
  std::vector<int> word;
  std::function<void()> rec = [&]() {
    if (!word.empty()) out.insert(br::from_word(W, word));
    if (static_cast<int>(word.size()) == bound) return;
    for (int s = 0; s < W.rank(); ++s) {
      word.push_back(s);
      rec();
      word.pop_back();
    }
  };
  rec();
  return out;
}

// ------------------------------------------------------------- criteria

std::string g_cli;

void criterion_counts_fast() {
  for (const auto& t : fast_counts()) check_counts(t);
  // The largest type is refused without the explicit long-running override.
  bool refused = false;
  try {
    pd::classify_good(coxeter("E8"), 30);
  } catch (const std::exception&) {
    refused = true;
  }
  expect(refused, "E8 classification must require the override flag");
}

void criterion_rows_fast() {
  check_cert_rows(fast_cert_rows());
  // The largest type is not enumerated; compare the selected reflection
  // degrees of the ambient coset against the orthogonal subgroup instead.
  try {
    const auto& W = coxeter("E8");
    auto w18a = fw(W, "1342542345678");
    auto cert = pd::make_certificate(W, 9, (1u << 1) | (1u << 3),
                                     upow(w18a, 2));
    auto coset = pd::coset_selected_degrees(W, 1, 9);
    auto sub = pd::parabolic_selected_degrees(cert);
    note("E8 d=9 selected degrees: coset " + join_ints(coset) +
         " vs subgroup " + join_ints(sub) +
         (coset == sub ? " (agree)" : " (documented disagreement)"));
  } catch (const std::exception& e) {
    note(std::string("E8 d=9 degree comparison unavailable: ") + e.what());
  }
}

void criterion_figures() {
  {
    const auto& W = coxeter("D4");
    auto obj = cc::make_object(0, br::from_word(W, W.parse_word("123423")),
                               cc::Automorphism{1, 0});
    auto g = cc::explore_component(obj, cc::Automorphism{1, 0});
    expect(g.complete, "D4 component exploration truncated");
    expect(component_words(g) == figure_d4_words(),
           "D4 component words differ from the reference set");
  }
  {
    const auto& W = coxeter("A5");
    auto obj = cc::make_object(0, br::from_word(W, W.parse_word("21325")),
                               cc::Automorphism{1, 0});
    auto g = cc::explore_component(obj, std::nullopt);
    expect(g.complete, "A5 component exploration truncated");
    expect(component_words(g) == figure_a5_words(),
           "A5 component words differ from the reference set");
  }
}

void criterion_counterexamples() {
  const auto& W = coxeter("A3");
  // (a) maximal eigenspace but non-maximal element at I = {s2}.
  {
    Subset I = 0b010;
    GroupElement w =
        W.mul(W.inv(W.longest_element(I)), W.longest_element(full_set(W)));
    auto cert = pd::make_certificate(W, 2, I, w);
    expect(!pd::is_maximal(cert), "(a) element must not be maximal");
  }
  // (b) same at I = {s1, s3}; additionally the pointwise stabilizer of the
  // eigenspace is trivial even though the element is not maximal.
  {
    Subset I = 0b101;
    GroupElement w =
        W.mul(W.inv(W.longest_element(I)), W.longest_element(full_set(W)));
    auto cert = pd::make_certificate(W, 2, I, w);
    expect(cert.zeta_rank == pd::coset_zeta_rank(W, 1, 2),
           "(b) eigenspace must be maximal");
    expect(!pd::is_maximal(cert), "(b) element must not be maximal");
    Eigen::MatrixXd M = W.matrix_of({w, 0});
    Eigen::FullPivLU<Eigen::MatrixXd> lu(
        M + Eigen::MatrixXd::Identity(W.rank(), W.rank()));
    Eigen::MatrixXd V = lu.kernel();
    expect(V.cols() == 2, "(b) eigenspace dimension must be 2");
    W.ensure_levels(W.num_roots());
    int stabilizer = 0;
    for (int l = 0; l <= W.num_roots(); ++l)
      for (std::size_t i = 0; i < W.level_size(l); ++i) {
        GroupElement g = W.unpack(W.level_data(l) + i * W.num_roots());
        if ((W.matrix_of({g, 0}) * V - V).norm() < 1e-9) ++stabilizer;
      }
    expect(stabilizer == 1, "(b) pointwise stabilizer must be trivial");
  }
  // (c) braid-periodic element over the triality twist whose subset is not
  // stable under the twist square: the certificate must be refused.
  {
    const auto& T = coxeter("3D4");
    GroupElement w0s1s2 = T.mul(T.longest_element(full_set(T)),
                                T.mul(T.generator(0), T.generator(1)));
    BraidElement v = br::product(br::lift(w0s1s2), br::from_word(T, {3}));
    expect(pd::is_periodic(0b0001, v, 2, 2),
           "(c) braid power identity must hold");
    bool refused = false;
    try {
      pd::make_certificate(T, 2, 0b0001, br::image(v), 2);
    } catch (const pd::NotGood&) {
      refused = true;
    }
    expect(refused, "(c) certificate must be refused");
  }
}

void criterion_classical() {
  const std::vector<std::pair<const char*, int>> families = {
      {"A", 1}, {"2A", 2}, {"B", 2}, {"D", 3}, {"2D", 3}};
  int rows = 0;
  for (const auto& [fam, min_rank] : families) {
    for (int n = min_rank; n <= 8; ++n) {
      for (int d : pd::admissible_d(fam, n)) {
        std::ostringstream tag;
        tag << fam << " n=" << n << " d=" << d;
        try {
          auto cert = pd::construct_classical(fam, n, d);
          const auto& W = *cert.sys;
          ++rows;
          expect(pd::is_maximal(cert), tag.str() + ": not maximal");
          expect(pd::even_odd_structure(cert).verified,
                 tag.str() + ": half-power structure failed");
          if (std::string(fam) == "A" && 2 * d >= n + 2)
            expect(W.length(cert.w) == 2 * n - d + 1,
                   tag.str() + ": length formula failed");
          if (std::string(fam) == "B" && d % 2 == 0)
            expect(pd::twisted_power(cert.w, 0, d / 2) ==
                       W.mul(W.inv(W.longest_element(cert.I)),
                             W.longest_element(full_set(W))),
                   tag.str() + ": half power is not w_I^-1 w_0");
        } catch (const std::exception& e) {
          expect(false, tag.str() + ": " + e.what());
        }
      }
    }
  }
  expect(rows == 193, "expected 193 constructed roots, got " +
                          std::to_string(rows));
}

void criterion_oracle() {
  long long checked = 0;
  for (const char* t : {"A3", "B3"}) {
    const auto& W = coxeter(t);
    std::vector<int> word;
    std::function<void()> rec = [&]() {
      if (!word.empty()) {
        if (vf::oracle_normal_form(W, word) != br::from_word(W, word))
          expect(false, std::string(t) + ": oracle disagrees on " +
                            W.word_string(word));
        ++checked;
      }
      if (word.size() == 6) return;
      for (int s = 0; s < W.rank(); ++s) {
        word.push_back(s);
        rec();
        word.pop_back();
      }
    };
    rec();
  }
  expect(checked == 2 * 1092,
         "expected 2184 words, checked " + std::to_string(checked));
}

void criterion_category_laws() {
  // Head multiplicativity: the head of v*w only depends on v and head(w).
  {
    const auto& W = coxeter("A3");
    auto braids = braids_from_words(W, 3);
    for (const auto& v : braids)
      for (const auto& w : braids) {
        if (br::is_identity(w)) continue;
        auto p = br::product(v, w);
        if (br::is_identity(p)) continue;
        expect(br::head(p) ==
                   br::head(br::product(v, br::lift(br::head(w)))),
               "head multiplicativity failed");
      }
  }
  {
    unsigned state = 97531;
    const auto& W = coxeter("B3");
    auto rnd_word = [&](int len) {
      std::vector<int> w;
      for (int i = 0; i < len; ++i) {
        state = state * 1664525u + 1013904223u;
        w.push_back(static_cast<int>((state >> 16) % W.rank()));
      }
      return w;
    };
    for (int trial = 0; trial < 400; ++trial) {
      auto v = br::from_word(W, rnd_word(1 + trial % 5));
      auto w = br::from_word(W, rnd_word(1 + (trial / 5) % 5));
      expect(br::head(br::product(v, w)) ==
                 br::head(br::product(v, br::lift(br::head(w)))),
             "randomized head multiplicativity failed");
    }
  }
  // Morphism sets are closed under right lcm and the lcm complement.
  {
    const auto& W = coxeter("A3");
    auto all = braids_up_to(W, 2);
    for (Subset I : {Subset{0b010}, Subset{0b101}, Subset{0b001}}) {
      std::vector<RibbonMorphism> ms;
      for (const auto& b : all) {
        try {
          ms.push_back(ribbon::make_morphism(I, b));
        } catch (const std::exception&) {
        }
      }
      expect(!ms.empty(), "no morphisms found at " + subset_to_string(I));
      for (const auto& f : ms)
        for (const auto& g : ms) {
          auto l = br::right_lcm(f.braid, g.braid);
          try {
            ribbon::make_morphism(I, l);
            ribbon::make_morphism(f.target, br::quotient(f.braid, l, true));
          } catch (const std::exception&) {
            expect(false, "lcm/complement closure failed at " +
                              subset_to_string(I));
          }
        }
    }
  }
  // Conjugation loops agree with cyclic loops at central powers, and the
  // loop sets are closed under left gcd.
  {
    const auto& W = coxeter("A2");
    auto all = braids_up_to(W, 4);
    auto d = br::delta(W);
    std::set<BraidElement> commuting;
    for (const auto& b : all)
      if (br::product(d, b) == br::product(b, d)) commuting.insert(b);
    auto obj = cc::make_object(0, d, cc::Automorphism{});
    auto loops = cc::endo_elements(obj, 4);
    std::set<BraidElement> loop_set(loops.begin(), loops.end());
    expect(loop_set == commuting,
           "half-twist loops differ from the commuting braids");
    for (const auto& x : loop_set)
      for (const auto& y : loop_set)
        expect(loop_set.count(cc::gcd_in_cyc(x, y)) == 1,
               "loop set not closed under gcd");
    auto p = br::pi(W, full_set(W));
    auto ploops = cc::endo_elements(cc::make_object(0, p, {}), 4);
    expect(std::set<BraidElement>(ploops.begin(), ploops.end()) == all,
           "full-twist loops must be every braid (central element)");
  }
  {
    const auto& W = coxeter("A3");
    auto all = braids_up_to(W, 4);
    auto p = br::pi(W, full_set(W));
    auto ploops = cc::endo_elements(cc::make_object(0, p, {}), 4);
    expect(ploops.size() == all.size() &&
               std::set<BraidElement>(ploops.begin(), ploops.end()) == all,
           "full-twist loops must be every braid (central element)");
  }
}

void criterion_desc_endo() {
  const auto& W = coxeter("A3");
  const Subset I = 0b010;
  auto q = br::quotient(br::power(br::lift(W.longest_element(I)), 2),
                        br::pi(W, full_set(W)), true);
  auto loops = cc::endo_elements(cc::make_object(I, q, {}), 4);
  std::set<BraidElement> loop_set(loops.begin(), loops.end());
  std::set<BraidElement> morphism_loops;
  for (const auto& b : braids_up_to(W, 4)) {
    try {
      if (ribbon::make_morphism(I, b).target == I) morphism_loops.insert(b);
    } catch (const std::exception&) {
    }
  }
  expect(loop_set.size() == 37,
         "expected 37 loops, got " + std::to_string(loop_set.size()));
  expect(loop_set == morphism_loops,
         "cyclic loops differ from the ribbon endomorphisms");
  // The gcd of two loops is again a conjugator out of the object (though
  // its target may be a different subset).
  for (const auto& x : loop_set)
    for (const auto& y : loop_set) {
      try {
        ribbon::make_morphism(I, cc::gcd_in_cyc(x, y));
      } catch (const std::exception&) {
        expect(false, "gcd of loops is not a conjugator");
      }
    }
}

void criterion_topology() {
  const auto& W = coxeter("A3");
  auto braids = braids_from_words(W, 5);
  expect(braids.size() == 167,
         "expected 167 braids, got " + std::to_string(braids.size()));
  for (const auto& b : braids) {
    auto ev = vf::check_simply_connected_evidence(vf::decomposition_poset(b));
    expect(ev.connected, "poset not connected for " + br::to_string(b));
    expect(ev.h1_rank == 0, "nonzero first homology for " + br::to_string(b));
  }
}

void criterion_determinism() {
  if (g_cli.empty()) {
    expect(false, "no CLI path given (--cli)");
    return;
  }
  const std::vector<std::string> commands = {
      "normal A2 1211",
      "gcd A2 121 212",
      "lcm A2 12 21",
      "divides A2 12 1211",
      "ribbon-alpha A3 2132 --subset 2",
      "ribbon-atoms A3 --subset 2",
      "conj-graph D4 123423 --fixed phi --dot -",
      "conj-graph A5 21325 --twist phi",
      "endo-gens A3 --subset 2 --central --bound 3",
      "periodic-check H3 123 --d 10",
      "slide A4 1234 --d 5",
      "good H3 --d 10 --count",
      "good E6 --d 5",
      "good A2 --d 5",
      "restrict A2 --n 2 --d 2",
      "poset-check A3 12132",
  };
  const std::string tmp =
      "/tmp/garside_acceptance_" + std::to_string(getpid()) + ".out";
  for (const auto& cmd : commands) {
    std::string reference;
    bool first = true;
    for (int threads : {1, 4}) {
      for (int run = 0; run < 3; ++run) {
        std::string shell = g_cli + " " + cmd + " --threads " +
                            std::to_string(threads) + " > " + tmp + " 2>&1";
        int rc = std::system(shell.c_str());
        expect(rc == 0, cmd + ": exit status " + std::to_string(rc));
        std::ifstream in(tmp, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        if (first) {
          reference = buf.str();
          first = false;
          expect(!reference.empty(), cmd + ": empty output");
        } else {
          expect(buf.str() == reference,
                 cmd + ": output differs (threads=" +
                     std::to_string(threads) + ")");
        }
      }
    }
  }
  std::remove(tmp.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  bool slow_only = false;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--slow-only") slow_only = true;
    else if (arg == "--cli" && i + 1 < argc) g_cli = argv[++i];
  }
  set_thread_count(4);
  int failures = 0;
  if (slow_only) {
    failures += criterion(1, [] { check_counts(e7_counts()); });
    failures += criterion(2, [] { check_cert_rows(e7_cert_rows()); });
  } else {
    failures += criterion(1, criterion_counts_fast);
    failures += criterion(2, criterion_rows_fast);
    failures += criterion(3, criterion_figures);
    failures += criterion(4, criterion_counterexamples);
    failures += criterion(5, criterion_classical);
    failures += criterion(6, criterion_oracle);
    failures += criterion(7, criterion_category_laws);
    failures += criterion(8, criterion_desc_endo);
    failures += criterion(9, criterion_topology);
    failures += criterion(10, criterion_determinism);
  }
  return failures ? 1 : 0;
}
