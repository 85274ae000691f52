// Tests for the independent oracles: rewrite-closure normal forms,
// factorization posets and order-complex homology evidence.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "garside/verify.hpp"

using namespace garside;
namespace br = garside::braid;
namespace vf = garside::verify;

TEST_CASE("oracle normal form on small words") {
  const auto& W = coxeter("A2");
  CHECK(br::is_identity(vf::oracle_normal_form(W, {})));
  CHECK(vf::oracle_normal_form(W, {0, 1, 0, 1}) ==
        br::from_word(W, {0, 1, 0, 1}));
  CHECK(br::to_string(vf::oracle_normal_form(W, {0, 1, 0, 1})) == "[121,2]");
  CHECK_THROWS_AS(vf::oracle_normal_form(W, {0, 1, 0, 1}, 3),
                  std::invalid_argument);
}

TEST_CASE("oracle agreement: exhaustive sweep in A3") {
  const auto& W = coxeter("A3");
  std::vector<int> word;
  long long checked = 0;
  std::function<void()> rec = [&]() {
    if (!word.empty()) {
      CHECK(vf::oracle_normal_form(W, word) == br::from_word(W, word));
      ++checked;
    }
    if (word.size() == 5) return;
    for (int s = 0; s < W.rank(); ++s) {
      word.push_back(s);
      rec();
      word.pop_back();
    }
  };
  rec();
  CHECK(checked == 3 + 9 + 27 + 81 + 243);
}

TEST_CASE("oracle agreement: random words in B3 and H3") {
  unsigned state = 12345;
  for (const char* t : {"B3", "H3"}) {
    const auto& W = coxeter(t);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<int> word;
      for (int i = 0; i < 6; ++i) {
        state = state * 1664525u + 1013904223u;
        word.push_back(static_cast<int>((state >> 16) % W.rank()));
      }
      CAPTURE(t);
      CHECK(vf::oracle_normal_form(W, word) == br::from_word(W, word));
    }
  }
}

TEST_CASE("decomposition poset of the half twist in A2") {
  const auto& W = coxeter("A2");
  auto p = vf::decomposition_poset(br::delta(W));
  REQUIRE(p.elements.size() == 7);
  auto g = [&](const char* s) { return W.from_word(W.parse_word(s)); };
  std::set<std::vector<GroupElement>> expected{
      {g("121")},         {g("1"), g("21")},      {g("12"), g("1")},
      {g("2"), g("12")},  {g("21"), g("2")},      {g("1"), g("2"), g("1")},
      {g("2"), g("1"), g("2")}};
  CHECK(std::set<std::vector<GroupElement>>(p.elements.begin(),
                                            p.elements.end()) == expected);
  // Each cover splits one factor; the product is unchanged.
  for (auto [a, b] : p.covers) {
    CHECK(p.elements[b].size() == p.elements[a].size() + 1);
    CHECK(br::normalize(W, p.elements[a]) == br::normalize(W, p.elements[b]));
  }
  auto ev = vf::check_simply_connected_evidence(p);
  CHECK(ev.connected);
  CHECK(ev.h1_rank == 0);
}

TEST_CASE("degenerate posets") {
  const auto& W = coxeter("A2");
  auto atom = vf::decomposition_poset(br::from_word(W, {0}));
  CHECK(atom.elements.size() == 1);
  CHECK(atom.covers.empty());
  auto ev = vf::check_simply_connected_evidence(atom);
  CHECK(ev.connected);
  CHECK(ev.h1_rank == 0);
  // s1*s1 is not simple, so the only factorization is the pair.
  auto sq = vf::decomposition_poset(br::from_word(W, {0, 0}));
  REQUIRE(sq.elements.size() == 1);
  CHECK(sq.elements[0] ==
        std::vector<GroupElement>{W.generator(0), W.generator(0)});
  CHECK_THROWS_AS(vf::decomposition_poset(br::delta(W), 2),
                  std::invalid_argument);
}

TEST_CASE("connectivity and vanishing H1 for short braids in A3") {
  const auto& W = coxeter("A3");
  std::set<BraidElement> braids;
  std::vector<int> word;
  std::function<void()> rec = [&]() {
    if (!word.empty()) braids.insert(br::from_word(W, word));
    if (word.size() == 4) return;
    for (int s = 0; s < W.rank(); ++s) {
      word.push_back(s);
      rec();
      word.pop_back();
    }
  };
  rec();
  for (const auto& b : braids) {
    auto ev = vf::check_simply_connected_evidence(vf::decomposition_poset(b));
    CAPTURE(br::to_string(b));
    CHECK(ev.connected);
    CHECK(ev.h1_rank == 0);
  }
}
