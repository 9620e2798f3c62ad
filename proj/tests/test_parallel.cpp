#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "shpl/batch.hpp"
#include "shpl/core.hpp"

using namespace shpl;

TEST_CASE("word enumeration") {
  CHECK(all_words(0, 3) == std::vector<word>{{}});
  CHECK(all_words(2, 2) == std::vector<word>{{1, 1}, {1, 2}, {2, 1}, {2, 2}});
  CHECK(all_words(6, 4).size() == 4096);
  CHECK(all_words(-1, 3).empty());
}

TEST_CASE("parallel insertion matches the serial reference") {
  auto ws = all_words(7, 4);
  std::mt19937 rng(20240817);
  for (int len = 8; len <= 12; ++len)
    for (int k = 0; k < 100; ++k) {
      word w(len);
      for (auto& x : w) x = 1 + (int)(rng() % 6);
      ws.push_back(w);
    }
  auto serial = batch_mixed_insertion(ws, false);
  auto par = batch_mixed_insertion(ws, true);
  REQUIRE(serial.size() == par.size());
  for (std::size_t i = 0; i < ws.size(); ++i) {
    CHECK(serial[i].p == par[i].p);
    CHECK(serial[i].q == par[i].q);
  }
}

TEST_CASE("parallel recording comparison matches the serial reference") {
  auto ws = all_words(6, 4);
  auto serial = batch_recording_mismatches(ws, false);
  auto par = batch_recording_mismatches(ws, true);
  CHECK(serial == par);
  CHECK(serial.empty());  // the two recording tableaux agree on every word
}

TEST_CASE("parallel coefficient sweep matches the serial reference") {
  auto serial = lr_agreement_sweep(6, false);
  auto par = lr_agreement_sweep(6, true);
  CHECK(serial == par);
  CHECK(serial.mismatches == 0);
  CHECK(serial.triples == 165);
  CHECK_THROWS_AS(lr_agreement_sweep(11), budget_error);
}

TEST_CASE("parallel runs are deterministic") {
  auto ws = all_words(5, 5);
  auto a = batch_mixed_insertion(ws, true);
  auto b = batch_mixed_insertion(ws, true);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].p == b[i].p);
    CHECK(a[i].q == b[i].q);
  }
}
