#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "shpl/core.hpp"
#include "shpl/insertion.hpp"
#include "shpl/jdt.hpp"
#include "shpl/rewriting.hpp"
#include "shpl/ssdt.hpp"

using namespace shpl;

namespace {

word all_suffix(const word& w, size_t k) { return word(w.begin() + k, w.end()); }

// independent slide engine for the closure oracle: explores EVERY choice of
// inner corner at every step and collects all final tableaux
using pos = std::pair<int, int>;

void closure_rec(std::vector<int> outer, std::vector<int> inner, std::map<pos, int> g,
                 std::set<std::string>& results) {
  if (inner.empty()) {
    std::vector<std::vector<letter>> rows(outer.size());
    for (int i = 0; i < (int)outer.size(); ++i)
      for (int j = 0; j < outer[i]; ++j) rows[i].push_back(make_unprimed(g.at({i + 1, i + 1 + j})));
    results.insert(format_tableau(shifted_tableau{rows}));
    return;
  }
  std::vector<pos> corners;
  for (int i = 0; i < (int)inner.size(); ++i) {
    int next = i + 1 < (int)inner.size() ? inner[i + 1] : 0;
    if (inner[i] - 1 > next || (inner[i] - 1 == 0 && i + 1 == (int)inner.size()))
      corners.push_back({i + 1, i + inner[i]});
  }
  REQUIRE(!corners.empty());
  for (auto [hr, hc] : corners) {
    auto out2 = outer;
    auto in2 = inner;
    auto g2 = g;
    in2[hr - 1] -= 1;
    while (!in2.empty() && in2.back() == 0) in2.pop_back();
    int r = hr, c = hc;
    for (;;) {
      bool east = g2.count({r, c + 1});
      bool south = c >= r + 1 && g2.count({r + 1, c});
      if (!east && !south) {
        REQUIRE(c == r + out2[r - 1] - 1);
        out2[r - 1] -= 1;
        while (!out2.empty() && out2.back() == 0) out2.pop_back();
        break;
      }
      if (!south || (east && g2.at({r, c + 1}) < g2.at({r + 1, c}))) {
        g2[{r, c}] = g2.at({r, c + 1});
        g2.erase({r, c + 1});
        c += 1;
      } else {
        g2[{r, c}] = g2.at({r + 1, c});
        g2.erase({r + 1, c});
        r += 1;
      }
    }
    closure_rec(out2, in2, g2, results);
  }
}

// all standard fillings of outer/inner, by placing 1..n left-to-right
void fillings_rec(const skew_tableau& shape, std::map<pos, int>& placed, int k, int n,
                  std::vector<skew_tableau>& out) {
  if (k > n) {
    skew_tableau t = shape;
    t.rows.assign(shape.outer.size(), {});
    for (int i = 0; i < (int)shape.outer.size(); ++i) {
      int off = i < (int)shape.inner.size() ? shape.inner[i] : 0;
      for (int c = i + 1 + off; c <= i + shape.outer[i]; ++c)
        t.rows[i].push_back(placed.at({i + 1, c}));
    }
    out.push_back(t);
    return;
  }
  for (int i = 0; i < (int)shape.outer.size(); ++i) {
    int r = i + 1;
    int off = i < (int)shape.inner.size() ? shape.inner[i] : 0;
    // rows fill left to right, so the only candidate is the leftmost empty cell
    for (int c = r + off; c <= i + shape.outer[i]; ++c) {
      if (placed.count({r, c})) continue;
      if (r > 1) {
        int off_up = r - 2 < (int)shape.inner.size() ? shape.inner[r - 2] : 0;
        bool up_in = c >= r - 1 + off_up && c <= r - 2 + shape.outer[r - 2];
        if (up_in && !placed.count({r - 1, c})) break;
      }
      placed[{r, c}] = k;
      fillings_rec(shape, placed, k + 1, n, out);
      placed.erase({r, c});
      break;
    }
  }
}

std::vector<skew_tableau> skew_standard_fillings(const strict_partition& outer,
                                                 const strict_partition& inner) {
  skew_tableau shape;
  shape.outer = outer;
  shape.inner = inner;
  int n = 0;
  for (size_t i = 0; i < outer.size(); ++i)
    n += outer[i] - (i < inner.size() ? inner[i] : 0);
  std::map<pos, int> placed;
  std::vector<skew_tableau> out;
  fillings_rec(shape, placed, 1, n, out);
  for (auto& t : out) validate_skew_standard(t);
  return out;
}

std::vector<strict_partition> strict_subshapes(const strict_partition& outer) {
  std::vector<strict_partition> all{{}};
  int total = 0;
  for (int p : outer) total += p;
  for (int n = 1; n <= total; ++n)
    for (auto& mu : strict_partitions_of(n)) {
      if (mu.size() > outer.size()) continue;
      bool fits = true;
      for (size_t i = 0; i < mu.size(); ++i)
        if (mu[i] > outer[i]) fits = false;
      if (fits) all.push_back(mu);
    }
  return all;
}

}  // namespace

TEST_CASE("skew rectification examples") {
  skew_tableau s;
  s.outer = {5, 4, 2};
  s.inner = {3, 1};
  s.rows = {{1, 4}, {2, 3, 5}, {6, 7}};
  CHECK(format_tableau(shifted_jdt_rectify(s)) == "1 2 3 4 / 5 6 7");

  // straight shapes come back unchanged
  skew_tableau st;
  st.outer = {3, 1};
  st.inner = {};
  st.rows = {{1, 2, 4}, {3}};
  CHECK(format_tableau(shifted_jdt_rectify(st)) == "1 2 4 / 3");

  skew_tableau single;
  single.outer = {2};
  single.inner = {1};
  single.rows = {{1}};
  CHECK(format_tableau(shifted_jdt_rectify(single)) == "1");

  skew_tableau empty_skew;
  CHECK(shifted_jdt_rectify(empty_skew).empty());

  skew_tableau bad = s;
  bad.rows = {{4, 1}, {2, 3, 5}, {6, 7}};
  CHECK_THROWS_AS(shifted_jdt_rectify(bad), filling_error);
}

TEST_CASE("rectification agrees with the closure over all slide orders") {
  for (auto [outer, inner] : std::vector<std::pair<strict_partition, strict_partition>>{
           {{3, 2}, {2}}, {{3, 1}, {1}}, {{4, 2}, {2, 1}}, {{3, 2, 1}, {2, 1}}}) {
    auto fillings = skew_standard_fillings(outer, inner);
    CHECK(!fillings.empty());
    for (auto& t : fillings) {
      std::map<pos, int> g;
      for (int i = 0; i < (int)t.rows.size(); ++i) {
        int off = t.inner_at(i);
        for (int j = 0; j < (int)t.rows[i].size(); ++j) g[{i + 1, i + 1 + off + j}] = t.rows[i][j];
      }
      std::set<std::string> results;
      closure_rec(std::vector<int>(outer.begin(), outer.end()),
                  std::vector<int>(inner.begin(), inner.end()), g, results);
      REQUIRE(results.size() == 1);
      CHECK(*results.begin() == format_tableau(shifted_jdt_rectify(t)));
    }
  }
}

TEST_CASE("rectification is order independent for all shapes up to size 7") {
  int checked = 0;
  for (int n = 1; n <= 7; ++n)
    for (auto& outer : strict_partitions_of(n))
      for (auto& inner : strict_subshapes(outer))
        for (auto& t : skew_standard_fillings(outer, inner)) {
          // throws internal_error if the two corner schedules were to disagree
          auto r = shifted_jdt_rectify(t);
          CHECK(is_standard(r));
          CHECK(r.size() == t.size());
          ++checked;
        }
  CHECK(checked > 200);  // 276 fillings across every outer/inner pair
}

TEST_CASE("delta removes the first entry of the recording tableau") {
  word w = {3, 4, 1, 5, 9, 6, 1, 2, 5, 4};
  for (size_t k = 0; k + 1 < w.size(); ++k) {
    auto q = sk_insertion(all_suffix(w, k)).q;
    CHECK(delta(q) == sk_insertion(all_suffix(w, k + 1)).q);
    CHECK(delta(q) == delta(mixed_insertion(all_suffix(w, k)).q));
  }
  CHECK(delta(sk_insertion({7}).q).empty());
  CHECK_THROWS_AS(delta(shifted_tableau{}), empty_error);
  CHECK_THROWS_AS(delta(parse_tableau("1 1")), filling_error);
}

TEST_CASE("delta lemma sweep") {
  std::vector<word> ws;
  for (int len = 1; len <= 6; ++len) {
    std::vector<word> level;
    word cur(len, 1);
    for (;;) {
      level.push_back(cur);
      int i = len - 1;
      while (i >= 0 && cur[i] == 3) cur[i--] = 1;
      if (i < 0) break;
      cur[i] += 1;
    }
    ws.insert(ws.end(), level.begin(), level.end());
  }
  for (auto& w : ws) {
    auto q = sk_insertion(w).q;
    auto tail = all_suffix(w, 1);
    CHECK(delta(q) == sk_insertion(tail).q);
  }
}

TEST_CASE("row insertion recording rectifies to mixed insertion recording") {
  word w = {3, 4, 1, 5, 9, 6, 1, 2, 5, 4};
  CHECK(rsk_to_mixed_recording(rsk_insertion(w).q) == mixed_insertion(w).q);

  for (int len = 1; len <= 6; ++len) {
    word cur(len, 1);
    for (;;) {
      CHECK(rsk_to_mixed_recording(rsk_insertion(cur).q) == mixed_insertion(cur).q);
      int i = len - 1;
      while (i >= 0 && cur[i] == 3) cur[i--] = 1;
      if (i < 0) break;
      cur[i] += 1;
    }
  }

  std::mt19937 rng(20240817);
  for (int it = 0; it < 200; ++it) {
    int len = 1 + (int)(rng() % 12);
    word w2;
    for (int i = 0; i < len; ++i) w2.push_back(1 + (int)(rng() % 6));
    CHECK(rsk_to_mixed_recording(rsk_insertion(w2).q) == mixed_insertion(w2).q);
  }

  CHECK(rsk_to_mixed_recording({}).empty());
  CHECK_THROWS_AS(rsk_to_mixed_recording({{1, 2}, {2}}), filling_error);
  CHECK_THROWS_AS(rsk_to_mixed_recording({{1}, {2, 3}}), shape_error);
  CHECK_THROWS_AS(rsk_to_mixed_recording({{2, 1}}), filling_error);
}

TEST_CASE("standardization of words, tableaux and decomposition tableaux") {
  CHECK(stan_word({2, 3, 3, 1, 4, 2, 1, 1}) == word{4, 6, 7, 1, 8, 5, 2, 3});
  CHECK(stan_word({1, 1, 1}) == word{1, 2, 3});
  CHECK(stan_word({}) == word{});
  CHECK(stan_word({3, 1, 4, 1, 5, 9, 2, 6}) == word{4, 1, 5, 2, 6, 8, 3, 7});
  CHECK_THROWS_AS(stan_word({1, 0, 2}), filling_error);

  CHECK(format_tableau(stan_tableau(parse_tableau("1 1 1 2' / 2 3' 4 / 3"))) ==
        "1 2 3 4' / 5 6' 8 / 7");
  CHECK(format_ssdt(stan_ssdt(parse_ssdt("4 2 1 1 / 3 1 3 / 2"))) == "8 5 2 3 / 6 1 7 / 4");

  // standard inputs are fixed points
  for (auto& t : standard_tableaux({4, 2, 1})) CHECK(stan_tableau(t) == t);
}

TEST_CASE("standardization commutes with both insertions") {
  for (int len = 1; len <= 5; ++len) {
    word cur(len, 1);
    for (;;) {
      word s = stan_word(cur);
      // a standardized word is a permutation of 1..n
      word sorted_s = s;
      std::sort(sorted_s.begin(), sorted_s.end());
      for (int i = 0; i < len; ++i) REQUIRE(sorted_s[i] == i + 1);

      auto mp = mixed_insertion(cur);
      auto ms = mixed_insertion(s);
      CHECK(ms.q == mp.q);
      CHECK(ms.p == stan_tableau(mp.p));

      auto kp = sk_insertion(cur);
      auto ks = sk_insertion(s);
      CHECK(ks.q == kp.q);
      CHECK(ks.p.rows == stan_ssdt(kp.p).rows);

      CHECK(is_hook_word(cur) == is_hook_word(s));

      int i = len - 1;
      while (i >= 0 && cur[i] == 3) cur[i--] = 1;
      if (i < 0) break;
      cur[i] += 1;
    }
  }
}

TEST_CASE("words are equivalent exactly when their standardizations are") {
  for (int len = 1; len <= 4; ++len) {
    std::vector<word> level;
    word cur(len, 1);
    for (;;) {
      level.push_back(cur);
      int i = len - 1;
      while (i >= 0 && cur[i] == 3) cur[i--] = 1;
      if (i < 0) break;
      cur[i] += 1;
    }
    for (auto& u : level)
      for (auto& v : level) {
        bool equiv = mixed_insertion(u).p == mixed_insertion(v).p;
        bool same_content = content(u) == content(v);
        bool stan_equiv = mixed_insertion(stan_word(u)).p == mixed_insertion(stan_word(v)).p;
        CHECK(equiv == (same_content && stan_equiv));
      }
  }

  // spot check against the rewriting relations themselves
  std::mt19937 rng(20240817);
  for (int it = 0; it < 30; ++it) {
    word u, v;
    for (int i = 0; i < 5; ++i) u.push_back(1 + (int)(rng() % 3));
    v = u;
    std::shuffle(v.begin(), v.end(), rng);
    bool equiv = equivalent_by_relations(u, v);
    bool stan_equiv = equivalent_by_relations(stan_word(u), stan_word(v));
    CHECK(equiv == (content(u) == content(v) && stan_equiv));
  }
}

TEST_CASE("skew reading words") {
  std::vector<std::vector<letter>> g14 = {
      {make_unprimed(1), make_unprimed(4)},
      {make_unprimed(2), make_unprimed(3), make_unprimed(5)},
      {make_unprimed(6), make_unprimed(7)}};
  CHECK(skew_mread({5, 4, 2}, {3, 1}, g14) == word{6, 2, 3, 7, 5, 1, 4});
  CHECK(format_tableau(skew_rect({5, 4, 2}, {3, 1}, g14)) == "1 2' 4 6' / 3 5 7'");

  // straight shapes reduce to the ordinary reading word
  for (auto& t : standard_tableaux({3, 2})) CHECK(skew_mread(t.shape(), {}, t.rows) == mread(t));
  auto t2 = parse_tableau("1 2' 2 4 / 3 4' 5");
  CHECK(skew_mread(t2.shape(), {}, t2.rows) == mread(t2));

  CHECK_THROWS_AS(skew_mread({3, 1}, {1}, {{make_unprimed(1)}, {make_unprimed(2)}}), shape_error);
  CHECK_THROWS_AS(skew_mread({3, 1}, {1}, {{make_unprimed(2), make_unprimed(1)}, {make_unprimed(1)}}),
                  filling_error);
}

TEST_CASE("diagonal recording word of the two row example") {
  // diagonals (column - row + 1) of the entries 7..1 in the section 1.4 filling
  std::vector<std::vector<int>> rows = {{1, 4}, {2, 3, 5}, {6, 7}};
  strict_partition outer{5, 4, 2}, inner{3, 1};
  std::map<int, pos> at;
  for (int i = 0; i < (int)rows.size(); ++i) {
    int off = i < (int)inner.size() ? inner[i] : 0;
    for (int j = 0; j < (int)rows[i].size(); ++j) at[rows[i][j]] = {i + 1, i + 1 + off + j};
  }
  word dw;
  for (int k = (int)at.size(); k >= 1; --k) dw.push_back(at[k].second - at[k].first + 1);
  CHECK(dw == word{2, 1, 4, 5, 3, 2, 4});
  CHECK(mread(parse_tableau("1 2' 2 4 / 3 4' 5")) == dw);
  CHECK(format_tableau(mixed_insertion(dw).p) == "1 2' 2 4 / 3 4' 5");
}

TEST_CASE("skew reading word does not depend on the inner numbering") {
  std::mt19937 rng(20240817);
  int combos = 0;
  for (auto [outer, inner] : std::vector<std::pair<strict_partition, strict_partition>>{
           {{3, 1}, {2}}, {{3, 2}, {2, 1}}, {{4, 2}, {2, 1}}, {{4, 1}, {3}}, {{3, 2}, {1}}}) {
    auto numberings = standard_tableaux(inner);
    REQUIRE(numberings.size() >= 1);
    int cells = 0;
    for (size_t i = 0; i < outer.size(); ++i)
      cells += outer[i] - (i < inner.size() ? inner[i] : 0);
    // random letter fillings of the skew cells, kept when semistandard
    for (int it = 0; it < 400; ++it) {
      std::vector<std::vector<letter>> rows(outer.size());
      for (size_t i = 0; i < outer.size(); ++i) {
        int len = outer[i] - ((int)i < (int)inner.size() ? inner[i] : 0);
        for (int j = 0; j < len; ++j) {
          int v = 1 + (int)(rng() % 3);
          rows[i].push_back(rng() % 2 ? make_primed(v) : make_unprimed(v));
        }
      }
      word canonical;
      try {
        canonical = skew_mread(outer, inner, rows);
      } catch (const error&) {
        continue;  // not semistandard
      }
      ++combos;
      CHECK((int)canonical.size() == cells);
      for (auto& numbering : numberings)
        CHECK(skew_mread(outer, inner, rows, numbering) == canonical);
    }
  }
  CHECK(combos > 50);
}

TEST_CASE("skew reading words of standard fillings standardize to themselves") {
  for (auto [outer, inner] : std::vector<std::pair<strict_partition, strict_partition>>{
           {{3, 2}, {2}}, {{4, 2}, {2, 1}}, {{3, 2, 1}, {2, 1}}, {{5, 4, 2}, {3, 1}}}) {
    for (auto& t : skew_standard_fillings(outer, inner)) {
      std::vector<std::vector<letter>> rows(t.rows.size());
      for (size_t i = 0; i < t.rows.size(); ++i)
        for (int e : t.rows[i]) rows[i].push_back(make_unprimed(e));
      word w = skew_mread(outer, inner, rows);
      CHECK((int)w.size() == t.size());
      CHECK(stan_word(w) == w);  // entries 1..n each used once
    }
  }
}
