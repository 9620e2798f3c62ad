#include "shpl/rewriting.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace shpl {

const std::vector<rewrite_rule>& shifted_rules() {
  static const std::vector<rewrite_rule> rules = {
      {"abdc", "adbc", "==<"}, {"acdb", "acbd", "=<="}, {"dacb", "adcb", "=<<"},
      {"badc", "bdac", "<=<"}, {"cbda", "cdba", "<<="}, {"dbca", "bdca", "<=<"},
      {"bcda", "bcad", "<=="}, {"cadb", "cdab", "=<="},
  };
  return rules;
}

const std::vector<rewrite_rule>& plactic_rules() {
  static const std::vector<rewrite_rule> rules = {
      {"acb", "cab", "=<"},  // a <= b < c
      {"bca", "bac", "<="},  // a < b <= c
  };
  return rules;
}

std::vector<word> rule_neighbors(const word& w, const std::vector<rewrite_rule>& rules) {
  std::set<word> out;
  for (const auto& rule : rules) {
    size_t k = rule.lhs.size();
    if (w.size() < k) continue;
    for (int dir = 0; dir < 2; ++dir) {
      const std::string& src = dir ? rule.rhs : rule.lhs;
      const std::string& dst = dir ? rule.lhs : rule.rhs;
      for (size_t i = 0; i + k <= w.size(); ++i) {
        int bound[4] = {0, 0, 0, 0};  // values of a..d; letters are positive
        bool ok = true;
        for (size_t j = 0; j < k && ok; ++j) {
          int v = src[j] - 'a';
          if (bound[v] && bound[v] != w[i + j]) ok = false;
          bound[v] = w[i + j];
        }
        for (size_t j = 0; j < rule.chain.size() && ok; ++j) {
          int x = bound[j], y = bound[j + 1];
          ok = rule.chain[j] == '<' ? x < y : x <= y;
        }
        if (!ok) continue;
        word nw = w;
        for (size_t j = 0; j < k; ++j) nw[i + j] = bound[dst[j] - 'a'];
        if (nw != w) out.insert(nw);
      }
    }
  }
  return {out.begin(), out.end()};
}

std::vector<word> shifted_knuth_neighbors(const word& w) {
  return rule_neighbors(w, shifted_rules());
}

std::vector<word> plactic_knuth_neighbors(const word& w) {
  return rule_neighbors(w, plactic_rules());
}

static bool bfs_reaches(const word& u, const word& v,
                        const std::vector<rewrite_rule>& rules) {
  if (u == v) return true;
  if (content(u) != content(v)) return false;
  std::set<word> seen{u};
  std::vector<word> frontier{u};
  while (!frontier.empty()) {
    std::vector<word> next;
    for (const auto& x : frontier)
      for (auto& y : rule_neighbors(x, rules)) {
        if (y == v) return true;
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return false;
}

bool equivalent_by_relations(const word& u, const word& v) {
  return bfs_reaches(u, v, shifted_rules());
}

bool plactic_equivalent_by_relations(const word& u, const word& v) {
  return bfs_reaches(u, v, plactic_rules());
}

std::vector<word> words_of_content(const std::vector<int>& content) {
  word base;
  for (size_t i = 0; i < content.size(); ++i) {
    if (content[i] < 0) throw filling_error("content entries must be nonnegative");
    base.insert(base.end(), content[i], (int)i + 1);
  }
  std::vector<word> out;
  std::sort(base.begin(), base.end());
  do out.push_back(base);
  while (std::next_permutation(base.begin(), base.end()));
  return out;
}

static void check_budget(const std::vector<int>& content, int max_total) {
  int total = std::accumulate(content.begin(), content.end(), 0);
  if (total > max_total)
    throw budget_error("content size " + std::to_string(total) +
                       " exceeds the enumeration bound " + std::to_string(max_total));
}

std::vector<shifted_class> enumerate_shifted_classes(const std::vector<int>& content,
                                                     int max_total) {
  check_budget(content, max_total);
  std::map<shifted_tableau, std::vector<word>,
           decltype([](const shifted_tableau& a, const shifted_tableau& b) {
             return a.rows < b.rows;
           })>
      buckets;
  for (auto& w : words_of_content(content)) buckets[mixed_insertion(w).p].push_back(w);
  std::vector<shifted_class> out;
  for (auto& [t, ws] : buckets) out.push_back({t, ws});
  std::sort(out.begin(), out.end(),
            [](const shifted_class& a, const shifted_class& b) {
              return a.members.front() < b.members.front();
            });
  return out;
}

std::vector<plactic_class> enumerate_plactic_classes(const std::vector<int>& content,
                                                     int max_total) {
  check_budget(content, max_total);
  std::map<std::vector<std::vector<int>>, std::vector<word>> buckets;
  for (auto& w : words_of_content(content)) buckets[rsk_insertion(w).p].push_back(w);
  std::vector<plactic_class> out;
  for (auto& [t, ws] : buckets) out.push_back({t, ws});
  std::sort(out.begin(), out.end(),
            [](const plactic_class& a, const plactic_class& b) {
              return a.members.front() < b.members.front();
            });
  return out;
}

plactic_class projection_pi(const shifted_class& c) {
  word rep = c.members.empty() ? mread(c.tableau) : c.members.front();
  auto key = rsk_insertion(rep).p;
  plactic_class out{key, {}};
  for (auto& w : words_of_content(content(rep)))
    if (rsk_insertion(w).p == key) out.members.push_back(w);
  return out;
}

}  // namespace shpl
