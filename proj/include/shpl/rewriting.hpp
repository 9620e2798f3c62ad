#pragma once

#include <string>
#include <vector>

#include "shpl/core.hpp"
#include "shpl/insertion.hpp"

namespace shpl {

// A rewrite rule over a 3- or 4-letter window.  lhs/rhs are patterns over the
// variables a..d; chain holds the comparison between consecutive variables of
// a,b,c,d in alphabetical order: '<' strict, '=' weak (<=).  Rules apply in
// both directions.
struct rewrite_rule {
  std::string lhs, rhs, chain;
};

const std::vector<rewrite_rule>& shifted_rules();
const std::vector<rewrite_rule>& plactic_rules();

std::vector<word> rule_neighbors(const word& w, const std::vector<rewrite_rule>& rules);
std::vector<word> shifted_knuth_neighbors(const word& w);
std::vector<word> plactic_knuth_neighbors(const word& w);

// Breadth-first closure over the words of the same content; false right away
// on a content mismatch.
bool equivalent_by_relations(const word& u, const word& v);
bool plactic_equivalent_by_relations(const word& u, const word& v);

struct shifted_class {
  shifted_tableau tableau;  // shared mixed insertion tableau
  std::vector<word> members;
};
struct plactic_class {
  std::vector<std::vector<int>> tableau;  // shared row insertion tableau
  std::vector<word> members;
};

// All words with content[i] copies of i+1, in lexicographic order.
std::vector<word> words_of_content(const std::vector<int>& content);

// Partition of the words of the given content into classes; classes sorted by
// their lexicographically smallest member, members sorted.  Throws
// budget_error when the total letter count exceeds max_total.
std::vector<shifted_class> enumerate_shifted_classes(const std::vector<int>& content,
                                                     int max_total = 10);
std::vector<plactic_class> enumerate_plactic_classes(const std::vector<int>& content,
                                                     int max_total = 10);

// The plactic class containing the given shifted class (well defined: each
// plactic class is a disjoint union of shifted ones).
plactic_class projection_pi(const shifted_class& c);

}  // namespace shpl
