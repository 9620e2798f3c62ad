#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shpl/core.hpp"
#include "shpl/insertion.hpp"

namespace shpl {

// Hook words: a nonempty strictly decreasing prefix followed by a weakly
// increasing suffix (the prefix of a weakly increasing word is its first
// letter alone).
struct hook_word_split {
  word decreasing, increasing;
};

bool is_hook_word(const word& w);
hook_word_split hook_split(const word& w);  // throws split_error on non-hooks

// Length of the longest subsequence forming a hook word; equals the top row
// length of the mixed insertion tableau.
int longest_hook_subword_length(const word& w);

// Rows u_1..u_l, each a hook word, lengths strictly decreasing, and every u_i
// a longest hook subword of u_l ... u_{i+1} u_i.
struct decomposition_tableau {
  std::vector<word> rows;

  bool empty() const { return rows.empty(); }
  int size() const {
    int n = 0;
    for (auto& r : rows) n += (int)r.size();
    return n;
  }
  strict_partition shape() const {
    strict_partition s;
    for (auto& r : rows) s.push_back((int)r.size());
    return s;
  }
  friend bool operator==(const decomposition_tableau&, const decomposition_tableau&) = default;
};

// Throws shape_error / hook_error / maximality_error naming the failing row;
// also cross-checks the pairwise maximality criterion on consecutive rows.
decomposition_tableau validate_ssdt(const std::vector<word>& rows);

word read_word(const decomposition_tableau& r);  // u_l u_{l-1} ... u_1

// One row step: returns the bumped letter, or nothing when x extends the row.
std::optional<int> sk_insert_into_row(word& u, int x);

struct sk_pair {
  decomposition_tableau p;
  shifted_tableau q;
};
sk_pair sk_insertion(const word& w);

// The word-preserving bijection between decomposition tableaux and shifted
// tableaux, and its inverse.
shifted_tableau phi(const decomposition_tableau& r);
decomposition_tableau psi(const shifted_tableau& t);

std::string format_ssdt(const decomposition_tableau& r);
decomposition_tableau parse_ssdt(const std::string& s);

// All decomposition tableaux of the given shape over letters 1..max_letter.
std::vector<decomposition_tableau> decomposition_tableaux(const strict_partition& shape,
                                                          int max_letter);

}  // namespace shpl
