#pragma once

#include "shpl/core.hpp"

namespace shpl {

struct insertion_pair {
  shifted_tableau p;
  shifted_tableau q;  // standard, same shape as p
};

// One displacement during a letter's bumping path.
struct bump_step {
  cell at;
  letter displaced;
  bool column_mode;  // displacement found while scanning a column
};

// Inserts a letter code (primed or not); returns the new cell.  If trace is
// given, records every displacement in order (displaced letters increase
// along the path, strictly except across a diagonal bump).
cell mixed_insert_letter(shifted_tableau& t, letter x, std::vector<bump_step>* trace = nullptr);

insertion_pair mixed_insertion(const word& w);

// Reverse of one insertion step: removes the outer corner at `at` and returns
// the letter whose insertion created it.  Throws corner_error if the cell is
// not a removable corner.
letter mixed_delete(shifted_tableau& t, cell at);

// The unique standard tableau of the given shape built from nested connected
// vees; recording tableau of every mixed reading word.
shifted_tableau special_recording_tableau(const strict_partition& shape);

// Mixed reading word: the word mapping to (t, special recording tableau)
// under mixed insertion, extracted by reverse insertion.  The letters version
// returns raw codes (used by skew readings over the signed alphabet).
word mread(const shifted_tableau& t);
std::vector<letter> mread_letters(const shifted_tableau& t);

// Ordinary Robinson-Schensted-Knuth row insertion (P rows weakly increase,
// columns strictly increase; no shifting).  q rows hold 1..n.
struct rsk_pair {
  std::vector<std::vector<int>> p;
  std::vector<std::vector<int>> q;
};
rsk_pair rsk_insertion(const word& w);

std::string format_young(const std::vector<std::vector<int>>& rows);

}  // namespace shpl
