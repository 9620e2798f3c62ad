#pragma once

#include <cstddef>
#include <vector>

#include "shpl/core.hpp"
#include "shpl/insertion.hpp"

namespace shpl {

// Batch kernels over independent inputs.  Each one has a serial reference
// path (parallel = false) and an OpenMP path; both produce identical output
// in the same order.

std::vector<insertion_pair> batch_mixed_insertion(const std::vector<word>& ws,
                                                  bool parallel = true);

// Indices of words whose two recording tableaux (mixed and row-bumping
// insertion) differ; expected empty.
std::vector<std::size_t> batch_recording_mismatches(const std::vector<word>& ws,
                                                    bool parallel = true);

struct lr_sweep_result {
  long long triples = 0;
  long long mismatches = 0;

  friend bool operator==(const lr_sweep_result&, const lr_sweep_result&) = default;
};

// Cross-checks the three structure-constant routines on every (lambda, mu,
// nu) with |lambda| <= max_size.  Throws budget_error above size 10.
lr_sweep_result lr_agreement_sweep(int max_size, bool parallel = true);

// All words of the given length over 1..alphabet, in lexicographic order.
std::vector<word> all_words(int length, int alphabet);

}  // namespace shpl
