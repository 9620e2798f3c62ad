#pragma once

#include <vector>

#include "shpl/core.hpp"
#include "shpl/ssdt.hpp"

namespace shpl {

// Rectifies a standard skew filling by shifted slides; every slide fills the
// current inner corner with the smaller of its east/south neighbors (cells
// below the staircase do not exist, so diagonal holes always pull from the
// east).  Runs two different corner schedules and insists they agree.
shifted_tableau shifted_jdt_rectify(const skew_tableau& t);

// Removes the entry 1, slides into the vacancy, decrements every entry.
shifted_tableau delta(const shifted_tableau& u);  // throws empty_error

// Embeds an ordinary standard Young tableau of shape mu as the skew shifted
// shape (mu + delta)/delta and rectifies; sends row-insertion recording
// tableaux to mixed-insertion recording tableaux.
shifted_tableau rsk_to_mixed_recording(const std::vector<std::vector<int>>& q);

// Standardization: distinct labels 1..n, ties broken left to right.
word stan_word(const word& w);
// Same shape, primes kept in place; the boxes holding i' are relabelled top
// to bottom before the boxes holding i left to right.
shifted_tableau stan_tableau(const shifted_tableau& t);
// Cellwise relabeling by the standardization of the reading word.
decomposition_tableau stan_ssdt(const decomposition_tableau& r);

// Reading word of a semistandard skew filling (rows hold letter codes): the
// inner shape is filled with letters below the alphabet, the combined tableau
// is read, and the word is restricted to positive letters.  The default
// numbering fills the inner shape row by row; any standard numbering of the
// inner shape gives the same word.
word skew_mread(const strict_partition& outer, const strict_partition& inner,
                const std::vector<std::vector<letter>>& rows);
word skew_mread(const strict_partition& outer, const strict_partition& inner,
                const std::vector<std::vector<letter>>& rows,
                const shifted_tableau& inner_numbering);
shifted_tableau skew_rect(const strict_partition& outer, const strict_partition& inner,
                          const std::vector<std::vector<letter>>& rows);

}  // namespace shpl
