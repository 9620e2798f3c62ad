#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace shpl {

// Letters are stored as single ints: k <-> 2k, k' <-> 2k-1, so the order
// 1' < 1 < 2' < 2 < ... is plain integer comparison and "is primed" is a
// parity test.  The auxiliary negative alphabet negates the code, which keeps
// ... < -2 < -2' < -1 < -1' < 1' < 1 < ... in integer order as well.
using letter = int;
using word = std::vector<int>;              // unprimed positive values
using strict_partition = std::vector<int>;  // lambda_1 > ... > lambda_l > 0

constexpr letter make_unprimed(int k) { return k > 0 ? 2 * k : -2 * (-k); }
constexpr letter make_primed(int k) { return k > 0 ? 2 * k - 1 : -(2 * (-k) - 1); }
constexpr bool is_primed(letter c) { return ((c < 0 ? -c : c) & 1) != 0; }
constexpr int letter_value(letter c) {
  int v = ((c < 0 ? -c : c) + 1) / 2;
  return c < 0 ? -v : v;
}
constexpr letter prime_of(letter c) { return c > 0 ? c - 1 : c + 1; }    // pre: unprimed
constexpr letter unprime_of(letter c) { return c > 0 ? c + 1 : c - 1; }  // pre: primed

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct shape_error : error { using error::error; };
struct filling_error : error { using error::error; };
struct hook_error : error { using error::error; };
struct maximality_error : error { using error::error; };
struct corner_error : error { using error::error; };
struct split_error : error { using error::error; };
struct size_error : error { using error::error; };
struct budget_error : error { using error::error; };
struct empty_error : error { using error::error; };
struct internal_error : error { using error::error; };

struct cell {
  int row = 0, col = 0;  // 1-based shifted coordinates; diagonal is col == row
  friend bool operator==(const cell&, const cell&) = default;
};

// Row i (0-based) holds the cells (i+1, i+1) .. (i+1, i+len) of the shifted
// diagram; validity is enforced by validate_tableau, not by the container.
struct shifted_tableau {
  std::vector<std::vector<letter>> rows;

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
  letter& at(int r, int c) { return rows[r - 1][c - r]; }
  letter at(int r, int c) const { return rows[r - 1][c - r]; }
  bool has(int r, int c) const {
    return r >= 1 && r <= (int)rows.size() && c >= r &&
           c - r < (int)rows[r - 1].size();
  }
  friend bool operator==(const shifted_tableau&, const shifted_tableau&) = default;
};

// Standard filling of a skew shifted shape outer/inner; rows hold only the
// filled cells, row i starting at column i+1+inner_i.
struct skew_tableau {
  strict_partition outer, inner;
  std::vector<std::vector<int>> rows;

  int inner_at(int i) const { return i < (int)inner.size() ? inner[i] : 0; }
  int size() const {
    int n = 0;
    for (auto& r : rows) n += (int)r.size();
    return n;
  }
  friend bool operator==(const skew_tableau&, const skew_tableau&) = default;
};

void check_strict_partition(const strict_partition& p);
bool is_strict_partition(const strict_partition& p);

// Throws shape_error / filling_error with cell coordinates in the message.
shifted_tableau validate_tableau(const std::vector<std::vector<letter>>& rows,
                                 bool allow_negative = false);
void validate_skew_standard(const skew_tableau& t);

std::vector<int> content(const word& w);
std::vector<int> content(const shifted_tableau& t);
bool is_standard(const shifted_tableau& t);

// Vee recognition per the five-condition definition: a pivot entry j such
// that entries i..j form a vertical strip increasing downward, entries j..k a
// horizontal strip increasing rightward, and vertical boxes sit left of
// same-row horizontal boxes.  Requires the shape to be a (possibly
// disconnected) border strip: every diagonal occupied at most once.
bool is_vee(const skew_tableau& t);
int connected_components(const strict_partition& outer, const strict_partition& inner);
bool is_border_strip(const strict_partition& outer, const strict_partition& inner);

std::string format_letter(letter c);
std::string format_word(const word& w);
std::string format_tableau(const shifted_tableau& t);
std::string format_partition(const strict_partition& p);

// Words: space/comma separated; a single all-digit token of length > 1 is
// split into its digits ("3415961254" reads as 3,4,1,5,9,6,1,2,5,4).
word parse_word(const std::string& s);
// Tableaux: rows separated by '/', entries space separated, primes as a
// trailing apostrophe: "1 1 2 3' 4 / 4 5 5 / 6 9'".
shifted_tableau parse_tableau(const std::string& s);
strict_partition parse_partition(const std::string& s);

std::vector<strict_partition> strict_partitions_of(int n);
std::vector<std::vector<int>> partitions_of(int n);

// All standard shifted tableaux of the given shape (unprimed 1..n fillings).
std::vector<shifted_tableau> standard_tableaux(const strict_partition& shape);

}  // namespace shpl
