#include "shpl/jdt.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "shpl/insertion.hpp"

namespace shpl {

namespace {

using grid = std::map<std::pair<int, int>, int>;

// Rows of the inner staircase whose last cell can be vacated while keeping
// the staircase a strict partition.
std::vector<cell> staircase_corners(const std::vector<int>& inner) {
  std::vector<cell> cs;
  for (int i = 0; i < (int)inner.size(); ++i) {
    int next = (i + 1 < (int)inner.size()) ? inner[i + 1] : 0;
    bool last = i + 1 == (int)inner.size();
    if (inner[i] - 1 > next || (inner[i] - 1 == 0 && last))
      cs.push_back({i + 1, i + inner[i]});
  }
  return cs;
}

// Slides the filling in g over the vacated inner cells until none remain.
// policy selects which corner to vacate next: 0 picks the bottom-most
// removable corner, 1 the right-most.
std::vector<std::vector<int>> rectify_grid(std::vector<int> outer, std::vector<int> inner,
                                           grid g, int policy) {
  while (!inner.empty()) {
    auto cs = staircase_corners(inner);
    if (cs.empty()) throw internal_error("inner staircase has no removable corner");
    auto key0 = [](const cell& a, const cell& b) {
      return std::pair(a.row, a.col) < std::pair(b.row, b.col);
    };
    auto key1 = [](const cell& a, const cell& b) {
      return std::pair(a.col, a.row) < std::pair(b.col, b.row);
    };
    std::sort(cs.begin(), cs.end(), policy == 0 ? +key0 : +key1);
    int r = cs.back().row, c = cs.back().col;
    inner[r - 1] -= 1;
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    for (;;) {
      auto east_it = g.find({r, c + 1});
      // no cell exists below the diagonal, so a diagonal hole only looks east
      auto south_it = c >= r + 1 ? g.find({r + 1, c}) : g.end();
      bool east = east_it != g.end(), south = south_it != g.end();
      if (!east && !south) {
        if (c != r + outer[r - 1] - 1)
          throw internal_error("hole came to rest inside the diagram");
        outer[r - 1] -= 1;
        while (!outer.empty() && outer.back() == 0) outer.pop_back();
        break;
      }
      if (!south || (east && east_it->second < south_it->second)) {
        g[{r, c}] = east_it->second;
        g.erase(east_it);
        c += 1;
      } else {
        g[{r, c}] = south_it->second;
        g.erase(south_it);
        r += 1;
      }
    }
  }
  std::vector<std::vector<int>> rows(outer.size());
  for (int i = 0; i < (int)outer.size(); ++i) {
    for (int j = 0; j < outer[i]; ++j) {
      auto it = g.find({i + 1, i + 1 + j});
      if (it == g.end()) throw internal_error("rectified diagram has a gap");
      rows[i].push_back(it->second);
    }
  }
  return rows;
}

// Runs both corner schedules and insists the results coincide.
std::vector<std::vector<int>> rectify_both(const std::vector<int>& outer,
                                           const std::vector<int>& inner, const grid& g) {
  auto a = rectify_grid(outer, inner, g, 0);
  auto b = rectify_grid(outer, inner, g, 1);
  if (a != b) throw internal_error("slides along different corner orders disagree");
  return a;
}

shifted_tableau to_codes(const std::vector<std::vector<int>>& plain) {
  shifted_tableau t;
  t.rows.resize(plain.size());
  for (size_t i = 0; i < plain.size(); ++i)
    for (int v : plain[i]) t.rows[i].push_back(make_unprimed(v));
  return t;
}

}  // namespace

shifted_tableau shifted_jdt_rectify(const skew_tableau& t) {
  validate_skew_standard(t);
  grid g;
  for (int i = 0; i < (int)t.rows.size(); ++i) {
    int off = t.inner_at(i);
    for (int j = 0; j < (int)t.rows[i].size(); ++j)
      g[{i + 1, i + 1 + off + j}] = t.rows[i][j];
  }
  std::vector<int> inner(t.inner.begin(), t.inner.end());
  auto out = to_codes(rectify_both(t.outer, inner, g));
  validate_tableau(out.rows);
  if (!is_standard(out)) throw internal_error("rectification is not standard");
  return out;
}

shifted_tableau delta(const shifted_tableau& u) {
  if (u.empty()) throw empty_error("cannot remove the first entry of an empty tableau");
  validate_tableau(u.rows);
  if (!is_standard(u)) throw filling_error("tableau is not standard");
  grid g;
  for (int i = 0; i < (int)u.rows.size(); ++i)
    for (int j = 0; j < (int)u.rows[i].size(); ++j)
      g[{i + 1, i + 1 + j}] = letter_value(u.rows[i][j]);
  if (g[{1, 1}] != 1) throw internal_error("smallest entry is not in the corner");
  g.erase({1, 1});
  std::vector<int> outer(u.shape());
  auto rows = rectify_grid(outer, {1}, g, 0);
  for (auto& row : rows)
    for (int& v : row) v -= 1;
  return to_codes(rows);
}

shifted_tableau rsk_to_mixed_recording(const std::vector<std::vector<int>>& q) {
  int l = (int)q.size();
  if (l == 0) return {};
  int n = 0;
  for (auto& row : q) n += (int)row.size();
  std::vector<char> seen(n + 1, 0);
  for (int i = 0; i < l; ++i) {
    if (q[i].empty() || (i > 0 && q[i].size() > q[i - 1].size()))
      throw shape_error("rows do not form a partition");
    for (int j = 0; j < (int)q[i].size(); ++j) {
      int e = q[i][j];
      if (e < 1 || e > n || seen[e])
        throw filling_error("entries are not exactly 1.." + std::to_string(n));
      seen[e] = 1;
      if (j > 0 && q[i][j - 1] >= e) throw filling_error("rows must strictly increase");
      if (i > 0 && q[i - 1][j] >= e) throw filling_error("columns must strictly increase");
    }
  }
  // park the tableau east of the staircase (l, l-1, ..., 1), columns aligned
  std::vector<int> outer(l), inner(l);
  grid g;
  for (int i = 0; i < l; ++i) {
    inner[i] = l - i;
    outer[i] = (int)q[i].size() + l - i;
    for (int j = 0; j < (int)q[i].size(); ++j) g[{i + 1, l + 1 + j}] = q[i][j];
  }
  return to_codes(rectify_both(outer, inner, g));
}

word stan_word(const word& w) {
  std::map<int, int> start;
  for (int x : w) {
    if (x < 1) throw filling_error("word letters must be positive");
    start[x] += 1;
  }
  int total = 0;
  for (auto& [v, cnt] : start) {
    int here = cnt;
    cnt = total;  // first label handed to v is total+1
    total += here;
  }
  std::map<int, int> seen;
  word out;
  out.reserve(w.size());
  for (int x : w) out.push_back(start[x] + ++seen[x]);
  return out;
}

shifted_tableau stan_tableau(const shifted_tableau& t) {
  validate_tableau(t.rows);
  struct entry {
    int value;
    bool primed;
    int row, col;
  };
  std::vector<entry> cells;
  for (int i = 0; i < (int)t.rows.size(); ++i)
    for (int j = 0; j < (int)t.rows[i].size(); ++j) {
      letter e = t.rows[i][j];
      cells.push_back({letter_value(e), is_primed(e), i + 1, i + 1 + j});
    }
  std::set<int> values;
  for (auto& c : cells) values.insert(c.value);
  std::map<std::pair<int, int>, letter> out;
  int k = 0;
  for (int v : values) {
    // the primed copies, top to bottom, come before the unprimed, left to right
    std::vector<entry> primed, unprimed;
    for (auto& c : cells)
      if (c.value == v) (c.primed ? primed : unprimed).push_back(c);
    std::sort(primed.begin(), primed.end(),
              [](const entry& a, const entry& b) { return a.row < b.row; });
    std::sort(unprimed.begin(), unprimed.end(),
              [](const entry& a, const entry& b) { return a.col < b.col; });
    for (auto& c : primed) out[{c.row, c.col}] = make_primed(++k);
    for (auto& c : unprimed) out[{c.row, c.col}] = make_unprimed(++k);
  }
  shifted_tableau s;
  s.rows.resize(t.rows.size());
  for (int i = 0; i < (int)t.rows.size(); ++i)
    for (int j = 0; j < (int)t.rows[i].size(); ++j)
      s.rows[i].push_back(out.at({i + 1, i + 1 + j}));
  return s;
}

decomposition_tableau stan_ssdt(const decomposition_tableau& r) {
  validate_ssdt(r.rows);
  word s = stan_word(read_word(r));
  decomposition_tableau out;
  out.rows.resize(r.rows.size());
  size_t pos = 0;
  for (int i = (int)r.rows.size() - 1; i >= 0; --i) {
    for (size_t j = 0; j < r.rows[i].size(); ++j) out.rows[i].push_back((int)s[pos + j]);
    pos += r.rows[i].size();
  }
  return out;
}

word skew_mread(const strict_partition& outer, const strict_partition& inner,
                const std::vector<std::vector<letter>>& rows,
                const shifted_tableau& inner_numbering) {
  if (inner_numbering.shape() != inner) throw shape_error("numbering does not fill the inner shape");
  if (!inner.empty()) {
    validate_tableau(inner_numbering.rows);
    if (!is_standard(inner_numbering)) throw filling_error("inner numbering is not standard");
  }
  if (rows.size() != outer.size()) throw shape_error("row count does not match outer shape");
  int m = 0;
  for (int part : inner) m += part;
  std::vector<std::vector<letter>> full(outer.size());
  for (size_t i = 0; i < outer.size(); ++i) {
    int off = i < inner.size() ? inner[i] : 0;
    if ((int)rows[i].size() != outer[i] - off)
      throw shape_error("row " + std::to_string(i + 1) + " length does not match skew shape");
    for (int j = 0; j < off; ++j) {
      int k = letter_value(inner_numbering.rows[i][j]);
      full[i].push_back(make_unprimed(k - m - 1));
    }
    full[i].insert(full[i].end(), rows[i].begin(), rows[i].end());
  }
  shifted_tableau combined = validate_tableau(full, /*allow_negative=*/true);
  word out;
  for (letter c : mread_letters(combined))
    if (c > 0) {
      if (is_primed(c)) throw internal_error("skew reading produced a primed letter");
      out.push_back(letter_value(c));
    }
  return out;
}

word skew_mread(const strict_partition& outer, const strict_partition& inner,
                const std::vector<std::vector<letter>>& rows) {
  shifted_tableau numbering;
  numbering.rows.resize(inner.size());
  int k = 0;
  for (size_t i = 0; i < inner.size(); ++i)
    for (int j = 0; j < inner[i]; ++j) numbering.rows[i].push_back(make_unprimed(++k));
  return skew_mread(outer, inner, rows, numbering);
}

shifted_tableau skew_rect(const strict_partition& outer, const strict_partition& inner,
                          const std::vector<std::vector<letter>>& rows) {
  return mixed_insertion(skew_mread(outer, inner, rows)).p;
}

}  // namespace shpl
