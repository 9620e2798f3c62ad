#include "shpl/insertion.hpp"

#include <algorithm>

namespace shpl {

// rows of the shifted diagram meeting column c: r = 1..min(c, nrows) with the
// row long enough; returned bottom row is the last such r (rows are nested).
static int column_bottom(const shifted_tableau& t, int c) {
  int bottom = 0;
  for (int r = 1; r <= std::min(c, (int)t.rows.size()); ++r)
    if (c - r < (int)t.rows[r - 1].size()) bottom = r;
  return bottom;
}

cell mixed_insert_letter(shifted_tableau& t, letter x, std::vector<bump_step>* trace) {
  letter cur = x;
  bool col_mode = false;
  int idx = 1;  // row index (row mode) or column index (column mode)
  while (true) {
    if (!col_mode) {
      int r = idx;
      if (r > (int)t.rows.size()) {
        if (r != (int)t.rows.size() + 1 || is_primed(cur))
          throw internal_error("row insertion fell past the diagram");
        t.rows.push_back({cur});
        return {r, r};
      }
      auto& row = t.rows[r - 1];
      int j = -1;
      for (int k = 0; k < (int)row.size(); ++k)
        if (row[k] > cur) {
          j = k;
          break;
        }
      if (j < 0) {
        row.push_back(cur);
        int c = r + (int)row.size() - 1;
        if (is_primed(cur) && c == r)
          throw internal_error("primed letter landed on the diagonal");
        return {r, c};
      }
      int c = r + j;
      letter old = row[j];
      row[j] = cur;
      if (trace) trace->push_back({{r, c}, old, false});
      if (c == r) {  // diagonal bump: prime the displaced letter, move right
        if (is_primed(cur))
          throw internal_error("primed letter cannot bump on the diagonal");
        if (is_primed(old)) throw internal_error("primed letter on the diagonal");
        cur = prime_of(old);
        col_mode = true;
        idx = c + 1;
      } else if (!is_primed(old)) {
        cur = old;
        idx = r + 1;
      } else {
        cur = old;
        col_mode = true;
        idx = c + 1;
      }
    } else {
      int c = idx;
      int bottom = column_bottom(t, c);
      int rr = 0;
      for (int r = 1; r <= bottom; ++r)
        if (c - r < (int)t.rows[r - 1].size() && t.at(r, c) > cur) {
          rr = r;
          break;
        }
      if (rr == 0) {
        int r = bottom + 1;
        if (r == c) throw internal_error("primed letter landing on the diagonal");
        if (r > (int)t.rows.size() || (int)t.rows[r - 1].size() != c - r)
          throw internal_error("column append not at a row end");
        t.rows[r - 1].push_back(cur);
        return {r, c};
      }
      if (rr == c) throw internal_error("primed letter bumping the diagonal");
      letter old = t.at(rr, c);
      t.at(rr, c) = cur;
      if (trace) trace->push_back({{rr, c}, old, true});
      if (!is_primed(old)) {
        cur = old;
        col_mode = false;
        idx = rr + 1;
      } else {
        cur = old;
        idx = c + 1;
      }
    }
  }
}

insertion_pair mixed_insertion(const word& w) {
  insertion_pair out;
  for (int i = 0; i < (int)w.size(); ++i) {
    cell at = mixed_insert_letter(out.p, make_unprimed(w[i]));
    while (at.row > (int)out.q.rows.size()) out.q.rows.push_back({});
    out.q.rows[at.row - 1].push_back(make_unprimed(i + 1));
    if (at.col != at.row + (int)out.q.rows[at.row - 1].size() - 1)
      throw internal_error("recording cell out of step with insertion cell");
  }
  return out;
}

letter mixed_delete(shifted_tableau& t, cell at) {
  int r0 = at.row, c0 = at.col;
  if (r0 < 1 || r0 > (int)t.rows.size())
    throw corner_error("no such row " + std::to_string(r0));
  auto& row0 = t.rows[r0 - 1];
  if (c0 != r0 + (int)row0.size() - 1)
    throw corner_error("cell is not at the end of its row");
  if (r0 < (int)t.rows.size() && (int)t.rows[r0].size() >= c0 - r0)
    throw corner_error("cell has a neighbor below");
  letter e = row0.back();
  row0.pop_back();
  if (row0.empty()) t.rows.pop_back();
  bool col_mode = is_primed(e);
  int idx = col_mode ? c0 : r0;
  while (true) {
    if (!col_mode) {
      int r = idx;
      if (r == 1) {
        if (is_primed(e)) throw internal_error("primed letter exiting the tableau");
        return e;
      }
      auto& prow = t.rows[r - 2];
      int j = -1;
      for (int k = (int)prow.size() - 1; k >= 0; --k)
        if (prow[k] < e) {
          j = k;
          break;
        }
      if (j < 0) throw internal_error("reverse row step found no smaller entry");
      if (j == 0 && is_primed(e))
        throw internal_error("primed letter entering the diagonal from below");
      letter f = prow[j];
      prow[j] = e;
      e = f;
      col_mode = is_primed(f);
      idx = col_mode ? (r - 1) + j : r - 1;
    } else {
      int c = idx;
      if (c < 2) throw internal_error("reverse column step at column 1");
      int rr = 0;
      int bottom = column_bottom(t, c - 1);
      for (int r = bottom; r >= 1; --r)
        if (c - 1 - r < (int)t.rows[r - 1].size() && t.at(r, c - 1) < e) {
          rr = r;
          break;
        }
      if (rr == 0) throw internal_error("reverse column step found no smaller entry");
      letter f = t.at(rr, c - 1);
      if (rr == c - 1) {  // landing on the diagonal: drop the prime
        if (!is_primed(e)) throw internal_error("unprimed letter entering the diagonal sideways");
        e = unprime_of(e);
      }
      t.at(rr, c - 1) = e;
      e = f;
      col_mode = is_primed(f);
      idx = col_mode ? c - 1 : rr;
    }
  }
}

shifted_tableau special_recording_tableau(const strict_partition& shape) {
  check_strict_partition(shape);
  int l = (int)shape.size();
  shifted_tableau t;
  t.rows.resize(l);
  for (int i = 0; i < l; ++i) t.rows[i].assign(shape[i], 0);
  // Build from the innermost suffix shape outward.  Pass i fills the vee of
  // the skew piece (shape_i..shape_{l-1}) / (shape_{i+1}..shape_{l-1}),
  // embedded at the top-left of the full diagram: row r of the piece sits in
  // row r, columns r + shape_{i+r} .. r + shape_{i+r-1} - 1.
  int m = 0;
  for (int i = l - 1; i >= 0; --i) {
    int rows_here = l - i;
    std::vector<cell> vert;
    std::vector<cell> horiz;
    for (int r = 1; r <= rows_here; ++r) {
      int outer = shape[i + r - 1];
      int inner = (r < rows_here) ? shape[i + r] : 0;
      vert.push_back({r, r + inner});
      for (int c = r + inner + 1; c <= r + outer - 1; ++c) horiz.push_back({r, c});
    }
    std::sort(horiz.begin(), horiz.end(),
              [](const cell& a, const cell& b) { return a.col < b.col; });
    int k = m;
    for (auto& c : vert) t.rows[c.row - 1][c.col - c.row] = make_unprimed(++k);
    for (auto& c : horiz) t.rows[c.row - 1][c.col - c.row] = make_unprimed(++k);
    m += shape[i];
  }
  return t;
}

std::vector<letter> mread_letters(const shifted_tableau& t) {
  shifted_tableau work = t;
  strict_partition sh = t.shape();
  shifted_tableau u = sh.empty() ? shifted_tableau{} : special_recording_tableau(sh);
  int n = t.size();
  std::vector<cell> pos(n + 1);
  for (int i = 0; i < (int)u.rows.size(); ++i)
    for (int j = 0; j < (int)u.rows[i].size(); ++j)
      pos[letter_value(u.rows[i][j])] = {i + 1, i + 1 + j};
  std::vector<letter> w(n);
  for (int k = n; k >= 1; --k) w[k - 1] = mixed_delete(work, pos[k]);
  if (!work.empty()) throw internal_error("reading left a nonempty tableau");
  return w;
}

word mread(const shifted_tableau& t) {
  auto codes = mread_letters(t);
  word w;
  w.reserve(codes.size());
  for (letter c : codes) {
    if (c <= 0 || is_primed(c)) throw internal_error("reading word left the alphabet");
    w.push_back(letter_value(c));
  }
  return w;
}

rsk_pair rsk_insertion(const word& w) {
  rsk_pair out;
  for (int i = 0; i < (int)w.size(); ++i) {
    int cur = w[i];
    size_t r = 0;
    while (true) {
      if (r == out.p.size()) {
        out.p.push_back({cur});
        out.q.push_back({i + 1});
        break;
      }
      auto& row = out.p[r];
      auto it = std::upper_bound(row.begin(), row.end(), cur);
      if (it == row.end()) {
        row.push_back(cur);
        out.q[r].push_back(i + 1);
        break;
      }
      std::swap(*it, cur);
      ++r;
    }
  }
  return out;
}

std::string format_young(const std::vector<std::vector<int>>& rows) {
  std::string out;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) out += " / ";
    for (size_t j = 0; j < rows[i].size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(rows[i][j]);
    }
  }
  return out;
}

}  // namespace shpl
