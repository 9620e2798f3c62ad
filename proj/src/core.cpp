#include "shpl/core.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

namespace shpl {

bool is_strict_partition(const strict_partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i - 1] <= p[i]) return false;
  }
  return true;
}

void check_strict_partition(const strict_partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0)
      throw shape_error("part " + std::to_string(i + 1) + " is not positive");
    if (i > 0 && p[i - 1] <= p[i])
      throw shape_error("parts not strictly decreasing at row " + std::to_string(i + 1) +
                        " (" + std::to_string(p[i - 1]) + " <= " + std::to_string(p[i]) + ")");
  }
}

static std::string cell_str(int r, int c) {
  return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
}

shifted_tableau validate_tableau(const std::vector<std::vector<letter>>& rows,
                                 bool allow_negative) {
  strict_partition sh;
  for (auto& r : rows) sh.push_back((int)r.size());
  check_strict_partition(sh);
  shifted_tableau t{rows};
  for (int i = 0; i < (int)rows.size(); ++i) {
    int r = i + 1;
    for (int j = 0; j < (int)rows[i].size(); ++j) {
      int c = r + j;
      letter x = rows[i][j];
      if (letter_value(x) < 1 && !(allow_negative && x < 0))
        throw filling_error("entry at " + cell_str(r, c) + " is not a positive letter");
      if (j == 0 && is_primed(x))
        throw filling_error("primed entry on the diagonal at " + cell_str(r, c));
      if (j > 0) {
        letter left = rows[i][j - 1];
        if (x < left)
          throw filling_error("row decreases at " + cell_str(r, c));
        if (x == left && is_primed(x))
          throw filling_error("primed letter repeated in row at " + cell_str(r, c));
      }
      // cell above (r-1, c) sits at rows[i-1][j+1]
      if (i > 0 && j + 1 < (int)rows[i - 1].size()) {
        letter up = rows[i - 1][j + 1];
        if (x < up)
          throw filling_error("column decreases at " + cell_str(r, c));
        if (x == up && !is_primed(x))
          throw filling_error("unprimed letter repeated in column at " + cell_str(r, c));
      }
    }
  }
  return t;
}

void validate_skew_standard(const skew_tableau& t) {
  check_strict_partition(t.outer);
  if (!t.inner.empty()) check_strict_partition(t.inner);
  if (t.inner.size() > t.outer.size())
    throw shape_error("inner shape has more rows than outer");
  for (size_t i = 0; i < t.inner.size(); ++i)
    if (t.inner[i] > t.outer[i])
      throw shape_error("inner shape exceeds outer in row " + std::to_string(i + 1));
  if (t.rows.size() != t.outer.size())
    throw shape_error("row count does not match outer shape");
  int n = 0;
  for (size_t i = 0; i < t.rows.size(); ++i) {
    if ((int)t.rows[i].size() != t.outer[i] - t.inner_at((int)i))
      throw shape_error("row " + std::to_string(i + 1) + " length does not match skew shape");
    n += (int)t.rows[i].size();
  }
  std::vector<char> seen(n + 1, 0);
  for (auto& row : t.rows)
    for (int e : row) {
      if (e < 1 || e > n || seen[e])
        throw filling_error("entries are not exactly 1.." + std::to_string(n));
      seen[e] = 1;
    }
  for (int i = 0; i < (int)t.rows.size(); ++i) {
    int r = i + 1, off = t.inner_at(i);
    for (int j = 0; j < (int)t.rows[i].size(); ++j) {
      int c = r + off + j;
      if (j > 0 && t.rows[i][j] <= t.rows[i][j - 1])
        throw filling_error("row not strictly increasing at " + cell_str(r, c));
      if (i > 0) {  // cell above: row i-1, column c
        int off_up = t.inner_at(i - 1);
        int jj = c - (i)-off_up;  // index within row i-1: c = i + off_up + jj
        if (jj >= 0 && jj < (int)t.rows[i - 1].size() &&
            t.rows[i][j] <= t.rows[i - 1][jj])
          throw filling_error("column not strictly increasing at " + cell_str(r, c));
      }
    }
  }
}

std::vector<int> content(const word& w) {
  int mx = 0;
  for (int x : w) mx = std::max(mx, x);
  std::vector<int> out(mx, 0);
  for (int x : w) out[x - 1]++;
  return out;
}

std::vector<int> content(const shifted_tableau& t) {
  int mx = 0;
  for (auto& r : t.rows)
    for (letter c : r) mx = std::max(mx, letter_value(c));
  std::vector<int> out(mx, 0);
  for (auto& r : t.rows)
    for (letter c : r) out[letter_value(c) - 1]++;
  return out;
}

bool is_standard(const shifted_tableau& t) {
  int n = t.size();
  std::vector<char> seen(n + 1, 0);
  for (auto& r : t.rows)
    for (letter c : r) {
      if (is_primed(c)) return false;
      int v = letter_value(c);
      if (v < 1 || v > n || seen[v]) return false;
      seen[v] = 1;
    }
  return true;
}

static std::vector<cell> skew_cells(const strict_partition& outer,
                                    const strict_partition& inner) {
  std::vector<cell> cs;
  for (int i = 0; i < (int)outer.size(); ++i) {
    int lo = i < (int)inner.size() ? inner[i] : 0;
    for (int c = i + 1 + lo; c <= i + outer[i]; ++c) cs.push_back({i + 1, c});
  }
  return cs;
}

bool is_border_strip(const strict_partition& outer, const strict_partition& inner) {
  auto cs = skew_cells(outer, inner);
  std::set<int> diags;
  for (auto& c : cs)
    if (!diags.insert(c.col - c.row + 1).second) return false;
  return true;
}

int connected_components(const strict_partition& outer, const strict_partition& inner) {
  auto cs = skew_cells(outer, inner);
  std::set<std::pair<int, int>> cells;
  for (auto& c : cs) cells.insert({c.row, c.col});
  int comps = 0;
  std::set<std::pair<int, int>> seen;
  for (auto& c0 : cells) {
    if (seen.count(c0)) continue;
    ++comps;
    std::vector<std::pair<int, int>> stack{c0};
    while (!stack.empty()) {
      auto [r, c] = stack.back();
      stack.pop_back();
      if (!seen.insert({r, c}).second) continue;
      for (auto [dr, dc] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}})
        if (cells.count({r + dr, c + dc})) stack.push_back({r + dr, c + dc});
    }
  }
  return comps;
}

bool is_vee(const skew_tableau& t) {
  validate_skew_standard(t);
  if (!is_border_strip(t.outer, t.inner)) return false;
  int n = t.size();
  if (n == 0) return false;
  std::vector<cell> pos(n + 1);
  for (int i = 0; i < (int)t.rows.size(); ++i) {
    int off = t.inner_at(i);
    for (int j = 0; j < (int)t.rows[i].size(); ++j)
      pos[t.rows[i][j]] = {i + 1, i + 1 + off + j};
  }
  for (int piv = 1; piv <= n; ++piv) {
    // entries 1..piv vertical, increasing down; piv..n horizontal, increasing right
    bool ok = true;
    std::set<int> vrows, hcols;
    for (int e = 1; e <= piv && ok; ++e) {
      if (!vrows.insert(pos[e].row).second) ok = false;
      if (e > 1 && pos[e].row <= pos[e - 1].row) ok = false;
    }
    for (int e = piv; e <= n && ok; ++e) {
      if (!hcols.insert(pos[e].col).second) ok = false;
      if (e > piv && pos[e].col <= pos[e - 1].col) ok = false;
    }
    if (!ok) continue;
    for (int e = 1; e <= piv && ok; ++e)
      for (int f = piv; f <= n && ok; ++f)
        if (f != e && pos[f].row == pos[e].row && pos[e].col >= pos[f].col) ok = false;
    if (ok) return true;
  }
  return false;
}

std::string format_letter(letter c) {
  return std::to_string(letter_value(c)) + (is_primed(c) ? "'" : "");
}

std::string format_word(const word& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

std::string format_tableau(const shifted_tableau& t) {
  std::string out;
  for (size_t i = 0; i < t.rows.size(); ++i) {
    if (i) out += " / ";
    for (size_t j = 0; j < t.rows[i].size(); ++j) {
      if (j) out += ' ';
      out += format_letter(t.rows[i][j]);
    }
  }
  return out;
}

std::string format_partition(const strict_partition& p) {
  std::string out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out.empty() ? "-" : out;
}

static std::vector<std::string> tokenize(const std::string& s, const std::string& seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (seps.find(ch) != std::string::npos) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

word parse_word(const std::string& s) {
  auto toks = tokenize(s, " ,\t");
  if (toks.size() == 1 && toks[0].size() > 1 &&
      std::all_of(toks[0].begin(), toks[0].end(), [](char c) { return std::isdigit(c); })) {
    word w;
    for (char ch : toks[0]) {
      if (ch == '0') throw filling_error("letter 0 is not in the alphabet");
      w.push_back(ch - '0');
    }
    return w;
  }
  word w;
  for (auto& t : toks) {
    try {
      size_t used = 0;
      int v = std::stoi(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      if (v < 1) throw filling_error("letter " + t + " is not a positive integer");
      w.push_back(v);
    } catch (std::invalid_argument&) {
      throw filling_error("cannot parse word token '" + t + "'");
    } catch (std::out_of_range&) {
      throw filling_error("word token out of range: '" + t + "'");
    }
  }
  return w;
}

static letter parse_letter_token(const std::string& t) {
  std::string body = t;
  bool primed = false;
  if (!body.empty() && body.back() == '\'') {
    primed = true;
    body.pop_back();
  }
  try {
    size_t used = 0;
    int v = std::stoi(body, &used);
    if (used != body.size() || v == 0) throw std::invalid_argument(t);
    return primed ? make_primed(v) : make_unprimed(v);
  } catch (std::exception&) {
    throw filling_error("cannot parse tableau entry '" + t + "'");
  }
}

shifted_tableau parse_tableau(const std::string& s) {
  std::vector<std::vector<letter>> rows;
  for (auto& rowstr : tokenize(s, "/")) {
    std::vector<letter> row;
    for (auto& t : tokenize(rowstr, " ,\t")) row.push_back(parse_letter_token(t));
    if (!row.empty()) rows.push_back(row);
  }
  return validate_tableau(rows);
}

strict_partition parse_partition(const std::string& s) {
  strict_partition p;
  if (s == "-" || s.empty()) return p;
  for (auto& t : tokenize(s, " ,")) {
    try {
      p.push_back(std::stoi(t));
    } catch (std::exception&) {
      throw shape_error("cannot parse partition part '" + t + "'");
    }
  }
  return p;
}

std::vector<strict_partition> strict_partitions_of(int n) {
  std::vector<strict_partition> out;
  strict_partition acc;
  std::function<void(int, int)> rec = [&](int rem, int mx) {
    if (rem == 0) {
      out.push_back(acc);
      return;
    }
    for (int p = std::min(rem, mx); p >= 1; --p) {
      acc.push_back(p);
      rec(rem - p, p - 1);
      acc.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  std::function<void(int, int)> rec = [&](int rem, int mx) {
    if (rem == 0) {
      out.push_back(acc);
      return;
    }
    for (int p = std::min(rem, mx); p >= 1; --p) {
      acc.push_back(p);
      rec(rem - p, p);
      acc.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<shifted_tableau> standard_tableaux(const strict_partition& shape) {
  check_strict_partition(shape);
  std::vector<shifted_tableau> out;
  int n = 0;
  for (int p : shape) n += p;
  std::vector<int> filled(shape.size(), 0);
  shifted_tableau t;
  t.rows.assign(shape.size(), {});
  std::function<void(int)> rec = [&](int k) {
    if (k > n) {
      out.push_back(t);
      return;
    }
    for (int i = 0; i < (int)shape.size(); ++i) {
      if (filled[i] >= shape[i]) continue;
      if (i > 0 && filled[i - 1] <= filled[i] + 1) continue;  // keep rows strict while growing
      t.rows[i].push_back(make_unprimed(k));
      filled[i]++;
      rec(k + 1);
      filled[i]--;
      t.rows[i].pop_back();
    }
  };
  rec(1);
  return out;
}

}  // namespace shpl
