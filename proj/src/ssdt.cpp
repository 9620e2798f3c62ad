#include "shpl/ssdt.hpp"

#include <algorithm>
#include <functional>

namespace shpl {

static int split_index(const word& w) {
  // maximal strictly decreasing prefix; -1 when the suffix fails to increase
  int k = 1;
  int n = (int)w.size();
  while (k < n && w[k - 1] > w[k]) ++k;
  for (int i = k; i + 1 < n; ++i)
    if (w[i] > w[i + 1]) return -1;
  return k;
}

bool is_hook_word(const word& w) { return split_index(w) >= 0; }

hook_word_split hook_split(const word& w) {
  if (w.empty()) throw split_error("empty word has no hook split");
  int k = split_index(w);
  if (k < 0) throw split_error("word is not a hook word");
  return {word(w.begin(), w.begin() + k), word(w.begin() + k, w.end())};
}

int longest_hook_subword_length(const word& w) {
  int n = (int)w.size();
  // dec_end[i]: longest strictly decreasing subsequence ending at i;
  // inc_start[i]: longest weakly increasing subsequence starting at i.  Any
  // concatenation of the two kinds is a hook word, so the answer is the best
  // positional split.
  std::vector<int> dec_end(n, 1), inc_start(n, 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (w[j] > w[i]) dec_end[i] = std::max(dec_end[i], dec_end[j] + 1);
  for (int i = n - 1; i >= 0; --i)
    for (int j = i + 1; j < n; ++j)
      if (w[i] <= w[j]) inc_start[i] = std::max(inc_start[i], inc_start[j] + 1);
  std::vector<int> best_dec(n + 1, 0), best_inc(n + 1, 0);
  for (int t = 1; t <= n; ++t) best_dec[t] = std::max(best_dec[t - 1], dec_end[t - 1]);
  for (int t = n - 1; t >= 0; --t) best_inc[t] = std::max(best_inc[t + 1], inc_start[t]);
  int best = 0;
  for (int t = 0; t <= n; ++t) best = std::max(best, best_dec[t] + best_inc[t]);
  return best;
}

decomposition_tableau validate_ssdt(const std::vector<word>& rows) {
  strict_partition sh;
  for (auto& r : rows) sh.push_back((int)r.size());
  check_strict_partition(sh);
  int l = (int)rows.size();
  for (int i = 0; i < l; ++i) {
    if (!is_hook_word(rows[i]))
      throw hook_error("row " + std::to_string(i + 1) + " is not a hook word");
    for (int x : rows[i])
      if (x < 1) throw filling_error("row " + std::to_string(i + 1) + " has a non-letter");
  }
  int full_bad = 0, pair_bad = 0;  // first failing row, 0 if none
  for (int i = 0; i < l && !full_bad; ++i) {
    word suffix;
    for (int j = l - 1; j >= i; --j) suffix.insert(suffix.end(), rows[j].begin(), rows[j].end());
    if (longest_hook_subword_length(suffix) != (int)rows[i].size()) full_bad = i + 1;
  }
  for (int i = 0; i + 1 < l && !pair_bad; ++i) {
    word pair = rows[i + 1];
    pair.insert(pair.end(), rows[i].begin(), rows[i].end());
    if (longest_hook_subword_length(pair) != (int)rows[i].size()) pair_bad = i + 1;
  }
  if ((full_bad != 0) != (pair_bad != 0))
    throw internal_error("maximality criteria disagree on rows " +
                         std::to_string(full_bad) + " vs " + std::to_string(pair_bad));
  if (full_bad)
    throw maximality_error("row " + std::to_string(full_bad) +
                           " is not a longest hook subword of the rows below it");
  return decomposition_tableau{rows};
}

word read_word(const decomposition_tableau& r) {
  word w;
  for (auto it = r.rows.rbegin(); it != r.rows.rend(); ++it)
    w.insert(w.end(), it->begin(), it->end());
  return w;
}

std::optional<int> sk_insert_into_row(word& u, int x) {
  word ux = u;
  ux.push_back(x);
  if (u.empty() || is_hook_word(ux)) {
    u.push_back(x);
    return std::nullopt;
  }
  int k = split_index(u);
  int j = -1;
  for (int i = k; i < (int)u.size(); ++i)
    if (u[i] > x) {
      j = i;
      break;
    }
  if (j < 0) throw internal_error("row insertion found no letter to replace");
  int yj = u[j];
  u[j] = x;
  int i = -1;
  for (int t = 0; t < k; ++t)
    if (u[t] <= yj) {
      i = t;
      break;
    }
  if (i < 0) throw internal_error("bumped letter fits nowhere in the prefix");
  int out = u[i];
  u[i] = yj;
  return out;
}

sk_pair sk_insertion(const word& w) {
  sk_pair out;
  for (int step = 0; step < (int)w.size(); ++step) {
    int cur = w[step];
    size_t r = 0;
    while (true) {
      if (r == out.p.rows.size()) {
        out.p.rows.push_back({cur});
        out.q.rows.push_back({make_unprimed(step + 1)});
        break;
      }
      auto bumped = sk_insert_into_row(out.p.rows[r], cur);
      if (!bumped) {
        out.q.rows[r].push_back(make_unprimed(step + 1));
        break;
      }
      cur = *bumped;
      ++r;
    }
  }
  return out;
}

shifted_tableau phi(const decomposition_tableau& r) {
  validate_ssdt(r.rows);
  return mixed_insertion(read_word(r)).p;
}

decomposition_tableau psi(const shifted_tableau& t) {
  validate_tableau(t.rows);
  return sk_insertion(mread(t)).p;
}

std::string format_ssdt(const decomposition_tableau& r) {
  std::string out;
  for (size_t i = 0; i < r.rows.size(); ++i) {
    if (i) out += " / ";
    out += format_word(r.rows[i]);
  }
  return out;
}

decomposition_tableau parse_ssdt(const std::string& s) {
  std::vector<word> rows;
  std::string cur;
  auto flush = [&] {
    word row = parse_word(cur);
    if (!row.empty()) rows.push_back(row);
    cur.clear();
  };
  for (char ch : s) {
    if (ch == '/')
      flush();
    else
      cur += ch;
  }
  flush();
  return validate_ssdt(rows);
}

std::vector<decomposition_tableau> decomposition_tableaux(const strict_partition& shape,
                                                          int max_letter) {
  check_strict_partition(shape);
  int l = (int)shape.size();
  // hook words of each needed length over 1..max_letter
  std::vector<std::vector<word>> hooks(l);
  for (int i = 0; i < l; ++i) {
    word w(shape[i]);
    std::function<void(int)> rec = [&](int pos) {
      if (pos == shape[i]) {
        if (is_hook_word(w)) hooks[i].push_back(w);
        return;
      }
      for (int x = 1; x <= max_letter; ++x) {
        w[pos] = x;
        rec(pos + 1);
      }
    };
    rec(0);
  }
  std::vector<decomposition_tableau> out;
  std::vector<word> rows(l);
  // the pairwise criterion lets us prune row by row; the final validate call
  // asserts the full condition agrees
  std::function<void(int)> place = [&](int i) {
    if (i == l) {
      out.push_back(validate_ssdt(rows));
      return;
    }
    for (auto& cand : hooks[i]) {
      if (i > 0) {
        word pair = cand;
        pair.insert(pair.end(), rows[i - 1].begin(), rows[i - 1].end());
        if (longest_hook_subword_length(pair) != (int)rows[i - 1].size()) continue;
      }
      rows[i] = cand;
      place(i + 1);
    }
  };
  place(0);
  return out;
}

}  // namespace shpl
