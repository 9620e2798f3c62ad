#include "shpl/symfunc.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "shpl/insertion.hpp"
#include "shpl/jdt.hpp"
#include "shpl/rewriting.hpp"

namespace shpl {

namespace {

void check_strict(const strict_partition& p, const char* what) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] <= 0 || (i > 0 && p[i - 1] <= p[i]))
      throw shape_error(std::string(what) + " is not a strict partition");
}

void check_ordinary(const std::vector<int>& p, const char* what) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] <= 0 || (i > 0 && p[i - 1] < p[i]))
      throw shape_error(std::string(what) + " is not a partition");
}

int total_of(const std::vector<int>& p) {
  int n = 0;
  for (int x : p) n += x;
  return n;
}

void check_enum_budget(int total, int bound) {
  if (total > bound)
    throw budget_error("size " + std::to_string(total) + " exceeds the enumeration bound " +
                       std::to_string(bound));
}

bool contains_shape(const std::vector<int>& outer, const std::vector<int>& inner) {
  if (inner.size() > outer.size()) return false;
  for (size_t i = 0; i < inner.size(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

// empty shape plus every strict partition of 1..bound
std::vector<strict_partition> shapes_up_to(int bound) {
  std::vector<strict_partition> all{{}};
  for (int n = 1; n <= bound; ++n)
    for (auto& s : strict_partitions_of(n)) all.push_back(s);
  return all;
}

std::vector<std::vector<int>> superstandard_young(const std::vector<int>& mu) {
  std::vector<std::vector<int>> rows;
  int k = 0;
  for (int len : mu) {
    std::vector<int> row(len);
    for (int j = 0; j < len; ++j) row[j] = ++k;
    rows.push_back(row);
  }
  return rows;
}

// standard fillings of a skew shifted shape, built by placing 1..n
void skew_fillings_rec(const strict_partition& outer, const strict_partition& inner,
                       std::vector<std::vector<int>>& rows, std::vector<int>& filled, int k, int n,
                       std::vector<skew_tableau>& out) {
  if (k > n) {
    skew_tableau t;
    t.outer = outer;
    t.inner = inner;
    t.rows = rows;
    out.push_back(t);
    return;
  }
  for (size_t i = 0; i < outer.size(); ++i) {
    int off = i < inner.size() ? inner[i] : 0;
    int len = outer[i] - off;
    if (filled[i] >= len) continue;
    int col = (int)i + 1 + off + filled[i];
    if (i > 0) {  // same column in the row above must be filled first
      int off_up = i - 1 < inner.size() ? inner[i - 1] : 0;
      int jj = col - (int)i - off_up;
      if (jj >= 0 && jj < outer[i - 1] - off_up && jj >= filled[i - 1]) continue;
    }
    rows[i].push_back(k);
    filled[i] += 1;
    skew_fillings_rec(outer, inner, rows, filled, k + 1, n, out);
    rows[i].pop_back();
    filled[i] -= 1;
  }
}

std::vector<skew_tableau> skew_standard_fillings(const strict_partition& outer,
                                                 const strict_partition& inner) {
  int n = 0;
  for (size_t i = 0; i < outer.size(); ++i) n += outer[i] - (i < inner.size() ? inner[i] : 0);
  std::vector<std::vector<int>> rows(outer.size());
  std::vector<int> filled(outer.size(), 0);
  std::vector<skew_tableau> out;
  skew_fillings_rec(outer, inner, rows, filled, 1, n, out);
  return out;
}

// breadth-first closure of one word under a relation's neighbor map
template <typename Neighbors>
std::vector<word> word_class_of(const word& w0, Neighbors&& neighbors) {
  std::set<word> seen{w0};
  std::vector<word> queue{w0};
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (auto& v : neighbors(queue[qi]))
      if (seen.insert(v).second) queue.push_back(v);
  return queue;
}

std::map<std::vector<int>, long long> drop_zeros(const std::map<std::vector<int>, long long>& m) {
  std::map<std::vector<int>, long long> out;
  for (auto& [k, v] : m)
    if (v != 0) out[k] = v;
  return out;
}

}  // namespace

sparse_polynomial poly_add(const sparse_polynomial& a, const sparse_polynomial& b) {
  if (a.vars != b.vars) throw size_error("variable counts differ");
  sparse_polynomial r = a;
  for (auto& [mono, c] : b.coeffs) {
    long long& slot = r.coeffs[mono];
    slot += c;
    if (slot == 0) r.coeffs.erase(mono);
  }
  return r;
}

sparse_polynomial poly_mul(const sparse_polynomial& a, const sparse_polynomial& b) {
  if (a.vars != b.vars) throw size_error("variable counts differ");
  sparse_polynomial r;
  r.vars = a.vars;
  for (auto& [ma, ca] : a.coeffs)
    for (auto& [mb, cb] : b.coeffs) {
      std::vector<int> m(a.vars);
      for (int i = 0; i < a.vars; ++i) m[i] = ma[i] + mb[i];
      r.coeffs[m] += ca * cb;
    }
  for (auto it = r.coeffs.begin(); it != r.coeffs.end();)
    it = it->second == 0 ? r.coeffs.erase(it) : std::next(it);
  return r;
}

sparse_polynomial poly_scale(const sparse_polynomial& a, long long k) {
  sparse_polynomial r;
  r.vars = a.vars;
  if (k == 0) return r;
  for (auto& [m, c] : a.coeffs) r.coeffs[m] = c * k;
  return r;
}

std::vector<shifted_tableau> shifted_tableaux(const strict_partition& shape, int max_letter) {
  check_strict(shape, "shape");
  std::vector<std::vector<letter>> rows(shape.size());
  for (size_t i = 0; i < shape.size(); ++i) rows[i].assign(shape[i], 0);
  std::vector<std::pair<int, int>> cells;
  for (size_t i = 0; i < shape.size(); ++i)
    for (int j = 0; j < shape[i]; ++j) cells.push_back({(int)i, j});
  std::vector<shifted_tableau> out;
  auto ok_place = [&](int i, int j, letter c) {
    if (j == 0 && is_primed(c)) return false;  // no primes on the diagonal
    if (j > 0) {
      letter left = rows[i][j - 1];
      if (c < left || (c == left && is_primed(c))) return false;
    }
    if (i > 0 && j + 1 < (int)rows[i - 1].size()) {
      letter up = rows[i - 1][j + 1];
      if (c < up || (c == up && !is_primed(c))) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == cells.size()) {
      out.push_back(shifted_tableau{rows});
      return;
    }
    auto [i, j] = cells[idx];
    for (int v = 1; v <= max_letter; ++v)
      for (letter c : {make_primed(v), make_unprimed(v)})
        if (ok_place(i, j, c)) {
          rows[i][j] = c;
          self(self, idx + 1);
          rows[i][j] = 0;
        }
  };
  rec(rec, 0);
  return out;
}

std::vector<std::vector<std::vector<int>>> standard_young_tableaux(const std::vector<int>& mu) {
  check_ordinary(mu, "shape");
  int n = total_of(mu);
  std::vector<std::vector<int>> rows(mu.size());
  std::vector<std::vector<std::vector<int>>> out;
  auto rec = [&](auto&& self, int k) -> void {
    if (k > n) {
      out.push_back(rows);
      return;
    }
    for (size_t i = 0; i < mu.size(); ++i)
      if ((int)rows[i].size() < mu[i] && (i == 0 || rows[i - 1].size() > rows[i].size())) {
        rows[i].push_back(k);
        self(self, k + 1);
        rows[i].pop_back();
      }
  };
  rec(rec, 1);
  return out;
}

sparse_polynomial schur_p_poly(const strict_partition& lam, int m) {
  if (m < 1) throw size_error("need at least one variable");
  sparse_polynomial p;
  p.vars = m;
  for (auto& t : shifted_tableaux(lam, m)) {
    std::vector<int> mono(m, 0);
    for (auto& row : t.rows)
      for (letter c : row) mono[letter_value(c) - 1] += 1;
    p.coeffs[mono] += 1;
  }
  return p;
}

sparse_polynomial schur_q_poly(const strict_partition& lam, int m) {
  return poly_scale(schur_p_poly(lam, m), 1LL << lam.size());
}

sparse_polynomial schur_s_poly(const std::vector<int>& mu, int m) {
  if (m < 1) throw size_error("need at least one variable");
  check_ordinary(mu, "shape");
  sparse_polynomial p;
  p.vars = m;
  std::vector<std::vector<int>> rows(mu.size());
  for (size_t i = 0; i < mu.size(); ++i) rows[i].assign(mu[i], 0);
  std::vector<std::pair<int, int>> cells;
  for (size_t i = 0; i < mu.size(); ++i)
    for (int j = 0; j < mu[i]; ++j) cells.push_back({(int)i, j});
  std::vector<int> mono(m, 0);
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == cells.size()) {
      p.coeffs[mono] += 1;
      return;
    }
    auto [i, j] = cells[idx];
    int lo = 1;
    if (j > 0) lo = std::max(lo, rows[i][j - 1]);
    if (i > 0) lo = std::max(lo, rows[i - 1][j] + 1);
    for (int v = lo; v <= m; ++v) {
      rows[i][j] = v;
      mono[v - 1] += 1;
      self(self, idx + 1);
      mono[v - 1] -= 1;
      rows[i][j] = 0;
    }
  };
  rec(rec, 0);
  return p;
}

long long lr_coeff_plactic(const strict_partition& lam, const strict_partition& mu,
                           const strict_partition& nu) {
  check_strict(lam, "lambda");
  check_strict(mu, "mu");
  check_strict(nu, "nu");
  int n = total_of(lam);
  if (total_of(mu) + total_of(nu) != n) return 0;
  check_enum_budget(n, 12);
  auto sr_mu = special_recording_tableau(mu);
  auto sr_nu = special_recording_tableau(nu);
  int k = total_of(mu);
  // the class of mread(U_lam) is exactly the words inserting to U_lam; each
  // factor class contributes the one member whose recording tableau is special
  long long count = 0;
  for (auto& w : word_class_of(mread(special_recording_tableau(lam)), shifted_knuth_neighbors)) {
    word u(w.begin(), w.begin() + k), v(w.begin() + k, w.end());
    auto a = mixed_insertion(u);
    if (a.p.shape() != mu || !(a.q == sr_mu)) continue;
    auto b = mixed_insertion(v);
    if (b.p.shape() != nu || !(b.q == sr_nu)) continue;
    ++count;
  }
  return count;
}

long long lr_coeff_stembridge(const strict_partition& lam, const strict_partition& mu,
                              const strict_partition& nu) {
  check_strict(lam, "lambda");
  check_strict(mu, "mu");
  check_strict(nu, "nu");
  if (total_of(mu) + total_of(nu) != total_of(lam)) return 0;
  if (!contains_shape(lam, mu)) return 0;
  check_enum_budget(total_of(lam), 12);
  auto q = special_recording_tableau(nu);
  long long count = 0;
  for (auto& t : skew_standard_fillings(lam, mu))
    if (shifted_jdt_rectify(t) == q) ++count;
  return count;
}

long long lr_coeff_boxadd(const strict_partition& lam, const strict_partition& mu,
                          const strict_partition& nu) {
  check_strict(lam, "lambda");
  check_strict(mu, "mu");
  check_strict(nu, "nu");
  if (total_of(mu) + total_of(nu) != total_of(lam)) return 0;
  check_enum_budget(total_of(lam), 12);
  // letters above the widest row would add a box on a diagonal lam never
  // reaches, so the bound lam_1 loses nothing
  int maxv = lam.empty() ? 0 : lam[0];
  long long count = 0;
  for (auto& t : shifted_tableaux(nu, maxv)) {
    auto res = apply_box_word(mread(t), mu);
    if (res && *res == lam) ++count;
  }
  return count;
}

long long g_coeff_plactic(const strict_partition& lam, const std::vector<int>& mu) {
  check_strict(lam, "lambda");
  check_ordinary(mu, "mu");
  int n = total_of(lam);
  if (total_of(mu) != n) return 0;
  check_enum_budget(n, 12);
  word seed;  // reading word of the row-consecutive tableau, bottom row first
  auto key = superstandard_young(mu);
  for (auto it = key.rbegin(); it != key.rend(); ++it)
    seed.insert(seed.end(), it->begin(), it->end());
  std::set<std::string> classes;
  for (auto& w : word_class_of(seed, plactic_knuth_neighbors)) {
    auto p = mixed_insertion(w).p;
    if (p.shape() == lam) classes.insert(format_tableau(p));
  }
  return (long long)classes.size();
}

long long g_coeff_rectify(const strict_partition& lam, const std::vector<int>& mu) {
  check_strict(lam, "lambda");
  check_ordinary(mu, "mu");
  if (total_of(mu) != total_of(lam)) return 0;
  check_enum_budget(total_of(lam), 12);
  auto u_lam = special_recording_tableau(lam);
  long long count = 0;
  for (auto& t : standard_young_tableaux(mu))
    if (rsk_to_mixed_recording(t) == u_lam) ++count;
  return count;
}

std::optional<strict_partition> box_add(int j, const strict_partition& lam) {
  if (j < 1) throw shape_error("diagonal index must be positive");
  check_strict(lam, "shape");
  strict_partition out = lam;
  if (j == 1) {
    if (out.empty()) return strict_partition{1};
    if (out.back() > 1) {
      out.push_back(1);
      return out;
    }
    return std::nullopt;
  }
  for (size_t i = 0; i < out.size(); ++i)
    if (out[i] == j - 1) {
      out[i] = j;
      if (i > 0 && out[i - 1] <= out[i]) return std::nullopt;
      return out;
    }
  return std::nullopt;
}

std::optional<strict_partition> apply_box_word(const word& w, strict_partition lam) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    auto next = box_add(*it, lam);
    if (!next) return std::nullopt;
    lam = std::move(*next);
  }
  return lam;
}

std::optional<strict_partition> shape_operator::apply(const strict_partition& lam) const {
  if (total_of(lam) > bound)
    throw budget_error("shape of size " + std::to_string(total_of(lam)) +
                       " is outside the operator universe (bound " + std::to_string(bound) + ")");
  auto it = image.find(lam);
  if (it == image.end()) return std::nullopt;
  if (total_of(it->second) > bound)
    throw budget_error("image leaves the operator universe (bound " + std::to_string(bound) + ")");
  return it->second;
}

shape_operator box_add_operator(int j, int bound) {
  shape_operator op;
  op.bound = bound;
  for (auto& s : shapes_up_to(bound)) {
    auto t = box_add(j, s);
    if (t) op.image[s] = *t;  // oversized images kept; apply reports them
  }
  return op;
}

bool nil_tl_b_check(int bound) {
  auto shapes = shapes_up_to(bound);
  auto image = [&](const word& w, const strict_partition& s) { return apply_box_word(w, s); };
  auto same = [&](const word& a, const word& b) {
    for (auto& s : shapes)
      if (image(a, s) != image(b, s)) return false;
    return true;
  };
  auto zero = [&](const word& w) {
    for (auto& s : shapes)
      if (image(w, s)) return false;
    return true;
  };
  int maxj = bound + 1;
  for (int i = 1; i <= maxj; ++i) {
    for (int j = 1; j <= maxj; ++j)
      if (std::abs(i - j) >= 2 && !same({i, j}, {j, i})) return false;
    if (!zero({i, i})) return false;
    if (i >= 2 && !zero({i, i + 1, i})) return false;
    if (!zero({i + 1, i, i + 1})) return false;
  }
  return true;
}

coeff_expansion pieri_expand(const strict_partition& mu, int k) {
  check_strict(mu, "mu");
  if (k < 1) throw size_error("strip size must be positive");
  coeff_expansion out;
  for (auto& lam : strict_partitions_of(total_of(mu) + k)) {
    if (!contains_shape(lam, mu)) continue;
    if (!is_border_strip(lam, mu)) continue;
    out[lam] = 1LL << (connected_components(lam, mu) - 1);
  }
  return out;
}

shape_matrix schur_p_operator(const strict_partition& lam, int n_ops, int size_bound) {
  check_strict(lam, "lambda");
  check_enum_budget(total_of(lam), 10);
  std::vector<word> words;
  for (auto& t : shifted_tableaux(lam, n_ops)) words.push_back(mread(t));
  shape_matrix mat;
  for (auto& g : shapes_up_to(size_bound)) {
    mat[g];  // every universe shape gets a row
    for (auto& w : words) {
      auto res = apply_box_word(w, g);
      if (res && total_of(*res) <= size_bound) mat[g][*res] += 1;
    }
  }
  return mat;
}

shape_matrix compose(const shape_matrix& first, const shape_matrix& then) {
  shape_matrix out;
  for (auto& [g, mids] : first) {
    out[g];
    for (auto& [mid, c1] : mids) {
      auto it = then.find(mid);
      if (it == then.end()) continue;
      for (auto& [tgt, c2] : it->second) out[g][tgt] += c1 * c2;
    }
  }
  return out;
}

sparse_polynomial generalized_g(const strict_partition& h, const strict_partition& g,
                                const shape_map& ops, int n_ops, int m_vars, int bound) {
  if (m_vars < 1) throw size_error("need at least one variable");
  check_strict(h, "h");
  check_strict(g, "g");
  if (total_of(h) > bound || total_of(g) > bound)
    throw budget_error("shape exceeds the operator universe (bound " + std::to_string(bound) +
                       ")");
  // factors of the double product, leftmost first
  struct factor {
    bool geometric;
    int var, j;
  };
  std::vector<factor> factors;
  for (int i = 0; i < m_vars; ++i) {
    for (int j = n_ops; j >= 1; --j) factors.push_back({false, i, j});
    for (int j = 1; j <= n_ops; ++j) factors.push_back({true, i, j});
  }
  using state_t = std::map<std::vector<int>, std::map<strict_partition, long long>>;
  state_t state;
  state[std::vector<int>(m_vars, 0)][g] = 1;
  auto extend = [&](const state_t& from, int var, int j) {
    state_t added;
    for (auto& [mono, shmap] : from) {
      if (total_of(mono) >= bound) continue;  // degree cap keeps the series finite
      std::vector<int> m2 = mono;
      m2[var] += 1;
      for (auto& [sh, c] : shmap) {
        auto t = ops(j, sh);
        if (t && total_of(*t) <= bound) added[m2][*t] += c;
      }
    }
    return added;
  };
  auto merge = [](state_t& into, const state_t& add) {
    for (auto& [mono, shmap] : add)
      for (auto& [sh, c] : shmap) into[mono][sh] += c;
  };
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    state_t added = extend(state, it->var, it->j);
    if (it->geometric)
      while (!added.empty()) {
        state_t more = extend(added, it->var, it->j);
        merge(state, added);
        added = std::move(more);
      }
    else
      merge(state, added);
  }
  sparse_polynomial out;
  out.vars = m_vars;
  for (auto& [mono, shmap] : state) {
    auto it = shmap.find(h);
    if (it != shmap.end() && it->second != 0) out.coeffs[mono] = it->second;
  }
  return out;
}

sparse_polynomial generalized_g(const strict_partition& h, const strict_partition& g, int m_vars,
                                int bound) {
  return generalized_g(
      h, g, [](int j, const strict_partition& s) { return box_add(j, s); }, bound, m_vars, bound);
}

bool cauchy_check(int n_ops, int m_vars, int max_deg, int size_bound) {
  if (m_vars < 1) throw size_error("need at least one variable");
  if (n_ops < 0 || max_deg < 0) throw size_error("bounds must be nonnegative");
  if (max_deg > size_bound)
    throw budget_error("degree bound " + std::to_string(max_deg) +
                       " exceeds the shape universe bound " + std::to_string(size_bound));
  auto universe = shapes_up_to(size_bound);
  using state_t = std::map<std::vector<int>, std::map<strict_partition, long long>>;

  // operator side: the double product applied to each starting shape
  struct factor {
    int var, j;
  };
  std::vector<factor> factors;  // leftmost first; u_j^2 = 0 makes both kinds one step
  for (int i = 0; i < m_vars; ++i) {
    for (int j = n_ops; j >= 1; --j) factors.push_back({i, j});
    for (int j = 1; j <= n_ops; ++j) factors.push_back({i, j});
  }
  std::map<strict_partition, state_t> rhs;
  for (auto& g : universe) {
    state_t state;
    state[std::vector<int>(m_vars, 0)][g] = 1;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      state_t next = state;
      for (auto& [mono, shmap] : state) {
        if (total_of(mono) >= max_deg) continue;
        std::vector<int> m2 = mono;
        m2[it->var] += 1;
        for (auto& [sh, c] : shmap) {
          auto t = box_add(it->j, sh);
          if (t && total_of(*t) <= size_bound) next[m2][*t] += c;
        }
      }
      state = std::move(next);
    }
    rhs[g] = std::move(state);
  }

  // series side: sum over shapes of P_lam(u) Q_lam(x)
  std::map<strict_partition, state_t> lhs;
  for (auto& g : universe) lhs[g];
  for (int d = 1; d <= max_deg; ++d)
    for (auto& lam : strict_partitions_of(d)) {
      auto q = schur_q_poly(lam, m_vars);
      std::vector<word> words;
      for (auto& t : shifted_tableaux(lam, n_ops)) words.push_back(mread(t));
      for (auto& g : universe) {
        std::map<strict_partition, long long> acc;
        for (auto& w : words) {
          auto res = apply_box_word(w, g);
          if (res && total_of(*res) <= size_bound) acc[*res] += 1;
        }
        for (auto& [mono, qc] : q.coeffs)
          for (auto& [sh, cnt] : acc) lhs[g][mono][sh] += qc * cnt;
      }
    }

  for (auto& g : universe) {
    int gsz = total_of(g);
    std::set<std::vector<int>> monos;
    for (auto& [m, s] : rhs[g]) monos.insert(m);
    for (auto& [m, s] : lhs[g]) monos.insert(m);
    for (auto& mono : monos) {
      int d = total_of(mono);
      if (d == 0 || d > max_deg || gsz + d > size_bound) continue;
      auto a = rhs[g].count(mono) ? drop_zeros(rhs[g][mono]) : std::map<std::vector<int>, long long>{};
      auto b = lhs[g].count(mono) ? drop_zeros(lhs[g][mono]) : std::map<std::vector<int>, long long>{};
      if (a != b) return false;
    }
  }

  // the P operators commute pairwise (checked on small shapes)
  int cap = std::min(3, max_deg);
  std::vector<strict_partition> small;
  for (int d = 1; d <= cap; ++d)
    for (auto& s : strict_partitions_of(d)) small.push_back(s);
  for (auto& a : small)
    for (auto& b : small) {
      auto ma = schur_p_operator(a, n_ops, size_bound);
      auto mb = schur_p_operator(b, n_ops, size_bound);
      auto ab = compose(ma, mb), ba = compose(mb, ma);
      int deg = total_of(a) + total_of(b);
      for (auto& g : shapes_up_to(size_bound)) {
        if (total_of(g) + deg > size_bound) continue;
        if (drop_zeros(ab[g]) != drop_zeros(ba[g])) return false;
      }
    }
  return true;
}

std::vector<std::pair<shifted_tableau, int>> skew_pschur_expand(const strict_partition& outer,
                                                                const strict_partition& inner,
                                                                int max_letter, int max_cells) {
  check_strict(outer, "outer");
  if (!inner.empty()) check_strict(inner, "inner");
  if (!contains_shape(outer, inner)) throw shape_error("inner shape does not fit inside outer");
  int cells = 0;
  for (size_t i = 0; i < outer.size(); ++i)
    cells += outer[i] - (i < inner.size() ? inner[i] : 0);
  check_enum_budget(cells, max_cells);

  std::vector<std::vector<letter>> rows(outer.size());
  std::vector<std::pair<int, int>> free_cells;  // (row index, index within skew row)
  for (size_t i = 0; i < outer.size(); ++i) {
    int off = i < inner.size() ? inner[i] : 0;
    rows[i].assign(outer[i] - off, 0);
    for (int j = 0; j < outer[i] - off; ++j) free_cells.push_back({(int)i, j});
  }
  auto ok_place = [&](int i, int j, letter c) {
    int off = i < (int)inner.size() ? inner[i] : 0;
    if (off == 0 && j == 0 && is_primed(c)) return false;  // true diagonal cell
    if (j > 0) {
      letter left = rows[i][j - 1];
      if (c < left || (c == left && is_primed(c))) return false;
    }
    if (i > 0) {
      int off_up = i - 1 < (int)inner.size() ? inner[i - 1] : 0;
      int jj = off - off_up + j + 1;  // same column, one row up
      if (jj >= 0 && jj < (int)rows[i - 1].size()) {
        letter up = rows[i - 1][jj];
        if (c < up || (c == up && !is_primed(c))) return false;
      }
    }
    return true;
  };
  std::map<std::string, std::pair<shifted_tableau, int>> classes;
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == free_cells.size()) {
      auto rect = skew_rect(outer, inner, rows);
      auto& slot = classes[format_tableau(rect)];
      slot.first = rect;
      slot.second += 1;
      return;
    }
    auto [i, j] = free_cells[idx];
    for (int v = 1; v <= max_letter; ++v)
      for (letter c : {make_primed(v), make_unprimed(v)})
        if (ok_place(i, j, c)) {
          rows[i][j] = c;
          self(self, idx + 1);
          rows[i][j] = 0;
        }
  };
  rec(rec, 0);
  std::vector<std::pair<shifted_tableau, int>> out;
  for (auto& [key, entry] : classes) out.push_back(entry);
  return out;
}

}  // namespace shpl
