#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "shpl/core.hpp"

namespace shpl {

// Exact integer polynomial in a fixed number of variables, stored sparsely;
// zero coefficients are never kept.
struct sparse_polynomial {
  int vars = 0;
  std::map<std::vector<int>, long long> coeffs;  // exponent vector -> coefficient

  bool operator==(const sparse_polynomial&) const = default;
};

sparse_polynomial poly_add(const sparse_polynomial& a, const sparse_polynomial& b);
sparse_polynomial poly_mul(const sparse_polynomial& a, const sparse_polynomial& b);
sparse_polynomial poly_scale(const sparse_polynomial& a, long long k);

// expansion coefficients keyed by shape
using coeff_expansion = std::map<std::vector<int>, long long>;

// All semistandard shifted tableaux of the shape over letters 1..max_letter
// (primes off the diagonal), and standard Young tableaux of an ordinary shape.
std::vector<shifted_tableau> shifted_tableaux(const strict_partition& shape, int max_letter);
std::vector<std::vector<std::vector<int>>> standard_young_tableaux(const std::vector<int>& mu);

// Tableau generating functions: P and Q over shifted tableaux, s over SSYT.
sparse_polynomial schur_p_poly(const strict_partition& lam, int m);
sparse_polynomial schur_q_poly(const strict_partition& lam, int m);
sparse_polynomial schur_s_poly(const std::vector<int>& mu, int m);

// Structure constants of the P basis, by three independent routes: counting
// class factorizations of the reading word of the canonical standard tableau,
// counting standard skew fillings that rectify to the special recording
// tableau, and counting tableaux whose reading word drives mu to lam through
// the diagonal box adders.  All return 0 when |mu| + |nu| != |lam|.
long long lr_coeff_plactic(const strict_partition& lam, const strict_partition& mu,
                           const strict_partition& nu);
long long lr_coeff_stembridge(const strict_partition& lam, const strict_partition& mu,
                              const strict_partition& nu);
long long lr_coeff_boxadd(const strict_partition& lam, const strict_partition& mu,
                          const strict_partition& nu);

// Multiplicity of the Schur polynomial s_mu in P_lam, two routes: splitting a
// plactic class into shifted classes, and counting standard Young tableaux
// that rectify to the special recording tableau.  0 when |lam| != |mu|.
long long g_coeff_plactic(const strict_partition& lam, const std::vector<int>& mu);
long long g_coeff_rectify(const strict_partition& lam, const std::vector<int>& mu);

// Diagonal box adders: u_j adds one box on diagonal j when the result is a
// strict shape, otherwise the map is zero (nullopt).
std::optional<strict_partition> box_add(int j, const strict_partition& lam);
// Word of operators applied rightmost letter first.
std::optional<strict_partition> apply_box_word(const word& w, strict_partition lam);

// A partial map materialized on the universe of strict shapes of size at most
// `bound`; applying it outside the universe, or where the image would leave
// the universe, throws budget_error instead of truncating.
struct shape_operator {
  int bound = 12;
  std::map<strict_partition, strict_partition> image;

  std::optional<strict_partition> apply(const strict_partition& lam) const;
};
shape_operator box_add_operator(int j, int bound = 12);

// Checks u_i u_j = u_j u_i (|i-j| >= 2), u_i^2 = 0, u_i u_{i+1} u_i = 0
// (i >= 2) and u_{i+1} u_i u_{i+1} = 0 on all shapes of size <= bound.
bool nil_tl_b_check(int bound);

// Coefficients of P_lam in p_k * P_mu: 2^(components-1) over border strips.
coeff_expansion pieri_expand(const strict_partition& mu, int k);

// Matrix of the noncommutative Schur P operator P_lam(u) on shapes of size
// <= size_bound, entries of the generating tableaux bounded by n_ops.
using shape_matrix = std::map<strict_partition, std::map<strict_partition, long long>>;
shape_matrix schur_p_operator(const strict_partition& lam, int n_ops, int size_bound);
shape_matrix compose(const shape_matrix& first, const shape_matrix& then);

// Generalized skew function: the h-coefficient of the double product of
// (1 + x_i u_j) (descending j) and (1 - x_i u_j)^{-1} (ascending j) applied
// to g.  The family defaults to the diagonal box adders u_1..u_{bound+1}.
using shape_map = std::function<std::optional<strict_partition>(int, const strict_partition&)>;
sparse_polynomial generalized_g(const strict_partition& h, const strict_partition& g,
                                const shape_map& ops, int n_ops, int m_vars, int bound = 12);
sparse_polynomial generalized_g(const strict_partition& h, const strict_partition& g, int m_vars,
                                int bound = 12);

// Verifies sum_lam P_lam(u) Q_lam(x) against the operator product form,
// coefficientwise up to the degree bound, on all starting shapes of size
// <= size_bound; also checks small P_lam(u) commute pairwise.
bool cauchy_check(int n_ops, int m_vars, int max_deg, int size_bound = 12);

// EXPERIMENTAL: multiset of rectifications of all semistandard skew fillings
// of outer/inner over letters 1..max_letter, with multiplicities.
std::vector<std::pair<shifted_tableau, int>> skew_pschur_expand(const strict_partition& outer,
                                                                const strict_partition& inner,
                                                                int max_letter,
                                                                int max_cells = 10);

}  // namespace shpl
