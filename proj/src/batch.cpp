#include "shpl/batch.hpp"

#include <tuple>

#include "shpl/ssdt.hpp"
#include "shpl/symfunc.hpp"

namespace shpl {

std::vector<word> all_words(int length, int alphabet) {
  std::vector<word> out;
  if (length < 0 || alphabet < 1) return out;
  word w(length, 1);
  while (true) {
    out.push_back(w);
    int i = length - 1;
    while (i >= 0 && w[i] == alphabet) w[i--] = 1;
    if (i < 0) break;
    w[i] += 1;
  }
  return out;
}

std::vector<insertion_pair> batch_mixed_insertion(const std::vector<word>& ws, bool parallel) {
  std::vector<insertion_pair> out(ws.size());
  if (parallel) {
#pragma omp parallel for
    for (int i = 0; i < (int)ws.size(); ++i) out[i] = mixed_insertion(ws[i]);
  } else {
    for (std::size_t i = 0; i < ws.size(); ++i) out[i] = mixed_insertion(ws[i]);
  }
  return out;
}

std::vector<std::size_t> batch_recording_mismatches(const std::vector<word>& ws, bool parallel) {
  std::vector<char> bad(ws.size(), 0);
  auto one = [&](int i) { bad[i] = !(mixed_insertion(ws[i]).q == sk_insertion(ws[i]).q); };
  if (parallel) {
#pragma omp parallel for
    for (int i = 0; i < (int)ws.size(); ++i) one(i);
  } else {
    for (int i = 0; i < (int)ws.size(); ++i) one(i);
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ws.size(); ++i)
    if (bad[i]) out.push_back(i);
  return out;
}

lr_sweep_result lr_agreement_sweep(int max_size, bool parallel) {
  if (max_size > 10)
    throw budget_error("sweep size " + std::to_string(max_size) +
                       " exceeds the enumeration bound 10");
  std::vector<std::tuple<strict_partition, strict_partition, strict_partition>> triples;
  for (int n = 1; n <= max_size; ++n)
    for (auto& lam : strict_partitions_of(n))
      for (int a = 0; a <= n; ++a) {
        auto mus = a == 0 ? std::vector<strict_partition>{{}} : strict_partitions_of(a);
        auto nus =
            n - a == 0 ? std::vector<strict_partition>{{}} : strict_partitions_of(n - a);
        for (auto& mu : mus)
          for (auto& nu : nus) triples.emplace_back(lam, mu, nu);
      }
  lr_sweep_result res;
  res.triples = (long long)triples.size();
  std::vector<char> bad(triples.size(), 0);
  auto one = [&](int i) {
    auto& [lam, mu, nu] = triples[i];
    long long b = lr_coeff_plactic(lam, mu, nu);
    bad[i] = b != lr_coeff_stembridge(lam, mu, nu) || b != lr_coeff_boxadd(lam, mu, nu);
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < (int)triples.size(); ++i) one(i);
  } else {
    for (int i = 0; i < (int)triples.size(); ++i) one(i);
  }
  for (char b : bad) res.mismatches += b;
  return res;
}

}  // namespace shpl
