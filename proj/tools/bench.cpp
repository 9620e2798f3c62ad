#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "shpl/batch.hpp"

using namespace shpl;

static double seconds(void (*f)(void*), void* arg) {
  auto t0 = std::chrono::steady_clock::now();
  f(arg);
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

struct insert_job {
  const std::vector<word>* ws;
  bool parallel;
  std::size_t sink = 0;
};

static void run_insert(void* p) {
  auto* job = (insert_job*)p;
  auto out = batch_mixed_insertion(*job->ws, job->parallel);
  job->sink = out.size();
}

struct sweep_job {
  int max_size;
  bool parallel;
  long long sink = 0;
};

static void run_sweep(void* p) {
  auto* job = (sweep_job*)p;
  auto r = lr_agreement_sweep(job->max_size, job->parallel);
  job->sink = r.triples - r.mismatches;
}

int main(int argc, char** argv) {
  int length = argc > 1 ? std::atoi(argv[1]) : 8;
  int alphabet = argc > 2 ? std::atoi(argv[2]) : 4;
  int sweep_size = argc > 3 ? std::atoi(argv[3]) : 7;

  auto ws = all_words(length, alphabet);
  std::printf("mixed insertion over %zu words (length %d, alphabet %d)\n", ws.size(), length,
              alphabet);
  insert_job si{&ws, false}, pi{&ws, true};
  double ts = seconds(run_insert, &si);
  double tp = seconds(run_insert, &pi);
  std::printf("  serial   %.3fs\n  parallel %.3fs  (speedup %.2fx)\n", ts, tp,
              tp > 0 ? ts / tp : 0.0);

  std::printf("coefficient agreement sweep up to size %d\n", sweep_size);
  sweep_job ss{sweep_size, false}, ps{sweep_size, true};
  ts = seconds(run_sweep, &ss);
  tp = seconds(run_sweep, &ps);
  std::printf("  serial   %.3fs (%lld triples)\n  parallel %.3fs  (speedup %.2fx)\n", ts,
              ss.sink, tp, tp > 0 ? ts / tp : 0.0);
  return 0;
}
