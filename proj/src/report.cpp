#include "qnoether/report.hpp"

#include <chrono>
#include <cstdlib>
#include <mutex>

#include <omp.h>

namespace qn {

const char* mode_name(Mode m) { return m == Mode::Symbolic ? "symbolic" : "random-eval"; }

bool Report::pass() const {
  for (const auto& i : instances)
    if (!i.pass) return false;
  return true;
}

size_t Report::passed() const {
  size_t c = 0;
  for (const auto& i : instances) c += i.pass;
  return c;
}

int worker_count() {
  if (const char* w = std::getenv("QNOETHER_WORKERS")) {
    int k = std::atoi(w);
    if (k >= 1) return k;
  }
  return omp_get_max_threads();
}

uint64_t instance_seed(uint64_t seed, size_t index) {
  // splitmix64 step over the combined state
  uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

Instance execute(const Task& t) {
  Instance inst{t.relation, t.indices, false, 0, {}};
  auto t0 = std::chrono::steady_clock::now();
  try {
    Outcome o = t.run();
    inst.pass = o.pass;
    inst.detail = o.detail;
  } catch (const std::exception& e) {
    inst.pass = false;
    inst.detail = std::string("error: ") + e.what();
  }
  inst.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return inst;
}

}  // namespace

Report run_tasks_serial(const std::string& suite, int n, Mode mode, std::vector<Task> tasks,
                        const InstanceSink& sink) {
  Report r{suite, n, mode, {}};
  for (const auto& t : tasks) {
    r.instances.push_back(execute(t));
    if (sink) sink(r.instances.back());
  }
  return r;
}

Report run_tasks(const std::string& suite, int n, Mode mode, std::vector<Task> tasks, const InstanceSink& sink) {
  const int total = static_cast<int>(tasks.size());
  Report r{suite, n, mode, std::vector<Instance>(total)};
  std::vector<char> done(total, 0);
  int next_emit = 0;
  std::mutex mu;
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
  for (int i = 0; i < total; ++i) {
    Instance inst = execute(tasks[i]);
    std::lock_guard lk(mu);
    r.instances[i] = std::move(inst);
    done[i] = 1;
    while (next_emit < total && done[next_emit]) {
      if (sink) sink(r.instances[next_emit]);
      ++next_emit;
    }
  }
  return r;
}

}  // namespace qn
