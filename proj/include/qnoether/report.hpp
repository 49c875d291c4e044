#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qn {

enum class Mode { Symbolic, RandomEval };
const char* mode_name(Mode m);

struct Instance {
  std::string relation;
  std::vector<int> indices;
  bool pass = false;
  double millis = 0;
  std::string detail;
};

struct Report {
  std::string suite;
  int n = 0;
  Mode mode = Mode::Symbolic;
  std::vector<Instance> instances;
  bool pass() const;
  size_t passed() const;
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Task {
  std::string relation;
  std::vector<int> indices;
  std::function<Outcome()> run;
};

struct SuiteConfig {
  Mode mode = Mode::Symbolic;
  uint64_t seed = 1;
  int trials = 20;
  bool force = false;
};

// Called once per instance in index order, whatever the completion order.
using InstanceSink = std::function<void(const Instance&)>;

// Worker pool size: QNOETHER_WORKERS if set, else the OpenMP default.
int worker_count();

// Runs tasks across the worker pool; exceptions become failed instances.
Report run_tasks(const std::string& suite, int n, Mode mode, std::vector<Task> tasks, const InstanceSink& sink = {});
// Single-threaded reference runner.
Report run_tasks_serial(const std::string& suite, int n, Mode mode, std::vector<Task> tasks,
                        const InstanceSink& sink = {});

// Per-instance seed derived from the run seed and the instance position.
uint64_t instance_seed(uint64_t seed, size_t index);

}  // namespace qn
