#include "qnoether/mutation.hpp"

#include <atomic>

namespace qn {

namespace {
std::atomic<Mutation> g_mutation{Mutation::None};
}

Mutation active_mutation() { return g_mutation.load(std::memory_order_relaxed); }
void set_mutation(Mutation m) { g_mutation.store(m, std::memory_order_relaxed); }

}  // namespace qn
