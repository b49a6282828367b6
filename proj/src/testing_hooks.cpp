#include "burchlab/testing_hooks.hpp"

#include <atomic>
#include <mutex>

namespace burchlab::testing {

namespace {
std::atomic<Fault> g_fault{Fault::kNone};
std::mutex g_observer_mutex;
ResolutionObserver g_observer;
}  // namespace

void set_fault(Fault fault) { g_fault.store(fault, std::memory_order_relaxed); }

bool fault_active(Fault fault) { return g_fault.load(std::memory_order_relaxed) == fault; }

void set_resolution_observer(ResolutionObserver observer) {
  std::lock_guard lock(g_observer_mutex);
  g_observer = std::move(observer);
}

void notify_resolution(const ResolutionSlice& slice) {
  ResolutionObserver observer;
  {
    std::lock_guard lock(g_observer_mutex);
    observer = g_observer;
  }
  if (observer) observer(slice);
}

}  // namespace burchlab::testing
