#pragma once

#include <functional>

namespace burchlab {
struct ResolutionSlice;
}

namespace burchlab::testing {

/// Deliberate faults for exercising the self-verification paths. Never set
/// outside tests and the CLI's --inject-fault switch.
enum class Fault { kNone, kBrokenColon };

void set_fault(Fault fault);
bool fault_active(Fault fault);

/// Restores kNone on scope exit.
class ScopedFault {
 public:
  explicit ScopedFault(Fault fault) { set_fault(fault); }
  ~ScopedFault() { set_fault(Fault::kNone); }
  ScopedFault(const ScopedFault&) = delete;
  ScopedFault& operator=(const ScopedFault&) = delete;
};

/// Called with every slice that resolve() or resolve_by_lifting() returns.
/// Pass an empty function to remove it.
using ResolutionObserver = std::function<void(const ResolutionSlice&)>;
void set_resolution_observer(ResolutionObserver observer);
void notify_resolution(const ResolutionSlice& slice);

}  // namespace burchlab::testing
