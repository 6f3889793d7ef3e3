#ifndef OCTIC_GROEBNER_DEADLINE_HPP
#define OCTIC_GROEBNER_DEADLINE_HPP

// Cooperative time limits for long computations. A DeadlineScope installs a
// per-thread deadline; loops that may run long call check_deadline(), which
// throws ComputationTimeout once it has passed.

#include <chrono>
#include <optional>
#include <stdexcept>

namespace octic {

class ComputationTimeout : public std::runtime_error {
 public:
  ComputationTimeout() : std::runtime_error("computation timed out") {}
};

namespace detail {
inline thread_local std::optional<std::chrono::steady_clock::time_point> current_deadline;
}

inline void check_deadline() {
  if (detail::current_deadline && std::chrono::steady_clock::now() > *detail::current_deadline)
    throw ComputationTimeout();
}

class DeadlineScope {
 public:
  /// Non-positive limits mean no deadline.
  explicit DeadlineScope(double seconds) : saved_(detail::current_deadline) {
    if (seconds > 0) {
      auto at = std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
      if (!saved_ || at < *saved_) detail::current_deadline = at;
    }
  }
  ~DeadlineScope() { detail::current_deadline = saved_; }
  DeadlineScope(const DeadlineScope&) = delete;
  DeadlineScope& operator=(const DeadlineScope&) = delete;

 private:
  std::optional<std::chrono::steady_clock::time_point> saved_;
};

}  // namespace octic

#endif  // OCTIC_GROEBNER_DEADLINE_HPP
