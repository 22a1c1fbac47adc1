#pragma once

#include <stdexcept>
#include <string>

namespace subtree {

/// An exact computation was refused because the input exceeds a configured
/// cap. `flag()` names the option that raises the cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& message, std::string flag)
      : std::runtime_error(message + " (raise with " + flag + ")"), flag_(std::move(flag)) {}
  const std::string& flag() const { return flag_; }

 private:
  std::string flag_;
};

/// The operation is undefined on a disconnected graph.
class DisconnectedGraph : public std::domain_error {
 public:
  explicit DisconnectedGraph(const std::string& what) : std::domain_error(what) {}
};

}  // namespace subtree
