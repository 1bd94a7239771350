#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tles {

/// Error with a machine-parsable class tag. The CLI prints failures as a
/// single line `error: <CLASS>: <message>` and exits nonzero.
class Error : public std::runtime_error {
 public:
  Error(std::string error_class, const std::string& message)
      : std::runtime_error(error_class + ": " + message),
        class_(std::move(error_class)) {}

  const std::string& error_class() const { return class_; }

 private:
  std::string class_;
};

inline void require(bool cond, const std::string& error_class, const std::string& message) {
  if (!cond) throw Error(error_class, message);
}

}  // namespace tles
