#pragma once

#include <stdexcept>
#include <string>

namespace dessins {

// A verified consequence of the classification failed to hold. This is never
// a recoverable input error: it means either the implementation or the
// classification itself is wrong.
struct falsification_error : std::logic_error {
  explicit falsification_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace dessins
