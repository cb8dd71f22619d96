#pragma once

#include <stdexcept>

namespace gray16 {

struct NameError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct LengthMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct SizeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidExtension : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DegreeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotHomomorphism : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotNormal : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotTransversal : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotSplit : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotIndexTwo : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ElementInSubgroup : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidBaseMap : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace gray16
