#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pmm {

using i64 = std::int64_t;
using Shape = std::vector<i64>;

// Error taxonomy maps onto CLI exit codes: UsageError -> 1,
// DataError (and plain Error) -> 2, NumericError -> 3.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& msg) : Error(msg) {}
};

class DataError : public Error {
 public:
  explicit DataError(const std::string& msg) : Error(msg) {}
};

class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& msg) : Error(msg) {}
};

class NumericError : public Error {
 public:
  explicit NumericError(const std::string& msg) : Error(msg) {}
};

inline i64 numel(const Shape& shape) {
  i64 n = 1;
  for (i64 d : shape) n *= d;
  return n;
}

inline std::string shape_str(const Shape& shape) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) os << ",";
    os << shape[i];
  }
  os << "]";
  return os.str();
}

// Worker cap: PMM_THREADS bounds every internal fan-out.
inline int thread_cap() {
  const char* env = std::getenv("PMM_THREADS");
  if (env == nullptr) return 1 << 16;
  int v = std::atoi(env);
  return v >= 1 ? v : 1;
}

}  // namespace pmm
