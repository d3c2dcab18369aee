#pragma once

#include <stdexcept>
#include <string>

namespace tspforge {

// Exit-code mapping: usage_error -> 1, io_error -> 2, internal_error -> 3.

struct usage_error : std::runtime_error {
  explicit usage_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct io_error : std::runtime_error {
  explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct internal_error : std::logic_error {
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void require(bool cond, const char* msg) {
  if (!cond) throw usage_error(msg);
}

inline void check_invariant(bool cond, const char* msg) {
  if (!cond) throw internal_error(msg);
}

}  // namespace tspforge
