#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gsum {

// Malformed input file content.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured size guard (reconstruction edges, |F|, betweenness n) was exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation needs a lossless (kind-tagged) summary.
class UnsupportedSummary : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edge weight model cannot be built for this graph / centrality.
class ModelUndefined : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gsum
