#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace millionaire {

// Bad input data: a malformed record, an unreadable file, an inconsistent
// config. Carries the offending source and 1-based line when known (0 = n/a).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what);
  DataError(std::string source, std::size_t line, const std::string& what);

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_ = 0;
};

}  // namespace millionaire
