#include "millionaire/errors.hpp"

namespace millionaire {
namespace {

std::string located(const std::string& source, std::size_t line,
                    const std::string& what) {
  std::string out = source;
  if (line > 0) out += ":" + std::to_string(line);
  if (!out.empty()) out += ": ";
  return out + what;
}

}  // namespace

DataError::DataError(const std::string& what) : std::runtime_error(what) {}

DataError::DataError(std::string source, std::size_t line,
                     const std::string& what)
    : std::runtime_error(located(source, line, what)),
      source_(std::move(source)),
      line_(line) {}

}  // namespace millionaire
