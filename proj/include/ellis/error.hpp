#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ellis {

  // Raised when an internally computed fact contradicts another route to the
  // same fact (e.g. a structural prediction disagrees with the computed
  // algebra). Never caught inside the library.
  class ConsistencyError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

  // Raised when an analysis is asked to run outside the regime in which its
  // model is valid. The message carries the diagnosis.
  class AnalysisDeclined : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, std::string const& what)
        : std::runtime_error(line == 0
                                 ? what
                                 : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    // 1-based; 0 when the error is not attached to a line.
    [[nodiscard]] std::size_t line() const noexcept {
      return line_;
    }

   private:
    std::size_t line_;
  };

}  // namespace ellis
