#pragma once

#include <stdexcept>
#include <string>

namespace qcov {

struct DimensionError : std::invalid_argument {
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

struct IndexError : std::out_of_range {
  explicit IndexError(const std::string& what) : std::out_of_range(what) {}
};

struct ValidationError : std::invalid_argument {
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

struct NotAStateError : std::domain_error {
  explicit NotAStateError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace qcov
