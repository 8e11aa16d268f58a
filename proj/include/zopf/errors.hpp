#pragma once

#include <stdexcept>
#include <string>

namespace zopf {

/// Oracle returned or was fed a non-finite value.
class NumericError : public std::runtime_error {
  public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation budget cannot accommodate the requested work.
class BudgetError : public std::runtime_error {
  public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Bad experiment configuration (unknown key, unparsable value, unwritable dir).
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace zopf
