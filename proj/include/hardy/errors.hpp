#pragma once

#include <stdexcept>
#include <string>

namespace hardy {

// Invalid or malformed inputs (bad grids, empty coefficient lists, ...).
class invalid_input : public std::invalid_argument {
public:
  explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

// Evaluation requested too close to a pole or outside a function's domain.
class domain_error : public std::domain_error {
public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// An algorithm failed to reach its accuracy contract.
class numerical_failure : public std::runtime_error {
public:
  explicit numerical_failure(const std::string& what) : std::runtime_error(what) {}
};

// A configurable cap (iterate degree, ladder size) would be exceeded.
class resource_error : public std::runtime_error {
public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hardy
