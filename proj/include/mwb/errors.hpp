#pragma once

#include <stdexcept>
#include <string>

namespace mwb {

// Malformed or out-of-contract input: bad parameters, schema violations,
// incompatible operands. CLI maps this to exit code 2.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Mathematically undefined request on well-formed input: near-pole Gamma
// argument, conjugation leaving the representable cone.
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mwb
