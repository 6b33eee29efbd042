#ifndef BRUHAT_ERROR_HPP
#define BRUHAT_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bruhat {

// Malformed input: bad Cartan data, index out of range, non-reduced word,
// elements from different root systems.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical hypothesis of an operation does not hold (u not below v,
// I not inside the left descent set, w not a minimal coset representative).
class HypothesisError : public std::domain_error {
public:
  HypothesisError(std::string hypothesis, std::string formula,
                  const std::string &message)
      : std::domain_error(message), hypothesis_(std::move(hypothesis)),
        formula_(std::move(formula)) {}

  const std::string &hypothesis() const { return hypothesis_; }
  const std::string &formula() const { return formula_; }

private:
  std::string hypothesis_;
  std::string formula_;
};

// Group enumeration refused because |W| is above the configured cap.
class CapExceeded : public std::runtime_error {
public:
  CapExceeded(std::uint64_t estimate, std::uint64_t cap)
      : std::runtime_error("group order " + std::to_string(estimate) +
                           " exceeds enumeration cap " + std::to_string(cap)),
        estimate_(estimate), cap_(cap) {}

  std::uint64_t estimate() const { return estimate_; }
  std::uint64_t cap() const { return cap_; }

private:
  std::uint64_t estimate_;
  std::uint64_t cap_;
};

} // namespace bruhat

#endif
