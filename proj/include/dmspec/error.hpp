#ifndef DMSPEC_ERROR_HPP
#define DMSPEC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dmspec {

/// Malformed group descriptor or permutation text.
class ParseError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Group generation stopped because the element count passed the order cap.
class CapExceeded : public std::runtime_error
{
public:
  CapExceeded(std::size_t cap, std::size_t partial_order)
  : std::runtime_error("group order exceeds cap " + std::to_string(cap)
                       + " (generated at least " + std::to_string(partial_order)
                       + " elements)"),
    cap_(cap), partial_order_(partial_order)
  {}

  std::size_t cap() const { return cap_; }
  std::size_t partial_order() const { return partial_order_; }

private:
  std::size_t cap_;
  std::size_t partial_order_;
};

/// A precondition on the arguments of an operation does not hold
/// (non-prime p, subgroup not contained, foreign point, ...).
class InvalidArgument : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace dmspec

#endif
