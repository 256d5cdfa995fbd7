#ifndef DMSPEC_PERMUTATION_HPP
#define DMSPEC_PERMUTATION_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace dmspec {

/// A bijection of {0, ..., degree-1}, stored as its image list.
///
/// Products compose right to left: (a * b)(x) == a(b(x)).
class Permutation
{
public:
  using Point = std::uint32_t;

  Permutation() = default;

  explicit Permutation(std::size_t degree)
  : images_(degree)
  {
    for (std::size_t i = 0; i < degree; ++i)
      images_[i] = static_cast<Point>(i);
  }

  explicit Permutation(std::vector<Point> images)
  : images_(std::move(images))
  {
    std::vector<bool> seen(images_.size(), false);
    for (Point x : images_) {
      if (x >= images_.size() || seen[x])
        throw InvalidArgument("image list is not a permutation");
      seen[x] = true;
    }
  }

  /// Builds a permutation from disjoint cycles; points absent from every
  /// cycle are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const &cycles)
  {
    std::vector<Point> images(degree);
    for (std::size_t i = 0; i < degree; ++i)
      images[i] = static_cast<Point>(i);

    std::vector<bool> used(degree, false);
    for (auto const &cycle : cycles) {
      for (Point x : cycle) {
        if (x >= degree)
          throw InvalidArgument("cycle point " + std::to_string(x)
                                + " out of range");
        if (used[x])
          throw InvalidArgument("cycles are not disjoint at point "
                                + std::to_string(x));
        used[x] = true;
      }
      for (std::size_t i = 0; i < cycle.size(); ++i)
        images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    return Permutation(std::move(images));
  }

  std::size_t degree() const { return images_.size(); }

  Point operator[](Point x) const { return images_[x]; }

  std::span<Point const> images() const { return images_; }

  Permutation operator*(Permutation const &rhs) const
  {
    std::vector<Point> out(images_.size());
    for (std::size_t x = 0; x < out.size(); ++x)
      out[x] = images_[rhs.images_[x]];
    Permutation p;
    p.images_ = std::move(out);
    return p;
  }

  Permutation inverse() const
  {
    Permutation p;
    p.images_.resize(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x)
      p.images_[images_[x]] = static_cast<Point>(x);
    return p;
  }

  bool is_identity() const
  {
    for (std::size_t x = 0; x < images_.size(); ++x)
      if (images_[x] != x)
        return false;
    return true;
  }

  /// Same permutation acting on `degree` points, with the new points fixed
  /// and every old point moved up by `offset`.
  Permutation embedded(std::size_t degree, std::size_t offset = 0) const
  {
    Permutation p(degree);
    for (std::size_t x = 0; x < images_.size(); ++x)
      p.images_[x + offset] = static_cast<Point>(images_[x] + offset);
    return p;
  }

  std::string to_cycle_string() const
  {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
      if (seen[start] || images_[start] == start)
        continue;
      out += '(';
      Point x = static_cast<Point>(start);
      bool first = true;
      while (!seen[x]) {
        seen[x] = true;
        if (!first)
          out += ' ';
        out += std::to_string(x);
        first = false;
        x = images_[x];
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  auto operator<=>(Permutation const &) const = default;
  bool operator==(Permutation const &) const = default;

private:
  std::vector<Point> images_;
};

struct PermutationHash
{
  std::size_t operator()(Permutation const &p) const noexcept
  {
    std::size_t h = p.degree();
    for (auto x : p.images())
      h = h * 1000003u ^ std::hash<Permutation::Point>{}(x);
    return h;
  }
};

} // namespace dmspec

#endif
