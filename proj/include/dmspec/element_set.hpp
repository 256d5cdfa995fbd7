#ifndef DMSPEC_ELEMENT_SET_HPP
#define DMSPEC_ELEMENT_SET_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace dmspec {

/// Fixed-universe bitset over element indices of a group table.
class ElementSet
{
public:
  using Index = std::uint32_t;

  ElementSet() = default;

  explicit ElementSet(std::size_t universe)
  : universe_(universe), words_((universe + 63) / 64, 0)
  {}

  std::size_t universe() const { return universe_; }

  bool contains(Index i) const
  { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void insert(Index i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  void erase(Index i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const
  {
    std::size_t n = 0;
    for (auto w : words_)
      n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool is_subset_of(ElementSet const &other) const
  {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i])
        return false;
    return true;
  }

  ElementSet operator&(ElementSet const &other) const
  {
    ElementSet out(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      out.words_[i] = words_[i] & other.words_[i];
    return out;
  }

  ElementSet operator|(ElementSet const &other) const
  {
    ElementSet out(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      out.words_[i] = words_[i] | other.words_[i];
    return out;
  }

  /// Members in ascending order.
  std::vector<Index> indices() const
  {
    std::vector<Index> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        out.push_back(static_cast<Index>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  std::size_t hash() const noexcept
  {
    std::size_t h = universe_;
    for (auto w : words_)
      h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x9e3779b97f4a7c15ull;
    return h;
  }

  bool operator==(ElementSet const &) const = default;

private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash
{
  std::size_t operator()(ElementSet const &s) const noexcept { return s.hash(); }
};

} // namespace dmspec

#endif
