#ifndef DMSPEC_GROUP_HPP
#define DMSPEC_GROUP_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "permutation.hpp"
#include "primes.hpp"

namespace dmspec {

class PermGroup;
using GroupPtr = std::shared_ptr<PermGroup const>;

/// A finite permutation group with its complete element table.
///
/// Elements are stored sorted lexicographically by image list, so the
/// identity is always element 0. Multiplication, inversion and element
/// orders are tabulated once at construction; everything downstream works
/// on element indices.
class PermGroup
{
public:
  using Index = std::uint32_t;

  static constexpr std::size_t default_order_cap = 2000;

  /// Closes `generators` under composition. Throws CapExceeded as soon as
  /// more than `cap` elements have been produced.
  static GroupPtr generate(std::vector<Permutation> generators,
                           std::string name = {},
                           std::size_t cap = default_order_cap,
                           std::size_t degree = 0)
  {
    for (auto const &g : generators)
      degree = std::max(degree, g.degree());
    if (degree == 0)
      degree = 1;
    for (auto &g : generators)
      if (g.degree() != degree)
        g = g.embedded(degree);

    std::vector<Permutation> gens;
    for (auto const &g : generators)
      if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end())
        gens.push_back(g);

    std::unordered_map<Permutation, Index, PermutationHash> seen;
    std::vector<Permutation> elements{Permutation(degree)};
    seen.emplace(elements.front(), 0);
    for (std::size_t head = 0; head < elements.size(); ++head) {
      for (auto const &g : gens) {
        Permutation next = elements[head] * g;
        if (seen.emplace(next, 0).second) {
          elements.push_back(std::move(next));
          if (elements.size() > cap)
            throw CapExceeded(cap, elements.size());
        }
      }
    }
    std::sort(elements.begin(), elements.end());

    auto group = std::shared_ptr<PermGroup>(new PermGroup());
    group->degree_ = degree;
    group->name_ = std::move(name);
    group->generators_ = std::move(gens);
    group->elements_ = std::move(elements);
    group->tabulate();
    return group;
  }

  static GroupPtr trivial(std::string name = "C1")
  { return generate({}, std::move(name)); }

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  std::string const &name() const { return name_; }

  std::span<Permutation const> generators() const { return generators_; }
  std::span<Index const> generator_indices() const { return generator_indices_; }
  std::span<Permutation const> elements() const { return elements_; }
  Permutation const &element(Index i) const { return elements_[i]; }

  static constexpr Index identity() { return 0; }

  Index mul(Index a, Index b) const { return table_[std::size_t{a} * order() + b]; }
  Index inv(Index a) const { return inverses_[a]; }
  Index conj(Index g, Index x) const { return mul(mul(g, x), inv(g)); }
  std::size_t element_order(Index a) const { return orders_[a]; }

  std::optional<Index> find(Permutation const &p) const
  {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || *it != p)
      return std::nullopt;
    return static_cast<Index>(it - elements_.begin());
  }

  Index index_of(Permutation const &p) const
  {
    auto idx = find(p);
    if (!idx)
      throw InvalidArgument("permutation " + p.to_cycle_string()
                            + " is not an element of " + name_);
    return *idx;
  }

  std::vector<unsigned> prime_divisors() const
  { return dmspec::prime_divisors(order()); }

  bool order_divisible_by(unsigned p) const { return order() % p == 0; }

  bool is_abelian() const
  {
    for (auto a : generator_indices_)
      for (auto b : generator_indices_)
        if (mul(a, b) != mul(b, a))
          return false;
    return true;
  }

  std::size_t exponent() const
  {
    std::size_t e = 1;
    for (auto o : orders_)
      e = static_cast<std::size_t>(lcm(e, o));
    return e;
  }

private:
  PermGroup() = default;

  void tabulate()
  {
    std::size_t const n = elements_.size();
    std::unordered_map<Permutation, Index, PermutationHash> lookup;
    lookup.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      lookup.emplace(elements_[i], static_cast<Index>(i));

    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        table_[a * n + b] = lookup.at(elements_[a] * elements_[b]);

    inverses_.resize(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (table_[a * n + b] == identity()) {
          inverses_[a] = static_cast<Index>(b);
          break;
        }

    orders_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t k = 1;
      Index x = static_cast<Index>(a);
      while (x != identity()) {
        x = mul(x, static_cast<Index>(a));
        ++k;
      }
      orders_[a] = k;
    }

    for (auto const &g : generators_)
      generator_indices_.push_back(lookup.at(g));
  }

  std::size_t degree_ = 0;
  std::string name_;
  std::vector<Permutation> generators_;
  std::vector<Index> generator_indices_;
  std::vector<Permutation> elements_;
  std::vector<Index> table_;
  std::vector<Index> inverses_;
  std::vector<std::size_t> orders_;
};

} // namespace dmspec

#endif
