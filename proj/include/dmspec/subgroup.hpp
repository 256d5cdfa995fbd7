#ifndef DMSPEC_SUBGROUP_HPP
#define DMSPEC_SUBGROUP_HPP

#include <algorithm>
#include <span>
#include <vector>

#include "element_set.hpp"
#include "error.hpp"
#include "group.hpp"
#include "primes.hpp"

namespace dmspec {

/// A subgroup of a PermGroup, stored as a set of element indices into the
/// parent's element table.
class Subgroup
{
public:
  using Index = PermGroup::Index;

  Subgroup() = default;

  /// Subgroup generated by the given parent elements.
  static Subgroup generated_by(GroupPtr parent, std::span<Index const> gens)
  {
    ElementSet bits(parent->order());
    std::vector<Index> queue{PermGroup::identity()};
    bits.insert(PermGroup::identity());
    std::vector<Index> nontrivial;
    for (auto g : gens)
      if (g != PermGroup::identity())
        nontrivial.push_back(g);
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (auto g : nontrivial) {
        Index y = parent->mul(queue[head], g);
        if (!bits.contains(y)) {
          bits.insert(y);
          queue.push_back(y);
        }
      }
    return Subgroup(std::move(parent), std::move(bits));
  }

  static Subgroup trivial(GroupPtr parent)
  {
    Index id = PermGroup::identity();
    return generated_by(std::move(parent), std::span<Index const>(&id, 1));
  }

  static Subgroup whole(GroupPtr parent)
  {
    ElementSet bits(parent->order());
    for (std::size_t i = 0; i < parent->order(); ++i)
      bits.insert(static_cast<Index>(i));
    return Subgroup(std::move(parent), std::move(bits));
  }

  /// Wraps a member set that the caller knows to be a subgroup.
  Subgroup(GroupPtr parent, ElementSet bits)
  : parent_(std::move(parent)), bits_(std::move(bits)), members_(bits_.indices())
  {}

  GroupPtr const &parent() const { return parent_; }
  PermGroup const &group() const { return *parent_; }
  ElementSet const &bits() const { return bits_; }
  std::span<Index const> members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  std::size_t index_in_parent() const { return parent_->order() / order(); }

  bool contains(Index g) const { return bits_.contains(g); }

  bool is_subgroup_of(Subgroup const &other) const
  { return same_parent(other) && bits_.is_subset_of(other.bits_); }

  bool same_parent(Subgroup const &other) const
  { return parent_ == other.parent_; }

  /// g H g^-1
  Subgroup conjugate(Index g) const
  {
    ElementSet out(bits_.universe());
    for (auto h : members_)
      out.insert(parent_->conj(g, h));
    return Subgroup(parent_, std::move(out));
  }

  Subgroup intersection(Subgroup const &other) const
  { return Subgroup(parent_, bits_ & other.bits_); }

  /// True iff this subgroup is normal in `over` (which must contain it).
  bool is_normal_in(Subgroup const &over) const
  {
    for (auto g : over.generating_set())
      for (auto h : members_)
        if (!bits_.contains(parent_->conj(g, h)))
          return false;
    return true;
  }

  bool is_normal() const { return is_normal_in(whole(parent_)); }

  bool is_abelian() const
  {
    auto gens = generating_set();
    for (auto a : gens)
      for (auto b : gens)
        if (parent_->mul(a, b) != parent_->mul(b, a))
          return false;
    return true;
  }

  /// Greedy generating set: scan members in index order and keep every
  /// element not already in the span of the ones kept so far.
  std::vector<Index> generating_set() const
  {
    std::vector<Index> gens;
    ElementSet span(bits_.universe());
    span.insert(PermGroup::identity());
    for (auto h : members_) {
      if (span.contains(h))
        continue;
      gens.push_back(h);
      span = generated_by(parent_, gens).bits_;
      if (span.count() == members_.size())
        break;
    }
    return gens;
  }

  /// Ordering used everywhere for determinism: by order, then by the
  /// lexicographic order of the sorted member-index lists.
  friend bool operator<(Subgroup const &a, Subgroup const &b)
  {
    if (a.order() != b.order())
      return a.order() < b.order();
    return std::lexicographical_compare(a.members_.begin(), a.members_.end(),
                                        b.members_.begin(), b.members_.end());
  }

  friend bool operator==(Subgroup const &a, Subgroup const &b)
  { return a.parent_ == b.parent_ && a.bits_ == b.bits_; }

private:
  GroupPtr parent_;
  ElementSet bits_;
  std::vector<Index> members_;
};

struct SubgroupHash
{
  std::size_t operator()(Subgroup const &h) const noexcept { return h.bits().hash(); }
};

inline void require_prime(unsigned p)
{
  if (!is_prime(p))
    throw InvalidArgument(std::to_string(p) + " is not prime");
}

/// O^p(H): the subgroup of H generated by its elements of order prime to p,
/// which is the smallest normal subgroup of H with p-group quotient.
inline Subgroup o_p_residual(Subgroup const &h, unsigned p)
{
  require_prime(p);
  std::vector<Subgroup::Index> gens;
  for (auto x : h.members())
    if (h.group().element_order(x) % p != 0)
      gens.push_back(x);
  return Subgroup::generated_by(h.parent(), gens);
}

/// True iff there is a tower K = K_0 <| K_1 <| ... <| K_t = H with every
/// index equal to p. Decided by the criterion O^p(H) <= K.
inline bool is_p_subnormal(Subgroup const &k, Subgroup const &h, unsigned p)
{
  require_prime(p);
  if (!k.is_subgroup_of(h))
    throw InvalidArgument("is_p_subnormal: K is not contained in H");
  if (h.order() % p != 0)
    return k.order() == h.order();
  return o_p_residual(h, p).is_subgroup_of(k);
}

} // namespace dmspec

#endif
