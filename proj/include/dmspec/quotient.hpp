#ifndef DMSPEC_QUOTIENT_HPP
#define DMSPEC_QUOTIENT_HPP

#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "group.hpp"
#include "lattice.hpp"
#include "subgroup.hpp"

namespace dmspec {

/// G/N realised as the permutation action of G on the left cosets of N.
class QuotientPresentation
{
public:
  using Index = PermGroup::Index;

  GroupPtr const &source() const { return source_; }
  Subgroup const &kernel() const { return kernel_; }
  GroupPtr const &quotient() const { return quotient_; }

  /// Element index in G -> element index in G/N.
  std::vector<Index> const &projection() const { return projection_; }
  Index project(Index g) const { return projection_.at(g); }

  /// KN/N for any K <= G.
  Subgroup image(Subgroup const &k) const
  {
    if (k.parent() != source_)
      throw InvalidArgument("image: subgroup of a different group");
    ElementSet bits(quotient_->order());
    for (auto x : k.members())
      bits.insert(projection_[x]);
    return Subgroup(quotient_, std::move(bits));
  }

  /// Full preimage of a subgroup of G/N; always contains N.
  Subgroup preimage(Subgroup const &kq) const
  {
    if (kq.parent() != quotient_)
      throw InvalidArgument("preimage: subgroup of a different group");
    ElementSet bits(source_->order());
    for (std::size_t x = 0; x < source_->order(); ++x)
      if (kq.contains(projection_[x]))
        bits.insert(static_cast<Index>(x));
    return Subgroup(source_, std::move(bits));
  }

  /// Pairs (K/N, K) for every subgroup of G/N, in the quotient's canonical
  /// subgroup order.
  std::vector<std::pair<Subgroup, Subgroup>> subgroup_correspondence() const
  {
    std::vector<std::pair<Subgroup, Subgroup>> out;
    for (auto const &kq : all_subgroups(quotient_))
      out.emplace_back(kq, preimage(kq));
    return out;
  }

  friend QuotientPresentation quotient(GroupPtr const &g, Subgroup const &n);

private:
  GroupPtr source_;
  Subgroup kernel_;
  GroupPtr quotient_;
  std::vector<Index> projection_;
};

/// Builds G/N. Throws InvalidArgument if N is not normal in G.
inline QuotientPresentation quotient(GroupPtr const &g, Subgroup const &n)
{
  using Index = PermGroup::Index;
  if (n.parent() != g)
    throw InvalidArgument("quotient: kernel is a subgroup of a different group");
  if (!n.is_normal())
    throw InvalidArgument("quotient: kernel is not normal");

  std::size_t const order = g->order();
  std::vector<Index> coset(order, static_cast<Index>(order));
  std::vector<Index> reps;
  for (std::size_t x = 0; x < order; ++x) {
    if (coset[x] != order)
      continue;
    auto id = static_cast<Index>(reps.size());
    reps.push_back(static_cast<Index>(x));
    for (auto m : n.members())
      coset[g->mul(static_cast<Index>(x), m)] = id;
  }

  std::size_t const degree = reps.size();
  auto action = [&](Index x) {
    std::vector<Permutation::Point> images(degree);
    for (std::size_t c = 0; c < degree; ++c)
      images[c] = coset[g->mul(x, reps[c])];
    return Permutation(std::move(images));
  };

  std::vector<Permutation> gens;
  for (auto x : g->generator_indices())
    gens.push_back(action(x));

  QuotientPresentation qp;
  qp.source_ = g;
  qp.kernel_ = n;
  qp.quotient_ = PermGroup::generate(std::move(gens),
                                     g->name() + "/N" + std::to_string(n.order()),
                                     order, degree);
  qp.projection_.resize(order);
  for (std::size_t x = 0; x < order; ++x)
    qp.projection_[x] = qp.quotient_->index_of(action(static_cast<Index>(x)));
  return qp;
}

} // namespace dmspec

#endif
