#ifndef DMSPEC_IDEALS_HPP
#define DMSPEC_IDEALS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "error.hpp"
#include "spectrum.hpp"

namespace dmspec {

/// A thick tensor-ideal, described by the set of spectrum points it is
/// supported on.
struct AdmissibleSet
{
  PointSet members;

  bool operator==(AdmissibleSet const &) const = default;
};

namespace detail {

// Condition (a): (H,0) in S forces (H,s) in S for every other slot s.
inline bool zero_condition_holds(SpecSpace const &space, PointSet const &s, std::size_t i)
{
  auto const &pt = space.point(i);
  if (!pt.slot.is_zero())
    return true;
  for (auto slot : space.slots())
    if (!s.contains(space.index_of(pt.class_index, slot)))
      return false;
  return true;
}

// Condition (b): (H,p) in S forces (K,p) in S for every class K conjugate to
// a p-subnormal subgroup of H. The q* slot has no proper p-subnormal
// subgroups to add.
template<typename Visit>
void for_each_required_by_prime(SpecSpace const &space, std::size_t i, Visit &&visit)
{
  auto const &pt = space.point(i);
  if (!pt.slot.is_prime())
    return;
  auto const &lat = *space.lattice();
  for (std::size_t k = 0; k < lat.class_count(); ++k)
    if (lat.conjugate_p_subnormal(k, pt.class_index, pt.slot.prime))
      visit(space.index_of(k, pt.slot));
}

} // namespace detail

/// Checks the two admissibility conditions directly on the subgroup data.
inline bool is_admissible(SpecSpace const &space, PointSet const &s)
{
  for (auto i : s.indices()) {
    if (!detail::zero_condition_holds(space, s, i))
      return false;
    bool ok = true;
    detail::for_each_required_by_prime(space, i, [&](std::size_t j) {
      if (!s.contains(j))
        ok = false;
    });
    if (!ok)
      return false;
  }
  return true;
}

/// Smallest admissible superset of S.
inline AdmissibleSet admissible_closure(SpecSpace const &space, PointSet const &s)
{
  PointSet out = s;
  std::vector<std::size_t> work = s.indices();
  auto add = [&](std::size_t j) {
    if (!out.contains(j)) {
      out.insert(j);
      work.push_back(j);
    }
  };
  while (!work.empty()) {
    auto i = work.back();
    work.pop_back();
    auto const &pt = space.point(i);
    if (pt.slot.is_zero())
      for (auto slot : space.slots())
        add(space.index_of(pt.class_index, slot));
    detail::for_each_required_by_prime(space, i, add);
  }
  return {out};
}

/// Support of the thick tensor-ideal generated by the given generators.
inline AdmissibleSet support_of_objects(SpecSpace const &space,
                                        std::vector<GeneratorObject> const &gens)
{
  PointSet s(space.size());
  for (auto g : gens)
    s |= generator_support(space, g);
  return admissible_closure(space, s);
}

inline constexpr std::uint64_t admissible_listing_cap = std::uint64_t{1} << 20;

struct AdmissibleEnumeration
{
  SpecSpace space; // the p-local slice the sets live in
  std::uint64_t count = 0;
  std::vector<AdmissibleSet> sets; // empty in count-only mode
  bool count_only = false;
};

/// All admissible subsets of the p-local slice, i.e. all down-sets of its
/// specialization order.
///
/// Points are visited class by class in canonical order, (p) before (0);
/// that is a linear extension of the order, so a point may be included
/// exactly when everything below it already is. Every branch ends in a
/// distinct down-set. Past `listing_cap` sets the listing is dropped and
/// only the count is kept.
inline AdmissibleEnumeration enumerate_admissible_local(SpecSpace const &space, unsigned p,
                                                        std::uint64_t listing_cap
                                                        = admissible_listing_cap)
{
  AdmissibleEnumeration out{build_local_spectrum(space.lattice(), p), 0, {}, false};
  auto const &local = out.space;
  std::size_t const n = local.size();
  auto const prime_slot = *local.slot_index(PrimeSlot{PrimeSlot::Kind::Prime, p});
  auto const zero_slot = *local.slot_index(PrimeSlot::zero());

  std::vector<std::size_t> order;
  for (std::size_t c = 0; c < local.lattice()->class_count(); ++c) {
    order.push_back(local.index_of(c, local.slots()[prime_slot]));
    order.push_back(local.index_of(c, local.slots()[zero_slot]));
  }

  std::vector<std::vector<std::size_t>> strictly_below(n);
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t a = 0; a < n; ++a)
      if (q != a && local.specializes(q, a))
        strictly_below[a].push_back(q);

  PointSet current(n);
  std::function<void(std::size_t)> descend = [&](std::size_t depth) {
    if (depth == order.size()) {
      ++out.count;
      if (!out.count_only) {
        if (out.count > listing_cap) {
          out.count_only = true;
          out.sets.clear();
          out.sets.shrink_to_fit();
        } else {
          out.sets.push_back({current});
        }
      }
      return;
    }
    auto i = order[depth];
    descend(depth + 1);
    for (auto q : strictly_below[i])
      if (!current.contains(q))
        return;
    current.insert(i);
    descend(depth + 1);
    current.erase(i);
  };
  descend(0);
  return out;
}

} // namespace dmspec

#endif
