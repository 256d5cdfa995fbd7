#ifndef DMSPEC_MAPS_HPP
#define DMSPEC_MAPS_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "error.hpp"
#include "quotient.hpp"
#include "spectrum.hpp"

namespace dmspec {

/// A map between symbolic spaces. A point may have several images: the
/// symbolic prime q* of a smaller group stands for primes that can be
/// explicit in the larger one, so it fans out to all of them.
struct PointMap
{
  std::size_t target_size = 0;
  std::vector<std::vector<std::size_t>> images;

  PointSet image() const
  {
    PointSet out(target_size);
    for (auto const &imgs : images)
      for (auto i : imgs)
        out.insert(i);
    return out;
  }

  PointSet image_of(PointSet const &s) const
  {
    PointSet out(target_size);
    for (auto i : s.indices())
      for (auto j : images[i])
        out.insert(j);
    return out;
  }
};

/// Standalone copy of a subgroup as a permutation group on the same points.
inline GroupPtr subgroup_as_group(Subgroup const &h, std::string name = {})
{
  std::vector<Permutation> gens;
  for (auto x : h.generating_set())
    gens.push_back(h.group().element(x));
  return PermGroup::generate(std::move(gens), std::move(name), h.order(), h.group().degree());
}

namespace detail {

inline void require_compatible_localisation(SpecSpace const &a, SpecSpace const &b)
{
  if (a.local_prime() != b.local_prime())
    throw InvalidArgument("spaces are localised differently");
}

/// Target slot indices a source slot corresponds to.
inline std::vector<std::size_t> slot_images(SpecSpace const &source, PrimeSlot slot,
                                            SpecSpace const &target)
{
  std::vector<std::size_t> out;
  switch (slot.kind) {
  case PrimeSlot::Kind::Zero:
    out.push_back(*target.slot_index(PrimeSlot::zero()));
    break;
  case PrimeSlot::Kind::Prime:
    if (auto s = target.slot_index(slot))
      out.push_back(*s);
    else if (auto gs = target.slot_index(PrimeSlot::generic()))
      out.push_back(*gs);
    else
      throw InvalidArgument("no slot for prime " + slot.token() + " in target space");
    break;
  case PrimeSlot::Kind::Generic:
    for (std::size_t i = 0; i < target.slots().size(); ++i) {
      auto const &t = target.slots()[i];
      if ((t.is_prime() && !source.slot_index(t)) || t.is_generic())
        out.push_back(i);
    }
    break;
  }
  return out;
}

inline PointMap class_map(SpecSpace const &source, SpecSpace const &target,
                          std::vector<std::size_t> const &class_image)
{
  PointMap m;
  m.target_size = target.size();
  m.images.resize(source.size());
  std::size_t const ts = target.slots().size();
  for (std::size_t i = 0; i < source.size(); ++i) {
    auto const &pt = source.point(i);
    for (auto s : slot_images(source, pt.slot, target))
      m.images[i].push_back(class_image[pt.class_index] * ts + s);
    std::sort(m.images[i].begin(), m.images[i].end());
  }
  return m;
}

} // namespace detail

/// Map induced by restriction to H: P_H(K, s) -> P_G(K, s).
///
/// `space_h` must be built on a standalone copy of H (see
/// subgroup_as_group) acting on the same points as G.
inline PointMap restriction_map(SpecSpace const &space_g, SpecSpace const &space_h,
                                Subgroup const &h)
{
  detail::require_compatible_localisation(space_g, space_h);
  auto const &g = space_g.group();
  if (h.parent() != g)
    throw InvalidArgument("restriction_map: H is not a subgroup of G");
  auto const &hg = space_h.group();
  if (hg->order() != h.order() || hg->degree() != g->degree())
    throw InvalidArgument("restriction_map: space_H is not built on H");

  std::vector<PermGroup::Index> to_g(hg->order());
  for (std::size_t x = 0; x < hg->order(); ++x) {
    auto idx = g->find(hg->element(static_cast<PermGroup::Index>(x)));
    if (!idx || !h.contains(*idx))
      throw InvalidArgument("restriction_map: space_H is not built on H");
    to_g[x] = *idx;
  }

  auto const &lat_h = *space_h.lattice();
  auto const &lat_g = *space_g.lattice();
  std::vector<std::size_t> class_image(lat_h.class_count());
  for (auto const &c : lat_h.classes()) {
    ElementSet bits(g->order());
    for (auto x : c.representative.members())
      bits.insert(to_g[x]);
    class_image[c.index] = lat_g.class_of(Subgroup(g, std::move(bits)));
  }
  return detail::class_map(space_h, space_g, class_image);
}

/// Inflation G -> G/N and geometric fixed points G/N -> G on spectra.
struct QuotientMaps
{
  PointMap inflation;   // space_G -> space_{G/N}: P_G(K,s) -> P_{G/N}(KN/N,s)
  PointMap fixed_point; // space_{G/N} -> space_G: P_{G/N}(K/N,s) -> P_G(K,s)
};

inline QuotientMaps quotient_maps(SpecSpace const &space_g, SpecSpace const &space_q,
                                  QuotientPresentation const &qp)
{
  detail::require_compatible_localisation(space_g, space_q);
  if (space_g.group() != qp.source() || space_q.group() != qp.quotient())
    throw InvalidArgument("quotient_maps: spaces do not match the quotient presentation");

  auto const &lat_g = *space_g.lattice();
  auto const &lat_q = *space_q.lattice();

  std::vector<std::size_t> infl(lat_g.class_count());
  for (auto const &c : lat_g.classes())
    infl[c.index] = lat_q.class_of(qp.image(c.representative));

  std::vector<std::size_t> fix(lat_q.class_count());
  for (auto const &c : lat_q.classes())
    fix[c.index] = lat_g.class_of(qp.preimage(c.representative));

  return {detail::class_map(space_g, space_q, infl),
          detail::class_map(space_q, space_g, fix)};
}

/// Every specialization Q ~> P in the source has, for each image Q' of Q,
/// some image P' of P with Q' ~> P'.
inline bool preserves_specialization(PointMap const &m, SpecSpace const &source,
                                     SpecSpace const &target)
{
  for (std::size_t q = 0; q < source.size(); ++q)
    for (std::size_t p = 0; p < source.size(); ++p) {
      if (!source.specializes(q, p))
        continue;
      for (auto qi : m.images[q]) {
        bool ok = std::any_of(m.images[p].begin(), m.images[p].end(),
                              [&](std::size_t pi) { return target.specializes(qi, pi); });
        if (!ok)
          return false;
      }
    }
  return true;
}

} // namespace dmspec

#endif
