#ifndef DMSPEC_BURNSIDE_HPP
#define DMSPEC_BURNSIDE_HPP

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "error.hpp"
#include "spectrum.hpp"

namespace dmspec {

/// A point of Spec(A(G)), stored as its rho-fiber in the spectrum.
struct BurnsidePoint
{
  std::vector<std::size_t> members; // source point indices, ascending
  PrimeSlot slot;

  /// Least (class, slot) member; used as the point's identity.
  std::size_t canonical() const { return members.front(); }
};

/// Spec(A(G)) as the quotient of the spectrum by rho, with the quotient
/// topology: a set is closed iff its preimage is closed.
class BurnsideSpace
{
public:
  SpecSpace const &source() const { return source_; }
  std::vector<BurnsidePoint> const &points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  BurnsidePoint const &point(std::size_t b) const { return points_.at(b); }

  std::size_t rho(std::size_t source_point) const { return rho_.at(source_point); }

  /// `rho[<canonical member>]`
  std::string token(std::size_t b) const
  { return "rho[" + source_.token(points_.at(b).canonical()) + "]"; }

  PointSet fiber(std::size_t b) const
  {
    PointSet out(source_.size());
    for (auto i : points_.at(b).members)
      out.insert(i);
    return out;
  }

  /// rho^-1(rho(S))
  PointSet saturate(PointSet const &s) const
  {
    PointSet out(source_.size());
    for (auto i : s.indices())
      for (auto j : points_[rho_[i]].members)
        out.insert(j);
    return out;
  }

  /// Preimage of the quotient closure of {b}: the smallest specialization
  /// closed, rho-saturated set containing the fiber of b.
  PointSet closure_preimage(std::size_t b) const
  {
    PointSet current = fiber(b);
    for (;;) {
      PointSet next(source_.size());
      for (auto i : current.indices())
        next |= source_.closure(i);
      next = saturate(next);
      if (next == current)
        return current;
      current = std::move(next);
    }
  }

  /// Quotient-topology closure of {b}, as Burnside point indices.
  std::vector<std::size_t> closure(std::size_t b) const
  {
    std::vector<std::size_t> out;
    auto pre = closure_preimage(b);
    for (std::size_t c = 0; c < points_.size(); ++c)
      if (pre.contains(points_[c].canonical()))
        out.push_back(c);
    return out;
  }

  bool specializes(std::size_t below, std::size_t above) const
  { return closure_preimage(above).contains(points_.at(below).canonical()); }

  /// rho maps closed sets to closed sets. Closed sets of a finite space are
  /// finite unions of point closures, so checking those suffices.
  bool is_closed_map() const
  {
    for (std::size_t p = 0; p < source_.size(); ++p)
      if (!is_specialization_closed(source_, saturate(source_.closure(p))))
        return false;
    return true;
  }

  /// Points with no proper specialization.
  std::vector<std::size_t> closed_points() const
  {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < points_.size(); ++b)
      if (closure(b).size() == 1)
        out.push_back(b);
    return out;
  }

  friend BurnsideSpace build_burnside(SpecSpace const &space);

private:
  SpecSpace source_;
  std::vector<BurnsidePoint> points_;
  std::vector<std::size_t> rho_;
};

/// Glues P(H,p) and P(K,p) exactly when O^p(H) and O^p(K) are conjugate;
/// (0) and q* points stay singletons.
inline BurnsideSpace build_burnside(SpecSpace const &space)
{
  BurnsideSpace out;
  out.source_ = space;
  auto const &lat = *space.lattice();

  // key: (slot, glue tag); tag is the residual class for explicit primes and
  // the point itself otherwise
  std::map<std::tuple<PrimeSlot, std::size_t>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < space.size(); ++i) {
    auto const &pt = space.point(i);
    std::size_t tag = pt.slot.is_prime()
                        ? lat.residual_class(pt.class_index, pt.slot.prime)
                        : pt.class_index;
    groups[{pt.slot, tag}].push_back(i);
  }

  for (auto &[key, members] : groups)
    out.points_.push_back({members, std::get<0>(key)});
  std::sort(out.points_.begin(), out.points_.end(),
            [](BurnsidePoint const &a, BurnsidePoint const &b) {
              return a.canonical() < b.canonical();
            });
  out.rho_.assign(space.size(), 0);
  for (std::size_t b = 0; b < out.points_.size(); ++b)
    for (auto i : out.points_[b].members)
      out.rho_[i] = b;
  return out;
}

inline BurnsidePoint const &rho(BurnsideSpace const &space, SpecPoint const &p)
{
  return space.point(space.rho(space.source().index_of(p)));
}

inline PointSet fiber(BurnsideSpace const &space, std::size_t b)
{
  return space.fiber(b);
}

struct QuotientReport
{
  std::size_t pairs_checked = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

namespace detail {

// H cap K' is p-subnormal in both H and K' for some conjugate K' of K.
// The q* slot stands for primes not dividing |G|, where p-subnormal means
// equal.
inline bool meet_is_p_subnormal_in_both(SubgroupLattice const &lat, std::size_t h,
                                        std::size_t k, PrimeSlot slot)
{
  auto const &hrep = lat.cls(h).representative;
  for (auto s : lat.cls(k).members) {
    auto const &kc = lat.subgroups()[s];
    auto meet = hrep.intersection(kc);
    if (slot.is_generic()) {
      if (meet.order() == hrep.order() && meet.order() == kc.order())
        return true;
    } else if (is_p_subnormal(meet, hrep, slot.prime) && is_p_subnormal(meet, kc, slot.prime)) {
      return true;
    }
  }
  return false;
}

} // namespace detail

/// Checks, over all pairs of distinct points, that
///   rho(P) == rho(Q)
///   <=> P, Q both off (0) and their closures meet
///   <=> same prime and H cap K p-subnormal in both (up to conjugacy),
/// and that rho is closed and preserves specialization.
inline QuotientReport verify_quotient_characterization(BurnsideSpace const &bs)
{
  QuotientReport report;
  auto const &space = bs.source();
  auto const &lat = *space.lattice();

  std::vector<PointSet> closures;
  for (std::size_t i = 0; i < space.size(); ++i)
    closures.push_back(space.closure(i));

  for (std::size_t a = 0; a < space.size(); ++a)
    for (std::size_t b = a + 1; b < space.size(); ++b) {
      ++report.pairs_checked;
      auto const &pa = space.point(a);
      auto const &pb = space.point(b);
      bool glued = bs.rho(a) == bs.rho(b);
      bool closures_meet = !pa.slot.is_zero() && !pb.slot.is_zero()
                           && closures[a].intersects(closures[b]);
      bool meet_subnormal = !pa.slot.is_zero() && pa.slot == pb.slot
                            && detail::meet_is_p_subnormal_in_both(
                              lat, pa.class_index, pb.class_index, pa.slot);
      if (glued != closures_meet || glued != meet_subnormal)
        report.violations.push_back(space.token(a) + " / " + space.token(b) + ": glued="
                                    + std::to_string(glued) + " closures_meet="
                                    + std::to_string(closures_meet) + " meet_subnormal="
                                    + std::to_string(meet_subnormal));
    }

  if (!bs.is_closed_map())
    report.violations.push_back("rho is not a closed map");
  std::vector<PointSet> quotient_closures;
  for (std::size_t b = 0; b < bs.size(); ++b)
    quotient_closures.push_back(bs.closure_preimage(b));
  for (std::size_t q = 0; q < space.size(); ++q)
    for (std::size_t p = 0; p < space.size(); ++p)
      if (space.specializes(q, p) && !quotient_closures[bs.rho(p)].contains(q))
        report.violations.push_back("rho does not preserve " + space.token(q) + " ~> "
                                    + space.token(p));
  return report;
}

} // namespace dmspec

#endif
