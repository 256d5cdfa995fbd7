#ifndef DMSPEC_SPECTRUM_HPP
#define DMSPEC_SPECTRUM_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "lattice.hpp"
#include "primes.hpp"

namespace dmspec {

/// A point of Spec(Z) in finite presentation: (0), an explicit prime (p)
/// dividing |G|, or a single symbol standing for every prime not dividing
/// |G|. All such primes have identical, discrete fibers, so one symbol
/// represents them faithfully.
struct PrimeSlot
{
  enum class Kind : std::uint8_t { Zero, Prime, Generic };

  Kind kind = Kind::Zero;
  unsigned prime = 0;

  static constexpr PrimeSlot zero() { return {Kind::Zero, 0}; }
  static constexpr PrimeSlot generic() { return {Kind::Generic, 0}; }
  static PrimeSlot at(unsigned p)
  {
    require_prime(p);
    return {Kind::Prime, p};
  }

  bool is_zero() const { return kind == Kind::Zero; }
  bool is_prime() const { return kind == Kind::Prime; }
  bool is_generic() const { return kind == Kind::Generic; }

  /// `0`, `<p>` or `q*`.
  std::string token() const
  {
    switch (kind) {
    case Kind::Zero: return "0";
    case Kind::Prime: return std::to_string(prime);
    case Kind::Generic: return "q*";
    }
    return "?";
  }

  static std::optional<PrimeSlot> parse(std::string const &token)
  {
    if (token == "0")
      return zero();
    if (token == "q*")
      return generic();
    if (token.empty() || token.size() > 9
        || token.find_first_not_of("0123456789") != std::string::npos)
      return std::nullopt;
    auto p = static_cast<unsigned>(std::stoul(token));
    if (!dmspec::is_prime(p))
      return std::nullopt;
    return PrimeSlot{Kind::Prime, p};
  }

  auto operator<=>(PrimeSlot const &) const = default;
};

/// P(H, slot) for a conjugacy class H, identified by its class index.
struct SpecPoint
{
  std::size_t class_index = 0;
  PrimeSlot slot;

  auto operator<=>(SpecPoint const &) const = default;
};

/// Subset of the points of a space, by point index.
class PointSet
{
public:
  PointSet() = default;
  explicit PointSet(std::size_t universe) : bits_(universe, false) {}

  static PointSet all(std::size_t universe)
  {
    PointSet s(universe);
    s.bits_.assign(universe, true);
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  bool contains(std::size_t i) const { return bits_.at(i); }
  void insert(std::size_t i) { bits_.at(i) = true; }
  void erase(std::size_t i) { bits_.at(i) = false; }

  std::size_t count() const
  {
    std::size_t n = 0;
    for (bool b : bits_)
      n += b ? 1 : 0;
    return n;
  }

  bool empty() const { return count() == 0; }

  std::vector<std::size_t> indices() const
  {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i])
        out.push_back(i);
    return out;
  }

  bool is_subset_of(PointSet const &other) const
  {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] && !other.bits_[i])
        return false;
    return true;
  }

  bool intersects(PointSet const &other) const
  {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] && other.bits_[i])
        return true;
    return false;
  }

  PointSet &operator|=(PointSet const &other)
  {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (other.bits_[i])
        bits_[i] = true;
    return *this;
  }

  bool operator==(PointSet const &) const = default;

private:
  std::vector<bool> bits_;
};

/// The finite symbolic presentation of the spectrum: one point per
/// (conjugacy class, prime slot), with the specialization order stored as
/// its full (reflexive, transitive) relation.
class SpecSpace
{
public:
  SubgroupLattice::Ptr const &lattice() const { return lattice_; }
  GroupPtr const &group() const { return lattice_->group(); }

  std::vector<PrimeSlot> const &slots() const { return slots_; }
  std::vector<SpecPoint> const &points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  SpecPoint const &point(std::size_t i) const { return points_.at(i); }

  /// Set when the space is the slice over {(0), (p)} only.
  std::optional<unsigned> local_prime() const { return local_prime_; }

  std::optional<std::size_t> slot_index(PrimeSlot s) const
  {
    for (std::size_t i = 0; i < slots_.size(); ++i)
      if (slots_[i] == s)
        return i;
    return std::nullopt;
  }

  std::optional<std::size_t> find(SpecPoint const &p) const
  {
    auto s = slot_index(p.slot);
    if (!s || p.class_index >= lattice_->class_count())
      return std::nullopt;
    return p.class_index * slots_.size() + *s;
  }

  std::size_t index_of(SpecPoint const &p) const
  {
    auto i = find(p);
    if (!i)
      throw InvalidArgument("point does not belong to this space");
    return *i;
  }

  std::size_t index_of(std::size_t class_index, PrimeSlot slot) const
  { return index_of(SpecPoint{class_index, slot}); }

  /// Q lies in the closure of {P}.
  bool specializes(std::size_t q, std::size_t p) const
  { return relation_.at(q * size() + p); }

  PointSet closure(std::size_t p) const
  {
    PointSet out(size());
    for (std::size_t q = 0; q < size(); ++q)
      if (specializes(q, p))
        out.insert(q);
    return out;
  }

  std::string const &class_label(std::size_t class_index) const
  { return lattice_->cls(class_index).label; }

  /// `P(<class-label>,<slot>)`
  std::string token(std::size_t i) const
  {
    auto const &pt = points_.at(i);
    return "P(" + class_label(pt.class_index) + "," + pt.slot.token() + ")";
  }

  std::optional<std::size_t> find_token(std::string const &token) const
  {
    for (std::size_t i = 0; i < size(); ++i)
      if (this->token(i) == token)
        return i;
    return std::nullopt;
  }

  friend SpecSpace build_spectrum(SubgroupLattice::Ptr lattice);
  friend SpecSpace build_local_spectrum(SubgroupLattice::Ptr lattice, unsigned p);

private:
  static SpecSpace make(SubgroupLattice::Ptr lattice, std::vector<PrimeSlot> slots,
                        std::optional<unsigned> local)
  {
    SpecSpace s;
    s.lattice_ = std::move(lattice);
    s.slots_ = std::move(slots);
    s.local_prime_ = local;
    auto const &lat = *s.lattice_;
    std::size_t const m = lat.class_count();
    for (std::size_t c = 0; c < m; ++c)
      for (auto slot : s.slots_)
        s.points_.push_back({c, slot});

    // p-subnormality between classes, one matrix per explicit prime slot
    std::vector<std::vector<bool>> subnormal(s.slots_.size());
    for (std::size_t si = 0; si < s.slots_.size(); ++si) {
      if (!s.slots_[si].is_prime())
        continue;
      subnormal[si].assign(m * m, false);
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t h = 0; h < m; ++h)
          subnormal[si][k * m + h] = lat.conjugate_p_subnormal(k, h, s.slots_[si].prime);
    }

    std::size_t const n = s.points_.size();
    std::size_t const ns = s.slots_.size();
    s.relation_.assign(n * n, false);
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t p = 0; p < n; ++p) {
        auto const &below = s.points_[q];
        auto const &above = s.points_[p];
        bool same_class = below.class_index == above.class_index;
        bool r = false;
        switch (below.slot.kind) {
        case PrimeSlot::Kind::Zero:
          r = above.slot.is_zero() && same_class;
          break;
        case PrimeSlot::Kind::Prime:
          r = (above.slot == below.slot || above.slot.is_zero())
              && subnormal[q % ns][below.class_index * m + above.class_index];
          break;
        case PrimeSlot::Kind::Generic:
          r = (above.slot.is_generic() || above.slot.is_zero()) && same_class;
          break;
        }
        s.relation_[q * n + p] = r;
      }
    return s;
  }

  SubgroupLattice::Ptr lattice_;
  std::vector<PrimeSlot> slots_;
  std::vector<SpecPoint> points_;
  std::vector<bool> relation_;
  std::optional<unsigned> local_prime_;
};

/// Points Con(G) x ({0} u {p : p | |G|} u {q*}).
inline SpecSpace build_spectrum(SubgroupLattice::Ptr lattice)
{
  std::vector<PrimeSlot> slots{PrimeSlot::zero()};
  for (unsigned p : lattice->group()->prime_divisors())
    slots.push_back(PrimeSlot::at(p));
  slots.push_back(PrimeSlot::generic());
  return SpecSpace::make(std::move(lattice), std::move(slots), std::nullopt);
}

inline SpecSpace build_spectrum(GroupPtr const &g)
{
  return build_spectrum(SubgroupLattice::build(g));
}

/// The p-local slice, slots {(0), (p)}. p need not divide |G|; when it does
/// not, every fiber over (p) is discrete.
inline SpecSpace build_local_spectrum(SubgroupLattice::Ptr lattice, unsigned p)
{
  require_prime(p);
  return SpecSpace::make(std::move(lattice), {PrimeSlot::zero(), PrimeSlot{PrimeSlot::Kind::Prime, p}}, p);
}

inline SpecSpace build_local_spectrum(GroupPtr const &g, unsigned p)
{
  return build_local_spectrum(SubgroupLattice::build(g), p);
}

inline bool specializes(SpecSpace const &space, SpecPoint const &q, SpecPoint const &p)
{
  return space.specializes(space.index_of(q), space.index_of(p));
}

inline PointSet closure(SpecSpace const &space, SpecPoint const &p)
{
  return space.closure(space.index_of(p));
}

/// Union of closures, i.e. closed under specialization. On this noetherian
/// space these are exactly the Thomason subsets.
inline bool is_specialization_closed(SpecSpace const &space, PointSet const &s)
{
  for (auto p : s.indices())
    if (!space.closure(p).is_subset_of(s))
      return false;
  return true;
}

/// Closures of the (H, 0) points, one per conjugacy class.
inline std::vector<PointSet> irreducible_components(SpecSpace const &space)
{
  std::vector<PointSet> out;
  for (std::size_t i = 0; i < space.size(); ++i)
    if (space.point(i).slot.is_zero())
      out.push_back(space.closure(i));
  return out;
}

/// Labels the compact generator attached to the orbit G/H.
struct GeneratorObject
{
  std::size_t class_index = 0;
};

/// supp of the generator for G/H: every point whose class is conjugate
/// into H.
inline PointSet generator_support(SpecSpace const &space, GeneratorObject g)
{
  auto const &lat = *space.lattice();
  if (g.class_index >= lat.class_count())
    throw InvalidArgument("generator class does not belong to this group");
  PointSet out(space.size());
  for (std::size_t i = 0; i < space.size(); ++i)
    if (lat.subconjugate(space.point(i).class_index, g.class_index))
      out.insert(i);
  return out;
}

/// A height-0 or height-infinity point of the equivariant stable homotopy
/// spectrum: P(H, p, inf) or P(H, 0, 1).
struct ChromaticPoint
{
  enum class Height : std::uint8_t { One, Infinity };

  std::size_t class_index = 0;
  PrimeSlot prime;
  Height height = Height::One;

  std::string token(SpecSpace const &space) const
  {
    return "P(" + space.class_label(class_index) + "," + prime.token() + ","
           + (height == Height::Infinity ? "inf" : "1") + ")";
  }

  auto operator<=>(ChromaticPoint const &) const = default;
};

inline ChromaticPoint chromatic_image(SpecSpace const &space, std::size_t i)
{
  auto const &pt = space.point(i);
  if (pt.slot.is_zero())
    return {pt.class_index, PrimeSlot::zero(), ChromaticPoint::Height::One};
  return {pt.class_index, pt.slot, ChromaticPoint::Height::Infinity};
}

inline ChromaticPoint chromatic_image(SpecSpace const &space, SpecPoint const &p)
{
  return chromatic_image(space, space.index_of(p));
}

} // namespace dmspec

#endif
