#ifndef DMSPEC_LATTICE_HPP
#define DMSPEC_LATTICE_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "group.hpp"
#include "primes.hpp"
#include "subgroup.hpp"

namespace dmspec {

/// Subgroup enumeration prints a warning on this stream-able threshold.
inline constexpr std::size_t subgroup_warning_order = 256;

/// Every subgroup of G exactly once, sorted by (order, member list).
///
/// Layered cyclic extension: start from the cyclic subgroups and keep
/// joining known subgroups with cyclic subgroups of prime-power order until
/// nothing new appears. Every subgroup is generated by prime-power-order
/// elements, so the fixpoint is the full lattice.
inline std::vector<Subgroup> all_subgroups(GroupPtr const &g,
                                           std::ostream *warnings = nullptr)
{
  using Index = PermGroup::Index;
  if (warnings && g->order() > subgroup_warning_order)
    *warnings << "warning: enumerating subgroups of a group of order "
              << g->order() << " may be slow\n";

  struct Entry
  {
    Subgroup subgroup;
    std::vector<Index> gens;
  };
  std::vector<Entry> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  std::vector<Index> extenders;

  for (std::size_t i = 0; i < g->order(); ++i) {
    Index x = static_cast<Index>(i);
    std::vector<Index> gens;
    if (x != PermGroup::identity())
      gens.push_back(x);
    auto c = Subgroup::generated_by(g, gens);
    if (seen.emplace(c.bits(), found.size()).second) {
      if (c.order() > 1 && prime_divisors(c.order()).size() == 1)
        extenders.push_back(x);
      found.push_back({std::move(c), std::move(gens)});
    }
  }

  for (std::size_t head = 0; head < found.size(); ++head) {
    for (auto x : extenders) {
      if (found[head].subgroup.contains(x))
        continue;
      auto gens = found[head].gens;
      gens.push_back(x);
      auto joined = Subgroup::generated_by(g, gens);
      if (seen.emplace(joined.bits(), found.size()).second)
        found.push_back({std::move(joined), std::move(gens)});
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto &e : found)
    out.push_back(std::move(e.subgroup));
  std::sort(out.begin(), out.end());
  return out;
}

/// A conjugacy class of subgroups with its canonical (least) representative.
struct SubgroupClass
{
  std::size_t index = 0;           // position in canonical class order
  Subgroup representative;
  std::size_t class_size = 0;
  std::size_t order = 0;
  std::vector<std::size_t> members; // subgroup indices, ascending
  std::string label;

  bool is_normal() const { return class_size == 1; }
};

namespace detail {

// p-part partition of an abelian group from the counts of elements whose
// order divides p^i.
inline std::vector<unsigned> abelian_invariants(Subgroup const &h)
{
  auto const &g = h.group();
  std::map<unsigned, std::vector<unsigned>> parts;
  for (unsigned p : prime_divisors(h.order())) {
    std::vector<unsigned> layer_log;
    std::uint64_t pi = 1;
    unsigned prev = 0;
    for (;;) {
      pi *= p;
      std::size_t cnt = 0;
      for (auto x : h.members())
        if (pi % g.element_order(x) == 0)
          ++cnt;
      unsigned lg = 0;
      for (std::size_t c = cnt; c > 1; c /= p)
        ++lg;
      if (lg == prev)
        break;
      layer_log.push_back(lg - prev); // number of cyclic parts of size >= p^i
      prev = lg;
    }
    std::vector<unsigned> lambda;
    for (std::size_t part = 0; !layer_log.empty() && part < layer_log.front(); ++part) {
      unsigned e = 0;
      for (auto l : layer_log)
        if (l > part)
          ++e;
      lambda.push_back(e);
    }
    parts[p] = lambda;
  }
  std::size_t k = 0;
  for (auto const &[p, l] : parts)
    k = std::max(k, l.size());
  std::vector<unsigned> factors(k, 1);
  for (auto const &[p, l] : parts)
    for (std::size_t j = 0; j < l.size(); ++j)
      for (unsigned e = 0; e < l[j]; ++e)
        factors[k - 1 - j] *= p;
  return factors; // ascending, each divides the next
}

inline std::string isomorphism_label(Subgroup const &h)
{
  auto const &g = h.group();
  std::size_t n = h.order();
  if (n == 1)
    return "1";

  std::map<std::size_t, std::size_t> histogram;
  for (auto x : h.members())
    ++histogram[g.element_order(x)];
  auto count = [&](std::size_t o) {
    auto it = histogram.find(o);
    return it == histogram.end() ? std::size_t{0} : it->second;
  };

  if (count(n) > 0)
    return "C" + std::to_string(n);

  if (h.is_abelian()) {
    auto inv = abelian_invariants(h);
    if (inv == std::vector<unsigned>{2, 2})
      return "V4";
    std::string out;
    for (std::size_t i = 0; i < inv.size(); ++i)
      out += (i ? "x" : "") + std::string("C") + std::to_string(inv[i]);
    return out;
  }

  // dihedral of order 2m: a rotation of order m plus m reflections (and the
  // central half-turn when m is even)
  if (std::size_t m = n / 2; n % 2 == 0 && m >= 3 && count(m) > 0
      && count(2) == m + (m % 2 == 0 ? 1 : 0))
    return n == 6 ? "S3" : "D" + std::to_string(n);
  if (n == 8 && count(2) == 1)
    return "Q8";
  if (n == 12 && count(2) == 3 && count(3) == 8)
    return "A4";
  if (n == 24 && count(2) == 9 && count(3) == 8 && count(4) == 6)
    return "S4";
  if (n == 60 && count(2) == 15 && count(3) == 20 && count(5) == 24)
    return "A5";
  if (n == 120 && count(2) == 25 && count(3) == 20 && count(4) == 30
      && count(5) == 24 && count(6) == 20)
    return "S5";
  return "H" + std::to_string(n);
}

} // namespace detail

/// The subgroup lattice of G organised by conjugacy classes.
class SubgroupLattice
{
public:
  using Ptr = std::shared_ptr<SubgroupLattice const>;

  static Ptr build(GroupPtr g, std::ostream *warnings = nullptr)
  {
    auto lat = std::shared_ptr<SubgroupLattice>(new SubgroupLattice());
    lat->group_ = g;
    lat->subgroups_ = all_subgroups(g, warnings);
    for (std::size_t i = 0; i < lat->subgroups_.size(); ++i)
      lat->lookup_.emplace(lat->subgroups_[i].bits(), i);

    std::size_t const n = lat->subgroups_.size();
    lat->class_of_.assign(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (lat->class_of_[i] != n)
        continue;
      std::vector<std::size_t> orbit{i};
      lat->class_of_[i] = lat->classes_.size();
      for (std::size_t head = 0; head < orbit.size(); ++head)
        for (auto gen : g->generator_indices()) {
          auto c = lat->index_of(lat->subgroups_[orbit[head]].conjugate(gen));
          if (lat->class_of_[c] == n) {
            lat->class_of_[c] = lat->classes_.size();
            orbit.push_back(c);
          }
        }
      std::sort(orbit.begin(), orbit.end());
      SubgroupClass cls;
      cls.index = lat->classes_.size();
      cls.representative = lat->subgroups_[orbit.front()];
      cls.class_size = orbit.size();
      cls.order = cls.representative.order();
      cls.members = std::move(orbit);
      lat->classes_.push_back(std::move(cls));
    }

    std::size_t const m = lat->classes_.size();
    lat->subconjugate_.assign(m * m, false);
    for (std::size_t k = 0; k < m; ++k)
      for (auto s : lat->classes_[k].members)
        for (std::size_t h = 0; h < m; ++h)
          if (lat->subgroups_[s].bits().is_subset_of(lat->classes_[h].representative.bits()))
            lat->subconjugate_[k * m + h] = true;

    lat->assign_labels();
    return lat;
  }

  GroupPtr const &group() const { return group_; }
  std::vector<Subgroup> const &subgroups() const { return subgroups_; }
  std::vector<SubgroupClass> const &classes() const { return classes_; }
  SubgroupClass const &cls(std::size_t i) const { return classes_.at(i); }
  std::size_t class_count() const { return classes_.size(); }

  std::optional<std::size_t> find(Subgroup const &h) const
  {
    if (h.parent() != group_)
      return std::nullopt;
    auto it = lookup_.find(h.bits());
    if (it == lookup_.end())
      return std::nullopt;
    return it->second;
  }

  std::size_t index_of(Subgroup const &h) const
  {
    auto i = find(h);
    if (!i)
      throw InvalidArgument("subgroup does not belong to this lattice");
    return *i;
  }

  std::size_t class_of_subgroup(std::size_t subgroup_index) const
  { return class_of_.at(subgroup_index); }

  std::size_t class_of(Subgroup const &h) const { return class_of_[index_of(h)]; }

  std::optional<std::size_t> class_by_label(std::string const &label) const
  {
    for (auto const &c : classes_)
      if (c.label == label)
        return c.index;
    return std::nullopt;
  }

  /// K is G-conjugate to a subgroup of H.
  bool subconjugate(std::size_t k, std::size_t h) const
  { return subconjugate_[k * classes_.size() + h]; }

  /// Class of O^p of the representative of class h.
  std::size_t residual_class(std::size_t h, unsigned p) const
  { return class_of(o_p_residual(classes_.at(h).representative, p)); }

  /// K is G-conjugate to a p-subnormal subgroup of H: some conjugate K' of
  /// K's representative satisfies O^p(H) <= K' <= H.
  bool conjugate_p_subnormal(std::size_t k, std::size_t h, unsigned p) const
  {
    require_prime(p);
    auto const &hrep = classes_.at(h).representative;
    auto const &kc = classes_.at(k);
    if (!subconjugate(k, h))
      return false;
    if (hrep.order() % p != 0)
      return k == h;
    auto residual = o_p_residual(hrep, p);
    for (auto s : kc.members) {
      auto const &conj = subgroups_[s];
      if (residual.bits().is_subset_of(conj.bits()) && conj.bits().is_subset_of(hrep.bits()))
        return true;
    }
    return false;
  }

private:
  SubgroupLattice() = default;

  void assign_labels()
  {
    std::map<std::string, std::vector<std::size_t>> by_base;
    for (auto &c : classes_) {
      c.label = detail::isomorphism_label(c.representative);
      by_base[c.label].push_back(c.index);
    }
    for (auto const &[base, idx] : by_base)
      if (idx.size() > 1)
        for (std::size_t j = 0; j < idx.size(); ++j)
          classes_[idx[j]].label = base + "_" + std::to_string(j + 1);
  }

  GroupPtr group_;
  std::vector<Subgroup> subgroups_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> lookup_;
  std::vector<std::size_t> class_of_;
  std::vector<SubgroupClass> classes_;
  std::vector<bool> subconjugate_;
};

/// Conjugacy classes of subgroups, sorted by (order, representative).
inline std::vector<SubgroupClass> conjugacy_classes_of_subgroups(GroupPtr const &g)
{
  return SubgroupLattice::build(g)->classes();
}

/// Class-level p-subnormality test for classes of `lattice`'s group.
inline bool is_conjugate_p_subnormal(SubgroupClass const &k, SubgroupClass const &h,
                                     unsigned p, SubgroupLattice const &lattice)
{
  if (k.representative.parent() != lattice.group()
      || h.representative.parent() != lattice.group())
    throw InvalidArgument("subgroup class belongs to a different group");
  return lattice.conjugate_p_subnormal(k.index, h.index, p);
}

} // namespace dmspec

#endif
