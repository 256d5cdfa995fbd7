#ifndef DMSPEC_TESTS_ORACLES_HPP
#define DMSPEC_TESTS_ORACLES_HPP

// Independent reference computations. They work from raw permutations and
// the definitions, never from the residual criterion or the library's
// subgroup enumeration.

#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include <dmspec/group.hpp>
#include <dmspec/permutation.hpp>
#include <dmspec/primes.hpp>

namespace oracle {

using dmspec::Permutation;
using Bits = std::vector<bool>; // membership by element index

inline std::size_t popcount(Bits const &b)
{
  std::size_t n = 0;
  for (bool x : b)
    n += x;
  return n;
}

/// Closure under products, computed with Permutation arithmetic.
inline Bits close_raw(dmspec::PermGroup const &g, std::vector<std::size_t> const &gens)
{
  Bits in(g.order(), false);
  std::vector<Permutation> elems;
  auto add = [&](Permutation const &p) {
    auto i = *g.find(p);
    if (!in[i]) {
      in[i] = true;
      elems.push_back(p);
    }
  };
  add(g.element(0));
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (auto s : gens)
      add(elems[k] * g.element(static_cast<dmspec::PermGroup::Index>(s)));
  return in;
}

inline std::vector<std::size_t> members(Bits const &b)
{
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i])
      out.push_back(i);
  return out;
}

/// All subgroups, found by closing every set of at most log2|G| elements
/// (a group of order n always has such a generating set).
inline std::set<Bits> brute_force_subgroups(dmspec::PermGroup const &g)
{
  std::size_t d = 0;
  while ((std::size_t{1} << (d + 1)) <= g.order())
    ++d;
  std::set<Bits> found;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    found.insert(close_raw(g, pick));
    if (pick.size() == d)
      return;
    for (std::size_t x = start; x < g.order(); ++x) {
      pick.push_back(x);
      rec(x + 1);
      pick.pop_back();
    }
  };
  rec(1);
  return found;
}

inline Bits conjugate_raw(dmspec::PermGroup const &g, Bits const &h, std::size_t x)
{
  Bits out(g.order(), false);
  auto const &px = g.element(static_cast<dmspec::PermGroup::Index>(x));
  auto pxi = px.inverse();
  for (auto m : members(h))
    out[*g.find(px * g.element(static_cast<dmspec::PermGroup::Index>(m)) * pxi)] = true;
  return out;
}

/// Number of conjugacy classes of subgroups.
inline std::size_t brute_force_class_count(dmspec::PermGroup const &g)
{
  auto subs = brute_force_subgroups(g);
  std::set<Bits> seen;
  std::size_t classes = 0;
  for (auto const &h : subs) {
    if (seen.count(h))
      continue;
    ++classes;
    for (std::size_t x = 0; x < g.order(); ++x)
      seen.insert(conjugate_raw(g, h, x));
  }
  return classes;
}

inline bool is_subset(Bits const &a, Bits const &b)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i])
      return false;
  return true;
}

inline bool normal_in(dmspec::PermGroup const &g, Bits const &k, Bits const &l)
{
  for (auto x : members(l))
    if (conjugate_raw(g, k, x) != k)
      return false;
  return true;
}

/// p-subnormality by definition: search for a tower
/// K = K_0 <| K_1 <| ... <| K_t = H with every index equal to p.
/// Each step is K_{i+1} = <K_i, h> for some h, so breadth-first search over
/// such extensions inside H finds a tower when one exists.
inline bool tower_p_subnormal(dmspec::PermGroup const &g, Bits const &k, Bits const &h, unsigned p)
{
  if (!is_subset(k, h))
    return false;
  std::set<Bits> seen{k};
  std::deque<Bits> queue{k};
  while (!queue.empty()) {
    auto l = queue.front();
    queue.pop_front();
    if (l == h)
      return true;
    auto lm = members(l);
    for (auto x : members(h)) {
      if (l[x])
        continue;
      auto gens = lm;
      gens.push_back(x);
      auto next = close_raw(g, gens);
      if (popcount(next) != p * popcount(l) || seen.count(next) || !normal_in(g, l, next))
        continue;
      seen.insert(next);
      queue.push_back(next);
    }
  }
  return false;
}

/// Smallest normal subgroup of H whose quotient is a p-group, by search
/// over all subgroups.
inline Bits residual_by_search(dmspec::PermGroup const &g, std::set<Bits> const &subs,
                               Bits const &h, unsigned p)
{
  Bits best = h;
  for (auto const &n : subs) {
    if (!is_subset(n, h) || !normal_in(g, n, h))
      continue;
    std::size_t index = popcount(h) / popcount(n);
    if (dmspec::is_power_of(index, p) && popcount(n) < popcount(best))
      best = n;
  }
  return best;
}

// ------------------------------------------------------------ down-sets

/// below[i] = mask of points strictly below i. Counts subsets closed under
/// going down by trying every subset (n <= 26).
inline std::uint64_t brute_force_downsets(std::vector<std::uint64_t> const &below)
{
  std::size_t n = below.size();
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      if ((s >> i & 1) && (below[i] & ~s))
        ok = false;
    count += ok;
  }
  return count;
}

/// Down-sets of a finite poset correspond to antichains (their maximal
/// elements); count antichains by choosing members in increasing index
/// order among mutually incomparable points (n <= 64).
inline std::uint64_t antichain_count(std::vector<std::uint64_t> const &below)
{
  std::size_t n = below.size();
  std::vector<std::uint64_t> comparable(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    comparable[i] |= below[i] | (std::uint64_t{1} << i);
    for (std::size_t j = 0; j < n; ++j)
      if (below[i] >> j & 1)
        comparable[j] |= std::uint64_t{1} << i;
  }
  std::function<std::uint64_t(std::uint64_t)> rec = [&](std::uint64_t candidates) {
    std::uint64_t total = 1;
    while (candidates) {
      auto i = static_cast<std::size_t>(std::countr_zero(candidates));
      candidates &= candidates - 1;
      total += rec(candidates & ~comparable[i]);
    }
    return total;
  };
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return rec(all);
}

} // namespace oracle

#endif
