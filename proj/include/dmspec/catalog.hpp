#ifndef DMSPEC_CATALOG_HPP
#define DMSPEC_CATALOG_HPP

// Group descriptors:
//
//   C<n>            cyclic of order n
//   D<n>            dihedral of ORDER n (n even, n >= 4); D8 has 8 elements
//   Dih(<n>)        dihedral symmetries of an n-gon, order 2n
//   Q8              quaternion group
//   S<n>, A<n>      symmetric / alternating group on n points
//   <g> x <g>       direct product (spaces around 'x' optional)
//   perm:<cycles>[,<cycles>...]
//                   explicit generators in zero-based cycle notation,
//                   e.g. perm:(0 1 2)(3 4),(0 1)

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "group.hpp"
#include "permutation.hpp"

namespace dmspec {

namespace detail {

struct GeneratorSet
{
  std::size_t degree = 1;
  std::vector<Permutation> generators;
  std::string name;
  std::uint64_t order = 1; // known order, 0 when unknown (perm: input)
};

inline std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

constexpr std::size_t max_degree = 4096;

inline std::size_t parse_count(std::string_view digits, std::string_view whole)
{
  if (digits.empty() || digits.size() > 6)
    throw ParseError("bad number in group descriptor '" + std::string(whole) + "'");
  std::size_t n = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("bad number in group descriptor '" + std::string(whole) + "'");
    n = n * 10 + static_cast<std::size_t>(c - '0');
  }
  return n;
}

inline std::uint64_t saturating_factorial(std::size_t n)
{
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    if (f > (std::uint64_t{1} << 40))
      return f;
    f *= i;
  }
  return f;
}

inline void check_known_order(std::uint64_t order, std::size_t cap)
{
  if (order > cap)
    throw CapExceeded(cap, static_cast<std::size_t>(order));
}

inline GeneratorSet cyclic(std::size_t n)
{
  GeneratorSet gs;
  gs.name = "C" + std::to_string(n);
  gs.order = n;
  gs.degree = n;
  if (n > 1) {
    std::vector<Permutation::Point> cycle(n);
    for (std::size_t i = 0; i < n; ++i)
      cycle[i] = static_cast<Permutation::Point>(i);
    gs.generators.push_back(Permutation::from_cycles(n, {cycle}));
  }
  return gs;
}

// Dihedral group of order 2m acting on the vertices of an m-gon.
inline GeneratorSet dihedral_on_polygon(std::size_t m, std::string name)
{
  GeneratorSet gs;
  gs.name = std::move(name);
  gs.order = 2 * m;
  if (m == 1) {
    gs.degree = 2;
    gs.generators.push_back(Permutation::from_cycles(2, {{0, 1}}));
    return gs;
  }
  if (m == 2) {
    gs.degree = 4;
    gs.generators.push_back(Permutation::from_cycles(4, {{0, 1}, {2, 3}}));
    gs.generators.push_back(Permutation::from_cycles(4, {{0, 2}, {1, 3}}));
    return gs;
  }
  gs.degree = m;
  std::vector<Permutation::Point> rot(m), refl(m);
  for (std::size_t i = 0; i < m; ++i) {
    rot[i] = static_cast<Permutation::Point>((i + 1) % m);
    refl[i] = static_cast<Permutation::Point>((m - i) % m);
  }
  gs.generators.emplace_back(rot);
  gs.generators.emplace_back(refl);
  return gs;
}

inline GeneratorSet quaternion()
{
  // Regular representation of {1,-1,i,-i,j,-j,k,-k} = indices 0..7.
  // Unit u in {1,i,j,k} = 0..3, sign s in {+,-} = 0/1, index = 2u + s.
  static constexpr int unit_product[4][4][2] = {
    // {unit, sign} for a*b with a,b in {1,i,j,k}
    {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
    {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
    {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
    {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  auto left_mult = [&](int unit) {
    std::vector<Permutation::Point> images(8);
    for (int x = 0; x < 8; ++x) {
      int xu = x / 2, xs = x % 2;
      auto [u, s] = std::pair{unit_product[unit][xu][0], unit_product[unit][xu][1]};
      images[static_cast<std::size_t>(x)] = static_cast<Permutation::Point>(2 * u + ((s + xs) % 2));
    }
    return Permutation(images);
  };
  GeneratorSet gs;
  gs.name = "Q8";
  gs.order = 8;
  gs.degree = 8;
  gs.generators = {left_mult(1), left_mult(2)};
  return gs;
}

inline GeneratorSet symmetric(std::size_t n)
{
  GeneratorSet gs;
  gs.name = "S" + std::to_string(n);
  gs.order = saturating_factorial(n);
  gs.degree = std::max<std::size_t>(n, 1);
  if (n >= 2) {
    gs.generators.push_back(Permutation::from_cycles(n, {{0, 1}}));
    std::vector<Permutation::Point> cycle(n);
    for (std::size_t i = 0; i < n; ++i)
      cycle[i] = static_cast<Permutation::Point>(i);
    if (n > 2)
      gs.generators.push_back(Permutation::from_cycles(n, {cycle}));
  }
  return gs;
}

inline GeneratorSet alternating(std::size_t n)
{
  GeneratorSet gs;
  gs.name = "A" + std::to_string(n);
  gs.order = n >= 2 ? saturating_factorial(n) / 2 : 1;
  gs.degree = std::max<std::size_t>(n, 1);
  for (std::size_t i = 2; i < n; ++i)
    gs.generators.push_back(Permutation::from_cycles(
      n, {{0, 1, static_cast<Permutation::Point>(i)}}));
  return gs;
}

inline GeneratorSet parse_perm(std::string_view body, std::string_view whole)
{
  std::vector<std::vector<std::vector<Permutation::Point>>> gens(1);
  std::size_t degree = 1;
  std::size_t i = 0;
  auto fail = [&](std::string const &why) -> ParseError {
    return ParseError("malformed permutation descriptor '" + std::string(whole)
                      + "': " + why);
  };
  while (i < body.size()) {
    char c = body[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == ',') {
      gens.emplace_back();
      ++i;
    } else if (c == '(') {
      ++i;
      std::vector<Permutation::Point> cycle;
      for (;;) {
        while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i])))
          ++i;
        if (i >= body.size())
          throw fail("unterminated cycle");
        if (body[i] == ')') {
          ++i;
          break;
        }
        std::size_t start = i;
        while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i])))
          ++i;
        if (start == i)
          throw fail(std::string("unexpected character '") + body[i] + "'");
        auto point = parse_count(body.substr(start, i - start), whole);
        if (point >= max_degree)
          throw fail("point " + std::to_string(point) + " too large");
        cycle.push_back(static_cast<Permutation::Point>(point));
        degree = std::max(degree, point + 1);
      }
      gens.back().push_back(std::move(cycle));
    } else {
      throw fail(std::string("unexpected character '") + c + "'");
    }
  }

  GeneratorSet gs;
  gs.name = "perm:" + std::string(trim(body));
  gs.order = 0;
  gs.degree = degree;
  for (auto const &cycles : gens) {
    try {
      gs.generators.push_back(Permutation::from_cycles(degree, cycles));
    } catch (InvalidArgument const &e) {
      throw fail(e.what());
    }
  }
  return gs;
}

inline GeneratorSet parse_factor(std::string_view text, std::size_t cap)
{
  text = trim(text);
  if (text.empty())
    throw ParseError("empty group descriptor");

  if (text.starts_with("perm:"))
    return parse_perm(text.substr(5), text);

  if (text == "Q8")
    return quaternion();

  GeneratorSet gs;
  if (text.starts_with("Dih(") && text.ends_with(")")) {
    auto m = parse_count(text.substr(4, text.size() - 5), text);
    if (m < 2)
      throw ParseError("Dih(n) needs n >= 2, got '" + std::string(text) + "'");
    check_known_order(2 * m, cap);
    return dihedral_on_polygon(m, "Dih(" + std::to_string(m) + ")");
  }

  char kind = text.front();
  auto n = parse_count(text.substr(1), text);
  switch (kind) {
  case 'C':
    if (n < 1)
      throw ParseError("C<n> needs n >= 1");
    check_known_order(n, cap);
    return cyclic(n);
  case 'D':
    if (n < 4 || n % 2 != 0)
      throw ParseError("D<n> is the dihedral group of order n and needs even n >= 4, got '"
                       + std::string(text) + "'");
    check_known_order(n, cap);
    return dihedral_on_polygon(n / 2, "D" + std::to_string(n));
  case 'S':
    if (n < 1)
      throw ParseError("S<n> needs n >= 1");
    gs = symmetric(n);
    check_known_order(gs.order, cap);
    return gs;
  case 'A':
    if (n < 1)
      throw ParseError("A<n> needs n >= 1");
    gs = alternating(n);
    check_known_order(gs.order, cap);
    return gs;
  default:
    throw ParseError("unknown group descriptor '" + std::string(text) + "'");
  }
}

} // namespace detail

/// Builds the group named by `descriptor` (grammar at the top of this file).
inline GroupPtr build_group(std::string_view descriptor,
                            std::size_t cap = PermGroup::default_order_cap)
{
  std::vector<detail::GeneratorSet> factors;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= descriptor.size(); ++i) {
    if (i == descriptor.size() || descriptor[i] == 'x') {
      factors.push_back(detail::parse_factor(descriptor.substr(start, i - start), cap));
      start = i + 1;
    }
  }

  if (factors.size() == 1) {
    auto &f = factors.front();
    return PermGroup::generate(std::move(f.generators), f.name, cap, f.degree);
  }

  std::uint64_t known = 1;
  std::size_t degree = 0;
  std::string name;
  for (auto const &f : factors) {
    degree += f.degree;
    if (known != 0 && f.order != 0)
      known = known > cap ? known : known * f.order;
    else
      known = 0;
    name += (name.empty() ? "" : "x") + f.name;
  }
  if (known != 0)
    detail::check_known_order(known, cap);
  if (degree > detail::max_degree)
    throw ParseError("product acts on too many points");

  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (auto const &f : factors) {
    for (auto const &g : f.generators)
      gens.push_back(g.embedded(degree, offset));
    offset += f.degree;
  }
  return PermGroup::generate(std::move(gens), name, cap, degree);
}

/// Builds the group generated by explicit permutations.
inline GroupPtr build_group(std::vector<Permutation> generators,
                            std::string name = {},
                            std::size_t cap = PermGroup::default_order_cap)
{
  return PermGroup::generate(std::move(generators), std::move(name), cap);
}

} // namespace dmspec

#endif
