#ifndef DMSPEC_GOLDEN_HPP
#define DMSPEC_GOLDEN_HPP

// Reference data for the worked examples: the cyclic groups C_p, the
// dihedral group D8, the symmetric group S3 and the quaternion group Q8.
// Everything is stated on the p-local slice, slots {(0), (p)}.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "burnside.hpp"
#include "catalog.hpp"
#include "lattice.hpp"
#include "spectrum.hpp"

namespace dmspec {

struct GoldenCase
{
  std::string group;
  unsigned prime = 0;
  std::size_t subgroup_count = 0;
  std::size_t class_count = 0;
  std::size_t components = 0;
  std::map<std::string, std::size_t> closure_sizes;             // token -> |closure|
  std::map<std::string, std::set<std::string>> closures;        // exact closures
  std::vector<std::pair<std::string, std::string>> not_below;   // (Q, P): Q not in closure(P)
  std::set<std::set<std::string>> gluing_at_prime;              // rho-fibers over (p)
  std::size_t burnside_closed_points = 0;
};

namespace detail {

inline GoldenCase cyclic_prime_golden(unsigned p)
{
  auto cp = "C" + std::to_string(p);
  auto tok = [&](std::string const &cls, std::string const &slot) {
    return "P(" + cls + "," + slot + ")";
  };
  auto ps = std::to_string(p);
  GoldenCase g;
  g.group = cp;
  g.prime = p;
  g.subgroup_count = 2;
  g.class_count = 2;
  g.components = 2;
  g.closure_sizes = {{tok("1", ps), 1}, {tok(cp, ps), 2}, {tok("1", "0"), 2}, {tok(cp, "0"), 3}};
  g.closures = {{tok(cp, ps), {tok("1", ps), tok(cp, ps)}}};
  g.not_below = {{tok(cp, ps), tok("1", "0")}, {tok("1", "0"), tok(cp, "0")}};
  g.gluing_at_prime = {{tok("1", ps), tok(cp, ps)}};
  g.burnside_closed_points = 1;
  return g;
}

// Localised at a prime not dividing |G|: a disjoint union of two-point
// chains with no gluing.
inline GoldenCase coprime_golden(std::string group, unsigned p,
                                 std::size_t subgroups, std::vector<std::string> const &labels)
{
  GoldenCase g;
  g.group = std::move(group);
  g.prime = p;
  g.subgroup_count = subgroups;
  g.class_count = labels.size();
  g.components = labels.size();
  auto ps = std::to_string(p);
  for (auto const &l : labels) {
    g.closure_sizes["P(" + l + "," + ps + ")"] = 1;
    g.closure_sizes["P(" + l + ",0)"] = 2;
    g.gluing_at_prime.insert({"P(" + l + "," + ps + ")"});
  }
  g.burnside_closed_points = labels.size();
  return g;
}

inline std::vector<std::string> const d8_labels{"1", "C2_1", "C2_2", "C2_3", "V4_1", "V4_2", "C4", "D8"};
inline std::vector<std::string> const s3_labels{"1", "C2", "C3", "S3"};
inline std::vector<std::string> const q8_labels{"1", "C2", "C4_1", "C4_2", "C4_3", "Q8"};

} // namespace detail

/// Reference data for (group, prime), if any is embedded.
inline std::optional<GoldenCase> golden_case(std::string const &group, unsigned p)
{
  if (!is_prime(p))
    return std::nullopt;

  if (group == "C" + std::to_string(p))
    return detail::cyclic_prime_golden(p);

  if (group == "D8") {
    if (p != 2)
      return detail::coprime_golden("D8", p, 10, detail::d8_labels);
    // C2_3 is the centre; C2_1, C2_2 are the two non-central classes.
    GoldenCase g;
    g.group = "D8";
    g.prime = 2;
    g.subgroup_count = 10;
    g.class_count = 8;
    g.components = 8;
    g.closure_sizes = {
      {"P(C4,0)", 4},   {"P(V4_1,0)", 5}, {"P(V4_2,0)", 5}, {"P(C2_1,2)", 2},
      {"P(C2_2,2)", 2}, {"P(C2_3,2)", 2}, {"P(1,2)", 1},    {"P(D8,2)", 8},
      {"P(D8,0)", 9},
    };
    g.closures = {{"P(C4,0)", {"P(C4,0)", "P(C4,2)", "P(C2_3,2)", "P(1,2)"}}};
    g.not_below = {{"P(C2_1,2)", "P(C4,0)"}, {"P(C2_2,2)", "P(C4,2)"}};
    std::set<std::string> all;
    for (auto const &l : detail::d8_labels)
      all.insert("P(" + l + ",2)");
    g.gluing_at_prime = {all};
    g.burnside_closed_points = 1;
    return g;
  }

  if (group == "S3") {
    GoldenCase g;
    g.group = "S3";
    g.prime = p;
    g.subgroup_count = 6;
    g.class_count = 4;
    g.components = 4;
    if (p == 3) {
      g.closure_sizes = {{"P(1,3)", 1}, {"P(C2,3)", 1}, {"P(C3,3)", 2}, {"P(S3,3)", 1},
                         {"P(1,0)", 2}, {"P(C2,0)", 2}, {"P(C3,0)", 3}, {"P(S3,0)", 2}};
      // C2 has index 3 in S3 but is not normal, so not 3-subnormal
      g.not_below = {{"P(C2,3)", "P(S3,3)"}, {"P(C2,3)", "P(S3,0)"}};
      g.gluing_at_prime = {{"P(1,3)", "P(C3,3)"}, {"P(C2,3)"}, {"P(S3,3)"}};
      g.burnside_closed_points = 3;
    } else if (p == 2) {
      g.closure_sizes = {{"P(1,2)", 1}, {"P(C2,2)", 2}, {"P(C3,2)", 1}, {"P(S3,2)", 2},
                         {"P(1,0)", 2}, {"P(C2,0)", 3}, {"P(C3,0)", 2}, {"P(S3,0)", 3}};
      g.closures = {{"P(S3,2)", {"P(S3,2)", "P(C3,2)"}}};
      g.not_below = {{"P(1,2)", "P(S3,2)"}, {"P(C2,2)", "P(S3,0)"}};
      g.gluing_at_prime = {{"P(1,2)", "P(C2,2)"}, {"P(C3,2)", "P(S3,2)"}};
      g.burnside_closed_points = 2;
    } else {
      return detail::coprime_golden("S3", p, 6, detail::s3_labels);
    }
    return g;
  }

  if (group == "Q8") {
    if (p != 2)
      return detail::coprime_golden("Q8", p, 6, detail::q8_labels);
    // every subgroup of a 2-group is 2-subnormal, so closures follow the
    // subgroup lattice: 1 < C2 < C4_i < Q8
    GoldenCase g;
    g.group = "Q8";
    g.prime = 2;
    g.subgroup_count = 6;
    g.class_count = 6;
    g.components = 6;
    g.closure_sizes = {{"P(1,2)", 1},    {"P(C2,2)", 2},   {"P(C4_1,2)", 3}, {"P(C4_2,2)", 3},
                       {"P(C4_3,2)", 3}, {"P(Q8,2)", 6},   {"P(1,0)", 2},    {"P(C2,0)", 3},
                       {"P(C4_1,0)", 4}, {"P(C4_2,0)", 4}, {"P(C4_3,0)", 4}, {"P(Q8,0)", 7}};
    g.not_below = {{"P(C4_1,2)", "P(C4_2,2)"}};
    std::set<std::string> all;
    for (auto const &l : detail::q8_labels)
      all.insert("P(" + l + ",2)");
    g.gluing_at_prime = {all};
    g.burnside_closed_points = 1;
    return g;
  }
  return std::nullopt;
}

/// Primes for which golden data exists for `group`.
inline std::vector<unsigned> golden_primes(std::string const &group)
{
  if (group == "D8" || group == "Q8")
    return {2};
  if (group == "S3")
    return {2, 3};
  if (group.size() > 1 && group[0] == 'C'
      && group.find_first_not_of("0123456789", 1) == std::string::npos) {
    auto p = static_cast<unsigned>(std::stoul(group.substr(1)));
    if (is_prime(p))
      return {p};
  }
  return {};
}

struct GoldenReport
{
  std::vector<std::string> passed;
  std::vector<std::string> failed;

  bool ok() const { return failed.empty(); }
};

/// Recomputes the p-local picture of `descriptor` and compares it with the
/// embedded reference data.
inline GoldenReport golden_check(std::string const &descriptor, unsigned p)
{
  GoldenReport report;
  auto expected = golden_case(descriptor, p);
  if (!expected) {
    report.failed.push_back("no golden data for " + descriptor + " at p=" + std::to_string(p));
    return report;
  }

  auto check = [&](bool cond, std::string what) {
    (cond ? report.passed : report.failed).push_back(std::move(what));
  };

  auto lat = SubgroupLattice::build(build_group(descriptor));
  auto space = build_local_spectrum(lat, p);
  auto ps = std::to_string(p);

  check(lat->subgroups().size() == expected->subgroup_count,
        "subgroup count " + std::to_string(lat->subgroups().size()) + " == "
          + std::to_string(expected->subgroup_count));
  check(lat->class_count() == expected->class_count,
        "class count " + std::to_string(lat->class_count()) + " == "
          + std::to_string(expected->class_count));
  auto comps = irreducible_components(space).size();
  check(comps == expected->components, "irreducible components " + std::to_string(comps)
                                         + " == " + std::to_string(expected->components));

  auto lookup = [&](std::string const &token) -> std::optional<std::size_t> {
    auto i = space.find_token(token);
    if (!i)
      report.failed.push_back("unknown point " + token);
    return i;
  };

  for (auto const &[token, size] : expected->closure_sizes)
    if (auto i = lookup(token)) {
      auto got = space.closure(*i).count();
      check(got == size, "|closure(" + token + ")| " + std::to_string(got) + " == "
                           + std::to_string(size));
    }

  for (auto const &[token, members] : expected->closures)
    if (auto i = lookup(token)) {
      std::set<std::string> got;
      for (auto q : space.closure(*i).indices())
        got.insert(space.token(q));
      check(got == members, "closure(" + token + ") matches exactly");
    }

  for (auto const &[q, pt] : expected->not_below) {
    auto qi = lookup(q);
    auto pi = lookup(pt);
    if (qi && pi)
      check(!space.specializes(*qi, *pi), q + " not in closure(" + pt + ")");
  }

  auto bs = build_burnside(space);
  std::set<std::set<std::string>> glue;
  for (auto const &b : bs.points())
    if (b.slot.is_prime()) {
      std::set<std::string> fiber;
      for (auto i : b.members)
        fiber.insert(space.token(i));
      glue.insert(std::move(fiber));
    }
  check(glue == expected->gluing_at_prime, "rho-fibers over (" + ps + ") match");

  std::size_t closed = 0;
  for (auto b : bs.closed_points())
    closed += bs.point(b).slot.is_prime() ? 1 : 0;
  check(closed == expected->burnside_closed_points,
        "closed points of the Burnside spectrum " + std::to_string(closed) + " == "
          + std::to_string(expected->burnside_closed_points));
  return report;
}

} // namespace dmspec

#endif
