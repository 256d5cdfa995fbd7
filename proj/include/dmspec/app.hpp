#ifndef DMSPEC_APP_HPP
#define DMSPEC_APP_HPP

#include <optional>
#include <sstream>
#include <string>

#include "burnside.hpp"
#include "catalog.hpp"
#include "error.hpp"
#include "figure.hpp"
#include "golden.hpp"
#include "ideals.hpp"
#include "lattice.hpp"
#include "spectrum.hpp"

namespace dmspec {

enum ExitCode : int
{
  exit_ok = 0,
  exit_golden_mismatch = 1,
  exit_usage = 2,
  exit_parse_error = 3,
  exit_cap_exceeded = 4,
  exit_invalid_argument = 5,
};

struct RenderRequest
{
  std::string target = "spectrum"; // spectrum, burnside, compare, ideals, subgroups, golden
  std::string group_descriptor;
  std::optional<unsigned> local_prime;
  std::string format = "ascii"; // ascii, dot, json
  bool no_color = false;
  bool shg = false;  // compare: chromatic annotation
  bool list = false; // ideals: full listing
  std::size_t cap = PermGroup::default_order_cap;
};

struct RunResult
{
  int exit_code = exit_ok;
  std::string output;
  std::string diagnostic; // one line, empty on success; warnings otherwise
};

namespace detail {

inline std::string render(FigureDocument const &doc, RenderRequest const &req)
{
  if (req.format == "json")
    return to_json_string(doc);
  if (req.format == "dot")
    return to_dot(doc, !req.no_color);
  return to_ascii(doc);
}

inline RunResult run_golden(RenderRequest const &req)
{
  RunResult res;
  std::vector<unsigned> primes;
  if (req.local_prime)
    primes.push_back(*req.local_prime);
  else
    primes = golden_primes(req.group_descriptor);
  if (primes.empty()) {
    res.exit_code = exit_invalid_argument;
    res.diagnostic = "no golden data for '" + req.group_descriptor + "'";
    return res;
  }

  std::ostringstream os;
  bool ok = true;
  for (auto p : primes) {
    auto report = golden_check(req.group_descriptor, p);
    for (auto const &line : report.passed)
      os << "PASS " << req.group_descriptor << " p=" << p << ": " << line << "\n";
    for (auto const &line : report.failed)
      os << "FAIL " << req.group_descriptor << " p=" << p << ": " << line << "\n";
    ok = ok && report.ok();
  }
  res.output = os.str();
  if (!ok) {
    res.exit_code = exit_golden_mismatch;
    res.diagnostic = "golden check failed for " + req.group_descriptor;
  }
  return res;
}

} // namespace detail

/// Smallest prime dividing |G|, or 2 for the trivial group.
inline unsigned default_ideals_prime(PermGroup const &g)
{
  auto primes = g.prime_divisors();
  return primes.empty() ? 2u : primes.front();
}

/// Builds and renders the requested figure. Never throws for bad input;
/// errors come back as an exit code with a one-line diagnostic.
inline RunResult run(RenderRequest const &req)
{
  RunResult res;
  try {
    if (req.format != "ascii" && req.format != "dot" && req.format != "json") {
      res.exit_code = exit_usage;
      res.diagnostic = "unknown format '" + req.format + "'";
      return res;
    }
    if (req.local_prime)
      require_prime(*req.local_prime);

    if (req.target == "golden")
      return detail::run_golden(req);

    auto group = build_group(req.group_descriptor, req.cap);
    std::ostringstream warnings;
    auto lat = SubgroupLattice::build(group, &warnings);
    res.diagnostic = warnings.str();
    while (!res.diagnostic.empty() && res.diagnostic.back() == '\n')
      res.diagnostic.pop_back();

    auto space = [&] {
      return req.local_prime ? build_local_spectrum(lat, *req.local_prime) : build_spectrum(lat);
    };

    FigureDocument doc;
    if (req.target == "spectrum") {
      doc = spectrum_figure(space());
    } else if (req.target == "burnside" || req.target == "compare") {
      doc = burnside_figure(build_burnside(space()), req.target,
                            req.target == "compare" && req.shg);
    } else if (req.target == "ideals") {
      unsigned p = req.local_prime.value_or(default_ideals_prime(*group));
      auto en = enumerate_admissible_local(space(), p);
      doc = ideals_figure(en, req.list);
    } else if (req.target == "subgroups") {
      doc = subgroups_figure(*lat);
    } else {
      res.exit_code = exit_usage;
      res.diagnostic = "unknown target '" + req.target + "'";
      return res;
    }
    res.output = detail::render(doc, req);
  } catch (ParseError const &e) {
    res = {exit_parse_error, {}, std::string("parse error: ") + e.what()};
  } catch (CapExceeded const &e) {
    res = {exit_cap_exceeded, {}, std::string("cap exceeded: ") + e.what()};
  } catch (InvalidArgument const &e) {
    res = {exit_invalid_argument, {}, std::string("invalid argument: ") + e.what()};
  }
  return res;
}

} // namespace dmspec

#endif
