// dmspec: spectra of derived Mackey functors for finite permutation groups.
//
//   dmspec spec D8 --local 2
//   dmspec compare S3 --shg --format dot
//   dmspec ideals C5 --local 5 --list
//   dmspec golden D8

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <dmspec/app.hpp>

namespace {

struct Verb
{
  CLI::App *cmd = nullptr;
  std::string target;
};

void add_common(CLI::App *cmd, dmspec::RenderRequest &req, std::optional<unsigned> &local,
                bool formats = true)
{
  cmd->add_option("group", req.group_descriptor,
                  "group descriptor: C<n>, D<n> (order n), Dih(n), Q8, S<n>, A<n>, "
                  "products AxB, or perm:(0 1 2),(0 1)")
    ->required();
  cmd->add_option("--local", local, "restrict to the slots {(0), (p)}");
  cmd->add_option("--cap", req.cap, "maximum group order")->capture_default_str();
  if (!formats)
    return;
  cmd->add_option("--format", req.format, "output format")
    ->check(CLI::IsMember({"ascii", "dot", "json"}))
    ->capture_default_str();
  cmd->add_flag("--no-color", req.no_color, "plain DOT output");
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Balmer spectra of derived Mackey functors for finite groups"};
  app.require_subcommand(1);

  dmspec::RenderRequest req;
  std::optional<unsigned> local;
  bool count = false;

  std::vector<Verb> verbs;
  auto verb = [&](char const *name, char const *target, char const *help) {
    auto *cmd = app.add_subcommand(name, help);
    add_common(cmd, req, local, std::string(target) != "golden");
    verbs.push_back({cmd, target});
    return cmd;
  };
  verb("spec", "spectrum", "points and specialization order of the spectrum");
  verb("burnside", "burnside", "the Burnside ring spectrum as a quotient");
  auto *compare = verb("compare", "compare", "the comparison map rho, source and quotient");
  compare->add_flag("--shg", req.shg, "annotate the chromatic image of every point");
  auto *ideals = verb("ideals", "ideals", "admissible subsets (thick tensor-ideals) of a local slice");
  auto *count_flag = ideals->add_flag("--count", count, "print the count only (default)");
  ideals->add_flag("--list", req.list, "list every admissible subset")->excludes(count_flag);
  verb("subgroups", "subgroups", "conjugacy classes of subgroups");
  verb("golden", "golden", "check the worked examples against reference data");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    std::cerr << "dmspec: " << e.what() << "\n";
    return dmspec::exit_usage;
  }

  for (auto const &v : verbs)
    if (v.cmd->parsed())
      req.target = v.target;
  req.local_prime = local;

  auto result = dmspec::run(req);
  std::cout << result.output;
  if (!result.diagnostic.empty())
    std::cerr << "dmspec: " << result.diagnostic << "\n";
  return result.exit_code;
}
