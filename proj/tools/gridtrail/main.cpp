#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include <gridtrail/error.hpp>

#include "commands.hpp"

using namespace gridtrail::cli;

namespace {

std::uint64_t max_nodes_from_env() {
  const char* v = std::getenv("GRIDTRAIL_MAX_NODES");
  if (!v || !*v) return 1000000;
  char* end = nullptr;
  const unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0' || n == 0) throw gridtrail::Error("GRIDTRAIL_MAX_NODES must be a positive integer");
  return n;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-link covering trails and trees for the 3^k grid"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Emit exactly one JSON document on stdout");
  app.add_option("-o,--output", g.output, "Write the main artifact to this file");

  GenArgs gen;
  auto* c_gen = app.add_subcommand("gen", "Generate an optimal trail with the clockwise construction");
  c_gen->add_option("-k", gen.k, "Dimension")->required();
  c_gen->add_option("--format", gen.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  c_gen->add_flag("--phases", gen.phases, "Label the forward, backward, link and final phases");

  VerifyArgs ver;
  auto* c_ver = app.add_subcommand("verify", "Verify a trail or tree document");
  c_ver->add_option("path", ver.path, "Trail or tree JSON")->required();
  c_ver->add_option("--extent", ver.extent, "Per-axis box extents, e.g. 3,3,4 (default 3)");
  c_ver->add_option("--rule", ver.rule, "Tree contact rule: junction or arrangement");

  SearchArgs sea;
  auto* c_sea = app.add_subcommand("search", "Exhaustive search over a bounded rational lattice");
  c_sea->add_option("--grid", sea.grid, "Grid shape, e.g. 3x3 or 3");
  c_sea->add_option("--budget", sea.budget, "Maximum number of segments");
  c_sea->add_option("--margin", sea.margin, "Extra lattice layers beyond the grid");
  c_sea->add_option("--denominator", sea.denominator, "Turning points on multiples of 1/D");
  c_sea->add_option("--start", sea.start, "Fixed start node, e.g. 1,1");
  c_sea->add_option("--extent-cap", sea.extent_cap, "Per-axis vertex extent cap");
  c_sea->add_option("--workers", sea.workers, "Worker threads");
  c_sea->add_flag("--count", sea.count, "Count trails with exactly --budget segments");
  c_sea->add_flag("--reduce", sea.reduce, "With --count, also count classes up to symmetry");

  StartsArgs sta;
  auto* c_sta = app.add_subcommand("starts", "Which start nodes admit an optimal trail");
  c_sta->add_option("-k", sta.k, "Dimension (1..3)")->required();
  c_sta->add_option("--budget", sta.budget, "Segment budget (default (3^k-1)/2)");
  c_sta->add_option("--workers", sta.workers, "Worker threads");
  c_sta->add_option("--margin", sta.margin, "Lattice margin for exhaustive mode");
  c_sta->add_option("--denominator", sta.denominator, "Lattice denominator for exhaustive mode");

  TreeArgs tre;
  auto* c_tre = app.add_subcommand("tree", "Covering trees");
  c_tre->add_option("which", tre.which, "partial, full or replicate")
      ->check(CLI::IsMember({"partial", "full", "replicate"}));
  c_tre->add_option("--input", tre.input, "Tree to replicate (default: the partial G_3 tree)");
  c_tre->add_option("--times", tre.times, "Number of replication steps");
  c_tre->add_option("--rule", tre.rule, "Contact rule: junction or arrangement");

  BoundsArgs bnd;
  auto* c_bnd = app.add_subcommand("bounds", "Tree and trail bound table");
  c_bnd->add_option("-k", bnd.k, "Single dimension");
  c_bnd->add_option("--upto", bnd.upto, "Rows for k = 1..N");
  c_bnd->add_option("--format", bnd.format, "table, csv or json");

  RenderArgs ren;
  auto* c_ren = app.add_subcommand("render", "Render a trail or tree as SVG");
  c_ren->add_option("path", ren.path, "Trail or tree JSON")->required();
  c_ren->add_option("--axes", ren.axes, "Projection axes, e.g. x,y or 0,2");
  c_ren->add_option("--layers", ren.layers, "One panel per value of this axis (x, y, z or an index)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    g.max_nodes = max_nodes_from_env();
    if (*c_gen) return cmd_gen(g, gen);
    if (*c_ver) return cmd_verify(g, ver);
    if (*c_sea) return cmd_search(g, sea);
    if (*c_sta) return cmd_starts(g, sta);
    if (*c_tre) return cmd_tree(g, tre);
    if (*c_bnd) return cmd_bounds(g, bnd);
    if (*c_ren) return cmd_render(g, ren);
  } catch (const gridtrail::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const gridtrail::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  } catch (const gridtrail::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
