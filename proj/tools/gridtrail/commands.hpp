#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gridtrail::cli {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kResource = 3 };

struct Globals {
  bool json = false;
  std::string output;  // empty: stdout
  std::uint64_t max_nodes = 1000000;
};

struct GenArgs {
  int k = 0;
  std::string format = "json";
  bool phases = false;
};

struct VerifyArgs {
  std::string path;
  std::string extent;  // "3" or "3,3,4"
  std::string rule = "junction";
};

struct SearchArgs {
  std::string grid = "3x3";
  int budget = 4;
  int margin = 1;
  int denominator = 1;
  std::string start;
  std::string extent_cap = "3";
  unsigned workers = 1;
  bool count = false;
  bool reduce = false;
};

struct StartsArgs {
  int k = 2;
  std::optional<int> budget;
  unsigned workers = 1;
  int margin = 1;
  int denominator = 1;
};

struct TreeArgs {
  std::string which = "partial";  // partial | full | replicate
  std::string input;              // replicate: tree file, default partial
  int times = 1;
  std::string rule = "arrangement";
};

struct BoundsArgs {
  std::optional<int> k;
  int upto = 8;
  std::string format = "table";
};

struct RenderArgs {
  std::string path;
  std::string axes = "0,1";
  std::optional<std::string> layers;  // axis name or index
};

int cmd_gen(const Globals& g, const GenArgs& a);
int cmd_verify(const Globals& g, const VerifyArgs& a);
int cmd_search(const Globals& g, const SearchArgs& a);
int cmd_starts(const Globals& g, const StartsArgs& a);
int cmd_tree(const Globals& g, const TreeArgs& a);
int cmd_bounds(const Globals& g, const BoundsArgs& a);
int cmd_render(const Globals& g, const RenderArgs& a);

}  // namespace gridtrail::cli
