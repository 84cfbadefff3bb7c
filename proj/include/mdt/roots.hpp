#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mdt/quiver.hpp"

namespace mdt {

// Positive roots of an (untwisted, simply laced) affine root system, written
// in the basis of simple roots e_0..e_l with e_0 the extending vertex.
// Every positive root of level n = alpha_0 >= 1 is n delta, n delta + beta or
// n delta - beta for a unique positive root beta of the finite subsystem.
enum class RootTag {
  Finite,    // level 0: beta in the finite subsystem
  Minus,     // n delta - beta
  Plus,      // n delta + beta
  Imaginary, // n delta
};

const char* root_tag_name(RootTag t);

struct PosRoot {
  std::vector<int> alpha;
  RootTag tag;
  int level; // alpha[0]
};

struct AffineRootSystem {
  std::string type; // "A1~", "D4~", "E6~", ...
  int l = 0;        // finite rank; vertices are 0..l
  Quiver diagram;   // fixed orientation of the affine diagram
  std::vector<std::vector<int>> finite_pos; // finite positive roots, slot 0 is 0
  std::vector<int> delta;
};

// type strings: "A<l>~" (l >= 1), "D<l>~" (l >= 4), "E6~", "E7~", "E8~"
AffineRootSystem from_type(const std::string& type);

// finite subgroups of SL2: cyclic:<n> n >= 2, bindihedral:<n> n >= 2,
// bintet, binoct, binico
AffineRootSystem from_mckay_group(const std::string& group);

// all positive roots with level alpha_0 <= maxlevel, finite ones included
std::vector<PosRoot> positive_roots_up_to(const AffineRootSystem& rs, int maxlevel);

enum class SeriesMode { PT, DT, NCDT };

SeriesMode parse_mode(const std::string& s);
const char* mode_name(SeriesMode m);

// which roots contribute to each series: PT takes n delta - beta only,
// DT adds the imaginary roots, NCDT takes everything
std::function<bool(const PosRoot&)> stability_select(const AffineRootSystem& rs,
                                                     SeriesMode mode);

} // namespace mdt
