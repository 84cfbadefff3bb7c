#include "mdt/roots.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "mdt/errors.hpp"

namespace mdt {

namespace {

// symmetric Cartan matrix of the (simply laced) diagram
std::vector<std::vector<int>> cartan(const Quiver& d) {
  std::vector<std::vector<int>> c(d.n, std::vector<int>(d.n, 0));
  for (int i = 0; i < d.n; ++i) c[i][i] = 2;
  for (auto [s, t] : d.arrows) {
    c[s][t] -= 1;
    c[t][s] -= 1;
  }
  return c;
}

// positive roots of the finite system on vertices 1..l by reflection closure
std::vector<std::vector<int>> finite_positive_roots(const Quiver& diagram, int l) {
  auto c = cartan(diagram);
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  for (int i = 1; i <= l; ++i) {
    std::vector<int> e(l + 1, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    std::vector<int> a = queue[head];
    for (int j = 1; j <= l; ++j) {
      long pairing = 0;
      for (int k = 1; k <= l; ++k) pairing += c[j][k] * a[k];
      std::vector<int> b = a;
      b[j] -= (int)pairing;
      if (b[j] < 0) continue; // reflection went negative
      if (seen.insert(b).second) queue.push_back(b);
    }
  }
  return {seen.begin(), seen.end()};
}

int height(const std::vector<int>& a) {
  int h = 0;
  for (int x : a) h += x;
  return h;
}

size_t expected_count(char family, int l) {
  switch (family) {
    case 'A': return (size_t)l * (l + 1) / 2;
    case 'D': return (size_t)l * (l - 1);
    case 'E': return l == 6 ? 36 : l == 7 ? 63 : 120;
  }
  return 0;
}

Quiver affine_diagram(char family, int l) {
  Quiver d;
  d.n = l + 1;
  switch (family) {
    case 'A':
      if (l == 1) {
        d.arrows = {{0, 1}, {0, 1}};
      } else {
        for (int i = 0; i < l; ++i) d.arrows.emplace_back(i, i + 1);
        d.arrows.emplace_back(0, l);
      }
      break;
    case 'D':
      d.arrows = {{0, 2}, {1, 2}};
      for (int i = 2; i <= l - 3; ++i) d.arrows.emplace_back(i, i + 1);
      d.arrows.emplace_back(l - 2, l - 1);
      d.arrows.emplace_back(l - 2, l);
      break;
    case 'E':
      if (l == 6)
        d.arrows = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}, {0, 2}};
      else if (l == 7)
        d.arrows = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}, {0, 1}};
      else
        d.arrows = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}, {0, 8}};
      break;
  }
  return d;
}

} // namespace

const char* root_tag_name(RootTag t) {
  switch (t) {
    case RootTag::Finite: return "re-finite";
    case RootTag::Minus: return "re-";
    case RootTag::Plus: return "re+";
    case RootTag::Imaginary: return "im";
  }
  return "?";
}

AffineRootSystem from_type(const std::string& type) {
  // accepted shape: letter, rank, trailing '~'
  if (type.size() < 3 || type.back() != '~')
    fail(Err::UnknownType, "unknown root system type '" + type + "'");
  char family = type[0];
  int l = -1;
  try {
    size_t pos = 0;
    l = std::stoi(type.substr(1), &pos);
    if (pos + 2 != type.size()) l = -1;
  } catch (...) {
    l = -1;
  }
  bool ok = (family == 'A' && l >= 1) || (family == 'D' && l >= 4) ||
            (family == 'E' && l >= 6 && l <= 8);
  if (!ok) fail(Err::UnknownType, "unknown root system type '" + type + "'");

  AffineRootSystem rs;
  rs.type = type;
  rs.l = l;
  rs.diagram = affine_diagram(family, l);
  rs.finite_pos = finite_positive_roots(rs.diagram, l);
  assert(rs.finite_pos.size() == expected_count(family, l));

  // delta = e_0 + highest root; the highest root is the unique root of
  // maximal height
  const std::vector<int>* theta = nullptr;
  int best = -1;
  for (const auto& b : rs.finite_pos) {
    int h = height(b);
    if (h > best) {
      best = h;
      theta = &b;
    }
  }
  rs.delta = *theta;
  rs.delta[0] = 1;
  // the affine Cartan matrix kills delta
  auto c = cartan(rs.diagram);
  for (int i = 0; i <= l; ++i) {
    long s = 0;
    for (int j = 0; j <= l; ++j) s += c[i][j] * rs.delta[j];
    assert(s == 0);
    (void)s;
  }
  return rs;
}

std::vector<PosRoot> positive_roots_up_to(const AffineRootSystem& rs, int maxlevel) {
  if (maxlevel < 0) fail(Err::BadInput, "level bound must be >= 0");
  std::vector<PosRoot> r;
  for (const auto& b : rs.finite_pos) r.push_back({b, RootTag::Finite, 0});
  for (int n = 1; n <= maxlevel; ++n) {
    std::vector<int> nd(rs.delta.size());
    for (size_t i = 0; i < rs.delta.size(); ++i) nd[i] = n * rs.delta[i];
    for (const auto& b : rs.finite_pos) {
      std::vector<int> minus = nd, plus = nd;
      for (size_t i = 0; i < b.size(); ++i) {
        minus[i] -= b[i];
        plus[i] += b[i];
      }
      r.push_back({std::move(minus), RootTag::Minus, n});
      r.push_back({std::move(plus), RootTag::Plus, n});
    }
    r.push_back({std::move(nd), RootTag::Imaginary, n});
  }
  return r;
}

SeriesMode parse_mode(const std::string& s) {
  if (s == "pt") return SeriesMode::PT;
  if (s == "dt") return SeriesMode::DT;
  if (s == "ncdt") return SeriesMode::NCDT;
  fail(Err::BadInput, "mode must be pt, dt or ncdt");
}

const char* mode_name(SeriesMode m) {
  switch (m) {
    case SeriesMode::PT: return "pt";
    case SeriesMode::DT: return "dt";
    case SeriesMode::NCDT: return "ncdt";
  }
  return "?";
}

std::function<bool(const PosRoot&)> stability_select(const AffineRootSystem&,
                                                     SeriesMode mode) {
  switch (mode) {
    case SeriesMode::PT:
      return [](const PosRoot& r) { return r.tag == RootTag::Minus; };
    case SeriesMode::DT:
      return [](const PosRoot& r) {
        return r.tag == RootTag::Minus || r.tag == RootTag::Imaginary;
      };
    case SeriesMode::NCDT:
      return [](const PosRoot&) { return true; };
  }
  return [](const PosRoot&) { return false; };
}

AffineRootSystem from_mckay_group(const std::string& group) {
  auto colon = group.find(':');
  std::string head = group.substr(0, colon);
  auto param = [&]() -> int {
    if (colon == std::string::npos)
      fail(Err::UnknownGroup, "group '" + head + "' needs a :<n> parameter");
    try {
      size_t pos = 0;
      int n = std::stoi(group.substr(colon + 1), &pos);
      if (colon + 1 + pos != group.size()) throw std::invalid_argument("");
      return n;
    } catch (const MdtError&) {
      throw;
    } catch (...) {
      fail(Err::UnknownGroup, "bad group parameter in '" + group + "'");
    }
  };
  if (head == "cyclic") {
    int n = param();
    if (n < 2) fail(Err::UnknownGroup, "cyclic:<n> needs n >= 2");
    return from_type("A" + std::to_string(n - 1) + "~");
  }
  if (head == "bindihedral") {
    int n = param();
    if (n < 2) fail(Err::UnknownGroup, "bindihedral:<n> needs n >= 2");
    return from_type("D" + std::to_string(n + 2) + "~");
  }
  if (colon != std::string::npos)
    fail(Err::UnknownGroup, "group '" + head + "' takes no parameter");
  if (head == "bintet") return from_type("E6~");
  if (head == "binoct") return from_type("E7~");
  if (head == "binico") return from_type("E8~");
  fail(Err::UnknownGroup, "unknown group '" + group + "'");
}

} // namespace mdt
