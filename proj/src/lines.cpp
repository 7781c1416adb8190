#include "prymcalc/lines.hpp"

#include <algorithm>
#include <string_view>
#include <unordered_set>

#include "prymcalc/errors.hpp"

namespace prymcalc::lines {

std::string PicClass::to_string() const {
  std::string s = "(" + std::to_string(a[0]) + ";";
  for (std::size_t i = 1; i < 7; ++i) s += (i > 1 ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

int pairing(const PicClass& u, const PicClass& w) {
  int s = u.a[0] * w.a[0];
  for (std::size_t i = 1; i < 7; ++i) s -= u.a[i] * w.a[i];
  return s;
}

PicClass hyperplane() { return PicClass{{1, 0, 0, 0, 0, 0, 0}}; }

PicClass exceptional(int i) {
  if (i < 1 || i > 6) throw InvalidArgument("exceptional class index must be 1..6");
  PicClass c;
  c.a[static_cast<std::size_t>(i)] = 1;
  return c;
}

PicClass canonical() { return PicClass{{-3, 1, 1, 1, 1, 1, 1}}; }

PicClass reflect(const PicClass& v, const PicClass& r) { return v + pairing(v, r) * r; }

const std::array<Line, kLines>& all_lines() {
  static const std::array<Line, kLines> lines = [] {
    std::array<Line, kLines> out;
    std::size_t k = 0;
    for (int i = 1; i <= 6; ++i) out[k++] = {"a" + std::to_string(i), exceptional(i)};
    for (int i = 1; i <= 6; ++i) {
      PicClass c = 2 * hyperplane();
      for (int l = 1; l <= 6; ++l)
        if (l != i) c = c - exceptional(l);
      out[k++] = {"b" + std::to_string(i), c};
    }
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j)
        out[k++] = {"c" + std::to_string(i) + std::to_string(j), hyperplane() - exceptional(i) - exceptional(j)};
    return out;
  }();
  return lines;
}

int line_index(const std::string& label) {
  const auto& ls = all_lines();
  for (int i = 0; i < kLines; ++i)
    if (ls[static_cast<std::size_t>(i)].label == label) return i;
  throw InvalidArgument("unknown line label '" + label + "'");
}

int find_line(const PicClass& c) {
  const auto& ls = all_lines();
  for (int i = 0; i < kLines; ++i)
    if (ls[static_cast<std::size_t>(i)].cls == c) return i;
  return -1;
}

std::vector<PicClass> lines_in_box(int bound0, int bound) {
  std::vector<PicClass> out;
  const PicClass k = canonical();
  PicClass c;
  // Odometer over the box.
  for (std::size_t i = 0; i < 7; ++i) c.a[i] = i == 0 ? -bound0 : -bound;
  for (;;) {
    if (pairing(c, c) == -1 && pairing(c, k) == -1) out.push_back(c);
    std::size_t i = 0;
    for (; i < 7; ++i) {
      const int hi = i == 0 ? bound0 : bound;
      if (c.a[i] < hi) {
        ++c.a[i];
        break;
      }
      c.a[i] = i == 0 ? -bound0 : -bound;
    }
    if (i == 7) break;
  }
  return out;
}

bool incidence(int l, int m) {
  if (l == m) throw InvalidArgument("incidence of a line with itself");
  if (l < 0 || m < 0 || l >= kLines || m >= kLines) throw InvalidArgument("line index out of range");
  const auto& ls = all_lines();
  return pairing(ls[static_cast<std::size_t>(l)].cls, ls[static_cast<std::size_t>(m)].cls) == 1;
}

Adjacency incidence_graph() {
  Adjacency g{};
  for (int i = 0; i < kLines; ++i)
    for (int j = 0; j < kLines; ++j)
      g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i != j && incidence(i, j);
  return g;
}

SrgParameters srg_parameters(const Adjacency& g) {
  SrgParameters s;
  s.n = kLines;
  auto deg = [&](std::size_t i) { return static_cast<int>(std::count(g[i].begin(), g[i].end(), true)); };
  auto common = [&](std::size_t i, std::size_t j) {
    int c = 0;
    for (std::size_t k = 0; k < kLines; ++k) c += (g[i][k] && g[j][k]) ? 1 : 0;
    return c;
  };
  s.k = deg(0);
  s.lambda = -1;
  s.mu = -1;
  s.regular = true;
  for (std::size_t i = 0; i < kLines; ++i) {
    if (deg(i) != s.k) s.regular = false;
    for (std::size_t j = i + 1; j < kLines; ++j) {
      int& slot = g[i][j] ? s.lambda : s.mu;
      const int c = common(i, j);
      if (slot == -1) slot = c;
      if (slot != c) s.regular = false;
    }
  }
  return s;
}

std::string incidence_dot() {
  const auto& ls = all_lines();
  std::string out = "graph lines {\n";
  for (int i = 0; i < kLines; ++i)
    for (int j = i + 1; j < kLines; ++j)
      if (incidence(i, j)) out += "  " + ls[static_cast<std::size_t>(i)].label + " -- " + ls[static_cast<std::size_t>(j)].label + ";\n";
  return out + "}\n";
}

Perm27 identity_perm() {
  Perm27 p{};
  for (std::size_t i = 0; i < kLines; ++i) p[i] = static_cast<std::uint8_t>(i);
  return p;
}

Perm27 compose(const Perm27& p, const Perm27& q) {
  Perm27 r{};
  for (std::size_t i = 0; i < kLines; ++i) r[i] = p[q[i]];
  return r;
}

Perm27 inverse(const Perm27& p) {
  Perm27 r{};
  for (std::size_t i = 0; i < kLines; ++i) r[p[i]] = static_cast<std::uint8_t>(i);
  return r;
}

Perm27 reflection_perm(const PicClass& r) {
  const auto& ls = all_lines();
  Perm27 p{};
  std::array<bool, kLines> hit{};
  for (std::size_t i = 0; i < kLines; ++i) {
    const int j = find_line(reflect(ls[i].cls, r));
    if (j < 0 || hit[static_cast<std::size_t>(j)]) {
      throw InternalError("reflection in " + r.to_string() + " does not permute the 27 lines");
    }
    hit[static_cast<std::size_t>(j)] = true;
    p[i] = static_cast<std::uint8_t>(j);
  }
  return p;
}

std::array<PicClass, 6> simple_roots() {
  std::array<PicClass, 6> r;
  for (int i = 1; i <= 5; ++i) r[static_cast<std::size_t>(i - 1)] = exceptional(i) - exceptional(i + 1);
  r[5] = hyperplane() - exceptional(1) - exceptional(2) - exceptional(3);
  return r;
}

namespace {

struct PermHash {
  std::size_t operator()(const Perm27& p) const {
    return std::hash<std::string_view>{}(std::string_view(reinterpret_cast<const char*>(p.data()), p.size()));
  }
};

}  // namespace

std::vector<Perm27> enumerate(const std::vector<Perm27>& generators) {
  std::vector<Perm27> out{identity_perm()};
  std::unordered_set<Perm27, PermHash> seen{identity_perm()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : generators) {
      Perm27 next = compose(g, out[head]);
      if (seen.insert(next).second) out.push_back(next);
    }
  }
  return out;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::array<int, kLines> orbit_of;
  orbit_of.fill(-1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < kLines; ++start) {
    if (orbit_of[static_cast<std::size_t>(start)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<int> orbit{start};
    orbit_of[static_cast<std::size_t>(start)] = id;
    for (std::size_t h = 0; h < orbit.size(); ++h) {
      for (const auto& g : generators) {
        const int nx = g[static_cast<std::size_t>(orbit[h])];
        if (orbit_of[static_cast<std::size_t>(nx)] < 0) {
          orbit_of[static_cast<std::size_t>(nx)] = id;
          orbit.push_back(nx);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

const PermGroup& weyl_group() {
  static const PermGroup g = [] {
    PermGroup w;
    for (const auto& r : simple_roots()) w.generators.push_back(reflection_perm(r));
    w.elements = enumerate(w.generators);
    return w;
  }();
  return g;
}

PermGroup stabilizer(const PermGroup& g, int line) {
  if (g.elements.empty()) throw InvalidArgument("stabilizer needs an enumerated group");
  if (line < 0 || line >= kLines) throw InvalidArgument("line index out of range");
  PermGroup s;
  for (const auto& p : g.elements)
    if (p[static_cast<std::size_t>(line)] == line) s.elements.push_back(p);
  s.generators = s.elements;
  return s;
}

bool preserves_pairing(const Perm27& p) {
  const auto& ls = all_lines();
  for (std::size_t i = 0; i < kLines; ++i)
    for (std::size_t j = 0; j < kLines; ++j)
      if (pairing(ls[i].cls, ls[j].cls) != pairing(ls[p[i]].cls, ls[p[j]].cls)) return false;
  return true;
}

FiberClasses classify_fiber(int line) {
  if (line < 0 || line >= kLines) throw InvalidArgument("line index out of range");
  FiberClasses f;
  f.marked.push_back(line);
  for (int m = 0; m < kLines; ++m) {
    if (m == line) continue;
    (incidence(line, m) ? f.meeting : f.skew).push_back(m);
  }
  return f;
}

std::vector<std::pair<int, int>> tritangent_pairs(int line) {
  if (line < 0 || line >= kLines) throw InvalidArgument("line index out of range");
  const auto& ls = all_lines();
  const PicClass target = PicClass{} - canonical() - ls[static_cast<std::size_t>(line)].cls;
  std::vector<std::pair<int, int>> out;
  for (int m = 0; m < kLines; ++m)
    for (int n = m + 1; n < kLines; ++n)
      if (m != line && n != line && ls[static_cast<std::size_t>(m)].cls + ls[static_cast<std::size_t>(n)].cls == target) out.emplace_back(m, n);
  return out;
}

}  // namespace prymcalc::lines
