#pragma once

// The 27 lines on a smooth cubic surface as classes in Pic = Z^{1,6}, their
// incidence graph, and W(E6) acting by lattice reflections.

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace prymcalc::lines {

/// a0 h + a1 e1 + ... + a6 e6.
struct PicClass {
  std::array<int, 7> a{};

  friend PicClass operator+(PicClass x, const PicClass& y) {
    for (std::size_t i = 0; i < 7; ++i) x.a[i] += y.a[i];
    return x;
  }
  friend PicClass operator-(PicClass x, const PicClass& y) {
    for (std::size_t i = 0; i < 7; ++i) x.a[i] -= y.a[i];
    return x;
  }
  friend PicClass operator*(int s, PicClass x) {
    for (auto& v : x.a) v *= s;
    return x;
  }
  friend bool operator==(const PicClass&, const PicClass&) = default;
  std::string to_string() const;
};

/// <u, w> = u0 w0 - sum u_i w_i.
int pairing(const PicClass& u, const PicClass& w);

PicClass hyperplane();
PicClass exceptional(int i);  // e_i, i = 1..6
PicClass canonical();         // (-3; 1, 1, 1, 1, 1, 1)

/// Reflection in a root: v + <v, r> r.
PicClass reflect(const PicClass& v, const PicClass& r);

/// Line indices: 0..5 are a1..a6 (e_i), 6..11 are b1..b6
/// (2h - sum_{l != i} e_l), 12..26 are c_ij (h - e_i - e_j) with i < j in
/// lexicographic order.
inline constexpr int kLines = 27;

struct Line {
  std::string label;
  PicClass cls;
};

const std::array<Line, kLines>& all_lines();

/// Index of a label such as "a1", "b6", "c25"; throws InvalidArgument.
int line_index(const std::string& label);

/// Index of a class among the 27, or -1.
int find_line(const PicClass& c);

/// Every solution of <l,l> = -1, <l,K> = -1 with |a0| <= bound0 and
/// |a_i| <= bound, by exhaustive search.
std::vector<PicClass> lines_in_box(int bound0 = 3, int bound = 2);

/// True when distinct lines meet, i.e. pair to 1. Throws for l == m.
bool incidence(int l, int m);

using Adjacency = std::array<std::array<bool, kLines>, kLines>;
Adjacency incidence_graph();

struct SrgParameters {
  int n = 0, k = 0, lambda = 0, mu = 0;
  bool regular = false;  // every vertex and every pair agree with (k, lambda, mu)
};
SrgParameters srg_parameters(const Adjacency& g);

/// Graphviz rendering of the incidence graph.
std::string incidence_dot();

using Perm27 = std::array<std::uint8_t, kLines>;

Perm27 identity_perm();
/// (p * q)(i) = p(q(i)).
Perm27 compose(const Perm27& p, const Perm27& q);
Perm27 inverse(const Perm27& p);

/// The permutation of the 27 lines induced by reflection in r; throws
/// InternalError when r does not permute the lines.
Perm27 reflection_perm(const PicClass& r);

/// The six simple roots e1-e2, ..., e5-e6, h-e1-e2-e3.
std::array<PicClass, 6> simple_roots();

struct PermGroup {
  std::vector<Perm27> generators;
  std::vector<Perm27> elements;  // empty until enumerated; identity first

  std::size_t order() const { return elements.size(); }
  /// Orbits on the 27 points under the generators, sorted by smallest member.
  std::vector<std::vector<int>> orbits() const;
};

/// Breadth-first closure of the generators.
std::vector<Perm27> enumerate(const std::vector<Perm27>& generators);

/// W(E6), fully enumerated.
const PermGroup& weyl_group();

/// Elements of an enumerated group fixing a line; the generators are all
/// elements, so orbits() is exact.
PermGroup stabilizer(const PermGroup& g, int line);

bool preserves_pairing(const Perm27& p);

struct FiberClasses {
  std::vector<int> marked;   // the line itself
  std::vector<int> meeting;  // the 10 lines meeting it
  std::vector<int> skew;     // the 16 lines skew to it
};
FiberClasses classify_fiber(int line);

/// The 5 pairs {m, m'} with l + m + m' = -K.
std::vector<std::pair<int, int>> tritangent_pairs(int line);

}  // namespace prymcalc::lines
