/*
 * Seeded network generators.  Everything here is deterministic for a
 * fixed seed and parameter set across platforms: random draws go through
 * a splitmix64 stream with explicit modulo reduction rather than the
 * standard distributions (whose outputs are implementation-defined).
 *
 * Families:
 *   grid(k, cols)  -- k nested rings joined by spokes, 4 io stubs, good
 *                     embedding annotations, annotated outerplanarity k
 *   ring(n)        -- single ring with nested chords, 4 io stubs, k = 1
 *   random(n,m,p,q)-- connected random digraph, p inputs / q outputs,
 *                     no embedding annotations
 */
#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fnt/network.hpp"

namespace fnt {

struct gen_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace gendetail {

struct rng {
  std::uint64_t state;
  explicit rng(std::uint64_t seed) : state(seed + 0x9e3779b97f4a7c15ULL) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
};

// Random capacity in (0, cap_max] with denominator in {1, 2, 4, 8}.
inline rat cap(rng& r, long cap_max) {
  static const long dens[4] = {1, 2, 4, 8};
  long den = dens[r.below(4)];
  long num = 1 + static_cast<long>(r.below(static_cast<std::uint64_t>(cap_max * den)));
  return rat(num, den);
}

}  // namespace gendetail

// ---------------------------------------------------------------------------
// ring family: one cycle, 4 evenly spread io stubs, nested chords

inline flow_network gen_ring(int n, std::uint64_t seed, long cap_max = 10) {
  if (n < 4 || (n - 4) % 2 != 0)
    throw gen_error("ring: need n >= 4 with n - 4 even (got n=" + std::to_string(n) + ")");
  if (cap_max < 1) throw gen_error("ring: cap_max must be >= 1");
  gendetail::rng r(seed);
  flow_network net;
  net.name = "ring" + std::to_string(n);

  int chords = (n - 4) / 2;
  // Node sequence around the cycle: stub, chord*ch/1st-half, stub, stub,
  // chord*2nd-half, stub -- keeps chord pairs non-adjacent and nested.
  std::vector<int> kind(n, 0);  // 0 = chord endpoint, 1 = stub
  {
    std::vector<int> stub_pos;
    if (chords == 0) {
      stub_pos = {0, 1, 2, 3};
    } else {
      stub_pos = {0, 1 + chords, 2 + chords, n - 1};
    }
    for (int p : stub_pos) kind[p] = 1;
  }
  for (int i = 0; i < n; ++i)
    net.nodes.push_back({"v" + std::to_string(i), 1, i});
  for (int i = 0; i < n; ++i) {
    arc a{"r" + std::to_string(i), "v" + std::to_string(i),
          "v" + std::to_string((i + 1) % n), rat(0), gendetail::cap(r, cap_max),
          arc_role::peel};
    net.arcs.push_back(a);
  }
  // Chords: pair the i-th chord node with the (last-i)-th.
  std::vector<int> chord_nodes;
  for (int i = 0; i < n; ++i)
    if (kind[i] == 0) chord_nodes.push_back(i);
  for (int t = 0; t < chords; ++t) {
    int u = chord_nodes[t];
    int v = chord_nodes[chord_nodes.size() - 1 - t];
    arc a{"c" + std::to_string(t), "v" + std::to_string(u), "v" + std::to_string(v),
          rat(0), gendetail::cap(r, cap_max), arc_role::cross};
    net.arcs.push_back(a);
  }
  // Stubs: alternate input/output in ring order.
  int s = 0;
  for (int i = 0; i < n; ++i) {
    if (kind[i] != 1) continue;
    bool in = (s % 2 == 0);
    arc a{in ? "in" + std::to_string(s / 2) : "out" + std::to_string(s / 2),
          in ? "" : "v" + std::to_string(i), in ? "v" + std::to_string(i) : "",
          rat(0), gendetail::cap(r, cap_max), arc_role::none};
    net.arcs.push_back(a);
    ++s;
  }
  return net;
}

// ---------------------------------------------------------------------------
// grid family: k nested rings joined by spokes

inline flow_network gen_grid(int k, int cols, std::uint64_t seed, long cap_max = 10) {
  if (k < 1) throw gen_error("grid: need k >= 1");
  if (k == 1) {
    if (cols < 0 || cols % 2 != 0) throw gen_error("grid: k=1 needs even cols >= 0");
    return gen_ring(4 + cols, seed, cap_max);
  }
  if (cols < 3) throw gen_error("grid: need cols >= 3");
  if (cap_max < 1) throw gen_error("grid: cap_max must be >= 1");
  gendetail::rng r(seed);
  flow_network net;
  net.name = "grid" + std::to_string(k) + "x" + std::to_string(cols);
  int s = cols;

  auto nid = [](int layer, int j) {
    return "w" + std::to_string(layer) + "_" + std::to_string(j);
  };
  auto ring_size = [&](int layer) {
    if (layer == 1) return s + 4;
    if (layer == k) return s;
    return 2 * s;
  };
  for (int l = 1; l <= k; ++l)
    for (int j = 0; j < ring_size(l); ++j) net.nodes.push_back({nid(l, j), l, j});
  for (int l = 1; l <= k; ++l) {
    int sz = ring_size(l);
    for (int j = 0; j < sz; ++j) {
      arc a{"r" + std::to_string(l) + "_" + std::to_string(j), nid(l, j),
            nid(l, (j + 1) % sz), rat(0), gendetail::cap(r, cap_max), arc_role::peel};
      net.arcs.push_back(a);
    }
  }

  // Layer-1 stubs sit at 4 spread positions; the remaining s positions
  // carry down-spokes, matched to the next layer's up-spoke slots in
  // cyclic order (planar: no two spokes cross).
  std::vector<int> l1_spoke_slots;
  {
    std::set<int> stub_pos;
    int sz = s + 4;
    for (int t = 0; t < 4; ++t) stub_pos.insert(t * sz / 4);
    int idx = 0;
    for (int j = 0; j < sz; ++j) {
      if (stub_pos.count(j)) {
        bool in = (idx % 2 == 0);
        arc a{in ? "in" + std::to_string(idx / 2) : "out" + std::to_string(idx / 2),
              in ? "" : nid(1, j), in ? nid(1, j) : "", rat(0),
              gendetail::cap(r, cap_max), arc_role::none};
        net.arcs.push_back(a);
        ++idx;
      } else {
        l1_spoke_slots.push_back(j);
      }
    }
  }
  auto down_slots = [&](int l) {  // slots on layer l carrying a spoke to l+1
    std::vector<int> out;
    if (l == 1) return l1_spoke_slots;
    for (int j = 1; j < ring_size(l); j += 2) out.push_back(j);  // odd = down
    return out;
  };
  auto up_slots = [&](int l) {  // slots on layer l receiving a spoke from l-1
    std::vector<int> out;
    if (l == k)
      for (int j = 0; j < s; ++j) out.push_back(j);
    else
      for (int j = 0; j < ring_size(l); j += 2) out.push_back(j);  // even = up
    return out;
  };
  for (int l = 1; l < k; ++l) {
    auto ds = down_slots(l);
    auto us = up_slots(l + 1);
    for (int t = 0; t < s; ++t) {
      arc a{"s" + std::to_string(l) + "_" + std::to_string(t), nid(l, ds[t]),
            nid(l + 1, us[t]), rat(0), gendetail::cap(r, cap_max), arc_role::cross};
      net.arcs.push_back(a);
    }
  }
  return net;
}

// ---------------------------------------------------------------------------
// random family: connected digraph, no annotations

inline flow_network gen_random(int n, int m, int p, int q, std::uint64_t seed,
                               long cap_max = 10, bool lower_bounds = false) {
  if (n < 1) throw gen_error("random: need n >= 1");
  if (m < n - 1) throw gen_error("random: need m >= n - 1 for connectivity");
  long max_arcs = static_cast<long>(n) * (n - 1);
  if (m > max_arcs) throw gen_error("random: too many arcs for simple digraph");
  if (p < 0 || q < 0 || p + q < 1) throw gen_error("random: need p + q >= 1 io arcs");
  gendetail::rng r(seed);
  flow_network net;
  net.name = "rand" + std::to_string(n) + "_" + std::to_string(m);
  for (int i = 0; i < n; ++i) net.nodes.push_back({"v" + std::to_string(i), 0, -1});

  auto make_caps = [&](arc& a) {
    a.hi = gendetail::cap(r, cap_max);
    if (lower_bounds && r.below(3) == 0) {
      // lo uniform in [0, hi] on the same denominator grid
      rat lo = a.hi * rat(static_cast<long>(r.below(5)), 4);
      a.lo = lo < a.hi ? lo : a.hi;
    }
  };

  std::set<std::pair<int, int>> used;
  int aid = 0;
  // Random spanning tree: attach node i to a uniformly chosen earlier node.
  for (int i = 1; i < n; ++i) {
    int j = static_cast<int>(r.below(i));
    bool fwd = r.below(2) == 0;
    int u = fwd ? j : i, v = fwd ? i : j;
    used.insert({u, v});
    arc a{"a" + std::to_string(aid++), "v" + std::to_string(u), "v" + std::to_string(v),
          rat(0), rat(0), arc_role::none};
    make_caps(a);
    net.arcs.push_back(a);
  }
  while (aid < m) {
    int u = static_cast<int>(r.below(n));
    int v = static_cast<int>(r.below(n));
    if (u == v || used.count({u, v})) continue;
    used.insert({u, v});
    arc a{"a" + std::to_string(aid++), "v" + std::to_string(u), "v" + std::to_string(v),
          rat(0), rat(0), arc_role::none};
    make_caps(a);
    net.arcs.push_back(a);
  }
  for (int i = 0; i < p; ++i) {
    arc a{"in" + std::to_string(i), "", "v" + std::to_string(r.below(n)), rat(0), rat(0),
          arc_role::none};
    make_caps(a);
    net.arcs.push_back(a);
  }
  for (int i = 0; i < q; ++i) {
    arc a{"out" + std::to_string(i), "v" + std::to_string(r.below(n)), "", rat(0), rat(0),
          arc_role::none};
    make_caps(a);
    net.arcs.push_back(a);
  }
  return net;
}

// Random network with every node of degree >= 3 (counting stubs): a
// Hamiltonian cycle plus a chord matching, then a few reversed arcs and
// stubs to make 2-cycles and degree-4+ nodes appear.  Exercises the
// 3-regularization paths.
inline flow_network gen_min_degree3(int n, std::uint64_t seed, long cap_max = 10) {
  if (n < 6 || n % 2 != 0) throw gen_error("min_degree3: need even n >= 6");
  gendetail::rng r(seed);
  flow_network net;
  net.name = "md3_" + std::to_string(n);
  for (int i = 0; i < n; ++i) net.nodes.push_back({"v" + std::to_string(i), 0, -1});
  int aid = 0;
  std::set<std::pair<int, int>> used;
  auto add = [&](int u, int v, arc_role role = arc_role::none) {
    if (!used.insert({u, v}).second) return;
    arc a{"a" + std::to_string(aid++), "v" + std::to_string(u), "v" + std::to_string(v),
          rat(0), gendetail::cap(r, cap_max), role};
    net.arcs.push_back(a);
  };
  for (int i = 0; i < n; ++i) add(i, (i + 1) % n);
  // chord matching: i <-> i + n/2
  for (int i = 0; i < n / 2; ++i) add(i, i + n / 2);
  // a couple of reversals (creates 2-cycles and degree-4 nodes)
  int rev = 1 + static_cast<int>(r.below(2));
  for (int t = 0; t < rev; ++t) {
    int i = static_cast<int>(r.below(n));
    add((i + 1) % n, i);
  }
  // io stubs on random nodes (degree grows past 3 -- fine)
  int u = static_cast<int>(r.below(n)), v = static_cast<int>(r.below(n));
  net.arcs.push_back({"in0", "", "v" + std::to_string(u), rat(0),
                      gendetail::cap(r, cap_max), arc_role::none});
  net.arcs.push_back({"out0", "v" + std::to_string(v), "", rat(0),
                      gendetail::cap(r, cap_max), arc_role::none});
  return net;
}

}  // namespace fnt
