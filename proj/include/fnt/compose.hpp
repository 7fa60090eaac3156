/*
 * The compositional principal-typing engine.
 *
 * A network is disassembled into one-node blocks (every internal arc cut
 * into an input half "a+" and an output half "a-", both inheriting the
 * arc's capacity interval), each block gets its principal typing by direct
 * formula, and the halves are spliced back together one arc at a time
 * following a binding schedule.  The cost of the whole run is governed by
 * the largest block dimension the schedule ever creates (its index).
 *
 * Everything here uses only {max, min, +, -, compare} on capacities; the
 * test suite asserts this through the rational audit counters.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "fnt/network.hpp"
#include "fnt/typing.hpp"

namespace fnt {

// ---------------------------------------------------------------------------
// binding schedules

struct binding_schedule {
  std::vector<std::string> order;  // internal arc ids, each exactly once
  int index_bound = 0;             // delta: upper bound on the index
};

inline void serialize_schedule(const binding_schedule& s, std::ostream& out) {
  for (const auto& a : s.order) out << a << "\n";
  out << "# delta=" << s.index_bound << "\n";
}

inline std::string serialize_schedule(const binding_schedule& s) {
  std::ostringstream os;
  serialize_schedule(s, os);
  return os.str();
}

inline binding_schedule parse_schedule(std::istream& in) {
  binding_schedule s;
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    auto hash = line.find('#');
    std::string body = hash == std::string::npos ? line : line.substr(0, hash);
    if (hash != std::string::npos) {
      auto d = line.find("delta=", hash);
      if (d != std::string::npos) s.index_bound = std::atoi(line.c_str() + d + 6);
    }
    std::istringstream is(body);
    std::string tok;
    while (is >> tok) s.order.push_back(tok);
  }
  return s;
}

inline binding_schedule parse_schedule(const std::string& text) {
  std::istringstream is(text);
  return parse_schedule(is);
}

// ---------------------------------------------------------------------------
// Break

struct port {
  std::string id;
  bool is_input;
  rat lo, hi;
};

struct broken_block {
  std::string node;
  std::vector<port> ports;
};

struct broken_network {
  std::vector<broken_block> blocks;
};

inline std::string half_in(const std::string& arc_id) { return arc_id + "+"; }
inline std::string half_out(const std::string& arc_id) { return arc_id + "-"; }

inline broken_network break_network(const flow_network& net) {
  std::set<std::string> ids;
  for (const auto& a : net.arcs) ids.insert(a.id);
  for (const auto& a : net.arcs)
    if (a.is_internal() && (ids.count(half_in(a.id)) || ids.count(half_out(a.id))))
      throw typing_error("arc id '" + a.id + "' collides with a half-arc name");

  broken_network bn;
  std::unordered_map<std::string, int> node_block;
  for (const auto& n : net.nodes) {
    node_block[n.id] = static_cast<int>(bn.blocks.size());
    bn.blocks.push_back({n.id, {}});
  }
  for (const auto& a : net.arcs) {
    if (a.is_internal()) {
      // Half a- leaves tail(a); half a+ enters head(a).  Both carry [lo,hi].
      bn.blocks[node_block[a.tail]].ports.push_back({half_out(a.id), false, a.lo, a.hi});
      bn.blocks[node_block[a.head]].ports.push_back({half_in(a.id), true, a.lo, a.hi});
    } else if (a.is_input()) {
      bn.blocks[node_block[a.head]].ports.push_back({a.id, true, a.lo, a.hi});
    } else {
      bn.blocks[node_block[a.tail]].ports.push_back({a.id, false, a.lo, a.hi});
    }
  }
  return bn;
}

// ---------------------------------------------------------------------------
// OnePT: principal typing of a one-node network, O(2^d)

// Computes the one-node principal typing directly into a tblock whose arcs
// are indices [io_base, io_base + ports.size()) of the enclosing typing.
inline bool one_pt_block(const std::vector<port>& ports, int io_base, tblock& out,
                         infeasibility* why) {
  int d = static_cast<int>(ports.size());
  out.arcs.clear();
  for (int i = 0; i < d; ++i) out.arcs.push_back(io_base + i);
  out.init_storage();
  if (d == 0) {
    out.set(0, interval::zero());
    return true;
  }
  std::uint32_t full = out.full_mask();

  // Subset-sum tables over the four per-arc quantities, built by peeling
  // the lowest set bit.
  std::vector<rat> uc_in(full + 1, rat(0)), lc_in(full + 1, rat(0));
  std::vector<rat> uc_out(full + 1, rat(0)), lc_out(full + 1, rat(0));
  for (std::uint32_t m = 1; m <= full; ++m) {
    std::uint32_t low = m & (m - 1);
    int bit = __builtin_ctz(m);
    uc_in[m] = uc_in[low];
    lc_in[m] = lc_in[low];
    uc_out[m] = uc_out[low];
    lc_out[m] = lc_out[low];
    if (ports[bit].is_input) {
      uc_in[m] += ports[bit].hi;
      lc_in[m] += ports[bit].lo;
    } else {
      uc_out[m] += ports[bit].hi;
      lc_out[m] += ports[bit].lo;
    }
  }

  out.set(0, interval::zero());
  // The full set is [0,0] by definition, which is consistent only when a
  // zero net value is attainable: each side's upper capacities must cover
  // the other side's lower bounds (a lone lower-bounded dead-end arc, for
  // instance, fails here).
  if (uc_out[full] < lc_in[full] || uc_in[full] < lc_out[full]) {
    if (why) {
      why->subset.clear();
      for (int i = 0; i < d; ++i) why->subset.push_back(ports[i].id);
      why->lo = -min(rat(0), uc_out[full] - lc_in[full]);
      why->hi = min(uc_in[full] - lc_out[full], rat(0));
    }
    return false;
  }
  out.set(full, interval::zero());
  for (std::uint32_t m = 1; m < full; ++m) {
    std::uint32_t b = full ^ m;
    rat r1 = -min(uc_in[b] - lc_out[b], uc_out[m] - lc_in[m]);
    rat r2 = min(uc_in[m] - lc_out[m], uc_out[b] - lc_in[b]);
    if (r2 < r1) {
      if (why) {
        why->subset.clear();
        for (int i = 0; i < d; ++i)
          if (m & (1u << i)) why->subset.push_back(ports[i].id);
        why->lo = r1;
        why->hi = r2;
      }
      return false;
    }
    out.set(m, interval(r1, r2));
  }
  return true;
}

inline typing_outcome one_pt(const std::vector<port>& ports) {
  typing t;
  for (const auto& p : ports) t.io.push_back({p.id, p.is_input});
  tblock blk;
  infeasibility why;
  if (!one_pt_block(ports, 0, blk, &why)) return typing_outcome::infeasible(why);
  t.blocks.push_back(std::move(blk));
  return typing_outcome::ok(std::move(t));
}

// Convenience overload for an actual one-node network.
inline typing_outcome one_pt(const flow_network& net) {
  if (net.nodes.size() != 1) throw typing_error("one_pt requires a one-node network");
  std::vector<port> ports;
  for (const auto& a : net.arcs) {
    if (a.is_internal()) throw typing_error("one-node network cannot have internal arcs");
    ports.push_back({a.id, a.is_input(), a.lo, a.hi});
  }
  return one_pt(ports);
}

// ---------------------------------------------------------------------------
// binding (splicing a half pair)

namespace detail {

// Replaces block `bi` of `t` with its a+=a- section, dropping the halves at
// local positions p_plus/p_minus.  Returns false (with witness) on an empty
// intersection.
inline bool bind_in_block(typing& t, int bi, int p_plus, int p_minus,
                          infeasibility* why, std::vector<std::string>* diags) {
  tblock& old_b = t.blocks[bi];
  int d = old_b.dim();
  std::uint32_t drop = (1u << p_plus) | (1u << p_minus);
  std::uint32_t keep = old_b.full_mask() ^ drop;

  tblock nb;
  for (int p = 0; p < d; ++p)
    if (p != p_plus && p != p_minus) nb.arcs.push_back(old_b.arcs[p]);
  nb.init_storage();

  // Positions of kept arcs inside the old mask, in new order.
  std::vector<int> old_pos;
  for (int p = 0; p < d; ++p)
    if (p != p_plus && p != p_minus) old_pos.push_back(p);
  int nd = static_cast<int>(old_pos.size());
  std::uint32_t nfull = nb.full_mask();

  auto lookup = [&](std::uint32_t old_mask) -> std::optional<interval> {
    if (old_mask == keep) return interval::zero();  // re-anchored full set
    return old_b.get(old_mask);
  };

  for (std::uint32_t m = 0;; ++m) {
    std::uint32_t a_old = 0;
    for (int p = 0; p < nd; ++p)
      if (m & (1u << p)) a_old |= 1u << old_pos[p];
    std::uint32_t b_old = keep ^ a_old;
    auto va = lookup(a_old);
    auto vb = lookup(b_old);
    if (va && vb) {
      rat lo = max(va->lo, -vb->hi);
      rat hi = min(va->hi, -vb->lo);
      if (hi < lo) {
        if (why) {
          why->subset.clear();
          for (int p = 0; p < nd; ++p)
            if (m & (1u << p)) why->subset.push_back(t.io[nb.arcs[p]].id);
          why->lo = lo;
          why->hi = hi;
        }
        return false;
      }
      nb.set(m, interval(lo, hi));
    } else if (va || vb) {
      // One side missing: repair through the complement (the defined side
      // determines the other).  Flagged -- pipeline typings never hit this.
      if (diags) diags->push_back("bind: repaired one-sided entry via complement");
      interval v = va ? *va : -*vb;
      nb.set(m, v);
    }
    if (m == nfull) break;
  }
  t.blocks[bi] = std::move(nb);
  return true;
}

// Fuses blocks bi and bj of t into block bi by total parallel addition.
inline void fuse_blocks(typing& t, int bi, int bj) {
  tblock& x = t.blocks[bi];
  tblock& y = t.blocks[bj];
  tblock nb;
  nb.arcs = x.arcs;
  nb.arcs.insert(nb.arcs.end(), y.arcs.begin(), y.arcs.end());
  nb.init_storage();
  int dx = x.dim();
  std::uint32_t fx = x.full_mask(), fy = y.full_mask();
  for (std::uint32_t mx = 0;; ++mx) {
    auto vx = x.get(mx);
    for (std::uint32_t my = 0;; ++my) {
      if (vx) {
        auto vy = y.get(my);
        if (vy) nb.set(mx | (my << dx), *vx + *vy);
      }
      if (my == fy) break;
    }
    if (mx == fx) break;
  }
  // By definition the joint full set is [0,0]; for total inputs the sums
  // already agree, but anchor it explicitly.
  nb.set(nb.full_mask(), interval::zero());
  nb.set(0, interval::zero());
  t.blocks[bi] = std::move(nb);
  t.blocks[bj].arcs.clear();
  t.blocks[bj].store.clear();
}

}  // namespace detail

// Splices the pair a+/a- inside one block.  Errors if the halves live in
// different blocks (use bind_t for that).
inline typing_outcome bind_one(const std::string& arc_id, const typing& t,
                               std::vector<std::string>* diags = nullptr) {
  int ip = t.io_index(half_in(arc_id));
  int im = t.io_index(half_out(arc_id));
  if (ip < 0 || im < 0)
    throw typing_error("bind_one: halves of '" + arc_id + "' not present");
  int bi = t.block_containing(ip);
  int bj = t.block_containing(im);
  if (bi < 0 || bj < 0 || bi != bj)
    throw typing_error("bind_one: halves of '" + arc_id + "' not in the same block");
  typing out = t;
  const auto& arcs = out.blocks[bi].arcs;
  int pp = static_cast<int>(std::find(arcs.begin(), arcs.end(), ip) - arcs.begin());
  int pm = static_cast<int>(std::find(arcs.begin(), arcs.end(), im) - arcs.begin());
  infeasibility why;
  if (!detail::bind_in_block(out, bi, pp, pm, &why, diags))
    return typing_outcome::infeasible(why);
  return typing_outcome::ok(std::move(out));
}

// ---------------------------------------------------------------------------
// parallel additions

inline typing par_add(const typing& t1, const typing& t2) {
  for (const auto& a : t2.io)
    if (t1.io_index(a.id) >= 0)
      throw typing_error("par_add: overlapping arc id '" + a.id + "'");
  typing out = t1;
  int base = static_cast<int>(out.io.size());
  out.io.insert(out.io.end(), t2.io.begin(), t2.io.end());
  for (const auto& b : t2.blocks) {
    tblock nb = b;
    for (auto& a : nb.arcs) a += base;
    out.blocks.push_back(std::move(nb));
  }
  return out;
}

inline typing tot_add(const typing& t1, const typing& t2) {
  if (t1.blocks.size() > 1 || t2.blocks.size() > 1)
    throw typing_error("tot_add requires single-block (total) typings");
  typing out = par_add(t1, t2);
  if (out.blocks.size() == 2) detail::fuse_blocks(out, 0, 1);
  out.blocks.erase(
      std::remove_if(out.blocks.begin(), out.blocks.end(),
                     [](const tblock& b) { return b.arcs.empty() && b.store.empty(); }),
      out.blocks.end());
  return out;
}

// Splice a half pair wherever it lives: same block delegates to the
// in-block section; across blocks the two blocks are fused first.
inline typing_outcome bind_t(const std::string& arc_id, const typing& t,
                             std::vector<std::string>* diags = nullptr) {
  int ip = t.io_index(half_in(arc_id));
  int im = t.io_index(half_out(arc_id));
  if (ip < 0 || im < 0)
    throw typing_error("bind_t: halves of '" + arc_id + "' not present");
  int bi = t.block_containing(ip);
  int bj = t.block_containing(im);
  if (bi < 0 || bj < 0) throw typing_error("bind_t: halves not in any block");
  typing out = t;
  if (bi != bj) {
    detail::fuse_blocks(out, bi, bj);
    out.blocks.erase(out.blocks.begin() + bj);
    if (bj < bi) --bi;
  }
  const auto& arcs = out.blocks[bi].arcs;
  int pp = static_cast<int>(std::find(arcs.begin(), arcs.end(), ip) - arcs.begin());
  int pm = static_cast<int>(std::find(arcs.begin(), arcs.end(), im) - arcs.begin());
  infeasibility why;
  if (!detail::bind_in_block(out, bi, pp, pm, &why, diags))
    return typing_outcome::infeasible(why);
  return typing_outcome::ok(std::move(out));
}

// ---------------------------------------------------------------------------
// CompPT

namespace detail {

inline void check_schedule(const flow_network& net, const binding_schedule& s) {
  std::set<std::string> internal;
  for (const auto& a : net.arcs)
    if (a.is_internal()) internal.insert(a.id);
  std::set<std::string> seen;
  for (const auto& id : s.order) {
    if (!internal.count(id))
      throw typing_error("schedule entry '" + id + "' is not an internal arc");
    if (!seen.insert(id).second)
      throw typing_error("schedule repeats arc '" + id + "'");
  }
  if (seen.size() != internal.size())
    throw typing_error("schedule does not cover all internal arcs");
}

}  // namespace detail

inline typing_outcome comp_pt(const flow_network& net, const binding_schedule& s,
                              std::vector<std::string>* diags = nullptr) {
  detail::check_schedule(net, s);
  broken_network bn = break_network(net);

  typing t;
  std::unordered_map<std::string, int> io_of;      // half/stub id -> io index
  std::vector<int> block_of;                       // io index -> block index
  for (const auto& blk : bn.blocks) {
    int base = static_cast<int>(t.io.size());
    int bi = static_cast<int>(t.blocks.size());
    for (const auto& p : blk.ports) {
      io_of[p.id] = static_cast<int>(t.io.size());
      t.io.push_back({p.id, p.is_input});
      block_of.push_back(bi);
    }
    tblock tb;
    infeasibility why;
    if (!one_pt_block(blk.ports, base, tb, &why)) return typing_outcome::infeasible(why);
    t.blocks.push_back(std::move(tb));
  }

  for (const auto& arc_id : s.order) {
    int ip = io_of.at(half_in(arc_id));
    int im = io_of.at(half_out(arc_id));
    int bi = block_of[ip];
    int bj = block_of[im];
    if (bi != bj) {
      detail::fuse_blocks(t, bi, bj);
      for (int a : t.blocks[bi].arcs) block_of[a] = bi;
    }
    const auto& arcs = t.blocks[bi].arcs;
    int pp = static_cast<int>(std::find(arcs.begin(), arcs.end(), ip) - arcs.begin());
    int pm = static_cast<int>(std::find(arcs.begin(), arcs.end(), im) - arcs.begin());
    infeasibility why;
    if (!detail::bind_in_block(t, bi, pp, pm, &why, diags))
      return typing_outcome::infeasible(why);
  }

  // Drop dead blocks, keep only surviving io arcs, canonical order.
  t.blocks.erase(
      std::remove_if(t.blocks.begin(), t.blocks.end(),
                     [](const tblock& b) { return b.arcs.empty() && b.store.empty(); }),
      t.blocks.end());
  typing result = canonical(t);
  result.name = net.name.empty() ? "pt" : net.name;
  return typing_outcome::ok(std::move(result));
}

// Replays the merge sequence on block structure only and returns the exact
// index of the schedule: the maximum component external dimension over all
// reassembly stages (including the fully broken stage).
inline int schedule_index(const flow_network& net, const binding_schedule& s) {
  detail::check_schedule(net, s);
  std::unordered_map<std::string, int> node_of;
  for (std::size_t i = 0; i < net.nodes.size(); ++i)
    node_of[net.nodes[i].id] = static_cast<int>(i);
  std::vector<int> parent(net.nodes.size()), dim(net.nodes.size(), 0);
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : net.arcs) {
    if (a.is_internal()) {
      ++dim[node_of.at(a.tail)];
      ++dim[node_of.at(a.head)];
    } else {
      ++dim[node_of.at(a.tail.empty() ? a.head : a.tail)];
    }
  }
  int index = 0;
  for (int d : dim) index = std::max(index, d);
  std::unordered_map<std::string, int> arc_of;
  for (std::size_t i = 0; i < net.arcs.size(); ++i)
    arc_of[net.arcs[i].id] = static_cast<int>(i);
  for (const auto& id : s.order) {
    const arc& a = net.arcs[arc_of.at(id)];
    int u = find(node_of.at(a.tail));
    int v = find(node_of.at(a.head));
    int nd = (u == v) ? dim[u] - 2 : dim[u] + dim[v] - 2;
    parent[u] = v;
    dim[find(v)] = nd;
    index = std::max(index, nd);
  }
  return index;
}

}  // namespace fnt
