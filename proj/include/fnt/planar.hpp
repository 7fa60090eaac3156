/*
 * Planar pipeline: layered (onion-peel) embeddings, peel/cross arc
 * classification, 3-regularization, good-embedding validation and repair,
 * and the schedule construction that keeps the binding index bounded by
 * the outerplanarity (delta <= 2k + 4 + p + q).
 *
 * Embeddings are carried as layer=/ring=/role= annotations on NETF nodes
 * and arcs; no rotation systems.  A "good" embedding has, on every layer,
 * a single simple ring cycle through the layer's surviving nodes.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "fnt/compose.hpp"
#include "fnt/network.hpp"

namespace fnt {

struct layered_embedding {
  std::map<std::string, int> layer;
  std::map<std::string, long> ring;  // only for ring-cycle nodes
  int outer_k = 0;
};

inline layered_embedding extract_embedding(const flow_network& net) {
  layered_embedding e;
  for (const auto& n : net.nodes) {
    if (n.layer > 0) {
      e.layer[n.id] = n.layer;
      e.outer_k = std::max(e.outer_k, n.layer);
    }
    if (n.ring >= 0) e.ring[n.id] = n.ring;
  }
  return e;
}

// ---------------------------------------------------------------------------
// peel/cross classification

struct peel_info {
  std::set<std::string> peel_arcs;   // peel arc at the level of its endpoints
  std::set<std::string> cross_arcs;
  std::map<int, std::vector<std::string>> ring_cycle;  // layer -> L_i' by ring pos
  std::set<std::string> demoted_nodes;  // L_i - L_i' (on a hanging path)
  std::set<std::string> a1, a2;         // the schedule pre-pass partition
  std::vector<std::string> problems;
};

inline peel_info classify_arcs(const flow_network& net, const layered_embedding& e) {
  peel_info info;
  auto layer_of = [&](const std::string& id) {
    auto it = e.layer.find(id);
    return it == e.layer.end() ? 0 : it->second;
  };

  // Ring order per layer (among ring-annotated nodes).
  std::map<int, std::vector<std::pair<long, std::string>>> by_layer;
  for (const auto& [id, l] : e.layer) {
    auto it = e.ring.find(id);
    if (it != e.ring.end()) by_layer[l].push_back({it->second, id});
  }
  std::map<std::string, int> ring_pos;  // node -> position within its layer list
  std::map<int, int> ring_len;
  for (auto& [l, v] : by_layer) {
    std::sort(v.begin(), v.end());
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i].first == v[i - 1].first)
        info.problems.push_back("layer " + std::to_string(l) +
                                ": duplicate ring position " + std::to_string(v[i].first));
    for (std::size_t i = 0; i < v.size(); ++i) ring_pos[v[i].second] = static_cast<int>(i);
    ring_len[l] = static_cast<int>(v.size());
  }

  // Pass 1: peel candidates.
  for (const auto& a : net.arcs) {
    if (!a.is_internal()) continue;
    int lt = layer_of(a.tail), lh = layer_of(a.head);
    if (lt == 0 || lh == 0)
      info.problems.push_back("arc '" + a.id + "' touches an unlayered node");
    if (std::abs(lt - lh) > 1)
      info.problems.push_back("arc '" + a.id + "' spans non-consecutive layers");
    bool peel = false;
    if (a.role == arc_role::peel) {
      peel = true;
      if (lt != lh)
        info.problems.push_back("arc '" + a.id + "' tagged peel across layers");
    } else if (a.role == arc_role::none && lt == lh && lt > 0) {
      // Untagged same-layer arc: peel iff ring-consecutive on its layer.
      auto pt = ring_pos.find(a.tail);
      auto ph = ring_pos.find(a.head);
      if (pt != ring_pos.end() && ph != ring_pos.end()) {
        int len = ring_len[lt];
        int diff = std::abs(pt->second - ph->second);
        peel = (diff == 1) || (len > 2 && diff == len - 1);
      }
    }
    if (peel)
      info.peel_arcs.insert(a.id);
    else
      info.cross_arcs.insert(a.id);
  }

  // L_i' = layer nodes incident to >= 2 peeling arcs.
  std::map<std::string, int> peel_deg;
  for (const auto& a : net.arcs)
    if (info.peel_arcs.count(a.id)) {
      ++peel_deg[a.tail];
      ++peel_deg[a.head];
    }
  for (const auto& [id, l] : e.layer) {
    if (peel_deg[id] >= 2) {
      if (e.ring.count(id)) info.ring_cycle[l];  // ensure key exists
    } else {
      info.demoted_nodes.insert(id);
    }
  }
  for (auto& [l, v] : by_layer) {
    for (auto& [pos, id] : v)
      if (!info.demoted_nodes.count(id)) info.ring_cycle[l].push_back(id);
  }

  // A#1: cross arcs plus arcs touching a demoted node.
  for (const auto& a : net.arcs) {
    if (!a.is_internal()) continue;
    bool in1 = info.cross_arcs.count(a.id) || info.demoted_nodes.count(a.tail) ||
               info.demoted_nodes.count(a.head);
    (in1 ? info.a1 : info.a2).insert(a.id);
  }
  return info;
}

// ---------------------------------------------------------------------------
// good-embedding validation

struct good_check {
  bool good = false;
  std::vector<std::string> diags;
};

inline good_check is_good_embedding(const flow_network& net, const layered_embedding& e) {
  good_check gc;
  auto part = components(net);
  if (part.blocks.size() != 1)
    gc.diags.push_back("network is not connected");

  std::map<std::string, int> degree, stubs;
  std::set<std::pair<std::string, std::string>> internal_pairs;
  for (const auto& a : net.arcs) {
    if (a.is_internal()) {
      ++degree[a.tail];
      ++degree[a.head];
      internal_pairs.insert({a.tail, a.head});
    } else {
      const std::string& anchor = a.tail.empty() ? a.head : a.tail;
      ++degree[anchor];
      ++stubs[anchor];
    }
  }
  for (const auto& n : net.nodes) {
    if (degree[n.id] != 3)
      gc.diags.push_back("node '" + n.id + "' has degree " + std::to_string(degree[n.id]) +
                         " (3-regularity violated)");
    if (stubs[n.id] > 1)
      gc.diags.push_back("node '" + n.id + "' carries " + std::to_string(stubs[n.id]) +
                         " io arcs (at most one allowed)");
    if (!e.layer.count(n.id)) gc.diags.push_back("node '" + n.id + "' has no layer");
  }
  for (const auto& [u, v] : internal_pairs)
    if (internal_pairs.count({v, u}))
      gc.diags.push_back("two-node cycle between '" + u + "' and '" + v + "'");

  peel_info info = classify_arcs(net, e);
  for (const auto& p : info.problems) gc.diags.push_back(p);

  // Each layer's surviving nodes must form one simple cycle of level-i
  // peel arcs, consecutive in ring order.
  std::set<std::pair<std::string, std::string>> peel_pairs;
  for (const auto& a : net.arcs)
    if (info.peel_arcs.count(a.id)) {
      peel_pairs.insert({a.tail, a.head});
      peel_pairs.insert({a.head, a.tail});
    }
  for (int l = 1; l <= e.outer_k; ++l) {
    auto it = info.ring_cycle.find(l);
    std::size_t len = it == info.ring_cycle.end() ? 0 : it->second.size();
    if (len < 3) {
      gc.diags.push_back("layer " + std::to_string(l) + " has no ring cycle");
      continue;
    }
    const auto& cyc = it->second;
    for (std::size_t i = 0; i < len; ++i) {
      const std::string& u = cyc[i];
      const std::string& v = cyc[(i + 1) % len];
      if (!peel_pairs.count({u, v}))
        gc.diags.push_back("layer " + std::to_string(l) + ": ring neighbors '" + u +
                           "' and '" + v + "' not joined by a peel arc");
    }
    // No extra level-l peel arcs beyond the ring (chords would make the
    // "cycle" non-simple).  Ring positions may have gaps, so index the
    // cycle itself rather than using raw positions.
    std::map<std::string, long> cycle_index;
    for (std::size_t i = 0; i < len; ++i) cycle_index[cyc[i]] = static_cast<long>(i);
    for (const auto& a : net.arcs)
      if (info.peel_arcs.count(a.id)) {
        auto iu = cycle_index.find(a.tail);
        auto iv = cycle_index.find(a.head);
        if (iu == cycle_index.end() || iv == cycle_index.end()) continue;
        long diff = std::abs(iu->second - iv->second);
        if (!(diff == 1 || diff == static_cast<long>(len) - 1))
          gc.diags.push_back("layer: peel chord '" + a.id + "' breaks ring simplicity");
      }
  }
  gc.good = gc.diags.empty();
  return gc;
}

// ---------------------------------------------------------------------------
// 3-regularization

namespace planardetail {

inline rat big_K(const flow_network& net) {
  rat k(1);
  for (const auto& a : net.arcs) k += a.hi;
  return k;
}

}  // namespace planardetail

// Breaks 2-cycles and expands degree >= 4 nodes into cycles; degrees < 3
// violate the precondition (the construction assumes them pre-eliminated).
inline flow_network to_3_regular(const flow_network& net) {
  std::map<std::string, int> degree;
  for (const auto& a : net.arcs) {
    if (!a.tail.empty()) ++degree[a.tail];
    if (!a.head.empty()) ++degree[a.head];
  }
  for (const auto& n : net.nodes)
    if (degree[n.id] < 3)
      throw typing_error("to_3_regular: node '" + n.id + "' has degree " +
                         std::to_string(degree[n.id]) + " < 3");

  flow_network out = net;
  rat K = planardetail::big_K(net);

  // Step 1: break two-node cycles.  For a pair u->v, v->u we split the
  // u->v arc with a fresh middle node mu and the v->u arc with mu', then
  // tie mu and mu' with a dummy (zero-capacity) arc.
  std::map<std::pair<std::string, std::string>, std::string> fwd;
  for (const auto& a : out.arcs)
    if (a.is_internal()) fwd[{a.tail, a.head}] = a.id;
  std::vector<std::pair<std::string, std::string>> twocycles;
  for (const auto& [uv, id] : fwd) {
    auto rev = fwd.find({uv.second, uv.first});
    if (rev != fwd.end() && uv.first < uv.second) twocycles.push_back(uv);
  }
  int fresh = 0;
  for (const auto& [u, v] : twocycles) {
    std::string a_id = fwd[{u, v}];
    std::string b_id = fwd[{v, u}];
    int ai = out.arc_index(a_id), bi = out.arc_index(b_id);
    std::string mu = "mu" + std::to_string(fresh++);
    std::string mup = "mu" + std::to_string(fresh++);
    node base = out.nodes[out.node_index(u)];
    node nmu{mu, base.layer, -1}, nmup{mup, base.layer, -1};
    out.nodes.push_back(nmu);
    out.nodes.push_back(nmup);
    arc a2 = out.arcs[ai];  // second half of a: mu -> v
    a2.id = a_id + ".2";
    a2.tail = mu;
    out.arcs[ai].head = mu;  // first half keeps the id
    arc b2 = out.arcs[bi];
    b2.id = b_id + ".2";
    b2.tail = mup;
    out.arcs[bi].head = mup;
    arc dummy{a_id + ".d", mu, mup, rat(0), rat(0), arc_role::none};
    out.arcs.push_back(a2);
    out.arcs.push_back(b2);
    out.arcs.push_back(dummy);
  }

  // Step 2: expand every node of degree >= 4 into a directed cycle of
  // fresh degree-3 nodes; incident arcs attach in a deterministic rotation
  // order (far endpoint's (layer, ring), then arc id).
  for (;;) {
    degree.clear();
    for (const auto& a : out.arcs) {
      if (!a.tail.empty()) ++degree[a.tail];
      if (!a.head.empty()) ++degree[a.head];
    }
    std::string victim;
    for (const auto& n : out.nodes)
      if (degree[n.id] >= 4) { victim = n.id; break; }
    if (victim.empty()) break;

    struct incident { std::string arc_id; bool at_head; };
    std::vector<incident> inc;
    for (const auto& a : out.arcs) {
      if (a.tail == victim) inc.push_back({a.id, false});
      if (a.head == victim) inc.push_back({a.id, true});
    }
    auto far_key = [&](const incident& ic) {
      const arc& a = out.arcs[out.arc_index(ic.arc_id)];
      const std::string& far = ic.at_head ? a.tail : a.head;
      int fl = 0;
      long fr = -1;
      if (!far.empty()) {
        const node& fn = out.nodes[out.node_index(far)];
        fl = fn.layer;
        fr = fn.ring;
      }
      return std::make_tuple(fl, fr, a.id);
    };
    std::sort(inc.begin(), inc.end(),
              [&](const incident& x, const incident& y) { return far_key(x) < far_key(y); });

    int d = static_cast<int>(inc.size());
    node base = out.nodes[out.node_index(victim)];
    std::vector<std::string> cyc;
    for (int i = 0; i < d; ++i) {
      std::string id = victim + "." + std::to_string(i);
      cyc.push_back(id);
      out.nodes.push_back({id, base.layer, -1});
    }
    for (int i = 0; i < d; ++i) {
      arc c{victim + ".c" + std::to_string(i), cyc[i], cyc[(i + 1) % d], rat(0), K,
            arc_role::none};
      out.arcs.push_back(c);
    }
    for (int i = 0; i < d; ++i) {
      arc& a = out.arcs[out.arc_index(inc[i].arc_id)];
      if (inc[i].at_head)
        a.head = cyc[i];
      else
        a.tail = cyc[i];
    }
    out.nodes.erase(out.nodes.begin() + out.node_index(victim));
  }
  return out;
}

// ---------------------------------------------------------------------------
// goodification (best effort)

struct goodify_result {
  std::optional<flow_network> net;
  std::string reason;  // set when not goodifiable
};

inline goodify_result goodify(const flow_network& input, const layered_embedding& e) {
  flow_network out = input;
  // Intended rings: ring-annotated nodes per layer.
  std::map<int, std::vector<std::pair<long, std::string>>> rings;
  for (const auto& n : out.nodes)
    if (n.layer > 0 && n.ring >= 0) rings[n.layer].push_back({n.ring, n.id});
  std::map<std::string, int> degree;
  for (const auto& a : out.arcs) {
    if (!a.tail.empty()) ++degree[a.tail];
    if (!a.head.empty()) ++degree[a.head];
  }
  std::set<std::pair<std::string, std::string>> peelish;
  for (const auto& a : out.arcs)
    if (a.is_internal() && a.role != arc_role::cross) {
      peelish.insert({a.tail, a.head});
      peelish.insert({a.head, a.tail});
    }

  int fresh = 0;
  for (auto& [l, v] : rings) {
    std::sort(v.begin(), v.end());
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i].first == v[i - 1].first)
        return {std::nullopt, "layer " + std::to_string(l) + ": contradictory ring annotations"};
    if (v.size() < 3)
      return {std::nullopt, "layer " + std::to_string(l) + ": ring too short"};
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string& u = v[i].second;
      const std::string& w = v[(i + 1) % v.size()].second;
      if (peelish.count({u, w})) continue;
      if (degree[u] >= 3 || degree[w] >= 3)
        return {std::nullopt,
                "layer " + std::to_string(l) + ": cannot close ring at '" + u +
                    "'-'" + w + "' without breaking 3-regularity"};
      arc dummy{"good" + std::to_string(fresh++), u, w, rat(0), rat(0), arc_role::peel};
      out.arcs.push_back(dummy);
      peelish.insert({u, w});
      peelish.insert({w, u});
      ++degree[u];
      ++degree[w];
    }
  }
  auto gc = is_good_embedding(out, extract_embedding(out));
  if (!gc.good)
    return {std::nullopt, "still not good: " + (gc.diags.empty() ? "?" : gc.diags[0])};
  return {out, ""};
}

// ---------------------------------------------------------------------------
// Algorithm: optimal binding schedule from a good embedding

struct schedule_trace {
  // exDim(P) minus network io stubs, after each main-iteration merge.
  std::vector<int> accumulator_core_dims;
  // same measure for every multi-node block right after the first iteration
  std::vector<int> first_iteration_core_dims;
};

namespace planardetail {

struct block_forest {
  std::vector<int> parent, size_nodes, dim, stubs;
  // adjacency: root -> (neighbor root -> joint internal arc ids)
  std::vector<std::map<int, std::set<std::string>>> adj;

  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  // Merge roots a and b; returns new root.  Appends nothing to sigma --
  // the caller harvests joint arcs first.
  int merge(int a, int b) {
    int joint = static_cast<int>(adj[a][b].size());
    if (adj[a].size() < adj[b].size()) std::swap(a, b);
    // fold b into a
    parent[b] = a;
    size_nodes[a] += size_nodes[b];
    dim[a] = dim[a] + dim[b] - 2 * joint;
    stubs[a] += stubs[b];
    adj[a].erase(b);
    adj[b].erase(a);
    for (auto& [nb, arcs] : adj[b]) {
      auto& bucket = adj[a][nb];
      bucket.insert(arcs.begin(), arcs.end());
      auto& back = adj[nb];
      auto it = back.find(b);
      if (it != back.end()) {
        back[a].insert(it->second.begin(), it->second.end());
        back.erase(it);
      }
    }
    adj[b].clear();
    return a;
  }
};

}  // namespace planardetail

inline binding_schedule bind_schedule(const flow_network& net, const layered_embedding& e,
                                      schedule_trace* trace = nullptr) {
  auto gc = is_good_embedding(net, e);
  if (!gc.good)
    throw typing_error("bind_schedule requires a good embedding: " +
                       (gc.diags.empty() ? "" : gc.diags[0]));
  peel_info info = classify_arcs(net, e);

  planardetail::block_forest f;
  std::map<std::string, int> node_of;
  for (std::size_t i = 0; i < net.nodes.size(); ++i)
    node_of[net.nodes[i].id] = static_cast<int>(i);
  std::size_t n = net.nodes.size();
  f.parent.resize(n);
  f.size_nodes.assign(n, 1);
  f.dim.assign(n, 0);
  f.stubs.assign(n, 0);
  f.adj.resize(n);
  for (std::size_t i = 0; i < n; ++i) f.parent[i] = static_cast<int>(i);
  for (const auto& a : net.arcs) {
    if (a.is_internal()) {
      int u = node_of[a.tail], v = node_of[a.head];
      ++f.dim[u];
      ++f.dim[v];
      f.adj[u][v].insert(a.id);
      f.adj[v][u].insert(a.id);
    } else {
      int u = node_of[a.tail.empty() ? a.head : a.tail];
      ++f.dim[u];
      ++f.stubs[u];
    }
  }

  binding_schedule sched;
  std::set<std::string> scheduled;
  int delta = 3;
  for (std::size_t i = 0; i < n; ++i) delta = std::max(delta, f.dim[i]);

  auto do_merge = [&](int ra, int rb) {
    delta = std::max(delta, f.dim[ra] + f.dim[rb] - 2);
    for (const auto& id : f.adj[ra][rb])
      if (scheduled.insert(id).second) sched.order.push_back(id);
    return f.merge(ra, rb);
  };

  // -- first iteration: merge across every A#1 arc ------------------------
  for (const auto& a : net.arcs) {
    if (!a.is_internal() || !info.a1.count(a.id) || scheduled.count(a.id)) continue;
    int u = f.find(node_of[a.tail]);
    int v = f.find(node_of[a.head]);
    if (u == v) continue;  // consumed as a joint arc of an earlier A#1 merge
    do_merge(u, v);
  }
  if (trace) {
    std::set<int> roots;
    for (std::size_t i = 0; i < n; ++i) roots.insert(f.find(static_cast<int>(i)));
    for (int r : roots)
      if (f.size_nodes[r] >= 2)
        trace->first_iteration_core_dims.push_back(f.dim[r] - f.stubs[r]);
  }

  // Deterministic "best neighbor" choice: max binding strength, then
  // smallest minimum joint arc id.
  auto best_neighbor = [&](int r) -> int {
    int best = -1;
    std::size_t best_strength = 0;
    std::string best_arc;
    for (const auto& [nb, arcs] : f.adj[r]) {
      const std::string& first_arc = *arcs.begin();
      if (best < 0 || arcs.size() > best_strength ||
          (arcs.size() == best_strength && first_arc < best_arc)) {
        best = nb;
        best_strength = arcs.size();
        best_arc = first_arc;
      }
    }
    return best;
  };

  // -- second iteration: absorb singletons and strength-2 pairs -----------
  // A root only starts qualifying when a merge touches its neighborhood, so
  // a pending set (always popping the smallest candidate) visits each root
  // once per neighborhood change instead of rescanning everything per merge.
  {
    std::set<int> pending;
    for (std::size_t i = 0; i < n; ++i) pending.insert(f.find(static_cast<int>(i)));
    while (!pending.empty()) {
      int r = *pending.begin();
      pending.erase(pending.begin());
      if (f.find(r) != r) continue;
      int mate = -1;
      if (f.size_nodes[r] == 1 && !f.adj[r].empty()) {
        mate = best_neighbor(r);
      } else {
        for (const auto& [nb, arcs] : f.adj[r])
          if (arcs.size() == 2) { mate = nb; break; }
      }
      if (mate >= 0) {
        int nr = do_merge(r, mate);
        pending.insert(nr);
        for (const auto& [nb, arcs] : f.adj[nr]) pending.insert(nb);
      }
    }
  }

  // -- main iteration: grow the outermost block ---------------------------
  // Outermost = block containing the layer-1 node with smallest ring pos.
  int p_root = -1;
  {
    long best_ring = -1;
    for (const auto& nd : net.nodes) {
      if (nd.layer == 1 && nd.ring >= 0 && (best_ring < 0 || nd.ring < best_ring)) {
        best_ring = nd.ring;
        p_root = f.find(node_of[nd.id]);
      }
    }
    if (p_root < 0) p_root = f.find(0);
  }
  std::size_t merged_nodes = f.size_nodes[p_root];
  while (merged_nodes < n) {
    int m = best_neighbor(p_root);
    if (m < 0) throw typing_error("bind_schedule: network fell apart (disconnected?)");
    p_root = do_merge(p_root, m);
    merged_nodes = f.size_nodes[p_root];
    if (trace) trace->accumulator_core_dims.push_back(f.dim[p_root] - f.stubs[p_root]);
  }
  sched.index_bound = delta;
  return sched;
}

// ---------------------------------------------------------------------------
// greedy fallback schedule (no embedding required)

inline binding_schedule greedy_schedule(const flow_network& net) {
  auto part = components(net);
  planardetail::block_forest f;
  std::map<std::string, int> node_of;
  std::size_t n = net.nodes.size();
  for (std::size_t i = 0; i < n; ++i) node_of[net.nodes[i].id] = static_cast<int>(i);
  f.parent.resize(n);
  f.size_nodes.assign(n, 1);
  f.dim.assign(n, 0);
  f.stubs.assign(n, 0);
  f.adj.resize(n);
  for (std::size_t i = 0; i < n; ++i) f.parent[i] = static_cast<int>(i);
  for (const auto& a : net.arcs) {
    if (a.is_internal()) {
      int u = node_of[a.tail], v = node_of[a.head];
      ++f.dim[u];
      ++f.dim[v];
      f.adj[u][v].insert(a.id);
      f.adj[v][u].insert(a.id);
    } else {
      ++f.dim[node_of[a.tail.empty() ? a.head : a.tail]];
    }
  }

  int delta = 0;
  for (std::size_t i = 0; i < n; ++i) delta = std::max(delta, f.dim[i]);
  if (n > 0) delta = std::max(delta, 2);

  struct cand {
    int merged_dim;
    std::string min_arc;
    int a, b;
    bool operator>(const cand& o) const {
      if (merged_dim != o.merged_dim) return merged_dim > o.merged_dim;
      return min_arc > o.min_arc;
    }
  };
  std::priority_queue<cand, std::vector<cand>, std::greater<cand>> heap;
  auto push_pairs = [&](int r) {
    for (const auto& [nb, arcs] : f.adj[r])
      heap.push({f.dim[r] + f.dim[nb] - 2 * static_cast<int>(arcs.size()), *arcs.begin(),
                 r, nb});
  };
  for (std::size_t i = 0; i < n; ++i) push_pairs(static_cast<int>(i));

  binding_schedule sched;
  std::size_t merges_left = n >= part.blocks.size() ? n - part.blocks.size() : 0;
  while (merges_left > 0) {
    if (heap.empty()) throw typing_error("greedy_schedule: ran out of neighbors");
    cand c = heap.top();
    heap.pop();
    int ra = f.find(c.a), rb = f.find(c.b);
    if (ra == rb) continue;
    // stale entry?
    auto it = f.adj[ra].find(rb);
    if (it == f.adj[ra].end()) continue;
    int cur = f.dim[ra] + f.dim[rb] - 2 * static_cast<int>(it->second.size());
    if (cur != c.merged_dim || *it->second.begin() != c.min_arc) continue;
    // After binding the first joint arc the interface still holds the
    // remaining ones, so the peak is d1 + d2 - 2, not d1 + d2 - 2s.
    delta = std::max(delta, f.dim[ra] + f.dim[rb] - 2);
    for (const auto& id : it->second) sched.order.push_back(id);
    int r = f.merge(ra, rb);
    push_pairs(r);
    --merges_left;
  }
  sched.index_bound = delta;
  return sched;
}

}  // namespace fnt
