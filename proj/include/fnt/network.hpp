/*
 * Flow-network data model plus the NETF v1 file format.
 *
 * A network is a set of nodes and a sequence of directed arcs; an arc
 * with a missing tail is an input arc, with a missing head an output
 * arc, with both endpoints an internal arc.  Nodes and arcs optionally
 * carry layered-embedding annotations (layer=, ring=, role=peel|cross)
 * which the planar pipeline consumes.
 *
 * NETF v1 (line-oriented, '#' starts a comment):
 *   net <name>
 *   node <id> [layer=<k>] [ring=<i>]
 *   arc <id> <tail|_> <head|_> <lo> <hi> [role=peel|cross]
 */
#pragma once

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <unordered_map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fnt/interval.hpp"
#include "fnt/rational.hpp"

namespace fnt {

struct netf_error : std::runtime_error {
  int line;
  netf_error(int ln, const std::string& what)
      : std::runtime_error("line " + std::to_string(ln) + ": " + what), line(ln) {}
};

enum class arc_role { none, peel, cross };

struct node {
  std::string id;
  int layer = 0;   // 0 = unannotated; layers are 1-based
  long ring = -1;  // position on the layer's ring cycle; -1 = unannotated
};

struct arc {
  std::string id;
  std::string tail, head;  // empty string = missing endpoint
  rat lo, hi;
  arc_role role = arc_role::none;

  bool is_input() const { return tail.empty() && !head.empty(); }
  bool is_output() const { return head.empty() && !tail.empty(); }
  bool is_internal() const { return !tail.empty() && !head.empty(); }
};

struct flow_network {
  std::string name;
  std::vector<node> nodes;
  std::vector<arc> arcs;

  int node_index(const std::string& id) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].id == id) return static_cast<int>(i);
    return -1;
  }
  int arc_index(const std::string& id) const {
    for (std::size_t i = 0; i < arcs.size(); ++i)
      if (arcs[i].id == id) return static_cast<int>(i);
    return -1;
  }

  bool has_annotations() const {
    for (const auto& n : nodes)
      if (n.layer > 0) return true;
    return false;
  }

  // Canonical IO ordering: input arcs in declaration order, then output
  // arcs in declaration order.  Subset bitmasks everywhere refer to it.
  std::vector<int> io_order() const {
    std::vector<int> order;
    for (std::size_t i = 0; i < arcs.size(); ++i)
      if (arcs[i].is_input()) order.push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < arcs.size(); ++i)
      if (arcs[i].is_output()) order.push_back(static_cast<int>(i));
    return order;
  }

  std::size_t internal_count() const {
    std::size_t m = 0;
    for (const auto& a : arcs) m += a.is_internal();
    return m;
  }
};

// ---------------------------------------------------------------------------
// parsing

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream is(line);
  std::string t;
  while (is >> t) {
    if (t[0] == '#') break;
    toks.push_back(t);
  }
  return toks;
}

}  // namespace detail

inline flow_network parse_network(std::istream& in) {
  flow_network net;
  std::map<std::string, int> node_ids, arc_ids;
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    auto toks = detail::split_ws(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "net") {
      if (toks.size() != 2) throw netf_error(ln, "expected: net <name>");
      net.name = toks[1];
    } else if (kw == "node") {
      if (toks.size() < 2) throw netf_error(ln, "expected: node <id> [layer=k] [ring=i]");
      node n;
      n.id = toks[1];
      if (node_ids.count(n.id)) throw netf_error(ln, "duplicate node id '" + n.id + "'");
      for (std::size_t i = 2; i < toks.size(); ++i) {
        const std::string& t = toks[i];
        if (t.rfind("layer=", 0) == 0)
          n.layer = std::atoi(t.c_str() + 6);
        else if (t.rfind("ring=", 0) == 0)
          n.ring = std::atol(t.c_str() + 5);
        else
          throw netf_error(ln, "unknown node attribute '" + t + "'");
      }
      if (n.layer < 0) throw netf_error(ln, "layer must be >= 1");
      node_ids[n.id] = static_cast<int>(net.nodes.size());
      net.nodes.push_back(std::move(n));
    } else if (kw == "arc") {
      if (toks.size() < 6)
        throw netf_error(ln, "expected: arc <id> <tail|_> <head|_> <lo> <hi> [role=...]");
      arc a;
      a.id = toks[1];
      if (arc_ids.count(a.id)) throw netf_error(ln, "duplicate arc id '" + a.id + "'");
      a.tail = toks[2] == "_" ? "" : toks[2];
      a.head = toks[3] == "_" ? "" : toks[3];
      if (a.tail.empty() && a.head.empty())
        throw netf_error(ln, "arc '" + a.id + "' has no endpoint");
      if (!a.tail.empty() && a.tail == a.head)
        throw netf_error(ln, "self-loop on arc '" + a.id + "'");
      for (const std::string* end : {&a.tail, &a.head})
        if (!end->empty() && !node_ids.count(*end))
          throw netf_error(ln, "arc '" + a.id + "' references undeclared node '" + *end + "'");
      try {
        a.lo = rat::parse(toks[4]);
        a.hi = rat::parse(toks[5]);
      } catch (const rat_parse_error& e) {
        throw netf_error(ln, e.what());
      }
      if (a.lo.is_neg()) throw netf_error(ln, "negative lower capacity on '" + a.id + "'");
      if (a.hi < a.lo) throw netf_error(ln, "lo > hi on arc '" + a.id + "'");
      if (toks.size() >= 7) {
        if (toks[6] == "role=peel")
          a.role = arc_role::peel;
        else if (toks[6] == "role=cross")
          a.role = arc_role::cross;
        else
          throw netf_error(ln, "unknown arc attribute '" + toks[6] + "'");
      }
      arc_ids[a.id] = static_cast<int>(net.arcs.size());
      net.arcs.push_back(std::move(a));
    } else {
      throw netf_error(ln, "unknown keyword '" + kw + "'");
    }
  }
  return net;
}

inline flow_network parse_network(const std::string& text) {
  std::istringstream is(text);
  return parse_network(is);
}

inline void serialize_network(const flow_network& net, std::ostream& out) {
  if (!net.name.empty()) out << "net " << net.name << "\n";
  for (const auto& n : net.nodes) {
    out << "node " << n.id;
    if (n.layer > 0) out << " layer=" << n.layer;
    if (n.ring >= 0) out << " ring=" << n.ring;
    out << "\n";
  }
  for (const auto& a : net.arcs) {
    out << "arc " << a.id << " " << (a.tail.empty() ? "_" : a.tail) << " "
        << (a.head.empty() ? "_" : a.head) << " " << a.lo.str() << " " << a.hi.str();
    if (a.role == arc_role::peel) out << " role=peel";
    if (a.role == arc_role::cross) out << " role=cross";
    out << "\n";
  }
}

inline std::string serialize_network(const flow_network& net) {
  std::ostringstream os;
  serialize_network(net, os);
  return os.str();
}

// ---------------------------------------------------------------------------
// validation

struct diagnostic {
  bool is_error;
  std::string message;
};

inline std::vector<diagnostic> validate_network(const flow_network& net) {
  std::vector<diagnostic> out;
  std::set<std::string> node_ids, arc_ids;
  for (const auto& n : net.nodes)
    if (!node_ids.insert(n.id).second)
      out.push_back({true, "duplicate node id '" + n.id + "'"});
  std::set<std::pair<std::string, std::string>> seen_pairs;
  for (const auto& a : net.arcs) {
    if (!arc_ids.insert(a.id).second)
      out.push_back({true, "duplicate arc id '" + a.id + "'"});
    if (a.tail.empty() && a.head.empty())
      out.push_back({true, "arc '" + a.id + "' has no endpoint"});
    if (!a.tail.empty() && a.tail == a.head)
      out.push_back({true, "self-loop on arc '" + a.id + "'"});
    for (const std::string* end : {&a.tail, &a.head})
      if (!end->empty() && !node_ids.count(*end))
        out.push_back({true, "arc '" + a.id + "' references undeclared node '" + *end + "'"});
    if (a.lo.is_neg())
      out.push_back({true, "negative lower capacity on arc '" + a.id + "'"});
    if (a.hi < a.lo)
      out.push_back({true, "lo > hi on arc '" + a.id + "'"});
    else if (a.hi.is_zero() && a.lo.is_zero())
      out.push_back({false, "arc '" + a.id + "' has zero capacity (dummy arc)"});
    if (a.is_internal()) {
      if (!seen_pairs.insert({a.tail, a.head}).second)
        out.push_back({true, "parallel arcs from '" + a.tail + "' to '" + a.head + "'"});
    }
  }
  return out;
}

inline bool has_errors(const std::vector<diagnostic>& diags) {
  for (const auto& d : diags)
    if (d.is_error) return true;
  return false;
}

// ---------------------------------------------------------------------------
// connected components

struct component {
  std::vector<std::string> nodes;        // sorted
  std::vector<std::string> internal_arcs;  // declaration order
  std::vector<std::string> io_arcs;        // declaration order
};

struct component_partition {
  std::vector<component> blocks;
  std::vector<std::string> floating_arcs;  // arcs attached to no declared node
};

inline component_partition components(const flow_network& net) {
  // Union-find over node indices, ignoring arc direction.
  std::unordered_map<std::string, int> node_of;
  for (std::size_t i = 0; i < net.nodes.size(); ++i)
    node_of[net.nodes[i].id] = static_cast<int>(i);
  auto index_of = [&](const std::string& id) {
    auto it = node_of.find(id);
    return it == node_of.end() ? -1 : it->second;
  };
  std::vector<int> parent(net.nodes.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : net.arcs)
    if (a.is_internal()) {
      int u = index_of(a.tail), v = index_of(a.head);
      if (u >= 0 && v >= 0) parent[find(u)] = find(v);
    }

  std::map<int, int> root_to_block;
  component_partition part;
  for (std::size_t i = 0; i < net.nodes.size(); ++i) {
    int r = find(static_cast<int>(i));
    if (!root_to_block.count(r)) {
      root_to_block[r] = static_cast<int>(part.blocks.size());
      part.blocks.emplace_back();
    }
    part.blocks[root_to_block[r]].nodes.push_back(net.nodes[i].id);
  }
  for (auto& b : part.blocks) std::sort(b.nodes.begin(), b.nodes.end());
  for (const auto& a : net.arcs) {
    const std::string& anchor = a.tail.empty() ? a.head : a.tail;
    int ni = index_of(anchor);
    if (ni < 0) {
      part.floating_arcs.push_back(a.id);
      continue;
    }
    auto& block = part.blocks[root_to_block[find(ni)]];
    if (a.is_internal())
      block.internal_arcs.push_back(a.id);
    else
      block.io_arcs.push_back(a.id);
  }
  return part;
}

// External (interface) dimension of a node subset: arcs with exactly one
// endpoint inside, plus IO arcs anchored inside.
inline std::size_t external_dim(const flow_network& net,
                                const std::set<std::string>& node_set) {
  std::size_t d = 0;
  for (const auto& a : net.arcs) {
    bool t = !a.tail.empty() && node_set.count(a.tail);
    bool h = !a.head.empty() && node_set.count(a.head);
    if (a.is_internal())
      d += (t != h);
    else
      d += (t || h);
  }
  return d;
}

}  // namespace fnt
