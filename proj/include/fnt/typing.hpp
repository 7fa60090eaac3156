/*
 * Typings: partial maps from subsets of a network's IO arcs to intervals.
 *
 * A typing is organized into blocks, one per connected component of the
 * (possibly partially reassembled) network.  Within a block, entries are
 * addressed by local bitmasks over the block's arc list; the "global"
 * subset view used by the TYPF format refers to the typing-wide canonical
 * IO ordering (inputs before outputs, declaration order).
 *
 * Entries for a block of dimension > 16 are stored only for one
 * representative of each complement pair (the one not containing the
 * block's first arc); the mirror image is reconstructed as -entry on
 * access.  This is invisible to semantics: every typing the pipeline
 * produces is complement-symmetric (and the accessor enforces it).
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fnt/interval.hpp"
#include "fnt/network.hpp"

namespace fnt {

struct typing_error : std::runtime_error {
  explicit typing_error(const std::string& what) : std::runtime_error(what) {}
};

// Beyond this dimension a block keeps only one entry per complement pair.
inline constexpr int kMirrorThreshold = 16;
// Hard cap on a block's external dimension (2^d entries).
inline constexpr int kDimensionCap = 24;

struct io_arc {
  std::string id;
  bool is_input;

  friend bool operator==(const io_arc& a, const io_arc& b) {
    return a.id == b.id && a.is_input == b.is_input;
  }
};

struct tblock {
  std::vector<int> arcs;  // indices into typing::io
  std::vector<std::optional<interval>> store;

  int dim() const { return static_cast<int>(arcs.size()); }
  std::uint32_t full_mask() const {
    return dim() == 0 ? 0u : ((1u << dim()) - 1u);
  }
  bool mirrored() const { return dim() > kMirrorThreshold; }

  void init_storage() {
    if (dim() > kDimensionCap)
      throw typing_error("block dimension " + std::to_string(dim()) +
                         " exceeds the cap of " + std::to_string(kDimensionCap));
    store.assign(std::size_t(1) << (mirrored() ? dim() - 1 : dim()), std::nullopt);
  }

  std::optional<interval> get(std::uint32_t mask) const {
    if (!mirrored()) return store[mask];
    if ((mask & 1u) == 0) return store[mask >> 1];
    auto rep = store[(full_mask() ^ mask) >> 1];
    if (!rep) return std::nullopt;
    return -*rep;
  }

  void set(std::uint32_t mask, const interval& v) {
    if (!mirrored()) {
      store[mask] = v;
    } else if ((mask & 1u) == 0) {
      store[mask >> 1] = v;
    } else {
      store[(full_mask() ^ mask) >> 1] = -v;
    }
  }
};

// Witness for an empty typing: the offending subset and the crossed bounds.
struct infeasibility {
  std::vector<std::string> subset;
  rat lo, hi;

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < subset.size(); ++i)
      s += (i ? "," : "") + subset[i];
    s += "} requires [" + lo.str() + "," + hi.str() + "] which is empty";
    return s;
  }
};

struct typing {
  std::string name;
  std::vector<io_arc> io;
  std::vector<tblock> blocks;

  int io_index(const std::string& id) const {
    for (std::size_t i = 0; i < io.size(); ++i)
      if (io[i].id == id) return static_cast<int>(i);
    return -1;
  }

  int block_containing(int io_idx) const {
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (int a : blocks[b].arcs)
        if (a == io_idx) return static_cast<int>(b);
    return -1;
  }

  // Entry lookup by arc-id subset (test/CLI convenience).  The subset must
  // lie within one block (or be empty); nullopt when undefined.
  std::optional<interval> entry(const std::vector<std::string>& ids) const {
    if (ids.empty()) return interval::zero();
    std::vector<int> idx;
    for (const auto& id : ids) {
      int i = io_index(id);
      if (i < 0) throw typing_error("unknown io arc '" + id + "'");
      idx.push_back(i);
    }
    int b = block_containing(idx[0]);
    if (b < 0) return std::nullopt;
    std::uint32_t mask = 0;
    for (int i : idx) {
      auto pos = std::find(blocks[b].arcs.begin(), blocks[b].arcs.end(), i);
      if (pos == blocks[b].arcs.end()) return std::nullopt;  // crosses blocks
      mask |= 1u << (pos - blocks[b].arcs.begin());
    }
    return blocks[b].get(mask);
  }
};

struct typing_outcome {
  std::optional<typing> value;
  std::optional<infeasibility> witness;

  bool feasible() const { return value.has_value(); }

  static typing_outcome ok(typing t) { return {std::move(t), std::nullopt}; }
  static typing_outcome infeasible(infeasibility w) { return {std::nullopt, std::move(w)}; }
};

// ---------------------------------------------------------------------------
// canonicalization and equality

// Rebuilds the typing so that io contains exactly the referenced arcs in
// canonical order (inputs first, each group sorted by arc id), blocks are
// sorted by their first arc, and each block's arc list is ascending.
inline typing canonical(const typing& t) {
  std::vector<char> used(t.io.size(), 0);
  for (const auto& b : t.blocks)
    for (int a : b.arcs) used[a] = 1;
  std::vector<int> order;  // old io indices in new order
  for (std::size_t i = 0; i < t.io.size(); ++i)
    if (used[i] && t.io[i].is_input) order.push_back(static_cast<int>(i));
  std::size_t inputs = order.size();
  for (std::size_t i = 0; i < t.io.size(); ++i)
    if (used[i] && !t.io[i].is_input) order.push_back(static_cast<int>(i));
  auto by_id = [&](int x, int y) { return t.io[x].id < t.io[y].id; };
  std::sort(order.begin(), order.begin() + inputs, by_id);
  std::sort(order.begin() + inputs, order.end(), by_id);
  std::vector<int> new_of_old(t.io.size(), -1);
  typing out;
  out.name = t.name;
  for (std::size_t n = 0; n < order.size(); ++n) {
    new_of_old[order[n]] = static_cast<int>(n);
    out.io.push_back(t.io[order[n]]);
  }
  for (const auto& b : t.blocks) {
    tblock nb;
    // new indices, ascending
    std::vector<std::pair<int, int>> remap;  // (new arc idx, old local pos)
    for (std::size_t p = 0; p < b.arcs.size(); ++p)
      remap.push_back({new_of_old[b.arcs[p]], static_cast<int>(p)});
    std::sort(remap.begin(), remap.end());
    for (auto& [ni, _] : remap) nb.arcs.push_back(ni);
    nb.init_storage();
    std::uint32_t full = b.full_mask();
    for (std::uint32_t m = 0; m <= full && full; ++m) {
      auto v = b.get(m);
      if (!v) continue;
      std::uint32_t nm = 0;
      for (std::size_t p = 0; p < remap.size(); ++p)
        if (m & (1u << remap[p].second)) nm |= 1u << p;
      nb.set(nm, *v);
    }
    if (b.dim() == 0) {
      nb.init_storage();
      nb.set(0, interval::zero());
    }
    out.blocks.push_back(std::move(nb));
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const tblock& x, const tblock& y) {
              if (x.arcs.empty() || y.arcs.empty()) return x.arcs.size() < y.arcs.size();
              return x.arcs[0] < y.arcs[0];
            });
  return out;
}

inline bool typing_equal(const typing& a, const typing& b) {
  typing ca = canonical(a), cb = canonical(b);
  if (ca.io.size() != cb.io.size() || ca.blocks.size() != cb.blocks.size())
    return false;
  for (std::size_t i = 0; i < ca.io.size(); ++i)
    if (!(ca.io[i] == cb.io[i])) return false;
  for (std::size_t k = 0; k < ca.blocks.size(); ++k) {
    const auto& x = ca.blocks[k];
    const auto& y = cb.blocks[k];
    if (x.arcs != y.arcs) return false;
    std::uint32_t full = x.full_mask();
    for (std::uint32_t m = 0;; ++m) {
      auto vx = x.get(m), vy = y.get(m);
      if (vx.has_value() != vy.has_value()) return false;
      if (vx && *vx != *vy) return false;
      if (m == full) break;
    }
  }
  return true;
}

// Complement symmetry within every block: entry(A) = -entry(block \ A)
// whenever both are defined.
inline bool complement_symmetric(const typing& t) {
  for (const auto& b : t.blocks) {
    std::uint32_t full = b.full_mask();
    for (std::uint32_t m = 0;; ++m) {
      auto v = b.get(m);
      auto w = b.get(full ^ m);
      if (v && w && *v != -*w) return false;
      if (m == full) break;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// satisfaction and flow read-off

inline bool satisfies(const std::map<std::string, rat>& f, const typing& t) {
  if (f.size() != t.io.size()) throw typing_error("assignment domain mismatch");
  std::vector<rat> vals(t.io.size());
  for (std::size_t i = 0; i < t.io.size(); ++i) {
    auto it = f.find(t.io[i].id);
    if (it == f.end()) throw typing_error("assignment missing arc '" + t.io[i].id + "'");
    if (it->second.is_neg()) throw typing_error("negative assignment on '" + t.io[i].id + "'");
    vals[i] = it->second;
  }
  for (const auto& b : t.blocks) {
    std::uint32_t full = b.full_mask();
    for (std::uint32_t m = 0;; ++m) {
      auto v = b.get(m);
      if (v) {
        rat s(0);
        for (int p = 0; p < b.dim(); ++p)
          if (m & (1u << p)) {
            const auto& a = t.io[b.arcs[p]];
            if (a.is_input) s += vals[b.arcs[p]];
            else s -= vals[b.arcs[p]];
          }
        if (!v->contains(s)) return false;
      }
      if (m == full) break;
    }
  }
  return true;
}

// Endpoints of entry(all inputs of the block), one per block.
inline std::vector<interval> flow_bounds(const typing& t) {
  std::vector<interval> out;
  for (const auto& b : t.blocks) {
    std::uint32_t m = 0;
    for (int p = 0; p < b.dim(); ++p)
      if (t.io[b.arcs[p]].is_input) m |= 1u << p;
    auto v = b.get(m);
    if (!v) throw typing_error("flow_bounds: all-inputs entry undefined");
    out.push_back(*v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// complement closure, meet, subtyping

inline typing extend_by_complement(const typing& t) {
  typing out = t;
  for (auto& b : out.blocks) {
    std::uint32_t full = b.full_mask();
    for (std::uint32_t m = 0;; ++m) {
      auto v = b.get(m);
      auto w = b.get(full ^ m);
      if (v && w) {
        if (*v != -*w)
          throw typing_error("complement conflict: entry and mirror disagree");
      } else if (v && !w) {
        b.set(full ^ m, -*v);
      }
      if (m == full) break;
    }
  }
  return out;
}

namespace detail {

inline void require_same_shape(const typing& a, const typing& b) {
  if (a.io.size() != b.io.size()) throw typing_error("typings have different io arcs");
  for (std::size_t i = 0; i < a.io.size(); ++i)
    if (!(a.io[i] == b.io[i]))
      throw typing_error("typings have different io arcs ('" + a.io[i].id + "' vs '" +
                         b.io[i].id + "')");
}

// Collect a typing's defined entries as (global mask, interval), where the
// global mask is over typing::io.
inline std::map<std::uint64_t, interval> global_entries(const typing& t) {
  std::map<std::uint64_t, interval> out;
  out[0] = interval::zero();
  for (const auto& b : t.blocks) {
    std::uint32_t full = b.full_mask();
    for (std::uint32_t m = 0;; ++m) {
      if (full == 0) break;
      auto v = b.get(m);
      if (v && m != 0) {
        std::uint64_t g = 0;
        for (int p = 0; p < b.dim(); ++p)
          if (m & (1u << p)) g |= std::uint64_t(1) << b.arcs[p];
        out[g] = *v;
      }
      if (m == full) break;
    }
  }
  return out;
}

}  // namespace detail

inline typing_outcome meet(const typing& t1, const typing& t2) {
  typing a = canonical(t1), b = canonical(t2);
  detail::require_same_shape(a, b);
  auto ea = detail::global_entries(a);
  auto eb = detail::global_entries(b);
  if (ea.size() != eb.size())
    throw typing_error("typings define different subset families");
  for (const auto& [m, _] : ea)
    if (!eb.count(m)) throw typing_error("typings define different subset families");

  typing out;
  out.name = a.name.empty() ? b.name : a.name + "&" + b.name;
  out.io = a.io;
  tblock blk;
  for (std::size_t i = 0; i < a.io.size(); ++i) blk.arcs.push_back(static_cast<int>(i));
  blk.init_storage();
  for (const auto& [m, va] : ea) {
    auto meetv = intersect(va, eb.at(m));
    if (!meetv) {
      infeasibility w;
      for (std::size_t i = 0; i < a.io.size(); ++i)
        if (m & (std::uint64_t(1) << i)) w.subset.push_back(a.io[i].id);
      w.lo = max(va.lo, eb.at(m).lo);
      w.hi = min(va.hi, eb.at(m).hi);
      return typing_outcome::infeasible(std::move(w));
    }
    blk.set(static_cast<std::uint32_t>(m), *meetv);
  }
  out.blocks.push_back(std::move(blk));
  return typing_outcome::ok(std::move(out));
}

// Entrywise containment on shared defined subsets: t1 is a supertyping of
// t2 (valid subtyping test for tight total typings).
inline bool is_subtyping(const typing& t1, const typing& t2) {
  typing a = canonical(t1), b = canonical(t2);
  detail::require_same_shape(a, b);
  auto ea = detail::global_entries(a);
  auto eb = detail::global_entries(b);
  for (const auto& [m, va] : ea) {
    auto it = eb.find(m);
    if (it == eb.end()) continue;
    if (!va.contains(it->second)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// realizability for external dimension <= 3

enum class realizability { yes, no, unknown };

// Decides whether a total dimension-2/3 typing is the principal typing of
// some network.  The condition is equivalent to tightness of the polytope
// {conservation plane} ∩ {singleton boxes}; see the one-node construction.
inline realizability realizable_low_dim(const typing& t) {
  typing c = canonical(t);
  if (c.blocks.size() != 1) return realizability::unknown;
  const tblock& b = c.blocks[0];
  int d = b.dim();
  if (d < 2 || d > 3) return realizability::unknown;
  std::uint32_t full = b.full_mask();
  for (std::uint32_t m = 0; m <= full; ++m)
    if (!b.get(m)) return realizability::no;  // must be total
  if (!b.get(0)->is_zero() || !b.get(full)->is_zero()) return realizability::no;
  if (!complement_symmetric(c)) return realizability::no;
  for (std::uint32_t m = 0; m <= full; ++m)
    if (!b.get(m)->valid()) return realizability::no;

  std::vector<int> ins, outs;
  for (int p = 0; p < d; ++p)
    (c.io[b.arcs[p]].is_input ? ins : outs).push_back(p);

  // All arcs in the same direction: conservation forces every value to 0.
  if (ins.empty() || outs.empty()) {
    for (std::uint32_t m = 0; m <= full; ++m)
      if (!b.get(m)->is_zero()) return realizability::no;
    return realizability::yes;
  }

  auto singleton = [&](int p) { return *b.get(1u << p); };

  if (d == 2) {
    // One input [r,s] with 0 <= r; the output mirror is forced by
    // complement symmetry (already checked).
    interval in = singleton(ins[0]);
    return in.lo.is_neg() ? realizability::no : realizability::yes;
  }

  // d == 3: orient as two-in-one-out; the one-in-two-out case is the
  // reversed network, i.e. all entries negated with directions flipped,
  // which maps singleton [x,y] to [-y,-x].
  interval i1, i2, o3;
  if (ins.size() == 2) {
    i1 = singleton(ins[0]);
    i2 = singleton(ins[1]);
    o3 = singleton(outs[0]);
  } else {
    i1 = -singleton(outs[0]);
    i2 = -singleton(outs[1]);
    o3 = -singleton(ins[0]);
  }
  rat r1 = i1.lo, s1 = i1.hi;
  rat r2 = i2.lo, s2 = i2.hi;
  rat r3 = -o3.hi, s3 = -o3.lo;  // output entry is [-s3, -r3]
  if (r1.is_neg() || r2.is_neg() || r3.is_neg()) return realizability::no;
  // Tightness of box ∩ {a1 + a2 = a3}:
  if (r3 < r1 + r2 || r3 > min(r1 + s2, r2 + s1)) return realizability::no;
  if (s3 < max(s1 + r2, s2 + r1) || s3 > s1 + s2) return realizability::no;
  return realizability::yes;
}

// ---------------------------------------------------------------------------
// TYPF serialization

inline void serialize_typing(const typing& t, std::ostream& out) {
  typing c = canonical(t);
  out << "typing " << (c.name.empty() ? "t" : c.name) << " in:";
  bool first = true;
  for (const auto& a : c.io)
    if (a.is_input) {
      if (!first) out << ",";
      out << a.id;
      first = false;
    }
  out << " out:";
  first = true;
  for (const auto& a : c.io)
    if (!a.is_input) {
      if (!first) out << ",";
      out << a.id;
      first = false;
    }
  out << "\n";
  auto entries = detail::global_entries(c);
  // Global full set is [0,0] by definition; make the file self-contained.
  if (!c.io.empty()) {
    std::uint64_t all = (std::uint64_t(1) << c.io.size()) - 1;
    if (!entries.count(all)) entries[all] = interval::zero();
  }
  for (const auto& [m, v] : entries) {
    if (m == 0) continue;  // the empty set is [0,0] by definition
    out << "t {";
    bool f2 = true;
    for (std::size_t i = 0; i < c.io.size(); ++i)
      if (m & (std::uint64_t(1) << i)) {
        if (!f2) out << ",";
        out << c.io[i].id;
        f2 = false;
      }
    out << "} " << v.lo.str() << " " << v.hi.str() << "\n";
  }
}

inline std::string serialize_typing(const typing& t) {
  std::ostringstream os;
  serialize_typing(t, os);
  return os.str();
}

inline typing parse_typing(std::istream& in) {
  typing t;
  std::string line;
  int ln = 0;
  bool header_seen = false;
  std::map<std::uint64_t, interval> entries;
  while (std::getline(in, line)) {
    ++ln;
    auto toks = detail::split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "typing") {
      if (header_seen) throw netf_error(ln, "duplicate typing header");
      if (toks.size() != 4 || toks[2].rfind("in:", 0) != 0 || toks[3].rfind("out:", 0) != 0)
        throw netf_error(ln, "expected: typing <name> in:<a,...> out:<a,...>");
      header_seen = true;
      t.name = toks[1];
      auto add_arcs = [&](const std::string& list, bool is_input) {
        std::stringstream ss(list);
        std::string id;
        while (std::getline(ss, id, ','))
          if (!id.empty()) {
            if (t.io_index(id) >= 0) throw netf_error(ln, "duplicate io arc '" + id + "'");
            t.io.push_back({id, is_input});
          }
      };
      add_arcs(toks[2].substr(3), true);
      add_arcs(toks[3].substr(4), false);
      if (t.io.size() > kDimensionCap)
        throw netf_error(ln, "typing dimension exceeds cap");
    } else if (toks[0] == "t") {
      if (!header_seen) throw netf_error(ln, "entry before typing header");
      if (toks.size() != 4) throw netf_error(ln, "expected: t {<arcs>} <lo> <hi>");
      const std::string& braced = toks[1];
      if (braced.size() < 2 || braced.front() != '{' || braced.back() != '}')
        throw netf_error(ln, "expected braced subset");
      std::uint64_t mask = 0;
      std::stringstream ss(braced.substr(1, braced.size() - 2));
      std::string id;
      while (std::getline(ss, id, ',')) {
        if (id.empty()) continue;
        int i = t.io_index(id);
        if (i < 0) throw netf_error(ln, "unknown arc '" + id + "' in subset");
        mask |= std::uint64_t(1) << i;
      }
      interval v;
      try {
        v = interval(rat::parse(toks[2]), rat::parse(toks[3]));
      } catch (const rat_parse_error& e) {
        throw netf_error(ln, e.what());
      }
      if (!v.valid()) throw netf_error(ln, "empty interval (lo > hi)");
      if (entries.count(mask)) throw netf_error(ln, "duplicate subset");
      std::uint64_t all = t.io.empty() ? 0 : (std::uint64_t(1) << t.io.size()) - 1;
      if ((mask == 0 || mask == all) && !v.is_zero())
        throw netf_error(ln, "empty/full subset must be [0,0]");
      entries[mask] = v;
    } else {
      throw netf_error(ln, "unknown keyword '" + toks[0] + "'");
    }
  }
  if (!header_seen) throw netf_error(ln, "missing typing header");
  tblock blk;
  for (std::size_t i = 0; i < t.io.size(); ++i) blk.arcs.push_back(static_cast<int>(i));
  blk.init_storage();
  blk.set(0, interval::zero());
  for (const auto& [m, v] : entries) blk.set(static_cast<std::uint32_t>(m), v);
  t.blocks.push_back(std::move(blk));
  return t;
}

inline typing parse_typing(const std::string& text) {
  std::istringstream is(text);
  return parse_typing(is);
}

}  // namespace fnt
