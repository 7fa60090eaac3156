/*
 * Exact polyhedral oracle.
 *
 * Everything the fast pipeline computes is re-derivable here from first
 * principles: the whole-network constraint system (conservation equalities
 * + capacity inequalities) is projected onto the IO arcs with
 * Fourier-Motzkin elimination, and every typing entry is obtained by
 * exact minimization/maximization of the subset objective.  Deliberately
 * simple and slow -- it is the arbiter the composition engine is tested
 * against, so it shares no code with it.
 */
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "fnt/network.hpp"
#include "fnt/typing.hpp"

namespace fnt {

struct poly_error : std::runtime_error {
  explicit poly_error(const std::string& what) : std::runtime_error(what) {}
};

struct hrow {
  std::vector<rat> a;
  bool eq;  // true: a.x = rhs; false: a.x <= rhs
  rat rhs;
};

struct hpoly {
  std::vector<std::string> vars;
  std::vector<hrow> rows;

  int var_index(const std::string& v) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == v) return static_cast<int>(i);
    return -1;
  }
};

using vertex_set = std::vector<std::vector<rat>>;

// ---------------------------------------------------------------------------
// constraint extraction

inline hpoly constraints_of_network(const flow_network& net) {
  hpoly p;
  for (int i : net.io_order()) p.vars.push_back(net.arcs[i].id);
  for (const auto& a : net.arcs)
    if (a.is_internal()) p.vars.push_back(a.id);

  std::size_t n = p.vars.size();
  std::map<std::string, int> var_of;
  for (std::size_t i = 0; i < n; ++i) var_of[p.vars[i]] = static_cast<int>(i);

  // One conservation equality per node: inflow - outflow = 0.
  for (const auto& nd : net.nodes) {
    hrow r{std::vector<rat>(n, rat(0)), true, rat(0)};
    bool touched = false;
    for (const auto& a : net.arcs) {
      if (a.head == nd.id) { r.a[var_of[a.id]] += rat(1); touched = true; }
      if (a.tail == nd.id) { r.a[var_of[a.id]] -= rat(1); touched = true; }
    }
    if (touched) p.rows.push_back(std::move(r));
  }
  // Capacity rows and nonnegativity.
  for (const auto& a : net.arcs) {
    int v = var_of[a.id];
    hrow up{std::vector<rat>(n, rat(0)), false, a.hi};
    up.a[v] = rat(1);
    p.rows.push_back(std::move(up));
    hrow dn{std::vector<rat>(n, rat(0)), false, -a.lo};
    dn.a[v] = rat(-1);
    p.rows.push_back(std::move(dn));
    if (!a.lo.is_zero()) {
      hrow nn{std::vector<rat>(n, rat(0)), false, rat(0)};
      nn.a[v] = rat(-1);
      p.rows.push_back(std::move(nn));
    }
  }
  return p;
}

inline hpoly constraints_of_typing(const typing& t) {
  typing c = canonical(t);
  hpoly p;
  for (const auto& a : c.io) p.vars.push_back(a.id);
  std::size_t n = p.vars.size();
  auto entries = detail::global_entries(c);
  for (const auto& [mask, v] : entries) {
    if (mask == 0) continue;
    std::vector<rat> coef(n, rat(0));
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t(1) << i)) coef[i] = c.io[i].is_input ? rat(1) : rat(-1);
    hrow up{coef, false, v.hi};
    p.rows.push_back(std::move(up));
    hrow dn{coef, false, -v.lo};
    for (auto& x : dn.a) x = -x;
    p.rows.push_back(std::move(dn));
  }
  // IO values are nonnegative.
  for (std::size_t i = 0; i < n; ++i) {
    hrow nn{std::vector<rat>(n, rat(0)), false, rat(0)};
    nn.a[i] = rat(-1);
    p.rows.push_back(std::move(nn));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin elimination

namespace fmdetail {

// Scale a row so coefficients are coprime integers; canonicalize equality
// sign by first nonzero coefficient.  rhs is scaled along but excluded from
// the gcd so identical LHS rows stay comparable.
inline void normalize(hrow& r) {
  long long den_lcm = 1;
  for (const auto& c : r.a)
    den_lcm = std::lcm(den_lcm, c.den());
  den_lcm = std::lcm(den_lcm, r.rhs.den());
  rat scale(den_lcm);
  long long g = 0;
  for (auto& c : r.a) {
    c = c * scale;
    g = std::gcd(g, c.num());
  }
  r.rhs = r.rhs * scale;
  if (g > 1) {
    rat gr(g);
    for (auto& c : r.a) c = c / gr;
    r.rhs = r.rhs / gr;
  }
  if (r.eq) {
    for (const auto& c : r.a) {
      if (c.is_zero()) continue;
      if (c.is_neg()) {
        for (auto& x : r.a) x = -x;
        r.rhs = -r.rhs;
      }
      break;
    }
  }
}

struct row_key {
  std::vector<std::pair<long long, long long>> lhs;
  bool eq;
  bool operator<(const row_key& o) const {
    if (eq != o.eq) return eq < o.eq;
    return lhs < o.lhs;
  }
};

inline row_key key_of(const hrow& r) {
  row_key k;
  k.eq = r.eq;
  for (const auto& c : r.a) k.lhs.push_back({c.num(), c.den()});
  return k;
}

// Duplicate/dominated pruning: for identical LHS keep the smallest rhs
// (inequalities) or detect conflict (equalities).  Trivial rows 0 <= c with
// c >= 0 are dropped; contradictions are kept as a marker row.
inline void prune(hpoly& p) {
  std::map<row_key, hrow> best;
  bool contradiction = false;
  hrow contra;
  for (auto& r : p.rows) {
    normalize(r);
    bool all_zero = true;
    for (const auto& c : r.a)
      if (!c.is_zero()) { all_zero = false; break; }
    if (all_zero) {
      if ((r.eq && !r.rhs.is_zero()) || (!r.eq && r.rhs.is_neg())) {
        contradiction = true;
        contra = r;
      }
      continue;
    }
    auto k = key_of(r);
    auto it = best.find(k);
    if (it == best.end()) {
      best.emplace(k, r);
    } else if (r.eq) {
      if (it->second.rhs != r.rhs) {  // conflicting equalities
        contradiction = true;
        contra = hrow{std::vector<rat>(r.a.size(), rat(0)), false, rat(-1)};
      }
    } else if (r.rhs < it->second.rhs) {
      it->second = r;
    }
  }
  p.rows.clear();
  if (contradiction) {
    if (contra.a.empty()) contra.a.assign(p.vars.size(), rat(0));
    p.rows.push_back(contra);
    return;
  }
  for (auto& [k, r] : best) p.rows.push_back(std::move(r));
}

}  // namespace fmdetail

inline bool poly_marked_empty(const hpoly& p) {
  for (const auto& r : p.rows) {
    bool all_zero = true;
    for (const auto& c : r.a)
      if (!c.is_zero()) { all_zero = false; break; }
    if (all_zero && ((r.eq && !r.rhs.is_zero()) || (!r.eq && r.rhs.is_neg())))
      return true;
  }
  return false;
}

inline hpoly fm_eliminate(const hpoly& input, const std::set<std::string>& drop) {
  hpoly p = input;
  fmdetail::prune(p);
  for (const auto& var : drop)
    if (p.var_index(var) < 0)
      throw poly_error("fm_eliminate: unknown variable '" + var + "'");
  std::set<std::string> left = drop;
  while (!left.empty()) {
    // Greedy order: substitution through an equality is free; otherwise
    // take the variable with the fewest positive*negative combinations.
    std::string var;
    long best_cost = -1;
    for (const auto& v : left) {
      int vi = p.var_index(v);
      long pos = 0, neg = 0;
      bool has_eq = false;
      for (const auto& r : p.rows) {
        if (r.a[vi].is_zero()) continue;
        if (r.eq) { has_eq = true; break; }
        (r.a[vi].is_neg() ? neg : pos)++;
      }
      long cost = has_eq ? 0 : pos * neg;
      if (best_cost < 0 || cost < best_cost) {
        best_cost = cost;
        var = v;
      }
      if (cost == 0 && has_eq) break;
    }
    left.erase(var);
    int vi = p.var_index(var);
    if (poly_marked_empty(p)) {
      left.insert(var);
      for (const auto& v : left) {
        int wi = p.var_index(v);
        p.vars.erase(p.vars.begin() + wi);
        for (auto& r : p.rows) r.a.erase(r.a.begin() + wi);
      }
      left.clear();
      break;
    }

    // Prefer substitution through an equality row.
    int eqrow = -1;
    for (std::size_t i = 0; i < p.rows.size(); ++i)
      if (p.rows[i].eq && !p.rows[i].a[vi].is_zero()) { eqrow = static_cast<int>(i); break; }
    std::vector<hrow> next;
    if (eqrow >= 0) {
      hrow e = p.rows[eqrow];
      rat c = e.a[vi];
      for (std::size_t i = 0; i < p.rows.size(); ++i) {
        if (static_cast<int>(i) == eqrow) continue;
        hrow r = p.rows[i];
        if (!r.a[vi].is_zero()) {
          rat f = r.a[vi] / c;
          for (std::size_t j = 0; j < r.a.size(); ++j) r.a[j] = r.a[j] - f * e.a[j];
          r.rhs = r.rhs - f * e.rhs;
        }
        next.push_back(std::move(r));
      }
    } else {
      std::vector<const hrow*> pos, neg;
      for (const auto& r : p.rows) {
        if (r.a[vi].is_zero()) { next.push_back(r); continue; }
        (r.a[vi].is_neg() ? neg : pos).push_back(&r);
      }
      // Compact periodically so a large pos*neg product never materializes
      // in full; only give up when even the pruned set stays oversized.
      auto compact = [&](std::vector<hrow>& rows) {
        hpoly tmp;
        tmp.vars = p.vars;
        tmp.rows = std::move(rows);
        fmdetail::prune(tmp);
        rows = std::move(tmp.rows);
        if (rows.size() > 200000)
          throw poly_error("fm_eliminate: row blow-up beyond desk scale");
      };
      for (const hrow* pr : pos)
        for (const hrow* nr : neg) {
          // (coeff of pr) > 0 > (coeff of nr); combine to cancel vi.
          rat cp = pr->a[vi], cn = nr->a[vi];
          hrow r{std::vector<rat>(pr->a.size(), rat(0)), false, rat(0)};
          for (std::size_t j = 0; j < r.a.size(); ++j)
            r.a[j] = (-cn) * pr->a[j] + cp * nr->a[j];
          r.rhs = (-cn) * pr->rhs + cp * nr->rhs;
          next.push_back(std::move(r));
          if (next.size() > 400000) compact(next);
        }
    }
    // Remove the variable's (now zero) column.
    for (auto& r : next) r.a.erase(r.a.begin() + vi);
    p.vars.erase(p.vars.begin() + vi);
    p.rows = std::move(next);
    fmdetail::prune(p);
    if (p.rows.size() > 200000)
      throw poly_error("fm_eliminate: row blow-up beyond desk scale");
  }
  return p;
}

// ---------------------------------------------------------------------------
// objectives

// Exact min/max of sum(signed vars) over p; nullopt when p is empty.
// Signs: +1 contributes positively (input arcs), -1 negatively.
inline std::optional<interval> minmax_objective(
    const hpoly& p, const std::vector<std::pair<std::string, int>>& objective) {
  hpoly q = p;
  const std::string theta = "__theta";
  q.vars.push_back(theta);
  for (auto& r : q.rows) r.a.push_back(rat(0));
  hrow def{std::vector<rat>(q.vars.size(), rat(0)), true, rat(0)};
  def.a.back() = rat(1);
  for (const auto& [v, s] : objective) {
    int vi = q.var_index(v);
    if (vi < 0) throw poly_error("objective over unknown variable '" + v + "'");
    def.a[vi] -= rat(s);
  }
  q.rows.push_back(std::move(def));
  std::set<std::string> drop(p.vars.begin(), p.vars.end());
  hpoly r = fm_eliminate(q, drop);
  if (poly_marked_empty(r)) return std::nullopt;

  bool have_lo = false, have_hi = false;
  rat lo, hi;
  int ti = r.var_index(theta);
  for (const auto& row : r.rows) {
    const rat& c = row.a[ti];
    if (c.is_zero()) continue;
    rat bound = row.rhs / c;
    if (row.eq) {
      if (!have_lo || bound > lo) { lo = bound; have_lo = true; }
      if (!have_hi || bound < hi) { hi = bound; have_hi = true; }
    } else if (c.is_neg()) {
      if (!have_lo || bound > lo) { lo = bound; have_lo = true; }
    } else {
      if (!have_hi || bound < hi) { hi = bound; have_hi = true; }
    }
  }
  if (!have_lo || !have_hi) throw poly_error("objective is unbounded");
  if (hi < lo) return std::nullopt;
  return interval(lo, hi);
}

// ---------------------------------------------------------------------------
// whole-network principal typing (the oracle)

inline typing_outcome oracle_pt(const flow_network& net) {
  auto io = net.io_order();
  if (io.size() > 12) throw poly_error("oracle_pt: more than 12 io arcs (desk scale)");

  hpoly sys = constraints_of_network(net);
  std::set<std::string> internal;
  for (const auto& a : net.arcs)
    if (a.is_internal()) internal.insert(a.id);
  hpoly proj = fm_eliminate(sys, internal);
  if (poly_marked_empty(proj)) {
    // Empty even before looking at any subset: witness the empty set.
    return typing_outcome::infeasible({{}, rat(0), rat(-1)});
  }

  typing t;
  t.name = net.name.empty() ? "pt" : net.name;
  std::map<std::string, int> io_idx;
  for (int i : io) {
    io_idx[net.arcs[i].id] = static_cast<int>(t.io.size());
    t.io.push_back({net.arcs[i].id, net.arcs[i].is_input()});
  }

  component_partition part = components(net);
  for (const auto& blk : part.blocks) {
    std::vector<int> members;  // typing io indices of this component
    for (const auto& id : blk.io_arcs) members.push_back(io_idx.at(id));
    tblock tb;
    tb.arcs = members;
    tb.init_storage();
    int d = tb.dim();
    std::uint32_t full = tb.full_mask();
    // Restrict the projected system to this component's io variables.
    std::set<std::string> others;
    for (const auto& v : proj.vars)
      if (std::find(blk.io_arcs.begin(), blk.io_arcs.end(), v) == blk.io_arcs.end())
        others.insert(v);
    hpoly csys = fm_eliminate(proj, others);
    if (poly_marked_empty(csys))
      return typing_outcome::infeasible({{}, rat(0), rat(-1)});
    tb.set(0, interval::zero());
    if (d > 0) tb.set(full, interval::zero());
    for (std::uint32_t m = 1; m < full; ++m) {
      std::vector<std::pair<std::string, int>> obj;
      for (int p = 0; p < d; ++p)
        if (m & (1u << p))
          obj.push_back({t.io[members[p]].id, t.io[members[p]].is_input ? 1 : -1});
      auto v = minmax_objective(csys, obj);
      if (!v) {
        infeasibility w;
        for (auto& [id, s] : obj) w.subset.push_back(id);
        w.lo = rat(0);
        w.hi = rat(-1);
        return typing_outcome::infeasible(std::move(w));
      }
      tb.set(m, *v);
    }
    // Closed component (no io arcs): feasibility was already checked above.
    t.blocks.push_back(std::move(tb));
  }
  return typing_outcome::ok(canonical(t));
}

// ---------------------------------------------------------------------------
// vertex enumeration (desk scale, dimension <= 8)

namespace fmdetail {

// Solve the square system rows(sel) . x = rhs exactly; nullopt if singular.
inline std::optional<std::vector<rat>> solve_square(const std::vector<const hrow*>& sel,
                                                    std::size_t n) {
  std::vector<std::vector<rat>> m(n, std::vector<rat>(n + 1, rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = sel[i]->a[j];
    m[i][n] = sel[i]->rhs;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[col], m[piv]);
    rat inv = m[col][col];
    for (std::size_t j = col; j <= n; ++j) m[col][j] = m[col][j] / inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col].is_zero()) continue;
      rat f = m[i][col];
      for (std::size_t j = col; j <= n; ++j) m[i][j] = m[i][j] - f * m[col][j];
    }
  }
  std::vector<rat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
  return x;
}

}  // namespace fmdetail

inline bool point_satisfies(const hpoly& p, const std::vector<rat>& x) {
  for (const auto& r : p.rows) {
    rat s(0);
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!r.a[j].is_zero()) s += r.a[j] * x[j];
    if (r.eq ? (s != r.rhs) : (s > r.rhs)) return false;
  }
  return true;
}

inline vertex_set vertices(const hpoly& input) {
  hpoly p = input;
  fmdetail::prune(p);
  std::size_t n = p.vars.size();
  if (n > 8) throw poly_error("vertices: dimension > 8");
  if (poly_marked_empty(p)) return {};

  // Boundedness check, one FM run per direction.
  for (const auto& v : p.vars) {
    auto b = minmax_objective(p, {{v, 1}});  // throws if unbounded
    if (!b) return {};
  }

  std::vector<const hrow*> eqs, ineqs;
  for (const auto& r : p.rows) (r.eq ? eqs : ineqs).push_back(&r);
  if (eqs.size() > n) {
    // Redundant equalities; re-run with each split into two inequalities.
    hpoly split;
    split.vars = p.vars;
    for (const auto& r : p.rows) {
      if (!r.eq) { split.rows.push_back(r); continue; }
      hrow up = r;
      up.eq = false;
      split.rows.push_back(up);
      hrow dn = r;
      dn.eq = false;
      for (auto& c : dn.a) c = -c;
      dn.rhs = -dn.rhs;
      split.rows.push_back(std::move(dn));
    }
    return vertices(split);
  }
  vertex_set out;
  std::set<std::vector<std::pair<long long, long long>>> seen;
  std::vector<const hrow*> sel(eqs);
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (sel.size() == n) {
      auto x = fmdetail::solve_square(sel, n);
      if (x && point_satisfies(p, *x)) {
        std::vector<std::pair<long long, long long>> k;
        for (const auto& c : *x) k.push_back({c.num(), c.den()});
        if (seen.insert(k).second) out.push_back(*x);
      }
      return;
    }
    for (std::size_t i = start; i < ineqs.size(); ++i) {
      sel.push_back(ineqs[i]);
      rec(i + 1);
      sel.pop_back();
    }
  };
  if (eqs.size() <= n) rec(0);
  return out;
}

inline bool poly_includes(const hpoly& p, const hpoly& q) {
  if (p.vars != q.vars) throw poly_error("poly_includes: variable mismatch");
  for (const auto& v : vertices(q))
    if (!point_satisfies(p, v)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// tightness

inline bool check_tight(const typing& t) {
  typing c = canonical(t);
  hpoly sys = constraints_of_typing(c);
  auto entries = detail::global_entries(c);
  for (const auto& [mask, v] : entries) {
    if (mask == 0) continue;
    std::vector<std::pair<std::string, int>> obj;
    for (std::size_t i = 0; i < c.io.size(); ++i)
      if (mask & (std::uint64_t(1) << i))
        obj.push_back({c.io[i].id, c.io[i].is_input ? 1 : -1});
    auto got = minmax_objective(sys, obj);
    if (!got || *got != v) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// strong subtyping (angelic substitution safety)

namespace safedetail {

// Polytope of t's entries over subsets drawn from one side only
// (inputs_only: subsets of the input arcs; else subsets of the outputs).
inline hpoly side_constraints(const typing& t, bool inputs_only) {
  typing c = canonical(t);
  hpoly p;
  for (const auto& a : c.io) p.vars.push_back(a.id);
  std::uint64_t side_mask = 0;
  for (std::size_t i = 0; i < c.io.size(); ++i)
    if (c.io[i].is_input == inputs_only) side_mask |= std::uint64_t(1) << i;
  auto entries = detail::global_entries(c);
  for (const auto& [mask, v] : entries) {
    if (mask == 0 || (mask & ~side_mask)) continue;
    std::vector<rat> coef(p.vars.size(), rat(0));
    for (std::size_t i = 0; i < p.vars.size(); ++i)
      if (mask & (std::uint64_t(1) << i)) coef[i] = c.io[i].is_input ? rat(1) : rat(-1);
    hrow up{coef, false, v.hi};
    p.rows.push_back(std::move(up));
    hrow dn{coef, false, -v.lo};
    for (auto& x : dn.a) x = -x;
    p.rows.push_back(std::move(dn));
  }
  for (std::size_t i = 0; i < p.vars.size(); ++i) {
    hrow nn{std::vector<rat>(p.vars.size(), rat(0)), false, rat(0)};
    nn.a[i] = rat(-1);
    p.rows.push_back(std::move(nn));
  }
  return p;
}

inline bool safe_one_side(const typing& t, const typing& u, bool input_side) {
  detail::require_same_shape(canonical(t), canonical(u));
  if (canonical(t).io.size() > 6) throw poly_error("safety check: dimension > 6");
  hpoly pt = constraints_of_typing(t);
  hpoly pu = constraints_of_typing(u);
  hpoly fiber = side_constraints(t, input_side);
  // A := poly(u) ∩ S_side
  hpoly a = pu;
  for (const auto& r : fiber.rows) a.rows.push_back(r);
  return poly_includes(a, pt) && poly_includes(pt, a);
}

}  // namespace safedetail

// t may replace whatever u types, from the input side: every assignment
// agreeing with t's input entries behaves the same under t and u.
inline bool input_safe(const typing& t, const typing& u) {
  return safedetail::safe_one_side(t, u, true);
}

inline bool output_safe(const typing& t, const typing& u) {
  return safedetail::safe_one_side(t, u, false);
}

inline bool strong_sub(const typing& u, const typing& t) {
  return input_safe(t, u) && output_safe(t, u);
}

// ---------------------------------------------------------------------------
// independent max-flow cross-check (Edmonds-Karp on exact rationals)

inline rat maxflow_augmenting(const flow_network& net) {
  for (const auto& a : net.arcs)
    if (!a.lo.is_zero())
      throw poly_error("maxflow_augmenting requires all lower bounds 0");

  // Node indexing: 0 = aggregated source, 1 = aggregated sink, 2.. = nodes.
  std::map<std::string, int> idx;
  int nn = 2;
  for (const auto& nd : net.nodes) idx[nd.id] = nn++;
  struct edge { int to; rat cap; int rev; };
  std::vector<std::vector<edge>> g(nn);
  auto add_edge = [&](int u, int v, const rat& c) {
    g[u].push_back({v, c, static_cast<int>(g[v].size())});
    g[v].push_back({u, rat(0), static_cast<int>(g[u].size() - 1)});
  };
  for (const auto& a : net.arcs) {
    if (a.is_internal())
      add_edge(idx[a.tail], idx[a.head], a.hi);
    else if (a.is_input())
      add_edge(0, idx[a.head], a.hi);
    else
      add_edge(idx[a.tail], 1, a.hi);
  }

  rat flow(0);
  for (;;) {
    std::vector<std::pair<int, int>> prev(nn, {-1, -1});  // (node, edge idx)
    std::queue<int> bfs;
    bfs.push(0);
    prev[0] = {0, 0};
    while (!bfs.empty() && prev[1].first < 0) {
      int u = bfs.front();
      bfs.pop();
      for (std::size_t ei = 0; ei < g[u].size(); ++ei) {
        const edge& e = g[u][ei];
        if (prev[e.to].first < 0 && !e.cap.is_zero() && !e.cap.is_neg()) {
          if (e.cap > rat(0)) {
            prev[e.to] = {u, static_cast<int>(ei)};
            bfs.push(e.to);
          }
        }
      }
    }
    if (prev[1].first < 0) break;
    rat aug = g[prev[1].first][prev[1].second].cap;
    for (int v = 1; v != 0;) {
      auto [u, ei] = prev[v];
      aug = min(aug, g[u][ei].cap);
      v = u;
    }
    for (int v = 1; v != 0;) {
      auto [u, ei] = prev[v];
      g[u][ei].cap = g[u][ei].cap - aug;
      g[g[u][ei].to][g[u][ei].rev].cap = g[g[u][ei].to][g[u][ei].rev].cap + aug;
      v = u;
    }
    flow += aug;
  }
  return flow;
}

}  // namespace fnt
