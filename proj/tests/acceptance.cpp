/*
 * Acceptance suite: one pass/fail line per criterion, exit 0 only when all
 * ten hold.  Everything is seeded, so a failure reproduces byte-for-byte.
 */
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "fnt/cli.hpp"

using namespace fnt;
using clk = std::chrono::steady_clock;

namespace {

double ms_between(clk::time_point a, clk::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

int failures = 0;
std::vector<std::pair<int, std::string>> lines;

void report(int id, bool ok, const std::string& what) {
  std::ostringstream os;
  os << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << " — " << what;
  lines.push_back({id, os.str()});
  if (!ok) ++failures;
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Internal arcs in declaration order / reverse declaration order give two
// schedule shapes that share nothing with the greedy strategy.
binding_schedule decl_schedule(const flow_network& net, bool reversed) {
  binding_schedule s;
  for (const auto& a : net.arcs)
    if (a.is_internal()) s.order.push_back(a.id);
  if (reversed) std::reverse(s.order.begin(), s.order.end());
  s.index_bound = s.order.empty() ? 0 : schedule_index(net, s);
  return s;
}

struct corpus_entry {
  flow_network net;
  std::vector<binding_schedule> schedules;
  std::vector<typing_outcome> comp;  // one result per schedule
  typing_outcome oracle = typing_outcome::infeasible({});
};

// The shared random corpus for criteria 1, 2 and 4: 200 seeded networks
// with n <= 8 nodes, m <= 14 arcs, p+q <= 4 io stubs, rational capacities,
// a quarter of them with nonzero lower bounds.
std::vector<corpus_entry> build_corpus() {
  std::vector<corpus_entry> out;
  for (int i = 0; i < 200; ++i) {
    std::uint64_t s = mix(1000 + i);
    int n = 2 + static_cast<int>(s % 7);  // 2..8
    long max_m = std::min<long>(14, static_cast<long>(n) * (n - 1));
    int m = (n - 1) + static_cast<int>(mix(s) % (max_m - (n - 1) + 1));
    int p = 1 + static_cast<int>(mix(s + 1) % 2);
    int q = 1 + static_cast<int>(mix(s + 2) % 2);
    bool lows = (i % 4 == 0);
    corpus_entry e;
    e.net = gen_random(n, m, p, q, 5000 + i, 10, lows);
    binding_schedule greedy = greedy_schedule(e.net);
    // Transient fused blocks reach index+2 dimensions and cost 2^d each,
    // so screen the candidates against a runtime budget; dense instances
    // fall back to perturbed greedy orders instead.
    std::vector<binding_schedule> cands{decl_schedule(e.net, false), decl_schedule(e.net, true)};
    if (greedy.order.size() >= 2) {
      binding_schedule swapped = greedy;
      std::swap(swapped.order[0], swapped.order[1]);
      swapped.index_bound = schedule_index(e.net, swapped);
      cands.push_back(swapped);
      binding_schedule rolled = greedy;
      std::rotate(rolled.order.begin(), rolled.order.begin() + 1, rolled.order.end());
      rolled.index_bound = schedule_index(e.net, rolled);
      cands.push_back(rolled);
    }
    e.schedules.push_back(greedy);
    for (const auto& c : cands) {
      if (e.schedules.size() == 3) break;
      if (schedule_index(e.net, c) + 2 <= 16) e.schedules.push_back(c);
    }
    while (e.schedules.size() < 3) e.schedules.push_back(greedy);
    out.push_back(std::move(e));
  }
  return out;
}

bool same_outcome(const typing_outcome& a, const typing_outcome& b) {
  if (a.feasible() != b.feasible()) return false;
  if (!a.feasible()) return true;
  return typing_equal(*a.value, *b.value);
}

// Builds the 2-in-1-out typing over a1,a2 (inputs) and a3 (output) with
// singleton intervals [r1,s1], [r2,s2] and output magnitude [r3,s3].
typing make_2in1out(rat r1, rat s1, rat r2, rat s2, rat r3, rat s3) {
  typing t;
  t.io.push_back({"a1", true});
  t.io.push_back({"a2", true});
  t.io.push_back({"a3", false});
  tblock b;
  b.arcs = {0, 1, 2};
  b.init_storage();
  b.set(0, interval::zero());
  b.set(7, interval::zero());
  b.set(1, interval(r1, s1));
  b.set(6, interval(-s1, -r1));
  b.set(2, interval(r2, s2));
  b.set(5, interval(-s2, -r2));
  b.set(4, interval(-s3, -r3));
  b.set(3, interval(r3, s3));
  t.blocks.push_back(std::move(b));
  return t;
}

flow_network one_node_net(int ins, int outs, std::uint64_t seed) {
  gendetail::rng r(seed);
  flow_network net;
  net.name = "node1";
  net.nodes.push_back({"u", 0, -1});
  for (int i = 0; i < ins; ++i)
    net.arcs.push_back({"a" + std::to_string(i + 1), "", "u", rat(0),
                        gendetail::cap(r, 10), arc_role::none});
  for (int i = 0; i < outs; ++i)
    net.arcs.push_back({"a" + std::to_string(ins + i + 1), "u", "", rat(0),
                        gendetail::cap(r, 10), arc_role::none});
  return net;
}

// ---------------------------------------------------------------------------

void criterion_1_2_4(std::vector<corpus_entry>& corpus) {
  auto start = clk::now();
  bool oracle_ok = true, audit_ok = true, sched_ok = true, sym_ok = true;
  std::string first_bad;

  for (std::size_t i = 0; i < corpus.size(); ++i) {
    corpus_entry& e = corpus[i];
    audit::reset();
    for (const auto& s : e.schedules) e.comp.push_back(comp_pt(e.net, s));
    if (audit::mul_count() != 0 || audit::div_count() != 0) audit_ok = false;
    e.oracle = oracle_pt(e.net);
    for (const auto& c : e.comp)
      if (!same_outcome(c, e.oracle)) {
        oracle_ok = false;
        if (first_bad.empty()) first_bad = e.net.name + " (instance " + std::to_string(i) + ")";
      }
    for (std::size_t a = 0; a < e.comp.size(); ++a)
      for (std::size_t b = a + 1; b < e.comp.size(); ++b)
        if (!same_outcome(e.comp[a], e.comp[b])) sched_ok = false;
    for (const auto& c : e.comp)
      if (c.feasible() && !complement_symmetric(*c.value)) sym_ok = false;
  }
  double secs = ms_between(start, clk::now()) / 1000.0;

  // Criterion 4 also watches the intermediate stages: reassemble a slice of
  // the corpus one bind at a time and check the symmetry after every step.
  for (std::size_t i = 0; i < corpus.size(); i += 9) {
    const flow_network& net = corpus[i].net;
    broken_network bn = break_network(net);
    typing t;
    bool feasible = true;
    for (const auto& blk : bn.blocks) {
      typing_outcome o = one_pt(blk.ports);
      if (!o.feasible()) { feasible = false; break; }
      if (!complement_symmetric(*o.value)) sym_ok = false;
      t = t.io.empty() ? *o.value : par_add(t, *o.value);
    }
    if (!feasible) continue;
    if (!complement_symmetric(t)) sym_ok = false;
    for (const auto& arc_id : corpus[i].schedules[0].order) {
      typing_outcome o = bind_t(arc_id, t);
      if (!o.feasible()) { feasible = false; break; }
      t = *o.value;
      if (!complement_symmetric(t)) sym_ok = false;
    }
  }

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "oracle equivalence on 200 random networks x 3 schedules, exact (%.1fs%s%s)",
                secs, audit_ok ? ", compose stayed mul/div-free" : ", AUDIT VIOLATION",
                first_bad.empty() ? "" : (", first mismatch: " + first_bad).c_str());
  report(1, oracle_ok && audit_ok && secs < 60.0, buf);
  report(2, sched_ok, "schedule obliviousness: all schedule pairs agree exactly");
  report(4, sym_ok, "complement symmetry holds at every pipeline stage across the corpus");
}

void criterion_3() {
  bool ok = true;
  typing t1 = fixtures::t1(), t2 = fixtures::t2(), t3 = fixtures::t3();
  typing_outcome m = meet(t1, t2);
  ok &= m.feasible() && typing_equal(*m.value, t3);
  ok &= is_subtyping(t1, t3);
  ok &= is_subtyping(t2, t3);
  ok &= !is_subtyping(t1, t2);
  ok &= !is_subtyping(t2, t1);
  std::map<std::string, rat> f1{{"a1", 15}, {"a2", 0}, {"a3", 3}, {"a4", 12}};
  std::map<std::string, rat> f2{{"a1", 0}, {"a2", 25}, {"a3", 0}, {"a4", 25}};
  ok &= satisfies(f1, t2) && !satisfies(f1, t1);
  ok &= satisfies(f2, t1) && !satisfies(f2, t2);
  auto fb = flow_bounds(t1);
  ok &= fb.size() == 1 && fb[0].lo == rat(0) && fb[0].hi == rat(30);
  report(3, ok, "reference typings: meet, subtyping, satisfaction, flow bounds");
}

void criterion_5() {
  bool ok = true;
  for (int i = 0; i < 100 && ok; ++i) {
    std::uint64_t s = mix(7000 + i);
    int n = 2 + static_cast<int>(s % 7);
    long max_m = std::min<long>(14, static_cast<long>(n) * (n - 1));
    int m = (n - 1) + static_cast<int>(mix(s) % (max_m - (n - 1) + 1));
    int p = 1 + static_cast<int>(mix(s + 1) % 2);
    int q = 1 + static_cast<int>(mix(s + 2) % 2);
    flow_network net = gen_random(n, m, p, q, 9000 + i, 10, false);
    typing_outcome t = comp_pt(net, greedy_schedule(net));
    if (!t.feasible()) { ok = false; break; }
    auto fb = flow_bounds(*t.value);
    if (fb.size() != 1 || fb[0].hi != maxflow_augmenting(net)) ok = false;
  }
  report(5, ok, "upper flow bound equals the augmenting-path max flow on 100 instances");
}

void criterion_6() {
  bool ok = true;
  std::string note;
  auto check_shape = [&](const flow_network& net) {
    flow_network reg = to_3_regular(net);
    std::map<std::string, int> deg;
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& a : reg.arcs) {
      if (a.is_internal()) {
        ++deg[a.tail];
        ++deg[a.head];
        if (pairs.count({a.head, a.tail})) ok = false;  // 2-cycle survived
        pairs.insert({a.tail, a.head});
      } else {
        ++deg[a.tail.empty() ? a.head : a.tail];
      }
    }
    for (const auto& nd : reg.nodes)
      if (deg[nd.id] != 3) ok = false;
    std::size_t m = net.arcs.size();
    if (reg.nodes.size() > 2 * m || reg.arcs.size() > 3 * m) ok = false;
    return reg;
  };

  // Families with annotations: rings, grids, and variants with a reversed
  // chord (creating a 2-cycle and two degree-4 nodes to repair).
  for (int k = 1; k <= 3; ++k) {
    flow_network net = k == 1 ? gen_ring(10, 11) : gen_grid(k, 5, 11);
    flow_network reg = check_shape(net);
    if (extract_embedding(reg).outer_k > 2 * k) ok = false;

    flow_network chorded = net;
    std::string u, v;  // two ring-consecutive internal nodes
    for (const auto& a : chorded.arcs)
      if (a.is_internal()) { u = a.tail; v = a.head; break; }
    chorded.arcs.push_back({"chord", v, u, rat(0), rat(3), arc_role::none});
    flow_network reg2 = check_shape(chorded);
    if (extract_embedding(reg2).outer_k > 2 * k) ok = false;
  }

  // Degree-4-and-up inputs without annotations, plus exact oracle
  // preservation (all of these have p+q <= 4 and stay at oracle scale).
  for (std::uint64_t seed : {29ull, 30ull, 31ull}) {
    flow_network net = gen_min_degree3(6, seed);
    flow_network reg = check_shape(net);
    typing_outcome a = oracle_pt(net);
    typing_outcome b = oracle_pt(reg);
    if (!same_outcome(a, b)) { ok = false; note = " (oracle changed)"; }
  }
  {
    flow_network ring = gen_ring(8, 11);
    std::string u, v;
    for (const auto& a : ring.arcs)
      if (a.is_internal()) { u = a.tail; v = a.head; break; }
    ring.arcs.push_back({"chord", v, u, rat(0), rat(3), arc_role::none});
    flow_network reg = check_shape(ring);
    if (!same_outcome(oracle_pt(ring), oracle_pt(reg))) { ok = false; note = " (oracle changed)"; }
  }
  report(6, ok, "3-regularization: shape, size bounds, layer depth <= 2k, typing preserved" + note);
}

void criterion_7() {
  bool ok = true;
  for (int k = 1; k <= 3; ++k) {
    for (int size : {4, 7, 10}) {
      flow_network net = k == 1 ? gen_ring(4 + 2 * size, 13 + size) : gen_grid(k, size, 13 + size);
      schedule_trace trace;
      binding_schedule s = bind_schedule(net, extract_embedding(net), &trace);
      int bound = 2 * k + 4 + 4;  // p + q = 4 on these families
      if (s.index_bound > bound || schedule_index(net, s) > bound) ok = false;
      for (int d : trace.accumulator_core_dims)
        if (d > 2 * k + 2) ok = false;
      for (int d : trace.first_iteration_core_dims)
        if (d > 2 * k + 2) ok = false;
    }
  }
  report(7, ok, "planar schedules: delta <= 2k+4+p+q, accumulator core <= 2k+2 throughout");
}

void criterion_8() {
  std::vector<int> sizes = {1000, 10000, 100000};
  std::vector<double> med;
  for (int n : sizes) {
    std::vector<double> runs;
    for (int rep = 0; rep < 3; ++rep) {
      flow_network net = gen_grid(2, (n - 4) / 2, 17);
      auto t0 = clk::now();
      binding_schedule s = bind_schedule(net, extract_embedding(net));
      typing_outcome t = comp_pt(net, s);
      auto t1 = clk::now();
      if (!t.feasible()) { report(8, false, "grid instance unexpectedly infeasible"); return; }
      runs.push_back(ms_between(t0, t1));
    }
    std::sort(runs.begin(), runs.end());
    med.push_back(runs[1]);
  }
  double r1 = med[1] / med[0], r2 = med[2] / med[1];
  bool ok = r1 <= 14.0 && r2 <= 14.0;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "linear scaling on k=2 grids: medians %.0f/%.0f/%.0f ms, decade ratios %.1f, %.1f",
                med[0], med[1], med[2], r1, r2);
  report(8, ok, buf);
}

void criterion_9() {
  bool ok = true;
  typing t2 = fixtures::t2(), t3 = fixtures::t3();
  ok &= !strong_sub(t2, t3) && is_subtyping(t2, t3);
  ok &= input_safe(fixtures::t3_prime(), t2);
  ok &= output_safe(fixtures::t3_dprime(), t2);

  int antecedents = 0;
  for (int i = 0; i < 50 && ok; ++i) {
    // Three tight typings over the same ports, built from nested capacity
    // boxes so the implications are exercised with true antecedents too.
    std::vector<typing> t;
    gendetail::rng r(mix(11000 + i));
    std::vector<rat> base;
    for (int a = 0; a < 4; ++a) base.push_back(gendetail::cap(r, 8));
    for (int level = 0; level < 3; ++level) {
      std::vector<port> ports;
      for (int a = 0; a < 4; ++a) {
        rat hi = base[a] + rat(level) * gendetail::cap(r, 3);
        ports.push_back({"a" + std::to_string(a + 1), a < 2, rat(0), hi});
      }
      typing_outcome o = one_pt(ports);
      if (!o.feasible()) { ok = false; break; }
      t.push_back(*o.value);
    }
    if (!ok) break;
    for (const auto& x : t)
      if (!strong_sub(x, x)) ok = false;  // reflexivity
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (strong_sub(t[a], t[b]) && !is_subtyping(t[a], t[b])) ok = false;
        for (int c = 0; c < 3; ++c)
          if (strong_sub(t[a], t[b]) && strong_sub(t[b], t[c])) {
            ++antecedents;
            if (!strong_sub(t[a], t[c])) ok = false;
          }
      }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "strong subtyping: reference verdicts + reflexivity/transitivity on 50 triples "
                "(%d non-trivial chains)", antecedents);
  report(9, ok && antecedents > 0, buf);
}

void criterion_10() {
  bool ok = true;
  // Acceptance: oracle typings of one-node networks are recognized.
  for (int i = 0; i < 40 && ok; ++i) {
    for (auto [ins, outs] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
      typing_outcome o = oracle_pt(one_node_net(ins, outs, 13000 + i));
      if (!o.feasible() || realizable_low_dim(*o.value) != realizability::yes) ok = false;
    }
  }
  // Rejection: perturb the output singleton of a realizable 2-in-1-out
  // typing so that either interval end leaves the admissible band.
  int rejected = 0;
  for (int i = 0; i < 50; ++i) {
    gendetail::rng r(mix(14000 + i));
    rat s1 = gendetail::cap(r, 8), s2 = gendetail::cap(r, 8);
    typing bad = (i % 2 == 0)
                     ? make_2in1out(rat(0), s1, rat(0), s2, rat(0), s1 + s2 + rat(1))
                     : make_2in1out(rat(0), s1, rat(0), s2, min(s1, s2) + rat(1), s1 + s2);
    if (realizable_low_dim(bad) == realizability::no) ++rejected;
  }
  ok &= rejected == 50;
  report(10, ok, "realizability: accepts one-node oracle typings, rejects all 50 perturbations");
}

}  // namespace

int main() {
  auto corpus = build_corpus();
  criterion_1_2_4(corpus);
  criterion_3();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::sort(lines.begin(), lines.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [id, text] : lines) std::printf("%s\n", text.c_str());
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
