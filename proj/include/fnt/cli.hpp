/*
 * Command-line front end.  run_cli() is the whole program minus main();
 * it takes the argument vector and the two output streams so tests can
 * drive it in-process and inspect stdout/stderr/exit codes.
 *
 * Exit codes: 0 success / property holds, 1 property fails or a verify
 * run found a mismatch, 2 network infeasible, 3 input or usage error.
 */
#pragma once

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fnt/compose.hpp"
#include "fnt/gen.hpp"
#include "fnt/network.hpp"
#include "fnt/planar.hpp"
#include "fnt/polytope.hpp"
#include "fnt/typing.hpp"

namespace fnt {

namespace clidetail {

inline flow_network load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw netf_error(0, "cannot open '" + path + "'");
  flow_network net = parse_network(in);
  auto diags = validate_network(net);
  for (const auto& d : diags)
    if (d.is_error) throw netf_error(0, path + ": " + d.message);
  return net;
}

inline typing load_typing(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw typing_error("cannot open '" + path + "'");
  return parse_typing(in);
}

// Resolve a schedule per strategy; falls back planar -> greedy with a
// warning when the embedding is absent or not good.
inline binding_schedule resolve_schedule(const flow_network& net,
                                         const std::string& strategy,
                                         const std::string& schedule_path,
                                         std::ostream& err) {
  if (strategy == "file") {
    if (schedule_path.empty())
      throw typing_error("--strategy file needs --schedule <path>");
    std::ifstream in(schedule_path);
    if (!in) throw typing_error("cannot open '" + schedule_path + "'");
    return parse_schedule(in);
  }
  if (strategy == "greedy") return greedy_schedule(net);
  if (strategy != "planar") throw typing_error("unknown strategy '" + strategy + "'");
  if (net.has_annotations()) {
    layered_embedding e = extract_embedding(net);
    auto gc = is_good_embedding(net, e);
    if (gc.good) return bind_schedule(net, e);
    err << "warning: embedding is not good (" << (gc.diags.empty() ? "?" : gc.diags[0])
        << "); falling back to the greedy strategy\n";
  } else {
    err << "warning: no embedding annotations; falling back to the greedy strategy\n";
  }
  return greedy_schedule(net);
}

inline int emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return 0;
  }
  std::ofstream f(out_path);
  if (!f) {
    return 3;
  }
  f << text;
  return 0;
}

inline double median3(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

}  // namespace clidetail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"flow-network typings: inference, composition, schedules"};
  app.require_subcommand(1);

  // --- typing ---------------------------------------------------------
  std::string ty_net, ty_strategy = "planar", ty_sched, ty_out;
  auto* typing_cmd = app.add_subcommand("typing", "infer the principal typing");
  typing_cmd->add_option("network", ty_net, "NETF input")->required();
  typing_cmd->add_option("--strategy", ty_strategy, "planar|greedy|file");
  typing_cmd->add_option("--schedule", ty_sched, "SCHEDF input (with --strategy file)");
  typing_cmd->add_option("--out", ty_out, "write TYPF here instead of stdout");

  // --- flow -----------------------------------------------------------
  std::string fl_net, fl_strategy = "planar", fl_sched;
  auto* flow_cmd = app.add_subcommand("flow", "feasible flow value range per component");
  flow_cmd->add_option("network", fl_net, "NETF input")->required();
  flow_cmd->add_option("--strategy", fl_strategy, "planar|greedy|file");
  flow_cmd->add_option("--schedule", fl_sched, "SCHEDF input (with --strategy file)");

  // --- schedule -------------------------------------------------------
  std::string sc_net, sc_strategy = "planar", sc_out;
  auto* sched_cmd = app.add_subcommand("schedule", "emit a binding schedule");
  sched_cmd->add_option("network", sc_net, "NETF input")->required();
  sched_cmd->add_option("--strategy", sc_strategy, "planar|greedy");
  sched_cmd->add_option("--out", sc_out, "write SCHEDF here instead of stdout");

  // --- check ----------------------------------------------------------
  std::string ck_mode, ck_a, ck_b;
  auto* check_cmd = app.add_subcommand("check", "typing predicates");
  check_cmd->add_option("--mode", ck_mode,
                        "sub|strong|input-safe|output-safe|realizable|tight")
      ->required();
  check_cmd->add_option("first", ck_a, "TYPF input")->required();
  check_cmd->add_option("second", ck_b, "TYPF input (two-typing modes)");

  // --- gen ------------------------------------------------------------
  std::string g_family, g_out;
  int g_k = 2, g_cols = 4, g_n = 8, g_m = 12, g_p = 2, g_q = 2;
  long g_cap = 10;
  std::uint64_t g_seed = 1;
  bool g_lb = false;
  auto* gen_cmd = app.add_subcommand("gen", "generate a network");
  gen_cmd->add_option("--family", g_family, "grid|ring|random")->required();
  gen_cmd->add_option("--k", g_k, "grid: layers");
  gen_cmd->add_option("--cols", g_cols, "grid: ring width");
  gen_cmd->add_option("--n", g_n, "ring/random: node count");
  gen_cmd->add_option("--m", g_m, "random: internal arc count");
  gen_cmd->add_option("--p", g_p, "random: input arcs");
  gen_cmd->add_option("--q", g_q, "random: output arcs");
  gen_cmd->add_option("--seed", g_seed, "rng seed");
  gen_cmd->add_option("--cap-max", g_cap, "capacity ceiling");
  gen_cmd->add_flag("--lower-bounds", g_lb, "random: draw nonzero lower capacities");
  gen_cmd->add_option("--out", g_out, "write NETF here instead of stdout");

  // --- verify ---------------------------------------------------------
  std::string v_net;
  int v_count = 10, v_n = 6, v_m = 9, v_p = 2, v_q = 2;
  std::uint64_t v_seed = 1;
  bool v_widen = false;
  auto* verify_cmd =
      app.add_subcommand("verify", "cross-check compositional inference vs the oracle");
  verify_cmd->add_option("network", v_net, "NETF input (else random instances)");
  verify_cmd->add_option("--count", v_count, "random instance count");
  verify_cmd->add_option("--seed", v_seed, "rng seed");
  verify_cmd->add_option("--n", v_n, "random: node count");
  verify_cmd->add_option("--m", v_m, "random: internal arc count");
  verify_cmd->add_option("--p", v_p, "random: input arcs");
  verify_cmd->add_option("--q", v_q, "random: output arcs");
  verify_cmd->add_flag("--inject-widen", v_widen,
                       "widen one computed entry to demonstrate a FAIL");

  // --- bench ----------------------------------------------------------
  int b_k = 2, b_reps = 3;
  std::string b_sizes = "1000,10000,100000";
  std::uint64_t b_seed = 7;
  auto* bench_cmd = app.add_subcommand("bench", "time inference on grid instances");
  bench_cmd->add_option("--k", b_k, "grid layers");
  bench_cmd->add_option("--sizes", b_sizes, "comma-separated node counts");
  bench_cmd->add_option("--reps", b_reps, "repetitions (median reported)");
  bench_cmd->add_option("--seed", b_seed, "rng seed");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    int rc = app.exit(e, os, os);
    (rc == 0 ? out : err) << os.str();
    return rc == 0 ? 0 : 3;
  }

  try {
    if (*typing_cmd) {
      flow_network net = clidetail::load_network(ty_net);
      binding_schedule s = clidetail::resolve_schedule(net, ty_strategy, ty_sched, err);
      typing_outcome o = comp_pt(net, s);
      if (!o.feasible()) {
        err << "infeasible: " << o.witness->str() << "\n";
        return 2;
      }
      typing t = *o.value;
      if (t.name.empty()) t.name = net.name.empty() ? "typing" : net.name;
      return clidetail::emit(serialize_typing(t), ty_out, out);
    }

    if (*flow_cmd) {
      flow_network net = clidetail::load_network(fl_net);
      binding_schedule s = clidetail::resolve_schedule(net, fl_strategy, fl_sched, err);
      typing_outcome o = comp_pt(net, s);
      if (!o.feasible()) {
        err << "infeasible: " << o.witness->str() << "\n";
        return 2;
      }
      auto bounds = flow_bounds(*o.value);
      for (std::size_t i = 0; i < bounds.size(); ++i)
        out << "component " << i << ": min=" << bounds[i].lo.str()
            << " max=" << bounds[i].hi.str() << "\n";
      return 0;
    }

    if (*sched_cmd) {
      flow_network net = clidetail::load_network(sc_net);
      binding_schedule s = clidetail::resolve_schedule(net, sc_strategy, "", err);
      return clidetail::emit(serialize_schedule(s), sc_out, out);
    }

    if (*check_cmd) {
      bool two = (ck_mode == "sub" || ck_mode == "strong" || ck_mode == "input-safe" ||
                  ck_mode == "output-safe");
      if (two && ck_b.empty()) {
        err << "mode '" << ck_mode << "' needs two typings\n";
        return 3;
      }
      typing t1 = clidetail::load_typing(ck_a);
      if (ck_mode == "realizable") {
        realizability r = realizable_low_dim(t1);
        if (r == realizability::yes) {
          out << "realizable\n";
          return 0;
        }
        if (r == realizability::no) {
          out << "not realizable\n";
          return 1;
        }
        out << "unknown (outside the decidable low-dimension fragment)\n";
        return 0;
      }
      if (ck_mode == "tight") {
        bool ok = check_tight(t1);
        out << (ok ? "tight\n" : "not tight\n");
        return ok ? 0 : 1;
      }
      typing t2 = clidetail::load_typing(ck_b);
      bool holds;
      if (ck_mode == "sub")
        holds = is_subtyping(t1, t2);
      else if (ck_mode == "strong")
        holds = strong_sub(t1, t2);
      else if (ck_mode == "input-safe")
        holds = input_safe(t1, t2);  // first typing replaces what second types
      else if (ck_mode == "output-safe")
        holds = output_safe(t1, t2);
      else {
        err << "unknown mode '" << ck_mode << "'\n";
        return 3;
      }
      out << (holds ? "holds\n" : "does not hold\n");
      return holds ? 0 : 1;
    }

    if (*gen_cmd) {
      flow_network net;
      if (g_family == "grid")
        net = gen_grid(g_k, g_cols, g_seed, g_cap);
      else if (g_family == "ring")
        net = gen_ring(g_n, g_seed, g_cap);
      else if (g_family == "random")
        net = gen_random(g_n, g_m, g_p, g_q, g_seed, g_cap, g_lb);
      else {
        err << "unknown family '" << g_family << "'\n";
        return 3;
      }
      return clidetail::emit(serialize_network(net), g_out, out);
    }

    if (*verify_cmd) {
      int failures = 0;
      auto run_one = [&](const flow_network& net, const std::string& tag) {
        auto t0 = std::chrono::steady_clock::now();
        typing_outcome ours = comp_pt(net, greedy_schedule(net));
        typing_outcome ref = oracle_pt(net);
        auto ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        bool ok;
        if (ours.feasible() != ref.feasible()) {
          ok = false;
        } else if (!ours.feasible()) {
          ok = true;
        } else {
          typing mine = *ours.value;
          if (v_widen) {
            // deliberately corrupt one entry to demonstrate detection
            bool done = false;
            for (auto& b : mine.blocks) {
              for (std::uint32_t m = 1; m < b.full_mask() && !done; ++m)
                if (auto v = b.get(m)) {
                  interval w = *v;
                  w.hi += rat(1);
                  b.set(m, w);
                  done = true;
                }
              if (done) break;
            }
          }
          ok = typing_equal(mine, *ref.value);
        }
        out << (ok ? "PASS " : "FAIL ") << tag << " (" << ms << " ms)\n";
        if (!ok) ++failures;
      };
      if (!v_net.empty()) {
        run_one(clidetail::load_network(v_net), v_net);
      } else {
        for (int i = 0; i < v_count; ++i) {
          flow_network net = gen_random(v_n, v_m, v_p, v_q, v_seed + i);
          run_one(net, net.name + "#" + std::to_string(i));
        }
      }
      return failures == 0 ? 0 : 1;
    }

    if (*bench_cmd) {
      std::vector<long> sizes;
      std::stringstream ss(b_sizes);
      std::string tok;
      while (std::getline(ss, tok, ',')) sizes.push_back(std::atol(tok.c_str()));
      out << "n\tnodes\tarcs\tdelta\twall_ms\n";
      for (long n : sizes) {
        int cols = static_cast<int>(std::max(3L, (n - 4) / (b_k == 2 ? 2 : 3 * b_k - 2)));
        flow_network net = gen_grid(b_k, cols, b_seed);
        layered_embedding e = extract_embedding(net);
        std::vector<double> times;
        int delta = 0;
        for (int rep = 0; rep < b_reps; ++rep) {
          auto t0 = std::chrono::steady_clock::now();
          binding_schedule s = bind_schedule(net, e);
          typing_outcome o = comp_pt(net, s);
          auto ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
          if (!o.feasible()) throw typing_error("bench instance infeasible");
          delta = s.index_bound;
          times.push_back(ms);
        }
        out << n << "\t" << net.nodes.size() << "\t" << net.arcs.size() << "\t" << delta
            << "\t" << clidetail::median3(times) << "\n";
      }
      return 0;
    }
  } catch (const netf_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const gen_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}

}  // namespace fnt
