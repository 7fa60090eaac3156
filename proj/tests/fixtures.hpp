/*
 * Shared test fixtures: the three 4-port reference typings (two variants
 * of the third), a couple of tiny networks with hand-checked values, and
 * small builder helpers.
 */
#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "fnt/network.hpp"
#include "fnt/typing.hpp"

namespace fixtures {

using fnt::interval;
using fnt::rat;

inline interval iv(long lo, long hi) { return {rat(lo), rat(hi)}; }

// Four-port typing over inputs a1,a2 and outputs a3,a4; bit i of a mask
// selects io arc i in that order.
inline fnt::typing make4(const std::string& name,
                         const std::map<std::uint32_t, interval>& entries) {
  fnt::typing t;
  t.name = name;
  t.io = {{"a1", true}, {"a2", true}, {"a3", false}, {"a4", false}};
  fnt::tblock b;
  b.arcs = {0, 1, 2, 3};
  b.init_storage();
  b.set(0u, iv(0, 0));
  b.set(15u, iv(0, 0));
  for (const auto& [m, v] : entries) b.set(m, v);
  t.blocks.push_back(std::move(b));
  return t;
}

// Masks: a1=1, a2=2, a3=4, a4=8.
inline fnt::typing t1() {
  return make4("T1", {
      {1, iv(0, 15)},   {2, iv(0, 25)},   {4, iv(-15, 0)},  {8, iv(-25, 0)},
      {3, iv(0, 30)},   {5, iv(-10, 10)}, {9, iv(-25, 15)}, {6, iv(-15, 25)},
      {10, iv(-10, 10)}, {12, iv(-30, 0)},
      {7, iv(0, 25)},   {11, iv(0, 15)},  {13, iv(-25, 0)}, {14, iv(-15, 0)},
  });
}

inline fnt::typing t2() {
  return make4("T2", {
      {1, iv(0, 15)},   {2, iv(0, 25)},   {4, iv(-15, 0)},  {8, iv(-25, 0)},
      {3, iv(0, 30)},   {5, iv(-10, 12)}, {9, iv(-23, 15)}, {6, iv(-15, 23)},
      {10, iv(-12, 10)}, {12, iv(-30, 0)},
      {7, iv(0, 25)},   {11, iv(0, 15)},  {13, iv(-25, 0)}, {14, iv(-15, 0)},
  });
}

inline fnt::typing t3() {
  return make4("T3", {
      {1, iv(0, 15)},   {2, iv(0, 25)},   {4, iv(-15, 0)},  {8, iv(-25, 0)},
      {3, iv(0, 30)},   {5, iv(-10, 10)}, {9, iv(-23, 15)}, {6, iv(-15, 23)},
      {10, iv(-10, 10)}, {12, iv(-30, 0)},
      {7, iv(0, 25)},   {11, iv(0, 15)},  {13, iv(-25, 0)}, {14, iv(-15, 0)},
  });
}

// T3 after capping a1's upper capacity at 10.
inline fnt::typing t3_prime() {
  return make4("T3p", {
      {1, iv(0, 10)},   {2, iv(0, 25)},   {4, iv(-15, 0)},  {8, iv(-25, 0)},
      {3, iv(0, 30)},   {5, iv(-10, 10)}, {9, iv(-23, 10)}, {6, iv(-10, 23)},
      {10, iv(-10, 10)}, {12, iv(-30, 0)},
      {7, iv(0, 25)},   {11, iv(0, 15)},  {13, iv(-25, 0)}, {14, iv(-10, 0)},
  });
}

// T3 after capping a4's upper capacity at 10.
inline fnt::typing t3_dprime() {
  return make4("T3pp", {
      {1, iv(0, 15)},   {2, iv(0, 20)},   {4, iv(-15, 0)},  {8, iv(-10, 0)},
      {3, iv(0, 25)},   {5, iv(-10, 10)}, {9, iv(-10, 15)}, {6, iv(-15, 10)},
      {10, iv(-10, 10)}, {12, iv(-25, 0)},
      {7, iv(0, 10)},   {11, iv(0, 15)},  {13, iv(-20, 0)}, {14, iv(-15, 0)},
  });
}

// Three arcs in a line; the middle arc's nonzero lower capacity squeezes
// the io entries: principal entry({a}) = [2,3].
inline const char* kChain = R"(net chain
node u
node v
arc a _ u 0 5
arc b u v 2 4
arc c v _ 0 3
)";

// Two disjoint s->t paths; max flow 3 + 4 = 7.
inline const char* kDiamond = R"(net diamond
node s
node u
node v
node t
arc in _ s 0 10
arc su s u 0 3
arc sv s v 0 4
arc ut u t 0 5
arc vt v t 0 5
arc out t _ 0 10
)";

}  // namespace fixtures
