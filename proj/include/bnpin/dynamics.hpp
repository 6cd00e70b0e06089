/* bnpin: pinning control synthesis for Boolean networks
 * Copyright (C) 2026  bnpin contributors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file dynamics.hpp
  \brief Successor map, attractors, global-stability verification and
         state transition graphs

  Exhaustive routines work on packed state codes (gamma - 1) and never build
  the 2^n x 2^n transition matrix.  They refuse networks larger than a cap and
  throw `cap_exceeded`; sampled verification has no size limit.
*/

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "network.hpp"
#include "truth_table.hpp"

namespace bnpin
{

inline constexpr std::size_t default_exhaustive_cap = 22u;
inline constexpr std::size_t default_samples = 500u;

state_index step( const boolean_network& net, const state_index& state );

/*! \brief Successor of a packed state code; requires n <= 63. */
uint64_t step_code( const boolean_network& net, uint64_t code );

struct attractor_report
{
  std::vector<state_index> fixed_points;
  /* each cycle starts at its smallest code */
  std::vector<std::vector<state_index>> cycles;
  /* fixed points first, then cycles, in the order above */
  std::vector<uint64_t> basin_sizes;

  std::size_t attractor_count() const { return fixed_points.size() + cycles.size(); }
};

attractor_report find_attractors( const boolean_network& net, std::size_t cap = default_exhaustive_cap );

enum class verification_mode
{
  exhaustive,
  sampled
};

struct verification_options
{
  verification_mode mode = verification_mode::exhaustive;
  std::size_t exhaustive_cap = default_exhaustive_cap;
  std::size_t samples = default_samples;
  /* 0 selects 4n */
  std::size_t steps = 0u;
  std::optional<uint64_t> seed;
};

struct verification_report
{
  bool verified = false;
  verification_mode mode = verification_mode::exhaustive;
  state_index target;
  /* exhaustive: max first-hit time over all states; sampled: over samples */
  std::optional<uint64_t> convergence_time;
  std::optional<state_index> counterexample;
  /* set when the target is not a fixed point */
  std::optional<uint32_t> violating_node;
  std::size_t samples = 0u;
  std::size_t steps = 0u;
  std::optional<uint64_t> seed;
  std::string message;
};

verification_report verify_global_stability( const boolean_network& net, const state_index& target,
                                             const verification_options& options = {} );

struct transition
{
  state_index from;
  state_index to;

  auto operator<=>( const transition& ) const = default;
};

/*! \brief All 2^n transitions in state-code order. */
std::vector<transition> state_transition_graph( const boolean_network& net, std::size_t cap = default_exhaustive_cap );

/*! \brief Transitions along the forward orbit of each initial state, followed
 *         until the first repeated state; duplicates removed.
 */
std::vector<transition> state_transition_graph( const boolean_network& net, const std::vector<state_index>& initial_states );

/*! \brief `count` uniformly random states drawn from a seeded generator. */
std::vector<state_index> random_states( std::size_t n, std::size_t count, uint64_t seed );

/*! \brief Graphviz rendering, one node per state labelled by its bits. */
std::string to_dot( const std::vector<transition>& transitions );

} // namespace bnpin
