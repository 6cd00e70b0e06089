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
  \file feedback_arc_set.hpp
  \brief Minimum feedback arc sets of interaction digraphs and the choice of
         pinned nodes

  The exact solver enumerates elementary cycles, finds every minimum-cardinality
  hitting set of the cycle edge sets by branch and bound, and among those picks
  one with the fewest distinct ending vertices.  Ties are broken by the
  lexicographically smallest sorted edge list.
*/

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "network.hpp"

namespace bnpin
{

inline constexpr std::size_t default_cycle_cap = 100000u;
inline constexpr std::size_t default_optimal_cap = 10000u;

struct cycle_enumeration
{
  /* each cycle as edge indices into g.edges(), in traversal order */
  std::vector<std::vector<std::size_t>> cycles;
  bool capped = false;
};

/*! \brief Elementary cycles (Johnson), self-loops included; stops once more
 *         than `cap` cycles are found and sets `capped`.
 */
cycle_enumeration enumerate_cycles( const interaction_digraph& g, std::size_t cap = default_cycle_cap );

/*! \brief Exact minimum hitting sets over a family of sets. */
class hitting_set_solver
{
public:
  /*! `allowed` (optional) restricts the elements that may be chosen. */
  hitting_set_solver( std::size_t universe, std::vector<std::vector<std::size_t>> sets, std::vector<uint8_t> allowed = {} );

  /*! \brief Minimum cardinality, or nullopt if some set has no allowed element. */
  std::optional<std::size_t> minimum_size() const;

  /*! \brief Calls `visit` with every hitting set of exactly `size` elements
   *         (sorted), each once; stops early when `visit` returns false.
   *         Returns false iff stopped early.
   */
  bool enumerate( std::size_t size, const std::function<bool( const std::vector<std::size_t>& )>& visit ) const;

private:
  struct search;

  std::size_t universe_;
  std::vector<std::vector<std::size_t>> sets_;
  std::vector<uint8_t> allowed_;
};

enum class fas_method
{
  exact,
  greedy
};

struct fas_options
{
  std::size_t cycle_cap = default_cycle_cap;
  std::size_t optimal_cap = default_optimal_cap;
  /* minimize the number of ending vertices first, then the edge count */
  bool ending_vertices_first = false;
  /* rounds of constraint generation once the cycle cap is hit */
  std::size_t lazy_rounds = 200u;
};

struct feedback_arc_set_result
{
  fas_method method = fas_method::exact;
  /* sorted edge list of the chosen set */
  std::vector<edge> chosen;
  std::size_t c2 = 0u;
  std::size_t c1 = 0u;
  /* number of optimal sets seen; complete iff no cap was hit */
  std::size_t optimal_count = 0u;
  bool optimal_count_complete = true;
  bool lazy = false;
  /* distinct ending vertices, ascending, with the deleted sources of each */
  std::vector<uint32_t> pinned;
  std::vector<std::vector<uint32_t>> deleted_sources;
};

/*! \brief Exact solve over the given (complete) cycle list. */
feedback_arc_set_result minimum_feedback_arc_sets( const interaction_digraph& g, const std::vector<std::vector<std::size_t>>& cycles,
                                                   const fas_options& options = {} );

/*! \brief Exact solve; falls back to lazy constraint generation when the cycle
 *         count exceeds the cap.  Throws `cap_exceeded` if that does not
 *         converge within `lazy_rounds`.
 */
feedback_arc_set_result exact_feedback_arc_set( const interaction_digraph& g, const fas_options& options = {} );

/*! \brief Repeatedly deletes the edge on the most open cycles until acyclic. */
feedback_arc_set_result greedy_feedback_arc_set( const interaction_digraph& g, const fas_options& options = {} );

} // namespace bnpin
