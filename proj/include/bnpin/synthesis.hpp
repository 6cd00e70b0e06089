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
  \file synthesis.hpp
  \brief Synthesis of network-structure-based distributed pinning controllers

  Step 1 deletes a minimum feedback arc set by pinning the ending vertices of
  its edges: each pinned node w gets a controller u_w = g_w(N_w) combined with
  its own update through a binary connective so that the controlled node no
  longer depends on the deleted in-neighbors.  The reduced network is acyclic
  and hence globally stable.  Step 2 then pins the nodes whose reduced update
  disagrees with the prescribed fixed point at that fixed point.

  Controllers are found by solving M (K (I (x) A) Phi) = T for a connective M
  and a feedback matrix K; a solution exists for every pair (T, A).
*/

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dynamics.hpp"
#include "feedback_arc_set.hpp"
#include "logical_matrix.hpp"
#include "network.hpp"
#include "truth_table.hpp"

namespace bnpin
{

/*! \brief How the deleted in-neighbors of a Step-1 node are eliminated. */
enum class freeze_policy
{
  /* substitute the deleted neighbors' values in the target state */
  target,
  one,
  zero,
  /* replacement tables supplied by the caller */
  custom
};

struct node_transform
{
  uint32_t node = 0u;
  std::vector<uint32_t> neighbors;
  std::vector<uint32_t> kept;
  std::vector<uint32_t> deleted;
  /* A_w with arguments reordered to (kept..., deleted...) */
  truth_table reordered;
  /* function of the kept neighbors only */
  truth_table replacement;
  /* replacement lifted to (kept..., deleted...), ignoring the deleted ones */
  truth_table lifted;
};

/*! \brief Solution of M K (I (x) A) Phi = T in the argument order of A. */
struct controller_solution
{
  logical_matrix connective;
  truth_table feedback;
};

/*! \brief All solutions sharing one connective: column i of the feedback may
 *         take any value listed in `feedback_choices[i]`.
 */
struct solution_family
{
  logical_matrix connective;
  std::vector<std::vector<uint8_t>> feedback_choices;
  /* log2 of the number of feedback matrices in the family */
  std::size_t free_columns = 0u;
};

struct controller_pair
{
  uint32_t node = 0u;
  /* M, 2 x 4, over (u, f) */
  logical_matrix connective;
  /* K over `arguments` in ascending node order */
  truth_table feedback;
  std::vector<uint32_t> arguments;
  std::string connective_expression;
  std::string feedback_expression;
};

/*! \brief Moves the deleted arguments of `table` behind the kept ones.
 *
 * `neighbors` lists the arguments of `table`; `kept` and `deleted` partition
 * it and are ascending.
 */
truth_table reorder_inputs( const truth_table& table, std::span<const uint32_t> neighbors, std::span<const uint32_t> kept,
                            std::span<const uint32_t> deleted );

/*! \brief Replacement (over kept) and its lift (over kept, deleted) obtained
 *         by freezing the trailing deleted arguments at `deleted_values`.
 */
std::pair<truth_table, truth_table> choose_replacement( const truth_table& reordered, uint32_t kept_count,
                                                        std::span<const uint8_t> deleted_values );

/*! \brief Lifts a function of the leading arguments to ignore `trailing` more. */
truth_table lift_replacement( const truth_table& replacement, uint32_t trailing );

/*! \brief Canonical solution: M = delta_2[1,2,2,1] (u <-> f) and
 *         K column i true iff T and A agree there.  Verified before returning.
 */
controller_solution solve_controller_equation( const truth_table& target, const truth_table& reordered );

/*! \brief Every (M, K) solving the equation, grouped by connective. */
std::vector<solution_family> enumerate_controller_solutions( const truth_table& target, const truth_table& reordered );

/*! \brief M |x K |x (I (x) A) |x Phi computed with the logical-matrix algebra. */
logical_matrix controller_product( const logical_matrix& connective, const logical_matrix& feedback, const logical_matrix& reordered );

/*! \brief True iff (M, K) solves the equation for (T, A). */
bool satisfies_controller_equation( const logical_matrix& connective, const truth_table& feedback, const truth_table& reordered,
                                    const truth_table& target );

/*! \brief Value of the connective on (u, f). */
bool apply_connective( const logical_matrix& connective, bool u, bool f );

/*! \brief Formula for the connective applied to two sub-formulas. */
std::string render_connective( const logical_matrix& connective, const std::string& lhs, const std::string& rhs );

/*! \brief Step-1 transform of node w with deleted in-neighbors `deleted`. */
node_transform transform_node( const boolean_network& net, uint32_t node, std::vector<uint32_t> deleted, freeze_policy policy,
                               const state_index& target, const truth_table* custom_replacement = nullptr );

/*! \brief Network whose pinned nodes use their replacement over the kept
 *         neighbors.  Throws std::logic_error if its digraph is cyclic.
 */
boolean_network reduced_system( const boolean_network& net, const std::vector<node_transform>& transforms );

struct fixed_point_pinning
{
  /* delta_i, 1 for nodes that must be pinned */
  std::vector<uint8_t> delta;
  std::vector<uint32_t> nodes;
  /* corrected tables, parallel to `nodes` */
  std::vector<truth_table> corrected;
  std::size_t c3 = 0u;
};

/*! \brief Minimum set of nodes whose update must change for `target` to be a
 *         fixed point; each correction rewrites the single column selected by
 *         the target values of the node's neighbors.
 */
fixed_point_pinning pin_fixed_point( const boolean_network& reduced, const state_index& target );

struct step1_entry
{
  node_transform transform;
  controller_pair controller;
};

struct step2_entry
{
  uint32_t node = 0u;
  std::vector<uint32_t> arguments;
  truth_table replacement;
  truth_table corrected;
  controller_pair controller;
};

struct pinning_plan
{
  state_index target;
  std::vector<edge> deleted_edges;
  std::vector<step1_entry> step1;
  std::vector<step2_entry> step2;
  std::vector<uint32_t> u_plus;
  std::vector<uint32_t> u_minus;
  std::vector<uint32_t> u_omega;
  std::vector<uint32_t> u_tau;
  std::size_t c1 = 0u;
  std::size_t c2 = 0u;
  std::size_t c3 = 0u;
  fas_method method = fas_method::exact;
  std::size_t optimal_count = 0u;
  bool optimal_count_complete = true;
  freeze_policy policy = freeze_policy::target;

  bool empty() const { return step1.empty() && step2.empty(); }
};

/*! \brief Controlled network of a plan: every pinned node's update with its
 *         controllers substituted, over its original in-neighbors.
 */
boolean_network compose_controlled_network( const boolean_network& net, const pinning_plan& plan );

/*! \brief Rule file of the controlled network with the controllers written
 *         out inside each pinned node's update.
 */
std::string controlled_rules( const boolean_network& net, const pinning_plan& plan );

struct synthesis_options
{
  fas_method method = fas_method::exact;
  fas_options fas;
  freeze_policy policy = freeze_policy::target;
  std::map<uint32_t, truth_table> custom_replacements;
  bool verify = true;
  verification_options verification;
};

struct synthesis_result
{
  /* minimized input network the plan refers to */
  boolean_network network;
  feedback_arc_set_result fas;
  pinning_plan plan;
  boolean_network controlled;
  std::optional<verification_report> verification;
};

/*! \brief Runs both steps and composes the controlled network.
 *
 * Verification uses `options.verification`; exhaustive mode switches to
 * sampled mode when n exceeds the exhaustive cap.  The controlled network is
 * always checked to have the target as a fixed point.
 */
synthesis_result synthesize( const boolean_network& net, const state_index& target, const synthesis_options& options = {} );

} // namespace bnpin
