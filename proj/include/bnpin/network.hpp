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
  \file network.hpp
  \brief Boolean networks, rule-file ingestion and interaction digraphs
*/

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "logical_matrix.hpp"
#include "truth_table.hpp"

namespace bnpin
{

/*! \brief Largest in-degree accepted for a node function. */
inline constexpr uint32_t default_max_in_degree = 16u;

/*! \brief Largest n for which the dense state transition matrix is built. */
inline constexpr std::size_t default_dense_cap = 20u;

class parse_error : public std::runtime_error
{
public:
  parse_error( const std::string& message, std::size_t line, std::size_t column );

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

class cap_exceeded : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief Synchronous Boolean network.
 *
 * Node indices are 0-based in code; the i-th node is x_{i+1}.  The function of
 * node i takes its in-neighbors as arguments in ascending index order.
 */
class boolean_network
{
public:
  boolean_network() = default;

  /*! \brief Appends a node; neighbors must be ascending and distinct. */
  uint32_t add_node( std::string name, std::vector<uint32_t> in_neighbors, truth_table function );

  /*! \brief Replaces the rule of node i. */
  void set_function( uint32_t i, std::vector<uint32_t> in_neighbors, truth_table function );

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }

  const std::string& name( uint32_t i ) const { return names_[i]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<uint32_t>& in_neighbors( uint32_t i ) const { return in_neighbors_[i]; }
  const truth_table& function( uint32_t i ) const { return functions_[i]; }

  std::optional<uint32_t> index_of( std::string_view name ) const;

  /*! \brief K, the largest number of in-neighbors of a node. */
  uint32_t max_in_degree() const;

  /*! \brief Next value of node i given the current node values. */
  bool evaluate( uint32_t i, std::span<const uint8_t> state ) const;

  /*! \brief Structure matrix A_i of node i. */
  logical_matrix structure_matrix( uint32_t i ) const { return functions_[i].structure_matrix(); }

  /*! \brief True iff every listed neighbor is a functional variable. */
  bool is_minimal() const;

  bool operator==( const boolean_network& ) const = default;

private:
  void check_rule( const std::vector<uint32_t>& in_neighbors, const truth_table& function ) const;

  std::vector<std::string> names_;
  std::vector<std::vector<uint32_t>> in_neighbors_;
  std::vector<truth_table> functions_;
};

/*! \brief Parses a rule file: one `name, expr` line per node.
 *
 * Operators, loosest first: `<->`, `->` (right associative), `|`, `^`, `&`,
 * `!`.  Constants are `0` and `1`.  `#` starts a comment, and a leading
 * `targets, factors` header line is skipped.  Neighbors are the variables
 * that occur syntactically; call `minimize` to drop nonfunctional ones.
 */
boolean_network parse_network( std::string_view text, uint32_t max_in_degree = default_max_in_degree );

/*! \brief Parses one expression over the given variable names and returns its
 *         truth table over those names in the given order.
 */
truth_table parse_expression( std::string_view text, const std::vector<std::string>& variables );

/*! \brief Removes every neighbor that is not a functional variable. */
boolean_network minimize( const boolean_network& net );

/*! \brief Writes the network back in rule-file syntax. */
std::string to_rules( const boolean_network& net );

struct edge
{
  uint32_t source;
  uint32_t target;

  auto operator<=>( const edge& ) const = default;
};

/*! \brief Interaction digraph: i -> j iff x_i is an in-neighbor of x_j. */
class interaction_digraph
{
public:
  interaction_digraph() = default;
  interaction_digraph( uint32_t vertices, std::vector<edge> edges );

  uint32_t vertex_count() const noexcept { return vertices_; }
  const std::vector<edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::optional<std::size_t> find( edge e ) const;

  /*! \brief O_-(e) and O_+(e). */
  uint32_t start( std::size_t e ) const { return edges_[e].source; }
  uint32_t end( std::size_t e ) const { return edges_[e].target; }

private:
  uint32_t vertices_ = 0u;
  std::vector<edge> edges_;
};

interaction_digraph build_interaction_digraph( const boolean_network& net );

/*! \brief Topological order of the vertices, ignoring edges flagged in
 *         `removed` (indexed like g.edges()); nullopt if a cycle remains.
 */
std::optional<std::vector<uint32_t>> topological_order( const interaction_digraph& g, const std::vector<uint8_t>& removed = {} );

/*! \brief One directed cycle (as edge indices) of the digraph minus
 *         `removed`, or an empty vector if none remains.
 */
std::vector<std::size_t> find_cycle( const interaction_digraph& g, const std::vector<uint8_t>& removed = {} );

/*! \brief Dense state transition matrix L with L delta^gamma = successor.
 *
 * Exponential in n; only used for export and as a test oracle.
 */
logical_matrix algebraic_form( const boolean_network& net, std::size_t cap = default_dense_cap );

} // namespace bnpin
