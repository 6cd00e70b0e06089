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
  \file truth_table.hpp
  \brief Truth tables in canonical column order, and state indexing

  Column c of a k-ary table corresponds to the argument product
  a_1 |x ... |x a_k, with 1 ~ delta_2^1 and 0 ~ delta_2^2.  In binary, the
  bit of c at position k-i is therefore 1 - a_i: column 0 is all-true,
  column 2^k - 1 is all-false.
*/

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "logical_matrix.hpp"

namespace bnpin
{

class truth_table
{
public:
  truth_table() : values_( 1u, 0u ) {}
  explicit truth_table( uint32_t arity, bool fill = false );
  explicit truth_table( std::vector<uint8_t> values );

  static truth_table constant( bool value );
  static truth_table from_function( uint32_t arity, const std::function<bool( std::span<const uint8_t> )>& fn );
  static truth_table from_structure_matrix( const logical_matrix& m );

  uint32_t arity() const noexcept { return arity_; }
  uint64_t size() const noexcept { return values_.size(); }

  bool operator[]( uint64_t column ) const { return values_[column] != 0u; }
  void set( uint64_t column, bool value ) { values_[column] = value ? 1u : 0u; }

  /*! \brief Evaluates at argument values a_1..a_k (each 0 or 1). */
  bool evaluate( std::span<const uint8_t> args ) const { return values_[column_of( args )] != 0u; }

  std::span<const uint8_t> values() const noexcept { return values_; }

  logical_matrix structure_matrix() const { return bnpin::structure_matrix( values_ ); }

  bool is_constant() const;

  /*! \brief True iff flipping argument `var` (0-based) changes the output in
   *         some context of the other arguments.
   */
  bool depends_on( uint32_t var ) const;

  /*! \brief Canonical column index of argument values a_1..a_k. */
  static uint64_t column_of( std::span<const uint8_t> args );

  /*! \brief Argument values a_1..a_k of column `c`. */
  static std::vector<uint8_t> arguments_of( uint32_t arity, uint64_t column );

  bool operator==( const truth_table& ) const = default;

private:
  uint32_t arity_ = 0u;
  std::vector<uint8_t> values_;
};

/*! \brief Table g with g(b_1..b_k) = f(a_1..a_k), where b_p = a_{order[p]}.
 *
 * `order` is a permutation of [0, k): the p-th argument of the result is the
 * `order[p]`-th argument of `table`.
 */
truth_table permute_arguments( const truth_table& table, std::span<const uint32_t> order );

/*! \brief Restriction of `table` to the arguments in `keep` (ascending,
 *         0-based), all other arguments fixed at the values in `fixed`
 *         (indexed by original argument position).
 */
truth_table restrict_arguments( const truth_table& table, std::span<const uint32_t> keep, std::span<const uint8_t> fixed );

/*! \brief A network state: node values x_1..x_n and the index gamma of
 *         delta_{2^n}^gamma = x_1 |x ... |x x_n.
 */
struct state_index
{
  std::vector<uint8_t> bits;

  std::size_t size() const noexcept { return bits.size(); }

  /*! \brief gamma - 1, i.e. sum_i (1 - x_i) 2^{n-i}; requires n <= 63. */
  uint64_t code() const;
  uint64_t gamma() const { return code() + 1u; }

  static state_index from_code( std::size_t n, uint64_t code );
  static state_index from_gamma( std::size_t n, uint64_t gamma );

  /*! \brief Parses "x1x2...xn" written as 0/1 characters. */
  static state_index from_string( std::string_view text );
  std::string to_string() const;

  bool operator==( const state_index& ) const = default;
  auto operator<=>( const state_index& ) const = default;
};

} // namespace bnpin
