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
  \file logical_matrix.hpp
  \brief Column-index representation of logical matrices and the
         semi-tensor product algebra over them

  A logical matrix has exactly one 1 per column.  We never store the dense
  0/1 array; column `j` is kept as the row index `i` of the unit vector
  delta_rows^i it equals (1-based, to match the delta notation).
*/

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bnpin
{

class dimension_error : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

constexpr bool is_power_of_two( uint64_t v ) noexcept
{
  return v != 0u && ( v & ( v - 1u ) ) == 0u;
}

class logical_matrix
{
public:
  logical_matrix() = default;

  /*! \brief Builds delta_rows[ col_index... ].
   *
   * Both `rows` and the column count must be powers of 2 and every entry
   * must lie in [1, rows]; otherwise `dimension_error` is thrown.
   */
  logical_matrix( uint64_t rows, std::vector<uint64_t> col_index );

  /*! \brief Unit column vector delta_rows^i. */
  static logical_matrix delta( uint64_t rows, uint64_t i );

  uint64_t rows() const noexcept { return rows_; }
  uint64_t cols() const noexcept { return col_index_.size(); }

  /* 1-based row index of the single 1 in 0-based column j */
  uint64_t operator[]( uint64_t j ) const { return col_index_[j]; }
  std::span<const uint64_t> columns() const noexcept { return col_index_; }

  /*! \brief Dense entry (row, col), both 0-based. */
  bool at( uint64_t row, uint64_t col ) const { return col_index_[col] == row + 1u; }

  bool operator==( const logical_matrix& ) const = default;

  /*! \brief Renders as `delta_R[i1,i2,...]`. */
  std::string to_string() const;

private:
  friend logical_matrix make_unchecked( uint64_t rows, std::vector<uint64_t> col_index );

  uint64_t rows_ = 0u;
  std::vector<uint64_t> col_index_;
};

/*! \brief Identity I_n. */
logical_matrix identity( uint64_t n );

/*! \brief Ordinary product A * B; requires A.cols() == B.rows(). */
logical_matrix multiply( const logical_matrix& a, const logical_matrix& b );

/*! \brief Kronecker product A (x) B. */
logical_matrix kron( const logical_matrix& a, const logical_matrix& b );

/*! \brief Left semi-tensor product A |x B = (A (x) I_{l/n})(B (x) I_{l/p}),
 *         with l = lcm(n, p) for A of size m x n and B of size p x q.
 */
logical_matrix stp( const logical_matrix& a, const logical_matrix& b );

/*! \brief Swap matrix W_[m,n] with W (s1 |x s2) = s2 |x s1 for s1 in Delta_m,
 *         s2 in Delta_n.
 */
logical_matrix swap_matrix( uint64_t m, uint64_t n );

/*! \brief Power-reducing matrix Phi_{2^n} with Phi x = x |x x. */
logical_matrix power_reducing_matrix( uint32_t n );

/*! \brief Returns A (I_{cols(A)} (x) 1^T_{2^t}), i.e. the function that
 *         ignores its trailing `trailing_vars` Boolean arguments.
 */
logical_matrix ones_row_collapse( const logical_matrix& a, uint32_t trailing_vars );

/*! \brief Structure matrix of a Boolean function given by its outputs.
 *
 * `outputs[c]` is the function value on the c-th column of the canonical
 * argument product a_1 |x ... |x a_k, i.e. all-true first, all-false last.
 */
logical_matrix structure_matrix( std::span<const uint8_t> outputs );

} // namespace bnpin
