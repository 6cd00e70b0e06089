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

#include <bnpin/logical_matrix.hpp>

#include <cassert>
#include <numeric>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace bnpin
{

logical_matrix make_unchecked( uint64_t rows, std::vector<uint64_t> col_index )
{
  logical_matrix m;
  m.rows_ = rows;
  m.col_index_ = std::move( col_index );
  return m;
}

logical_matrix::logical_matrix( uint64_t rows, std::vector<uint64_t> col_index )
    : rows_( rows ), col_index_( std::move( col_index ) )
{
  if ( !is_power_of_two( rows_ ) )
  {
    throw dimension_error( fmt::format( "row count {} is not a power of 2", rows_ ) );
  }
  if ( !is_power_of_two( col_index_.size() ) )
  {
    throw dimension_error( fmt::format( "column count {} is not a power of 2", col_index_.size() ) );
  }
  for ( auto i : col_index_ )
  {
    if ( i < 1u || i > rows_ )
    {
      throw dimension_error( fmt::format( "column entry {} outside [1, {}]", i, rows_ ) );
    }
  }
}

logical_matrix logical_matrix::delta( uint64_t rows, uint64_t i )
{
  return logical_matrix( rows, { i } );
}

std::string logical_matrix::to_string() const
{
  return fmt::format( "delta_{}[{}]", rows_, fmt::join( col_index_, "," ) );
}

logical_matrix identity( uint64_t n )
{
  std::vector<uint64_t> cols( n );
  std::iota( cols.begin(), cols.end(), uint64_t{ 1 } );
  return logical_matrix( n, std::move( cols ) );
}

logical_matrix multiply( const logical_matrix& a, const logical_matrix& b )
{
  if ( a.cols() != b.rows() )
  {
    throw dimension_error( fmt::format( "cannot multiply {}x{} by {}x{}", a.rows(), a.cols(), b.rows(), b.cols() ) );
  }
  std::vector<uint64_t> cols( b.cols() );
  for ( uint64_t j = 0; j < b.cols(); ++j )
  {
    cols[j] = a[b[j] - 1u];
  }
  return make_unchecked( a.rows(), std::move( cols ) );
}

logical_matrix kron( const logical_matrix& a, const logical_matrix& b )
{
  std::vector<uint64_t> cols( a.cols() * b.cols() );
  for ( uint64_t i = 0; i < a.cols(); ++i )
  {
    for ( uint64_t j = 0; j < b.cols(); ++j )
    {
      cols[i * b.cols() + j] = ( a[i] - 1u ) * b.rows() + b[j];
    }
  }
  return make_unchecked( a.rows() * b.rows(), std::move( cols ) );
}

namespace
{

/* A (x) I_t without materializing I_t */
logical_matrix kron_identity( const logical_matrix& a, uint64_t t )
{
  if ( t == 1u )
  {
    return a;
  }
  std::vector<uint64_t> cols( a.cols() * t );
  for ( uint64_t j = 0; j < a.cols(); ++j )
  {
    for ( uint64_t s = 0; s < t; ++s )
    {
      cols[j * t + s] = ( a[j] - 1u ) * t + s + 1u;
    }
  }
  return make_unchecked( a.rows() * t, std::move( cols ) );
}

} // namespace

logical_matrix stp( const logical_matrix& a, const logical_matrix& b )
{
  const auto l = std::lcm( a.cols(), b.rows() );
  auto result = multiply( kron_identity( a, l / a.cols() ), kron_identity( b, l / b.rows() ) );
  assert( result.cols() == b.cols() * ( l / b.rows() ) );
  return result;
}

logical_matrix swap_matrix( uint64_t m, uint64_t n )
{
  /* column of s1 |x s2 = delta_m^i |x delta_n^j is (i-1)n + j; it maps to
   * delta_n^j |x delta_m^i = delta_{mn}^{(j-1)m + i} */
  std::vector<uint64_t> cols( m * n );
  for ( uint64_t i = 0; i < m; ++i )
  {
    for ( uint64_t j = 0; j < n; ++j )
    {
      cols[i * n + j] = j * m + i + 1u;
    }
  }
  return make_unchecked( m * n, std::move( cols ) );
}

logical_matrix power_reducing_matrix( uint32_t n )
{
  const uint64_t size = uint64_t{ 1 } << n;
  std::vector<uint64_t> cols( size );
  for ( uint64_t i = 0; i < size; ++i )
  {
    cols[i] = i * size + i + 1u;
  }
  return make_unchecked( size * size, std::move( cols ) );
}

logical_matrix ones_row_collapse( const logical_matrix& a, uint32_t trailing_vars )
{
  const uint64_t block = uint64_t{ 1 } << trailing_vars;
  std::vector<uint64_t> cols( a.cols() * block );
  for ( uint64_t j = 0; j < a.cols(); ++j )
  {
    std::fill_n( cols.begin() + j * block, block, a[j] );
  }
  return make_unchecked( a.rows(), std::move( cols ) );
}

logical_matrix structure_matrix( std::span<const uint8_t> outputs )
{
  if ( !is_power_of_two( outputs.size() ) )
  {
    throw dimension_error( fmt::format( "truth table length {} is not a power of 2", outputs.size() ) );
  }
  std::vector<uint64_t> cols( outputs.size() );
  for ( std::size_t c = 0; c < outputs.size(); ++c )
  {
    cols[c] = outputs[c] ? 1u : 2u;
  }
  return make_unchecked( 2u, std::move( cols ) );
}

} // namespace bnpin
