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

#include <bnpin/truth_table.hpp>

#include <algorithm>
#include <cassert>

#include <fmt/format.h>

namespace bnpin
{

truth_table::truth_table( uint32_t arity, bool fill )
    : arity_( arity ), values_( uint64_t{ 1 } << arity, fill ? 1u : 0u )
{
}

truth_table::truth_table( std::vector<uint8_t> values ) : values_( std::move( values ) )
{
  if ( !is_power_of_two( values_.size() ) )
  {
    throw dimension_error( fmt::format( "truth table length {} is not a power of 2", values_.size() ) );
  }
  while ( ( uint64_t{ 1 } << arity_ ) < values_.size() )
  {
    ++arity_;
  }
  for ( auto& v : values_ )
  {
    v = v ? 1u : 0u;
  }
}

truth_table truth_table::constant( bool value )
{
  return truth_table( 0u, value );
}

truth_table truth_table::from_function( uint32_t arity, const std::function<bool( std::span<const uint8_t> )>& fn )
{
  truth_table table( arity );
  for ( uint64_t c = 0; c < table.size(); ++c )
  {
    table.set( c, fn( arguments_of( arity, c ) ) );
  }
  return table;
}

truth_table truth_table::from_structure_matrix( const logical_matrix& m )
{
  if ( m.rows() != 2u )
  {
    throw dimension_error( fmt::format( "structure matrix must have 2 rows, got {}", m.rows() ) );
  }
  std::vector<uint8_t> values( m.cols() );
  for ( uint64_t c = 0; c < m.cols(); ++c )
  {
    values[c] = m[c] == 1u ? 1u : 0u;
  }
  return truth_table( std::move( values ) );
}

bool truth_table::is_constant() const
{
  return std::all_of( values_.begin(), values_.end(), [&]( auto v ) { return v == values_.front(); } );
}

bool truth_table::depends_on( uint32_t var ) const
{
  assert( var < arity_ );
  const uint64_t mask = uint64_t{ 1 } << ( arity_ - 1u - var );
  for ( uint64_t c = 0; c < values_.size(); ++c )
  {
    if ( ( c & mask ) == 0u && values_[c] != values_[c | mask] )
    {
      return true;
    }
  }
  return false;
}

uint64_t truth_table::column_of( std::span<const uint8_t> args )
{
  uint64_t c = 0u;
  for ( auto a : args )
  {
    c = ( c << 1u ) | ( a ? 0u : 1u );
  }
  return c;
}

std::vector<uint8_t> truth_table::arguments_of( uint32_t arity, uint64_t column )
{
  std::vector<uint8_t> args( arity );
  for ( uint32_t i = 0; i < arity; ++i )
  {
    args[i] = ( ( column >> ( arity - 1u - i ) ) & 1u ) ? 0u : 1u;
  }
  return args;
}

truth_table permute_arguments( const truth_table& table, std::span<const uint32_t> order )
{
  const auto k = table.arity();
  assert( order.size() == k );
  truth_table result( k );
  for ( uint64_t c = 0; c < result.size(); ++c )
  {
    /* bit of argument p sits at position k-1-p in both tables */
    uint64_t src = 0u;
    for ( uint32_t p = 0; p < k; ++p )
    {
      const auto bit = ( c >> ( k - 1u - p ) ) & 1u;
      src |= bit << ( k - 1u - order[p] );
    }
    result.set( c, table[src] );
  }
  return result;
}

truth_table restrict_arguments( const truth_table& table, std::span<const uint32_t> keep, std::span<const uint8_t> fixed )
{
  const auto k = table.arity();
  const auto kk = static_cast<uint32_t>( keep.size() );
  assert( fixed.size() == k );

  uint64_t base = 0u;
  for ( uint32_t i = 0; i < k; ++i )
  {
    if ( !fixed[i] )
    {
      base |= uint64_t{ 1 } << ( k - 1u - i );
    }
  }
  for ( auto v : keep )
  {
    base &= ~( uint64_t{ 1 } << ( k - 1u - v ) );
  }

  truth_table result( kk );
  for ( uint64_t c = 0; c < result.size(); ++c )
  {
    uint64_t src = base;
    for ( uint32_t p = 0; p < kk; ++p )
    {
      const auto bit = ( c >> ( kk - 1u - p ) ) & 1u;
      src |= bit << ( k - 1u - keep[p] );
    }
    result.set( c, table[src] );
  }
  return result;
}

uint64_t state_index::code() const
{
  if ( bits.size() > 63u )
  {
    throw dimension_error( fmt::format( "state index of a {}-node network does not fit in 64 bits", bits.size() ) );
  }
  return truth_table::column_of( bits );
}

state_index state_index::from_code( std::size_t n, uint64_t code )
{
  return { truth_table::arguments_of( static_cast<uint32_t>( n ), code ) };
}

state_index state_index::from_gamma( std::size_t n, uint64_t gamma )
{
  if ( n > 63u || gamma < 1u || gamma > ( uint64_t{ 1 } << n ) )
  {
    throw dimension_error( fmt::format( "gamma {} outside [1, 2^{}]", gamma, n ) );
  }
  return from_code( n, gamma - 1u );
}

state_index state_index::from_string( std::string_view text )
{
  state_index s;
  s.bits.reserve( text.size() );
  for ( auto ch : text )
  {
    if ( ch != '0' && ch != '1' )
    {
      throw std::invalid_argument( fmt::format( "state '{}' must consist of 0/1 characters", text ) );
    }
    s.bits.push_back( ch == '1' ? 1u : 0u );
  }
  return s;
}

std::string state_index::to_string() const
{
  std::string s( bits.size(), '0' );
  for ( std::size_t i = 0; i < bits.size(); ++i )
  {
    if ( bits[i] )
    {
      s[i] = '1';
    }
  }
  return s;
}

} // namespace bnpin
