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

/* Random instances shared by the unit and acceptance tests. */

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <bnpin/network.hpp>
#include <bnpin/truth_table.hpp>

namespace testing
{

inline bnpin::truth_table random_table( uint32_t arity, std::mt19937_64& rng )
{
  std::vector<uint8_t> values( std::size_t{ 1 } << arity );
  for ( auto& v : values )
  {
    v = static_cast<uint8_t>( rng() & 1u );
  }
  return bnpin::truth_table( std::move( values ) );
}

/* `acyclic` draws neighbors among lower-indexed nodes only */
inline bnpin::boolean_network random_network( uint32_t n, uint32_t max_in, std::mt19937_64& rng, bool acyclic = false )
{
  bnpin::boolean_network net;
  for ( uint32_t i = 0; i < n; ++i )
  {
    const uint32_t pool = acyclic ? i : n;
    const uint32_t k = std::min<uint32_t>( pool, static_cast<uint32_t>( rng() % ( max_in + 1u ) ) );
    std::vector<uint32_t> candidates( pool );
    for ( uint32_t j = 0; j < pool; ++j )
    {
      candidates[j] = j;
    }
    std::shuffle( candidates.begin(), candidates.end(), rng );
    std::vector<uint32_t> neighbors( candidates.begin(), candidates.begin() + k );
    std::sort( neighbors.begin(), neighbors.end() );
    net.add_node( "x" + std::to_string( i + 1u ), neighbors, random_table( k, rng ) );
  }
  return net;
}

inline bnpin::state_index random_state( std::size_t n, std::mt19937_64& rng )
{
  bnpin::state_index s;
  s.bits.resize( n );
  for ( auto& b : s.bits )
  {
    b = static_cast<uint8_t>( rng() & 1u );
  }
  return s;
}

inline std::vector<bnpin::edge> random_edges( uint32_t vertices, std::size_t count, std::mt19937_64& rng )
{
  std::vector<bnpin::edge> all;
  for ( uint32_t s = 0; s < vertices; ++s )
  {
    for ( uint32_t t = 0; t < vertices; ++t )
    {
      all.push_back( { s, t } );
    }
  }
  std::shuffle( all.begin(), all.end(), rng );
  all.resize( std::min( count, all.size() ) );
  std::sort( all.begin(), all.end() );
  return all;
}

} // namespace testing
