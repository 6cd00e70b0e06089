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

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include <bnpin/truth_table.hpp>

#include "oracle/dense.hpp"
#include "support.hpp"

using namespace bnpin;

TEST_CASE( "truth tables match the structure-matrix oracle" )
{
  std::mt19937_64 rng( 21u );
  for ( uint32_t k = 0; k <= 4u; ++k )
  {
    const auto t = testing::random_table( k, rng );
    const auto expected = oracle::structure_matrix( k, [&]( const std::vector<uint8_t>& a ) { return t.evaluate( a ); } );
    CHECK( oracle::from_logical( t.structure_matrix() ) == expected );
    CHECK( truth_table::from_structure_matrix( t.structure_matrix() ) == t );
  }
}

TEST_CASE( "column order puts the all-true assignment first" )
{
  const std::vector<uint8_t> ones{ 1u, 1u, 1u };
  const std::vector<uint8_t> zeros{ 0u, 0u, 0u };
  const std::vector<uint8_t> mixed{ 1u, 0u, 1u };
  CHECK( truth_table::column_of( ones ) == 0u );
  CHECK( truth_table::column_of( zeros ) == 7u );
  CHECK( truth_table::column_of( mixed ) == 2u );
  CHECK( truth_table::arguments_of( 3u, 2u ) == mixed );
}

TEST_CASE( "dependence detects functional variables" )
{
  /* x1 & (x2 | !x2) */
  const auto t = truth_table::from_function( 2u, []( std::span<const uint8_t> a ) { return a[0] != 0u; } );
  CHECK( t.depends_on( 0u ) );
  CHECK_FALSE( t.depends_on( 1u ) );
  CHECK( truth_table::constant( true ).is_constant() );
  CHECK_FALSE( t.is_constant() );
}

TEST_CASE( "argument permutation agrees with swap-matrix products" )
{
  /* moving arguments is right multiplication by a product of adjacent swaps */
  std::mt19937_64 rng( 22u );
  for ( uint32_t k = 1; k <= 4u; ++k )
  {
    for ( int trial = 0; trial < 20; ++trial )
    {
      const auto t = testing::random_table( k, rng );
      std::vector<uint32_t> order( k );
      std::iota( order.begin(), order.end(), 0u );
      std::shuffle( order.begin(), order.end(), rng );
      const auto permuted = permute_arguments( t, order );

      /* P maps y_1 |x ... |x y_k (new order) to x_1 |x ... |x x_k (old order) */
      auto current = order;
      oracle::dense p = oracle::identity( std::size_t{ 1 } << k );
      for ( uint32_t pass = 0; pass < k; ++pass )
      {
        for ( uint32_t i = 0; i + 1u < k; ++i )
        {
          if ( current[i] > current[i + 1u] )
          {
            std::swap( current[i], current[i + 1u] );
            const auto adjacent = oracle::kron( oracle::kron( oracle::identity( std::size_t{ 1 } << i ), oracle::swap_matrix( 2u, 2u ) ),
                                                oracle::identity( std::size_t{ 1 } << ( k - i - 2u ) ) );
            p = oracle::multiply( adjacent, p );
          }
        }
      }
      CHECK( oracle::from_logical( permuted.structure_matrix() ) == oracle::multiply( oracle::from_logical( t.structure_matrix() ), p ) );
    }
  }
}

TEST_CASE( "restriction fixes the dropped arguments" )
{
  std::mt19937_64 rng( 23u );
  for ( int trial = 0; trial < 50; ++trial )
  {
    const auto t = testing::random_table( 4u, rng );
    const std::vector<uint32_t> keep{ 0u, 2u };
    const std::vector<uint8_t> fixed{ 0u, static_cast<uint8_t>( rng() & 1u ), 0u, static_cast<uint8_t>( rng() & 1u ) };
    const auto r = restrict_arguments( t, keep, fixed );
    REQUIRE( r.arity() == 2u );
    for ( const auto& a : oracle::assignments( 2u ) )
    {
      auto full = fixed;
      full[0] = a[0];
      full[2] = a[1];
      CHECK( r.evaluate( a ) == t.evaluate( full ) );
    }
  }
}

TEST_CASE( "state indices round-trip between bits, codes and gamma" )
{
  const auto s = state_index::from_string( "100001" );
  CHECK( s.gamma() == 31u );
  CHECK( state_index::from_gamma( 6u, 31u ) == s );
  CHECK( state_index::from_string( "101" ).gamma() == 3u );
  CHECK( state_index::from_gamma( 3u, 7u ).to_string() == "001" );
  CHECK( state_index::from_gamma( 3u, 5u ).to_string() == "011" );
  CHECK_THROWS( state_index::from_string( "10a" ) );
  CHECK_THROWS( state_index::from_gamma( 3u, 9u ) );
  for ( uint64_t c = 0; c < 64u; ++c )
  {
    CHECK( state_index::from_code( 6u, c ).code() == c );
  }
}
