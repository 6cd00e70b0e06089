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

#include <random>

#include <bnpin/network.hpp>
#include <bnpin/render.hpp>

#include "oracle/brute_force.hpp"
#include "oracle/dense.hpp"
#include "support.hpp"

using namespace bnpin;

namespace
{

const char* ex31 = "targets, factors\nx1, !x3\nx2, x3\nx3, 1\n";

const char* tlgl6 = R"(# reduced T-LGL network
x1, !(x4 | x6)
x2, !(x5 | x6)
x3, !(x1 | x6)
x4, x3 | !(x1 | x6)
x5, (x4 | (x3 & !x2)) & !x6
x6, x5 | x6
)";

} // namespace

TEST_CASE( "parser reads neighbors and truth tables" )
{
  const auto net = parse_network( ex31 );
  REQUIRE( net.size() == 3u );
  CHECK( net.max_in_degree() == 1u );
  CHECK( net.in_neighbors( 0u ) == std::vector<uint32_t>{ 2u } );
  CHECK( net.structure_matrix( 0u ) == logical_matrix( 2u, { 2u, 1u } ) );
  CHECK( net.structure_matrix( 1u ) == logical_matrix( 2u, { 1u, 2u } ) );
  CHECK( net.structure_matrix( 2u ) == logical_matrix( 2u, { 1u } ) );

  const auto t = parse_network( tlgl6 );
  REQUIRE( t.size() == 6u );
  CHECK( t.max_in_degree() == 4u );
  CHECK( t.in_neighbors( 4u ) == std::vector<uint32_t>{ 1u, 2u, 3u, 5u } );
}

TEST_CASE( "operator precedence and associativity" )
{
  const std::vector<std::string> vars{ "a", "b", "c" };
  const auto check = [&]( const char* text, auto fn ) {
    const auto t = parse_expression( text, vars );
    for ( const auto& x : oracle::assignments( 3u ) )
    {
      CHECK_MESSAGE( t.evaluate( x ) == fn( x[0] != 0u, x[1] != 0u, x[2] != 0u ), text );
    }
  };
  check( "a | b & c", []( bool a, bool b, bool c ) { return a || ( b && c ); } );
  check( "a ^ b & c", []( bool a, bool b, bool c ) { return a != ( b && c ); } );
  check( "a | b ^ c", []( bool a, bool b, bool c ) { return a || ( b != c ); } );
  check( "a -> b -> c", []( bool a, bool b, bool c ) { return !a || ( !b || c ); } );
  check( "a <-> b | c", []( bool a, bool b, bool c ) { return a == ( b || c ); } );
  check( "!a & b", []( bool a, bool b, bool ) { return !a && b; } );
  check( "!(a & b) | 0", []( bool a, bool b, bool ) { return !( a && b ); } );
  check( "a -> 1", []( bool, bool, bool ) { return true; } );
}

TEST_CASE( "parser reports errors with positions" )
{
  CHECK_THROWS_WITH_AS( parse_network( "" ), doctest::Contains( "no rules" ), parse_error );
  CHECK_THROWS_WITH_AS( parse_network( "# only a comment\n" ), doctest::Contains( "no rules" ), parse_error );
  CHECK_THROWS_WITH_AS( parse_network( "x1, x2\n" ), doctest::Contains( "x2" ), parse_error );
  CHECK_THROWS_AS( parse_network( "x1, x1\nx1, !x1\n" ), parse_error );
  CHECK_THROWS_AS( parse_network( "x1, (x1\n" ), parse_error );
  CHECK_THROWS_AS( parse_network( "x1 x1\n" ), parse_error );
  try
  {
    parse_network( "x1, x1\nx2, x1 & y\n" );
    FAIL( "expected a parse error" );
  }
  catch ( const parse_error& e )
  {
    CHECK( e.line() == 2u );
    CHECK( e.column() == 10u );
  }
}

TEST_CASE( "in-degree limit is enforced" )
{
  CHECK_THROWS_AS( parse_network( "a, a & b & c\nb, a\nc, b\n", 2u ), parse_error );
  CHECK_NOTHROW( parse_network( "a, a & b & c\nb, a\nc, b\n", 3u ) );
}

TEST_CASE( "minimize drops nonfunctional neighbors and is idempotent" )
{
  const auto net = parse_network( "x1, x2 | !x2\nx2, x1 & (x2 | !x2)\n" );
  CHECK_FALSE( net.is_minimal() );
  const auto m = minimize( net );
  CHECK( m.is_minimal() );
  CHECK( m.in_neighbors( 0u ).empty() );
  CHECK( m.in_neighbors( 1u ) == std::vector<uint32_t>{ 0u } );
  CHECK( minimize( m ) == m );

  std::mt19937_64 rng( 31u );
  for ( int trial = 0; trial < 50; ++trial )
  {
    const auto r = testing::random_network( 6u, 3u, rng );
    const auto mr = minimize( r );
    CHECK( minimize( mr ) == mr );
    for ( uint64_t c = 0; c < 64u; ++c )
    {
      const auto x = state_index::from_code( 6u, c );
      CHECK( oracle::simulate( mr, x.bits ) == oracle::simulate( r, x.bits ) );
    }
  }
}

TEST_CASE( "rules round-trip through text" )
{
  std::mt19937_64 rng( 32u );
  for ( int trial = 0; trial < 30; ++trial )
  {
    const auto net = minimize( testing::random_network( 5u, 3u, rng ) );
    CHECK( parse_network( to_rules( net ) ) == net );
  }
}

TEST_CASE( "interaction digraph of the T-LGL network" )
{
  const auto g = build_interaction_digraph( parse_network( tlgl6 ) );
  CHECK( g.vertex_count() == 6u );
  CHECK( g.edge_count() == 15u );
  CHECK( g.find( { 5u, 5u } ).has_value() );
  CHECK_FALSE( g.find( { 0u, 5u } ).has_value() );
  CHECK_FALSE( topological_order( g ).has_value() );
  CHECK_FALSE( find_cycle( g ).empty() );

  const auto acyclic = build_interaction_digraph( parse_network( ex31 ) );
  const auto order = topological_order( acyclic );
  REQUIRE( order.has_value() );
  CHECK( order->front() == 2u );
  CHECK( find_cycle( acyclic ).empty() );
}

TEST_CASE( "algebraic form of the three-node network" )
{
  CHECK( algebraic_form( parse_network( ex31 ) ) == logical_matrix( 8u, { 5u, 3u, 5u, 3u, 5u, 3u, 5u, 3u } ) );
  std::mt19937_64 rng( 1u );
  CHECK_THROWS_AS( algebraic_form( testing::random_network( 5u, 2u, rng ), 4u ), cap_exceeded );
}

TEST_CASE( "algebraic form agrees with simulation" )
{
  std::mt19937_64 rng( 33u );
  for ( int trial = 0; trial < 20; ++trial )
  {
    const auto net = testing::random_network( 5u, 3u, rng );
    const auto l = algebraic_form( net );
    for ( uint64_t c = 0; c < 32u; ++c )
    {
      const auto x = state_index::from_code( 5u, c );
      state_index next{ oracle::simulate( net, x.bits ) };
      CHECK( l[c] == next.gamma() );
    }
  }
}
