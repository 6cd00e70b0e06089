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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <bnpin/cli.hpp>
#include <bnpin/network.hpp>
#include <json.hpp>

#include "support.hpp"

using namespace bnpin;

namespace
{

struct outcome
{
  int code;
  std::string out;
  std::string err;
};

outcome run_cli( std::vector<std::string> args )
{
  std::ostringstream out, err;
  const int code = run( args, out, err );
  return { code, out.str(), err.str() };
}

std::string corpus( const std::string& name )
{
  return std::string( BNPIN_CORPUS_DIR ) + "/" + name;
}

std::filesystem::path scratch( const std::string& name )
{
  const auto dir = std::filesystem::temp_directory_path() / "bnpin_cli_tests";
  std::filesystem::create_directories( dir );
  return dir / name;
}

std::string read( const std::filesystem::path& p )
{
  std::ifstream in( p );
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

} // namespace

TEST_CASE( "parse reports n and the largest in-degree" )
{
  const auto t = run_cli( { "parse", corpus( "tlgl6.bnet" ) } );
  REQUIRE( t.code == exit_ok );
  const auto j = nlohmann::json::parse( t.out );
  CHECK( j["n"] == 6 );
  CHECK( j["K"] == 4 );
  CHECK( j["nodes"][4]["in_neighbors"] == nlohmann::json::array( { "x2", "x3", "x4", "x6" } ) );

  const auto e = nlohmann::json::parse( run_cli( { "parse", corpus( "ex31.bnet" ) } ).out );
  CHECK( e["n"] == 3 );
  CHECK( e["K"] == 1 );
}

TEST_CASE( "input errors exit with code 2" )
{
  const auto empty = scratch( "empty.bnet" );
  std::ofstream( empty ).close();
  const auto r = run_cli( { "parse", empty.string() } );
  CHECK( r.code == exit_input_error );
  CHECK( r.err.find( "no rules" ) != std::string::npos );

  CHECK( run_cli( { "parse", corpus( "missing.bnet" ) } ).code == exit_input_error );
  CHECK( run_cli( { "frobnicate" } ).code == exit_input_error );
  CHECK( run_cli( { "verify", corpus( "tlgl6.bnet" ) } ).code == exit_input_error );
  CHECK( run_cli( { "verify", corpus( "tlgl6.bnet" ), "--target", "1001" } ).code == exit_input_error );
  CHECK( run_cli( { "verify", corpus( "tlgl6.bnet" ), "--target", "100001", "--gamma", "31" } ).code == exit_input_error );
  CHECK( run_cli( { "verify", corpus( "tlgl6.bnet" ), "--target", "100001", "--sampled" } ).code == exit_input_error );
  CHECK( run_cli( { "graph", corpus( "tlgl6.bnet" ), "--format", "svg" } ).code == exit_input_error );
  CHECK( run_cli( { "parse", corpus( "fragments/lgl29_controllers.bnet" ) } ).code == exit_input_error );
}

TEST_CASE( "help exits successfully" )
{
  const auto r = run_cli( { "--help" } );
  CHECK( r.code == exit_ok );
  CHECK( r.out.find( "synthesize" ) != std::string::npos );
}

TEST_CASE( "verify distinguishes the uncontrolled and controlled T-LGL networks" )
{
  const auto open = run_cli( { "verify", corpus( "tlgl6.bnet" ), "--target", "100001" } );
  CHECK( open.code == exit_not_verified );
  CHECK( nlohmann::json::parse( open.out )["verified"] == false );

  const auto closed = run_cli( { "verify", corpus( "tlgl6_controlled.bnet" ), "--target", "100001", "--exhaustive" } );
  CHECK( closed.code == exit_ok );
  const auto j = nlohmann::json::parse( closed.out );
  CHECK( j["verified"] == true );
  CHECK( j["mode"] == "exhaustive" );
  CHECK( j["target_gamma"] == 31 );

  CHECK( run_cli( { "verify", corpus( "tlgl6_controlled.bnet" ), "--gamma", "31" } ).code == exit_ok );
}

TEST_CASE( "graph, stg and attractors exports" )
{
  const auto g = run_cli( { "graph", corpus( "ex31.bnet" ) } );
  CHECK( g.code == exit_ok );
  CHECK( g.out.find( "\"x3\" -> \"x1\";" ) != std::string::npos );
  const auto gj = nlohmann::json::parse( run_cli( { "graph", corpus( "ex31.bnet" ), "--format", "json" } ).out );
  CHECK( gj["edges"].size() == 2u );

  const auto s = run_cli( { "stg", corpus( "ex31.bnet" ) } );
  CHECK( s.code == exit_ok );
  CHECK( s.out.find( "\"000\" -> \"101\";" ) != std::string::npos );

  const auto a = nlohmann::json::parse( run_cli( { "attractors", corpus( "tlgl6.bnet" ) } ).out );
  CHECK( a["attractors"].size() == 2u );
}

TEST_CASE( "exhaustive commands beyond the cap exit with code 3" )
{
  std::mt19937_64 rng( 81u );
  const auto big = scratch( "big.bnet" );
  std::ofstream( big ) << to_rules( testing::random_network( 30u, 2u, rng ) );
  CHECK( run_cli( { "attractors", big.string() } ).code == exit_cap_exceeded );
  CHECK( run_cli( { "stg", big.string() } ).code == exit_cap_exceeded );
  CHECK( run_cli( { "verify", big.string(), "--target", std::string( 30u, '0' ), "--exhaustive" } ).code == exit_cap_exceeded );
  CHECK( run_cli( { "stg", big.string(), "--seed", "3", "--samples", "4" } ).code == exit_ok );
}

TEST_CASE( "synthesize emits a verified plan and controlled rules" )
{
  const auto rules = scratch( "tlgl6_rules.bnet" );
  const auto r = run_cli( { "synthesize", corpus( "tlgl6.bnet" ), "--target", "100001", "--rules-out", rules.string() } );
  REQUIRE( r.code == exit_ok );
  const auto plan = nlohmann::json::parse( r.out );
  CHECK( plan["target"]["gamma"] == 31 );
  CHECK( plan["verification"]["verified"] == true );
  CHECK( plan["sets"]["U_plus"].size() <= 3u );
  CHECK( run_cli( { "verify", rules.string(), "--target", "100001" } ).code == exit_ok );

  const auto small = nlohmann::json::parse( run_cli( { "synthesize", corpus( "ex31.bnet" ), "--target", "001" } ).out );
  CHECK( small["costs"]["c3"] == 1 );
  REQUIRE( small["pinned_step2"].size() == 1u );
  CHECK( small["pinned_step2"][0]["node"] == "x2" );

  const auto stable = nlohmann::json::parse( run_cli( { "synthesize", corpus( "ex31.bnet" ), "--gamma", "5" } ).out );
  CHECK( stable["pinned_step1"].empty() );
  CHECK( stable["pinned_step2"].empty() );

  const auto unverified = nlohmann::json::parse( run_cli( { "synthesize", corpus( "ex31.bnet" ), "--gamma", "3", "--no-verify" } ).out );
  CHECK( unverified["verification"].is_null() );
}

TEST_CASE( "commands are deterministic" )
{
  const auto a = run_cli( { "synthesize", corpus( "tlgl6.bnet" ), "--target", "100001", "--greedy-fas" } );
  const auto b = run_cli( { "synthesize", corpus( "tlgl6.bnet" ), "--target", "100001", "--greedy-fas" } );
  CHECK( a.code == exit_ok );
  CHECK( a.out == b.out );

  std::mt19937_64 rng( 82u );
  const auto big = scratch( "big_acyclic.bnet" );
  std::ofstream( big ) << to_rules( testing::random_network( 40u, 3u, rng, true ) );
  const auto s1 = run_cli( { "synthesize", big.string(), "--target", std::string( 40u, '1' ), "--samples", "500", "--seed", "7" } );
  const auto s2 = run_cli( { "synthesize", big.string(), "--target", std::string( 40u, '1' ), "--samples", "500", "--seed", "7" } );
  CHECK( s1.code == exit_ok );
  CHECK( s1.out == s2.out );
  CHECK( nlohmann::json::parse( s1.out )["verification"]["mode"] == "sampled" );
  CHECK( run_cli( { "synthesize", big.string(), "--target", std::string( 40u, '1' ) } ).code == exit_input_error );
}

TEST_CASE( "output can be written to a file" )
{
  const auto path = scratch( "summary.json" );
  const auto r = run_cli( { "parse", corpus( "ex31.bnet" ), "--out", path.string() } );
  CHECK( r.code == exit_ok );
  CHECK( r.out.empty() );
  CHECK( nlohmann::json::parse( read( path ) )["n"] == 3 );
}
