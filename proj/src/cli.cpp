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

#include <bnpin/cli.hpp>
#include <bnpin/dynamics.hpp>
#include <bnpin/network.hpp>
#include <bnpin/render.hpp>
#include <bnpin/report.hpp>
#include <bnpin/synthesis.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>

namespace bnpin
{

namespace
{

class input_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct run_config
{
  std::string input;
  std::optional<std::string> target_bits;
  std::optional<uint64_t> target_gamma;
  bool exact_fas = false;
  bool greedy_fas = false;
  bool ending_vertices_first = false;
  std::size_t cycle_cap = default_cycle_cap;
  std::size_t optimal_cap = default_optimal_cap;
  std::size_t exhaustive_cap = default_exhaustive_cap;
  std::size_t samples = default_samples;
  std::size_t steps = 0u;
  std::optional<uint64_t> seed;
  bool exhaustive = false;
  bool sampled = false;
  bool no_verify = false;
  std::string policy = "target";
  std::optional<std::string> out;
  std::optional<std::string> rules_out;
  std::string format;
};

std::string read_file( const std::string& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw input_error( fmt::format( "cannot open '{}'", path ) );
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file( const std::string& path, const std::string& text )
{
  std::ofstream f( path, std::ios::binary );
  if ( !f || !( f << text ) )
  {
    throw input_error( fmt::format( "cannot write '{}'", path ) );
  }
}

boolean_network load( const run_config& cfg )
{
  try
  {
    return parse_network( read_file( cfg.input ) );
  }
  catch ( const parse_error& e )
  {
    throw input_error( fmt::format( "{}:{}", cfg.input, e.what() ) );
  }
}

state_index target_of( const run_config& cfg, const boolean_network& net )
{
  if ( cfg.target_bits.has_value() == cfg.target_gamma.has_value() )
  {
    throw input_error( "exactly one of --target and --gamma is required" );
  }
  try
  {
    const auto target = cfg.target_bits ? state_index::from_string( *cfg.target_bits ) : state_index::from_gamma( net.size(), *cfg.target_gamma );
    if ( target.size() != net.size() )
    {
      throw input_error( fmt::format( "target has {} values, network has {} nodes", target.size(), net.size() ) );
    }
    return target;
  }
  catch ( const std::invalid_argument& e )
  {
    throw input_error( e.what() );
  }
  catch ( const std::out_of_range& e )
  {
    throw input_error( e.what() );
  }
}

verification_options verification_of( const run_config& cfg, const boolean_network& net )
{
  verification_options opts;
  opts.exhaustive_cap = cfg.exhaustive_cap;
  opts.samples = cfg.samples;
  opts.steps = cfg.steps;
  opts.seed = cfg.seed;
  if ( cfg.sampled || ( !cfg.exhaustive && net.size() > cfg.exhaustive_cap ) )
  {
    opts.mode = verification_mode::sampled;
    if ( !cfg.seed )
    {
      throw input_error( "sampled verification requires --seed" );
    }
  }
  return opts;
}

void emit( const run_config& cfg, std::ostream& out, const std::string& text )
{
  if ( cfg.out )
  {
    write_file( *cfg.out, text );
  }
  else
  {
    out << text;
  }
}

std::string dump( const json& j )
{
  return j.dump( 2 ) + "\n";
}

int cmd_parse( const run_config& cfg, std::ostream& out )
{
  emit( cfg, out, dump( network_summary( load( cfg ) ) ) );
  return exit_ok;
}

int cmd_graph( const run_config& cfg, std::ostream& out )
{
  const auto net = load( cfg );
  const auto g = build_interaction_digraph( net );
  if ( cfg.format == "json" )
  {
    json j;
    j["vertices"] = net.names();
    auto edges = json::array();
    for ( const auto& e : g.edges() )
    {
      edges.push_back( json::array( { net.name( e.source ), net.name( e.target ) } ) );
    }
    j["edges"] = std::move( edges );
    emit( cfg, out, dump( j ) );
  }
  else
  {
    emit( cfg, out, to_dot( g, net ) );
  }
  return exit_ok;
}

int cmd_stg( const run_config& cfg, std::ostream& out )
{
  const auto net = load( cfg );
  std::vector<transition> transitions;
  if ( net.size() <= cfg.exhaustive_cap || !cfg.seed )
  {
    transitions = state_transition_graph( net, cfg.exhaustive_cap );
  }
  else
  {
    /* beyond the cap: orbits of seeded random initial states */
    transitions = state_transition_graph( net, random_states( net.size(), cfg.samples, *cfg.seed ) );
  }
  if ( cfg.format == "json" )
  {
    auto edges = json::array();
    for ( const auto& t : transitions )
    {
      edges.push_back( json::array( { t.from.to_string(), t.to.to_string() } ) );
    }
    json j;
    j["n"] = net.size();
    j["transitions"] = std::move( edges );
    emit( cfg, out, dump( j ) );
  }
  else
  {
    emit( cfg, out, to_dot( transitions ) );
  }
  return exit_ok;
}

int cmd_attractors( const run_config& cfg, std::ostream& out )
{
  const auto net = load( cfg );
  emit( cfg, out, dump( to_json( find_attractors( net, cfg.exhaustive_cap ), net ) ) );
  return exit_ok;
}

int cmd_verify( const run_config& cfg, std::ostream& out )
{
  const auto net = load( cfg );
  const auto target = target_of( cfg, net );
  const auto report = verify_global_stability( net, target, verification_of( cfg, net ) );
  emit( cfg, out, dump( to_json( report ) ) );
  return report.verified ? exit_ok : exit_not_verified;
}

int cmd_synthesize( const run_config& cfg, std::ostream& out, std::ostream& err )
{
  const auto net = load( cfg );
  const auto target = target_of( cfg, net );

  synthesis_options opts;
  opts.method = cfg.greedy_fas ? fas_method::greedy : fas_method::exact;
  opts.fas.cycle_cap = cfg.cycle_cap;
  opts.fas.optimal_cap = cfg.optimal_cap;
  opts.fas.ending_vertices_first = cfg.ending_vertices_first;
  if ( cfg.policy == "target" )
  {
    opts.policy = freeze_policy::target;
  }
  else if ( cfg.policy == "one" )
  {
    opts.policy = freeze_policy::one;
  }
  else
  {
    opts.policy = freeze_policy::zero;
  }
  opts.verify = !cfg.no_verify;
  if ( opts.verify )
  {
    opts.verification = verification_of( cfg, net );
  }

  const auto result = synthesize( net, target, opts );
  if ( result.verification && !result.verification->verified )
  {
    err << dump( to_json( *result.verification ) );
    err << "error: the synthesized controlled network did not verify; no plan emitted\n";
    return exit_not_verified;
  }
  emit( cfg, out, dump( to_json( result ) ) );
  if ( cfg.rules_out )
  {
    write_file( *cfg.rules_out, controlled_rules( result.network, result.plan ) );
  }
  return exit_ok;
}

} // namespace

int run( const std::vector<std::string>& args, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "Pinning control synthesis for Boolean networks", "bnpin" };
  app.require_subcommand( 1 );
  run_config cfg;

  const auto add_input = [&]( CLI::App* sub ) {
    sub->add_option( "file", cfg.input, "rule file (one 'name, expression' per line)" )->required();
    sub->add_option( "--out", cfg.out, "write the result to PATH instead of stdout" );
  };
  const auto add_target = [&]( CLI::App* sub ) {
    auto* bits = sub->add_option( "--target", cfg.target_bits, "target state as bits x1..xn" );
    auto* gamma = sub->add_option( "--gamma", cfg.target_gamma, "target state as the index of delta_{2^n}" );
    bits->excludes( gamma );
  };
  const auto add_verification = [&]( CLI::App* sub ) {
    sub->add_option( "--exhaustive-cap", cfg.exhaustive_cap, "largest n verified exhaustively" );
    sub->add_option( "--samples", cfg.samples, "random initial states in sampled mode" );
    sub->add_option( "--steps", cfg.steps, "steps per sample (default 4n)" );
    sub->add_option( "--seed", cfg.seed, "seed of the sampled mode" );
    auto* ex = sub->add_flag( "--exhaustive", cfg.exhaustive, "check all 2^n states" );
    auto* sa = sub->add_flag( "--sampled", cfg.sampled, "check seeded random trajectories" );
    ex->excludes( sa );
  };

  auto* parse = app.add_subcommand( "parse", "summarize a network" );
  add_input( parse );

  auto* graph = app.add_subcommand( "graph", "interaction digraph" );
  add_input( graph );
  graph->add_option( "--format", cfg.format, "dot or json" )->check( CLI::IsMember( { "dot", "json" } ) );

  auto* stg = app.add_subcommand( "stg", "state transition graph" );
  add_input( stg );
  stg->add_option( "--format", cfg.format, "dot or json" )->check( CLI::IsMember( { "dot", "json" } ) );
  stg->add_option( "--exhaustive-cap", cfg.exhaustive_cap, "largest n enumerated exhaustively" );
  stg->add_option( "--samples", cfg.samples, "initial states beyond the cap" );
  stg->add_option( "--seed", cfg.seed, "seed for initial states beyond the cap" );

  auto* attractors = app.add_subcommand( "attractors", "fixed points and cycles with basins" );
  add_input( attractors );
  attractors->add_option( "--exhaustive-cap", cfg.exhaustive_cap, "largest n analysed" );

  auto* synth = app.add_subcommand( "synthesize", "design pinning controllers" );
  add_input( synth );
  add_target( synth );
  add_verification( synth );
  auto* exact = synth->add_flag( "--exact-fas", cfg.exact_fas, "minimum feedback arc set (default)" );
  auto* greedy = synth->add_flag( "--greedy-fas", cfg.greedy_fas, "greedy feedback arc set" );
  exact->excludes( greedy );
  synth->add_option( "--cycle-cap", cfg.cycle_cap, "cycles enumerated before lazy mode" );
  synth->add_option( "--optimal-cap", cfg.optimal_cap, "optimal arc sets examined" );
  synth->add_flag( "--ending-vertices-first", cfg.ending_vertices_first, "minimize pinned nodes before arcs" );
  synth->add_option( "--policy", cfg.policy, "value of deleted neighbors: target, one or zero" )
      ->check( CLI::IsMember( { "target", "one", "zero" } ) );
  synth->add_flag( "--no-verify", cfg.no_verify, "skip verification of the controlled network" );
  synth->add_option( "--rules-out", cfg.rules_out, "write the controlled network rules to PATH" );

  auto* verify = app.add_subcommand( "verify", "check global stability to a target" );
  add_input( verify );
  add_target( verify );
  add_verification( verify );

  try
  {
    std::vector<std::string> reversed( args.rbegin(), args.rend() );
    app.parse( reversed );
  }
  catch ( const CLI::ParseError& e )
  {
    std::ostringstream o, e2;
    const auto code = app.exit( e, o, e2 );
    out << o.str();
    err << e2.str();
    return code == 0 ? exit_ok : exit_input_error;
  }

  try
  {
    if ( parse->parsed() )
    {
      return cmd_parse( cfg, out );
    }
    if ( graph->parsed() )
    {
      return cmd_graph( cfg, out );
    }
    if ( stg->parsed() )
    {
      return cmd_stg( cfg, out );
    }
    if ( attractors->parsed() )
    {
      return cmd_attractors( cfg, out );
    }
    if ( synth->parsed() )
    {
      return cmd_synthesize( cfg, out, err );
    }
    return cmd_verify( cfg, out );
  }
  catch ( const cap_exceeded& e )
  {
    err << "error: " << e.what() << "\n";
    return exit_cap_exceeded;
  }
  catch ( const input_error& e )
  {
    err << "error: " << e.what() << "\n";
    return exit_input_error;
  }
  catch ( const std::invalid_argument& e )
  {
    err << "error: " << e.what() << "\n";
    return exit_input_error;
  }
}

} // namespace bnpin
