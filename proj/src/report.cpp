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

#include <bnpin/report.hpp>

#include <fmt/format.h>

namespace bnpin
{

namespace
{

json node_list( const boolean_network& net, const std::vector<uint32_t>& nodes )
{
  auto out = json::array();
  for ( auto v : nodes )
  {
    out.push_back( net.name( v ) );
  }
  return out;
}

json edge_json( const boolean_network& net, const edge& e )
{
  return json::array( { net.name( e.source ), net.name( e.target ) } );
}

std::vector<uint64_t> matrix_columns( const logical_matrix& m )
{
  return { m.columns().begin(), m.columns().end() };
}

std::vector<uint64_t> matrix_columns( const truth_table& t )
{
  return matrix_columns( t.structure_matrix() );
}

json controller_json( const boolean_network& net, const controller_pair& c )
{
  json out;
  out["arguments"] = node_list( net, c.arguments );
  out["M_oplus"] = matrix_columns( c.connective );
  out["M_expression"] = c.connective_expression;
  out["K"] = matrix_columns( c.feedback );
  out["expression"] = c.feedback_expression;
  return out;
}

const char* policy_name( freeze_policy p )
{
  switch ( p )
  {
  case freeze_policy::target:
    return "target";
  case freeze_policy::one:
    return "one";
  case freeze_policy::zero:
    return "zero";
  default:
    return "custom";
  }
}

} // namespace

json state_to_json( const state_index& state )
{
  json out;
  out["bits"] = state.to_string();
  out["gamma"] = state.size() <= 63u ? json( state.gamma() ) : json( nullptr );
  return out;
}

json network_summary( const boolean_network& net )
{
  json out;
  out["n"] = net.size();
  out["K"] = net.max_in_degree();
  auto nodes = json::array();
  for ( uint32_t i = 0; i < net.size(); ++i )
  {
    json node;
    node["name"] = net.name( i );
    node["in_degree"] = net.in_neighbors( i ).size();
    node["in_neighbors"] = node_list( net, net.in_neighbors( i ) );
    nodes.push_back( std::move( node ) );
  }
  out["nodes"] = std::move( nodes );
  return out;
}

json to_json( const verification_report& report )
{
  json out;
  out["verified"] = report.verified;
  out["mode"] = report.mode == verification_mode::exhaustive ? "exhaustive" : "sampled";
  out["target_bits"] = report.target.to_string();
  out["target_gamma"] = report.target.size() <= 63u ? json( report.target.gamma() ) : json( nullptr );
  out["T"] = report.convergence_time ? json( *report.convergence_time ) : json( nullptr );
  out["counterexample"] = report.counterexample ? json( report.counterexample->to_string() ) : json( nullptr );
  out["violating_node"] = report.violating_node ? json( *report.violating_node + 1u ) : json( nullptr );
  out["samples"] = report.samples;
  out["steps"] = report.steps;
  out["seed"] = report.seed ? json( *report.seed ) : json( nullptr );
  out["message"] = report.message;
  return out;
}

json to_json( const attractor_report& report, const boolean_network& net )
{
  json out;
  out["n"] = net.size();
  out["attractor_count"] = report.attractor_count();
  auto list = json::array();
  std::size_t index = 0u;
  for ( const auto& fp : report.fixed_points )
  {
    json a;
    a["kind"] = "fixed_point";
    a["length"] = 1u;
    a["states"] = json::array( { state_to_json( fp ) } );
    a["basin"] = report.basin_sizes[index++];
    list.push_back( std::move( a ) );
  }
  for ( const auto& cycle : report.cycles )
  {
    json a;
    a["kind"] = "cycle";
    a["length"] = cycle.size();
    auto states = json::array();
    for ( const auto& s : cycle )
    {
      states.push_back( state_to_json( s ) );
    }
    a["states"] = std::move( states );
    a["basin"] = report.basin_sizes[index++];
    list.push_back( std::move( a ) );
  }
  out["attractors"] = std::move( list );
  return out;
}

json to_json( const pinning_plan& plan, const boolean_network& net )
{
  json out;
  out["target"] = state_to_json( plan.target );

  auto edges = json::array();
  for ( const auto& e : plan.deleted_edges )
  {
    edges.push_back( edge_json( net, e ) );
  }
  out["deleted_edges"] = std::move( edges );

  auto step1 = json::array();
  for ( const auto& s : plan.step1 )
  {
    json entry;
    entry["node"] = net.name( s.transform.node );
    entry["kept"] = node_list( net, s.transform.kept );
    entry["deleted"] = node_list( net, s.transform.deleted );
    entry["replacement"] = matrix_columns( s.transform.replacement );
    entry["controller"] = controller_json( net, s.controller );
    step1.push_back( std::move( entry ) );
  }
  out["pinned_step1"] = std::move( step1 );

  auto step2 = json::array();
  for ( const auto& s : plan.step2 )
  {
    json entry;
    entry["node"] = net.name( s.node );
    entry["arguments"] = node_list( net, s.arguments );
    entry["replacement"] = matrix_columns( s.replacement );
    entry["corrected"] = matrix_columns( s.corrected );
    entry["controller"] = controller_json( net, s.controller );
    step2.push_back( std::move( entry ) );
  }
  out["pinned_step2"] = std::move( step2 );

  json sets;
  sets["U_plus"] = node_list( net, plan.u_plus );
  sets["U_minus"] = node_list( net, plan.u_minus );
  sets["U_omega"] = node_list( net, plan.u_omega );
  sets["U_tau"] = node_list( net, plan.u_tau );
  out["sets"] = std::move( sets );

  json costs;
  costs["c1"] = plan.c1;
  costs["c2"] = plan.c2;
  costs["c3"] = plan.c3;
  out["costs"] = std::move( costs );

  json method;
  method["fas"] = plan.method == fas_method::exact ? "exact" : "greedy";
  method["optimal_count"] = plan.optimal_count;
  method["optimal_count_complete"] = plan.optimal_count_complete;
  method["policy"] = policy_name( plan.policy );
  out["method"] = std::move( method );
  return out;
}

json to_json( const synthesis_result& result )
{
  auto out = to_json( result.plan, result.network );
  out["method"]["lazy"] = result.fas.lazy;
  out["controlled_network"] = controlled_rules( result.network, result.plan );
  out["verification"] = result.verification ? to_json( *result.verification ) : json( nullptr );
  return out;
}

std::string to_dot( const interaction_digraph& g, const boolean_network& net )
{
  std::string out = "digraph interaction {\n";
  for ( uint32_t v = 0; v < g.vertex_count(); ++v )
  {
    out += fmt::format( "  \"{}\";\n", net.name( v ) );
  }
  for ( const auto& e : g.edges() )
  {
    out += fmt::format( "  \"{}\" -> \"{}\";\n", net.name( e.source ), net.name( e.target ) );
  }
  out += "}\n";
  return out;
}

} // namespace bnpin
