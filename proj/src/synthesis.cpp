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

#include <bnpin/synthesis.hpp>
#include <bnpin/render.hpp>

#include <algorithm>
#include <cassert>
#include <numeric>
#include <tuple>
#include <stdexcept>

#include <fmt/format.h>

namespace bnpin
{

namespace
{

const logical_matrix& biconditional()
{
  static const logical_matrix m( 2u, { 1u, 2u, 2u, 1u } );
  return m;
}

/* column of the sub-assignment formed by `positions` of a k-ary column */
uint64_t project_column( uint64_t column, uint32_t arity, std::span<const uint32_t> positions )
{
  uint64_t c = 0u;
  for ( auto p : positions )
  {
    c = ( c << 1u ) | ( ( column >> ( arity - 1u - p ) ) & 1u );
  }
  return c;
}

std::vector<uint32_t> positions_in( std::span<const uint32_t> subset, std::span<const uint32_t> neighbors )
{
  std::vector<uint32_t> positions;
  for ( auto v : subset )
  {
    const auto it = std::find( neighbors.begin(), neighbors.end(), v );
    if ( it == neighbors.end() )
    {
      throw std::invalid_argument( fmt::format( "node {} is not an in-neighbor", v + 1u ) );
    }
    positions.push_back( static_cast<uint32_t>( it - neighbors.begin() ) );
  }
  return positions;
}

std::vector<std::string> names_of( const boolean_network& net, std::span<const uint32_t> nodes )
{
  std::vector<std::string> names;
  for ( auto v : nodes )
  {
    names.push_back( net.name( v ) );
  }
  return names;
}

std::string wrap( const std::string& s )
{
  return s.find( ' ' ) == std::string::npos ? s : "(" + s + ")";
}

controller_pair make_pair( const boolean_network& net, uint32_t node, logical_matrix connective, truth_table feedback,
                           std::vector<uint32_t> arguments )
{
  controller_pair pair;
  pair.node = node;
  pair.connective = std::move( connective );
  pair.feedback = std::move( feedback );
  pair.arguments = std::move( arguments );
  pair.connective_expression = render_connective( pair.connective, "u", "f" );
  pair.feedback_expression = render_expression( pair.feedback, names_of( net, pair.arguments ) );
  return pair;
}

template<typename Entry>
const Entry* find_entry( const std::vector<Entry>& entries, uint32_t node )
{
  for ( const auto& e : entries )
  {
    if ( e.node == node )
    {
      return &e;
    }
  }
  return nullptr;
}

const step1_entry* find_step1( const pinning_plan& plan, uint32_t node )
{
  for ( const auto& e : plan.step1 )
  {
    if ( e.transform.node == node )
    {
      return &e;
    }
  }
  return nullptr;
}

} // namespace

truth_table reorder_inputs( const truth_table& table, std::span<const uint32_t> neighbors, std::span<const uint32_t> kept,
                            std::span<const uint32_t> deleted )
{
  if ( kept.size() + deleted.size() != neighbors.size() || table.arity() != neighbors.size() )
  {
    throw std::invalid_argument( "kept and deleted neighbors must partition the in-neighbors" );
  }
  std::vector<uint32_t> order = positions_in( kept, neighbors );
  const auto tail = positions_in( deleted, neighbors );
  order.insert( order.end(), tail.begin(), tail.end() );

  auto check = order;
  std::sort( check.begin(), check.end() );
  if ( std::adjacent_find( check.begin(), check.end() ) != check.end() )
  {
    throw std::invalid_argument( "kept and deleted neighbors overlap" );
  }
  return permute_arguments( table, order );
}

truth_table lift_replacement( const truth_table& replacement, uint32_t trailing )
{
  truth_table lifted( replacement.arity() + trailing );
  for ( uint64_t c = 0; c < lifted.size(); ++c )
  {
    lifted.set( c, replacement[c >> trailing] );
  }
  return lifted;
}

std::pair<truth_table, truth_table> choose_replacement( const truth_table& reordered, uint32_t kept_count,
                                                        std::span<const uint8_t> deleted_values )
{
  const auto k = reordered.arity();
  if ( kept_count + deleted_values.size() != k )
  {
    throw std::invalid_argument( "deleted values do not match the reordered table" );
  }
  std::vector<uint32_t> keep( kept_count );
  std::iota( keep.begin(), keep.end(), 0u );
  std::vector<uint8_t> fixed( k, 1u );
  std::copy( deleted_values.begin(), deleted_values.end(), fixed.begin() + kept_count );

  auto replacement = restrict_arguments( reordered, keep, fixed );
  auto lifted = lift_replacement( replacement, static_cast<uint32_t>( deleted_values.size() ) );
  return { std::move( replacement ), std::move( lifted ) };
}

bool apply_connective( const logical_matrix& connective, bool u, bool f )
{
  const uint64_t col = ( ( u ? 0u : 1u ) << 1u ) | ( f ? 0u : 1u );
  return connective[col] == 1u;
}

std::string render_connective( const logical_matrix& connective, const std::string& lhs, const std::string& rhs )
{
  const auto l = wrap( lhs );
  const auto r = wrap( rhs );
  const std::vector<uint64_t> cols( connective.columns().begin(), connective.columns().end() );
  if ( cols == std::vector<uint64_t>{ 1, 2, 2, 1 } )
  {
    return fmt::format( "{} <-> {}", l, r );
  }
  if ( cols == std::vector<uint64_t>{ 2, 1, 1, 2 } )
  {
    return fmt::format( "{} ^ {}", l, r );
  }
  if ( cols == std::vector<uint64_t>{ 1, 2, 2, 2 } )
  {
    return fmt::format( "{} & {}", l, r );
  }
  if ( cols == std::vector<uint64_t>{ 1, 1, 1, 2 } )
  {
    return fmt::format( "{} | {}", l, r );
  }
  if ( cols == std::vector<uint64_t>{ 1, 2, 1, 1 } )
  {
    return fmt::format( "{} -> {}", l, r );
  }
  return render_expression( truth_table::from_structure_matrix( connective ), { l, r } );
}

logical_matrix controller_product( const logical_matrix& connective, const logical_matrix& feedback, const logical_matrix& reordered )
{
  uint32_t k = 0u;
  while ( ( uint64_t{ 1 } << k ) < reordered.cols() )
  {
    ++k;
  }
  const auto lifted = kron( identity( reordered.cols() ), reordered );
  const auto product = multiply( connective, stp( feedback, lifted ) );
  return multiply( product, power_reducing_matrix( k ) );
}

bool satisfies_controller_equation( const logical_matrix& connective, const truth_table& feedback, const truth_table& reordered,
                                    const truth_table& target )
{
  if ( feedback.arity() != reordered.arity() || target.arity() != reordered.arity() )
  {
    return false;
  }
  for ( uint64_t i = 0; i < target.size(); ++i )
  {
    if ( apply_connective( connective, feedback[i], reordered[i] ) != target[i] )
    {
      return false;
    }
  }
  /* the literal product has 2^{2k} intermediate columns */
  if ( reordered.arity() <= 6u )
  {
    return controller_product( connective, feedback.structure_matrix(), reordered.structure_matrix() ) == target.structure_matrix();
  }
  return true;
}

controller_solution solve_controller_equation( const truth_table& target, const truth_table& reordered )
{
  if ( target.arity() != reordered.arity() )
  {
    throw std::invalid_argument( "controller equation needs tables of equal arity" );
  }
  controller_solution solution{ biconditional(), truth_table( reordered.arity() ) };
  for ( uint64_t i = 0; i < target.size(); ++i )
  {
    solution.feedback.set( i, target[i] == reordered[i] );
  }
  if ( !satisfies_controller_equation( solution.connective, solution.feedback, reordered, target ) )
  {
    throw std::logic_error( "controller equation check failed" );
  }
  return solution;
}

std::vector<solution_family> enumerate_controller_solutions( const truth_table& target, const truth_table& reordered )
{
  if ( target.arity() != reordered.arity() )
  {
    throw std::invalid_argument( "controller equation needs tables of equal arity" );
  }
  std::vector<solution_family> families;
  for ( uint32_t alpha = 0; alpha < 16u; ++alpha )
  {
    /* bit 3 is alpha_1 */
    std::vector<uint64_t> cols( 4u );
    for ( uint32_t j = 0; j < 4u; ++j )
    {
      cols[j] = ( ( alpha >> ( 3u - j ) ) & 1u ) ? 1u : 2u;
    }
    solution_family family{ logical_matrix( 2u, std::move( cols ) ), {}, 0u };
    bool feasible = true;
    for ( uint64_t i = 0; i < target.size() && feasible; ++i )
    {
      std::vector<uint8_t> choices;
      for ( uint8_t beta : { uint8_t{ 1 }, uint8_t{ 0 } } )
      {
        if ( apply_connective( family.connective, beta != 0u, reordered[i] ) == target[i] )
        {
          choices.push_back( beta );
        }
      }
      feasible = !choices.empty();
      family.free_columns += choices.size() == 2u ? 1u : 0u;
      family.feedback_choices.push_back( std::move( choices ) );
    }
    if ( feasible )
    {
      families.push_back( std::move( family ) );
    }
  }
  return families;
}

node_transform transform_node( const boolean_network& net, uint32_t node, std::vector<uint32_t> deleted, freeze_policy policy,
                               const state_index& target, const truth_table* custom_replacement )
{
  node_transform t;
  t.node = node;
  t.neighbors = net.in_neighbors( node );
  std::sort( deleted.begin(), deleted.end() );
  t.deleted = std::move( deleted );
  std::set_difference( t.neighbors.begin(), t.neighbors.end(), t.deleted.begin(), t.deleted.end(), std::back_inserter( t.kept ) );
  t.reordered = reorder_inputs( net.function( node ), t.neighbors, t.kept, t.deleted );

  const auto trailing = static_cast<uint32_t>( t.deleted.size() );
  if ( policy == freeze_policy::custom )
  {
    if ( custom_replacement == nullptr || custom_replacement->arity() != t.kept.size() )
    {
      throw std::invalid_argument( fmt::format( "node {} needs a replacement table of arity {}", net.name( node ), t.kept.size() ) );
    }
    t.replacement = *custom_replacement;
    t.lifted = lift_replacement( t.replacement, trailing );
    return t;
  }

  std::vector<uint8_t> values;
  for ( auto d : t.deleted )
  {
    switch ( policy )
    {
    case freeze_policy::target:
      values.push_back( target.bits.at( d ) );
      break;
    case freeze_policy::one:
      values.push_back( 1u );
      break;
    default:
      values.push_back( 0u );
      break;
    }
  }
  std::tie( t.replacement, t.lifted ) = choose_replacement( t.reordered, static_cast<uint32_t>( t.kept.size() ), values );
  return t;
}

boolean_network reduced_system( const boolean_network& net, const std::vector<node_transform>& transforms )
{
  auto reduced = net;
  for ( const auto& t : transforms )
  {
    reduced.set_function( t.node, t.kept, t.replacement );
  }
  if ( !topological_order( build_interaction_digraph( reduced ) ) )
  {
    throw std::logic_error( "reduced system still has a cycle" );
  }
  return reduced;
}

fixed_point_pinning pin_fixed_point( const boolean_network& reduced, const state_index& target )
{
  if ( target.size() != reduced.size() )
  {
    throw std::invalid_argument( "target size does not match the network" );
  }
  fixed_point_pinning result;
  result.delta.assign( reduced.size(), 0u );
  for ( uint32_t i = 0; i < reduced.size(); ++i )
  {
    std::vector<uint8_t> args;
    for ( auto j : reduced.in_neighbors( i ) )
    {
      args.push_back( target.bits[j] );
    }
    const auto column = truth_table::column_of( args );
    const bool wanted = target.bits[i] != 0u;
    if ( reduced.function( i )[column] == wanted )
    {
      continue;
    }
    result.delta[i] = 1u;
    result.nodes.push_back( i );
    auto corrected = reduced.function( i );
    corrected.set( column, wanted );
    result.corrected.push_back( std::move( corrected ) );
  }
  result.c3 = result.nodes.size();
  return result;
}

boolean_network compose_controlled_network( const boolean_network& net, const pinning_plan& plan )
{
  auto controlled = net;
  for ( uint32_t j = 0; j < net.size(); ++j )
  {
    const auto* s1 = find_step1( plan, j );
    const auto* s2 = find_entry( plan.step2, j );
    if ( s1 == nullptr && s2 == nullptr )
    {
      continue;
    }
    const auto& nbrs = net.in_neighbors( j );
    const auto& f = net.function( j );
    const auto k = f.arity();
    const auto step2_positions = s2 != nullptr ? positions_in( s2->arguments, nbrs ) : std::vector<uint32_t>{};

    truth_table table( k );
    for ( uint64_t c = 0; c < table.size(); ++c )
    {
      bool value = f[c];
      if ( s1 != nullptr )
      {
        /* the Step-1 feedback reads every in-neighbor in ascending order */
        value = apply_connective( s1->controller.connective, s1->controller.feedback[c], value );
      }
      if ( s2 != nullptr )
      {
        const auto u = s2->controller.feedback[project_column( c, k, step2_positions )];
        value = apply_connective( s2->controller.connective, u, value );
      }
      table.set( c, value );
    }
    controlled.set_function( j, nbrs, std::move( table ) );
  }
  return controlled;
}

std::string controlled_rules( const boolean_network& net, const pinning_plan& plan )
{
  std::string out = "targets, factors\n";
  for ( uint32_t j = 0; j < net.size(); ++j )
  {
    const auto* s1 = find_step1( plan, j );
    const auto* s2 = find_entry( plan.step2, j );
    auto expr = render_expression( net.function( j ), names_of( net, net.in_neighbors( j ) ) );
    if ( s1 != nullptr )
    {
      out += fmt::format( "# u_{} = {}\n", net.name( j ), s1->controller.feedback_expression );
      expr = render_connective( s1->controller.connective, s1->controller.feedback_expression, expr );
    }
    if ( s2 != nullptr )
    {
      out += fmt::format( "# uhat_{} = {}\n", net.name( j ), s2->controller.feedback_expression );
      expr = render_connective( s2->controller.connective, s2->controller.feedback_expression, expr );
    }
    out += fmt::format( "{}, {}\n", net.name( j ), expr );
  }
  return out;
}

synthesis_result synthesize( const boolean_network& net, const state_index& target, const synthesis_options& options )
{
  if ( target.size() != net.size() )
  {
    throw std::invalid_argument( fmt::format( "target has {} values, network has {} nodes", target.size(), net.size() ) );
  }

  synthesis_result result;
  result.network = minimize( net );
  const auto& m = result.network;
  const auto g = build_interaction_digraph( m );

  result.fas = options.method == fas_method::exact ? exact_feedback_arc_set( g, options.fas ) : greedy_feedback_arc_set( g, options.fas );

  auto& plan = result.plan;
  plan.target = target;
  plan.deleted_edges = result.fas.chosen;
  plan.method = result.fas.method;
  plan.optimal_count = result.fas.optimal_count;
  plan.optimal_count_complete = result.fas.optimal_count_complete;
  plan.policy = options.policy;
  plan.c1 = result.fas.c1;
  plan.c2 = result.fas.c2;

  /* Step 1 */
  std::vector<node_transform> transforms;
  for ( std::size_t i = 0; i < result.fas.pinned.size(); ++i )
  {
    const auto w = result.fas.pinned[i];
    const truth_table* custom = nullptr;
    if ( const auto it = options.custom_replacements.find( w ); it != options.custom_replacements.end() )
    {
      custom = &it->second;
    }
    auto t = transform_node( m, w, result.fas.deleted_sources[i], options.policy, target, custom );
    const auto solution = solve_controller_equation( t.lifted, t.reordered );

    /* K_w = bold-K_w W^{-1}: back to ascending neighbor order */
    const auto order = positions_in( [&] {
      auto v = t.kept;
      v.insert( v.end(), t.deleted.begin(), t.deleted.end() );
      return v;
    }(), t.neighbors );
    std::vector<uint32_t> inverse( order.size() );
    for ( uint32_t p = 0; p < order.size(); ++p )
    {
      inverse[order[p]] = p;
    }
    auto feedback = permute_arguments( solution.feedback, inverse );

    step1_entry entry{ t, make_pair( m, w, solution.connective, std::move( feedback ), t.neighbors ) };
    plan.step1.push_back( std::move( entry ) );
    transforms.push_back( std::move( t ) );
  }
  const auto reduced = reduced_system( m, transforms );

  /* Step 2 */
  const auto pinning = pin_fixed_point( reduced, target );
  plan.c3 = pinning.c3;
  for ( std::size_t i = 0; i < pinning.nodes.size(); ++i )
  {
    const auto p = pinning.nodes[i];
    const auto& replacement = reduced.function( p );
    const auto solution = solve_controller_equation( pinning.corrected[i], replacement );
    step2_entry entry;
    entry.node = p;
    entry.arguments = reduced.in_neighbors( p );
    entry.replacement = replacement;
    entry.corrected = pinning.corrected[i];
    entry.controller = make_pair( m, p, solution.connective, solution.feedback, entry.arguments );
    plan.step2.push_back( std::move( entry ) );
  }

  std::vector<uint32_t> omega = result.fas.pinned;
  std::vector<uint32_t> tau = pinning.nodes;
  std::set_union( omega.begin(), omega.end(), tau.begin(), tau.end(), std::back_inserter( plan.u_plus ) );
  std::set_intersection( omega.begin(), omega.end(), tau.begin(), tau.end(), std::back_inserter( plan.u_minus ) );
  std::set_difference( omega.begin(), omega.end(), plan.u_minus.begin(), plan.u_minus.end(), std::back_inserter( plan.u_omega ) );
  std::set_difference( tau.begin(), tau.end(), plan.u_minus.begin(), plan.u_minus.end(), std::back_inserter( plan.u_tau ) );

  result.controlled = compose_controlled_network( m, plan );

  /* the controlled updates must equal the replacement / corrected tables */
  for ( uint32_t j = 0; j < m.size(); ++j )
  {
    const auto* s1 = find_step1( plan, j );
    const auto* s2 = find_entry( plan.step2, j );
    const auto& nbrs = m.in_neighbors( j );
    const auto& composed = result.controlled.function( j );
    const auto k = composed.arity();
    const auto kept_positions = s1 != nullptr ? positions_in( s1->transform.kept, nbrs ) : std::vector<uint32_t>{};
    for ( uint64_t c = 0; c < composed.size(); ++c )
    {
      bool expected = m.function( j )[c];
      if ( s2 != nullptr )
      {
        expected = s2->corrected[s1 != nullptr ? project_column( c, k, kept_positions ) : c];
      }
      else if ( s1 != nullptr )
      {
        expected = s1->transform.replacement[project_column( c, k, kept_positions )];
      }
      if ( composed[c] != expected )
      {
        throw std::logic_error( fmt::format( "composed update of node {} disagrees with its design", m.name( j ) ) );
      }
    }
  }
  if ( step( result.controlled, target ) != target )
  {
    throw std::logic_error( "target is not a fixed point of the controlled network" );
  }

  if ( options.verify )
  {
    auto vopts = options.verification;
    if ( vopts.mode == verification_mode::exhaustive && m.size() > vopts.exhaustive_cap )
    {
      vopts.mode = verification_mode::sampled;
    }
    result.verification = verify_global_stability( result.controlled, target, vopts );
  }
  return result;
}

} // namespace bnpin
