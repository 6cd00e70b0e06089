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

#include <bnpin/feedback_arc_set.hpp>

#include <algorithm>
#include <tuple>
#include <cassert>
#include <set>

#include <fmt/format.h>

namespace bnpin
{

/******************************************************************************
 * cycle enumeration                                                          *
 ******************************************************************************/

namespace
{

class johnson
{
public:
  johnson( const interaction_digraph& g, std::size_t cap ) : g_( g ), cap_( cap )
  {
    const auto n = g.vertex_count();
    adjacency_.resize( n );
    for ( std::size_t e = 0; e < g.edge_count(); ++e )
    {
      adjacency_[g.start( e )].push_back( e );
    }
    blocked_.assign( n, 0u );
    blocked_by_.resize( n );
  }

  cycle_enumeration run()
  {
    const auto n = g_.vertex_count();
    for ( start_ = 0; start_ < n && !result_.capped; ++start_ )
    {
      for ( uint32_t v = start_; v < n; ++v )
      {
        blocked_[v] = 0u;
        blocked_by_[v].clear();
      }
      circuit( start_ );
    }
    return std::move( result_ );
  }

private:
  bool circuit( uint32_t v )
  {
    bool found = false;
    blocked_[v] = 1u;
    for ( auto e : adjacency_[v] )
    {
      if ( result_.capped )
      {
        return true;
      }
      const auto w = g_.end( e );
      if ( w < start_ )
      {
        continue;
      }
      if ( w == start_ )
      {
        if ( result_.cycles.size() == cap_ )
        {
          result_.capped = true;
          return true;
        }
        auto cycle = path_;
        cycle.push_back( e );
        result_.cycles.push_back( std::move( cycle ) );
        found = true;
      }
      else if ( !blocked_[w] )
      {
        path_.push_back( e );
        if ( circuit( w ) )
        {
          found = true;
        }
        path_.pop_back();
      }
    }
    if ( found )
    {
      unblock( v );
    }
    else
    {
      for ( auto e : adjacency_[v] )
      {
        const auto w = g_.end( e );
        if ( w >= start_ )
        {
          auto& b = blocked_by_[w];
          if ( std::find( b.begin(), b.end(), v ) == b.end() )
          {
            b.push_back( v );
          }
        }
      }
    }
    return found;
  }

  void unblock( uint32_t v )
  {
    blocked_[v] = 0u;
    auto pending = std::move( blocked_by_[v] );
    blocked_by_[v].clear();
    for ( auto w : pending )
    {
      if ( blocked_[w] )
      {
        unblock( w );
      }
    }
  }

  const interaction_digraph& g_;
  std::size_t cap_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<uint8_t> blocked_;
  std::vector<std::vector<uint32_t>> blocked_by_;
  std::vector<std::size_t> path_;
  uint32_t start_ = 0u;
  cycle_enumeration result_;
};

} // namespace

cycle_enumeration enumerate_cycles( const interaction_digraph& g, std::size_t cap )
{
  if ( cap == 0u )
  {
    throw std::invalid_argument( "cycle cap must be at least 1" );
  }
  return johnson( g, cap ).run();
}

/******************************************************************************
 * hitting sets                                                               *
 ******************************************************************************/

hitting_set_solver::hitting_set_solver( std::size_t universe, std::vector<std::vector<std::size_t>> sets, std::vector<uint8_t> allowed )
    : universe_( universe ), sets_( std::move( sets ) ), allowed_( std::move( allowed ) )
{
  if ( allowed_.empty() )
  {
    allowed_.assign( universe_, 1u );
  }
  for ( auto& s : sets_ )
  {
    std::sort( s.begin(), s.end() );
    s.erase( std::unique( s.begin(), s.end() ), s.end() );
    for ( auto e : s )
    {
      if ( e >= universe_ )
      {
        throw std::invalid_argument( "hitting set element out of range" );
      }
    }
  }
}

struct hitting_set_solver::search
{
  const hitting_set_solver& solver;
  std::size_t budget;
  const std::function<bool( const std::vector<std::size_t>& )>& visit;

  std::vector<std::vector<std::size_t>> containing;
  std::vector<uint32_t> hits;
  std::vector<uint8_t> forbidden;
  std::vector<std::size_t> chosen;
  std::vector<uint8_t> mark;

  search( const hitting_set_solver& s, std::size_t b, const std::function<bool( const std::vector<std::size_t>& )>& v )
      : solver( s ), budget( b ), visit( v )
  {
    containing.resize( s.universe_ );
    for ( std::size_t i = 0; i < s.sets_.size(); ++i )
    {
      for ( auto e : s.sets_[i] )
      {
        containing[e].push_back( i );
      }
    }
    hits.assign( s.sets_.size(), 0u );
    forbidden.resize( s.universe_ );
    for ( std::size_t e = 0; e < s.universe_; ++e )
    {
      forbidden[e] = s.allowed_[e] ? 0u : 1u;
    }
    mark.assign( s.universe_, 0u );
  }

  std::size_t open_elements( std::size_t set ) const
  {
    std::size_t count = 0u;
    for ( auto e : solver.sets_[set] )
    {
      count += forbidden[e] ? 0u : 1u;
    }
    return count;
  }

  /* greedy packing of uncovered sets with pairwise disjoint open elements */
  std::size_t lower_bound()
  {
    std::size_t bound = 0u;
    std::vector<std::size_t> touched;
    for ( std::size_t i = 0; i < solver.sets_.size(); ++i )
    {
      if ( hits[i] != 0u )
      {
        continue;
      }
      bool disjoint = true;
      for ( auto e : solver.sets_[i] )
      {
        if ( !forbidden[e] && mark[e] )
        {
          disjoint = false;
          break;
        }
      }
      if ( !disjoint )
      {
        continue;
      }
      ++bound;
      for ( auto e : solver.sets_[i] )
      {
        if ( !forbidden[e] )
        {
          mark[e] = 1u;
          touched.push_back( e );
        }
      }
    }
    for ( auto e : touched )
    {
      mark[e] = 0u;
    }
    return bound;
  }

  void choose( std::size_t e, int delta )
  {
    for ( auto i : containing[e] )
    {
      hits[i] += delta;
    }
  }

  /* false iff the visitor asked to stop */
  bool run()
  {
    std::size_t branch_set = solver.sets_.size();
    std::size_t fewest = ~std::size_t{ 0 };
    for ( std::size_t i = 0; i < solver.sets_.size(); ++i )
    {
      if ( hits[i] != 0u )
      {
        continue;
      }
      const auto open = open_elements( i );
      if ( open < fewest )
      {
        fewest = open;
        branch_set = i;
        if ( open == 0u )
        {
          break;
        }
      }
    }
    if ( branch_set == solver.sets_.size() )
    {
      auto result = chosen;
      std::sort( result.begin(), result.end() );
      return visit( result );
    }
    if ( fewest == 0u || chosen.size() >= budget || chosen.size() + lower_bound() > budget )
    {
      return true;
    }

    std::vector<std::size_t> excluded;
    bool keep_going = true;
    for ( auto e : solver.sets_[branch_set] )
    {
      if ( forbidden[e] )
      {
        continue;
      }
      chosen.push_back( e );
      choose( e, +1 );
      keep_going = run();
      choose( e, -1 );
      chosen.pop_back();
      if ( !keep_going )
      {
        break;
      }
      forbidden[e] = 1u;
      excluded.push_back( e );
    }
    for ( auto e : excluded )
    {
      forbidden[e] = 0u;
    }
    return keep_going;
  }
};

std::optional<std::size_t> hitting_set_solver::minimum_size() const
{
  for ( const auto& s : sets_ )
  {
    if ( std::none_of( s.begin(), s.end(), [&]( auto e ) { return allowed_[e] != 0u; } ) )
    {
      return std::nullopt;
    }
  }
  const std::function<bool( const std::vector<std::size_t>& )> stop = []( const auto& ) { return false; };
  std::size_t budget = search( *this, 0u, stop ).lower_bound();
  for ( ;; ++budget )
  {
    search s( *this, budget, stop );
    if ( !s.run() )
    {
      return budget;
    }
  }
}

bool hitting_set_solver::enumerate( std::size_t size, const std::function<bool( const std::vector<std::size_t>& )>& visit ) const
{
  search s( *this, size, visit );
  return s.run();
}

/******************************************************************************
 * feedback arc sets                                                          *
 ******************************************************************************/

namespace
{

std::vector<edge> to_edges( const interaction_digraph& g, const std::vector<std::size_t>& ids )
{
  std::vector<edge> edges;
  for ( auto e : ids )
  {
    edges.push_back( g.edges()[e] );
  }
  std::sort( edges.begin(), edges.end() );
  return edges;
}

std::size_t ending_vertex_count( const std::vector<edge>& edges )
{
  std::set<uint32_t> ends;
  for ( const auto& e : edges )
  {
    ends.insert( e.target );
  }
  return ends.size();
}

void describe_pinning( feedback_arc_set_result& result )
{
  result.c2 = result.chosen.size();
  result.pinned.clear();
  result.deleted_sources.clear();
  std::vector<edge> by_target = result.chosen;
  std::sort( by_target.begin(), by_target.end(), []( const edge& a, const edge& b ) {
    return std::tie( a.target, a.source ) < std::tie( b.target, b.source );
  } );
  for ( const auto& e : by_target )
  {
    if ( result.pinned.empty() || result.pinned.back() != e.target )
    {
      result.pinned.push_back( e.target );
      result.deleted_sources.emplace_back();
    }
    result.deleted_sources.back().push_back( e.source );
  }
  result.c1 = result.pinned.size();
}

/* Keeps the best set under (c1, edge list) among candidates of equal c2. */
struct selector
{
  std::vector<edge> best;
  std::size_t best_c1 = ~std::size_t{ 0 };
  std::size_t seen = 0u;

  void offer( std::vector<edge> candidate )
  {
    ++seen;
    const auto c1 = ending_vertex_count( candidate );
    if ( c1 < best_c1 || ( c1 == best_c1 && candidate < best ) )
    {
      best_c1 = c1;
      best = std::move( candidate );
    }
  }
};


feedback_arc_set_result select_by_ending_vertices( const interaction_digraph& g, const std::vector<std::vector<std::size_t>>& cycles,
                                                   const fas_options& options )
{
  std::vector<std::vector<std::size_t>> vertex_sets;
  for ( const auto& c : cycles )
  {
    std::vector<std::size_t> vs;
    for ( auto e : c )
    {
      vs.push_back( g.end( e ) );
    }
    vertex_sets.push_back( std::move( vs ) );
  }
  hitting_set_solver vertex_solver( g.vertex_count(), vertex_sets );
  const auto c1 = *vertex_solver.minimum_size();

  feedback_arc_set_result result;
  std::size_t best_c2 = ~std::size_t{ 0 };
  std::size_t vertex_sets_seen = 0u;
  const bool complete = vertex_solver.enumerate( c1, [&]( const std::vector<std::size_t>& pinned ) {
    std::vector<uint8_t> allowed( g.edge_count(), 0u );
    for ( std::size_t e = 0; e < g.edge_count(); ++e )
    {
      allowed[e] = std::binary_search( pinned.begin(), pinned.end(), std::size_t{ g.end( e ) } ) ? 1u : 0u;
    }
    hitting_set_solver edge_solver( g.edge_count(), cycles, allowed );
    const auto c2 = *edge_solver.minimum_size();
    if ( c2 <= best_c2 )
    {
      edge_solver.enumerate( c2, [&]( const std::vector<std::size_t>& ids ) {
        auto edges = to_edges( g, ids );
        if ( c2 < best_c2 || edges < result.chosen )
        {
          best_c2 = c2;
          result.chosen = std::move( edges );
        }
        return true;
      } );
    }
    return ++vertex_sets_seen < options.optimal_cap;
  } );
  result.optimal_count = vertex_sets_seen;
  result.optimal_count_complete = complete;
  describe_pinning( result );
  return result;
}

} // namespace

feedback_arc_set_result minimum_feedback_arc_sets( const interaction_digraph& g, const std::vector<std::vector<std::size_t>>& cycles,
                                                   const fas_options& options )
{
  feedback_arc_set_result result;
  if ( cycles.empty() )
  {
    result.optimal_count = 1u;
    return result;
  }
  if ( options.ending_vertices_first )
  {
    return select_by_ending_vertices( g, cycles, options );
  }

  hitting_set_solver solver( g.edge_count(), cycles );
  const auto c2 = *solver.minimum_size();
  selector pick;
  const bool complete = solver.enumerate( c2, [&]( const std::vector<std::size_t>& ids ) {
    pick.offer( to_edges( g, ids ) );
    return pick.seen < options.optimal_cap;
  } );
  result.chosen = std::move( pick.best );
  result.optimal_count = pick.seen;
  result.optimal_count_complete = complete;
  describe_pinning( result );
  return result;
}

feedback_arc_set_result exact_feedback_arc_set( const interaction_digraph& g, const fas_options& options )
{
  auto enumeration = enumerate_cycles( g, options.cycle_cap );
  if ( !enumeration.capped )
  {
    return minimum_feedback_arc_sets( g, enumeration.cycles, options );
  }
  if ( options.ending_vertices_first )
  {
    throw cap_exceeded( fmt::format( "more than {} cycles; ending-vertex-first selection needs the full cycle list", options.cycle_cap ) );
  }

  /* constraint generation: solve over the known cycles, add a violated cycle
   * for every optimal candidate that leaves the digraph cyclic */
  auto cycles = std::move( enumeration.cycles );
  std::set<std::vector<std::size_t>> known;
  for ( const auto& c : cycles )
  {
    auto key = c;
    std::sort( key.begin(), key.end() );
    known.insert( std::move( key ) );
  }

  for ( std::size_t round = 0; round < options.lazy_rounds; ++round )
  {
    hitting_set_solver solver( g.edge_count(), cycles );
    const auto c2 = *solver.minimum_size();
    selector pick;
    std::size_t candidates = 0u;
    std::vector<std::vector<std::size_t>> violated;
    const bool complete = solver.enumerate( c2, [&]( const std::vector<std::size_t>& ids ) {
      ++candidates;
      std::vector<uint8_t> removed( g.edge_count(), 0u );
      for ( auto e : ids )
      {
        removed[e] = 1u;
      }
      auto cycle = find_cycle( g, removed );
      if ( cycle.empty() )
      {
        pick.offer( to_edges( g, ids ) );
      }
      else
      {
        std::sort( cycle.begin(), cycle.end() );
        if ( known.insert( cycle ).second )
        {
          violated.push_back( std::move( cycle ) );
        }
      }
      return candidates < options.optimal_cap;
    } );

    if ( pick.seen > 0u )
    {
      feedback_arc_set_result result;
      result.lazy = true;
      result.chosen = std::move( pick.best );
      result.optimal_count = pick.seen;
      result.optimal_count_complete = complete;
      describe_pinning( result );
      return result;
    }
    cycles.insert( cycles.end(), violated.begin(), violated.end() );
  }
  throw cap_exceeded( fmt::format( "exact feedback arc set did not converge in {} rounds of constraint generation", options.lazy_rounds ) );
}

feedback_arc_set_result greedy_feedback_arc_set( const interaction_digraph& g, const fas_options& options )
{
  std::vector<uint8_t> removed( g.edge_count(), 0u );
  std::vector<std::size_t> order_removed;

  const auto remove = [&]( std::size_t e ) {
    removed[e] = 1u;
    order_removed.push_back( e );
  };

  for ( std::size_t e = 0; e < g.edge_count(); ++e )
  {
    if ( g.start( e ) == g.end( e ) )
    {
      remove( e );
    }
  }

  const auto cap = std::min<std::size_t>( options.cycle_cap, 20000u );
  for ( ;; )
  {
    std::vector<edge> residual_edges;
    std::vector<std::size_t> original;
    for ( std::size_t e = 0; e < g.edge_count(); ++e )
    {
      if ( !removed[e] )
      {
        residual_edges.push_back( g.edges()[e] );
        original.push_back( e );
      }
    }
    const interaction_digraph residual( g.vertex_count(), residual_edges );
    auto enumeration = enumerate_cycles( residual, cap );
    if ( enumeration.cycles.empty() )
    {
      break;
    }

    std::vector<std::size_t> count( residual.edge_count(), 0u );
    std::vector<std::vector<std::size_t>> on_edge( residual.edge_count() );
    for ( std::size_t c = 0; c < enumeration.cycles.size(); ++c )
    {
      for ( auto e : enumeration.cycles[c] )
      {
        ++count[e];
        on_edge[e].push_back( c );
      }
    }
    std::vector<uint8_t> closed( enumeration.cycles.size(), 0u );
    std::size_t open = enumeration.cycles.size();
    while ( open > 0u )
    {
      const auto best = static_cast<std::size_t>( std::max_element( count.begin(), count.end() ) - count.begin() );
      remove( original[best] );
      for ( auto c : on_edge[best] )
      {
        if ( closed[c] )
        {
          continue;
        }
        closed[c] = 1u;
        --open;
        for ( auto e : enumeration.cycles[c] )
        {
          --count[e];
        }
      }
    }
    if ( !enumeration.capped )
    {
      break;
    }
  }

  /* drop deletions that are not needed, newest first */
  for ( auto it = order_removed.rbegin(); it != order_removed.rend(); ++it )
  {
    removed[*it] = 0u;
    if ( !topological_order( g, removed ) )
    {
      removed[*it] = 1u;
    }
  }

  feedback_arc_set_result result;
  result.method = fas_method::greedy;
  result.optimal_count = 0u;
  result.optimal_count_complete = false;
  std::vector<std::size_t> ids;
  for ( std::size_t e = 0; e < g.edge_count(); ++e )
  {
    if ( removed[e] )
    {
      ids.push_back( e );
    }
  }
  result.chosen = to_edges( g, ids );
  describe_pinning( result );
  assert( topological_order( g, removed ) );
  return result;
}

} // namespace bnpin
