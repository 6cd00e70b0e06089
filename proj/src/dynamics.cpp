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

#include <bnpin/dynamics.hpp>

#include <algorithm>
#include <cassert>
#include <random>
#include <set>

#include <fmt/format.h>

namespace bnpin
{

namespace
{

/* Per-node bit positions of the in-neighbors inside a packed code. */
class packed_stepper
{
public:
  explicit packed_stepper( const boolean_network& net ) : net_( net ), n_( net.size() )
  {
    shifts_.resize( n_ );
    for ( uint32_t i = 0; i < n_; ++i )
    {
      for ( auto j : net.in_neighbors( i ) )
      {
        shifts_[i].push_back( static_cast<uint32_t>( n_ - 1u - j ) );
      }
    }
  }

  uint64_t operator()( uint64_t code ) const
  {
    uint64_t next = 0u;
    for ( uint32_t i = 0; i < n_; ++i )
    {
      uint64_t col = 0u;
      for ( auto s : shifts_[i] )
      {
        col = ( col << 1u ) | ( ( code >> s ) & 1u );
      }
      if ( !net_.function( i )[col] )
      {
        next |= uint64_t{ 1 } << ( n_ - 1u - i );
      }
    }
    return next;
  }

private:
  const boolean_network& net_;
  std::size_t n_;
  std::vector<std::vector<uint32_t>> shifts_;
};

void check_exhaustive( const boolean_network& net, std::size_t cap )
{
  if ( net.size() > cap || net.size() > 32u )
  {
    throw cap_exceeded( fmt::format( "exhaustive analysis limited to n <= {}, network has {} nodes; use sampled verification",
                                     std::min<std::size_t>( cap, 32u ), net.size() ) );
  }
}

struct sweep
{
  std::vector<uint32_t> successor;
  std::vector<int32_t> label;
  std::vector<std::vector<uint32_t>> attractors;
};

sweep successor_sweep( const boolean_network& net )
{
  const auto n = net.size();
  const uint64_t states = uint64_t{ 1 } << n;
  packed_stepper stepper( net );

  sweep result;
  result.successor.resize( states );
  for ( uint64_t c = 0; c < states; ++c )
  {
    result.successor[c] = static_cast<uint32_t>( stepper( c ) );
  }

  /* -1 unvisited, -2 on the current path, otherwise the attractor id */
  result.label.assign( states, -1 );
  std::vector<uint32_t> path;
  for ( uint64_t s = 0; s < states; ++s )
  {
    if ( result.label[s] != -1 )
    {
      continue;
    }
    path.clear();
    auto v = static_cast<uint32_t>( s );
    while ( result.label[v] == -1 )
    {
      result.label[v] = -2;
      path.push_back( v );
      v = result.successor[v];
    }
    int32_t id = result.label[v];
    if ( id == -2 )
    {
      id = static_cast<int32_t>( result.attractors.size() );
      const auto start = std::find( path.begin(), path.end(), v );
      std::vector<uint32_t> cycle( start, path.end() );
      std::rotate( cycle.begin(), std::min_element( cycle.begin(), cycle.end() ), cycle.end() );
      result.attractors.push_back( std::move( cycle ) );
    }
    for ( auto p : path )
    {
      result.label[p] = id;
    }
  }
  return result;
}

} // namespace

state_index step( const boolean_network& net, const state_index& state )
{
  if ( state.size() != net.size() )
  {
    throw std::invalid_argument( fmt::format( "state has {} values, network has {} nodes", state.size(), net.size() ) );
  }
  state_index next;
  next.bits.resize( net.size() );
  for ( uint32_t i = 0; i < net.size(); ++i )
  {
    next.bits[i] = net.evaluate( i, state.bits ) ? 1u : 0u;
  }
  return next;
}

uint64_t step_code( const boolean_network& net, uint64_t code )
{
  if ( net.size() > 63u )
  {
    throw dimension_error( "packed state codes need n <= 63" );
  }
  return packed_stepper( net )( code );
}

attractor_report find_attractors( const boolean_network& net, std::size_t cap )
{
  check_exhaustive( net, cap );
  const auto n = net.size();
  const auto sw = successor_sweep( net );

  std::vector<uint64_t> basin( sw.attractors.size(), 0u );
  for ( auto l : sw.label )
  {
    ++basin[l];
  }

  attractor_report report;
  std::vector<uint64_t> cycle_basins;
  for ( std::size_t a = 0; a < sw.attractors.size(); ++a )
  {
    const auto& states = sw.attractors[a];
    if ( states.size() == 1u )
    {
      report.fixed_points.push_back( state_index::from_code( n, states.front() ) );
      report.basin_sizes.push_back( basin[a] );
    }
    else
    {
      std::vector<state_index> cycle;
      for ( auto s : states )
      {
        cycle.push_back( state_index::from_code( n, s ) );
      }
      report.cycles.push_back( std::move( cycle ) );
      cycle_basins.push_back( basin[a] );
    }
  }
  report.basin_sizes.insert( report.basin_sizes.end(), cycle_basins.begin(), cycle_basins.end() );
  return report;
}

verification_report verify_global_stability( const boolean_network& net, const state_index& target, const verification_options& options )
{
  if ( target.size() != net.size() )
  {
    throw std::invalid_argument( fmt::format( "target has {} values, network has {} nodes", target.size(), net.size() ) );
  }

  if ( options.mode == verification_mode::exhaustive )
  {
    check_exhaustive( net, options.exhaustive_cap );
  }

  verification_report report;
  report.mode = options.mode;
  report.target = target;

  const auto next = step( net, target );
  if ( next != target )
  {
    const auto it = std::mismatch( next.bits.begin(), next.bits.end(), target.bits.begin() ).first;
    report.violating_node = static_cast<uint32_t>( it - next.bits.begin() );
    report.counterexample = target;
    report.message = fmt::format( "target is not a fixed point: node {} updates to {}", net.name( *report.violating_node ),
                                  int( *it ) );
    return report;
  }

  if ( options.mode == verification_mode::exhaustive )
  {
    const auto n = net.size();
    const auto sw = successor_sweep( net );
    const auto goal = static_cast<uint32_t>( target.code() );

    if ( sw.attractors.size() != 1u )
    {
      /* the first attractor other than the target witnesses the failure */
      for ( const auto& a : sw.attractors )
      {
        if ( a.front() != goal )
        {
          report.counterexample = state_index::from_code( n, a.front() );
          report.message = fmt::format( "{} attractors found", sw.attractors.size() );
          break;
        }
      }
      return report;
    }

    /* first-hit times, memoized along each trajectory */
    std::vector<int32_t> depth( sw.successor.size(), -1 );
    depth[goal] = 0;
    std::vector<uint32_t> path;
    int32_t worst = 0;
    for ( uint64_t s = 0; s < sw.successor.size(); ++s )
    {
      path.clear();
      auto v = static_cast<uint32_t>( s );
      while ( depth[v] < 0 )
      {
        path.push_back( v );
        v = sw.successor[v];
      }
      auto d = depth[v];
      for ( auto it = path.rbegin(); it != path.rend(); ++it )
      {
        depth[*it] = ++d;
      }
      worst = std::max( worst, d );
    }
    report.verified = true;
    report.convergence_time = static_cast<uint64_t>( worst );
    return report;
  }

  if ( !options.seed )
  {
    throw std::invalid_argument( "sampled verification requires a seed" );
  }
  if ( options.samples == 0u )
  {
    throw std::invalid_argument( "sampled verification requires at least one sample" );
  }
  const auto steps = options.steps == 0u ? 4u * net.size() : options.steps;
  report.samples = options.samples;
  report.steps = steps;
  report.seed = options.seed;

  uint64_t worst = 0u;
  for ( auto x : random_states( net.size(), options.samples, *options.seed ) )
  {
    const auto initial = x;
    std::optional<uint64_t> hit;
    for ( std::size_t t = 0; t < steps && !hit; ++t )
    {
      if ( x == target )
      {
        hit = t;
        break;
      }
      x = step( net, x );
    }
    if ( !hit && x == target )
    {
      hit = steps;
    }
    if ( !hit )
    {
      report.counterexample = initial;
      report.message = fmt::format( "trajectory not at target after {} steps", steps );
      return report;
    }
    worst = std::max( worst, *hit );
  }
  report.verified = true;
  report.convergence_time = worst;
  report.message = "sampled evidence only";
  return report;
}

std::vector<transition> state_transition_graph( const boolean_network& net, std::size_t cap )
{
  check_exhaustive( net, cap );
  const auto n = net.size();
  packed_stepper stepper( net );
  std::vector<transition> result;
  const uint64_t states = uint64_t{ 1 } << n;
  result.reserve( states );
  for ( uint64_t c = 0; c < states; ++c )
  {
    result.push_back( { state_index::from_code( n, c ), state_index::from_code( n, stepper( c ) ) } );
  }
  return result;
}

std::vector<transition> state_transition_graph( const boolean_network& net, const std::vector<state_index>& initial_states )
{
  std::vector<transition> result;
  std::set<state_index> seen;
  for ( auto x : initial_states )
  {
    while ( seen.insert( x ).second )
    {
      auto next = step( net, x );
      result.push_back( { x, next } );
      x = std::move( next );
    }
  }
  return result;
}

std::vector<state_index> random_states( std::size_t n, std::size_t count, uint64_t seed )
{
  std::mt19937_64 rng( seed );
  std::vector<state_index> states( count );
  for ( auto& s : states )
  {
    s.bits.resize( n );
    uint64_t word = 0u;
    for ( std::size_t i = 0; i < n; ++i )
    {
      if ( i % 64u == 0u )
      {
        word = rng();
      }
      s.bits[i] = static_cast<uint8_t>( ( word >> ( i % 64u ) ) & 1u );
    }
  }
  return states;
}

std::string to_dot( const std::vector<transition>& transitions )
{
  std::string out = "digraph stg {\n  node [shape=box];\n";
  std::set<state_index> declared;
  for ( const auto& t : transitions )
  {
    for ( const auto* s : { &t.from, &t.to } )
    {
      if ( declared.insert( *s ).second )
      {
        out += fmt::format( "  \"{}\";\n", s->to_string() );
      }
    }
  }
  for ( const auto& t : transitions )
  {
    out += fmt::format( "  \"{}\" -> \"{}\";\n", t.from.to_string(), t.to.to_string() );
  }
  out += "}\n";
  return out;
}

} // namespace bnpin
