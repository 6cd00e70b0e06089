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

#include <bnpin/network.hpp>
#include <bnpin/render.hpp>

#include <algorithm>
#include <cassert>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include <fmt/format.h>

namespace bnpin
{

parse_error::parse_error( const std::string& message, std::size_t line, std::size_t column )
    : std::runtime_error( fmt::format( "{}:{}: {}", line, column, message ) ), line_( line ), column_( column )
{
}

uint32_t boolean_network::add_node( std::string name, std::vector<uint32_t> in_neighbors, truth_table function )
{
  names_.push_back( std::move( name ) );
  in_neighbors_.emplace_back();
  functions_.emplace_back();
  const auto i = static_cast<uint32_t>( names_.size() - 1u );
  set_function( i, std::move( in_neighbors ), std::move( function ) );
  return i;
}

void boolean_network::set_function( uint32_t i, std::vector<uint32_t> in_neighbors, truth_table function )
{
  check_rule( in_neighbors, function );
  in_neighbors_[i] = std::move( in_neighbors );
  functions_[i] = std::move( function );
}

void boolean_network::check_rule( const std::vector<uint32_t>& in_neighbors, const truth_table& function ) const
{
  if ( function.arity() != in_neighbors.size() )
  {
    throw std::invalid_argument( fmt::format( "function arity {} does not match {} in-neighbors", function.arity(), in_neighbors.size() ) );
  }
  if ( !std::is_sorted( in_neighbors.begin(), in_neighbors.end() ) ||
       std::adjacent_find( in_neighbors.begin(), in_neighbors.end() ) != in_neighbors.end() )
  {
    throw std::invalid_argument( "in-neighbors must be strictly ascending" );
  }
}

std::optional<uint32_t> boolean_network::index_of( std::string_view name ) const
{
  const auto it = std::find( names_.begin(), names_.end(), name );
  if ( it == names_.end() )
  {
    return std::nullopt;
  }
  return static_cast<uint32_t>( it - names_.begin() );
}

uint32_t boolean_network::max_in_degree() const
{
  std::size_t k = 0u;
  for ( const auto& n : in_neighbors_ )
  {
    k = std::max( k, n.size() );
  }
  return static_cast<uint32_t>( k );
}

bool boolean_network::evaluate( uint32_t i, std::span<const uint8_t> state ) const
{
  const auto& nbrs = in_neighbors_[i];
  uint64_t c = 0u;
  for ( auto j : nbrs )
  {
    c = ( c << 1u ) | ( state[j] ? 0u : 1u );
  }
  return functions_[i][c];
}

bool boolean_network::is_minimal() const
{
  for ( const auto& f : functions_ )
  {
    for ( uint32_t v = 0; v < f.arity(); ++v )
    {
      if ( !f.depends_on( v ) )
      {
        return false;
      }
    }
  }
  return true;
}

/******************************************************************************
 * expressions                                                                *
 ******************************************************************************/

namespace
{

enum class op_kind : uint8_t
{
  constant,
  variable,
  negation,
  conjunction,
  exclusive_or,
  disjunction,
  implication,
  equivalence
};

struct expr_node
{
  op_kind kind;
  uint32_t value = 0u; /* constant value or variable slot */
  int32_t lhs = -1;
  int32_t rhs = -1;
};

/* Recursive-descent parser over one expression.  Variables are resolved by
 * the callback to a stable key (node index or position); the parser records
 * them in first-occurrence order as slots. */
class expression_parser
{
public:
  using resolver = std::function<std::optional<uint32_t>( std::string_view )>;

  expression_parser( std::string_view text, std::size_t line, std::size_t column_offset, resolver resolve )
      : text_( text ), line_( line ), offset_( column_offset ), resolve_( std::move( resolve ) )
  {
  }

  int32_t parse()
  {
    skip_space();
    if ( pos_ == text_.size() )
    {
      fail( "expected an expression" );
    }
    const auto root = parse_equivalence();
    skip_space();
    if ( pos_ != text_.size() )
    {
      fail( fmt::format( "unexpected '{}'", text_[pos_] ) );
    }
    return root;
  }

  const std::vector<expr_node>& nodes() const { return nodes_; }
  const std::vector<uint32_t>& keys() const { return keys_; }

private:
  [[noreturn]] void fail( const std::string& message ) const
  {
    throw parse_error( message, line_, offset_ + pos_ + 1u );
  }

  void skip_space()
  {
    while ( pos_ < text_.size() && std::isspace( static_cast<unsigned char>( text_[pos_] ) ) )
    {
      ++pos_;
    }
  }

  bool accept( std::string_view token )
  {
    skip_space();
    if ( text_.substr( pos_, token.size() ) == token )
    {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  int32_t push( expr_node n )
  {
    nodes_.push_back( n );
    return static_cast<int32_t>( nodes_.size() - 1u );
  }

  int32_t parse_equivalence()
  {
    auto lhs = parse_implication();
    while ( accept( "<->" ) )
    {
      const auto rhs = parse_implication();
      lhs = push( { op_kind::equivalence, 0u, lhs, rhs } );
    }
    return lhs;
  }

  int32_t parse_implication()
  {
    const auto lhs = parse_disjunction();
    skip_space();
    /* "<->" is handled one level up */
    if ( text_.substr( pos_, 2u ) == "->" )
    {
      pos_ += 2u;
      const auto rhs = parse_implication();
      return push( { op_kind::implication, 0u, lhs, rhs } );
    }
    return lhs;
  }

  int32_t parse_disjunction()
  {
    auto lhs = parse_exclusive_or();
    while ( accept( "|" ) )
    {
      const auto rhs = parse_exclusive_or();
      lhs = push( { op_kind::disjunction, 0u, lhs, rhs } );
    }
    return lhs;
  }

  int32_t parse_exclusive_or()
  {
    auto lhs = parse_conjunction();
    while ( accept( "^" ) )
    {
      const auto rhs = parse_conjunction();
      lhs = push( { op_kind::exclusive_or, 0u, lhs, rhs } );
    }
    return lhs;
  }

  int32_t parse_conjunction()
  {
    auto lhs = parse_unary();
    while ( accept( "&" ) )
    {
      const auto rhs = parse_unary();
      lhs = push( { op_kind::conjunction, 0u, lhs, rhs } );
    }
    return lhs;
  }

  int32_t parse_unary()
  {
    if ( accept( "!" ) )
    {
      const auto arg = parse_unary();
      return push( { op_kind::negation, 0u, arg, -1 } );
    }
    return parse_primary();
  }

  int32_t parse_primary()
  {
    skip_space();
    if ( pos_ == text_.size() )
    {
      fail( "unexpected end of expression" );
    }
    const auto ch = text_[pos_];
    if ( ch == '(' )
    {
      ++pos_;
      const auto inner = parse_equivalence();
      if ( !accept( ")" ) )
      {
        fail( "expected ')'" );
      }
      return inner;
    }
    if ( ch == '0' || ch == '1' )
    {
      const auto next = pos_ + 1u;
      if ( next == text_.size() || !is_name_char( text_[next] ) )
      {
        ++pos_;
        return push( { op_kind::constant, ch == '1' ? 1u : 0u } );
      }
    }
    if ( std::isalpha( static_cast<unsigned char>( ch ) ) || ch == '_' )
    {
      const auto start = pos_;
      while ( pos_ < text_.size() && is_name_char( text_[pos_] ) )
      {
        ++pos_;
      }
      const auto name = text_.substr( start, pos_ - start );
      const auto key = resolve_( name );
      if ( !key )
      {
        pos_ = start;
        fail( fmt::format( "unknown node '{}'", name ) );
      }
      auto it = std::find( keys_.begin(), keys_.end(), *key );
      if ( it == keys_.end() )
      {
        keys_.push_back( *key );
        it = keys_.end() - 1;
      }
      return push( { op_kind::variable, static_cast<uint32_t>( it - keys_.begin() ) } );
    }
    fail( fmt::format( "unexpected '{}'", ch ) );
  }

  static bool is_name_char( char c )
  {
    return std::isalnum( static_cast<unsigned char>( c ) ) || c == '_';
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t offset_;
  resolver resolve_;
  std::size_t pos_ = 0u;
  std::vector<expr_node> nodes_;
  std::vector<uint32_t> keys_;
};

bool evaluate_expr( const std::vector<expr_node>& nodes, int32_t root, std::span<const uint8_t> slots )
{
  const auto& n = nodes[root];
  switch ( n.kind )
  {
  case op_kind::constant:
    return n.value != 0u;
  case op_kind::variable:
    return slots[n.value] != 0u;
  case op_kind::negation:
    return !evaluate_expr( nodes, n.lhs, slots );
  case op_kind::conjunction:
    return evaluate_expr( nodes, n.lhs, slots ) && evaluate_expr( nodes, n.rhs, slots );
  case op_kind::exclusive_or:
    return evaluate_expr( nodes, n.lhs, slots ) != evaluate_expr( nodes, n.rhs, slots );
  case op_kind::disjunction:
    return evaluate_expr( nodes, n.lhs, slots ) || evaluate_expr( nodes, n.rhs, slots );
  case op_kind::implication:
    return !evaluate_expr( nodes, n.lhs, slots ) || evaluate_expr( nodes, n.rhs, slots );
  case op_kind::equivalence:
    return evaluate_expr( nodes, n.lhs, slots ) == evaluate_expr( nodes, n.rhs, slots );
  }
  return false;
}

/* Truth table of a parsed expression over `order`, where order[p] is the key
 * of the p-th argument. */
truth_table tabulate( const expression_parser& parser, int32_t root, const std::vector<uint32_t>& order )
{
  const auto& keys = parser.keys();
  std::vector<uint32_t> slot_of_arg( order.size() );
  for ( std::size_t p = 0; p < order.size(); ++p )
  {
    slot_of_arg[p] = static_cast<uint32_t>( std::find( keys.begin(), keys.end(), order[p] ) - keys.begin() );
  }
  const auto arity = static_cast<uint32_t>( order.size() );
  /* the extra slot absorbs arguments that do not occur in the expression */
  std::vector<uint8_t> slots( keys.size() + 1u, 0u );
  truth_table table( arity );
  for ( uint64_t c = 0; c < table.size(); ++c )
  {
    for ( uint32_t p = 0; p < arity; ++p )
    {
      slots[slot_of_arg[p]] = ( ( c >> ( arity - 1u - p ) ) & 1u ) ? 0u : 1u;
    }
    table.set( c, evaluate_expr( parser.nodes(), root, slots ) );
  }
  return table;
}

std::string_view trim( std::string_view s )
{
  while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.front() ) ) )
  {
    s.remove_prefix( 1u );
  }
  while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.back() ) ) )
  {
    s.remove_suffix( 1u );
  }
  return s;
}

bool iequals( std::string_view a, std::string_view b )
{
  return a.size() == b.size() && std::equal( a.begin(), a.end(), b.begin(), []( char x, char y ) {
           return std::tolower( static_cast<unsigned char>( x ) ) == std::tolower( static_cast<unsigned char>( y ) );
         } );
}

bool is_identifier( std::string_view s )
{
  if ( s.empty() || !( std::isalpha( static_cast<unsigned char>( s.front() ) ) || s.front() == '_' ) )
  {
    return false;
  }
  return std::all_of( s.begin(), s.end(), []( char c ) { return std::isalnum( static_cast<unsigned char>( c ) ) || c == '_'; } );
}

struct rule_line
{
  std::size_t line;
  std::string_view name;
  std::size_t name_column;
  std::string_view expr;
  std::size_t expr_column;
};

} // namespace

truth_table parse_expression( std::string_view text, const std::vector<std::string>& variables )
{
  expression_parser parser( text, 1u, 0u, [&]( std::string_view name ) -> std::optional<uint32_t> {
    const auto it = std::find( variables.begin(), variables.end(), name );
    if ( it == variables.end() )
    {
      return std::nullopt;
    }
    return static_cast<uint32_t>( it - variables.begin() );
  } );
  const auto root = parser.parse();
  std::vector<uint32_t> order( variables.size() );
  std::iota( order.begin(), order.end(), 0u );
  return tabulate( parser, root, order );
}

boolean_network parse_network( std::string_view text, uint32_t max_in_degree )
{
  std::vector<rule_line> rules;
  std::size_t line_no = 0u;
  bool first_rule = true;
  while ( !text.empty() )
  {
    ++line_no;
    const auto eol = text.find( '\n' );
    auto raw = text.substr( 0u, eol );
    text = eol == std::string_view::npos ? std::string_view{} : text.substr( eol + 1u );

    if ( const auto hash = raw.find( '#' ); hash != std::string_view::npos )
    {
      raw = raw.substr( 0u, hash );
    }
    if ( trim( raw ).empty() )
    {
      continue;
    }

    const auto comma = raw.find( ',' );
    const auto lead = raw.find_first_not_of( " \t\r" );
    if ( comma == std::string_view::npos )
    {
      throw parse_error( "expected 'name, expression'", line_no, lead + 1u );
    }
    const auto name = trim( raw.substr( 0u, comma ) );
    const auto expr_raw = raw.substr( comma + 1u );
    const auto expr = trim( expr_raw );
    const auto expr_column = comma + 2u + ( expr.empty() ? 0u : static_cast<std::size_t>( expr.data() - expr_raw.data() ) );

    if ( first_rule && iequals( name, "targets" ) && iequals( expr, "factors" ) )
    {
      first_rule = false;
      continue;
    }
    first_rule = false;

    if ( !is_identifier( name ) )
    {
      throw parse_error( fmt::format( "invalid node name '{}'", name ), line_no, lead + 1u );
    }
    rules.push_back( { line_no, name, lead + 1u, expr, expr_column } );
  }

  if ( rules.empty() )
  {
    throw parse_error( "no rules found", line_no == 0u ? 1u : line_no, 1u );
  }

  std::map<std::string_view, uint32_t> index;
  for ( const auto& r : rules )
  {
    if ( !index.emplace( r.name, static_cast<uint32_t>( index.size() ) ).second )
    {
      throw parse_error( fmt::format( "duplicate rule for node '{}'", r.name ), r.line, r.name_column );
    }
  }

  boolean_network net;
  for ( const auto& r : rules )
  {
    if ( r.expr.empty() )
    {
      throw parse_error( fmt::format( "node '{}' has no rule", r.name ), r.line, r.expr_column );
    }
    expression_parser parser( r.expr, r.line, r.expr_column - 1u, [&]( std::string_view name ) -> std::optional<uint32_t> {
      const auto it = index.find( name );
      if ( it == index.end() )
      {
        return std::nullopt;
      }
      return it->second;
    } );
    const auto root = parser.parse();

    auto neighbors = parser.keys();
    std::sort( neighbors.begin(), neighbors.end() );
    if ( neighbors.size() > max_in_degree )
    {
      throw parse_error( fmt::format( "node '{}' has {} inputs, more than the limit of {}", r.name, neighbors.size(), max_in_degree ),
                         r.line, r.expr_column );
    }
    auto table = tabulate( parser, root, neighbors );
    net.add_node( std::string( r.name ), std::move( neighbors ), std::move( table ) );
  }
  return net;
}

boolean_network minimize( const boolean_network& net )
{
  boolean_network result;
  for ( uint32_t i = 0; i < net.size(); ++i )
  {
    const auto& f = net.function( i );
    const auto& nbrs = net.in_neighbors( i );

    std::vector<uint32_t> keep;
    for ( uint32_t v = 0; v < f.arity(); ++v )
    {
      if ( f.depends_on( v ) )
      {
        keep.push_back( v );
      }
    }
    if ( keep.size() == f.arity() )
    {
      result.add_node( net.name( i ), nbrs, f );
      continue;
    }

    /* nonfunctional arguments may be fixed at any value */
    const std::vector<uint8_t> fixed( f.arity(), 1u );
    std::vector<uint32_t> kept_nodes;
    for ( auto v : keep )
    {
      kept_nodes.push_back( nbrs[v] );
    }
    result.add_node( net.name( i ), std::move( kept_nodes ), restrict_arguments( f, keep, fixed ) );
  }
  return result;
}

std::string to_rules( const boolean_network& net )
{
  std::string out = "targets, factors\n";
  for ( uint32_t i = 0; i < net.size(); ++i )
  {
    std::vector<std::string> names;
    for ( auto j : net.in_neighbors( i ) )
    {
      names.push_back( net.name( j ) );
    }
    out += fmt::format( "{}, {}\n", net.name( i ), render_expression( net.function( i ), names ) );
  }
  return out;
}

/******************************************************************************
 * interaction digraph                                                        *
 ******************************************************************************/

interaction_digraph::interaction_digraph( uint32_t vertices, std::vector<edge> edges )
    : vertices_( vertices ), edges_( std::move( edges ) )
{
  std::sort( edges_.begin(), edges_.end() );
  if ( std::adjacent_find( edges_.begin(), edges_.end() ) != edges_.end() )
  {
    throw std::invalid_argument( "duplicate edge in interaction digraph" );
  }
  for ( const auto& e : edges_ )
  {
    if ( e.source >= vertices_ || e.target >= vertices_ )
    {
      throw std::invalid_argument( "edge endpoint out of range" );
    }
  }
}

std::optional<std::size_t> interaction_digraph::find( edge e ) const
{
  const auto it = std::lower_bound( edges_.begin(), edges_.end(), e );
  if ( it == edges_.end() || *it != e )
  {
    return std::nullopt;
  }
  return static_cast<std::size_t>( it - edges_.begin() );
}

interaction_digraph build_interaction_digraph( const boolean_network& net )
{
  std::vector<edge> edges;
  for ( uint32_t j = 0; j < net.size(); ++j )
  {
    for ( auto i : net.in_neighbors( j ) )
    {
      edges.push_back( { i, j } );
    }
  }
  return interaction_digraph( static_cast<uint32_t>( net.size() ), std::move( edges ) );
}

std::optional<std::vector<uint32_t>> topological_order( const interaction_digraph& g, const std::vector<uint8_t>& removed )
{
  const auto n = g.vertex_count();
  std::vector<uint32_t> indegree( n, 0u );
  std::vector<std::vector<uint32_t>> out( n );
  for ( std::size_t e = 0; e < g.edge_count(); ++e )
  {
    if ( !removed.empty() && removed[e] )
    {
      continue;
    }
    out[g.start( e )].push_back( g.end( e ) );
    ++indegree[g.end( e )];
  }

  std::vector<uint32_t> order;
  order.reserve( n );
  for ( uint32_t v = 0; v < n; ++v )
  {
    if ( indegree[v] == 0u )
    {
      order.push_back( v );
    }
  }
  for ( std::size_t head = 0; head < order.size(); ++head )
  {
    for ( auto w : out[order[head]] )
    {
      if ( --indegree[w] == 0u )
      {
        order.push_back( w );
      }
    }
  }
  if ( order.size() != n )
  {
    return std::nullopt;
  }
  return order;
}

std::vector<std::size_t> find_cycle( const interaction_digraph& g, const std::vector<uint8_t>& removed )
{
  const auto n = g.vertex_count();
  std::vector<std::vector<std::size_t>> out( n );
  for ( std::size_t e = 0; e < g.edge_count(); ++e )
  {
    if ( removed.empty() || !removed[e] )
    {
      out[g.start( e )].push_back( e );
    }
  }

  /* iterative DFS; 0 = white, 1 = on stack, 2 = done */
  std::vector<uint8_t> color( n, 0u );
  std::vector<std::size_t> via( n, 0u );
  for ( uint32_t root = 0; root < n; ++root )
  {
    if ( color[root] != 0u )
    {
      continue;
    }
    std::vector<std::pair<uint32_t, std::size_t>> stack{ { root, 0u } };
    color[root] = 1u;
    while ( !stack.empty() )
    {
      auto& [v, next] = stack.back();
      if ( next == out[v].size() )
      {
        color[v] = 2u;
        stack.pop_back();
        continue;
      }
      const auto e = out[v][next++];
      const auto w = g.end( e );
      if ( color[w] == 1u )
      {
        std::vector<std::size_t> cycle{ e };
        for ( auto u = v; u != w; u = g.start( via[u] ) )
        {
          cycle.push_back( via[u] );
        }
        std::reverse( cycle.begin(), cycle.end() );
        return cycle;
      }
      if ( color[w] == 0u )
      {
        color[w] = 1u;
        via[w] = e;
        stack.emplace_back( w, 0u );
      }
    }
  }
  return {};
}

logical_matrix algebraic_form( const boolean_network& net, std::size_t cap )
{
  const auto n = net.size();
  if ( n > cap )
  {
    throw cap_exceeded( fmt::format( "dense state transition matrix needs n <= {}, network has {} nodes", cap, n ) );
  }
  const uint64_t states = uint64_t{ 1 } << n;
  std::vector<uint64_t> cols( states );
  std::vector<uint8_t> next( n );
  for ( uint64_t c = 0; c < states; ++c )
  {
    const auto current = state_index::from_code( n, c );
    for ( uint32_t i = 0; i < n; ++i )
    {
      next[i] = net.evaluate( i, current.bits ) ? 1u : 0u;
    }
    cols[c] = truth_table::column_of( next ) + 1u;
  }
  return logical_matrix( states, std::move( cols ) );
}

} // namespace bnpin
