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

#include <bnpin/render.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <map>
#include <set>

#include <fmt/format.h>

namespace bnpin
{

namespace
{

/* A cube over k variables: `care` marks the variables that appear, `value`
 * their polarity (1 = positive literal).  Bit k-1-i belongs to variable i,
 * matching the column layout of truth_table with the polarity inverted. */
struct cube
{
  uint32_t value;
  uint32_t care;

  bool covers( uint32_t assignment ) const { return ( assignment & care ) == value; }
  auto operator<=>( const cube& ) const = default;
};

std::vector<cube> prime_implicants( const std::vector<uint32_t>& minterms, uint32_t k )
{
  const uint32_t full = k == 32u ? ~0u : ( ( 1u << k ) - 1u );
  std::set<cube> current;
  for ( auto m : minterms )
  {
    current.insert( { m, full } );
  }

  std::vector<cube> primes;
  while ( !current.empty() )
  {
    std::set<cube> next;
    std::set<cube> merged;
    /* bucket by care mask; only cubes with equal masks can merge */
    std::map<uint32_t, std::vector<cube>> by_care;
    for ( const auto& c : current )
    {
      by_care[c.care].push_back( c );
    }
    for ( auto& [care, cubes] : by_care )
    {
      std::set<uint32_t> values;
      for ( const auto& c : cubes )
      {
        values.insert( c.value );
      }
      for ( const auto& c : cubes )
      {
        for ( uint32_t bit = 1u; bit & full; bit <<= 1u )
        {
          if ( ( care & bit ) == 0u || ( c.value & bit ) == 0u )
          {
            continue;
          }
          const auto partner = c.value & ~bit;
          if ( values.count( partner ) )
          {
            next.insert( { partner, care & ~bit } );
            merged.insert( c );
            merged.insert( { partner, care } );
          }
        }
      }
    }
    for ( const auto& c : current )
    {
      if ( !merged.count( c ) )
      {
        primes.push_back( c );
      }
    }
    current = std::move( next );
  }
  return primes;
}

std::vector<cube> select_cover( const std::vector<cube>& primes, const std::vector<uint32_t>& minterms )
{
  std::vector<uint8_t> covered( minterms.size(), 0u );
  std::vector<uint8_t> taken( primes.size(), 0u );
  std::vector<cube> cover;

  const auto take = [&]( std::size_t p ) {
    taken[p] = 1u;
    cover.push_back( primes[p] );
    for ( std::size_t m = 0; m < minterms.size(); ++m )
    {
      if ( primes[p].covers( minterms[m] ) )
      {
        covered[m] = 1u;
      }
    }
  };

  /* essential primes */
  for ( std::size_t m = 0; m < minterms.size(); ++m )
  {
    std::size_t count = 0u, last = 0u;
    for ( std::size_t p = 0; p < primes.size(); ++p )
    {
      if ( primes[p].covers( minterms[m] ) )
      {
        ++count;
        last = p;
      }
    }
    if ( count == 1u && !taken[last] )
    {
      take( last );
    }
  }

  /* greedy on the rest: most new minterms, then fewest literals */
  while ( std::find( covered.begin(), covered.end(), 0u ) != covered.end() )
  {
    std::size_t best = primes.size();
    std::size_t best_gain = 0u;
    int best_literals = 0;
    for ( std::size_t p = 0; p < primes.size(); ++p )
    {
      if ( taken[p] )
      {
        continue;
      }
      std::size_t gain = 0u;
      for ( std::size_t m = 0; m < minterms.size(); ++m )
      {
        if ( !covered[m] && primes[p].covers( minterms[m] ) )
        {
          ++gain;
        }
      }
      const auto literals = std::popcount( primes[p].care );
      if ( gain > best_gain || ( gain == best_gain && gain > 0u && literals < best_literals ) )
      {
        best = p;
        best_gain = gain;
        best_literals = literals;
      }
    }
    take( best );
  }
  return cover;
}

std::string render_sop( const truth_table& table, const std::vector<std::string>& names )
{
  const auto k = table.arity();
  std::vector<uint32_t> minterms;
  const uint32_t full = ( 1u << k ) - 1u;
  for ( uint64_t c = 0; c < table.size(); ++c )
  {
    if ( table[c] )
    {
      /* polarity bits: 1 = variable true */
      minterms.push_back( static_cast<uint32_t>( ~c ) & full );
    }
  }

  auto cover = select_cover( prime_implicants( minterms, k ), minterms );

  const auto sort_key = [k]( const cube& c ) {
    std::vector<int> key( k );
    for ( uint32_t i = 0; i < k; ++i )
    {
      const uint32_t bit = 1u << ( k - 1u - i );
      key[i] = ( c.care & bit ) ? ( ( c.value & bit ) ? 0 : 1 ) : 2;
    }
    return key;
  };
  std::sort( cover.begin(), cover.end(), [&]( const cube& a, const cube& b ) { return sort_key( a ) < sort_key( b ); } );

  std::vector<std::string> terms;
  for ( const auto& c : cover )
  {
    std::vector<std::string> literals;
    for ( uint32_t i = 0; i < k; ++i )
    {
      const uint32_t bit = 1u << ( k - 1u - i );
      if ( c.care & bit )
      {
        literals.push_back( ( c.value & bit ) ? names[i] : "!" + names[i] );
      }
    }
    terms.push_back( fmt::format( "{}", fmt::join( literals, " & " ) ) );
  }
  return fmt::format( "{}", fmt::join( terms, " | " ) );
}

std::string render_shannon( const truth_table& table, const std::vector<std::string>& names, uint32_t first )
{
  if ( table.is_constant() )
  {
    return table[0] ? "1" : "0";
  }
  const auto k = table.arity();
  std::vector<uint32_t> rest( k - 1u );
  std::iota( rest.begin(), rest.end(), 1u );
  std::vector<uint8_t> fixed( k, 1u );
  const auto high = restrict_arguments( table, rest, fixed );
  fixed[0] = 0u;
  const auto low = restrict_arguments( table, rest, fixed );

  const auto& x = names[first];
  if ( high == low )
  {
    return render_shannon( high, names, first + 1u );
  }
  const auto hi = render_shannon( high, names, first + 1u );
  const auto lo = render_shannon( low, names, first + 1u );
  if ( hi == "1" && lo == "0" )
  {
    return x;
  }
  if ( hi == "0" && lo == "1" )
  {
    return "!" + x;
  }
  if ( hi == "1" )
  {
    return fmt::format( "({} | {})", x, lo );
  }
  if ( hi == "0" )
  {
    return fmt::format( "(!{} & {})", x, lo );
  }
  if ( lo == "1" )
  {
    return fmt::format( "(!{} | {})", x, hi );
  }
  if ( lo == "0" )
  {
    return fmt::format( "({} & {})", x, hi );
  }
  return fmt::format( "({} & {} | !{} & {})", x, hi, x, lo );
}

} // namespace

std::string render_expression( const truth_table& table, const std::vector<std::string>& names )
{
  if ( names.size() != table.arity() )
  {
    throw std::invalid_argument( fmt::format( "{} names given for a table of arity {}", names.size(), table.arity() ) );
  }
  if ( table.is_constant() )
  {
    return table[0] ? "1" : "0";
  }
  if ( table.arity() <= max_sop_arity )
  {
    return render_sop( table, names );
  }
  return render_shannon( table, names, 0u );
}

} // namespace bnpin
