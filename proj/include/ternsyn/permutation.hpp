// Copyright 2026 The ternsyn authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*!
  \file permutation.hpp
  \brief Symmetric-group arithmetic on {1..m}: composition, parity, cycle
  decomposition, and factorization of even permutations into 3-cycles and
  neighbor 3-cycles

  Composition convention, used uniformly across the library: the product of s
  and t applies s first.  Every factor list below composes left to right under
  this rule.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ternsyn
{

/*! \brief A bijection on the symbols {1..m}, stored in one-line form. */
class permutation
{
public:
  //! The identity on {1..m}.
  explicit permutation( std::uint32_t symbol_count )
      : image_( symbol_count )
  {
    if ( symbol_count < 1 )
    {
      throw std::invalid_argument( "permutation: symbol count must be at least 1" );
    }
    std::iota( image_.begin(), image_.end(), 1u );
  }

  //! Builds from one-line form; image[i - 1] is the image of symbol i.
  static permutation from_image( std::vector<std::uint32_t> image )
  {
    permutation p;
    p.image_ = std::move( image );
    p.validate();
    return p;
  }

  std::uint32_t size() const
  {
    return static_cast<std::uint32_t>( image_.size() );
  }

  //! 1-based application.
  std::uint32_t apply( std::uint32_t symbol ) const
  {
    if ( symbol < 1 || symbol > image_.size() )
    {
      throw std::out_of_range( "permutation: symbol out of range" );
    }
    return image_[symbol - 1];
  }

  std::vector<std::uint32_t> const& image() const
  {
    return image_;
  }

  bool is_identity() const
  {
    for ( std::uint32_t i = 0; i < image_.size(); ++i )
    {
      if ( image_[i] != i + 1 )
      {
        return false;
      }
    }
    return true;
  }

  friend bool operator==( permutation const&, permutation const& ) = default;

private:
  permutation() = default;

  void validate() const
  {
    if ( image_.empty() )
    {
      throw std::invalid_argument( "permutation: symbol count must be at least 1" );
    }
    std::vector<bool> seen( image_.size() + 1, false );
    for ( auto v : image_ )
    {
      if ( v < 1 || v > image_.size() || seen[v] )
      {
        throw std::invalid_argument( "permutation: image is not a bijection on {1..m}" );
      }
      seen[v] = true;
    }
  }

  std::vector<std::uint32_t> image_;
};

//! An ordered list of distinct symbols (d_1, ..., d_j) mapping each to the next.
using cycle = std::vector<std::uint32_t>;

inline bool is_three_cycle( cycle const& c )
{
  return c.size() == 3 && c[0] != c[1] && c[1] != c[2] && c[0] != c[2];
}

//! A 3-cycle on consecutive symbols (i, i+1, i+2), stored in that order.
inline bool is_neighbor_three_cycle( cycle const& c )
{
  return c.size() == 3 && c[1] == c[0] + 1 && c[2] == c[0] + 2;
}

//! Rotates a cycle so its minimum symbol comes first; the mapping is unchanged.
inline cycle rotated_min_first( cycle c )
{
  auto it = std::min_element( c.begin(), c.end() );
  std::rotate( c.begin(), it, c.end() );
  return c;
}

//! The product s then t: (s * t)(i) = t(s(i)).
inline permutation compose( permutation const& s, permutation const& t )
{
  if ( s.size() != t.size() )
  {
    throw std::invalid_argument( "compose: size mismatch" );
  }
  std::vector<std::uint32_t> image( s.size() );
  for ( std::uint32_t i = 1; i <= s.size(); ++i )
  {
    image[i - 1] = t.apply( s.apply( i ) );
  }
  return permutation::from_image( std::move( image ) );
}

inline permutation inverse( permutation const& p )
{
  std::vector<std::uint32_t> image( p.size() );
  for ( std::uint32_t i = 1; i <= p.size(); ++i )
  {
    image[p.apply( i ) - 1] = i;
  }
  return permutation::from_image( std::move( image ) );
}

enum class parity_kind : std::uint8_t
{
  even,
  odd
};

//! Parity of the transposition count: m minus the number of cycles, mod 2.
inline parity_kind parity( permutation const& p )
{
  std::vector<bool> visited( p.size() + 1, false );
  std::uint32_t cycles = 0;
  for ( std::uint32_t i = 1; i <= p.size(); ++i )
  {
    if ( visited[i] )
    {
      continue;
    }
    ++cycles;
    for ( std::uint32_t j = i; !visited[j]; j = p.apply( j ) )
    {
      visited[j] = true;
    }
  }
  return ( ( p.size() - cycles ) % 2 == 0 ) ? parity_kind::even : parity_kind::odd;
}

/*! \brief Disjoint cycles covering all non-fixed symbols.
 *
 * Cycles are listed by ascending minimum symbol and each starts at its
 * minimum; fixed points are omitted, so the identity decomposes to an empty
 * list.
 */
inline std::vector<cycle> cycle_decomposition( permutation const& p )
{
  std::vector<cycle> cycles;
  std::vector<bool> visited( p.size() + 1, false );
  for ( std::uint32_t i = 1; i <= p.size(); ++i )
  {
    if ( visited[i] || p.apply( i ) == i )
    {
      visited[i] = true;
      continue;
    }
    cycle c;
    for ( std::uint32_t j = i; !visited[j]; j = p.apply( j ) )
    {
      visited[j] = true;
      c.push_back( j );
    }
    cycles.push_back( std::move( c ) );
  }
  return cycles;
}

//! The permutation of a single cycle on {1..m}.
inline permutation permutation_from_cycle( cycle const& c, std::uint32_t m )
{
  permutation id( m );
  std::vector<std::uint32_t> image = id.image();
  std::vector<bool> seen( m + 1, false );
  if ( c.size() < 2 )
  {
    throw std::invalid_argument( "permutation_from_cycle: cycle needs at least two symbols" );
  }
  for ( auto v : c )
  {
    if ( v < 1 || v > m || seen[v] )
    {
      throw std::invalid_argument( "permutation_from_cycle: symbols must be distinct and within {1..m}" );
    }
    seen[v] = true;
  }
  for ( std::size_t k = 0; k < c.size(); ++k )
  {
    image[c[k] - 1] = c[( k + 1 ) % c.size()];
  }
  return permutation::from_image( std::move( image ) );
}

//! Left-to-right product of a cycle list (first cycle applies first).
inline permutation permutation_from_cycles( std::vector<cycle> const& cycles, std::uint32_t m )
{
  permutation p( m );
  for ( auto const& c : cycles )
  {
    p = compose( p, permutation_from_cycle( c, m ) );
  }
  return p;
}

/*! \brief Factors an even permutation into 3-cycles.
 *
 * Each disjoint cycle (c1,...,ck) is first rewritten as the transposition
 * chain (c1,c2)(c1,c3)...(c1,ck); consecutive transposition pairs then merge
 * into 3-cycles: an overlapping pair (x,y)(y,z) becomes (x,z,y) and a
 * disjoint pair (a,b)(c,d) becomes (a,c,b)(b,d,c).  Both rewrite rules are
 * re-proved against a multiplication oracle in the test suite.
 */
inline std::vector<cycle> three_cycle_factorization( permutation const& p )
{
  if ( parity( p ) != parity_kind::even )
  {
    throw std::invalid_argument( "three_cycle_factorization: permutation must be even" );
  }

  std::vector<std::pair<std::uint32_t, std::uint32_t>> transpositions;
  for ( auto const& c : cycle_decomposition( p ) )
  {
    for ( std::size_t i = 1; i < c.size(); ++i )
    {
      transpositions.emplace_back( c[0], c[i] );
    }
  }

  std::vector<cycle> factors;
  for ( std::size_t i = 0; i + 1 < transpositions.size(); i += 2 )
  {
    auto const [a, b] = transpositions[i];
    auto const [c, d] = transpositions[i + 1];
    if ( ( a == c && b == d ) || ( a == d && b == c ) )
    {
      continue; // equal transpositions cancel
    }
    std::uint32_t shared = 0;
    if ( a == c || a == d )
    {
      shared = a;
    }
    else if ( b == c || b == d )
    {
      shared = b;
    }
    if ( shared != 0 )
    {
      std::uint32_t const x = ( a == shared ) ? b : a;
      std::uint32_t const z = ( c == shared ) ? d : c;
      factors.push_back( rotated_min_first( { x, z, shared } ) );
    }
    else
    {
      factors.push_back( rotated_min_first( { a, c, b } ) );
      factors.push_back( rotated_min_first( { b, d, c } ) );
    }
  }
  return factors;
}

namespace detail
{

inline void emit_sigma( std::vector<cycle>& out, std::uint32_t i )
{
  out.push_back( { i, i + 1, i + 2 } );
}

/*! \brief Factors an ascending 3-cycle (a,b,c), a < b < c, into neighbor 3-cycles.
 *
 * Span reduction by conjugation with the neighbor cycle s_i = (i,i+1,i+2):
 * for any g, (a,b,c) = g * (g(a),g(b),g(c)) * g^-1.  Taking g = s_a when b
 * >= a+3 (g fixes b and c) or g = s_{c-2}^-1 when c >= b+3 (g fixes a and b)
 * shrinks the span by one at a cost of three neighbor factors.  The residual
 * small shapes bottom out in three fixed identities.  Every rule is re-proved
 * against a multiplication oracle in the test suite; the factor count grows
 * linearly with the span.
 */
inline void factor_ascending( std::uint32_t a, std::uint32_t b, std::uint32_t c, std::vector<cycle>& out )
{
  if ( b == a + 1 && c == a + 2 )
  {
    emit_sigma( out, a );
    return;
  }
  if ( b >= a + 3 )
  {
    // (a,b,c) = s_a * (a+1,b,c) * s_a^2
    emit_sigma( out, a );
    factor_ascending( a + 1, b, c, out );
    emit_sigma( out, a );
    emit_sigma( out, a );
    return;
  }
  if ( c >= b + 3 )
  {
    // (a,b,c) = s_{c-2}^2 * (a,b,c-1) * s_{c-2}
    emit_sigma( out, c - 2 );
    emit_sigma( out, c - 2 );
    factor_ascending( a, b, c - 1, out );
    emit_sigma( out, c - 2 );
    return;
  }
  if ( b == a + 1 && c == a + 3 )
  {
    // (a,a+1,a+3) = s_{a+1} * s_a^2 * s_{a+1}^2
    emit_sigma( out, a + 1 );
    emit_sigma( out, a );
    emit_sigma( out, a );
    emit_sigma( out, a + 1 );
    emit_sigma( out, a + 1 );
    return;
  }
  if ( b == a + 2 && c == a + 3 )
  {
    // (a,a+2,a+3) = s_{a+1} * s_a^2
    emit_sigma( out, a + 1 );
    emit_sigma( out, a );
    emit_sigma( out, a );
    return;
  }
  // remaining shape (a,a+2,a+4) splits as (a,a+2,a+3) * (a,a+3,a+4)
  factor_ascending( a, a + 2, a + 3, out );
  factor_ascending( a, a + 3, a + 4, out );
}

} // namespace detail

/*! \brief Factors a 3-cycle on {1..m} into neighbor 3-cycles.
 *
 * The cycle is rotated so its minimum symbol comes first; the descending
 * orientation (a,c,b) is the square of (a,b,c) and emits that factor list
 * twice.  All returned factors are ascending neighbor 3-cycles.
 */
inline std::vector<cycle> neighbor_three_cycle_factorization( cycle const& c, std::uint32_t m )
{
  if ( !is_three_cycle( c ) )
  {
    throw std::invalid_argument( "neighbor_three_cycle_factorization: input must be a 3-cycle" );
  }
  if ( m < 3 )
  {
    throw std::invalid_argument( "neighbor_three_cycle_factorization: need at least three symbols" );
  }
  for ( auto v : c )
  {
    if ( v < 1 || v > m )
    {
      throw std::invalid_argument( "neighbor_three_cycle_factorization: symbol out of range" );
    }
  }
  cycle const n = rotated_min_first( c );
  std::vector<cycle> out;
  if ( n[1] < n[2] )
  {
    detail::factor_ascending( n[0], n[1], n[2], out );
  }
  else
  {
    std::vector<cycle> ascending;
    detail::factor_ascending( n[0], n[2], n[1], ascending );
    out = ascending;
    out.insert( out.end(), ascending.begin(), ascending.end() );
  }
  return out;
}

} // namespace ternsyn
