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
  \file gate.hpp
  \brief The five primitive ternary gates, their action on words, their
  denotation as permutations, and circuit simulation
*/

#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "permutation.hpp"
#include "word.hpp"

namespace ternsyn
{

enum class gate_kind : std::uint8_t
{
  swap,     //!< E(i,j): exchanges lines i and j
  not_gate, //!< N(j): adds 1 mod 3 to line j
  toffoli,  //!< T: adds 1 mod 3 to line 1 iff lines 2..n all equal 1
  cnot,     //!< C(j,i): adds 1 mod 3 to line j iff line i equals 1
  mul_two   //!< M(i): multiplies line i by 2 mod 3, exchanging values 1 and 2
};

struct gate
{
  gate_kind kind{ gate_kind::toffoli };
  std::uint32_t a{ 0 }; //!< swap: lower line; not: line; cnot: target; mul_two: line
  std::uint32_t b{ 0 }; //!< swap: higher line; cnot: control

  friend bool operator==( gate const&, gate const& ) = default;
};

inline gate swap_gate( std::uint32_t i, std::uint32_t j )
{
  if ( i < 1 || j < 1 || i == j )
  {
    throw std::invalid_argument( "swap_gate: lines must be positive and distinct" );
  }
  if ( i > j )
  {
    std::swap( i, j );
  }
  return { gate_kind::swap, i, j };
}

inline gate not_gate( std::uint32_t j )
{
  if ( j < 1 )
  {
    throw std::invalid_argument( "not_gate: line must be positive" );
  }
  return { gate_kind::not_gate, j, 0 };
}

inline gate toffoli_gate()
{
  return { gate_kind::toffoli, 0, 0 };
}

inline gate cnot_gate( std::uint32_t target, std::uint32_t control )
{
  if ( target < 1 || control < 1 || target == control )
  {
    throw std::invalid_argument( "cnot_gate: target and control must be positive and distinct" );
  }
  return { gate_kind::cnot, target, control };
}

inline gate mul_two_gate( std::uint32_t i )
{
  if ( i < 1 )
  {
    throw std::invalid_argument( "mul_two_gate: line must be positive" );
  }
  return { gate_kind::mul_two, i, 0 };
}

inline void validate_gate( gate const& g, std::uint32_t width )
{
  switch ( g.kind )
  {
  case gate_kind::swap:
    if ( g.a < 1 || g.b <= g.a || g.b > width )
    {
      throw std::out_of_range( "gate: swap lines out of width" );
    }
    break;
  case gate_kind::not_gate:
  case gate_kind::mul_two:
    if ( g.a < 1 || g.a > width )
    {
      throw std::out_of_range( "gate: line out of width" );
    }
    break;
  case gate_kind::toffoli:
    if ( width < 1 )
    {
      throw std::out_of_range( "gate: toffoli needs at least one line" );
    }
    break;
  case gate_kind::cnot:
    if ( g.a < 1 || g.a > width || g.b < 1 || g.b > width || g.a == g.b )
    {
      throw std::out_of_range( "gate: cnot lines out of width" );
    }
    break;
  }
}

/*! \brief An ordered gate sequence over a fixed line count.
 *
 * Gates compose left to right: the first listed gate applies first.  The
 * empty sequence denotes the identity.
 */
struct circuit
{
  std::uint32_t width{ 0 };
  std::vector<gate> gates;

  friend bool operator==( circuit const&, circuit const& ) = default;
};

inline void validate_circuit( circuit const& c )
{
  if ( c.width < 1 )
  {
    throw std::invalid_argument( "circuit: width must be at least 1" );
  }
  for ( gate const& g : c.gates )
  {
    validate_gate( g, c.width );
  }
}

namespace detail
{

//! Gate application without re-validation; callers validate once up front.
inline void apply_gate_inplace( gate const& g, ternary_word& w )
{
  switch ( g.kind )
  {
  case gate_kind::swap:
  {
    trit const vi = w.get( g.a );
    w.set( g.a, w.get( g.b ) );
    w.set( g.b, vi );
    break;
  }
  case gate_kind::not_gate:
    w.set( g.a, add3( w.get( g.a ), 1 ) );
    break;
  case gate_kind::toffoli:
  {
    bool fire = true;
    for ( std::uint32_t line = 2; line <= w.width(); ++line )
    {
      if ( w.get( line ) != 1 )
      {
        fire = false;
        break;
      }
    }
    if ( fire )
    {
      w.set( 1, add3( w.get( 1 ), 1 ) );
    }
    break;
  }
  case gate_kind::cnot:
    if ( w.get( g.b ) == 1 )
    {
      w.set( g.a, add3( w.get( g.a ), 1 ) );
    }
    break;
  case gate_kind::mul_two:
    w.set( g.a, mul3( w.get( g.a ), 2 ) );
    break;
  }
}

} // namespace detail

inline ternary_word apply_gate( gate const& g, ternary_word w )
{
  validate_gate( g, w.width() );
  detail::apply_gate_inplace( g, w );
  return w;
}

//! Runs a word through the circuit, first gate first.
inline ternary_word simulate( circuit const& c, ternary_word w )
{
  if ( c.width != w.width() )
  {
    throw std::invalid_argument( "simulate: width mismatch" );
  }
  validate_circuit( c );
  for ( gate const& g : c.gates )
  {
    detail::apply_gate_inplace( g, w );
  }
  return w;
}

//! The permutation on {1..3^n} a single gate denotes under the canonical ordering.
inline permutation gate_to_permutation( gate const& g, std::uint32_t width )
{
  validate_gate( g, width );
  auto const m = pow3( width );
  std::vector<std::uint32_t> image( m );
  for ( std::uint64_t i = 1; i <= m; ++i )
  {
    ternary_word w = index_to_word( i, width );
    detail::apply_gate_inplace( g, w );
    image[i - 1] = static_cast<std::uint32_t>( word_to_index( w ) );
  }
  return permutation::from_image( std::move( image ) );
}

//! Left-to-right composition of the gate permutations.
inline permutation circuit_to_permutation( circuit const& c )
{
  validate_circuit( c );
  auto const m = pow3( c.width );
  std::vector<std::uint32_t> image( m );
  for ( std::uint64_t i = 1; i <= m; ++i )
  {
    ternary_word w = index_to_word( i, c.width );
    for ( gate const& g : c.gates )
    {
      detail::apply_gate_inplace( g, w );
    }
    image[i - 1] = static_cast<std::uint32_t>( word_to_index( w ) );
  }
  return permutation::from_image( std::move( image ) );
}

/*! \brief A base-gate sequence denoting the inverse of g.
 *
 * Swap and Multiply-Two are self-inverse; Not, Toffoli, and Controlled-Not
 * have order three, so their inverse is the gate applied twice.
 */
inline std::vector<gate> expand_inverse( gate const& g )
{
  switch ( g.kind )
  {
  case gate_kind::swap:
  case gate_kind::mul_two:
    return { g };
  case gate_kind::not_gate:
  case gate_kind::toffoli:
  case gate_kind::cnot:
    return { g, g };
  }
  throw std::logic_error( "expand_inverse: unknown gate kind" );
}

enum class gate_set : std::uint8_t
{
  snt, //!< {Swap, Not, Toffoli}
  ncmt //!< {Not, Controlled-Not, Multiply-Two, Toffoli}
};

inline bool conforms_to( circuit const& c, gate_set set )
{
  for ( gate const& g : c.gates )
  {
    if ( set == gate_set::snt && ( g.kind == gate_kind::cnot || g.kind == gate_kind::mul_two ) )
    {
      return false;
    }
    if ( set == gate_set::ncmt && g.kind == gate_kind::swap )
    {
      return false;
    }
  }
  return true;
}

} // namespace ternsyn
