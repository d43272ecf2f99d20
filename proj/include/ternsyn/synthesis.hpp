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
  \file synthesis.hpp
  \brief The compiler core: realizing an arbitrary 3-cycle of assignment
  vectors over {Swap, Not, Toffoli}, synthesizing whole permutations from
  3-cycle factors, and Swap elimination into {Not, CNot, MulTwo, Toffoli}

  A 3-cycle (u, s, t) with at most two heterogeneous columns is realized as a
  conjugation A * M * A^-1: a normalization prefix A of Swap and Not (and, in
  the two-column case, Toffoli) gates moves the triple onto the three words
  that differ only in line 1 and hold 1 everywhere else, the middle M is one
  or two Toffoli gates, and the suffix undoes A gate by gate.  Triples with
  three or more heterogeneous columns route through the reflected Gray order:
  the 3-cycle of Gray positions factors into neighbor 3-cycles, and any three
  consecutive Gray words have at most two heterogeneous columns.
*/

#pragma once

#include <array>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gate.hpp"
#include "permutation.hpp"
#include "word.hpp"

namespace ternsyn
{

struct gate_counts
{
  std::uint64_t swaps{ 0 };
  std::uint64_t nots{ 0 };
  std::uint64_t toffolis{ 0 };
  std::uint64_t cnots{ 0 };
  std::uint64_t mul_twos{ 0 };

  std::uint64_t total() const
  {
    return swaps + nots + toffolis + cnots + mul_twos;
  }
};

inline gate_counts count_gates( circuit const& c )
{
  gate_counts counts;
  for ( gate const& g : c.gates )
  {
    switch ( g.kind )
    {
    case gate_kind::swap:
      ++counts.swaps;
      break;
    case gate_kind::not_gate:
      ++counts.nots;
      break;
    case gate_kind::toffoli:
      ++counts.toffolis;
      break;
    case gate_kind::cnot:
      ++counts.cnots;
      break;
    case gate_kind::mul_two:
      ++counts.mul_twos;
      break;
    }
  }
  return counts;
}

struct verify_result
{
  bool equal{ false };
  std::uint64_t mismatch_index{ 0 }; //!< first disagreement in canonical order, 1-based
  std::uint64_t circuit_image{ 0 };
  std::uint64_t target_image{ 0 };
};

//! Exhaustive equivalence check of a circuit against a target permutation.
inline verify_result verify( circuit const& c, permutation const& target )
{
  validate_circuit( c );
  if ( pow3( c.width ) != target.size() )
  {
    throw std::invalid_argument( "verify: circuit width does not match permutation size" );
  }
  for ( std::uint64_t i = 1; i <= target.size(); ++i )
  {
    ternary_word w = index_to_word( i, c.width );
    for ( gate const& g : c.gates )
    {
      detail::apply_gate_inplace( g, w );
    }
    std::uint64_t const got = word_to_index( w );
    std::uint64_t const want = target.apply( static_cast<std::uint32_t>( i ) );
    if ( got != want )
    {
      return { false, i, got, want };
    }
  }
  return { true, 0, 0, 0 };
}

namespace detail
{

inline std::uint8_t distinct_in_column( ternary_word const& u, ternary_word const& s, ternary_word const& t,
                                        std::uint32_t col )
{
  bool seen[3] = { false, false, false };
  seen[u.get( col )] = true;
  seen[s.get( col )] = true;
  seen[t.get( col )] = true;
  return static_cast<std::uint8_t>( seen[0] + seen[1] + seen[2] );
}

/*! \brief Realizes the 3-cycle (u, s, t) when at most two columns are heterogeneous.
 *
 * The loop appends normalization gates to the prefix while tracking their
 * effect on the three words, rotating role assignment (a rotation leaves the
 * cycle unchanged) wherever the construction fixes a particular row:
 *
 *  - one heterogeneous column: move it to line 1, set homogeneous columns to
 *    1, and pick T or T*T from the line-1 pattern;
 *  - distinct counts (2,3): set the odd row's line 2 to 1, align its line 1
 *    with the paired rows via T or T*T, set line 1 to all 1s, exchange lines
 *    1 and 2 - now one heterogeneous column remains;
 *  - distinct counts (2,2): set the line-2 pair to 1, bump the paired rows'
 *    line 1 by T or T*T until line 1 holds three values, exchange lines 1
 *    and 2 - now counts are (2,3);
 *  - distinct counts (3,3): one T on the row whose line Y2 is 1 collapses
 *    line 1 to two values - now counts are (2,3).
 *
 * The emitted circuit is prefix, middle, then the expanded inverses of the
 * prefix in reverse order, so every word outside {u, s, t} is restored.
 */
inline circuit conjugated_three_cycle( ternary_word u, ternary_word s, ternary_word t )
{
  std::uint32_t const n = u.width();
  std::vector<gate> prefix;
  std::vector<gate> middle;

  auto emit = [&]( gate const& g ) {
    prefix.push_back( g );
    apply_gate_inplace( g, u );
    apply_gate_inplace( g, s );
    apply_gate_inplace( g, t );
  };
  auto rotate_roles = [&]() {
    // (u, s, t) -> (s, t, u); same cycle, shifted roles
    std::swap( u, s );
    std::swap( s, t );
  };
  auto normalize_homogeneous = [&]( std::uint32_t first_col ) {
    for ( std::uint32_t j = first_col; j <= n; ++j )
    {
      trit const v = u.get( j );
      if ( v == 0 )
      {
        emit( not_gate( j ) );
      }
      else if ( v == 2 )
      {
        emit( not_gate( j ) );
        emit( not_gate( j ) );
      }
    }
  };

  for ( int guard = 0;; ++guard )
  {
    if ( guard > 8 )
    {
      throw std::logic_error( "conjugated_three_cycle: normalization did not converge" );
    }
    auto const profile = hetero_profile_of( u, s, t );
    auto const hetero = profile.heterogeneous_columns();

    if ( hetero.size() == 1 )
    {
      std::uint32_t const col = hetero[0];
      if ( col != 1 )
      {
        emit( swap_gate( 1, col ) );
      }
      normalize_homogeneous( 2 );
      // line 1 now holds a permutation of {0,1,2}; T steps it forward once
      bool const ascending = ( s.get( 1 ) == add3( u.get( 1 ), 1 ) );
      middle.push_back( toffoli_gate() );
      if ( !ascending )
      {
        middle.push_back( toffoli_gate() );
      }
      break;
    }

    if ( hetero.size() != 2 )
    {
      throw std::invalid_argument( "conjugated_three_cycle: triple must have one or two heterogeneous columns" );
    }

    std::uint32_t h1 = hetero[0];
    std::uint32_t h2 = hetero[1];
    if ( profile.columns[h1 - 1].distinct_count > profile.columns[h2 - 1].distinct_count )
    {
      std::swap( h1, h2 );
    }
    if ( h1 != 1 )
    {
      emit( swap_gate( 1, h1 ) );
      if ( h2 == 1 )
      {
        h2 = h1;
      }
    }
    if ( h2 != 2 )
    {
      emit( swap_gate( 2, h2 ) );
    }
    normalize_homogeneous( 3 );

    std::uint8_t const dc1 = distinct_in_column( u, s, t, 1 );
    std::uint8_t const dc2 = distinct_in_column( u, s, t, 2 );

    if ( dc1 == 2 && dc2 == 3 )
    {
      while ( u.get( 1 ) != s.get( 1 ) )
      {
        rotate_roles(); // odd row of line 1 takes role t
      }
      trit const shift2 = static_cast<trit>( ( 3 + 1 - t.get( 2 ) ) % 3 );
      for ( trit k = 0; k < shift2; ++k )
      {
        emit( not_gate( 2 ) );
      }
      // only row t has lines 2..n all 1, so T steps t's line 1 alone
      trit const steps = static_cast<trit>( ( 3 + u.get( 1 ) - t.get( 1 ) ) % 3 );
      for ( trit k = 0; k < steps; ++k )
      {
        emit( toffoli_gate() );
      }
      trit const shift1 = static_cast<trit>( ( 3 + 1 - u.get( 1 ) ) % 3 );
      for ( trit k = 0; k < shift1; ++k )
      {
        emit( not_gate( 1 ) );
      }
      emit( swap_gate( 1, 2 ) );
    }
    else if ( dc1 == 2 && dc2 == 2 )
    {
      while ( u.get( 2 ) != s.get( 2 ) )
      {
        rotate_roles(); // odd row of line 2 takes role t
      }
      trit const shift2 = static_cast<trit>( ( 3 + 1 - u.get( 2 ) ) % 3 );
      for ( trit k = 0; k < shift2; ++k )
      {
        emit( not_gate( 2 ) );
      }
      // rows u and s fire together; pick the T power that spreads line 1
      trit steps = 1;
      if ( add3( u.get( 1 ), 1 ) == t.get( 1 ) || add3( s.get( 1 ), 1 ) == t.get( 1 ) )
      {
        steps = 2;
      }
      for ( trit k = 0; k < steps; ++k )
      {
        emit( toffoli_gate() );
      }
      emit( swap_gate( 1, 2 ) );
    }
    else if ( dc1 == 3 && dc2 == 3 )
    {
      while ( u.get( 2 ) != 1 )
      {
        rotate_roles(); // the row with line 2 equal to 1 takes role u
      }
      emit( toffoli_gate() );
    }
    else
    {
      throw std::logic_error( "conjugated_three_cycle: unexpected distinct-count pattern" );
    }
  }

  circuit result{ n, {} };
  result.gates.reserve( prefix.size() * 3 + middle.size() );
  result.gates.insert( result.gates.end(), prefix.begin(), prefix.end() );
  result.gates.insert( result.gates.end(), middle.begin(), middle.end() );
  for ( auto it = prefix.rbegin(); it != prefix.rend(); ++it )
  {
    for ( gate const& g : expand_inverse( *it ) )
    {
      result.gates.push_back( g );
    }
  }
  return result;
}

inline void check_triple( ternary_word const& u, ternary_word const& s, ternary_word const& t )
{
  if ( u.width() != s.width() || s.width() != t.width() )
  {
    throw std::invalid_argument( "synth: words must share one width" );
  }
  if ( u == s || s == t || u == t )
  {
    throw std::invalid_argument( "synth: words must be pairwise distinct" );
  }
  if ( u.width() < 2 )
  {
    throw std::invalid_argument( "synth: width must be at least 2" );
  }
}

//! Dispatches a 3-cycle of words to its construction; case_id reports 1, 2, or 3.
inline circuit three_cycle_circuit( ternary_word const& u, ternary_word const& s, ternary_word const& t,
                                    std::uint32_t& case_id )
{
  check_triple( u, s, t );
  auto const k = hetero_profile_of( u, s, t ).heterogeneous_count();
  if ( k <= 2 )
  {
    case_id = k;
    return conjugated_three_cycle( u, s, t );
  }
  case_id = 3;

  // route through Gray positions: consecutive Gray words differ in one line,
  // so every neighbor 3-cycle of positions maps to a triple with at most two
  // heterogeneous columns
  std::uint32_t const n = u.width();
  auto const gray = gray_sequence( n );
  auto const m = pow3( n );
  std::vector<std::uint32_t> position_of( m + 1, 0 );
  for ( std::uint32_t g = 0; g < gray.size(); ++g )
  {
    position_of[word_to_index( gray[g] )] = g + 1;
  }
  cycle const position_cycle = {
      position_of[word_to_index( u )],
      position_of[word_to_index( s )],
      position_of[word_to_index( t )] };

  circuit result{ n, {} };
  for ( cycle const& factor : neighbor_three_cycle_factorization( position_cycle, static_cast<std::uint32_t>( m ) ) )
  {
    ternary_word const& a = gray[factor[0] - 1];
    ternary_word const& b = gray[factor[1] - 1];
    ternary_word const& c = gray[factor[2] - 1];
    circuit const part = conjugated_three_cycle( a, b, c );
    result.gates.insert( result.gates.end(), part.gates.begin(), part.gates.end() );
  }
  return result;
}

} // namespace detail

//! Realizes (u, s, t) when exactly one column is heterogeneous.
inline circuit synth_case1( ternary_word const& u, ternary_word const& s, ternary_word const& t )
{
  detail::check_triple( u, s, t );
  if ( hetero_profile_of( u, s, t ).heterogeneous_count() != 1 )
  {
    throw std::invalid_argument( "synth_case1: triple must have exactly one heterogeneous column" );
  }
  return detail::conjugated_three_cycle( u, s, t );
}

//! Realizes (u, s, t) when exactly two columns are heterogeneous.
inline circuit synth_case2( ternary_word const& u, ternary_word const& s, ternary_word const& t )
{
  detail::check_triple( u, s, t );
  if ( hetero_profile_of( u, s, t ).heterogeneous_count() != 2 )
  {
    throw std::invalid_argument( "synth_case2: triple must have exactly two heterogeneous columns" );
  }
  return detail::conjugated_three_cycle( u, s, t );
}

//! Realizes the 3-cycle (u, s, t) for any pairwise-distinct triple, width >= 2.
inline circuit synth_three_cycle( ternary_word const& u, ternary_word const& s, ternary_word const& t )
{
  std::uint32_t case_id = 0;
  return detail::three_cycle_circuit( u, s, t, case_id );
}

struct synthesis_report
{
  permutation target;
  circuit netlist;
  gate_counts counts;
  std::uint32_t three_cycle_count{ 0 };
  std::array<std::uint32_t, 3> case_histogram{}; //!< dispatches to case 1 / 2 / 3

  std::string summary() const
  {
    std::ostringstream out;
    out << "width:        " << netlist.width << " (m = " << pow3( netlist.width ) << ")\n";
    out << "parity:       " << ( parity( target ) == parity_kind::even ? "even" : "odd" ) << "\n";
    out << "three-cycles: " << three_cycle_count << "\n";
    out << "cases:        case1=" << case_histogram[0] << " case2=" << case_histogram[1]
        << " case3=" << case_histogram[2] << "\n";
    out << "gates:        E=" << counts.swaps << " N=" << counts.nots << " T=" << counts.toffolis
        << " C=" << counts.cnots << " M=" << counts.mul_twos << "\n";
    out << "total:        " << counts.total() << "\n";
    return out.str();
  }
};

/*! \brief Compiles a permutation on {1..3^n} into a {Swap, Not, Toffoli} netlist.
 *
 * An even target factors into 3-cycles, each realized separately; an odd
 * target is premultiplied by the Swap of lines 1 and 2, which is emitted as
 * the first gate.  The result is verified exhaustively before the report is
 * constructed.
 */
inline synthesis_report synthesize( permutation const& target, std::uint32_t width )
{
  if ( width < 2 )
  {
    throw std::invalid_argument( "synthesize: width must be at least 2" );
  }
  if ( pow3( width ) != target.size() )
  {
    throw std::invalid_argument( "synthesize: permutation size must equal 3^width" );
  }

  circuit netlist{ width, {} };
  permutation even_part = target;
  if ( parity( target ) == parity_kind::odd )
  {
    gate const e12 = swap_gate( 1, 2 );
    netlist.gates.push_back( e12 );
    even_part = compose( gate_to_permutation( e12, width ), target );
  }

  std::array<std::uint32_t, 3> histogram{};
  auto const factors = three_cycle_factorization( even_part );
  for ( cycle const& factor : factors )
  {
    std::uint32_t case_id = 0;
    circuit const part = detail::three_cycle_circuit(
        index_to_word( factor[0], width ),
        index_to_word( factor[1], width ),
        index_to_word( factor[2], width ),
        case_id );
    ++histogram[case_id - 1];
    netlist.gates.insert( netlist.gates.end(), part.gates.begin(), part.gates.end() );
  }

  if ( !verify( netlist, target ).equal )
  {
    throw std::logic_error( "synthesize: emitted circuit failed verification" );
  }
  return { target, netlist, count_gates( netlist ),
           static_cast<std::uint32_t>( factors.size() ), histogram };
}

/*! \brief Replaces every Swap gate by an equivalent 12-gate sequence over
 * {Not, CNot, MulTwo, Toffoli}; all other gates pass through unchanged.
 */
inline circuit lower_to_ncmt( circuit const& c )
{
  validate_circuit( c );
  circuit out{ c.width, {} };
  out.gates.reserve( c.gates.size() );
  for ( gate const& g : c.gates )
  {
    if ( g.kind != gate_kind::swap )
    {
      out.gates.push_back( g );
      continue;
    }
    std::uint32_t const i = g.a;
    std::uint32_t const j = g.b;
    gate const seq[12] = {
        mul_two_gate( i ), cnot_gate( j, i ), cnot_gate( i, j ), cnot_gate( i, j ),
        mul_two_gate( j ), cnot_gate( i, j ), cnot_gate( j, i ), cnot_gate( j, i ),
        mul_two_gate( i ), cnot_gate( j, i ), cnot_gate( i, j ), cnot_gate( i, j ) };
    out.gates.insert( out.gates.end(), std::begin( seq ), std::end( seq ) );
  }
  return out;
}

/*! \brief Optional cleanup pass: removes adjacent gate groups that compose to
 * the identity (a self-inverse gate repeated twice, an order-three gate
 * repeated three times).  Off by default; the synthesis core never calls it.
 */
inline circuit cancel_adjacent_inverses( circuit const& c )
{
  validate_circuit( c );
  std::vector<gate> stack;
  stack.reserve( c.gates.size() );
  for ( gate const& g : c.gates )
  {
    stack.push_back( g );
    auto const k = stack.size();
    bool const self_inverse = g.kind == gate_kind::swap || g.kind == gate_kind::mul_two;
    if ( self_inverse && k >= 2 && stack[k - 2] == g )
    {
      stack.resize( k - 2 );
    }
    else if ( !self_inverse && k >= 3 && stack[k - 2] == g && stack[k - 3] == g )
    {
      stack.resize( k - 3 );
    }
  }
  return { c.width, std::move( stack ) };
}

/*! \brief Synthesis entry point parameterized by target gate set.
 *
 * The SNT route requires width >= 2 (at width 1 the gate set cannot express
 * odd permutations).  The NCMT route lowers the SNT result, except at width 1
 * where the six permutations of one line are built directly from Not and
 * Multiply-Two.
 */
inline synthesis_report synthesize_over( permutation const& target, std::uint32_t width, gate_set set )
{
  if ( set == gate_set::snt )
  {
    return synthesize( target, width );
  }
  if ( width >= 2 )
  {
    synthesis_report report = synthesize( target, width );
    report.netlist = lower_to_ncmt( report.netlist );
    report.counts = count_gates( report.netlist );
    return report;
  }

  // width 1: target is one of the six permutations of {1,2,3}
  if ( target.size() != 3 )
  {
    throw std::invalid_argument( "synthesize_over: permutation size must equal 3^width" );
  }
  circuit netlist{ 1, {} };
  permutation even_part = target;
  if ( parity( target ) == parity_kind::odd )
  {
    gate const mt = mul_two_gate( 1 );
    netlist.gates.push_back( mt );
    even_part = compose( gate_to_permutation( mt, 1 ), target );
  }
  std::uint32_t nots = 0;
  permutation const step = gate_to_permutation( not_gate( 1 ), 1 );
  permutation probe( 3 );
  while ( probe != even_part )
  {
    probe = compose( probe, step );
    if ( ++nots > 2 )
    {
      throw std::logic_error( "synthesize_over: width-1 search failed" );
    }
  }
  for ( std::uint32_t k = 0; k < nots; ++k )
  {
    netlist.gates.push_back( not_gate( 1 ) );
  }
  if ( !verify( netlist, target ).equal )
  {
    throw std::logic_error( "synthesize_over: emitted circuit failed verification" );
  }
  return { target, netlist, count_gates( netlist ), nots > 0 ? 1u : 0u, {} };
}

} // namespace ternsyn
