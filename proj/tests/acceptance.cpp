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

// End-to-end acceptance suite.  Each criterion prints one PASS/FAIL line and
// carries a wall-clock budget; the binary exits nonzero if any line fails.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <ternsyn/ternsyn.hpp>

#include "test_util.hpp"

using namespace ternsyn;

namespace
{

struct criterion
{
  int number;
  std::string name;
  double budget_ms;
  bool ( *check )( std::string& detail );
};

permutation word_cycle_perm( std::string_view a, std::string_view b, std::string_view c )
{
  auto const u = ternary_word::parse( a );
  auto const m = static_cast<std::uint32_t>( pow3( u.width() ) );
  return permutation_from_cycle( { static_cast<std::uint32_t>( word_to_index( u ) ),
                                   static_cast<std::uint32_t>( word_to_index( ternary_word::parse( b ) ) ),
                                   static_cast<std::uint32_t>( word_to_index( ternary_word::parse( c ) ) ) },
                                 m );
}

// ---------------------------------------------------------------- criterion 1
bool golden_example_one( std::string& detail )
{
  circuit const witness{ 3, { swap_gate( 1, 2 ), not_gate( 2 ), not_gate( 3 ), not_gate( 3 ), toffoli_gate(),
                              not_gate( 3 ), not_gate( 2 ), not_gate( 2 ), swap_gate( 1, 2 ) } };
  auto const v = verify( witness, word_cycle_perm( "002", "012", "022" ) );
  if ( !v.equal )
  {
    detail = "witness disagrees at index " + std::to_string( v.mismatch_index );
    return false;
  }
  return true;
}

// ---------------------------------------------------------------- criterion 2
bool golden_example_two( std::string& detail )
{
  circuit const witness{ 3, { swap_gate( 2, 3 ), not_gate( 3 ), toffoli_gate(), swap_gate( 1, 2 ),
                              not_gate( 2 ), toffoli_gate(), toffoli_gate(), swap_gate( 1, 2 ),
                              toffoli_gate(), toffoli_gate(), swap_gate( 1, 2 ), toffoli_gate(),
                              not_gate( 2 ), not_gate( 2 ), swap_gate( 1, 2 ), toffoli_gate(),
                              toffoli_gate(), not_gate( 3 ), not_gate( 3 ), swap_gate( 2, 3 ) } };
  auto const v = verify( witness, word_cycle_perm( "001", "002", "101" ) );
  if ( !v.equal )
  {
    detail = "witness disagrees at index " + std::to_string( v.mismatch_index );
    return false;
  }
  return true;
}

// ---------------------------------------------------------------- criterion 3
bool swap_lowering_identity( std::string& detail )
{
  for ( std::uint32_t n : { 2u, 3u } )
  {
    for ( std::uint32_t i = 1; i <= n; ++i )
    {
      for ( std::uint32_t j = i + 1; j <= n; ++j )
      {
        auto const lowered = lower_to_ncmt( circuit{ n, { swap_gate( i, j ) } } );
        if ( lowered.gates.size() != 12 || !conforms_to( lowered, gate_set::ncmt ) )
        {
          detail = "lowering shape wrong for E(" + std::to_string( i ) + "," + std::to_string( j ) + ")";
          return false;
        }
        if ( !verify( lowered, gate_to_permutation( swap_gate( i, j ), n ) ).equal )
        {
          detail = "lowered sequence differs from E(" + std::to_string( i ) + "," + std::to_string( j ) +
                   ") at n=" + std::to_string( n );
          return false;
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------- criterion 4
bool gate_cycle_structure( std::string& detail )
{
  for ( std::uint32_t n : { 2u, 3u, 4u } )
  {
    auto const expected = pow3( n - 1 );
    for ( std::uint32_t i = 1; i <= n; ++i )
    {
      for ( std::uint32_t j = i + 1; j <= n; ++j )
      {
        auto const p = gate_to_permutation( swap_gate( i, j ), n );
        auto const cycles = cycle_decomposition( p );
        bool ok = cycles.size() == expected && parity( p ) == parity_kind::odd;
        for ( auto const& c : cycles )
        {
          ok = ok && c.size() == 2;
        }
        if ( !ok )
        {
          detail = "Swap structure wrong at n=" + std::to_string( n );
          return false;
        }
      }
      auto const p = gate_to_permutation( not_gate( i ), n );
      auto const cycles = cycle_decomposition( p );
      bool ok = cycles.size() == expected && parity( p ) == parity_kind::even;
      for ( auto const& c : cycles )
      {
        ok = ok && c.size() == 3;
      }
      if ( !ok )
      {
        detail = "Not structure wrong at n=" + std::to_string( n );
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------- criterion 5
bool three_cycle_exhaustive( std::string& detail )
{
  std::uint32_t const m = 9;
  std::size_t checked = 0;
  for ( std::uint32_t a = 1; a <= m; ++a )
  {
    for ( std::uint32_t b = a + 1; b <= m; ++b )
    {
      for ( std::uint32_t c = b + 1; c <= m; ++c )
      {
        for ( cycle const& target : { cycle{ a, b, c }, cycle{ a, c, b } } )
        {
          auto const circuit_for = synth_three_cycle( index_to_word( target[0], 2 ),
                                                      index_to_word( target[1], 2 ),
                                                      index_to_word( target[2], 2 ) );
          if ( !verify( circuit_for, permutation_from_cycle( target, m ) ).equal )
          {
            detail = "3-cycle (" + std::to_string( target[0] ) + " " + std::to_string( target[1] ) + " " +
                     std::to_string( target[2] ) + ") failed";
            return false;
          }
          ++checked;
        }
      }
    }
  }
  if ( checked != 168 )
  {
    detail = "expected 168 ordered 3-cycles, checked " + std::to_string( checked );
    return false;
  }
  return true;
}

// ------------------------------------------------------------ criteria 6 and 7
struct roundtrip_outcome
{
  bool ran = false;
  bool verified = true;
  bool parity_held = true;
  std::string detail;
};

roundtrip_outcome roundtrip;

void run_roundtrips()
{
  roundtrip.ran = true;
  std::mt19937 rng( 20260808 );
  for ( auto const& [n, trials] : std::vector<std::pair<std::uint32_t, int>>{ { 2, 5000 }, { 3, 500 } } )
  {
    auto const m = static_cast<std::uint32_t>( pow3( n ) );
    for ( int trial = 0; trial < trials; ++trial )
    {
      auto const target = test_util::random_permutation( m, rng );
      synthesis_report const report = synthesize( target, n );
      if ( !verify( report.netlist, target ).equal || !conforms_to( report.netlist, gate_set::snt ) )
      {
        roundtrip.verified = false;
        roundtrip.detail = "SNT round-trip failed at n=" + std::to_string( n );
        return;
      }
      circuit const lowered = lower_to_ncmt( report.netlist );
      if ( !verify( lowered, target ).equal || !conforms_to( lowered, gate_set::ncmt ) )
      {
        roundtrip.verified = false;
        roundtrip.detail = "NCMT round-trip failed at n=" + std::to_string( n );
        return;
      }
      bool const odd = parity( target ) == parity_kind::odd;
      if ( report.counts.swaps % 2 != ( odd ? 1u : 0u ) )
      {
        roundtrip.parity_held = false;
        roundtrip.detail = "Swap-count parity broke at n=" + std::to_string( n );
      }
    }
  }
}

bool synthesis_roundtrips( std::string& detail )
{
  if ( !roundtrip.ran )
  {
    run_roundtrips();
  }
  detail = roundtrip.detail;
  return roundtrip.verified;
}

bool parity_bookkeeping( std::string& detail )
{
  if ( !roundtrip.ran )
  {
    run_roundtrips();
  }
  detail = roundtrip.detail;
  return roundtrip.verified && roundtrip.parity_held;
}

// ---------------------------------------------------------------- criterion 8
bool gray_properties( std::string& detail )
{
  for ( std::uint32_t n = 1; n <= 5; ++n )
  {
    auto const seq = gray_sequence( n );
    if ( seq.size() != pow3( n ) )
    {
      detail = "wrong length at n=" + std::to_string( n );
      return false;
    }
    std::set<std::uint64_t> indices;
    for ( auto const& w : seq )
    {
      indices.insert( word_to_index( w ) );
    }
    if ( indices.size() != seq.size() )
    {
      detail = "duplicate words at n=" + std::to_string( n );
      return false;
    }
    for ( std::size_t i = 0; i + 1 < seq.size(); ++i )
    {
      std::uint32_t diff = 0;
      for ( std::uint32_t line = 1; line <= n; ++line )
      {
        diff += seq[i].get( line ) != seq[i + 1].get( line ) ? 1 : 0;
      }
      if ( diff != 1 )
      {
        detail = "adjacency broke at n=" + std::to_string( n ) + ", position " + std::to_string( i + 1 );
        return false;
      }
    }
    for ( std::size_t i = 0; n >= 1 && i + 2 < seq.size(); ++i )
    {
      if ( hetero_profile_of( seq[i], seq[i + 1], seq[i + 2] ).heterogeneous_count() > 2 )
      {
        detail = "triple bound broke at n=" + std::to_string( n ) + ", position " + std::to_string( i + 1 );
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------- criterion 9
bool factorization_oracles( std::string& detail )
{
  std::uint32_t const m = 9;
  for ( std::uint32_t a = 1; a <= m; ++a )
  {
    for ( std::uint32_t b = a + 1; b <= m; ++b )
    {
      for ( std::uint32_t c = b + 1; c <= m; ++c )
      {
        for ( cycle const& target : { cycle{ a, b, c }, cycle{ a, c, b } } )
        {
          auto const target_perm = permutation_from_cycle( target, m );
          if ( permutation_from_cycles( three_cycle_factorization( target_perm ), m ) != target_perm )
          {
            detail = "3-cycle factorization failed at m=9";
            return false;
          }
          auto const neighbors = neighbor_three_cycle_factorization( target, m );
          for ( auto const& f : neighbors )
          {
            if ( !is_neighbor_three_cycle( f ) )
            {
              detail = "non-neighbor factor emitted at m=9";
              return false;
            }
          }
          if ( permutation_from_cycles( neighbors, m ) != target_perm )
          {
            detail = "neighbor factorization failed at m=9";
            return false;
          }
        }
      }
    }
  }

  std::mt19937 rng( 913 );
  for ( int trial = 0; trial < 500; ++trial )
  {
    auto const p = test_util::random_even_permutation( 27, rng );
    if ( permutation_from_cycles( three_cycle_factorization( p ), 27 ) != p )
    {
      detail = "3-cycle factorization failed at m=27";
      return false;
    }
  }
  return true;
}

} // namespace

int main()
{
  std::vector<criterion> const criteria = {
      { 1, "golden example 1: nine-gate witness realizes its 3-cycle", 1000.0, golden_example_one },
      { 2, "golden example 2: twenty-gate witness realizes its 3-cycle", 1000.0, golden_example_two },
      { 3, "lowered Swap equals Swap for all line pairs, n in {2,3}", 1000.0, swap_lowering_identity },
      { 4, "Swap and Not cycle structure, n in {2,3,4}", 5000.0, gate_cycle_structure },
      { 5, "all 168 ordered 3-cycles synthesize exactly at n=2", 10000.0, three_cycle_exhaustive },
      { 6, "5000+500 random permutations round-trip under SNT and NCMT", 300000.0, synthesis_roundtrips },
      { 7, "Swap-count parity matches target parity in every netlist", 300000.0, parity_bookkeeping },
      { 8, "Gray sequence coverage, adjacency, and triple bound, n <= 5", 5000.0, gray_properties },
      { 9, "factorizations recompose: exhaustive m=9, randomized m=27", 30000.0, factorization_oracles },
  };

  int failed = 0;
  for ( auto const& c : criteria )
  {
    std::string detail;
    auto const start = std::chrono::steady_clock::now();
    bool ok = false;
    try
    {
      ok = c.check( detail );
    }
    catch ( std::exception const& e )
    {
      ok = false;
      detail = std::string( "exception: " ) + e.what();
    }
    auto const stop = std::chrono::steady_clock::now();
    double const ms = std::chrono::duration<double, std::milli>( stop - start ).count();
    if ( ok && ms > c.budget_ms )
    {
      ok = false;
      detail = "time budget exceeded";
    }
    std::ostringstream line;
    line << ( ok ? "PASS" : "FAIL" ) << "  " << c.number << "  " << c.name << "  (" << ms << " ms)";
    if ( !ok && !detail.empty() )
    {
      line << "  -- " << detail;
    }
    std::cout << line.str() << "\n";
    if ( !ok )
    {
      ++failed;
    }
  }

  if ( failed != 0 )
  {
    std::cout << failed << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
