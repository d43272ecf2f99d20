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
  \file cli.hpp
  \brief Stream-level command implementations behind the command-line tool

  Exit status contract: 0 success or EQUAL, 1 verification mismatch, 2 input
  error.  Input errors surface as exceptions; the tool maps them to status 2.
*/

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "io.hpp"
#include "synthesis.hpp"

namespace ternsyn
{

inline int cmd_synth( std::istream& spec_in, gate_set set, std::ostream& netlist_out, std::ostream& report_out )
{
  spec_file const spec = parse_spec( spec_in );
  if ( spec.width < 2 && set == gate_set::snt )
  {
    throw std::invalid_argument( "synth: gate set snt requires width >= 2" );
  }
  synthesis_report const report = synthesize_over( spec.target, spec.width, set );
  write_netlist( netlist_out, report.netlist );
  report_out << report.summary();
  return 0;
}

inline int cmd_verify( std::istream& netlist_in, std::istream& spec_in, std::ostream& out )
{
  circuit const c = parse_netlist( netlist_in );
  spec_file const spec = parse_spec( spec_in );
  if ( c.width != spec.width )
  {
    throw std::invalid_argument( "verify: netlist and spec widths differ" );
  }
  verify_result const v = verify( c, spec.target );
  if ( v.equal )
  {
    out << "EQUAL\n";
    return 0;
  }
  out << "MISMATCH at " << index_to_word( v.mismatch_index, c.width ).str()
      << ": circuit " << index_to_word( v.circuit_image, c.width ).str()
      << ", target " << index_to_word( v.target_image, c.width ).str() << "\n";
  return 1;
}

inline int cmd_sim( std::istream& netlist_in, std::optional<std::string> const& input_word, bool all,
                    std::ostream& out )
{
  circuit const c = parse_netlist( netlist_in );
  if ( all == input_word.has_value() )
  {
    throw std::invalid_argument( "sim: pass exactly one of --input and --all" );
  }
  if ( all )
  {
    auto const m = pow3( c.width );
    for ( std::uint64_t i = 1; i <= m; ++i )
    {
      ternary_word const w = index_to_word( i, c.width );
      out << w.str() << " " << simulate( c, w ).str() << "\n";
    }
    return 0;
  }
  ternary_word const w = ternary_word::parse( *input_word );
  if ( w.width() != c.width )
  {
    throw std::invalid_argument( "sim: input word width does not match the netlist" );
  }
  out << simulate( c, w ).str() << "\n";
  return 0;
}

inline int cmd_lower( std::istream& netlist_in, std::ostream& out )
{
  write_netlist( out, lower_to_ncmt( parse_netlist( netlist_in ) ) );
  return 0;
}

inline int cmd_stats( std::istream& netlist_in, std::ostream& out )
{
  circuit const c = parse_netlist( netlist_in );
  gate_counts const counts = count_gates( c );
  out << "width:  " << c.width << "\n";
  out << "gates:  E=" << counts.swaps << " N=" << counts.nots << " T=" << counts.toffolis
      << " C=" << counts.cnots << " M=" << counts.mul_twos << "\n";
  out << "total:  " << counts.total() << "\n";
  out << "parity: " << ( parity( circuit_to_permutation( c ) ) == parity_kind::even ? "even" : "odd" ) << "\n";
  return 0;
}

inline int cmd_graycode( std::uint32_t width, std::ostream& out )
{
  for ( ternary_word const& w : gray_sequence( width ) )
  {
    out << w.str() << "\n";
  }
  return 0;
}

/*! \brief Hidden maintenance command: synthesizes random permutations and
 * verifies them under both gate sets, spreading trials across worker threads.
 */
inline int cmd_selftest( std::uint32_t width, std::uint32_t trials, std::uint32_t jobs, std::ostream& out )
{
  if ( width < 2 )
  {
    throw std::invalid_argument( "selftest: width must be at least 2" );
  }
  if ( jobs < 1 )
  {
    jobs = 1;
  }
  auto const m = static_cast<std::uint32_t>( pow3( width ) );
  std::atomic<std::uint32_t> failures{ 0 };
  std::atomic<std::uint32_t> next{ 0 };

  auto worker = [&]( std::uint32_t seed ) {
    std::mt19937 rng( seed );
    for ( std::uint32_t trial = next.fetch_add( 1 ); trial < trials; trial = next.fetch_add( 1 ) )
    {
      std::vector<std::uint32_t> image( m );
      std::iota( image.begin(), image.end(), 1u );
      std::shuffle( image.begin(), image.end(), rng );
      permutation const target = permutation::from_image( std::move( image ) );
      try
      {
        synthesis_report const report = synthesize( target, width );
        circuit const lowered = lower_to_ncmt( report.netlist );
        if ( !verify( lowered, target ).equal || !conforms_to( lowered, gate_set::ncmt ) )
        {
          ++failures;
        }
      }
      catch ( std::exception const& )
      {
        ++failures;
      }
    }
  };

  std::vector<std::thread> threads;
  for ( std::uint32_t j = 0; j < jobs; ++j )
  {
    threads.emplace_back( worker, 0x5eed0000u + j );
  }
  for ( auto& t : threads )
  {
    t.join();
  }

  std::uint32_t const failed = failures.load();
  out << "selftest: " << ( trials - failed ) << "/" << trials << " ok (n=" << width << ")\n";
  return failed == 0 ? 0 : 1;
}

} // namespace ternsyn
