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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include <ternsyn/ternsyn.hpp>

namespace
{

std::ifstream open_input( std::string const& path )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw ternsyn::parse_error( "cannot open '" + path + "'" );
  }
  return in;
}

std::ofstream open_output( std::string const& path )
{
  std::ofstream out( path );
  if ( !out )
  {
    throw ternsyn::parse_error( "cannot open '" + path + "' for writing" );
  }
  return out;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "ternsyn: ancilla-free synthesis of ternary reversible circuits" };
  app.require_subcommand( 1 );

  std::string spec_path, netlist_path, out_path, gateset_name = "snt", input_word;
  bool sim_all = false;
  std::uint32_t width = 2;
  std::uint32_t trials = 100;
  std::uint32_t jobs = std::max( 1u, std::thread::hardware_concurrency() );

  auto* synth = app.add_subcommand( "synth", "compile a specification into a gate netlist" );
  synth->add_option( "--spec", spec_path, "specification file" )->required();
  synth->add_option( "--gateset", gateset_name, "target gate set: snt or ncmt" )
      ->check( CLI::IsMember( { "snt", "ncmt" } ) );
  synth->add_option( "-o,--output", out_path, "netlist output file (default: stdout)" );

  auto* verify = app.add_subcommand( "verify", "check a netlist against a specification" );
  verify->add_option( "--netlist", netlist_path, "netlist file" )->required();
  verify->add_option( "--spec", spec_path, "specification file" )->required();

  auto* sim = app.add_subcommand( "sim", "run input words through a netlist" );
  sim->add_option( "--netlist", netlist_path, "netlist file" )->required();
  sim->add_option( "--input", input_word, "a single input word, e.g. 012" );
  sim->add_flag( "--all", sim_all, "print the full table in canonical order" );

  auto* lower = app.add_subcommand( "lower", "replace every Swap by Not/CNot/MulTwo/Toffoli gates" );
  lower->add_option( "--netlist", netlist_path, "netlist file" )->required();
  lower->add_option( "-o,--output", out_path, "netlist output file (default: stdout)" );

  auto* stats = app.add_subcommand( "stats", "gate counts, total length, width, and parity" );
  stats->add_option( "--netlist", netlist_path, "netlist file" )->required();

  auto* graycode = app.add_subcommand( "graycode", "print the reflected Gray order of all words" );
  graycode->add_option( "-n,--width", width, "line count" )->required();

  auto* selftest = app.add_subcommand( "selftest", "randomized synthesis round-trips" );
  selftest->group( "" ); // hidden
  selftest->add_option( "-n,--width", width, "line count" );
  selftest->add_option( "--trials", trials, "number of random permutations" );
  selftest->add_option( "--jobs", jobs, "worker threads" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::ParseError const& e )
  {
    int const code = app.exit( e );
    return code == 0 ? 0 : 2;
  }

  try
  {
    if ( *synth )
    {
      auto spec_in = open_input( spec_path );
      auto const set = gateset_name == "ncmt" ? ternsyn::gate_set::ncmt : ternsyn::gate_set::snt;
      if ( out_path.empty() )
      {
        return ternsyn::cmd_synth( spec_in, set, std::cout, std::cerr );
      }
      auto out = open_output( out_path );
      return ternsyn::cmd_synth( spec_in, set, out, std::cout );
    }
    if ( *verify )
    {
      auto netlist_in = open_input( netlist_path );
      auto spec_in = open_input( spec_path );
      return ternsyn::cmd_verify( netlist_in, spec_in, std::cout );
    }
    if ( *sim )
    {
      auto netlist_in = open_input( netlist_path );
      std::optional<std::string> word;
      if ( !input_word.empty() )
      {
        word = input_word;
      }
      return ternsyn::cmd_sim( netlist_in, word, sim_all, std::cout );
    }
    if ( *lower )
    {
      auto netlist_in = open_input( netlist_path );
      if ( out_path.empty() )
      {
        return ternsyn::cmd_lower( netlist_in, std::cout );
      }
      auto out = open_output( out_path );
      return ternsyn::cmd_lower( netlist_in, out );
    }
    if ( *stats )
    {
      auto netlist_in = open_input( netlist_path );
      return ternsyn::cmd_stats( netlist_in, std::cout );
    }
    if ( *graycode )
    {
      return ternsyn::cmd_graycode( width, std::cout );
    }
    if ( *selftest )
    {
      return ternsyn::cmd_selftest( width, trials, jobs, std::cout );
    }
  }
  catch ( std::exception const& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
