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
  \file io.hpp
  \brief Netlist and specification file formats

  Netlist grammar, one gate per line, 1-based lines, '#' starts a comment:

      width 3
      E 1 2      # Swap
      N 2        # Not
      T          # Toffoli
      C 2 1      # Controlled-Not, target first
      M 3        # Multiply-Two

  A specification file opens with the same "width n" header followed by one
  of three mapping forms: truth-table rows "input-word output-word", a
  one-line permutation "perm: i1 i2 ... im", or a cycle list
  "cycles: (a b c)(d e)" composed left to right.
*/

#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gate.hpp"
#include "permutation.hpp"
#include "word.hpp"

namespace ternsyn
{

struct parse_error : public std::runtime_error
{
  using std::runtime_error::runtime_error;
};

namespace detail
{

inline std::vector<std::string> significant_lines( std::istream& in )
{
  std::vector<std::string> lines;
  std::string raw;
  while ( std::getline( in, raw ) )
  {
    if ( auto const hash = raw.find( '#' ); hash != std::string::npos )
    {
      raw.erase( hash );
    }
    auto const begin = raw.find_first_not_of( " \t\r" );
    if ( begin == std::string::npos )
    {
      continue;
    }
    auto const end = raw.find_last_not_of( " \t\r" );
    lines.push_back( raw.substr( begin, end - begin + 1 ) );
  }
  return lines;
}

inline std::vector<std::string> split_tokens( std::string const& line )
{
  std::vector<std::string> tokens;
  std::istringstream in( line );
  std::string tok;
  while ( in >> tok )
  {
    tokens.push_back( tok );
  }
  return tokens;
}

inline std::uint64_t parse_number( std::string const& token, std::string const& what )
{
  std::uint64_t value = 0;
  if ( token.empty() )
  {
    throw parse_error( what + ": empty number" );
  }
  for ( char ch : token )
  {
    if ( ch < '0' || ch > '9' )
    {
      throw parse_error( what + ": invalid number '" + token + "'" );
    }
    value = value * 10 + static_cast<std::uint64_t>( ch - '0' );
    if ( value > 1000000000ull )
    {
      throw parse_error( what + ": number too large '" + token + "'" );
    }
  }
  return value;
}

inline std::uint32_t parse_width_header( std::vector<std::string> const& lines, std::string const& what )
{
  if ( lines.empty() )
  {
    throw parse_error( what + ": missing 'width n' header" );
  }
  auto const tokens = split_tokens( lines.front() );
  if ( tokens.size() != 2 || tokens[0] != "width" )
  {
    throw parse_error( what + ": first line must be 'width n'" );
  }
  auto const n = parse_number( tokens[1], what );
  if ( n < 1 || n > 20 )
  {
    throw parse_error( what + ": width out of range" );
  }
  return static_cast<std::uint32_t>( n );
}

} // namespace detail

inline std::string to_text( gate const& g )
{
  switch ( g.kind )
  {
  case gate_kind::swap:
    return "E " + std::to_string( g.a ) + " " + std::to_string( g.b );
  case gate_kind::not_gate:
    return "N " + std::to_string( g.a );
  case gate_kind::toffoli:
    return "T";
  case gate_kind::cnot:
    return "C " + std::to_string( g.a ) + " " + std::to_string( g.b );
  case gate_kind::mul_two:
    return "M " + std::to_string( g.a );
  }
  throw std::logic_error( "to_text: unknown gate kind" );
}

inline void write_netlist( std::ostream& out, circuit const& c )
{
  out << "width " << c.width << "\n";
  for ( gate const& g : c.gates )
  {
    out << to_text( g ) << "\n";
  }
}

inline std::string to_text( circuit const& c )
{
  std::ostringstream out;
  write_netlist( out, c );
  return out.str();
}

inline circuit parse_netlist( std::istream& in )
{
  auto const lines = detail::significant_lines( in );
  circuit c{ detail::parse_width_header( lines, "netlist" ), {} };
  for ( std::size_t i = 1; i < lines.size(); ++i )
  {
    auto const tokens = detail::split_tokens( lines[i] );
    auto const& op = tokens[0];
    auto expect = [&]( std::size_t arity ) {
      if ( tokens.size() != arity + 1 )
      {
        throw parse_error( "netlist: gate '" + op + "' expects " + std::to_string( arity ) + " line argument(s)" );
      }
    };
    auto arg = [&]( std::size_t k ) {
      return static_cast<std::uint32_t>( detail::parse_number( tokens[k], "netlist" ) );
    };
    try
    {
      gate g;
      if ( op == "E" )
      {
        expect( 2 );
        g = swap_gate( arg( 1 ), arg( 2 ) );
      }
      else if ( op == "N" )
      {
        expect( 1 );
        g = not_gate( arg( 1 ) );
      }
      else if ( op == "T" )
      {
        expect( 0 );
        g = toffoli_gate();
      }
      else if ( op == "C" )
      {
        expect( 2 );
        g = cnot_gate( arg( 1 ), arg( 2 ) );
      }
      else if ( op == "M" )
      {
        expect( 1 );
        g = mul_two_gate( arg( 1 ) );
      }
      else
      {
        throw parse_error( "netlist: unknown gate '" + op + "'" );
      }
      validate_gate( g, c.width );
      c.gates.push_back( g );
    }
    catch ( std::invalid_argument const& e )
    {
      throw parse_error( std::string( "netlist: " ) + e.what() );
    }
    catch ( std::out_of_range const& e )
    {
      throw parse_error( std::string( "netlist: " ) + e.what() );
    }
  }
  return c;
}

inline circuit parse_netlist_text( std::string_view text )
{
  std::istringstream in{ std::string( text ) };
  return parse_netlist( in );
}

struct spec_file
{
  std::uint32_t width;
  permutation target;
};

namespace detail
{

inline permutation parse_cycle_list( std::string const& body, std::uint64_t m )
{
  std::vector<cycle> cycles;
  cycle current;
  bool open = false;
  std::string number;
  auto flush_number = [&]() {
    if ( number.empty() )
    {
      return;
    }
    auto const v = parse_number( number, "spec cycles" );
    if ( v < 1 || v > m )
    {
      throw parse_error( "spec cycles: symbol out of range" );
    }
    current.push_back( static_cast<std::uint32_t>( v ) );
    number.clear();
  };
  for ( char ch : body )
  {
    if ( ch == '(' )
    {
      if ( open )
      {
        throw parse_error( "spec cycles: nested '('" );
      }
      open = true;
      current.clear();
    }
    else if ( ch == ')' )
    {
      if ( !open )
      {
        throw parse_error( "spec cycles: unmatched ')'" );
      }
      flush_number();
      if ( current.size() < 2 )
      {
        throw parse_error( "spec cycles: cycle needs at least two symbols" );
      }
      cycles.push_back( current );
      open = false;
    }
    else if ( ch >= '0' && ch <= '9' )
    {
      if ( !open )
      {
        throw parse_error( "spec cycles: symbol outside parentheses" );
      }
      number.push_back( ch );
    }
    else if ( ch == ' ' || ch == '\t' || ch == ',' )
    {
      flush_number();
    }
    else
    {
      throw parse_error( std::string( "spec cycles: unexpected character '" ) + ch + "'" );
    }
  }
  if ( open )
  {
    throw parse_error( "spec cycles: unmatched '('" );
  }
  try
  {
    return permutation_from_cycles( cycles, static_cast<std::uint32_t>( m ) );
  }
  catch ( std::invalid_argument const& e )
  {
    throw parse_error( std::string( "spec cycles: " ) + e.what() );
  }
}

} // namespace detail

inline spec_file parse_spec( std::istream& in )
{
  auto const lines = detail::significant_lines( in );
  auto const width = detail::parse_width_header( lines, "spec" );
  auto const m = pow3( width );

  if ( lines.size() < 2 )
  {
    throw parse_error( "spec: missing mapping after the width header" );
  }

  std::string const& second = lines[1];
  if ( second.rfind( "perm:", 0 ) == 0 )
  {
    if ( lines.size() != 2 )
    {
      throw parse_error( "spec: one-line permutation form allows no further lines" );
    }
    auto const tokens = detail::split_tokens( second.substr( 5 ) );
    if ( tokens.size() != m )
    {
      throw parse_error( "spec: permutation needs exactly " + std::to_string( m ) + " entries" );
    }
    std::vector<std::uint32_t> image;
    image.reserve( tokens.size() );
    for ( auto const& tok : tokens )
    {
      image.push_back( static_cast<std::uint32_t>( detail::parse_number( tok, "spec perm" ) ) );
    }
    try
    {
      return { width, permutation::from_image( std::move( image ) ) };
    }
    catch ( std::invalid_argument const& e )
    {
      throw parse_error( std::string( "spec perm: " ) + e.what() );
    }
  }

  if ( second.rfind( "cycles:", 0 ) == 0 )
  {
    if ( lines.size() != 2 )
    {
      throw parse_error( "spec: cycle-list form allows no further lines" );
    }
    return { width, detail::parse_cycle_list( second.substr( 7 ), m ) };
  }

  // truth-table form: every line "input-word output-word"
  std::vector<std::uint32_t> image( m, 0 );
  std::vector<bool> seen_input( m + 1, false );
  for ( std::size_t i = 1; i < lines.size(); ++i )
  {
    auto const tokens = detail::split_tokens( lines[i] );
    if ( tokens.size() != 2 )
    {
      throw parse_error( "spec: truth-table line must be 'input-word output-word'" );
    }
    ternary_word input, output;
    try
    {
      input = ternary_word::parse( tokens[0] );
      output = ternary_word::parse( tokens[1] );
    }
    catch ( std::invalid_argument const& e )
    {
      throw parse_error( std::string( "spec: " ) + e.what() );
    }
    if ( input.width() != width || output.width() != width )
    {
      throw parse_error( "spec: truth-table word width does not match the header" );
    }
    auto const in_index = word_to_index( input );
    if ( seen_input[in_index] )
    {
      throw parse_error( "spec: input word '" + tokens[0] + "' listed twice" );
    }
    seen_input[in_index] = true;
    image[in_index - 1] = static_cast<std::uint32_t>( word_to_index( output ) );
  }
  for ( std::uint64_t i = 1; i <= m; ++i )
  {
    if ( !seen_input[i] )
    {
      throw parse_error( "spec: truth table must cover all " + std::to_string( m ) + " inputs" );
    }
  }
  try
  {
    return { width, permutation::from_image( std::move( image ) ) };
  }
  catch ( std::invalid_argument const& e )
  {
    throw parse_error( "spec: outputs are not a bijection" );
  }
}

inline spec_file parse_spec_text( std::string_view text )
{
  std::istringstream in{ std::string( text ) };
  return parse_spec( in );
}

} // namespace ternsyn
