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
  \file word.hpp
  \brief Ternary words, the canonical assignment ordering, reflected Gray
  enumeration, and column classification of word triples
*/

#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ternsyn
{

//! A base-3 digit, value in {0, 1, 2}.
using trit = std::uint8_t;

inline trit add3( trit a, trit b )
{
  return static_cast<trit>( ( a + b ) % 3 );
}

inline trit mul3( trit a, trit b )
{
  return static_cast<trit>( ( a * b ) % 3 );
}

inline std::uint64_t pow3( std::uint32_t n )
{
  std::uint64_t v = 1;
  for ( std::uint32_t i = 0; i < n; ++i )
  {
    v *= 3;
  }
  return v;
}

/*! \brief A length-n sequence of trits, the assignment vector of an n-line circuit.
 *
 * Lines are numbered 1..n throughout, matching the netlist grammar; line 1 is
 * the leftmost character of the textual form.
 */
class ternary_word
{
public:
  ternary_word() = default;

  explicit ternary_word( std::vector<trit> trits )
      : trits_( std::move( trits ) )
  {
    if ( trits_.empty() )
    {
      throw std::invalid_argument( "ternary_word: width must be at least 1" );
    }
    for ( trit t : trits_ )
    {
      if ( t > 2 )
      {
        throw std::invalid_argument( "ternary_word: trit value out of range" );
      }
    }
  }

  //! Parses the comma-free textual form, e.g. "012" has line 1 = 0.
  static ternary_word parse( std::string_view text )
  {
    std::vector<trit> trits;
    trits.reserve( text.size() );
    for ( char ch : text )
    {
      if ( ch < '0' || ch > '2' )
      {
        throw std::invalid_argument( std::string( "ternary_word: invalid trit character '" ) + ch + "'" );
      }
      trits.push_back( static_cast<trit>( ch - '0' ) );
    }
    return ternary_word( std::move( trits ) );
  }

  std::uint32_t width() const
  {
    return static_cast<std::uint32_t>( trits_.size() );
  }

  //! 1-based line access.
  trit get( std::uint32_t line ) const
  {
    check_line( line );
    return trits_[line - 1];
  }

  void set( std::uint32_t line, trit value )
  {
    check_line( line );
    if ( value > 2 )
    {
      throw std::invalid_argument( "ternary_word: trit value out of range" );
    }
    trits_[line - 1] = value;
  }

  std::vector<trit> const& trits() const
  {
    return trits_;
  }

  std::string str() const
  {
    std::string s;
    s.reserve( trits_.size() );
    for ( trit t : trits_ )
    {
      s.push_back( static_cast<char>( '0' + t ) );
    }
    return s;
  }

  friend bool operator==( ternary_word const&, ternary_word const& ) = default;
  friend auto operator<=>( ternary_word const&, ternary_word const& ) = default;

private:
  void check_line( std::uint32_t line ) const
  {
    if ( line < 1 || line > trits_.size() )
    {
      throw std::out_of_range( "ternary_word: line index out of range" );
    }
  }

  std::vector<trit> trits_;
};

/*! \brief The 1-based position of a word in the canonical assignment ordering.
 *
 * Line 1 varies fastest: (0,0,...,0) is index 1, (1,0,...,0) is index 2, and
 * (2,2,...,2) is index 3^n.
 */
inline std::uint64_t word_to_index( ternary_word const& w )
{
  std::uint64_t index = 1;
  std::uint64_t weight = 1;
  for ( trit t : w.trits() )
  {
    index += weight * t;
    weight *= 3;
  }
  return index;
}

//! Inverse of word_to_index for a given width.
inline ternary_word index_to_word( std::uint64_t index, std::uint32_t width )
{
  if ( width < 1 )
  {
    throw std::invalid_argument( "index_to_word: width must be at least 1" );
  }
  if ( index < 1 || index > pow3( width ) )
  {
    throw std::out_of_range( "index_to_word: index out of range" );
  }
  std::uint64_t rest = index - 1;
  std::vector<trit> trits( width );
  for ( std::uint32_t i = 0; i < width; ++i )
  {
    trits[i] = static_cast<trit>( rest % 3 );
    rest /= 3;
  }
  return ternary_word( std::move( trits ) );
}

/*! \brief All 3^n words in ternary reflected Gray order.
 *
 * Consecutive words differ in exactly one line.  Blocks over the slowest
 * (highest) line alternate between ascending and descending copies of the
 * width n-1 sequence.
 */
inline std::vector<ternary_word> gray_sequence( std::uint32_t width )
{
  if ( width < 1 )
  {
    throw std::invalid_argument( "gray_sequence: width must be at least 1" );
  }
  std::vector<std::vector<trit>> seq = { { 0 }, { 1 }, { 2 } };
  for ( std::uint32_t k = 2; k <= width; ++k )
  {
    std::vector<std::vector<trit>> next;
    next.reserve( seq.size() * 3 );
    for ( trit v = 0; v < 3; ++v )
    {
      if ( v % 2 == 0 )
      {
        for ( auto it = seq.begin(); it != seq.end(); ++it )
        {
          auto w = *it;
          w.push_back( v );
          next.push_back( std::move( w ) );
        }
      }
      else
      {
        for ( auto it = seq.rbegin(); it != seq.rend(); ++it )
        {
          auto w = *it;
          w.push_back( v );
          next.push_back( std::move( w ) );
        }
      }
    }
    seq = std::move( next );
  }
  std::vector<ternary_word> words;
  words.reserve( seq.size() );
  for ( auto& trits : seq )
  {
    words.emplace_back( std::move( trits ) );
  }
  return words;
}

//! Classification of one column of the 3-row matrix [u; s; t].
struct column_class
{
  bool is_heterogeneous{ false };
  std::uint8_t distinct_count{ 0 };

  friend bool operator==( column_class const&, column_class const& ) = default;
};

/*! \brief Per-column classification of a word triple.
 *
 * A column is heterogeneous iff its three entries are not all equal, i.e.
 * distinct_count >= 2.
 */
struct hetero_profile
{
  std::vector<column_class> columns; //!< columns[c - 1] describes column c

  std::vector<std::uint32_t> heterogeneous_columns() const
  {
    std::vector<std::uint32_t> cols;
    for ( std::uint32_t c = 0; c < columns.size(); ++c )
    {
      if ( columns[c].is_heterogeneous )
      {
        cols.push_back( c + 1 );
      }
    }
    return cols;
  }

  std::uint32_t heterogeneous_count() const
  {
    std::uint32_t n = 0;
    for ( auto const& col : columns )
    {
      if ( col.is_heterogeneous )
      {
        ++n;
      }
    }
    return n;
  }
};

//! Column classification of three pairwise-distinct words of equal width.
inline hetero_profile hetero_profile_of( ternary_word const& u, ternary_word const& s, ternary_word const& t )
{
  if ( u.width() != s.width() || s.width() != t.width() )
  {
    throw std::invalid_argument( "hetero_profile_of: words must share one width" );
  }
  if ( u == s || s == t || u == t )
  {
    throw std::invalid_argument( "hetero_profile_of: words must be pairwise distinct" );
  }
  hetero_profile profile;
  profile.columns.reserve( u.width() );
  for ( std::uint32_t c = 1; c <= u.width(); ++c )
  {
    bool seen[3] = { false, false, false };
    seen[u.get( c )] = true;
    seen[s.get( c )] = true;
    seen[t.get( c )] = true;
    auto const distinct = static_cast<std::uint8_t>( seen[0] + seen[1] + seen[2] );
    profile.columns.push_back( { distinct >= 2, distinct } );
  }
  return profile;
}

} // namespace ternsyn
