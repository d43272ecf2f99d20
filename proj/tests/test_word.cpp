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

#include <catch2/catch.hpp>

#include <random>
#include <set>

#include <ternsyn/word.hpp>

#include "test_util.hpp"

using namespace ternsyn;

TEST_CASE( "word_to_index follows the canonical ordering", "[word]" )
{
  CHECK( word_to_index( ternary_word::parse( "00" ) ) == 1 );
  CHECK( word_to_index( ternary_word::parse( "10" ) ) == 2 );
  CHECK( word_to_index( ternary_word::parse( "01" ) ) == 4 );
  CHECK( word_to_index( ternary_word::parse( "22" ) ) == 9 );
  CHECK( word_to_index( ternary_word::parse( "002" ) ) == 19 );
}

TEST_CASE( "index_to_word inverts word_to_index", "[word]" )
{
  CHECK( index_to_word( 1, 2 ) == ternary_word::parse( "00" ) );
  CHECK( index_to_word( 2, 3 ) == ternary_word::parse( "100" ) );
  CHECK( index_to_word( 9, 2 ) == ternary_word::parse( "22" ) );

  for ( std::uint32_t n = 1; n <= 5; ++n )
  {
    for ( std::uint64_t i = 1; i <= pow3( n ); ++i )
    {
      auto const w = index_to_word( i, n );
      REQUIRE( word_to_index( w ) == i );
      REQUIRE( index_to_word( word_to_index( w ), n ) == w );
    }
  }
}

TEST_CASE( "index_to_word rejects out-of-range indices", "[word]" )
{
  CHECK_THROWS_AS( index_to_word( 0, 2 ), std::out_of_range );
  CHECK_THROWS_AS( index_to_word( 10, 2 ), std::out_of_range );
  CHECK_THROWS_AS( index_to_word( 28, 3 ), std::out_of_range );
}

TEST_CASE( "ternary_word parsing and validation", "[word]" )
{
  CHECK( ternary_word::parse( "012" ).str() == "012" );
  CHECK( ternary_word::parse( "012" ).get( 1 ) == 0 );
  CHECK( ternary_word::parse( "012" ).get( 3 ) == 2 );
  CHECK_THROWS_AS( ternary_word::parse( "013" ), std::invalid_argument );
  CHECK_THROWS_AS( ternary_word::parse( "" ), std::invalid_argument );
  CHECK_THROWS_AS( ternary_word( std::vector<trit>{ 0, 3 } ), std::invalid_argument );
  CHECK_THROWS_AS( ternary_word::parse( "01" ).get( 3 ), std::out_of_range );
}

TEST_CASE( "gray_sequence matches the reflected construction", "[word]" )
{
  auto const g1 = gray_sequence( 1 );
  REQUIRE( g1.size() == 3 );
  CHECK( g1[0] == ternary_word::parse( "0" ) );
  CHECK( g1[1] == ternary_word::parse( "1" ) );
  CHECK( g1[2] == ternary_word::parse( "2" ) );

  auto const g2 = gray_sequence( 2 );
  std::vector<std::string> expected = { "00", "10", "20", "21", "11", "01", "02", "12", "22" };
  REQUIRE( g2.size() == expected.size() );
  for ( std::size_t i = 0; i < expected.size(); ++i )
  {
    CHECK( g2[i].str() == expected[i] );
  }
}

TEST_CASE( "gray_sequence covers every word and changes one line at a time", "[word]" )
{
  for ( std::uint32_t n = 1; n <= 5; ++n )
  {
    auto const seq = gray_sequence( n );
    REQUIRE( seq.size() == pow3( n ) );

    std::set<std::uint64_t> indices;
    for ( auto const& w : seq )
    {
      indices.insert( word_to_index( w ) );
    }
    CHECK( indices.size() == pow3( n ) );

    for ( std::size_t i = 0; i + 1 < seq.size(); ++i )
    {
      std::uint32_t diff = 0;
      for ( std::uint32_t line = 1; line <= n; ++line )
      {
        if ( seq[i].get( line ) != seq[i + 1].get( line ) )
        {
          ++diff;
        }
      }
      REQUIRE( diff == 1 );
    }
  }
}

TEST_CASE( "hetero_profile_of classifies the columns of a word triple", "[word]" )
{
  SECTION( "single heterogeneous column with three values" )
  {
    auto const p = hetero_profile_of( ternary_word::parse( "002" ), ternary_word::parse( "012" ),
                                      ternary_word::parse( "022" ) );
    CHECK( p.heterogeneous_columns() == std::vector<std::uint32_t>{ 2 } );
    CHECK( p.columns[1].distinct_count == 3 );
  }

  SECTION( "two heterogeneous columns, one with only two values" )
  {
    auto const p = hetero_profile_of( ternary_word::parse( "001" ), ternary_word::parse( "002" ),
                                      ternary_word::parse( "101" ) );
    CHECK( p.heterogeneous_columns() == std::vector<std::uint32_t>{ 1, 3 } );
    CHECK( p.columns[0].distinct_count == 2 );
    CHECK( p.columns[2].distinct_count == 2 );
  }

  SECTION( "the three words moved by the Toffoli gate" )
  {
    auto const p = hetero_profile_of( ternary_word::parse( "011" ), ternary_word::parse( "111" ),
                                      ternary_word::parse( "211" ) );
    CHECK( p.heterogeneous_columns() == std::vector<std::uint32_t>{ 1 } );
    CHECK( p.columns[0].distinct_count == 3 );
  }
}

TEST_CASE( "hetero_profile_of rejects invalid triples", "[word]" )
{
  auto const a = ternary_word::parse( "01" );
  auto const b = ternary_word::parse( "11" );
  CHECK_THROWS_AS( hetero_profile_of( a, a, b ), std::invalid_argument );
  CHECK_THROWS_AS( hetero_profile_of( a, b, ternary_word::parse( "011" ) ), std::invalid_argument );
}

TEST_CASE( "pairwise-distinct triples always have a heterogeneous column", "[word]" )
{
  std::mt19937 rng( 7 );
  for ( int trial = 0; trial < 200; ++trial )
  {
    auto const u = test_util::random_word( 4, rng );
    auto const s = test_util::random_word( 4, rng );
    auto const t = test_util::random_word( 4, rng );
    if ( u == s || s == t || u == t )
    {
      continue;
    }
    CHECK( hetero_profile_of( u, s, t ).heterogeneous_count() >= 1 );
  }
}
