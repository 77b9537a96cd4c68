#include <doctest.h>

#include "debruijn/bitcore.hpp"
#include "support.hpp"

using namespace debruijn;

TEST_CASE("state parse and print round trip") {
  const State s = State::parse("0110");
  CHECK(s.order() == 4);
  CHECK(s.value() == 6);
  CHECK(s.first() == 0);
  CHECK(s.bit(1) == 1);
  CHECK(s.last() == 0);
  CHECK(s.str() == "0110");
  CHECK(State::zeros(5).str() == "00000");
  CHECK(State::ones(3).str() == "111");
}

TEST_CASE("state rejects bad input") {
  CHECK_THROWS_AS(State::parse(""), Error);
  CHECK_THROWS_AS(State::parse("01a1"), Error);
  CHECK_THROWS_AS(State(3, 8), Error);
  CHECK_THROWS_AS(State(0, 0), Error);
  CHECK_THROWS_AS(State(kMaxOrder + 1, 0), Error);
  try {
    State::parse("012");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadState);
  }
  try {
    State::parse(std::string(30, '0'));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderTooLarge);
  }
}

TEST_CASE("shift, conjugate, companion") {
  const State s = State::parse("1011");
  CHECK(shift_append(s, 0).str() == "0110");
  CHECK(shift_append(s, 1).str() == "0111");
  CHECK(conjugate(s).str() == "0011");
  CHECK(companion(s).str() == "1010");
  CHECK(complement(s).str() == "0100");
}

TEST_CASE("state operations agree with string manipulation") {
  for (int iter = 0; iter < 500; ++iter) {
    const int n = gen::uniform(1, 16);
    const std::string text = gen::bits(static_cast<std::size_t>(n));
    const State s = State::parse(text);
    const int y = gen::uniform(0, 1);
    CHECK(shift_append(s, y).str() == text.substr(1) + static_cast<char>('0' + y));
    std::string conj = text, comp = text;
    conj[0] = conj[0] == '0' ? '1' : '0';
    comp.back() = comp.back() == '0' ? '1' : '0';
    CHECK(conjugate(s).str() == conj);
    CHECK(companion(s).str() == comp);
    CHECK(conjugate(conjugate(s)) == s);
    CHECK(companion(companion(s)) == s);
    CHECK(s.value() == oracle::from_bits(text));
  }
}

TEST_CASE("periodic sequence parsing ignores separators") {
  const auto s = PeriodicSequence::parse("(0000 1111_0110~0101)");
  CHECK(s.period() == 16);
  CHECK(s.str() == "0000111101100101");
  CHECK(s.pretty() == "0000 1111 0110 0101");
  CHECK(s[16] == s[0]);
  CHECK(s[21] == 1);
  CHECK_THROWS_AS(PeriodicSequence::parse("0102"), Error);
  CHECK_THROWS_AS(PeriodicSequence::parse(""), Error);
}

TEST_CASE("windows wrap around") {
  const auto s = PeriodicSequence::parse("00010111");
  const auto ws = windows(s, 3);
  REQUIRE(ws.size() == 8);
  CHECK(ws[0].str() == "000");
  CHECK(ws[6].str() == "110");
  CHECK(ws[7].str() == "100");
  CHECK_THROWS_AS(windows(s, 9), Error);
  CHECK(wrapped_windows(PeriodicSequence::parse("01"), 3)[0].str() == "010");
}

TEST_CASE("de Bruijn test") {
  CHECK(is_de_bruijn(PeriodicSequence::parse("00010111"), 3));
  CHECK(is_de_bruijn(PeriodicSequence::parse("0000 1111 0110 0101"), 4));
  CHECK_FALSE(is_de_bruijn(PeriodicSequence::parse("00010111"), 4));
  CHECK_FALSE(is_de_bruijn(PeriodicSequence::parse("00011011"), 3));
}

TEST_CASE("de Bruijn test agrees with a substring oracle") {
  for (int iter = 0; iter < 300; ++iter) {
    const int n = gen::uniform(2, 6);
    std::string s = iter % 2 ? gen::de_bruijn(n) : gen::bits(std::size_t{1} << n);
    CHECK(is_de_bruijn(PeriodicSequence::parse(s), n) == oracle::is_de_bruijn(s, n));
  }
}

TEST_CASE("random generator yields de Bruijn sequences") {
  for (int n = 2; n <= 10; ++n) CHECK(oracle::is_de_bruijn(gen::de_bruijn(n), n));
}

TEST_CASE("canonical rotation") {
  const auto s = PeriodicSequence::parse("1110 0001 0011 0101");
  CHECK(canonical_rotation(s).pretty() == "0000 1001 1010 1111");
  CHECK(least_rotation_offset(s) == 3);
  CHECK(cyclically_equal(s, PeriodicSequence::parse("0000 1001 1010 1111")));
  CHECK_FALSE(cyclically_equal(s, PeriodicSequence::parse("0000 1111 0110 0101")));
  CHECK(canonical_rotation(PeriodicSequence::parse("0101")).str() == "0101");
}

TEST_CASE("canonical rotation agrees with brute force") {
  for (int iter = 0; iter < 400; ++iter) {
    const std::string s = gen::bits(static_cast<std::size_t>(gen::uniform(1, 40)));
    const auto seq = PeriodicSequence::parse(s);
    CHECK(canonical_rotation(seq).str() == oracle::least_rotation(s));
    const std::size_t k = static_cast<std::size_t>(gen::uniform(0, 60));
    CHECK(cyclically_equal(seq, seq.rotated(k)));
    CHECK(seq.rotated(k).str() == oracle::rotate(s, k));
  }
}

TEST_CASE("complement and window search") {
  const auto s = PeriodicSequence::parse("00010111");
  CHECK(complement_sequence(s).str() == "11101000");
  CHECK(find_window(s, State::parse("110")) == 6);
  CHECK(find_window(s, State::parse("000")) == 0);
  CHECK(find_window(PeriodicSequence::parse("0011"), State::parse("010")) == -1);
}
