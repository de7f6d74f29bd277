#include "doctest.h"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "core/measures.hpp"
#include "core/rng.hpp"
#include "fixture.hpp"

using namespace rbnlab;

TEST_CASE("entropy of binary sequences") {
    CHECK(shannon_entropy(std::vector<uint8_t>{0, 0, 0, 0}) == 0.0);
    CHECK(shannon_entropy(std::vector<uint8_t>{1, 1}) == 0.0);
    CHECK(shannon_entropy(std::vector<uint8_t>{0, 1, 0, 1}) == 1.0);
    CHECK(shannon_entropy(std::vector<uint8_t>{1, 0, 0, 0}) ==
          doctest::Approx(0.8112781244591328).epsilon(1e-12));
    CHECK_THROWS_AS(shannon_entropy(std::vector<uint8_t>{}), std::invalid_argument);

    BitMatrix m(2, 2);
    m.set(0, 0, true);
    CHECK(shannon_entropy(m) == doctest::Approx(0.8112781244591328).epsilon(1e-12));
}

TEST_CASE("lzw hand traces") {
    LzwResult one = lzw_encode({0});
    CHECK(one.codes == std::vector<uint32_t>{0});
    CHECK(one.encoded_bits == 1);

    LzwResult pair = lzw_encode({0, 1});
    CHECK(pair.codes == std::vector<uint32_t>{0, 1});
    CHECK(pair.encoded_bits == 3); // widths 1 then 2

    LzwResult zeros = lzw_encode(std::vector<uint8_t>(10, 0));
    CHECK(zeros.codes == std::vector<uint32_t>{0, 2, 3, 4});
    CHECK(zeros.encoded_bits == 8); // widths 1+2+2+3
    CHECK(compressibility_rate(std::vector<uint8_t>(10, 0)) == 0.8);

    CHECK_THROWS_AS(lzw_encode({}), std::invalid_argument);
    CHECK_THROWS_AS(lzw_encode({0, 2}), std::invalid_argument);
}

TEST_CASE("lzw decode inverts encode, including the self-referential code") {
    CHECK(lzw_decode({0}) == std::vector<uint8_t>{0});
    // "000" encodes to [0, 2] where 2 names the phrase being defined
    CHECK(lzw_decode({0, 2}) == std::vector<uint8_t>{0, 0, 0});
    CHECK(lzw_decode(lzw_encode({0, 1, 0, 1, 0}).codes) == std::vector<uint8_t>{0, 1, 0, 1, 0});

    CHECK_THROWS_AS(lzw_decode({}), std::invalid_argument);
    CHECK_THROWS_AS(lzw_decode({5}), std::invalid_argument);
    CHECK_THROWS_AS(lzw_decode({0, 3}), std::invalid_argument);
}

TEST_CASE("lzw roundtrips on random strings of every small length") {
    RngStream rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        size_t len = 1 + rng.next_below(512);
        std::vector<uint8_t> bits(len);
        for (auto& b : bits) b = uint8_t(rng.next() & 1);
        CHECK(lzw_decode(lzw_encode(bits).codes) == bits);
    }
}

TEST_CASE("ctm lookup checks shape, hits entries, falls back on unknowns") {
    CtmTable t;
    t.shape = BlockShape::String;
    t.size = 3;
    t.entries = {{"0", 2.0}, {"01", 3.5}};
    t.fallback = 9.0;
    CHECK(t.lookup("0") == 2.0);
    CHECK(t.lookup("01") == 3.5);
    CHECK(t.lookup("111") == 9.0);
    CHECK_THROWS_AS(t.lookup(""), std::invalid_argument);
    CHECK_THROWS_AS(t.lookup("0000"), std::invalid_argument);

    CtmTable sq = testfix::unit_square_table();
    CHECK(sq.lookup("1") == 2.0);
    CHECK_THROWS_AS(sq.lookup("11"), std::invalid_argument);
}

TEST_CASE("ctm validation rejects broken tables") {
    CtmTable t = testfix::unit_square_table();
    CHECK_NOTHROW(validate_ctm_table(t));
    CtmTable neg = t;
    neg.entries["0"] = -1.0;
    CHECK_THROWS_AS(validate_ctm_table(neg), std::invalid_argument);
    CtmTable low_fb = t;
    low_fb.fallback = 0.5;
    CHECK_THROWS_AS(validate_ctm_table(low_fb), std::invalid_argument);
    CtmTable bad_key = t;
    bad_key.entries["x"] = 1.0;
    CHECK_THROWS_AS(validate_ctm_table(bad_key), std::invalid_argument);
    CtmTable empty;
    empty.size = 2;
    CHECK_THROWS_AS(validate_ctm_table(empty), std::invalid_argument);
}

TEST_CASE("ctm files roundtrip exactly and reject malformed input") {
    CtmTable t;
    t.shape = BlockShape::String;
    t.size = 2;
    t.entries = {{"0", 1.0 / 3.0}, {"1", 2.0}, {"01", 5.0000000001}};
    t.fallback = 6.0000000001;
    std::string path = testfix::temp_path("ctm.txt");
    save_ctm_table(t, path);
    CtmTable back = load_ctm_table(path);
    CHECK(back.shape == BlockShape::String);
    CHECK(back.size == 2);
    CHECK(back.entries.size() == 3);
    CHECK(back.entries.at("0") == t.entries.at("0")); // 17 digits keep doubles exact
    CHECK(back.entries.at("01") == t.entries.at("01"));
    CHECK(back.fallback == doctest::Approx(6.0000000001));

    auto write_file = [](const std::string& p, const std::string& text) {
        std::ofstream f(p, std::ios::binary);
        f << text;
    };
    std::string bad = testfix::temp_path("ctm_bad.txt");
    write_file(bad, "ctm blobs 2\n0 1.0\n");
    CHECK_THROWS(load_ctm_table(bad));
    write_file(bad, "ctm string 2\n0 1.0\n0 2.0\n");
    CHECK_THROWS(load_ctm_table(bad)); // duplicate block
    write_file(bad, "ctm string 2\n0 -1.0\n");
    CHECK_THROWS(load_ctm_table(bad)); // negative value
    write_file(bad, "ctm string 2\n01\n");
    CHECK_THROWS(load_ctm_table(bad)); // entry without value
}

TEST_CASE("saved ctm files are canonical: sorted by length then lexicographically") {
    CtmTable t;
    t.shape = BlockShape::String;
    t.size = 2;
    t.entries = {{"10", 3.0}, {"1", 2.0}, {"0", 1.0}, {"01", 4.0}};
    t.fallback = 5.0;
    std::string path = testfix::temp_path("ctm_sorted.txt");
    save_ctm_table(t, path);
    std::ifstream f(path);
    std::string l0, l1, l2, l3, l4;
    std::getline(f, l0);
    std::getline(f, l1);
    std::getline(f, l2);
    std::getline(f, l3);
    std::getline(f, l4);
    CHECK(l0 == "ctm string 2");
    CHECK(l1 == "0 1");
    CHECK(l2 == "1 2");
    CHECK(l3 == "01 4");
    CHECK(l4 == "10 3");
}

TEST_CASE("bdm with a side-1 table reduces to symbol counting") {
    // unit table: value 1 for "0", 2 for "1"; bdm = 1+log2(z) + 2+log2(o)
    CtmTable t = testfix::unit_square_table();
    BitMatrix m(2, 3);
    m.set(0, 0, true);
    m.set(1, 2, true);
    double expect = 1.0 + std::log2(4.0) + 2.0 + std::log2(2.0);
    CHECK(bdm(m, t, 1) == doctest::Approx(expect).epsilon(1e-12));

    BitMatrix zeros(2, 2);
    CHECK(bdm(zeros, t, 1) == doctest::Approx(1.0 + 2.0).epsilon(1e-12));
}

TEST_CASE("bdm boundary handling: Ignore drops partial tiles, PadZero completes them") {
    CtmTable t = testfix::popcount_square_table();
    BitMatrix m(3, 3);
    m.set(0, 0, true);
    m.set(2, 2, true);
    // Ignore: single 2x2 block "1000" -> 3.0
    CHECK(bdm(m, t, 2, Boundary::Ignore) == doctest::Approx(3.0).epsilon(1e-12));
    // PadZero: blocks 1000, 0000, 0000, 1000 -> (3 + log2 2) + (2 + log2 2)
    CHECK(bdm(m, t, 2, Boundary::PadZero) == doctest::Approx(7.0).epsilon(1e-12));

    BitMatrix tiny(1, 1);
    CHECK_THROWS_AS(bdm(tiny, t, 2, Boundary::Ignore), std::invalid_argument);
    CHECK_NOTHROW(bdm(tiny, t, 2, Boundary::PadZero));

    CtmTable str;
    str.shape = BlockShape::String;
    str.size = 2;
    str.entries = {{"0", 1.0}};
    str.fallback = 2.0;
    CHECK_THROWS_AS(bdm(m, str, 2), std::invalid_argument); // wrong table shape
    CHECK_THROWS_AS(bdm(m, t, 3), std::invalid_argument);   // side mismatch
}

TEST_CASE("bdm duplication law: tiling m copies adds one log2(m) per distinct block") {
    CtmTable t = testfix::popcount_square_table();
    BitMatrix base(2, 4); // two distinct blocks: 0110 and 1001 patterns
    base.set(0, 1, true);
    base.set(1, 0, true);
    base.set(0, 2, true);
    base.set(1, 3, true);
    double d1 = bdm(base, t, 2);

    for (uint32_t m = 2; m <= 8; m *= 2) {
        BitMatrix tiled(2, 4 * m);
        for (uint32_t rep = 0; rep < m; ++rep)
            for (size_t r = 0; r < 2; ++r)
                for (size_t c = 0; c < 4; ++c)
                    if (base.get(r, c)) tiled.set(r, rep * 4 + c, true);
        CHECK(bdm(tiled, t, 2) == doctest::Approx(d1 + 2.0 * std::log2(double(m))).epsilon(1e-12));
    }
}

TEST_CASE("string bdm chunks the sequence like the matrix variant tiles it") {
    CtmTable str;
    str.shape = BlockShape::String;
    str.size = 2;
    str.entries = {{"00", 1.0}, {"01", 2.0}, {"10", 3.0}, {"11", 4.0}, {"0", 0.5}, {"1", 0.75}};
    str.fallback = 5.0;
    // chunks 01,01,11 -> (2 + log2 2) + 4
    CHECK(bdm_string({0, 1, 0, 1, 1, 1}, str, 2) == doctest::Approx(7.0).epsilon(1e-12));
    // Ignore drops the trailing odd symbol; PadZero turns it into "10"
    CHECK(bdm_string({0, 1, 1}, str, 2, Boundary::Ignore) == doctest::Approx(2.0));
    CHECK(bdm_string({0, 1, 1}, str, 2, Boundary::PadZero) == doctest::Approx(5.0));
    CHECK_THROWS_AS(bdm_string({0}, str, 2, Boundary::Ignore), std::invalid_argument);
    CHECK_THROWS_AS(bdm_string({0, 1}, str, 3), std::invalid_argument); // block_len > size
}

TEST_CASE("randomness_report bundles the three measures with the table's block side") {
    CtmTable t = testfix::unit_square_table();
    BitMatrix m(2, 2);
    m.set(0, 1, true);
    RandomnessReport r = randomness_report(m, t);
    CHECK(r.entropy == doctest::Approx(shannon_entropy(m)));
    CHECK(r.lzw_rate == doctest::Approx(compressibility_rate(m)));
    CHECK(r.bdm == doctest::Approx(bdm(m, t, 1)));

    CtmTable str;
    str.shape = BlockShape::String;
    str.size = 1;
    str.entries = {{"0", 1.0}};
    str.fallback = 2.0;
    CHECK_THROWS_AS(randomness_report(m, str), std::invalid_argument);
}

TEST_CASE("composed square tables score blocks by their rows") {
    CtmTable str;
    str.shape = BlockShape::String;
    str.size = 2;
    str.entries = {{"00", 1.0}, {"01", 2.0}, {"10", 3.0}, {"11", 4.0}};
    str.fallback = 5.0;
    CtmTable sq = compose_square_table(str, 2);
    CHECK(sq.shape == BlockShape::Square);
    CHECK(sq.size == 2);
    CHECK(sq.entries.size() == 16);
    // rows "01","01": 2 + log2 2
    CHECK(sq.lookup("0101") == doctest::Approx(3.0).epsilon(1e-12));
    // rows "00","11": 1 + 4
    CHECK(sq.lookup("0011") == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(sq.fallback > 5.0 + 3.0 - 1e-9);

    CHECK_THROWS_AS(compose_square_table(sq, 2), std::invalid_argument);  // needs string table
    CHECK_THROWS_AS(compose_square_table(str, 0), std::invalid_argument);
    CHECK_THROWS_AS(compose_square_table(str, 3), std::invalid_argument); // rows longer than size
}
