#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/bit_matrix.hpp"

namespace rbnlab {

// Binary symbol entropy of a 0/1 sequence, in bits per symbol. 0 log 0 = 0.
double shannon_entropy(const std::vector<uint8_t>& bits);
double shannon_entropy(const BitMatrix& m);

struct LzwResult {
    std::vector<uint32_t> codes;
    uint64_t encoded_bits = 0; // variable-width charge, see lzw_encode
};

// LZW over the two-symbol alphabet. The dictionary starts as {"0"->0,"1"->1}
// and grows by one phrase per emission. Each emitted code is charged
// ceil(log2(dictionary size)) bits with the size taken before the new phrase
// is inserted; the final code is charged at the final dictionary size.
LzwResult lzw_encode(const std::vector<uint8_t>& bits);

// Inverse of lzw_encode's code stream, including the self-referential case
// where a code names the phrase currently being defined. Throws on code
// indices outside the dictionary (>= size + 1 at that point).
std::vector<uint8_t> lzw_decode(const std::vector<uint32_t>& codes);

// encoded_bits / original length.
double compressibility_rate(const std::vector<uint8_t>& bits);
double compressibility_rate(const BitMatrix& m);

enum class BlockShape { String, Square };

// Coding-theorem lookup table: block pattern -> complexity in bits. String
// tables key on 0/1 strings up to length `size`; Square tables on the
// row-major serialization of a size x size block. Unknown blocks of a legal
// shape fall back to `fallback` (at least the largest entry).
struct CtmTable {
    BlockShape shape = BlockShape::String;
    uint32_t size = 0;
    std::unordered_map<std::string, double> entries;
    double fallback = 0;

    double lookup(const std::string& block) const;
};

void validate_ctm_table(const CtmTable& t);

// Text format: header "ctm <string|square> <size>", then "<block> <value>"
// lines, block row-major 0/1, value with 17 significant digits. Writer emits
// entries sorted by length then lexicographically so files are canonical.
CtmTable load_ctm_table(const std::string& path);
void save_ctm_table(const CtmTable& t, const std::string& path);

enum class Boundary { Ignore, PadZero };

// Block-decomposition complexity estimate: partition into block_side x
// block_side tiles from the top-left, then sum ctm(block) + log2(multiplicity)
// over distinct tiles. Ignore drops partial edge tiles (error if that leaves
// nothing); PadZero completes them with zeros.
double bdm(const BitMatrix& m, const CtmTable& table, uint32_t block_side = 4,
           Boundary boundary = Boundary::Ignore);

// Same scheme over a 0/1 sequence with chunks of block_len symbols.
double bdm_string(const std::vector<uint8_t>& bits, const CtmTable& table, uint32_t block_len,
                  Boundary boundary = Boundary::Ignore);

struct RandomnessReport {
    double entropy = 0;
    double lzw_rate = 0;
    double bdm = 0;
};

// The three randomness estimates of a matrix in one shot. BDM uses the
// table's own block side.
RandomnessReport randomness_report(const BitMatrix& m, const CtmTable& table,
                                   Boundary boundary = Boundary::Ignore);

// Square table whose entry for each side x side block is the 1D block
// decomposition of the block's rows against a string table. Complete over all
// 2^(side^2) patterns; the standard source for the shipped 4x4 table.
CtmTable compose_square_table(const CtmTable& string_table, uint32_t side);

} // namespace rbnlab
