#include "core/measures.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rbnlab {

namespace {

uint32_t ceil_log2(size_t n) {
    // n >= 2 whenever called: the dictionary never shrinks below the two roots
    return uint32_t(std::bit_width(n - 1));
}

double fraction_entropy(double q) {
    double h = 0;
    if (q > 0) h -= q * std::log2(q);
    if (q < 1) h -= (1 - q) * std::log2(1 - q);
    return h;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

double shannon_entropy(const std::vector<uint8_t>& bits) {
    if (bits.empty()) throw std::invalid_argument("shannon_entropy: empty sequence");
    size_t ones = 0;
    for (uint8_t b : bits) ones += b;
    return fraction_entropy(double(ones) / double(bits.size()));
}

double shannon_entropy(const BitMatrix& m) {
    return fraction_entropy(double(m.count_ones()) / double(m.bit_count()));
}

LzwResult lzw_encode(const std::vector<uint8_t>& bits) {
    if (bits.empty()) throw std::invalid_argument("lzw_encode: empty sequence");
    for (uint8_t b : bits)
        if (b > 1) throw std::invalid_argument("lzw_encode: symbols must be 0 or 1");
    LzwResult res;
    // Phrase dictionary as a binary trie over codes; roots are "0" and "1".
    std::vector<std::array<int32_t, 2>> children;
    children.reserve(bits.size() / 4 + 8);
    children.push_back({-1, -1});
    children.push_back({-1, -1});
    uint32_t w = bits[0];
    for (size_t i = 1; i < bits.size(); ++i) {
        uint8_t c = bits[i];
        int32_t child = children[w][c];
        if (child >= 0) {
            w = uint32_t(child);
            continue;
        }
        res.codes.push_back(w);
        res.encoded_bits += ceil_log2(children.size());
        children[w][c] = int32_t(children.size());
        children.push_back({-1, -1});
        w = c;
    }
    res.codes.push_back(w);
    res.encoded_bits += ceil_log2(children.size());
    return res;
}

std::vector<uint8_t> lzw_decode(const std::vector<uint32_t>& codes) {
    if (codes.empty()) throw std::invalid_argument("lzw_decode: empty code sequence");
    struct Entry {
        int32_t prefix;
        uint8_t sym;   // last symbol of the phrase
        uint8_t first; // first symbol of the phrase
    };
    std::vector<Entry> dict = {{-1, 0, 0}, {-1, 1, 1}};
    std::vector<uint8_t> out;
    std::vector<uint8_t> tmp;

    auto expand = [&](uint32_t code) {
        tmp.clear();
        for (int32_t c = int32_t(code); c >= 0; c = dict[c].prefix) tmp.push_back(dict[c].sym);
        out.insert(out.end(), tmp.rbegin(), tmp.rend());
    };

    uint32_t prev = codes[0];
    if (prev >= dict.size()) throw std::invalid_argument("lzw_decode: malformed code sequence");
    expand(prev);
    for (size_t i = 1; i < codes.size(); ++i) {
        uint32_t c = codes[i];
        if (c < dict.size()) {
            dict.push_back({int32_t(prev), dict[c].first, dict[prev].first});
            expand(c);
        } else if (c == dict.size()) {
            // Self-referential code: the phrase being defined, prev + first(prev).
            dict.push_back({int32_t(prev), dict[prev].first, dict[prev].first});
            expand(c);
        } else {
            throw std::invalid_argument("lzw_decode: malformed code sequence");
        }
        prev = c;
    }
    return out;
}

double compressibility_rate(const std::vector<uint8_t>& bits) {
    return double(lzw_encode(bits).encoded_bits) / double(bits.size());
}

double compressibility_rate(const BitMatrix& m) { return compressibility_rate(flatten(m)); }

double CtmTable::lookup(const std::string& block) const {
    if (shape == BlockShape::String) {
        if (block.empty() || block.size() > size)
            throw std::invalid_argument("ctm lookup: block length incompatible with string table");
    } else {
        if (block.size() != size_t(size) * size)
            throw std::invalid_argument("ctm lookup: block incompatible with square table");
    }
    auto it = entries.find(block);
    return it == entries.end() ? fallback : it->second;
}

void validate_ctm_table(const CtmTable& t) {
    if (t.size == 0) throw std::invalid_argument("ctm table: size must be positive");
    if (t.entries.empty()) throw std::invalid_argument("ctm table: no entries");
    double mx = 0;
    for (const auto& [block, value] : t.entries) {
        bool shape_ok = t.shape == BlockShape::String
                            ? (!block.empty() && block.size() <= t.size)
                            : block.size() == size_t(t.size) * t.size;
        if (!shape_ok) throw std::invalid_argument("ctm table: entry block has wrong shape");
        for (char c : block)
            if (c != '0' && c != '1')
                throw std::invalid_argument("ctm table: blocks must be 0/1 strings");
        if (!(value > 0) || !std::isfinite(value))
            throw std::invalid_argument("ctm table: values must be positive and finite");
        mx = std::max(mx, value);
    }
    if (!(t.fallback >= mx))
        throw std::invalid_argument("ctm table: fallback below largest entry");
}

CtmTable load_ctm_table(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    std::string magic, shape_word;
    uint32_t size = 0;
    if (!(f >> magic >> shape_word >> size) || magic != "ctm" ||
        (shape_word != "string" && shape_word != "square"))
        throw std::runtime_error("ctm table: bad header in " + path);
    CtmTable t;
    t.shape = shape_word == "string" ? BlockShape::String : BlockShape::Square;
    t.size = size;
    std::string block;
    double value = 0;
    double mx = 0;
    while (f >> block >> value) {
        if (!t.entries.emplace(block, value).second)
            throw std::runtime_error("ctm table: duplicate block '" + block + "' in " + path);
        mx = std::max(mx, value);
    }
    if (!f.eof()) throw std::runtime_error("ctm table: malformed entry line in " + path);
    t.fallback = mx + 1.0;
    validate_ctm_table(t);
    return t;
}

void save_ctm_table(const CtmTable& t, const std::string& path) {
    validate_ctm_table(t);
    std::vector<const std::string*> keys;
    keys.reserve(t.entries.size());
    for (const auto& kv : t.entries) keys.push_back(&kv.first);
    std::sort(keys.begin(), keys.end(), [](const std::string* a, const std::string* b) {
        if (a->size() != b->size()) return a->size() < b->size();
        return *a < *b;
    });
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << "ctm " << (t.shape == BlockShape::String ? "string" : "square") << ' ' << t.size << '\n';
    for (const auto* k : keys) f << *k << ' ' << format_double(t.entries.at(*k)) << '\n';
    if (!f) throw std::runtime_error("write failed: " + path);
}

namespace {

double aggregate_blocks(const std::unordered_map<std::string, uint64_t>& mult,
                        const CtmTable& table) {
    double sum = 0;
    for (const auto& [block, n] : mult) sum += table.lookup(block) + std::log2(double(n));
    return sum;
}

} // namespace

double bdm(const BitMatrix& m, const CtmTable& table, uint32_t block_side, Boundary boundary) {
    if (block_side == 0) throw std::invalid_argument("bdm: block_side must be positive");
    if (table.shape != BlockShape::Square || table.size != block_side)
        throw std::invalid_argument("bdm: table shape must be Square(block_side)");
    size_t nbr, nbc;
    if (boundary == Boundary::Ignore) {
        nbr = m.rows() / block_side;
        nbc = m.cols() / block_side;
        if (nbr == 0 || nbc == 0)
            throw std::invalid_argument("bdm: matrix smaller than one block with Ignore boundary");
    } else {
        nbr = (m.rows() + block_side - 1) / block_side;
        nbc = (m.cols() + block_side - 1) / block_side;
    }
    std::unordered_map<std::string, uint64_t> mult;
    std::string block(size_t(block_side) * block_side, '0');
    for (size_t br = 0; br < nbr; ++br) {
        for (size_t bc = 0; bc < nbc; ++bc) {
            size_t pos = 0;
            for (size_t r = br * block_side; r < (br + 1) * block_side; ++r) {
                for (size_t c = bc * block_side; c < (bc + 1) * block_side; ++c, ++pos) {
                    bool v = r < m.rows() && c < m.cols() ? m.get(r, c) : false;
                    block[pos] = v ? '1' : '0';
                }
            }
            ++mult[block];
        }
    }
    return aggregate_blocks(mult, table);
}

double bdm_string(const std::vector<uint8_t>& bits, const CtmTable& table, uint32_t block_len,
                  Boundary boundary) {
    if (block_len == 0) throw std::invalid_argument("bdm_string: block_len must be positive");
    if (table.shape != BlockShape::String || block_len > table.size)
        throw std::invalid_argument("bdm_string: table shape must be String(>= block_len)");
    size_t nb;
    if (boundary == Boundary::Ignore) {
        nb = bits.size() / block_len;
        if (nb == 0)
            throw std::invalid_argument("bdm_string: sequence shorter than one block with Ignore");
    } else {
        nb = (bits.size() + block_len - 1) / block_len;
    }
    std::unordered_map<std::string, uint64_t> mult;
    std::string block(block_len, '0');
    for (size_t b = 0; b < nb; ++b) {
        for (size_t j = 0; j < block_len; ++j) {
            size_t i = b * block_len + j;
            block[j] = (i < bits.size() && bits[i]) ? '1' : '0';
        }
        ++mult[block];
    }
    return aggregate_blocks(mult, table);
}

RandomnessReport randomness_report(const BitMatrix& m, const CtmTable& table, Boundary boundary) {
    if (table.shape != BlockShape::Square)
        throw std::invalid_argument("randomness_report: needs a square-block table");
    RandomnessReport r;
    r.entropy = shannon_entropy(m);
    r.lzw_rate = compressibility_rate(m);
    r.bdm = bdm(m, table, table.size, boundary);
    return r;
}

CtmTable compose_square_table(const CtmTable& string_table, uint32_t side) {
    if (string_table.shape != BlockShape::String)
        throw std::invalid_argument("compose_square_table: needs a string table");
    if (side == 0 || side > 4)
        throw std::invalid_argument("compose_square_table: side must be in [1,4]");
    if (string_table.size < side)
        throw std::invalid_argument("compose_square_table: string table shorter than one row");
    CtmTable t;
    t.shape = BlockShape::Square;
    t.size = side;
    const uint32_t nbits = side * side;
    std::vector<uint8_t> bits(nbits);
    std::string key(nbits, '0');
    double mx = 0;
    for (uint64_t code = 0; code < (1ull << nbits); ++code) {
        for (uint32_t i = 0; i < nbits; ++i) {
            // bit 0 of the code is the top-left cell, row-major
            uint8_t b = (code >> i) & 1;
            bits[i] = b;
            key[i] = char('0' + b);
        }
        double v = bdm_string(bits, string_table, side, Boundary::Ignore);
        t.entries.emplace(key, v);
        mx = std::max(mx, v);
    }
    t.fallback = mx + 1.0;
    return t;
}

} // namespace rbnlab
