#include "rhograph/graph6.hpp"

#include <cstdint>

#include "rhograph/errors.hpp"

namespace rhograph {

namespace {

constexpr int kBias = 63;
constexpr long long kMaxOrder = 68719476735LL; // 2^36 - 1, format ceiling

void append_size(std::string& out, long long n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    } else {
        out.push_back('~');
        out.push_back('~');
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
}

class BitReader {
public:
    BitReader(std::string_view data, std::size_t pos) : data_(data), pos_(pos) {}

    int read_bit() {
        if (bit_ == 0) {
            if (pos_ >= data_.size())
                throw ParseError("graph6: truncated bit data", pos_);
            char c = data_[pos_];
            if (c < kBias || c > 126)
                throw ParseError("graph6: invalid character", pos_);
            current_ = c - kBias;
            bit_ = 6;
            ++pos_;
        }
        --bit_;
        return (current_ >> bit_) & 1;
    }

    long long read_bits(int k) {
        long long v = 0;
        for (int i = 0; i < k; ++i) v = (v << 1) | read_bit();
        return v;
    }

    std::size_t pos() const { return pos_; }
    long long remaining() const {
        return static_cast<long long>(data_.size() - pos_) * 6 + bit_;
    }

private:
    std::string_view data_;
    std::size_t pos_;
    int current_ = 0;
    int bit_ = 0;
};

long long parse_size(std::string_view s, std::size_t& pos) {
    auto need = [&](std::size_t k) {
        if (pos + k > s.size())
            throw ParseError("graph6: truncated size field", s.size());
    };
    auto val = [&](std::size_t i) -> long long {
        char c = s[i];
        if (c < kBias || c > 126)
            throw ParseError("graph6: invalid character in size field", i);
        return c - kBias;
    };
    need(1);
    if (s[pos] != '~') return val(pos++);
    ++pos;
    need(1);
    if (s[pos] != '~') {
        need(3);
        long long n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | val(pos++);
        return n;
    }
    ++pos;
    need(6);
    long long n = 0;
    for (int i = 0; i < 6; ++i) n = (n << 6) | val(pos++);
    return n;
}

Graph parse_g6_body(std::string_view s) {
    std::size_t pos = 0;
    long long n = parse_size(s, pos);
    if (n > kMaxOrder) throw ParseError("graph6: order out of range", 0);
    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t nbytes = (nbits + 5) / 6;
    if (s.size() - pos != nbytes)
        throw ParseError("graph6: wrong body length", s.size());
    BitReader bits(s, pos);
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (bits.read_bit()) edges.emplace_back(i, j);
    return Graph::from_edges(static_cast<int>(n), edges);
}

Graph parse_s6_body(std::string_view s) {
    std::size_t pos = 1; // skip ':'
    long long n = parse_size(s, pos);
    if (n > kMaxOrder) throw ParseError("sparse6: order out of range", 1);
    int k = 1;
    while ((1LL << k) < n) ++k;
    BitReader bits(s, pos);
    std::vector<std::pair<int, int>> edges;
    long long v = 0;
    // Trailing 1-bits are padding; a partial group or v reaching n ends it.
    while (bits.remaining() >= 1 + k) {
        std::size_t group_pos = bits.pos();
        int b = bits.read_bit();
        long long x = bits.read_bits(k);
        if (b) ++v;
        if (x > v) {
            v = x;
        } else if (v < n) {
            if (x == v)
                throw ParseError("sparse6: loop in input", group_pos);
            edges.emplace_back(static_cast<int>(x), static_cast<int>(v));
        }
        if (v >= n) break;
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

} // namespace

std::string to_graph6(const Graph& g) {
    std::string out;
    append_size(out, g.order());
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.order(); ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0)
        out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
    return out;
}

Graph parse_graph6(std::string_view line) {
    std::string_view s = line;
    if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
    else if (s.starts_with(">>sparse6<<")) s.remove_prefix(11);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty graph6 line", 0);
    if (s.front() == ':') return parse_s6_body(s);
    return parse_g6_body(s);
}

} // namespace rhograph
