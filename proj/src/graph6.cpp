#include "p3pack/graph6.hpp"

#include <stdexcept>

namespace p3pack {

namespace {

constexpr int kMaxN = 258047;

void append_bits(std::string& out, const std::vector<bool>& bits) {
    int acc = 0, used = 0;
    for (bool b : bits) {
        acc = (acc << 1) | (b ? 1 : 0);
        if (++used == 6) {
            out.push_back(static_cast<char>(acc + 63));
            acc = 0;
            used = 0;
        }
    }
    if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    int n = g.n();
    if (n > kMaxN) throw std::invalid_argument("graph6_encode: n too large");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    std::vector<bool> bits;
    bits.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
    append_bits(out, bits);
    return out;
}

Graph graph6_decode(const std::string& line) {
    if (line.empty()) throw std::invalid_argument("graph6_decode: empty input");
    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= line.size()) throw std::invalid_argument("graph6_decode: truncated input");
        int c = static_cast<unsigned char>(line[pos++]);
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6_decode: byte out of range at position " +
                                        std::to_string(pos - 1));
        return c - 63;
    };
    long long n = 0;
    int first = next();
    if (first == 63) {
        // extended header; the full 8-byte form (>>258047) is out of scope
        int a = next();
        if (a == 63) throw std::invalid_argument("graph6_decode: n beyond supported range");
        n = (static_cast<long long>(a) << 12) | (next() << 6) | next();
    } else {
        n = first;
    }
    long long nbits = n * (n - 1) / 2;
    long long nbytes = (nbits + 5) / 6;
    if (static_cast<long long>(line.size() - pos) != nbytes)
        throw std::invalid_argument("graph6_decode: body has " +
                                    std::to_string(line.size() - pos) + " bytes, expected " +
                                    std::to_string(nbytes));
    std::vector<Edge> edges;
    int acc = 0, avail = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (avail == 0) {
                acc = next();
                avail = 6;
            }
            if (acc & (1 << (avail - 1))) edges.emplace_back(i, j);
            --avail;
        }
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::vector<Graph> graph6_read_lines(const std::string& text) {
    std::vector<Graph> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        std::string line = text.substr(start, end == std::string::npos ? std::string::npos
                                                                       : end - start);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string header = ">>graph6<<";
        if (line.rfind(header, 0) == 0) line = line.substr(header.size());
        if (!line.empty()) out.push_back(graph6_decode(line));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

}  // namespace p3pack
