#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "mclab/graph.hpp"

namespace mclab {

/// Raised for malformed graph6 input. `offset` is the zero-based byte position of
/// the offending (or missing) byte.
class Graph6Error : public Error {
public:
    Graph6Error(std::size_t offset, const std::string& what)
        : Error("graph6 byte " + std::to_string(offset) + ": " + what), offset_(offset)
    {
    }

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

namespace detail {
inline constexpr int kGraph6Bias = 63;
inline constexpr int kGraph6Max = 126;
} // namespace detail

/// Short-form graph6: one size byte (n + 63), then the upper triangle in column
/// order x(0,1) x(0,2) x(1,2) x(0,3) ... packed six bits per byte, MSB first.
inline std::string emit_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out(1, static_cast<char>(n + detail::kGraph6Bias));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + detail::kGraph6Bias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + detail::kGraph6Bias));
    return out;
}

inline Graph parse_graph6(std::string_view text)
{
    if (text.empty())
        throw Graph6Error(0, "empty input");
    const int head = static_cast<unsigned char>(text[0]);
    if (head < detail::kGraph6Bias || head > detail::kGraph6Max)
        throw Graph6Error(0, "size byte outside printable graph6 range");
    if (head == detail::kGraph6Max)
        throw Graph6Error(0, "long-form size (n > 62) is not supported");
    const int n = head - detail::kGraph6Bias;
    if (n < 2)
        throw Graph6Error(0, "graph order " + std::to_string(n) + " below 2");

    const long long bits = choose2(n);
    const std::size_t expected = 1 + static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() < expected)
        throw Graph6Error(text.size(), "truncated: expected " + std::to_string(expected) + " bytes");
    if (text.size() > expected)
        throw Graph6Error(expected, "unexpected trailing bytes");

    for (std::size_t pos = 1; pos < expected; ++pos) {
        const int c = static_cast<unsigned char>(text[pos]);
        if (c < detail::kGraph6Bias || c > detail::kGraph6Max)
            throw Graph6Error(pos, "data byte outside printable graph6 range");
    }

    Graph g(n);
    long long index = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++index) {
            const int byte = text[1 + static_cast<std::size_t>(index / 6)] - detail::kGraph6Bias;
            if ((byte >> (5 - index % 6)) & 1)
                g.add_edge(i, j);
        }
    }
    const int padding = static_cast<int>((6 - bits % 6) % 6);
    if (padding > 0) {
        const int last = text[expected - 1] - detail::kGraph6Bias;
        if ((last & ((1 << padding) - 1)) != 0)
            throw Graph6Error(expected - 1, "nonzero padding bits");
    }
    return g;
}

} // namespace mclab
