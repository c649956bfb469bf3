#include "stellate/graph_io.hpp"

#include <cctype>

#include "stellate/errors.hpp"

namespace stellate {

namespace {

int g6_byte(std::string_view line, std::size_t pos) {
    if (pos >= line.size())
        throw input_error("graph6: unexpected end of input at byte " + std::to_string(pos));
    unsigned char c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126)
        throw input_error("graph6: invalid byte " + std::to_string(int(c)) + " at offset " + std::to_string(pos));
    return c - 63;
}

} // namespace

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.rfind(">>graph6<<", 0) == 0) line.remove_prefix(10);
    if (line.empty()) throw input_error("graph6: empty input");

    std::size_t pos = 0;
    long n;
    if (line[0] == '~') {
        // long form: '~' then three bytes of 18-bit n (we only accept n <= 64)
        ++pos;
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | g6_byte(line, pos++);
    } else {
        n = g6_byte(line, pos++);
    }
    if (n > 64) throw input_error("graph6: " + std::to_string(n) + " vertices exceeds the 64-vertex limit");

    Graph g(static_cast<int>(n));
    int acc = 0, acc_bits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (acc_bits == 0) {
                acc = g6_byte(line, pos++);
                acc_bits = 6;
            }
            if ((acc >> (acc_bits - 1)) & 1) g.add_edge(u, v);
            --acc_bits;
        }
    }
    if (pos != line.size())
        throw input_error("graph6: trailing data at offset " + std::to_string(pos));
    if (acc_bits > 0 && (acc & ((1 << acc_bits) - 1)) != 0)
        throw input_error("graph6: nonzero padding bits in final byte at offset " + std::to_string(pos - 1));
    return g;
}

std::string encode_graph6(const Graph& g) {
    std::string out;
    int n = g.n();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, acc_bits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++acc_bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                acc_bits = 0;
            }
        }
    }
    if (acc_bits > 0) out.push_back(static_cast<char>((acc << (6 - acc_bits)) + 63));
    return out;
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw input_error("graph json: expected an object with integer field \"n\"");
    int n = j["n"].get<int>();
    if (n < 0 || n > 64) throw input_error("graph json: n must be between 0 and 64");
    Graph g(n);
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw input_error("graph json: \"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                throw input_error("graph json: each edge must be a pair of integers");
            int u = e[0].get<int>(), v = e[1].get<int>();
            if (u < 1 || u > n || v < 1 || v > n)
                throw input_error("graph json: edge [" + std::to_string(u) + "," + std::to_string(v) +
                                  "] out of range 1.." + std::to_string(n));
            g.add_edge(u - 1, v - 1);
        }
    }
    if (j.contains("labels")) {
        if (!j["labels"].is_array() || static_cast<int>(j["labels"].size()) != n)
            throw input_error("graph json: \"labels\" must list one string per vertex");
        std::vector<std::string> labels;
        for (const auto& s : j["labels"]) {
            if (!s.is_string()) throw input_error("graph json: labels must be strings");
            labels.push_back(s.get<std::string>());
        }
        g.set_labels(std::move(labels));
    }
    return g;
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.n();
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
    j["edges"] = std::move(edges);
    if (g.has_labels()) j["labels"] = g.labels();
    return j;
}

Graph parse_graph_line(std::string_view line) {
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) throw input_error("empty graph line");
    if (line[i] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line.substr(i));
        } catch (const nlohmann::json::parse_error& e) {
            throw input_error(std::string("graph json: ") + e.what());
        }
        return graph_from_json(j);
    }
    return parse_graph6(line.substr(i));
}

} // namespace stellate
