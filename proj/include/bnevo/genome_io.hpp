#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "bnevo/core.hpp"
#include "json.hpp"

namespace bnevo {

class GenomeFormatError : public std::runtime_error {
  public:
    explicit GenomeFormatError(const std::string& what)
        : std::runtime_error(what) {}
};

namespace detail {

// Truth tables travel as hex strings with entry 0 at the most significant bit
// of the encoded value, e.g. the 32-entry table of a k=5 node becomes exactly
// 8 hex digits.
inline std::string table_to_hex(const NodeGenome& g, int table_size) {
    const int digits = (table_size + 3) / 4;
    std::uint32_t value = 0;
    for (int e = 0; e < table_size; ++e)
        if (g.entry(e)) value |= std::uint32_t(1) << (4 * digits - 1 - e);
    std::ostringstream os;
    os << std::hex << std::nouppercase;
    std::string raw;
    {
        std::ostringstream tmp;
        tmp << std::hex << value;
        raw = tmp.str();
    }
    return std::string(std::size_t(digits) - raw.size(), '0') + raw;
}

inline NodeGenome table_from_hex(const std::string& hex, int table_size) {
    const int digits = (table_size + 3) / 4;
    if (int(hex.size()) != digits)
        throw GenomeFormatError("table entry has " + std::to_string(hex.size()) +
                                " hex digits, expected " + std::to_string(digits));
    std::uint32_t value = 0;
    for (char ch : hex) {
        int nibble;
        if (ch >= '0' && ch <= '9')
            nibble = ch - '0';
        else if (ch >= 'a' && ch <= 'f')
            nibble = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F')
            nibble = ch - 'A' + 10;
        else
            throw GenomeFormatError(std::string("invalid hex digit '") + ch + "'");
        value = (value << 4) | std::uint32_t(nibble);
    }
    NodeGenome g;
    for (int e = 0; e < table_size; ++e)
        g.set_entry(e, (value >> (4 * digits - 1 - e)) & 1u);
    return g;
}

}  // namespace detail

inline std::string network_to_json(const BooleanNetwork& net) {
    nlohmann::json j;
    j["n"] = net.num_nodes;
    j["k"] = net.num_inputs;
    auto tables = nlohmann::json::array();
    for (const NodeGenome& g : net.genomes)
        tables.push_back(detail::table_to_hex(g, net.table_size()));
    j["tables"] = std::move(tables);
    return j.dump();
}

inline BooleanNetwork network_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw GenomeFormatError(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("k") ||
        !j.contains("tables"))
        throw GenomeFormatError("genome object must carry n, k and tables");
    if (!j["n"].is_number_integer() || !j["k"].is_number_integer() ||
        !j["tables"].is_array())
        throw GenomeFormatError("n and k must be integers, tables an array");
    const int n = j["n"].get<int>();
    const int k = j["k"].get<int>();
    if (n < 1 || n > kMaxNodes)
        throw GenomeFormatError("n out of range [1," +
                                std::to_string(kMaxNodes) + "]");
    if (k < 1 || k > kMaxInputs)
        throw GenomeFormatError("k out of range [1," +
                                std::to_string(kMaxInputs) + "]");
    if (int(j["tables"].size()) != n)
        throw GenomeFormatError("expected " + std::to_string(n) + " tables, got " +
                                std::to_string(j["tables"].size()));
    BooleanNetwork net(n, k);
    for (int i = 0; i < n; ++i) {
        if (!j["tables"][std::size_t(i)].is_string())
            throw GenomeFormatError("tables[" + std::to_string(i) +
                                    "] is not a string");
        net.genomes[std::size_t(i)] = detail::table_from_hex(
            j["tables"][std::size_t(i)].get<std::string>(), net.table_size());
    }
    return net;
}

inline void save_network(const std::string& path, const BooleanNetwork& net) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << network_to_json(net) << "\n";
}

inline BooleanNetwork load_network(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GenomeFormatError("cannot open genome file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return network_from_json(buf.str());
    } catch (const GenomeFormatError& e) {
        throw GenomeFormatError(path + ": " + e.what());
    }
}

}  // namespace bnevo
