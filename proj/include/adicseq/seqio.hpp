#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "adicseq/bitseq.hpp"

namespace adicseq {

// Canonical ".bits" text format:
//   line 1: decimal N
//   line 2: exactly N characters from {'0','1'}, index 0 leftmost, trailing newline.
// The JSON form is {"n": N, "bits": "<same string>"}.
// Both parsers reject any length mismatch.

inline std::string to_bits_text(const BitSequence& s) {
    return std::to_string(s.period()) + "\n" + s.to_string() + "\n";
}

inline BitSequence parse_bits_text(const std::string& text) {
    std::istringstream in(text);
    std::string line1, line2, rest;
    if (!std::getline(in, line1)) throw std::invalid_argument("bits file: missing header line");
    std::size_t pos = 0;
    unsigned long long n = 0;
    try {
        n = std::stoull(line1, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bits file: header is not a decimal period");
    }
    if (pos != line1.size() || n == 0)
        throw std::invalid_argument("bits file: header is not a positive decimal period");
    if (!std::getline(in, line2)) throw std::invalid_argument("bits file: missing bit line");
    if (line2.size() != n) throw std::invalid_argument("bits file: bit count does not match header");
    if (std::getline(in, rest) && !rest.empty())
        throw std::invalid_argument("bits file: trailing content");
    return BitSequence::from_string(line2);
}

inline nlohmann::json to_bits_json(const BitSequence& s) {
    return nlohmann::json{{"n", s.period()}, {"bits", s.to_string()}};
}

inline BitSequence parse_bits_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);  // throws on malformed JSON
    if (!j.is_object() || !j.contains("n") || !j.contains("bits"))
        throw std::invalid_argument("bits json: expected object with \"n\" and \"bits\"");
    if (!j["n"].is_number_unsigned() && !j["n"].is_number_integer())
        throw std::invalid_argument("bits json: \"n\" must be an integer");
    const long long n = j["n"].get<long long>();
    const std::string bits = j["bits"].get<std::string>();
    if (n <= 0 || bits.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("bits json: bit count does not match \"n\"");
    return BitSequence::from_string(bits);
}

// Reads either form; a leading '{' selects JSON.
inline BitSequence load_sequence_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_bits_json(text);
    return parse_bits_text(text);
}

inline void save_sequence_file(const std::string& path, const BitSequence& s, bool as_json) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    if (as_json)
        out << to_bits_json(s).dump() << "\n";
    else
        out << to_bits_text(s);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace adicseq
