#include "collatz/system_config.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace collatz {

namespace {

AffineMap parse_map(const nlohmann::json& j, const std::string& key) {
    if (!j.contains(key)) {
        throw std::runtime_error("system config: missing \"" + key + "\"");
    }
    const nlohmann::json& m = j.at(key);
    for (const char* field : {"slope", "intercept", "label"}) {
        if (!m.contains(field) || !m.at(field).is_string()) {
            throw std::runtime_error("system config: \"" + key + "." + field +
                                     "\" must be a string");
        }
    }
    const std::string label = m.at("label").get<std::string>();
    if (label.size() != 1 || !std::isalpha(static_cast<unsigned char>(label[0]))) {
        throw std::runtime_error("system config: \"" + key + ".label\" must be a single letter");
    }
    Rational slope, intercept;
    try {
        slope = Rational::parse(m.at("slope").get<std::string>());
        intercept = Rational::parse(m.at("intercept").get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error("system config: \"" + key + "\": " + e.what());
    }
    if (slope.is_zero()) {
        throw std::runtime_error("system config: \"" + key + ".slope\" must be nonzero");
    }
    return AffineMap(slope, intercept, label[0]);
}

}  // namespace

MapPair load_system_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("system config: cannot open " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("system config: " + path + ": " + e.what());
    }
    AffineMap first = parse_map(j, "first_map");
    AffineMap second = parse_map(j, "second_map");
    if (first.label() == second.label()) {
        throw std::runtime_error("system config: labels must be distinct");
    }
    return MapPair(first, second);
}

}  // namespace collatz
