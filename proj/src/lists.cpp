#include "surjcount/lists.hpp"

#include "json.hpp"

namespace surjcount {

ListAssignment parse_lists_json(const std::string& text, int gN, int hN) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid lists JSON: ") + e.what());
    }
    ListAssignment lists = ListAssignment::full(gN, hN);
    if (!j.is_object() || !j.contains("lists") || !j["lists"].is_object())
        throw ParseError("lists JSON requires an object field \"lists\"");
    for (const auto& [key, value] : j["lists"].items()) {
        int v;
        try {
            v = std::stoi(key);
        } catch (...) {
            throw ParseError("lists JSON: non-integer vertex key '" + key + "'");
        }
        if (v < 0 || v >= gN) throw ParseError("lists JSON: vertex " + key + " out of range");
        if (!value.is_array()) throw ParseError("lists JSON: list for vertex " + key + " must be an array");
        std::uint64_t mask = 0;
        for (const auto& t : value) {
            if (!t.is_number_integer()) throw ParseError("lists JSON: non-integer target");
            int w = t.get<int>();
            if (w < 0 || w >= hN)
                throw ParseError("lists JSON: target " + std::to_string(w) + " out of range");
            mask |= std::uint64_t(1) << w;
        }
        lists.masks[v] = mask;
    }
    return lists;
}

}  // namespace surjcount
