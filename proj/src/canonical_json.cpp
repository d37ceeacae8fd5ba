#include "steklov/canonical_json.hpp"

#include <cmath>
#include <cstdio>

namespace steklov {

namespace {

std::string format_double(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s(buf);
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
}

void emit(const nlohmann::json& j, std::string& out, int depth) {
    const std::string pad(2 * (depth + 1), ' ');
    const std::string close_pad(2 * depth, ' ');
    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            // nlohmann::json stores objects in a std::map, so iteration is sorted.
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                out += nlohmann::json(it.key()).dump();
                out += ": ";
                emit(it.value(), out, depth + 1);
            }
            out += "\n" + close_pad + "}";
            return;
        }
        case nlohmann::json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ",\n";
                out += pad;
                emit(j[i], out, depth + 1);
            }
            out += "\n" + close_pad + "]";
            return;
        }
        case nlohmann::json::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

}  // namespace

std::string canonical_json(const nlohmann::json& doc) {
    std::string out;
    emit(doc, out, 0);
    out += "\n";
    return out;
}

}  // namespace steklov
