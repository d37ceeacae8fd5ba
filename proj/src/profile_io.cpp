#include "steklov/profile_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include "steklov/error.hpp"

namespace steklov {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& field, std::size_t line_no) {
    const std::string t = trim(field);
    if (t.empty()) {
        throw InvalidInputError("profile line " + std::to_string(line_no) + ": empty field");
    }
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size() || errno == ERANGE) {
        throw InvalidInputError("profile line " + std::to_string(line_no) + ": cannot parse '" +
                                t + "' as a number");
    }
    return v;
}

}  // namespace

RevolutionProfile read_profile_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::vector<double> r, h;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (!header_seen) {
            std::string compact;
            for (char c : t) {
                if (c != ' ' && c != '\t') compact += c;
            }
            if (compact != "r,h") {
                throw InvalidInputError("profile line " + std::to_string(line_no) +
                                        ": expected header 'r,h'");
            }
            header_seen = true;
            continue;
        }
        const auto comma = t.find(',');
        if (comma == std::string::npos || t.find(',', comma + 1) != std::string::npos) {
            throw InvalidInputError("profile line " + std::to_string(line_no) +
                                    ": expected exactly two comma-separated fields");
        }
        r.push_back(parse_number(t.substr(0, comma), line_no));
        h.push_back(parse_number(t.substr(comma + 1), line_no));
    }
    if (!header_seen) throw InvalidInputError("profile file is empty (missing 'r,h' header)");
    if (r.size() < 2) {
        throw InvalidInputError("profile needs at least 2 data rows, found " +
                                std::to_string(r.size()));
    }
    const double r1 = h.front();
    const double r2 = h.back();
    return RevolutionProfile(std::move(r), std::move(h), r1, r2);
}

RevolutionProfile read_profile_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open profile file '" + path + "'");
    return read_profile_csv(in);
}

void write_profile_csv(std::ostream& out, const RevolutionProfile& p) {
    out << "r,h\n";
    char buf[64];
    const auto& r = p.r_grid();
    const auto& h = p.h_values();
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", r[i], h[i]);
        out << buf;
    }
}

}  // namespace steklov
