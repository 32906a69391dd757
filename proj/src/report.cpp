#include "cevalat/report.hpp"

#include <sstream>

namespace cevalat {

std::string input_hash(const std::string& bytes) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex;
    for (int shift = 60; shift >= 0; shift -= 4) out << ((h >> shift) & 0xf);
    return out.str();
}

namespace {

void render_text(const Json& j, std::ostream& out, int indent) {
    std::string pad(static_cast<size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, val] : j.items()) {
            if (val.is_object() || val.is_array()) {
                out << pad << key << ":\n";
                render_text(val, out, indent + 1);
            } else {
                out << pad << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump())
                    << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& val : j) {
            if (val.is_object() || val.is_array()) {
                out << pad << "-\n";
                render_text(val, out, indent + 1);
            } else {
                out << pad << "- "
                    << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
            }
        }
    } else {
        out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

std::string render_report(const Json& body, bool as_json) {
    if (as_json) return body.dump(2) + "\n";
    std::ostringstream out;
    render_text(body, out, 0);
    return out.str();
}

}  // namespace cevalat
