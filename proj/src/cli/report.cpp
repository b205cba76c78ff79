#include "lq/cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace lq::cli {

namespace {

bool is_scalar_array(const Report& r) {
    return r.is_array() && std::all_of(r.begin(), r.end(), [](const Report& e) { return e.is_primitive(); });
}

bool is_table(const Report& r) {
    return r.is_array() && !r.empty() && std::all_of(r.begin(), r.end(), [](const Report& e) { return is_scalar_array(e); });
}

std::string inline_value(const Report& r) {
    if (r.is_string()) return r.get<std::string>();
    if (is_scalar_array(r)) {
        std::string s = "(";
        for (std::size_t i = 0; i < r.size(); ++i) s += (i ? ", " : "") + inline_value(r[i]);
        return s + ")";
    }
    return r.dump();
}

void render(const Report& r, std::ostringstream& os, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (r.is_object()) {
        for (const auto& [k, v] : r.items()) {
            if (v.is_primitive() || is_scalar_array(v)) {
                os << pad << k << ": " << inline_value(v) << "\n";
            } else if (v.is_array() && v.empty()) {
                os << pad << k << ": (none)\n";
            } else {
                os << pad << k << ":\n";
                render(v, os, indent + 2);
            }
        }
    } else if (is_table(r)) {
        std::size_t width = 1;
        for (const auto& row : r)
            for (const auto& e : row) width = std::max(width, inline_value(e).size());
        for (const auto& row : r) {
            os << pad;
            for (const auto& e : row) {
                std::string s = inline_value(e);
                os << std::string(width + 1 - s.size(), ' ') << s;
            }
            os << "\n";
        }
    } else if (r.is_array()) {
        for (const auto& e : r) {
            if (e.is_primitive() || is_scalar_array(e)) {
                os << pad << "- " << inline_value(e) << "\n";
            } else {
                os << pad << "-\n";
                render(e, os, indent + 2);
            }
        }
    } else {
        os << pad << inline_value(r) << "\n";
    }
}

}  // namespace

std::string render_pretty(const Report& r) {
    std::ostringstream os;
    render(r, os, 0);
    return os.str();
}

}  // namespace lq::cli
