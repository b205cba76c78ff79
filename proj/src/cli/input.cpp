#include "lq/cli/input.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "lq/dvr/lattice.hpp"
#include "lq/error.hpp"
#include "lq/graph/tree.hpp"

namespace lq::cli {

using nlohmann::json;

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

namespace {

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann reports the byte count read so far, which points one past the culprit.
        std::size_t off = e.byte > 0 ? e.byte - 1 : 0;
        auto [line, col] = line_col(text, off);
        std::string msg = e.what();
        auto pos = msg.find("parse error");
        throw ParseError("malformed JSON: " + (pos == std::string::npos ? msg : msg.substr(pos)), line, col);
    }
}

// Schema problems are reported at the first occurrence of the key in the raw text.
[[noreturn]] void schema_error(const std::string& text, const std::string& key, const std::string& what) {
    std::size_t off = text.find("\"" + key + "\"");
    auto [line, col] = off == std::string::npos ? std::pair<std::size_t, std::size_t>{1, 1} : line_col(text, off);
    throw ParseError(what, line, col);
}

template <class T>
T get_as(const std::string& text, const json& doc, const std::string& key) {
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception&) {
        schema_error(text, key, "field \"" + key + "\" is missing or has the wrong type");
    }
}

std::uint32_t read_prime(const std::string& text, const json& doc) {
    auto p = get_as<std::int64_t>(text, doc, "p");
    if (p < 2 || p > 65521 || !is_prime(static_cast<std::uint64_t>(p))) schema_error(text, "p", "\"p\" must be a prime below 65536");
    return static_cast<std::uint32_t>(p);
}

}  // namespace

dvr::Scalar parse_laurent(const std::string& text, std::uint32_t p) {
    const Zp f{p};
    std::map<int, std::int64_t> terms;
    std::size_t i = 0;
    auto fail = [&](const std::string& what) -> void { throw ParseError("bad Laurent polynomial \"" + text + "\": " + what, 1, i + 1); };
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&](std::int64_t& out) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) return false;
        if (i - start > 15) fail("number too long");
        out = std::stoll(text.substr(start, i - start));
        return true;
    };
    skip();
    if (i == text.size()) fail("empty entry");
    bool first = true;
    while (true) {
        skip();
        std::int64_t sign = 1;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        std::int64_t coeff = 1;
        bool has_coeff = read_int(coeff);
        skip();
        int exponent = 0;
        bool has_t = false;
        if (i < text.size() && text[i] == '*') {
            if (!has_coeff) fail("'*' needs a coefficient before it");
            ++i;
            skip();
            if (i >= text.size() || text[i] != 't') fail("expected 't' after '*'");
        }
        if (i < text.size() && text[i] == 't') {
            has_t = true;
            exponent = 1;
            ++i;
            skip();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip();
                std::int64_t esign = 1;
                if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
                    esign = text[i] == '-' ? -1 : 1;
                    ++i;
                }
                std::int64_t e = 0;
                if (!read_int(e)) fail("expected an exponent after '^'");
                if (e > 1'000'000) fail("exponent out of range");
                exponent = static_cast<int>(esign * e);
            }
        }
        if (!has_coeff && !has_t) fail("expected a coefficient or 't'");
        terms[exponent] = f.reduce(terms[exponent] + f.reduce(sign * coeff));
        skip();
        if (i == text.size()) break;
    }
    return dvr::Scalar::laurent(p, terms);
}

dvr::LatticeConfiguration ConfigDocument::build(std::uint32_t p_override) const {
    const std::uint32_t q = p_override ? p_override : p;
    switch (kind) {
        case SourceKind::exponents:
            return dvr::config_from_exponents(q, exponents);
        case SourceKind::tree:
            return dvr::config_from_tree(q, Tree(tree_vertices, tree_edges), tree_root);
        case SourceKind::lattices: {
            std::vector<dvr::Lattice> ls;
            for (const auto& m : lattices) {
                dvr::KMatrix b(q, d, d);
                for (std::size_t r = 0; r < d; ++r)
                    for (std::size_t c = 0; c < d; ++c) b(r, c) = parse_laurent(m[r][c], q);
                ls.emplace_back(b);
            }
            return dvr::LatticeConfiguration(ls);
        }
    }
    throw InternalError("unknown configuration source");
}

ConfigDocument parse_config(const std::string& text) {
    json doc = parse_json(text);
    if (!doc.is_object()) throw ParseError("configuration document must be a JSON object", 1, 1);
    ConfigDocument out;
    out.raw = text;
    out.p = read_prime(text, doc);
    int sources = static_cast<int>(doc.contains("exponents")) + doc.contains("lattices") + doc.contains("tree");
    if (sources != 1) throw ParseError("exactly one of \"exponents\", \"lattices\", \"tree\" is required", 1, 1);
    if (doc.contains("tree")) {
        out.kind = SourceKind::tree;
        const json& t = doc["tree"];
        out.tree_vertices = get_as<std::size_t>(text, t, "vertices");
        out.tree_edges = get_as<std::vector<std::pair<int, int>>>(text, t, "edges");
        out.tree_root = t.contains("root") ? get_as<int>(text, t, "root") : 0;
        if (out.tree_vertices == 0) schema_error(text, "vertices", "a tree needs at least one vertex");
        if (out.tree_root < 0 || static_cast<std::size_t>(out.tree_root) >= out.tree_vertices) schema_error(text, "root", "root is not a vertex");
        out.d = out.tree_vertices;
        try {
            Tree(out.tree_vertices, out.tree_edges);
        } catch (const InvalidInput& e) {
            schema_error(text, "edges", e.what());
        }
        if (doc.contains("d") && get_as<std::size_t>(text, doc, "d") != out.d) schema_error(text, "d", "\"d\" must equal the number of tree vertices");
        return out;
    }
    out.d = get_as<std::size_t>(text, doc, "d");
    if (out.d == 0) schema_error(text, "d", "\"d\" must be positive");
    if (doc.contains("exponents")) {
        out.kind = SourceKind::exponents;
        out.exponents = get_as<dvr::ExponentMatrix>(text, doc, "exponents");
        if (out.exponents.empty()) schema_error(text, "exponents", "the lattice list is empty");
        for (const auto& row : out.exponents)
            if (row.size() != out.d) schema_error(text, "exponents", "every exponent row needs d entries");
        return out;
    }
    out.kind = SourceKind::lattices;
    const json& ls = doc["lattices"];
    if (!ls.is_array() || ls.empty()) schema_error(text, "lattices", "the lattice list is empty");
    for (const auto& m : ls) {
        if (!m.is_array() || m.size() != out.d) schema_error(text, "lattices", "every basis matrix must have d rows");
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : m) {
            if (!r.is_array() || r.size() != out.d) schema_error(text, "lattices", "every basis matrix must have d columns");
            std::vector<std::string> row;
            for (const auto& e : r) {
                if (e.is_string()) {
                    row.push_back(e.get<std::string>());
                } else if (e.is_number_integer()) {
                    row.push_back(std::to_string(e.get<std::int64_t>()));
                } else {
                    schema_error(text, "lattices", "matrix entries must be strings or integers");
                }
                // Validate now so the error points into the document.
                try {
                    parse_laurent(row.back(), out.p);
                } catch (const ParseError& pe) {
                    std::size_t off = text.find("\"" + row.back() + "\"");
                    if (off == std::string::npos) throw;
                    auto [line, col] = line_col(text, off + pe.column);
                    throw ParseError("bad Laurent polynomial \"" + row.back() + "\"", line, col);
                }
            }
            rows.push_back(std::move(row));
        }
        out.lattices.push_back(std::move(rows));
    }
    return out;
}

TropicalDocument parse_tropical(const std::string& text) {
    json doc = parse_json(text);
    if (!doc.is_object()) throw ParseError("tropical document must be a JSON object", 1, 1);
    TropicalDocument out;
    out.raw = text;
    out.graph = get_as<std::vector<std::vector<int>>>(text, doc, "graph");
    out.w0 = get_as<std::vector<int>>(text, doc, "w0");
    out.concentrated = get_as<std::vector<std::vector<int>>>(text, doc, "concentrated");
    if (out.w0.size() != out.graph.size()) schema_error(text, "w0", "\"w0\" needs one entry per vertex");
    if (out.concentrated.size() != out.graph.size()) schema_error(text, "concentrated", "need one concentrated multidegree per vertex");
    for (const auto& w : out.concentrated)
        if (w.size() != out.graph.size()) schema_error(text, "concentrated", "multidegree has the wrong length");
    return out;
}

HullDocument parse_hull(const std::string& text) {
    json doc = parse_json(text);
    if (!doc.is_object()) throw ParseError("hull document must be a JSON object", 1, 1);
    HullDocument out;
    out.raw = text;
    out.points = get_as<std::vector<std::vector<int>>>(text, doc, "points");
    if (out.points.empty()) schema_error(text, "points", "at least one point is required");
    for (const auto& q : out.points)
        if (q.size() != out.points.front().size() || q.empty()) schema_error(text, "points", "points must share a positive length");
    if (doc.contains("graph") != doc.contains("w0")) throw ParseError("\"graph\" and \"w0\" go together", 1, 1);
    if (doc.contains("graph")) {
        out.graph = get_as<std::vector<std::vector<int>>>(text, doc, "graph");
        out.w0 = get_as<std::vector<int>>(text, doc, "w0");
        if (out.w0->size() != out.graph->size() || out.points.front().size() != out.graph->size())
            schema_error(text, "w0", "graph, w0 and points must have matching sizes");
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace lq::cli
