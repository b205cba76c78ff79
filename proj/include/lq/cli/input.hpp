#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lq/dvr/configuration.hpp"
#include "lq/dvr/scalar.hpp"

namespace lq::cli {

// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

// term (('+'|'-') term)*, term := coeff ('*'? 't' ('^' int)?)? | 't' ('^' int)?
// Coefficients are integers reduced mod p. Throws ParseError with line 1 and a 1-based column.
dvr::Scalar parse_laurent(const std::string& text, std::uint32_t p);

enum class SourceKind { exponents, lattices, tree };

// A configuration document: {"p": prime, "d": dim, "exponents" | "lattices" | "tree": ...}.
// A lattice is a d x d array of Laurent strings (or integers) whose columns are the basis.
// A tree is {"vertices": n, "edges": [[u, v], ...], "root": r}.
struct ConfigDocument {
    std::string raw;
    std::uint32_t p = 0;
    std::size_t d = 0;
    SourceKind kind = SourceKind::exponents;
    dvr::ExponentMatrix exponents;
    std::vector<std::vector<std::vector<std::string>>> lattices;
    std::size_t tree_vertices = 0;
    std::vector<std::pair<int, int>> tree_edges;
    int tree_root = 0;

    // `p_override` replaces the document prime when nonzero.
    dvr::LatticeConfiguration build(std::uint32_t p_override = 0) const;
};

// Syntax errors carry the line and column of the offending character.
ConfigDocument parse_config(const std::string& text);

struct TropicalDocument {
    std::string raw;
    std::vector<std::vector<int>> graph;
    std::vector<int> w0;
    std::vector<std::vector<int>> concentrated;
};
TropicalDocument parse_tropical(const std::string& text);

// {"points": [[...], ...]} with optional "graph" and "w0": the points are then multidegrees.
struct HullDocument {
    std::string raw;
    std::vector<std::vector<int>> points;
    std::optional<std::vector<std::vector<int>>> graph;
    std::optional<std::vector<int>> w0;
};
HullDocument parse_hull(const std::string& text);

std::string read_file(const std::string& path);  // throws InvalidInput when unreadable

}  // namespace lq::cli
