#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frieze/diagonal_map.hpp"

namespace frieze {

// One fundamental domain of the frieze-pattern strip: rows[r-1][i] holds
// f(i, (i+r) mod n) for r = 1..n-1. Rows 1 and n-1 both list the edge
// values, and f(i,j) = f(j,i) gives the strip its glide symmetry.
template <Semifield K>
struct PatternGrid {
    int n = 0;
    std::vector<std::vector<K>> rows;

    const K& at(int i, int r) const { return rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(i)]; }
};

template <Semifield K>
PatternGrid<K> render_pattern(const DiagonalMap<K>& f) {
    const int n = f.polygon().size();
    PatternGrid<K> grid;
    grid.n = n;
    grid.rows.reserve(static_cast<std::size_t>(n - 1));
    for (int r = 1; r <= n - 1; ++r) {
        std::vector<K> row;
        row.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) row.push_back(f.value(i, (i + r) % n));
        grid.rows.push_back(std::move(row));
    }
    return grid;
}

struct UnimodularReport {
    bool edges_unit = false;          // precondition f(i,i+1) = 1_K
    bool holds = false;               // diamond identity on all internal pairs
    std::optional<Diagonal> bad_edge; // first non-unit edge
    std::optional<Diagonal> witness;  // first failing diamond, keyed by {i,j}

    bool ok() const { return edges_unit && holds; }
};

// The diamond rule in subtraction-free form:
//   f(i,j) f(i+1,j+1) = 1_K + f(i,j+1) f(i+1,j)
// for every internal diagonal {i,j}. Requires unit edges; a violated
// precondition is reported separately from a failing identity.
template <Semifield K>
UnimodularReport check_unimodular(const DiagonalMap<K>& f) {
    const Polygon& p = f.polygon();
    const int n = p.size();
    UnimodularReport rep;
    rep.edges_unit = true;
    for (int i = 0; i < n; ++i) {
        if (!(f.value(i, p.succ(i)) == K::one())) {
            rep.edges_unit = false;
            rep.bad_edge = Diagonal{i, p.succ(i)};
            return rep;
        }
    }
    rep.holds = true;
    for (int i = 0; i < n && rep.holds; ++i)
        for (int j = i + 1; j < n; ++j) {
            Diagonal d{i, j};
            if (d.is_edge(p)) continue;
            const K lhs = f.value(i, j) * f.value(p.succ(i), p.succ(j));
            const K rhs = K::one() + f.value(i, p.succ(j)) * f.value(p.succ(i), j);
            if (!(lhs == rhs)) {
                rep.holds = false;
                rep.witness = d;
                break;
            }
        }
    return rep;
}

// Fixed-width staggered text rendering, one fundamental domain per row
// (repeated `repeat_columns` times). Row r is indented by r half-cells.
template <Semifield K>
std::string emit_text(const PatternGrid<K>& grid, int repeat_columns = 1) {
    std::size_t max_len = 1;
    for (const auto& row : grid.rows)
        for (const K& v : row) max_len = std::max(max_len, v.str().size());
    std::size_t cell = max_len + 1;
    if (cell % 2 != 0) ++cell;
    std::size_t half = cell / 2;

    std::string out;
    for (std::size_t r = 0; r < grid.rows.size(); ++r) {
        std::string line((r + 1) * half, ' ');
        for (int rep = 0; rep < repeat_columns; ++rep)
            for (const K& v : grid.rows[r]) {
                std::string tok = v.str();
                tok.resize(cell, ' ');
                line += tok;
            }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

} // namespace frieze
