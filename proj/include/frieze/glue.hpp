#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frieze/diagonal_map.hpp"
#include "frieze/polygon.hpp"
#include "frieze/tpath.hpp"

namespace frieze {

// Gluing inputs that disagree on a shared diagonal. The CLI maps this to
// exit code 3.
class GlueMismatchError : public std::runtime_error {
public:
    GlueMismatchError(Diagonal d, const std::string& lhs, const std::string& rhs)
        : std::runtime_error("pieces disagree on shared diagonal " + d.str() + ": " + lhs +
                             " vs " + rhs),
          diagonal(d) {}

    Diagonal diagonal;
};

namespace detail {

// A glued-together group of cells: a sub-polygon with a total value map on
// all vertex pairs inside it.
template <Semifield K>
struct GlueRegion {
    std::vector<int> vertices; // sorted ambient labels
    std::map<Diagonal, K> values;

    bool contains(int v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }
    bool contains(Diagonal d) const { return contains(d.a) && contains(d.b); }
    const K& value(int a, int b) const { return values.at(Diagonal{a, b}); }
};

// Joins two regions meeting along `shared` = {z,e}. Values inside either
// region are kept; a pair (a,b) straddling the join gets
//   x^{-1} [ f1(z,a) f2(e,b) + f2(z,b) f1(e,a) ],   x = value on `shared`,
// the unique choice making the Ptolemy relation at `shared` hold.
template <Semifield K>
GlueRegion<K> merge_regions(const GlueRegion<K>& r1, const GlueRegion<K>& r2, Diagonal shared) {
    const int z = shared.a, e = shared.b;
    {
        std::vector<int> common;
        std::set_intersection(r1.vertices.begin(), r1.vertices.end(), r2.vertices.begin(),
                              r2.vertices.end(), std::back_inserter(common));
        if (common != std::vector<int>{z, e})
            throw std::logic_error("regions glued along " + shared.str() +
                                   " must meet exactly at its endpoints");
    }
    const K& x1 = r1.value(z, e);
    const K& x2 = r2.value(z, e);
    if (!(x1 == x2)) throw GlueMismatchError(shared, x1.str(), x2.str());
    const K x_inv = x1.inverse();

    GlueRegion<K> out;
    std::set_union(r1.vertices.begin(), r1.vertices.end(), r2.vertices.begin(),
                   r2.vertices.end(), std::back_inserter(out.vertices));
    out.values = r1.values;
    for (const auto& [d, v] : r2.values) out.values.emplace(d, v); // shared pair already present
    for (int a : r1.vertices) {
        if (a == z || a == e) continue;
        for (int b : r2.vertices) {
            if (b == z || b == e) continue;
            K cross = x_inv * (r1.value(z, a) * r2.value(e, b) + r2.value(z, b) * r1.value(e, a));
            out.values.emplace(Diagonal{a, b}, std::move(cross));
        }
    }
    return out;
}

template <Semifield K>
GlueRegion<K> region_from_piece(const PartialDiagonalMap<K>& piece) {
    GlueRegion<K> r;
    r.vertices = piece.support();
    r.values = piece.entries();
    return r;
}

// exact coverage: the piece must assign precisely the pairs within `verts`
template <Semifield K>
void require_exact_coverage(const PartialDiagonalMap<K>& piece, const std::vector<int>& verts,
                            const std::string& what) {
    std::size_t expected = verts.size() * (verts.size() - 1) / 2;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (!piece.has(Diagonal{verts[i], verts[j]}))
                throw ValidationError(what + " is missing a value for " +
                                      Diagonal{verts[i], verts[j]}.str());
    if (piece.entries().size() != expected)
        throw ValidationError(what + " assigns diagonals outside its subpolygon");
}

} // namespace detail

// Glues values on the two sides of `shared` into the unique map restricting
// to both sides and satisfying the Ptolemy relation at `shared`. Sides are
// matched to the inputs by their vertex support.
template <Semifield K>
DiagonalMap<K> glue_pair(const Polygon& p, Diagonal shared, const PartialDiagonalMap<K>& f1,
                         const PartialDiagonalMap<K>& f2) {
    require_diagonal_of(p, shared);
    if (shared.is_edge(p))
        throw ValidationError("cannot glue along the edge " + shared.str());
    std::vector<int> side1, side2; // both include the shared endpoints
    for (int v = 0; v < p.size(); ++v) {
        if (!p.in_open_arc(shared.b, shared.a, v)) side1.push_back(v);
        if (!p.in_open_arc(shared.a, shared.b, v)) side2.push_back(v);
    }
    const PartialDiagonalMap<K>* lo = &f1;
    const PartialDiagonalMap<K>* hi = &f2;
    if (f1.support() != side1) std::swap(lo, hi);
    if (lo->support() != side1 || hi->support() != side2)
        throw ValidationError("glue inputs do not match the two sides of " + shared.str());
    detail::require_exact_coverage(*lo, side1, "side " + shared.str());
    detail::require_exact_coverage(*hi, side2, "side " + shared.str());
    detail::GlueRegion<K> merged = detail::merge_regions(detail::region_from_piece(*lo),
                                                         detail::region_from_piece(*hi), shared);
    return DiagonalMap<K>{p, {merged.values.begin(), merged.values.end()}};
}

// Glues per-cell pieces over the dissection diagonals in the given order.
// The result does not depend on the order; the default is the sorted member
// list. Pieces are matched to cells by vertex support and must cover them
// exactly.
template <Semifield K>
DiagonalMap<K> glue_many_ordered(const Polygon& p, const Dissection& d,
                                 const std::vector<PartialDiagonalMap<K>>& pieces,
                                 std::vector<Diagonal> fold_order) {
    std::vector<Subpolygon> cs = cells(p, d);
    if (pieces.size() != cs.size())
        throw ValidationError("expected " + std::to_string(cs.size()) + " pieces, got " +
                              std::to_string(pieces.size()));
    {
        std::vector<Diagonal> want = d.members();
        std::vector<Diagonal> got = fold_order;
        std::sort(got.begin(), got.end());
        if (got != want) throw ValidationError("fold order is not a permutation of the dissection");
    }

    std::vector<detail::GlueRegion<K>> regions;
    std::vector<bool> cell_taken(cs.size(), false);
    for (const PartialDiagonalMap<K>& piece : pieces) {
        std::vector<int> sup = piece.support();
        auto it = std::find_if(cs.begin(), cs.end(), [&](const Subpolygon& c) {
            std::vector<int> sorted = c.vertices;
            std::sort(sorted.begin(), sorted.end());
            return sorted == sup;
        });
        if (it == cs.end()) throw ValidationError("piece does not match any cell of the dissection");
        std::size_t ci = static_cast<std::size_t>(it - cs.begin());
        if (cell_taken[ci]) throw ValidationError("two pieces cover the same cell");
        cell_taken[ci] = true;
        detail::require_exact_coverage(piece, sup, "cell piece");
        regions.push_back(detail::region_from_piece(piece));
    }

    for (Diagonal cut : fold_order) {
        std::vector<std::size_t> touching;
        for (std::size_t i = 0; i < regions.size(); ++i)
            if (regions[i].contains(cut)) touching.push_back(i);
        if (touching.size() != 2)
            throw std::logic_error("dissection diagonal " + cut.str() +
                                   " does not separate exactly two regions");
        detail::GlueRegion<K> merged =
            detail::merge_regions(regions[touching[0]], regions[touching[1]], cut);
        regions.erase(regions.begin() + static_cast<std::ptrdiff_t>(touching[1]));
        regions[touching[0]] = std::move(merged);
    }

    if (regions.size() != 1) throw std::logic_error("gluing did not produce a single region");
    return DiagonalMap<K>{p, {regions.front().values.begin(), regions.front().values.end()}};
}

template <Semifield K>
DiagonalMap<K> glue_many(const Polygon& p, const Dissection& d,
                         const std::vector<PartialDiagonalMap<K>>& pieces) {
    return glue_many_ordered(p, d, pieces, d.members());
}

// The frieze obtained from a triangulation by gluing all-1_K triangle
// pieces. Over the rationals every entry is a positive integer equal to the
// number of T-paths between the two vertices.
template <Semifield K = PositiveRational>
DiagonalMap<K> cc_frieze(const Polygon& p, const Dissection& triangulation) {
    if (static_cast<int>(triangulation.size()) != p.size() - 3)
        throw ValidationError("a triangulation of an n-gon needs n-3 diagonals, got " +
                              std::to_string(triangulation.size()));
    std::vector<PartialDiagonalMap<K>> pieces;
    for (const Subpolygon& cell : cells(p, triangulation)) {
        PartialDiagonalMap<K> piece{p};
        for (Diagonal d : cell.diagonals()) piece.set(d, K::one());
        pieces.push_back(std::move(piece));
    }
    return glue_many(p, triangulation, pieces);
}

// First ordered vertex pair where f(a,b) differs from the T-path sum.
template <Semifield K>
std::optional<std::pair<int, int>> tpath_formula_witness(const DiagonalMap<K>& f,
                                                         const Dissection& d) {
    const Polygon& p = f.polygon();
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b) {
            if (a == b) continue;
            if (!(f.value(a, b) == tpath_sum(f, d, a, b))) return std::pair{a, b};
        }
    return std::nullopt;
}

// f(a,b) equals the sum of T-path weights for every vertex pair a != b.
template <Semifield K>
bool satisfies_tpath_formula(const DiagonalMap<K>& f, const Dissection& d) {
    return !tpath_formula_witness(f, d).has_value();
}

struct EquivalenceReport {
    bool weak = false;
    bool tpath = false;
    bool agree = false;
};

// Evaluates the weak-frieze property and the T-path formula independently.
// The two verdicts agree on every input.
template <Semifield K>
EquivalenceReport verify_equivalence(const DiagonalMap<K>& f, const Dissection& d) {
    EquivalenceReport r;
    r.weak = is_weak_frieze(f, d);
    r.tpath = satisfies_tpath_formula(f, d);
    r.agree = r.weak == r.tpath;
    return r;
}

} // namespace frieze
