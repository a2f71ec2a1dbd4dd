#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "frieze/diagonal_map.hpp"
#include "frieze/glue.hpp"
#include "frieze/polygon.hpp"

namespace frieze {

// Seeded, reproducible instance generation. Raw engine output is reduced
// with %, not std::uniform_int_distribution, so the same seed gives the same
// instances on every platform.
inline std::size_t pick(std::mt19937_64& rng, std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
}

// A random dissection built by greedy completion: shuffle the internal
// diagonals, then add while non-crossing until the target size is reached.
// target < 0 draws the size uniformly from 0..n-3.
inline Dissection random_dissection(const Polygon& p, std::mt19937_64& rng, int target = -1) {
    std::vector<Diagonal> internal;
    for (int a = 0; a < p.size(); ++a)
        for (int b = a + 2; b < p.size(); ++b) {
            Diagonal d{a, b};
            if (d.is_internal(p)) internal.push_back(d);
        }
    for (std::size_t i = internal.size(); i > 1; --i)
        std::swap(internal[i - 1], internal[pick(rng, i)]);
    if (target < 0) target = static_cast<int>(pick(rng, static_cast<std::size_t>(p.size() - 2)));
    std::vector<Diagonal> chosen;
    for (Diagonal d : internal) {
        if (static_cast<int>(chosen.size()) >= target) break;
        bool ok = true;
        for (Diagonal c : chosen)
            if (crosses(p, c, d)) { ok = false; break; }
        if (ok) chosen.push_back(d);
    }
    return Dissection::validate(p, std::move(chosen));
}

inline Dissection random_triangulation(const Polygon& p, std::mt19937_64& rng) {
    return random_dissection(p, rng, p.size() - 3);
}

template <Semifield K>
K random_value(std::mt19937_64& rng);

template <>
inline PositiveRational random_value<PositiveRational>(std::mt19937_64& rng) {
    static const char* pool[] = {"1", "2", "3", "1/2", "1/3", "3/2", "2/3", "5", "2/5"};
    return PositiveRational::parse(pool[pick(rng, sizeof pool / sizeof pool[0])]);
}

template <>
inline TropicalInt random_value<TropicalInt>(std::mt19937_64& rng) {
    return TropicalInt{static_cast<std::int64_t>(pick(rng, 7)) - 3};
}

// a value guaranteed to differ from v
template <Semifield K>
K perturbed(const K& v);

template <>
inline PositiveRational perturbed<PositiveRational>(const PositiveRational& v) {
    return v * PositiveRational::from_int(2);
}

template <>
inline TropicalInt perturbed<TropicalInt>(const TropicalInt& v) {
    return v * TropicalInt{1};
}

// Per-cell value assignments that agree on shared boundaries: one global
// draw for every edge and dissection member, fresh draws for diagonals
// interior to a cell.
template <Semifield K>
std::vector<PartialDiagonalMap<K>> random_pieces(const Polygon& p, const Dissection& d,
                                                 std::mt19937_64& rng) {
    std::map<Diagonal, K> boundary;
    for (int v = 0; v < p.size(); ++v) boundary.emplace(Diagonal{v, p.succ(v)}, random_value<K>(rng));
    for (Diagonal m : d.members()) boundary.emplace(m, random_value<K>(rng));

    std::vector<PartialDiagonalMap<K>> pieces;
    for (const Subpolygon& cell : cells(p, d)) {
        PartialDiagonalMap<K> piece{p};
        const std::vector<int>& vs = cell.vertices;
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                Diagonal diag{vs[i], vs[j]};
                auto it = boundary.find(diag);
                piece.set(diag, it != boundary.end() ? it->second : random_value<K>(rng));
            }
        pieces.push_back(std::move(piece));
    }
    return pieces;
}

template <Semifield K>
DiagonalMap<K> random_glued_map(const Polygon& p, const Dissection& d, std::mt19937_64& rng) {
    return glue_many(p, d, random_pieces<K>(p, d, rng));
}

// diagonals of p crossing at least one dissection member
inline std::vector<Diagonal> crossing_diagonals(const Polygon& p, const Dissection& d) {
    std::vector<Diagonal> out;
    for (int a = 0; a < p.size(); ++a)
        for (int b = a + 2; b < p.size(); ++b) {
            Diagonal diag{a, b};
            if (!diag.is_internal(p)) continue;
            for (Diagonal m : d.members())
                if (crosses(p, diag, m)) {
                    out.push_back(diag);
                    break;
                }
        }
    return out;
}

} // namespace frieze
