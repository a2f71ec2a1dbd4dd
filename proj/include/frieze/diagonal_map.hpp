#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "frieze/polygon.hpp"
#include "frieze/semifield.hpp"

namespace frieze {

// A total assignment diag(P) -> K, edges included. Symmetric by
// construction: value(a,b) == value(b,a). Immutable once built.
template <Semifield K>
class DiagonalMap {
public:
    DiagonalMap(Polygon p, const std::vector<std::pair<Diagonal, K>>& entries)
        : polygon_(p), values_(count(p.size()), std::nullopt) {
        for (const auto& [d, v] : entries) {
            require_diagonal_of(p, d);
            auto& slot = values_[index(d)];
            if (slot) throw ValidationError("duplicate value for diagonal " + d.str());
            slot = v;
        }
        for (int a = 0; a < p.size(); ++a)
            for (int b = a + 1; b < p.size(); ++b)
                if (!values_[index(Diagonal{a, b})])
                    throw ValidationError("missing value for diagonal " + Diagonal{a, b}.str());
    }

    static DiagonalMap constant(const Polygon& p, const K& v) {
        std::vector<std::pair<Diagonal, K>> entries;
        for (int a = 0; a < p.size(); ++a)
            for (int b = a + 1; b < p.size(); ++b) entries.emplace_back(Diagonal{a, b}, v);
        return DiagonalMap{p, entries};
    }

    const Polygon& polygon() const { return polygon_; }

    const K& value(Diagonal d) const {
        if (d.a < 0 || d.b >= polygon_.size())
            throw ValidationError("diagonal " + d.str() + " out of range for n=" +
                                  std::to_string(polygon_.size()));
        return *values_[index(d)];
    }
    const K& value(int a, int b) const { return value(Diagonal{a, b}); }

    // copy with a single rebound value
    DiagonalMap with_value(Diagonal d, K v) const {
        require_diagonal_of(polygon_, d);
        DiagonalMap out = *this;
        out.values_[index(d)] = std::move(v);
        return out;
    }

    friend bool operator==(const DiagonalMap& a, const DiagonalMap& b) {
        return a.polygon_ == b.polygon_ && a.values_ == b.values_;
    }

private:
    Polygon polygon_;
    std::vector<std::optional<K>> values_;

    static std::size_t count(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

    std::size_t index(Diagonal d) const {
        int n = polygon_.size();
        return static_cast<std::size_t>(d.a) * (2 * n - d.a - 1) / 2 +
               static_cast<std::size_t>(d.b - d.a - 1);
    }
};

// the map with constant value 1_K; a weak frieze for the empty dissection
template <Semifield K>
DiagonalMap<K> trivial_map(const Polygon& p) {
    return DiagonalMap<K>::constant(p, K::one());
}

// Values on a subset of diagonals, e.g. one cell's worth of gluing input.
// Each diagonal may be set exactly once.
template <Semifield K>
class PartialDiagonalMap {
public:
    explicit PartialDiagonalMap(Polygon p) : polygon_(p) {}

    const Polygon& polygon() const { return polygon_; }

    void set(Diagonal d, K v) {
        require_diagonal_of(polygon_, d);
        auto [it, inserted] = values_.emplace(d, std::move(v));
        if (!inserted) throw ValidationError("diagonal " + d.str() + " assigned twice");
    }

    bool has(Diagonal d) const { return values_.count(d) > 0; }
    const K& value(Diagonal d) const { return values_.at(d); }
    const std::map<Diagonal, K>& entries() const { return values_; }

    // sorted list of vertices touched by any assigned diagonal
    std::vector<int> support() const {
        std::set<int> s;
        for (const auto& [d, v] : values_) {
            s.insert(d.a);
            s.insert(d.b);
        }
        return {s.begin(), s.end()};
    }

    DiagonalMap<K> to_total() const {
        return DiagonalMap<K>{polygon_, {values_.begin(), values_.end()}};
    }

private:
    Polygon polygon_;
    std::map<Diagonal, K> values_;
};

// The Ptolemy relation for crossing diagonals {a,b} and {c,d}:
//   f(a,b) f(c,d) = f(a,c) f(b,d) + f(a,d) f(b,c)
// Subtraction-free, so it makes sense in any semifield.
template <Semifield K>
bool ptolemy_holds(const DiagonalMap<K>& f, Diagonal d1, Diagonal d2) {
    if (!crosses(f.polygon(), d1, d2))
        throw std::logic_error("ptolemy_holds: " + d1.str() + " and " + d2.str() +
                               " do not cross");
    const K lhs = f.value(d1) * f.value(d2);
    const K rhs = f.value(d1.a, d2.a) * f.value(d1.b, d2.b) +
                  f.value(d1.a, d2.b) * f.value(d1.b, d2.a);
    return lhs == rhs;
}

// All diagonals of p (edges included) in lexicographic order.
inline std::vector<Diagonal> all_diagonals(const Polygon& p) {
    std::vector<Diagonal> out;
    out.reserve(static_cast<std::size_t>(p.size()) * (p.size() - 1) / 2);
    for (int a = 0; a < p.size(); ++a)
        for (int b = a + 1; b < p.size(); ++b) out.emplace_back(a, b);
    return out;
}

// First crossing pair violating the Ptolemy relation, if any.
template <Semifield K>
std::optional<std::pair<Diagonal, Diagonal>> frieze_witness(const DiagonalMap<K>& f) {
    const Polygon& p = f.polygon();
    std::vector<Diagonal> ds = all_diagonals(p);
    for (std::size_t i = 0; i < ds.size(); ++i)
        for (std::size_t j = i + 1; j < ds.size(); ++j) {
            if (!crosses(p, ds[i], ds[j])) continue;
            if (!ptolemy_holds(f, ds[i], ds[j])) return std::pair{ds[i], ds[j]};
        }
    return std::nullopt;
}

// First pair (diagonal, dissection member) violating the Ptolemy relation.
template <Semifield K>
std::optional<std::pair<Diagonal, Diagonal>> weak_frieze_witness(const DiagonalMap<K>& f,
                                                                 const Dissection& ds) {
    const Polygon& p = f.polygon();
    for (int a = 0; a < p.size(); ++a)
        for (int b = a + 1; b < p.size(); ++b) {
            Diagonal d1{a, b};
            for (Diagonal d2 : ds.members()) {
                if (!crosses(p, d1, d2)) continue;
                if (!ptolemy_holds(f, d1, d2)) return std::pair{d1, d2};
            }
        }
    return std::nullopt;
}

// f is a frieze if the Ptolemy relation holds at every crossing pair.
template <Semifield K>
bool is_frieze(const DiagonalMap<K>& f) {
    return !frieze_witness(f).has_value();
}

// f is a weak frieze w.r.t. ds if the Ptolemy relation holds whenever the
// second diagonal of the crossing pair lies in ds.
template <Semifield K>
bool is_weak_frieze(const DiagonalMap<K>& f, const Dissection& ds) {
    return !weak_frieze_witness(f, ds).has_value();
}

} // namespace frieze
