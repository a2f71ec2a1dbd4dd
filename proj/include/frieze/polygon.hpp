#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace frieze {

// Input that violates a documented schema or definition. The CLI maps this
// to exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A convex n-gon: vertices 0..n-1 in anticlockwise cyclic order.
class Polygon {
public:
    explicit Polygon(int n) : n_(n) {
        if (n < 3) throw ValidationError("polygon needs at least 3 vertices, got " + std::to_string(n));
    }

    int size() const { return n_; }
    int succ(int v) const { return (v + 1) % n_; }
    int pred(int v) const { return (v + n_ - 1) % n_; }
    bool valid_vertex(int v) const { return 0 <= v && v < n_; }

    // number of steps walking anticlockwise from `from` to `to`
    int arc_length(int from, int to) const { return ((to - from) % n_ + n_) % n_; }

    // x strictly inside the anticlockwise arc from `from` to `to`
    bool in_open_arc(int from, int to, int x) const {
        int ax = arc_length(from, x);
        return ax > 0 && ax < arc_length(from, to);
    }

    friend bool operator==(const Polygon&, const Polygon&) = default;

private:
    int n_;
};

// Unordered vertex pair, stored with a < b.
struct Diagonal {
    int a;
    int b;

    Diagonal(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {
        if (x == y) throw ValidationError("diagonal endpoints must differ, got {" +
                                          std::to_string(x) + "," + std::to_string(y) + "}");
    }

    bool has_endpoint(int v) const { return v == a || v == b; }
    int other(int v) const { return v == a ? b : a; }

    bool is_edge(const Polygon& p) const { return p.succ(a) == b || p.succ(b) == a; }
    bool is_internal(const Polygon& p) const { return !is_edge(p); }

    std::string str() const { return "{" + std::to_string(a) + "," + std::to_string(b) + "}"; }

    friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

inline void require_diagonal_of(const Polygon& p, Diagonal d) {
    if (!p.valid_vertex(d.a) || !p.valid_vertex(d.b))
        throw ValidationError("diagonal " + d.str() + " out of range for n=" +
                              std::to_string(p.size()));
}

// True iff the four endpoints are distinct and interleave in the cyclic
// order. Diagonals sharing an endpoint never cross.
inline bool crosses(const Polygon& p, Diagonal d1, Diagonal d2) {
    require_diagonal_of(p, d1);
    require_diagonal_of(p, d2);
    if (d1.has_endpoint(d2.a) || d1.has_endpoint(d2.b)) return false;
    return p.in_open_arc(d1.a, d1.b, d2.a) != p.in_open_arc(d1.a, d1.b, d2.b);
}

// A validated set of pairwise non-crossing internal diagonals.
class Dissection {
public:
    Dissection() = default;

    static Dissection validate(const Polygon& p, std::vector<Diagonal> ds) {
        for (const Diagonal& d : ds) {
            require_diagonal_of(p, d);
            if (d.is_edge(p))
                throw ValidationError("dissection member " + d.str() + " is an edge, not internal");
        }
        std::sort(ds.begin(), ds.end());
        for (std::size_t i = 0; i + 1 < ds.size(); ++i)
            if (ds[i] == ds[i + 1])
                throw ValidationError("duplicate dissection member " + ds[i].str());
        for (std::size_t i = 0; i < ds.size(); ++i)
            for (std::size_t j = i + 1; j < ds.size(); ++j)
                if (crosses(p, ds[i], ds[j]))
                    throw ValidationError("dissection members cross: " + ds[i].str() + " and " +
                                          ds[j].str());
        Dissection out;
        out.ds_ = std::move(ds);
        return out;
    }

    const std::vector<Diagonal>& members() const { return ds_; }
    std::size_t size() const { return ds_.size(); }
    bool empty() const { return ds_.empty(); }

    bool contains(Diagonal d) const {
        return std::binary_search(ds_.begin(), ds_.end(), d);
    }

    friend bool operator==(const Dissection&, const Dissection&) = default;

private:
    std::vector<Diagonal> ds_;
};

// A subset of three or more vertices in the induced cyclic order, rotated so
// the smallest label comes first.
struct Subpolygon {
    std::vector<int> vertices;

    bool contains(int v) const {
        return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
    }

    // all unordered vertex pairs within the subpolygon
    std::vector<Diagonal> diagonals() const {
        std::vector<Diagonal> out;
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (std::size_t j = i + 1; j < vertices.size(); ++j)
                out.emplace_back(vertices[i], vertices[j]);
        std::sort(out.begin(), out.end());
        return out;
    }

    friend auto operator<=>(const Subpolygon&, const Subpolygon&) = default;
};

namespace detail {

inline Subpolygon make_subpolygon(std::vector<int> cycle) {
    auto smallest = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), smallest, cycle.end());
    return Subpolygon{std::move(cycle)};
}

// Splits `cycle` (vertices in cyclic order) along the dissection diagonals in
// `ds`, appending the resulting cells to `out`.
inline void split_cells(std::vector<int> cycle, std::vector<Diagonal> ds,
                        std::vector<Subpolygon>& out) {
    if (ds.empty()) {
        out.push_back(make_subpolygon(std::move(cycle)));
        return;
    }
    Diagonal cut = ds.back();
    ds.pop_back();
    auto ia = std::find(cycle.begin(), cycle.end(), cut.a);
    auto ib = std::find(cycle.begin(), cycle.end(), cut.b);
    std::size_t pa = static_cast<std::size_t>(ia - cycle.begin());
    std::size_t pb = static_cast<std::size_t>(ib - cycle.begin());
    if (pa > pb) std::swap(pa, pb);
    std::vector<int> side1(cycle.begin() + pa, cycle.begin() + pb + 1);
    std::vector<int> side2(cycle.begin() + pb, cycle.end());
    side2.insert(side2.end(), cycle.begin(), cycle.begin() + pa + 1);
    std::vector<Diagonal> ds1, ds2;
    for (Diagonal d : ds) {
        // non-crossing members lie fully on one side of the cut
        bool a1 = std::find(side1.begin(), side1.end(), d.a) != side1.end();
        bool b1 = std::find(side1.begin(), side1.end(), d.b) != side1.end();
        if (a1 && b1)
            ds1.push_back(d);
        else
            ds2.push_back(d);
    }
    split_cells(std::move(side1), std::move(ds1), out);
    split_cells(std::move(side2), std::move(ds2), out);
}

} // namespace detail

// The m+1 cells a dissection of size m cuts the polygon into, sorted by
// vertex list.
inline std::vector<Subpolygon> cells(const Polygon& p, const Dissection& d) {
    std::vector<int> cycle(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) cycle[static_cast<std::size_t>(i)] = i;
    std::vector<Subpolygon> out;
    detail::split_cells(std::move(cycle), d.members(), out);
    std::sort(out.begin(), out.end());
    return out;
}

// Order of the points where e1 and e2 cross the diagonal {from,to},
// walking along it from `from` to `to`. `less` means e1 crosses closer to
// `from`. Callers must pass mutually non-crossing diagonals that both cross
// the base; equality only occurs for e1 == e2.
//
// Combinatorial rule: a crossing diagonal has one endpoint in the open arc
// (from -> to) and one in the open arc (to -> from). Earlier near-arc
// endpoint means closer to `from`; on a shared near-arc endpoint, the later
// far-arc endpoint is closer.
inline std::strong_ordering crossing_order(const Polygon& p, int from, int to, Diagonal e1,
                                           Diagonal e2) {
    Diagonal base{from, to};
    auto key = [&](Diagonal e) -> std::pair<int, int> {
        if (!crosses(p, base, e))
            throw std::logic_error("crossing_order: diagonal " + e.str() +
                                   " does not cross the base " + base.str());
        int near = p.in_open_arc(from, to, e.a) ? e.a : e.b;
        int far = e.other(near);
        return {p.arc_length(from, near), -p.arc_length(from, far)};
    };
    return key(e1) <=> key(e2);
}

// All dissections of p with at most max_size diagonals (the empty dissection
// included), in lexicographic order of their sorted member lists.
inline std::vector<Dissection> enumerate_dissections(const Polygon& p, int max_size) {
    std::vector<Diagonal> internal;
    for (int a = 0; a < p.size(); ++a)
        for (int b = a + 1; b < p.size(); ++b) {
            Diagonal d{a, b};
            if (d.is_internal(p)) internal.push_back(d);
        }
    std::sort(internal.begin(), internal.end());
    std::vector<Dissection> out;
    std::vector<Diagonal> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        out.push_back(Dissection::validate(p, chosen));
        if (static_cast<int>(chosen.size()) >= max_size) return;
        for (std::size_t i = start; i < internal.size(); ++i) {
            bool ok = true;
            for (Diagonal c : chosen)
                if (crosses(p, c, internal[i])) { ok = false; break; }
            if (!ok) continue;
            chosen.push_back(internal[i]);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    return out;
}

// All triangulations (dissections with exactly n-3 diagonals).
inline std::vector<Dissection> enumerate_triangulations(const Polygon& p) {
    std::vector<Dissection> out;
    for (Dissection& d : enumerate_dissections(p, p.size() - 3))
        if (static_cast<int>(d.size()) == p.size() - 3) out.push_back(std::move(d));
    return out;
}

} // namespace frieze
