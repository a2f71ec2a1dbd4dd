#pragma once

#include <algorithm>
#include <cassert>
#include <span>
#include <vector>

#include "frieze/diagonal_map.hpp"
#include "frieze/polygon.hpp"

namespace frieze {

// A T-path is an ordered vertex tuple (pi_1, ..., pi_p), p even, whose steps
// are pairwise different diagonals, none crossing the dissection, and whose
// even-indexed steps are dissection members crossing {pi_1, pi_p} at strictly
// advancing points.
using TPath = std::vector<int>;

// Precomputed step predicates for one (polygon, dissection, from, to)
// triple. Shared by the validator and the enumerator.
class TPathContext {
public:
    TPathContext(const Polygon& p, const Dissection& d, int from, int to)
        : n_(p.size()), from_(from), to_(to) {
        if (!p.valid_vertex(from) || !p.valid_vertex(to))
            throw ValidationError("vertex out of range for n=" + std::to_string(n_));
        if (from == to) throw ValidationError("T-path endpoints must differ");
        crosses_any_.assign(static_cast<std::size_t>(n_) * n_, 0);
        member_.assign(static_cast<std::size_t>(n_) * n_, 0);
        rank_.assign(static_cast<std::size_t>(n_) * n_, -1);
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b) {
                Diagonal step{a, b};
                for (Diagonal m : d.members())
                    if (crosses(p, step, m)) {
                        at(crosses_any_, a, b) = 1;
                        break;
                    }
            }
        Diagonal base{from, to};
        std::vector<Diagonal> crossing;
        for (Diagonal m : d.members()) {
            at(member_, m.a, m.b) = 1;
            if (crosses(p, base, m)) crossing.push_back(m);
        }
        std::sort(crossing.begin(), crossing.end(), [&](Diagonal x, Diagonal y) {
            return crossing_order(p, from, to, x, y) == std::strong_ordering::less;
        });
        for (std::size_t i = 0; i < crossing.size(); ++i)
            at(rank_, crossing[i].a, crossing[i].b) = static_cast<int>(i);
        crossing_count_ = static_cast<int>(crossing.size());
    }

    int n() const { return n_; }
    int from() const { return from_; }
    int to() const { return to_; }
    // number of dissection members crossing {from,to}
    int crossing_count() const { return crossing_count_; }

    bool step_crosses_dissection(int u, int v) const { return at(crosses_any_, u, v); }
    bool in_dissection(int u, int v) const { return at(member_, u, v); }
    // position of a dissection member among those crossing the base, walking
    // from `from` to `to`; -1 if it does not cross the base
    int base_crossing_rank(int u, int v) const { return at(rank_, u, v); }

private:
    int n_;
    int from_, to_;
    int crossing_count_ = 0;
    std::vector<char> crosses_any_;
    std::vector<char> member_;
    std::vector<int> rank_;

    template <typename T>
    T& at(std::vector<T>& m, int u, int v) const {
        return m[static_cast<std::size_t>(std::min(u, v)) * n_ + std::max(u, v)];
    }
    template <typename T>
    const T& at(const std::vector<T>& m, int u, int v) const {
        return m[static_cast<std::size_t>(std::min(u, v)) * n_ + std::max(u, v)];
    }
};

// Literal transcription of the T-path conditions, independent of the
// enumerator:
//   (i)   the steps are pairwise different diagonals,
//   (ii)  no step crosses a dissection member,
//   (iii) the even-indexed steps are dissection members crossing {from,to}
//         at pairwise different, monotonically advancing points.
inline bool is_tpath(const TPathContext& ctx, std::span<const int> seq) {
    for (int v : seq)
        if (v < 0 || v >= ctx.n())
            throw ValidationError("vertex out of range for n=" + std::to_string(ctx.n()));
    if (seq.size() < 2) return false;
    if (seq.front() != ctx.from() || seq.back() != ctx.to()) return false;
    std::vector<char> used(static_cast<std::size_t>(ctx.n()) * ctx.n(), 0);
    int last_rank = -1;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        int u = seq[i], v = seq[i + 1];
        if (u == v) return false; // not a diagonal
        char& slot = used[static_cast<std::size_t>(std::min(u, v)) * ctx.n() + std::max(u, v)];
        if (slot) return false; // (i)
        slot = 1;
        if (ctx.step_crosses_dissection(u, v)) return false; // (ii)
        bool even_step = (i + 1) % 2 == 0;
        if (even_step) { // (iii)
            if (!ctx.in_dissection(u, v)) return false;
            int r = ctx.base_crossing_rank(u, v);
            if (r < 0 || r <= last_rank) return false;
            last_rank = r;
        }
    }
    return true;
}

inline bool is_tpath(const Polygon& p, const Dissection& d, std::span<const int> seq, int from,
                     int to) {
    return is_tpath(TPathContext{p, d, from, to}, seq);
}

namespace detail {

// Depth-first extension of partial paths. Steps alternate between free
// diagonals (odd index) and dissection members advancing along the base
// (even index), which bounds the depth by 2k+2.
class TPathEnumerator {
public:
    explicit TPathEnumerator(const TPathContext& ctx)
        : ctx_(ctx), used_(static_cast<std::size_t>(ctx.n()) * ctx.n(), 0) {}

    std::vector<TPath> run() {
        cur_.clear();
        cur_.push_back(ctx_.from());
        extend(-1);
        std::sort(out_.begin(), out_.end());
        return std::move(out_);
    }

private:
    const TPathContext& ctx_;
    std::vector<char> used_;
    TPath cur_;
    std::vector<TPath> out_;

    char& used(int u, int v) {
        return used_[static_cast<std::size_t>(std::min(u, v)) * ctx_.n() + std::max(u, v)];
    }

    void extend(int last_rank) {
        int v = cur_.back();
        if (v == ctx_.to() && cur_.size() >= 2) {
            assert(cur_.size() % 2 == 0);
            out_.push_back(cur_);
        }
        bool next_is_even = cur_.size() % 2 == 0;
        for (int w = 0; w < ctx_.n(); ++w) {
            if (w == v || used(v, w)) continue;
            int rank = last_rank;
            if (next_is_even) {
                if (!ctx_.in_dissection(v, w)) continue;
                rank = ctx_.base_crossing_rank(v, w);
                if (rank < 0 || rank <= last_rank) continue;
            } else {
                if (ctx_.step_crosses_dissection(v, w)) continue;
            }
            used(v, w) = 1;
            cur_.push_back(w);
            extend(rank);
            cur_.pop_back();
            used(v, w) = 0;
        }
    }
};

} // namespace detail

// All T-paths from `from` to `to` with respect to d, in lexicographic order.
inline std::vector<TPath> enumerate_tpaths(const Polygon& p, const Dissection& d, int from,
                                           int to) {
    TPathContext ctx{p, d, from, to};
    return detail::TPathEnumerator{ctx}.run();
}

// Positional constraint on a T-path prefix: the vertex at a position must
// equal, or must differ from, a given vertex.
struct PrefixConstraint {
    int vertex;
    bool must_equal = true;
};

// The subset of T-paths whose first entries satisfy the given constraints.
inline std::vector<TPath> tpaths_with_prefix(const Polygon& p, const Dissection& d, int from,
                                             int to, std::span<const PrefixConstraint> prefix) {
    std::vector<TPath> out;
    for (TPath& path : enumerate_tpaths(p, d, from, to)) {
        bool ok = path.size() >= prefix.size();
        for (std::size_t i = 0; ok && i < prefix.size(); ++i)
            ok = (path[i] == prefix[i].vertex) == prefix[i].must_equal;
        if (ok) out.push_back(std::move(path));
    }
    return out;
}

// (pi_1, ..., pi_p) -> (pi_p, ..., pi_1); a bijection between the T-path
// sets for the two directions.
inline TPath reverse_path(TPath path) {
    std::reverse(path.begin(), path.end());
    return path;
}

// Weight of a T-path: odd-step values in the numerator, even-step values in
// the denominator.
template <Semifield K>
K tpath_weight(const DiagonalMap<K>& f, const TPath& path) {
    if (path.size() < 2) throw ValidationError("T-path needs at least two vertices");
    K num = K::one();
    K den = K::one();
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const K& v = f.value(path[i], path[i + 1]);
        if ((i + 1) % 2 == 1)
            num = num * v;
        else
            den = den * v;
    }
    return num * den.inverse();
}

// Sum of tpath_weight over all T-paths from `from` to `to`. The T-path set
// is never empty, so the semifield sum is well defined.
template <Semifield K>
K tpath_sum(const DiagonalMap<K>& f, const Dissection& d, int from, int to) {
    std::vector<TPath> paths = enumerate_tpaths(f.polygon(), d, from, to);
    if (paths.empty()) throw std::logic_error("empty T-path set");
    K acc = tpath_weight(f, paths.front());
    for (std::size_t i = 1; i < paths.size(); ++i) acc = acc + tpath_weight(f, paths[i]);
    return acc;
}

} // namespace frieze
