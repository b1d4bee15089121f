#pragma once
// Canonical keys: equal keys <=> isomorphic graphs, within the domain of the
// chosen code. Two codes exist and never mix:
//   'A' minimal adjacency code over all vertex orderings (small general
//       multigraphs; branch-and-bound keeps it exact but fast),
//   'F' minimal embedding walk code (simple connected graphs with a planar
//       embedding; complete invariant for 3-connected planar graphs, where
//       the embedding is unique up to reflection).
#include <cstdint>
#include <functional>

#include "barnette/graph.hpp"

namespace barnette {

struct canonical_key {
    std::vector<std::uint8_t> key;

    bool operator==(const canonical_key&) const = default;
    bool operator<(const canonical_key& o) const { return key < o.key; }

    std::string hex() const {
        static const char* digits = "0123456789abcdef";
        std::string s;
        s.reserve(key.size() * 2);
        for (auto b : key) {
            s.push_back(digits[b >> 4]);
            s.push_back(digits[b & 15]);
        }
        return s;
    }
};

namespace detail {

// Row of the adjacency code for vertex placed at position `pos` given a
// partial ordering: multiplicities towards already-placed vertices, then the
// loop count. Lexicographically *maximal* codes are sought so that high
// adjacency to early vertices wins; any fixed convention works.
class adjacency_code_builder {
public:
    explicit adjacency_code_builder(const graph& g) : g_(g), n_(g.vertex_count()) {
        adj_.assign(n_ * n_, 0);
        loops_.assign(n_, 0);
        for (const auto& e : g.edges()) {
            if (e.is_loop())
                ++loops_[e.u];
            else {
                ++adj_[e.u * n_ + e.v];
                ++adj_[e.v * n_ + e.u];
            }
        }
    }

    std::vector<std::uint8_t> best_code() {
        best_.clear();
        perm_.assign(n_, -1);
        used_.assign(n_, 0);
        current_.clear();
        extend(0);
        return best_;
    }

private:
    void extend(int pos) {
        if (pos == n_) {
            if (current_ > best_) best_ = current_;
            return;
        }
        for (int v = 0; v < n_; ++v) {
            if (used_[v]) continue;
            std::size_t mark = current_.size();
            for (int p = 0; p < pos; ++p)
                current_.push_back(static_cast<std::uint8_t>(adj_[v * n_ + perm_[p]]));
            current_.push_back(static_cast<std::uint8_t>(loops_[v]));
            // Prefix pruning: a branch whose prefix already lost cannot win.
            bool viable = true;
            if (!best_.empty()) {
                auto cmp = std::lexicographical_compare_three_way(
                    current_.begin(), current_.end(), best_.begin(),
                    best_.begin() + static_cast<long>(current_.size()));
                viable = cmp >= 0;
            }
            if (viable) {
                used_[v] = 1;
                perm_[pos] = v;
                extend(pos + 1);
                used_[v] = 0;
            }
            current_.resize(mark);
        }
    }

    const graph& g_;
    int n_;
    std::vector<int> adj_, loops_, perm_;
    std::vector<char> used_;
    std::vector<std::uint8_t> current_, best_;
};

}  // namespace detail

inline constexpr int adjacency_code_max_vertices = 12;

inline canonical_key canonical_key_adjacency(const graph& g) {
    if (g.vertex_count() > adjacency_code_max_vertices)
        throw std::invalid_argument(
            "canonical_key: graph too large for the adjacency-code fallback; "
            "supply a planar embedding");
    detail::adjacency_code_builder b(g);
    canonical_key k;
    k.key.push_back('A');
    k.key.push_back(static_cast<std::uint8_t>(g.vertex_count()));
    k.key.push_back(static_cast<std::uint8_t>(g.edge_count()));
    auto code = b.best_code();
    k.key.insert(k.key.end(), code.begin(), code.end());
    return k;
}

}  // namespace barnette
