#pragma once

// Graded face posets, contiguous-rank slices, and two-rank incidence layers.
//
// A GradedFacePoset holds the proper nonempty faces of some polytope or
// complex: elements carry an opaque string id and a rank, and cover relations
// always join rank r to rank r+1.  Because covers raise rank by exactly one,
// the transitive closure is a partial order by construction.  Storage is
// canonical (elements by (rank, id), covers by index pair), so two posets
// built from the same data in any order compare equal.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"

namespace skelrec {

struct PosetElement {
    std::string id;
    int rank = 0;
    friend bool operator==(const PosetElement&, const PosetElement&) = default;
};

class GradedFacePoset {
public:
    GradedFacePoset() = default;

    GradedFacePoset(std::vector<PosetElement> elements,
                    const std::vector<std::pair<std::string, std::string>>& covers) {
        for (const auto& e : elements)
            if (e.rank < 0) throw std::invalid_argument("poset: negative rank on id '" + e.id + "'");
        std::sort(elements.begin(), elements.end(), [](const PosetElement& a, const PosetElement& b) {
            return a.rank != b.rank ? a.rank < b.rank : a.id < b.id;
        });
        elems_ = std::move(elements);
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (!index_.emplace(elems_[i].id, static_cast<int>(i)).second)
                throw std::invalid_argument("poset: duplicate id '" + elems_[i].id + "'");
        }
        std::set<std::pair<int, int>> cov;
        for (const auto& [lo, hi] : covers) {
            int a = index_of(lo), b = index_of(hi);
            if (a < 0) throw std::invalid_argument("poset: cover references unknown id '" + lo + "'");
            if (b < 0) throw std::invalid_argument("poset: cover references unknown id '" + hi + "'");
            if (elems_[b].rank != elems_[a].rank + 1)
                throw std::invalid_argument("poset: cover '" + lo + "' < '" + hi +
                                            "' does not join consecutive ranks");
            cov.emplace(a, b);
        }
        covers_.assign(cov.begin(), cov.end());
        up_.assign(elems_.size(), {});
        down_.assign(elems_.size(), {});
        for (auto [a, b] : covers_) {
            up_[a].push_back(b);
            down_[b].push_back(a);
        }
    }

    std::size_t size() const { return elems_.size(); }
    const std::vector<PosetElement>& elements() const { return elems_; }
    const PosetElement& element(int i) const { return elems_.at(i); }
    const std::vector<std::pair<int, int>>& cover_pairs() const { return covers_; }

    std::vector<std::pair<std::string, std::string>> covers_by_id() const {
        std::vector<std::pair<std::string, std::string>> out;
        out.reserve(covers_.size());
        for (auto [a, b] : covers_) out.emplace_back(elems_[a].id, elems_[b].id);
        return out;
    }

    int index_of(const std::string& id) const {
        auto it = index_.find(id);
        return it == index_.end() ? -1 : it->second;
    }
    bool contains(const std::string& id) const { return index_.count(id) != 0; }

    int max_rank() const { return elems_.empty() ? -1 : elems_.back().rank; }

    // Element counts per rank, index 0 .. max_rank.  Empty for the empty poset.
    std::vector<int> f_vector() const {
        std::vector<int> f(max_rank() + 1, 0);
        for (const auto& e : elems_) f[e.rank]++;
        return f;
    }

    const std::vector<int>& up(int i) const { return up_.at(i); }
    const std::vector<int>& down(int i) const { return down_.at(i); }

    // For each element, the set of elements strictly below it.  Elements are
    // sorted by rank, so a single ascending pass closes the cover relation.
    std::vector<Bitset> down_closures() const {
        std::vector<Bitset> below(size(), Bitset(size()));
        for (std::size_t i = 0; i < size(); ++i)
            for (int d : down_[i]) {
                below[i] |= below[d];
                below[i].set(d);
            }
        return below;
    }

    std::vector<Bitset> up_closures() const {
        std::vector<Bitset> above(size(), Bitset(size()));
        for (std::size_t i = size(); i-- > 0;)
            for (int u : up_[i]) {
                above[i] |= above[u];
                above[i].set(u);
            }
        return above;
    }

    friend bool operator==(const GradedFacePoset& a, const GradedFacePoset& b) {
        return a.elems_ == b.elems_ && a.covers_ == b.covers_;
    }

private:
    std::vector<PosetElement> elems_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<int>> up_, down_;
    std::map<std::string, int> index_;
};

// Restriction of a poset to the contiguous rank band [lo, hi].
struct SkeletonSlice {
    GradedFacePoset poset;
    int lo = 0;
    int hi = 0;
};

inline SkeletonSlice slice(const GradedFacePoset& p, int a, int b) {
    if (a < 0 || b < a) throw std::out_of_range("slice: need 0 <= a <= b");
    if (p.size() > 0 && b > p.max_rank())
        throw std::out_of_range("slice: b exceeds max rank " + std::to_string(p.max_rank()));
    std::vector<PosetElement> elems;
    for (const auto& e : p.elements())
        if (e.rank >= a && e.rank <= b) elems.push_back(e);
    // Ranks in the band are contiguous, so any chain between two retained
    // elements stays inside the band: induced covers are the original ones.
    std::vector<std::pair<std::string, std::string>> covers;
    for (auto [x, y] : p.cover_pairs()) {
        if (p.element(x).rank >= a && p.element(y).rank <= b)
            covers.emplace_back(p.element(x).id, p.element(y).id);
    }
    return SkeletonSlice{GradedFacePoset(std::move(elems), covers), a, b};
}

// Bipartite incidence between two consecutive face ranks.  `low_rank` records
// the rank the low side came from.  Both id lists are kept sorted and pairs
// are stored as (low index, high index), sorted.
class IncidenceBigraph {
public:
    IncidenceBigraph() = default;

    IncidenceBigraph(int low_rank, std::vector<std::string> low, std::vector<std::string> high,
                     const std::vector<std::pair<std::string, std::string>>& incident)
        : low_rank_(low_rank), low_(std::move(low)), high_(std::move(high)) {
        if (low_rank < 0) throw std::invalid_argument("bigraph: negative low rank");
        std::sort(low_.begin(), low_.end());
        std::sort(high_.begin(), high_.end());
        check_unique(low_, "low");
        check_unique(high_, "high");
        for (const auto& id : low_)
            if (std::binary_search(high_.begin(), high_.end(), id))
                throw std::invalid_argument("bigraph: id '" + id + "' appears on both sides");
        std::set<std::pair<int, int>> ps;
        for (const auto& [lo, hi] : incident) {
            int a = low_index(lo);
            if (a < 0) throw std::invalid_argument("bigraph: unknown low id '" + lo + "'");
            int b = high_index(hi);
            if (b < 0) throw std::invalid_argument("bigraph: unknown high id '" + hi + "'");
            ps.emplace(a, b);
        }
        pairs_.assign(ps.begin(), ps.end());
        highs_of_low_.assign(low_.size(), {});
        lows_of_high_.assign(high_.size(), {});
        for (auto [a, b] : pairs_) {
            highs_of_low_[a].push_back(b);
            lows_of_high_[b].push_back(a);
        }
    }

    int low_rank() const { return low_rank_; }
    const std::vector<std::string>& low() const { return low_; }
    const std::vector<std::string>& high() const { return high_; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

    std::vector<std::pair<std::string, std::string>> pairs_by_id() const {
        std::vector<std::pair<std::string, std::string>> out;
        out.reserve(pairs_.size());
        for (auto [a, b] : pairs_) out.emplace_back(low_[a], high_[b]);
        return out;
    }

    int low_index(const std::string& id) const {
        auto it = std::lower_bound(low_.begin(), low_.end(), id);
        return it != low_.end() && *it == id ? static_cast<int>(it - low_.begin()) : -1;
    }
    int high_index(const std::string& id) const {
        auto it = std::lower_bound(high_.begin(), high_.end(), id);
        return it != high_.end() && *it == id ? static_cast<int>(it - high_.begin()) : -1;
    }

    const std::vector<int>& highs_of_low(int i) const { return highs_of_low_.at(i); }
    const std::vector<int>& lows_of_high(int i) const { return lows_of_high_.at(i); }

    friend bool operator==(const IncidenceBigraph& a, const IncidenceBigraph& b) {
        return a.low_rank_ == b.low_rank_ && a.low_ == b.low_ && a.high_ == b.high_ &&
               a.pairs_ == b.pairs_;
    }

private:
    static void check_unique(const std::vector<std::string>& v, const char* side) {
        auto it = std::adjacent_find(v.begin(), v.end());
        if (it != v.end())
            throw std::invalid_argument(std::string("bigraph: duplicate ") + side + " id '" + *it + "'");
    }

    int low_rank_ = 0;
    std::vector<std::string> low_, high_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<std::vector<int>> highs_of_low_, lows_of_high_;
};

inline IncidenceBigraph bigraph_of(const SkeletonSlice& s) {
    if (s.hi != s.lo + 1)
        throw std::invalid_argument("bigraph_of: slice must span exactly two ranks");
    std::vector<std::string> low, high;
    for (const auto& e : s.poset.elements())
        (e.rank == s.lo ? low : high).push_back(e.id);
    return IncidenceBigraph(s.lo, std::move(low), std::move(high), s.poset.covers_by_id());
}

// Swap the two sides.  The caller names the rank the new low side should
// report; incidence is reversed verbatim.
inline IncidenceBigraph transposed(const IncidenceBigraph& b, int new_low_rank) {
    std::vector<std::pair<std::string, std::string>> rev;
    rev.reserve(b.pairs().size());
    for (auto [lo, hi] : b.pairs()) rev.emplace_back(b.high()[hi], b.low()[lo]);
    return IncidenceBigraph(new_low_rank, b.high(), b.low(), rev);
}

// Stitch consecutive two-rank layers back into one graded poset.  Layer i+1's
// low side must repeat layer i's high side exactly (same id set), and low
// ranks must ascend by one.
inline GradedFacePoset assemble(const std::vector<IncidenceBigraph>& layers) {
    if (layers.empty()) throw std::invalid_argument("assemble: no layers");
    for (std::size_t i = 0; i + 1 < layers.size(); ++i) {
        if (layers[i + 1].low_rank() != layers[i].low_rank() + 1)
            throw std::invalid_argument("assemble: layer " + std::to_string(i + 1) +
                                        " low rank does not follow layer " + std::to_string(i));
        if (layers[i + 1].low() != layers[i].high())
            throw std::invalid_argument("assemble: layer " + std::to_string(i + 1) +
                                        " low ids do not match layer " + std::to_string(i) +
                                        " high ids");
    }
    std::vector<PosetElement> elems;
    for (const auto& id : layers.front().low())
        elems.push_back({id, layers.front().low_rank()});
    for (const auto& L : layers)
        for (const auto& id : L.high()) elems.push_back({id, L.low_rank() + 1});
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& L : layers)
        for (auto [lo, hi] : L.pairs()) covers.emplace_back(L.low()[lo], L.high()[hi]);
    return GradedFacePoset(std::move(elems), covers);
}

}  // namespace skelrec
