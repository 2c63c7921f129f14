#pragma once

// Mod-2 simplicial homology: boundary matrices, Betti numbers (unreduced, so
// b0 counts connected components), and the link-based homology-manifold and
// reconstruction-hypothesis checks.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "complex.hpp"

namespace skelrec {

// Dense matrix over GF(2), rows packed into 64-bit words.
class Z2Matrix {
public:
    Z2Matrix() = default;
    Z2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), bits_(rows * wpr_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t r, std::size_t c, bool v) {
        auto& w = bits_[r * wpr_ + (c >> 6)];
        std::uint64_t m = std::uint64_t{1} << (c & 63);
        w = v ? (w | m) : (w & ~m);
    }
    bool get(std::size_t r, std::size_t c) const {
        return (bits_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1;
    }

    std::size_t rank() const {
        std::vector<std::uint64_t> work = bits_;
        std::size_t rk = 0;
        for (std::size_t c = 0; c < cols_ && rk < rows_; ++c) {
            std::size_t wi = c >> 6;
            std::uint64_t m = std::uint64_t{1} << (c & 63);
            std::size_t pivot = rows_;
            for (std::size_t r = rk; r < rows_; ++r)
                if (work[r * wpr_ + wi] & m) {
                    pivot = r;
                    break;
                }
            if (pivot == rows_) continue;
            if (pivot != rk)
                for (std::size_t k = 0; k < wpr_; ++k)
                    std::swap(work[pivot * wpr_ + k], work[rk * wpr_ + k]);
            for (std::size_t r = rk + 1; r < rows_; ++r)
                if (work[r * wpr_ + wi] & m)
                    for (std::size_t k = 0; k < wpr_; ++k)
                        work[r * wpr_ + k] ^= work[rk * wpr_ + k];
            ++rk;
        }
        return rk;
    }

    Z2Matrix multiplied(const Z2Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Z2Matrix: shape mismatch in product");
        Z2Matrix out(rows_, o.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (get(r, c))
                    for (std::size_t k = 0; k < o.wpr_; ++k)
                        out.bits_[r * out.wpr_ + k] ^= o.bits_[c * o.wpr_ + k];
        return out;
    }

    bool is_zero() const {
        for (auto w : bits_)
            if (w) return false;
        return true;
    }

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> bits_;
};

// The i-th boundary map, (i-1)-faces by i-faces, both in lexicographic order
// of sorted vertex tuples.  i = 0 yields a 0 x f_0 matrix (unreduced complex).
inline Z2Matrix boundary_matrix(const SimplicialComplex& x, int i) {
    if (i < 0 || i > x.dim()) throw std::out_of_range("boundary_matrix: dimension out of range");
    const auto& cols = x.faces_of_dim(i);
    if (i == 0) return Z2Matrix(0, cols.size());
    const auto& rows = x.faces_of_dim(i - 1);
    std::map<std::vector<int>, std::size_t> row_index;
    for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], r);
    Z2Matrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto& f = cols[c];
        for (std::size_t p = 0; p < f.size(); ++p) {
            std::vector<int> sub;
            sub.reserve(f.size() - 1);
            for (std::size_t q = 0; q < f.size(); ++q)
                if (q != p) sub.push_back(f[q]);
            m.set(row_index.at(sub), c, true);
        }
    }
    return m;
}

using BettiVector = std::vector<int>;

inline BettiVector betti(const SimplicialComplex& x) {
    int d = x.dim();
    if (d < 0) return {};
    auto f = x.f_vector();
    std::vector<std::size_t> rk(d + 2, 0);  // rk[i] = rank of the i-th boundary map
    for (int i = 1; i <= d; ++i) rk[i] = boundary_matrix(x, i).rank();
    BettiVector b(d + 1);
    for (int i = 0; i <= d; ++i)
        b[i] = f[i] - static_cast<int>(rk[i]) - static_cast<int>(rk[i + 1]);
    return b;
}

// Unreduced Betti profile of an m-sphere: (2) when m = 0, else 1,0,...,0,1.
inline BettiVector sphere_betti(int m) {
    if (m < 0) throw std::invalid_argument("sphere_betti: negative dimension");
    if (m == 0) return {2};
    BettiVector b(m + 1, 0);
    b[0] = b[m] = 1;
    return b;
}

struct LinkCheck {
    std::vector<std::string> face;
    BettiVector betti;
    bool pass = false;
};

struct HomologyManifoldCheck {
    bool pass = false;
    bool connected = false;
    bool pseudomanifold = false;
    std::vector<LinkCheck> checked;  // one entry per proper face whose link was examined
};

// X is a homology manifold over GF(2) when it is a connected pseudomanifold
// and every k-face link, k <= dim-1, has the Betti profile of a sphere of the
// complementary dimension.
inline HomologyManifoldCheck is_homology_manifold(const SimplicialComplex& x) {
    HomologyManifoldCheck c;
    c.connected = is_connected(x);
    c.pseudomanifold = is_pseudomanifold(x).pseudomanifold;
    if (!c.connected || !c.pseudomanifold) return c;
    int d = x.dim();
    bool all = true;
    for (int k = 0; k <= d - 1; ++k) {
        for (const auto& g : x.faces_of_dim(k)) {
            LinkCheck lc;
            lc.face = x.tokens(g);
            auto L = link(x, lc.face);
            lc.betti = betti(L);
            lc.pass = L.dim() == d - k - 1 && lc.betti == sphere_betti(d - k - 1);
            all = all && lc.pass;
            c.checked.push_back(std::move(lc));
        }
    }
    c.pass = all;
    return c;
}

struct HypothesisReport {
    bool pass = false;       // overall: normality plus every main-range link check
    bool links_pass = false; // the link checks alone
    NormalityCheck normality;
    std::vector<LinkCheck> links;  // links of (2k-d-1)-faces, tested as homology (2d-2k-1)-manifolds
    bool variant_applicable = false;
    bool variant_pass = false;
    std::vector<LinkCheck> variant_links;  // links of (2k-d)-faces, plus trivial (d-k-1)-homology
};

// Hypothesis battery for reconstructing the k-skeleton of a normal
// pseudomanifold of dimension d-1: every (2k-d-1)-face link must be a
// homology (2d-2k-1)-manifold.  The variant flag additionally tests the
// (2k-d)-face links for homology-(2d-2k-2)-manifoldness with vanishing
// homology in degree d-k-1.
inline HypothesisReport check_pseudomanifold_hypotheses(const SimplicialComplex& x, int d, int k) {
    if (x.dim() != d - 1)
        throw std::invalid_argument("check_pseudomanifold_hypotheses: complex dimension is not d-1");
    int klo = (d + 2) / 2;  // ceil((d+1)/2)
    if (k < klo || k > d - 2)
        throw std::out_of_range("check_pseudomanifold_hypotheses: k outside [" +
                                std::to_string(klo) + ", " + std::to_string(d - 2) + "]");
    HypothesisReport rep;
    rep.normality = is_normal(x);
    int j = 2 * k - d - 1;  // >= 0 throughout the validated k range
    bool all = true;
    for (const auto& g : x.faces_of_dim(j)) {
        LinkCheck lc;
        lc.face = x.tokens(g);
        auto L = link(x, lc.face);
        lc.betti = betti(L);
        lc.pass = L.dim() == 2 * d - 2 * k - 1 && is_homology_manifold(L).pass;
        all = all && lc.pass;
        rep.links.push_back(std::move(lc));
    }
    rep.links_pass = all;
    rep.pass = rep.normality.normal && all;
    rep.variant_applicable = d >= 4;
    if (rep.variant_applicable) {
        int j2 = 2 * k - d;
        bool vall = true;
        for (const auto& g : x.faces_of_dim(j2)) {
            LinkCheck lc;
            lc.face = x.tokens(g);
            auto L = link(x, lc.face);
            lc.betti = betti(L);
            lc.pass = L.dim() == 2 * d - 2 * k - 2 && is_homology_manifold(L).pass &&
                      d - k - 1 <= L.dim() && lc.betti[d - k - 1] == 0;
            vall = vall && lc.pass;
            rep.variant_links.push_back(std::move(lc));
        }
        rep.variant_pass = vall;
    }
    return rep;
}

}  // namespace skelrec
