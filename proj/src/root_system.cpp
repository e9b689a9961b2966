#include "lieverify/root_system.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

#include "lieverify/linalg.hpp"

namespace lieverify {

namespace {

std::vector<Rational> zero_vec(std::size_t n) { return std::vector<Rational>(n, Rational(0)); }

std::vector<std::vector<Rational>> atom_roots(const std::string& atom, std::size_t& rank_out) {
    auto unit = [](std::size_t n, std::size_t i, long c) {
        std::vector<Rational> v(n, Rational(0));
        v[i] = Rational(c);
        return v;
    };
    auto two = [](std::size_t n, std::size_t i, long ci, std::size_t j, long cj) {
        std::vector<Rational> v(n, Rational(0));
        v[i] = Rational(ci);
        v[j] = Rational(cj);
        return v;
    };

    std::vector<std::vector<Rational>> roots;
    if (atom == "BC1") {
        rank_out = 1;
        for (long c : {1, -1, 2, -2}) roots.push_back(unit(1, 0, c));
        return roots;
    }
    if (atom.size() >= 2 && (atom[0] == 'A' || atom[0] == 'B' || atom[0] == 'D')) {
        char* end = nullptr;
        long r = std::strtol(atom.c_str() + 1, &end, 10);
        if (end == nullptr || *end != '\0' || r < 1) throw std::domain_error("bad root system tag: " + atom);
        std::size_t rr = static_cast<std::size_t>(r);
        if (atom[0] == 'A') {
            // e_i - e_j on the sum-zero hyperplane of Q^{r+1}, written in the
            // consecutive-difference basis: e_i - e_j = sum of basis vectors
            // i..j-1 for i < j.
            rank_out = rr;
            for (std::size_t i = 0; i < rr + 1; ++i)
                for (std::size_t j = 0; j < rr + 1; ++j) {
                    if (i == j) continue;
                    std::vector<Rational> v = zero_vec(rr);
                    if (i < j)
                        for (std::size_t t = i; t < j; ++t) v[t] = Rational(1);
                    else
                        for (std::size_t t = j; t < i; ++t) v[t] = Rational(-1);
                    roots.push_back(std::move(v));
                }
            return roots;
        }
        if (atom[0] == 'B') {
            if (rr < 1) throw std::domain_error("bad root system tag: " + atom);
            rank_out = rr;
            for (std::size_t i = 0; i < rr; ++i)
                for (long c : {1, -1}) roots.push_back(unit(rr, i, c));
            for (std::size_t i = 0; i < rr; ++i)
                for (std::size_t j = i + 1; j < rr; ++j)
                    for (long ci : {1, -1})
                        for (long cj : {1, -1}) roots.push_back(two(rr, i, ci, j, cj));
            return roots;
        }
        // D_r
        if (rr < 2) throw std::domain_error("bad root system tag: " + atom);
        rank_out = rr;
        for (std::size_t i = 0; i < rr; ++i)
            for (std::size_t j = i + 1; j < rr; ++j)
                for (long ci : {1, -1})
                    for (long cj : {1, -1}) roots.push_back(two(rr, i, ci, j, cj));
        return roots;
    }
    throw std::domain_error("bad root system tag: " + atom);
}

std::uint64_t upow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= b;
    return r;
}

std::vector<Rational> map_image(const std::vector<std::vector<Rational>>& imgs,
                                const QMat& coords, std::size_t root_idx, std::size_t ambient) {
    std::vector<Rational> out = zero_vec(ambient);
    for (std::size_t t = 0; t < imgs.size(); ++t) {
        const Rational& c = coords.at(t, root_idx);
        if (c == 0) continue;
        for (std::size_t r = 0; r < ambient; ++r) out[r] += c * imgs[t][r];
    }
    return out;
}

bool image_is_closed(const std::set<std::vector<Rational>>& image,
                     const std::set<std::vector<Rational>>& r2set) {
    for (const auto& s : image)
        for (const auto& t : image) {
            std::vector<Rational> sum = s;
            for (std::size_t r = 0; r < sum.size(); ++r) sum[r] += t[r];
            if (r2set.count(sum) && !image.count(sum)) return false;
        }
    return true;
}

struct Search {
    const RootSystem& r1;
    const RootSystem& r2;
    bool require_closed;
    QMat coords;                                  // rank1 x |R1|: base-coordinates of roots
    std::vector<std::vector<std::size_t>> avail;  // roots first fully determined at depth d
    std::set<std::vector<Rational>> r2set;
    EmbedReport* rep;
    std::vector<std::vector<Rational>> imgs;      // chosen base images
    std::vector<RowSpan> spans;                   // independence stack

    bool run(std::size_t depth) {
        const std::size_t rank1 = r1.base.size();
        if (depth == rank1) {
            ++rep->leaves_examined;
            if (require_closed) {
                std::set<std::vector<Rational>> image;
                for (std::size_t r = 0; r < r1.roots.size(); ++r)
                    image.insert(map_image(imgs, coords, r, r2.rank));
                if (!image_is_closed(image, r2set)) return false;
            }
            QMat W = qmat(r2.rank, rank1);
            for (std::size_t t = 0; t < rank1; ++t)
                for (std::size_t r = 0; r < r2.rank; ++r) W.at(r, t) = imgs[t][r];
            rep->witness = W;
            rep->embeds = true;
            return true;
        }
        const std::uint64_t subtree = upow(r2.roots.size(), rank1 - 1 - depth);
        for (const auto& candidate : r2.roots) {
            spans[depth + 1] = spans[depth];
            if (!spans[depth + 1].add(candidate)) {  // dependent image: map not injective
                rep->pruned_tuples += subtree;
                continue;
            }
            imgs.push_back(candidate);
            bool consistent = true;
            for (std::size_t r : avail[depth])
                if (!r2set.count(map_image(imgs, coords, r, r2.rank))) {
                    consistent = false;
                    break;
                }
            if (consistent && run(depth + 1)) return true;
            if (!consistent) rep->pruned_tuples += subtree;
            imgs.pop_back();
        }
        return false;
    }
};

}  // namespace

bool RootSystem::closed_under_negation() const {
    std::set<std::vector<Rational>> all(roots.begin(), roots.end());
    for (const auto& r : roots) {
        std::vector<Rational> neg = r;
        for (auto& c : neg) c = -c;
        if (!all.count(neg)) return false;
    }
    return true;
}

bool RootSystem::spans_ambient() const {
    RowSpan rs(rank);
    for (const auto& r : roots) rs.add(r);
    return rs.dim() == rank;
}

RootSystem make_root_system(const std::string& tag) {
    std::vector<std::string> atoms;
    std::string cur;
    for (char c : tag) {
        if (c == '+') {
            atoms.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    atoms.push_back(cur);

    RootSystem rs;
    rs.tag = tag;
    std::vector<std::vector<std::vector<Rational>>> blocks;
    std::vector<std::size_t> ranks;
    for (const auto& a : atoms) {
        std::size_t r = 0;
        blocks.push_back(atom_roots(a, r));
        ranks.push_back(r);
        rs.rank += r;
    }
    std::size_t offset = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (const auto& root : blocks[b]) {
            std::vector<Rational> padded = zero_vec(rs.rank);
            for (std::size_t i = 0; i < ranks[b]; ++i) padded[offset + i] = root[i];
            rs.roots.push_back(std::move(padded));
        }
        offset += ranks[b];
    }

    RowSpan span(rs.rank);
    for (std::size_t i = 0; i < rs.roots.size(); ++i)
        if (span.add(rs.roots[i])) rs.base.push_back(i);
    if (rs.base.size() != rs.rank)
        throw std::logic_error("root system does not span its ambient space: " + tag);
    return rs;
}

EmbedReport embeds(const RootSystem& r1, const RootSystem& r2, bool require_closed_image) {
    if (r1.rank > r2.rank)
        throw std::invalid_argument("embeds: source rank exceeds target rank");

    EmbedReport rep;
    rep.from = r1.tag;
    rep.into = r2.tag;
    rep.require_closed_image = require_closed_image;
    rep.predicted_total = upow(r2.roots.size(), r1.base.size());

    // Base coordinates of every root of R1: coords = B^{-1} * roots, where
    // the columns of B are the base roots.
    QMat B = qmat(r1.rank, r1.base.size());
    for (std::size_t t = 0; t < r1.base.size(); ++t)
        for (std::size_t r = 0; r < r1.rank; ++r) B.at(r, t) = r1.roots[r1.base[t]][r];
    QMat R = qmat(r1.rank, r1.roots.size());
    for (std::size_t c = 0; c < r1.roots.size(); ++c)
        for (std::size_t r = 0; r < r1.rank; ++r) R.at(r, c) = r1.roots[c][r];
    auto coords = solve(B, R);
    if (!coords) throw std::logic_error("embeds: base does not span the source system");

    Search s{r1, r2, require_closed_image, *coords, {}, {}, &rep, {}, {}};
    s.avail.assign(r1.base.size(), {});
    for (std::size_t r = 0; r < r1.roots.size(); ++r) {
        std::size_t top = 0;
        for (std::size_t t = 0; t < r1.base.size(); ++t)
            if (coords->at(t, r) != 0) top = t;
        s.avail[top].push_back(r);
    }
    for (const auto& root : r2.roots) s.r2set.insert(root);
    s.spans.assign(r1.base.size() + 1, RowSpan(r2.rank));

    s.run(0);
    rep.exhaustive = (rep.leaves_examined + rep.pruned_tuples == rep.predicted_total);

    if (rep.embeds && rep.witness) {
        // Re-verify the witness from scratch: full column rank, every root
        // image a root, and (when required) closure of the image set.
        bool ok = (rank_bareiss(*rep.witness) == r1.base.size());
        std::vector<std::vector<Rational>> imgs;
        for (std::size_t t = 0; t < r1.base.size(); ++t) {
            std::vector<Rational> col(r2.rank);
            for (std::size_t r = 0; r < r2.rank; ++r) col[r] = rep.witness->at(r, t);
            imgs.push_back(std::move(col));
        }
        std::set<std::vector<Rational>> image;
        for (std::size_t r = 0; r < r1.roots.size() && ok; ++r) {
            std::vector<Rational> img = map_image(imgs, *coords, r, r2.rank);
            if (!s.r2set.count(img)) ok = false;
            image.insert(std::move(img));
        }
        if (ok && require_closed_image) ok = image_is_closed(image, s.r2set);
        rep.witness_verified = ok;
    }
    return rep;
}

bool some_root_with_double(const RootSystem& r) {
    std::set<std::vector<Rational>> all(r.roots.begin(), r.roots.end());
    for (const auto& root : r.roots) {
        std::vector<Rational> dbl = root;
        for (auto& c : dbl) c *= 2;
        if (all.count(dbl)) return true;
    }
    return false;
}

std::size_t min_faithful_dim(std::size_t n) {
    if (n < 3) throw std::domain_error("min_faithful_dim: n must be at least 3");
    if (n == 3) return 2;
    if (n <= 6) return 4;
    return n;
}

DimScanReport dim_inequality_scan(std::size_t N) {
    if (N < 3) throw std::domain_error("dim_inequality_scan: bound must be at least 3");
    DimScanReport rep;
    rep.bound = N;
    for (std::size_t n = 3; n <= N; ++n)
        for (std::size_t m = 3; m <= n; ++m)
            if (min_faithful_dim(n) * min_faithful_dim(m) < n + m) {
                rep.exceptions.emplace_back(n, m);
                if (n == 3 && m == 3)
                    rep.notes.push_back(
                        "rank-two case o(1,2)+o(1,2) ~ o(2,2): excluded by hypothesis, "
                        "not by the dimension bound");
                else if (n == 6 && m == 3)
                    rep.notes.push_back(
                        "candidate pair eliminated by the root-system check: "
                        "A3+A1 admits no closed embedding into D4");
                else
                    rep.notes.push_back("unexpected exception pair");
            }
    for (const auto& e : rep.exceptions)
        if (e.first == 6 && e.second == 3) {
            rep.d4_check = embeds(make_root_system("A3+A1"), make_root_system("D4"));
            rep.d4_check_eliminates = !rep.d4_check->embeds && rep.d4_check->exhaustive;
        }
    return rep;
}

}  // namespace lieverify
