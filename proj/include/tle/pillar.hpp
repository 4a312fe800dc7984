#pragma once

// Pillar diagrams: Temperley-Lieb diagrams in the standard n-box whose
// clockwise regions carry nonnegative integer labels, with stacking, the
// loop/label reduction relations, closure to trace diagrams, and content.
//
// Conventions (all indices 0-based):
//  - boundary point p is marked point p+1; top points 0..n-1 sit at x = 1..n,
//    bottom point p (n <= p < 2n) sits at x = 2n - p.
//  - gap j is the stretch of box boundary between point j and point j+1
//    (mod 2n). Gap n-1 contains the right wall, gap 2n-1 the left wall.
//  - a face touching the boundary is clockwise iff it contains an even gap.
//  - every other face is the immediate interior of exactly one closed loop.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coxeter.hpp"

namespace tle {

enum class Orientation { Clockwise, Anticlockwise };

struct DiagramLoop {
    int inner = 0;  // face immediately inside
    int outer = 0;  // face immediately outside

    friend bool operator==(const DiagramLoop&, const DiagramLoop&) = default;
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int i) {
        while (parent[static_cast<std::size_t>(i)] != i) {
            parent[static_cast<std::size_t>(i)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])];
            i = parent[static_cast<std::size_t>(i)];
        }
        return i;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

inline std::size_t at(int i) { return static_cast<std::size_t>(i); }

}  // namespace detail

class PillarDiagram {
public:
    PillarDiagram() = default;

    /// Builds and validates a diagram from raw parts.
    PillarDiagram(int rank, std::vector<int> match, std::vector<int> gap_face, std::vector<int> labels,
                  std::vector<DiagramLoop> loops)
        : rank_(rank), match_(std::move(match)), gap_face_(std::move(gap_face)), labels_(std::move(labels)),
          loops_(std::move(loops)) {
        validate();
    }

    /// A loop-free diagram from a non-crossing matching; faces are derived
    /// and all labelled 0.
    static PillarDiagram from_matching(int rank, std::vector<int> match) {
        const int m = 2 * rank;
        if (rank < 1 || static_cast<int>(match.size()) != m) throw std::invalid_argument("matching size must be 2n");
        for (int p : match)
            if (p < 0 || p >= m) throw std::invalid_argument("matching entry out of range");
        detail::UnionFind uf(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) uf.unite(j, match[detail::at((j + 1) % m)]);
        std::vector<int> id(detail::at(m), -1), gap_face(detail::at(m));
        int faces = 0;
        for (int j = 0; j < m; ++j) {
            int r = uf.find(j);
            if (id[detail::at(r)] < 0) id[detail::at(r)] = faces++;
            gap_face[detail::at(j)] = id[detail::at(r)];
        }
        return PillarDiagram(rank, std::move(match), std::move(gap_face), std::vector<int>(detail::at(faces), 0), {});
    }

    static PillarDiagram identity(int rank) {
        std::vector<int> match(detail::at(2 * rank));
        for (int i = 0; i < rank; ++i) {
            match[detail::at(i)] = 2 * rank - 1 - i;
            match[detail::at(2 * rank - 1 - i)] = i;
        }
        return from_matching(rank, std::move(match));
    }

    int rank() const { return rank_; }
    const std::vector<int>& matching() const { return match_; }
    const std::vector<int>& gap_faces() const { return gap_face_; }
    const std::vector<int>& labels() const { return labels_; }
    const std::vector<DiagramLoop>& loops() const { return loops_; }
    int face_count() const { return static_cast<int>(labels_.size()); }
    int label(int face) const { return labels_.at(detail::at(face)); }

    bool is_propagating(int p) const { return (p < rank_) != (match_[detail::at(p)] < rank_); }
    int propagating_count() const {
        int c = 0;
        for (int p = 0; p < rank_; ++p) c += is_propagating(p) ? 1 : 0;
        return c;
    }

    /// Loop index whose inner face encloses loop `l`, or -1.
    int loop_parent(int l) const {
        const int out = loops_.at(detail::at(l)).outer;
        for (std::size_t k = 0; k < loops_.size(); ++k)
            if (loops_[k].inner == out) return static_cast<int>(k);
        return -1;
    }

    std::vector<Orientation> orientations() const {
        std::vector<int> o(labels_.size(), -1);  // 1 clockwise, 0 anticlockwise
        for (int j = 0; j < 2 * rank_; ++j) o[detail::at(gap_face_[detail::at(j)])] = j % 2 == 0 ? 1 : 0;
        for (bool changed = true; changed;) {
            changed = false;
            for (const auto& l : loops_)
                if (o[detail::at(l.inner)] < 0 && o[detail::at(l.outer)] >= 0) {
                    o[detail::at(l.inner)] = 1 - o[detail::at(l.outer)];
                    changed = true;
                }
        }
        std::vector<Orientation> out;
        for (int v : o) {
            if (v < 0) throw std::logic_error("face not reachable from the boundary");
            out.push_back(v == 1 ? Orientation::Clockwise : Orientation::Anticlockwise);
        }
        return out;
    }

    /// Checks every structural invariant; throws std::invalid_argument.
    void validate() const {
        const int m = 2 * rank_;
        auto fail = [](const std::string& why) { throw std::invalid_argument("invalid pillar diagram: " + why); };
        if (rank_ < 1) fail("rank must be positive");
        if (static_cast<int>(match_.size()) != m || static_cast<int>(gap_face_.size()) != m)
            fail("matching and gap arrays must have size 2n");
        for (int p = 0; p < m; ++p) {
            int q = match_[detail::at(p)];
            if (q < 0 || q >= m || q == p || match_[detail::at(q)] != p) fail("matching is not a fixed-point-free involution");
            if ((q - p) % 2 == 0) fail("an arc joins two points of equal parity");
        }
        for (int a = 0; a < m; ++a) {
            int b = match_[detail::at(a)];
            if (b < a) continue;
            for (int c = a + 1; c < b; ++c) {
                int d = match_[detail::at(c)];
                if (d < a || d > b) fail("matching is crossing");
            }
        }
        const int faces = face_count();
        for (int f : gap_face_)
            if (f < 0 || f >= faces) fail("gap face out of range");
        for (int j = 0; j < m; ++j)
            if (gap_face_[detail::at(j)] != gap_face_[detail::at(match_[detail::at((j + 1) % m)])])
                fail("gap faces disagree with the matching");
        {
            // distinct boundary faces of the matching must stay distinct
            auto ref = from_matching_faces(match_);
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    if ((ref[detail::at(i)] == ref[detail::at(j)]) != (gap_face_[detail::at(i)] == gap_face_[detail::at(j)]))
                        fail("gap faces merge regions separated by an arc");
        }
        std::vector<int> boundary(detail::at(faces), 0), inner_of(detail::at(faces), 0);
        for (int f : gap_face_) boundary[detail::at(f)] = 1;
        for (const auto& l : loops_) {
            if (l.inner < 0 || l.inner >= faces || l.outer < 0 || l.outer >= faces) fail("loop face out of range");
            if (l.inner == l.outer) fail("loop with the same face on both sides");
            if (boundary[detail::at(l.inner)]) fail("loop interior touches the box boundary");
            ++inner_of[detail::at(l.inner)];
        }
        for (int f = 0; f < faces; ++f) {
            if (!boundary[detail::at(f)] && inner_of[detail::at(f)] != 1) fail("interior face must lie inside exactly one loop");
            if (labels_[detail::at(f)] < 0) fail("negative label");
        }
        auto orient = orientations();
        for (int f = 0; f < faces; ++f)
            if (orient[detail::at(f)] == Orientation::Anticlockwise && labels_[detail::at(f)] != 0)
                fail("anticlockwise face with nonzero label");
        if (orient[detail::at(gap_face_[detail::at(m - 1)])] != Orientation::Anticlockwise)
            fail("left-wall face must be anticlockwise");
    }

    friend bool operator==(const PillarDiagram&, const PillarDiagram&) = default;

private:
    static std::vector<int> from_matching_faces(const std::vector<int>& match) {
        const int m = static_cast<int>(match.size());
        detail::UnionFind uf(detail::at(m));
        for (int j = 0; j < m; ++j) uf.unite(j, match[detail::at((j + 1) % m)]);
        std::vector<int> out(detail::at(m));
        for (int j = 0; j < m; ++j) out[detail::at(j)] = uf.find(j);
        return out;
    }

    friend class DiagramBuilder;

    int rank_ = 0;
    std::vector<int> match_;
    std::vector<int> gap_face_;
    std::vector<int> labels_;
    std::vector<DiagramLoop> loops_;
};

/// delta^delta_exp * diagram
struct ScaledDiagram {
    int delta_exp = 0;
    PillarDiagram diagram;

    friend bool operator==(const ScaledDiagram&, const ScaledDiagram&) = default;
};

/// A closed diagram on the disc: only loops and faces remain.
struct TraceDiagram {
    std::vector<int> labels;
    std::vector<DiagramLoop> loops;
    int outer_face = 0;
};

/// Assembles a diagram from faces identified by union-find, renumbering faces
/// canonically (boundary faces by first gap, then loop interiors in loop order).
class DiagramBuilder {
public:
    static PillarDiagram assemble(int rank, std::vector<int> match, const std::vector<int>& gap_class,
                                  const std::vector<int>& class_label, const std::vector<DiagramLoop>& class_loops) {
        std::vector<int> id(class_label.size(), -1), labels;
        auto number = [&](int c) {
            if (id[detail::at(c)] < 0) {
                id[detail::at(c)] = static_cast<int>(labels.size());
                labels.push_back(class_label[detail::at(c)]);
            }
            return id[detail::at(c)];
        };
        std::vector<int> gap_face;
        for (int c : gap_class) gap_face.push_back(number(c));
        std::vector<DiagramLoop> loops;
        for (const auto& l : class_loops) loops.push_back({number(l.inner), 0});
        for (std::size_t k = 0; k < class_loops.size(); ++k) loops[k].outer = number(class_loops[k].outer);
        return PillarDiagram(rank, std::move(match), std::move(gap_face), std::move(labels), std::move(loops));
    }
};

/// E_k^n: points k,k+1 joined by a cap and 2n-k,2n+1-k by a cup (marked
/// numbering), every other point joined straight down; all labels 0.
inline PillarDiagram gen_E(int k, int n) {
    if (k < 1 || k >= n) throw std::out_of_range("E_k^n requires 1 <= k < n");
    const int m = 2 * n;
    std::vector<int> match(detail::at(m));
    for (int i = 0; i < n; ++i) {
        match[detail::at(i)] = m - 1 - i;
        match[detail::at(m - 1 - i)] = i;
    }
    auto join = [&](int a, int b) {
        match[detail::at(a)] = b;
        match[detail::at(b)] = a;
    };
    join(k - 1, k);
    join(m - k - 1, m - k);
    return PillarDiagram::from_matching(n, std::move(match));
}

/// B_k^n: identity matching with the region between strands k and k+1 labelled 1.
inline PillarDiagram gen_B(int k, int n) {
    if (k < 1 || k >= n) throw std::out_of_range("B_k^n requires 1 <= k < n");
    if (k % 2 == 0) throw std::invalid_argument("B_k^n needs a clockwise region; k must be odd");
    PillarDiagram id = PillarDiagram::identity(n);
    std::vector<int> labels = id.labels();
    labels[detail::at(id.gap_faces()[detail::at(k - 1)])] = 1;
    return PillarDiagram(n, id.matching(), id.gap_faces(), std::move(labels), {});
}

/// Image of a single generator: b_0 -> B_3^n, b_i -> E_i^n.
inline PillarDiagram generator_diagram(int s, int n) { return s == 0 ? gen_B(3, n) : gen_E(s, n); }

/// Stack `top` over `bottom`. Curves are concatenated through the interface;
/// faces meeting across it merge and their labels add. Closed curves formed
/// at the interface become loops.
inline PillarDiagram compose(const PillarDiagram& top, const PillarDiagram& bottom) {
    const int n = top.rank();
    if (bottom.rank() != n) throw std::invalid_argument("compose: rank mismatch");
    const int m = 2 * n;
    const auto& X = top.matching();
    const auto& Y = bottom.matching();
    std::vector<int> match(detail::at(m), -1);
    std::vector<bool> seen(detail::at(n + 2), false);  // interface positions 1..n

    // from X's bottom point p (reached from below), return the endpoint in the result
    auto from_x = [&](int p) {
        while (true) {
            int q = X[detail::at(p)];
            if (q < n) return q;
            int pos = m - q;
            seen[detail::at(pos)] = true;
            int r = Y[detail::at(pos - 1)];
            if (r >= n) return r;
            int pos2 = r + 1;
            seen[detail::at(pos2)] = true;
            p = m - pos2;
        }
    };
    for (int t = 0; t < n; ++t) {
        if (match[detail::at(t)] >= 0) continue;
        int e = from_x(t);
        match[detail::at(t)] = e;
        match[detail::at(e)] = t;
    }
    for (int b = n; b < m; ++b) {
        if (match[detail::at(b)] >= 0) continue;
        int q = Y[detail::at(b)];
        int e;
        if (q >= n) e = q;
        else {
            seen[detail::at(q + 1)] = true;
            e = from_x(m - (q + 1));
        }
        match[detail::at(b)] = e;
        match[detail::at(e)] = b;
    }

    const int fx = top.face_count(), fy = bottom.face_count();
    detail::UnionFind uf(detail::at(fx + fy));
    for (int i = 0; i <= n; ++i)
        uf.unite(top.gap_faces()[detail::at(m - i - 1)], fx + bottom.gap_faces()[detail::at((i - 1 + m) % m)]);
    auto interface_face = [&](int i) { return uf.find(top.gap_faces()[detail::at(m - i - 1)]); };

    std::vector<DiagramLoop> loops;
    for (const auto& l : top.loops()) loops.push_back({uf.find(l.inner), uf.find(l.outer)});
    for (const auto& l : bottom.loops()) loops.push_back({uf.find(fx + l.inner), uf.find(fx + l.outer)});
    for (int pos = 1; pos <= n; ++pos) {
        if (seen[detail::at(pos)]) continue;
        int cur = pos, lo = pos;
        do {
            seen[detail::at(cur)] = true;
            lo = std::min(lo, cur);
            int q = X[detail::at(m - cur)];
            int pos2 = m - q;
            seen[detail::at(pos2)] = true;
            lo = std::min(lo, pos2);
            cur = Y[detail::at(pos2 - 1)] + 1;
        } while (cur != pos);
        loops.push_back({interface_face(lo), interface_face(lo - 1)});
    }

    std::vector<int> gap_class(detail::at(m));
    for (int j = 0; j < m; ++j) {
        bool from_top = j < n || j == m - 1;
        gap_class[detail::at(j)] = uf.find(from_top ? top.gap_faces()[detail::at(j)] : fx + bottom.gap_faces()[detail::at(j)]);
    }
    std::vector<int> class_label(detail::at(fx + fy), 0);
    for (int f = 0; f < fx; ++f) class_label[detail::at(uf.find(f))] += top.label(f);
    for (int f = 0; f < fy; ++f) class_label[detail::at(uf.find(fx + f))] += bottom.label(f);
    return DiagramBuilder::assemble(n, std::move(match), gap_class, class_label, loops);
}

inline ScaledDiagram compose(const ScaledDiagram& top, const ScaledDiagram& bottom) {
    return {top.delta_exp + bottom.delta_exp, compose(top.diagram, bottom.diagram)};
}

/// Exhaustively applies the reduction relations:
///  (iii) a region labelled k >= 2 drops to k-1 at the cost of one delta;
///  (i)   a loop with interior 1 (exterior necessarily 0) is erased, region relabelled 0;
///  (ii)  a loop with interior 0 and exterior k is erased, region relabelled k, times delta.
/// The result has no loops and only labels 0 and 1.
inline ScaledDiagram simplify(const ScaledDiagram& sd) {
    const PillarDiagram& d = sd.diagram;
    int exp = sd.delta_exp;
    std::vector<int> label = d.labels();
    for (int& k : label)
        if (k >= 2) {
            exp += k - 1;
            k = 1;
        }
    detail::UnionFind uf(label.size());
    for (std::size_t idx = d.loops().size(); idx-- > 0;) {
        const auto& l = d.loops()[idx];
        const int in = uf.find(l.inner), out = uf.find(l.outer);
        const int li = label[detail::at(in)], lo = label[detail::at(out)];
        int merged = 0;
        if (li == 0) {
            ++exp;
            merged = lo;
        } else if (lo != 0) {
            throw std::logic_error("loop with labelled regions on both sides");
        }
        uf.unite(in, out);
        label[detail::at(uf.find(out))] = merged;
    }
    std::vector<int> gap_class;
    for (int f : d.gap_faces()) gap_class.push_back(uf.find(f));
    std::vector<int> class_label(label.size(), 0);
    for (std::size_t f = 0; f < label.size(); ++f)
        if (uf.find(static_cast<int>(f)) == static_cast<int>(f)) class_label[f] = label[f];
    return {exp, DiagramBuilder::assemble(d.rank(), d.matching(), gap_class, class_label, {})};
}

/// rho(b_{s1} b_{s2} ...) = rho(s1) on top of rho(s2) on top of ..., simplified
/// after every generator.
inline ScaledDiagram rho(const Word& w, int n) {
    ScaledDiagram d{0, PillarDiagram::identity(n)};
    for (int s : w) {
        if (s < 0 || s >= n) throw std::out_of_range("generator out of range in rho");
        d = simplify(compose(d, ScaledDiagram{0, generator_diagram(s, n)}));
    }
    return d;
}

/// Identifies top point at x = i with the bottom point at x = i, on the disc.
inline TraceDiagram close(const PillarDiagram& d) {
    const int n = d.rank(), m = 2 * n;
    const auto& match = d.matching();
    const auto& gf = d.gap_faces();
    detail::UnionFind uf(detail::at(d.face_count()));
    for (int i = 1; i < n; ++i) uf.unite(gf[detail::at(i - 1)], gf[detail::at(m - i - 1)]);
    // the seam runs from the disc boundary (x = 0) to the centre (x = n+1)
    auto seam_face = [&](int pos) { return uf.find(gf[detail::at(pos == 0 ? m - 1 : pos - 1)]); };

    std::vector<DiagramLoop> loops;
    for (const auto& l : d.loops()) loops.push_back({uf.find(l.inner), uf.find(l.outer)});
    std::vector<bool> seen(detail::at(m), false);
    for (int p = 0; p < m; ++p) {
        if (seen[detail::at(p)]) continue;
        int cur = p, lo = n + 1;
        do {
            seen[detail::at(cur)] = true;
            int q = match[detail::at(cur)];
            seen[detail::at(q)] = true;
            int pos = q < n ? q + 1 : m - q;
            lo = std::min(lo, pos);
            cur = q < n ? m - pos : pos - 1;
        } while (cur != p);
        loops.push_back({seam_face(lo), seam_face(lo - 1)});
    }

    TraceDiagram t;
    std::vector<int> id(detail::at(d.face_count()), -1);
    auto number = [&](int c) {
        if (id[detail::at(c)] < 0) {
            id[detail::at(c)] = static_cast<int>(t.labels.size());
            t.labels.push_back(0);
        }
        return id[detail::at(c)];
    };
    t.outer_face = number(seam_face(0));
    for (int f = 0; f < d.face_count(); ++f) t.labels[detail::at(number(uf.find(f)))] += d.label(f);
    for (const auto& l : loops) t.loops.push_back({number(l.inner), number(l.outer)});
    return t;
}

inline int content_weight(int label) { return label == 0 ? 1 : label - 1; }

/// Sum of g(label) over every face inside at least one loop, i.e. every face
/// but the outer one, with g(0) = 1 and g(c) = c - 1.
inline int content(const TraceDiagram& t) {
    if (t.labels.at(detail::at(t.outer_face)) != 0) throw std::logic_error("outer face of a trace diagram is labelled");
    int c = 0;
    for (std::size_t f = 0; f < t.labels.size(); ++f)
        if (static_cast<int>(f) != t.outer_face) c += content_weight(t.labels[f]);
    return c;
}

/// delta-exponent of the diagrammatic trace.
inline int tau_bullet(const ScaledDiagram& d) { return d.delta_exp + content(close(d.diagram)); }

/// Adds a propagating strand on the right: rank n -> n+1.
inline PillarDiagram iota(const PillarDiagram& d) {
    const int n = d.rank(), m = 2 * n, m1 = m + 2;
    auto lift = [&](int p) { return p < n ? p : p + 2; };
    std::vector<int> match(detail::at(m1));
    for (int p = 0; p < m; ++p) match[detail::at(lift(p))] = lift(d.matching()[detail::at(p)]);
    match[detail::at(n)] = n + 1;
    match[detail::at(n + 1)] = n;
    const int fresh = d.face_count();
    std::vector<int> gap(detail::at(m1));
    for (int j = 0; j < m; ++j) {
        if (j == n - 1) continue;
        gap[detail::at(lift(j))] = d.gap_faces()[detail::at(j)];
    }
    gap[detail::at(n - 1)] = d.gap_faces()[detail::at(n - 1)];
    gap[detail::at(n + 1)] = d.gap_faces()[detail::at(n - 1)];
    gap[detail::at(n)] = fresh;
    std::vector<int> labels = d.labels();
    labels.push_back(0);
    return DiagramBuilder::assemble(n + 1, std::move(match), gap, labels, d.loops());
}

/// 1 iff tau_bullet(rho(b_x b_{y^-1})) = delta^{n-1}.
inline int mu_tilde_diagrammatic(const CoxeterGraph& g, const FCElement& x, const FCElement& y) {
    const int n = g.rank();
    ScaledDiagram d = compose(rho(x.word(), n), rho(inverse(g, y).word(), n));
    return tau_bullet(d) == n - 1 ? 1 : 0;
}

/// Plain-text rendering for terminals.
inline std::string render_ascii(const ScaledDiagram& sd) {
    const PillarDiagram& d = sd.diagram;
    const int n = d.rank(), m = 2 * n;
    auto marked = [](int p) { return p + 1; };
    auto orient = d.orientations();
    std::ostringstream os;
    os << "pillar diagram, rank " << n << ", scalar delta^" << sd.delta_exp << "\n";
    os << "  top    :";
    for (int p = 0; p < n; ++p) os << ' ' << (marked(p) < 10 ? " " : "") << marked(p);
    os << "\n  bottom :";
    for (int x = 1; x <= n; ++x) os << ' ' << (marked(m - x) < 10 ? " " : "") << marked(m - x);
    os << "\n  arcs   :";
    for (int p = 0; p < m; ++p) {
        int q = d.matching()[detail::at(p)];
        if (q < p) continue;
        os << ' ' << marked(p) << (d.is_propagating(p) ? "|" : "-") << marked(q);
    }
    os << "\n  faces  :";
    for (int f = 0; f < d.face_count(); ++f) {
        os << " [" << f << (orient[detail::at(f)] == Orientation::Clockwise ? " cw" : " acw");
        if (d.label(f) != 0) os << " label " << d.label(f);
        os << "]";
    }
    os << "\n  strip  :";
    // label of each region between consecutive top points, left wall to right wall
    for (int x = 0; x <= n; ++x) {
        int f = d.gap_faces()[detail::at(x == 0 ? m - 1 : x - 1)];
        os << ' ' << (d.label(f) ? std::to_string(d.label(f)) : ".");
        if (x < n) os << (d.is_propagating(x) ? " |" : " ^");
    }
    os << "\n";
    if (!d.loops().empty()) {
        os << "  loops  :";
        for (const auto& l : d.loops()) os << " (in " << l.inner << ", out " << l.outer << ")";
        os << "\n";
    }
    return os.str();
}

}  // namespace tle
