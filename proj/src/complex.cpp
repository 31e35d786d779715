#include "homplex/complex.hpp"

#include "homplex/lp.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_set>

namespace homplex {

std::size_t face_budget() {
    if (const char* env = std::getenv("HOMPLEX_BUDGET")) {
        try {
            return static_cast<std::size_t>(std::stoull(env));
        } catch (const std::exception&) {
            throw std::invalid_argument("HOMPLEX_BUDGET is not a number");
        }
    }
    return 5'000'000;
}

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<VertexSet> facets) : vertex_count_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("SimplicialComplex: negative vertex count");
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (int v : f)
            if (v < 0 || v >= vertex_count) throw std::invalid_argument("SimplicialComplex: vertex out of range");
    }
    std::erase_if(facets, [](const VertexSet& f) { return f.empty(); });
    std::sort(facets.begin(), facets.end(), [](const VertexSet& a, const VertexSet& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

    // Larger facets come first, so a facet is kept iff no kept facet contains it.
    std::vector<std::vector<std::size_t>> containing(static_cast<std::size_t>(vertex_count));
    std::vector<Bitset> kept_bits;
    for (auto& f : facets) {
        const auto* shortest = &containing[static_cast<std::size_t>(f.front())];
        for (int v : f)
            if (containing[static_cast<std::size_t>(v)].size() < shortest->size())
                shortest = &containing[static_cast<std::size_t>(v)];
        Bitset bits = to_bitset(f, vertex_count);
        bool dominated = false;
        for (auto k : *shortest)
            if (bits.is_subset_of(kept_bits[k])) {
                dominated = true;
                break;
            }
        if (dominated) continue;
        for (int v : f) containing[static_cast<std::size_t>(v)].push_back(facets_.size());
        kept_bits.push_back(std::move(bits));
        facets_.push_back(std::move(f));
    }
    std::sort(facets_.begin(), facets_.end());
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

bool SimplicialComplex::contains(const VertexSet& face) const {
    if (face.empty()) return !facets_.empty();
    for (const auto& f : facets_)
        if (std::includes(f.begin(), f.end(), face.begin(), face.end())) return true;
    return false;
}

namespace {

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int v : s) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
        return h;
    }
};

}  // namespace

std::vector<std::vector<VertexSet>> SimplicialComplex::faces_by_dimension(std::size_t budget) const {
    const int dim = dimension();
    std::vector<std::unordered_set<VertexSet, VertexSetHash>> seen(static_cast<std::size_t>(dim + 1));
    std::size_t total = 0;
    VertexSet face;
    for (const auto& f : facets_) {
        const std::size_t n = f.size();
        if (n >= 63) throw BudgetExceeded("facet too large to enumerate faces");
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            face.clear();
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) face.push_back(f[i]);
            if (seen[face.size() - 1].insert(face).second && ++total > budget)
                throw BudgetExceeded("face budget of " + std::to_string(budget) + " exceeded");
        }
    }
    std::vector<std::vector<VertexSet>> out(seen.size());
    for (std::size_t d = 0; d < seen.size(); ++d) {
        out[d].assign(seen[d].begin(), seen[d].end());
        std::sort(out[d].begin(), out[d].end());
    }
    return out;
}

SimplicialComplex full_simplex(int n) {
    VertexSet all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    return SimplicialComplex(n, {all});
}

SimplicialComplex simplex_boundary(int n) {
    std::vector<VertexSet> facets;
    for (int skip = 0; skip < n; ++skip) {
        VertexSet f;
        for (int i = 0; i < n; ++i)
            if (i != skip) f.push_back(i);
        facets.push_back(f);
    }
    return SimplicialComplex(n, facets);
}

std::vector<std::size_t> f_vector(const SimplicialComplex& k, std::size_t budget) {
    std::vector<std::size_t> out;
    for (const auto& faces : k.faces_by_dimension(budget)) out.push_back(faces.size());
    return out;
}

namespace {

void subsets_of_size(const VertexSet& f, std::size_t size, std::size_t start, VertexSet& cur, std::vector<VertexSet>& out) {
    if (cur.size() == size) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i + (size - cur.size()) <= f.size(); ++i) {
        cur.push_back(f[i]);
        subsets_of_size(f, size, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

SimplicialComplex skeleton(const SimplicialComplex& k, int d) {
    if (d < 0) throw std::invalid_argument("skeleton: negative dimension");
    std::vector<VertexSet> facets;
    for (const auto& f : k.facets()) {
        if (static_cast<int>(f.size()) <= d + 1) {
            facets.push_back(f);
            continue;
        }
        VertexSet cur;
        subsets_of_size(f, static_cast<std::size_t>(d + 1), 0, cur, facets);
    }
    return SimplicialComplex(k.vertex_count(), std::move(facets));
}

bool is_subcomplex(const SimplicialComplex& a, const SimplicialComplex& b) {
    return std::all_of(a.facets().begin(), a.facets().end(), [&](const VertexSet& f) { return b.contains(f); });
}

int LabelTuple::dimension() const {
    int total = 0;
    for (const auto& p : parts) total += static_cast<int>(p.size());
    return mode == LabelMode::hom ? total - static_cast<int>(parts.size()) : total - 1;
}

bool LabelTuple::all_nonempty() const {
    return std::none_of(parts.begin(), parts.end(), [](const VertexSet& p) { return p.empty(); });
}

std::vector<LabelTuple> faces_of_cell(const LabelTuple& t) {
    if (t.mode == LabelMode::hom && !t.all_nonempty()) throw std::invalid_argument("faces_of_cell: empty part in hom mode");
    std::vector<std::vector<VertexSet>> choices;
    for (const auto& p : t.parts) {
        if (p.size() >= 31) throw BudgetExceeded("faces_of_cell: part too large");
        std::vector<VertexSet> subs;
        const std::uint32_t start = t.mode == LabelMode::hom ? 1 : 0;
        for (std::uint32_t mask = start; mask < (1u << p.size()); ++mask) {
            VertexSet s;
            for (std::size_t i = 0; i < p.size(); ++i)
                if (mask >> i & 1) s.push_back(p[i]);
            subs.push_back(std::move(s));
        }
        choices.push_back(std::move(subs));
    }
    std::vector<LabelTuple> out;
    std::vector<std::size_t> idx(choices.size(), 0);
    for (;;) {
        LabelTuple f{{}, t.mode};
        bool all_empty = true;
        for (std::size_t i = 0; i < choices.size(); ++i) {
            f.parts.push_back(choices[i][idx[i]]);
            if (!f.parts.back().empty()) all_empty = false;
        }
        if (!all_empty) out.push_back(std::move(f));
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
        if (i == idx.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

ProjectedCell make_projected_cell(std::vector<VertexSet> parts, int h) {
    ProjectedCell cell;
    for (auto& p : parts) {
        if (p.empty()) throw std::invalid_argument("make_projected_cell: empty part");
        for (int v : p)
            if (v < 0 || v >= h) throw std::invalid_argument("make_projected_cell: vertex out of range");
    }
    std::sort(parts.begin(), parts.end());
    cell.parts = std::move(parts);

    std::vector<std::size_t> idx(cell.parts.size(), 0);
    for (;;) {
        Point p(static_cast<std::size_t>(h), 0);
        for (std::size_t i = 0; i < idx.size(); ++i) ++p[static_cast<std::size_t>(cell.parts[i][idx[i]])];
        cell.points.push_back(std::move(p));
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == cell.parts[i].size()) idx[i++] = 0;
        if (i == idx.size()) break;
    }
    std::sort(cell.points.begin(), cell.points.end());

    bool disjoint = true;
    for (std::size_t i = 0; i < cell.parts.size() && disjoint; ++i)
        for (std::size_t j = i + 1; j < cell.parts.size(); ++j) {
            VertexSet common;
            std::set_intersection(cell.parts[i].begin(), cell.parts[i].end(), cell.parts[j].begin(),
                                  cell.parts[j].end(), std::back_inserter(common));
            if (!common.empty()) {
                disjoint = false;
                break;
            }
        }
    if (disjoint) {
        cell.vertices = cell.points;
    } else {
        std::vector<Point> distinct = cell.points;
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<RationalVector> pts;
        for (const auto& p : distinct) pts.push_back(to_rational(p));
        auto flags = hull_vertex_flags(pts);
        for (std::size_t i = 0; i < flags.size(); ++i)
            if (flags[i]) cell.vertices.push_back(distinct[i]);
    }
    return cell;
}

namespace {

bool nonnegative(const std::vector<Point>& pts) {
    for (const auto& p : pts)
        for (auto x : p)
            if (x < 0) return false;
    return true;
}

// Drops points that cannot take part in a common point of two nonnegative hulls.
void support_filter(std::vector<Point>& p, std::vector<Point>& q) {
    if (p.empty() || q.empty()) return;
    const std::size_t d = p.front().size();
    auto support_union = [d](const std::vector<Point>& pts) {
        std::vector<bool> s(d, false);
        for (const auto& x : pts)
            for (std::size_t i = 0; i < d; ++i)
                if (x[i] != 0) s[i] = true;
        return s;
    };
    auto keep_inside = [d](std::vector<Point>& pts, const std::vector<bool>& s) {
        const auto before = pts.size();
        std::erase_if(pts, [&](const Point& x) {
            for (std::size_t i = 0; i < d; ++i)
                if (x[i] != 0 && !s[i]) return true;
            return false;
        });
        return pts.size() != before;
    };
    for (;;) {
        bool changed = keep_inside(p, support_union(q));
        changed = keep_inside(q, support_union(p)) || changed;
        if (!changed || p.empty() || q.empty()) return;
    }
}

std::vector<Point> points_of_face(const std::vector<Point>& verts, const std::vector<int>& subset) {
    std::vector<RationalVector> pts;
    for (const auto& v : verts) pts.push_back(to_rational(v));
    std::vector<Point> out;
    for (int i : smallest_face_containing(pts, subset)) out.push_back(verts[static_cast<std::size_t>(i)]);
    return out;
}

int index_of(const std::vector<Point>& sorted, const Point& p) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), p);
    if (it == sorted.end() || *it != p) return -1;
    return static_cast<int>(it - sorted.begin());
}

}  // namespace

bool intersect_properly(const ProjectedCell& pc, const ProjectedCell& qc, BadPair* witness) {
    if (pc.vertices.empty() || qc.vertices.empty()) return true;
    const std::size_t d = pc.vertices.front().size();
    if (qc.vertices.front().size() != d) throw std::invalid_argument("common_face_test: dimension mismatch");

    std::vector<Point> p = pc.vertices, q = qc.vertices;
    if (nonnegative(p) && nonnegative(q)) support_filter(p, q);
    if (p.empty() || q.empty()) return true;

    // Variables: lambda over p then mu over q.
    const std::size_t np = p.size(), nq = q.size();
    std::vector<std::vector<Rational>> a(d + 2, std::vector<Rational>(np + nq));
    std::vector<Rational> b(d + 2, Rational(0));
    for (std::size_t j = 0; j < np; ++j) {
        for (std::size_t i = 0; i < d; ++i) a[i][j] = static_cast<long>(p[j][i]);
        a[d][j] = 1;
    }
    for (std::size_t j = 0; j < nq; ++j) {
        for (std::size_t i = 0; i < d; ++i) a[i][np + j] = -static_cast<long>(q[j][i]);
        a[d + 1][np + j] = 1;
    }
    b[d] = 1;
    b[d + 1] = 1;
    auto ri = relative_interior(a, b);
    if (!ri) return true;

    std::vector<Point> used_p, used_q;
    for (std::size_t j = 0; j < np; ++j)
        if (ri->support[j]) used_p.push_back(p[j]);
    for (std::size_t j = 0; j < nq; ++j)
        if (ri->support[np + j]) used_q.push_back(q[j]);
    if (used_p == used_q) return true;
    if (!witness) return false;

    // w = lambda - mu on the union of vertex lists is an affine dependency.
    std::vector<Point> pts = pc.vertices;
    pts.insert(pts.end(), qc.vertices.begin(), qc.vertices.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<Rational> w(pts.size(), Rational(0));
    for (std::size_t j = 0; j < np; ++j) w[static_cast<std::size_t>(index_of(pts, p[j]))] += ri->point[j];
    for (std::size_t j = 0; j < nq; ++j) w[static_cast<std::size_t>(index_of(pts, q[j]))] -= ri->point[np + j];

    for (const auto& z : conformal_decomposition(pts, w)) {
        std::vector<int> zp, zq;
        for (int i : z.positive_support) zp.push_back(index_of(pc.vertices, pts[static_cast<std::size_t>(i)]));
        for (int i : z.negative_support) zq.push_back(index_of(qc.vertices, pts[static_cast<std::size_t>(i)]));
        if (points_of_face(pc.vertices, zp) != points_of_face(qc.vertices, zq)) {
            witness->points = std::move(pts);
            witness->witness = z;
            return false;
        }
    }
    throw std::logic_error("intersect_properly: no separating circuit in an improper intersection");
}

FaceVerdict common_face_test(std::span<const ProjectedCell> cells) {
    FaceVerdict verdict;
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = i + 1; j < cells.size(); ++j) {
            BadPair bad;
            if (!intersect_properly(cells[i], cells[j], &bad)) {
                bad.first = i;
                bad.second = j;
                verdict.is_complex = false;
                verdict.bad_pair = std::move(bad);
                return verdict;
            }
        }
    return verdict;
}

}  // namespace homplex
