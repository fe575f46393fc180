#include "frontal/singular_set.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <utility>

namespace frontal {

namespace {

int sign_of(double lambda) {
    if (std::abs(lambda) <= kSingularTol) return 0;
    return lambda > 0.0 ? 1 : -1;
}

double lambda_at(const FrontalSurface& s, double u, double v) {
    return invariant_frame(s, u, v).lambda;
}

// Bisects a strict sign change down to |lambda| < 1e-10.
Vec2 refine_crossing(const FrontalSurface& s, Vec2 a, double fa, Vec2 b) {
    for (int iter = 0; iter < 200; ++iter) {
        const Vec2 mid = 0.5 * (a + b);
        const double fm = lambda_at(s, mid.x(), mid.y());
        if (std::abs(fm) < 1e-10) return mid;
        if ((fa < 0.0) != (fm < 0.0)) {
            b = mid;
        } else {
            a = mid;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

using Key = std::pair<std::int64_t, std::int64_t>;

Key quantize(const Vec2& p) {
    return {static_cast<std::int64_t>(std::llround(p.x() * 1e9)),
            static_cast<std::int64_t>(std::llround(p.y() * 1e9))};
}

struct Segment {
    Vec2 a, b;
};

}  // namespace

std::vector<std::vector<Vec2>> singular_set(const FrontalSurface& s, int nu, int nv) {
    if (nu < 16 || nv < 16) throw PreconditionFailed("singular set extraction needs a grid >= 16x16");

    const double du = (s.domain.u1 - s.domain.u0) / (nu - 1);
    const double dv = (s.domain.v1 - s.domain.v0) / (nv - 1);
    std::vector<double> values(static_cast<std::size_t>(nu) * nv);
    auto val = [&](int i, int k) -> double& { return values[static_cast<std::size_t>(i) * nv + k]; };
    for (int i = 0; i < nu; ++i)
        for (int k = 0; k < nv; ++k)
            val(i, k) = lambda_at(s, s.domain.u0 + i * du, s.domain.v0 + k * dv);

    std::vector<Segment> segments;
    auto point = [&](int i, int k) { return Vec2(s.domain.u0 + i * du, s.domain.v0 + k * dv); };

    for (int i = 0; i + 1 < nu; ++i) {
        for (int k = 0; k + 1 < nv; ++k) {
            struct Corner {
                Vec2 p;
                double f;
                int s;
            };
            const Corner c00{point(i, k), val(i, k), sign_of(val(i, k))};
            const Corner c10{point(i + 1, k), val(i + 1, k), sign_of(val(i + 1, k))};
            const Corner c01{point(i, k + 1), val(i, k + 1), sign_of(val(i, k + 1))};
            const Corner c11{point(i + 1, k + 1), val(i + 1, k + 1), sign_of(val(i + 1, k + 1))};

            const Corner* edges[4][2] = {
                {&c00, &c10}, {&c10, &c11}, {&c01, &c11}, {&c00, &c01}};

            std::vector<Vec2> crossings;
            std::vector<Key> seen;
            auto add_crossing = [&](const Vec2& p) {
                const Key key = quantize(p);
                for (const Key& k2 : seen)
                    if (k2 == key) return;
                seen.push_back(key);
                crossings.push_back(p);
            };
            // Edge index of each crossing, for ambiguous-cell pairing.
            std::vector<int> edge_of;

            for (int e = 0; e < 4; ++e) {
                const Corner& a = *edges[e][0];
                const Corner& b = *edges[e][1];
                if (a.s == 0 && b.s == 0) {
                    // A whole edge inside the singular set.
                    segments.push_back({a.p, b.p});
                    continue;
                }
                const std::size_t before = crossings.size();
                if (a.s == 0)
                    add_crossing(a.p);
                else if (b.s == 0)
                    add_crossing(b.p);
                else if (a.s * b.s < 0)
                    add_crossing(refine_crossing(s, a.p, a.f, b.p));
                if (crossings.size() > before) edge_of.push_back(e);
            }

            if (crossings.size() == 2) {
                segments.push_back({crossings[0], crossings[1]});
            } else if (crossings.size() == 4 && edge_of.size() == 4) {
                // Saddle cell: the center sample decides the pairing.
                const Vec2 center = 0.25 * (c00.p + c10.p + c01.p + c11.p);
                const int cs = sign_of(lambda_at(s, center.x(), center.y()));
                // edge order above: 0 bottom, 1 right, 2 top, 3 left
                if (cs == c00.s) {
                    segments.push_back({crossings[0], crossings[1]});  // bottom-right
                    segments.push_back({crossings[2], crossings[3]});  // top-left
                } else {
                    segments.push_back({crossings[0], crossings[3]});  // bottom-left
                    segments.push_back({crossings[1], crossings[2]});  // right-top
                }
            }
        }
    }

    // Adjacent cells both report a shared on-set edge; keep one copy and
    // drop zero-length segments before stitching.
    {
        std::map<std::pair<Key, Key>, bool> seen;
        std::vector<Segment> unique;
        for (const Segment& seg : segments) {
            const Key ka = quantize(seg.a);
            const Key kb = quantize(seg.b);
            if (ka == kb) continue;
            const auto key = ka < kb ? std::make_pair(ka, kb) : std::make_pair(kb, ka);
            if (!seen.emplace(key, true).second) continue;
            unique.push_back(seg);
        }
        segments.swap(unique);
    }

    // Stitch segments that share endpoints into polylines.
    std::map<Key, std::vector<std::size_t>> at_point;
    for (std::size_t idx = 0; idx < segments.size(); ++idx) {
        at_point[quantize(segments[idx].a)].push_back(idx);
        at_point[quantize(segments[idx].b)].push_back(idx);
    }

    std::vector<bool> used(segments.size(), false);
    std::vector<std::vector<Vec2>> polylines;

    auto walk = [&](std::size_t start, bool from_a) {
        std::vector<Vec2> line;
        std::size_t idx = start;
        Vec2 tail = from_a ? segments[idx].a : segments[idx].b;
        line.push_back(tail);
        for (;;) {
            used[idx] = true;
            const Vec2 next =
                quantize(segments[idx].a) == quantize(tail) ? segments[idx].b : segments[idx].a;
            line.push_back(next);
            tail = next;
            const auto& cands = at_point[quantize(tail)];
            std::size_t follow = segments.size();
            for (std::size_t c : cands)
                if (!used[c]) {
                    follow = c;
                    break;
                }
            if (follow == segments.size()) break;
            idx = follow;
        }
        return line;
    };

    // Open chains first (endpoints of degree one), then remaining loops.
    for (std::size_t idx = 0; idx < segments.size(); ++idx) {
        if (used[idx]) continue;
        const bool a_open = at_point[quantize(segments[idx].a)].size() == 1;
        const bool b_open = at_point[quantize(segments[idx].b)].size() == 1;
        if (a_open || b_open) polylines.push_back(walk(idx, a_open));
    }
    for (std::size_t idx = 0; idx < segments.size(); ++idx)
        if (!used[idx]) polylines.push_back(walk(idx, true));

    return polylines;
}

void assert_proper_frontal(const FrontalSurface& s, int nu, int nv) {
    const double du = (s.domain.u1 - s.domain.u0) / (nu - 1);
    const double dv = (s.domain.v1 - s.domain.v0) / (nv - 1);
    std::vector<double> values(static_cast<std::size_t>(nu) * nv);
    for (int i = 0; i < nu; ++i)
        for (int k = 0; k < nv; ++k)
            values[static_cast<std::size_t>(i) * nv + k] =
                lambda_at(s, s.domain.u0 + i * du, s.domain.v0 + k * dv);

    auto singular = [&](int i, int k) {
        return std::abs(values[static_cast<std::size_t>(i) * nv + k]) <= kSingularTol;
    };
    for (int i = 0; i + 1 < nu; ++i) {
        for (int k = 0; k + 1 < nv; ++k) {
            if (!singular(i, k) || !singular(i + 1, k) || !singular(i, k + 1) ||
                !singular(i + 1, k + 1))
                continue;
            const double uc = s.domain.u0 + (i + 0.5) * du;
            const double vc = s.domain.v0 + (k + 0.5) * dv;
            if (std::abs(lambda_at(s, uc, vc)) <= kSingularTol)
                throw NotProperFrontal("a full grid cell of singular points was detected");
        }
    }
}

}  // namespace frontal
