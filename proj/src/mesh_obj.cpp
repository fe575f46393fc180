#include "frontal/mesh_obj.hpp"

#include <cstdio>
#include <fstream>

namespace frontal {

ObjCounts write_obj(const FrontalSurface& s, int nu, int nv, const std::string& path) {
    if (nu < 2 || nv < 2) throw PreconditionFailed("mesh grid must be at least 2x2");
    std::ofstream out(path);
    if (!out.is_open()) throw Error("cannot open " + path + " for writing");

    char line[256];
    for (int i = 0; i < nu; ++i) {
        const double u = s.domain.u0 + (s.domain.u1 - s.domain.u0) * i / (nu - 1);
        for (int k = 0; k < nv; ++k) {
            const double v = s.domain.v0 + (s.domain.v1 - s.domain.v0) * k / (nv - 1);
            const SurfaceJets j = s.jets(u, v);
            std::snprintf(line, sizeof(line), "v %.17g %.17g %.17g\n", j.x[0].f, j.x[1].f,
                          j.x[2].f);
            out << line;
        }
    }
    auto index = [nv](int i, int k) { return i * nv + k + 1; };
    for (int i = 0; i + 1 < nu; ++i) {
        for (int k = 0; k + 1 < nv; ++k) {
            std::snprintf(line, sizeof(line), "f %d %d %d\nf %d %d %d\n", index(i, k),
                          index(i + 1, k), index(i + 1, k + 1), index(i, k), index(i + 1, k + 1),
                          index(i, k + 1));
            out << line;
        }
    }
    return {nu * nv, 2 * (nu - 1) * (nv - 1)};
}

}  // namespace frontal
