#include "frontal/classify.hpp"

namespace frontal {

const char* front_type_name(FrontType t) {
    switch (t) {
        case FrontType::Regular: return "regular";
        case FrontType::FrontRank1: return "front-rank1";
        case FrontType::FrontRank0: return "front-rank0";
        case FrontType::NonFrontSingularity: return "non-front-singularity";
    }
    return "unknown";
}

int dx_rank(const Mat32& dx, double tol) {
    Eigen::JacobiSVD<Mat32> svd(dx);
    int rank = 0;
    for (int i = 0; i < 2; ++i)
        if (svd.singularValues()(i) > tol) ++rank;
    return rank;
}

SingularityReport classify_singularity(const FrontalSurface& s, double u, double v) {
    if (!s.domain.contains(u, v)) throw PreconditionFailed("classification point outside domain");
    const InvariantFrame f = invariant_frame(s, u, v);

    SingularityReport r;
    r.u = u;
    r.v = v;
    r.H_rel = f.H_rel;
    r.K_rel = f.K_rel;
    r.lambda = f.lambda;
    r.is_singular = f.is_singular();
    r.rank = dx_rank(f.Dx);

    if (!r.is_singular) {
        r.front_type = FrontType::Regular;
    } else if (r.rank == 1 && std::abs(f.H_rel) > kFrontTol) {
        r.front_type = FrontType::FrontRank1;
    } else if (r.rank == 0 && std::abs(f.H_rel) <= kFrontTol && std::abs(f.K_rel) > kFrontTol) {
        r.front_type = FrontType::FrontRank0;
    } else {
        r.front_type = FrontType::NonFrontSingularity;
    }
    return r;
}

}  // namespace frontal
