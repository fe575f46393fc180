#pragma once

#include <string>

#include "frontal/frame.hpp"

namespace frontal {

enum class FrontType { Regular, FrontRank1, FrontRank0, NonFrontSingularity };

const char* front_type_name(FrontType t);

struct SingularityReport {
    double u = 0.0, v = 0.0;
    int rank = 2;          // rank of Dx from its singular values
    bool is_singular = false;
    FrontType front_type = FrontType::Regular;
    double H_rel = 0.0;
    double K_rel = 0.0;
    double lambda = 0.0;
};

// Front iff, at a singular point, H_rel != 0 (rank 1) or H_rel = 0 and
// K_rel != 0 (rank 0); thresholded at kFrontTol.
SingularityReport classify_singularity(const FrontalSurface& s, double u, double v);

int dx_rank(const Mat32& dx, double tol = kSingularTol);

}  // namespace frontal
