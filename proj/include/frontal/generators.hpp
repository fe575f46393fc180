#pragma once

#include "frontal/surface.hpp"

namespace frontal {

// Frontal with extendable normal curvature from free functions b(u,v),
// h(u,v), l(u), r(u): x = (u, b, c) with c assembled from the closed
// derivative relations c_u = g1 + b_u g2, c_v = b_v g2 and an analytic
// B field, so extendability is checkable in analytic mode.
FrontalSurface gen_extendable_normal(ScalarField b, ScalarField h, ScalarField1 l, ScalarField1 r,
                                     Rect domain);

// Wavefront with a rank-1 singularity at the origin:
// y(w,z) = (w, int_0^z lam dt + f1, int_0^z t lam dt + f2), basis
// [y_w | (0,1,z)], so det Lambda = lam. Requires lam(0,0) = 0.
FrontalSurface gen_rank1_front(ScalarField lambda_hat, ScalarField1 f1, ScalarField1 f2,
                               Rect domain);

// Rank-1 wavefront from a single potential h:
// y = (u, -h_v, int_0^u (h_u - h_vu v) dt + int_0^v (-h_vv(0,t) t) dt),
// basis [[1,0],[0,1],[h_u, v]], det Lambda = -h_vv.
FrontalSurface gen_rank1_from_h(ScalarField h, Rect domain);

// Wavefront with identically vanishing Gaussian curvature:
// x = (u, u r1(v) + r2(v), int_0^v t (u r1' + r2') dt + u c1 + c2),
// a ruled strip. Requires r2'(0) = 0.
FrontalSurface gen_vanishing_k(ScalarField1 r1, ScalarField1 r2, double c1, double c2, Rect domain);

// Wavefronts with extendable Gaussian curvature, built through the
// rank-1 potential form with h solving h_uu + c h_vv = 0.
// Wave mode (c < 0): h = h1(v - sqrt(-c) u) + h2(v + sqrt(-c) u).
FrontalSurface gen_extendable_k_wave(double c, ScalarField1 h1, ScalarField1 h2, Rect domain);
// Laplace mode (c > 0): h = F(u, v/sqrt(c)) with F harmonic (verified on
// a grid; HarmonicityViolated otherwise).
FrontalSurface gen_extendable_k_laplace(double c, ScalarField f, Rect domain);

// Wavefront with a rank-0 singularity at the origin:
// y = (h_u, h_v, int_0^u (t h_uu + v h_vu) dt + int_0^v t h_vv(0,t) dt),
// basis [[1,0],[0,1],[u,v]], Lambda^T = Hess h. Requires the Hessian of h
// to vanish at the origin.
FrontalSurface gen_rank0_front(ScalarField h, Rect domain);

// Frontal with false singularities: x = y o m for an immersion y from a
// fixed catalog and a planar map m = (m1, m2). Basis Dy(m), Lambda^T =
// Dm, with the immersion's curvature data composed through m.
enum class ImmersionKind { Graph, Sphere };
FrontalSurface gen_false_singularity(ImmersionKind immersion, ScalarField phi, ScalarField m1,
                                     ScalarField m2, Rect domain);

// Adds w^2 to the third coordinate of a rank-1 front (and updates the
// basis), producing a wavefront with K_rel(0,0) != 0. Not idempotent:
// applying it twice adds 2 w^2.
FrontalSurface rank1_to_nonvanishing(const FrontalSurface& s);

}  // namespace frontal
