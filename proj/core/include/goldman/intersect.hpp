#pragma once

#include "goldman/fuchsian.hpp"
#include "goldman/hplane.hpp"
#include "goldman/words.hpp"

#include <span>
#include <vector>

namespace goldman {

/// One transverse intersection point of the closed geodesics x(X), y(X),
/// named by a double coset <w_x> g <w_y>: the lift g.axis(rho(y)) crosses
/// axis(rho(x)) at `lift`. Several coincident surface points are kept
/// apart by their cosets, which is exactly the multiplicity-refined count.
struct TransversePoint {
    PointH lift;
    Word coset_rep;     // shortlex-least g found for this point
    int sign = 0;       // eps_P: orientation of (x-direction, y-direction)
    double angle = 0;   // forward angle phi_P in (0, pi)
    CyclicWord product; // class of x_P y_P = cyc(w_x . g w_y g^-1)
    double len_x = 0;
    double len_y = 0;
    int min_rep_len = 0;  // shortest ball word hitting this coset
};

struct BracketResult {
    FormalSum sum;
    std::vector<TransversePoint> points;
    int radius_used = 0;
    bool converged = false;
};

inline constexpr int kDefaultRadius = 8;
inline constexpr int kMinRadius = 4;
inline constexpr int kMaxRadius = 14;

/// All transverse intersection points of x(X) and y(X) visible in the
/// word ball of the given radius, one per double coset, sorted by coset
/// representative. Requires distinct primitive roots (up to inversion);
/// shared-root pairs belong to intersection_number.
std::vector<TransversePoint> transverse_points(const SurfaceRep& rep,
                                               const CyclicWord& x,
                                               const CyclicWord& y,
                                               int radius = kDefaultRadius);

/// Self-intersection points of a primitive class, each unordered crossing
/// counted once. The count is the self-intersection number of x.
std::vector<TransversePoint> self_intersection_points(const SurfaceRep& rep,
                                                      const CyclicWord& x,
                                                      int radius = kDefaultRadius);

/// Geometric intersection number i(x, y). Zero for empty, non-essential
/// or shared-primitive-root inputs; otherwise the transverse point count.
int intersection_number(const SurfaceRep& rep, const CyclicWord& x,
                        const CyclicWord& y, int radius = kDefaultRadius);

/// Goldman bracket [x, y] computed from geodesic representatives:
/// sum over transverse points of sign times the product class.
BracketResult goldman_bracket(const SurfaceRep& rep, const CyclicWord& x,
                              const CyclicWord& y, int radius = kDefaultRadius);

/// [x^m, y] for m >= 1: the same point set as (x, y), each term scaled by
/// m with the product class using x^m.
BracketResult bracket_power(const SurfaceRep& rep, const CyclicWord& x,
                            const CyclicWord& y, int m, int radius = kDefaultRadius);

/// [x^m, y^n] for m >= 1 and nonzero n (n < 0 reverses y), from one
/// enumeration of the (x, y) points.
BracketResult bracket_power_pair(const SurfaceRep& rep, const CyclicWord& x,
                                 const CyclicWord& y, int m, int n,
                                 int radius = kDefaultRadius);

/// [x^m, x] for primitive essential x and m >= 2, from the
/// self-intersection points: each unordered crossing S with branch
/// translations t1, t2 contributes m ( |t1^m t2| - |t2^m t1| ) with the
/// crossing sign.
FormalSum bracket_power_self(const SurfaceRep& rep, const CyclicWord& x, int m,
                             int radius = kDefaultRadius);

/// Point of minimal forward angle; ties broken by coset representative.
const TransversePoint& min_angle_point(std::span<const TransversePoint> points);

/// Terms of [x^m, y^n] assembled from an existing point set of (x, y).
FormalSum bracket_terms_from_points(const CyclicWord& x, const CyclicWord& y,
                                    std::span<const TransversePoint> points,
                                    int m, int n);

}  // namespace goldman
