#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "skelforge/rotation.hpp"

namespace skelforge {

struct DsiParams {
    double threshold = 0.15;  // radians; frame-to-frame distance that splits a unit motion
    double delta = 0.2;       // interpolation rate; normal intervals get ceil(1/delta) samples
    double eta = 10.0;        // interpolation coefficient; edges get int(eta*d/delta) samples
    int variants = 4;
    double noise_low = -0.02;   // uniform bounds of the per-component variant noise
    double noise_high = 0.02;
    std::uint64_t seed = 0;
    std::vector<double> spans{0.05, 0.2, 0.5};  // supersmoother candidate spans

    void validate() const;
};

// Partition of [0, F-1] into unit motions. kinds[k] describes the interval
// [boundaries[k], boundaries[k+1]]; edge intervals carry the over-threshold
// distance that created them.
struct SegmentBoundaries {
    enum class Kind { Normal, Edge };
    std::vector<std::size_t> boundaries;
    std::vector<Kind> kinds;
    std::vector<double> edge_distances;
};

// The V interpolated-and-smoothed sequences sharing one shape, plus the
// derived per-variant seeds for the index document.
struct AnimationSet {
    std::vector<RotationSequence> sequences;
    std::vector<std::uint64_t> variant_seeds;
};

// Weighted mean angular distance between two frames:
// (1/J) * sum_j w_j * 2*acos(|Re(q_a[j] * conj(q_b[j]))|), each term in [0, pi].
// Empty weights mean all ones.
double angular_distance(std::span<const Quat> frame_a, std::span<const Quat> frame_b,
                        std::span<const double> weights);

// distances[f] = angular_distance(frame f-1, frame f); distances[0] = 0.
std::vector<double> frame_distances(const RotationSequence& seq,
                                    std::span<const double> weights);

// Scans frame-to-frame distances; every over-threshold step closes the
// running normal interval and inserts the two-frame edge interval around the
// jump. A trailing normal interval always closes the sequence.
SegmentBoundaries segment(const RotationSequence& seq, const DsiParams& params,
                          std::span<const double> weights = {});

// n evenly spaced values over [a, b], endpoints included; n == 1 gives {a}.
std::vector<double> linespace(double a, double b, std::size_t n);

// Componentwise Lagrange polynomial through the control frames, evaluated at
// sample_times and renormalized per quaternion. Control times must be
// distinct and samples inside [min, max] (extrapolation refused). A
// pre-normalization norm below 0.5 signals hemisphere misalignment.
std::vector<std::vector<Quat>> lagrange_interpolate(
    std::span<const double> control_times, std::span<const std::vector<Quat>> control_frames,
    std::span<const double> sample_times);

// Plain (unnormalized) Lagrange evaluation, used for root positions.
std::vector<Vec3> lagrange_interpolate_points(std::span<const double> control_times,
                                              std::span<const Vec3> control_points,
                                              std::span<const double> sample_times);

struct DsiInterpolation {
    RotationSequence seq;
    std::vector<double> sample_times;  // source-frame coordinates of each output frame
    SegmentBoundaries segments;
    std::vector<std::size_t> samples_per_interval;
};

// Per-interval grids (normal: ceil(1/delta) samples, edge: int(eta*d/delta)
// clamped to at least 2), concatenated with shared endpoints deduplicated.
// Polynomial degree is capped at 7 by splitting long intervals into panels
// that share endpoints. fps is rescaled so total duration is preserved.
DsiInterpolation dsi_interpolate(const RotationSequence& seq, const DsiParams& params,
                                 std::span<const double> weights = {},
                                 Warnings* warnings = nullptr);

// V copies with independent uniform noise in [noise_low, noise_high] added to
// every quaternion component, renormalized and hemisphere-realigned. Variant
// v draws from sub_seed(params.seed, "variant", v), components in x,y,z,w
// order, joints inner loop, frames outer.
AnimationSet random_variants(const RotationSequence& seq, const DsiParams& params,
                             Warnings* warnings = nullptr);

// Friedman's variable-span smoother: local linear fits per candidate span,
// leave-one-out residuals (smoothed at the midrange span) pick the best span
// pointwise, the span choice is smoothed at the midrange span, and the output
// blends the two bracketing span fits. Series shorter than the smallest span
// window are returned unchanged with a warning.
std::vector<double> supersmooth(std::span<const double> series, std::span<const double> spans,
                                Warnings* warnings = nullptr);

// The pipeline tail: random_variants, then per-component supersmooth of every
// quaternion and root-position channel, renormalize, realign hemispheres.
// The `variants` subcommand runs exactly this, so chained stages reproduce
// dsi_pipeline byte for byte.
AnimationSet variants_and_smooth(const RotationSequence& seq, const DsiParams& params,
                                 Warnings* warnings = nullptr);

// dsi_interpolate followed by variants_and_smooth.
AnimationSet dsi_pipeline(const RotationSequence& seq, const DsiParams& params,
                          std::span<const double> weights = {}, Warnings* warnings = nullptr);

}  // namespace skelforge
