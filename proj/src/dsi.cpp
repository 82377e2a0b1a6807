#include "skelforge/dsi.hpp"

#include <algorithm>
#include <cmath>

#include "skelforge/rng.hpp"

namespace skelforge {

void DsiParams::validate() const {
    if (!(threshold >= 0.0)) throw ValidationError("dsi: threshold must be nonnegative");
    if (!(delta > 0.0 && delta <= 1.0)) throw ValidationError("dsi: delta must be in (0, 1]");
    if (!(eta > 0.0)) throw ValidationError("dsi: eta must be positive");
    if (variants < 1) throw ValidationError("dsi: variants must be at least 1");
    if (!(noise_low <= noise_high)) throw ValidationError("dsi: noise_low must be <= noise_high");
    if (spans.empty()) throw ValidationError("dsi: spans must be nonempty");
    for (double s : spans)
        if (!(s > 0.0 && s < 1.0)) throw ValidationError("dsi: spans must lie in (0, 1)");
}

double angular_distance(std::span<const Quat> frame_a, std::span<const Quat> frame_b,
                        std::span<const double> weights) {
    const std::size_t n = frame_a.size();
    if (frame_b.size() != n)
        throw ValidationError("angular_distance: joint count mismatch");
    if (!weights.empty() && weights.size() != n)
        throw ValidationError("angular_distance: weight count mismatch");
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const Quat rel = hamilton(frame_a[j], conj(frame_b[j]));
        // |Re| keeps the relative rotation in the canonical hemisphere so the
        // per-joint angle lies in [0, pi].
        const double re = std::min(1.0, std::abs(rel.w));
        const double w = weights.empty() ? 1.0 : weights[j];
        sum += w * 2.0 * std::acos(re);
    }
    return sum / static_cast<double>(n);
}

std::vector<double> frame_distances(const RotationSequence& seq,
                                    std::span<const double> weights) {
    std::vector<double> d(seq.frame_count(), 0.0);
    for (std::size_t f = 1; f < seq.frame_count(); ++f)
        d[f] = angular_distance(seq.frames[f], seq.frames[f - 1], weights);
    return d;
}

SegmentBoundaries segment(const RotationSequence& seq, const DsiParams& params,
                          std::span<const double> weights) {
    SegmentBoundaries out;
    const std::size_t frames = seq.frame_count();
    if (frames == 0) throw ValidationError("segment: empty sequence");
    out.boundaries.push_back(0);
    if (frames == 1) return out;

    const std::vector<double> d = frame_distances(seq, weights);
    std::size_t start = 0;
    for (std::size_t f = 1; f < frames; ++f) {
        if (d[f] <= params.threshold) continue;
        if (f - 1 > start) {
            out.boundaries.push_back(f - 1);
            out.kinds.push_back(SegmentBoundaries::Kind::Normal);
            out.edge_distances.push_back(0.0);
        }
        out.boundaries.push_back(f);
        out.kinds.push_back(SegmentBoundaries::Kind::Edge);
        out.edge_distances.push_back(d[f]);
        start = f;
    }
    if (start < frames - 1) {
        out.boundaries.push_back(frames - 1);
        out.kinds.push_back(SegmentBoundaries::Kind::Normal);
        out.edge_distances.push_back(0.0);
    }
    return out;
}

std::vector<double> linespace(double a, double b, std::size_t n) {
    if (n == 0) throw ValidationError("linespace: n must be at least 1");
    if (a > b) throw ValidationError("linespace: interval is reversed");
    std::vector<double> out;
    out.reserve(n);
    if (n == 1) {
        out.push_back(a);
        return out;
    }
    const double step = (b - a) / static_cast<double>(n - 1);
    for (std::size_t k = 0; k < n; ++k) out.push_back(a + step * static_cast<double>(k));
    out.back() = b;  // exact endpoint
    return out;
}

namespace {

std::vector<double> lagrange_weights(std::span<const double> times, double x) {
    const std::size_t n = times.size();
    std::vector<double> w(n, 1.0);
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t s = 0; s < n; ++s) {
            if (s == t) continue;
            const double denom = times[t] - times[s];
            if (denom == 0.0) throw ValidationError("lagrange: duplicate control times");
            w[t] *= (x - times[s]) / denom;
        }
    return w;
}

void check_sample_range(std::span<const double> times, std::span<const double> samples) {
    const auto [lo, hi] = std::minmax_element(times.begin(), times.end());
    for (double x : samples)
        if (x < *lo - 1e-12 || x > *hi + 1e-12)
            throw ValidationError("lagrange: sample outside the control interval (extrapolation refused)");
}

}  // namespace

std::vector<std::vector<Quat>> lagrange_interpolate(
    std::span<const double> control_times, std::span<const std::vector<Quat>> control_frames,
    std::span<const double> sample_times) {
    if (control_times.size() != control_frames.size() || control_times.empty())
        throw ValidationError("lagrange: control times/frames mismatch");
    check_sample_range(control_times, sample_times);
    const std::size_t joints = control_frames[0].size();

    std::vector<std::vector<Quat>> out;
    out.reserve(sample_times.size());
    for (double x : sample_times) {
        const std::vector<double> w = lagrange_weights(control_times, x);
        std::vector<Quat> frame(joints, Quat{0, 0, 0, 0});
        for (std::size_t t = 0; t < control_times.size(); ++t)
            for (std::size_t j = 0; j < joints; ++j)
                frame[j] = frame[j] + control_frames[t][j] * w[t];
        for (std::size_t j = 0; j < joints; ++j) {
            const double n = frame[j].norm();
            if (n < 0.5)
                throw RuntimeError("lagrange: sample norm below 0.5, control frames are "
                                   "hemisphere-misaligned");
            frame[j] = frame[j] * (1.0 / n);
        }
        out.push_back(std::move(frame));
    }
    return out;
}

std::vector<Vec3> lagrange_interpolate_points(std::span<const double> control_times,
                                              std::span<const Vec3> control_points,
                                              std::span<const double> sample_times) {
    if (control_times.size() != control_points.size() || control_times.empty())
        throw ValidationError("lagrange: control times/points mismatch");
    check_sample_range(control_times, sample_times);
    std::vector<Vec3> out;
    out.reserve(sample_times.size());
    for (double x : sample_times) {
        const std::vector<double> w = lagrange_weights(control_times, x);
        Vec3 p{0, 0, 0};
        for (std::size_t t = 0; t < control_times.size(); ++t) p += control_points[t] * w[t];
        out.push_back(p);
    }
    return out;
}

namespace {

constexpr std::size_t kMaxLagrangeNodes = 8;  // degree cap 7 against Runge oscillation

// Splits the integer node range [a, b] into panels of at most
// kMaxLagrangeNodes nodes sharing endpoints.
std::vector<std::pair<std::size_t, std::size_t>> panels_for(std::size_t a, std::size_t b) {
    std::vector<std::pair<std::size_t, std::size_t>> panels;
    std::size_t s = a;
    while (true) {
        const std::size_t e = std::min(b, s + kMaxLagrangeNodes - 1);
        panels.emplace_back(s, e);
        if (e >= b) break;
        s = e;
    }
    return panels;
}

}  // namespace

DsiInterpolation dsi_interpolate(const RotationSequence& seq, const DsiParams& params,
                                 std::span<const double> weights, Warnings* warnings) {
    params.validate();
    const std::size_t frames = seq.frame_count();
    if (frames < 2) throw ValidationError("dsi_interpolate: need at least 2 frames");
    if (!is_hemisphere_continuous(seq))
        throw ValidationError("dsi_interpolate: input is not hemisphere-continuous");

    DsiInterpolation out;
    out.segments = segment(seq, params, weights);
    const auto& segs = out.segments;

    const std::size_t normal_samples =
        std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(1.0 / params.delta)));

    // Concatenated sample grid, dropping the shared endpoint of adjacent
    // intervals.
    for (std::size_t k = 0; k + 1 < segs.boundaries.size(); ++k) {
        const double a = static_cast<double>(segs.boundaries[k]);
        const double b = static_cast<double>(segs.boundaries[k + 1]);
        std::size_t n = normal_samples;
        if (segs.kinds[k] == SegmentBoundaries::Kind::Edge) {
            // Truncation with a guard so counts that are integers up to
            // rounding noise do not drop a sample.
            n = static_cast<std::size_t>(
                std::floor(params.eta * segs.edge_distances[k] / params.delta + 1e-9));
            if (n < 2) {
                warn(warnings, "dsi_interpolate: edge sample count below 2 at interval [" +
                                   std::to_string(segs.boundaries[k]) + ", " +
                                   std::to_string(segs.boundaries[k + 1]) + "], clamped");
                n = 2;
            }
        }
        const std::vector<double> grid = linespace(a, b, n);
        const std::size_t skip = out.sample_times.empty() ? 0 : 1;  // shared endpoint
        out.sample_times.insert(out.sample_times.end(), grid.begin() + skip, grid.end());
        out.samples_per_interval.push_back(n);
    }

    out.seq.fps = seq.fps;
    out.seq.frames.reserve(out.sample_times.size());
    out.seq.root_positions.reserve(out.sample_times.size());

    // Evaluate piecewise over panels of the enclosing interval.
    std::size_t interval = 0;
    for (double x : out.sample_times) {
        while (interval + 2 < segs.boundaries.size() &&
               x > static_cast<double>(segs.boundaries[interval + 1]))
            ++interval;
        const std::size_t a = segs.boundaries[interval];
        const std::size_t b = segs.boundaries[interval + 1];
        const auto panels = panels_for(a, b);
        std::size_t chosen = panels.size() - 1;
        for (std::size_t p = 0; p < panels.size(); ++p)
            if (x <= static_cast<double>(panels[p].second)) {
                chosen = p;
                break;
            }
        const auto [pa, pb] = panels[chosen];
        std::vector<double> times;
        std::vector<std::vector<Quat>> ctrl;
        std::vector<Vec3> roots;
        for (std::size_t t = pa; t <= pb; ++t) {
            times.push_back(static_cast<double>(t));
            ctrl.push_back(seq.frames[t]);
            roots.push_back(seq.root_positions[t]);
        }
        const double sample[1] = {x};
        out.seq.frames.push_back(lagrange_interpolate(times, ctrl, sample).front());
        out.seq.root_positions.push_back(
            lagrange_interpolate_points(times, roots, sample).front());
    }

    // Densifying should not retime: keep the total duration.
    const std::size_t out_frames = out.seq.frame_count();
    if (out_frames >= 2)
        out.seq.fps = seq.fps * static_cast<double>(out_frames - 1) / static_cast<double>(frames - 1);
    align_hemisphere(out.seq);
    return out;
}

AnimationSet random_variants(const RotationSequence& seq, const DsiParams& params,
                             Warnings* warnings) {
    params.validate();
    AnimationSet out;
    constexpr int kMaxRetries = 16;
    for (int v = 0; v < params.variants; ++v) {
        const std::uint64_t vseed = sub_seed(params.seed, "variant", static_cast<std::uint64_t>(v));
        Rng rng(vseed);
        RotationSequence variant = seq;
        for (auto& frame : variant.frames) {
            for (auto& q : frame) {
                int attempt = 0;
                for (;; ++attempt) {
                    if (attempt >= kMaxRetries)
                        throw RuntimeError("random_variants: perturbed quaternion kept "
                                           "collapsing below norm 0.5");
                    const double nx = rng.uniform(params.noise_low, params.noise_high);
                    const double ny = rng.uniform(params.noise_low, params.noise_high);
                    const double nz = rng.uniform(params.noise_low, params.noise_high);
                    const double nw = rng.uniform(params.noise_low, params.noise_high);
                    if (nx == 0.0 && ny == 0.0 && nz == 0.0 && nw == 0.0) break;
                    const Quat perturbed{q.x + nx, q.y + ny, q.z + nz, q.w + nw};
                    const double norm = perturbed.norm();
                    if (norm < 0.5) {
                        warn(warnings, "random_variants: resampling a collapsed quaternion");
                        continue;
                    }
                    q = perturbed * (1.0 / norm);
                    break;
                }
            }
        }
        align_hemisphere(variant);
        out.sequences.push_back(std::move(variant));
        out.variant_seeds.push_back(vseed);
    }
    return out;
}

namespace {

struct LinearFit {
    double value = 0.0;
    bool ok = false;
};

// Least-squares line over series[lo..hi], optionally excluding one index,
// evaluated at x = at.
LinearFit fit_line(std::span<const double> series, std::size_t lo, std::size_t hi,
                   std::ptrdiff_t exclude, double at) {
    double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = lo; i <= hi; ++i) {
        if (static_cast<std::ptrdiff_t>(i) == exclude) continue;
        const double x = static_cast<double>(i);
        sw += 1.0;
        sx += x;
        sy += series[i];
        sxx += x * x;
        sxy += x * series[i];
    }
    LinearFit f;
    if (sw < 2.0) return f;
    const double det = sw * sxx - sx * sx;
    if (std::abs(det) < 1e-12) {
        f.value = sy / sw;
        f.ok = true;
        return f;
    }
    const double slope = (sw * sxy - sx * sy) / det;
    const double intercept = (sy - slope * sx) / sw;
    f.value = intercept + slope * at;
    f.ok = true;
    return f;
}

std::size_t half_window(double span, std::size_t n) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(span * static_cast<double>(n) / 2.0));
}

// Running local-linear smooth at one span.
std::vector<double> smooth_at_span(std::span<const double> series, double span) {
    const std::size_t n = series.size();
    const std::size_t h = half_window(span, n);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i >= h ? i - h : 0;
        const std::size_t hi = std::min(n - 1, i + h);
        out[i] = fit_line(series, lo, hi, -1, static_cast<double>(i)).value;
    }
    return out;
}

}  // namespace

std::vector<double> supersmooth(std::span<const double> series, std::span<const double> spans,
                                Warnings* warnings) {
    if (spans.empty()) throw ValidationError("supersmooth: spans must be nonempty");
    for (double s : spans)
        if (!(s > 0.0 && s < 1.0)) throw ValidationError("supersmooth: spans must lie in (0, 1)");

    const std::size_t n = series.size();
    std::vector<double> sorted(spans.begin(), spans.end());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t min_window = 2 * half_window(sorted.front(), n) + 1;
    if (n < 5 || n < min_window) {
        warn(warnings, "supersmooth: series shorter than the smallest span window, "
                       "returned unchanged");
        return {series.begin(), series.end()};
    }
    const double midspan = sorted[sorted.size() / 2];

    // Per-span smooths and leave-one-out cross-validation residuals.
    std::vector<std::vector<double>> smooths(sorted.size());
    std::vector<std::vector<double>> cv(sorted.size(), std::vector<double>(n, 0.0));
    for (std::size_t s = 0; s < sorted.size(); ++s) {
        const std::size_t h = half_window(sorted[s], n);
        smooths[s].resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t lo = i >= h ? i - h : 0;
            const std::size_t hi = std::min(n - 1, i + h);
            smooths[s][i] = fit_line(series, lo, hi, -1, static_cast<double>(i)).value;
            const LinearFit loo =
                fit_line(series, lo, hi, static_cast<std::ptrdiff_t>(i), static_cast<double>(i));
            cv[s][i] = loo.ok ? std::abs(series[i] - loo.value) : 0.0;
        }
        // Smoothed residuals give a stable pointwise quality estimate.
        cv[s] = smooth_at_span(cv[s], midspan);
    }

    // Pointwise best span, then smooth the choice itself.
    std::vector<double> choice(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t best = 0;
        for (std::size_t s = 1; s < sorted.size(); ++s)
            if (cv[s][i] < cv[best][i]) best = s;
        choice[i] = sorted[best];
    }
    choice = smooth_at_span(choice, midspan);

    // Blend the two bracketing span smooths at the chosen span.
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double c = std::clamp(choice[i], sorted.front(), sorted.back());
        std::size_t hi = 0;
        while (hi + 1 < sorted.size() && sorted[hi] < c) ++hi;
        if (hi == 0 || sorted[hi] == c) {
            out[i] = smooths[hi][i];
            continue;
        }
        const std::size_t lo = hi - 1;
        const double t = (c - sorted[lo]) / (sorted[hi] - sorted[lo]);
        out[i] = (1.0 - t) * smooths[lo][i] + t * smooths[hi][i];
    }
    return out;
}

AnimationSet variants_and_smooth(const RotationSequence& seq, const DsiParams& params,
                                 Warnings* warnings) {
    AnimationSet set;
    try {
        set = random_variants(seq, params, warnings);
    } catch (const std::runtime_error& e) {
        throw RuntimeError(std::string("dsi stage variants: ") + e.what());
    }

    try {
        for (auto& variant : set.sequences) {
            const std::size_t frames = variant.frame_count();
            const std::size_t joints = variant.joint_count();
            std::vector<double> series(frames);
            auto smooth_channel = [&](auto get, auto set_value) {
                for (std::size_t f = 0; f < frames; ++f) series[f] = get(f);
                const std::vector<double> smoothed = supersmooth(series, params.spans, warnings);
                for (std::size_t f = 0; f < frames; ++f) set_value(f, smoothed[f]);
            };
            for (std::size_t j = 0; j < joints; ++j) {
                smooth_channel([&](std::size_t f) { return variant.frames[f][j].x; },
                               [&](std::size_t f, double v) { variant.frames[f][j].x = v; });
                smooth_channel([&](std::size_t f) { return variant.frames[f][j].y; },
                               [&](std::size_t f, double v) { variant.frames[f][j].y = v; });
                smooth_channel([&](std::size_t f) { return variant.frames[f][j].z; },
                               [&](std::size_t f, double v) { variant.frames[f][j].z = v; });
                smooth_channel([&](std::size_t f) { return variant.frames[f][j].w; },
                               [&](std::size_t f, double v) { variant.frames[f][j].w = v; });
            }
            smooth_channel([&](std::size_t f) { return variant.root_positions[f].x; },
                           [&](std::size_t f, double v) { variant.root_positions[f].x = v; });
            smooth_channel([&](std::size_t f) { return variant.root_positions[f].y; },
                           [&](std::size_t f, double v) { variant.root_positions[f].y = v; });
            smooth_channel([&](std::size_t f) { return variant.root_positions[f].z; },
                           [&](std::size_t f, double v) { variant.root_positions[f].z = v; });

            for (auto& frame : variant.frames)
                for (auto& q : frame) {
                    const double norm = q.norm();
                    if (norm < 0.5)
                        throw RuntimeError("smoothed quaternion collapsed below norm 0.5");
                    q = q * (1.0 / norm);
                }
            align_hemisphere(variant);
        }
    } catch (const std::runtime_error& e) {
        throw RuntimeError(std::string("dsi stage smooth: ") + e.what());
    }
    return set;
}

AnimationSet dsi_pipeline(const RotationSequence& seq, const DsiParams& params,
                          std::span<const double> weights, Warnings* warnings) {
    DsiInterpolation interp;
    try {
        interp = dsi_interpolate(seq, params, weights, warnings);
    } catch (const std::runtime_error& e) {
        throw RuntimeError(std::string("dsi stage interpolate: ") + e.what());
    }
    return variants_and_smooth(interp.seq, params, warnings);
}

}  // namespace skelforge
