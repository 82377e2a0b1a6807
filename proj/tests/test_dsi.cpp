#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "skelforge/dsi.hpp"

using namespace skelforge;

namespace {

// Single-joint sequences: distances equal the per-frame rotation angle.
RotationSequence spinner_sequence(const std::vector<double>& steps, double fps = 30.0) {
    RotationSequence seq;
    seq.fps = fps;
    double angle = 0.0;
    seq.frames.push_back({quat_about({0, 0, 1}, 0.0)});
    seq.root_positions.push_back({0, 0, 0});
    for (double s : steps) {
        angle += s;
        seq.frames.push_back({quat_about({0, 0, 1}, angle)});
        seq.root_positions.push_back({angle, 0, 0});
    }
    align_hemisphere(seq);
    return seq;
}

// The 10-frame sequence with a single over-threshold jump between frames 4
// and 5 (0-indexed): boundaries {0,4,5,9} with 5/25/5 samples at the default
// delta and eta.
RotationSequence hand_trace_sequence() {
    std::vector<double> steps(9, 0.01);
    steps[4] = 0.5;
    return spinner_sequence(steps);
}

std::vector<Quat> random_frame(Rng& rng, std::size_t joints) {
    std::vector<Quat> f;
    for (std::size_t j = 0; j < joints; ++j) {
        const Vec3 axis = normalized(
            Vec3{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
        f.push_back(quat_about(axis, rng.uniform(-3, 3)));
    }
    return f;
}

}  // namespace

TEST_CASE("angular_distance basics") {
    Rng rng(2);
    const std::vector<Quat> frame = random_frame(rng, 6);
    const std::vector<double> ones(6, 1.0);
    CHECK(angular_distance(frame, frame, ones) == doctest::Approx(0.0));

    // J = 4, all weights 1, one joint rotated 0.4 rad -> 0.1 rad mean
    std::vector<Quat> a(4, Quat::identity());
    std::vector<Quat> b = a;
    b[2] = quat_about({0, 1, 0}, 0.4);
    const std::vector<double> w4(4, 1.0);
    CHECK(angular_distance(a, b, w4) == doctest::Approx(0.1));
    CHECK(angular_distance(b, a, w4) == doctest::Approx(0.1));  // symmetric

    std::vector<Quat> c = {Quat::identity()};
    CHECK_THROWS_AS(angular_distance(a, c, {}), ValidationError);
}

TEST_CASE("angular_distance equals the axis-angle oracle on random frames") {
    Rng rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t joints = 5;
        const std::vector<Quat> a = random_frame(rng, joints);
        const std::vector<Quat> b = random_frame(rng, joints);
        std::vector<double> weights;
        for (std::size_t j = 0; j < joints; ++j) weights.push_back(rng.uniform(0.0, 2.0));

        double expected = 0.0;
        for (std::size_t j = 0; j < joints; ++j) {
            Quat rel = hamilton(a[j], conj(b[j]));
            if (rel.w < 0.0) rel = {-rel.x, -rel.y, -rel.z, -rel.w};
            const auto [axis, theta] = oracle::quat_axis_angle(rel);
            expected += weights[j] * theta;
        }
        expected /= static_cast<double>(joints);
        CHECK(angular_distance(a, b, weights) == doctest::Approx(expected).epsilon(1e-7));
    }
}

TEST_CASE("segment reproduces the hand-traced boundaries") {
    const RotationSequence seq = hand_trace_sequence();
    DsiParams params;
    params.threshold = 0.15;
    const SegmentBoundaries segs = segment(seq, params, {});
    REQUIRE(segs.boundaries == std::vector<std::size_t>{0, 4, 5, 9});
    REQUIRE(segs.kinds.size() == 3);
    CHECK(segs.kinds[0] == SegmentBoundaries::Kind::Normal);
    CHECK(segs.kinds[1] == SegmentBoundaries::Kind::Edge);
    CHECK(segs.kinds[2] == SegmentBoundaries::Kind::Normal);
    CHECK(segs.edge_distances[1] == doctest::Approx(0.5));
}

TEST_CASE("segment edge cases") {
    DsiParams params;
    SUBCASE("all below threshold -> one interval") {
        const RotationSequence seq = spinner_sequence(std::vector<double>(7, 0.01));
        const SegmentBoundaries segs = segment(seq, params, {});
        CHECK(segs.boundaries == std::vector<std::size_t>{0, 7});
        CHECK(segs.kinds == std::vector<SegmentBoundaries::Kind>{SegmentBoundaries::Kind::Normal});
    }
    SUBCASE("every step above threshold -> edge at every step") {
        const RotationSequence seq = spinner_sequence(std::vector<double>(5, 0.3));
        const SegmentBoundaries segs = segment(seq, params, {});
        CHECK(segs.boundaries == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
        for (auto k : segs.kinds) CHECK(k == SegmentBoundaries::Kind::Edge);
    }
    SUBCASE("single frame is trivial") {
        RotationSequence seq;
        seq.frames.push_back({Quat::identity()});
        seq.root_positions.push_back({0, 0, 0});
        const SegmentBoundaries segs = segment(seq, params, {});
        CHECK(segs.boundaries == std::vector<std::size_t>{0});
        CHECK(segs.kinds.empty());
    }
}

TEST_CASE("linespace") {
    CHECK(linespace(2, 5, 4) == std::vector<double>{2, 3, 4, 5});
    CHECK(linespace(0, 1, 1) == std::vector<double>{0});
    CHECK(linespace(0, 1, 3) == std::vector<double>{0, 0.5, 1});
    CHECK_THROWS_AS(linespace(1, 0, 2), ValidationError);
}

TEST_CASE("lagrange interpolation of quaternion frames") {
    SUBCASE("two control points: midpoint is the normalized average") {
        const Quat qa = canonical(quat_about({0, 0, 1}, 0.2));
        const Quat qb = canonical(quat_about({0, 0, 1}, 0.8));
        const std::vector<double> times = {0.0, 1.0};
        const std::vector<std::vector<Quat>> ctrl = {{qa}, {qb}};
        const std::vector<double> samples = {0.5};
        const auto out = lagrange_interpolate(times, ctrl, samples);
        const Quat avg = normalized(Quat{(qa.x + qb.x) / 2, (qa.y + qb.y) / 2, (qa.z + qb.z) / 2,
                                         (qa.w + qb.w) / 2});
        CHECK(oracle::quat_component_error(out[0][0], avg) < 1e-12);
    }
    SUBCASE("samples at control times reproduce control quaternions") {
        std::vector<double> times = {0, 1, 2, 3};
        std::vector<std::vector<Quat>> ctrl;
        for (int t = 0; t < 4; ++t)
            ctrl.push_back({canonical(quat_about({0, 1, 0}, 0.1 + 0.1 * t))});
        const auto out = lagrange_interpolate(times, ctrl, times);
        for (int t = 0; t < 4; ++t)
            CHECK(oracle::quat_component_error(out[t][0], ctrl[t][0]) < 1e-12);
    }
    SUBCASE("dense samples track a constant-speed rotation within 1e-3") {
        // 4 control points over a 0.5 rad turn about one axis
        const Vec3 axis{0, 0, 1};
        std::vector<double> times = {0, 1, 2, 3};
        std::vector<std::vector<Quat>> ctrl;
        auto exact = [&](double t) { return quat_about(axis, 0.5 * t / 3.0); };
        for (double t : times) ctrl.push_back({exact(t)});
        const std::vector<double> samples = linespace(0, 3, 61);
        const auto out = lagrange_interpolate(times, ctrl, samples);
        double worst = 0.0;
        for (std::size_t i = 0; i < samples.size(); ++i)
            worst = std::max(worst, oracle::quat_component_error(out[i][0], exact(samples[i])));
        CHECK(worst < 1e-3);
    }
    SUBCASE("extrapolation and duplicate control times are refused") {
        const std::vector<double> times = {0.0, 1.0};
        const std::vector<std::vector<Quat>> ctrl = {{Quat::identity()}, {Quat::identity()}};
        const std::vector<double> outside = {1.5};
        CHECK_THROWS_WITH_AS(lagrange_interpolate(times, ctrl, outside),
                             doctest::Contains("extrapolation"), ValidationError);
        const std::vector<double> dup = {1.0, 1.0};
        const std::vector<double> ok = {1.0};
        CHECK_THROWS_WITH_AS(lagrange_interpolate(dup, ctrl, ok), doctest::Contains("duplicate"),
                             ValidationError);
    }
}

TEST_CASE("dsi_interpolate implements the sampling rules") {
    const RotationSequence seq = hand_trace_sequence();
    DsiParams params;  // threshold 0.15, delta 0.2, eta 10
    Warnings warnings;
    const DsiInterpolation out = dsi_interpolate(seq, params, {}, &warnings);

    CHECK(out.samples_per_interval == std::vector<std::size_t>{5, 25, 5});
    CHECK(out.seq.frame_count() == 5 + 25 + 5 - 2);
    // duration is preserved: fps' = fps * (F'-1)/(F-1)
    CHECK(out.seq.fps == doctest::Approx(30.0 * 32.0 / 9.0));
    // grid times that land on control frames reproduce them exactly
    for (std::size_t i = 0; i < out.sample_times.size(); ++i) {
        const double t = out.sample_times[i];
        if (t != std::floor(t)) continue;
        const auto idx = static_cast<std::size_t>(t);
        CHECK(oracle::quat_component_error(out.seq.frames[i][0], seq.frames[idx][0]) < 1e-9);
        CHECK((out.seq.root_positions[i] - seq.root_positions[idx]).norm() < 1e-9);
    }
    // times are strictly increasing
    for (std::size_t i = 1; i < out.sample_times.size(); ++i)
        CHECK(out.sample_times[i] > out.sample_times[i - 1]);
}

TEST_CASE("dsi_interpolate keeps constants constant") {
    const RotationSequence seq = spinner_sequence(std::vector<double>(9, 0.0));
    DsiParams params;
    const DsiInterpolation out = dsi_interpolate(seq, params, {});
    for (const auto& frame : out.seq.frames)
        CHECK(oracle::quat_component_error(frame[0], seq.frames[0][0]) < 1e-9);
}

TEST_CASE("dsi_interpolate clamps tiny edge grids and warns") {
    // one jump just over the threshold with eta small enough that
    // int(eta*d/delta) < 2
    std::vector<double> steps(4, 0.01);
    steps[1] = 0.2;
    const RotationSequence seq = spinner_sequence(steps);
    DsiParams params;
    params.eta = 1.0;  // int(1*0.2/0.2) = 1 -> clamped to 2
    Warnings warnings;
    const DsiInterpolation out = dsi_interpolate(seq, params, {}, &warnings);
    bool clamped = false;
    for (const auto& w : warnings) clamped |= w.find("clamped") != std::string::npos;
    CHECK(clamped);
    for (std::size_t k = 0; k < out.segments.kinds.size(); ++k)
        if (out.segments.kinds[k] == SegmentBoundaries::Kind::Edge)
            CHECK(out.samples_per_interval[k] >= 2);
}

TEST_CASE("dsi_interpolate on the default rig reproduces integer-grid control frames") {
    const SkeletonTopology topo = default_topology();
    const RotationSequence seq = oracle::smooth_sequence(topo, 13, 30.0);
    DsiParams params;
    params.delta = 0.25;  // linespace([0,12],4) = {0,4,8,12}: all integers
    params.threshold = 1e9;
    const DsiInterpolation out = dsi_interpolate(seq, params, topo.weights());
    REQUIRE(out.sample_times == std::vector<double>{0, 4, 8, 12});
    for (std::size_t i = 0; i < out.sample_times.size(); ++i) {
        const auto idx = static_cast<std::size_t>(out.sample_times[i]);
        for (std::size_t j = 0; j < topo.joint_count(); ++j)
            CHECK(oracle::quat_component_error(out.seq.frames[i][j], seq.frames[idx][j]) < 1e-9);
    }
}

TEST_CASE("random_variants") {
    const RotationSequence seq = hand_trace_sequence();
    SUBCASE("zero noise reproduces the input bitwise") {
        DsiParams params;
        params.variants = 3;
        params.noise_low = params.noise_high = 0.0;
        const AnimationSet set = random_variants(seq, params);
        REQUIRE(set.sequences.size() == 3);
        for (const auto& variant : set.sequences)
            for (std::size_t f = 0; f < seq.frame_count(); ++f) {
                CHECK(variant.frames[f][0].x == seq.frames[f][0].x);
                CHECK(variant.frames[f][0].w == seq.frames[f][0].w);
            }
    }
    SUBCASE("shape and determinism") {
        DsiParams params;
        params.variants = 3;
        params.seed = 77;
        const AnimationSet a = random_variants(seq, params);
        const AnimationSet b = random_variants(seq, params);
        REQUIRE(a.sequences.size() == 3);
        for (int v = 0; v < 3; ++v) {
            CHECK(a.variant_seeds[v] == b.variant_seeds[v]);
            for (std::size_t f = 0; f < seq.frame_count(); ++f) {
                CHECK(a.sequences[v].frames[f][0].x == b.sequences[v].frames[f][0].x);  // bitwise
                CHECK(std::abs(a.sequences[v].frames[f][0].norm() - 1.0) < 1e-9);
            }
        }
        // distinct variants differ somewhere
        bool differ = false;
        for (std::size_t f = 0; f < seq.frame_count() && !differ; ++f)
            differ = a.sequences[0].frames[f][0].x != a.sequences[1].frames[f][0].x;
        CHECK(differ);
    }
    SUBCASE("the draw protocol is reproducible from the documented sub-seed") {
        DsiParams params;
        params.variants = 2;
        params.seed = 123;
        params.noise_low = -0.02;
        params.noise_high = 0.02;
        const AnimationSet set = random_variants(seq, params);
        for (int v = 0; v < 2; ++v) {
            CHECK(set.variant_seeds[v] ==
                  sub_seed(params.seed, "variant", static_cast<std::uint64_t>(v)));
            Rng rng(set.variant_seeds[v]);
            for (std::size_t f = 0; f < seq.frame_count(); ++f) {
                const Quat q = seq.frames[f][0];
                const double nx = rng.uniform(-0.02, 0.02);
                const double ny = rng.uniform(-0.02, 0.02);
                const double nz = rng.uniform(-0.02, 0.02);
                const double nw = rng.uniform(-0.02, 0.02);
                CHECK(std::abs(nx) <= 0.02);
                Quat expect{q.x + nx, q.y + ny, q.z + nz, q.w + nw};
                expect = expect * (1.0 / expect.norm());
                // hemisphere alignment may flip whole frames relative to the
                // previous one; compare up to sign
                CHECK(oracle::quat_component_error(set.sequences[v].frames[f][0], expect) == 0.0);
            }
        }
    }
}

TEST_CASE("supersmooth") {
    std::vector<double> spans = {0.05, 0.2, 0.5};
    SUBCASE("constant series is unchanged") {
        std::vector<double> series(40, 3.25);
        const auto out = supersmooth(series, spans);
        for (double v : out) CHECK(v == doctest::Approx(3.25).epsilon(1e-12));
    }
    SUBCASE("linear series is reproduced within 1e-9") {
        std::vector<double> series;
        for (int i = 0; i < 60; ++i) series.push_back(0.7 * i - 4.0);
        const auto out = supersmooth(series, spans);
        for (std::size_t i = 0; i < series.size(); ++i)
            CHECK(std::abs(out[i] - series[i]) < 1e-9);
    }
    SUBCASE("noisy sine: smoothing reduces the MSE") {
        Rng rng(55);
        std::vector<double> clean, noisy;
        for (int i = 0; i < 200; ++i) {
            const double c = std::sin(2.0 * kPi * i / 50.0);
            clean.push_back(c);
            noisy.push_back(c + rng.uniform(-0.1, 0.1));
        }
        const auto out = supersmooth(noisy, spans);
        double mse_raw = 0, mse_smooth = 0;
        for (int i = 0; i < 200; ++i) {
            mse_raw += (noisy[i] - clean[i]) * (noisy[i] - clean[i]);
            mse_smooth += (out[i] - clean[i]) * (out[i] - clean[i]);
        }
        CHECK(mse_smooth < mse_raw);
    }
    SUBCASE("short series pass through with a warning") {
        std::vector<double> series = {1, 2, 3};
        Warnings warnings;
        const auto out = supersmooth(series, spans, &warnings);
        CHECK(out == series);
        CHECK(!warnings.empty());
    }
}

TEST_CASE("dsi_pipeline preserves constants and shapes") {
    SUBCASE("constant input, V=1, zero noise -> constant output") {
        const RotationSequence seq = spinner_sequence(std::vector<double>(19, 0.0));
        DsiParams params;
        params.variants = 1;
        params.noise_low = params.noise_high = 0.0;
        const AnimationSet out = dsi_pipeline(seq, params, {});
        REQUIRE(out.sequences.size() == 1);
        for (const auto& frame : out.sequences[0].frames)
            CHECK(oracle::quat_component_error(frame[0], seq.frames[0][0]) < 1e-9);
    }
    SUBCASE("output tensor shape V x J x F' x 4") {
        const SkeletonTopology topo = default_topology();
        const RotationSequence seq = oracle::smooth_sequence(topo, 40, 30.0);
        DsiParams params;
        params.variants = 4;
        params.seed = 5;
        const AnimationSet out = dsi_pipeline(seq, params, topo.weights());
        REQUIRE(out.sequences.size() == 4);
        const std::size_t f_prime = out.sequences[0].frame_count();
        for (const auto& variant : out.sequences) {
            CHECK(variant.frame_count() == f_prime);
            CHECK(variant.joint_count() == 53);
            for (const auto& frame : variant.frames)
                for (const auto& q : frame) CHECK(std::abs(q.norm() - 1.0) < 1e-9);
            CHECK(is_hemisphere_continuous(variant));
        }
    }
    SUBCASE("bitwise determinism of the whole pipeline") {
        const SkeletonTopology topo = default_topology();
        const RotationSequence seq = oracle::smooth_sequence(topo, 24, 30.0);
        DsiParams params;
        params.variants = 2;
        params.seed = 99;
        const AnimationSet a = dsi_pipeline(seq, params, topo.weights());
        const AnimationSet b = dsi_pipeline(seq, params, topo.weights());
        for (int v = 0; v < 2; ++v)
            for (std::size_t f = 0; f < a.sequences[v].frame_count(); ++f)
                for (std::size_t j = 0; j < 53; ++j) {
                    CHECK(a.sequences[v].frames[f][j].x == b.sequences[v].frames[f][j].x);
                    CHECK(a.sequences[v].frames[f][j].w == b.sequences[v].frames[f][j].w);
                }
    }
}

TEST_CASE("dsi_pipeline suppresses injected spike jitter by at least half") {
    const SkeletonTopology topo = default_topology();
    const std::vector<double> weights = topo.weights();
    const std::size_t frames = 60;

    // Clean swing, evaluable at any phase.
    auto clean_at = [&](double frame_pos) {
        const double phase = 2.0 * kPi * frame_pos / static_cast<double>(frames);
        return oracle::smooth_pose(topo, phase);
    };
    RotationSequence jittered;
    jittered.fps = 30.0;
    for (std::size_t f = 0; f < frames; ++f) {
        jittered.frames.push_back(clean_at(static_cast<double>(f)));
        jittered.root_positions.push_back({0, 0, 0.9});
    }

    // Spikes: a few isolated frames get many joints kicked, the way a bad
    // pose-estimate frame corrupts a whole skeleton.
    Rng rng(2024);
    const std::vector<std::size_t> spike_frames = {9, 21, 33, 45, 52};
    for (std::size_t sf : spike_frames)
        for (std::size_t j = 0; j < topo.joint_count(); ++j) {
            if (rng.uniform() > 0.25) continue;
            const Vec3 axis = normalized(
                Vec3{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
            jittered.frames[sf][j] =
                normalized(hamilton(quat_about(axis, 0.5), jittered.frames[sf][j]));
        }
    align_hemisphere(jittered);

    DsiParams params;
    params.variants = 1;
    params.noise_low = params.noise_high = 0.0;
    params.delta = 1.0 / static_cast<double>(frames - 1);  // grid == input grid

    const DsiInterpolation interp = dsi_interpolate(jittered, params, weights);
    const AnimationSet out = dsi_pipeline(jittered, params, weights);

    double max_before = 0.0;
    for (std::size_t f = 0; f < frames; ++f)
        max_before = std::max(
            max_before, angular_distance(jittered.frames[f], clean_at(static_cast<double>(f)),
                                         weights));
    double max_after = 0.0;
    for (std::size_t i = 0; i < out.sequences[0].frame_count(); ++i)
        max_after = std::max(max_after,
                             angular_distance(out.sequences[0].frames[i],
                                              clean_at(interp.sample_times[i]), weights));
    CHECK(max_after <= 0.5 * max_before);
}
