#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blossomspin/bernstein.hpp"
#include "blossomspin/rng.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

using namespace blossomspin;

namespace {

BezierCurve random_curve(int d, int dim, CounterRng& rng) {
    Eigen::MatrixXd pts(d + 1, dim);
    for (int i = 0; i <= d; ++i)
        for (int c = 0; c < dim; ++c) pts(i, c) = rng.uniform(-1.0, 1.0);
    return BezierCurve(std::move(pts));
}

} // namespace

TEST_CASE("basis values at the midpoint") {
    CHECK(bernstein_basis(4, 2, 0.5) == doctest::Approx(0.375).epsilon(1e-15));
    CHECK(bernstein_basis(1, 0, 0.25) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(bernstein_basis(0, 0, 0.9) == 1.0);
}

TEST_CASE("basis matches the closed formula across degrees") {
    CounterRng rng(11, 1);
    for (int d : {1, 2, 3, 5, 8, 13, 20}) {
        for (int rep = 0; rep < 20; ++rep) {
            const double t = rng.uniform();
            for (int i = 0; i <= d; ++i)
                CHECK(bernstein_basis(d, i, t) ==
                      doctest::Approx(oracles::direct_bernstein(d, i, t)).epsilon(1e-12));
        }
    }
}

TEST_CASE("basis outside the unit interval, including the log-space path") {
    CounterRng rng(11, 2);
    for (int d : {3, 10, 25, 60}) {
        for (const double t : {-0.75, 1.5, 2.0, -1.0}) {
            for (int i = 0; i <= d; i += std::max(1, d / 5)) {
                const double ref = oracles::direct_bernstein(d, i, t);
                const double got = bernstein_basis(d, i, t);
                CHECK(got == doctest::Approx(ref).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("basis argument validation") {
    CHECK_THROWS_AS(bernstein_basis(-1, 0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(bernstein_basis(3, 4, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(bernstein_basis(3, -1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(binomial(60, 30), std::invalid_argument);
}

TEST_CASE("partition of unity") {
    CounterRng rng(12, 1);
    for (int d : {1, 4, 9, 20, 40, 60}) {
        // on [0,1] the recurrence is convex and the sum holds absolutely
        for (int rep = 0; rep < 50; ++rep) {
            const double t = rng.uniform();
            CHECK(std::abs(bernstein_row(d, t).sum() - 1.0) < 1e-12);
        }
        // outside, cancellation grows with the largest basis value; assert
        // the equivalent relative statement
        for (int rep = 0; rep < 20; ++rep) {
            const double t = rng.uniform(-1.0, 2.0);
            const Eigen::VectorXd row = bernstein_row(d, t);
            const double scale = std::max(1.0, row.cwiseAbs().maxCoeff());
            CHECK(std::abs(row.sum() - 1.0) < 1e-12 * scale);
        }
    }
}

TEST_CASE("evaluation equals direct summation") {
    CounterRng rng(13, 1);
    for (int d : {1, 2, 5, 11, 20}) {
        const BezierCurve c = random_curve(d, 3, rng);
        for (int rep = 0; rep < 25; ++rep) {
            const double t = rng.uniform();
            const Eigen::RowVectorXd got = evaluate(c, t);
            const Eigen::RowVectorXd ref = oracles::direct_eval(c, t);
            CHECK((got - ref).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("evaluation interpolates the endpoints") {
    CounterRng rng(13, 2);
    const BezierCurve c = random_curve(7, 2, rng);
    CHECK((evaluate(c, 0.0) - c.points.row(0)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((evaluate(c, 1.0) - c.points.row(7)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("curve stays in the control hull") {
    CounterRng rng(13, 3);
    for (int d : {2, 4, 7}) {
        const BezierCurve c = random_curve(d, 2, rng);
        for (int s = 0; s <= 100; ++s) {
            const double t = s / 100.0;
            const Eigen::RowVectorXd p = evaluate(c, t);
            CHECK(oracles::hull_contains(c.points, p, 1e-9));
        }
    }
}

TEST_CASE("blossom diagonal reproduces evaluation") {
    CounterRng rng(14, 1);
    for (int d : {1, 3, 5}) {
        const BezierCurve c = random_curve(d, 2, rng);
        for (int rep = 0; rep < 20; ++rep) {
            const double t = rng.uniform();
            const Eigen::VectorXd diag = Eigen::VectorXd::Constant(d, t);
            CHECK((blossom(c, diag) - evaluate(c, t)).cwiseAbs().maxCoeff() < 1e-13);
        }
    }
}

TEST_CASE("blossom is symmetric under every argument permutation") {
    CounterRng rng(14, 2);
    for (int d : {2, 3, 4, 5}) {
        const BezierCurve c = random_curve(d, 2, rng);
        Eigen::VectorXd args(d);
        for (int i = 0; i < d; ++i) args(i) = rng.uniform(-0.2, 1.2);
        const Eigen::RowVectorXd base = blossom(c, args);
        std::vector<int> idx(d);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end());
        do {
            Eigen::VectorXd perm(d);
            for (int i = 0; i < d; ++i) perm(i) = args(idx[i]);
            CHECK((blossom(c, perm) - base).cwiseAbs().maxCoeff() < 1e-12);
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
}

TEST_CASE("blossom is affine in each slot") {
    CounterRng rng(14, 3);
    for (int rep = 0; rep < 100; ++rep) {
        const int d = 2 + static_cast<int>(rng.uniform() * 4);
        const BezierCurve c = random_curve(d, 2, rng);
        Eigen::VectorXd args(d);
        for (int i = 0; i < d; ++i) args(i) = rng.uniform();
        const int slot = static_cast<int>(rng.uniform() * d);
        const double u = rng.uniform(-1.0, 1.0), v = rng.uniform(-1.0, 1.0);
        const double lam = rng.uniform(-0.5, 1.5);
        Eigen::VectorXd a1 = args, a2 = args, amix = args;
        a1(slot) = u;
        a2(slot) = v;
        amix(slot) = lam * u + (1.0 - lam) * v;
        const Eigen::RowVectorXd mix = lam * blossom(c, a1) + (1.0 - lam) * blossom(c, a2);
        CHECK((blossom(c, amix) - mix).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("blossom of the control points recovers them") {
    // f(0^{d-i}, 1^i) = P_i
    CounterRng rng(14, 4);
    const int d = 4;
    const BezierCurve c = random_curve(d, 3, rng);
    for (int i = 0; i <= d; ++i) {
        Eigen::VectorXd args(d);
        for (int j = 0; j < d; ++j) args(j) = (j < d - i) ? 0.0 : 1.0;
        CHECK((blossom(c, args) - c.points.row(i)).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("blossom arity is checked") {
    CounterRng rng(14, 5);
    const BezierCurve c = random_curve(3, 2, rng);
    CHECK_THROWS_AS(blossom(c, Eigen::VectorXd::Zero(2)), std::invalid_argument);
    CHECK_THROWS_AS(blossom(c, Eigen::VectorXd::Zero(4)), std::invalid_argument);
}

TEST_CASE("degree elevation leaves the traced curve fixed") {
    CounterRng rng(15, 1);
    for (int d : {1, 3, 6}) {
        const BezierCurve c = random_curve(d, 2, rng);
        BezierCurve up = degree_elevate(c);
        CHECK(up.degree() == d + 1);
        for (int s = 0; s <= 60; ++s) {
            const double t = s / 60.0;
            CHECK((evaluate(up, t) - evaluate(c, t)).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("repeated elevation drives the polygon to the curve") {
    CounterRng rng(15, 2);
    BezierCurve c = random_curve(3, 2, rng);
    std::vector<Eigen::RowVectorXd> samples;
    for (int s = 0; s <= 400; ++s) samples.push_back(evaluate(c, s / 400.0));
    const auto polygon_gap = [&](const BezierCurve& k) {
        double worst = 0.0;
        for (int i = 0; i <= k.degree(); ++i) {
            double best = 1e300;
            for (const auto& q : samples)
                best = std::min(best, (k.points.row(i) - q).norm());
            worst = std::max(worst, best);
        }
        return worst;
    };
    std::vector<double> gaps;
    BezierCurve cur = c;
    for (int j = 0; j < 50; ++j) {
        cur = degree_elevate(cur);
        gaps.push_back(polygon_gap(cur));
    }
    // eventually monotone: strictly decreasing over the last thirty rounds
    for (std::size_t i = gaps.size() - 30; i + 1 < gaps.size(); ++i)
        CHECK(gaps[i + 1] < gaps[i]);
}

TEST_CASE("subdivision halves agree with reparameterization") {
    CounterRng rng(16, 1);
    for (int rep = 0; rep < 10; ++rep) {
        const int d = 1 + static_cast<int>(rng.uniform() * 6);
        const BezierCurve c = random_curve(d, 2, rng);
        const double t = rng.uniform(0.05, 0.95);
        const auto [left, right] = subdivide(c, t);
        CHECK(left.degree() == d);
        CHECK(right.degree() == d);
        for (int s = 0; s <= 50; ++s) {
            const double u = s / 50.0;
            CHECK((evaluate(left, u) - evaluate(c, u * t)).cwiseAbs().maxCoeff() < 1e-12);
            CHECK((evaluate(right, u) - evaluate(c, t + u * (1.0 - t))).cwiseAbs().maxCoeff() <
                  1e-12);
        }
    }
}

TEST_CASE("subdivision against the hand-built degree-2 pyramid") {
    Eigen::MatrixXd pts(3, 2);
    pts << 0.0, 0.0, 1.0, 2.0, 2.0, 0.0;
    const BezierCurve c{Eigen::MatrixXd(pts)};
    const double t = 0.25;
    const auto [left, right] = subdivide(c, t);
    // level 1: (0.25, 0.5), (1.25, 1.5); level 2: (0.5, 0.75)
    Eigen::MatrixXd expect_left(3, 2), expect_right(3, 2);
    expect_left << 0.0, 0.0, 0.25, 0.5, 0.5, 0.75;
    expect_right << 0.5, 0.75, 1.25, 1.5, 2.0, 0.0;
    CHECK((left.points - expect_left).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((right.points - expect_right).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("derivative matches central differences") {
    CounterRng rng(17, 1);
    for (int d : {2, 4, 8}) {
        const BezierCurve c = random_curve(d, 2, rng);
        const BezierCurve h = derivative(c);
        CHECK(h.degree() == d - 1);
        for (int rep = 0; rep < 15; ++rep) {
            const double t = rng.uniform(0.05, 0.95);
            const Eigen::RowVectorXd ref = oracles::central_difference(c, t, 1e-6);
            CHECK((evaluate(h, t) - ref).cwiseAbs().maxCoeff() < 1e-6);
        }
    }
}

TEST_CASE("derivative of a line is its direction") {
    Eigen::MatrixXd pts(2, 2);
    pts << 1.0, 1.0, 4.0, -1.0;
    const BezierCurve line{Eigen::MatrixXd(pts)};
    const BezierCurve h = derivative(line);
    CHECK(h.points(0, 0) == doctest::Approx(3.0));
    CHECK(h.points(0, 1) == doctest::Approx(-2.0));
    CHECK_THROWS_AS(derivative(h), std::invalid_argument);
}

TEST_CASE("polar labels") {
    CHECK(polar_point_label(4, 1) == "p(0,0,0,1)");
    CHECK(polar_point_label(4, 0) == "p(0,0,0,0)");
    CHECK(polar_point_label(8, 3) == "0^5 1^3");
    CHECK_THROWS_AS(polar_point_label(3, 5), std::invalid_argument);
}
