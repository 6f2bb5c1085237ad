#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fairauc/moments.hpp"
#include "fairauc/rng.hpp"

using namespace fairauc;

namespace {

GroupedColumns small_data() {
    // group a: rows 0..3 (labels 0,0,1,1), group b: rows 4..7 (labels 0,0,1,1)
    GroupedColumns d;
    d.names = {"x0", "x1"};
    Vec x0(8), x1(8);
    x0 << 1.0, 3.0, 2.0, 4.0, 0.0, 2.0, 5.0, 7.0;
    x1 << 0.5, 0.5, 1.5, 2.5, 1.0, 3.0, 2.0, 2.0;
    d.features = {x0, x1};
    d.group = {Group::a, Group::a, Group::a, Group::a,
               Group::b, Group::b, Group::b, Group::b};
    d.label = {0, 0, 1, 1, 0, 0, 1, 1};
    return d;
}

}  // namespace

TEST_CASE("ssr on hand-computed rows") {
    const GroupedColumns d = small_data();
    const ClassStats s = ssr(d, {0, 1}, Group::a);
    CHECK(s.n0 == 2);
    CHECK(s.n1 == 2);
    CHECK(s.mu0(0) == doctest::Approx(2.0));
    CHECK(s.mu0(1) == doctest::Approx(0.5));
    CHECK(s.mu1(0) == doctest::Approx(3.0));
    CHECK(s.mu1(1) == doctest::Approx(2.0));
    // {1,3} has sample variance 2 with the n-1 divisor
    CHECK(s.sigma0(0, 0) == doctest::Approx(2.0));
    CHECK(s.sigma0(1, 1) == doctest::Approx(0.0));
    CHECK(s.sigma1(0, 0) == doctest::Approx(2.0));
    CHECK(s.sigma1(1, 1) == doctest::Approx(0.5));
    // cov({2,4},{1.5,2.5}) = 1
    CHECK(s.sigma1(0, 1) == doctest::Approx(1.0));
    CHECK(s.delta_mu()(0) == doctest::Approx(1.0));
    CHECK(s.delta_mu()(1) == doctest::Approx(1.5));
}

TEST_CASE("constant column has zero variance and zero covariances") {
    GroupedColumns d = small_data();
    d.features[1] = Vec::Constant(8, 3.25);
    const ClassStats s = ssr(d, {0, 1}, Group::b);
    CHECK(s.sigma0(1, 1) == 0.0);
    CHECK(s.sigma1(1, 1) == 0.0);
    CHECK(s.sigma0(0, 1) == 0.0);
    CHECK(s.sigma1(0, 1) == 0.0);
    CHECK(s.mu0(1) == doctest::Approx(3.25));
}

TEST_CASE("ssr_pooled equals ssr when one group holds all rows") {
    GroupedColumns d = small_data();
    for (auto& g : d.group) g = Group::a;
    const ClassStats pooled = ssr_pooled(d, {0, 1});
    const ClassStats grouped = ssr(d, {0, 1}, Group::a);
    CHECK(pooled.mu0.isApprox(grouped.mu0));
    CHECK(pooled.sigma0.isApprox(grouped.sigma0));
    CHECK(pooled.sigma1.isApprox(grouped.sigma1));
    CHECK(pooled.n0 == grouped.n0);
}

TEST_CASE("ssr2: candidate identical to score") {
    const GroupedColumns d = small_data();
    const Vec scores = d.features[0];
    const ClassStats s = ssr2(d.features[0], Group::a, scores, d);
    CHECK(s.dim() == 2);
    // column 0 is the score, column 1 the candidate
    CHECK(s.sigma0(0, 0) == doctest::Approx(s.sigma0(1, 1)));
    CHECK(s.sigma0(0, 1) == doctest::Approx(s.sigma0(0, 0)));
    CHECK(s.sigma1(0, 1) == doctest::Approx(s.sigma1(0, 0)));
    CHECK(s.delta_mu()(0) == doctest::Approx(s.delta_mu()(1)));
}

TEST_CASE("ssr2: constant candidate") {
    const GroupedColumns d = small_data();
    const Vec z = Vec::Constant(8, -1.0);
    const ClassStats s = ssr2(z, Group::b, d.features[0], d);
    CHECK(s.delta_mu()(1) == doctest::Approx(0.0));
    CHECK(s.sigma0(1, 1) == 0.0);
    CHECK(s.sigma0(0, 1) == 0.0);
    CHECK(s.sigma1(0, 1) == 0.0);
}

TEST_CASE("ssr2 hand case matches brute-force moments") {
    const GroupedColumns d = small_data();
    Vec scores(8);
    scores << 0.2, -0.3, 0.9, 1.4, 0.0, 0.1, 0.8, 0.6;
    const ClassStats s = ssr2(d.features[1], Group::a, scores, d);
    // class 0 of group a: rows 0,1 -> scores {0.2,-0.3}, z {0.5,0.5}
    CHECK(s.mu0(0) == doctest::Approx(-0.05));
    CHECK(s.mu0(1) == doctest::Approx(0.5));
    CHECK(s.sigma0(0, 0) == doctest::Approx(0.125));
    CHECK(s.sigma0(0, 1) == doctest::Approx(0.0));
    // class 1: rows 2,3 -> scores {0.9,1.4}, z {1.5,2.5}; cov = 0.25
    CHECK(s.sigma1(0, 1) == doctest::Approx(0.25));
}

TEST_CASE("overall_ssr equals ssr2 on a single-group dataset") {
    GroupedColumns d = small_data();
    for (auto& g : d.group) g = Group::b;
    Vec scores(8);
    for (int i = 0; i < 8; ++i) scores(i) = 0.3 * i - 1.0;
    const ClassStats a = overall_ssr(d, d.features[1], scores);
    const ClassStats b = ssr2(d.features[1], Group::b, scores, d);
    CHECK(a.mu0.isApprox(b.mu0));
    CHECK(a.mu1.isApprox(b.mu1));
    CHECK(a.sigma0.isApprox(b.sigma0));
    CHECK(a.sigma1.isApprox(b.sigma1));
}

TEST_CASE("row-permutation invariance") {
    GroupedColumns d = small_data();
    Rng rng(3);
    GroupedColumns p = d;
    std::vector<Index> perm = {5, 2, 7, 0, 4, 6, 1, 3};
    for (int i = 0; i < 8; ++i) {
        p.group[i] = d.group[perm[i]];
        p.label[i] = d.label[perm[i]];
        for (int c = 0; c < 2; ++c) p.features[c](i) = d.features[c](perm[i]);
    }
    const ClassStats s1 = ssr(d, {0, 1}, Group::a);
    const ClassStats s2 = ssr(p, {0, 1}, Group::a);
    CHECK(s1.mu0.isApprox(s2.mu0, 1e-12));
    CHECK(s1.sigma0.isApprox(s2.sigma0, 1e-12));
    CHECK(s1.sigma1.isApprox(s2.sigma1, 1e-12));
}

TEST_CASE("row subsets select the right rows") {
    const GroupedColumns d = small_data();
    const std::vector<Index> rows = {0, 1, 2, 3};  // group a only
    const ClassStats sub = ssr(d, {0}, Group::a, rows);
    const ClassStats full = ssr(d, {0}, Group::a);
    CHECK(sub.mu0.isApprox(full.mu0));
    CHECK(sub.n0 == full.n0);
}

TEST_CASE("undersized class cell throws") {
    GroupedColumns d = small_data();
    d.label = {0, 0, 0, 1, 0, 0, 1, 1};  // group a has one positive row
    CHECK_THROWS_AS(ssr(d, {0, 1}, Group::a), InsufficientSamples);
    CHECK_NOTHROW(ssr(d, {0, 1}, Group::b));
}
