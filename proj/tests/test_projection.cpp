#include <catch2/catch_amalgamated.hpp>

#include <qhg/projection.hpp>

using namespace qhg;

namespace {

struct Instance {
    HopfStarAlgebra A;
    Duality D;
    ModularData md;
};

Instance make(const HopfStarAlgebra& A) {
    Duality D = dualize(A);
    ModularData md = compute_modular_data(A);
    return {A, std::move(D), std::move(md)};
}

bool all_ok(const std::vector<CheckRecord>& rs) {
    for (const auto& r : rs)
        if (r.status == CheckStatus::Fail) return false;
    return true;
}

}  // namespace

TEST_CASE("subset indicators: group-like exactly for subgroups") {
    auto cat = catalog("symmetric(3)");
    auto fn = build_function_algebra(cat.group);

    CHECK(is_group_like_projection(fn, subset_indicator(6, {0, 2})));
    CHECK(is_group_like_projection(fn, subset_indicator(6, {0, 3, 4})));
    CHECK(is_group_like_projection(fn, subset_indicator(6, {0})));
    CHECK_FALSE(is_group_like_projection(fn, subset_indicator(6, {0, 3})));
    CHECK_FALSE(is_group_like_projection(fn, subset_indicator(6, {2})));  // no identity
    CHECK_FALSE(is_group_like_projection(fn, Vec(6)));                    // zero

    // direct count over all 64 subsets: S3 has exactly 6 subgroups
    int glp_count = 0;
    for (int mask = 0; mask < 64; ++mask) {
        std::vector<int> subset;
        for (int t = 0; t < 6; ++t)
            if (mask >> t & 1) subset.push_back(t);
        if (is_group_like_projection(fn, subset_indicator(6, subset))) ++glp_count;
    }
    CHECK(glp_count == 6);

    auto rec = check_subset_projection_classification(cat.group, fn);
    CHECK(rec.status == CheckStatus::Pass);
    CHECK(rec.detail == "exhaustive over 64 subsets");
}

TEST_CASE("normalized subgroup averages are group-like in the group algebra") {
    auto cat = catalog("symmetric(3)");
    auto gr = build_group_algebra(cat.group);

    CHECK(is_group_like_projection(gr, uniform_average(6, {0, 2})));
    CHECK(is_group_like_projection(gr, uniform_average(6, {0, 3, 4})));
    CHECK(is_group_like_projection(gr, uniform_average(6, {0, 1, 2, 3, 4, 5})));
    // unnormalized sum is not idempotent
    CHECK_FALSE(is_group_like_projection(gr, subset_indicator(6, {0, 2})));
    // average over a non-subgroup
    CHECK_FALSE(is_group_like_projection(gr, uniform_average(6, {0, 3})));
}

TEST_CASE("defining conditions and consequences certify on canonical projections") {
    auto cat = catalog("symmetric(3)");
    auto fn = make(build_function_algebra(cat.group));
    auto gr = make(build_group_algebra(cat.group));

    for (const auto& K : {cat.subgroups["transposition"], cat.subgroups["alternating"]}) {
        CAPTURE(K.size());
        auto rf = verify_glp(fn.A, fn.md, subset_indicator(6, K));
        CHECK(rf.size() == 3);
        CHECK(all_ok(rf));
        auto rg = verify_glp(gr.A, gr.md, uniform_average(6, K));
        CHECK(all_ok(rg));
    }
}

TEST_CASE("defining-condition failures carry a witness") {
    auto cat = catalog("symmetric(3)");
    auto fn = make(build_function_algebra(cat.group));
    auto recs = verify_glp(fn.A, fn.md, subset_indicator(6, {0, 3}));
    REQUIRE(!recs.empty());
    CHECK(recs[0].id == "glp_def_certified");
    CHECK(recs[0].status == CheckStatus::Fail);
    CHECK(recs[0].detail == "comult(h)(1(x)h) != h(x)h");
    CHECK(!recs[0].witness.fields.empty());
}

TEST_CASE("transform of a projection, normalized by its integral value") {
    auto cat = catalog("symmetric(3)");
    const std::vector<int> K = cat.subgroups["transposition"];

    // weight-1 function model: F(chi_K)/phi(chi_K) has coordinates avg(K)
    auto fn = make(build_function_algebra(cat.group));
    const Vec k = fourier_projection(fn.A, fn.D, subset_indicator(6, K));
    CHECK(k == uniform_average(6, K));
    CHECK(is_group_like_projection(fn.D.dual, k));
    CHECK(check_fourier_projection(fn.A, fn.D, subset_indicator(6, K)).status ==
          CheckStatus::Pass);

    // group model side as well
    auto gr = make(build_group_algebra(cat.group));
    CHECK(check_fourier_projection(gr.A, gr.D, uniform_average(6, K)).status ==
          CheckStatus::Pass);

    // scaling the weight must not change the normalized transform
    auto fn2 = make(build_function_algebra(cat.group, Rational(1, 2)));
    CHECK(fourier_projection(fn2.A, fn2.D, subset_indicator(6, K)) == k);
}

TEST_CASE("transform of the zero-integral case is reported, not computed") {
    auto cat = catalog("cyclic(2)");
    auto fn = make(build_function_algebra(cat.group));
    Vec h(2);
    h[0] = Scalar(1);
    h[1] = Scalar(-1);  // phi(h) = 0
    CHECK_THROWS_AS(fourier_projection(fn.A, fn.D, h), std::runtime_error);
    auto rec = check_fourier_projection(fn.A, fn.D, h);
    CHECK(rec.status == CheckStatus::Fail);
}

TEST_CASE("centrality: the four characterizations agree and detect the truth") {
    auto s3 = catalog("symmetric(3)");
    const std::vector<int> K2 = s3.subgroups["transposition"];
    const std::vector<int> A3 = s3.subgroups["alternating"];

    // commutative algebra: always central
    auto fn = make(build_function_algebra(s3.group));
    auto c1 = centrality_equivalences(fn.A, fn.D, subset_indicator(6, K2));
    CHECK(c1.central);
    CHECK(all_ok(c1.records));

    // group algebra over a non-normal subgroup: not central
    auto gr = make(build_group_algebra(s3.group));
    auto c2 = centrality_equivalences(gr.A, gr.D, uniform_average(6, K2));
    CHECK_FALSE(c2.central);
    CHECK(all_ok(c2.records));
    REQUIRE(c2.records.size() == 2);
    CHECK(c2.records[0].id == "prop1_10_agreement");
    CHECK(c2.records[1].id == "prop1_10_central");
    CHECK(c2.records[1].status == CheckStatus::Finding);
    CHECK(c2.records[1].detail == "central=false");

    // normal subgroup: central
    auto c3 = centrality_equivalences(gr.A, gr.D, uniform_average(6, A3));
    CHECK(c3.central);
    CHECK(all_ok(c3.records));
    CHECK(c3.records[1].detail == "central=true");

    // all-normal group: every subgroup average is central
    auto q8 = catalog("quaternion8");
    auto grq = make(build_group_algebra(q8.group));
    auto c4 = centrality_equivalences(grq.A, grq.D, uniform_average(8, q8.subgroups["i_subgroup"]));
    CHECK(c4.central);
    CHECK(all_ok(c4.records));
}

TEST_CASE("ordered pairs of projections") {
    auto s3 = catalog("symmetric(3)");
    const std::vector<int> K2 = s3.subgroups["transposition"];
    const std::vector<int> full = s3.subgroups["full"];

    // function model: indicator order follows subgroup inclusion
    auto fn = make(build_function_algebra(s3.group));
    auto rf = verify_chain_pair(fn.A, fn.D, subset_indicator(6, K2), subset_indicator(6, full));
    REQUIRE(rf.size() == 3);
    CHECK(rf[0].id == "chain_order");
    CHECK(rf[1].id == "chain_pre3_5");
    CHECK(rf[2].id == "chain_prop1_9");
    CHECK(all_ok(rf));

    // group model: averages order against inclusion (bigger subgroup, smaller projection)
    auto gr = make(build_group_algebra(s3.group));
    auto rg = verify_chain_pair(gr.A, gr.D, uniform_average(6, full), uniform_average(6, K2));
    CHECK(all_ok(rg));

    // incomparable pair: two different order-2 subgroups
    auto bad = verify_chain_pair(fn.A, fn.D, subset_indicator(6, {0, 2}),
                                 subset_indicator(6, {0, 1}));
    CHECK(bad[0].status == CheckStatus::Fail);
}

TEST_CASE("classification check samples when exhaustion is out of reach") {
    auto s4 = catalog("symmetric(4)");
    auto fn = build_function_algebra(s4.group);
    auto rec = check_subset_projection_classification(s4.group, fn);
    CHECK(rec.status == CheckStatus::Pass);
    CHECK(rec.detail.find("sampled subsets") != std::string::npos);
}
