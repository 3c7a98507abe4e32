#include <catch2/catch_amalgamated.hpp>

#include <qhg/compact.hpp>
#include <qhg/discrete.hpp>

using namespace qhg;

namespace {

bool all_ok(const std::vector<CheckRecord>& recs) {
    for (const auto& r : recs)
        if (r.status == CheckStatus::Fail) return false;
    return true;
}

std::string first_bad(const std::vector<CheckRecord>& recs) {
    for (const auto& r : recs)
        if (r.status == CheckStatus::Fail) return r.id + ": " + r.detail;
    return "";
}

const CheckRecord& by_id(const std::vector<CheckRecord>& recs, const std::string& id) {
    for (const auto& r : recs)
        if (r.id == id) return r;
    throw std::runtime_error("record not found: " + id);
}

}  // namespace

TEST_CASE("discrete construction on a function model with a non-normal subgroup") {
    auto g = catalog("symmetric(3)").group;
    const auto A = build_function_algebra(g);
    const std::vector<int> K{0, 2};
    const Vec h = subset_indicator(6, K);
    const auto md = compute_modular_data(A);
    const DiscreteData D = build_discrete(A, h);

    // two double cosets: the subgroup itself and everything else
    CHECK(D.c1.dim == 2);
    CHECK(D.c1.basis_vec(0) == subset_indicator(6, {0, 2}));
    CHECK(D.c1.basis_vec(1) == subset_indicator(6, {1, 3, 4, 5}));
    CHECK(D.ranges_ok);

    const auto recs = verify_discrete(A, md, D);
    INFO(first_bad(recs));
    CHECK(recs.size() == 21);
    CHECK(all_ok(recs));
    CHECK(by_id(recs, "thm3_17_certified").status == CheckStatus::Pass);

    const auto cf = check_discrete_closed_forms(A, D, g, K);
    INFO(first_bad(cf));
    CHECK(all_ok(cf));

    std::vector<Vec> dc{subset_indicator(6, {0, 2}), subset_indicator(6, {1, 3, 4, 5})};
    const Subspace exact = Subspace::from_span(6, dc);
    CHECK(check_c1_dim(D, 2, "number of double cosets", &exact).status == CheckStatus::Pass);
    CHECK(check_c1_dim(D, 3, "wrong on purpose").status == CheckStatus::Fail);

    const auto t38 = verify_thm3_8(A, D);
    CHECK(t38.size() == 6);
    CHECK(by_id(t38, "thm3_8_gate").status == CheckStatus::Finding);
    CHECK(by_id(t38, "thm3_8_gate").detail.find("legs differ") != std::string::npos);
    CHECK(by_id(t38, "thm3_8_c_axioms").status == CheckStatus::Skipped);
    CHECK(by_id(t38, "thm3_8_c_matches_canonical").status == CheckStatus::Skipped);
    const auto& w = by_id(t38, "thm3_8_witness");
    CHECK(w.status == CheckStatus::Pass);
    CHECK(w.detail.find("antipode law fails on") != std::string::npos);

    // the number of double cosets matches the dual-side convolution classes
    const HeckeData hd = build_hecke(g, K);
    CHECK(static_cast<int>(hd.classes.size()) == D.c1.dim);
}

TEST_CASE("discrete construction on a function model with a normal subgroup") {
    auto g = catalog("symmetric(3)").group;
    const auto A = build_function_algebra(g);
    const std::vector<int> K{0, 3, 4};
    const Vec h = subset_indicator(6, K);
    const auto md = compute_modular_data(A);
    const DiscreteData D = build_discrete(A, h);

    CHECK(D.c1.dim == 2);
    CHECK(D.legs.right == D.legs.left);

    const auto recs = verify_discrete(A, md, D);
    INFO(first_bad(recs));
    CHECK(all_ok(recs));
    const auto cf = check_discrete_closed_forms(A, D, g, K);
    INFO(first_bad(cf));
    CHECK(all_ok(cf));

    // legs coincide: the leg algebra is the function algebra of the quotient
    const Subgroup sub = make_subgroup(g, K);
    const auto q = quotient_group(g, sub);
    const auto canonical = build_function_algebra(q.group, Rational(3));
    const auto t38 = verify_thm3_8(A, D, &canonical, Scalar(1));
    INFO(first_bad(t38));
    CHECK(all_ok(t38));
    CHECK(by_id(t38, "thm3_8_gate").detail.find("legs coincide") != std::string::npos);
    CHECK(by_id(t38, "thm3_8_c_axioms").status == CheckStatus::Pass);
    CHECK(by_id(t38, "thm3_8_cointegral").status == CheckStatus::Pass);
    CHECK(by_id(t38, "thm3_8_t1_inverse_formula").status == CheckStatus::Pass);
    CHECK(by_id(t38, "thm3_8_c_matches_canonical").status == CheckStatus::Pass);
    CHECK(by_id(t38, "thm3_8_witness").status == CheckStatus::Skipped);
}

TEST_CASE("discrete construction on group models") {
    SECTION("two-element subgroup") {
        auto g = catalog("symmetric(3)").group;
        const auto A = build_group_algebra(g);
        const std::vector<int> K{0, 2};
        const Vec h = uniform_average(6, K);
        const auto md = compute_modular_data(A);
        const DiscreteData D = build_discrete(A, h);

        CHECK(D.c1.dim == 2);
        CHECK(D.c1.basis_vec(0) == Vec::unit(6, 0));
        CHECK(D.c1.basis_vec(1) == Vec::unit(6, 2));

        const auto recs = verify_discrete(A, md, D);
        INFO(first_bad(recs));
        CHECK(all_ok(recs));
        const auto cf = check_discrete_closed_forms_group(A, D, g, K);
        INFO(first_bad(cf));
        CHECK(all_ok(cf));

        const auto canonical = build_group_algebra(subgroup_group(g, K, "K"));
        const auto t38 = verify_thm3_8(A, D, &canonical, Scalar(1));
        INFO(first_bad(t38));
        CHECK(all_ok(t38));
        CHECK(by_id(t38, "thm3_8_c_matches_canonical").status == CheckStatus::Pass);
    }
    SECTION("quaternion group, cyclic subgroup of order four") {
        const auto entry = catalog("quaternion8");
        const auto A = build_group_algebra(entry.group);
        const auto& K = entry.subgroups.at("i_subgroup");
        const Vec h = uniform_average(8, K);
        const auto md = compute_modular_data(A);
        const DiscreteData D = build_discrete(A, h);

        CHECK(D.c1.dim == 4);
        const auto recs = verify_discrete(A, md, D);
        INFO(first_bad(recs));
        CHECK(all_ok(recs));
        const auto canonical = build_group_algebra(subgroup_group(entry.group, K, "<i>"));
        const auto t38 = verify_thm3_8(A, D, &canonical, Scalar(1));
        INFO(first_bad(t38));
        CHECK(all_ok(t38));
    }
}

TEST_CASE("discrete construction on a 24-point function model") {
    const auto entry = catalog("symmetric(4)");
    const auto A = build_function_algebra(entry.group);
    const auto& K = entry.subgroups.at("point_stabilizer");
    const Vec h = subset_indicator(24, K);
    const auto md = compute_modular_data(A);
    const DiscreteData D = build_discrete(A, h);

    CHECK(D.c1.dim == 2);  // the stabilizer and its complement form the double cosets
    const auto recs = verify_discrete(A, md, D);
    INFO(first_bad(recs));
    CHECK(all_ok(recs));
    const auto cf = check_discrete_closed_forms(A, D, entry.group, K);
    INFO(first_bad(cf));
    CHECK(all_ok(cf));
    const auto t38 = verify_thm3_8(A, D);
    CHECK(by_id(t38, "thm3_8_gate").detail.find("legs differ") != std::string::npos);
    CHECK(by_id(t38, "thm3_8_witness").status == CheckStatus::Pass);
}

TEST_CASE("guard path when the averaged coproduct is corrupted") {
    auto g = catalog("symmetric(3)").group;
    const auto A = build_function_algebra(g);
    const Vec h = subset_indicator(6, {0, 2});
    const auto md = compute_modular_data(A);
    DiscreteData D = build_discrete(A, h);
    D.ranges_ok = false;
    const auto recs = verify_discrete(A, md, D);
    CHECK(by_id(recs, "prop3_13_ranges").status == CheckStatus::Fail);
    CHECK(by_id(recs, "delta1_gram_psd").status == CheckStatus::Fail);
    CHECK(by_id(recs, "thm3_17_certified").status == CheckStatus::Fail);
    CHECK(by_id(recs, "thm3_17_certified").detail.find("prop3_13_ranges") != std::string::npos);
}
