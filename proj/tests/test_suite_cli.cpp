#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <set>

#include <qhg/json_io.hpp>

using namespace qhg;

namespace {

const CheckRecord& by_id(const VerificationReport& rep, const std::string& target,
                         const std::string& id) {
    for (const auto& [t, r] : rep.records)
        if (t == target && r.id == id) return r;
    throw std::runtime_error("record not found: " + target + "/" + id);
}

int count_id(const VerificationReport& rep, const std::string& id, CheckStatus st) {
    int n = 0;
    for (const auto& [t, r] : rep.records) {
        (void)t;
        if (r.id == id && r.status == st) ++n;
    }
    return n;
}

const VerificationReport& s3_k2_report() {
    static const VerificationReport rep = [] {
        return run_suite(instance_from_catalog("symmetric(3)", "transposition"), {});
    }();
    return rep;
}

}  // namespace

TEST_CASE("registry ids are unique and one full run covers all of them") {
    std::set<std::string> registered;
    for (const auto& d : check_registry()) {
        REQUIRE(registered.insert(d.id).second);
        REQUIRE(d.statement[0] != '\0');
    }
    std::set<std::string> emitted;
    for (const auto& [t, r] : s3_k2_report().records) {
        (void)t;
        emitted.insert(r.id);
    }
    REQUIRE(emitted == registered);
}

TEST_CASE("suite runs are byte-identical for any worker count") {
    const InstanceSpec spec = instance_from_catalog("symmetric(3)", "transposition");
    SuiteOptions o8;
    o8.jobs = 8;
    const std::string a = report_json(run_suite(spec, {})).dump();
    const std::string b = report_json(run_suite(spec, o8)).dump();
    REQUIRE(a == b);
}

TEST_CASE("suite targets appear in canonical order") {
    std::vector<std::string> order;
    for (const auto& [t, r] : s3_k2_report().records) {
        (void)r;
        if (order.empty() || order.back() != t) order.push_back(t);
    }
    REQUIRE(order == std::vector<std::string>{"group", "function_model", "group_model",
                                              "function_model_dual", "group_model_dual",
                                              "cross_model", "chain_function_model",
                                              "chain_group_model"});
}

TEST_CASE("suite content on the non-normal order-2 instance") {
    const VerificationReport& rep = s3_k2_report();
    REQUIRE(rep.ok());
    REQUIRE(rep.count(CheckStatus::Fail) == 0);

    // group data
    CHECK(by_id(rep, "group", "group_valid").status == CheckStatus::Pass);
    CHECK(by_id(rep, "group", "cosets_partition").status == CheckStatus::Pass);

    // dimensions land on the subgroup/coset counts
    CHECK(by_id(rep, "function_model", "compact_dim_expected").detail ==
          "dim 2, order of the subgroup");
    CHECK(by_id(rep, "function_model", "legs_dim_expected").detail == "index of the subgroup");
    CHECK(by_id(rep, "function_model", "c1_dim_expected").detail == "number of double cosets");
    CHECK(by_id(rep, "group_model", "compact_dim_expected").detail ==
          "dim 2, number of double cosets");
    CHECK(by_id(rep, "group_model", "legs_dim_expected").detail == "order of the subgroup");

    // duals swap the expected dimensions
    CHECK(by_id(rep, "function_model_dual", "compact_dim_expected").detail ==
          "dim 2, number of double cosets");
    CHECK(by_id(rep, "group_model_dual", "legs_dim_expected").detail == "index of the subgroup");

    // centrality: pointwise model always central, convolution model not (K non-normal)
    CHECK(by_id(rep, "function_model", "prop1_10_central").detail == "central=true");
    CHECK(by_id(rep, "group_model", "prop1_10_central").detail == "central=false");
    CHECK(by_id(rep, "group_model", "prop2_1_central_quotient").status == CheckStatus::Skipped);
    CHECK(by_id(rep, "function_model", "compact_central_reproduces").status == CheckStatus::Pass);

    // convolution side carries the double-coset construction, pointwise side skips it
    CHECK(by_id(rep, "group_model", "hecke_product_formula").status == CheckStatus::Pass);
    CHECK(by_id(rep, "function_model", "hecke_product_formula").status == CheckStatus::Skipped);

    // legs differ, so the discrete gate reports the hypergroup branch + witness
    CHECK(by_id(rep, "function_model", "thm3_8_gate").status == CheckStatus::Finding);
    CHECK(by_id(rep, "function_model", "thm3_8_witness").status == CheckStatus::Pass);
    CHECK(by_id(rep, "group_model", "thm3_8_witness").status == CheckStatus::Skipped);
    CHECK(by_id(rep, "group_model", "thm3_8_c_matches_canonical").detail.rfind("reproduces", 0) ==
          0);

    // cross-model facts
    CHECK(by_id(rep, "cross_model", "dual_function_model_is_group_model").status ==
          CheckStatus::Pass);
    CHECK(by_id(rep, "cross_model", "dual_group_model_is_function_model").status ==
          CheckStatus::Pass);
    CHECK(by_id(rep, "cross_model", "discrete_hecke_dim_match").detail == "both equal 2");

    // the leg algebra closure certificate runs on all four model targets
    CHECK(count_id(rep, "subalgebra_closure_certified", CheckStatus::Pass) == 4);
}

TEST_CASE("suite content on the normal-subgroup instance") {
    const VerificationReport rep =
        run_suite(instance_from_catalog("symmetric(3)", "alternating"), {});
    REQUIRE(rep.ok());
    CHECK(by_id(rep, "group_model", "prop1_10_central").detail == "central=true");
    CHECK(by_id(rep, "group_model", "prop2_1_central_quotient").status == CheckStatus::Pass);
    CHECK(by_id(rep, "group_model", "compact_central_reproduces").status == CheckStatus::Pass);
    CHECK(by_id(rep, "function_model", "thm3_8_gate").detail.find("coincide") !=
          std::string::npos);
    CHECK(by_id(rep, "function_model", "thm3_8_c_axioms").status == CheckStatus::Pass);
    CHECK(by_id(rep, "function_model", "thm3_8_c_matches_canonical").status == CheckStatus::Pass);
    CHECK(by_id(rep, "function_model", "thm3_8_witness").status == CheckStatus::Skipped);
}

TEST_CASE("duals can be turned off and a custom chain is honored") {
    InstanceSpec spec = instance_from_catalog("cyclic(4)", "order2");
    spec.with_duals = false;
    spec.chain = {{0}, {0, 2}, {0, 1, 2, 3}};
    const VerificationReport rep = run_suite(spec, {});
    REQUIRE(rep.ok());
    for (const auto& [t, r] : rep.records) {
        (void)r;
        CHECK(t.find("_dual") == std::string::npos);
    }
    CHECK(count_id(rep, "chain_prop3_5", CheckStatus::Pass) == 4);  // 2 pairs x 2 models
}

TEST_CASE("suite rejects bad input") {
    InstanceSpec spec = instance_from_catalog("symmetric(3)", "transposition");
    spec.subgroup = {0, 1, 2};  // not closed
    CHECK_THROWS_AS(run_suite(spec, {}), std::invalid_argument);

    spec = instance_from_catalog("symmetric(3)", "transposition");
    spec.chain = {{0, 2}, {0}};  // not nested upward
    CHECK_THROWS_AS(run_suite(spec, {}), std::invalid_argument);

    spec = instance_from_catalog("symmetric(3)", "transposition");
    REQUIRE(setenv("QHG_ORDER_CAP", "4", 1) == 0);
    CHECK_THROWS_AS(run_suite(spec, {}), std::runtime_error);
    REQUIRE(unsetenv("QHG_ORDER_CAP") == 0);
}

TEST_CASE("scalar and matrix json round-trips are exact") {
    const Scalar s(Rational(1, 2), Rational(-3));
    CHECK(scalar_json(s) == json({{"re", "1/2"}, {"im", "-3/1"}}));
    CHECK(scalar_from_json(scalar_json(s)) == s);
    CHECK(scalar_from_json(json("7/3")) == Scalar(Rational(7, 3)));

    Mat m(2, 3);
    m.at(0, 1) = Scalar(Rational(5, 7));
    m.at(1, 2) = Scalar(Rational(0), Rational(2));
    const Mat back = mat_from_json(mat_json(m));
    CHECK(back == m);
    CHECK_THROWS_AS(mat_from_json(json::parse("[[{\"re\":\"1\"}],[]]")), std::invalid_argument);
}

TEST_CASE("instance specs parse from json") {
    const json j = json::parse(R"qhg({
        "schema": "qhg/1",
        "group": {"catalog": "symmetric(3)"},
        "subgroup": "transposition",
        "weight": "1/2",
        "with_duals": false,
        "chain": [[0], [0, 2]]
    })qhg");
    const InstanceSpec spec = instance_spec_from_json(j);
    CHECK(spec.name == "symmetric(3)/transposition");
    CHECK(spec.subgroup == std::vector<int>{0, 2});
    CHECK(spec.weight == Rational(1, 2));
    CHECK_FALSE(spec.with_duals);
    CHECK(spec.chain.size() == 2);

    // group as explicit table, subgroup as a list
    const json j2 = json::parse(R"qhg({
        "group": {"name": "klein", "table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]},
        "subgroup": [1, 0]
    })qhg");
    const InstanceSpec s2 = instance_spec_from_json(j2);
    CHECK(s2.group->order == 4);
    CHECK(s2.subgroup == std::vector<int>{0, 1});
    CHECK(s2.weight == Rational(1));
    CHECK(s2.name == "klein/K2");

    CHECK_THROWS_AS(instance_spec_from_json(json::parse(R"qhg({"subgroup": [0]})qhg")),
                    std::invalid_argument);
    CHECK_THROWS_AS(instance_spec_from_json(json::parse(
                        R"qhg({"group": "symmetric(3)", "subgroup": "nope"})qhg")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        instance_spec_from_json(json::parse(
            R"qhg({"group": "symmetric(3)", "subgroup": "transposition", "weight": "0"})qhg")),
        std::invalid_argument);
    CHECK_THROWS_AS(instance_spec_from_json(json::parse(
                        R"qhg({"schema": "other/9", "group": "klein4", "subgroup": [0]})qhg")),
                    std::invalid_argument);
}

TEST_CASE("algebra dumps reload exactly with the unit re-derived") {
    const GroupPtr g = catalog("quaternion8").group;
    const HopfStarAlgebra A = build_group_algebra(g, Rational(2));
    const json j = algebra_json(A);
    CHECK_FALSE(j.contains("unit"));
    const HopfStarAlgebra B = algebra_from_json(j);
    CHECK(algebras_equal(A, B));
    CHECK(B.unit == A.unit);
    CHECK(B.name == A.name);

    json broken = j;
    broken["mult"][0][0] = json::array();  // wrong arity
    CHECK_THROWS_AS(algebra_from_json(broken), std::invalid_argument);

    json wrong_kind = j;
    wrong_kind["kind"] = "something_else";
    CHECK_THROWS_AS(algebra_from_json(wrong_kind), std::invalid_argument);

    // destroy the unit row: no solution to the two-sided unit equations
    json unitless = j;
    for (auto& row : unitless["mult"])
        for (auto& entry : row)
            for (auto& c : entry) c = scalar_json(Scalar(0));
    CHECK_THROWS_AS(algebra_from_json(unitless), std::invalid_argument);
}

TEST_CASE("report serialization carries summary, statuses, and witnesses") {
    const json rj = report_json(s3_k2_report());
    CHECK(rj.at("schema") == kSchema);
    CHECK(rj.at("kind") == "verification_report");
    CHECK(rj.at("summary").at("ok") == true);
    CHECK(rj.at("summary").at("records").get<size_t>() == s3_k2_report().records.size());
    CHECK(rj.at("records").size() == s3_k2_report().records.size());
    for (const auto& e : rj.at("records")) {
        CHECK(e.contains("target"));
        CHECK(e.contains("id"));
        const std::string st = e.at("status").get<std::string>();
        CHECK((st == "pass" || st == "fail" || st == "skipped" || st == "finding"));
    }

    // a genuine failure serializes its witness
    const HopfStarAlgebra A = build_function_algebra(catalog("symmetric(3)").group, Rational(1));
    Vec v(A.dim);
    v[0] = Scalar(1);
    v[1] = Scalar(-1);
    const CheckRecord bad = check_span_closed(A, {v});
    REQUIRE(bad.status == CheckStatus::Fail);
    REQUIRE_FALSE(bad.witness.empty());
    VerificationReport rep;
    rep.instance = "negative control";
    rep.add("control", bad);
    const json nj = report_json(rep);
    CHECK(nj.at("records").at(0).at("witness").at("fields").size() == 3);
    CHECK(nj.at("summary").at("ok") == false);
}
