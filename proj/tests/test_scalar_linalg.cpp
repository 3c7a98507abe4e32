#include <catch2/catch_amalgamated.hpp>

#include <qhg/linalg.hpp>
#include <qhg/prng.hpp>

using namespace qhg;

TEST_CASE("scalar arithmetic is exact") {
    Scalar a(Rational(1), Rational(2));   // 1 + 2i
    Scalar b(Rational(3), Rational(-1));  // 3 - i
    CHECK((a * b) == Scalar(Rational(5), Rational(5)));
    CHECK(a + b == Scalar(Rational(4), Rational(1)));
    CHECK(-a == Scalar(Rational(-1), Rational(-2)));
    CHECK(a.conj() == Scalar(Rational(1), Rational(-2)));

    Scalar c(Rational(3), Rational(4));
    CHECK(c * c.inverse() == Scalar(1));
    CHECK(c.inverse() == Scalar(Rational(3, 25), Rational(-4, 25)));
    CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);

    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    CHECK(Scalar::of(2, 4) == Scalar::of(1, 2));
    CHECK(Scalar(7).is_real());
    CHECK_FALSE(Scalar::i().is_real());
}

TEST_CASE("rational parsing and printing") {
    CHECK(rat_str(parse_rat("2/4")) == "1/2");
    CHECK(rat_str(parse_rat("-6/4")) == "-3/2");
    CHECK(rat_str(parse_rat("5")) == "5/1");
    CHECK_THROWS(parse_rat("1/0"));
    CHECK_THROWS(parse_rat("abc"));
}

TEST_CASE("rref canonical form, frozen example") {
    // rows (1, i), (i, -1): the second row is i times the first.
    Mat m(2, 2);
    m.at(0, 0) = Scalar(1);
    m.at(0, 1) = Scalar::i();
    m.at(1, 0) = Scalar::i();
    m.at(1, 1) = Scalar(-1);
    RrefResult rr = rref(m);
    CHECK(rr.rank == 1);
    CHECK(rr.pivots == std::vector<int>{0});
    CHECK(rr.m.at(0, 0) == Scalar(1));
    CHECK(rr.m.at(0, 1) == Scalar::i());
    CHECK(rr.m.at(1, 0) == Scalar(0));
    CHECK(rr.m.at(1, 1) == Scalar(0));
}

TEST_CASE("kernel is canonicalized") {
    Mat m(1, 2);
    m.at(0, 0) = Scalar(1);
    m.at(0, 1) = Scalar::i();
    auto ker = kernel(m);
    REQUIRE(ker.size() == 1);
    // x + i y = 0 normalized to leading one: (1, i).
    CHECK(ker[0][0] == Scalar(1));
    CHECK(ker[0][1] == Scalar::i());
    CHECK(mul(m, ker[0]).is_zero());
}

TEST_CASE("solve and inverse") {
    Mat m(2, 2);
    m.at(0, 0) = Scalar(2);
    m.at(1, 1) = Scalar(3);
    Vec b(2);
    b[0] = Scalar(4);
    b[1] = Scalar(9);
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Scalar(2));
    CHECK((*x)[1] == Scalar(3));

    Mat u(2, 2);
    u.at(0, 0) = Scalar(1);
    u.at(0, 1) = Scalar(1);
    u.at(1, 1) = Scalar(1);
    auto ui = inverse(u);
    REQUIRE(ui.has_value());
    CHECK(ui->at(0, 1) == Scalar(-1));
    CHECK(mul(u, *ui) == Mat::identity(2));

    Mat sing(2, 2);
    sing.at(0, 0) = Scalar(1);
    sing.at(1, 0) = Scalar(1);
    CHECK_FALSE(inverse(sing).has_value());
    Vec bad(2);
    bad[0] = Scalar(0);
    bad[1] = Scalar(1);
    Mat row(2, 1);
    row.at(0, 0) = Scalar(1);
    CHECK_FALSE(solve(row, bad).has_value());
}

TEST_CASE("exact Hermitian PSD via LDL pivots") {
    Mat good(2, 2);
    good.at(0, 0) = Scalar(2);
    good.at(0, 1) = Scalar::i();
    good.at(1, 0) = -Scalar::i();
    good.at(1, 1) = Scalar(2);
    CHECK(hermitian_psd(good));

    Mat indef(2, 2);
    indef.at(0, 0) = Scalar(1);
    indef.at(0, 1) = Scalar(2);
    indef.at(1, 0) = Scalar(2);
    indef.at(1, 1) = Scalar(1);
    CHECK_FALSE(hermitian_psd(indef));

    // zero pivot with a nonzero row is not PSD
    Mat hyper(2, 2);
    hyper.at(0, 1) = Scalar(1);
    hyper.at(1, 0) = Scalar(1);
    CHECK_FALSE(hermitian_psd(hyper));

    Mat degenerate(2, 2);
    degenerate.at(1, 1) = Scalar(5);
    CHECK(hermitian_psd(degenerate));

    Mat nonherm(2, 2);
    nonherm.at(0, 1) = Scalar::i();
    nonherm.at(1, 0) = Scalar::i();
    CHECK_FALSE(hermitian_psd(nonherm));
}

TEST_CASE("subspace algebra, frozen intersection") {
    auto e = [](int k) { return Vec::unit(3, k); };
    Subspace u = Subspace::from_span(3, {e(0), e(1)});
    Subspace v = Subspace::from_span(3, {e(1), e(2)});
    Subspace w = subspace_intersect(u, v);
    REQUIRE(w.dim() == 1);
    CHECK(w.basis[0] == e(1));
    CHECK(subspace_sum(u, v).dim() == 3);
    CHECK(u.contains(e(0)));
    CHECK_FALSE(u.contains(e(2)));

    // coordinates in the canonical basis round-trip
    Subspace s = Subspace::from_span(3, {Vec{{Scalar(1), Scalar(0), Scalar(1)}},
                                         Vec{{Scalar(0), Scalar(1), Scalar(0)}}});
    Vec vv{{Scalar(2), Scalar(3), Scalar(2)}};
    auto c = s.coords_of(vv);
    REQUIRE(c.has_value());
    CHECK(s.from_coords(*c) == vv);
    CHECK_FALSE(s.coords_of(e(2)).has_value());
}

TEST_CASE("subspace equality is canonical under span order") {
    Vec a{{Scalar(1), Scalar(2), Scalar(0)}};
    Vec b{{Scalar(0), Scalar(1), Scalar(1)}};
    Subspace s1 = Subspace::from_span(3, {a, b});
    Subspace s2 = Subspace::from_span(3, {b, a + Scalar(3) * b, Scalar(2) * a});
    CHECK(s1 == s2);
}

TEST_CASE("randomized linear algebra properties") {
    SplitMix64 rng;
    for (int trial = 0; trial < 25; ++trial) {
        Mat m = rng.small_mat(4, 4);
        RrefResult rr = rref(m);
        CHECK(rref(rr.m).m == rr.m);  // idempotent
        CHECK(rank(m) == rank(m.transpose()));
        for (const Vec& z : kernel(m)) CHECK(mul(m, z).is_zero());

        Vec x = rng.small_vec(4);
        Vec rhs = mul(m, x);
        auto sol = solve(m, rhs);
        REQUIRE(sol.has_value());
        CHECK(mul(m, *sol) == rhs);
    }
}

TEST_CASE("randomized subspace dimension formula") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<Vec> su, sv;
        for (int i = 0; i < 2; ++i) su.push_back(rng.small_vec(4));
        for (int i = 0; i < 2; ++i) sv.push_back(rng.small_vec(4));
        Subspace u = Subspace::from_span(4, su), v = Subspace::from_span(4, sv);
        CHECK(subspace_sum(u, v).dim() + subspace_intersect(u, v).dim() == u.dim() + v.dim());
        CHECK(u.contains(subspace_intersect(u, v)));
    }
}

TEST_CASE("tensor coefficient matrices") {
    Vec x{{Scalar(1), Scalar(2)}};
    Vec y{{Scalar(0), Scalar(3)}};
    Tensor2 t = Tensor2::outer(x, y);
    CHECK(t.m.at(0, 1) == Scalar(3));
    CHECK(t.m.at(1, 1) == Scalar(6));
    CHECK(t.flip().m.at(1, 0) == Scalar(3));
    CHECK(row_space(t).dim() == 1);
    CHECK(col_space(t).dim() == 1);
    CHECK(row_space(t).contains(y));
    CHECK(col_space(t).contains(x));
    CHECK(tensor_unvec(2, tensor_vec(t)) == t);
}
