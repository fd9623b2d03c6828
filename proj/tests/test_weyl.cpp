#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "syzcert/ci_hilbert.hpp"
#include "syzcert/weyl.hpp"

#include <set>

using namespace syzcert;

namespace {

std::size_t expected_root_count(LieType type, int rank) {
    auto r = static_cast<std::size_t>(rank);
    switch (type) {
        case LieType::A: return r * (r + 1) / 2;
        case LieType::B:
        case LieType::C: return r * r;
        case LieType::D: return r * (r - 1);
        case LieType::G: return 6;
        case LieType::F: return 24;
        case LieType::E: return rank == 6 ? 36 : (rank == 7 ? 63 : 120);
    }
    return 0;
}

}  // namespace

TEST_CASE("rank validation") {
    CHECK_THROWS(build_root_table({LieType::A, 0, 1}));
    CHECK_THROWS(build_root_table({LieType::B, 1, 1}));
    CHECK_THROWS(build_root_table({LieType::D, 2, 1}));
    CHECK_THROWS(build_root_table({LieType::G, 3, 1}));
    CHECK_THROWS(build_root_table({LieType::E, 5, 1}));
    CHECK_THROWS(build_root_table({LieType::F, 3, 1}));
    CHECK_THROWS(build_root_table({LieType::A, 3, 0}));
    CHECK_THROWS(build_root_table({LieType::A, 3, 4}));
    CHECK_THROWS(lie_type_from_char('X'));
    CHECK(lie_type_from_char('b') == LieType::B);
}

TEST_CASE("positive root counts") {
    for (int rank = 1; rank <= 8; ++rank) {
        CHECK(build_root_table({LieType::A, rank, 1}).roots.size() ==
              expected_root_count(LieType::A, rank));
    }
    for (int rank = 2; rank <= 8; ++rank) {
        CHECK(build_root_table({LieType::B, rank, 1}).roots.size() ==
              expected_root_count(LieType::B, rank));
        CHECK(build_root_table({LieType::C, rank, 1}).roots.size() ==
              expected_root_count(LieType::C, rank));
    }
    for (int rank = 3; rank <= 8; ++rank) {
        CHECK(build_root_table({LieType::D, rank, 1}).roots.size() ==
              expected_root_count(LieType::D, rank));
    }
    CHECK(build_root_table({LieType::G, 2, 1}).roots.size() == 6);
    CHECK(build_root_table({LieType::G, 2, 2}).roots.size() == 6);
    CHECK(build_root_table({LieType::F, 4, 1}).roots.size() == 24);
    CHECK(build_root_table({LieType::E, 6, 1}).roots.size() == 36);
    CHECK(build_root_table({LieType::E, 7, 7}).roots.size() == 63);
    CHECK(build_root_table({LieType::E, 8, 8}).roots.size() == 120);
}

TEST_CASE("pairing table for A2 node 1") {
    RootTable rt = build_root_table({LieType::A, 2, 1});
    REQUIRE(rt.roots.size() == 3);
    CHECK(rt.roots[0].simple_coeffs == std::vector<int>{1, 0});
    CHECK(rt.roots[0].lambda_pairing == 1);
    CHECK(rt.roots[0].rho_pairing == 1);
    CHECK(rt.roots[1].simple_coeffs == std::vector<int>{0, 1});
    CHECK(rt.roots[1].lambda_pairing == 0);
    CHECK(rt.roots[1].rho_pairing == 1);
    CHECK(rt.roots[2].simple_coeffs == std::vector<int>{1, 1});
    CHECK(rt.roots[2].lambda_pairing == 1);
    CHECK(rt.roots[2].rho_pairing == 2);
}

TEST_CASE("pairing table for B2 node 1") {
    RootTable rt = build_root_table({LieType::B, 2, 1});
    REQUIRE(rt.roots.size() == 4);
    std::multiset<std::pair<int, int>> nonzero;
    int zero_count = 0;
    for (const auto& root : rt.roots) {
        if (root.lambda_pairing == 0) {
            ++zero_count;
        } else {
            nonzero.insert({root.lambda_pairing, root.rho_pairing});
        }
    }
    CHECK(zero_count == 1);
    CHECK(nonzero == std::multiset<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("rho pairs to one with simple coroots") {
    for (RootDatum rd : {RootDatum{LieType::A, 5, 2}, RootDatum{LieType::B, 4, 3},
                         RootDatum{LieType::C, 3, 1}, RootDatum{LieType::D, 5, 5},
                         RootDatum{LieType::G, 2, 1}, RootDatum{LieType::F, 4, 4},
                         RootDatum{LieType::E, 6, 2}}) {
        RootTable rt = build_root_table(rd);
        for (const auto& root : rt.roots) {
            int height = 0;
            for (int c : root.simple_coeffs) height += c;
            CHECK(root.rho_pairing >= 1);
            if (height == 1) CHECK(root.rho_pairing == 1);
            CHECK(root.lambda_pairing >= 0);
        }
    }
}

TEST_CASE("projective space: type A node 1") {
    for (int n = 1; n <= 8; ++n) {
        CHECK(hilbert_homogeneous(RootDatum{LieType::A, n, 1}) == f_poly(n, {}));
    }
}

TEST_CASE("quadric threefold: B2 node 1") {
    Polynomial p = hilbert_homogeneous(RootDatum{LieType::B, 2, 1});
    CHECK(p == f_poly(4, {2}));
    // (t+1)(t+2)(2t+3)/6
    Polynomial expected =
        Polynomial(std::vector<Rational>{Rational(1), Rational(1)}) *
        Polynomial(std::vector<Rational>{Rational(2), Rational(1)}) *
        Polynomial(std::vector<Rational>{Rational(3), Rational(2)});
    expected /= Rational(6);
    CHECK(p == expected);
    CHECK(dim_homogeneous(RootDatum{LieType::B, 2, 1}) == 3);
}

TEST_CASE("odd and even quadrics across ranks") {
    for (int m = 2; m <= 6; ++m) {
        CHECK(hilbert_homogeneous(RootDatum{LieType::B, m, 1}) == f_poly(2 * m, {2}));
    }
    for (int m = 3; m <= 6; ++m) {
        CHECK(hilbert_homogeneous(RootDatum{LieType::D, m, 1}) == f_poly(2 * m - 1, {2}));
    }
}

TEST_CASE("Grassmannian of planes in 4-space: A3 node 2") {
    RootDatum rd{LieType::A, 3, 2};
    Polynomial p = hilbert_homogeneous(rd);
    Polynomial expected =
        Polynomial(std::vector<Rational>{Rational(1), Rational(1)}) *
        Polynomial(std::vector<Rational>{Rational(2), Rational(1)}) *
        Polynomial(std::vector<Rational>{Rational(2), Rational(1)}) *
        Polynomial(std::vector<Rational>{Rational(3), Rational(1)});
    expected /= Rational(12);
    CHECK(p == expected);
    CHECK(poly_eval_int(p, 1) == 6);   // Pluecker coordinates of Gr(2,4)
    CHECK(poly_eval_int(p, 2) == 20);
    CHECK(dim_homogeneous(rd) == 4);
}

TEST_CASE("dimension equals polynomial degree and factor count") {
    CHECK(dim_homogeneous(RootDatum{LieType::A, 3, 1}) == 3);
    for (LieType type : {LieType::A, LieType::B, LieType::C, LieType::D, LieType::G}) {
        int lo = type == LieType::G ? 2 : (type == LieType::D ? 3 : (type == LieType::A ? 1 : 2));
        int hi = type == LieType::G ? 2 : 8;
        for (int rank = lo; rank <= hi; ++rank) {
            for (int node = 1; node <= rank; ++node) {
                RootTable rt = build_root_table({type, rank, node});
                Polynomial p = hilbert_homogeneous(rt);
                CAPTURE(lie_type_to_char(type));
                CAPTURE(rank);
                CAPTURE(node);
                CHECK(p.degree() == dim_homogeneous(rt));
                CHECK(factored_form(rt).size() == static_cast<std::size_t>(p.degree()));
                // chi(O) = 1, and every coefficient is non-negative
                CHECK(p.coeff(0) == 1);
                for (const auto& c : p.coeffs()) CHECK(c >= 0);
                for (auto [lambda, rho] : factored_form(rt)) {
                    CHECK(lambda > 0);
                    CHECK(rho > 0);
                }
            }
        }
    }
}

TEST_CASE("exceptional types behind the same interface") {
    // G2/P1: 5-dimensional quadric section; G2/P2: 5-dimensional adjoint variety
    CHECK(hilbert_homogeneous(RootDatum{LieType::G, 2, 1}) == f_poly(6, {2}));
    Polynomial adjoint = hilbert_homogeneous(RootDatum{LieType::G, 2, 2});
    CHECK(adjoint.degree() == 5);
    CHECK(poly_eval_int(adjoint, 1) == 14);  // adjoint representation of G2

    Polynomial e6 = hilbert_homogeneous(RootDatum{LieType::E, 6, 1});
    CHECK(e6.degree() == 16);                // Cayley plane
    CHECK(poly_eval_int(e6, 1) == 27);       // minimal representation of E6

    Polynomial f4 = hilbert_homogeneous(RootDatum{LieType::F, 4, 4});
    CHECK(f4.degree() == 15);
    CHECK(poly_eval_int(f4, 1) == 26);       // minimal representation of F4

    Polynomial e7 = hilbert_homogeneous(RootDatum{LieType::E, 7, 7});
    CHECK(e7.degree() == 27);                // Freudenthal variety
    CHECK(poly_eval_int(e7, 1) == 56);

    Polynomial e8 = hilbert_homogeneous(RootDatum{LieType::E, 8, 8});
    CHECK(e8.degree() == 57);                // E8 adjoint variety
    CHECK(poly_eval_int(e8, 1) == 248);
}

TEST_CASE("spinor variety spot check") {
    // D5 node 5: 10-dimensional spinor variety, h^0 = 16 (half-spin representation)
    RootDatum rd{LieType::D, 5, 5};
    Polynomial p = hilbert_homogeneous(rd);
    CHECK(p.degree() == 10);
    CHECK(poly_eval_int(p, 1) == 16);
}
