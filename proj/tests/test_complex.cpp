#include <functional>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "wlab/complex.hpp"

using namespace wlab;
using wlab::testing::w;

namespace {

PointedTree chain_tree_12(int n = 2) {
    // * - a - 1 - b - 2
    return canonical_tree(n, {0, 0, 1}, {0, 1});
}

}  // namespace

TEST_CASE("carried moves") {
    FreeProduct fp = testing::z2z2();
    CHECK(carried_moves_at(fp, nuclear_tree(2)).empty());
    auto moves = carried_moves_at(fp, chain_tree_12());
    // operative 1 with non-* petal {2}: one nontrivial choice; operative 2 trivial
    REQUIRE(moves.size() == 1);
    CHECK(moves[0].operative == 1);
    CHECK(moves[0].y == std::vector<int>{0, 0, 1});

    FreeProduct zz = testing::z3z2();
    auto moves3 = carried_moves_at(zz, chain_tree_12());
    CHECK(moves3.size() == 2);  // |G_1| - 1 choices
}

TEST_CASE("canonical vertices and orbits") {
    FreeProduct fp = testing::z2z2();
    PointedTree chain = chain_tree_12();
    Basis h0 = standard_basis(2);
    Basis conj = canonicalize_basis(fp, {Word{}, w(fp, {{1, 1}})});

    // nuclear pair: orbit of size one
    CHECK(vertex_orbit(fp, h0, nuclear_tree(2)).size() == 1);

    // the carried move connects (h0, chain) and ((eps, a), chain)
    VertexType v1 = canonical_vertex(fp, h0, chain);
    VertexType v2 = canonical_vertex(fp, conj, chain);
    CHECK(v1 == v2);
    CHECK(vertex_orbit(fp, h0, chain).size() == 2);

    // idempotent
    VertexType v3 = canonical_vertex(fp, v1.basis, v1.tree);
    CHECK(v3 == v1);
}

TEST_CASE("automorphism elements") {
    FreeProduct fp = testing::z2z2();
    RootedBasis h0 = RootedBasis::standard(fp);
    MoveSpec m{1, {0, 0, 1}};
    AutElement alpha = AutElement::from_move(fp, h0, m);

    // all conjugators identity -> identity map
    AutElement id = AutElement::from_move(fp, h0, MoveSpec{1, {0, 0, 0}});
    CHECK(id.is_identity(fp));

    // alpha: b -> aba, a -> a
    CHECK(alpha.apply(fp, w(fp, {{2, 1}})) == w(fp, {{1, 1}, {2, 1}, {1, 1}}));
    CHECK(alpha.apply(fp, w(fp, {{1, 1}})) == w(fp, {{1, 1}}));
    // on the word ab: a . aba = ba
    CHECK(alpha.apply(fp, w(fp, {{1, 1}, {2, 1}})) == w(fp, {{2, 1}, {1, 1}}));

    CHECK(element_order(fp, alpha) == 2);

    // composition == sequential application
    AutElement beta = AutElement::from_move(fp, h0, MoveSpec{2, {0, 1, 0}});
    AutElement ab = compose(fp, alpha, beta);
    for (const Word& u : enumerate_elements(fp, 16))
        CHECK(ab.apply(fp, u) == beta.apply(fp, alpha.apply(fp, u)));
    CHECK_FALSE(element_order(fp, ab).has_value());  // infinite order, cap hit

    // split_conjugator recovers the conjugating word
    auto split = split_conjugator(fp, alpha, 2);
    REQUIRE(split.has_value());
    CHECK(split->first == w(fp, {{1, 1}}));
    CHECK(split->second.is_identity());
}

TEST_CASE("vertex action") {
    FreeProduct fp = testing::z3z3();
    VertexType nuc = canonical_vertex(fp, standard_basis(2), nuclear_tree(2));

    // identity fixes everything
    CHECK(apply_to_vertex(fp, AutElement::identity(fp), nuc) == nuc);

    // factor automorphisms fix every vertex with the standard basis
    for (const FactorAuto& psi : factor_automorphisms(fp.factor(1))) {
        AutElement a = AutElement::from_factor_auto(fp, psi);
        CHECK(apply_to_vertex(fp, a, nuc) == nuc);
        VertexType chain = canonical_vertex(fp, standard_basis(2), chain_tree_12());
        CHECK(apply_to_vertex(fp, a, chain) == chain);
    }

    // inner-style move sends the nuclear vertex to the conjugated basis
    FreeProduct f2 = testing::z2z2();
    RootedBasis s2 = RootedBasis::standard(f2);
    AutElement alpha = AutElement::from_move(f2, s2, MoveSpec{1, {0, 0, 1}});
    VertexType nuc2 = canonical_vertex(f2, standard_basis(2), nuclear_tree(2));
    VertexType moved = apply_to_vertex(f2, alpha, nuc2);
    CHECK(moved.basis.w[1] == w(f2, {{1, 1}}));

    // action preserves the class order on the n=2 star
    StarPoset star = star_poset(f2, standard_basis(2));
    for (const auto& u : star.elems)
        for (const auto& v : star.elems) {
            bool uv = vertex_leq(f2, u, v);
            bool au = vertex_leq(f2, apply_to_vertex(f2, alpha, u), apply_to_vertex(f2, alpha, v));
            CHECK(uv == au);
        }
}

TEST_CASE("star poset") {
    FreeProduct fp = testing::z2z2();
    StarPoset s = star_poset(fp, standard_basis(2));
    CHECK(s.elems.size() == 3);
    CHECK(s.elems[0].nuclear());
    for (size_t i = 0; i < s.elems.size(); ++i) CHECK(s.leq[0][i]);
}

TEST_CASE("ball enumeration") {
    FreeProduct fp = testing::z2z2();
    auto w0 = lambda_words(fp);

    Ball tight = enumerate_ball(fp, w0, 2);  // radius n: only the base vertex
    CHECK(tight.vertices.size() == 1);

    Ball ball = enumerate_ball(fp, w0, 4);
    CHECK(ball.vertices.size() > 1);
    CHECK(ball.find(standard_basis(2)) == 0);
    Basis ea = canonicalize_basis(fp, {Word{}, w(fp, {{1, 1}})});
    Basis eb = canonicalize_basis(fp, {w(fp, {{2, 1}}), Word{}});
    CHECK(ball.find(ea) >= 0);
    CHECK(ball.find(eb) >= 0);
    for (const BallVertex& v : ball.vertices) {
        CHECK(v.w0_norm <= 4);
        CHECK(v.w0_norm == norm_w(fp, v.rb, w0));
    }

    // monotone in the radius
    Ball bigger = enumerate_ball(fp, w0, 6);
    for (const BallVertex& v : ball.vertices) CHECK(bigger.find(v.rb.basis) >= 0);

    // determinism
    Ball again = enumerate_ball(fp, w0, 4);
    REQUIRE(again.vertices.size() == ball.vertices.size());
    for (size_t i = 0; i < ball.vertices.size(); ++i)
        CHECK(again.vertices[i].rb.basis == ball.vertices[i].rb.basis);
    CHECK(again.edges == ball.edges);
}

TEST_CASE("reductive moves and descent") {
    FreeProduct fp = testing::z2z2();
    auto w0 = lambda_words(fp);
    RootedBasis h0 = RootedBasis::standard(fp);

    CHECK(reductive_moves(fp, h0, NormKind::W0, w0).empty());
    CHECK(reductive_moves(fp, h0, NormKind::ZG, w0).empty());

    RootedBasis h = h0.apply_move(fp, MoveSpec{1, {0, 0, 1}});
    auto reds = reductive_moves(fp, h, NormKind::W0, w0);
    REQUIRE(reds.size() == 1);  // undoing the move: 4 -> 2
    CHECK(norm_w(fp, reds[0].result, w0) == 2);
    CHECK(reds[0].result.basis.is_standard());

    CHECK(reduce_to_minimal(fp, h0, NormKind::ZG, w0).empty());
    auto path = reduce_to_minimal(fp, h, NormKind::ZG, w0);
    REQUIRE(path.size() == 1);
    CHECK(path[0].to.is_standard());

    // a tangled basis descends all the way back with strictly decreasing norms
    FreeProduct zz = testing::z2z3();
    auto wz = lambda_words(zz);
    RootedBasis cur = RootedBasis::standard(zz);
    std::vector<MoveSpec> script = {MoveSpec{2, {0, 1, 0}}, MoveSpec{1, {0, 0, 1}},
                                    MoveSpec{2, {0, 2, 0}}, MoveSpec{1, {0, 0, 1}}};
    for (auto& m : script) cur = cur.apply_move(zz, m);
    auto longpath = reduce_to_minimal(zz, cur, NormKind::ZG, wz);
    CHECK(!longpath.empty());
    CHECK(longpath.back().to.is_standard());
    RootedBasis replay = cur;
    for (const auto& step : longpath) {
        RootedBasis next = replay.apply_move(zz, step.move);
        CHECK(compare_zg(zz, next, replay) == NormOrder::Less);
        replay = next;
    }
    CHECK(replay.basis.is_standard());
}

TEST_CASE("stabilizers") {
    FreeProduct fp = testing::z2z2();
    RootedBasis h0 = RootedBasis::standard(fp);
    auto stab = stabilizer(fp, h0, nuclear_tree(2));
    CHECK(stab.size() == 1);  // Phi is trivial

    FreeProduct zz = testing::z3z3();
    RootedBasis s = RootedBasis::standard(zz);
    auto stab33 = stabilizer(zz, s, nuclear_tree(2));
    CHECK(stab33.size() == 4);  // |Aut(Z/3)|^2

    // each element fixes the vertex
    VertexType nuc = canonical_vertex(zz, standard_basis(2), nuclear_tree(2));
    for (const AutElement& a : stab33) CHECK(apply_to_vertex(zz, a, nuc) == nuc);

    // non-nuclear vertex: carried moves enter the stabilizer
    auto stab_chain = stabilizer(fp, h0, chain_tree_12());
    CHECK(stab_chain.size() == 2);  // identity and the carried conjugation
    VertexType chain_v = canonical_vertex(fp, standard_basis(2), chain_tree_12());
    for (const AutElement& a : stab_chain) CHECK(apply_to_vertex(fp, a, chain_v) == chain_v);
}

TEST_CASE("carried moves with distinct operatives commute when a cross-conjugator is trivial") {
    for (const FreeProduct& fp : {testing::z2z2(), testing::z2z3()}) {
        auto w0 = lambda_words(fp);
        Ball ball = enumerate_ball(fp, w0, fp.n() + 2);
        for (const BallVertex& bv : ball.vertices) {
            for (const PointedTree& tree : enumerate_pointed_trees(fp.n())) {
                auto moves = carried_moves_at(fp, tree);
                for (const MoveSpec& mi : moves)
                    for (const MoveSpec& mj : moves) {
                        if (mi.operative == mj.operative) continue;
                        bool xji_triv = mi.y[mj.operative] == 0;
                        bool xij_triv = mj.y[mi.operative] == 0;
                        if (!xji_triv && !xij_triv) continue;
                        AutElement a = AutElement::from_move(fp, bv.rb, mi);
                        AutElement b = AutElement::from_move(fp, bv.rb, mj);
                        CHECK(compose(fp, a, b) == compose(fp, b, a));
                    }
            }
        }
    }
}
