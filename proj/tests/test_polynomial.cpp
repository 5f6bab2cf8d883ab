#include "doctest.h"
#include "drg/polynomial.hpp"

using namespace drg;

namespace {
QPoly from_longs(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return QPoly(v);
}
}  // namespace

TEST_CASE("euclidean structure over Q") {
    QPoly p = qpoly_x_minus(Rat(2)) * qpoly_x_minus(Rat(-3));  // x^2 + x - 6
    CHECK(p.degree() == 2);
    CHECK(eval(p, Rat(2)) == 0);
    CHECK(eval(p, Rat(-3)) == 0);
    CHECK(eval(p, Rat(0)) == Rat(-6));

    auto [q, r] = divmod(p, qpoly_x_minus(Rat(2)));
    CHECK(r.is_zero());
    CHECK(eval(q, Rat(-3)) == 0);

    CHECK(poly_gcd(p, derivative(p)).degree() == 0);
    CHECK(squarefree_part(p * p) == (make_rat(1) * squarefree_part(p * p)));
    CHECK(squarefree_part(p * p).degree() == 2);
    CHECK(eval(squarefree_part(p * p), Rat(2)) == 0);
}

TEST_CASE("sturm chains count real roots with exact endpoints") {
    // (x^2 - 2)(x - 1): roots -sqrt(2), 1, sqrt(2)
    QPoly p = from_longs({-2, 0, 1}) * qpoly_x_minus(Rat(1));
    SturmChain ch = sturm_chain(p);
    CHECK(count_roots(ch, Rat(-2), Rat(2)) == 3);
    CHECK(count_roots(ch, Rat(0), Rat(2)) == 2);
    CHECK(count_roots(ch, Rat(1), Rat(2)) == 1);   // (1, 2] excludes the root at 1
    CHECK(count_roots(ch, Rat(0), Rat(1)) == 1);   // (0, 1] includes it
    CHECK(count_roots(ch, make_rat(141, 100), make_rat(142, 100)) == 1);
}

TEST_CASE("root isolation certifies rational roots and boxes the rest") {
    QPoly p = from_longs({-2, 0, 1}) * qpoly_x_minus(Rat(1));
    auto roots = isolate_real_roots(p, make_rat(1, 1000000));
    REQUIRE(roots.size() == 3);
    CHECK_FALSE(roots[0].exact);
    CHECK(roots[1].exact);
    CHECK(roots[1].value == 1);
    CHECK_FALSE(roots[2].exact);
    // sqrt(2) lands in its box
    CHECK(roots[2].lo < make_rat(1414214, 1000000));
    CHECK(roots[2].hi > make_rat(1414213, 1000000));
    CHECK(roots[2].enclosure().width() <= make_rat(1, 1000000));

    // increasing order is part of the contract
    CHECK(roots[0] < roots[2]);
    CHECK(roots[0].cmp(Rat(0)) < 0);
}

TEST_CASE("algebraic sign decisions are exact, not numeric") {
    QPoly x2m2 = from_longs({-2, 0, 1});
    auto roots = isolate_real_roots(x2m2, make_rat(1, 1024));
    REQUIRE(roots.size() == 2);
    const AlgReal& rt2 = roots[1];

    // gcd certificate: the defining polynomial itself vanishes
    CHECK(rt2.sign_of(x2m2) == 0);
    // multiples and shifts
    CHECK(rt2.sign_of(from_longs({-4, 0, 2})) == 0);
    CHECK(rt2.sign_of(qpoly_x_minus(Rat(1))) > 0);
    CHECK(rt2.sign_of(qpoly_x_minus(Rat(2))) < 0);
    CHECK(rt2.sign_of(qpoly_x_minus(make_rat(3, 2))) < 0);   // sqrt(2) < 3/2
    CHECK(rt2.sign_of(qpoly_x_minus(make_rat(7, 5))) > 0);   // sqrt(2) > 7/5
    CHECK(rt2.cmp(make_rat(707, 500)) > 0);
    CHECK(rt2.cmp(make_rat(708, 500)) < 0);

    // x^2 - 2 stays irrational no matter how far the box is refined
    AlgReal copy = rt2;
    Rat tiny = Rat(1) / rat_pow(Rat(10), 40);
    copy.refine_below(tiny);
    CHECK_FALSE(copy.exact);
    CHECK(copy.enclosure().width() <= tiny);
}

TEST_CASE("interval evaluation brackets the true value") {
    QPoly p = from_longs({1, -3, 0, 2});  // 2x^3 - 3x + 1
    RatInterval box{make_rat(1, 2), make_rat(3, 4)};
    RatInterval out = eval_interval(p, box);
    for (Rat x : {make_rat(1, 2), make_rat(5, 8), make_rat(3, 4)}) {
        Rat v = eval(p, x);
        CHECK(out.lo <= v);
        CHECK(v <= out.hi);
    }
}
