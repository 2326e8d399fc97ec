#include "doctest.h"
#include "w22/restricted.hpp"

using namespace w22;

TEST_CASE("the trivial module kills every generator") {
    RestrictedModulePtr mod = RestrictedModule::trivial();
    RestrictedVector v = mod->generator();
    CHECK_FALSE(v.is_zero());
    for (std::int64_t n : {-3, -1, 0, 1, 4}) {
        CHECK(mod->act(Generator::L(n), v).is_zero());
        CHECK(mod->act(Generator::W(n), v).is_zero());
    }
    CHECK(mod->act(Generator::C(), v).is_zero());
    CHECK(restriction_bound(v) == 0);
}

TEST_CASE("highest-weight eigenvalues and annihilation") {
    HighestWeight hw{Scalar::fraction(1, 2), Scalar(2), Scalar::fraction(-1, 3)};
    RestrictedModulePtr mod = RestrictedModule::verma(hw);
    RestrictedVector v = mod->generator();
    CHECK(mod->act(Generator::L(0), v) == v * Scalar(2));
    CHECK(mod->act(Generator::W(0), v) == v * Scalar::fraction(-1, 3));
    CHECK(mod->act(Generator::C(), v) == v * Scalar::fraction(1, 2));
    CHECK(mod->act(Generator::L(1), v).is_zero());
    CHECK(mod->act(Generator::W(2), v).is_zero());
    CHECK(restriction_bound(v) == 1);
}

TEST_CASE("straightening computes the classical Verma relations") {
    HighestWeight hw{Scalar::fraction(1, 2), Scalar(2), Scalar::fraction(-1, 3)};
    RestrictedModulePtr mod = RestrictedModule::verma(hw);
    RestrictedVector v = mod->generator();
    RestrictedVector lm1 = mod->basis_vector({Generator::L(-1)});

    // L_1 L_{-1} v = [L_1, L_{-1}] v = -2 L_0 v = -4 v
    CHECK(mod->act(Generator::L(1), lm1) == v * Scalar(-4));
    // W_1 L_{-1} v = [W_1, L_{-1}] v = -2 W_0 v = 2/3 v
    CHECK(mod->act(Generator::W(1), lm1) == v * Scalar::fraction(2, 3));
    // L_2 L_{-1} v = [L_2, L_{-1}] v = -3 L_1 v = 0
    CHECK(mod->act(Generator::L(2), lm1).is_zero());
    // L_0 L_{-1} v = (h_l - 1) L_{-1} v under this bracket convention
    CHECK(mod->act(Generator::L(0), lm1) == lm1);
    // L_1 L_{-2} v = [L_1, L_{-2}] v = -3 L_{-1} v
    CHECK(mod->act(Generator::L(1), mod->basis_vector({Generator::L(-2)})) ==
          lm1 * Scalar(-3));
    // C is central on the whole module
    CHECK(mod->act(Generator::C(), lm1) == lm1 * Scalar::fraction(1, 2));
}

TEST_CASE("negative generators stack into PBW labels") {
    RestrictedModulePtr mod = RestrictedModule::verma({Scalar(0), Scalar(1), Scalar(1)});
    RestrictedVector v = mod->generator();
    // [L_{-1}, W_{-1}] = 0, so both application orders land on the same label
    RestrictedVector basis = mod->basis_vector({Generator::W(-1), Generator::L(-1)});
    CHECK(mod->act(Generator::L(-1), mod->act(Generator::W(-1), v)) == basis);
    CHECK(mod->act(Generator::W(-1), mod->act(Generator::L(-1), v)) == basis);

    // L_{-1} W_{-2} = W_{-2} L_{-1} + [L_{-1}, W_{-2}] picks up -W_{-3}
    RestrictedVector u = mod->act(Generator::L(-1), mod->act(Generator::W(-2), v));
    CHECK(u == mod->basis_vector({Generator::W(-2), Generator::L(-1)}) -
                   mod->basis_vector({Generator::W(-3)}));
}

TEST_CASE("labels and depth bounds") {
    CHECK(is_canonical_pbw({Generator::W(-2), Generator::W(-1)}));
    CHECK(is_canonical_pbw({}));
    CHECK_FALSE(is_canonical_pbw({Generator::L(-1), Generator::W(-1)}));
    CHECK_FALSE(is_canonical_pbw({Generator::L(0)}));
    CHECK(pbw_depth({Generator::W(-2), Generator::L(-3)}) == 5);

    RestrictedModulePtr triv = RestrictedModule::trivial();
    CHECK_THROWS_AS(triv->basis_vector({Generator::L(-1)}), std::domain_error);

    RestrictedModulePtr mod = RestrictedModule::verma({Scalar(1), Scalar(1), Scalar(1)});
    CHECK(restriction_bound(mod->basis_vector({Generator::L(-1)})) == 2);
    CHECK(restriction_bound(mod->basis_vector({Generator::W(-2)})) == 3);
    CHECK(restriction_bound(mod->zero()) == 0);

    // The bound is sharp here: L_2 kills L_{-1} v but L_1 does not.
    RestrictedVector lm1 = mod->basis_vector({Generator::L(-1)});
    CHECK(mod->act(Generator::L(2), lm1).is_zero());
    CHECK_FALSE(mod->act(Generator::L(1), lm1).is_zero());
}

TEST_CASE("vectors are tied to their module instance") {
    RestrictedModulePtr a = RestrictedModule::verma({Scalar(1), Scalar(1), Scalar(1)});
    RestrictedModulePtr b = RestrictedModule::verma({Scalar(1), Scalar(1), Scalar(1)});
    CHECK(a->contains(a->generator()));
    CHECK_FALSE(a->contains(b->generator()));
    CHECK_THROWS_AS(a->generator() + b->generator(), std::domain_error);
}
