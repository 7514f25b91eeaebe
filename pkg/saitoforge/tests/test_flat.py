from saitoforge.duality import dual_almost
from saitoforge.flat import (
    basic_derivations,
    flat_coordinates,
    flat_structure,
    frame_coordinates,
    hessian_structure_constants,
    okubo_gauge_residual,
    structure_constants_u,
)
from saitoforge.exactalg import CycNum
from saitoforge.saito import check_ss
from saitoforge.tests import base

__all__ = ["TestFlatCoordinates", "TestDerivations"]


class TestFlatCoordinates(base.SaitoForgeTestCase):
    def test_invariant_frame_already_flat(self):
        S = base.saito("G(3,3,2)")
        X, t = flat_coordinates(S)
        self.assertTrue((X - X.identity(2, S.ring.one, S.ring.zero)).is_zero())
        self.assertEqual(t, list(S.ring.gens()))

    def test_g312(self):
        group = base.group("G(3,1,2)")
        S = base.saito("G(3,1,2)")
        x, y = S.ring.gens()
        _, t = flat_coordinates(S)
        self.assertEqual(t[0], x - y**2 * (CycNum.rational(1) / 12))
        self.assertEqual(t[1], y)
        flat = flat_structure(S)
        u, v = group.u_ring.gens()
        self.assertEqual(
            frame_coordinates(flat, group)[0],
            (u * v) ** 3 - (u**3 + v**3) ** 2 * (CycNum.rational(1) / 12),
        )

    def test_flat_structures(self):
        for name in self.groups("duality") + self.groups("rank3"):
            flat = flat_structure(base.saito(name))
            self.assertEqual(list(flat.ring.names)[0], "t1")
            self.assertTrue(all(G.is_zero() for G in flat.gamma))
            self.assertZero(check_ss(flat))

    def test_okubo_gauge(self):
        for name in ("G(3,3,2)", "G4"):
            flat = flat_structure(base.saito(name))
            residual = okubo_gauge_residual(flat, dual_almost(flat))
            self.assertTrue(all(Z.is_zero() for Z in residual))


class TestDerivations(base.SaitoForgeTestCase):
    def test_basic_derivations(self):
        for name in ("G(3,3,2)", "G(3,1,2)"):
            group = base.group(name)
            S = base.saito(name)
            fields = basic_derivations(S, group)
            U = S.discriminant_matrix()
            for beta, field in enumerate(fields):
                for alpha, x in enumerate(group.invariants):
                    value = group.u_ring.zero
                    for i, component in enumerate(field):
                        value = value + x.diff(i) * component
                    self.assertEqual(value, U[alpha, beta].compose(group.invariants))

    def test_hessian_product(self):
        for name in ("G(3,3,2)", "G4"):
            group = base.group(name)
            pulled = structure_constants_u(dual_almost(base.saito(name)), group)
            expected = hessian_structure_constants(group)
            for a, b in zip(pulled, expected):
                self.assertTrue((a - b).is_zero())
