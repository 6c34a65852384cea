# Copyright (C) 2026 permod developers
# SPDX-License-Identifier: BSD-3-Clause
# See: https://spdx.org/licenses/

import pickle
import unittest
from pathlib import Path

from sympy.combinatorics import Permutation as SympyPermutation
from sympy.combinatorics import PermutationGroup as SympyGroup

from permod.permgrp.exceptions import (
    ElementCapExceededError,
    NotTransitiveError,
    NotABlockError)
from permod.permgrp.group_file import load_group
from permod.permgrp.permgrp import (
    Permutation,
    PermGroup,
    BlockSystem,
    pair_index,
    pair_permutation)

FIXTURES = Path(__file__).resolve().parents[3] / "fixtures" / "groups"


def sympy_group(group: PermGroup) -> SympyGroup:
    return SympyGroup([SympyPermutation(g.to_list())
                       for g in group.generators])


class TestPermutation(unittest.TestCase):
    def test_right_action(self) -> None:
        """Tests whether g * h applies g first."""
        g = Permutation([1, 2, 0])
        h = Permutation([1, 0, 2])
        self.assertEqual((g * h)(0), h(g(0)))
        self.assertEqual((g * h).to_list(), [0, 2, 1])

    def test_invalid_images(self) -> None:
        """Tests whether a non-bijective image list raises an error."""
        with self.assertRaises(ValueError):
            Permutation([0, 0, 1])

    def test_inverse_and_power(self) -> None:
        """Tests whether g * g^-1 is the identity and g^order too."""
        g = Permutation.from_cycles(6, [(0, 1, 2), (3, 4)])
        self.assertTrue((g * g.inverse()).is_identity())
        self.assertEqual(g.order(), 6)
        self.assertTrue((g ** 6).is_identity())
        self.assertEqual(g ** -1, g.inverse())

    def test_cycles_and_string(self) -> None:
        """Tests whether cycles start at their least point and render in
        cycle notation."""
        g = Permutation.from_cycles(5, [(3, 1, 4)])
        self.assertEqual(g.cycles(), [(1, 4, 3)])
        self.assertEqual(str(g), "(1 4 3)")
        self.assertEqual(str(Permutation.identity(3)), "()")

    def test_apply_to_set(self) -> None:
        """Tests whether a set is mapped pointwise."""
        g = Permutation([1, 2, 3, 0])
        self.assertEqual(g.apply_to_set({0, 2}), frozenset({1, 3}))

    def test_pickle(self) -> None:
        """Tests whether permutations survive pickling."""
        g = Permutation([2, 0, 1])
        self.assertEqual(pickle.loads(pickle.dumps(g)), g)


class TestPermGroup(unittest.TestCase):
    def test_orders_match_sympy(self) -> None:
        """Tests whether the enumerated orders of the fixture groups agree
        with sympy."""
        expected = {"z6": 6, "s3": 6, "s4": 24, "a5": 60, "psl2_7": 168,
                    "pgl2_7": 336, "agl1_3": 6, "agl1_5": 20, "agl1_7": 42}
        for name, order in expected.items():
            group = load_group(FIXTURES / f"{name}.grp")
            self.assertEqual(group.order(), order, name)
            self.assertEqual(sympy_group(group).order(), order, name)

    def test_identity_first(self) -> None:
        """Tests whether enumeration starts with the identity and lists
        distinct elements."""
        elements = load_group(FIXTURES / "s4.grp").group_elements()
        self.assertTrue(elements[0].is_identity())
        self.assertEqual(len(set(elements)), 24)

    def test_element_cap(self) -> None:
        """Tests whether enumeration beyond the cap raises an error."""
        group = load_group(FIXTURES / "s4.grp")
        with self.assertRaises(ElementCapExceededError):
            group.group_elements(cap=10)

    def test_transitivity_matches_sympy(self) -> None:
        """Tests whether transitivity and primitivity agree with sympy."""
        for name in ["z6", "z7", "s3", "s4", "a5", "psl2_7", "agl1_5",
                     "z8", "z9"]:
            group = load_group(FIXTURES / f"{name}.grp")
            oracle = sympy_group(group)
            self.assertEqual(group.is_transitive(), oracle.is_transitive(),
                             name)
            self.assertEqual(group.is_primitive(), oracle.is_primitive(),
                             name)

    def test_intransitive(self) -> None:
        """Tests whether an intransitive group is detected and rejected by
        primitivity checks."""
        group = PermGroup([Permutation.from_cycles(4, [(0, 1)])])
        self.assertFalse(group.is_transitive())
        self.assertEqual(group.orbits(), [[0, 1], [2], [3]])
        with self.assertRaises(NotTransitiveError):
            group.is_primitive()

    def test_prime_degree_is_primitive(self) -> None:
        """Tests whether transitive groups of prime degree are
        primitive."""
        for name in ["z3", "z5", "z7"]:
            self.assertTrue(load_group(FIXTURES / f"{name}.grp")
                            .is_primitive())

    def test_minimal_block(self) -> None:
        """Tests whether the smallest blocks of Z_6 are found."""
        group = load_group(FIXTURES / "z6.grp")
        self.assertEqual(group.minimal_block(0, 3), frozenset({0, 3}))
        self.assertEqual(group.minimal_block(0, 2), frozenset({0, 2, 4}))
        self.assertEqual(len(group.minimal_block(0, 1)), 6)

    def test_block_system(self) -> None:
        """Tests whether the translates of a block form a block
        system."""
        group = load_group(FIXTURES / "z6.grp")
        system = group.block_system({0, 3})
        self.assertEqual(system.blocks, (frozenset({0, 3}),
                                         frozenset({1, 4}),
                                         frozenset({2, 5})))
        self.assertEqual(system.block_size, 2)
        self.assertFalse(system.is_trivial())
        system.validate(group)

    def test_not_a_block(self) -> None:
        """Tests whether overlapping translates are detected."""
        group = load_group(FIXTURES / "z6.grp")
        self.assertFalse(group.is_block({0, 1}))
        with self.assertRaises(NotABlockError):
            group.block_system({0, 1})
        with self.assertRaises(NotABlockError):
            BlockSystem(blocks=(frozenset({0, 1}), frozenset({2, 3}),
                                frozenset({4, 5}))).validate(group)

    def test_nontrivial_block(self) -> None:
        """Tests whether a nontrivial block is found only for imprimitive
        groups."""
        self.assertIsNotNone(load_group(FIXTURES / "z4.grp")
                             .nontrivial_block())
        self.assertIsNone(load_group(FIXTURES / "a5.grp").nontrivial_block())

    def test_doubly_transitive(self) -> None:
        """Tests whether 2-transitivity is decided."""
        self.assertTrue(load_group(FIXTURES / "psl2_7.grp")
                        .is_doubly_transitive())
        self.assertTrue(load_group(FIXTURES / "agl1_7.grp")
                        .is_doubly_transitive())
        self.assertFalse(load_group(FIXTURES / "z5.grp")
                         .is_doubly_transitive())

    def test_stabilizers(self) -> None:
        """Tests whether point and setwise stabilizers have the orders
        predicted by the orbit-stabilizer theorem."""
        group = load_group(FIXTURES / "a5.grp")
        self.assertEqual(len(group.point_stabilizer(0)), 12)
        self.assertEqual(len(group.setwise_stabilizer({0, 1})), 6)

    def test_regular_cyclic_generator(self) -> None:
        """Tests whether an n-cycle is returned exactly for regular cyclic
        groups."""
        z6 = load_group(FIXTURES / "z6.grp")
        self.assertEqual(z6.regular_cyclic_generator(),
                         Permutation([1, 2, 3, 4, 5, 0]))
        self.assertIsNone(load_group(FIXTURES / "s3.grp")
                          .regular_cyclic_generator())
        mixed = PermGroup([Permutation.from_cycles(6, [(0, 1),
                                                       (2, 3, 4)])])
        self.assertEqual(mixed.order(), 6)
        self.assertIsNone(mixed.regular_cyclic_generator())

    def test_pickle(self) -> None:
        """Tests whether a group with an enumerated element cache can be
        pickled."""
        group = load_group(FIXTURES / "s3.grp")
        group.group_elements()
        copy = pickle.loads(pickle.dumps(group))
        self.assertEqual(copy.order(), 6)


class TestPairs(unittest.TestCase):
    def test_pair_index(self) -> None:
        """Tests whether pairs are indexed lexicographically."""
        n = 5
        group = PermGroup([], n=n)
        for k, (i, j) in enumerate(group.pairs()):
            self.assertEqual(pair_index(i, j, n), k)
            self.assertEqual(pair_index(j, i, n), k)
        with self.assertRaises(ValueError):
            pair_index(2, 2, n)

    def test_pair_permutation(self) -> None:
        """Tests whether the induced permutation maps {i, j} to
        {g(i), g(j)}."""
        g = Permutation([1, 2, 3, 0])
        induced = pair_permutation(g)
        self.assertEqual(induced(pair_index(0, 3, 4)), pair_index(1, 0, 4))

    def test_pairs_action(self) -> None:
        """Tests whether the action of A_5 on pairs has the same order and
        agrees with sympy on primitivity."""
        action = load_group(FIXTURES / "a5.grp").pairs_action()
        self.assertEqual(action.n, 10)
        self.assertEqual(action.order(), 60)
        self.assertTrue(action.is_transitive())
        self.assertEqual(action.is_primitive(),
                         sympy_group(action).is_primitive())

    def test_induced_action(self) -> None:
        """Tests whether the action on a block system is that of
        Z_3."""
        group = load_group(FIXTURES / "z6.grp")
        blocks = list(group.block_system({0, 3}).blocks)
        action = group.induced_action(blocks)
        self.assertEqual(action.n, 3)
        self.assertEqual(action.order(), 3)
        with self.assertRaises(ValueError):
            group.induced_action([frozenset({0, 1})])


if __name__ == '__main__':
    unittest.main()
