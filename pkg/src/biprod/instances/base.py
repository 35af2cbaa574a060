"""Shared shape of a runnable instance.

An instance is a Category plus the structure the construction consumes:
chosen products and coproducts, optional terminal/initial witnesses, a
tensor, and distributivity witnesses.  Enumeration and random generation
hooks are optional; verifiers fall back gracefully when they are absent.
"""
from __future__ import annotations

import random

from ..kernel import Category, Mor, Obj
from ..monoidal import DistributorWitnesses, TensorWitness
from ..structure import CoproductWitness, InitialWitness, ProductWitness, TerminalWitness


class Instance(Category):
    terminal: TerminalWitness | None = None
    initial: InitialWitness | None = None
    tensor: TensorWitness
    distributors: DistributorWitnesses

    def objects(self, bound: int | None = None) -> list[Obj]:
        """The object universe, optionally clipped to a smaller bound."""
        raise NotImplementedError

    def product(self, a: Obj, b: Obj) -> ProductWitness:
        raise NotImplementedError

    def coproduct(self, a: Obj, b: Obj) -> CoproductWitness:
        raise NotImplementedError

    def enumerate_homset(self, a: Obj, b: Obj, cap: int = 512) -> list[Mor] | None:
        """All morphisms a -> b, or None when there are more than cap."""
        return None

    def random_morphism(self, rng: random.Random, a: Obj, b: Obj) -> Mor | None:
        """A random morphism a -> b, or None when the homset is empty."""
        return None

    def native_add(self, f: Mor, g: Mor) -> Mor | None:
        """The instance's own notion of adding parallel morphisms, if any."""
        return None
