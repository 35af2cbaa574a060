"""The integers as a thin category: one morphism a -> b exactly when a <= b.

Product is min, coproduct is max, the tensor is addition with unit 0,
and addition distributes over both on the nose, so every distributor is
an identity.  What the chain does not have is a terminal or initial
object, and with them it loses the zero object, zero maps, and homset
addition.  It is the standing counterexample showing the nullary
hypotheses pull real weight.

lo..hi only window the enumeration; the structure maps accept any
integer objects.
"""
from __future__ import annotations

import random

from ..errors import DomainMismatch
from ..kernel import InversePair, Mor, Obj
from ..monoidal import DistributorWitnesses, TensorWitness
from ..structure import CoproductWitness, ProductWitness
from .base import Instance


class ChainInstance(Instance):
    def __init__(self, lo: int, hi: int, name: str = "z-chain"):
        super().__init__(name)
        if lo > hi:
            raise DomainMismatch("empty enumeration window")
        self.lo = lo
        self.hi = hi
        self.terminal = None
        self.initial = None
        self.tensor = TensorWitness(
            on_objects=self._tensor_obj,
            on_morphisms=self._tensor_mor,
            unit=self.obj(0),
            rho=self._rho,
        )
        self.distributors = DistributorWitnesses(
            prod_inv=self._prod_inv,
            coprod_inv=self._coprod_inv,
        )

    def hom(self, a: Obj, b: Obj) -> Mor:
        """The unique morphism a -> b; raises when a > b."""
        if a.data > b.data:
            raise DomainMismatch(f"no morphism {a.data} -> {b.data} in the order")
        return self.mor(a, b, None)

    # category hooks

    def identity_payload(self, a: Obj):
        return None

    def compose_payload(self, g: Mor, f: Mor):
        return None

    def format_obj(self, a: Obj) -> str:
        return str(a.data)

    def format_mor(self, f: Mor) -> str:
        return f"{f.dom.data}<={f.cod.data}"

    # structure

    def objects(self, bound: int | None = None) -> list[Obj]:
        lo, hi = self.lo, self.hi
        if bound is not None:
            lo, hi = max(lo, -bound), min(hi, bound)
        return [self.obj(k) for k in range(lo, hi + 1)]

    def product(self, a: Obj, b: Obj) -> ProductWitness:
        apex = self.obj(min(a.data, b.data))

        def mediate(f: Mor, g: Mor) -> Mor:
            return self.hom(f.dom, apex)

        return ProductWitness(a, b, apex, self.hom(apex, a), self.hom(apex, b), mediate)

    def coproduct(self, a: Obj, b: Obj) -> CoproductWitness:
        apex = self.obj(max(a.data, b.data))

        def mediate(f: Mor, g: Mor) -> Mor:
            return self.hom(apex, f.cod)

        return CoproductWitness(a, b, apex, self.hom(a, apex), self.hom(b, apex), mediate)

    # tensor: addition, strictly unital and strictly distributive

    def _tensor_obj(self, a: Obj, b: Obj) -> Obj:
        return self.obj(a.data + b.data)

    def _tensor_mor(self, f: Mor, g: Mor) -> Mor:
        return self.hom(self._tensor_obj(f.dom, g.dom), self._tensor_obj(f.cod, g.cod))

    def _rho(self, a: Obj) -> InversePair:
        return InversePair.certify(
            self.mor(a, a, None), self.mor(a, a, None), context=f"rho({a.data})"
        )

    def _prod_inv(self, a: Obj, b: Obj, c: Obj) -> Mor:
        x = self.obj(a.data + min(b.data, c.data))
        return self.mor(x, x, None)

    def _coprod_inv(self, a: Obj, b: Obj, c: Obj) -> Mor:
        x = self.obj(max(a.data, b.data) + c.data)
        return self.mor(x, x, None)

    # enumeration

    def enumerate_homset(self, a: Obj, b: Obj, cap: int = 512) -> list[Mor]:
        return [self.mor(a, b, None)] if a.data <= b.data else []

    def random_morphism(self, rng: random.Random, a: Obj, b: Obj) -> Mor | None:
        return self.mor(a, b, None) if a.data <= b.data else None


def z_chain(lo: int = -5, hi: int = 5) -> ChainInstance:
    return ChainInstance(lo, hi)
