"""Componentwise product of two instances.

Objects and morphisms are pairs; every piece of structure is computed in
each component and repacked.  Nullary structure exists exactly when both
components have it, which makes mixed products (one component with a
zero object, one without) useful counterexamples.
"""
from __future__ import annotations

import itertools
import random

from ..kernel import InversePair, Mor, Obj, compose, identity
from ..monoidal import DistributorWitnesses, TensorWitness
from ..structure import CoproductWitness, InitialWitness, ProductWitness, TerminalWitness
from .base import Instance


class ProductInstance(Instance):
    def __init__(self, left: Instance, right: Instance, name: str | None = None):
        super().__init__(name or f"product:{left.name}+{right.name}")
        self.left = left
        self.right = right
        if left.terminal is not None and right.terminal is not None:
            self.terminal = TerminalWitness(
                self.pack(left.terminal.obj, right.terminal.obj), self._bang
            )
        if left.initial is not None and right.initial is not None:
            self.initial = InitialWitness(
                self.pack(left.initial.obj, right.initial.obj), self._cobang
            )
        self.tensor = TensorWitness(
            on_objects=self._tensor_obj,
            on_morphisms=self._tensor_mor,
            unit=self.pack(left.tensor.unit, right.tensor.unit),
            rho=self._rho,
        )
        nullary_prod = None
        if (
            left.distributors.nullary_prod_inv is not None
            and right.distributors.nullary_prod_inv is not None
        ):
            nullary_prod = self._nullary_prod_inv
        nullary_coprod = None
        if (
            left.distributors.nullary_coprod_inv is not None
            and right.distributors.nullary_coprod_inv is not None
        ):
            nullary_coprod = self._nullary_coprod_inv
        self.distributors = DistributorWitnesses(
            prod_inv=self._prod_inv,
            coprod_inv=self._coprod_inv,
            nullary_prod_inv=nullary_prod,
            nullary_coprod_inv=nullary_coprod,
        )

    def pack(self, la: Obj, ra: Obj) -> Obj:
        return self.obj((la, ra))

    def pack_mor(self, lf: Mor, rf: Mor) -> Mor:
        return self.mor(
            self.pack(lf.dom, rf.dom), self.pack(lf.cod, rf.cod), (lf, rf)
        )

    # category hooks

    def identity_payload(self, a: Obj):
        return (identity(a.data[0]), identity(a.data[1]))

    def compose_payload(self, g: Mor, f: Mor):
        return (
            compose(g.payload[0], f.payload[0]),
            compose(g.payload[1], f.payload[1]),
        )

    def format_obj(self, a: Obj) -> str:
        return f"{self.left.format_obj(a.data[0])}|{self.right.format_obj(a.data[1])}"

    def format_mor(self, f: Mor) -> str:
        return (
            f"<{self.left.format_mor(f.payload[0])}, "
            f"{self.right.format_mor(f.payload[1])}>"
        )

    def first_difference(self, f: Mor, g: Mor) -> str | None:
        lf, rf = f.payload
        lg, rg = g.payload
        if lf != lg:
            return "left " + (self.left.first_difference(lf, lg) or "component differs")
        if rf != rg:
            return "right " + (self.right.first_difference(rf, rg) or "component differs")
        return None

    # structure

    def objects(self, bound: int | None = None) -> list[Obj]:
        return [
            self.pack(la, ra)
            for la in self.left.objects(bound)
            for ra in self.right.objects(bound)
        ]

    def product(self, a: Obj, b: Obj) -> ProductWitness:
        lp = self.left.product(a.data[0], b.data[0])
        rp = self.right.product(a.data[1], b.data[1])

        def mediate(f: Mor, g: Mor) -> Mor:
            return self.pack_mor(
                lp.mediate(f.payload[0], g.payload[0]),
                rp.mediate(f.payload[1], g.payload[1]),
            )

        return ProductWitness(
            a,
            b,
            self.pack(lp.apex, rp.apex),
            self.pack_mor(lp.pi1, rp.pi1),
            self.pack_mor(lp.pi2, rp.pi2),
            mediate,
        )

    def coproduct(self, a: Obj, b: Obj) -> CoproductWitness:
        lc = self.left.coproduct(a.data[0], b.data[0])
        rc = self.right.coproduct(a.data[1], b.data[1])

        def mediate(f: Mor, g: Mor) -> Mor:
            return self.pack_mor(
                lc.mediate(f.payload[0], g.payload[0]),
                rc.mediate(f.payload[1], g.payload[1]),
            )

        return CoproductWitness(
            a,
            b,
            self.pack(lc.apex, rc.apex),
            self.pack_mor(lc.in1, rc.in1),
            self.pack_mor(lc.in2, rc.in2),
            mediate,
        )

    def _bang(self, x: Obj) -> Mor:
        return self.pack_mor(
            self.left.terminal.bang(x.data[0]), self.right.terminal.bang(x.data[1])
        )

    def _cobang(self, x: Obj) -> Mor:
        return self.pack_mor(
            self.left.initial.cobang(x.data[0]), self.right.initial.cobang(x.data[1])
        )

    # tensor

    def _tensor_obj(self, a: Obj, b: Obj) -> Obj:
        return self.pack(
            self.left.tensor.on_objects(a.data[0], b.data[0]),
            self.right.tensor.on_objects(a.data[1], b.data[1]),
        )

    def _tensor_mor(self, f: Mor, g: Mor) -> Mor:
        return self.pack_mor(
            self.left.tensor.on_morphisms(f.payload[0], g.payload[0]),
            self.right.tensor.on_morphisms(f.payload[1], g.payload[1]),
        )

    def _rho(self, a: Obj) -> InversePair:
        lr = self.left.tensor.rho(a.data[0])
        rr = self.right.tensor.rho(a.data[1])
        return InversePair.certify(
            self.pack_mor(lr.fwd, rr.fwd),
            self.pack_mor(lr.bwd, rr.bwd),
            context=f"rho({self.format_obj(a)})",
        )

    def _prod_inv(self, a: Obj, b: Obj, c: Obj) -> Mor:
        return self.pack_mor(
            self.left.distributors.prod_inv(a.data[0], b.data[0], c.data[0]),
            self.right.distributors.prod_inv(a.data[1], b.data[1], c.data[1]),
        )

    def _coprod_inv(self, a: Obj, b: Obj, c: Obj) -> Mor:
        return self.pack_mor(
            self.left.distributors.coprod_inv(a.data[0], b.data[0], c.data[0]),
            self.right.distributors.coprod_inv(a.data[1], b.data[1], c.data[1]),
        )

    def _nullary_prod_inv(self, a: Obj) -> Mor:
        return self.pack_mor(
            self.left.distributors.nullary_prod_inv(a.data[0]),
            self.right.distributors.nullary_prod_inv(a.data[1]),
        )

    def _nullary_coprod_inv(self, a: Obj) -> Mor:
        return self.pack_mor(
            self.left.distributors.nullary_coprod_inv(a.data[0]),
            self.right.distributors.nullary_coprod_inv(a.data[1]),
        )

    # enumeration

    def enumerate_homset(self, a: Obj, b: Obj, cap: int = 512) -> list[Mor] | None:
        ls = self.left.enumerate_homset(a.data[0], b.data[0], cap=cap)
        rs = self.right.enumerate_homset(a.data[1], b.data[1], cap=cap)
        if ls is None or rs is None or len(ls) * len(rs) > cap:
            return None
        return [self.pack_mor(lf, rf) for lf, rf in itertools.product(ls, rs)]

    def random_morphism(self, rng: random.Random, a: Obj, b: Obj) -> Mor | None:
        lf = self.left.random_morphism(rng, a.data[0], b.data[0])
        rf = self.right.random_morphism(rng, a.data[1], b.data[1])
        if lf is None or rf is None:
            return None
        return self.pack_mor(lf, rf)

    def native_add(self, f: Mor, g: Mor) -> Mor | None:
        ls = self.left.native_add(f.payload[0], g.payload[0])
        rs = self.right.native_add(f.payload[1], g.payload[1])
        if ls is None or rs is None:
            return None
        return self.pack_mor(ls, rs)


def product_instance(left: Instance, right: Instance) -> ProductInstance:
    return ProductInstance(left, right)
