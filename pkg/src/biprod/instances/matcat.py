"""Matrix categories over a commutative semiring.

Objects are dimensions 0..max_dim, a morphism m -> n is an n x m matrix,
composition is matrix product.  Product and coproduct are both direct
sum, the tensor is the Kronecker product with unit dimension 1, and the
distributors are the evident index-shuffling permutations.

finrel is the boolean case: a matrix over the or/and semiring is exactly
a relation between finite sets, composed relationally.
"""
from __future__ import annotations

import itertools
import random

from ..errors import InvalidBounds
from ..kernel import InversePair, Mor, Obj
from ..monoidal import DistributorWitnesses, TensorWitness
from ..structure import CoproductWitness, InitialWitness, ProductWitness, TerminalWitness
from .base import Instance
from .semiring import (
    BOOLEANS,
    NATURALS,
    RATIONALS,
    Semiring,
    hstack,
    identity_matrix,
    inverse_permutation_matrix,
    kronecker,
    matmul,
    matrix_add,
    vstack,
    zero_matrix,
)


class MatInstance(Instance):
    def __init__(self, sr: Semiring, max_dim: int, name: str | None = None):
        super().__init__(name or f"mat-{sr.name}")
        if max_dim < 0:
            raise InvalidBounds("max_dim must be nonnegative")
        self.sr = sr
        self.max_dim = max_dim
        zero = self.obj(0)
        self.terminal = TerminalWitness(zero, self._bang)
        self.initial = InitialWitness(zero, self._cobang)
        self.tensor = TensorWitness(
            on_objects=self._tensor_obj,
            on_morphisms=self._tensor_mor,
            unit=self.obj(1),
            rho=self._rho,
        )
        self.distributors = DistributorWitnesses(
            prod_inv=self._prod_inv,
            coprod_inv=self._coprod_inv,
            nullary_prod_inv=self._nullary_prod_inv,
            nullary_coprod_inv=self._nullary_coprod_inv,
        )

    # category hooks

    def identity_payload(self, a: Obj):
        return identity_matrix(self.sr, a.data)

    def compose_payload(self, g: Mor, f: Mor):
        return matmul(self.sr, g.payload, f.payload, inner=g.dom.data, cols=f.dom.data)

    def format_obj(self, a: Obj) -> str:
        return str(a.data)

    def format_mor(self, f: Mor) -> str:
        r, c = f.cod.data, f.dom.data
        if r == 0 or c == 0:
            return f"{c}->{r} (empty {r}x{c})"
        rows = "; ".join(
            " ".join(self.sr.render(v) for v in row) for row in f.payload
        )
        return f"{c}->{r} [{rows}]"

    def first_difference(self, f: Mor, g: Mor) -> str | None:
        for i, (rf, rg) in enumerate(zip(f.payload, g.payload)):
            for j, (x, y) in enumerate(zip(rf, rg)):
                if x != y:
                    return (
                        f"entry ({i + 1},{j + 1}): "
                        f"{self.sr.render(x)} vs {self.sr.render(y)}"
                    )
        return None

    # structure

    def objects(self, bound: int | None = None) -> list[Obj]:
        top = self.max_dim if bound is None else min(self.max_dim, bound)
        return [self.obj(d) for d in range(top + 1)]

    def product(self, a: Obj, b: Obj) -> ProductWitness:
        sr = self.sr
        n, m = a.data, b.data
        apex = self.obj(n + m)
        pi1 = self.mor(apex, a, hstack(identity_matrix(sr, n), zero_matrix(sr, n, m)))
        pi2 = self.mor(apex, b, hstack(zero_matrix(sr, m, n), identity_matrix(sr, m)))

        def mediate(f: Mor, g: Mor) -> Mor:
            return self.mor(f.dom, apex, vstack(f.payload, g.payload))

        return ProductWitness(a, b, apex, pi1, pi2, mediate)

    def coproduct(self, a: Obj, b: Obj) -> CoproductWitness:
        sr = self.sr
        n, m = a.data, b.data
        apex = self.obj(n + m)
        in1 = self.mor(a, apex, vstack(identity_matrix(sr, n), zero_matrix(sr, m, n)))
        in2 = self.mor(b, apex, vstack(zero_matrix(sr, n, m), identity_matrix(sr, m)))

        def mediate(f: Mor, g: Mor) -> Mor:
            return self.mor(apex, f.cod, hstack(f.payload, g.payload))

        return CoproductWitness(a, b, apex, in1, in2, mediate)

    def _bang(self, x: Obj) -> Mor:
        return self.mor(x, self.obj(0), ())

    def _cobang(self, x: Obj) -> Mor:
        return self.mor(self.obj(0), x, ((),) * x.data)

    # tensor

    def _tensor_obj(self, a: Obj, b: Obj) -> Obj:
        return self.obj(a.data * b.data)

    def _tensor_mor(self, f: Mor, g: Mor) -> Mor:
        payload = kronecker(
            self.sr,
            f.payload,
            g.payload,
            f.cod.data,
            f.dom.data,
            g.cod.data,
            g.dom.data,
        )
        return self.mor(
            self._tensor_obj(f.dom, g.dom), self._tensor_obj(f.cod, g.cod), payload
        )

    def _rho(self, a: Obj) -> InversePair:
        at = self._tensor_obj(a, self.tensor.unit)
        eye = identity_matrix(self.sr, a.data)
        return InversePair.certify(
            self.mor(at, a, eye), self.mor(a, at, eye), context=f"rho({a.data})"
        )

    # distributors: index shuffles, handed out as their inverse permutations

    def _prod_inv(self, a: Obj, b: Obj, c: Obj) -> Mor:
        an, bn, cn = a.data, b.data, c.data
        mapping = []
        for i in range(an):
            for j in range(bn + cn):
                if j < bn:
                    mapping.append(i * bn + j)
                else:
                    mapping.append(an * bn + i * cn + (j - bn))
        dom = self.obj(an * bn + an * cn)
        cod = self.obj(an * (bn + cn))
        return self.mor(dom, cod, inverse_permutation_matrix(self.sr, mapping))

    def _coprod_inv(self, a: Obj, b: Obj, c: Obj) -> Mor:
        an, bn, cn = a.data, b.data, c.data
        mapping = [i * cn + j for i in range(an) for j in range(cn)]
        mapping += [(an + i) * cn + j for i in range(bn) for j in range(cn)]
        dom = self.obj((an + bn) * cn)
        cod = self.obj(an * cn + bn * cn)
        return self.mor(dom, cod, inverse_permutation_matrix(self.sr, mapping))

    def _nullary_prod_inv(self, a: Obj) -> Mor:
        z = self.obj(0)
        return self.mor(z, z, ())

    def _nullary_coprod_inv(self, a: Obj) -> Mor:
        z = self.obj(0)
        return self.mor(z, z, ())

    # enumeration and sampling

    def enumerate_homset(self, a: Obj, b: Obj, cap: int = 512) -> list[Mor] | None:
        if self.sr.carrier is None:
            return None
        cells = a.data * b.data
        if len(self.sr.carrier) ** cells > cap:
            return None
        out = []
        for values in itertools.product(self.sr.carrier, repeat=cells):
            payload = tuple(
                tuple(values[i * a.data + j] for j in range(a.data))
                for i in range(b.data)
            )
            out.append(self.mor(a, b, payload))
        return out

    def random_morphism(self, rng: random.Random, a: Obj, b: Obj) -> Mor:
        payload = tuple(
            tuple(self.sr.sample(rng) for _ in range(a.data)) for _ in range(b.data)
        )
        return self.mor(a, b, payload)

    def native_add(self, f: Mor, g: Mor) -> Mor:
        return self.mor(f.dom, f.cod, matrix_add(self.sr, f.payload, g.payload))


def finrel(max_size: int = 3) -> MatInstance:
    """Finite sets and relations, realised as boolean matrices."""
    return MatInstance(BOOLEANS, max_size, name="finrel")


MAT_SEMIRINGS = {
    "mat-bool": BOOLEANS,
    "mat-nat": NATURALS,
    "mat-rat": RATIONALS,
}


def mat_semiring(name: str, max_dim: int = 3) -> MatInstance:
    return MatInstance(MAT_SEMIRINGS[name], max_dim, name=name)
