"""Tensor structure and the distributivity witnesses an instance supplies.

The tensor here is deliberately minimal: an action on objects and
morphisms, a unit, and a certified right-unit isomorphism per object.
That is all the later construction consumes; associators and the left
unit never come up.

Distributivity is not derived, it is witnessed.  The canonical comparison
maps always exist, and the instance supplies their inverses:

  prod_inv(a, b, c):    (a@b) x (a@c) -> a@(b x c), inverse of
                        <a@pi1, a@pi2>
  coprod_inv(a, b, c):  (a+b)@c -> (a@c) + (b@c), inverse of
                        [in1@c, in2@c]
  nullary_prod_inv(a):  1 -> a@1, inverse of the unique map a@1 -> 1
                        (1 the terminal object)
  nullary_coprod_inv(a): 0@a -> 0, inverse of the unique map 0 -> 0@a
                        (0 the initial object)

dist_prod and dist_coprod certify both round trips before handing the
isomorphism out, so a wrong witness fails loudly at the point of use.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import NoNullaryStructure
from .kernel import InversePair, Mor, Obj, compose, identity
from .structure import copair, pair


@dataclass(frozen=True, eq=False)
class TensorWitness:
    on_objects: Callable[[Obj, Obj], Obj]
    on_morphisms: Callable[[Mor, Mor], Mor]
    unit: Obj
    # right unit isomorphism a@unit -> a, already certified by the instance
    rho: Callable[[Obj], InversePair]


@dataclass(frozen=True, eq=False)
class DistributorWitnesses:
    prod_inv: Callable[[Obj, Obj, Obj], Mor]
    coprod_inv: Callable[[Obj, Obj, Obj], Mor]
    nullary_prod_inv: Callable[[Obj], Mor] | None = None
    nullary_coprod_inv: Callable[[Obj], Mor] | None = None


def tensor_obj(a: Obj, b: Obj) -> Obj:
    return a.cat.tensor.on_objects(a, b)


def tensor(f: Mor, g: Mor) -> Mor:
    return f.dom.cat.tensor.on_morphisms(f, g)


def dist_prod(a: Obj, b: Obj, c: Obj) -> InversePair:
    """Certified iso a@(b x c) -> (a@b) x (a@c), canonical map forward."""
    cat = a.cat
    pbc = cat.product(b, c)
    p_out = cat.product(tensor_obj(a, b), tensor_obj(a, c))
    fwd = pair(p_out, tensor(identity(a), pbc.pi1), tensor(identity(a), pbc.pi2))
    bwd = cat.distributors.prod_inv(a, b, c)
    ctx = f"dist_prod({cat.format_obj(a)},{cat.format_obj(b)},{cat.format_obj(c)})"
    return InversePair.certify(fwd, bwd, context=ctx)


def dist_coprod(a: Obj, b: Obj, c: Obj) -> InversePair:
    """Certified iso (a@c) + (b@c) -> (a+b)@c, canonical map forward."""
    cat = a.cat
    cab = cat.coproduct(a, b)
    c_out = cat.coproduct(tensor_obj(a, c), tensor_obj(b, c))
    fwd = copair(c_out, tensor(cab.in1, identity(c)), tensor(cab.in2, identity(c)))
    bwd = cat.distributors.coprod_inv(a, b, c)
    ctx = f"dist_coprod({cat.format_obj(a)},{cat.format_obj(b)},{cat.format_obj(c)})"
    return InversePair.certify(fwd, bwd, context=ctx)


def has_nullary(inst) -> bool:
    return (
        inst.terminal is not None
        and inst.initial is not None
        and inst.distributors.nullary_prod_inv is not None
        and inst.distributors.nullary_coprod_inv is not None
    )


def require_nullary(inst) -> None:
    if not has_nullary(inst):
        raise NoNullaryStructure(
            f"instance {inst.name} lacks terminal/initial structure"
        )


def nullary_distributors(a: Obj) -> tuple[InversePair, InversePair]:
    """Certified isos a@1 -> 1 and 0 -> 0@a for one object a.

    The forward maps are the unique ones supplied by the terminal and
    initial witnesses; the instance's nullary inverses must undo them.
    """
    cat = a.cat
    require_nullary(cat)
    aname = cat.format_obj(a)
    at = tensor_obj(a, cat.terminal.obj)
    prod_iso = InversePair.certify(
        cat.terminal.bang(at),
        cat.distributors.nullary_prod_inv(a),
        context=f"nullary_prod({aname})",
    )
    ia = tensor_obj(cat.initial.obj, a)
    coprod_iso = InversePair.certify(
        cat.initial.cobang(ia),
        cat.distributors.nullary_coprod_inv(a),
        context=f"nullary_coprod({aname})",
    )
    return prod_iso, coprod_iso
