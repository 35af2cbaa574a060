"""Core vocabulary: objects, morphisms, composition, and equation checking.

A Category subclass supplies payload-level behaviour (how identities look,
how payloads compose, how to print things).  Objects and morphisms are
plain frozen records; two morphisms are equal exactly when their domain,
codomain, and payload are equal.  Verification code never asserts; it
returns CheckResult values that list every equation tried.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable

from .errors import DomainMismatch, WitnessInvalid


@dataclass(frozen=True, repr=False)
class Obj:
    cat: "Category"
    data: Any

    def __repr__(self) -> str:
        return self.cat.format_obj(self)


@dataclass(frozen=True, repr=False)
class Mor:
    dom: Obj
    cod: Obj
    payload: Any

    def __repr__(self) -> str:
        return self.dom.cat.format_mor(self)


class Category:
    """Hooks a concrete category implements, plus object/morphism builders."""

    def __init__(self, name: str = "category"):
        self.name = name

    # payload hooks

    def identity_payload(self, a: Obj) -> Any:
        raise NotImplementedError

    def compose_payload(self, g: Mor, f: Mor) -> Any:
        raise NotImplementedError

    # presentation hooks

    def format_obj(self, a: Obj) -> str:
        return repr(a.data)

    def format_mor(self, f: Mor) -> str:
        return f"{self.format_obj(f.dom)} -> {self.format_obj(f.cod)}: {f.payload!r}"

    def first_difference(self, f: Mor, g: Mor) -> str | None:
        """Short human-readable locator for why two parallel morphisms differ."""
        return None

    # builders

    def obj(self, data: Any) -> Obj:
        return Obj(self, data)

    def mor(self, dom: Obj, cod: Obj, payload: Any) -> Mor:
        if dom.cat is not self or cod.cat is not self:
            raise DomainMismatch("morphism endpoints belong to a different category")
        return Mor(dom, cod, payload)


def identity(a: Obj) -> Mor:
    return Mor(a, a, a.cat.identity_payload(a))


def compose(g: Mor, f: Mor) -> Mor:
    """g after f.  Raises DomainMismatch unless f.cod == g.dom."""
    cat = f.dom.cat
    if g.dom.cat is not cat:
        raise DomainMismatch("cannot compose morphisms from different categories")
    if f.cod != g.dom:
        raise DomainMismatch(
            f"cannot compose: first factor ends at {cat.format_obj(f.cod)}, "
            f"second starts at {cat.format_obj(g.dom)}"
        )
    return Mor(f.dom, g.cod, cat.compose_payload(g, f))


def equal(f: Mor, g: Mor) -> bool:
    return f.dom == g.dom and f.cod == g.cod and f.payload == g.payload


@dataclass(frozen=True)
class EquationCheck:
    label: str
    lhs: Mor | None
    rhs: Mor | None
    ok: bool
    note: str = ""


@dataclass(frozen=True)
class CheckResult:
    name: str
    details: tuple[EquationCheck, ...]

    @property
    def passed(self) -> bool:
        return all(chk.ok for chk in self.details)

    def failures(self) -> tuple[EquationCheck, ...]:
        return tuple(chk for chk in self.details if not chk.ok)

    def describe(self) -> str:
        lines = [f"{self.name}: {'pass' if self.passed else 'FAIL'}"]
        for chk in self.details:
            line = f"  [{'ok' if chk.ok else 'FAIL'}] {chk.label}"
            if chk.note:
                line += f" ({chk.note})"
            lines.append(line)
        return "\n".join(lines)


def equation(label: str, lhs: Mor, rhs: Mor) -> EquationCheck:
    cat = lhs.dom.cat
    if lhs.dom != rhs.dom or lhs.cod != rhs.cod:
        note = (
            f"type mismatch: {cat.format_obj(lhs.dom)} -> {cat.format_obj(lhs.cod)}"
            f" vs {cat.format_obj(rhs.dom)} -> {cat.format_obj(rhs.cod)}"
        )
        return EquationCheck(label, lhs, rhs, False, note)
    if lhs.payload == rhs.payload:
        return EquationCheck(label, lhs, rhs, True)
    note = cat.first_difference(lhs, rhs) or "payloads differ"
    return EquationCheck(label, lhs, rhs, False, note)


def error_check(label: str, message: str) -> EquationCheck:
    """A failed check recording an error instead of a comparison."""
    return EquationCheck(label, None, None, False, message)


def check_inverse_pair(fwd: Mor, bwd: Mor, name: str = "inverse pair") -> CheckResult:
    cat = fwd.dom.cat
    if bwd.dom != fwd.cod or bwd.cod != fwd.dom:
        msg = (
            f"candidate inverse has type {cat.format_obj(bwd.dom)} -> {cat.format_obj(bwd.cod)},"
            f" expected {cat.format_obj(fwd.cod)} -> {cat.format_obj(fwd.dom)}"
        )
        return CheckResult(name, (error_check("typing", msg),))
    details = (
        equation("bwd*fwd=id", compose(bwd, fwd), identity(fwd.dom)),
        equation("fwd*bwd=id", compose(fwd, bwd), identity(fwd.cod)),
    )
    return CheckResult(name, details)


@dataclass(frozen=True)
class InversePair:
    """A certified isomorphism: both composites were checked at build time."""

    fwd: Mor
    bwd: Mor

    @classmethod
    def certify(cls, fwd: Mor, bwd: Mor, context: str = "") -> "InversePair":
        result = check_inverse_pair(fwd, bwd, name=context or "inverse pair")
        if not result.passed:
            fail = result.failures()[0]
            msg = f"{context or 'inverse pair'}: {fail.label}"
            if fail.note:
                msg += f" ({fail.note})"
            raise WitnessInvalid(msg, result)
        return cls(fwd, bwd)
