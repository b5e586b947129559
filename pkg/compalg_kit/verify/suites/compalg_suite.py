# compalg_kit/verify/suites/compalg_suite.py

from __future__ import annotations

from typing import Any, Dict, List, Tuple

from compalg_kit.compalg.algebra import (
    CompElement,
    algebra,
    random_element,
    random_isotropic,
    random_nonzero,
)
from compalg_kit.compalg.checks import (
    alternativity_holds,
    annihilator_pair,
    check_composition_general,
    check_triality,
    composition_law_exhaustive,
    injectivity_sweep,
    isotropic_sweep,
    x0_display,
)
from compalg_kit.foundation.fields import FieldContext
from compalg_kit.foundation.linalg import MatrixK, SubspaceK, kernel_image
from compalg_kit.foundation.sampling import trial_rng
from compalg_kit.verify.suites import sampled

Outcome = Tuple[bool, Dict[str, Any]]


def _combine(parts: Dict[str, Dict[str, Any]]) -> Dict[str, Any]:
    return {
        "success": all(p["success"] for p in parts.values()),
        "checked": sum(p.get("checked", 0) for p in parts.values()),
        "failed": sum(p.get("failed", 0) for p in parts.values()),
        "parts": parts,
    }


# ---------- Foundation ----------


def _field_trial(index: int, *, seed: int, label: str, field: FieldContext) -> Outcome:
    rng = trial_rng(seed, label, index)
    a, b, c = (field.random(rng) for _ in range(3))
    f = field
    ok = (
        f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
        and f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        and f.mul(a, b) == f.mul(b, a)
        and f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
        and f.is_zero(f.sub(a, a))
        and (f.is_zero(a) or f.mul(a, f.inv(a)) == f.one())
    )
    return ok, {"a": a, "b": b, "c": c}


def field_axioms(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    tally = sampled(_field_trial, context, field=context["field"])
    return tally.as_result(field=context["field"].label)


def _subspace_trial(index: int, *, seed: int, label: str, field: FieldContext, dim: int) -> Outcome:
    rng = trial_rng(seed, label, index)

    def vectors(k: int) -> List[Tuple[Any, ...]]:
        return [tuple(field.random(rng, bound=3) for _ in range(dim)) for _ in range(k)]

    u = SubspaceK.span(field, vectors(rng.randint(0, dim)), dim)
    v = SubspaceK.span(field, vectors(rng.randint(0, dim)), dim)
    total, meet = u.sum(v), u.intersect(v)
    m = MatrixK.from_rows(field, vectors(rng.randint(1, dim)), dim)
    kernel, image = kernel_image(m)
    ok = (
        total.dim + meet.dim == u.dim + v.dim
        and u.contains(meet)
        and v.contains(meet)
        and total.contains(u)
        and total.contains(v)
        and kernel.dim + image.dim == dim
        and all(not any(m.apply(x)) for x in kernel.basis)
    )
    return ok, {"u": u.basis, "v": v.basis}


def subspace_laws(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    dim = int(params.get("dim", 6))
    tally = sampled(_subspace_trial, context, field=context["field"], dim=dim)
    return tally.as_result(ambient_dim=dim)


# ---------- Composition law ----------


def _composition_trial(index: int, *, seed: int, label: str, field: FieldContext, kind: str) -> Outcome:
    rng = trial_rng(seed, label, index)
    tag = algebra(kind, field)
    x, y, z = (random_element(tag, rng) for _ in range(3))
    xy = tag.mul(x, y)
    ctx = tag.context
    ok = (
        tag.norm(xy) == ctx.mul(tag.norm(x), tag.norm(y))
        and tag.conj(xy) == tag.mul(tag.conj(y), tag.conj(x))
        and alternativity_holds(tag, z, x)
        and tag.mul(tag.mul(x, x), y) == tag.mul(x, tag.mul(x, y))
        and tag.mul(tag.mul(y, x), x) == tag.mul(y, tag.mul(x, x))
    )
    return ok, {"x": x, "y": y, "z": z}


def composition_law(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """Q(xy) = Q(x)Q(y), conj(xy) = conj(y)conj(x), conj(z)(zx) = Q(z)x, alternative laws."""
    parts = {}
    for kind in params.get("algebras", ["R", "C", "H", "O"]):
        tally = sampled(_composition_trial, context, field=context["field"], kind=kind)
        parts[kind] = tally.as_result()
    return _combine(parts)


def composition_exhaustive(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    ctx = FieldContext.prime(int(params.get("p", 2)))
    return _combine(
        {kind: composition_law_exhaustive(algebra(kind, ctx)) for kind in params.get("algebras", ["R", "C", "H"])}
    )


# ---------- Isotropic geometry ----------


def _images_trial(index: int, *, seed: int, label: str, field: FieldContext, kind: str) -> Outcome:
    rng = trial_rng(seed, label, index)
    tag = algebra(kind, field)
    z = random_isotropic(tag, rng) if index % 2 == 0 else random_nonzero(tag, rng)
    report = check_composition_general(CompElement(tag, z))
    return report["success"], {"z": z, "bullets": report["bullets"]}


def isotropic_images(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """Images of L_z and R_z for isotropic and generic z in C, H and O."""
    parts = {}
    for kind in params.get("algebras", ["C", "H", "O"]):
        parts[kind] = sampled(_images_trial, context, field=context["field"], kind=kind).as_result()
    return _combine(parts)


def isotropic_sweep_exhaustive(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    ctx = FieldContext.prime(int(params.get("p", 3)))
    return isotropic_sweep(algebra(params.get("algebra", "O"), ctx))


def _annihilator_trial(index: int, *, seed: int, label: str, field: FieldContext) -> Outcome:
    rng = trial_rng(seed, label, index)
    tag = algebra("O", field)
    z1 = random_isotropic(tag, rng)
    z2 = tag.mul(z1, random_element(tag, rng)) if index % 2 else random_isotropic(tag, rng)
    if tag.is_zero(z2):
        z2 = random_isotropic(tag, rng)
    return annihilator_pair(tag, z1, z2), {"z1": z1, "z2": z2}


def annihilator_pairs(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """z2 in L(z1) <=> z1 in L(z2) <=> conj(z1) z2 = 0; odd trials draw z2 from L(z1)."""
    return sampled(_annihilator_trial, context, field=context["field"]).as_result()


def _triality_trial(index: int, *, seed: int, label: str, field: FieldContext) -> Outcome:
    rng = trial_rng(seed, label, index)
    tag = algebra("O", field)
    x = random_isotropic(tag, rng)
    mode = index % 3
    y = random_isotropic(tag, rng)
    if mode == 1:
        y = tag.mul(x, random_element(tag, rng))
    elif mode == 2:
        y = tag.mul(random_element(tag, rng), x)
    if tag.is_zero(y):
        y = random_isotropic(tag, rng)
    report = check_triality(CompElement(tag, x), CompElement(tag, y))
    return report["success"], {"x": x, "y": y, "bullets": report["bullets"], "dims": report["dims"]}


def triality(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    """Intersection bullets and the parity surrogate; y is drawn generic, from L(x) or from R(x)."""
    return sampled(_triality_trial, context, field=context["field"]).as_result()


def injectivity(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    ctx = FieldContext.prime(int(params.get("p", 3)))
    return injectivity_sweep(algebra(params.get("algebra", "O"), ctx))


def x0_images(params: Dict[str, Any], context: Dict[str, Any]) -> Dict[str, Any]:
    return x0_display(context["field"])
