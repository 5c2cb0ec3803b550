"""Dg path algebras built from quivers with relations or superpotentials.

Three constructions are provided.

* `relation_dg_algebra(Q, R)`: for each relation rho a new arrow of degree
  -1 from s(rho) to t(rho) whose differential is rho; the original arrows
  sit in degree 0 with zero differential.  H^0 of this dg-algebra is
  KQ/(R).
* `superpotential_extension(Q, R, m)`: for each relation a reversed arrow
  of degree 2-m, together with the superpotential that pairs each new
  arrow with its relation.
* `ginzburg_dg_algebra(Q, W, m)`: the Ginzburg dg-algebra of a graded
  quiver with homogeneous superpotential of degree 2-m.  The doubled
  quiver keeps the arrows of Q, adds a reversed dual of degree 1-m-|a| per
  arrow a, and a loop of degree -m per vertex whose differential is the
  sum of supercommutators [a, a*] projected to that vertex.

The differential extends to products as a degree +1 derivation with the
usual Koszul prefix sign; `check_d_squared` verifies d^2 = 0 on generators
and on sampled products rather than assuming it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    PathElement,
    Superpotential,
    cyclic_derivative,
    cyclic_reduce,
    format_element,
    is_relation_body,
    supercommutator,
)
from .linalg import as_rational
from .quiver import Arrow, GradedQuiver, Path


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def dual_name(name: str) -> str:
    return name + "_star"


def loop_name(vertex: str) -> str:
    return "t_" + vertex


def relation_arrow_name(label: str) -> str:
    """Name of the degree -1 arrow attached to a relation."""
    return "eta_" + label


def reverse_arrow_name(label: str) -> str:
    """Name of the degree 2-m reversed arrow attached to a relation."""
    return "eps_" + label


@dataclass(frozen=True)
class Relation:
    """A labelled relation: an element of e_source * r * e_target.

    The body may be zero (zero entries still create arrows in the
    constructions); repetitions of the same body under different labels are
    allowed.
    """

    label: str
    source: str
    target: str
    body: PathElement


def validate_relations(q: GradedQuiver, relations) -> list[str]:
    problems = []
    seen = set()
    for r in relations:
        if r.label in seen:
            problems.append(f"duplicate relation label {r.label!r}")
        seen.add(r.label)
        for v in (r.source, r.target):
            if v not in q.vertices:
                problems.append(f"relation {r.label!r} uses undeclared vertex {v!r}")
                break
        else:
            try:
                body = r.body.rebind(q)
            except (KeyError, ValueError) as exc:
                problems.append(f"relation {r.label!r}: {exc}")
                continue
            for msg in is_relation_body(body, r.source, r.target):
                problems.append(f"relation {r.label!r}: {msg}")
    return problems


def _check_relations(q: GradedQuiver, relations) -> list[Relation]:
    relations = list(relations)
    problems = validate_relations(q, relations)
    if problems:
        raise ValueError("; ".join(problems))
    return relations


def _require_degree_zero(q: GradedQuiver) -> None:
    bad = [a.name for a in q.arrows if a.degree != 0]
    if bad:
        raise ValueError(f"construction requires all arrows in degree 0, got {bad}")


class DgAlgebra:
    """A graded quiver together with a differential on its generators.

    The differential of each arrow must be homogeneous of degree |a| + 1
    with the same endpoints as a (checked here); d^2 = 0 is *not* assumed,
    use `check_d_squared`.
    """

    __slots__ = ("quiver", "differential")

    def __init__(self, quiver: GradedQuiver, differential=None):
        self.quiver = quiver
        diff: dict[str, PathElement] = {}
        for a in quiver.arrows:
            dx = (differential or {}).get(a.name)
            if dx is None or dx.is_zero():
                diff[a.name] = PathElement.zero(quiver)
                continue
            dx = dx.rebind(quiver)
            deg = dx.degree()
            if deg != a.degree + 1:
                raise ValueError(
                    f"d({a.name}) has degree {deg}, expected {a.degree + 1}"
                )
            for p in dx.terms:
                if (quiver.source_of(p), quiver.target_of(p)) != (a.source, a.target):
                    raise ValueError(f"d({a.name}) does not respect endpoints")
            diff[a.name] = dx
        unknown = set((differential or {})) - {a.name for a in quiver.arrows}
        if unknown:
            raise ValueError(f"differential given for unknown arrows {sorted(unknown)}")
        self.differential = diff

    def d(self, arrow_name: str) -> PathElement:
        return self.differential[arrow_name]

    def arrow_names(self) -> list[str]:
        return [a.name for a in self.quiver.arrows]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DgAlgebra)
            and self.quiver == other.quiver
            and self.differential == other.differential
        )

    def __repr__(self) -> str:
        return f"DgAlgebra({self.quiver!r})"


def apply_d(dg: DgAlgebra, x: PathElement) -> PathElement:
    """The differential of x, extended as a degree +1 derivation:
    d(a_1...a_n) = sum_l (-1)^{|a_1|+...+|a_{l-1}|} a_1...d(a_l)...a_n."""
    q = dg.quiver
    x = x.rebind(q) if x.quiver is not q else x
    out: dict[Path, Fraction] = {}
    for p, c in x.terms.items():
        if p.is_trivial:
            continue
        prefix_deg = 0
        for ell, name in enumerate(p.arrows):
            da = dg.differential[name]
            if not da.is_zero():
                sign = -1 if prefix_deg % 2 else 1
                pre, post = p.arrows[:ell], p.arrows[ell + 1:]
                for dp, dc in da.terms.items():
                    arrows = pre + dp.arrows + post
                    np = Path(arrows=arrows) if arrows else q.trivial_path(q.source_of(p))
                    new = out.get(np, 0) + sign * c * dc
                    if new:
                        out[np] = new
                    else:
                        out.pop(np, None)
            prefix_deg += q.arrow(name).degree
    return PathElement(q, out)


# ---------- constructions ----------


def relation_dg_algebra(q: GradedQuiver, relations) -> DgAlgebra:
    """Adjoin one degree -1 arrow per relation, with the relation as its
    differential; input arrows must be in degree 0."""
    _require_degree_zero(q)
    relations = _check_relations(q, relations)
    extra = [
        Arrow(relation_arrow_name(r.label), r.source, r.target, -1) for r in relations
    ]
    big = q.with_extra_arrows(extra)
    diff = {
        relation_arrow_name(r.label): r.body.rebind(big) for r in relations
    }
    return DgAlgebra(big, diff)


def superpotential_extension(q: GradedQuiver, relations, m: int):
    """Adjoin one reversed arrow of degree 2-m per relation and pair it with
    the relation inside the superpotential.  Returns (quiver, superpotential);
    the superpotential is homogeneous of degree 2-m (zero if all bodies are).
    """
    if m < 2:
        raise ValueError("the construction needs m >= 2")
    _require_degree_zero(q)
    relations = _check_relations(q, relations)
    extra = [
        Arrow(reverse_arrow_name(r.label), r.target, r.source, 2 - m)
        for r in relations
    ]
    big = q.with_extra_arrows(extra)
    acc = PathElement.zero(big)
    for r in relations:
        eps = PathElement.from_arrow(big, reverse_arrow_name(r.label))
        acc = acc + eps * r.body.rebind(big)
    return big, cyclic_reduce(acc)


def ginzburg_dg_algebra(
    q: GradedQuiver, w: Superpotential, m: int, convention: str = "standard"
) -> DgAlgebra:
    """The Ginzburg dg-algebra of (q, w) with parameter m.

    `w` must be homogeneous of degree 2-m over q.  With
    ``convention="keller"`` the loop differentials are scaled by
    (-1)^{m-1}; the two conventions give isomorphic dg-algebras via
    t_i -> (-1)^{m-1} t_i.
    """
    if w.quiver != q:
        raise ValueError("superpotential lives over a different quiver")
    if not w.matches_degree(2 - m):
        raise ValueError(f"superpotential degree {w.degree} != 2 - m = {2 - m}")
    if convention not in ("standard", "keller"):
        raise ValueError(f"unknown convention {convention!r}")
    duals = [
        Arrow(dual_name(a.name), a.target, a.source, 1 - m - a.degree)
        for a in q.arrows
    ]
    loops = [Arrow(loop_name(v), v, v, -m) for v in q.vertices]
    big = q.with_extra_arrows(duals + loops)

    diff: dict[str, PathElement] = {}
    for a in q.arrows:
        diff[dual_name(a.name)] = cyclic_derivative(w, a.name).rebind(big)
    mesh: dict[str, PathElement] = {v: PathElement.zero(big) for v in q.vertices}
    for a in q.arrows:
        x = PathElement.from_arrow(big, a.name)
        xs = PathElement.from_arrow(big, dual_name(a.name))
        comm = supercommutator(x, xs)
        for v in q.vertices:
            e = PathElement.idempotent(big, v)
            mesh[v] = mesh[v] + e * comm * e
    t_sign = 1 if convention == "standard" else _sign(m - 1)
    for v in q.vertices:
        diff[loop_name(v)] = t_sign * mesh[v]
    return DgAlgebra(big, diff)


def ginzburg_from_relations(q: GradedQuiver, relations, m: int) -> DgAlgebra:
    """Ginzburg dg-algebra of the superpotential extension of (q, relations)."""
    big, w = superpotential_extension(q, relations, m)
    return ginzburg_dg_algebra(big, w, m)


# ---------- verification ----------


def _sample_path(rng: random.Random, q: GradedQuiver, length: int) -> Path | None:
    v = rng.choice(q.vertices)
    arrows = []
    for _ in range(length):
        outs = q.arrows_from(v)
        if not outs:
            return None
        a = rng.choice(outs)
        arrows.append(a.name)
        v = a.target
    return Path(arrows=tuple(arrows)) if arrows else q.trivial_path(v)


def check_d_squared(
    dg: DgAlgebra, max_len: int = 6, samples_per_degree: int = 200, seed: int = 0
) -> PathElement | None:
    """Verify d(d(x)) = 0 on every generator and on random products.

    Returns the first violating element, or None when everything checks out.
    Sampling covers `samples_per_degree` random paths per length up to
    `max_len`; it guards the Leibniz signs, since generator-level d^2 = 0
    alone does not exercise them.
    """
    q = dg.quiver
    for a in q.arrows:
        x = PathElement.from_arrow(q, a.name)
        if not apply_d(dg, apply_d(dg, x)).is_zero():
            return x
    if not q.vertices:
        return None
    rng = random.Random(seed)
    for length in range(2, max_len + 1):
        for _ in range(samples_per_degree):
            p = _sample_path(rng, q, length)
            if p is None:
                continue
            x = PathElement(q, {p: Fraction(1)})
            if not apply_d(dg, apply_d(dg, x)).is_zero():
                return x
    return None


def replace_arrow(q: GradedQuiver, w: Superpotential, arrow: str, m: int):
    """Replace an arrow a: i -> j that no term of w contains by its reversed
    dual of degree 1-m-|a|; the superpotential is untouched and the Ginzburg
    dg-algebras of the two data are isomorphic."""
    a = q.arrow(arrow)
    if arrow in w.arrows_used():
        raise ValueError(f"arrow {arrow!r} occurs in the superpotential")
    replaced = tuple(
        Arrow(dual_name(a.name), a.target, a.source, 1 - m - a.degree)
        if b.name == arrow
        else b
        for b in q.arrows
    )
    if len({b.name for b in replaced}) != len(replaced):
        raise ValueError(f"generated name {dual_name(arrow)!r} already in use")
    new_q = GradedQuiver(q.vertices, replaced)
    new_w = Superpotential(new_q, dict(w.terms), degree=w.degree)
    return new_q, new_w


def replace_arrow_isomorphism(q: GradedQuiver, w: Superpotential, arrow: str, m: int):
    """Witness that replacing an arrow preserves the Ginzburg dg-algebra.

    Returns (gamma_replaced, gamma_original, mapping) with the mapping
    fixing every untouched generator, sending the dual of the new arrow
    back to the old arrow with the sign (-1)^{d m + 1} (d the old degree),
    which is what the loop differentials force: swapping the two slots of a
    supercommutator [x, y] costs -(-1)^{|x||y|}.
    """
    a = q.arrow(arrow)
    new_q, new_w = replace_arrow(q, w, arrow, m)
    original = ginzburg_dg_algebra(q, w, m)
    replaced = ginzburg_dg_algebra(new_q, new_w, m)
    sign = _sign(a.degree * m + 1)
    mapping = {}
    for b in q.arrows:
        if b.name == arrow:
            continue
        mapping[b.name] = (1, b.name)
        mapping[dual_name(b.name)] = (1, dual_name(b.name))
    mapping[dual_name(arrow)] = (1, dual_name(arrow))
    mapping[dual_name(dual_name(arrow))] = (sign, arrow)
    for v in q.vertices:
        mapping[loop_name(v)] = (1, loop_name(v))
    return replaced, original, mapping


def normalize_arrow_degrees(q: GradedQuiver, w: Superpotential, m: int):
    """Iterated arrow replacement moving every degree 1-m arrow to degree 0,
    so that all arrow degrees land in [2-m, 0].  Requires m >= 2 and input
    degrees within [1-m, 0]."""
    if m < 2:
        raise ValueError("m >= 2 required")
    for a in q.arrows:
        if not (1 - m <= a.degree <= 0):
            raise ValueError(f"arrow {a.name!r} has degree outside [1-m, 0]")
    for name in [a.name for a in q.arrows if a.degree == 1 - m]:
        q, w = replace_arrow(q, w, name, m)
    return q, w


def verify_sub_dg(dg: DgAlgebra, sub_arrows) -> str | None:
    """Check d maps the span of `sub_arrows` into itself; returns an arrow
    whose differential escapes, or None."""
    sub = set(sub_arrows)
    unknown = sub - set(dg.arrow_names())
    if unknown:
        raise KeyError(f"unknown arrows {sorted(unknown)}")
    for name in sorted(sub):
        if not dg.d(name).arrows_used() <= sub:
            return name
    return None


def sub_dg_algebra(dg: DgAlgebra, sub_arrows) -> DgAlgebra:
    """The sub-dg-algebra on a d-closed set of arrows."""
    bad = verify_sub_dg(dg, sub_arrows)
    if bad is not None:
        raise ValueError(f"d({bad}) leaves the chosen arrows")
    small = dg.quiver.subquiver(sub_arrows)
    return DgAlgebra(
        small, {a.name: dg.d(a.name).rebind(small) for a in small.arrows}
    )


def map_element(mapping, x: PathElement, target: GradedQuiver) -> PathElement:
    """Extend an arrow -> (coefficient, arrow) assignment multiplicatively."""
    out = PathElement.zero(target)
    for p, c in x.terms.items():
        if p.is_trivial:
            out = out + PathElement(target, {target.trivial_path(p.base): c})
            continue
        coeff = as_rational(c)
        names = []
        for n in p.arrows:
            cf, nn = mapping[n]
            coeff *= as_rational(cf)
            names.append(nn)
        if coeff:
            out = out + PathElement(target, {target.path(names): coeff})
    return out


def check_dg_isomorphism(mapping, dga: DgAlgebra, dgb: DgAlgebra) -> str | None:
    """Verify that arrow -> (sign, arrow) induces a dg-isomorphism A -> B.

    The assignment must be a degree-preserving, endpoint-compatible bijection
    on arrows up to nonzero scalars (violations raise).  Returns the first
    generator where f(d_A(a)) != d_B(f(a)), or None when the map commutes
    with the differentials.
    """
    qa, qb = dga.quiver, dgb.quiver
    if set(mapping) != {a.name for a in qa.arrows}:
        raise ValueError("mapping must assign every arrow of the source")
    images = [nn for _, nn in mapping.values()]
    if len(set(images)) != len(images) or set(images) != {a.name for a in qb.arrows}:
        raise ValueError("mapping is not a bijection on arrows")
    for name, (cf, nn) in mapping.items():
        if not as_rational(cf):
            raise ValueError(f"zero coefficient on {name!r}")
        a, b = qa.arrow(name), qb.arrow(nn)
        if a.degree != b.degree:
            raise ValueError(f"{name!r} -> {nn!r} changes degree")
        if (a.source, a.target) != (b.source, b.target):
            raise ValueError(f"{name!r} -> {nn!r} changes endpoints")
    for name in dga.arrow_names():
        cf, nn = mapping[name]
        lhs = map_element(mapping, dga.d(name), qb)
        rhs = as_rational(cf) * dgb.d(nn)
        if lhs != rhs:
            return name
    return None


def relation_sub_dg_correspondence(q: GradedQuiver, relations, m: int):
    """Inside the Ginzburg dg-algebra of (q, relations, m), the original
    arrows together with the duals of the reversed arrows form a d-closed
    subquiver; mapping each such dual to (-1)^m times the corresponding
    degree -1 arrow identifies that sub-dg-algebra with
    relation_dg_algebra(q, relations).

    Returns (sub_dg, relation_dg, mapping) ready for check_dg_isomorphism.
    """
    relations = list(relations)
    gamma = ginzburg_from_relations(q, relations, m)
    sub_names = [a.name for a in q.arrows] + [
        dual_name(reverse_arrow_name(r.label)) for r in relations
    ]
    sub = sub_dg_algebra(gamma, sub_names)
    b = relation_dg_algebra(q, relations)
    mapping = {a.name: (1, a.name) for a in q.arrows}
    for r in relations:
        mapping[dual_name(reverse_arrow_name(r.label))] = (
            _sign(m),
            relation_arrow_name(r.label),
        )
    return sub, b, mapping


def keller_comparison(q: GradedQuiver, w: Superpotential, m: int):
    """Both sign conventions for the Ginzburg dg-algebra plus the witness
    isomorphism t_i -> (-1)^{m-1} t_i between them."""
    std = ginzburg_dg_algebra(q, w, m, convention="standard")
    kel = ginzburg_dg_algebra(q, w, m, convention="keller")
    mapping = {a.name: (1, a.name) for a in q.arrows}
    mapping.update(
        {dual_name(a.name): (1, dual_name(a.name)) for a in q.arrows}
    )
    mapping.update(
        {loop_name(v): (_sign(m - 1), loop_name(v)) for v in q.vertices}
    )
    return std, kel, mapping


def sub_dg_completion(q: GradedQuiver, w: Superpotential, m: int, omega):
    """Rebuild the Ginzburg dg-algebra of (q, w) by doubling the triangular
    sub-dg-algebra determined by `omega`.

    `omega` must be a set of arrows such that every cycle of w contains
    exactly one arrow outside it (with the remaining arrows inside).  The
    doubled presentation carries the superpotential that pairs each dualized
    outside arrow with its cofactor, scaled by (-1)^{m-1}, and the loop
    differentials carry the (-1)^{m+1} convention.  Returns the presentation
    and a sign assignment phi with
    ``check_dg_isomorphism(phi, presentation, ginzburg_dg_algebra(q, w, m))``
    passing; the caller is expected to run that check.
    """
    omega = set(omega)
    unknown = omega - {a.name for a in q.arrows}
    if unknown:
        raise KeyError(f"unknown arrows {sorted(unknown)}")
    betas = [a for a in q.arrows if a.name not in omega]
    for b in betas:
        if m % 2 == 0 or b.degree % 2 == 1:
            continue
        # need (-1)^{m(1+|b|)} = 1 for a diagonal sign correspondence
        raise ValueError(
            f"no diagonal sign correspondence: arrow {b.name!r} has even "
            f"degree while m is odd"
        )

    inner = [a for a in q.arrows if a.name in omega]
    b_duals = [
        Arrow(dual_name(b.name), b.target, b.source, 1 - m - b.degree) for b in betas
    ]
    inner_duals = [
        Arrow(dual_name(a.name), a.target, a.source, 1 - m - a.degree) for a in inner
    ]
    bstar_duals = [
        Arrow(dual_name(dual_name(b.name)), b.source, b.target, b.degree)
        for b in betas
    ]
    loops = [Arrow(loop_name(v), v, v, -m) for v in q.vertices]
    big = GradedQuiver(
        q.vertices, tuple(inner + b_duals + inner_duals + bstar_duals + loops)
    )

    # Superpotential of the doubled presentation: each cycle of w, rotated to
    # start at its unique outside arrow, with that arrow renamed to the
    # double dual and the coefficient scaled by (-1)^{m-1}.
    beta_names = {b.name for b in betas}
    acc = PathElement.zero(big)
    for p, c in w.terms.items():
        hits = [i for i, n in enumerate(p.arrows) if n in beta_names]
        if len(hits) != 1:
            raise ValueError(
                "each superpotential cycle must contain exactly one arrow "
                "outside omega"
            )
        i = hits[0]
        rotated = p.arrows[i:] + p.arrows[:i]
        u, v = p.arrows[:i], p.arrows[i:]
        du = sum(q.arrow(n).degree for n in u)
        dv = sum(q.arrow(n).degree for n in v)
        sign = -1 if (du * dv) % 2 else 1  # uv -> vu rotation sign
        names = (dual_name(dual_name(rotated[0])),) + rotated[1:]
        coeff = as_rational(c) * sign * _sign(m - 1)
        acc = acc + PathElement(big, {big.path(names): coeff})
    w_prime = cyclic_reduce(acc)

    diff: dict[str, PathElement] = {}
    for b in betas:  # the sub-dg-algebra differential, d(b*) = del_b w
        diff[dual_name(b.name)] = cyclic_derivative(w, b.name).rebind(big)
    for a in inner:
        diff[dual_name(a.name)] = cyclic_derivative(w_prime, a.name)
    for b in betas:
        diff[dual_name(dual_name(b.name))] = cyclic_derivative(
            w_prime, dual_name(b.name)
        )
    generators = inner + b_duals
    mesh = {v: PathElement.zero(big) for v in q.vertices}
    for g in generators:
        x = PathElement.from_arrow(big, g.name)
        xs = PathElement.from_arrow(big, dual_name(g.name))
        comm = supercommutator(x, xs)
        for v in q.vertices:
            e = PathElement.idempotent(big, v)
            mesh[v] = mesh[v] + e * comm * e
    for v in q.vertices:
        diff[loop_name(v)] = _sign(m + 1) * mesh[v]
    presentation = DgAlgebra(big, diff)

    phi = {a.name: (1, a.name) for a in inner}
    phi.update({dual_name(b.name): (1, dual_name(b.name)) for b in betas})
    phi.update({dual_name(a.name): (_sign(m - 1), dual_name(a.name)) for a in inner})
    phi.update({dual_name(dual_name(b.name)): (1, b.name) for b in betas})
    phi.update({loop_name(v): (1, loop_name(v)) for v in q.vertices})
    return presentation, phi


def describe_generators(dg: DgAlgebra) -> list[tuple[str, int, str]]:
    """(name, degree, printed differential) per arrow, in declared order."""
    return [
        (a.name, a.degree, format_element(dg.d(a.name)))
        for a in dg.quiver.arrows
    ]
