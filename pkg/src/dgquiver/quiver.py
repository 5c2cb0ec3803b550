"""Graded quivers, paths, and basic path combinatorics.

Composition convention: the product ``pq`` means "first p, then q", i.e.
``pq`` is the concatenation when the target of ``p`` equals the source of
``q``.  Many libraries use the opposite convention; every module here uses
this one.

Path enumeration is deterministic: paths are ordered by length, then
lexicographically by their arrow-name sequences (trivial paths in declared
vertex order), so matrix constructions and reports are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class Arrow:
    name: str
    source: str
    target: str
    degree: int = 0


@dataclass(frozen=True, slots=True)
class Path:
    """A composable sequence of arrow names; a trivial path carries `base`.

    Exactly one of the two holds: `arrows` is nonempty and `base` is None,
    or `arrows` is empty and `base` names the vertex.
    """

    arrows: tuple[str, ...] = ()
    base: str | None = None

    def __post_init__(self):
        if bool(self.arrows) == (self.base is not None):
            raise ValueError("a path has either arrows or a base vertex, not both")

    def __len__(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows


class GradedQuiver:
    """Finite directed multigraph with integer degrees on arrows.

    Vertex and arrow names are caller-supplied strings.  The constructor
    stores data as given; `validate` reports invariant violations (duplicate
    names, undeclared endpoints) without raising, so that malformed input can
    be diagnosed.  All other operations assume a valid quiver.
    """

    def __init__(self, vertices, arrows=()):
        self.vertices: tuple[str, ...] = tuple(vertices)
        arrs = []
        for a in arrows:
            if isinstance(a, Arrow):
                arrs.append(a)
            else:
                arrs.append(Arrow(*a))
        self.arrows: tuple[Arrow, ...] = tuple(arrs)
        self._vertex_index = {v: i for i, v in enumerate(self.vertices)}
        self._arrow_by_name: dict[str, Arrow] = {}
        for a in self.arrows:
            self._arrow_by_name.setdefault(a.name, a)
        self._out: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        self._in: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            if a.source in self._out and a.target in self._in:
                self._out[a.source].append(a)
                self._in[a.target].append(a)

    # ---------- structure ----------

    def validate(self) -> list[str]:
        """List of violations; empty means the quiver is well formed."""
        problems = []
        seen_v = set()
        for v in self.vertices:
            if v in seen_v:
                problems.append(f"duplicate vertex id {v!r}")
            seen_v.add(v)
        seen_a = set()
        for a in self.arrows:
            if a.name in seen_a:
                problems.append(f"duplicate arrow id {a.name!r}")
            seen_a.add(a.name)
            if a.source not in self._vertex_index:
                problems.append(f"arrow {a.name!r} has undeclared source {a.source!r}")
            if a.target not in self._vertex_index:
                problems.append(f"arrow {a.name!r} has undeclared target {a.target!r}")
        return problems

    def arrow(self, name: str) -> Arrow:
        try:
            return self._arrow_by_name[name]
        except KeyError:
            raise KeyError(f"unknown arrow {name!r}") from None

    def has_arrow(self, name: str) -> bool:
        return name in self._arrow_by_name

    def arrows_from(self, v: str) -> list[Arrow]:
        return list(self._out[v])

    def arrows_into(self, v: str) -> list[Arrow]:
        return list(self._in[v])

    def vertex_index(self, v: str) -> int:
        try:
            return self._vertex_index[v]
        except KeyError:
            raise KeyError(f"unknown vertex {v!r}") from None

    def degrees(self) -> list[int]:
        return [a.degree for a in self.arrows]

    def is_acyclic(self) -> bool:
        """True iff there is no cycle of positive length."""
        color = {v: 0 for v in self.vertices}  # 0 new, 1 on stack, 2 done
        for start in self.vertices:
            if color[start]:
                continue
            stack = [(start, iter(self._out[start]))]
            color[start] = 1
            while stack:
                v, it = stack[-1]
                adv = next(it, None)
                if adv is None:
                    color[v] = 2
                    stack.pop()
                    continue
                w = adv.target
                if color[w] == 1:
                    return False
                if color[w] == 0:
                    color[w] = 1
                    stack.append((w, iter(self._out[w])))
        return True

    def longest_path_length(self) -> int | None:
        """Length of the longest path, or None if the quiver has cycles."""
        if not self.is_acyclic():
            return None
        memo: dict[str, int] = {}

        def far(v: str) -> int:
            if v not in memo:
                memo[v] = max((1 + far(a.target) for a in self._out[v]), default=0)
            return memo[v]

        return max((far(v) for v in self.vertices), default=0)

    # ---------- paths ----------

    def trivial_path(self, v: str) -> Path:
        self.vertex_index(v)
        return Path(base=v)

    def path(self, arrow_names) -> Path:
        """Build a path from arrow names, checking composability."""
        names = tuple(arrow_names)
        if not names:
            raise ValueError("use trivial_path for length-0 paths")
        prev = None
        for n in names:
            a = self.arrow(n)
            if prev is not None and prev.target != a.source:
                raise ValueError(
                    f"arrows {prev.name!r} and {a.name!r} do not compose"
                )
            prev = a
        return Path(arrows=names)

    def source_of(self, p: Path) -> str:
        return p.base if p.is_trivial else self.arrow(p.arrows[0]).source

    def target_of(self, p: Path) -> str:
        return p.base if p.is_trivial else self.arrow(p.arrows[-1]).target

    def degree_of(self, p: Path) -> int:
        return sum(self.arrow(n).degree for n in p.arrows)

    def is_cycle(self, p: Path) -> bool:
        return self.source_of(p) == self.target_of(p)

    def compose(self, p: Path, q: Path) -> Path | None:
        """pq (first p, then q), or None when the endpoints do not match."""
        if self.target_of(p) != self.source_of(q):
            return None
        if p.is_trivial:
            return q
        if q.is_trivial:
            return p
        return Path(arrows=p.arrows + q.arrows)

    def path_sort_key(self, p: Path):
        base_ix = self._vertex_index[p.base] if p.is_trivial else -1
        return (len(p.arrows), p.arrows, base_ix)

    def enumerate_paths(self, max_len: int, degree: int | None = None) -> list[Path]:
        """All paths of length <= max_len, ordered by (length, arrow names).

        With `degree` given, keeps only paths of that total degree (the
        ordering of the survivors is unchanged).
        """
        if max_len < 0:
            raise ValueError("max_len must be >= 0")
        out: list[Path] = [self.trivial_path(v) for v in self.vertices]
        frontier = out[:]
        for _ in range(max_len):
            nxt = [
                Path(arrows=p.arrows + (a.name,))
                for p in frontier
                for a in self._out[self.target_of(p)]
            ]
            nxt.sort(key=lambda p: p.arrows)
            out.extend(nxt)
            frontier = nxt
            if not frontier:
                break
        if degree is None:
            return out
        return [p for p in out if self.degree_of(p) == degree]

    def paths_by_degree(
        self, max_len: int, min_degree: int, max_degree: int
    ) -> dict[int, list[Path]]:
        """Paths of length <= max_len grouped by total degree within a window.

        Branches that cannot re-enter [min_degree, max_degree] are pruned;
        with all arrow degrees <= 0 this makes deep windows cheap.
        """
        if max_len < 0:
            raise ValueError("max_len must be >= 0")
        degs = self.degrees()
        up = max(0, max(degs, default=0))     # max degree gain per extra arrow
        down = min(0, min(degs, default=0))   # max degree drop per extra arrow
        buckets: dict[int, list[Path]] = {
            d: [] for d in range(min_degree, max_degree + 1)
        }
        if min_degree <= 0 <= max_degree:
            for v in self.vertices:
                buckets[0].append(self.trivial_path(v))
        frontier: list[tuple[Path, int]] = [(self.trivial_path(v), 0) for v in self.vertices]
        for length in range(1, max_len + 1):
            rem = max_len - length
            nxt: list[tuple[Path, int]] = []
            for p, d in frontier:
                for a in self._out[self.target_of(p)]:
                    nd = d + a.degree
                    if nd + rem * up < min_degree or nd + rem * down > max_degree:
                        continue
                    nxt.append((Path(arrows=p.arrows + (a.name,)), nd))
            nxt.sort(key=lambda t: t[0].arrows)
            for p, d in nxt:
                if min_degree <= d <= max_degree:
                    buckets[d].append(p)
            frontier = nxt
            if not frontier:
                break
        return buckets

    # ---------- derived quivers ----------

    def with_extra_arrows(self, extra) -> GradedQuiver:
        extra = tuple(extra)
        for a in extra:
            if a.name in self._arrow_by_name:
                raise ValueError(f"generated arrow name {a.name!r} already in use")
        return GradedQuiver(self.vertices, self.arrows + extra)

    def without_arrow(self, name: str) -> GradedQuiver:
        self.arrow(name)
        return GradedQuiver(self.vertices, tuple(a for a in self.arrows if a.name != name))

    def degree_part(self, degree: int) -> GradedQuiver:
        """Subquiver on all vertices and the arrows of the given degree."""
        return GradedQuiver(
            self.vertices, tuple(a for a in self.arrows if a.degree == degree)
        )

    def subquiver(self, arrow_names) -> GradedQuiver:
        keep = set(arrow_names)
        unknown = keep - set(self._arrow_by_name)
        if unknown:
            raise KeyError(f"unknown arrows {sorted(unknown)}")
        return GradedQuiver(
            self.vertices, tuple(a for a in self.arrows if a.name in keep)
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GradedQuiver)
            and self.vertices == other.vertices
            and self.arrows == other.arrows
        )

    def __repr__(self) -> str:
        return f"GradedQuiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"
