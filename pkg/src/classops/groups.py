"""Finite groups as indexed multiplication tables, plus the group algebra.

Conventions used throughout the package:

* Elements of a group of order n are the indices 0..n-1, with 0 the identity.
* Permutations are tuples of images ``p[x] = p(x)`` (0-based points) and are
  composed as functions, ``(p * q)(x) = p(q(x))``.
* A group-algebra element is a plain complex ndarray of length |G| holding the
  coefficient function g -> phi(g).
* Convolution carries the 1/|G| normalization inside the sum,
  ``(kappa * rho)(x) = (1/|G|) sum_g kappa(g) rho(g^-1 x)``, and the left
  multiplication operator therefore convolves with the rescaled function
  |G|*phi.  These two conventions live here and nowhere else.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "GroupConstructionError",
    "FiniteGroup",
    "ConjugacyClass",
    "DEFAULT_ORDER_CAP",
    "build_group",
    "cyclic_group",
    "dihedral_group",
    "symmetric_group",
    "quaternion_group",
    "group_from_generators",
    "group_from_table",
    "conjugacy_classes",
    "convolve",
    "inner_product",
    "left_regular_matrix",
    "regular_actions",
    "parse_cycles",
    "cycle_notation",
]

DEFAULT_ORDER_CAP = 10080


class GroupConstructionError(ValueError):
    """Invalid group descriptor, broken table axioms, or oversized closure."""


# ---------------------------------------------------------------------------
# permutation helpers
# ---------------------------------------------------------------------------

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int | None = None) -> tuple[int, ...]:
    """Parse cycle notation like ``"(1 2)(3 4)"`` into a 0-based image tuple.

    Points inside cycles are 1-based, separated by spaces or commas.  The
    empty string or ``"e"`` denotes the identity.
    """
    text = text.strip()
    cycles: list[list[int]] = []
    if text and text not in ("e", "()"):
        body = _CYCLE_RE.findall(text)
        if not body or _CYCLE_RE.sub("", text).strip():
            raise GroupConstructionError(f"cannot parse cycle notation: {text!r}")
        for chunk in body:
            pts = [p for p in re.split(r"[\s,]+", chunk.strip()) if p]
            cyc = [int(p) - 1 for p in pts]
            if any(p < 0 for p in cyc):
                raise GroupConstructionError(f"points must be >= 1 in {text!r}")
            if len(set(cyc)) != len(cyc):
                raise GroupConstructionError(f"repeated point in cycle {chunk!r}")
            cycles.append(cyc)
    deg = max([degree or 1] + [p + 1 for c in cycles for p in c])
    image = list(range(deg))
    for cyc in cycles:
        for i, p in enumerate(cyc):
            image[p] = cyc[(i + 1) % len(cyc)]
    return tuple(image)


def cycle_notation(perm: tuple[int, ...]) -> str:
    """Inverse of :func:`parse_cycles` (fixed points omitted, identity = 'e')."""
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        parts.append("(" + " ".join(str(p + 1) for p in cyc) + ")")
    return "".join(parts) if parts else "e"


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p[x] for x in q)


def _pad(perm: tuple[int, ...], degree: int) -> tuple[int, ...]:
    return perm + tuple(range(len(perm), degree))


# ---------------------------------------------------------------------------
# core types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConjugacyClass:
    """A conjugacy class C0 with its centralizer Z0 and coset representatives.

    ``coset_reps[k]`` is the smallest element index x with
    ``x g0 x^-1 = members[k]``; it represents the coset x Z0 under the
    bijection G/Z0 -> C0, so class functions are indexed exactly like
    ``members``.
    """

    base_element: int
    members: tuple[int, ...]
    centralizer: tuple[int, ...]
    coset_reps: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    def member_index(self, element: int) -> int:
        return self.members.index(element)


class FiniteGroup:
    """A finite group given by its full multiplication table.

    Element 0 is the identity.  Groups built from permutation generators keep
    the permutation image of each element (``perms``) and the breadth-first
    word used to discover it (``bfs_words``), which downstream code uses to
    extend generator data (e.g. representation matrices) to the whole group.
    """

    def __init__(
        self,
        mult_table: np.ndarray,
        labels: list[str] | None = None,
        name: str = "G",
        family: tuple | None = None,
        perms: tuple[tuple[int, ...], ...] | None = None,
        generator_indices: tuple[int, ...] = (),
        bfs_words: list[tuple[int, int] | None] | None = None,
    ):
        table = np.asarray(mult_table, dtype=np.int64)
        n = table.shape[0]
        if table.shape != (n, n):
            raise GroupConstructionError("multiplication table must be square")
        if n == 0:
            raise GroupConstructionError("group cannot be empty")
        self.order = n
        self.mult_table = table
        self.name = name
        self.family = family
        self.perms = perms
        self.generator_indices = generator_indices
        self.bfs_words = bfs_words
        self.labels = list(labels) if labels is not None else [str(i) for i in range(n)]
        if len(self.labels) != n:
            raise GroupConstructionError("labels length does not match order")
        self.inverse_table = self._find_inverses()
        self.identity = 0
        self._classes: list[ConjugacyClass] | None = None
        self._element_orders: np.ndarray | None = None

    # -- structure ---------------------------------------------------------

    def _find_inverses(self) -> np.ndarray:
        n = self.order
        inv = np.full(n, -1, dtype=np.int64)
        rows, cols = np.nonzero(self.mult_table == 0)
        inv[rows] = cols
        if np.any(inv < 0):
            raise GroupConstructionError("some element has no right inverse")
        return inv

    def mul(self, a: int, b: int) -> int:
        return int(self.mult_table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse_table[a])

    def conjugate(self, x: int, by: int) -> int:
        """Return ``by * x * by^-1``."""
        return int(self.mult_table[self.mult_table[by, x], self.inverse_table[by]])

    def elements(self) -> range:
        return range(self.order)

    def element_order(self, g: int) -> int:
        if self._element_orders is None:
            self._element_orders = np.zeros(self.order, dtype=np.int64)
        if self._element_orders[g] == 0:
            k, h = 1, g
            while h != 0:
                h = self.mul(h, g)
                k += 1
            self._element_orders[g] = k
        return int(self._element_orders[g])

    def element_index(self, label_or_index) -> int:
        """Resolve an element given as an index, an int-like string, or a label."""
        if isinstance(label_or_index, (int, np.integer)):
            idx = int(label_or_index)
            if not 0 <= idx < self.order:
                raise GroupConstructionError(f"element index {idx} out of range")
            return idx
        text = str(label_or_index)
        if text in self.labels:
            return self.labels.index(text)
        try:
            return self.element_index(int(text))
        except ValueError:
            raise GroupConstructionError(f"unknown element {label_or_index!r}") from None

    def validate(self, max_exhaustive: int = 60, samples: int = 10_000, seed: int = 0) -> None:
        """Check associativity, identity and inverses; raise on failure.

        Exhaustive over all triples up to ``max_exhaustive`` elements, sampled
        above that.
        """
        n, t = self.order, self.mult_table
        if np.any((t < 0) | (t >= n)):
            raise GroupConstructionError("table entries out of range")
        if not (np.array_equal(t[0], np.arange(n)) and np.array_equal(t[:, 0], np.arange(n))):
            raise GroupConstructionError("element 0 is not a two-sided identity")
        inv = self.inverse_table
        if np.any(t[inv, np.arange(n)] != 0) or np.any(t[np.arange(n), inv] != 0):
            raise GroupConstructionError("inverse table is not two-sided")
        if np.any(np.sort(t, axis=1) != np.arange(n)) or np.any(np.sort(t, axis=0) != np.arange(n)[:, None]):
            raise GroupConstructionError("table rows/columns are not permutations")
        if n <= max_exhaustive:
            # (ab)c computed for all triples at once
            left = t[t, :]                     # left[a, b, c] = (ab)c
            right = t[:, t]                    # right[a, b, c] = a(bc)
            if not np.array_equal(left, right):
                raise GroupConstructionError("multiplication table is not associative")
        else:
            rng = np.random.default_rng(seed)
            abc = rng.integers(0, n, size=(samples, 3))
            a, b, c = abc[:, 0], abc[:, 1], abc[:, 2]
            if not np.array_equal(t[t[a, b], c], t[a, t[b, c]]):
                raise GroupConstructionError("multiplication table is not associative")

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def _closure(
    generators: list[tuple[int, ...]],
    name: str,
    family: tuple | None,
    order_cap: int,
) -> FiniteGroup:
    """Breadth-first closure of permutation generators.

    Ordering contract: identity first, then BFS levels of the right Cayley
    graph, ties inside a level broken by lexicographic permutation image.
    This fixes element indices deterministically.
    """
    degree = max([1] + [len(g) for g in generators])
    gens = [_pad(g, degree) for g in generators]
    identity = tuple(range(degree))
    index: dict[tuple[int, ...], int] = {identity: 0}
    elements: list[tuple[int, ...]] = [identity]
    words: list[tuple[int, int] | None] = [None]
    frontier = [identity]
    while frontier:
        discovered: dict[tuple[int, ...], tuple[int, int]] = {}
        for p in frontier:
            for slot, g in enumerate(gens):
                q = _compose(p, g)
                if q not in index and q not in discovered:
                    discovered[q] = (index[p], slot)
        frontier = sorted(discovered)
        for q in frontier:
            index[q] = len(elements)
            elements.append(q)
            words.append(discovered[q])
        if len(elements) > order_cap:
            raise GroupConstructionError(
                f"group too large: closure exceeded the order cap {order_cap}"
            )
    n = len(elements)
    perm_array = np.array(elements, dtype=np.int64)
    table = np.empty((n, n), dtype=np.int64)
    if n <= 512:
        for a in range(n):
            for b in range(n):
                table[a, b] = index[_compose(elements[a], elements[b])]
    else:
        # vectorized composition with searchsorted lookup on byte views
        sort_order = np.lexsort(perm_array.T[::-1])
        sorted_perms = perm_array[sort_order]
        for a in range(n):
            composed = perm_array[a][perm_array]      # rows: elements[a] o elements[b]
            pos = np.searchsorted(
                sorted_perms.view([("", sorted_perms.dtype)] * degree).ravel(),
                composed.view([("", composed.dtype)] * degree).ravel(),
            )
            table[a] = sort_order[pos]
    gen_indices = tuple(index[g] for g in gens)
    labels = [cycle_notation(p) for p in elements]
    return FiniteGroup(
        table,
        labels=labels,
        name=name,
        family=family,
        perms=tuple(elements),
        generator_indices=gen_indices,
        bfs_words=words,
    )


def cyclic_group(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    if n < 1:
        raise GroupConstructionError("cyclic group needs n >= 1")
    gens = [] if n == 1 else [tuple((i + 1) % n for i in range(n))]
    return _closure(gens, f"C{n}", ("cyclic", n), order_cap)


def dihedral_group(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    if n < 1:
        raise GroupConstructionError("dihedral group needs n >= 1")
    if n == 1:
        gens = [parse_cycles("(1 2)")]
    elif n == 2:
        gens = [parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)]
    else:
        rot = tuple((i + 1) % n for i in range(n))
        ref = tuple(0 if i == 0 else n - i for i in range(n))  # fixes point 1
        gens = [rot, ref]
    return _closure(gens, f"D{n}", ("dihedral", n), order_cap)


def symmetric_group(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise GroupConstructionError("symmetric catalog group supports 1 <= n <= 5")
    gens = []
    if n >= 2:
        gens.append(parse_cycles("(1 2)", n))
    if n >= 3:
        gens.append(tuple((i + 1) % n for i in range(n)))
    return _closure(gens, f"S{n}", ("symmetric", n), order_cap)


def quaternion_group(order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    # left-regular action of Q8 on itself, points ordered 1,-1,i,-i,j,-j,k,-k
    gen_i = parse_cycles("(1 3 2 4)(5 7 6 8)")
    gen_j = parse_cycles("(1 5 2 6)(3 8 4 7)")
    return _closure([gen_i, gen_j], "Q8", ("quaternion", 8), order_cap)


def group_from_generators(
    cycle_strings: list[str],
    name: str = "G",
    order_cap: int = DEFAULT_ORDER_CAP,
) -> FiniteGroup:
    gens = [parse_cycles(s) for s in cycle_strings]
    degree = max([1] + [len(g) for g in gens])
    gens = [_pad(g, degree) for g in gens]
    return _closure(gens, name, None, order_cap)


def group_from_table(table, labels: list[str] | None = None, name: str = "G") -> FiniteGroup:
    """Build a group from an explicit table, validating all axioms."""
    group = FiniteGroup(np.asarray(table, dtype=np.int64), labels=labels, name=name)
    group.validate()
    return group


_CATALOG_RE = re.compile(r"^([CDSQ])(\d+)$", re.IGNORECASE)


def build_group(spec, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Build a group from a construction descriptor.

    Accepted forms:

    * catalog shorthand string: ``"C6"``, ``"D4"``, ``"S3"``, ``"Q8"``
    * mapping ``{"catalog": {"family": "cyclic"|"dihedral"|"symmetric"|"quaternion", "n": k}}``
    * mapping ``{"generators": ["(1 2)", "(1 2 3)"]}`` (cycle notation)
    * mapping ``{"table": [[...], ...]}`` (explicit multiplication table)
    * list of cycle-notation strings (same as the generators mapping)
    """
    if isinstance(spec, str):
        match = _CATALOG_RE.match(spec.strip())
        if not match:
            raise GroupConstructionError(f"unknown catalog group {spec!r}")
        letter, n = match.group(1).upper(), int(match.group(2))
        if letter == "C":
            return cyclic_group(n, order_cap)
        if letter == "D":
            return dihedral_group(n, order_cap)
        if letter == "S":
            return symmetric_group(n, order_cap)
        if n != 8:
            raise GroupConstructionError("only Q8 is in the quaternion catalog")
        return quaternion_group(order_cap)
    if isinstance(spec, (list, tuple)):
        return group_from_generators(list(spec), order_cap=order_cap)
    if isinstance(spec, dict):
        if "catalog" in spec:
            cat = spec["catalog"]
            family = str(cat.get("family", "")).lower()
            n = int(cat.get("n", 0) or 0)
            builders = {
                "cyclic": lambda: cyclic_group(n, order_cap),
                "dihedral": lambda: dihedral_group(n, order_cap),
                "symmetric": lambda: symmetric_group(n, order_cap),
                "quaternion": lambda: quaternion_group(order_cap),
            }
            if family not in builders:
                raise GroupConstructionError(f"unknown catalog family {family!r}")
            return builders[family]()
        if "generators" in spec:
            return group_from_generators(list(spec["generators"]), order_cap=order_cap)
        if "table" in spec:
            return group_from_table(spec["table"], labels=spec.get("labels"), name=spec.get("name", "G"))
        raise GroupConstructionError("descriptor needs 'catalog', 'generators' or 'table'")
    raise GroupConstructionError(f"unsupported group spec of type {type(spec).__name__}")


# ---------------------------------------------------------------------------
# conjugacy structure
# ---------------------------------------------------------------------------


def conjugacy_classes(group: FiniteGroup) -> list[ConjugacyClass]:
    """All conjugacy classes, sorted by base element (= minimal member index)."""
    if group._classes is not None:
        return group._classes
    n = group.order
    t, inv = group.mult_table, group.inverse_table
    all_x = np.arange(n)
    assigned = np.zeros(n, dtype=bool)
    classes = []
    for base in range(n):
        if assigned[base]:
            continue
        conj_by = t[t[all_x, base], inv[all_x]]   # conj_by[x] = x * base * x^-1
        members = np.unique(conj_by)
        assigned[members] = True
        centralizer = np.flatnonzero(t[all_x, base] == t[base, all_x])
        first_rep = {}
        for x in range(n):
            first_rep.setdefault(int(conj_by[x]), x)
        coset_reps = tuple(first_rep[int(c)] for c in members)
        classes.append(
            ConjugacyClass(
                base_element=base,
                members=tuple(int(c) for c in members),
                centralizer=tuple(int(h) for h in centralizer),
                coset_reps=coset_reps,
            )
        )
    group._classes = classes
    return classes


# ---------------------------------------------------------------------------
# group algebra
# ---------------------------------------------------------------------------


def _as_coeffs(group: FiniteGroup, phi) -> np.ndarray:
    arr = np.asarray(phi, dtype=complex)
    if arr.shape != (group.order,):
        raise ValueError(f"expected a coefficient vector of length {group.order}, got shape {arr.shape}")
    return arr


def convolve(group: FiniteGroup, phi, psi) -> np.ndarray:
    """Normalized convolution ``(phi * psi)(x) = (1/|G|) sum_g phi(g) psi(g^-1 x)``."""
    phi = _as_coeffs(group, phi)
    psi = _as_coeffs(group, psi)
    idx = group.mult_table[group.inverse_table, :]   # idx[g, x] = g^-1 x
    return phi @ psi[idx] / group.order


def inner_product(group: FiniteGroup, phi, psi) -> complex:
    """Group-algebra inner product, conjugate-linear in the second argument."""
    phi = _as_coeffs(group, phi)
    psi = _as_coeffs(group, psi)
    return complex(phi @ psi.conj() / group.order)


def left_regular_matrix(group: FiniteGroup, phi) -> np.ndarray:
    """Matrix of left multiplication by phi on the group algebra.

    Acts as convolution with |G|*phi: column b is the coefficient vector of
    phi applied to the delta function at b, ``M[x, b] = phi(x b^-1)``.
    """
    phi = _as_coeffs(group, phi)
    idx = group.mult_table[:, group.inverse_table]   # idx[x, b] = x b^-1
    return phi[idx]


def regular_actions(group: FiniteGroup, g: int) -> tuple[np.ndarray, np.ndarray]:
    """Permutation matrices of the left and right regular actions of g.

    ``lam`` realizes (lam(g) f)(x) = f(g^-1 x), ``rho`` realizes
    (rho(g) f)(x) = f(x g); the two commute.
    """
    n = group.order
    lam = np.zeros((n, n), dtype=complex)
    rho = np.zeros((n, n), dtype=complex)
    cols = np.arange(n)
    lam[group.mult_table[g, cols], cols] = 1.0
    rho[cols, group.mult_table[cols, g]] = 1.0
    return lam, rho
