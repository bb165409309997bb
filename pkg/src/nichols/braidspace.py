"""Abelian subracks of an unmixed class and their diagonal braided subspaces.

An abelian subrack is a set of pairwise-commuting class elements t_0..t_{m-1}
together with transporters g_i conjugating the basepoint to t_i.  The
conjugation table gamma_ij = g_j^{-1} t_i g_j lands in the centralizer of the
basepoint, so a representation evaluates on it; simultaneously diagonalizing
each column yields a braided subspace of diagonal type whose braiding matrix
is read off from the eigenvalue tables.

Construction families: the canonical involution subrack (k = 2), the swap and
rotation quadruples (k even, n >= 2), the power subrack (n = 1), and full
enumeration of maximal subracks for small classes.
"""

from __future__ import annotations

import itertools
from math import gcd

from .config import EngineConfig
from .exactfield import Cyclotomic, ONE
from .exactla import Matrix, simultaneous_diagonalize
from .permgroup import Permutation, UnmixedClass, conjugate
from .reps import InducedRep


class EnumerationCapError(Exception):
    """A configured resource cap stopped the subrack enumeration."""


def gamma(t: Permutation, g: Permutation) -> Permutation:
    """Pull t back along the transporter g: g^{-1} t g."""
    return t.conjugated_by(g.inverse())


class AbelianSubrack:
    """Pairwise-commuting class elements with transporters from the basepoint."""

    __slots__ = ("cls", "elements", "transporters", "kind", "param")

    def __init__(self, cls: UnmixedClass, elements, transporters,
                 kind: str = "enumerated", param: tuple = ()) -> None:
        elements = tuple(elements)
        transporters = tuple(transporters)
        if len(elements) != len(transporters):
            raise ValueError("need one transporter per element")
        if len(set(elements)) != len(elements):
            raise ValueError("subrack elements must be distinct")
        want = cls.cycle_type()
        for t, g in zip(elements, transporters):
            if t.cycle_type() != want:
                raise ValueError("subrack element lies outside the class")
            if conjugate(g, cls.basepoint) != t:
                raise ValueError("transporter does not carry the basepoint to its element")
        for a, b in itertools.combinations(elements, 2):
            if not a.commutes_with(b):
                raise ValueError("subrack elements must commute pairwise")
        self.cls = cls
        self.elements = elements
        self.transporters = transporters
        self.kind = kind
        self.param = tuple(param)

    @property
    def size(self) -> int:
        return len(self.elements)

    def gamma(self, i: int, j: int) -> Permutation:
        """Conjugation table entry g_j^{-1} t_i g_j, an element centralizing
        the basepoint."""
        return gamma(self.elements[i], self.transporters[j])

    def gamma_table(self) -> tuple:
        return tuple(tuple(self.gamma(i, j) for j in range(self.size))
                     for i in range(self.size))

    def describe(self) -> dict:
        return {
            "kind": self.kind,
            "param": list(self.param),
            "elements": [str(t) for t in self.elements],
            "transporters": [str(g) for g in self.transporters],
        }

    def __repr__(self) -> str:
        return "AbelianSubrack(kind=%r, size=%d)" % (self.kind, self.size)


def canonical_subrack(cls: UnmixedClass) -> AbelianSubrack:
    """The involution subrack for k = 2: conjugates of the basepoint by
    products of the disjoint transpositions sigma_l^+/-, one pair per index
    l <= n//2.  Size 3^(n//2); the basepoint comes first, then singles by
    index with + before -, then larger support sets."""
    if cls.k != 2:
        raise ValueError("the canonical subrack is defined for k = 2")
    if cls.n < 2:
        raise ValueError("the canonical subrack needs n >= 2")
    span = cls.n // 2
    elements = [cls.basepoint]
    transporters = [Permutation.identity(cls.degree)]
    for size in range(1, span + 1):
        for support in itertools.combinations(range(1, span + 1), size):
            for signs in itertools.product((1, -1), repeat=size):
                g = Permutation.identity(cls.degree)
                for l, sign in zip(support, signs):
                    g = g * (cls.sigma_plus(l) if sign == 1 else cls.sigma_minus(l))
                elements.append(conjugate(g, cls.basepoint))
                transporters.append(g)
    return AbelianSubrack(cls, elements, transporters, kind="canonical")


def triple_subrack(cls: UnmixedClass, l: int) -> AbelianSubrack:
    """The involution triple (pi, sigma_l^+ pi sigma_l^+, sigma_l^- pi sigma_l^-)
    for k = 2: the basepoint and its conjugates under the two disjoint
    transposition pairs at index l."""
    plus = cls.sigma_plus(l)
    minus = cls.sigma_minus(l)
    pi = cls.basepoint
    return AbelianSubrack(
        cls,
        (pi, conjugate(plus, pi), conjugate(minus, pi)),
        (Permutation.identity(cls.degree), plus, minus),
        kind="canonical-triple", param=(l,))


def quadruple_subrack(cls: UnmixedClass, i: int = 1, j: int = 2) -> AbelianSubrack:
    """The swap quadruple (pi, pi^{-1}, pi B_ij, (pi B_ij)^{-1}) with its
    canonical involution transporters; needs k even and at least 4."""
    if cls.k < 4 or cls.k % 2:
        raise ValueError("the swap quadruple needs even k >= 4")
    sigma, swap, swapinv = cls.canonical_involutions(i, j)
    pi = cls.basepoint
    mixed = pi * cls.block_swap(i, j)
    elements = (pi, pi.inverse(), mixed, mixed.inverse())
    transporters = (Permutation.identity(cls.degree), sigma, swap, swapinv)
    return AbelianSubrack(cls, elements, transporters,
                          kind="quadruple-swap", param=(i, j))


def rotation_subrack(cls: UnmixedClass) -> AbelianSubrack:
    """The twist quadruple (pi, pi^{-1}, t, t^{-1}) with t rotating the first
    block backwards and the rest forwards; needs k >= 3 and n >= 2."""
    if cls.k < 3:
        raise ValueError("the rotation quadruple needs k >= 3")
    if cls.n < 2:
        raise ValueError("the rotation quadruple needs n >= 2")
    pi = cls.basepoint
    t = cls.twist((cls.k - 1,) + (1,) * (cls.n - 1))
    g3 = cls.sigma_block(1)
    g4 = Permutation.identity(cls.degree)
    for blk in range(2, cls.n + 1):
        g4 = g4 * cls.sigma_block(blk)
    elements = (pi, pi.inverse(), t, t.inverse())
    transporters = (Permutation.identity(cls.degree), cls.sigma_reflect(), g3, g4)
    return AbelianSubrack(cls, elements, transporters, kind="quadruple-rotation")


def powers_subrack(cls: UnmixedClass) -> AbelianSubrack:
    """For a single k-cycle, the subrack of coprime powers of the basepoint."""
    if cls.n != 1:
        raise ValueError("the power subrack is defined for n = 1")
    k = cls.k
    elements = []
    transporters = []
    pi = cls.basepoint
    for j in range(1, k):
        if gcd(j, k) != 1:
            continue
        elements.append(_power(pi, j))
        transporters.append(Permutation((j * m) % k + 1 for m in range(k)))
    return AbelianSubrack(cls, elements, transporters, kind="powers")


def _power(p: Permutation, e: int) -> Permutation:
    out = Permutation.identity(p.degree)
    for _ in range(e):
        out = out * p
    return out


def commuting_graph(cls: UnmixedClass, elements=None) -> tuple:
    """Vertices (class elements, sorted) and adjacency sets of the
    commuting relation."""
    if elements is None:
        elements = sorted(cls.elements())
    else:
        elements = list(elements)
    count = len(elements)
    adj = [set() for _ in range(count)]
    for a in range(count):
        for b in range(a + 1, count):
            if elements[a].commutes_with(elements[b]):
                adj[a].add(b)
                adj[b].add(a)
    return tuple(elements), tuple(frozenset(s) for s in adj)


def _bron_kerbosch(adj, clique, candidates, excluded, out, limit):
    if not candidates and not excluded:
        out.append(frozenset(clique))
        if len(out) > limit:
            raise EnumerationCapError("more than %d maximal subracks" % limit)
        return
    pool = candidates | excluded
    pivot = min(sorted(pool), key=lambda v: (-len(adj[v] & candidates), v))
    for v in sorted(candidates - adj[pivot]):
        _bron_kerbosch(adj, clique | {v}, candidates & adj[v], excluded & adj[v],
                       out, limit)
        candidates = candidates - {v}
        excluded = excluded | {v}


def maximal_abelian_subracks(cls: UnmixedClass, config: EngineConfig = EngineConfig(),
                             include_basepoint: bool = True) -> list:
    """Every maximal abelian subrack of the class, as clique enumeration over
    the commuting graph.

    With include_basepoint only cliques through the basepoint are produced
    (every maximal subrack is conjugate to one of those).  With
    symmetry_reduction the result keeps one representative per orbit of the
    centralizer of the basepoint.  Raises EnumerationCapError when the class
    size or the subrack count exceeds the configured caps.
    """
    if cls.class_size() > config.max_class_size:
        raise EnumerationCapError(
            "class size %d exceeds the cap %d" % (cls.class_size(), config.max_class_size))
    elements, adj = commuting_graph(cls)
    index = {t: i for i, t in enumerate(elements)}
    cliques = []
    if include_basepoint:
        base = index[cls.basepoint]
        _bron_kerbosch(adj, {base}, adj[base], set(), cliques, config.max_subracks)
    else:
        _bron_kerbosch(adj, set(), set(range(len(elements))), set(), cliques,
                       config.max_subracks)
    keyed = sorted(tuple(sorted(elements[v] for v in clique)) for clique in cliques)
    if config.symmetry_reduction:
        keyed = _symmetry_reduce(cls, keyed)
    out = []
    for members in keyed:
        out.append(AbelianSubrack(
            cls, members, tuple(cls.transporter(t) for t in members)))
    return out


def _symmetry_reduce(cls: UnmixedClass, keyed: list) -> list:
    # orbit representative = lexicographically least conjugate under the
    # basepoint centralizer
    pool = set(keyed)
    reps = []
    while pool:
        first = min(pool)
        orbit = set()
        for h in cls.centralizer_elements():
            orbit.add(tuple(sorted(conjugate(h, t) for t in first)))
        reps.append(first)
        pool -= orbit
    return sorted(reps)


class DiagonalSubspace:
    """A braided subspace of diagonal type over an abelian subrack.

    Vertices are pairs (j, s): subrack position j and simultaneous
    eigenvector s of the column-j operator family rho(gamma_ij).  The
    braiding entry for row vertex (i, r) and column vertex (j, s) is the
    eigenvalue of rho(gamma_ij) on eigenvector s of column j; it does not
    depend on r.
    """

    __slots__ = ("subrack", "rho", "columns", "vertices")

    def __init__(self, subrack: AbelianSubrack, rho: InducedRep,
                 columns=None, vertices=None) -> None:
        self.subrack = subrack
        self.rho = rho
        if columns is None:
            columns = _diagonalize_columns(subrack, rho)
        self.columns = columns
        if vertices is None:
            vertices = tuple((j, s) for j in range(subrack.size)
                             for s in range(rho.degree))
        self.vertices = tuple(vertices)

    @property
    def size(self) -> int:
        return len(self.vertices)

    def vector(self, vertex) -> tuple:
        j, s = vertex
        return self.columns[j][0][s]

    def q(self, a, b) -> Cyclotomic:
        i, _ = a
        j, s = b
        return self.columns[j][1][i][s]

    def braiding_matrix(self) -> Matrix:
        return Matrix([[self.q(a, b) for b in self.vertices] for a in self.vertices])

    def restrict(self, vertices) -> "DiagonalSubspace":
        vertices = tuple(vertices)
        known = set(self.vertices)
        for v in vertices:
            if v not in known:
                raise ValueError("vertex %r is not in the subspace" % (v,))
        return DiagonalSubspace(self.subrack, self.rho, self.columns, vertices)

    def restrict_vectors(self, indices) -> "DiagonalSubspace":
        """Keep only the listed eigenvector indices, uniformly in every column."""
        indices = tuple(indices)
        return self.restrict((j, s) for j in range(self.subrack.size) for s in indices)

    def vertex_names(self) -> tuple:
        return tuple("t%d.v%d" % (j, s) for j, s in self.vertices)

    def __repr__(self) -> str:
        return "DiagonalSubspace(size=%d over %r)" % (self.size, self.subrack)


def _diagonalize_columns(subrack: AbelianSubrack, rho: InducedRep) -> tuple:
    """Eigendata per column of the conjugation table.

    When the distinct table entries commute pairwise (true for the structured
    subrack families, whose tables close inside the subrack) one shared
    eigenbasis serves every column, so an eigenvector index means the same
    vector in each column.  Otherwise each column is diagonalized separately.
    """
    cls = subrack.cls
    size = subrack.size
    perms = [[subrack.gamma(i, j) for j in range(size)] for i in range(size)]
    distinct = []
    for row in perms:
        for p in row:
            if p not in distinct:
                distinct.append(p)
    shared = all(a.commutes_with(b) for a, b in itertools.combinations(distinct, 2))
    if shared:
        family = [rho.evaluate(cls.normal_form(p)) for p in distinct]
        basis, table = simultaneous_diagonalize(family, [p.order() for p in distinct])
        basis = tuple(basis)
        index = {p: d for d, p in enumerate(distinct)}
        return tuple(
            (basis, tuple(tuple(table[index[perms[i][j]]]) for i in range(size)))
            for j in range(size))
    columns = []
    for j in range(size):
        family = [rho.evaluate(cls.normal_form(perms[i][j])) for i in range(size)]
        basis, table = simultaneous_diagonalize(
            family, [perms[i][j].order() for i in range(size)])
        columns.append((tuple(basis), tuple(tuple(row) for row in table)))
    return tuple(columns)


def diagonal_subspace(subrack: AbelianSubrack, rho: InducedRep) -> DiagonalSubspace:
    return DiagonalSubspace(subrack, rho)


class GeneralizedDynkinDiagram:
    """Vertex labels q_aa and edge labels q_ab q_ba (edges only where != 1)."""

    __slots__ = ("vertex_labels", "edges", "names")

    def __init__(self, vertex_labels, edges, names=None) -> None:
        self.vertex_labels = tuple(vertex_labels)
        self.edges = tuple(sorted(edges, key=lambda e: (e[0], e[1])))
        if names is None:
            names = tuple("v%d" % i for i in range(len(self.vertex_labels)))
        self.names = tuple(names)

    @property
    def size(self) -> int:
        return len(self.vertex_labels)

    def edge_label(self, a: int, b: int):
        if a > b:
            a, b = b, a
        for x, y, w in self.edges:
            if (x, y) == (a, b):
                return w
        return None

    def neighbors(self, a: int) -> tuple:
        out = []
        for x, y, _ in self.edges:
            if x == a:
                out.append(y)
            elif y == a:
                out.append(x)
        return tuple(sorted(out))

    def components(self) -> tuple:
        seen = set()
        out = []
        for start in range(self.size):
            if start in seen:
                continue
            comp = []
            stack = [start]
            seen.add(start)
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.neighbors(v):
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            out.append(tuple(sorted(comp)))
        return tuple(out)

    def degree_sequence(self) -> tuple:
        return tuple(sorted(len(self.neighbors(v)) for v in range(self.size)))

    def to_dot(self) -> str:
        lines = ["graph diagram {"]
        for i, label in enumerate(self.vertex_labels):
            lines.append('  %s [label="%s"];' % (self.names[i], label))
        for a, b, w in self.edges:
            lines.append('  %s -- %s [label="%s"];' % (self.names[a], self.names[b], w))
        lines.append("}")
        return "\n".join(lines)

    def __repr__(self) -> str:
        return "GeneralizedDynkinDiagram(size=%d, edges=%d)" % (self.size, len(self.edges))


def dynkin_diagram(subspace: DiagonalSubspace) -> GeneralizedDynkinDiagram:
    verts = subspace.vertices
    labels = [subspace.q(v, v) for v in verts]
    edges = []
    for a in range(len(verts)):
        for b in range(a + 1, len(verts)):
            w = subspace.q(verts[a], verts[b]) * subspace.q(verts[b], verts[a])
            if w != ONE:
                edges.append((a, b, w))
    return GeneralizedDynkinDiagram(labels, edges, subspace.vertex_names())
