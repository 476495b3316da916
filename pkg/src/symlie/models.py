"""Statistical-model ideals: staged trees and (colored) Gaussian graphical models.

Staged trees: leaves are parametrized by root-to-leaf label products,
homogenized so each stage's outgoing labels sum to the extra variable z.
Gaussian models: covariances are adjugate entries of a structured symmetric
concentration matrix K over det(K); membership in the kernel is testable by
exact substitution because the generators are homogeneous.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .graded import IdealSpec, PreconditionError
from .groebner import elimination_ideal
from .poly import Polynomial, PolyRing
from .scalar import ONE, ZERO, Scalar

DEFAULT_COFACTOR_BOUND = 6
DEFAULT_ELIMINATION_BOUND = 12


# -- staged trees -------------------------------------------------------------


@dataclass(frozen=True)
class StagedTree:
    """Rooted tree with ordered children and a stage id per interior node.

    Child order matters twice: same-stage vertices share their labels by
    child position, and leaves are numbered x1..xn in depth-first order.
    """

    root: str
    children: tuple  # tuple of (parent, tuple_of_children), defining order
    stages: tuple  # tuple of (interior_node, stage_id)

    def __post_init__(self):
        kids = self.children_map()
        seen = {self.root}
        stack = [self.root]
        reachable = set()
        while stack:
            v = stack.pop()
            reachable.add(v)
            for c in kids.get(v, ()):
                if c in seen:
                    raise PreconditionError(f"node {c!r} has two parents or a cycle")
                seen.add(c)
                stack.append(c)
        all_nodes = set(kids) | {c for cs in kids.values() for c in cs} | {self.root}
        if reachable != all_nodes:
            raise PreconditionError("tree is not connected to the root")
        stage_of = dict(self.stages)
        degree_by_stage: Dict[str, int] = {}
        for v, cs in kids.items():
            s = stage_of.get(v, f"_{v}")
            d = degree_by_stage.setdefault(s, len(cs))
            if d != len(cs):
                raise PreconditionError(
                    f"stage {s!r} mixes out-degrees {d} and {len(cs)}"
                )

    def children_map(self) -> Dict[str, tuple]:
        return {parent: kids for parent, kids in self.children}

    def stage_of(self, node: str) -> str:
        return dict(self.stages).get(node, f"_{node}")

    def leaves(self) -> list:
        """Leaves in depth-first order of child listing."""
        kids = self.children_map()
        out = []

        def walk(v):
            if v not in kids:
                out.append(v)
                return
            for c in kids[v]:
                walk(c)

        walk(self.root)
        return out

    def interior_nodes(self) -> list:
        kids = self.children_map()
        out = []

        def walk(v):
            if v not in kids:
                return
            out.append(v)
            for c in kids[v]:
                walk(c)

        walk(self.root)
        return out

    def stage_order(self) -> list:
        """Stages by first appearance in the depth-first walk."""
        out = []
        for v in self.interior_nodes():
            s = self.stage_of(v)
            if s not in out:
                out.append(s)
        return out

    def theta_ring(self) -> PolyRing:
        """Ring of the stage labels th_<stage>_<slot> with z last."""
        kids = self.children_map()
        degree: Dict[str, int] = {}
        for v in self.interior_nodes():
            degree[self.stage_of(v)] = len(kids[v])
        names = []
        for s in self.stage_order():
            for slot in range(degree[s]):
                names.append(f"th_{s}_{slot}")
        names.append("z")
        return PolyRing(tuple(names))


def staged_tree_parametrization(tree: StagedTree) -> list:
    """Image of each leaf variable: z^(n - depth) times the path labels."""
    ring = tree.theta_ring()
    kids = tree.children_map()
    n = len(tree.leaves())
    z_index = ring.arity - 1
    images = []

    def walk(v, depth, exps):
        if v not in kids:
            m = list(exps)
            m[z_index] += n - depth
            images.append(Polynomial(ring, {tuple(m): ONE}))
            return
        stage = tree.stage_of(v)
        for slot, c in enumerate(kids[v]):
            m = list(exps)
            m[ring.index_of(f"th_{stage}_{slot}")] += 1
            walk(c, depth + 1, m)

    walk(tree.root, 0, [0] * ring.arity)
    return images


def stage_sum_relations(tree: StagedTree) -> list:
    """One relation per stage: sum of its outgoing labels minus z."""
    ring = tree.theta_ring()
    kids = tree.children_map()
    degree: Dict[str, int] = {}
    for v in tree.interior_nodes():
        degree[tree.stage_of(v)] = len(kids[v])
    out = []
    for s in tree.stage_order():
        p = ring.zero()
        for slot in range(degree[s]):
            p = p + ring.variable(ring.index_of(f"th_{s}_{slot}"))
        out.append(p - ring.variable(ring.arity - 1))
    return out


def _last_label_substitution(tree: StagedTree) -> list:
    """Images sending each stage's last label to z minus the earlier ones."""
    ring = tree.theta_ring()
    kids = tree.children_map()
    degree: Dict[str, int] = {}
    for v in tree.interior_nodes():
        degree[tree.stage_of(v)] = len(kids[v])
    images = [ring.variable(k) for k in range(ring.arity)]
    z = ring.variable(ring.arity - 1)
    for s in tree.stage_order():
        d = degree[s]
        last = ring.index_of(f"th_{s}_{d - 1}")
        rest = z
        for slot in range(d - 1):
            rest = rest - ring.variable(ring.index_of(f"th_{s}_{slot}"))
        images[last] = rest
    return images


def verify_staged_kernel(tree: StagedTree, gens: Sequence[Polynomial]) -> list:
    """Is each generator in the kernel of the tree's parametrization?

    Substitutes leaf images, eliminates the stage-sum relations by replacing
    each stage's last label with z minus the others, and tests for zero.
    """
    images = staged_tree_parametrization(tree)
    n = len(images)
    ring = tree.theta_ring()
    subst = _last_label_substitution(tree)
    reduced_images = [img.substitute(ring, subst) for img in images]
    out = []
    for g in gens:
        if g.ring.arity != n:
            raise PreconditionError(
                f"generator ring has arity {g.ring.arity}, tree has {n} leaves"
            )
        value = g.substitute(ring, reduced_images)
        out.append(not value)
    return out


def kernel_via_elimination(images: Sequence[Polynomial],
                           relations: Sequence[Polynomial] = (),
                           x_ring: Optional[PolyRing] = None,
                           max_variables: int = DEFAULT_ELIMINATION_BOUND) -> IdealSpec:
    """Kernel of x_r -> images[r] modulo relations, by naive elimination.

    Builds <x_r - image_r> + <relations> over parameters + x's, eliminates
    the parameters, and returns the generators in the x-ring.  Guarded by a
    variable-count bound: Buchberger elimination blows up quickly.
    """
    if not images:
        raise PreconditionError("need at least one image")
    param_ring = images[0].ring
    for p in list(images) + list(relations):
        if p.ring != param_ring:
            raise PreconditionError("images and relations must share one ring")
    n = len(images)
    if x_ring is None:
        x_ring = PolyRing(tuple(f"x{r+1}" for r in range(n)))
    if x_ring.arity != n:
        raise PreconditionError("x-ring arity must match the number of images")
    total = param_ring.arity + n
    if total > max_variables:
        raise PreconditionError(
            f"{total} variables is too large for naive elimination "
            f"(bound {max_variables})"
        )
    combined = PolyRing(param_ring.variables + x_ring.variables)
    np = param_ring.arity

    def lift_param(p: Polynomial) -> Polynomial:
        return Polynomial(combined, {m + (0,) * n: c for m, c in p.terms.items()})

    gens = []
    for r, img in enumerate(images):
        xr = [0] * combined.arity
        xr[np + r] = 1
        gens.append(Polynomial(combined, {tuple(xr): ONE}) - lift_param(img))
    gens.extend(lift_param(rel) for rel in relations if rel)
    ideal = IdealSpec(combined, tuple(gens), asserted_prime=False)
    eliminated = elimination_ideal(ideal, param_ring.variables)
    return IdealSpec(x_ring,
                     tuple(g.with_ring(x_ring) for g in eliminated.generators),
                     asserted_prime=False)


def staged_tree_kernel(tree: StagedTree,
                       x_ring: Optional[PolyRing] = None,
                       max_variables: int = DEFAULT_ELIMINATION_BOUND) -> IdealSpec:
    """Kernel of the staged-tree parametrization via elimination."""
    return kernel_via_elimination(
        staged_tree_parametrization(tree),
        stage_sum_relations(tree),
        x_ring=x_ring,
        max_variables=max_variables,
    )


# -- Gaussian graphical models -------------------------------------------------


def symmetric_pairs(n: int) -> list:
    """Index pairs (i, j), i <= j, in the order (1,1),(1,2),(2,2),(1,3),..."""
    return [(i, j) for j in range(1, n + 1) for i in range(1, j + 1)]


@dataclass(frozen=True)
class ColoredGraph:
    """Undirected graph on 1..n with optional vertex and edge colorings."""

    n: int
    edges: frozenset  # frozenset of frozenset({i, j})
    vertex_colors: tuple = ()  # ((vertex, color), ...)
    edge_colors: tuple = ()  # ((frozenset({i,j}), color), ...)

    def __post_init__(self):
        for e in self.edges:
            i, j = sorted(e)
            if not (1 <= i < j <= self.n):
                raise PreconditionError(f"invalid edge {sorted(e)}")
        for e, _ in self.edge_colors:
            if e not in self.edges:
                raise PreconditionError(f"colored non-edge {sorted(e)}")
        for v, _ in self.vertex_colors:
            if not 1 <= v <= self.n:
                raise PreconditionError(f"invalid vertex {v}")

    @staticmethod
    def of(n: int, edges, vertex_colors=None, edge_colors=None) -> "ColoredGraph":
        return ColoredGraph(
            n=n,
            edges=frozenset(frozenset(e) for e in edges),
            vertex_colors=tuple(sorted((vertex_colors or {}).items())),
            edge_colors=tuple(
                sorted(
                    ((frozenset(e), c) for e, c in (edge_colors or {}).items()),
                    key=lambda t: sorted(t[0]),
                )
            ),
        )

    def concentration_classes(self) -> Tuple[list, dict]:
        """Variable classes of K: names and the (i, j) -> name placement."""
        vcolor = dict(self.vertex_colors)
        ecolor = {e: c for e, c in self.edge_colors}
        rep_for_vcolor: Dict[str, int] = {}
        rep_for_ecolor: Dict[str, tuple] = {}
        placement: Dict[tuple, str] = {}
        names: List[str] = []

        def register(name: str):
            if name not in names:
                names.append(name)

        for i, j in symmetric_pairs(self.n):
            if i == j:
                color = vcolor.get(i)
                if color is None:
                    name = f"k{i}{i}"
                else:
                    rep = rep_for_vcolor.setdefault(color, i)
                    name = f"k{rep}{rep}"
                placement[(i, j)] = name
                register(name)
            elif frozenset({i, j}) in self.edges:
                color = ecolor.get(frozenset({i, j}))
                if color is None:
                    name = f"k{i}{j}"
                else:
                    rep = rep_for_ecolor.setdefault(color, (i, j))
                    name = f"k{rep[0]}{rep[1]}"
                placement[(i, j)] = name
                register(name)
        return names, placement


@dataclass(frozen=True)
class GaussianCofactorMap:
    """Adjugate entries and determinant of the symbolic concentration matrix."""

    graph: ColoredGraph
    ring: PolyRing  # the k-variable ring
    pairs: tuple  # sigma index pairs in canonical order
    adjugate: dict  # (i, j) with i <= j -> Polynomial
    det: Polynomial

    def concentration_matrix(self) -> list:
        """K as a dense n x n list of Polynomials."""
        n = self.graph.n
        _, placement = self.graph.concentration_classes()
        out = []
        for i in range(1, n + 1):
            row = []
            for j in range(1, n + 1):
                key = (min(i, j), max(i, j))
                name = placement.get(key)
                row.append(self.ring.variable(self.ring.index_of(name))
                           if name else self.ring.zero())
            out.append(row)
        return out

    def adjugate_entry(self, i: int, j: int) -> Polynomial:
        return self.adjugate[(min(i, j), max(i, j))]


def _symbolic_minor(matrix: list, rows: tuple, cols: tuple, ring: PolyRing,
                    cache: dict) -> Polynomial:
    """Determinant of the submatrix on rows x cols (Laplace, memoized)."""
    if not rows:
        return ring.one()
    key = (rows, cols)
    got = cache.get(key)
    if got is not None:
        return got
    r = rows[0]
    rest = rows[1:]
    total = ring.zero()
    for pos, c in enumerate(cols):
        entry = matrix[r][c]
        if not entry:
            continue
        sub = _symbolic_minor(matrix, rest, cols[:pos] + cols[pos + 1 :], ring, cache)
        term = entry * sub
        total = total + term if pos % 2 == 0 else total - term
    cache[key] = total
    return total


def gaussian_cofactor_map(graph: ColoredGraph,
                          max_vertices: int = DEFAULT_COFACTOR_BOUND) -> GaussianCofactorMap:
    """Symbolic adjugate of K and det(K) for a (colored) graph.

    Cofactor expansion is exponential in n, hence the vertex bound.
    """
    n = graph.n
    if n > max_vertices:
        raise PreconditionError(
            f"{n} vertices exceeds the cofactor bound {max_vertices}"
        )
    names, placement = graph.concentration_classes()
    ring = PolyRing(tuple(names))
    K = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            name = placement.get((min(i, j), max(i, j)))
            row.append(ring.variable(ring.index_of(name)) if name else ring.zero())
        K.append(row)
    cache: dict = {}
    all_idx = tuple(range(n))
    det = _symbolic_minor(K, all_idx, all_idx, ring, cache)
    adjugate = {}
    for i, j in symmetric_pairs(n):
        rows = tuple(r for r in all_idx if r != i - 1)
        cols = tuple(c for c in all_idx if c != j - 1)
        minor = _symbolic_minor(K, rows, cols, ring, cache)
        adjugate[(i, j)] = minor if (i + j) % 2 == 0 else -minor
    return GaussianCofactorMap(
        graph=graph, ring=ring, pairs=tuple(symmetric_pairs(n)), adjugate=adjugate, det=det
    )


def adjugate_identity_holds(cmap: GaussianCofactorMap) -> bool:
    """Exact check of K * adj(K) = det(K) * Id."""
    n = cmap.graph.n
    K = cmap.concentration_matrix()
    for i in range(n):
        for j in range(n):
            acc = cmap.ring.zero()
            for k in range(n):
                # adj is symmetric for symmetric K
                acc = acc + K[i][k] * cmap.adjugate_entry(k + 1, j + 1)
            expected = cmap.det if i == j else cmap.ring.zero()
            if acc != expected:
                return False
    return True


def verify_gaussian_kernel(graph: ColoredGraph, gens: Sequence[Polynomial],
                           cmap: Optional[GaussianCofactorMap] = None) -> list:
    """Is each homogeneous generator in the kernel of the covariance map?

    Substituting the adjugate entries for the sigmas clears the det(K)
    denominators exactly because the generators are homogeneous.
    """
    if cmap is None:
        cmap = gaussian_cofactor_map(graph)
    pairs = cmap.pairs
    expected_arity = len(pairs)
    images = [cmap.adjugate[(i, j)] for i, j in pairs]
    out = []
    for g in gens:
        if g.ring.arity != expected_arity:
            raise PreconditionError(
                f"generator ring has arity {g.ring.arity}; expected "
                f"{expected_arity} (pairs {pairs})"
            )
        if not g.is_homogeneous():
            raise PreconditionError(
                "kernel test requires homogeneous generators "
                "(denominator clearing)"
            )
        value = g.substitute(cmap.ring, images)
        out.append(not value)
    return out
