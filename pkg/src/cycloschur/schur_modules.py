"""Cyclic right modules inside H_{n,r} and the cyclotomic q-Schur side.

For each weight mu the stack realizes the cyclic right ideals M^mu (generated
by the q-symmetrizer times the Q-product) and tilde-M^mu (generated by the
q-symmetrizer alone) as explicit subspaces of H_{n,r}, with the bases

    B^mu      = { m_mu L_1^{p_1}..L_n^{p_n} T_y : 0 <= p_i < c_i^mu, y minimal },
    tilde-B^mu = { x_mu L_1^{k_1}..L_n^{k_n} T_y : 0 <= k_i < r,      y minimal }.

Linear algebra over the ambient coordinate space runs at random prime-field
specialization points; a rank accepted here always agreed at all points.
Identity-level facts (the cyclic generator killing its declared ideal, Schur
operator well-definedness) are checked exactly in the parameter ring.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .ariki_koike import AKElement, AKEngine
from .combinat import (
    MultiComposition,
    Perm,
    identity_perm,
    min_coset_reps,
    multicompositions,
    parabolic_generator_indices,
    perm_from_word,
    profile,
    reduced_word,
)
from .params import (
    DEFAULT_PRIME,
    CoordinateSolver,
    IncrementalSpan,
    ParamPoly,
    SpecializationPoint,
    draw_spec_points,
    mat_mul,
    mat_vec,
)
from .report import CheckRecord, passfail


@dataclass
class BlockModule:
    """One cyclic right module, with its ordered monomial basis."""

    mu: MultiComposition
    kind: str  # "quotient" or "tilde"
    cyclic: AKElement
    labels: list[tuple[tuple[int, ...], Perm]]
    elems: list[AKElement]

    @property
    def dim(self) -> int:
        return len(self.labels)


@dataclass
class BlockOperator:
    """A block-graded operator on the direct sum of cyclic modules.

    The operator sends the cyclic generator of a source block to
    (cyclic generator of the target block) * transport, and extends along
    the right action: the basis vector (cyclic * h) maps to (image * h).
    ``den`` scales the whole operator by 1/den; transports are stored
    denominator-cleared, so composition stays exact.
    """

    tag: str
    kind: str
    maps: dict[MultiComposition, tuple[MultiComposition, AKElement]]
    den: ParamPoly
    _images: dict = field(default_factory=dict)

    def image(self, stack: "ModuleStack", mu: MultiComposition) -> AKElement:
        """Denominator-cleared image of the cyclic generator of block mu."""
        got = self._images.get(mu)
        if got is None:
            target, transport = self.maps[mu]
            E = stack.engine
            if self.kind == "quotient":
                got = E.apply_m_mu(target, transport)
            else:
                got = E.apply_x_mu(target.flat, transport)
            self._images[mu] = got
        return got


def compose_ops(stack: ModuleStack, a: BlockOperator, b: BlockOperator,
                tag: str | None = None) -> BlockOperator:
    """The operator a after b, with exact transport products."""
    if a.kind != b.kind:
        raise ValueError("operators live on different module stacks")
    E = stack.engine
    maps = {}
    for mu, (lam, tb) in b.maps.items():
        if lam not in a.maps:
            continue
        kap, ta = a.maps[lam]
        transport = E.multiply(ta, tb)
        if not transport.is_zero():
            maps[mu] = (kap, transport)
    return BlockOperator(tag or f"({a.tag}.{b.tag})", a.kind, maps, a.den * b.den)


def subtract_ops(a: BlockOperator, b: BlockOperator, tag: str | None = None) -> BlockOperator:
    """a - b for operators with a common denominator and compatible targets."""
    if a.den != b.den:
        raise ValueError("denominators differ; clear them first")
    maps = dict(a.maps)
    for mu, (lam, tb) in b.maps.items():
        if mu in maps:
            kap, ta = maps[mu]
            if kap != lam:
                raise ValueError(f"incompatible targets on block {mu.flat}")
            diff = ta - tb
            if diff.is_zero():
                del maps[mu]
            else:
                maps[mu] = (kap, diff)
        else:
            maps[mu] = (lam, -tb)
    return BlockOperator(tag or f"({a.tag}-{b.tag})", a.kind, maps, a.den)


class ModuleStack:
    """All cyclic modules for a fixed (n, r, m-parts), plus specialization caches."""

    def __init__(self, n: int, r: int, mparts: tuple[int, ...],
                 engine: AKEngine | None = None, prime: int = DEFAULT_PRIME,
                 seed: int = 0, npoints: int = 3):
        self.engine = engine if engine is not None else AKEngine(n, r)
        if self.engine.n != n or self.engine.r != r:
            raise ValueError("engine shape mismatch")
        self.n, self.r = n, r
        self.mparts = tuple(mparts)
        self.m = sum(self.mparts)
        self.weights = multicompositions(n, self.mparts)
        self.points = draw_spec_points(self.engine.ring.names, prime=prime, seed=seed)[:npoints]
        self._blocks: dict = {}
        self._coords: dict = {}
        self._solvers: dict = {}
        self._amb_rt: dict = {}
        self._amb_rl: dict = {}
        self._amb_rl_inv: dict = {}
        self._block_rt: dict = {}

    # -- block construction --------------------------------------------

    def block(self, mu: MultiComposition, kind: str = "quotient") -> BlockModule:
        key = (kind, mu)
        blk = self._blocks.get(key)
        if blk is not None:
            return blk
        E = self.engine
        pr = profile(mu)
        reps = min_coset_reps(mu.flat)
        if kind == "quotient":
            cyclic = E.elem_m_mu(mu)
            ranges = [range(c) for c in pr.c]
        elif kind == "tilde":
            cyclic = E.elem_x_mu(mu.flat)
            ranges = [range(self.r) for _ in range(self.n)]
        else:
            raise ValueError(f"unknown kind {kind!r}")
        labels = [(p, y) for p in itertools.product(*ranges) for y in reps]
        elems = []
        for (p, y) in labels:
            h = E.elem_basis(p, y)
            if kind == "quotient":
                elems.append(E.apply_m_mu(mu, h))
            else:
                elems.append(E.apply_x_mu(mu.flat, h))
        blk = BlockModule(mu, kind, cyclic, labels, elems)
        self._blocks[key] = blk
        return blk

    def expected_dim(self, mu: MultiComposition, kind: str) -> int:
        pr = profile(mu)
        reps = len(min_coset_reps(mu.flat))
        if kind == "quotient":
            prod = 1
            for c in pr.c:
                prod *= c
            return reps * prod
        return reps * self.r ** self.n

    def block_coords(self, mu: MultiComposition, kind: str, pi: int) -> list[list[int]]:
        key = (kind, mu, pi)
        if key not in self._coords:
            blk = self.block(mu, kind)
            pt = self.points[pi]
            self._coords[key] = [self.engine.coords(v, pt) for v in blk.elems]
        return self._coords[key]

    def block_solver(self, mu: MultiComposition, kind: str, pi: int) -> CoordinateSolver:
        key = (kind, mu, pi)
        if key not in self._solvers:
            self._solvers[key] = CoordinateSolver(
                self.block_coords(mu, kind, pi), self.points[pi].prime)
        return self._solvers[key]

    def verify_block_bases(self, mu: MultiComposition) -> CheckRecord:
        """Basis sets have the predicted size and are independent at every point."""
        detail = {}
        ok = True
        for kind in ("quotient", "tilde"):
            blk = self.block(mu, kind)
            want = self.expected_dim(mu, kind)
            detail[f"{kind}_dim"] = want
            if blk.dim != want:
                ok = False
                continue
            for pi in range(len(self.points)):
                try:
                    self.block_solver(mu, kind, pi)
                except ValueError:
                    ok = False
                    detail[f"{kind}_dependent_at"] = pi
                    break
        return passfail(f"module-basis-{mu.flat}",
                        "monomial bases of the cyclic modules are free of the predicted rank",
                        ok, **detail)

    # -- ambient right multiplication matrices ---------------------------

    def ambient_right_T(self, g: int, pi: int) -> list[list[int]]:
        key = (g, pi)
        if key not in self._amb_rt:
            E, pt = self.engine, self.points[pi]
            imgs = []
            for (k, w) in E.basis_labels():
                v = E.elem_basis(k, w)
                v = E.rightmul_gen(g, v)
                imgs.append(E.coords(v, pt))
            self._amb_rt[key] = [list(row) for row in zip(*imgs)]
        return self._amb_rt[key]

    def ambient_right_L(self, j: int, pi: int, inv: bool = False) -> list[list[int]]:
        cache = self._amb_rl_inv if inv else self._amb_rl
        key = (j, pi)
        if key not in cache:
            E, pt = self.engine, self.points[pi]
            factor = E.elem_L_inv(j) if inv else E.elem_L(j)
            imgs = []
            for (k, w) in E.basis_labels():
                v = E.multiply(E.elem_basis(k, w), factor)
                imgs.append(E.coords(v, pt))
            cache[key] = [list(row) for row in zip(*imgs)]
        return cache[key]

    def block_right_T(self, mu: MultiComposition, kind: str, g: int, pi: int) -> list[list[int]]:
        key = (kind, mu, g, pi)
        if key not in self._block_rt:
            prime = self.points[pi].prime
            coords = self.block_coords(mu, kind, pi)
            solver = self.block_solver(mu, kind, pi)
            amb = self.ambient_right_T(g, pi)
            cols = [solver.solve(mat_vec(amb, v, prime)) for v in coords]
            self._block_rt[key] = [list(row) for row in zip(*cols)]
        return self._block_rt[key]

    # -- W = direct sum over weights --------------------------------------

    def total_dim(self, kind: str = "quotient") -> int:
        return sum(self.block(mu, kind).dim for mu in self.weights)

    def offsets(self, kind: str = "quotient") -> dict[MultiComposition, int]:
        out, acc = {}, 0
        for mu in self.weights:
            out[mu] = acc
            acc += self.block(mu, kind).dim
        return out

    def right_generator_matrix(self, g: int, pi: int, kind: str = "quotient") -> list[list[int]]:
        """Block-diagonal matrix of the right action of T_g on the direct sum."""
        dim = self.total_dim(kind)
        off = self.offsets(kind)
        out = [[0] * dim for _ in range(dim)]
        for mu in self.weights:
            blk = self.block(mu, kind)
            base = off[mu]
            m = self.block_right_T(mu, kind, g, pi)
            for a in range(blk.dim):
                row = out[base + a]
                for b in range(blk.dim):
                    row[base + b] = m[a][b]
        return out

    def right_element_matrix(self, h: AKElement, pi: int, kind: str = "quotient") -> list[list[int]]:
        """Matrix of the right action of an arbitrary element on the direct sum."""
        dim = self.total_dim(kind)
        off = self.offsets(kind)
        pt = self.points[pi]
        out = [[0] * dim for _ in range(dim)]
        for mu in self.weights:
            blk = self.block(mu, kind)
            solver = self.block_solver(mu, kind, pi)
            for b, elem in enumerate(blk.elems):
                img = self.engine.multiply(elem, h)
                col = solver.solve(self.engine.coords(img, pt))
                for a in range(blk.dim):
                    out[off[mu] + a][off[mu] + b] = col[a]
        return out

    # -- block operators ---------------------------------------------------

    def projection(self, mu: MultiComposition, kind: str = "quotient") -> BlockOperator:
        return BlockOperator(f"1_{mu.flat}", kind, {mu: (mu, self.engine.one())},
                             self.engine.ring.one)

    def operator_matrix(self, op: BlockOperator, pi: int) -> list[list[int]]:
        """Full matrix of a block operator on the direct sum, at one point.

        Basis-vector images follow the label tree: each basis monomial label
        extends a shorter one by a single generator, so one ambient
        matrix-vector product per label suffices.
        """
        kind = op.kind
        prime = self.points[pi].prime
        pt = self.points[pi]
        dim = self.total_dim(kind)
        off = self.offsets(kind)
        out = [[0] * dim for _ in range(dim)]
        den_inv = pow(op.den.evaluate(pt), -1, prime)
        for mu in self.weights:
            if mu not in op.maps:
                continue
            target, transport = op.maps[mu]
            if transport.is_zero():
                continue
            image = op.image(self, mu)
            blk = self.block(mu, kind)
            tsolver = self.block_solver(target, kind, pi)
            toff = off[target]
            amb_imgs: dict = {}
            root = ((0,) * self.n, identity_perm(self.n))
            amb_imgs[root] = self.engine.coords(image, pt)

            def img_for(label):
                got = amb_imgs.get(label)
                if got is not None:
                    return got
                p_exp, y = label
                word = reduced_word(y)
                if word:
                    prev_y = perm_from_word(self.n, word[:-1])
                    v = img_for((p_exp, prev_y))
                    got = mat_vec(self.ambient_right_T(word[-1], pi), v, prime)
                else:
                    j = max(i + 1 for i, e in enumerate(p_exp) if e)
                    pp = list(p_exp)
                    pp[j - 1] -= 1
                    v = img_for((tuple(pp), y))
                    got = mat_vec(self.ambient_right_L(j, pi), v, prime)
                amb_imgs[label] = got
                return got

            for b, label in enumerate(blk.labels):
                col = tsolver.solve(img_for(label))
                for a in range(len(col)):
                    out[toff + a][off[mu] + b] = col[a] * den_inv % prime
        return out

    # -- exact well-definedness of block operators -------------------------

    def operator_welldefined_exact(self, op: BlockOperator) -> CheckRecord:
        """The image of each cyclic generator is killed by the generator's annihilator.

        This is the exact form of the statement that the operator commutes
        with the whole right action on the cyclic module.
        """
        E = self.engine
        bad = []
        for mu, (target, transport) in op.maps.items():
            if transport.is_zero():
                continue
            image = op.image(self, mu)
            pr = profile(mu)
            for i in parabolic_generator_indices(mu.flat):
                if E.rightmul_T(i, image) != image.scale(E.q):
                    bad.append((mu.flat, "Ti", i))
            if op.kind == "quotient":
                image_op = E.op(image)
                for j in range(1, self.n + 1):
                    if not E.apply_L_bracket(j, pr.c[j - 1], image_op).is_zero():
                        bad.append((mu.flat, "bracket", j))
        return passfail(
            f"welldefined-{op.tag}",
            "operator image of each cyclic generator is annihilated by the cyclic relations",
            not bad, failures=bad if bad else None, blocks=len(op.maps))


# ---------------------------------------------------------------------------
# ideals and defining relations


def ideal_closure_rank(stack: ModuleStack, gens: list[AKElement], pi: int) -> int:
    """Rank of the right ideal generated by ``gens``, at one specialization."""
    E, pt = stack.engine, stack.points[pi]
    prime = pt.prime
    span = IncrementalSpan(prime)
    queue = []
    for g in gens:
        v = E.coords(g, pt)
        if span.add(v):
            queue.append(span.rows[-1])
    mats = [stack.ambient_right_T(g, pi) for g in range(stack.n)]
    while queue:
        v = queue.pop()
        for m in mats:
            w = mat_vec(m, v, prime)
            if span.add(w):
                queue.append(span.rows[-1])
    return span.rank


def ideal_generators(stack: ModuleStack, mu: MultiComposition, kind: str) -> list[AKElement]:
    E = stack.engine
    gens = [E.elem_T(i) - E.one().scale(E.q)
            for i in parabolic_generator_indices(mu.flat)]
    if kind == "quotient":
        pr = profile(mu)
        gens += [E.elem_L_bracket(j, pr.c[j - 1]) for j in range(1, stack.n + 1)]
    return gens


def check_defining_relations(stack: ModuleStack, mu: MultiComposition) -> list[CheckRecord]:
    """Codimension of the declared ideals matches the cyclic module dimensions."""
    E = stack.engine
    out = []
    dim_h = E.dim
    for kind, name in (("tilde", "tilde"), ("quotient", "full")):
        gens = ideal_generators(stack, mu, kind)
        ranks = [ideal_closure_rank(stack, gens, pi) for pi in range(len(stack.points))]
        want = stack.expected_dim(mu, kind)
        if len(set(ranks)) != 1:
            status = "inconclusive"
        else:
            status = "pass" if dim_h - ranks[0] == want else "fail"
        out.append(CheckRecord(
            f"defining-relations-{name}-{mu.flat}",
            "codimension of the declared relation ideal equals the cyclic module dimension",
            status, {"ideal_rank": ranks, "dim_H": dim_h, "module_dim": want}))

    # the cyclic generator kills its ideal generators, exactly
    bad = []
    m_mu = E.elem_m_mu(mu)
    x_mu = E.elem_x_mu(mu.flat)
    for i in parabolic_generator_indices(mu.flat):
        if E.rightmul_T(i, m_mu) != m_mu.scale(E.q):
            bad.append(("m", i))
        if E.rightmul_T(i, x_mu) != x_mu.scale(E.q):
            bad.append(("x", i))
    pr = profile(mu)
    m_op = E.op(m_mu)
    for j in range(1, stack.n + 1):
        if not E.apply_L_bracket(j, pr.c[j - 1], m_op).is_zero():
            bad.append(("bracket", j))
    out.append(passfail(
        f"cyclic-kills-ideal-{mu.flat}",
        "m_mu (T_i - q) = 0 for s_i in S_mu and m_mu L_j^{<c_j>} = 0, exactly",
        not bad, failures=bad if bad else None))
    return out


# ---------------------------------------------------------------------------
# Schur generators


def raising_transport(stack: ModuleStack, mu: MultiComposition, i: int):
    """Target weight and right multiplier for the raising move at direction i."""
    E = stack.engine
    flat = mu.flat
    if flat[i] == 0:  # mu_{i+1} = 0 on the flat composition
        return None
    pr = profile(mu)
    target_flat = list(flat)
    target_flat[i - 1] += 1
    target_flat[i] -= 1
    target = MultiComposition.from_flat(tuple(target_flat), stack.mparts)
    ni = pr.N[i - 1]
    h = E.one()
    for p in range(1, flat[i]):
        h = h + E.elem_TT(ni + 1, ni + p).scale(E.q_pow(p))
    return target, h.scale(E.q_pow(-flat[i] + 1))


def lowering_transport(stack: ModuleStack, mu: MultiComposition, i: int,
                       boundary_twist: bool):
    """Target weight and right multiplier for the lowering move at direction i.

    With ``boundary_twist`` the extra (-Q_k^{-1})(L_{N_i} - Q_k) factor is
    included when column i ends a block.
    """
    from .combinat import boundary_block

    E = stack.engine
    flat = mu.flat
    if flat[i - 1] == 0:
        return None
    pr = profile(mu)
    target_flat = list(flat)
    target_flat[i - 1] -= 1
    target_flat[i] += 1
    target = MultiComposition.from_flat(tuple(target_flat), stack.mparts)
    ni = pr.N[i - 1]
    h = E.one()
    for p in range(1, flat[i - 1]):
        h = h + E.elem_TTt(ni - 1, ni - p).scale(E.q_pow(p))
    scalar = E.q_pow(-flat[i - 1] + 1)
    k_bdry = boundary_block(i, stack.mparts)
    if boundary_twist and k_bdry is not None:
        h = E.apply_L(ni, h) - h.scale(E.Q[k_bdry])
        scalar = scalar * (-E.ring.gen(f"Q{k_bdry}", -1))
    return target, h.scale(scalar)


def schur_E(stack: ModuleStack, i: int) -> BlockOperator:
    """Raising generator: m_mu goes to a q-weighted sum over m_{mu+alpha_i} shifts."""
    maps = {}
    for mu in stack.weights:
        got = raising_transport(stack, mu, i)
        if got is not None:
            maps[mu] = got
    return BlockOperator(f"SE_{i}", "quotient", maps, stack.engine.ring.one)


def schur_F(stack: ModuleStack, i: int) -> BlockOperator:
    """Lowering generator, with the extra (L - Q) twist at block boundaries."""
    maps = {}
    for mu in stack.weights:
        got = lowering_transport(stack, mu, i, boundary_twist=True)
        if got is not None:
            maps[mu] = got
    return BlockOperator(f"SF_{i}", "quotient", maps, stack.engine.ring.one)


def schur_generators(stack: ModuleStack) -> dict[str, BlockOperator]:
    ops = {}
    for i in range(1, stack.m):
        ops[f"SE_{i}"] = schur_E(stack, i)
        ops[f"SF_{i}"] = schur_F(stack, i)
    for mu in stack.weights:
        ops[f"1_{mu.flat}"] = stack.projection(mu)
    return ops


# ---------------------------------------------------------------------------
# commutant and generated algebra dimensions


def hom_space_dim(stack: ModuleStack, mu: MultiComposition, lam: MultiComposition,
                  pi: int, kind: str = "quotient") -> int:
    """dim Hom over the algebra from block mu to block lam, at one point."""
    prime = stack.points[pi].prime
    d_mu = stack.block(mu, kind).dim
    d_lam = stack.block(lam, kind).dim
    rows = []
    for g in range(stack.n):
        rmu = stack.block_right_T(mu, kind, g, pi)
        rlam = stack.block_right_T(lam, kind, g, pi)
        for a in range(d_lam):
            for b in range(d_mu):
                row = [0] * (d_lam * d_mu)
                for c in range(d_mu):
                    row[a * d_mu + c] = (row[a * d_mu + c] + rmu[c][b]) % prime
                for c in range(d_lam):
                    row[c * d_mu + b] = (row[c * d_mu + b] - rlam[a][c]) % prime
                rows.append(row)
    from .params import PrimeMatrix

    return len(PrimeMatrix(rows, prime).nullspace())


def commutant_dim(stack: ModuleStack, kind: str = "quotient") -> tuple[int | None, list[int]]:
    """Dimension of the full commutant of the right action on the direct sum.

    Computed blockwise: endomorphisms commuting with the right action are
    exactly the block-map tuples that are module homomorphisms.  Returns
    (dim or None, per-point dims); None when the points disagree.
    """
    dims = []
    for pi in range(len(stack.points)):
        total = 0
        for mu in stack.weights:
            for lam in stack.weights:
                total += hom_space_dim(stack, mu, lam, pi, kind)
        dims.append(total)
    agreed = dims[0] if len(set(dims)) == 1 else None
    return agreed, dims


def generated_algebra_dim(matrices: list[list[list[int]]], prime: int,
                          cap: int | None = None) -> int:
    """Dimension of the unital-span closure of the given matrices under products."""
    if not matrices:
        return 0
    span = IncrementalSpan(prime)
    queue = []
    for m in matrices:
        flat = [x for row in m for x in row]
        if span.add(flat):
            queue.append(m)
    dim = len(matrices[0])
    while queue:
        m = queue.pop()
        for g in matrices:
            prod = mat_mul(g, m, prime)
            flat = [x for row in prod for x in row]
            if span.add(flat):
                queue.append(prod)
                if cap is not None and span.rank >= cap:
                    return span.rank
    return span.rank


def right_image_dim(stack: ModuleStack, pi: int, kind: str = "quotient") -> int:
    """Rank of the right regular representation of H on the direct sum."""
    E = stack.engine
    pt = stack.points[pi]
    prime = pt.prime
    span = IncrementalSpan(prime)
    for (k, w) in E.basis_labels():
        m = stack.right_element_matrix(E.elem_basis(k, w), pi, kind)
        span.add([x for row in m for x in row])
    return span.rank
