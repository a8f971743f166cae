"""Twisting by square-zero odd elements.

The twisted algebra is the positive-degree cohomology of the two-sided
complex g0 -> odd -> even with differential bracket-by-q: its odd part is
ker(gamma(q,-)) modulo the g0-orbit of q, its even part is the quotient of
the even space by gamma(q, odd).  Quotients and kernels are realized by
explicit echelonized rational bases so results are reproducible run to run.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebras import (
    AutomorphismAlgebra,
    SupertranslationAlgebra,
    derivations_deg0,
    is_square_zero,
)
from .linalg import Matrix, kernel_basis, rref, solve
from .multiplets import hdim

_F0 = Fraction(0)
_F1 = Fraction(1)


class NotSquareZeroError(ValueError):
    pass


@dataclass
class TwistResult:
    source: SupertranslationAlgebra
    q: list
    twisted: SupertranslationAlgebra
    odd_kernel_basis: list  # basis of ker(gamma(q,-)) in the odd space
    odd_image_basis: list  # basis of the g0-orbit of q inside the kernel
    even_image_basis: list  # basis of gamma(q, odd) in the even space
    provenance: dict = field(default_factory=dict)


def _echelon(vectors: list[list[Fraction]]) -> list[list[Fraction]]:
    """Row-reduced echelon representatives of the span (possibly empty)."""
    vectors = [v for v in vectors if any(v)]
    if not vectors:
        return []
    red, pivots = rref(Matrix.from_rows(vectors))
    return [list(red.data[i]) for i in range(len(pivots))]


def _quotient_data(ambient_dim: int, sub_basis: list[list[Fraction]]):
    """Representative coordinates for ambient/span(sub).

    Returns (rep_indices, project) where rep_indices picks the non-pivot
    coordinates and project maps an ambient vector to quotient coordinates.
    """
    if not sub_basis:
        reps = list(range(ambient_dim))

        def project_triv(vec):
            return [vec[i] for i in reps]

        return reps, project_triv
    red, pivots = rref(Matrix.from_rows(sub_basis))
    pivot_set = set(pivots)
    reps = [i for i in range(ambient_dim) if i not in pivot_set]

    def project(vec):
        out = list(vec)
        for r, p in enumerate(pivots):
            f = out[p]
            if f:
                row = red.data[r]
                for c in range(ambient_dim):
                    if row[c]:
                        out[c] -= f * row[c]
        return [out[i] for i in reps]

    return reps, project


def twist(
    alg: SupertranslationAlgebra,
    q,
    g0: AutomorphismAlgebra | None = None,
) -> TwistResult:
    """Twisted supertranslation algebra for a square-zero odd element."""
    qv = [Fraction(x) for x in q]
    if not is_square_zero(alg, qv):
        raise NotSquareZeroError("the chosen odd element does not square to zero")
    if g0 is None:
        g0 = derivations_deg0(alg)
    k, d = alg.k, alg.d
    # gamma(q, -): odd -> even
    mq = Matrix.from_rows(
        [
            [
                sum(alg.gamma[a][b][mu] * qv[a] for a in range(k))
                for b in range(k)
            ]
            for mu in range(d)
        ]
    )
    ker = kernel_basis(mq)
    orbit = _echelon([list(_apply(g0.rho1(i), qv)) for i in range(g0.dim)])
    even_image = _echelon(
        [
            [sum(alg.gamma[a][b][mu] * qv[a] for a in range(k)) for mu in range(d)]
            for b in range(k)
        ]
    )
    # sanity: the orbit lies inside the kernel (consequence of q^2 = 0)
    ker_span = _echelon([list(v) for v in ker])
    _, project_ker = _quotient_data(k, ker_span)
    for v in orbit:
        if any(x for x in project_ker(v)):
            raise AssertionError("derivation orbit of q escapes the kernel")
    # odd part of the twist: kernel modulo orbit, in kernel coordinates
    orbit_in_ker = []
    if ker and orbit:
        kt = Matrix.from_rows([[ker[i][j] for i in range(len(ker))] for j in range(k)])
        for v in orbit:
            coords = solve(kt, v)
            if coords is None:
                raise AssertionError("orbit vector not in kernel span")
            orbit_in_ker.append(coords)
    reps_odd, project_odd = _quotient_data(len(ker), _echelon(orbit_in_ker))
    reps_even, project_even = _quotient_data(d, even_image)
    k_new = len(reps_odd)
    d_new = len(reps_even)
    # twisted bracket on representatives
    gamma_new = [[[_F0] * d_new for _ in range(k_new)] for _ in range(k_new)]
    rep_vectors = [ker[reps_odd[i]] for i in range(k_new)]
    for i in range(k_new):
        for j in range(k_new):
            val = alg.bracket(rep_vectors[i], rep_vectors[j])
            proj = project_even(val)
            for mu in range(d_new):
                gamma_new[i][j][mu] = proj[mu]
    twisted = SupertranslationAlgebra(
        f"{alg.name} twisted", k_new, d_new, gamma_new
    )
    return TwistResult(
        source=alg,
        q=qv,
        twisted=twisted,
        odd_kernel_basis=ker,
        odd_image_basis=orbit,
        even_image_basis=even_image,
        provenance={
            "basis_convention": "echelon representatives with pivot normalization",
            "odd_representatives": [list(map(str, v)) for v in rep_vectors],
        },
    )


def _apply(mat, vec):
    n = len(vec)
    return [sum(mat[r][c] * vec[c] for c in range(n)) for r in range(len(mat))]


# ---------------------------------------------------------------------------
# Catalog twisting vectors
# ---------------------------------------------------------------------------


def catalog_twist_vector(alg: SupertranslationAlgebra, name: str) -> list[Fraction]:
    """Named square-zero elements for the standard algebras.

    'holomorphic' is the minimal rank-one element built from highest-weight
    vectors; 'maximal' picks a point on a stratum of maximal dimension (the
    Kapustin-type combination in four dimensions, rank-two combinations in
    six/ten/eleven).  All vectors are verified square-zero on return.
    """
    label = alg.name
    k = alg.k
    q = [_F0] * k

    def set_one(idx):
        q[idx] = _F1

    if name in ("holomorphic", "minimal"):
        if label.startswith("3d"):
            # u (x) v with v the first hyperbolic basis vector: flat index i*2+a
            set_one(0)
        elif label.startswith("4d"):
            set_one(0)  # chiral highest weight: first chiral slot
        elif label.startswith("6d"):
            set_one(0)  # u (x) first symplectic basis vector
        elif label.startswith("10d"):
            set_one(0)  # scalar component of the even exterior algebra
        else:
            raise ValueError(f"no holomorphic twist vector cataloged for {label}")
    elif name in ("kapustin", "maximal", "nonminimal", "kapustin_witten"):
        if label.startswith("4d N=2") or (label.startswith("4d") and name == "kapustin"):
            # rank-one chiral plus a compatible antichiral: maximal stratum
            set_one(0)  # e_+ (x) v1  (chiral block, copy 0)
            n = alg.k // 4
            set_one(2 * n + 2 + 0)  # e_- (x) v2^dual (antichiral block, copy 1)
        elif label.startswith("4d N=4") and name in ("kapustin_witten", "maximal"):
            n = 4
            set_one(0)  # e_+ (x) v1
            set_one(2 + 1)  # f_+ (x) v2
            set_one(2 * n + 2 * 2)  # e_- (x) v3^dual
            set_one(2 * n + 2 * 3 + 1)  # f_- (x) v4^dual
        elif label.startswith("6d N=(2,0)"):
            set_one(0)  # u (x) v1
            set_one(2 * 4 + 1)  # second spinor direction, omega-orthogonal copy
        elif label.startswith("10d N=(2,0)"):
            set_one(0)  # scalar spinor (x) first hyperbolic vector
            # a generic second spinor in the other isotropic copy, orthogonal to the first
            q[16 + 1] = _F1
        elif label.startswith("11d"):
            set_one(0)
        elif label.startswith("3d"):
            set_one(0)
        else:
            raise ValueError(f"no maximal twist vector cataloged for {label}")
    else:
        raise ValueError(f"unknown twist name {name!r}")
    if not is_square_zero(alg, q):
        raise AssertionError(f"catalog vector {name} for {label} is not square-zero")
    return q


@dataclass
class TwistPipelineReport:
    result: TwistResult
    hdim_source: int
    hdim_twisted: int
    analyses: dict

    @property
    def hdim_invariant(self) -> bool:
        return self.hdim_source == self.hdim_twisted


def twist_pipeline(
    alg: SupertranslationAlgebra,
    q,
    targets: tuple = (),
    g0: AutomorphismAlgebra | None = None,
) -> TwistPipelineReport:
    """Twist and re-run the requested analyses on the twisted algebra.

    The homological-dimension invariance check always runs.  `targets` may
    contain 'conf', 'kaehler', 'canonical', 'variety', 'conformal_type'.
    """
    from . import multiplets
    from .algebras import check_conformal_type
    from .groebner import hilbert_series, ideal_gb

    result = twist(alg, q, g0)
    analyses: dict = {}
    for target in targets:
        if target in ("conf", "kaehler", "canonical"):
            mod = multiplets.multiplet_module(result.twisted, target)
            betti = mod.betti()
            analyses[target] = {
                "betti": betti,
                "table": multiplets.component_fields(mod, betti),
            }
        elif target == "variety":
            gb = ideal_gb(result.twisted.ring(), result.twisted.quadrics())
            analyses[target] = {"hilbert": hilbert_series(gb), "gb_size": len(gb)}
        elif target == "conformal_type":
            analyses[target] = check_conformal_type(result.twisted)
        else:
            raise ValueError(f"unknown twist analysis {target!r}")
    return TwistPipelineReport(
        result=result,
        hdim_source=hdim(alg),
        hdim_twisted=hdim(result.twisted),
        analyses=analyses,
    )
