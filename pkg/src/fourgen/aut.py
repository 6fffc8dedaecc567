"""Setwise stabilizers of point sets in PGL(n+1, q) (and PGammaL).

A projectivity is fixed by the images of a frame.  We take the
lexicographically first frame F inside the source set and run through
ordered (n+2)-tuples of the target set in general position; each tuple gives
one projectivity, which is kept when it maps source onto target.  The
search over tuples is pruned with projective invariants read off the
hyperplane sections of the two sets, and the last frame point is handled
in one vectorized step per ordered basis.  Sets without a frame fall back
to a basis inside the set, and every scaling of its images is tried.
"""

from __future__ import annotations

import numpy as np

from itertools import combinations, product

from .projspace import PointSet, Space, _row_reduce, inverse_gf, matmul_gf, rank_gf

SCALING_LIMIT = 200_000
HYPERPLANE_LIMIT = 400_000


class AutNotComputable(RuntimeError):
    pass


def find_frame(x: PointSet) -> list[int] | None:
    """Positions of the lexicographically first frame inside x (points taken in index order)."""
    space, f = x.space, x.field
    order = np.argsort(x.indices)
    c = x.coords[order]
    d = space.dim
    k = len(x)
    if k < d + 1:
        return None
    for combo in combinations(range(k), d + 1):
        if not _independent(f, c[list(combo[:d])]):
            continue
        w = matmul_gf(f, inverse_gf(f, c[list(combo[:d])].T), c[combo[d]][:, None])[:, 0]
        if (w != 0).all():
            return [int(order[t]) for t in combo]
    return None


def find_basis(x: PointSet) -> list[int] | None:
    """Positions of the lexicographically first n+1 independent points of x (index order)."""
    f = x.field
    order = np.argsort(x.indices)
    chosen = []
    for t in order:
        if _independent(f, x.coords[chosen + [int(t)]]):
            chosen.append(int(t))
            if len(chosen) == x.space.dim:
                return chosen
    return None


def _independent(f, rows):
    return rank_gf(f, rows) == len(rows)


def _frame_basis(space: Space, frame_coords):
    """Matrix whose columns are the first n+1 frame vectors scaled to sum to the last."""
    f = space.field
    d = space.dim
    a = frame_coords[:d].T
    lam = matmul_gf(f, inverse_gf(f, a), frame_coords[d][:, None])[:, 0]
    return f.vmul(a, lam[None, :])


def _invariants(space: Space, sets):
    """Point and pair invariant labels from hyperplane sections, shared across ``sets``."""
    if space.size > HYPERPLANE_LIMIT:
        return None
    f = space.field
    hyp = space.all_coords()
    out = []
    blocks = []
    for s in sets:
        acc = np.zeros((len(hyp), len(s)), dtype=np.int64)
        for i in range(space.dim):
            acc = f.vadd(acc, f.vmul(hyp[:, i][:, None], s.coords[:, i][None, :]))
        blocks.append(acc == 0)
    sizes = sorted(set(np.concatenate([b.sum(axis=1) for b in blocks]).tolist()))
    pair_feats = []
    for b in blocks:
        sz = b.sum(axis=1)
        feats = []
        for v in sizes:
            if v < 2:
                continue
            m = b[sz == v].astype(np.int64)
            feats.append(m.T @ m)
        if not feats:
            feats = [np.zeros((b.shape[1], b.shape[1]), dtype=np.int64)]
        pair_feats.append(np.stack(feats, axis=-1))
    # relabel feature vectors with small integers consistent across sets
    allrows = np.concatenate([p.reshape(-1, p.shape[-1]) for p in pair_feats])
    _, lab = np.unique(allrows, axis=0, return_inverse=True)
    lab = lab.reshape(-1)
    pos = 0
    for p in pair_feats:
        k = p.shape[0]
        out.append(lab[pos : pos + k * k].reshape(k, k))
        pos += k * k
    return out


def count_maps(src: PointSet, dst: PointSet, first_only: bool = False, collect: bool = False):
    """Number of projectivities g with g(src) = dst (or the first such matrix)."""
    space = src.space
    if dst.space != space:
        raise ValueError("different spaces")
    if len(src) != len(dst):
        return (None if first_only else 0) if not collect else []
    f = space.field
    d = space.dim
    fr = find_frame(src)
    basis_only = fr is None
    if basis_only:
        # no frame inside: fix a basis of src and run through all scalings of its images
        fr = find_basis(src)
        if fr is None:
            raise AutNotComputable("point set does not span the space")
        if (space.q - 1) ** (d - 1) > SCALING_LIMIT:
            raise AutNotComputable(f"no frame inside the set and {(space.q - 1) ** (d - 1)} scalings per basis")
        mus = np.array(list(_nonzero_tuples(space.q, d - 1)), dtype=np.int64).reshape(-1, d - 1)
        mus = np.concatenate([np.ones((len(mus), 1), dtype=np.int64), mus], axis=1)
    pool = dst.coords
    invs = _invariants(space, [src, dst])
    inv_s, inv_d = (invs[0][np.ix_(fr, fr)], invs[1]) if invs else (None, None)
    frame_coords = src.coords[fr]

    a = frame_coords[:d].T if basis_only else _frame_basis(space, frame_coords)
    cs = matmul_gf(f, inverse_gf(f, a), src.coords.T)  # frame coordinates of src points, (d, k)
    dst_codes = np.sort(space.index_of(dst.coords))
    npool = len(pool)
    found = []
    count = 0
    # depth-first over ordered bases drawn from the pool
    chosen = []

    def compatible(t):
        if inv_s is None:
            return True
        pos = len(chosen)
        if inv_d[t, t] != inv_s[pos, pos]:
            return False
        for r, u in enumerate(chosen):
            if inv_d[u, t] != inv_s[r, pos]:
                return False
        return True

    def extend(depth, echelon):
        nonlocal count
        if depth == d:
            y = pool[chosen].T  # columns are images of the basis
            yinv = inverse_gf(f, y)
            if basis_only:
                mu = mus
            else:
                w = matmul_gf(f, yinv, dst.coords.T)  # (d, k)
                cand = np.nonzero((w != 0).all(axis=0))[0]
                if inv_s is not None:
                    last = d
                    keep = []
                    for t in cand:
                        if inv_d[t, t] != inv_s[last, last]:
                            continue
                        if all(inv_d[u, t] == inv_s[r, last] for r, u in enumerate(chosen)):
                            keep.append(t)
                    cand = np.array(keep, dtype=np.int64)
                if len(cand) == 0:
                    return False
                mu = w[:, cand].T
                mu = f.vmul(mu, f.inv_table[mu[:, :1]])
            # image of src point P in y-coordinates is mu * cs[:, P]
            img = f.vmul(mu[:, :, None], cs[None, :, :])  # (m, d, k)
            img = matmul_gf_batch(f, y, img)
            codes = space.index_of(np.transpose(img, (0, 2, 1)))  # (m, k)
            pos = np.searchsorted(dst_codes, codes)
            pos = np.minimum(pos, len(dst_codes) - 1)
            ok = (dst_codes[pos] == codes).all(axis=1)
            hits = np.nonzero(ok)[0]
            if len(hits):
                count += len(hits)
                if first_only or collect:
                    for h in hits:
                        m = f.vmul(y, mu[h][None, :])
                        found.append(matmul_gf(f, m, inverse_gf(f, a)))
                    if first_only:
                        return True
            return False
        for t in range(npool):
            if t in chosen:
                continue
            if not compatible(t):
                continue
            red, piv = _row_reduce(f, np.concatenate([echelon, pool[t][None, :]]) if len(echelon) else pool[t][None, :])
            if len(piv) != depth + 1:
                continue
            chosen.append(t)
            stop = extend(depth + 1, red[: depth + 1])
            chosen.pop()
            if stop:
                return True
        return False

    extend(0, np.zeros((0, d), dtype=np.int64))
    if first_only:
        return found[0] if found else None
    if collect:
        return found
    return count


def matmul_gf_batch(f, y, img):
    """y @ img[m] for each m; y is (d, d), img is (m, d, k)."""
    if f.k == 1:
        return np.einsum("ij,mjk->mik", y, img) % f.p
    out = np.zeros_like(img)
    for l in range(y.shape[1]):
        out = f.vadd(out, f.vmul(y[:, l][None, :, None], img[:, l, :][:, None, :]))
    return out


def _nonzero_tuples(q, r):
    return product(range(1, q), repeat=r)


def aut_order(x: PointSet, semilinear: bool = False) -> int:
    """Order of the stabilizer of x in PGL(n+1, q), or PGammaL when ``semilinear``."""
    if not semilinear:
        return count_maps(x, x)
    total = 0
    for j in range(x.field.k):
        total += count_maps(frobenius_image(x, j), x)
    return total


def frobenius_image(x: PointSet, j: int) -> PointSet:
    f = x.field
    e = f.p**j
    return PointSet.from_vectors(x.space, f.vpow(x.coords, e) if j else x.coords)


def are_equivalent(a: PointSet, b: PointSet) -> bool:
    return count_maps(a, b, first_only=True) is not None


def automorphisms(x: PointSet) -> list[np.ndarray]:
    return count_maps(x, x, collect=True)
