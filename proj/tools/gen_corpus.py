#!/usr/bin/env python3
"""Generates the permutation-group corpus under data/corpus/.

Each entry is a JSON file {name, degree, generators, expected, ...} with
generators given as lists of disjoint cycles on 0-based points.  Structural
facts (order, center order, named-subgroup normality) are verified here by
explicit enumeration before a file is written; the loader re-verifies them.

Constructions:
  * SL2(q), q in {3,5,7}, and GL2(3): natural action on the nonzero column
    vectors of F_q^2, points sorted lexicographically by (x0, x1).
  * SL2(9) (= 2.A6): same construction over F_9 = F_3[i] with i^2 = -1,
    field elements encoded as a + 3*b.
  * 2.A8 and 2.A7: the double cover of A8 realized inside the even Clifford
    algebra Cl0(8) over F_17 (sqrt(2) = 6, sqrt(-1) = 4).  A transposition
    (j k) lifts to (Gamma_j - Gamma_k)/sqrt(2); even products of these act on
    the gamma span exactly by the underlying permutation.  The half-spin
    projector (1 + Gamma_1...Gamma_8)/2 cuts an 8-dimensional invariant
    block, and the lifted generators act faithfully on a 240-vector orbit
    (-1 maps v to -v, so no vector orbit can kill the center).
  * remaining groups: textbook actions.

Run from the repository root:  python3 tools/gen_corpus.py
"""

import json
import os
import sys

import numpy as np

OUT_DIR = os.path.join(os.path.dirname(__file__), "..", "data", "corpus")

MOD = 17
SQRT2_INV = 3          # 6*6 = 2 mod 17, 6*3 = 1 mod 17
IMAG = 4               # 4*4 = -1 mod 17
HALF = 9               # 2*9 = 1 mod 17


# ---------------------------------------------------------------------------
# permutation helpers (image arrays as python lists / numpy uint8)
# ---------------------------------------------------------------------------

def compose(g, h):
    """(g o h)(x) = g(h(x))"""
    return [g[h[x]] for x in range(len(g))]


def perm_inverse(g):
    inv = [0] * len(g)
    for x, y in enumerate(g):
        inv[y] = x
    return inv


def cycles_of(perm):
    """Disjoint cycles, least point first per cycle, cycles sorted, fixed
    points omitted."""
    n = len(perm)
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = perm[x]
        out.append(cyc)
    return out


def enumerate_group(gens, limit=2_000_000):
    """BFS closure; returns list of image tuples (identity first)."""
    deg = len(gens[0])
    ident = tuple(range(deg))
    seen = {ident}
    frontier = [ident]
    order = [ident]
    garr = [list(g) for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in garr:
                y = tuple(g[x[i]] for i in range(deg))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    order.append(y)
                    if len(seen) > limit:
                        raise RuntimeError("enumeration limit hit")
        frontier = nxt
    return order


def group_order(gens):
    return len(enumerate_group(gens))


def center_elements(gens, elements=None):
    elems = elements if elements is not None else enumerate_group(gens)
    out = []
    for x in elems:
        lx = list(x)
        if all(compose(g, lx) == compose(lx, g) for g in gens):
            out.append(x)
    return out


def involution_count(elements):
    deg = len(elements[0])
    ident = tuple(range(deg))
    cnt = 0
    for x in elements:
        if x != ident and tuple(x[x[i]] for i in range(deg)) == ident:
            cnt += 1
    return cnt


# ---------------------------------------------------------------------------
# F_p linear algebra (numpy int64, entries reduced mod MOD)
# ---------------------------------------------------------------------------

def mm(*ms):
    acc = ms[0]
    for m in ms[1:]:
        acc = (acc @ m) % MOD
    return acc


def mat_pow(m, k):
    acc = np.eye(m.shape[0], dtype=np.int64)
    b = m.copy()
    while k:
        if k & 1:
            acc = mm(acc, b)
        b = mm(b, b)
        k >>= 1
    return acc


def mat_order(m, cap=200):
    ident = np.eye(m.shape[0], dtype=np.int64)
    acc = m.copy()
    for k in range(1, cap + 1):
        if np.array_equal(acc, ident):
            return k
        acc = mm(acc, m)
    raise RuntimeError("order cap hit")


def inv_mod(a, p=MOD):
    return pow(int(a) % p, p - 2, p)


def rref(mat):
    """Row-reduce over F_MOD; returns (reduced matrix, pivot columns)."""
    m = mat.copy() % MOD
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        piv = None
        for rr in range(r, rows):
            if m[rr, c] % MOD:
                piv = rr
                break
        if piv is None:
            continue
        m[[r, piv]] = m[[piv, r]]
        m[r] = (m[r] * inv_mod(m[r, c])) % MOD
        for rr in range(rows):
            if rr != r and m[rr, c]:
                m[rr] = (m[rr] - m[rr, c] * m[r]) % MOD
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def null_space(mat):
    """Basis of the right null space over F_MOD (list of vectors)."""
    rows, cols = mat.shape
    m, pivots = rref(mat)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = np.zeros(cols, dtype=np.int64)
        v[f] = 1
        for i, p in enumerate(pivots):
            v[p] = (-m[i, f]) % MOD
        basis.append(v % MOD)
    return basis


def solve_in_basis(basis_cols, rhs_cols):
    """Solve basis_cols @ X = rhs_cols where basis_cols (n x d) has full
    column rank; returns X (d x d2)."""
    n, d = basis_cols.shape
    aug = np.concatenate([basis_cols, rhs_cols], axis=1) % MOD
    m, pivots = rref(aug)
    assert pivots[:d] == list(range(d)), "basis not full rank"
    # consistency: no pivot in rhs part
    assert all(p < d for p in pivots), "rhs not in column space"
    return m[:d, d:] % MOD


# ---------------------------------------------------------------------------
# Clifford / spin construction for 2.A8
# ---------------------------------------------------------------------------

def build_gammas():
    i2 = np.eye(2, dtype=np.int64)
    sx = np.array([[0, 1], [1, 0]], dtype=np.int64)
    sy = np.array([[0, (-IMAG) % MOD], [IMAG, 0]], dtype=np.int64)
    sz = np.array([[1, 0], [0, MOD - 1]], dtype=np.int64)

    def kron(mats):
        acc = np.array([[1]], dtype=np.int64)
        for m in mats:
            acc = np.kron(acc, m) % MOD
        return acc

    gammas = []
    for j in range(1, 5):
        pre = [sz] * (j - 1)
        post = [i2] * (4 - j)
        gammas.append(kron(pre + [sx] + post))
        gammas.append(kron(pre + [sy] + post))
    ident = np.eye(16, dtype=np.int64)
    for a in range(8):
        assert np.array_equal(mm(gammas[a], gammas[a]), ident)
        for b in range(a + 1, 8):
            ab = mm(gammas[a], gammas[b])
            ba = mm(gammas[b], gammas[a])
            assert np.array_equal((ab + ba) % MOD, np.zeros((16, 16), dtype=np.int64))
    return gammas


def transposition_lift(gammas, j, k):
    return ((gammas[j] - gammas[k]) * SQRT2_INV) % MOD


def lift_of(gammas, transpositions):
    """Product of transposition lifts, leftmost applied last (so the list
    reads right-to-left as a permutation product)."""
    acc = np.eye(16, dtype=np.int64)
    for (j, k) in transpositions:
        acc = mm(acc, transposition_lift(gammas, j, k))
    return acc


def check_conjugation_action(gammas, g, perm):
    o = mat_order(g)
    ginv = mat_pow(g, o - 1)
    for a in range(8):
        lhs = mm(g, gammas[a], ginv)
        assert np.array_equal(lhs, gammas[perm[a]]), f"conjugation mismatch at {a}"


def build_2a8_perms():
    gammas = build_gammas()

    # A8 generators: (0 1 2) and (1 2 3 4 5 6 7), as right-to-left
    # transposition products.
    a_trans = [(0, 1), (1, 2)]
    b_trans = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)]
    a_perm = [1, 2, 0, 3, 4, 5, 6, 7]
    b_perm = [0, 2, 3, 4, 5, 6, 7, 1]
    # sanity: the images on 8 points generate A8
    assert group_order([a_perm, b_perm]) == 20160

    g1 = lift_of(gammas, a_trans)
    g2 = lift_of(gammas, b_trans)
    check_conjugation_action(gammas, g1, a_perm)
    check_conjugation_action(gammas, g2, b_perm)

    # half-spin projector
    omega = gammas[0]
    for g in gammas[1:]:
        omega = mm(omega, g)
    assert np.array_equal(mm(omega, omega), np.eye(16, dtype=np.int64))
    proj = ((np.eye(16, dtype=np.int64) + omega) * HALF) % MOD
    _, piv = rref(proj.copy())  # pivot columns of proj span its column space
    B = proj[:, piv] % MOD
    assert B.shape[1] == 8, f"half-spin dim {B.shape[1]}"

    def project(mat16):
        return solve_in_basis(B, mm(mat16, B))

    h1 = project(g1)
    h2 = project(g2)
    # homomorphism sanity
    assert np.array_equal(project(mm(g1, g2)), mm(h1, h2))

    # seed vectors: fixed space of the odd part of h2 (an order-7 element)
    o2 = mat_order(h2)
    assert o2 % 7 == 0
    h7 = mat_pow(h2, o2 // 7)
    assert mat_order(h7) == 7
    fix = null_space((h7 - np.eye(8, dtype=np.int64)) % MOD)
    assert len(fix) >= 1, "no fixed vectors of the 7-element"

    gens8 = [h1, h2]

    def orbit_of(v0):
        start = tuple(int(x) for x in v0)
        seen = {start}
        frontier = [np.array(start, dtype=np.int64)]
        while frontier:
            nxt = []
            for v in frontier:
                for g in gens8:
                    w = (g @ v) % MOD
                    t = tuple(int(x) for x in w)
                    if t not in seen:
                        seen.add(t)
                        nxt.append(w)
                        if len(seen) > 4000:
                            return None  # too big, not interesting
            frontier = nxt
        return seen

    best = None
    tried = set()
    for c0 in range(MOD):
        for c1 in range(MOD if len(fix) > 1 else 1):
            v = (c0 * fix[0] + (c1 * fix[1] if len(fix) > 1 else 0)) % MOD
            t = tuple(int(x) for x in v)
            if t == tuple([0] * 8) or t in tried:
                continue
            orb = orbit_of(v)
            if orb is None:
                tried.add(t)
                continue
            tried |= orb
            if len(orb) <= 240 and (best is None or len(orb) < len(best)):
                best = orb
        if best is not None and len(best) == 240:
            break
    assert best is not None, "no small orbit found"
    points = sorted(best)
    assert len(points) <= 240
    index = {v: i for i, v in enumerate(points)}

    def to_perm(mat):
        imgs = []
        for v in points:
            w = tuple(int(x) for x in (mat @ np.array(v, dtype=np.int64)) % MOD)
            imgs.append(index[w])
        return imgs

    p1 = to_perm(h1)
    p2 = to_perm(h2)

    # 2.A7: lifts of (0 1 2) and (0 1 2 3 4 5 6) acting on the same orbit
    c_trans = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]
    c_perm = [1, 2, 3, 4, 5, 6, 0, 7]
    assert group_order([a_perm, c_perm]) == 2520
    g3 = lift_of(gammas, c_trans)
    check_conjugation_action(gammas, g3, c_perm)
    h3 = project(g3)
    p3 = to_perm(h3)

    zmat = (MOD - 1) * np.eye(8, dtype=np.int64) % MOD
    pz = to_perm(zmat)

    return len(points), p1, p2, p3, pz


# ---------------------------------------------------------------------------
# SL2 / GL2 matrix actions
# ---------------------------------------------------------------------------

def f_p_vector_action(q, mats):
    """Action of 2x2 matrices over F_q (prime) on nonzero column vectors,
    points sorted lexicographically by (x0, x1)."""
    vecs = [(a, b) for a in range(q) for b in range(q) if (a, b) != (0, 0)]
    index = {v: i for i, v in enumerate(vecs)}
    perms = []
    for m in mats:
        img = []
        for (a, b) in vecs:
            w = ((m[0][0] * a + m[0][1] * b) % q, (m[1][0] * a + m[1][1] * b) % q)
            img.append(index[w])
        perms.append(img)
    return perms


def f9_vector_action(mats):
    """Same over F_9 = F_3[i]; elements are pairs (re, im), encoded re+3*im."""
    def fmul(x, y):
        return ((x[0] * y[0] - x[1] * y[1]) % 3, (x[0] * y[1] + x[1] * y[0]) % 3)

    def fadd(x, y):
        return ((x[0] + y[0]) % 3, (x[1] + y[1]) % 3)

    els = [(a, b) for b in range(3) for a in range(3)]
    els.sort(key=lambda e: e[0] + 3 * e[1])
    vecs = []
    for x in els:
        for y in els:
            if x != (0, 0) or y != (0, 0):
                vecs.append((x, y))
    vecs.sort(key=lambda v: (v[0][0] + 3 * v[0][1], v[1][0] + 3 * v[1][1]))
    index = {v: i for i, v in enumerate(vecs)}
    perms = []
    for m in mats:
        img = []
        for (x, y) in vecs:
            w0 = fadd(fmul(m[0][0], x), fmul(m[0][1], y))
            w1 = fadd(fmul(m[1][0], x), fmul(m[1][1], y))
            img.append(index[(w0, w1)])
        perms.append(img)
    return perms


# ---------------------------------------------------------------------------
# entry writing
# ---------------------------------------------------------------------------

def write_entry(fname, name, degree, gen_perms, expected, tags, source_note,
                named_subgroups=None):
    elems = enumerate_group(gen_perms)
    order = len(elems)
    cz = len(center_elements(gen_perms, elems))
    assert order == expected["order"], f"{name}: order {order} != {expected['order']}"
    assert cz == expected["center_order"], f"{name}: center {cz} != {expected['center_order']}"
    if "involutions" in expected:
        ic = involution_count(elems)
        assert ic == expected["involutions"], f"{name}: involutions {ic}"
    entry = {
        "name": name,
        "degree": degree,
        "generators": [cycles_of(g) for g in gen_perms],
        "expected": expected,
        "tags": tags,
        "source_note": source_note,
    }
    if named_subgroups:
        elem_set = {tuple(e) for e in elems}
        for sub_name, sub_gens in named_subgroups.items():
            for sg in sub_gens:
                assert tuple(sg) in elem_set, f"{name}.{sub_name}: generator not in group"
                # normality under the group generators
            sub_elems = {tuple(e) for e in enumerate_group(sub_gens)}
            for g in gen_perms:
                gi = perm_inverse(g)
                for s in sub_elems:
                    conj = tuple(compose(compose(g, list(s)), gi))
                    assert conj in sub_elems, f"{name}.{sub_name}: not normal"
        entry["named_subgroups"] = {
            k: [cycles_of(g) for g in v] for k, v in named_subgroups.items()
        }
    path = os.path.join(OUT_DIR, fname)
    with open(path, "w") as f:
        json.dump(entry, f, indent=1)
        f.write("\n")
    print(f"  {fname}: |G|={order} center={cz} degree={degree}")
    return fname


def main():
    os.makedirs(OUT_DIR, exist_ok=True)
    manifest = []

    # --- small classics ------------------------------------------------
    manifest.append(write_entry(
        "s3.json", "S3", 3,
        [[1, 2, 0], [1, 0, 2]],
        {"order": 6, "center_order": 1},
        ["regression"],
        "symmetric group on 3 points, generators (0 1 2) and (0 1)"))

    manifest.append(write_entry(
        "s4.json", "S4", 4,
        [[1, 2, 3, 0], [1, 0, 2, 3]],
        {"order": 24, "center_order": 1},
        ["regression"],
        "symmetric group on 4 points, generators (0 1 2 3) and (0 1)"))

    manifest.append(write_entry(
        "a4.json", "A4", 4,
        [[1, 2, 0, 3], [1, 0, 3, 2]],
        {"order": 12, "center_order": 1},
        ["regression"],
        "alternating group on 4 points, generators (0 1 2) and (0 1)(2 3)",
        named_subgroups={"V4": [[1, 0, 3, 2], [2, 3, 0, 1]]}))

    manifest.append(write_entry(
        "a5.json", "A5", 5,
        [[1, 2, 3, 4, 0], [1, 2, 0, 3, 4]],
        {"order": 60, "center_order": 1},
        ["regression"],
        "alternating group on 5 points, generators (0 1 2 3 4) and (0 1 2)"))

    manifest.append(write_entry(
        "c4.json", "C4", 4,
        [[1, 2, 3, 0]],
        {"order": 4, "center_order": 4},
        ["regression"],
        "cyclic group of order 4"))

    manifest.append(write_entry(
        "v4.json", "V4", 4,
        [[1, 0, 2, 3], [0, 1, 3, 2]],
        {"order": 4, "center_order": 4},
        ["regression"],
        "Klein four group as (0 1) and (2 3)"))

    # Q8 regular action; element order 1,-1,i,-i,j,-j,k,-k
    qi = [2, 3, 1, 0, 6, 7, 5, 4]
    qj = [4, 5, 7, 6, 1, 0, 2, 3]
    manifest.append(write_entry(
        "q8.json", "Q8", 8,
        [qi, qj],
        {"order": 8, "center_order": 2},
        ["regression"],
        "quaternion group, left-regular action on (1,-1,i,-i,j,-j,k,-k)"))

    manifest.append(write_entry(
        "d8.json", "D8", 4,
        [[1, 2, 3, 0], [0, 3, 2, 1]],
        {"order": 8, "center_order": 2},
        ["regression"],
        "dihedral group of order 8 on the corners of a square"))

    # --- matrix groups ---------------------------------------------------
    sl2_t = [[1, 1], [0, 1]]

    def sl2_s(q):
        return [[0, q - 1], [1, 0]]

    perms = f_p_vector_action(3, [sl2_t, sl2_s(3)])
    qperms = f_p_vector_action(3, [sl2_s(3), [[1, 1], [1, 2]]])
    manifest.append(write_entry(
        "sl2x3.json", "SL2x3", 8,
        perms,
        {"order": 24, "center_order": 2},
        ["regression"],
        "SL2(F3) on the 8 nonzero column vectors of F3^2 (lexicographic)",
        named_subgroups={"Q8": qperms}))

    perms = f_p_vector_action(3, [sl2_t, sl2_s(3), [[2, 0], [0, 1]]])
    manifest.append(write_entry(
        "gl2x3.json", "GL2x3", 8,
        perms,
        {"order": 48, "center_order": 2},
        ["paper-example"],
        "GL2(F3) on the 8 nonzero column vectors of F3^2 (lexicographic)",
        named_subgroups={"Q8": qperms}))

    perms = f_p_vector_action(5, [sl2_t, sl2_s(5)])
    manifest.append(write_entry(
        "sl2x5.json", "SL2x5", 24,
        perms,
        {"order": 120, "center_order": 2},
        ["regression"],
        "SL2(F5) on the 24 nonzero column vectors of F5^2 (lexicographic)"))

    perms = f_p_vector_action(7, [sl2_t, sl2_s(7)])
    manifest.append(write_entry(
        "sl2x7.json", "SL2x7", 48,
        perms,
        {"order": 336, "center_order": 2},
        ["regression"],
        "SL2(F7) on the 48 nonzero column vectors of F7^2 (lexicographic)"))

    one = (1, 0)
    zero = (0, 0)
    iota = (0, 1)
    neg1 = (2, 0)
    perms = f9_vector_action([
        [[one, one], [zero, one]],
        [[one, iota], [zero, one]],
        [[zero, neg1], [one, zero]],
    ])
    manifest.append(write_entry(
        "2a6.json", "2A6", 80,
        perms,
        {"order": 720, "center_order": 2},
        ["regression"],
        "SL2(F9) = 2.A6 on the 80 nonzero column vectors of F9^2; "
        "F9 = F3[i], i^2 = -1, elements encoded a+3b"))

    # --- spin covers -----------------------------------------------------
    print("building 2.A8 (half-spin over F17)...")
    deg, p1, p2, p3, pz = build_2a8_perms()
    manifest.append(write_entry(
        "2a8.json", "2A8", deg,
        [p1, p2],
        {"order": 40320, "center_order": 2},
        ["paper-example", "stress"],
        "double cover of A8: half-spin image in Cl0(8) over F17 acting on a "
        f"{deg}-vector orbit; generators lift (0 1 2) and (1 2 3 4 5 6 7)"))

    manifest.append(write_entry(
        "2a7.json", "2A7", deg,
        [p1, p3],
        {"order": 5040, "center_order": 2, "involutions": 1},
        ["regression", "stress"],
        "double cover of A7 inside the 2.A8 orbit action; generators lift "
        "(0 1 2) and (0 1 2 3 4 5 6)"))

    with open(os.path.join(OUT_DIR, "corpus.json"), "w") as f:
        json.dump({"entries": manifest}, f, indent=1)
        f.write("\n")
    print(f"wrote {len(manifest)} entries + manifest to {OUT_DIR}")


if __name__ == "__main__":
    sys.exit(main())
