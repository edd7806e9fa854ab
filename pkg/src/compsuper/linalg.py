"""Exact linear algebra over a Field: vectors are tuples of raw values.

Subspaces are identified by their reduced row echelon basis, which is
canonical, so subspace equality and deduplication reduce to tuple
comparison.
"""

from itertools import combinations, product


def zero_vector(field, n):
    return (field.zero,) * n


def vec_is_zero(field, v):
    z = field.zero
    return all(c == z for c in v)


def vec_add(field, u, v):
    add = field.add
    return tuple(add(a, b) for a, b in zip(u, v))


def vec_sub(field, u, v):
    sub = field.sub
    return tuple(sub(a, b) for a, b in zip(u, v))


def vec_scale(field, c, v):
    mul = field.mul
    return tuple(mul(c, a) for a in v)


def vec_neg(field, v):
    neg = field.neg
    return tuple(neg(a) for a in v)


def mat_vec(field, rows, v):
    """rows is m x n, v length n; returns length-m tuple."""
    add, mul, z = field.add, field.mul, field.zero
    out = []
    for row in rows:
        acc = z
        for a, b in zip(row, v):
            if a != z and b != z:
                acc = add(acc, mul(a, b))
        out.append(acc)
    return tuple(out)


def mat_mul(field, A, B):
    Bt = list(zip(*B))
    return tuple(tuple(_dot(field, row, col) for col in Bt) for row in A)


def _dot(field, u, v):
    add, mul, z = field.add, field.mul, field.zero
    acc = z
    for a, b in zip(u, v):
        if a != z and b != z:
            acc = add(acc, mul(a, b))
    return acc


def identity_matrix(field, n):
    z, o = field.zero, field.one
    return tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))


def rref(field, rows):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows = [list(r) for r in rows]
    z = field.zero
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots = []
    r = 0
    for col in range(n):
        pr = None
        for i in range(r, m):
            if rows[i][col] != z:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = field.inv(rows[r][col])
        if inv != field.one:
            rows[r] = [field.mul(inv, a) for a in rows[r]]
        for i in range(m):
            if i != r and rows[i][col] != z:
                c = rows[i][col]
                rows[i] = [field.sub(a, field.mul(c, b)) for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    return [tuple(row) for row in rows[:r]], pivots


def rank(field, rows):
    if not rows:
        return 0
    return len(rref(field, rows)[0])


def reduce_mod(field, rr, pivots, v):
    """Residue of v modulo the row space with RREF basis rr."""
    v = list(v)
    z = field.zero
    for row, p in zip(rr, pivots):
        c = v[p]
        if c != z:
            v = [field.sub(a, field.mul(c, b)) for a, b in zip(v, row)]
    return tuple(v)


def in_span(field, rr, pivots, v):
    return vec_is_zero(field, reduce_mod(field, rr, pivots, v))


def span_key(field, vectors):
    """Canonical hashable key for the span of the given vectors."""
    rr, _ = rref(field, vectors)
    return tuple(rr)


def coords_in_basis(field, basis, v):
    """Coefficients of v in the given (independent) basis, or None."""
    # Solve basis^T c = v by RREF of the augmented system.
    n = len(v)
    aug = [tuple(basis[j][i] for j in range(len(basis))) + (v[i],) for i in range(n)]
    rr, pivots = rref(field, aug)
    k = len(basis)
    sol = [field.zero] * k
    for row, p in zip(rr, pivots):
        if p == k:  # inconsistent
            return None
        sol[p] = row[k]
        for j in range(p + 1, k):
            if row[j] != field.zero:
                raise ValueError("basis vectors are dependent")
    return tuple(sol)


def solve(field, A, b):
    """One solution x of A x = b (A given as rows), or None."""
    m = len(A)
    n = len(A[0]) if m else 0
    aug = [tuple(A[i]) + (b[i],) for i in range(m)]
    rr, pivots = rref(field, aug)
    x = [field.zero] * n
    for row, p in zip(rr, pivots):
        if p == n:
            return None
        x[p] = row[n]
    # pivot variables only; free variables zero.  Verify (A may be overdetermined
    # with dependent rows already handled by RREF).
    if mat_vec(field, A, tuple(x)) != tuple(b):
        return None
    return tuple(x)


def nullspace(field, A):
    """Basis of {x : A x = 0}."""
    m = len(A)
    n = len(A[0]) if m else 0
    rr, pivots = rref(field, A) if m else ([], [])
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * n
        v[f] = field.one
        for row, p in zip(rr, pivots):
            v[p] = field.neg(row[f])
        basis.append(tuple(v))
    return basis


def det(field, M):
    """Determinant by Gaussian elimination over the field."""
    n = len(M)
    rows = [list(r) for r in M]
    z = field.zero
    d = field.one
    for col in range(n):
        pr = None
        for i in range(col, n):
            if rows[i][col] != z:
                pr = i
                break
        if pr is None:
            return z
        if pr != col:
            rows[col], rows[pr] = rows[pr], rows[col]
            d = field.neg(d)
        piv = rows[col][col]
        d = field.mul(d, piv)
        inv = field.inv(piv)
        for i in range(col + 1, n):
            if rows[i][col] != z:
                c = field.mul(rows[i][col], inv)
                rows[i] = [field.sub(a, field.mul(c, b)) for a, b in zip(rows[i], rows[col])]
    return d


def all_vectors(field, n):
    """All of F^n in lexicographic order of raw element codes."""
    return product(field.elements(), repeat=n)


def nonzero_vectors(field, n):
    z = field.zero
    for v in all_vectors(field, n):
        if any(c != z for c in v):
            yield v


def rref_profiles(field, k, d):
    """All k x d matrices in reduced row echelon form with rank k.

    Each k-dimensional subspace of F^d has exactly one such matrix as a
    basis, so this enumerates subspaces canonically.
    """
    z, o = field.zero, field.one
    nonpivot_elts = list(field.elements())
    for pivots in combinations(range(d), k):
        free_pos = []
        for i in range(k):
            for j in range(pivots[i] + 1, d):
                if j not in pivots:
                    free_pos.append((i, j))
        for vals in product(nonpivot_elts, repeat=len(free_pos)):
            M = [[z] * d for _ in range(k)]
            for i, p in enumerate(pivots):
                M[i][p] = o
            for (i, j), val in zip(free_pos, vals):
                M[i][j] = val
            yield tuple(tuple(row) for row in M)


def subspaces_of_span(field, basis, k):
    """Canonical bases of all k-dimensional subspaces of span(basis)."""
    d = len(basis)
    if k == 0:
        yield ()
        return
    for prof in rref_profiles(field, k, d):
        yield tuple(
            _combine(field, row, basis) for row in prof
        )


def _combine(field, coeffs, basis):
    n = len(basis[0])
    acc = [field.zero] * n
    for c, bv in zip(coeffs, basis):
        if c != field.zero:
            for i, a in enumerate(bv):
                if a != field.zero:
                    acc[i] = field.add(acc[i], field.mul(c, a))
    return tuple(acc)


def complementary_pairs(field, basis):
    """Unordered pairs (W1, W2) of nonzero subspaces with W1 + W2 = span(basis)
    and W1 ∩ W2 = 0, as bases in ambient coordinates.

    For each W1 in echelon form the complements are exactly the graphs of
    linear maps from the non-pivot coordinate space into W1, so they are
    constructed directly instead of filtered by rank.
    """
    d = len(basis)
    z = field.zero
    o = field.one
    for k in range(1, d // 2 + 1):
        for prof in rref_profiles(field, k, d):
            pivots = []
            for row in prof:
                pivots.append(next(j for j in range(d) if row[j] != z))
            nonpiv = [j for j in range(d) if j not in pivots]
            m = len(nonpiv)
            for graph in product(field.elements(), repeat=m * k):
                w2_prof = []
                for a, j in enumerate(nonpiv):
                    row = [z] * d
                    row[j] = o
                    for i in range(k):
                        c = graph[a * k + i]
                        if c != z:
                            for t in range(d):
                                if prof[i][t] != z:
                                    row[t] = field.add(row[t], field.mul(c, prof[i][t]))
                    w2_prof.append(tuple(row))
                if k == d - k:
                    rr, _ = rref(field, w2_prof)
                    if tuple(rr) < tuple(prof):
                        continue  # unordered: keep one of the two orders
                w1 = [_combine(field, row, basis) for row in prof]
                w2 = [_combine(field, row, basis) for row in w2_prof]
                yield w1, w2
