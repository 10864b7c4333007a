"""Bitmask kernels shared by the library and the exhaustive sweeps.

Subsets of Z_n are ints with bit q set iff q is a member. Letter b is the
rotation q -> q+1 mod n, letter a is given by an ``amap`` array. Everything
here is jitted with numba so the same code serves single queries and the
million-automaton sweeps.
"""

import numpy as np
from numba import njit

MAX_BFS_N = 24


@njit(cache=True)
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def gcd(x, y):
    while y:
        x, y = y, x % y
    return x


@njit(cache=True)
def rotl(mask, k, n):
    """Image of ``mask`` under b^k (every state shifted by +k)."""
    k %= n
    if k == 0:
        return mask
    full = (1 << n) - 1
    return ((mask << k) | (mask >> (n - k))) & full


@njit(cache=True)
def rotr(mask, k, n):
    """Preimage of ``mask`` under b^k."""
    return rotl(mask, n - (k % n), n)


@njit(cache=True)
def image_a(amap, mask, n):
    out = 0
    for q in range(n):
        if (mask >> q) & 1:
            out |= 1 << amap[q]
    return out


@njit(cache=True)
def preimage_a(amap, mask, n):
    out = 0
    for q in range(n):
        if (mask >> amap[q]) & 1:
            out |= 1 << q
    return out


@njit(cache=True)
def excl_dupl_a(amap, n):
    counts = np.zeros(n, np.int64)
    for q in range(n):
        counts[amap[q]] += 1
    excl = 0
    dupl = 0
    for q in range(n):
        if counts[q] == 0:
            excl |= 1 << q
        elif counts[q] > 1:
            dupl |= 1 << q
    return excl, dupl


@njit(cache=True)
def multiples_mask(d, n):
    """Mask of the subgroup dZ_n."""
    out = 0
    for q in range(0, n, d):
        out |= 1 << q
    return out


# ---------------------------------------------------------------------------
# forward power-set BFS


@njit(cache=True)
def reach_bfs(amap, n):
    """BFS from Q over subsets; a is explored before b.

    Returns ``(dist, parent, letter)``; dist is -1 for unreachable masks,
    letter is 0 for a and 1 for b, parent is -1 at the root.
    """
    size = 1 << n
    full = size - 1
    dist = np.full(size, -1, np.int16)
    parent = np.full(size, -1, np.int32)
    letter = np.full(size, -1, np.int8)
    queue = np.empty(size, np.int32)
    dist[full] = 0
    queue[0] = full
    head = 0
    tail = 1
    while head < tail:
        p = queue[head]
        head += 1
        d = dist[p] + 1
        r = image_a(amap, p, n)
        if dist[r] < 0:
            dist[r] = d
            parent[r] = p
            letter[r] = 0
            queue[tail] = r
            tail += 1
        r = rotl(p, 1, n)
        if dist[r] < 0:
            dist[r] = d
            parent[r] = p
            letter[r] = 1
            queue[tail] = r
            tail += 1
    return dist, parent, letter


@njit(cache=True)
def _dist_only(amap, n, img, dist, queue):
    """BFS distances with a caller-owned scratch space; returns #reached."""
    size = 1 << n
    full = size - 1
    img[0] = 0
    for m in range(1, size):
        low = m & -m
        q = 0
        while (low >> q) != 1:
            q += 1
        img[m] = img[m ^ low] | (1 << amap[q])
    for m in range(size):
        dist[m] = -1
    dist[full] = 0
    queue[0] = full
    head = 0
    tail = 1
    while head < tail:
        p = queue[head]
        head += 1
        d = dist[p] + 1
        r = img[p]
        if dist[r] < 0:
            dist[r] = d
            queue[tail] = r
            tail += 1
        r = ((p << 1) | (p >> (n - 1))) & full
        if dist[r] < 0:
            dist[r] = d
            queue[tail] = r
            tail += 1
    return tail


@njit(cache=True)
def _witnesses_ok(dist, n):
    """Pairwise union of maximum-size unreachable subsets is Q."""
    size = 1 << n
    full = size - 1
    best = 0
    for m in range(1, size):
        if dist[m] < 0:
            c = popcount(m)
            if c > best:
                best = c
    if best == 0:
        return True
    found = np.empty(size, np.int64)
    k = 0
    for m in range(1, size):
        if dist[m] < 0 and popcount(m) == best:
            found[k] = m
            k += 1
    for i in range(k):
        for j in range(i + 1, k):
            if (found[i] | found[j]) != full:
                return False
    return True


@njit(cache=True)
def classify_batch(amaps, n):
    """Per automaton: (completely reachable, Don violator, witness property).

    The Don flag is only meaningful when the first flag is set.
    """
    count = amaps.shape[0]
    size = 1 << n
    cr = np.zeros(count, np.bool_)
    viol = np.zeros(count, np.bool_)
    wit = np.ones(count, np.bool_)
    img = np.empty(size, np.int64)
    dist = np.empty(size, np.int16)
    queue = np.empty(size, np.int64)
    pc = np.empty(size, np.int64)
    for m in range(size):
        pc[m] = popcount(m)
    for k in range(count):
        reached = _dist_only(amaps[k], n, img, dist, queue)
        if reached == size - 1:
            cr[k] = True
            for m in range(1, size):
                if dist[m] > n * (n - pc[m]):
                    viol[k] = True
                    break
        else:
            wit[k] = _witnesses_ok(dist, n)
    return cr, viol, wit


# ---------------------------------------------------------------------------
# expandability


@njit(cache=True)
def expansion_table(amap, n):
    """Length of a shortest word expanding each mask, -1 if none.

    A shortest expanding word always ends with the collapsing a, so the
    search runs backwards from the sets that a expands in one letter,
    following b^-1 and injective a^-1 steps in reverse.
    """
    size = 1 << n
    excl, dupl = excl_dupl_a(amap, n)
    img_a = (size - 1) & ~excl
    e = np.full(size, -1, np.int16)
    queue = np.empty(size, np.int64)
    tail = 0
    for s in range(1, size - 1):
        if (s & img_a) == s and (s & dupl) != 0:
            e[s] = 1
            queue[tail] = s
            tail += 1
    head = 0
    while head < tail:
        t = queue[head]
        head += 1
        d = e[t] + 1
        # S with S (-) 1 == t
        s = rotl(t, 1, n)
        if e[s] < 0:
            e[s] = d
            queue[tail] = s
            tail += 1
        # S with a^-1(S) == t, S inside im(a), S free of the duplicate
        s = image_a(amap, t, n)
        if (s & dupl) == 0 and (s & img_a) == s and preimage_a(amap, s, n) == t:
            if e[s] < 0:
                e[s] = d
                queue[tail] = s
                tail += 1
    return e


# ---------------------------------------------------------------------------
# subgroup chain and the constructive upper bound


@njit(cache=True)
def orbit_mask(amap, n):
    """The forward a-orbit of 0, excluding 0 unless it recurs."""
    seen = 0
    q = amap[0]
    while not (seen >> q) & 1:
        seen |= 1 << q
        q = amap[q]
    return seen


@njit(cache=True)
def orbit_divisor(amap, n):
    o = orbit_mask(amap, n)
    g = n
    for q in range(n):
        if (o >> q) & 1:
            g = gcd(g, q)
    return g


@njit(cache=True)
def subgroup_chain(amap, n):
    """Divisors d_0 = n > d_1 > ... of the chain H_{i+1} = <H_i u a(H_i)>.

    Returns ``(divs, hmasks, umasks, complete)``; the arrays have one entry
    per level, ``umasks[i]`` is U_i = a(H_i) minus H_i.
    """
    divs = np.empty(32, np.int64)
    hmasks = np.empty(32, np.int64)
    umasks = np.empty(32, np.int64)
    d = n
    lev = 0
    while True:
        h = multiples_mask(d, n)
        img = image_a(amap, h, n)
        divs[lev] = d
        hmasks[lev] = h
        umasks[lev] = img & ~h
        g = d
        for q in range(n):
            if (img >> q) & 1:
                g = gcd(g, q)
        lev += 1
        if g == d:
            break
        d = g
    return divs[:lev].copy(), hmasks[:lev].copy(), umasks[:lev].copy(), d == 1


@njit(cache=True)
def m_t(hmasks, divs, s, n):
    """Chain indices (m(S), t(S)); (-1, -1) when no level meets S properly."""
    m = -1
    for i in range(hmasks.shape[0]):
        x = hmasks[i] & s
        if x != 0 and x != hmasks[i]:
            m = i
            break
    if m < 0:
        return -1, -1
    x = hmasks[m] & s
    t = 0
    for i in range(m - 1, -1, -1):
        if rotl(x, divs[i], n) == x:
            t = i
            break
    return m, t


@njit(cache=True)
def expand_step(amap, n, divs, hmasks, umasks, s):
    """One step of the constructive bound: returns (R, i, m, t).

    R is the full preimage of s under a b^i; i = -1 signals that no coset
    pair exists (precondition violated).
    """
    m, t = m_t(hmasks, divs, s, n)
    if m < 0:
        return 0, -1, m, t
    hm = hmasks[m]
    ht = hmasks[t]
    dt = divs[t]
    dm = divs[m]
    u_set = umasks[t]
    inside = hm & s
    outside = hm & ~s
    # H_t-cosets inside H_m are H_t + r with dm | r, 0 <= r < dt
    for r in range(0, dt, dm):
        c = rotl(ht, r, n)
        if (c & outside) != c:
            continue
        for u in range(n):
            if (u_set >> u) & 1:
                cu = rotl(c, u, n)
                if (cu & inside) == cu:
                    pre = rotr(s, r, n)
                    return preimage_a(amap, pre, n), r, m, t
    return 0, -1, m, t


@njit(cache=True)
def construct_blocks(amap, n, divs, hmasks, umasks, s, blocks):
    """Build a reaching word for s as blocks a b^i, written into ``blocks``.

    Returns the number of blocks (the word is blocks[k-1] ... blocks[0] in
    reading order), or a negative error code: -1 missing coset pair,
    -2 grow-or-descend dichotomy broken, -3 m did not decrease, -4 overflow.
    """
    full = (1 << n) - 1
    k = 0
    cur = s
    last_m = 1 << 30
    while cur != full:
        r, i, m, t = expand_step(amap, n, divs, hmasks, umasks, cur)
        if i < 0:
            return -1
        if k >= blocks.shape[0]:
            return -4
        blocks[k] = i
        k += 1
        if popcount(r) > popcount(cur):
            last_m = 1 << 30
        else:
            mr, _ = m_t(hmasks, divs, r, n)
            if not (0 <= mr <= t < m):
                return -2
            if mr >= last_m:
                return -3
            last_m = mr
        cur = r
    return k


@njit(cache=True)
def apply_blocks(amap, n, mask, blocks, k):
    """Apply the word blocks[k-1] ... blocks[0] (each a b^i) to mask."""
    for j in range(k - 1, -1, -1):
        mask = rotl(image_a(amap, mask, n), blocks[j], n)
    return mask


@njit(cache=True)
def standardized_sweep(amaps, n):
    """Exhaustive checks over standardized automata.

    Per automaton the returned int64 row holds:
    0 chain complete, 1 completely reachable, 2 |K|,
    3 max over S of (constructed length - (n(n-|S|) + n - 1)),
    4 constructed words that fail to reach their target,
    5 construction errors, 6 step length-bound failures,
    7 Don violations, 8 max constructed length, 9 witness property ok.
    """
    count = amaps.shape[0]
    size = 1 << n
    full = size - 1
    out = np.zeros((count, 10), np.int64)
    img = np.empty(size, np.int64)
    dist = np.empty(size, np.int16)
    queue = np.empty(size, np.int64)
    blocks = np.empty(4 * n * n + 64, np.int64)
    for k in range(count):
        amap = amaps[k]
        divs, hmasks, umasks, complete = subgroup_chain(amap, n)
        reached = _dist_only(amap, n, img, dist, queue)
        is_cr = reached == size - 1
        out[k, 0] = complete
        out[k, 1] = is_cr
        out[k, 2] = n // orbit_divisor(amap, n)
        out[k, 3] = -(1 << 30)
        out[k, 9] = 1
        if not is_cr:
            out[k, 9] = _witnesses_ok(dist, n)
        for s in range(1, size):
            c = popcount(s)
            if is_cr and dist[s] > n * (n - c):
                out[k, 7] += 1
            if not complete:
                continue
            if s != full:
                r, i, m, t = expand_step(amap, n, divs, hmasks, umasks, s)
                if i < 0 or i + 1 > divs[t] - divs[m] + 1:
                    out[k, 6] += 1
            nb = construct_blocks(amap, n, divs, hmasks, umasks, s, blocks)
            if nb < 0:
                out[k, 5] += 1
                continue
            length = 0
            for j in range(nb):
                length += 1 + blocks[j]
            if apply_blocks(amap, n, full, blocks, nb) != s:
                out[k, 4] += 1
            excess = length - (n * (n - c) + n - 1)
            if excess > out[k, 3]:
                out[k, 3] = excess
            if length > out[k, 8]:
                out[k, 8] = length
    return out


# ---------------------------------------------------------------------------
# candidate generation


@njit(cache=True)
def candidates_shard(n, v0, count):
    """All a-maps with image Z_n minus {0} and a(0) = v0, in lex order."""
    out = np.empty((count, n), np.int8)
    cnt = np.zeros(n, np.int64)
    cnt[v0] += 1
    vals = np.zeros(n, np.int64)
    vals[0] = v0
    # number of values in 1..n-1 not yet hit
    missing = n - 2
    pos = 1
    vals[1] = 0
    k = 0
    while pos >= 1:
        # advance the value at pos
        if vals[pos] != 0:
            v = vals[pos]
            cnt[v] -= 1
            if cnt[v] == 0:
                missing += 1
        v = vals[pos] + 1
        placed = False
        while v < n:
            newly = 1 if cnt[v] == 0 else 0
            # positions left after this one must cover what is still missing
            if missing - newly <= n - 1 - pos:
                cnt[v] += 1
                missing -= newly
                vals[pos] = v
                placed = True
                break
            v += 1
        if not placed:
            vals[pos] = 0
            pos -= 1
            continue
        if pos == n - 1:
            for q in range(n):
                out[k, q] = vals[q]
            k += 1
        else:
            pos += 1
            vals[pos] = 0
    return out[:k]


@njit(cache=True)
def _word_expands(amap, n, s, word, length):
    """Whether word[0:length] (0 = a, 1 = b) expands s."""
    r = s
    for j in range(length - 1, -1, -1):
        if word[j] == 0:
            r = preimage_a(amap, r, n)
        else:
            r = rotr(r, 1, n)
    if popcount(r) <= popcount(s):
        return False
    x = r
    for j in range(length):
        if word[j] == 0:
            x = image_a(amap, x, n)
        else:
            x = rotl(x, 1, n)
    return x == s


@njit(cache=True)
def orbit_lemma_sweep(amaps, n, only_k2):
    """Expandability statements over standardized automata.

    Per automaton the int64 row holds:
    0 completely reachable, 1 |O|, 2 K divisor,
    3 sets not a union of K-cosets that are not n-expandable,
    and, when K = 2Z_n (else -1):
    4 K+1 has no expanding a^s b^(t-1) a with s + t <= n (0/1),
    5 K not (n+1)-expandable (0/1),
    6 pairs p < q with Z_n minus {p, q} not (n-1)-expandable (|O| > 1),
    7 sets |S| > n/2 not (n-1)-expandable and off the extreme pattern
      (|O| = 1), 8 shortest reaching length of K.
    Rows with only_k2 set and K != 2Z_n are skipped (column 0 = -1).
    """
    count = amaps.shape[0]
    size = 1 << n
    full = size - 1
    out = np.full((count, 9), -1, np.int64)
    img = np.empty(size, np.int64)
    dist = np.empty(size, np.int16)
    queue = np.empty(size, np.int64)
    word = np.empty(2 * n + 2, np.int64)
    for k in range(count):
        amap = amaps[k]
        dk = orbit_divisor(amap, n)
        is_k2 = n % 2 == 0 and dk == 2
        if only_k2 and not is_k2:
            continue
        reached = _dist_only(amap, n, img, dist, queue)
        out[k, 0] = reached == size - 1
        o = orbit_mask(amap, n)
        out[k, 1] = popcount(o)
        out[k, 2] = dk
        if reached != size - 1:
            continue
        e = expansion_table(amap, n)
        bad = 0
        for s in range(1, full):
            if rotl(s, dk, n) != s and (e[s] < 0 or e[s] > n):
                bad += 1
        out[k, 3] = bad
        if not is_k2:
            continue
        kmask = multiples_mask(2, n)
        k1 = rotl(kmask, 1, n)
        found = 0
        for s_ in range(0, n + 1):
            for t in range(1, n - s_ + 1):
                length = 0
                for j in range(s_):
                    word[length] = 0
                    length += 1
                for j in range(t - 1):
                    word[length] = 1
                    length += 1
                word[length] = 0
                length += 1
                if _word_expands(amap, n, k1, word, length):
                    found = 1
                    break
            if found:
                break
        out[k, 4] = 1 - found
        out[k, 5] = 1 if (e[kmask] < 0 or e[kmask] > n + 1) else 0
        out[k, 8] = dist[kmask]
        if out[k, 1] > 1:
            bad = 0
            for p in range(n):
                for q in range(p + 1, n):
                    s = full & ~((1 << p) | (1 << q))
                    if e[s] < 0 or e[s] > n - 1:
                        bad += 1
            out[k, 6] = bad
        else:
            d = amap[0]
            bad = 0
            for s in range(1, full):
                c = popcount(s)
                if 2 * c <= n or (e[s] >= 0 and e[s] <= n - 1):
                    continue
                pattern = full
                for j in range(n - c):
                    pattern &= ~(1 << ((n - 1 - j * d) % n))
                if s != pattern:
                    bad += 1
            out[k, 7] = bad
    return out
