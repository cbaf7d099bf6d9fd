"""Compiled kernels behind the linear-time pipeline.

Every kernel works on the int64 dart arrays of ``PlanarGraph.arrays()``.
Peeling and annotation also exist as plain Python in ``canonical``; the test
suite checks that both engines agree.
"""

from __future__ import annotations

import heapq

import numpy as np
from numba import njit

OK = 0
STUCK = 1
NOT_SIMPLE = 2
DUPLICATE = 3
FINAL_MISMATCH = 4

S, SW, W, NW, N, NE, E, SE = range(8)


@njit(cache=True)
def find_dart(u, v, head, cw_next, vdart):
    start = vdart[u]
    d = start
    while True:
        if head[d] == v:
            return d
        d = cw_next[d]
        if d == start:
            return -1


@njit(cache=True)
def _vertex_ok(z, v1, v2, alive, on_c, prot, removed, cdeg, cprev, cnext,
               vdart, cw_next, face_of, done, f_phi, outv, oute):
    if not alive[z] or not on_c[z] or prot[z] or z == v1 or z == v2:
        return False
    if removed[z] == 0 or cdeg[z] < 3:
        return False
    if cdeg[cprev[z]] < 3 or cdeg[cnext[z]] < 3:
        return False
    start = vdart[z]
    d = start
    while True:
        f = face_of[d]
        if not done[f] and f != f_phi and outv[f] != oute[f] + 1:
            return False
        d = cw_next[d]
        if d == start:
            return True


@njit(cache=True)
def _chain_scan(f, fdart, head, cw_next, on_c, cprev, prot, removed, cdeg,
                done, f_phi, outv, oute, buf, flag):
    # returns (k, i0, r, key); r == -1 marks an illegal chain face
    if done[f] or f == f_phi or oute[f] < 2 or outv[f] != oute[f] + 1:
        return 0, 0, -1, 0
    start = fdart[f]
    d = start
    k = 0
    while True:
        buf[k] = d
        t = head[d ^ 1]
        flag[k] = on_c[t] and cprev[t] == head[d]
        k += 1
        d = cw_next[d ^ 1]
        if d == start:
            break
    i0 = -1
    for i in range(k):
        p = i - 1 if i > 0 else k - 1
        if flag[i] and not flag[p]:
            if i0 >= 0:
                return k, 0, -1, 0
            i0 = i
    if i0 < 0:
        return k, 0, -1, 0
    r = 0
    while flag[(i0 + r) % k]:
        r += 1
    if r != oute[f]:
        return k, 0, -1, 0
    key = head.shape[0] + 1
    for j in range(r - 1):
        z = head[buf[(i0 + j) % k]]
        if prot[z] or removed[z] == 0 or cdeg[z] != 2:
            return k, 0, -1, 0
        if z < key:
            key = z
    return k, i0, r, key


@njit(cache=True)
def peel(n, head, cw_next, face_of, vdart, fdart, v1, v2, vn, f_out, f_phi, prot):
    """Reverse peeling; returns ``(status, seq, starts)``.

    ``seq[starts[j]:starts[j + 1]]`` is the j-th removed group (``vn`` first),
    chains listed left to right along the contour.
    """
    nd = head.shape[0]
    nf = fdart.shape[0]
    alive = np.ones(n, np.bool_)
    on_c = np.zeros(n, np.bool_)
    cprev = np.full(n, -1, np.int64)
    cnext = np.full(n, -1, np.int64)
    cdeg = np.zeros(n, np.int64)
    for d in range(nd):
        cdeg[head[d]] += 1
    removed = np.zeros(n, np.int64)
    outv = np.zeros(nf, np.int64)
    oute = np.zeros(nf, np.int64)
    done = np.zeros(nf, np.bool_)
    done[f_out] = True
    seq = np.empty(n, np.int64)
    starts = np.zeros(n + 1, np.int64)

    d = find_dart(v1, vn, head, cw_next, vdart)
    cur = v1
    on_c[v1] = True
    steps = 0
    while True:
        x = head[d]
        cnext[cur] = x
        cprev[x] = cur
        oute[face_of[d ^ 1]] += 1
        if on_c[x]:
            return NOT_SIMPLE, seq, starts[:1]
        on_c[x] = True
        cur = x
        if x == v2:
            break
        d = cw_next[d ^ 1]
        steps += 1
        if steps > n:
            return NOT_SIMPLE, seq, starts[:1]
    x = v1
    while x != -1:
        s0 = vdart[x]
        dd = s0
        while True:
            f = face_of[dd]
            if not done[f]:
                outv[f] += 1
            dd = cw_next[dd]
            if dd == s0:
                break
        x = cnext[x]

    nprot = 0
    for v in range(n):
        if prot[v]:
            nprot += 1
    remaining = n - 3 - nprot
    M = max(n, nf) + 1
    heap = [np.int64(0)]
    heap.pop()
    gone = np.empty(n, np.int64)
    frm = np.empty(nf, np.int64)
    path = np.empty(nd, np.int64)
    buf = np.empty(nd, np.int64)
    flag = np.zeros(nd, np.bool_)
    chg_st = np.zeros(nf, np.int64)
    chg_was = np.zeros(nf, np.bool_)
    chg = np.empty(nf, np.int64)
    pv_st = np.zeros(n, np.int64)
    pv = np.empty(n, np.int64)
    pf_st = np.zeros(nf, np.int64)
    pf = np.empty(nf, np.int64)
    touched = np.empty(2 * nd + 4, np.int64)
    stamp = 0
    ngroups = 0
    nseq = 0
    first = True

    while first or remaining > 0:
        ng = 0
        nfr = 0
        npath = 0
        if first:
            z = vn
            first = False
            ng = 1
            gone[0] = z
        else:
            if len(heap) == 0:
                return STUCK, seq, starts[: ngroups + 1]
            code = heapq.heappop(heap)
            key = code // (2 * M)
            typ = (code // M) % 2
            x = code % M
            if typ == 0:
                if not _vertex_ok(x, v1, v2, alive, on_c, prot, removed, cdeg, cprev, cnext,
                                  vdart, cw_next, face_of, done, f_phi, outv, oute):
                    continue
                z = x
                ng = 1
                gone[0] = z
            else:
                k, i0, r, ckey = _chain_scan(x, fdart, head, cw_next, on_c, cprev, prot,
                                             removed, cdeg, done, f_phi, outv, oute, buf, flag)
                if r < 0:
                    continue
                if ckey != key:
                    heapq.heappush(heap, np.int64(ckey * 2 * M + M + x))
                    continue
                for j in range(r - 1):
                    gone[r - 2 - j] = head[buf[(i0 + j) % k]]
                ng = r - 1
                frm[0] = x
                nfr = 1
                for j in range(k - r):
                    path[j] = buf[(i0 + r + j) % k]
                npath = k - r
        if ng == 1 and nfr == 0:
            z = gone[0]
            L = cprev[z]
            R = cnext[z]
            c = vdart[z]
            while head[c] != L:
                c = cw_next[c]
            while head[c] != R:
                frm[nfr] = face_of[c]
                nfr += 1
                e = cw_next[c ^ 1]
                while head[e] != z:
                    path[npath] = e
                    npath += 1
                    e = cw_next[e ^ 1]
                c = e ^ 1

        # record the group
        for j in range(ng):
            seq[nseq] = gone[j]
            nseq += 1
        ngroups += 1
        starts[ngroups] = nseq
        if ngroups > 1:
            remaining -= ng

        # absorb
        stamp += 1
        nchg = 0
        nt = 0
        for j in range(ng):
            alive[gone[j]] = False
            on_c[gone[j]] = False
        for j in range(ng):
            s0 = vdart[gone[j]]
            dd = s0
            while True:
                w = head[dd]
                if alive[w]:
                    cdeg[w] -= 1
                    removed[w] += 1
                    touched[nt] = w
                    nt += 1
                dd = cw_next[dd]
                if dd == s0:
                    break
        for j in range(nfr):
            done[frm[j]] = True
        prev = head[path[0] ^ 1]
        last = head[path[npath - 1]]
        for j in range(npath):
            dd = path[j]
            x = head[dd]
            cnext[prev] = x
            cprev[x] = prev
            prev = x
            tf = face_of[dd ^ 1]
            if chg_st[tf] != stamp:
                chg_st[tf] = stamp
                chg_was[tf] = outv[tf] > oute[tf] + 1
                chg[nchg] = tf
                nchg += 1
            oute[tf] += 1
            if x != last:
                if on_c[x]:
                    return DUPLICATE, seq, starts[: ngroups + 1]
                on_c[x] = True
                touched[nt] = x
                nt += 1
                s0 = vdart[x]
                d2 = s0
                while True:
                    f = face_of[d2]
                    if not done[f]:
                        if chg_st[f] != stamp:
                            chg_st[f] = stamp
                            chg_was[f] = outv[f] > oute[f] + 1
                            chg[nchg] = f
                            nchg += 1
                        outv[f] += 1
                    d2 = cw_next[d2]
                    if d2 == s0:
                        break
        touched[nt] = head[path[0] ^ 1]
        touched[nt + 1] = last
        nt += 2

        npv = 0
        npf = 0
        for j in range(nchg):
            f = chg[j]
            if done[f]:
                continue
            if pf_st[f] != stamp:
                pf_st[f] = stamp
                pf[npf] = f
                npf += 1
            if chg_was[f] and not (outv[f] > oute[f] + 1):
                s0 = fdart[f]
                d2 = s0
                while True:
                    y = head[d2]
                    if on_c[y] and pv_st[y] != stamp:
                        pv_st[y] = stamp
                        pv[npv] = y
                        npv += 1
                    d2 = cw_next[d2 ^ 1]
                    if d2 == s0:
                        break
        for j in range(nt):
            w = touched[j]
            if not alive[w]:
                continue
            if pv_st[w] != stamp:
                pv_st[w] = stamp
                pv[npv] = w
                npv += 1
            if on_c[w]:
                for y in (cprev[w], cnext[w]):
                    if y >= 0 and pv_st[y] != stamp:
                        pv_st[y] = stamp
                        pv[npv] = y
                        npv += 1
                if cdeg[w] == 2:
                    s0 = vdart[w]
                    d2 = s0
                    while True:
                        f = face_of[d2]
                        if not done[f] and pf_st[f] != stamp:
                            pf_st[f] = stamp
                            pf[npf] = f
                            npf += 1
                        d2 = cw_next[d2]
                        if d2 == s0:
                            break
        for j in range(npv):
            y = pv[j]
            if _vertex_ok(y, v1, v2, alive, on_c, prot, removed, cdeg, cprev, cnext,
                          vdart, cw_next, face_of, done, f_phi, outv, oute):
                heapq.heappush(heap, np.int64(y * 2 * M + y))
        for j in range(npf):
            f = pf[j]
            k, i0, r, ckey = _chain_scan(f, fdart, head, cw_next, on_c, cprev, prot,
                                         removed, cdeg, done, f_phi, outv, oute, buf, flag)
            if r >= 0:
                heapq.heappush(heap, np.int64(ckey * 2 * M + M + f))

    # the remaining contour interior must be exactly the protected vertices
    x = cnext[v1]
    cnt = 0
    while x != v2:
        if not prot[x]:
            return FINAL_MISMATCH, seq, starts[: ngroups + 1]
        seq[nseq] = x
        nseq += 1
        cnt += 1
        x = cnext[x]
        if cnt > n:
            return FINAL_MISMATCH, seq, starts[: ngroups + 1]
    if cnt != nprot:
        return FINAL_MISMATCH, seq, starts[: ngroups + 1]
    ngroups += 1
    starts[ngroups] = nseq
    return OK, seq[:nseq], starts[: ngroups + 1]


@njit(cache=True)
def annotate(n, head, cw_next, cw_prev, vdart, gseq, gstart, v1, v2, vn, flip):
    """Enumeration, orientation, parents and labels for groups
    ``gseq[gstart[k]:gstart[k + 1]]`` (first group ``(v1, v2)``)."""
    nd = head.shape[0]
    K = gstart.shape[0] - 1
    gi = np.zeros(n, np.int64)
    for k in range(K):
        for j in range(gstart[k], gstart[k + 1]):
            gi[gseq[j]] = k + 1
    idx = np.zeros(n, np.int64)
    s = 0
    for k in range(K):
        a = gstart[k]
        b = gstart[k + 1]
        size = b - a
        rev = False
        if k >= 1 and size > 1:
            hh = 0
            ii = 0
            for end in range(2):
                z = gseq[a] if end == 0 else gseq[b - 1]
                best = 0
                s0 = vdart[z]
                d = s0
                while True:
                    u = head[d]
                    if 0 < gi[u] <= k and idx[u] > best:
                        best = idx[u]
                    d = cw_next[d]
                    if d == s0:
                        break
                if end == 0:
                    hh = best
                else:
                    ii = best
            rev = (hh > ii) == flip
        for j in range(size):
            z = gseq[b - 1 - j] if rev else gseq[a + j]
            idx[z] = s + j + 1
        s += size

    out = np.zeros(nd, np.bool_)
    for e in range(nd // 2):
        fwd = idx[head[2 * e + 1]] < idx[head[2 * e]]
        out[2 * e] = fwd
        out[2 * e + 1] = not fwd
    dn = find_dart(vn, v1, head, cw_next, vdart)
    out[dn] = True
    out[dn ^ 1] = False
    parent = np.full(n, -1, np.int64)
    best = np.zeros(n, np.int64)
    first_out = np.full(n, -1, np.int64)
    last_out = np.full(n, -1, np.int64)
    for d in range(nd):
        if out[d]:
            h = head[d]
            t = head[d ^ 1]
            if d != dn and idx[t] > best[h]:
                best[h] = idx[t]
                parent[h] = d
            if not out[cw_prev[d]]:
                first_out[t] = d
            if not out[cw_next[d]]:
                last_out[t] = d

    lab = np.full(nd, -1, np.int64)
    for k in range(1, K):
        a = gstart[k]
        b = gstart[k + 1]
        if b - a == 1:
            z = gseq[a]
            lo = last_out[z]
            d0 = cw_next[lo] if lo >= 0 else vdart[z]
            if out[d0]:
                continue
            d = d0
            lastd = d0
            cnt = 0
            while not out[d] and cnt <= nd:
                lab[d] = S
                lastd = d
                d = cw_next[d]
                cnt += 1
            lab[d0] = SE
            lab[lastd] = SW
            d = d0
            while not out[d]:
                lab[d ^ 1] = (lab[d] + 4) % 8
                if d == lastd:
                    break
                d = cw_next[d]
        else:
            for end in range(2):
                z = gseq[a] if end == 0 else gseq[b - 1]
                tag = SW if end == 0 else SE
                s0 = vdart[z]
                d = s0
                while True:
                    if gi[head[d]] < k + 1 and not out[d]:
                        lab[d] = tag
                        lab[d ^ 1] = (tag + 4) % 8
                    d = cw_next[d]
                    if d == s0:
                        break
            for j in range(a, b - 1):
                d = find_dart(gseq[j], gseq[j + 1], head, cw_next, vdart)
                if d >= 0:
                    lab[d] = E
                    lab[d ^ 1] = W
    d = find_dart(v1, v2, head, cw_next, vdart)
    lab[d] = E
    lab[d ^ 1] = W
    d = find_dart(v1, vn, head, cw_next, vdart)
    lab[d] = S
    lab[d ^ 1] = N
    return idx, gi, out, parent, first_out, last_out, lab


@njit(cache=True)
def dual_groups(head, cw_next, face_of, vdart, gseq, gstart, out, last_out, f1, f2):
    """Groups of the dual ordering: ``(f1, f2)``, then the faces completed by
    ``V_K, ..., V_2``; a group with no faces yields an empty slice."""
    K = gstart.shape[0] - 1
    nd = head.shape[0]
    dseq = np.empty(nd // 2 + 2, np.int64)
    dstart = np.zeros(K + 1, np.int64)
    dseq[0] = f1
    dseq[1] = f2
    p = 2
    dstart[1] = 2
    j = 1
    for k in range(K - 1, 0, -1):
        a = gstart[k]
        b = gstart[k + 1]
        if b - a == 1:
            z = gseq[a]
            lo = last_out[z]
            d = cw_next[lo] if lo >= 0 else vdart[z]
            if not out[d]:
                d = cw_next[d]
                while not out[d] and p < dseq.shape[0]:
                    dseq[p] = face_of[d]
                    p += 1
                    d = cw_next[d]
        else:
            d = find_dart(gseq[a + 1], gseq[a], head, cw_next, vdart)
            if d >= 0:
                dseq[p] = face_of[d]
                p += 1
        j += 1
        dstart[j] = p
    return dseq[:p], dstart


@njit(cache=True)
def h_tags(n, head, cw_next, gi, lab, first_out, last_out, parent):
    m = head.shape[0] // 2
    tags = np.zeros(m, np.int64)
    for e in range(m):
        if gi[head[2 * e]] == gi[head[2 * e + 1]]:
            tags[e] = 1
    for v in range(n):
        d = first_out[v]
        if d < 0:
            continue
        nnw = -1
        nne = -1
        while True:
            x = lab[d]
            if x == NW:
                nnw = d
            elif x == NE and nne < 0:
                nne = d
            if d == last_out[v]:
                break
            d = cw_next[d]
        if nnw >= 0:
            tags[nnw >> 1] |= 2
        if nne >= 0:
            tags[nne >> 1] |= 4
    for v in range(n):
        d = parent[v]
        if d >= 0 and lab[d] == N:
            tags[d >> 1] |= 8
    return tags


@njit(cache=True)
def _find(p, x):
    while p[x] != x:
        p[x] = p[p[x]]
        x = p[x]
    return x


@njit(cache=True)
def forest_degree(nv, a, b):
    """``(acyclic, max_degree, components)`` of the edges ``a[i] - b[i]`` on ``nv`` vertices."""
    p = np.arange(nv)
    deg = np.zeros(nv, np.int64)
    comps = nv
    acyclic = True
    for i in range(a.shape[0]):
        deg[a[i]] += 1
        deg[b[i]] += 1
        ra = _find(p, a[i])
        rb = _find(p, b[i])
        if ra == rb:
            acyclic = False
        else:
            p[ra] = rb
            comps -= 1
    mx = 0
    for v in range(nv):
        if deg[v] > mx:
            mx = deg[v]
    return acyclic, mx, comps


@njit(cache=True)
def prim_two_buckets(n, head, cw_next, vdart, weight, start):
    """Returns the tree edge ids, or an array shorter than ``n - 1`` when the
    admissible edges do not connect the graph."""
    in_t = np.zeros(n, np.bool_)
    b0 = [np.int64(0)]
    b0.pop()
    b1 = [np.int64(0)]
    b1.pop()
    tree = np.empty(max(n - 1, 0), np.int64)
    nt = 0
    v = start
    while True:
        in_t[v] = True
        s0 = vdart[v]
        d = s0
        while True:
            e = d >> 1
            w = weight[e]
            if w >= 0 and not in_t[head[d]]:
                if w == 0:
                    heapq.heappush(b0, np.int64(e))
                else:
                    heapq.heappush(b1, np.int64(e))
            d = cw_next[d]
            if d == s0:
                break
        v = -1
        while nt < n - 1:
            if len(b0) > 0:
                e = heapq.heappop(b0)
            elif len(b1) > 0:
                e = heapq.heappop(b1)
            else:
                return tree[:nt]
            a = head[2 * e + 1]
            b = head[2 * e]
            if in_t[a] and in_t[b]:
                continue
            tree[nt] = e
            nt += 1
            v = b if in_t[a] else a
            break
        if v < 0:
            return tree[:nt]
