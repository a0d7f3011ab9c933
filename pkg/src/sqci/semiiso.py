"""Semi-isomorphism of finite complexes of join groups.

A semi-isomorphism is a combinatorial isomorphism of the underlying
complexes (respecting multi-simplex multiplicity) that preserves the
quasi-isometric type of every assigned group and the coordinate
equality patterns along faces, up to a coordinate flip chosen
consistently on each chain-component.  Exact ranks are NOT preserved
unless strict mode is requested.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations


@dataclass
class SemiIso:
    vertex_bijection: dict
    simplex_map: dict        # sid (jc1) -> sid (jc2)
    flip_assignment: dict    # sid (jc1) -> bool


class ChainDisagreement(AssertionError):
    """Face-level and chain-level evaluations of the pattern condition
    disagreed; this is a hard error for investigation."""


def _vertex_invariant(jc, vid, adj):
    lab = jc.vertex_label[vid]
    nb_types = sorted(jc.vertex_label[w].qi_type for w in adj[vid])
    return (len(adj[vid]), lab.qi_type, tuple(nb_types))


def _adjacency(jc):
    adj = {v: set() for v in jc.vertex_ids}
    for s in jc.simplices:
        if s.dim == 1:
            a, b = sorted(s.verts)
            adj[a].add(b)
            adj[b].add(a)
    return adj


def _face_of_at(jc, s, fverts):
    for fid in jc.face_map[s.sid]:
        if jc.simplex(fid).verts == fverts:
            return jc.simplex(fid)
    return None


def _try_flips(jc1, jc2, smap, strict):
    """Propagate per-chain-component coordinate flips; None if impossible."""
    align_val = {"aligned": 0, "flipped": 1}
    # collect constraints: edges (s, f, parity), node checks depend on flip(s)
    cons = []
    for s in jc1.simplices:
        for fid in jc1.face_map[s.sid]:
            f = jc1.simplex(fid)
            s2 = jc2.simplex(smap[s.sid])
            f2 = jc2.simplex(smap[fid])
            if f2.sid not in jc2.face_map[s2.sid]:
                return None
            sig1, a1 = jc1.signatures[(s.sid, f.sid)]
            sig2, a2 = jc2.signatures[(s2.sid, f2.sid)]
            cons.append((s.sid, f.sid, align_val[a1] ^ align_val[a2], sig1, sig2))

    neighbors = {}
    for sid, fid, parity, _, _ in cons:
        neighbors.setdefault(sid, []).append((fid, parity))
        neighbors.setdefault(fid, []).append((sid, parity))

    def node_ok(sid, flip):
        s = jc1.simplex(sid)
        s2 = jc2.simplex(smap[sid])
        if strict:
            r1 = s.label.ranks
            r2 = s2.label.ranks
            if (r1 if not flip else (r1[1], r1[0])) != r2:
                return False
        return True

    flips = {}
    all_sids = [s.sid for s in jc1.simplices]
    for seed_sid in all_sids:
        if seed_sid in flips:
            continue
        for seed in (False, True):
            trial = {seed_sid: seed}
            stack = [seed_sid]
            ok = True
            while stack and ok:
                cur = stack.pop()
                for nb, parity in neighbors.get(cur, ()):
                    want = trial[cur] ^ bool(parity)
                    if nb in trial:
                        if trial[nb] != want:
                            ok = False
                            break
                    else:
                        trial[nb] = want
                        stack.append(nb)
            if ok:
                # signature patterns under the trial flips
                for sid, fid, parity, sig1, sig2 in cons:
                    if sid not in trial:
                        continue
                    pat = sig1 if not trial[sid] else (sig1[1], sig1[0])
                    if pat != sig2:
                        ok = False
                        break
            if ok:
                for sid in trial:
                    if not node_ok(sid, trial[sid]):
                        ok = False
                        break
            if ok:
                flips.update(trial)
                break
        else:
            return None
        if seed_sid not in flips:
            return None
    return flips


def _spot_check_chains(jc1, jc2, smap, flips):
    """Walk every maximal chain and re-evaluate the pattern condition."""
    maximal = []
    face_ids = set()
    for s in jc1.simplices:
        face_ids.update(jc1.face_map.get(s.sid, ()))
    maximal = [s for s in jc1.simplices if s.sid not in face_ids]

    def walk(sid, chain):
        faces = jc1.face_map[sid]
        if not faces:
            _check_chain(jc1, jc2, smap, flips, chain)
            return
        for fid in faces:
            walk(fid, chain + [fid])

    for m in maximal:
        walk(m.sid, [m.sid])


def _check_chain(jc1, jc2, smap, flips, chain):
    align_val = {"aligned": 0, "flipped": 1}
    for i in range(len(chain) - 1):
        sid, fid = chain[i], chain[i + 1]
        sig1, a1 = jc1.signatures[(sid, fid)]
        s2, f2 = smap[sid], smap[fid]
        sig2, a2 = jc2.signatures[(s2, f2)]
        if align_val[a1] ^ align_val[a2] != (flips[sid] ^ flips[fid]):
            raise ChainDisagreement("alignment parity broke along a chain")
        pat = sig1 if not flips[sid] else (sig1[1], sig1[0])
        if pat != sig2:
            raise ChainDisagreement("face-level and chain-level patterns disagree")


def _full_check(jc1, jc2, phi, strict):
    """Extend a vertex bijection to a full semi-iso, or None."""
    # group simplices by vertex set and match groups
    groups1 = {}
    for s in jc1.simplices:
        groups1.setdefault(s.verts, []).append(s)
    groups2 = {}
    for s in jc2.simplices:
        groups2.setdefault(s.verts, []).append(s)
    if len(jc1.simplices) != len(jc2.simplices):
        return None

    mapped_groups = []
    for verts, members in sorted(groups1.items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))):
        image = frozenset(phi[v] for v in verts)
        targets = groups2.get(image, [])
        if len(targets) != len(members):
            return None
        if sorted(m.label.qi_type for m in members) != sorted(t.label.qi_type for t in targets):
            return None
        mapped_groups.append((members, targets))

    # backtrack over pairings within multi-simplex groups
    def assign(i, smap):
        if i == len(mapped_groups):
            flips = _try_flips(jc1, jc2, smap, strict)
            if flips is None:
                return None
            _spot_check_chains(jc1, jc2, smap, flips)
            return SemiIso(dict(phi), dict(smap), flips)
        members, targets = mapped_groups[i]
        if len(members) == 1:
            if members[0].label.qi_type != targets[0].label.qi_type:
                return None
            smap[members[0].sid] = targets[0].sid
            out = assign(i + 1, smap)
            if out is not None:
                return out
            del smap[members[0].sid]
            return None
        for perm in permutations(targets):
            if any(m.label.qi_type != t.label.qi_type for m, t in zip(members, perm)):
                continue
            for m, t in zip(members, perm):
                smap[m.sid] = t.sid
            out = assign(i + 1, smap)
            if out is not None:
                return out
            for m in members:
                del smap[m.sid]
        return None

    return assign(0, {})


def _vertex_search(jc1, jc2, strict, count_all=False):
    n1, n2 = len(jc1.vertex_ids), len(jc2.vertex_ids)
    results = []
    if n1 != n2:
        return results
    types1 = sorted(jc1.vertex_label[v].qi_type for v in jc1.vertex_ids)
    types2 = sorted(jc2.vertex_label[v].qi_type for v in jc2.vertex_ids)
    if types1 != types2:
        return results
    # simplex qi_type multisets are a necessary condition
    if sorted(s.label.qi_type for s in jc1.simplices) != sorted(s.label.qi_type for s in jc2.simplices):
        return results
    adj1, adj2 = _adjacency(jc1), _adjacency(jc2)
    inv1 = {v: _vertex_invariant(jc1, v, adj1) for v in jc1.vertex_ids}
    inv2 = {v: _vertex_invariant(jc2, v, adj2) for v in jc2.vertex_ids}
    if sorted(inv1.values()) != sorted(inv2.values()):
        return results
    order = sorted(jc1.vertex_ids)
    phi = {}
    used = set()

    def ok(v, w):
        if inv1[v] != inv2[w]:
            return False
        for u in phi:
            if (u in adj1[v]) != (phi[u] in adj2[w]):
                return False
        return True

    def search(i):
        if i == len(order):
            si = _full_check(jc1, jc2, phi, strict)
            if si is not None:
                results.append(si)
                return not count_all
            return False
        v = order[i]
        for w in sorted(jc2.vertex_ids):
            if w in used or not ok(v, w):
                continue
            phi[v] = w
            used.add(w)
            done = search(i + 1)
            del phi[v]
            used.remove(w)
            if done:
                return True
        return False

    search(0)
    return results


def semi_isomorphic(jc1, jc2, strict=False):
    """First semi-isomorphism found, or None.  Deterministic."""
    got = _vertex_search(jc1, jc2, strict, count_all=False)
    return got[0] if got else None


def semi_iso_count(jc1, jc2, strict=False):
    """Number of vertex bijections extending to a semi-isomorphism."""
    return len(_vertex_search(jc1, jc2, strict, count_all=True))
