"""Words in right-angled Artin groups: normal forms, divisors, join length.

Words are tuples of letters (generator, exponent) with exponent +-1.
The normal form is the shortlex representative of the trace-monoid
congruence class: reduce by shuffling commuting letters and cancelling,
then repeatedly emit the least available generator.
"""

from __future__ import annotations

from .products import maximal_join_subgraphs


class WordParseError(ValueError):
    pass


def parse_word(graph, text):
    """Parse 'a b^-1 c^2' into a letter tuple over graph's vertices."""
    letters = []
    for tok in text.replace(".", " ").split():
        if "^" in tok:
            gen, _, exp = tok.partition("^")
            try:
                k = int(exp)
            except ValueError:
                raise WordParseError("bad exponent in %r" % tok)
        else:
            gen, k = tok, 1
        if gen not in graph.vertices:
            raise WordParseError("unknown generator %r" % gen)
        sign = 1 if k > 0 else -1
        letters.extend([(gen, sign)] * abs(k))
    return tuple(letters)


def word_to_text(word):
    if not word:
        return "1"
    out = []
    i = 0
    while i < len(word):
        g, s = word[i]
        j = i
        while j < len(word) and word[j] == (g, s):
            j += 1
        n = (j - i) * s
        out.append(g if n == 1 else "%s^%d" % (g, n))
        i = j
    return " ".join(out)


def inverse(word):
    return tuple((g, -s) for g, s in reversed(word))


def _reduce(graph, word):
    """Piling reduction: shuffle commuting letters, cancel inverse pairs."""
    out = []
    for g, s in word:
        i = len(out) - 1
        cancelled = False
        while i >= 0:
            h, t = out[i]
            if h == g:
                if t == -s:
                    out.pop(i)
                    cancelled = True
                break
            if frozenset((g, h)) not in graph.edges:
                break
            i -= 1
        if not cancelled:
            out.append((g, s))
    return out


def normal_form(graph, word):
    """Shortlex normal form of the trace-congruence class of word."""
    pile = _reduce(graph, word)
    vidx = {v: i for i, v in enumerate(sorted(graph.vertices))}
    result = []
    remaining = list(pile)
    while remaining:
        # letters movable to the front: nothing non-commuting before them
        best = None
        for i, (g, s) in enumerate(remaining):
            if all(frozenset((g, h)) in graph.edges
                   for h, _ in remaining[:i]):
                if best is None or vidx[g] < vidx[remaining[best][0]]:
                    best = i
            # a non-commuting earlier copy of g blocks everything after it
        result.append(remaining.pop(best))
    return tuple(result)


def concat_nf(graph, w1, w2):
    return normal_form(graph, w1 + w2)


def support(graph, word):
    return frozenset(g for g, _ in normal_form(graph, word))


def special_membership(graph, word, vertex_set):
    """Does word lie in the parabolic subgroup on vertex_set?"""
    return support(graph, word) <= frozenset(vertex_set)


def max_left_divisor(graph, word, vertex_set):
    """Maximal left divisor of word supported on vertex_set.

    Returns (divisor_nf, remainder_nf).  Greedy extraction of every
    front-movable letter whose generator lies in vertex_set; exhaustive
    because extracting one such letter never blocks another.
    """
    vs = frozenset(vertex_set)
    remaining = list(normal_form(graph, word))
    divisor = []
    changed = True
    while changed:
        changed = False
        for i, (g, s) in enumerate(remaining):
            if g in vs and all(frozenset((g, h)) in graph.edges
                               for h, _ in remaining[:i]):
                divisor.append(remaining.pop(i))
                changed = True
                break
    return normal_form(graph, tuple(divisor)), normal_form(graph, tuple(remaining))


def max_right_divisor(graph, word, vertex_set):
    """Maximal right divisor supported on vertex_set: (remainder, divisor)."""
    d_inv, r_inv = max_left_divisor(graph, inverse(word), vertex_set)
    return normal_form(graph, inverse(r_inv)), normal_form(graph, inverse(d_inv))


def coset_key(graph, word, vertex_set):
    """Canonical key of the left coset w<vertex_set>: strip the maximal
    right divisor supported on vertex_set."""
    remainder, _ = max_right_divisor(graph, word, vertex_set)
    return remainder


def _left_divisor_elements(graph, word, vertex_set, cap=4096):
    """All left divisors of word supported on vertex_set (oracle helper)."""
    vs = frozenset(vertex_set)
    seen = set()
    out = []

    def rec(prefix, rest):
        key = (prefix, rest)
        if key in seen:
            return
        seen.add(key)
        if len(seen) > cap:
            raise RuntimeError("divisor enumeration cap exceeded")
        out.append(prefix)
        for i, (g, s) in enumerate(rest):
            if g in vs and all(frozenset((g, h)) in graph.edges
                               for h, _ in rest[:i]):
                rec(normal_form(graph, prefix + ((g, s),)),
                    rest[:i] + rest[i + 1:])

    rec((), normal_form(graph, word))
    return out


def join_supports(graph):
    """Vertex supports of the maximal join subgraphs of graph."""
    return sorted(j.support for j in maximal_join_subgraphs(graph))


def join_length(graph, word, max_depth=64):
    """Minimal number of join-parabolic factors expressing word.

    Iterative deepening: at each step peel, for every maximal join
    subgraph, the maximal left divisor supported on it.  Returns
    (length, factors) where factors is a list of normal forms; the
    identity has length 0.
    """
    joins = join_supports(graph)
    if not joins:
        raise ValueError("graph has no join subgraphs (edgeless graph)")
    start = normal_form(graph, word)
    if not start:
        return 0, []
    for depth in range(1, max_depth + 1):
        hit = _jl_search(graph, tuple(joins), start, depth, {})
        if hit is not None:
            return depth, list(hit)
    raise RuntimeError("join length exceeded max_depth=%d" % max_depth)


def _jl_search(graph, joins, word, budget, memo):
    """Factorization of word into <= budget join factors, or None."""
    if not word:
        return ()
    if budget == 0:
        return None
    key = (word, budget)
    if key in memo:
        return memo[key]
    result = None
    for vs in joins:
        div, rest = max_left_divisor(graph, word, vs)
        if not div:
            continue
        if not rest:
            result = (div,)
            break
        sub = _jl_search(graph, joins, rest, budget - 1, memo)
        if sub is not None:
            result = (div,) + sub
            break
    memo[key] = result
    return result


def join_length_oracle(graph, word, max_depth=8):
    """Exhaustive join length: try ALL left divisors supported on each
    maximal join, not just maximal ones.  Exponential; tests only."""
    joins = join_supports(graph)
    start = normal_form(graph, word)
    if not start:
        return 0

    seen = {start: 0}
    frontier = [start]
    for depth in range(1, max_depth + 1):
        nxt = []
        for w in frontier:
            for vs in joins:
                for div in _left_divisor_elements(graph, w, vs):
                    if not div:
                        continue
                    rest = normal_form(graph, inverse(div) + w)
                    if not rest:
                        return depth
                    if rest not in seen:
                        seen[rest] = depth
                        nxt.append(rest)
        frontier = nxt
        if not frontier:
            break
    raise RuntimeError("oracle join length exceeded max_depth=%d" % max_depth)


def star_length(graph, word, max_depth=64):
    """Minimal number of star-parabolic factors (closed stars st(v))."""
    stars = sorted(frozenset((v,) + tuple(graph.adjacent(v)))
                   for v in graph.vertices)
    start = normal_form(graph, word)
    if not start:
        return 0, []
    for depth in range(1, max_depth + 1):
        hit = _jl_search(graph, tuple(stars), start, depth, {})
        if hit is not None:
            return depth, list(hit)
    raise RuntimeError("star length exceeded max_depth=%d" % max_depth)
