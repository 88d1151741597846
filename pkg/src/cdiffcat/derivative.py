"""Higher-order derivatives built from a differential combinator.

Every function takes an optional category instance ``cat``; by default the
polynomial category over the map's semiring is used.  An instance provides
``dom, cod, compose, add, scale, zero, pair, diff, identity`` and ``embed``,
which turns a linear selection map of k-POLY into a map of the instance.
"""
from __future__ import annotations

from .partitions import enumerate_partitions, block_projection
from .polycat import ArityError, PolyCategory, PolyMap, select, product_map, compose, diff


def _cat(f, cat):
    if cat is not None:
        return cat
    if isinstance(f, PolyMap):
        return PolyCategory(f.ring)
    raise TypeError("a category instance is required for non-polynomial maps")


def slot_offsets(blocks):
    offs = [0]
    for b in blocks:
        offs.append(offs[-1] + b)
    return offs


def partial_in_slot(f, blocks, j, cat=None):
    """``D_j[f] = D[f] ∘ <π0..πn, 0, .., π_{n+1}, .., 0>``.

    ``blocks`` lists the arities of the factors ``X0 .. Xn`` of f's domain.  The
    result has domain ``X0 × .. × Xn × Xj`` with the direction appended last.
    """
    cat = _cat(f, cat)
    blocks = list(blocks)
    total = sum(blocks)
    if total != cat.dom(f):
        raise ArityError(f"blocks {blocks} do not cover domain {cat.dom(f)}")
    if not 0 <= j < len(blocks):
        raise ArityError(f"slot {j} out of range for {len(blocks)} factors")
    offs = slot_offsets(blocks)
    idx = list(range(total)) + [None] * total
    for k in range(blocks[j]):
        idx[total + offs[j] + k] = total + k
    ring = getattr(cat, "ring", None) or f.ring
    s = select(total + blocks[j], idx, ring)
    return cat.compose(cat.diff(f), cat.embed(s))


def partial_n(f, order, cat=None, base=None):
    """``∂ⁿ[f]``: iterate the slot-0 partial derivative ``order`` times.

    ``base`` is the arity of the point block (defaults to the domain of f).
    ``∂ⁿ[f]`` has domain ``base·(1+n)``: the point followed by n directions.
    """
    cat = _cat(f, cat)
    if order < 0:
        raise ValueError("order must be non-negative")
    a = cat.dom(f) if base is None else base
    out = f
    for k in range(order):
        out = partial_in_slot(out, [a] * (k + 1), 0, cat)
    return out


def total_n(f, order, cat=None):
    """``Dⁿ[f]`` with domain ``2ⁿ·dom``."""
    cat = _cat(f, cat)
    out = f
    for _ in range(order):
        out = cat.diff(out)
    return out


def zero_injection(n, base, ring=None):
    """The zero-padded pairing ``z_n`` with ``∂ⁿ[f] = Dⁿ[f] ∘ z_n``.

    Fixed by the recursion ``z_{n+1} = (z_n × z_n) ∘ <π0..πn, π_{n+1}, 0..0>``,
    mirroring ``∂^{n+1} = D0[∂ⁿ]``.
    """
    from .semiring import INT
    ring = ring or INT
    z = select(base, range(base), ring)
    for k in range(n):
        width = base * (k + 1)
        s = select(width + base, list(range(width + base)) + [None] * (width - base), ring)
        z = compose(product_map(z, z), s)
    return z


def linearize(f, cat=None):
    """``L[f] = D[f] ∘ <0, 1>``."""
    cat = _cat(f, cat)
    n = cat.dom(f)
    ring = getattr(cat, "ring", None) or f.ring
    return cat.compose(cat.diff(f), cat.embed(select(n, [None] * n + list(range(n)), ring)))


def faa_di_bruno_sum(g, f, n, cat=None):
    """Right-hand side of the higher-order chain rule for ``∂ⁿ[g ∘ f]``.

    Sums, over partitions ``A1|..|Ak`` of ``[n]``, the composite
    ``∂ᵏ[g] ∘ <f∘π0, ∂^{|A1|}[f]∘<π0, π_{A1}>, ..>``.
    """
    cat = _cat(f, cat)
    a = cat.dom(f)
    ring = getattr(cat, "ring", None) or f.ring
    width = a * (1 + n)
    point = cat.embed(select(width, range(a), ring))
    f_at_point = cat.compose(f, point)
    partials = {0: f}
    total = cat.zero(width, cat.cod(g))
    for part in enumerate_partitions(n):
        k = len(part.blocks)
        if k not in partials:
            partials[k] = partial_n(f, k, cat, base=a)
        dg = partial_n(g, k, cat)
        args = [f_at_point]
        for block in part.blocks:
            m = len(block)
            if m not in partials:
                partials[m] = partial_n(f, m, cat, base=a)
            proj = cat.embed(block_projection(block, n, a, a, ring))
            args.append(cat.compose(partials[m], proj))
        total = cat.add(total, cat.compose(dg, cat.pair(args, width)))
    return total


def hd8_rhs(f, n, cat=None):
    """The expansion of ``D[∂ⁿ f]`` as ``∂^{n+1}`` plus shifted ``∂ⁿ`` terms.

    Arguments are laid out as ``D[∂ⁿ f]`` expects: ``x, u1..un`` then ``y, v1..vn``.
    """
    cat = _cat(f, cat)
    a = cat.dom(f)
    ring = getattr(cat, "ring", None) or f.ring
    width = 2 * a * (n + 1)

    def blk(i):
        return list(range(i * a, (i + 1) * a))

    # regroup to <π0, π_{n+1}, π1, π_{n+2}, ..> then feed ∂ⁿ[D f]; equivalently:
    head = []
    for i in range(n + 1):
        head += blk(i)
    head += blk(n + 1)
    total = cat.compose(partial_n(f, n + 1, cat), cat.embed(select(width, head, ring)))
    dn = partial_n(f, n, cat)
    for j in range(1, n + 1):
        idx = []
        for i in range(n + 1):
            idx += blk(n + 1 + j) if i == j else blk(i)
        total = cat.add(total, cat.compose(dn, cat.embed(select(width, idx, ring))))
    return total
