"""Skew tableaux: enumeration, reading words, jeu de taquin, and the rules
built on them (skew Pieri, skew Littlewood-Richardson, skew corners).

French convention everywhere: row 0 is the bottom row.  An SSYT has rows
weakly increasing left to right and columns strictly increasing bottom to
top.  An ASSYT (anti-semistandard tableau) has rows strictly decreasing and
columns weakly decreasing going up; equivalently, transposing and rotating
by 180 degrees turns it into an SSYT.
"""

from collections import Counter

from . import partitions as pt
from . import symfunc as sf
from .partitions import Cell, SkewShape
from .reporting import Failure, VerificationReport


class SSYT:
    """Semistandard filling of a skew shape."""

    __slots__ = ("shape", "entries")

    def __init__(self, shape, entries):
        entries = {Cell(*c): int(v) for c, v in entries.items()}
        if set(entries) != set(shape.cells()):
            raise ValueError("entries do not cover the shape exactly")
        for cell, v in entries.items():
            if v < 1:
                raise ValueError(f"entry {v} at {cell} not positive")
            right = entries.get(Cell(cell.row, cell.col + 1))
            if right is not None and v > right:
                raise ValueError(f"row not weakly increasing at {cell}")
            above = entries.get(Cell(cell.row + 1, cell.col))
            if above is not None and v >= above:
                raise ValueError(f"column not strictly increasing at {cell}")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("SSYT is immutable")

    def reading_cells(self):
        return _ssyt_reading_cells(self.shape)

    def content(self):
        if not self.entries:
            return ()
        top = max(self.entries.values())
        counts = [0] * top
        for v in self.entries.values():
            counts[v - 1] += 1
        return tuple(counts)

    def __eq__(self, other):
        return (
            isinstance(other, SSYT)
            and self.shape == other.shape
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.shape, frozenset(self.entries.items())))

    def __repr__(self):
        rows = []
        for r in range(len(self.shape.outer) - 1, -1, -1):
            row = []
            for c in range(self.shape.outer[r]):
                if c < pt.part_at(self.shape.inner, r):
                    row.append(".")
                else:
                    row.append(str(self.entries[Cell(r, c)]))
            rows.append(" ".join(row))
        return f"<SSYT {self.shape} [{' | '.join(rows)}]>"


class ASSYT:
    """Anti-semistandard filling: rows strictly decreasing, columns weakly
    decreasing bottom to top."""

    __slots__ = ("shape", "entries")

    def __init__(self, shape, entries):
        entries = {Cell(*c): int(v) for c, v in entries.items()}
        if set(entries) != set(shape.cells()):
            raise ValueError("entries do not cover the shape exactly")
        for cell, v in entries.items():
            if v < 1:
                raise ValueError(f"entry {v} at {cell} not positive")
            right = entries.get(Cell(cell.row, cell.col + 1))
            if right is not None and v <= right:
                raise ValueError(f"row not strictly decreasing at {cell}")
            above = entries.get(Cell(cell.row + 1, cell.col))
            if above is not None and v < above:
                raise ValueError(f"column not weakly decreasing at {cell}")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("ASSYT is immutable")

    def reading_cells(self):
        return _assyt_reading_cells(self.shape)

    def content(self):
        if not self.entries:
            return ()
        top = max(self.entries.values())
        counts = [0] * top
        for v in self.entries.values():
            counts[v - 1] += 1
        return tuple(counts)

    def __eq__(self, other):
        return (
            isinstance(other, ASSYT)
            and self.shape == other.shape
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.shape, frozenset(self.entries.items())))

    def __repr__(self):
        return f"<ASSYT {self.shape} {sorted(self.entries.items())}>"


def _ssyt_reading_cells(shape):
    """Rows bottom to top, right to left within each row."""
    cells = []
    for r in range(len(shape.outer)):
        lo = pt.part_at(shape.inner, r)
        cells.extend(Cell(r, c) for c in range(shape.outer[r] - 1, lo - 1, -1))
    return cells


def _assyt_reading_cells(shape):
    """Columns right to left, reading up (bottom to top) each column."""
    by_col = {}
    for cell in shape.cells():
        by_col.setdefault(cell.col, []).append(cell.row)
    cells = []
    for c in sorted(by_col, reverse=True):
        cells.extend(Cell(r, c) for r in sorted(by_col[c]))
    return cells


def reverse_reading_word(t):
    """Word of an SSYT: right-to-left along rows, rows bottom to top."""
    return tuple(t.entries[c] for c in _ssyt_reading_cells(t.shape))


def assyt_reverse_reading_word(t):
    """Word of an ASSYT: up the columns, columns right to left."""
    return tuple(t.entries[c] for c in _assyt_reading_cells(t.shape))


def transpose_rotate(t):
    """The SSYT obtained from an ASSYT by transposing, then rotating 180
    degrees inside the bounding box of the transposed shape."""
    outer_c = pt.conjugate(t.shape.outer)
    inner_c = pt.conjugate(t.shape.inner)
    ell = len(outer_c)
    w = outer_c[0] if outer_c else 0
    new_outer = tuple(w - pt.part_at(inner_c, ell - 1 - i) for i in range(ell))
    new_inner = tuple(w - pt.part_at(outer_c, ell - 1 - i) for i in range(ell))
    shape = SkewShape(new_outer, new_inner)
    entries = {
        Cell(ell - 1 - c, w - 1 - r): v for (r, c), v in t.entries.items()
    }
    return SSYT(shape, entries)


def is_lattice(word):
    return is_delta_lattice(word, ())

def is_delta_lattice(word, delta):
    """True iff prefixing the word with delta_1 ones, delta_2 twos, ... gives
    a word in which every prefix has at least as many i as i+1."""
    counts = {i: part for i, part in enumerate(delta, start=1)}
    for v in word:
        counts[v] = counts.get(v, 0) + 1
        if v > 1 and counts[v] > counts.get(v - 1, 0):
            return False
    return True


# ---------------------------------------------------------------------------
# enumeration

def _fill(shape, cells, is_ssyt, content=None, max_entry=None, budget=None,
          init_counts=None):
    """Backtracking filler shared by the enumerators.

    Cells must come in the reading order of the tableau family, so the
    right neighbour and the neighbour below (SSYT), or the right neighbour
    and the one below in the column (ASSYT), are already placed when a cell
    is filled; the lattice condition can then be checked online.

    Yields entry dicts.  `content` fixes the multiplicity of each value
    exactly, `budget` only caps it, `max_entry` leaves it free.  When
    `init_counts` is given (value -> count), every prefix of the reading
    word must keep count(i) >= count(i+1) starting from those counts.
    """
    if content is not None:
        if sum(content) != len(cells):
            return
        remaining = list(content)
        nvals = len(content)
    elif budget is not None:
        remaining = list(budget)
        nvals = len(budget)
    else:
        remaining = None
        nvals = max_entry
    counts = dict(init_counts) if init_counts is not None else None
    entries = {}

    def rec(k):
        if k == len(cells):
            yield dict(entries)
            return
        cell = cells[k]
        right = entries.get(Cell(cell.row, cell.col + 1))
        below = entries.get(Cell(cell.row - 1, cell.col))
        for v in range(1, nvals + 1):
            if remaining is not None and remaining[v - 1] == 0:
                continue
            if is_ssyt:
                if right is not None and v > right:
                    continue
                if below is not None and v <= below:
                    continue
            else:
                if right is not None and v <= right:
                    continue
                if below is not None and v > below:
                    continue
            if counts is not None:
                if v > 1 and counts.get(v, 0) + 1 > counts.get(v - 1, 0):
                    continue
                counts[v] = counts.get(v, 0) + 1
            if remaining is not None:
                remaining[v - 1] -= 1
            entries[cell] = v
            yield from rec(k + 1)
            del entries[cell]
            if remaining is not None:
                remaining[v - 1] += 1
            if counts is not None:
                counts[v] -= 1

    yield from rec(0)


def enumerate_ssyt(shape, content):
    """All SSYT of the shape with the given content."""
    content = tuple(int(x) for x in content)
    cells = _ssyt_reading_cells(shape)
    return [SSYT(shape, d) for d in _fill(shape, cells, True, content=content)]


def enumerate_ssyt_bounded(shape, max_entry):
    """All SSYT of the shape with entries in 1..max_entry."""
    cells = _ssyt_reading_cells(shape)
    return [SSYT(shape, d) for d in _fill(shape, cells, True, max_entry=max_entry)]


def enumerate_assyt(shape, content):
    """All ASSYT of the shape with the given content."""
    content = tuple(int(x) for x in content)
    cells = _assyt_reading_cells(shape)
    return [ASSYT(shape, d) for d in _fill(shape, cells, False, content=content)]


def enumerate_assyt_bounded(shape, max_entry):
    cells = _assyt_reading_cells(shape)
    return [ASSYT(shape, d) for d in _fill(shape, cells, False, max_entry=max_entry)]


def enumerate_lr_fillings(shape, content):
    """SSYT of the shape and content whose reverse reading word is lattice."""
    content = tuple(int(x) for x in content)
    cells = _ssyt_reading_cells(shape)
    return [
        SSYT(shape, d)
        for d in _fill(shape, cells, True, content=content, init_counts={})
    ]


def count_lr_fillings(shape, content):
    content = tuple(int(x) for x in content)
    cells = _ssyt_reading_cells(shape)
    return sum(
        1 for _ in _fill(shape, cells, True, content=content, init_counts={})
    )


# ---------------------------------------------------------------------------
# the two content-transposing bijections

def psi(t):
    """Replace the i-th appearance (in reverse reading order) of the value j
    by i.  Sends a lattice SSYT to a lattice ASSYT of the same shape and
    conjugated content."""
    cells = _ssyt_reading_cells(t.shape)
    if not is_lattice(tuple(t.entries[c] for c in cells)):
        raise ValueError("reverse reading word is not a lattice permutation")
    seen = Counter()
    new = {}
    for cell in cells:
        j = t.entries[cell]
        seen[j] += 1
        new[cell] = seen[j]
    return ASSYT(t.shape, new)


def psi_inverse(t):
    """Inverse of psi: on an ASSYT, the j-th appearance (in the ASSYT reading
    order) of the value i becomes j."""
    cells = _assyt_reading_cells(t.shape)
    if not is_lattice(tuple(t.entries[c] for c in cells)):
        raise ValueError("reverse reading word is not a lattice permutation")
    seen = Counter()
    new = {}
    for cell in cells:
        i = t.entries[cell]
        seen[i] += 1
        new[cell] = seen[i]
    return SSYT(t.shape, new)


# ---------------------------------------------------------------------------
# jeu de taquin

def jdt_slide(t, hole):
    """One full jeu de taquin slide of t into the hole.

    A hole at a corner of the inner shape starts a forward slide (the hole
    migrates up/right and exits at a corner of the outer shape); a hole at
    an addable cell of the outer shape starts a reverse slide.  Returns
    (new tableau, vacated cell); when no neighbour can move at all the
    tableau is returned unchanged with vacated None.

    Tie rule: when the row and the column neighbour hold equal entries the
    column neighbour moves, in both directions.  This is the unique choice
    that preserves semistandardness and makes forward and reverse slides
    mutually inverse.
    """
    hole = Cell(*hole)
    if pt.is_corner(t.shape.inner, hole):
        return _jdt_forward(t, hole)
    if pt.is_addable(t.shape.outer, hole):
        return _jdt_reverse(t, hole)
    raise ValueError(f"{hole} is not a legal slide position for {t.shape}")


def _jdt_forward(t, hole):
    entries = dict(t.entries)
    cur = hole
    while True:
        right = Cell(cur.row, cur.col + 1)
        above = Cell(cur.row + 1, cur.col)
        has_r, has_a = right in entries, above in entries
        if not (has_r or has_a):
            break
        if has_r and has_a:
            nb = above if entries[above] <= entries[right] else right
        else:
            nb = above if has_a else right
        entries[cur] = entries.pop(nb)
        cur = nb
    if cur == hole:
        return t, None
    shape = SkewShape(
        pt.remove_cell(t.shape.outer, cur), pt.remove_cell(t.shape.inner, hole)
    )
    return SSYT(shape, entries), cur


def _jdt_reverse(t, hole):
    entries = dict(t.entries)
    cur = hole
    while True:
        left = Cell(cur.row, cur.col - 1)
        below = Cell(cur.row - 1, cur.col)
        has_l, has_b = left in entries, below in entries
        if not (has_l or has_b):
            break
        if has_l and has_b:
            nb = below if entries[below] >= entries[left] else left
        else:
            nb = below if has_b else left
        entries[cur] = entries.pop(nb)
        cur = nb
    if cur == hole:
        return t, None
    shape = SkewShape(
        pt.add_cell(t.shape.outer, hole), pt.add_cell(t.shape.inner, cur)
    )
    return SSYT(shape, entries), cur


# ---------------------------------------------------------------------------
# product rules

def skew_pieri_terms(k, shape):
    """Signed skew terms of s_(k) * s_{outer/inner}: for each i, add a
    (k-i)-horizontal strip above the outer shape and remove an i-vertical
    strip from the inner shape, with sign (-1)^i."""
    gamma, beta = shape.outer, shape.inner
    out = []
    for i in range(k + 1):
        sign = -1 if i % 2 else 1
        for bm in pt.vertical_strips_below(beta, i):
            for gp in pt.horizontal_strips_above(gamma, k - i):
                out.append((sign, SkewShape(gp, bm)))
    return out


def skew_pieri(k, shape):
    """s_(k) * skew Schur function of the shape, Schur-expanded."""
    total = sf.zero()
    for sign, sh in skew_pieri_terms(k, shape):
        total = sf.add(total, sf.scale(sign, sf.skew_schur(sh)))
    return total


def skew_lr_pairs(a, b):
    """Generate the tableau pairs of the skew Littlewood-Richardson rule for
    the product of the skew Schur functions of shapes a and b.

    Yields (sign, T1, T2, shape) where T1 is an ASSYT of shape b.inner/bm,
    T2 an SSYT of shape gp/b.outer, the combined content of the pair is the
    componentwise difference a.outer - a.inner, the reverse reading word of
    the pair (T1 first) is an a.inner-lattice permutation, the sign is
    (-1)^{|T1|} and the contributed term is the skew Schur function of
    shape = gp/bm.
    """
    alpha, delta = a.outer, a.inner
    gamma, beta = b.outer, b.inner
    nvals = len(alpha)
    target = [alpha[i] - pt.part_at(delta, i) for i in range(nvals)]
    if any(x < 0 for x in target):
        return
    total = sum(target)
    init_counts = {i: part for i, part in enumerate(delta, start=1)}
    for beta_minus in pt.sub_partitions(beta):
        shape1 = SkewShape(beta, beta_minus)
        size1 = shape1.size
        if size1 > total:
            continue
        sign = -1 if size1 % 2 else 1
        cells1 = _assyt_reading_cells(shape1)
        for d1 in _fill(shape1, cells1, False, budget=target,
                        init_counts=init_counts):
            t1 = ASSYT(shape1, d1)
            used = Counter(d1.values())
            remaining = tuple(target[i] - used.get(i + 1, 0) for i in range(nvals))
            counts1 = dict(init_counts)
            for v, m in used.items():
                counts1[v] = counts1.get(v, 0) + m
            for gamma_plus in pt.partitions_of(sum(gamma) + total - size1):
                if not pt.contains(gamma, gamma_plus):
                    continue
                shape2 = SkewShape(gamma_plus, gamma)
                cells2 = _ssyt_reading_cells(shape2)
                for d2 in _fill(shape2, cells2, True, content=remaining,
                                init_counts=counts1):
                    yield sign, t1, SSYT(shape2, d2), SkewShape(gamma_plus, beta_minus)


def skew_lr_terms(a, b):
    """Signed skew-shape terms of the product, one per tableau pair."""
    return [(sign, shape) for sign, _t1, _t2, shape in skew_lr_pairs(a, b)]


def skew_lr_product(a, b):
    """Product of two skew Schur functions via the skew LR rule, collapsed
    to the Schur basis."""
    total = sf.zero()
    for sign, shape in skew_lr_terms(a, b):
        total = sf.add(total, sf.scale(sign, sf.skew_schur(shape)))
    return total


def skew_corners_rhs(alpha, theta):
    """The corner-counting side of the skew Kronecker identity:

    (noc(alpha) - noc(theta) - 1) s_{alpha/theta}
      + sum over beta in addremove(alpha) of s_{beta/theta}
      - sum over phi in addremove(theta) of s_{alpha/phi}
    """
    alpha = pt.make_partition(alpha)
    theta = pt.make_partition(theta)
    if not pt.contains(theta, alpha):
        raise ValueError(f"{theta} not contained in {alpha}")
    coef = pt.noc(alpha) - pt.noc(theta) - 1
    total = sf.scale(coef, sf.skew_schur(alpha, theta))
    for beta in pt.addremove_set(alpha):
        total = sf.add(total, sf.skew_schur(beta, theta))
    for phi in pt.addremove_set(theta):
        total = sf.add(total, sf.scale(-1, sf.skew_schur(alpha, phi)))
    return total


def _added_cell(small, big):
    """The unique cell of big/small when big covers small."""
    for r in range(len(big)):
        if pt.part_at(big, r) != pt.part_at(small, r):
            return Cell(r, pt.part_at(small, r))
    raise ValueError(f"{big} does not cover {small}")


def jdt_case(alpha, theta, gamma, delta, t):
    """Classify one slide of the corner bijection.

    t has shape gamma/delta with gamma covering alpha and delta covering
    theta, delta contained in alpha.  Returns ('a'|'b'|'c', slid tableau,
    vacated cell).
    """
    b_cell = _added_cell(theta, delta)
    c_cell = _added_cell(alpha, gamma)
    t2, vacated = jdt_slide(t, b_cell)
    if vacated is None:
        return "a", t2, None
    if vacated == c_cell:
        return "c", t2, vacated
    return "b", t2, vacated


def verify_jdt_bijection(alpha, theta):
    """Exhaustively check the three-case jdt bijection behind the corner
    identity, with tableau entries bounded by |alpha|.

    Cases (a) and (b) together must biject onto the SSYT of shapes
    beta/theta over beta in addremove(alpha); every case (c) output of
    shape alpha/theta must occur exactly |add(alpha)| - |outside corners of
    theta not in alpha| times.
    """
    alpha = pt.make_partition(alpha)
    theta = pt.make_partition(theta)
    if not pt.contains(theta, alpha):
        raise ValueError(f"{theta} not contained in {alpha}")
    bound = max(sum(alpha), 1)
    got_ab = Counter()
    got_c = Counter()
    checked = 0
    for gamma in pt.add_set(alpha):
        for delta in pt.add_restrict(theta, alpha):
            shape = SkewShape(gamma, delta)
            for t in enumerate_ssyt_bounded(shape, bound):
                checked += 1
                case, t2, vacated = jdt_case(alpha, theta, gamma, delta, t)
                if case == "a":
                    beta = pt.remove_cell(gamma, _added_cell(theta, delta))
                    got_ab[(beta, frozenset(t.entries.items()))] += 1
                elif case == "b":
                    beta = pt.remove_cell(gamma, vacated)
                    got_ab[(beta, frozenset(t2.entries.items()))] += 1
                else:
                    got_c[frozenset(t2.entries.items())] += 1
    want_ab = Counter()
    for beta in pt.addremove_set(alpha):
        if not pt.contains(theta, beta):
            continue
        for t in enumerate_ssyt_bounded(SkewShape(beta, theta), bound):
            want_ab[(beta, frozenset(t.entries.items()))] += 1
    k = len(pt.add_set(alpha)) - len(pt.add_complement(theta, alpha))
    want_c = Counter()
    for t in enumerate_ssyt_bounded(SkewShape(alpha, theta), bound):
        want_c[frozenset(t.entries.items())] += k
    failures = []
    if got_ab != want_ab:
        failures.append(
            Failure(
                {"alpha": alpha, "theta": theta, "part": "cases a+b"},
                f"{len(got_ab)} distinct slid tableaux (multiplicities "
                f"{sorted(got_ab.values())})",
                f"{len(want_ab)} expected tableaux, each once",
            )
        )
    if got_c != want_c:
        failures.append(
            Failure(
                {"alpha": alpha, "theta": theta, "part": "case c"},
                f"case c multiset of size {sum(got_c.values())}",
                f"expected {k} copies of each of {len(want_c)} tableaux",
            )
        )
    return VerificationReport(
        identity="jdt_bijection",
        params={"alpha": alpha, "theta": theta},
        instances=checked,
        failures=failures,
    )
