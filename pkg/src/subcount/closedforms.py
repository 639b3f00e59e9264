"""Closed-form subgroup counts.

Each closed form is stored as a table of (coefficient, exponent) pairs, both
integer-linear expressions in the type parts and the order index b.  A table
is assembled into a numerator polynomial and divided exactly by the standard
denominator prod(p**i - 1); a division remainder means a table is wrong, and
the error says which case.
"""

from .groups import CaseId, GroupType, OutOfRange, RankMismatch, classify_rank3
from .polyring import ONE, IntPoly, NonExactDivision


class OrderViolation(ValueError):
    """Raised when chain arguments are not ascending positive integers."""


class FormulaBug(ArithmeticError):
    """A case table failed to divide exactly; names the offending case."""

    def __init__(self, case, remainder):
        super().__init__(
            "closed form %s did not divide exactly (remainder %s)" % (case, remainder)
        )
        self.case = case
        self.remainder = remainder


class FormulaResult:
    """Outcome of a closed-form lookup.

    covered is False when no case of the family applies; value is then None.
    """

    __slots__ = ("value", "case", "covered")

    def __init__(self, value, case, covered):
        self.value = value
        self.case = case
        self.covered = covered

    @classmethod
    def miss(cls):
        return cls(None, None, False)

    def __repr__(self):
        return "FormulaResult(%r, %r, %r)" % (self.value, self.case, self.covered)


class LinForm:
    """Integer-linear expression in the table variables plus a constant."""

    VARS = ("a1", "a2", "a3", "b", "m")

    __slots__ = ("coeffs", "const")

    def __init__(self, coeffs=(0, 0, 0, 0, 0), const=0):
        self.coeffs = tuple(coeffs)
        self.const = const

    @classmethod
    def of(cls, const=0, **named):
        coeffs = [0] * len(cls.VARS)
        for name, c in named.items():
            coeffs[cls.VARS.index(name)] = c
        return cls(tuple(coeffs), const)

    def subst(self, mapping):
        """Substitute variables simultaneously; mapping is var -> LinForm."""
        coeffs = [0] * len(self.VARS)
        const = self.const
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            repl = mapping.get(self.VARS[i])
            if repl is None:
                coeffs[i] += c
            else:
                for j, r in enumerate(repl.coeffs):
                    coeffs[j] += c * r
                const += c * repl.const
        return LinForm(tuple(coeffs), const)

    def eval(self, env):
        total = self.const
        for name, c in zip(self.VARS, self.coeffs):
            if c:
                total += c * env[name]
        return total

    def __eq__(self, other):
        if isinstance(other, LinForm):
            return self.coeffs == other.coeffs and self.const == other.const
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.const))

    def __repr__(self):
        parts = []
        for name, c in zip(self.VARS, self.coeffs):
            if c:
                parts.append("%+d*%s" % (c, name))
        if self.const or not parts:
            parts.append("%+d" % self.const)
        return "".join(parts).lstrip("+")


L = LinForm.of


def standard_denominator(k):
    """prod_{i=1}^{k} (p**i - 1)."""
    den = ONE
    for i in range(1, k + 1):
        den = den * (IntPoly.term(1, i) - 1)
    return den


def substitute_table(table, mapping):
    """Apply a simultaneous variable substitution to every table term."""
    return tuple((c.subst(mapping), e.subst(mapping)) for c, e in table)


def merge_table(table):
    """Collect a table by exponent form; returns exponent -> net coefficient."""
    merged = {}
    for coeff, exp in table:
        cur = merged.get(exp)
        if cur is None:
            merged[exp] = coeff
        else:
            merged[exp] = LinForm(
                tuple(x + y for x, y in zip(cur.coeffs, coeff.coeffs)),
                cur.const + coeff.const,
            )
    zero = LinForm()
    return {e: c for e, c in merged.items() if c != zero}


def assemble_table(table, env):
    """Evaluate a term table into a numerator polynomial."""
    acc = IntPoly.zero()
    for coeff, exp in table:
        c = coeff.eval(env)
        if c:
            acc = acc + IntPoly.term(c, exp.eval(env))
    return acc


def _divide(numerator, k, case):
    try:
        return numerator.exact_div(standard_denominator(k))
    except NonExactDivision as exc:
        raise FormulaBug(case, exc.remainder) from exc


# ---------------------------------------------------------------------------
# rank 2: three overlapping intervals
# ---------------------------------------------------------------------------

# each numerator over (p - 1); table entries read (coefficient, exponent)
RANK2_TABLES = {
    1: ((L(1), L(1, b=1)), (L(-1), L())),
    2: ((L(1), L(1, a1=1)), (L(-1), L())),
    3: ((L(1), L(1, a1=1, a2=1, b=-1)), (L(-1), L())),
}


def classify_rank2(t, b):
    """Pick the rank-2 case for (t, b); ties go to the lowest case number."""
    t = GroupType(t)
    if t.rank != 2:
        raise RankMismatch("expected a rank-2 type, got rank %d" % t.rank)
    a1, a2 = t.parts
    if not 0 <= b <= a1 + a2:
        raise OutOfRange("b must lie in [0, %d], got %d" % (a1 + a2, b))
    if b <= a1:
        return CaseId("rank2", 1)
    if b <= a2:
        return CaseId("rank2", 2)
    return CaseId("rank2", 3)


def rank2(t, b):
    """Closed-form count for a rank-2 type; covers every b in [0, m]."""
    t = GroupType(t)
    case = classify_rank2(t, b)
    a1, a2 = t.parts
    env = {"a1": a1, "a2": a2, "a3": 0, "b": b, "m": a1 + a2}
    numerator = assemble_table(RANK2_TABLES[case.case], env)
    return FormulaResult(_divide(numerator, 1, case), case, True)


# ---------------------------------------------------------------------------
# rank 3: ten cases; 7..10 are the b -> m-b images of 4, 3, 2, 1
# ---------------------------------------------------------------------------

_REFLECT_B = {"b": L(a1=1, a2=1, a3=1, b=-1)}

RANK3_TABLES = {
    1: (
        (L(1), L(3, b=2)),
        (L(-1), L(2, b=1)),
        (L(-1), L(1, b=1)),
        (L(1), L()),
    ),
    2: (
        (L(1), L(3, a1=1, b=1)),
        (L(1), L(2, a1=1, b=1)),
        (L(-1), L(2, a1=2)),
        (L(-1), L(2, b=1)),
        (L(-1), L(1, b=1)),
        (L(1), L()),
    ),
    3: (
        (L(1, b=1, a2=-1), L(3, a1=1, a2=1)),
        (L(1), L(2, a1=1, a2=1)),
        (L(0, b=-1, a2=1), L(1, a1=1, a2=1)),
        (L(-1), L(2, a1=2)),
        (L(-1), L(2, b=1)),
        (L(-1), L(1, b=1)),
        (L(1), L()),
    ),
    5: (
        (L(1, a1=1), L(3, a1=1, a2=1)),
        (L(1), L(2, a1=1, a2=1)),
        (L(0, a1=-1), L(1, a1=1, a2=1)),
        (L(-1), L(2, a1=2)),
        (L(-1), L(2, a1=1, a2=1)),
        (L(-1), L(1, a1=1, a2=1)),
        (L(1), L()),
    ),
    6: (
        (L(1, a3=1, a2=-1), L(3, a1=1, a2=1)),
        (L(2), L(2, a1=1, a2=1)),
        (L(1, a2=1, a3=-1), L(1, a1=1, a2=1)),
        (L(-1), L(2, a1=1, a2=1, a3=1, b=-1)),
        (L(-1), L(1, a1=1, a2=1, a3=1, b=-1)),
        (L(-1), L(2, a1=2)),
        (L(-1), L(2, b=1)),
        (L(-1), L(1, b=1)),
        (L(1), L()),
    ),
}
RANK3_TABLES[4] = RANK3_TABLES[3]
RANK3_TABLES[7] = substitute_table(RANK3_TABLES[4], _REFLECT_B)
RANK3_TABLES[8] = substitute_table(RANK3_TABLES[3], _REFLECT_B)
RANK3_TABLES[9] = substitute_table(RANK3_TABLES[2], _REFLECT_B)
RANK3_TABLES[10] = substitute_table(RANK3_TABLES[1], _REFLECT_B)


def rank3(t, b):
    """Closed-form count for a rank-3 type; covers every b in [0, m]."""
    t = GroupType(t)
    case = classify_rank3(t, b)
    return rank3_with_case(t, b, case.case)


def rank3_with_case(t, b, case_no):
    """Evaluate one specific rank-3 case table at (t, b).

    The caller is responsible for picking a case whose interval admits
    (t, b); boundary tests use this to compare overlapping cases.
    """
    t = GroupType(t)
    if t.rank != 3:
        raise RankMismatch("expected a rank-3 type, got rank %d" % t.rank)
    case = CaseId("rank3", case_no)
    a1, a2, a3 = t.parts
    env = {"a1": a1, "a2": a2, "a3": a3, "b": b, "m": a1 + a2 + a3}
    numerator = assemble_table(RANK3_TABLES[case_no], env)
    return FormulaResult(_divide(numerator, 2, case), case, True)


# substitutions that specialize the case-6 table to each other case
CASE6_SPECIALIZATIONS = {
    1: {"a1": L(b=1), "a2": L(b=1), "a3": L(b=1)},
    2: {"a2": L(b=1), "a3": L(b=1)},
    3: {"a3": L(b=1)},
    4: {"a3": L(b=1)},
    5: {"a3": L(a1=1, a2=1), "b": L(a1=1, a2=1)},
    7: {"a3": L(a1=1, a2=1, a3=1, b=-1), "b": L(a1=1, a2=1, a3=1, b=-1)},
    8: {"a3": L(a1=1, a2=1, a3=1, b=-1), "b": L(a1=1, a2=1, a3=1, b=-1)},
    9: {"a2": L(a1=1, a2=1, a3=1, b=-1), "a3": L(a1=1, a2=1, a3=1, b=-1),
        "b": L(a1=1, a2=1, a3=1, b=-1)},
    10: {"a1": L(a1=1, a2=1, a3=1, b=-1), "a2": L(a1=1, a2=1, a3=1, b=-1),
         "a3": L(a1=1, a2=1, a3=1, b=-1), "b": L(a1=1, a2=1, a3=1, b=-1)},
}


def verify_case6_specializations():
    """Check that substituting into the case-6 table reproduces each case.

    Returns a list of case numbers whose tables disagree (empty on success).
    The comparison is symbolic: terms are merged by exponent form.
    """
    bad = []
    for k, mapping in sorted(CASE6_SPECIALIZATIONS.items()):
        specialized = substitute_table(RANK3_TABLES[6], mapping)
        if merge_table(specialized) != merge_table(RANK3_TABLES[k]):
            bad.append(k)
    return bad


# ---------------------------------------------------------------------------
# rank 3 with equal parts (m, m, m): three intervals
# ---------------------------------------------------------------------------

MMM_TABLES = {
    1: (
        (L(1), L(3, b=2)),
        (L(-1), L(2, b=1)),
        (L(-1), L(1, b=1)),
        (L(1), L()),
    ),
    2: (
        (L(1), L(3, m=2)),
        (L(1), L(2, m=2)),
        (L(1), L(1, m=2)),
        (L(-1), L(2, m=3, b=-1)),
        (L(-1), L(1, m=3, b=-1)),
        (L(-1), L(2, b=1)),
        (L(-1), L(1, b=1)),
        (L(1), L()),
    ),
    3: (
        (L(1), L(3, m=6, b=-2)),
        (L(-1), L(2, m=3, b=-1)),
        (L(-1), L(1, m=3, b=-1)),
        (L(1), L()),
    ),
}


def rank3_mmm(m, b):
    """Closed-form count for the type (m, m, m)."""
    if m < 1:
        raise ValueError("m must be at least 1, got %d" % m)
    if not 0 <= b <= 3 * m:
        raise OutOfRange("b must lie in [0, %d], got %d" % (3 * m, b))
    if b <= m:
        case = CaseId("rank3-mmm", 1)
    elif b <= 2 * m:
        case = CaseId("rank3-mmm", 2)
    else:
        case = CaseId("rank3-mmm", 3)
    env = {"a1": m, "a2": m, "a3": m, "b": b, "m": m}
    numerator = assemble_table(MMM_TABLES[case.case], env)
    return FormulaResult(_divide(numerator, 2, case), case, True)


# ---------------------------------------------------------------------------
# rank 4, low-order intervals (the catalog does not cover every b)
# ---------------------------------------------------------------------------

RANK4_PARTIAL_TABLES = {
    1: (
        (L(1), L(6, b=3)),
        (L(-1), L(5, b=2)),
        (L(-1), L(4, b=2)),
        (L(-1), L(3, b=2)),
        (L(1), L(3, b=1)),
        (L(1), L(2, b=1)),
        (L(1), L(1, b=1)),
        (L(-1), L()),
    ),
    2: (
        (L(1), L(6, a1=1, b=2)),
        (L(1), L(5, a1=1, b=2)),
        (L(1), L(4, a1=1, b=2)),
        (L(-1), L(5, a1=2, b=1)),
        (L(-1), L(4, a1=2, b=1)),
        (L(-1), L(3, a1=2, b=1)),
        (L(1), L(3, a1=3)),
        (L(-1), L(5, b=2)),
        (L(-1), L(4, b=2)),
        (L(-1), L(3, b=2)),
        (L(1), L(3, b=1)),
        (L(1), L(2, b=1)),
        (L(1), L(1, b=1)),
        (L(-1), L()),
    ),
    3: (
        (L(1, b=1, a2=-1), L(6, a1=1, a2=1, b=1)),
        (L(1, b=1, a2=-1), L(5, a1=1, a2=1, b=1)),
        (L(-1, b=-1, a2=1), L(3, a1=1, a2=1, b=1)),
        (L(-1, b=-1, a2=1), L(2, a1=1, a2=1, b=1)),
        (L(1), L(4, a1=1, a2=2)),
        (L(1), L(3, a1=1, a2=2)),
        (L(1), L(2, a1=1, a2=2)),
        (L(-1), L(5, a1=2, b=1)),
        (L(-1), L(4, a1=2, b=1)),
        (L(-1), L(3, a1=2, b=1)),
        (L(1), L(3, b=1)),
        (L(1), L(2, b=1)),
        (L(1), L(1, b=1)),
        (L(1), L(3, a1=3)),
        (L(-1), L(5, b=2)),
        (L(-1), L(4, b=2)),
        (L(-1), L(3, b=2)),
        (L(-1), L()),
    ),
}


def _rank4_interval_case(a1, a2, a3, b):
    """Which low-order interval covers b, or None."""
    if 0 <= b <= a1:
        return 1
    if a1 <= b <= a2:
        return 2
    if a2 <= b <= min(a3, a1 + a2):
        return 3
    return None


def rank4_partial(t, b):
    """Interval closed forms for rank 4; covered is False off the catalog."""
    t = GroupType(t)
    if t.rank != 4:
        raise RankMismatch("expected a rank-4 type, got rank %d" % t.rank)
    a1, a2, a3, a4 = t.parts
    m = t.weight
    case_no = _rank4_interval_case(a1, a2, a3, b)
    use_b = b
    if case_no is None and 0 <= b <= m:
        # count symmetry lets the same intervals serve the mirrored index
        case_no = _rank4_interval_case(a1, a2, a3, m - b)
        use_b = m - b
    if case_no is None:
        return FormulaResult.miss()
    case = CaseId("rank4-partial", case_no)
    env = {"a1": a1, "a2": a2, "a3": a3, "b": use_b, "m": m}
    numerator = assemble_table(RANK4_PARTIAL_TABLES[case_no], env)
    return FormulaResult(_divide(numerator, 3, case), case, True)


# ---------------------------------------------------------------------------
# rank 4 with equal parts (m, m, m, m): four intervals
# ---------------------------------------------------------------------------

MMMM_TABLES = {
    1: (
        (L(1), L(6, b=3)),
        (L(-1), L(5, b=2)),
        (L(-1), L(4, b=2)),
        (L(-1), L(3, b=2)),
        (L(1), L(3, b=1)),
        (L(1), L(2, b=1)),
        (L(1), L(1, b=1)),
        (L(-1), L()),
    ),
    2: (
        (L(-1), L(5, b=2)),
        (L(-1), L(4, b=2)),
        (L(-1), L(3, b=2)),
        (L(1), L(6, m=2, b=1)),
        (L(1), L(5, m=2, b=1)),
        (L(2), L(4, m=2, b=1)),
        (L(1), L(3, m=2, b=1)),
        (L(1), L(2, m=2, b=1)),
        (L(1), L(3, b=1)),
        (L(1), L(2, b=1)),
        (L(1), L(1, b=1)),
        (L(-1), L(5, m=3)),
        (L(-2), L(4, m=3)),
        (L(-2), L(3, m=3)),
        (L(-2), L(2, m=3)),
        (L(-1), L(1, m=3)),
        (L(-1), L()),
        (L(1), L(3, m=4, b=-1)),
        (L(1), L(2, m=4, b=-1)),
        (L(1), L(1, m=4, b=-1)),
    ),
    3: (
        (L(1), L(3, b=1)),
        (L(1), L(2, b=1)),
        (L(1), L(1, b=1)),
        (L(1), L(6, m=6, b=-1)),
        (L(1), L(5, m=6, b=-1)),
        (L(2), L(4, m=6, b=-1)),
        (L(1), L(3, m=6, b=-1)),
        (L(1), L(2, m=6, b=-1)),
        (L(1), L(3, m=4, b=-1)),
        (L(1), L(2, m=4, b=-1)),
        (L(1), L(1, m=4, b=-1)),
        (L(-1), L(5, m=8, b=-2)),
        (L(-1), L(4, m=8, b=-2)),
        (L(-1), L(3, m=8, b=-2)),
        (L(-1), L(5, m=3)),
        (L(-2), L(4, m=3)),
        (L(-2), L(3, m=3)),
        (L(-2), L(2, m=3)),
        (L(-1), L(1, m=3)),
        (L(-1), L()),
    ),
    4: (
        (L(1), L(3, m=4, b=-1)),
        (L(1), L(2, m=4, b=-1)),
        (L(1), L(1, m=4, b=-1)),
        (L(-1), L(5, m=8, b=-2)),
        (L(-1), L(4, m=8, b=-2)),
        (L(-1), L(3, m=8, b=-2)),
        (L(1), L(6, m=12, b=-3)),
        (L(-1), L()),
    ),
}


def rank4_mmmm_b(m, b):
    """Closed-form count for the type (m, m, m, m) at order index b."""
    if m < 1:
        raise ValueError("m must be at least 1, got %d" % m)
    if not 0 <= b <= 4 * m:
        raise OutOfRange("b must lie in [0, %d], got %d" % (4 * m, b))
    if b <= m:
        case_no = 1
    elif b <= 2 * m:
        case_no = 2
    elif b <= 3 * m:
        case_no = 3
    else:
        case_no = 4
    case = CaseId("rank4-mmmm", case_no)
    env = {"a1": m, "a2": m, "a3": m, "b": b, "m": m}
    numerator = assemble_table(MMMM_TABLES[case_no], env)
    return FormulaResult(_divide(numerator, 3, case), case, True)


def rank4_mmmm_total(m):
    """Total subgroup count of the type (m, m, m, m) from its closed form."""
    if m < 1:
        raise ValueError("m must be at least 1, got %d" % m)
    p2 = IntPoly.term(1, 2)
    p3 = IntPoly.term(1, 3)
    head = (IntPoly((1, 1, 1)) ** 3) * (p2 + 1) * IntPoly.term(1, 4 * m + 2)
    mid = (
        ((2 * m + 3) * p3 - (2 * m + 1))
        * (p3 + IntPoly.term(1, 1))
        * (IntPoly((1, 1)) ** 3)
    ).shift(3 * m)
    tail = IntPoly((
        -(4 * m + 1),
        1 - 4 * m,
        6,
        4 * m + 9,
        4 * m + 7,
    ))
    numerator = head - mid - tail
    denominator = (p2 - 1) ** 2 * (p3 - 1) ** 2
    try:
        return numerator.exact_div(denominator)
    except NonExactDivision as exc:
        raise FormulaBug("rank4-mmmm total", exc.remainder) from exc


# ---------------------------------------------------------------------------
# rank 4 totals for arbitrary chains w <= x <= y <= z
# ---------------------------------------------------------------------------

def _check_chain(w, x, y, z):
    for v in (w, x, y, z):
        if not isinstance(v, int) or isinstance(v, bool):
            raise OrderViolation("chain entries must be ints")
    if not (1 <= w <= x <= y <= z):
        raise OrderViolation("chain must satisfy 1 <= w <= x <= y <= z, got (%d, %d, %d, %d)" % (w, x, y, z))


def rank4_total_ccl(w, x, y, z):
    """Total subgroup count of the type (w, x, y, z) by the direct triple sum."""
    _check_chain(w, x, y, z)
    acc = IntPoly.zero()
    s = w + x + y + z
    for i in range(0, w):
        for j in range(0, i + 1):
            acc = acc + IntPoly.term((s - 4 * i + 1) * (2 * i - 2 * j + 1), 3 * i + j)
            acc = acc + IntPoly.term((s - 4 * i - 1) * (2 * i - 2 * j + 1), 3 * i + j + 1)
            acc = acc + IntPoly.term(2 * (s - 4 * i - 2) * (i - j + 1), 3 * i + j + 2)
    for i in range(0, w + 1):
        for j in range(w, x):
            acc = acc + IntPoly.term((w + j - 2 * i + 1) * (x + y + z - 3 * j + 1), w + 2 * j + i)
            acc = acc + IntPoly.term((w + j - 2 * i + 1) * (x + y + z - 3 * j - 1), w + 2 * j + i + 1)
    for i in range(0, w + 1):
        for j in range(x, y + 1):
            acc = acc + IntPoly.term((y + z - 2 * j + 1) * (w + x - 2 * i + 1), w + x + i + j)
    return acc


def leading_term_ccl(w, x, y, z):
    """(leading coefficient, degree) of the chain total, in closed form."""
    _check_chain(w, x, y, z)
    return ((z - y + 1) * (x - w + 1), 2 * w + x + y)


# ---------------------------------------------------------------------------
# any rank, small order index: a single product formula
# ---------------------------------------------------------------------------

def anyrank_case1(t, b):
    """Product formula valid for b below the smallest part (or mirrored)."""
    t = GroupType(t)
    m = t.weight
    if not 0 <= b <= m:
        raise OutOfRange("b must lie in [0, %d], got %d" % (m, b))
    a1 = t.parts[0] if t.parts else 0
    if b <= a1:
        case = CaseId("anyrank", 1)
        use_b = b
    elif b >= m - a1:
        case = CaseId("anyrank", 2)
        use_b = m - b
    else:
        return FormulaResult.miss()
    value = ONE
    for i in range(2, t.rank + 1):
        value = value * (IntPoly.term(1, use_b + i - 1) - 1)
        try:
            value = value.exact_div(IntPoly.term(1, i - 1) - 1)
        except NonExactDivision as exc:
            raise FormulaBug(case, exc.remainder) from exc
    return FormulaResult(value, case, True)
