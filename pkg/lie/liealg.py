"""
Euler Lattices, Sign Systems and Bracket Tables

Classes live in a free lattice Z^n with a symmetric Gram form χ. A sign
system assigns ε_{α,β} ∈ {±1} and must satisfy

    ε_{α,β} ε_{β,α} = (-1)^{χ(α,β) + χ(α,α)χ(β,β)}
    ε_{α,β} ε_{α+β,γ} = ε_{β,γ} ε_{α,β+γ}

A bracket table stores structure constants [ζ, η] = Σ c_μ μ on a finite
basis; verify_lie_axioms checks graded antisymmetry and Jacobi with the
shifted degree |ζ|' = a + 2 - χ(α,α).

Student Guide:
--------------
The point model:
- one generator ζ_α in degree 0 per class α
- [ζ_α, ζ_β] = ε_{α,β} ζ_{α+β} exactly when χ(α,β) = -1, else 0
- antisymmetry always holds (it is the first sign axiom in disguise)
- Jacobi does NOT always hold: a triple with χ(α,β) = -1,
  χ(α+β,γ) = -1 and χ(α,γ) ∉ {0, -1} leaves a single nonzero term.
  The checker reports such triples; it does not hide them.

Checking Jacobi on every triple of a big window is hopeless, so only
triples with at least one nonzero term are visited (zero terms cannot
break the identity).
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from algebra.errors import UsageError
from algebra.numkernel import format_rational, parse_rational

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


def _vector(values: Iterable, n: int) -> Vector:
    try:
        vec = tuple(int(v) for v in values)
    except (TypeError, ValueError) as e:
        raise UsageError(f"class vectors must be integer lists: {e}") from e
    if len(vec) != n:
        raise UsageError(f"class vector {list(vec)} has length {len(vec)}, lattice rank is {n}")
    return vec


def window_vectors(n: int, window: int) -> List[Vector]:
    """All vectors of Z^n with coordinates in [-window, window], in lex order."""
    if window < 0:
        raise UsageError("window must be nonnegative")
    return list(itertools.product(range(-window, window + 1), repeat=n))


# =============================================================================
# EULER LATTICE
# =============================================================================

@dataclass(frozen=True)
class EulerLattice:
    """
    Free lattice Z^n with a symmetric integer Gram matrix.

    Example usage:
        L = EulerLattice(2, ((0, -1), (-1, 0)))
        L.chi((1, 0), (0, 1))   # -1
    """

    rank: int
    gram: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        gram = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", gram)
        if self.rank < 1:
            raise UsageError("lattice rank must be positive")
        if len(gram) != self.rank or any(len(row) != self.rank for row in gram):
            raise UsageError(f"gram must be {self.rank}x{self.rank}")
        for i in range(self.rank):
            for j in range(i):
                if gram[i][j] != gram[j][i]:
                    raise UsageError(f"gram is not symmetric at ({i}, {j})")

    def chi(self, alpha: Sequence[int], beta: Sequence[int]) -> int:
        return sum(
            alpha[i] * self.gram[i][j] * beta[j]
            for i in range(self.rank)
            for j in range(self.rank)
            if alpha[i] and beta[j]
        )

    def shifted_degree(self, alpha: Sequence[int], degree: int = 0) -> int:
        return degree + 2 - self.chi(alpha, alpha)

    def to_json(self) -> dict:
        return {"rank": self.rank, "gram": [list(row) for row in self.gram]}

    @classmethod
    def from_json(cls, data) -> "EulerLattice":
        if not isinstance(data, dict) or "gram" not in data:
            raise UsageError("lattice JSON needs 'gram'")
        gram = data["gram"]
        if not isinstance(gram, list) or not gram:
            raise UsageError("'gram' must be a nonempty list of rows")
        rank = int(data.get("rank", len(gram)))
        return cls(rank, tuple(_vector(row, rank) for row in gram))


# =============================================================================
# SIGN SYSTEMS
# =============================================================================

@dataclass(frozen=True)
class SignSystem:
    """
    Signs ε_{α,β}, from a bilinear datum q or an explicit table.

    With q: ε_{α,β} = (-1)^{αᵀ q β}. With a table: lookup, and a missing
    pair is a coverage gap (UsageError).
    """

    q: Optional[Tuple[Tuple[int, ...], ...]] = None
    table: Optional[Dict[Tuple[Vector, Vector], int]] = field(default=None, hash=False, compare=False)

    def __post_init__(self):
        if (self.q is None) == (self.table is None):
            raise UsageError("a sign system needs exactly one of q or table")
        if self.q is not None:
            object.__setattr__(self, "q", tuple(tuple(int(x) for x in row) for row in self.q))
        if self.table is not None:
            for key, sign in self.table.items():
                if sign not in (1, -1):
                    raise UsageError(f"sign for {key} must be +1 or -1, got {sign}")

    @property
    def bilinear(self) -> bool:
        return self.q is not None

    def sign(self, alpha: Sequence[int], beta: Sequence[int]) -> int:
        if self.q is not None:
            n = len(self.q)
            exponent = sum(
                alpha[i] * self.q[i][j] * beta[j] for i in range(n) for j in range(n) if self.q[i][j]
            )
            return -1 if exponent % 2 else 1
        key = (tuple(alpha), tuple(beta))
        if key not in self.table:
            raise UsageError(f"sign table does not cover pair {list(key[0])}, {list(key[1])}")
        return self.table[key]

    def to_json(self) -> dict:
        if self.q is not None:
            return {"q": [list(row) for row in self.q]}
        return {
            "table": [
                {"a": list(a), "b": list(b), "sign": s} for (a, b), s in sorted(self.table.items())
            ]
        }

    @classmethod
    def from_json(cls, data, n: int) -> "SignSystem":
        if not isinstance(data, dict):
            raise UsageError("sign JSON must be an object")
        if "q" in data:
            return cls(q=tuple(_vector(row, n) for row in data["q"]))
        if "table" in data:
            table = {}
            for entry in data["table"]:
                try:
                    table[(_vector(entry["a"], n), _vector(entry["b"], n))] = int(entry["sign"])
                except (KeyError, TypeError) as e:
                    raise UsageError(f"malformed sign entry {entry!r}") from e
            return cls(table=table)
        raise UsageError("sign JSON needs 'q' or 'table'")


def construct_sign_q(lattice: EulerLattice) -> SignSystem:
    """
    Upper-triangular q with q_ij = (χ_ij + χ_ii χ_jj) mod 2 for i < j.

    Example:
        construct_sign_q(EulerLattice(2, ((0, -1), (-1, 0)))).q   # ((0, 1), (0, 0))
    """
    n = lattice.rank
    g = lattice.gram
    q = tuple(
        tuple((g[i][j] + g[i][i] * g[j][j]) % 2 if i < j else 0 for j in range(n)) for i in range(n)
    )
    return SignSystem(q=q)


def constant_sign_table(n: int, window: int, sign: int = 1) -> SignSystem:
    """Explicit table with one sign everywhere, covering [-2W, 2W]."""
    vectors = window_vectors(n, 2 * window)
    return SignSystem(table={(a, b): sign for a in vectors for b in vectors})


def verify_sign_axioms(signs: SignSystem, lattice: EulerLattice, window: int) -> Dict:
    """
    Check both sign axioms exhaustively over [-W, W]^n.

    For a bilinear q both ε and the parity of χ depend only on the
    classes mod 2, so the window is reduced to one representative per
    residue. Explicit tables are checked on every vector.

    Returns:
        {"check": "sign_axioms", "pass": bool, "mode": ..., "failures": [...]}
    """
    if window < 1:
        raise UsageError("window must be at least 1")
    vectors = window_vectors(lattice.rank, window)
    mode = "exhaustive"
    if signs.bilinear:
        seen = {}
        for v in vectors:
            seen.setdefault(tuple(x % 2 for x in v), v)
        vectors = list(seen.values())
        mode = "parity-reduced"

    failures: List[Dict] = []
    for a, b in itertools.product(vectors, repeat=2):
        lhs = signs.sign(a, b) * signs.sign(b, a)
        parity = lattice.chi(a, b) + lattice.chi(a, a) * lattice.chi(b, b)
        if lhs != (-1 if parity % 2 else 1):
            failures.append({"axiom": "symmetry", "a": list(a), "b": list(b)})
            break
    for a, b, c in itertools.product(vectors, repeat=3):
        ab = tuple(x + y for x, y in zip(a, b))
        bc = tuple(x + y for x, y in zip(b, c))
        if signs.sign(a, b) * signs.sign(ab, c) != signs.sign(b, c) * signs.sign(a, bc):
            failures.append({"axiom": "cocycle", "a": list(a), "b": list(b), "c": list(c)})
            break

    report = {
        "check": "sign_axioms",
        "lattice": lattice.to_json(),
        "window": window,
        "mode": mode,
        "pass": not failures,
    }
    if failures:
        report["failures"] = failures
    return report


# =============================================================================
# BRACKET TABLES
# =============================================================================

@dataclass(frozen=True)
class BasisElement:
    label: str
    cls: Vector
    degree: int = 0


@dataclass
class BracketTable:
    """
    Structure constants on a finite basis; missing pairs bracket to 0.

    Attributes:
        basis: Ordered basis records
        brackets: (left, right) -> [(target label, coefficient), ...]
        truncated: True when brackets leaving the basis were dropped; Jacobi
            then skips triples whose partial sums leave the basis
    """

    basis: List[BasisElement]
    brackets: Dict[Tuple[str, str], List[Tuple[str, Fraction]]] = field(default_factory=dict)
    truncated: bool = False

    def __post_init__(self):
        self.index = {b.label: b for b in self.basis}
        if len(self.index) != len(self.basis):
            raise UsageError("basis labels must be unique")

    def bracket(self, left: str, right: str) -> Dict[str, Fraction]:
        return {label: Fraction(c) for label, c in self.brackets.get((left, right), []) if c}

    def bracket_vector(self, combo: Dict[str, Fraction], right: str) -> Dict[str, Fraction]:
        """[Σ c_μ μ, right] by linearity."""
        result: Dict[str, Fraction] = {}
        for label, coeff in combo.items():
            for target, c in self.bracket(label, right).items():
                result[target] = result.get(target, Fraction(0)) + coeff * c
        return {k: v for k, v in result.items() if v}

    def to_json(self) -> dict:
        return {
            "basis": [{"label": b.label, "class": list(b.cls), "degree": b.degree} for b in self.basis],
            "brackets": [
                {
                    "left": left,
                    "right": right,
                    "terms": [{"label": t, "coeff": format_rational(Fraction(c))} for t, c in terms],
                }
                for (left, right), terms in sorted(self.brackets.items())
                if terms
            ],
        }

    @classmethod
    def from_json(cls, data, n: int) -> "BracketTable":
        if not isinstance(data, dict) or "basis" not in data:
            raise UsageError("bracket table JSON needs 'basis'")
        try:
            basis = [
                BasisElement(str(b["label"]), _vector(b["class"], n), int(b.get("degree", 0)))
                for b in data["basis"]
            ]
            brackets = {}
            for entry in data.get("brackets", []):
                terms = [(str(t["label"]), parse_rational(str(t["coeff"]))) for t in entry["terms"]]
                brackets[(str(entry["left"]), str(entry["right"]))] = terms
        except (KeyError, TypeError) as e:
            raise UsageError(f"malformed bracket table: {e}") from e
        return cls(basis, brackets)


def point_bracket(alpha: Sequence[int], beta: Sequence[int], lattice: EulerLattice, signs: SignSystem) -> int:
    """
    Coefficient of ζ_{α+β} in [ζ_α, ζ_β] for the point model.

    Example:
        L = EulerLattice(2, ((0, -1), (-1, 0)))
        point_bracket((1, 0), (0, 1), L, construct_sign_q(L))   # -1
    """
    if lattice.chi(alpha, beta) != -1:
        return 0
    return signs.sign(alpha, beta)


def _label(v: Vector) -> str:
    return ",".join(str(x) for x in v)


def point_bracket_table(lattice: EulerLattice, signs: SignSystem, window: int) -> BracketTable:
    """
    Point-model table on the window [-W, W]^n (degree-0 generators).

    Brackets whose target leaves the window are not recorded; the Jacobi
    check skips triples that would need them.
    """
    vectors = window_vectors(lattice.rank, window)
    present = set(vectors)
    basis = [BasisElement(_label(v), v, 0) for v in vectors]
    brackets = {}
    for a, b in itertools.product(vectors, repeat=2):
        target = tuple(x + y for x, y in zip(a, b))
        if target not in present:
            continue
        coeff = point_bracket(a, b, lattice, signs)
        if coeff:
            brackets[(_label(a), _label(b))] = [(_label(target), Fraction(coeff))]
    logger.debug(f"point table: {len(basis)} generators, {len(brackets)} nonzero brackets")
    return BracketTable(basis, brackets, truncated=True)


def _check_degree_law(table: BracketTable, lattice: EulerLattice) -> None:
    for (left, right), terms in table.brackets.items():
        for label in (left, right):
            if label not in table.index:
                raise UsageError(f"bracket uses unknown label {label!r}")
        x, y = table.index[left], table.index[right]
        expected_cls = tuple(p + q for p, q in zip(x.cls, y.cls))
        expected_deg = x.degree + y.degree - 2 * lattice.chi(x.cls, y.cls) - 2
        for target, coeff in terms:
            if not coeff:
                continue
            if target not in table.index:
                raise UsageError(f"bracket [{left}, {right}] targets unknown label {target!r}")
            z = table.index[target]
            if z.cls != expected_cls or z.degree != expected_deg:
                raise UsageError(
                    f"degree law violated: [{left}, {right}] -> {target} "
                    f"(class {list(z.cls)}, degree {z.degree}; expected {list(expected_cls)}, {expected_deg})"
                )


def verify_lie_axioms(table: BracketTable, lattice: EulerLattice) -> Dict:
    """
    Graded antisymmetry and the cyclic Jacobi sum with shifted degrees.

        [ζ,η] = -(-1)^{|ζ|'|η|'} [η,ζ]
        (-1)^{|ζ|'|λ|'}[[ζ,η],λ] + (-1)^{|η|'|ζ|'}[[η,λ],ζ] + (-1)^{|λ|'|η|'}[[λ,ζ],η] = 0

    Raises:
        UsageError: On degree-law violations (checked first)

    Returns:
        Report dict with antisymmetry_pass / jacobi_pass and the first
        witness of each kind
    """
    _check_degree_law(table, lattice)
    shifted = {b.label: lattice.shifted_degree(b.cls, b.degree) for b in table.basis}

    def sign(x: str, y: str) -> int:
        return -1 if (shifted[x] * shifted[y]) % 2 else 1

    anti_witness = None
    pairs = set()
    for left, right in table.brackets:
        pairs.add((left, right))
        pairs.add((right, left))
    for left, right in sorted(pairs):
        lhs = table.bracket(left, right)
        rhs = {k: -sign(left, right) * v for k, v in table.bracket(right, left).items()}
        if lhs != rhs:
            anti_witness = {"left": left, "right": right}
            break

    # Triples with at least one nonzero Jacobi term
    by_left: Dict[str, List[str]] = {}
    for left, right in table.brackets:
        if table.bracket(left, right):
            by_left.setdefault(left, []).append(right)
    triples = set()
    for (x, y), _ in table.brackets.items():
        for target in table.bracket(x, y):
            for z in by_left.get(target, []):
                triples.update({(x, y, z), (y, z, x), (z, x, y)})

    classes = {b.cls: b.label for b in table.basis}

    def covered(x: str, y: str) -> bool:
        return tuple(p + q for p, q in zip(table.index[x].cls, table.index[y].cls)) in classes

    if table.truncated:
        triples = {t for t in triples if covered(t[0], t[1]) and covered(t[1], t[2]) and covered(t[2], t[0])}

    jacobi_witness = None
    jacobi_failures = 0
    for x, y, z in sorted(triples):
        total: Dict[str, Fraction] = {}
        for (p, q, s), weight in (
            ((x, y, z), sign(x, z)),
            ((y, z, x), sign(y, x)),
            ((z, x, y), sign(z, y)),
        ):
            for label, c in table.bracket_vector(table.bracket(p, q), s).items():
                total[label] = total.get(label, Fraction(0)) + weight * c
        total = {k: v for k, v in total.items() if v}
        if total:
            jacobi_failures += 1
            if jacobi_witness is None:
                jacobi_witness = {
                    "triple": [x, y, z],
                    "sum": {k: format_rational(v) for k, v in sorted(total.items())},
                }

    report = {
        "check": "lie",
        "generators": len(table.basis),
        "nonzero_brackets": sum(1 for k in table.brackets if table.bracket(*k)),
        "antisymmetry_pass": anti_witness is None,
        "jacobi_pass": jacobi_witness is None,
        "triples_checked": len(triples),
        "pass": anti_witness is None and jacobi_witness is None,
    }
    if anti_witness is not None:
        report["antisymmetry_witness"] = anti_witness
    if jacobi_witness is not None:
        report["jacobi_witness"] = jacobi_witness
        report["jacobi_failures"] = jacobi_failures
        logger.info(f"⚠️ Jacobi fails on {jacobi_failures} triple(s), first {jacobi_witness['triple']}")
    return report
