"""Fibonacci, Lucas, Horadam and generalized Fibonacci-Lucas numbers, plus
exact audits of the classical Fibonacci/Lucas identities.

Negative indices follow the backwards recurrence:
``f(-k) = (-1)**(k+1) * f(k)`` and ``l(-k) = (-1)**k * l(k)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

from octofib.report import AuditReport


@lru_cache(maxsize=None)
def _fib_pair(n: int) -> tuple[int, int]:
    """(f(n), f(n+1)) for n >= 0 by fast doubling."""
    if n == 0:
        return 0, 1
    a, b = _fib_pair(n >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    if n & 1:
        return d, c + d
    return c, d


def fib(n: int) -> int:
    if n < 0:
        k = -n
        return fib(k) if k % 2 else -fib(k)
    return _fib_pair(n)[0]


def lucas(n: int) -> int:
    if n < 0:
        k = -n
        return lucas(k) if k % 2 == 0 else -lucas(k)
    f_n, f_n1 = _fib_pair(n)
    # l(n) = f(n-1) + f(n+1) = 2 f(n+1) - f(n)
    return 2 * f_n1 - f_n


def horadam(n: int, p: int, q: int) -> int:
    """h(0) = p, h(1) = q, h(n) = h(n-1) + h(n-2); defined for n >= 0 only."""
    if n < 0:
        raise ValueError(f"horadam sequence is defined for n >= 0, got {n}")
    if n == 0:
        return p
    # h(n) = p f(n-1) + q f(n) for n >= 1
    return p * fib(n - 1) + q * fib(n)


def gfl_number(n: int, p, q, extend: bool = False):
    """Generalized Fibonacci-Lucas number g_n^{p,q} = p f(n-1) + q l(n).

    The natural domain is n >= 1; ``extend=True`` admits n <= 0 through the
    negative-index extension of f and l.
    """
    if n < 1 and not extend:
        raise ValueError(
            f"g_n is defined for n >= 1 (got n={n}); pass extend=True for negative indices"
        )
    return p * fib(n - 1) + q * lucas(n)


@dataclass(frozen=True)
class Identity:
    tag: str
    text: str
    sides: Callable[[int], tuple[int, ...]]
    min_n: int = 0


def _sum_eight_squares(n: int) -> int:
    return sum(fib(n + i) ** 2 for i in range(8))


f, l = fib, lucas

IDENTITIES: dict[str, Identity] = {
    i.tag: i
    for i in [
        Identity("P2.1.i", "f_n + f_{n+2} = l_{n+1}", lambda n: (f(n) + f(n + 2), l(n + 1))),
        Identity("P2.1.ii", "l_n + l_{n+2} = 5 f_{n+1}", lambda n: (l(n) + l(n + 2), 5 * f(n + 1))),
        Identity("P2.1.iii", "f_n^2 + f_{n+1}^2 = f_{2n+1}", lambda n: (f(n) ** 2 + f(n + 1) ** 2, f(2 * n + 1))),
        Identity(
            "P2.1.iv",
            "l_n^2 + l_{n+1}^2 = l_{2n} + l_{2n+2} = 5 f_{2n+1}",
            lambda n: (l(n) ** 2 + l(n + 1) ** 2, l(2 * n) + l(2 * n + 2), 5 * f(2 * n + 1)),
        ),
        Identity("P2.1.v", "l_n^2 = l_{2n} + 2(-1)^n", lambda n: (l(n) ** 2, l(2 * n) + 2 * (-1) ** (n % 2)), min_n=1),
        Identity("P2.1.vi", "l_{2n} = 5 f_n^2 + 2(-1)^n", lambda n: (l(2 * n), 5 * f(n) ** 2 + 2 * (-1) ** (n % 2)), min_n=1),
        Identity("P2.1.vii", "l_n + f_n = 2 f_{n+1}", lambda n: (l(n) + f(n), 2 * f(n + 1))),
        Identity("P2.2.i", "f_n + f_{n+3} = 2 f_{n+2}", lambda n: (f(n) + f(n + 3), 2 * f(n + 2))),
        Identity("P2.2.ii", "f_n + f_{n+4} = 3 f_{n+2}", lambda n: (f(n) + f(n + 4), 3 * f(n + 2))),
        Identity("P2.2.iii", "f_n + f_{n+6} = 2 l_{n+3}", lambda n: (f(n) + f(n + 6), 2 * l(n + 3))),
        Identity("P2.2.iv", "f_{n+4} - f_n = l_{n+2}", lambda n: (f(n + 4) - f(n), l(n + 2))),
        Identity("P2.3.i", "l_{n+4} + l_n = 3 l_{n+2}", lambda n: (l(n + 4) + l(n), 3 * l(n + 2))),
        Identity("P2.3.ii", "l_{n+4} - l_n = 5 f_{n+2}", lambda n: (l(n + 4) - l(n), 5 * f(n + 2))),
        Identity("P2.3.iii", "f_n + f_{n+8} = 7 f_{n+4}", lambda n: (f(n) + f(n + 8), 7 * f(n + 4))),
        Identity("KA.S1", "f_n^2 + ... + f_{n+7}^2 = f_8 f_{2n+7}", lambda n: (_sum_eight_squares(n), f(8) * f(2 * n + 7))),
    ]
}

ALL_IDENTITY_IDS: tuple[str, ...] = tuple(IDENTITIES)


def _holds(id_: str, n: int) -> bool:
    sides = IDENTITIES[id_].sides(n)
    return all(s == sides[0] for s in sides[1:])


def audit_identity(id_: str, n_lo: int, n_hi: int) -> AuditReport:
    ident = IDENTITIES[id_]
    start = max(n_lo, ident.min_n)
    desc = f"{ident.text}; n in [{start}, {n_hi}]"
    if ident.min_n > n_lo and n_lo <= 0 <= n_hi:
        # stated for n >= 1 only; n = 0 is probed but never counted
        desc += f"; n=0 probe: {'holds' if _holds(id_, 0) else 'does not hold'}"
    report = AuditReport(id_, desc)
    for n in range(start, n_hi + 1):
        sides = ident.sides(n)
        report.checked += 1
        for other in sides[1:]:
            if other != sides[0]:
                report.add_failure({"n": n}, sides[0], other)
                break
    return report


def audit_sequence_identities(ids: Iterable[str], n_lo: int, n_hi: int) -> list[AuditReport]:
    """One report per identity, in catalogue order."""
    ids = set(ids)
    if not ids:
        raise ValueError("no identities selected")
    unknown = ids - set(IDENTITIES)
    if unknown:
        raise ValueError(f"unknown identity ids: {sorted(unknown)}")
    if n_lo > n_hi:
        raise ValueError(f"empty range [{n_lo}, {n_hi}]")
    return [audit_identity(i, n_lo, n_hi) for i in IDENTITIES if i in ids]


def audit_identity_extended(id_: str, n_lo: int, n_hi: int) -> AuditReport:
    """Evaluate an identity at indices outside its stated domain (including
    negative ones). Outside the stated domain a mismatch is not a
    counterexample, so it is recorded as a finding."""
    ident = IDENTITIES[id_]
    report = AuditReport(f"{id_}.ext", f"[extension] {ident.text}; n in [{n_lo}, {n_hi}]")
    for n in range(n_lo, n_hi + 1):
        sides = ident.sides(n)
        report.checked += 1
        if any(s != sides[0] for s in sides[1:]):
            report.add_finding(f"identity does not extend to n={n}", list(sides), "unequal")
    return report
