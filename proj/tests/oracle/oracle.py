"""Brute-force reference computations used to freeze expected values in the C++ tests.

Deliberately naive: every measure is evaluated straight from its definition,
with no prefix sums, no pattern-count shortcuts and no symmetry reductions.
"""
import itertools
import json
import os
import subprocess
import tempfile
import math
import sys
from fractions import Fraction


def legendre(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if any((n * n) % p == a for n in range(1, p)) else -1


def poly_eval(coeffs, x, p):
    # coeffs: degree-indexed
    return sum(c * pow(x, i, p) for i, c in enumerate(coeffs)) % p


def is_irreducible_trial(coeffs, p):
    """Monic coeffs (degree-indexed). Irreducible iff no monic factor of degree 1..deg/2."""
    d = len(coeffs) - 1
    for e in range(1, d // 2 + 1):
        for tail in itertools.product(range(p), repeat=e):
            g = list(tail) + [1]
            if poly_divides(g, coeffs, p):
                return False
    return True


def poly_divides(g, f, p):
    r = list(f)
    dg = len(g) - 1
    while len(r) - 1 >= dg and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < dg:
            break
        c = r[-1]
        shift = len(r) - 1 - dg
        for i, gc in enumerate(g):
            r[shift + i] = (r[shift + i] - c * gc) % p
        while r and r[-1] == 0:
            r.pop()
    return not any(r)


def trace_zero_irreducibles(p, d):
    out = []
    # lexicographic in (a_{d-2}, ..., a_0), highest first
    for tup in itertools.product(range(p), repeat=d - 1):
        coeffs = list(reversed(tup)) + [0, 1]
        if is_irreducible_trial(coeffs, p):
            out.append(coeffs)
    return out


def f2_family(p, d):
    rows = []
    for f in trace_zero_irreducibles(p, d):
        rows.append([0 if legendre(poly_eval(f, n, p), p) == 1 else 1 for n in range(1, p)])
    return rows


def f1_base(p, d):
    for tup in itertools.product(range(p), repeat=d - 1):
        a = list(tup)  # a_2..a_d
        if a[0] == 0 or a[1] == 0:
            continue
        coeffs = [0] * (d + 1)
        coeffs[d] = 1
        for j, aj in enumerate(a, start=2):
            coeffs[d - j] = aj
        if is_irreducible_trial(coeffs, p):
            return coeffs
    raise RuntimeError("no base")


def scale(coeffs, i, p):
    # i^d f(X/i) computed with exact rationals then reduced mod p
    d = len(coeffs) - 1
    out = []
    inv = pow(i, p - 2, p)
    for deg, c in enumerate(coeffs):
        frac = Fraction(c) * Fraction(i) ** d / Fraction(i) ** deg
        assert frac.denominator == 1
        out.append(int(frac.numerator) % p)
    return out


def f1_family(p, d):
    base = f1_base(p, d)
    rows = []
    for i in range(1, p):
        fi = scale(base, i, p)
        rows.append([0 if legendre(poly_eval(fi, n, p), p) == 1 else 1 for n in range(1, p)])
    return base, rows


def dual(rows):
    return [list(col) for col in zip(*rows)]


def f_complexity(rows, k):
    F, N = len(rows), len(rows[0])
    best = 0
    for j in range(1, N + 1):
        ok = True
        for pos in itertools.combinations(range(N), j):
            seen = {tuple(r[q] for q in pos) for r in rows}
            if len(seen) < k ** j:
                ok = False
                break
        if not ok:
            return best
        best = j
    return best


def admissible(rows, I, D):
    for a in range(len(I)):
        for b in range(a + 1, len(I)):
            if rows[I[a]] == rows[I[b]] and D[a] == D[b]:
                return False
    return True


def all_specs(rows, ell):
    F, N = len(rows), len(rows[0])
    for I in itertools.product(range(F), repeat=ell):
        for D in itertools.combinations_with_replacement(range(N), ell):
            if not admissible(rows, I, D):
                continue
            for M in range(1, N - D[-1] + 1):
                yield I, D, M


def phi(rows, ell):
    best = 0
    for I, D, M in all_specs(rows, ell):
        s = 0
        for n in range(M):
            v = 1
            for t in range(ell):
                v *= 1 - 2 * rows[I[t]][n + D[t]]
            s += v
        best = max(best, abs(s))
    return best


def gamma(rows, ell, k):
    best = Fraction(0)
    for I, D, M in all_specs(rows, ell):
        for W in itertools.product(range(k), repeat=ell):
            g = sum(1 for n in range(M) if all(rows[I[t]][n + D[t]] == W[t] for t in range(ell)))
            best = max(best, abs(g - Fraction(M, k ** ell)))
    return best


def mobius(n):
    res, m, q = 1, n, 2
    while q * q <= m:
        if m % q == 0:
            m //= q
            if m % q == 0:
                return 0
            res = -res
        q += 1
    if m > 1:
        res = -res
    return res


def primitive_root(p):
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in range(2, p) if (p - 1) % q == 0 and all(q % r for r in range(2, q))):
            return g
    return 1


def ksym_family(p, d, k):
    g = primitive_root(p)
    dlog = {pow(g, e, p): e for e in range(p - 1)}
    rows = []
    for f in trace_zero_irreducibles(p, d):
        rows.append([dlog[poly_eval(f, n, p)] % k for n in range(1, p)])
    return rows


def dual_bound_report(rows):
    F = len(rows)
    C = f_complexity(rows, 2)
    dl = dual(rows)
    top = int(math.floor(math.log2(F)))
    phis = [phi(dl, i) for i in range(1, top + 1)]
    bound = math.ceil(math.log2(F) - math.log2(max(phis))) - 1
    return C, phis, max(bound, 0), bound


def run_cli(binary, *args):
    out = subprocess.run([binary, *args], check=True, capture_output=True, text=True).stdout
    return out


def read_rows(text):
    return [[int(x) for x in line.split()] for line in text.splitlines() if line and not line.startswith("#")]


def cli_value(binary, path, measure, ell, subject="family"):
    args = ["measure", "--in", path, "--measure", measure, "--subject", subject]
    if ell:
        args += ["--ell", str(ell)]
    num, den = json.loads(run_cli(binary, *args))[0]["value"].split("/")
    return Fraction(int(num), int(den))


def crosscheck(binary):
    """Compare the seqfam CLI with the brute force above; returns the failure count."""
    failures = 0

    def expect(ok, what):
        nonlocal failures
        print(("ok   " if ok else "FAIL ") + what)
        failures += not ok

    with tempfile.TemporaryDirectory() as tmp:
        cases = [
            ("f2", (7, 2), f2_family(7, 2)),
            ("f2", (5, 3), f2_family(5, 3)),
            ("f2", (11, 2), f2_family(11, 2)),
            ("ksym", (13, 2, 3), ksym_family(13, 2, 3)),
            ("ksym", (7, 2, 3), ksym_family(7, 2, 3)),
            ("f1", (11, 5), f1_family(11, 5)[1]),
        ]
        for construction, params, rows in cases:
            name = "%s%s" % (construction, params)
            args = ["gen", "--construction", construction, "--p", str(params[0]), "--d", str(params[1])]
            k = 2
            if construction == "ksym":
                k = params[2]
                args += ["--k", str(k)]
            path = os.path.join(tmp, name + ".txt")
            run_cli(binary, *args, "--out", path)
            with open(path) as fh:
                expect(read_rows(fh.read()) == rows, name + " rows")
            expect(cli_value(binary, path, "fc", 0) == f_complexity(rows, k), name + " f-complexity")
            if k == 2:
                for ell in (1, 2):
                    expect(cli_value(binary, path, "phi", ell, "dual") == phi(dual(rows), ell),
                           name + " phi_%d(dual)" % ell)
            else:
                expect(cli_value(binary, path, "gamma", 1) == gamma(rows, 1, k), name + " gamma_1")
                expect(cli_value(binary, path, "gamma", 1, "dual") == gamma(dual(rows), 1, k), name + " gamma_1(dual)")
    return failures


if __name__ == "__main__":
    what = sys.argv[1] if len(sys.argv) > 1 else "summary"
    if what == "crosscheck":
        sys.exit(1 if crosscheck(sys.argv[2]) else 0)
    if what == "summary":
        for p, d in [(3, 2), (5, 2), (7, 2), (5, 3), (7, 3), (11, 2), (13, 2)]:
            rows = f2_family(p, d)
            F = len(rows)
            distinct = len({tuple(r) for r in rows}) == F
            print("f2", p, d, "F", F, "distinct", distinct, "rows", rows if F <= 8 else "...")
        for p in (11, 13):
            base, rows = f1_family(p, 5)
            print("f1", p, "base", base, "distinct", len({tuple(r) for r in rows}) == len(rows))
        print(dual_bound_report(f2_family(5, 3)))
