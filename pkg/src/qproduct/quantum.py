"""Quantum code parameters derived from self-orthogonal classical codes:
the CSS route for Euclidean self-orthogonal codes, the Hermitian route
over quadratic extensions, and the symplectic route for additive codes.
Distances are the certified distances of the corresponding dual codes.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .code import (AdditiveCode, DistanceCertificate, LinearCode, codewords_of_weight,
                   enumeration_budget, min_distance, weight_enumerator)
from .cyclic import rs_code
from .matrix import InnerProductKind
from .product import product


@dataclass(frozen=True)
class QeccParams:
    """Derived quantum code parameters.

    ``distance`` is the certificate of the relevant classical dual code
    (the quantum distance is at least its value); ``alphabet`` is the
    qudit dimension.
    """

    n: int
    k: int
    alphabet: int
    distance: DistanceCertificate
    construction: str

    def triple(self) -> tuple[int, int, int]:
        return (self.n, self.k, self.distance.value)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "alphabet": self.alphabet,
            "distance": self.distance.to_dict(),
            "construction": self.construction,
        }


def css_qecc(code: LinearCode, budget: int | None = None, threads: int = 1) -> QeccParams:
    """Quantum code from a Euclidean self-orthogonal [n, k] code:
    n - 2k logical qudits, distance from the certified dual distance."""
    if not code.is_self_orthogonal(InnerProductKind.EUCLIDEAN):
        raise ValueError("code is not Euclidean self-orthogonal")
    dual = code.dual(InnerProductKind.EUCLIDEAN)
    cert = min_distance(dual, budget=budget, threads=threads)
    return QeccParams(n=code.n, k=code.n - 2 * code.k, alphabet=code.spec.q,
                      distance=cert, construction="css")


def hermitian_qecc(code: LinearCode, budget: int | None = None, threads: int = 1) -> QeccParams:
    """Quantum code from a Hermitian self-orthogonal code over GF(q^2):
    qudits of dimension q, n - 2k logical, distance from the Hermitian dual."""
    if not code.is_self_orthogonal(InnerProductKind.HERMITIAN):
        raise ValueError("code is not Hermitian self-orthogonal")
    dual = code.dual(InnerProductKind.HERMITIAN)
    cert = min_distance(dual, budget=budget, threads=threads)
    return QeccParams(n=code.n, k=code.n - 2 * code.k, alphabet=code.spec.frobenius_power,
                      distance=cert, construction="hermitian")


def symplectic_qecc(code: AdditiveCode, budget: int | None = None, threads: int = 1) -> QeccParams:
    """Quantum code from a symplectically self-orthogonal additive code
    over GF(p^(2m)): qudits of dimension p^m, k = n - k_p/m logical."""
    if not code.is_self_orthogonal():
        raise ValueError("code is not symplectically self-orthogonal")
    spec = code.spec
    m = spec.ell // 2
    if code.k_p % m != 0:
        raise ValueError(f"additive code size p^{code.k_p} is not a power of the qudit alphabet")
    dual = code.symplectic_dual()
    cert = min_distance(dual, budget=budget, threads=threads)
    return QeccParams(n=code.n, k=code.n - code.k_p // m, alphabet=spec.frobenius_power,
                      distance=cert, construction="symplectic")


def rs_prod_qecc(q: int, mu1: int, mu2: int, budget: int | None = None,
                 threads: int = 1) -> QeccParams:
    """Quantum code from the product of two Reed-Solomon codes of
    dimensions mu1 and mu2; mu1 < (q-1)/2 guarantees the first factor is
    self-orthogonal, and the distance is certified, not assumed."""
    if not 2 * mu1 < q - 1:
        raise ValueError(f"mu1 = {mu1} must satisfy mu1 < (q-1)/2 = {(q - 1) / 2}")
    c1 = rs_code(q, q - mu1)
    c2 = rs_code(q, q - mu2)
    if not c1.code.is_self_orthogonal(InnerProductKind.EUCLIDEAN):
        raise AssertionError("first Reed-Solomon factor is unexpectedly not self-orthogonal")
    prod = product(c1.code, c2.code)
    params = css_qecc(prod, budget=budget, threads=threads)
    n = (q - 1) ** 2
    if params.n != n or params.k != n - 2 * mu1 * mu2:
        raise AssertionError("constructed parameters disagree with the dimension formula")
    return params


def stabilizer_distance(code, construction: str, budget: int | None = None) -> int | None:
    """True stabilizer distance: the minimum weight in dual \\ code.

    Only computed when the dual is enumerable within the budget (returns
    None otherwise, and also for stabilizer states, whose dual carries no
    word outside the code).  Never smaller than the dual-distance bound.
    """
    if construction == "css":
        dual = code.dual(InnerProductKind.EUCLIDEAN)
    elif construction == "hermitian":
        dual = code.dual(InnerProductKind.HERMITIAN)
    elif construction == "symplectic":
        dual = code.symplectic_dual()
    else:
        raise ValueError(f"unknown construction {construction!r}")
    if dual.size() > enumeration_budget(budget):
        return None
    counts = weight_enumerator(dual, budget=budget)
    for w in sorted(counts):
        if w == 0:
            continue
        for word in codewords_of_weight(dual, w, budget=budget):
            if not code.contains(word):
                return w
    return None


@dataclass(frozen=True)
class RateComparison:
    """Exact-rational comparison of the squared-length product
    construction against the product of the per-factor rates."""

    q: int
    mu1: int
    mu2: int
    product_construction_rate: Fraction
    factor_rates: tuple[Fraction, Fraction]
    product_of_rates: Fraction
    product_construction_wins: bool
    threshold_predicts_win: bool | None  # only defined for mu1 == mu2

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "mu": [self.mu1, self.mu2],
            "product_construction_rate": str(self.product_construction_rate),
            "factor_rates": [str(r) for r in self.factor_rates],
            "product_of_rates": str(self.product_of_rates),
            "product_construction_wins": self.product_construction_wins,
            "threshold_predicts_win": self.threshold_predicts_win,
        }


def rate_comparison(q: int, mu1: int, mu2: int) -> RateComparison:
    """Rate 1 - 2*mu1*mu2/(q-1)^2 of the product construction versus the
    product of the factor rates (1 - 2*mu_i/(q-1)); for mu1 == mu2 the
    construction wins exactly when mu < 2(q-1)/3."""
    if mu1 < 0 or mu2 < 0:
        raise ValueError("mu must be >= 0")
    qm1 = q - 1
    pc = 1 - Fraction(2 * mu1 * mu2, qm1 * qm1)
    r1 = 1 - Fraction(2 * mu1, qm1)
    r2 = 1 - Fraction(2 * mu2, qm1)
    por = r1 * r2
    wins = pc > por
    threshold = None
    if mu1 == mu2:
        threshold = Fraction(mu1) < Fraction(2 * qm1, 3) and mu1 > 0
    return RateComparison(q=q, mu1=mu1, mu2=mu2,
                          product_construction_rate=pc,
                          factor_rates=(r1, r2),
                          product_of_rates=por,
                          product_construction_wins=wins,
                          threshold_predicts_win=threshold)
