"""Classical discrete families as difference equations with h = 1.

Each family is tabulated in the standard form

    sigma(x) D(nabla y)(x) + tau(x) D y(x) + lam y(x) = 0.

Since D(nabla y)(x) = D^2 y(x - 1), evaluating at x + 1 and using
D y(x + 1) = D y(x) + D^2 y(x) gives

    [sigma(x+1) + tau(x+1)] D^2 y + tau(x+1) D y + lam y(x+1) = 0,

so g = sigma(x+1) + tau(x+1), r = tau(x+1), u = lam, and g - r = sigma(x+1).
Parameter values live in ``data/corpus.json``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Callable

from .errors import HypothesisViolation, InputError
from .fdeq import DifferenceEquation, HypergeometricData
from .ratpoly import Poly, as_rational, poly_shift

FAMILIES = ("charlier", "meixner", "kravchuk", "hahn")


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    parameters: dict
    sigma: Poly
    tau: Poly
    lam: Callable[[int], Fraction]
    max_degree: int | None = None

    def equation(self, n: int) -> DifferenceEquation:
        if n < 0:
            raise ValueError("degree must be nonnegative")
        if self.max_degree is not None and n > self.max_degree:
            raise HypothesisViolation(f"{self.name} has polynomial solutions only up to degree {self.max_degree}")
        g = poly_shift(self.sigma + self.tau, 1)
        r = poly_shift(self.tau, 1)
        return DifferenceEquation(g, r, Poly.const(self.lam(n)), Fraction(1))

    def hypergeometric(self) -> HypergeometricData:
        g = poly_shift(self.sigma + self.tau, 1)
        r = poly_shift(self.tau, 1)
        return HypergeometricData(g.coeff(2), g.coeff(1), g.coeff(0), r.coeff(1), r.coeff(0))

    def derivation(self) -> dict:
        g = poly_shift(self.sigma + self.tau, 1)
        r = poly_shift(self.tau, 1)
        return {
            "standard_form": "sigma(x) D(nabla y) + tau(x) D y + lambda y = 0",
            "sigma": str(self.sigma),
            "tau": str(self.tau),
            "lambda_n": [str(self.lam(n)) for n in range(4)] + ["..."],
            "g = sigma(x+1) + tau(x+1)": str(g),
            "r = tau(x+1)": str(r),
            "g - r = sigma(x+1)": str(g - r),
        }

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "parameters": {k: str(v) for k, v in self.parameters.items()},
            "max_degree": self.max_degree,
            "derivation": self.derivation(),
        }


def load_fixture() -> dict:
    text = resources.files("hspoly").joinpath("data/corpus.json").read_text()
    return json.loads(text)


def default_parameters(name: str) -> dict:
    fam = load_fixture()["families"]
    if name not in fam:
        raise InputError(f"unknown corpus family {name!r}", field="name")
    return {k: as_rational(v) for k, v in fam[name]["parameters"].items()}


def _positive_int(v, label):
    if v.denominator != 1 or v <= 0:
        raise HypothesisViolation(f"{label} must be a positive integer")
    return int(v)


def corpus_build(name: str, parameters: dict | None = None) -> CorpusEntry:
    """Entry for one family; parameters default to the fixture values."""
    params = default_parameters(name)
    if parameters:
        unknown = set(parameters) - set(params)
        if unknown:
            raise InputError(f"unknown parameters {sorted(unknown)}", field="parameters")
        params.update({k: as_rational(v) for k, v in parameters.items()})
    x = Poly.x()
    if name == "charlier":
        a = params["a"]
        if a <= 0:
            raise HypothesisViolation("charlier needs a > 0")
        return CorpusEntry(name, params, x, Poly([a, -1]), lambda n: Fraction(n))
    if name == "meixner":
        beta, c = params["beta"], params["c"]
        if beta <= 0 or not 0 < c < 1:
            raise HypothesisViolation("meixner needs beta > 0 and 0 < c < 1")
        return CorpusEntry(name, params, x, Poly([c * beta, c - 1]), lambda n: n * (1 - c))
    if name == "kravchuk":
        p = params["p"]
        N = _positive_int(params["N"], "N")
        if not 0 < p < 1:
            raise HypothesisViolation("kravchuk needs 0 < p < 1")
        return CorpusEntry(name, params, x * (1 - p), Poly([p * N, -1]), lambda n: Fraction(n), N)
    if name == "hahn":
        al, be = params["alpha"], params["beta"]
        N = _positive_int(params["N"], "N")
        if al <= -1 or be <= -1:
            raise HypothesisViolation("hahn needs alpha > -1 and beta > -1")
        sigma = x * (x - be - N - 1)
        total = (x + al + 1) * (x - N)
        return CorpusEntry(name, params, sigma, total - sigma,
                           lambda n: Fraction(-n * (n + al + be + 1)), N)
    raise InputError(f"unknown corpus family {name!r}", field="name")


def corpus() -> list[CorpusEntry]:
    return [corpus_build(n) for n in FAMILIES]
