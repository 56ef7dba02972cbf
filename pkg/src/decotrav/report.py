"""Results of law checks: one record per law, with counterexamples.

Law checks never raise on failure; a failing law is data. A report is a
flat list of per-law results so it can be printed, serialized, or turned
into a table without knowing which suite produced it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable


@dataclass(frozen=True)
class Counterexample:
    """First failing sample of a law: the inputs and both sides."""

    inputs: str
    lhs: str
    rhs: str

    def render(self) -> str:
        return f"inputs: {self.inputs}\n  lhs: {self.lhs}\n  rhs: {self.rhs}"


@dataclass(frozen=True)
class LawResult:
    name: str
    passed: bool
    samples: int
    counterexample: Counterexample | None = None

    def __post_init__(self):
        if self.passed and self.counterexample is not None:
            raise ValueError("passing law must not carry a counterexample")
        if not self.passed and self.counterexample is None:
            raise ValueError("failing law must carry a counterexample")


@dataclass(frozen=True)
class LawReport:
    suite: str
    results: tuple[LawResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> tuple[LawResult, ...]:
        return tuple(r for r in self.results if not r.passed)

    def result(self, name: str) -> LawResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def format_text(self) -> str:
        lines = []
        for r in self.results:
            status = "pass" if r.passed else "FAIL"
            lines.append(f"{self.suite:<12} {r.name:<28} {status:<4} {r.samples:>6}")
            if r.counterexample is not None:
                for ln in r.counterexample.render().splitlines():
                    lines.append(f"    {ln}")
        return "\n".join(lines)


def check_equal(
    name: str,
    samples: int,
    sample: Callable[[int], tuple[str, Any, Any]],
    eq: Callable[[Any, Any], bool] | None = None,
) -> LawResult:
    """Run one law over ``samples`` draws.

    ``sample(i)`` returns (description of inputs, lhs, rhs). The first
    sample where the sides differ becomes the counterexample.
    """
    for i in range(samples):
        inputs, lhs, rhs = sample(i)
        same = eq(lhs, rhs) if eq is not None else lhs == rhs
        if not same:
            ce = Counterexample(inputs=inputs, lhs=repr(lhs), rhs=repr(rhs))
            return LawResult(name=name, passed=False, samples=i + 1, counterexample=ce)
    return LawResult(name=name, passed=True, samples=samples)
