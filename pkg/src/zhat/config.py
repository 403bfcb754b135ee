"""Run configuration shared by the CLI and the verification suites."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from pathlib import Path

from .errors import InputError
from .padic import DEFAULT_PRECISION, check_prime
from .errors import NonPrimeModulus
from .product import RingContext


@dataclass(frozen=True)
class Config:
    primes: tuple[int, ...] = (2, 3, 5)
    precision: int = DEFAULT_PRECISION
    seed: int = 0
    output: str = "json"

    def __post_init__(self):
        primes = tuple(self.primes)
        object.__setattr__(self, "primes", primes)
        if not primes:
            raise InputError("primes", "at least one prime is required")
        for p in primes:
            try:
                check_prime(p)
            except NonPrimeModulus:
                raise InputError("primes", f"{p!r} is not a prime") from None
        if list(primes) != sorted(set(primes)):
            raise InputError("primes", "primes must be distinct and increasing")
        if not isinstance(self.precision, int) or self.precision < 4:
            raise InputError("precision", "must be an integer >= 4")
        if self.output not in ("json", "text"):
            raise InputError("output", "must be 'json' or 'text'")

    @property
    def context(self) -> RingContext:
        return RingContext(self.primes, self.precision)

    def to_json(self) -> dict:
        d = asdict(self)
        d["primes"] = list(self.primes)
        return d

    @classmethod
    def from_file(cls, path: str | Path, **overrides) -> Config:
        try:
            data = json.loads(Path(path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError("config", str(exc)) from None
        data.update({k: v for k, v in overrides.items() if v is not None})
        unknown = set(data) - {"primes", "precision", "N", "seed", "output"}
        if unknown:
            raise InputError(sorted(unknown)[0], "unknown config key")
        if "N" in data:
            data["precision"] = data.pop("N")
        return cls(**{k: tuple(v) if k == "primes" else v for k, v in data.items()})
