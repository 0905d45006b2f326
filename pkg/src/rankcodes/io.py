"""Text formats: spec files and vector files.

A spec file is a list of ``key=value`` lines in a fixed order::

    family=sym
    p=2
    s=1
    n=7
    d=5
    modulus=1,1,0,0,0,0,0,1
    basis=77,27,...
    l=0

Hermitian specs add ``eta=<element>`` before ``l``.  ``modulus`` lists the
F_p coefficients little-endian; ``l`` is the evaluation-point shift and is
derived from the family (written for readability, checked on load).

Vector files hold one comma-separated vector of elements per line.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence, Union

from .codes import CodeSpec, Family, make_code_spec
from .field import FieldCtx

PathLike = Union[str, Path]


class FormatError(ValueError):
    pass


@dataclass(frozen=True)
class SpecFile:
    family: Family
    p: int
    s: int
    n: int
    d: int
    modulus: Optional[tuple[int, ...]] = None
    basis: Optional[tuple[int, ...]] = None
    eta: Optional[int] = None

    @property
    def shift(self) -> int:
        return 1 if self.family is Family.HERMITIAN_MIXED else 0

    def build(self) -> CodeSpec:
        return make_code_spec(self.family, self.p, self.s, self.n, self.d,
                              basis=self.basis, eta=self.eta, modulus=self.modulus)

    @classmethod
    def from_spec(cls, spec: CodeSpec) -> "SpecFile":
        ctx = spec.ctx
        return cls(spec.family, ctx.p, ctx.s, ctx.n, spec.d, ctx.modulus,
                   tuple(spec.basis.points), spec.eta)

    def dumps(self) -> str:
        lines = [
            f"family={self.family.value}",
            f"p={self.p}",
            f"s={self.s}",
            f"n={self.n}",
            f"d={self.d}",
        ]
        if self.modulus is not None:
            lines.append("modulus=" + ",".join(map(str, self.modulus)))
        lines.append("basis=" + ("normal" if self.basis is None
                                 else ",".join(map(str, self.basis))))
        if self.eta is not None:
            lines.append(f"eta={self.eta}")
        lines.append(f"l={self.shift}")
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> "SpecFile":
        fields: dict[str, str] = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise FormatError(f"line {lineno}: expected key=value")
            fields[key.strip()] = value.strip()
        try:
            family = Family(fields["family"])
            p, s, n, d = (int(fields[k]) for k in ("p", "s", "n", "d"))
            modulus = _int_tuple(fields["modulus"]) if "modulus" in fields else None
            basis_text = fields.get("basis", "normal")
            basis = None if basis_text == "normal" else _int_tuple(basis_text)
            eta = int(fields["eta"]) if fields.get("eta") else None
        except KeyError as exc:
            raise FormatError(f"missing key {exc.args[0]!r}") from None
        except ValueError as exc:
            raise FormatError(str(exc)) from None
        sf = cls(family, p, s, n, d, modulus, basis, eta)
        if "l" in fields and fields["l"] != str(sf.shift):
            raise FormatError(f"l={fields['l']} does not match family {family.value}")
        return sf


def _int_tuple(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(",") if x.strip())


def load_spec(path: PathLike) -> CodeSpec:
    return SpecFile.loads(Path(path).read_text()).build()


def save_spec(spec: CodeSpec, path: PathLike) -> None:
    Path(path).write_text(SpecFile.from_spec(spec).dumps())


def parse_vector(ctx: FieldCtx, line: str) -> list[int]:
    line = line.strip()
    if not line:
        return []
    try:
        return [ctx.from_text(tok) for tok in line.split(",")]
    except ValueError as exc:
        raise FormatError(f"bad vector {line!r}: {exc}") from None


def format_vector(ctx: FieldCtx, v: Sequence[int], logs: bool = False) -> str:
    return ",".join(ctx.to_text(a, logs) for a in v)


def read_vectors(ctx: FieldCtx, path: PathLike) -> list[list[int]]:
    return [parse_vector(ctx, line) for line in Path(path).read_text().splitlines()
            if line.strip()]


def write_vectors(ctx: FieldCtx, path: PathLike, vectors: Sequence[Sequence[int]]) -> None:
    Path(path).write_text("".join(format_vector(ctx, v) + "\n" for v in vectors))
