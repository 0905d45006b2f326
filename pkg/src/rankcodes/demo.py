"""Replays of the three worked examples (symmetric, alternating, Hermitian).

Field elements in the examples are printed as powers of a primitive
element z of an unstated defining polynomial.  By default the replay uses
this package's canonical modulus, in which case only exponent arithmetic
that does not depend on the modulus can agree.  ``printed_field=True``
selects defining polynomials under which the printed values are
internally consistent (z = x in each):

* F_{2^7}:  x^7 + x + 1 (the canonical one as well)
* F_{2^9}:  x^9 + x^4 + 1, normal element z^437 (printed as z^347)
* F_{2^14}: 1 + x^2 + x^3 + x^5 + x^7 + x^8 + x^10 + x^12 + x^14
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, TextIO

from .bases import find_normal_element, is_basis, normal_basis
from .channel import error_rank, random_rank_error
from .codes import CodeSpec, encode, expand_message, make_code_spec
from .decoder import compute_beta, decode, known_window, skew_bm

# exponents of z; None stands for the zero element
EXAMPLES = {
    1: dict(
        title="symmetric code, n=7, d=5 over F_{2^7}",
        family="sym", n=7, d=5, u=1,
        printed_modulus=(1, 1, 0, 0, 0, 0, 0, 1),
        normal=95, corrected_normal=95,
        message=[7, 13],
        error=[63, 126, 126, 63, 126, 126, 126],
        printed=dict(
            ft=[7, 13, None, None, None, None, 70],
            c=[108, 36, 11, 12, 57, 24, 1],
            r=[4, 45, 124, 52, 37, 104, 13],
            beta=[17, 51, 98, 124, 100, 83, 86],
            lam=[25, 126],
            a=[98, 124, 100, 83, 55, 115, 71],
            g=[115, 71, 98, 124, 100, 83, 55],
            f=[7, 13],
        ),
    ),
    2: dict(
        title="alternating code, n=9, d=6 over F_{2^9}",
        family="alt", n=9, d=6, u=1,
        printed_modulus=(1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
        normal=347, corrected_normal=437,
        message=[77, 397],
        received=[293, 389, 430, 227, 481, 445, 426, 404, 339],
        printed=dict(
            ft=[None, None, None, 77, 397, 440, 329, None, None],
            c=[244, 412, 364, 400, 368, 161, 122, 59, 122],
            r=[293, 389, 430, 227, 481, 445, 426, 404, 339],
            beta=[486, 233, 334, 155, 167, 226, 483, 231, 88],
            lam=[154, 262],
            a=[231, 88, 486, 233, 334, 505, 113, 265, 425],
            g=[486, 233, 334, 505, 113, 265, 425, 231, 88],
            f=[77, 397],
        ),
    ),
    3: dict(
        title="Hermitian code (n, d odd), n=7, d=5 over F_{2^14}",
        family="herm-odd", n=7, d=5, u=2,
        printed_modulus=(1, 0, 1, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1),
        normal=8591, corrected_normal=8591,
        # message symbols are powers of l = z^129, a generator of F_{2^7}^*
        message=[129 * 89, 129 * 97, 129 * 32],
        received=[3672, 2957, 1343, 3039, 10923, 9913, 1618],
        printed=dict(
            ft=[None, None, None, 4446, 11481, 15498, None],
            c=[781, 1313, 4481, 5130, 1671, 9656, 1567],
            r=[3672, 2957, 1343, 3039, 10923, 9913, 1618],
            beta=[5036, 5234, 203, 840, 2939, 13080, 15830],
            lam=[11141, 14283],
            a=[15830, 5036, 5234, 203, 12223, 9784, 1048],
            g=[5036, 5234, 203, 12223, 9784, 1048, 15830],
            f=[129 * 89, 129 * 97, 129 * 32],
        ),
    ),
}


@dataclass
class DemoReport:
    example: int
    spec: CodeSpec
    notes: list[str] = field(default_factory=list)
    values: dict[str, list[int]] = field(default_factory=dict)
    matches: dict[str, bool] = field(default_factory=dict)
    status: str = ""
    rank: Optional[int] = None
    message: Optional[list[int]] = None
    sent_message: Optional[list[int]] = None


def run_example(number: int, printed_field: bool = False, seed: int = 0) -> DemoReport:
    ex = EXAMPLES[number]
    modulus = ex["printed_modulus"] if printed_field else None
    probe = make_code_spec(ex["family"], 2, 1, ex["n"], ex["d"], modulus=modulus)
    ctx = probe.ctx
    z = ctx.zpow
    notes = []

    w_exp = ex["corrected_normal"] if printed_field else ex["normal"]
    if w_exp != ex["normal"]:
        notes.append(f"normal element z^{w_exp} used in place of the printed z^{ex['normal']}")
    points = normal_basis(ctx, z(w_exp))
    if not is_basis(ctx, points):
        w = find_normal_element(ctx)
        notes.append(f"z^{w_exp} is not normal in this field; using z^{ctx.log(w)}")
        points = normal_basis(ctx, w)
    eta = z(1) if ex["u"] == 2 else None
    spec = make_code_spec(ex["family"], 2, 1, ex["n"], ex["d"], basis=points,
                          eta=eta, modulus=ctx.modulus)
    report = DemoReport(number, spec, notes)

    f = [z(k) for k in ex["message"]]
    report.sent_message = f
    c = encode(spec, f)
    if "error" in ex:
        e = [z(k) for k in ex["error"]]
        r = [ctx.add(a, b) for a, b in zip(c, e)]
    elif printed_field:
        r = [z(k) for k in ex["received"]]
        e = None
        notes.append("received word taken verbatim from the example")
    else:
        # the printed error is r - c; reinterpreted in this field it may change rank
        e = [ctx.sub(z(a), z(b)) for a, b in zip(ex["printed"]["r"], ex["printed"]["c"])]
        if error_rank(spec, e) != spec.radius:
            notes.append("printed r - c does not have rank 2 in this field; "
                         f"using a seeded rank-2 error (seed {seed})")
            e = random_rank_error(spec, spec.radius, seed)
        r = [ctx.add(a, b) for a, b in zip(c, e)]

    beta = compute_beta(spec, r)
    start, length = known_window(spec)
    window = [beta[(start + i) % spec.n] for i in range(length)]
    t, lam = skew_bm(ctx, window, spec.u, max_len=spec.radius) if any(window) else (0, [])
    result = decode(spec, r)
    report.status, report.rank, report.message = result.status, result.rank, result.message

    values = report.values
    values["ft"] = expand_message(spec, f)
    values["c"] = c
    values["r"] = r
    values["beta"] = beta
    values["lam"] = lam
    if result.ok:
        g = list(result.error_poly.coeffs)
        values["a"] = [g[(start + i) % spec.n] for i in range(spec.n)]
        values["g"] = g
        values["ft_decoded"] = [ctx.sub(b, gi) for b, gi in zip(beta, g)]
        values["f"] = result.message
        if e is not None and result.error != e:
            notes.append("decoded error differs from the injected one")

    for key, exps in ex["printed"].items():
        mine = values.get("ft_decoded" if key == "ft" and "ft_decoded" in values
                          and "received" in ex and printed_field else key)
        if mine is None:
            continue
        report.matches[key] = mine == [0 if k is None else z(k) for k in exps]
    return report


def print_report(report: DemoReport, out: TextIO) -> None:
    ex = EXAMPLES[report.example]
    spec = report.spec
    ctx = spec.ctx
    fmt = lambda v: "(" + ", ".join(f"{a}={ctx.to_text(a, True)}" for a in v) + ")"
    print(f"Example {report.example}: {ex['title']}", file=out)
    print(f"  modulus (little-endian): {list(ctx.modulus)}; z = {ctx.primitive}", file=out)
    print(f"  basis: normal element {ctx.to_text(spec.basis.points[0], True)}", file=out)
    if spec.eta is not None:
        print(f"  eta = {ctx.to_text(spec.eta, True)}", file=out)
    for note in report.notes:
        print(f"  note: {note}", file=out)
    labels = [("ft", "ft (layout of sent message)"), ("c", "codeword c"), ("r", "received r"),
              ("beta", "beta = r (M^T)^-1"), ("lam", "lambda"), ("a", "a (window, extension)"),
              ("g", "g"), ("ft_decoded", "ft = beta - g"), ("f", "f")]
    for key, label in labels:
        if key in report.values:
            tag = ""
            printed_key = "ft" if key == "ft_decoded" else key
            if printed_key in report.matches and (key != "ft" or "ft_decoded" not in report.values):
                tag = "  [matches printed values]" if report.matches[printed_key] \
                    else "  [differs from printed values]"
            print(f"  {label}: {fmt(report.values[key])}{tag}", file=out)
    print(f"  status: {report.status}, error rank t = {report.rank}", file=out)
    if report.status == "ok":
        same = report.message == report.sent_message
        print(f"  message recovered: {'yes' if same else 'no'}", file=out)
