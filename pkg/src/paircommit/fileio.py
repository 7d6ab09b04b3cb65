"""Line-oriented key=value files for every artifact the lab produces.

All integers are decimal strings; group elements use the text encodings
from the groups module. Field order is fixed per file kind so that
seeded runs are byte-identical. Secret key files embed the public key
they belong to (xk = (ck, q), tk = (ck, x)); public key files never
carry p, q, or any secret exponent.
"""

from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from .commitment import (
    BINDING,
    Commitment,
    CommitmentKey,
    ExtractionKey,
    HIDING,
    Opening,
    TrapdoorKey,
    WIProof,
    key_fingerprint,
)
from .errors import MalformedText
from .forgery import CensusResult, ClaimReport, ForgeryRecord, Verdict
from .groups import (
    CURVE,
    CurveContext,
    GroupContext,
    TRANSPARENT,
    TransparentContext,
    element_from_text,
    setup_transparent,
)

PathLike = Union[str, Path]


def format_kv(fields: List[Tuple[str, str]]) -> str:
    return "".join(f"{k}={v}\n" for k, v in fields)


def write_kv(path: PathLike, fields: List[Tuple[str, str]]) -> None:
    Path(path).write_text(format_kv(fields), encoding="ascii")


def parse_kv(text: str, where: str = "input") -> Dict[str, str]:
    fields: Dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if "=" not in line:
            raise MalformedText(f"{where}:{lineno}: expected key=value, got {line!r}")
        key, _, value = line.partition("=")
        if key in fields:
            raise MalformedText(f"{where}:{lineno}: duplicate field {key!r}")
        fields[key] = value
    return fields


def read_kv(path: PathLike) -> Dict[str, str]:
    return parse_kv(Path(path).read_text(encoding="ascii"), where=str(path))


def _take(fields: Dict[str, str], key: str, where: str) -> str:
    if key not in fields:
        raise MalformedText(f"{where}: missing field {key!r}")
    return fields[key]


def _take_int(fields: Dict[str, str], key: str, where: str) -> int:
    raw = _take(fields, key, where)
    try:
        return int(raw, 10)
    except ValueError:
        raise MalformedText(f"{where}: field {key!r} is not a decimal integer") from None


# ---------------------------------------------------------------------------
# group contexts

def context_fields(ctx: GroupContext) -> List[Tuple[str, str]]:
    """Full (factorization-carrying) context description."""
    if not ctx.knows_factorization:
        raise ValueError("context file needs the factorization")
    fields = [("backend", ctx.backend), ("p", str(ctx.p)), ("q", str(ctx.q))]
    if ctx.backend == CURVE:
        fields += [
            ("fprime", str(ctx.field_prime)),
            ("cofactor", str(ctx.cofactor)),
            ("g", ctx.g.to_text()),
        ]
    return fields


def save_context(path: PathLike, ctx: GroupContext) -> None:
    write_kv(path, context_fields(ctx))


def load_context(path: PathLike) -> GroupContext:
    where = str(path)
    fields = read_kv(path)
    backend = _take(fields, "backend", where)
    p = _take_int(fields, "p", where)
    q = _take_int(fields, "q", where)
    if backend == TRANSPARENT:
        return setup_transparent(p, q)
    if backend == CURVE:
        fprime = _take_int(fields, "fprime", where)
        cofactor = _take_int(fields, "cofactor", where)
        g_point = _parse_curve_point(_take(fields, "g", where), fprime, where)
        return CurveContext(p * q, fprime, cofactor, g_point, p, q)
    raise MalformedText(f"{where}: unknown backend {backend!r}")


def _public_key_fields(ck: CommitmentKey) -> List[Tuple[str, str]]:
    ctx = ck.context
    fields = [("mode", ck.mode), ("backend", ctx.backend), ("n", str(ctx.n))]
    if ctx.backend == CURVE:
        fields += [("fprime", str(ctx.field_prime)), ("cofactor", str(ctx.cofactor))]
    fields += [("g", ctx.g.to_text()), ("h", ck.h.to_text())]
    return fields


def _context_from_public(fields: Dict[str, str], where: str,
                         p: Optional[int] = None, q: Optional[int] = None) -> GroupContext:
    backend = _take(fields, "backend", where)
    n = _take_int(fields, "n", where)
    if backend == TRANSPARENT:
        return TransparentContext(n, p, q)
    if backend == CURVE:
        fprime = _take_int(fields, "fprime", where)
        cofactor = _take_int(fields, "cofactor", where)
        g_point = _parse_curve_point(_take(fields, "g", where), fprime, where)
        return CurveContext(n, fprime, cofactor, g_point, p, q)
    raise MalformedText(f"{where}: unknown backend {backend!r}")


def _parse_curve_point(text: str, fprime: int, where: str):
    text = text.strip()
    if not text.startswith("G:"):
        raise MalformedText(f"{where}: expected G:... element, got {text!r}")
    body = text[2:]
    if body == "inf":
        return None
    parts = body.split(",")
    if len(parts) != 2:
        raise MalformedText(f"{where}: expected G:<x>,<y>, got {text!r}")
    try:
        x, y = int(parts[0], 10), int(parts[1], 10)
    except ValueError:
        raise MalformedText(f"{where}: non-decimal coordinate in {text!r}") from None
    if not (0 <= x < fprime and 0 <= y < fprime):
        raise MalformedText(f"{where}: coordinates out of field range in {text!r}")
    return (x, y)


# ---------------------------------------------------------------------------
# keys

def save_commitment_key(path: PathLike, ck: CommitmentKey) -> None:
    write_kv(path, [("kind", "commitment-key")] + _public_key_fields(ck))


def load_commitment_key(path: PathLike) -> CommitmentKey:
    where = str(path)
    fields = read_kv(path)
    _expect_kind(fields, "commitment-key", where)
    return _key_from_fields(fields, where)


def _expect_kind(fields: Dict[str, str], kind: str, where: str) -> None:
    got = _take(fields, "kind", where)
    if got != kind:
        raise MalformedText(f"{where}: expected kind={kind}, got kind={got}")


def _key_from_fields(fields: Dict[str, str], where: str,
                     p: Optional[int] = None, q: Optional[int] = None) -> CommitmentKey:
    mode = _take(fields, "mode", where)
    if mode not in (BINDING, HIDING):
        raise MalformedText(f"{where}: unknown mode {mode!r}")
    ctx = _context_from_public(fields, where, p, q)
    h = element_from_text(_take(fields, "h", where), ctx)
    return CommitmentKey(ctx, h, mode)


def save_extraction_key(path: PathLike, xk: ExtractionKey) -> None:
    fields = [("kind", "extraction-key")] + _public_key_fields(xk.ck)
    fields.append(("q", str(xk.q)))
    write_kv(path, fields)


def load_extraction_key(path: PathLike) -> ExtractionKey:
    where = str(path)
    fields = read_kv(path)
    _expect_kind(fields, "extraction-key", where)
    n = _take_int(fields, "n", where)
    q = _take_int(fields, "q", where)
    if q <= 1 or n % q != 0:
        raise MalformedText(f"{where}: q={q} does not divide n={n}")
    p = n // q
    if p >= q:
        raise MalformedText(f"{where}: q={q} is not the larger prime factor")
    ck = _key_from_fields(fields, where, p=p, q=q)
    return ExtractionKey(ck, q)


def save_trapdoor_key(path: PathLike, tk: TrapdoorKey) -> None:
    fields = [("kind", "trapdoor-key")] + _public_key_fields(tk.ck)
    fields.append(("x", str(tk.x)))
    write_kv(path, fields)


def load_trapdoor_key(path: PathLike) -> TrapdoorKey:
    where = str(path)
    fields = read_kv(path)
    _expect_kind(fields, "trapdoor-key", where)
    x = _take_int(fields, "x", where)
    ck = _key_from_fields(fields, where)
    return TrapdoorKey(ck, x)


# ---------------------------------------------------------------------------
# protocol artifacts

def save_commitment(path: PathLike, com: Commitment, ck: CommitmentKey) -> None:
    write_kv(path, [
        ("kind", "commitment"),
        ("n", str(ck.context.n)),
        ("key", com.key_fp),
        ("c", com.c.to_text()),
    ])


def load_commitment(path: PathLike, ck: CommitmentKey) -> Commitment:
    where = str(path)
    fields = read_kv(path)
    _expect_kind(fields, "commitment", where)
    _check_key_fields(fields, ck, where)
    c = element_from_text(_take(fields, "c", where), ck.context)
    return Commitment(c, fields["key"])


def save_proof(path: PathLike, proof: WIProof, ck: CommitmentKey) -> None:
    write_kv(path, [
        ("kind", "proof"),
        ("n", str(ck.context.n)),
        ("key", proof.key_fp),
        ("pi", proof.pi.to_text()),
    ])


def load_proof(path: PathLike, ck: CommitmentKey) -> WIProof:
    where = str(path)
    fields = read_kv(path)
    _expect_kind(fields, "proof", where)
    _check_key_fields(fields, ck, where)
    pi = element_from_text(_take(fields, "pi", where), ck.context)
    return WIProof(pi, fields["key"])


def _check_key_fields(fields: Dict[str, str], ck: CommitmentKey, where: str) -> None:
    n = _take_int(fields, "n", where)
    if n != ck.context.n:
        raise MalformedText(f"{where}: group order {n} does not match the key's {ck.context.n}")
    tag = _take(fields, "key", where)
    if tag != key_fingerprint(ck):
        raise MalformedText(f"{where}: key fingerprint {tag} does not match the supplied key")


def save_opening(path: PathLike, opening: Opening) -> None:
    write_kv(path, [
        ("kind", "opening"),
        ("m", str(opening.m)),
        ("r", str(opening.r)),
    ])


def load_opening(path: PathLike) -> Opening:
    where = str(path)
    fields = read_kv(path)
    _expect_kind(fields, "opening", where)
    return Opening(_take_int(fields, "m", where), _take_int(fields, "r", where))


def save_forgery(path: PathLike, rec: ForgeryRecord, ck: CommitmentKey) -> None:
    write_kv(path, [
        ("kind", "forgery"),
        ("n", str(ck.context.n)),
        ("key", rec.c.key_fp),
        ("k_a", str(rec.k_a)),
        ("ell", str(rec.ell)),
        ("alpha1", str(rec.alpha1)),
        ("alpha2", str(rec.alpha2)),
        ("beta1", str(rec.beta1)),
        ("beta2", str(rec.beta2)),
        ("c", rec.c.c.to_text()),
        ("pi", rec.pi.pi.to_text()),
    ])


def load_forgery(path: PathLike, ck: CommitmentKey) -> ForgeryRecord:
    where = str(path)
    fields = read_kv(path)
    _expect_kind(fields, "forgery", where)
    _check_key_fields(fields, ck, where)
    c = element_from_text(_take(fields, "c", where), ck.context)
    pi = element_from_text(_take(fields, "pi", where), ck.context)
    tag = fields["key"]
    return ForgeryRecord(
        k_a=_take_int(fields, "k_a", where),
        ell=_take_int(fields, "ell", where),
        alpha1=_take_int(fields, "alpha1", where),
        alpha2=_take_int(fields, "alpha2", where),
        beta1=_take_int(fields, "beta1", where),
        beta2=_take_int(fields, "beta2", where),
        c=Commitment(c, tag),
        pi=WIProof(pi, tag),
    )


def claim_report_fields(report: ClaimReport) -> List[Tuple[str, str]]:
    return [tuple(line.split("=", 1)) for line in report.lines()]


def verdict_fields(verdict: Verdict) -> List[Tuple[str, str]]:
    return [
        ("verdict", verdict.label),
        ("c_in_gq", "true" if verdict.c_in_gq else "false"),
        ("c_over_g_in_gq", "true" if verdict.c_over_g_in_gq else "false"),
    ]


def census_lines(result: CensusResult) -> List[str]:
    lines = [f"n={result.n}"]
    for row in result.rows:
        lines.append(
            f"c={row.c_exp} accepting_pi_count={row.accepting_pi_count} "
            f"verdict={row.verdict_label}")
    lines.append(f"accepting_pairs={result.accepting_pairs}")
    for label in ("CommitsTo0", "CommitsTo1", "Invalid"):
        lines.append(f"accepting_c_{label}={result.accepting_c_by_verdict[label]}")
    return lines
