"""Command-line front end: file-based, reproducible workflows.

Every artifact (context, keys, commitments, proofs, forgery records,
census tables) is a line-oriented key=value text file, so runs are
inspectable and diffable. A --seed pins the Mersenne Twister rng
(random.Random) and makes outputs byte-identical across runs.

Exit codes: 0 success / proof accepted, 1 proof rejected or selftest
failure, 2 malformed input or usage error.
"""

import argparse
import random
import sys
from typing import List, Optional

from . import fileio
from .arith import gen_prime
from .commitment import (
    BINDING,
    DEFAULT_EXTRACT_BOUND,
    HIDING,
    Opening,
    binding_keygen,
    commit,
    extract,
    hiding_keygen,
    key_fingerprint,
    trapdoor_open,
    verify,
    wi_prove,
)
from .errors import PairCommitError
from .forgery import accepting_census, audit, claim_report, forge
from .groups import CURVE, TRANSPARENT, g_inv, g_mul, g_pow, setup_curve, setup_transparent
from .selftest import run_selftest


def _rng_from(seed: Optional[int]) -> random.Random:
    return random.Random(seed) if seed is not None else random.Random()


def cmd_params(args) -> int:
    for name, bits in (("--bits-p", args.bits_p), ("--bits-q", args.bits_q)):
        if not 2 <= bits <= 64:
            raise ValueError(f"{name} must lie in [2, 64], got {bits}")
    rng = _rng_from(args.seed)
    p = gen_prime(args.bits_p, rng)
    q = gen_prime(args.bits_q, rng)
    while q == p:
        q = gen_prime(args.bits_q, rng)
    if p > q:
        p, q = q, p
    if args.backend == TRANSPARENT:
        ctx = setup_transparent(p, q)
    else:
        ctx = setup_curve(p, q, rng)
    fileio.save_context(args.out, ctx)
    print(f"backend={ctx.backend}")
    print(f"p={ctx.p}")
    print(f"q={ctx.q}")
    print(f"n={ctx.n}")
    if ctx.backend == CURVE:
        print(f"fprime={ctx.field_prime}")
        print(f"cofactor={ctx.cofactor}")
    return 0


def cmd_keygen(args) -> int:
    rng = _rng_from(args.seed)
    ctx = fileio.load_context(args.context)
    if args.mode == BINDING:
        ck, xk = binding_keygen(ctx, rng)
        fileio.save_extraction_key(args.out_secret, xk)
    else:
        ck, tk = hiding_keygen(ctx, rng)
        fileio.save_trapdoor_key(args.out_secret, tk)
    fileio.save_commitment_key(args.out_ck, ck)
    print(f"mode={ck.mode}")
    print(f"key={key_fingerprint(ck)}")
    return 0


def cmd_commit(args) -> int:
    ck = fileio.load_commitment_key(args.ck)
    r = args.r if args.r is not None else _rng_from(args.seed).randrange(ck.context.n)
    com = commit(ck, args.m, r)
    fileio.save_commitment(args.out, com, ck)
    if args.out_opening:
        fileio.save_opening(args.out_opening, Opening(args.m, r % ck.context.n))
    print(f"c={com.c.to_text()}")
    return 0


def cmd_prove(args) -> int:
    ck = fileio.load_commitment_key(args.ck)
    opening = fileio.load_opening(args.opening)
    proof = wi_prove(ck, opening.m, opening.r)
    fileio.save_proof(args.out, proof, ck)
    print(f"pi={proof.pi.to_text()}")
    return 0


def cmd_verify(args) -> int:
    ck = fileio.load_commitment_key(args.ck)
    com = fileio.load_commitment(args.commitment, ck)
    proof = fileio.load_proof(args.proof, ck)
    ok = verify(ck, com, proof)
    print("accept" if ok else "reject")
    return 0 if ok else 1


def cmd_extract(args) -> int:
    xk = fileio.load_extraction_key(args.secret)
    com = fileio.load_commitment(args.commitment, xk.ck)
    m = extract(xk, com, bound=args.bound)
    print(f"m={m}")
    return 0


def cmd_open(args) -> int:
    tk = fileio.load_trapdoor_key(args.secret)
    com = fileio.load_commitment(args.commitment, tk.ck)
    current = fileio.load_opening(args.opening)
    new_opening = trapdoor_open(tk, com, current, args.m_new)
    fileio.save_opening(args.out, new_opening)
    print(f"m={new_opening.m}")
    print(f"r={new_opening.r}")
    return 0


def cmd_forge(args) -> int:
    xk = fileio.load_extraction_key(args.secret)
    ck = fileio.load_commitment_key(args.ck)
    if key_fingerprint(ck) != key_fingerprint(xk.ck):
        raise PairCommitError("secret file does not belong to the public key")
    ctx = xk.ck.context
    rec = forge(xk.ck, ctx.p, ctx.q, beta1=args.beta1, rng=_rng_from(args.seed))
    fileio.save_forgery(args.out, rec, xk.ck)
    report = claim_report(rec, xk.ck, ctx.p, ctx.q)
    for line in report.lines():
        print(line)
    return 0


def cmd_audit(args) -> int:
    xk = fileio.load_extraction_key(args.secret)
    ck = fileio.load_commitment_key(args.ck)
    if key_fingerprint(ck) != key_fingerprint(xk.ck):
        raise PairCommitError("secret file does not belong to the public key")
    com = fileio.load_commitment(args.commitment, xk.ck)
    verdict = audit(xk.q, xk.ck, com)
    for key, value in fileio.verdict_fields(verdict):
        print(f"{key}={value}")
    c_pow_q = g_pow(com.c, xk.q)
    shifted_pow_q = g_pow(g_mul(com.c, g_inv(xk.ck.context.g)), xk.q)
    print(f"c_pow_q={c_pow_q.to_text()}")
    print(f"c_over_g_pow_q={shifted_pow_q.to_text()}")
    return 0


def cmd_census(args) -> int:
    xk = fileio.load_extraction_key(args.secret)
    ck = fileio.load_commitment_key(args.ck)
    if key_fingerprint(ck) != key_fingerprint(xk.ck):
        raise PairCommitError("secret file does not belong to the public key")
    result = accepting_census(xk.ck.context, xk.ck)
    lines = fileio.census_lines(result)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write("\n".join(lines) + "\n")
    else:
        for line in lines:
            print(line)
    return 0


def cmd_selftest(args) -> int:
    results = run_selftest(seed=args.seed if args.seed is not None else 1)
    failures = 0
    for name, ok, detail in results:
        if ok:
            print(f"PASS {name}")
        else:
            failures += 1
            print(f"FAIL {name}: {detail}")
    print(f"{len(results) - failures}/{len(results)} checks passed")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paircommit",
        description="composite-order pairing commitment lab: honest protocol, "
                    "forgery, and audit")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("params", help="generate group parameters")
    sp.add_argument("--bits-p", type=int, required=True)
    sp.add_argument("--bits-q", type=int, required=True)
    sp.add_argument("--backend", choices=(TRANSPARENT, CURVE), required=True)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--out", required=True, help="context file to write")
    sp.set_defaults(func=cmd_params)

    sp = sub.add_parser("keygen", help="generate a commitment key pair")
    sp.add_argument("--mode", choices=(BINDING, HIDING), required=True)
    sp.add_argument("--context", required=True)
    sp.add_argument("--out-ck", required=True)
    sp.add_argument("--out-secret", required=True)
    sp.add_argument("--seed", type=int)
    sp.set_defaults(func=cmd_keygen)

    sp = sub.add_parser("commit", help="commit to a message")
    sp.add_argument("--ck", required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--r", type=int, help="randomizer; sampled when omitted")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--out", required=True)
    sp.add_argument("--out-opening")
    sp.set_defaults(func=cmd_commit)

    sp = sub.add_parser("prove", help="prove a commitment opens to 0 or 1")
    sp.add_argument("--ck", required=True)
    sp.add_argument("--opening", required=True)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_prove)

    sp = sub.add_parser("verify", help="check a proof (exit 0 accept, 1 reject)")
    sp.add_argument("--ck", required=True)
    sp.add_argument("--commitment", required=True)
    sp.add_argument("--proof", required=True)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("extract", help="recover the message with the extraction key")
    sp.add_argument("--secret", required=True, help="extraction key file")
    sp.add_argument("--commitment", required=True)
    sp.add_argument("--bound", type=int, default=DEFAULT_EXTRACT_BOUND)
    sp.set_defaults(func=cmd_extract)

    sp = sub.add_parser("open", help="re-open a hiding commitment via the trapdoor")
    sp.add_argument("--secret", required=True, help="trapdoor key file")
    sp.add_argument("--commitment", required=True)
    sp.add_argument("--opening", required=True)
    sp.add_argument("--m-new", type=int, required=True)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_open)

    sp = sub.add_parser("forge", help="build an accepting proof from the factorization")
    sp.add_argument("--ck", required=True)
    sp.add_argument("--secret", required=True, help="extraction key file")
    sp.add_argument("--beta1", type=int)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_forge)

    sp = sub.add_parser("audit", help="classify a commitment with the subgroup probes")
    sp.add_argument("--secret", required=True, help="extraction key file")
    sp.add_argument("--ck", required=True)
    sp.add_argument("--commitment", required=True)
    sp.set_defaults(func=cmd_audit)

    sp = sub.add_parser("census", help="brute-force the accepting (c, pi) table")
    sp.add_argument("--ck", required=True)
    sp.add_argument("--secret", required=True, help="extraction key file")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("selftest", help="run the built-in property suite")
    sp.add_argument("--seed", type=int)
    sp.set_defaults(func=cmd_selftest)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (PairCommitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
